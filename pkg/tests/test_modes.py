import math

import numpy as np
import pytest

from mirrorfield import (
    AIR,
    DipoleOrientation,
    DomainError,
    Medium,
    NATURAL_UNITS,
    WaveDirection,
    coupling_amplitude,
    free_mode_amplitude,
    lossless_interface,
    medium_mode_amplitude,
    mirror_field_amplitude,
    polarisation_basis,
    polarisation_vector,
    validate_interface,
)

ORIGIN = np.zeros(3)

BLACK_SHEET = validate_interface(0.0, 0.0, 1.0, 0.0, 0.0, 1.0)
PERFECT_MIRROR = validate_interface(1.0, 0.0, 0.0, 1.0, 0.0, 0.0, phi1=math.pi, phi3=math.pi)


def directions(count=200, omega=1.0):
    rng = np.random.default_rng(7)
    for theta, phi in zip(rng.uniform(0, math.pi, count), rng.uniform(0, 2 * math.pi, count)):
        yield WaveDirection(float(theta), float(phi), omega)


class TestPolarisationBasis:
    def test_sideways_direction(self):
        # theta = pi/2, phi = 0 propagates along +y
        direction = WaveDirection(0.5 * math.pi, 0.0, 1.0)
        assert direction.unit_wavevector() == pytest.approx([0.0, 1.0, 0.0], abs=1e-15)
        basis = polarisation_basis(direction)
        assert basis.e1 == pytest.approx([0.0, 0.0, -1.0], abs=1e-15)
        assert basis.e2 == pytest.approx([1.0, 0.0, 0.0], abs=1e-15)

    def test_normal_incidence_is_transverse_to_x(self):
        direction = WaveDirection(0.0, 0.3, 1.0)
        assert direction.unit_wavevector() == pytest.approx([1.0, 0.0, 0.0], abs=1e-15)
        for polarisation in (1, 2):
            assert polarisation_vector(direction, polarisation)[0] == pytest.approx(0.0, abs=1e-15)

    def test_orthonormal_transverse_triad(self):
        for direction in directions():
            k_hat = direction.unit_wavevector()
            basis = polarisation_basis(direction)
            assert np.linalg.norm(basis.e1) == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.norm(basis.e2) == pytest.approx(1.0, abs=1e-12)
            assert abs(np.dot(basis.e1, basis.e2)) < 1e-12
            assert abs(np.dot(k_hat, basis.e1)) < 1e-12
            assert abs(np.dot(k_hat, basis.e2)) < 1e-12

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            WaveDirection(-0.1, 0.0, 1.0)
        with pytest.raises(DomainError):
            WaveDirection(0.5, 0.0, -1.0)
        with pytest.raises(DomainError):
            polarisation_vector(WaveDirection(0.5, 0.0, 1.0), 3)


class TestFreeModes:
    def test_scalar_magnitude(self):
        direction = WaveDirection(0.7, 1.2, 1.0)
        electric, magnetic = free_mode_amplitude(direction, 1, ORIGIN, NATURAL_UNITS)
        expected = (1.0 / (4.0 * math.pi)) * math.sqrt(1.0 / math.pi)
        assert np.linalg.norm(electric) == pytest.approx(expected, rel=1e-14)
        assert np.linalg.norm(magnetic) == pytest.approx(expected, rel=1e-14)

    def test_zero_frequency_mode_vanishes(self):
        electric, magnetic = free_mode_amplitude(WaveDirection(0.7, 1.2, 0.0), 1, ORIGIN, NATURAL_UNITS)
        assert np.all(electric == 0.0)
        assert np.all(magnetic == 0.0)

    def test_plane_wave_periodicity(self):
        direction = WaveDirection(1.1, 0.4, 1.0)
        shift = 2.0 * math.pi * direction.unit_wavevector()
        here, _ = free_mode_amplitude(direction, 2, np.array([0.3, -0.2, 0.9]), NATURAL_UNITS)
        there, _ = free_mode_amplitude(direction, 2, np.array([0.3, -0.2, 0.9]) + shift, NATURAL_UNITS)
        assert there == pytest.approx(here, rel=1e-12)

    def test_field_triad(self):
        for direction in directions(count=20):
            for polarisation in (1, 2):
                electric, magnetic = free_mode_amplitude(
                    direction, polarisation, np.array([0.1, 0.5, -0.3]), NATURAL_UNITS
                )
                k_hat = direction.unit_wavevector()
                # c0 |B| = |E|, both transverse
                assert np.linalg.norm(magnetic) == pytest.approx(np.linalg.norm(electric), rel=1e-12)
                assert abs(np.dot(k_hat, electric)) < 1e-13
                assert abs(np.vdot(electric, magnetic)) < 1e-13


class TestMediumModes:
    GLASS = Medium(eps_rel=2.25)

    def test_amplitude_rescaling(self):
        direction = WaveDirection(0.9, 2.0, 1.0)
        free_e, free_b = free_mode_amplitude(direction, 1, ORIGIN, NATURAL_UNITS)
        med_e, med_b = medium_mode_amplitude(direction, 1, ORIGIN, NATURAL_UNITS, self.GLASS)
        # n = 1.5: E scales by sqrt(n^3/eps) = sqrt(1.5), B by sqrt(n^3 mu)
        assert med_e == pytest.approx(math.sqrt(1.5) * free_e, rel=1e-14)
        assert med_b == pytest.approx(math.sqrt(3.375) * free_b, rel=1e-14)

    def test_optical_wavelength(self):
        direction = WaveDirection(1.1, 0.4, 1.0)
        position = np.array([0.2, 0.1, 0.7])
        shift = (2.0 * math.pi / 1.5) * direction.unit_wavevector()
        here, _ = medium_mode_amplitude(direction, 2, position, NATURAL_UNITS, self.GLASS)
        there, _ = medium_mode_amplitude(direction, 2, position + shift, NATURAL_UNITS, self.GLASS)
        assert there == pytest.approx(here, rel=1e-12)


class TestMirrorField:
    def test_black_sheet_keeps_free_modes(self):
        # r = t = 0 normalises to eta = 1 and leaves the direct wave alone
        position = np.array([0.4, -0.1, 0.8])
        for direction in directions(count=10):
            free_e, _ = free_mode_amplitude(direction, 1, position, NATURAL_UNITS)
            dressed = mirror_field_amplitude(
                BLACK_SHEET, "a", direction, 1, position, NATURAL_UNITS, AIR
            )
            assert dressed == pytest.approx(free_e, rel=1e-14)

    def test_perfect_mirror_tangential_field_vanishes(self):
        for direction in directions(count=10):
            for polarisation in (1, 2):
                dressed = mirror_field_amplitude(
                    PERFECT_MIRROR, "a", direction, polarisation, ORIGIN, NATURAL_UNITS, AIR
                )
                assert abs(dressed[1]) < 1e-14
                assert abs(dressed[2]) < 1e-14

    def test_opaque_backside_blocks_species_b(self):
        iface = validate_interface(0.5, 0.5, None, 0.3, 0.0, None)
        position = np.array([1.3, 0.0, 0.0])
        dressed = mirror_field_amplitude(
            iface, "b", position=position, direction=WaveDirection(0.8, 0.3, 1.0),
            polarisation=1, constants=NATURAL_UNITS, medium=AIR,
        )
        assert np.all(dressed == 0.0)

    def test_transmitted_wave_scaling(self):
        iface = validate_interface(0.5, 0.5, None, 0.2, 0.6, None, phi4=0.9)
        direction = WaveDirection(0.8, 0.3, 1.0)
        position = np.array([1.3, -0.4, 0.2])
        free_e, _ = free_mode_amplitude(direction, 1, position, NATURAL_UNITS)
        dressed = mirror_field_amplitude(iface, "b", direction, 1, position, NATURAL_UNITS, AIR)
        eta_b = math.sqrt(1.0 + 0.04 + (1.04 - 0.36) / (1.25 - 0.25) * 0.25)
        expected = (0.6 / eta_b) * np.exp(1j * 0.9) * free_e
        assert dressed == pytest.approx(expected, rel=1e-13)


class TestCoupling:
    def test_black_sheet_couples_like_free_space(self):
        dipole = DipoleOrientation.from_components(0.3 + 0.1j, -0.2, 0.9j)
        for direction in directions(count=10):
            basis = polarisation_basis(direction)
            g = coupling_amplitude(BLACK_SHEET, "a", direction, 1, dipole, 2.0, "a")
            overlap = np.vdot(np.array([dipole.d1, dipole.d2, dipole.d3]), basis.e1)
            assert abs(g) == pytest.approx(abs(overlap), rel=1e-13)

    def test_perfect_mirror_contact_cancellation(self):
        # tangential dipole at the mirror surface cannot radiate
        dipole = DipoleOrientation(0.0, 0.6, 0.8)
        for direction in directions(count=10):
            for polarisation in (1, 2):
                g = coupling_amplitude(
                    PERFECT_MIRROR, "a", direction, polarisation, dipole, 0.0, "a"
                )
                assert abs(g) < 1e-14

    def test_far_side_magnitude_independent_of_distance(self):
        iface = validate_interface(0.5, 0.5, None, 0.2, 0.6, None, phi4=0.9)
        dipole = DipoleOrientation.aligned(0.3)
        direction = WaveDirection(0.8, 0.3, 1.0)
        magnitudes = {
            round(abs(coupling_amplitude(iface, "b", direction, 2, dipole, u, "a")), 13)
            for u in (0.0, 1.0, 42.0)
        }
        assert len(magnitudes) == 1

    def test_reflection_phase_periodicity(self):
        base = lossless_interface(0.6, phi3=0.7)
        wrapped = lossless_interface(0.6, phi3=0.7 + 2.0 * math.pi)
        dipole = DipoleOrientation.aligned(0.5)
        direction = WaveDirection(1.2, 0.5, 1.0)
        assert coupling_amplitude(base, "a", direction, 1, dipole, 3.0, "a") == pytest.approx(
            coupling_amplitude(wrapped, "a", direction, 1, dipole, 3.0, "a"), rel=1e-14
        )

    def test_rejects_negative_distance(self):
        with pytest.raises(DomainError):
            coupling_amplitude(
                BLACK_SHEET, "a", WaveDirection(0.5, 0.5, 1.0), 1,
                DipoleOrientation.aligned(0.0), -1.0, "a",
            )
