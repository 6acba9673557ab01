import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorfield import (
    AIR,
    DegenerateTransparency,
    EnergyViolation,
    Medium,
    MirrorInterface,
    RangeError,
    SideCoefficients,
    fresnel_normal_reflectivity,
    interface_from_mapping,
    lossless_interface,
    mirror_parameter,
    normalisation_constants,
    normalisation_from_rates,
    parse_interface_text,
    refractive_index,
    side_rate_terms,
    validate_interface,
)

TWO_PI = 2.0 * math.pi


def valid_side_squares(draw):
    r_sq = draw(st.floats(0.0, 1.0, allow_nan=False))
    l_sq = draw(st.floats(0.0, 1.0, allow_nan=False)) * (1.0 - r_sq)
    # keep clear of the degenerate fully-transparent sheet
    if 2.0 * r_sq + l_sq <= 1e-6:
        r_sq += 0.5e-6
        l_sq += 0.5e-6
    return r_sq, l_sq


@st.composite
def coatings(draw):
    r_a_sq, l_a_sq = valid_side_squares(draw)
    r_b_sq, l_b_sq = valid_side_squares(draw)
    phases = [draw(st.floats(0.0, TWO_PI, exclude_max=True)) for _ in range(4)]
    return validate_interface(
        r_a=math.sqrt(r_a_sq),
        t_a=math.sqrt(max(0.0, 1.0 - r_a_sq - l_a_sq)),
        l_a=math.sqrt(l_a_sq),
        r_b=math.sqrt(r_b_sq),
        t_b=math.sqrt(max(0.0, 1.0 - r_b_sq - l_b_sq)),
        l_b=math.sqrt(l_b_sq),
        phi1=phases[0],
        phi2=phases[1],
        phi3=phases[2],
        phi4=phases[3],
    )


class TestSideCoefficients:
    def test_valid_triplet(self):
        side = SideCoefficients(0.6, 0.8, 0.0)
        assert side.r == 0.6 and side.t == 0.8 and side.l == 0.0

    @pytest.mark.parametrize("triplet", [(1.2, 0.0, 0.0), (-0.1, 0.5, 0.5), (0.5, float("nan"), 0.5)])
    def test_out_of_range(self, triplet):
        with pytest.raises(RangeError):
            SideCoefficients(*triplet)

    def test_energy_violation(self):
        with pytest.raises(EnergyViolation):
            SideCoefficients(0.8, 0.8, 0.0)

    def test_implied_loss(self):
        side = SideCoefficients.with_implied_loss(0.6, 0.0)
        assert math.isclose(side.l, 0.8, rel_tol=1e-15)
        with pytest.raises(EnergyViolation):
            SideCoefficients.with_implied_loss(0.8, 0.8)


class TestMirrorInterface:
    def test_phases_reduced_to_principal_range(self):
        iface = validate_interface(0.5, 0.5, None, 0.5, 0.5, None, phi3=TWO_PI + 0.5, phi4=-0.5 * math.pi)
        assert math.isclose(iface.phi3, 0.5, abs_tol=1e-12)
        assert math.isclose(iface.phi4, 1.5 * math.pi, abs_tol=1e-12)

    def test_fully_transparent_sheet_rejected(self):
        with pytest.raises(DegenerateTransparency):
            validate_interface(0.0, 1.0, 0.0, 0.0, 1.0, 0.0)

    def test_relaxed_loss_is_implied(self):
        iface = validate_interface(0.5, 0.5, None, 0.2, 0.4, None)
        assert math.isclose(iface.side_a.l**2, 0.5, rel_tol=1e-12)
        assert math.isclose(iface.side_b.l**2, 0.8, rel_tol=1e-12)

    def test_mismatched_explicit_loss_rejected(self):
        with pytest.raises(EnergyViolation):
            validate_interface(0.5, 0.5, 0.9, 0.5, 0.5, None)

    def test_lossless_constructor(self):
        iface = lossless_interface(0.5, phi3=math.pi)
        assert math.isclose(iface.side_a.t, math.sqrt(0.75), rel_tol=1e-15)
        assert iface.side_a.l == 0.0
        assert iface.side_a == iface.side_b
        with pytest.raises(RangeError):
            lossless_interface(1.0)


class TestNormalisation:
    def test_black_sheet_reference(self):
        # r = t = 0 on both sides leaves plain half-space modes
        pair = normalisation_constants(validate_interface(0.0, 0.0, 1.0, 0.0, 0.0, 1.0))
        assert pair.eta_a_sq == 1.0
        assert pair.eta_b_sq == 1.0

    def test_anchor_mirror_with_partial_backside(self):
        # hand value: 2 + (2/1) * 0.25 = 2.5 and 1.25 + 0
        pair = normalisation_constants(validate_interface(1.0, 0.0, 0.0, 0.5, 0.5, None))
        assert pair.eta_a_sq == 2.5
        assert pair.eta_b_sq == 1.25

    def test_anchor_asymmetric_lossy(self):
        # hand values: 1.64 + (1.28/0.68)*0.36 and 1.04 + (0.68/1.28)*0.36
        pair = normalisation_constants(
            validate_interface(0.8, 0.6, 0.0, 0.2, 0.6, None)
        )
        assert math.isclose(pair.eta_a_sq, 2.3176470588235296, rel_tol=1e-14)
        assert math.isclose(pair.eta_b_sq, 1.23125, rel_tol=1e-14)

    def test_symmetric_lossless_closed_form(self):
        for r in (0.1, 0.3, 0.5, 0.7, 0.9):
            iface = lossless_interface(r)
            pair = normalisation_constants(iface)
            expected = 1.0 + iface.side_a.r**2 + iface.side_a.t**2
            assert pair.eta_a_sq == expected
            assert pair.eta_b_sq == expected

    def test_transparent_limit_approached_from_below(self):
        # r = 0: eta^2 = 1 + t^2, decreasing towards the black-sheet value
        values = [
            normalisation_from_rates(0.0, t, 0.0, t)[0] for t in (0.5, 0.25, 0.1, 0.0)
        ]
        assert values == sorted(values, reverse=True)
        assert values[-1] == 1.0

    @given(coatings())
    @settings(max_examples=200, deadline=None)
    def test_unit_decay_identity(self, iface):
        pair = normalisation_constants(iface)
        lhs_a = (1.0 + iface.side_a.r**2) / pair.eta_a_sq + iface.side_b.t**2 / pair.eta_b_sq
        lhs_b = (1.0 + iface.side_b.r**2) / pair.eta_b_sq + iface.side_a.t**2 / pair.eta_a_sq
        assert abs(lhs_a - 1.0) < 1e-12
        assert abs(lhs_b - 1.0) < 1e-12

    @given(coatings())
    @settings(max_examples=200, deadline=None)
    def test_at_least_vacuum_weight(self, iface):
        pair = normalisation_constants(iface)
        assert pair.eta_a_sq >= 1.0
        assert pair.eta_b_sq >= 1.0


class TestMirrorParameter:
    def test_lossless_half_reflector(self):
        summary = mirror_parameter(lossless_interface(0.5), "a")
        assert math.isclose(summary.eta_sq, 2.0, rel_tol=1e-15)
        assert math.isclose(summary.xi, 0.75, rel_tol=1e-14)

    def test_extreme_values(self):
        # perfect front mirror, opaque back: xi = 3 r cos(phi) / 2
        front = validate_interface(1.0, 0.0, 0.0, 0.5, 0.0, None, phi3=0.0)
        assert mirror_parameter(front, "a").xi == 1.5
        flipped = validate_interface(1.0, 0.0, 0.0, 0.5, 0.0, None, phi3=math.pi)
        assert mirror_parameter(flipped, "a").xi == -1.5

    def test_side_b_uses_back_reflection(self):
        iface = validate_interface(0.9, 0.1, None, 0.3, 0.2, None, phi1=math.pi, phi3=0.0)
        summary = mirror_parameter(iface, "b")
        terms = side_rate_terms(iface, "b")
        assert terms.r == 0.3
        assert math.isclose(summary.xi, 3.0 * 0.3 * math.cos(math.pi) / summary.eta_sq, rel_tol=1e-14)

    @given(coatings(), st.sampled_from(["a", "b"]))
    @settings(max_examples=200, deadline=None)
    def test_bounded_by_three_halves(self, iface, side):
        assert abs(mirror_parameter(iface, side).xi) <= 1.5 + 1e-12

    def test_odd_under_phase_reflection(self):
        for phase in (0.3, 1.1, 2.0):
            plus = mirror_parameter(lossless_interface(0.6, phi3=phase), "a").xi
            minus = mirror_parameter(lossless_interface(0.6, phi3=math.pi - phase), "a").xi
            assert math.isclose(plus, -minus, rel_tol=1e-12)


class TestDielectricHelpers:
    def test_refractive_index(self):
        assert refractive_index(AIR) == 1.0
        assert refractive_index(Medium(eps_rel=2.25)) == 1.5

    def test_fresnel_normal_incidence(self):
        assert fresnel_normal_reflectivity(Medium(eps_rel=2.25)) == 0.2
        assert fresnel_normal_reflectivity(AIR) == 0.0
        # denser-to-rarer sign convention not used here: value is n-relative
        assert fresnel_normal_reflectivity(Medium(eps_rel=4.0)) == pytest.approx(1.0 / 3.0, rel=1e-15)


class TestParsing:
    def test_mapping_roundtrip(self):
        values = {
            "r_a": 0.5, "t_a": 0.5, "l_a": math.sqrt(0.5),
            "r_b": 0.4, "t_b": 0.2, "l_b": math.sqrt(1 - 0.16 - 0.04),
            "phi1": 0.1, "phi2": 0.2, "phi3": 0.3, "phi4": 0.4,
        }
        iface = interface_from_mapping(values)
        assert iface.side_a.r == 0.5
        assert iface.phi3 == 0.3

    def test_mapping_rejects_unknown_key(self):
        with pytest.raises(RangeError):
            interface_from_mapping({"r_a": 0.5, "bogus": 1.0})

    def test_text_form(self):
        iface = parse_interface_text(
            """
            # coating under test
            r_a = 0.5
            t_a = 0.5
            r_b = 0.5
            t_b = 0.5
            phi3 = 3.141592653589793
            """
        )
        assert iface.phi3 == math.pi
        assert math.isclose(iface.side_a.l**2, 0.5, rel_tol=1e-12)

    def test_text_form_bad_line(self):
        with pytest.raises(RangeError):
            parse_interface_text("r_a 0.5")
