"""Spontaneous decay rates of a two-level dipole near the coated interface.

The free-space and in-medium rates carry dimensions; everything that
depends on the coating is expressed through the dimensionless ratio
``Gamma_mirr / Gamma_ref`` as a function of ``u = 2 k0 x``, where ``x``
is the emitter-coating distance and ``k0`` the transition wavenumber.
The reference rate is the free-space rate for an emitter on the air side
and the in-medium rate for an emitter inside the dielectric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RangeError
from .interface import (
    Medium,
    MirrorInterface,
    mirror_parameter,
    refractive_index,
    side_rate_terms,
)

#: Below this ``u`` the oscillatory bracket switches to its Taylor form.
SMALL_U = 1e-3

#: Global bound on the oscillatory bracket magnitude; the rate ratio
#: therefore stays within ``1 +- 1.5 * BRACKET_BOUND``.
BRACKET_BOUND = 2.0 / 3.0

_RATIO_SLACK = 1e-12


@dataclass(frozen=True)
class PhysicalConstants:
    """Electromagnetic constants in SI or rescaled units.

    Construction checks ``c0 = 1 / sqrt(eps0 * mu0)`` to 1e-12 relative,
    so only consistent unit systems can be represented.
    """

    hbar: float
    eps0: float
    mu0: float
    c0: float
    e_charge: float

    def __post_init__(self) -> None:
        for name in ("hbar", "eps0", "mu0", "c0", "e_charge"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise RangeError(f"{name} must be positive and finite, got {value!r}")
        if abs(self.c0 * math.sqrt(self.eps0 * self.mu0) - 1.0) > 1e-12:
            raise RangeError("c0 must equal 1/sqrt(eps0 * mu0)")


_MU0 = 1.25663706212e-6
_C0 = 299792458.0

#: 2018 CODATA values; the permittivity is derived from ``mu0`` and ``c0``
#: so the speed-of-light identity holds to machine precision (the result
#: agrees with the published figure to all printed digits).
CODATA2018 = PhysicalConstants(
    hbar=1.054571817e-34,
    eps0=1.0 / (_MU0 * _C0**2),
    mu0=_MU0,
    c0=_C0,
    e_charge=1.602176634e-19,
)

#: hbar = eps0 = mu0 = c0 = e = 1.
NATURAL_UNITS = PhysicalConstants(1.0, 1.0, 1.0, 1.0, 1.0)


@dataclass(frozen=True)
class AtomParams:
    """Transition frequency (rad/s) and dipole matrix element magnitude."""

    omega0: float
    dipole_magnitude: float

    def __post_init__(self) -> None:
        if not (self.omega0 > 0.0 and math.isfinite(self.omega0)):
            raise RangeError(f"omega0 must be positive, got {self.omega0!r}")
        if not (self.dipole_magnitude >= 0.0 and math.isfinite(self.dipole_magnitude)):
            raise RangeError(
                f"dipole_magnitude must be >= 0, got {self.dipole_magnitude!r}"
            )

    def wavenumber(self, constants: PhysicalConstants) -> float:
        """Transition wavenumber ``k0 = omega0 / c0``."""
        return self.omega0 / constants.c0


def dimensionless_distance(
    x: float, atom: AtomParams, constants: PhysicalConstants
) -> float:
    """Convert a metric emitter-coating distance to ``u = 2 k0 x``."""
    if x < 0.0:
        raise DomainError(f"distance must be >= 0, got {x!r}")
    return 2.0 * atom.wavenumber(constants) * x


@dataclass(frozen=True)
class DipoleOrientation:
    """Complex unit vector of dipole matrix elements ``(d1, d2, d3)``.

    ``d1`` is the component normal to the coating; ``alignment`` is its
    squared magnitude, 0 for a dipole in the coating plane and 1 for one
    perpendicular to it.
    """

    d1: complex
    d2: complex
    d3: complex

    def __post_init__(self) -> None:
        norm_sq = abs(self.d1) ** 2 + abs(self.d2) ** 2 + abs(self.d3) ** 2
        if abs(norm_sq - 1.0) > 1e-12:
            raise DomainError(
                f"dipole components must form a unit vector, |d|^2 = {norm_sq!r}"
            )

    @property
    def alignment(self) -> float:
        return abs(self.d1) ** 2

    @classmethod
    def from_components(
        cls, d1: complex, d2: complex, d3: complex
    ) -> "DipoleOrientation":
        """Normalise arbitrary components into a valid orientation."""
        norm = math.sqrt(abs(d1) ** 2 + abs(d2) ** 2 + abs(d3) ** 2)
        if norm == 0.0:
            raise DomainError("dipole components must not all vanish")
        return cls(d1 / norm, d2 / norm, d3 / norm)

    @classmethod
    def aligned(cls, alignment: float) -> "DipoleOrientation":
        """Real orientation with the requested normal-component weight."""
        if not (0.0 <= alignment <= 1.0):
            raise DomainError(f"alignment must be in [0, 1], got {alignment!r}")
        return cls(math.sqrt(alignment), math.sqrt(1.0 - alignment), 0.0)


@dataclass(frozen=True)
class DecayRateCurve:
    """Sampled decay-rate ratio along increasing ``u``."""

    side: str
    alignment: float
    samples: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        previous = -math.inf
        for u, ratio in self.samples:
            if u <= previous:
                raise DomainError("samples must be strictly increasing in u")
            previous = u
            if not (-_RATIO_SLACK <= ratio <= 1.0 + 1.5 * BRACKET_BOUND + _RATIO_SLACK):
                raise DomainError(f"ratio {ratio!r} at u={u!r} outside physical bounds")

    def u_values(self) -> tuple[float, ...]:
        return tuple(u for u, _ in self.samples)

    def ratios(self) -> tuple[float, ...]:
        return tuple(ratio for _, ratio in self.samples)


def gamma_air(atom: AtomParams, constants: PhysicalConstants) -> float:
    """Free-space spontaneous decay rate of the two-level dipole."""
    return (
        constants.e_charge**2
        * atom.omega0**3
        * atom.dipole_magnitude**2
        / (3.0 * math.pi * constants.eps0 * constants.c0**3 * constants.hbar)
    )


def gamma_med(
    atom: AtomParams, constants: PhysicalConstants, medium: Medium
) -> float:
    """Decay rate inside a homogeneous dielectric.

    Scales the free-space rate by ``n**3 * eps0 / eps``; for a
    non-magnetic medium this reduces to ``n * gamma_air``.
    """
    n = refractive_index(medium)
    eps = medium.eps_rel * constants.eps0
    return (
        n**3
        * constants.e_charge**2
        * atom.omega0**3
        * atom.dipole_magnitude**2
        / (3.0 * math.pi * constants.hbar * eps * constants.c0**3)
    )


def _bracket_series(u: float, alignment: float) -> float:
    """Taylor form of the oscillatory bracket, accurate to O(u**4)."""
    u_sq = u * u
    sinc_part = 1.0 - u_sq / 6.0
    tail_part = -1.0 / 3.0 + u_sq / 30.0
    return (1.0 - alignment) * sinc_part + (1.0 + alignment) * tail_part


def _bracket_direct(u: float, alignment: float) -> float:
    """Oscillatory bracket evaluated from the trigonometric expressions."""
    sin_u = math.sin(u)
    cos_u = math.cos(u)
    sinc_part = sin_u / u
    tail_part = cos_u / (u * u) - sin_u / (u * u * u)
    return (1.0 - alignment) * sinc_part + (1.0 + alignment) * tail_part


def oscillatory_bracket(u: float, alignment: float) -> float:
    """Distance-dependent bracket multiplying the mirror parameter.

    ``(1 - A) sin(u)/u + (1 + A) (cos(u)/u**2 - sin(u)/u**3)`` with
    ``A = alignment``; below :data:`SMALL_U` the Taylor form is used to
    avoid cancellation.  Its magnitude never exceeds 2/3, the value
    reached in the ``u -> 0`` limit.
    """
    if u < SMALL_U:
        return _bracket_series(u, alignment)
    return _bracket_direct(u, alignment)


def _check_rate_args(alignment: float, u: float) -> None:
    if not (0.0 <= alignment <= 1.0):
        raise DomainError(f"alignment must be in [0, 1], got {alignment!r}")
    if not (u >= 0.0):
        raise DomainError(f"u must be >= 0, got {u!r}")


def relative_decay_rate(
    interface: MirrorInterface, side: str, alignment: float, u: float
) -> float:
    """Decay rate near the coating over the reference rate for that side.

    Parameters
    ----------
    interface : MirrorInterface
    side : {"a", "b"}
        Emitter on the air side ("a", reference rate ``gamma_air``) or
        inside the dielectric ("b", reference ``gamma_med``).
    alignment : float
        Squared normal component of the dipole orientation, in [0, 1].
    u : float
        Dimensionless distance ``2 k0 x``, ``>= 0``.

    Returns
    -------
    float
        ``1 + xi * bracket(u, alignment)``; always within [0, 2].
    """
    _check_rate_args(alignment, u)
    summary = mirror_parameter(interface, side)
    return 1.0 + summary.xi * oscillatory_bracket(u, alignment)


def unnormalised_decay_rate(
    interface: MirrorInterface, side: str, alignment: float, u: float
) -> float:
    """Rate ratio with the constant term left in its raw two-species form.

    Evaluates ``(1 + r^2)/eta^2 + t_opp^2/eta_opp^2`` explicitly instead
    of collapsing it to 1, plus the same oscillatory term as
    :func:`relative_decay_rate`.  Kept as an independent algebraic path
    for cross-checks.
    """
    _check_rate_args(alignment, u)
    terms = side_rate_terms(interface, side)
    constant = (1.0 + terms.r**2) / terms.eta_sq + (
        terms.t_opposite**2 / terms.eta_opposite_sq
    )
    oscillatory = (
        3.0
        * terms.r
        * math.cos(terms.reflection_phase)
        / terms.eta_sq
        * oscillatory_bracket(u, alignment)
    )
    return constant + oscillatory


def excited_population(gamma: float, t: float) -> float:
    """Excited-state population ``exp(-gamma * t)`` for ``gamma, t >= 0``."""
    return math.exp(-gamma * t)


def sample_decay_curve(
    interface: MirrorInterface,
    side: str,
    alignment: float,
    u_values,
) -> DecayRateCurve:
    """Evaluate :func:`relative_decay_rate` on an increasing ``u`` grid."""
    samples = tuple(
        (float(u), relative_decay_rate(interface, side, alignment, float(u)))
        for u in u_values
    )
    return DecayRateCurve(side=side, alignment=alignment, samples=samples)
