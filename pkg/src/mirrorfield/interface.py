"""Model of a mirror-coated interface with independent loss on each side.

A thin coating between air and a dielectric is described by real electric
field amplitudes for reflection, transmission and loss, one triple per
side of approach, together with four phase shifts.  Energy conservation
ties each triple to ``r**2 + t**2 + l**2 = 1``.  The module derives the
normalisation constants ``eta_a**2`` and ``eta_b**2`` of the quantised
field near the coating and the dimensionless mirror parameter ``xi`` that
sets the size of the distance-dependent decay-rate modulation.

Sides are labelled ``"a"`` for light that approaches the coating from the
air half space (where reflection picks up ``phi3`` and transmission from
the far side ``phi4``) and ``"b"`` for light approaching through the
dielectric (reflection phase ``phi1``, transmission phase ``phi2``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateTransparency,
    DomainError,
    EnergyViolation,
    RangeError,
)

TWO_PI = 2.0 * math.pi

#: Absolute tolerance on ``r**2 + t**2 + l**2 - 1``.
ENERGY_TOL = 1e-9

#: Values of ``1 + r**2 - t**2`` at or below this are treated as degenerate.
DEGENERACY_TOL = 1e-9

_SIDES = ("a", "b")


def _reduce_phase(phase: float) -> float:
    """Map a finite phase onto [0, 2*pi)."""
    if not math.isfinite(phase):
        raise RangeError(f"phase must be finite, got {phase!r}")
    reduced = phase % TWO_PI
    # The modulo can round up to the divisor itself for tiny negatives.
    return 0.0 if reduced >= TWO_PI else reduced


def _check_side(side: str) -> str:
    if side not in _SIDES:
        raise DomainError(f"side must be 'a' or 'b', got {side!r}")
    return side


@dataclass(frozen=True)
class SideCoefficients:
    """Reflection, transmission and loss amplitudes for one approach side.

    All three amplitudes are real and non-negative; phases are carried
    separately by :class:`MirrorInterface`.  Construction enforces
    ``r**2 + t**2 + l**2 = 1`` within :data:`ENERGY_TOL`.
    """

    r: float
    t: float
    l: float

    def __post_init__(self) -> None:
        for name, value in (("r", self.r), ("t", self.t), ("l", self.l)):
            if not (0.0 <= value <= 1.0):
                raise RangeError(
                    f"amplitude {name}={value!r} outside [0, 1]"
                )
        budget = self.r**2 + self.t**2 + self.l**2
        if abs(budget - 1.0) > ENERGY_TOL:
            raise EnergyViolation(
                f"r^2 + t^2 + l^2 = {budget!r}, expected 1 within {ENERGY_TOL}"
            )

    @classmethod
    def with_implied_loss(cls, r: float, t: float) -> "SideCoefficients":
        """Relaxed constructor: accept any ``r**2 + t**2 <= 1``, infer loss.

        Needed for the no-mirror limit where every rate is zero and the
        full energy budget goes into absorption.
        """
        if not (0.0 <= r <= 1.0) or not (0.0 <= t <= 1.0):
            raise RangeError(f"amplitudes r={r!r}, t={t!r} outside [0, 1]")
        remainder = 1.0 - r**2 - t**2
        if remainder < -ENERGY_TOL:
            raise EnergyViolation(
                f"r^2 + t^2 = {r**2 + t**2!r} exceeds the unit energy budget"
            )
        return cls(r, t, math.sqrt(max(0.0, remainder)))


@dataclass(frozen=True)
class Medium:
    """Relative permittivity and permeability of the dielectric half space."""

    eps_rel: float = 1.0
    mu_rel: float = 1.0

    def __post_init__(self) -> None:
        if not (self.eps_rel >= 0.0 and math.isfinite(self.eps_rel)):
            raise RangeError(f"eps_rel must be >= 0, got {self.eps_rel!r}")
        if not (self.mu_rel > 0.0 and math.isfinite(self.mu_rel)):
            raise RangeError(f"mu_rel must be > 0, got {self.mu_rel!r}")


#: Vacuum / air on both sides.
AIR = Medium(1.0, 1.0)


@dataclass(frozen=True)
class MirrorInterface:
    """Two sets of side coefficients plus the four coating phases.

    Phases are stored reduced to [0, 2*pi).  ``phi1``/``phi3`` are the
    reflection phases for light arriving from the dielectric and the air
    side respectively; ``phi2``/``phi4`` are the matching transmission
    phases.  Construction rejects coefficient pairs that would make a
    normalisation denominator vanish.
    """

    side_a: SideCoefficients
    side_b: SideCoefficients
    phi1: float = 0.0
    phi2: float = 0.0
    phi3: float = 0.0
    phi4: float = 0.0

    def __post_init__(self) -> None:
        for name in ("phi1", "phi2", "phi3", "phi4"):
            object.__setattr__(self, name, _reduce_phase(getattr(self, name)))
        for label, side in (("a", self.side_a), ("b", self.side_b)):
            denom = 1.0 + side.r**2 - side.t**2
            if denom <= DEGENERACY_TOL:
                raise DegenerateTransparency(
                    f"1 + r^2 - t^2 = {denom!r} on side {label}; "
                    "the field normalisation is undefined"
                )


@dataclass(frozen=True)
class NormalisationPair:
    """Squared normalisation constants of the two photon species."""

    eta_a_sq: float
    eta_b_sq: float


@dataclass(frozen=True)
class MirrorSideSummary:
    """Normalisation and mirror parameter relevant for one emitter side."""

    eta_sq: float
    xi: float


@dataclass(frozen=True)
class SideRateTerms:
    """Coefficients entering the decay-rate formulas for one emitter side.

    ``r`` and ``reflection_phase`` belong to light emitted towards the
    coating on the emitter's side; ``t_opposite`` and
    ``transmission_phase`` to light leaking through from the far side.
    """

    r: float
    reflection_phase: float
    t_opposite: float
    transmission_phase: float
    eta_sq: float
    eta_opposite_sq: float


def validate_interface(
    r_a: float,
    t_a: float,
    l_a: float | None,
    r_b: float,
    t_b: float,
    l_b: float | None,
    phi1: float = 0.0,
    phi2: float = 0.0,
    phi3: float = 0.0,
    phi4: float = 0.0,
) -> MirrorInterface:
    """Construct a :class:`MirrorInterface` from raw coefficients.

    Parameters
    ----------
    r_a, t_a, l_a : float
        Amplitudes for light approaching from the air side.  Passing
        ``None`` for a loss amplitude switches that side to relaxed
        validation, where the loss is implied by ``1 - r**2 - t**2``.
    r_b, t_b, l_b : float
        Same for light approaching through the dielectric.
    phi1, phi2, phi3, phi4 : float
        Reflection/transmission phases; reduced to [0, 2*pi) on storage.

    Raises
    ------
    RangeError
        If any amplitude lies outside [0, 1].
    EnergyViolation
        If a side's amplitudes break ``r^2 + t^2 + l^2 = 1``.
    DegenerateTransparency
        If ``1 + r^2 - t^2`` is numerically zero on either side.
    """
    if l_a is None:
        side_a = SideCoefficients.with_implied_loss(r_a, t_a)
    else:
        side_a = SideCoefficients(r_a, t_a, l_a)
    if l_b is None:
        side_b = SideCoefficients.with_implied_loss(r_b, t_b)
    else:
        side_b = SideCoefficients(r_b, t_b, l_b)
    return MirrorInterface(side_a, side_b, phi1, phi2, phi3, phi4)


def lossless_interface(
    r: float,
    phi1: float = 0.0,
    phi2: float = 0.0,
    phi3: float = 0.0,
    phi4: float = 0.0,
) -> MirrorInterface:
    """Symmetric lossless coating with reflection amplitude ``r``.

    ``t = sqrt(1 - r**2)`` and ``l = 0`` on both sides.  ``r`` must lie in
    [0, 1); ``r = 0`` produces a fully transparent coating, which the
    interface constructor rejects as degenerate.
    """
    if not (0.0 <= r < 1.0):
        raise RangeError(f"lossless reflection amplitude must be in [0, 1), got {r!r}")
    t = math.sqrt(1.0 - r * r)
    side = SideCoefficients(r, t, 0.0)
    return MirrorInterface(side, side, phi1, phi2, phi3, phi4)


def normalisation_from_rates(
    r_a: float, t_a: float, r_b: float, t_b: float
) -> tuple[float, float]:
    """Evaluate the two normalisation constants on raw amplitudes.

    This is the unconstrained two-line formula; it performs no validation
    and is exposed so limits can be probed outside the energy constraint.
    """
    num_a = 1.0 + r_a * r_a - t_a * t_a
    num_b = 1.0 + r_b * r_b - t_b * t_b
    eta_a_sq = 1.0 + r_a * r_a + (num_a / num_b) * (t_b * t_b)
    eta_b_sq = 1.0 + r_b * r_b + (num_b / num_a) * (t_a * t_a)
    return eta_a_sq, eta_b_sq


def normalisation_constants(interface: MirrorInterface) -> NormalisationPair:
    """Squared field normalisation constants of a validated interface.

    They satisfy ``(1 + r_a^2)/eta_a^2 + t_b^2/eta_b^2 = 1`` and the same
    with the sides swapped; for a symmetric coating both reduce to
    ``1 + r^2 + t^2``.
    """
    eta_a_sq, eta_b_sq = normalisation_from_rates(
        interface.side_a.r,
        interface.side_a.t,
        interface.side_b.r,
        interface.side_b.t,
    )
    return NormalisationPair(eta_a_sq, eta_b_sq)


def side_rate_terms(interface: MirrorInterface, side: str) -> SideRateTerms:
    """Collect the coefficients the rate formulas need for one side."""
    _check_side(side)
    pair = normalisation_constants(interface)
    if side == "a":
        return SideRateTerms(
            r=interface.side_a.r,
            reflection_phase=interface.phi3,
            t_opposite=interface.side_b.t,
            transmission_phase=interface.phi4,
            eta_sq=pair.eta_a_sq,
            eta_opposite_sq=pair.eta_b_sq,
        )
    return SideRateTerms(
        r=interface.side_b.r,
        reflection_phase=interface.phi1,
        t_opposite=interface.side_a.t,
        transmission_phase=interface.phi2,
        eta_sq=pair.eta_b_sq,
        eta_opposite_sq=pair.eta_a_sq,
    )


def mirror_parameter(interface: MirrorInterface, side: str) -> MirrorSideSummary:
    """Mirror parameter ``xi = 3 r cos(phase) / eta**2`` for one side.

    Parameters
    ----------
    interface : MirrorInterface
    side : {"a", "b"}
        ``"a"`` uses the air-side reflection amplitude and ``phi3``;
        ``"b"`` the dielectric-side amplitude and ``phi1``.

    Returns
    -------
    MirrorSideSummary
        ``eta_sq`` for the requested side and the bounded parameter
        ``xi`` with ``|xi| <= 1.5``.
    """
    terms = side_rate_terms(interface, side)
    xi = 3.0 * terms.r * math.cos(terms.reflection_phase) / terms.eta_sq
    return MirrorSideSummary(eta_sq=terms.eta_sq, xi=xi)


def refractive_index(medium: Medium) -> float:
    """``n = sqrt(eps_rel * mu_rel)``."""
    return math.sqrt(medium.eps_rel * medium.mu_rel)


def fresnel_normal_reflectivity(medium: Medium) -> float:
    """Normal-incidence field reflection amplitude ``(n - 1)/(n + 1)``.

    Signed: media with ``n < 1`` give a negative amplitude.
    """
    n = refractive_index(medium)
    return (n - 1.0) / (n + 1.0)


_INTERFACE_KEYS = (
    "r_a", "t_a", "l_a", "r_b", "t_b", "l_b",
    "phi1", "phi2", "phi3", "phi4",
)


def interface_from_mapping(values: dict[str, float]) -> MirrorInterface:
    """Build an interface from a flat ``key -> float`` mapping.

    Required keys: ``r_a``, ``t_a``, ``r_b``, ``t_b``.  Loss keys ``l_a``
    and ``l_b`` are optional; omitting one switches that side to relaxed
    validation.  Phase keys default to zero.  Unknown keys are rejected.
    """
    unknown = sorted(set(values) - set(_INTERFACE_KEYS))
    if unknown:
        raise RangeError(f"unknown interface keys: {', '.join(unknown)}")
    missing = sorted({"r_a", "t_a", "r_b", "t_b"} - set(values))
    if missing:
        raise RangeError(f"missing interface keys: {', '.join(missing)}")
    return validate_interface(
        r_a=values["r_a"],
        t_a=values["t_a"],
        l_a=values.get("l_a"),
        r_b=values["r_b"],
        t_b=values["t_b"],
        l_b=values.get("l_b"),
        phi1=values.get("phi1", 0.0),
        phi2=values.get("phi2", 0.0),
        phi3=values.get("phi3", 0.0),
        phi4=values.get("phi4", 0.0),
    )


def parse_interface_text(text: str) -> MirrorInterface:
    """Parse a flat ``key = value`` block into an interface.

    Blank lines and ``#`` comments are ignored; values must parse as
    floats.  The accepted keys match :func:`interface_from_mapping`.
    """
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise RangeError(f"line {lineno}: expected 'key = value', got {raw!r}")
        try:
            values[key.strip()] = float(value.strip())
        except ValueError as exc:
            raise RangeError(f"line {lineno}: bad float {value.strip()!r}") from exc
    return interface_from_mapping(values)
