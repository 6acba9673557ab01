"""Parameter sweeps behind the command-line interface.

Each command produces a :class:`ResultTable` whose provenance line echoes
every parameter needed to regenerate it, so any emitted CSV can be
replayed and compared bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, MirrorFieldError, QuadratureBudgetExceeded
from .interface import (
    MirrorInterface,
    SideCoefficients,
    mirror_parameter,
    normalisation_constants,
    validate_interface,
)
from .oracle import QuadratureSpec, oracle_compare
from .rates import DipoleOrientation, sample_decay_curve

#: Distances exercised by the oracle sweep, cycled per case.
ORACLE_U_VALUES = (0.1, 1.0, 5.0, 20.0, 100.0)

#: A case fails the oracle sweep above this deviation.
ORACLE_FAIL_THRESHOLD = 1e-6

#: Sentinel written in place of a result when the quadrature gives up.
FAILED_VALUE = -1.0

_INTERFACE_FIELDS = (
    "r_a", "t_a", "l_a", "r_b", "t_b", "l_b",
    "phi1", "phi2", "phi3", "phi4",
)


@dataclass
class SweepConfig:
    """Merged command-line / config-file options for one sweep."""

    subcommand: str = ""
    r_a: float | None = None
    t_a: float | None = None
    l_a: float | None = None
    r_b: float | None = None
    t_b: float | None = None
    l_b: float | None = None
    phi1: float = 0.0
    phi2: float = 0.0
    phi3: float = 0.0
    phi4: float = 0.0
    side: str = "a"
    alignment: float = 0.0
    u_min: float = 0.01
    u_max: float = 50.0
    u_count: int = 501
    l_sq: float = 0.2
    grid_count: int = 101
    r_a_max: float | None = None
    r_b_max: float | None = None
    phi3_values: tuple[float, ...] = (0.0, math.pi)
    preset: str | None = None
    seed: int = 42
    cases: int = 64
    panels_per_oscillation: int = 4
    points_per_panel: int = 16
    min_panels: int = 8
    rel_tolerance: float = 1e-9
    out: str | None = None
    emit_svg: bool = False

    def validate(self) -> None:
        if self.subcommand not in COMMANDS:
            raise ConfigError(f"unknown subcommand {self.subcommand!r}")
        if self.side not in ("a", "b"):
            raise ConfigError(f"side must be 'a' or 'b', got {self.side!r}")
        if not (0.0 <= self.alignment <= 1.0):
            raise ConfigError(f"alignment must be in [0, 1], got {self.alignment!r}")
        if self.u_count < 2:
            raise ConfigError("u_count must be >= 2")
        if not (0.0 <= self.u_min < self.u_max):
            raise ConfigError("need 0 <= u_min < u_max")
        if self.grid_count < 2:
            raise ConfigError("grid_count must be >= 2")
        if not (0.0 <= self.l_sq <= 1.0):
            raise ConfigError(f"l_sq must be in [0, 1], got {self.l_sq!r}")
        for name in ("r_a_max", "r_b_max"):
            value = getattr(self, name)
            if value is not None and not (0.0 < value <= 1.0):
                raise ConfigError(f"{name} must be in (0, 1], got {value!r}")
        if not self.phi3_values:
            raise ConfigError("phi3_values must not be empty")
        if self.preset is not None and self.preset not in PRESETS:
            raise ConfigError(
                f"unknown preset {self.preset!r}; "
                f"available: {', '.join(sorted(PRESETS))}"
            )
        if self.cases < 1:
            raise ConfigError("cases must be >= 1")
        if self.seed < 0:
            raise ConfigError("seed must be >= 0")
        try:
            self.quadrature()
        except MirrorFieldError as exc:
            raise ConfigError(str(exc)) from exc

    def quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(
            panels_per_oscillation=self.panels_per_oscillation,
            points_per_panel=self.points_per_panel,
            min_panels=self.min_panels,
            rel_tolerance=self.rel_tolerance,
        )

    def interface(self) -> MirrorInterface:
        missing = [
            name for name in ("r_a", "t_a", "r_b", "t_b")
            if getattr(self, name) is None
        ]
        if missing:
            raise ConfigError(
                "custom curves need interface amplitudes; "
                f"missing: {', '.join(missing)}"
            )
        return validate_interface(
            r_a=self.r_a, t_a=self.t_a, l_a=self.l_a,
            r_b=self.r_b, t_b=self.t_b, l_b=self.l_b,
            phi1=self.phi1, phi2=self.phi2, phi3=self.phi3, phi4=self.phi4,
        )


@dataclass
class ResultTable:
    """Rectangular float table plus its regeneration recipe."""

    columns: list[str]
    rows: list[list[float]]
    provenance: str
    trailer: str | None = None

    def __post_init__(self) -> None:
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise ConfigError("table rows must match the column count")
            for value in row:
                if not math.isfinite(value):
                    raise ConfigError(f"table values must be finite, got {value!r}")

    def column(self, name: str) -> list[float]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def format_csv(table: ResultTable) -> str:
    """Serialise with a provenance header, repr floats and LF endings."""
    lines = [f"# provenance: {table.provenance}", ",".join(table.columns)]
    for row in table.rows:
        lines.append(",".join(repr(float(value)) for value in row))
    if table.trailer:
        lines.append(f"# {table.trailer}")
    return "\n".join(lines) + "\n"


def write_csv(table: ResultTable, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as stream:
        stream.write(format_csv(table))


def parse_csv(text: str) -> ResultTable:
    """Inverse of :func:`format_csv`."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# provenance: "):
        raise ConfigError("missing provenance header")
    provenance = lines[0][len("# provenance: "):]
    trailer = None
    if lines and lines[-1].startswith("# "):
        trailer = lines[-1][2:]
        lines = lines[:-1]
    columns = lines[1].split(",")
    rows = [[float(token) for token in line.split(",")] for line in lines[2:]]
    return ResultTable(columns=columns, rows=rows, provenance=provenance, trailer=trailer)


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return ",".join(repr(float(v)) for v in value)
    return str(value)


def _provenance(subcommand: str, params: dict) -> str:
    parts = [subcommand]
    for key, value in params.items():
        if value is None:
            continue
        parts.append(f"{key}={_format_value(value)}")
    return " ".join(parts)


_INT_FIELDS = {
    "u_count", "grid_count", "seed", "cases",
    "panels_per_oscillation", "points_per_panel", "min_panels",
}
_STR_FIELDS = {"side", "preset"}


def replay_provenance(provenance: str) -> ResultTable:
    """Regenerate the table described by a provenance line."""
    tokens = provenance.split()
    if not tokens:
        raise ConfigError("empty provenance")
    subcommand = tokens[0]
    if subcommand not in COMMANDS:
        raise ConfigError(f"unknown subcommand {subcommand!r} in provenance")
    config = SweepConfig(subcommand=subcommand)
    for token in tokens[1:]:
        key, sep, raw = token.partition("=")
        if not sep or not hasattr(config, key):
            raise ConfigError(f"bad provenance token {token!r}")
        if key in _INT_FIELDS:
            setattr(config, key, int(raw))
        elif key in _STR_FIELDS:
            setattr(config, key, raw)
        elif key == "phi3_values":
            setattr(config, key, tuple(float(v) for v in raw.split(",")))
        else:
            setattr(config, key, float(raw))
    return COMMANDS[subcommand](config)


def _grid(limit: float, count: int) -> np.ndarray:
    return np.linspace(0.0, limit, count)


def _map_grids(config: SweepConfig) -> tuple[np.ndarray, np.ndarray, float]:
    loss = math.sqrt(config.l_sq)
    default_max = math.sqrt(max(0.0, 1.0 - config.l_sq))
    r_a_max = default_max if config.r_a_max is None else config.r_a_max
    r_b_max = default_max if config.r_b_max is None else config.r_b_max
    for name, value in (("r_a_max", r_a_max), ("r_b_max", r_b_max)):
        if value > default_max + 1e-12:
            raise ConfigError(
                f"{name}={value!r} exceeds sqrt(1 - l_sq) = {default_max!r}"
            )
    return _grid(r_a_max, config.grid_count), _grid(r_b_max, config.grid_count), loss


def _map_side(r: float, loss: float) -> SideCoefficients:
    t_sq = max(0.0, 1.0 - r * r - loss * loss)
    return SideCoefficients(r, math.sqrt(t_sq), loss)


def cmd_eta_map(config: SweepConfig) -> ResultTable:
    """Normalisation constants on an (r_a, r_b) grid at fixed loss."""
    config.validate()
    r_a_values, r_b_values, loss = _map_grids(config)
    rows = []
    sides_a = [_map_side(float(r), loss) for r in r_a_values]
    sides_b = [_map_side(float(r), loss) for r in r_b_values]
    for r_a, side_a in zip(r_a_values, sides_a):
        for r_b, side_b in zip(r_b_values, sides_b):
            pair = normalisation_constants(MirrorInterface(side_a, side_b))
            rows.append([float(r_a), float(r_b), pair.eta_a_sq, pair.eta_b_sq])
    provenance = _provenance(
        "eta-map",
        {
            "l_sq": config.l_sq,
            "grid_count": config.grid_count,
            "r_a_max": float(r_a_values[-1]),
            "r_b_max": float(r_b_values[-1]),
        },
    )
    return ResultTable(
        columns=["r_a", "r_b", "eta_a_sq", "eta_b_sq"],
        rows=rows,
        provenance=provenance,
    )


def cmd_xi_map(config: SweepConfig) -> ResultTable:
    """Mirror parameter on an (r_a, r_b) grid for each requested phase."""
    config.validate()
    r_a_values, r_b_values, loss = _map_grids(config)
    phases = tuple(float(p) for p in config.phi3_values)
    rows = []
    sides_a = [_map_side(float(r), loss) for r in r_a_values]
    sides_b = [_map_side(float(r), loss) for r in r_b_values]
    for r_a, side_a in zip(r_a_values, sides_a):
        for r_b, side_b in zip(r_b_values, sides_b):
            row = [float(r_a), float(r_b)]
            for phase in phases:
                summary = mirror_parameter(
                    MirrorInterface(side_a, side_b, phi3=phase), "a"
                )
                row.append(summary.xi)
            rows.append(row)
    provenance = _provenance(
        "xi-map",
        {
            "l_sq": config.l_sq,
            "grid_count": config.grid_count,
            "r_a_max": float(r_a_values[-1]),
            "r_b_max": float(r_b_values[-1]),
            "phi3_values": phases,
        },
    )
    columns = ["r_a", "r_b"] + [f"xi_phi3={repr(p)}" for p in phases]
    return ResultTable(columns=columns, rows=rows, provenance=provenance)


def _symmetric_interface(r_sq: float, l_sq: float, phase: float) -> MirrorInterface:
    t_sq = max(0.0, 1.0 - r_sq - l_sq)
    side = SideCoefficients(math.sqrt(r_sq), math.sqrt(t_sq), math.sqrt(l_sq))
    return MirrorInterface(side, side, phi1=phase, phi3=phase)


def _preset_fig4() -> list[tuple[str, MirrorInterface, float]]:
    curves = []
    for xi in (-1.5, -0.75, 0.75, 1.5):
        phase = 0.0 if xi > 0 else math.pi
        r = 2.0 * abs(xi) / 3.0
        interface = _symmetric_interface(r * r, 0.0, phase)
        for alignment in (0.0, 1.0):
            curves.append((f"xi={xi:+.2f}_d1sq={int(alignment)}", interface, alignment))
    return curves


def _preset_fig5a() -> list[tuple[str, MirrorInterface, float]]:
    return [
        (f"r={r:.1f}", _symmetric_interface(r * r, 0.0, math.pi), 0.0)
        for r in (0.2, 0.4, 0.6, 0.8, 1.0)
    ]


def _preset_fig5b() -> list[tuple[str, MirrorInterface, float]]:
    curves = []
    for phase, token in ((math.pi, "pi"), (0.0, "0")):
        for r_sq in (0.025, 0.05, 0.075, 0.1):
            curves.append(
                (f"rsq={r_sq}_phi3={token}", _symmetric_interface(r_sq, 0.9, phase), 0.0)
            )
    return curves


def _preset_fig6() -> list[tuple[str, MirrorInterface, float]]:
    return [
        (f"lsq={l_sq:.1f}", _symmetric_interface(0.4, l_sq, math.pi), 0.0)
        for l_sq in (0.0, 0.2, 0.4, 0.6)
    ]


def _fig7_interface(l_a_sq: float, l_b_sq: float) -> MirrorInterface:
    r = math.sqrt(0.4)
    side_a = SideCoefficients(r, math.sqrt(max(0.0, 0.6 - l_a_sq)), math.sqrt(l_a_sq))
    side_b = SideCoefficients(r, math.sqrt(max(0.0, 0.6 - l_b_sq)), math.sqrt(l_b_sq))
    return MirrorInterface(side_a, side_b, phi1=math.pi, phi3=math.pi)


def _preset_fig7a() -> list[tuple[str, MirrorInterface, float]]:
    # The far side transmits nothing, so the emitter-side loss sweep
    # leaves the rate untouched.
    return [
        (f"la_sq={l_sq:.1f}", _fig7_interface(l_sq, 0.6), 0.0)
        for l_sq in (0.0, 0.2, 0.4)
    ]


def _preset_fig7b() -> list[tuple[str, MirrorInterface, float]]:
    return [
        (f"lb_sq={l_sq:.1f}", _fig7_interface(0.6, l_sq), 0.0)
        for l_sq in (0.0, 0.2, 0.4)
    ]


PRESETS = {
    "fig4": _preset_fig4,
    "fig5a": _preset_fig5a,
    "fig5b": _preset_fig5b,
    "fig6": _preset_fig6,
    "fig7a": _preset_fig7a,
    "fig7b": _preset_fig7b,
}


def cmd_decay_curve(config: SweepConfig) -> ResultTable:
    """Decay-rate ratio against ``u`` for a preset family or custom coating."""
    config.validate()
    u_values = np.linspace(config.u_min, config.u_max, config.u_count)
    params: dict = {
        "side": config.side,
        "u_min": config.u_min,
        "u_max": config.u_max,
        "u_count": config.u_count,
    }
    if config.preset is not None:
        curves = [
            (label, interface, alignment)
            for label, interface, alignment in PRESETS[config.preset]()
        ]
        params = {"preset": config.preset, **params}
    else:
        reference = "gamma_air" if config.side == "a" else "gamma_med"
        curves = [(f"ratio_vs_{reference}", config.interface(), config.alignment)]
        params["alignment"] = config.alignment
        for name in _INTERFACE_FIELDS:
            params[name] = getattr(config, name)

    columns = ["u"] + [label for label, _, _ in curves]
    sampled = [
        sample_decay_curve(interface, config.side, alignment, u_values).ratios()
        for _, interface, alignment in curves
    ]
    rows = [
        [float(u)] + [ratios[i] for ratios in sampled]
        for i, u in enumerate(u_values)
    ]
    return ResultTable(
        columns=columns, rows=rows, provenance=_provenance("decay-curve", params)
    )


def _random_side(rng: np.random.Generator) -> SideCoefficients:
    while True:
        r_sq = float(rng.uniform(0.0, 1.0))
        l_sq = float(rng.uniform(0.0, 1.0 - r_sq))
        # Keep 1 + r^2 - t^2 = 2 r^2 + l^2 clear of the degeneracy cut.
        if 2.0 * r_sq + l_sq > 1e-6:
            t_sq = max(0.0, 1.0 - r_sq - l_sq)
            return SideCoefficients(
                math.sqrt(r_sq), math.sqrt(t_sq), math.sqrt(l_sq)
            )


def _random_interface(rng: np.random.Generator) -> MirrorInterface:
    side_a = _random_side(rng)
    side_b = _random_side(rng)
    phases = rng.uniform(0.0, 2.0 * math.pi, size=4)
    return MirrorInterface(side_a, side_b, *map(float, phases))


def _random_dipole(rng: np.random.Generator) -> DipoleOrientation:
    while True:
        parts = rng.normal(size=3) + 1j * rng.normal(size=3)
        if np.linalg.norm(parts) > 1e-6:
            return DipoleOrientation.from_components(*map(complex, parts))


@dataclass(frozen=True)
class OracleCase:
    """One deterministic pseudo-random oracle configuration."""

    index: int
    interface: MirrorInterface
    side: str
    dipole: DipoleOrientation
    u: float


def seeded_oracle_cases(seed: int, count: int) -> list[OracleCase]:
    """Deterministic case list shared by the CLI sweep and the test suite."""
    rng = np.random.default_rng(seed)
    cases = []
    for index in range(count):
        interface = _random_interface(rng)
        side = "a" if int(rng.integers(0, 2)) == 0 else "b"
        dipole = _random_dipole(rng)
        u = ORACLE_U_VALUES[index % len(ORACLE_U_VALUES)]
        cases.append(OracleCase(index, interface, side, dipole, u))
    return cases


def cmd_oracle_check(config: SweepConfig) -> ResultTable:
    """Closed form against both oracles on a seeded random grid.

    Quadrature failures are reported per row with the sentinel value
    :data:`FAILED_VALUE` and ``ok = 0`` rather than aborting the sweep.
    """
    config.validate()
    spec = config.quadrature()
    rows = []
    failures = 0
    worst = 0.0
    for case in seeded_oracle_cases(config.seed, config.cases):
        try:
            report = oracle_compare(case.interface, case.side, case.dipole, case.u, spec)
        except QuadratureBudgetExceeded:
            ok = 0.0
            row_values = (FAILED_VALUE, FAILED_VALUE, FAILED_VALUE, FAILED_VALUE)
        else:
            ok = 1.0 if report.max_rel_error <= ORACLE_FAIL_THRESHOLD else 0.0
            worst = max(worst, report.max_rel_error)
            row_values = (
                report.closed_form,
                report.oracle_2d,
                report.oracle_1d,
                report.max_rel_error,
            )
        if ok == 0.0:
            failures += 1
        rows.append(
            [
                float(case.index),
                0.0 if case.side == "a" else 1.0,
                case.u,
                case.dipole.alignment,
                *row_values,
                ok,
            ]
        )
    provenance = _provenance(
        "oracle-check",
        {
            "seed": config.seed,
            "cases": config.cases,
            "panels_per_oscillation": config.panels_per_oscillation,
            "points_per_panel": config.points_per_panel,
            "min_panels": config.min_panels,
            "rel_tolerance": config.rel_tolerance,
        },
    )
    trailer = (
        f"summary: cases={config.cases} failures={failures} "
        f"worst_max_rel_error={worst!r}"
    )
    return ResultTable(
        columns=[
            "case", "side_is_b", "u", "alignment",
            "closed_form", "oracle_2d", "oracle_1d", "max_rel_error", "ok",
        ],
        rows=rows,
        provenance=provenance,
        trailer=trailer,
    )


COMMANDS = {
    "eta-map": cmd_eta_map,
    "xi-map": cmd_xi_map,
    "decay-curve": cmd_decay_curve,
    "oracle-check": cmd_oracle_check,
}


def oracle_failures(table: ResultTable) -> int:
    """Count failed rows of an oracle-check table."""
    return sum(1 for value in table.column("ok") if value == 0.0)
