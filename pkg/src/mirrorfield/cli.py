"""Command-line entry point.

Exit codes: 0 success, 1 configuration or model error, 2 oracle-check
sweep with failing cases.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .errors import ConfigError, MirrorFieldError
from .svgplot import heat_panels, line_plot
from .sweep import (
    COMMANDS,
    ResultTable,
    SweepConfig,
    format_csv,
    oracle_failures,
    write_csv,
)

_ANGLE_FIELDS = {"phi1", "phi2", "phi3", "phi4"}
_FLOAT_FIELDS = {
    "r_a", "t_a", "l_a", "r_b", "t_b", "l_b",
    "alignment", "u_min", "u_max", "l_sq",
    "r_a_max", "r_b_max", "rel_tolerance",
}
_INT_FIELDS = {
    "u_count", "grid_count", "seed", "cases",
    "panels_per_oscillation", "points_per_panel", "min_panels",
}
_STR_FIELDS = {"side", "preset"}

_SUBCOMMAND_FLAGS = {
    "eta-map": ["l_sq", "grid_count", "r_a_max", "r_b_max"],
    "xi-map": ["l_sq", "grid_count", "r_a_max", "r_b_max", "phi3_values"],
    "decay-curve": [
        "preset", "side", "alignment", "u_min", "u_max", "u_count",
        "r_a", "t_a", "l_a", "r_b", "t_b", "l_b",
        "phi1", "phi2", "phi3", "phi4",
    ],
    "oracle-check": [
        "seed", "cases", "panels_per_oscillation", "points_per_panel",
        "min_panels", "rel_tolerance",
    ],
}


def parse_angle(text: str) -> float:
    """Parse an angle given as a float or a multiple of pi (``pi``, ``-pi/2``, ``0.25pi``)."""
    token = text.strip().lower()
    try:
        return float(token)
    except ValueError:
        pass
    sign = 1.0
    if token[:1] in ("+", "-"):
        sign = -1.0 if token[0] == "-" else 1.0
        token = token[1:]
    head, sep, tail = token.partition("pi")
    if not sep:
        raise ConfigError(f"cannot parse angle {text!r}")
    try:
        factor = float(head) if head else 1.0
        divisor = float(tail[1:]) if tail.startswith("/") else 1.0
        if tail and not tail.startswith("/"):
            raise ValueError(tail)
    except ValueError as exc:
        raise ConfigError(f"cannot parse angle {text!r}") from exc
    return sign * factor * math.pi / divisor


def _apply_setting(config: SweepConfig, key: str, raw: str) -> None:
    try:
        if key in _ANGLE_FIELDS:
            value: object = parse_angle(raw)
        elif key == "phi3_values":
            value = tuple(parse_angle(part) for part in raw.split(","))
        elif key in _FLOAT_FIELDS:
            value = float(raw)
        elif key in _INT_FIELDS:
            value = int(raw)
        elif key in _STR_FIELDS:
            value = raw
        else:
            raise ConfigError(f"unknown option {key!r}")
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc
    setattr(config, key, value)


def load_config_file(path: str) -> dict[str, str]:
    """Read a flat ``key = value`` file, ignoring blanks and # comments."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    settings: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        key, sep, value = body.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        settings[key.strip()] = value.strip()
    return settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirrorfield",
        description="Spontaneous-emission sweeps near a coated interface.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        "eta-map": "tabulate the mode normalisation constants on a reflectivity grid",
        "xi-map": "tabulate the mirror parameter on a reflectivity grid",
        "decay-curve": "sample the decay-rate ratio against scaled distance",
        "oracle-check": "compare the closed form against numeric integrations",
    }
    for name, flags in _SUBCOMMAND_FLAGS.items():
        sub = subparsers.add_parser(name, help=helps[name])
        sub.add_argument("--config", help="flat key = value settings file")
        sub.add_argument("--out", help="write CSV here instead of stdout")
        sub.add_argument(
            "--svg", action="store_true",
            help="also write an SVG plot next to --out",
        )
        for flag in flags:
            sub.add_argument(f"--{flag.replace('_', '-')}", dest=flag, default=None)
    return parser


def _matrix(table: ResultTable, name: str, count: int) -> list[list[float]]:
    column = table.column(name)
    return [column[i * count:(i + 1) * count] for i in range(count)]


def _render_svg(config: SweepConfig, table: ResultTable) -> str:
    if config.subcommand == "decay-curve":
        u = table.column("u")
        series = [(label, table.column(label)) for label in table.columns[1:]]
        return line_plot(u, series, "Relative decay rate", "u = 2 k0 x", "ratio")
    if config.subcommand == "oracle-check":
        cases = table.column("case")
        series = [("max_rel_error", table.column("max_rel_error"))]
        return line_plot(cases, series, "Oracle agreement", "case", "max rel error")
    count = config.grid_count
    axis = table.column("r_b")[:count]
    r_a_axis = [table.rows[i * count][0] for i in range(count)]
    names = table.columns[2:]
    panels = [(name, _matrix(table, name, count)) for name in names]
    title = "Normalisation map" if config.subcommand == "eta-map" else "Mirror parameter map"
    return heat_panels(axis, r_a_axis, panels, title, "r_b", "r_a")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    namespace = parser.parse_args(argv)
    try:
        config = SweepConfig(subcommand=namespace.subcommand)
        if namespace.config:
            for key, raw in load_config_file(namespace.config).items():
                _apply_setting(config, key, raw)
        for flag in _SUBCOMMAND_FLAGS[namespace.subcommand]:
            raw = getattr(namespace, flag)
            if raw is not None:
                _apply_setting(config, flag, raw)
        config.out = namespace.out
        config.emit_svg = namespace.svg
        if config.emit_svg and config.out is None:
            raise ConfigError("--svg needs --out to name the plot file")
        table = COMMANDS[config.subcommand](config)
        if config.out is None:
            sys.stdout.write(format_csv(table))
        else:
            write_csv(table, config.out)
        if config.emit_svg:
            svg_path = Path(config.out).with_suffix(".svg")
            svg_path.write_text(_render_svg(config, table), encoding="utf-8")
        if config.subcommand == "oracle-check":
            print(table.trailer, file=sys.stderr)
            if oracle_failures(table) > 0:
                return 2
        return 0
    except MirrorFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
