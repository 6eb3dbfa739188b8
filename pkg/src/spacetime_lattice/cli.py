"""Command-line entry point: ``gaps``, ``band``, ``zones`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .brillouin import MAX_RANK, zone_edges
from .jacobi import ConvergenceError
from .lattice import LatticeConfig, make_config
from .quadrature import MIN_POINTS, QuadratureSpec, selection_rule_scan
from .report import RunManifest, atomic_write, band_svg, dumps, manifest_path_for, zones_svg
from .solver import EDGE_LABELS, band_scan, edge_line
from .spectra import forbidden_band

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3

# Worked-example beam, used when a command does not require explicit values.
DEFAULT_WAVELENGTH_NM = 589.0
DEFAULT_INTENSITY_W_CM2 = 3.13e12

CONVENTIONS = ["reciprocal", "angular", "paper", "standard"]
FORMULAS = ["literal", "chained"]


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("lattice configuration")
    g.add_argument("--config", help="JSON file with wavelength_nm, intensity_W_cm2, convention, formula_mode, species")
    g.add_argument("--wavelength-nm", type=float)
    g.add_argument("--intensity-W-cm2", dest="intensity_W_cm2", type=float)
    g.add_argument("--convention", choices=CONVENTIONS, help="wavenumber convention (default reciprocal, k = 1/lambda)")
    g.add_argument("--formula", choices=FORMULAS, help="forbidden-band closed form (default literal)")
    g.add_argument("--species", help="particle species (default electron)")
    g.add_argument("--manifest", help="also write a run manifest to this path")


def _resolve_config(args, parser, require_beam: bool) -> LatticeConfig:
    values = {
        "wavelength_nm": None,
        "intensity_W_cm2": None,
        "convention": "reciprocal",
        "formula_mode": "literal",
        "species": "electron",
    }
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config {args.config}: {exc}")
        unknown = set(data) - set(values)
        if unknown:
            parser.error(f"unknown config keys: {sorted(unknown)}")
        values.update(data)
    overrides = {
        "wavelength_nm": args.wavelength_nm,
        "intensity_W_cm2": args.intensity_W_cm2,
        "convention": args.convention,
        "formula_mode": args.formula,
        "species": args.species,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    if values["wavelength_nm"] is None or values["intensity_W_cm2"] is None:
        if require_beam:
            parser.error("--wavelength-nm and --intensity-W-cm2 are required (or supply --config)")
        values["wavelength_nm"] = values["wavelength_nm"] or DEFAULT_WAVELENGTH_NM
        if values["intensity_W_cm2"] is None:
            values["intensity_W_cm2"] = DEFAULT_INTENSITY_W_CM2
    try:
        return LatticeConfig.from_dict(values)
    except (TypeError, ValueError) as exc:
        parser.error(str(exc))


def _write_manifest(args, command: str, config, outputs: list[str], **extra) -> None:
    if getattr(args, "manifest", None):
        RunManifest(command, config, outputs=outputs, extra=extra).write(args.manifest)


def cmd_gaps(args, parser) -> int:
    config = _resolve_config(args, parser, require_beam=True)
    text = dumps(forbidden_band(config).to_dict())
    sys.stdout.write(text)
    _write_manifest(args, "gaps", config, [])
    return EXIT_OK


def cmd_band(args, parser) -> int:
    config = _resolve_config(args, parser, require_beam=True)
    if args.points < 1:
        parser.error("--points must be at least 1")
    if args.truncation < 2:
        parser.error("--truncation must be at least 2")
    span = args.span_eV
    if span is None:
        span = max(16.0 * config.beta, 1e-6)
    if not span >= 0:
        parser.error("--span-eV must be non-negative")
    offsets = np.linspace(-span / 2, span / 2, args.points) if args.points > 1 else np.zeros(1)
    line = edge_line(args.edge, config)
    try:
        table = band_scan(line, offsets, args.truncation, config)
    except ConvergenceError as exc:
        print(f"error: {exc}; worst off-diagonal residual {exc.residual:.3e}", file=sys.stderr)
        return EXIT_NUMERICAL
    outputs = [str(atomic_write(args.out, table.to_csv()))]
    if args.svg:
        outputs.append(str(atomic_write(args.svg, band_svg(table))))
    RunManifest(
        "band", config, outputs=outputs,
        extra={"edge": args.edge, "points": args.points, "truncation": args.truncation, "span_eV": span},
    ).write(manifest_path_for(args.out))
    print(dumps({"outputs": outputs, "rows": len(table.rows)}), end="")
    return EXIT_OK


def cmd_zones(args, parser) -> int:
    if not 1 <= args.max_rank <= MAX_RANK:
        parser.error(f"--max-rank must be in 1..{MAX_RANK}")
    table = [zone_edges(r).to_dict() for r in range(1, args.max_rank + 1)]
    outputs = []
    config = None
    if args.svg:
        config = _resolve_config(args, parser, require_beam=False)
        outputs.append(str(atomic_write(args.svg, zones_svg(config.hbar_c_k_gamma))))
    sys.stdout.write(dumps(table))
    _write_manifest(args, "zones", config, outputs)
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    if args.samples < 1:
        parser.error("--samples must be at least 1")
    if args.points < MIN_POINTS or args.points % 2:
        parser.error(f"--points must be even and at least {MIN_POINTS}")
    config = _resolve_config(args, parser, require_beam=False)
    report = selection_rule_scan(config, args.samples, args.seed, QuadratureSpec(args.points, args.points))
    body = report.to_dict()
    body["seed"] = args.seed
    body["points"] = args.points
    sys.stdout.write(dumps(body))
    _write_manifest(args, "verify", config, [], passed=report.passed)
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spacetime-lattice",
        description="Mass and energy gaps of a charged particle in a standing-wave spacetime lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gaps", help="forbidden kinetic-energy band as JSON")
    _add_config_flags(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("band", help="eigenvalue pair along a third-zone edge, as CSV")
    _add_config_flags(p)
    p.add_argument("--edge", choices=sorted(EDGE_LABELS), default="P+")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--truncation", type=int, default=4)
    p.add_argument("--span-eV", dest="span_eV", type=float, help="scan width along the edge (default 16 beta)")
    p.add_argument("--out", default="band.csv", help="CSV output path")
    p.add_argument("--svg", help="also render a band diagram to this path")
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("zones", help="Brillouin-zone edge transfers as JSON")
    _add_config_flags(p)
    p.add_argument("--max-rank", type=int, default=MAX_RANK)
    p.add_argument("--svg", help="render the third-zone edge frame to this path")
    p.set_defaults(func=cmd_zones)

    p = sub.add_parser("verify", help="check closed-form couplings against quadrature")
    _add_config_flags(p)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=512)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
