"""/src/main.py

Command line entry point:

    python src/main.py invariants --example s5-pair
    python src/main.py spectrum --config configs/s5-pair.ini --degree 3
    python src/main.py verify --example s7-family --t 0,1
    python src/main.py bump --eps 0.3

Exit codes: 0 when every verdict holds, 2 when a verdict fails, 1 for
usage or config errors. invariants exits with 3 when the only failure is a
missing separation (two equivalent pairs).
"""

import argparse
import logging
import sys

from isospec import config
from isospec.errors import ConfigError, IsospecError, WitnessError
from isospec.experiments import COMMANDS, build_config, load_config_file
from isospec.experiments.config_file import parse_real

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_VERDICT = 2
EXIT_NO_SEPARATION = 3

logger = logging.getLogger("isospec")


def _real_list(text: str) -> list[float]:
    return [parse_real(item) for item in text.split(",") if item.strip()]


def _int_list(text: str) -> list[int]:
    return [int(item) for item in text.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isospec", description="Isospectral metrics on odd spheres")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", help="INI experiment file")
    parser.add_argument("--example", choices=["s5-pair", "s7-family", "custom"])
    parser.add_argument("--pair-a", dest="pair_a", help="pair token for the custom example, e.g. zero-su:2 or j:0.5")
    parser.add_argument("--pair-b", dest="pair_b")
    parser.add_argument("--surface", help="sphere or product:<a>,<b>")
    parser.add_argument("--t", dest="t_values", type=_real_list, help="comma separated family parameters")
    parser.add_argument("--degree", type=int, help="basis degree N")
    parser.add_argument("--quad-orders", dest="quad_orders", type=_int_list, help="comma separated circle orders K")
    parser.add_argument("--tol", type=float)
    parser.add_argument("--eps", type=float)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out")
    parser.add_argument("--format", choices=["json", "csv", "both"])
    return parser


def _summary(command: str, report) -> None:
    if command == "invariants":
        print(f"{'label':<16}{'invariant':>14}{'commutant':>11}{'generic':>9}")
        for row in report.rows:
            print(f"{row.label:<16}{row.invariant:>14.10g}{row.commutant_dimension:>11}{str(row.generic):>9}")
        for check in report.checks:
            print(f"{check.label_a} vs {check.label_b}: isospectral={check.ok} separated={check.separated}")
        if not report.separation_present:
            print("separation absent")


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=config.ISOSPEC_LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG

    overrides = {key: value for key, value in vars(args).items() if key not in ("command", "config")}
    try:
        file_values = load_config_file(args.config, args.command) if args.config else {}
        cfg = build_config(args.command, file_values, overrides)
        report = COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"✗ Config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except WitnessError as exc:
        print(f"✗ Witness failed for weight {exc.weight}: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    except IsospecError as exc:
        print(f"✗ {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERDICT

    _summary(args.command, report)
    if args.command == "invariants" and report.isospectral_ok and report.genericity_ok and not report.ok:
        print(f"✗ invariants {cfg.label}: separation absent", file=sys.stderr)
        return EXIT_NO_SEPARATION
    if report.ok:
        print(f"✓ {args.command} {cfg.label}: all verdicts hold", file=sys.stderr)
        return EXIT_OK
    print(f"✗ {args.command} {cfg.label}: verdict failed", file=sys.stderr)
    return EXIT_VERDICT


if __name__ == "__main__":
    sys.exit(main())
