"""Command-line entry point.

  superrad run scenario.json --out table.csv --threads 4
  superrad preset fig7 --out fig7.csv
  superrad list-presets

Exit codes: 0 success, 2 config error, 3 numerical failure.
"""

import argparse
import json
from pathlib import Path
import sys

from . import __version__
from .errors import ConfigError, NumericalError
from .scenario import list_presets, preset_config, run_scenario

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _emit(table, fmt, out):
    text = table.to_json() if fmt == "json" else table.to_csv()
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _add_output_args(p):
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=int, default=1, help="worker threads over grid points")


def build_parser():
    ap = argparse.ArgumentParser(prog="superrad", description="Collective emission sweeps, exact vs RWA.")
    ap.add_argument("--version", action="version", version=f"superrad {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario config file")
    run.add_argument("config", help="JSON scenario file")
    _add_output_args(run)

    pre = sub.add_parser("preset", help="run a built-in scenario")
    pre.add_argument("name")
    _add_output_args(pre)
    pre.add_argument("--show-config", action="store_true", help="print the preset config and exit")

    sub.add_parser("list-presets", help="list built-in scenarios")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "list-presets":
        for name, desc in list_presets():
            print(f"{name:10s} {desc}")
        return EXIT_OK

    try:
        if args.threads < 1:
            raise ConfigError("--threads", f"must be >= 1, got {args.threads}")
        if args.command == "run":
            try:
                config = json.loads(Path(args.config).read_text(encoding="utf-8"))
            except OSError as exc:
                raise ConfigError(args.config, f"cannot read: {exc.strerror}") from None
            except json.JSONDecodeError as exc:
                raise ConfigError(args.config, f"invalid JSON: {exc}") from None
        else:
            config = preset_config(args.name)
            if args.show_config:
                print(json.dumps(config, indent=2, sort_keys=True))
                return EXIT_OK
        table = run_scenario(config, threads=args.threads)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    _emit(table, args.format, args.out)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
