"""Command line entry point: ``topvertex verify | selfcheck | table``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .harness import (
    ConfigError,
    SweepAborted,
    SweepConfig,
    TableConfig,
    emit_table,
    load_config_file,
    parse_framings,
    run_selfcheck,
    run_sweep,
)

log = logging.getLogger("topvertex")

# CLI flag -> configuration key
_VERIFY_KEYS = {
    "legs": "legs",
    "max_size": "max_total_size",
    "max_leg_size": "max_leg_size",
    "framings": "framings",
    "mode": "mode",
    "sample_points": "sample_points",
    "cutoff": "expansion_cutoff",
    "sign_variant": "sign_variant",
    "jobs": "jobs",
    "out": "output_path",
    "seed": "seed",
}
_TABLE_KEYS = {
    "legs": "legs",
    "max_size": "max_size",
    "min_size": "min_size",
    "framing": "framing",
    "format": "format",
    "out": "output_path",
}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topvertex", description="Exact checks of fermionic vertex formulas.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep partition tuples and compare both sides")
    v.add_argument("--config", help="TOML or JSON file with the same keys as the flags")
    v.add_argument("--legs", type=int, choices=(1, 2, 3))
    v.add_argument("--max-size", type=int, help="bound on the total size of a tuple")
    v.add_argument("--max-leg-size", type=int, help="bound on each partition's size")
    v.add_argument("--framings", help='e.g. "0;1;-1" or "0,0,0;1,-1,0"')
    v.add_argument("--mode", choices=("exact", "sampled"))
    v.add_argument("--sample-points", type=int)
    v.add_argument("--cutoff", type=int, help="mode cutoff for the direct expansion")
    v.add_argument("--no-expansion", action="store_true", help="skip the direct expansion")
    v.add_argument("--sign-variant", help="three-leg variant name, or 'all'")
    v.add_argument("--jobs", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--out", help="write the JSON report here")

    sub.add_parser("selfcheck", help="run the invariant suites")

    t = sub.add_parser("table", help="write framed vertex values")
    t.add_argument("--config", help="TOML or JSON file with the same keys as the flags")
    t.add_argument("--legs", type=int, choices=(1, 2, 3))
    t.add_argument("--max-size", type=int)
    t.add_argument("--min-size", type=int)
    t.add_argument("--framing", help='e.g. "1" or "1,0,-1"')
    t.add_argument("--format", choices=("csv", "json"))
    t.add_argument("--out")
    return p


def _merge(args: argparse.Namespace, keys: dict) -> dict:
    data = load_config_file(args.config) if args.config else {}
    for flag, key in keys.items():
        value = getattr(args, flag, None)
        if value is not None:
            data[key] = value
    return data


def _verify(args: argparse.Namespace) -> int:
    data = _merge(args, _VERIFY_KEYS)
    if args.no_expansion:
        data["use_expansion"] = False
    cfg = SweepConfig.from_mapping(data).validate()
    log.info("sweep: %s", cfg.echo())
    try:
        report = run_sweep(cfg)
    except SweepAborted as exc:
        print(f"sweep aborted: {exc}", file=sys.stderr)
        return 2
    s = report.summary
    print(f"{s['total']} records, {s['matches']} match, {s['mismatches']} mismatch")
    if cfg.legs == 3 and "consistent_variants" in s:
        names = ", ".join(s["consistent_variants"]) or "none"
        print(f"variants consistent with the expansion: {names}")
    if not cfg.output_path:
        log.info("no --out given; report not written")
    return report.exit_code()


def _selfcheck(args: argparse.Namespace) -> int:
    report = run_selfcheck()
    for rec in report.records:
        status = "pass" if rec["match"] else "FAIL"
        print(f"{status} {rec['suite']} ({rec['checked']} checks, {rec['seconds']} s)")
        for line in rec["failures"]:
            print(f"     {line}")
        if "error" in rec:
            print(f"     {rec['error']}")
    return report.exit_code()


def _table(args: argparse.Namespace) -> int:
    data = _merge(args, _TABLE_KEYS)
    if "framing" in data:
        fr = parse_framings(data["framing"] if isinstance(data["framing"], str) else [data["framing"]])
        if len(fr) != 1:
            raise ConfigError("table takes exactly one framing")
        data["framing"] = fr[0]
    known = set(TableConfig.__dataclass_fields__)
    extra = set(data) - known
    if extra:
        raise ConfigError(f"unknown configuration keys: {sorted(extra)}")
    cfg = TableConfig(**data).validate()
    text = emit_table(cfg)
    if not cfg.output_path:
        sys.stdout.write(text)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    handlers = {"verify": _verify, "selfcheck": _selfcheck, "table": _table}
    try:
        return handlers[args.command](args)
    except (ConfigError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failure outside a sweep
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
