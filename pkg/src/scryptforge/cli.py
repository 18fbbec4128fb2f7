"""Command-line interface: hashing, mining, profiling, and modeling.

JSON output is the stable contract (keys match the library record types);
table output is human-oriented only.  Exit codes: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import econ, instrumentation, kernel, miner, perfmodel

PRESET_DIR_ENV = "SCRYPTFORGE_PRESET_DIR"


def _resolve_preset(name: str | None, default_loader):
    """Resolve a preset path: absolute/relative file, then $SCRYPTFORGE_PRESET_DIR."""
    if name is None:
        return default_loader(None)
    candidate = Path(name)
    if candidate.exists():
        return default_loader(candidate)
    preset_dir = os.environ.get(PRESET_DIR_ENV)
    if preset_dir and (Path(preset_dir) / name).exists():
        return default_loader(Path(preset_dir) / name)
    raise FileNotFoundError(f"preset file not found: {name}")


def _read_header_hex(text: str) -> bytes:
    text = text.strip()
    if len(text) != 160:
        raise ValueError(f"header must be 160 hex chars (80 bytes), got {len(text)} chars")
    try:
        return bytes.fromhex(text)
    except ValueError:
        raise ValueError(f"malformed hex in header: {text[:16]}...") from None


def _cmd_hash(args) -> int:
    if args.header == "-":
        text = sys.stdin.read()
    else:
        text = args.header
        if Path(text).is_file():
            text = Path(text).read_text()
    digest = kernel.scrypt_1024_1_1_256(_read_header_hex(text))
    print(digest.hex())
    return 0


def _cmd_mine(args) -> int:
    text = Path(args.header).read_text()
    header = miner.deserialize_header(_read_header_hex(text))
    target = miner.target_from_hex(args.target)
    try:
        start_s, end_s = args.nonce_range.split("..")
        nonce_start, nonce_end = int(start_s, 0), int(end_s, 0)
    except ValueError:
        raise ValueError(f"malformed nonce range (want a..b): {args.nonce_range}") from None
    result = miner.mine_range(header, nonce_start, nonce_end, target,
                              workers=args.workers)
    print(result.to_json())
    return 0


def _cmd_profile(args) -> int:
    breakdown = instrumentation.profile_phases(args.hashes, seed=args.seed)
    counts = instrumentation.count_mem_ops(args.hashes)
    if args.format == "csv":
        print(breakdown.to_csv(), end="")
    else:
        print(json.dumps(
            {"phases": breakdown.to_dict(), "mem_ops": counts.to_dict()},
            indent=2))
    return 0


def _cmd_model_perf(args) -> int:
    model = perfmodel.AsicCycleModel(clock_period_ns=args.clock_ns)
    report = {
        "cycles_per_salsa": perfmodel.salsa_cycles(model),
        "cycles_per_hash": perfmodel.hash_cycles(model),
        "clock_period_ns": model.clock_period_ns,
        "hashrate_hs": perfmodel.theoretical_hashrate(model),
        "hashrate_khs_display": round(perfmodel.theoretical_hashrate(model) / 1000),
    }
    if args.format == "table":
        width = max(len(k) for k in report)
        for key, value in report.items():
            print(f"{key:<{width}}  {value}")
    else:
        print(json.dumps(report, indent=2))
    return 0


def _cmd_model_mem(args) -> int:
    catalog = perfmodel.load_memory_catalog(args.catalog)
    ranking = perfmodel.rank_memory_techs(catalog)
    if args.format == "table":
        print(ranking.to_table())
    elif args.format == "csv":
        print(ranking.to_csv(), end="")
    else:
        print(ranking.to_json())
    return 0


def _cmd_model_econ(args) -> int:
    preset = _resolve_preset(args.preset, econ.load_econ_preset)
    area = econ.die_area_mm2(preset["die"])
    cost = econ.die_cost(area, preset["scenario"])
    revenue = econ.revenue_per_day(preset["scenario"])
    days = econ.breakeven_days(cost["usd"], revenue)
    report = {
        "die_area_mm2": area,
        "cost_eur": cost["eur"],
        "cost_usd": cost["usd"],
        "revenue_usd_per_day": revenue,
        "breakeven_days": days,
    }
    if preset["designs"] and preset["target_hashrate_khs"]:
        comparison = econ.cluster_power(preset["target_hashrate_khs"], preset["designs"])
        report["cluster_power"] = comparison.to_dict()
    if args.format == "csv":
        print(econ.breakeven_series_csv(cost["usd"], revenue), end="")
    elif args.format == "table":
        for key in ("die_area_mm2", "cost_eur", "cost_usd",
                    "revenue_usd_per_day", "breakeven_days"):
            print(f"{key:<22}  {report[key]:.4f}")
    else:
        print(json.dumps(report, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scryptforge",
        description="Scrypt(1024,1,1) proof-of-work engine, profiler, and "
                    "ASIC cycle/memory/economics models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hash = sub.add_parser(
        "hash",
        help="scrypt digest of an 80-byte block header given as 160 hex "
             "chars (argument, file path, or '-' for stdin)")
    p_hash.add_argument("header")
    p_hash.set_defaults(func=_cmd_hash)

    p_mine = sub.add_parser(
        "mine", help="search a nonce range for a digest at or below a target")
    p_mine.add_argument("--header", required=True,
                        help="file with 160 hex chars of serialized header")
    p_mine.add_argument("--target", required=True, help="64-hex-char target")
    p_mine.add_argument("--nonce-range", required=True, help="inclusive range a..b")
    p_mine.add_argument("--workers", type=int, default=1)
    p_mine.set_defaults(func=_cmd_mine)

    p_prof = sub.add_parser(
        "profile",
        help="per-phase wall-time breakdown and memory-operation counts "
             "of the software kernel")
    p_prof.add_argument("--hashes", type=int, default=1000)
    p_prof.add_argument("--seed", type=int, default=0)
    p_prof.add_argument("--format", choices=["json", "csv"], default="json")
    p_prof.set_defaults(func=_cmd_profile)

    p_model = sub.add_parser("model", help="analytical ASIC models")
    model_sub = p_model.add_subparsers(dest="model_command", required=True)

    p_perf = model_sub.add_parser(
        "perf", help="cycle-count and theoretical hashrate model of one "
                     "scrypt core (34 cycles/salsa, 139264 cycles/hash "
                     "with defaults)")
    p_perf.add_argument("--clock-ns", type=float, default=1.0)
    p_perf.add_argument("--format", choices=["json", "table"], default="json")
    p_perf.set_defaults(func=_cmd_model_perf)

    p_mem = model_sub.add_parser(
        "mem", help="rank candidate scratchpad memory technologies by latency")
    p_mem.add_argument("--catalog", default=None, help="catalog JSON (bundled default)")
    p_mem.add_argument("--format", choices=["json", "table", "csv"], default="json")
    p_mem.set_defaults(func=_cmd_model_mem)

    p_econ = model_sub.add_parser(
        "econ", help="die area/cost, daily revenue, break-even days, and "
                     "cluster power comparison")
    p_econ.add_argument("--preset", default=None,
                        help="preset JSON (bundled 2014 baseline by default); "
                             f"bare names resolve via ${PRESET_DIR_ENV}")
    p_econ.add_argument("--format", choices=["json", "table", "csv"], default="json")
    p_econ.set_defaults(func=_cmd_model_econ)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
