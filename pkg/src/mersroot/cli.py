"""Command-line front end.

Subcommands: classify, sweep, factor, units, matchings, delta.  Every
report is a JSON envelope carrying the tool version, the command and its
parameters, and a results payload; sweeps can emit CSV instead (header
row plus one prime per line, booleans as 0/1, summary on stderr).

Exit codes: 0 success/agreement, 1 usage or budget error, 2 statement
disagreement (an implementation-defect signal, never a discovery).

For a fixed seed and version the results payload is byte-deterministic;
the timing block is measured and excluded from that guarantee.  Budgets
honor the environment overrides ORACLE_CAP_P and DELTA_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__, bigraph, characterize, circulant, cyclotomic, delta_rings, galgebra, numtheory
from .errors import BudgetExceededError, MersrootError

SCHEMA_ID = "mersroot.report/1"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA_ID,
    "type": "object",
    "required": ["schema", "version", "command", "parameters", "results", "timing"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "version": {"type": "string"},
        "command": {"enum": ["classify", "sweep", "factor", "units", "matchings", "delta"]},
        "parameters": {"type": "object"},
        "results": {"type": "object"},
        "timing": {
            "type": "object",
            "required": ["elapsed_s"],
            "properties": {"elapsed_s": {"type": "number"}},
        },
    },
}

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2

CSV_COLUMNS = ("p", "ord2", "mod8", "mersenne", "two_rooted", "t1_verdict", "t1_agree", "t2_verdict", "t2_agree")


def _oracle_cap_default() -> int:
    return int(os.environ.get("ORACLE_CAP_P", characterize.ORACLE_CAP_DEFAULT))


def _delta_budget_default() -> int:
    return int(os.environ.get("DELTA_BUDGET", delta_rings.DEFAULT_BUDGET))


def _emit(command: str, parameters: dict, results: dict, started: float, stream=None) -> None:
    envelope = {
        "schema": SCHEMA_ID,
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "results": results,
        "timing": {"elapsed_s": round(time.perf_counter() - started, 6)},
    }
    json.dump(envelope, stream or sys.stdout, indent=2, sort_keys=False)
    print(file=stream or sys.stdout)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _parse_odd_prime(text: str) -> int:
    value = int(text)
    if value == 2 or not numtheory.is_prime(value):
        raise ValueError(f"{value} is not an odd prime")
    return value


def _parse_group(text: str) -> tuple[int, int]:
    if text.lower() in ("trivial", "c1"):
        return (1, 0)
    body = text.upper().lstrip("C")
    if "^" in body:
        n_text, r_text = body.split("^", 1)
    else:
        n_text, r_text = body, "1"
    n, r = int(n_text), int(r_text)
    if n < 1 or r < 0:
        raise ValueError(f"bad group shape {text!r}")
    return (n, r)


def _cmd_classify(args) -> int:
    started = time.perf_counter()
    try:
        p = _parse_odd_prime(args.p)
    except ValueError as exc:
        return _fail(str(exc))
    prof = characterize.profile(p, oracle_cap=args.oracle_cap)
    _emit("classify", {"p": p, "oracle_cap": args.oracle_cap, "seed": args.seed}, prof.to_dict(), started)
    return EXIT_OK if prof.agree else EXIT_DISAGREEMENT


def _profile_csv_row(prof) -> dict:
    return {
        "p": prof.p,
        "ord2": prof.ord2,
        "mod8": prof.mod8,
        "mersenne": int(prof.mersenne),
        "two_rooted": int(prof.two_rooted),
        "t1_verdict": int(prof.t1_results[0].verdict),
        "t1_agree": int(prof.t1_agree),
        "t2_verdict": int(prof.t2_results[0].verdict),
        "t2_agree": int(prof.t2_agree),
    }


def _cmd_sweep(args) -> int:
    started = time.perf_counter()
    if args.min > args.max:
        return _fail(f"empty range [{args.min}, {args.max}]")
    profiles = characterize.sweep(
        args.min,
        args.max,
        jobs=args.jobs,
        oracle_cap=args.oracle_cap,
        raise_on_disagreement=False,
    )
    summary = characterize.sweep_summary(profiles)
    if args.format == "csv":
        print(",".join(CSV_COLUMNS))
        for prof in profiles:
            row = _profile_csv_row(prof)
            print(",".join(str(row[c]) for c in CSV_COLUMNS))
        print(json.dumps({"summary": summary}), file=sys.stderr)
    else:
        results = {"profiles": [prof.to_dict() for prof in profiles], "summary": summary}
        _emit(
            "sweep",
            {
                "min": args.min,
                "max": args.max,
                "jobs": args.jobs,
                "oracle_cap": args.oracle_cap,
                "format": args.format,
                "seed": args.seed,
            },
            results,
            started,
        )
    return EXIT_OK if summary["disagreements"] == 0 else EXIT_DISAGREEMENT


def _cmd_factor(args) -> int:
    started = time.perf_counter()
    try:
        p = _parse_odd_prime(args.p)
    except ValueError as exc:
        return _fail(str(exc))
    fact = cyclotomic.factor_x_p_minus_1(p, seed=args.seed)
    results = {
        "p": p,
        "order_of_two": numtheory.mult_order(2, p),
        "factor_count": len(fact.factors),
        "degrees": list(fact.degrees),
        "factors": [
            {
                "bits": cyclotomic.poly_to_bitstring(f),
                "hex": cyclotomic.poly_to_hex(f),
                "degree": cyclotomic.poly_degree(f),
            }
            for f in fact.factors
        ],
        "profile_ok": cyclotomic.verify_factor_profile(fact),
    }
    _emit("factor", {"p": p, "seed": args.seed}, results, started)
    return EXIT_OK


def _cmd_units(args) -> int:
    started = time.perf_counter()
    try:
        p = _parse_odd_prime(args.p)
    except ValueError as exc:
        return _fail(str(exc))
    results = {
        "p": p,
        "ord2": numtheory.mult_order(2, p),
        "two_rooted": numtheory.is_two_rooted(p),
        "unit_count": galgebra.unit_count(p),
        "order_p_unit_count": galgebra.order_p_unit_count(p),
        "bound": (1 << (p - 1)) - 1,
    }
    if p <= args.oracle_cap:
        n_units, n_order_p, _ = galgebra.unit_order_census(p, args.oracle_cap)
        results["oracle"] = {"unit_count": n_units, "order_p_unit_count": n_order_p}
    _emit("units", {"p": p, "oracle_cap": args.oracle_cap, "seed": args.seed}, results, started)
    return EXIT_OK


def _cmd_matchings(args) -> int:
    started = time.perf_counter()
    try:
        p = _parse_odd_prime(args.p)
        column = galgebra.from_bitstring(p, args.column).bits
    except ValueError as exc:
        return _fail(str(exc))
    graph = bigraph.from_first_column(p, column)
    results = {
        "p": p,
        "column": circulant.CirculantMatrix(p, column).to_bitstring(),
        "degree": bigraph.degree(graph),
        "complete_bipartite": bigraph.is_complete_bipartite(graph),
        "matching_parity": bigraph.matching_parity(graph),
        "pseudopath_delta_at_p": bigraph.pseudopath_parity(graph, p).is_identity_pattern,
    }
    if p <= bigraph.RYSER_CAP:
        dense = circulant.materialize(graph.biadjacency)
        permanent = bigraph.exact_permanent(dense, method="both" if p <= bigraph.PERMSUM_CAP else "ryser")
        results["perfect_matchings"] = permanent
        results["permanent_parity_consistent"] = permanent % 2 == results["matching_parity"]
    _emit("matchings", {"p": p, "column": args.column, "seed": args.seed}, results, started)
    return EXIT_OK


def _cmd_delta(args) -> int:
    started = time.perf_counter()
    try:
        group = _parse_group(args.group)
    except ValueError as exc:
        return _fail(str(exc))
    n, r = group
    verdict = delta_rings.is_delta_n_ring(args.field, group, args.delta, budget=args.budget)
    strict = verdict and delta_rings.is_strict_delta_n(args.field, group, args.delta, budget=args.budget)
    results = {
        "field": args.field,
        "group": f"C{n}^{r}" if n > 1 else "trivial",
        "delta": args.delta,
        "elements": args.field ** (n**r),
        "is_delta_ring": verdict,
        "strict": strict,
    }
    _emit(
        "delta",
        {"field": args.field, "group": args.group, "delta": args.delta, "budget": args.budget, "seed": args.seed},
        results,
        started,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mersroot",
        description="Cross-checked characterizations of Mersenne and 2-rooted primes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, default=0, help="seed for the factorization splitter (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", help="evaluate every statement at one prime")
    classify.add_argument("p")
    classify.add_argument("--oracle-cap", type=int, default=_oracle_cap_default())
    classify.set_defaults(func=_cmd_classify)

    sweep = sub.add_parser("sweep", help="profile every prime in a range")
    sweep.add_argument("--min", type=int, required=True)
    sweep.add_argument("--max", type=int, required=True)
    sweep.add_argument("--jobs", type=int, default=os.cpu_count())
    sweep.add_argument("--format", choices=("json", "csv"), default="json")
    sweep.add_argument("--oracle-cap", type=int, default=_oracle_cap_default())
    sweep.set_defaults(func=_cmd_sweep)

    factor = sub.add_parser("factor", help="factor x**p + 1 over GF(2)")
    factor.add_argument("p")
    factor.set_defaults(func=_cmd_factor)

    units = sub.add_parser("units", help="unit counts of GF(2)[C_p]")
    units.add_argument("p")
    units.add_argument("--oracle-cap", type=int, default=_oracle_cap_default())
    units.set_defaults(func=_cmd_units)

    matchings = sub.add_parser("matchings", help="matching parity and permanents of a circulant graph")
    matchings.add_argument("p")
    matchings.add_argument("--column", default="111", help="first-column bitstring, little-endian (default 111)")
    matchings.set_defaults(func=_cmd_matchings)

    delta = sub.add_parser("delta", help="unit power law on a small group algebra")
    delta.add_argument("--field", type=int, required=True)
    delta.add_argument("--group", required=True, help='group shape, e.g. "C2^2", "C7", "trivial"')
    delta.add_argument("--delta", type=int, required=True)
    delta.add_argument("--budget", type=int, default=_delta_budget_default())
    delta.set_defaults(func=_cmd_delta)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        return _fail(str(exc))
    except MersrootError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
