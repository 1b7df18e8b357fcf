"""Command-line front end.

Subcommands: points, hstar, gb (dump | verify), triangulate, sweep.
Exit codes are a stable contract: 0 pass, 1 usage or parameter error,
2 verification failure, 3 enumeration budget exceeded.  All JSON output
carries "schema": 1 and contains exact integers only, never floats.

The gb and triangulate verifiers expose sabotage switches
(--sabotage-tail, --include-excluded-pair, --drop-facet) that inject a
known defect and must drive the exit code to 2; they exist to prove the
verifiers have teeth.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .errors import (
    BudgetExceeded,
    InternalConsistency,
    ParameterOutOfRange,
    WpsimplexError,
)
from .ehrhart import ehrhart_bruteforce, ehrhart_value, hstar
from .groebner import buchberger_verify, initial_ideal, injectivity_check
from .pipeline import evaluate_point
from .simplex import build_q, lattice_points_bruteforce, lattice_points_formula
from .toric import (
    binomial_text,
    groebner_family,
    include_excluded_pair,
    mutate_tail,
    pi_balance_failures,
)
from .triangulation import (
    Triangulation,
    make_weight_certificate,
    regularity_check,
    triangulation_from_family,
    verify_unimodular,
)

EXIT_PASS = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we reserve 2
        raise _UsageError(message)


def _emit(payload: dict, json_path: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_range(spec: str) -> tuple[int, int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return int(lo), int(hi)
    value = int(spec)
    return value, value


def cmd_points(args) -> int:
    q = build_q(args.r1, args.x1)
    cfg = lattice_points_formula(q)
    payload = {"schema": 1, **cfg.to_json_dict()}
    code = EXIT_PASS
    if args.verify:
        try:
            brute = lattice_points_bruteforce(q)
        except BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        ok = (
            set(cfg.columns) == brute
            and len(cfg.columns) == q.r1 + q.d + 3
        )
        payload["verified"] = ok
        if not ok:
            code = EXIT_VERIFICATION
    _emit(payload, args.json)
    return code


def cmd_hstar(args) -> int:
    q = build_q(args.r1, args.x1)
    h = hstar(q)
    payload = {
        "schema": 1,
        "params": {"r1": q.r1, "x1": q.x1},
        "hstar": h.to_json_list(),
    }
    code = EXIT_PASS
    if args.verify:
        ok = (
            h.coeffs[0] == 1
            and h.coeffs[1] == q.r1 + 2
            and sum(h.coeffs) == q.volume
        )
        checked = []
        for t in (1, 2):
            try:
                if ehrhart_value(h, t) != ehrhart_bruteforce(q, t):
                    ok = False
                checked.append(t)
            except BudgetExceeded:
                continue  # opportunistic check; skip over budget
        payload["verified"] = ok
        payload["dilations_checked"] = checked
        if not ok:
            code = EXIT_VERIFICATION
    _emit(payload, args.json)
    return code


def _family_for_verify(args):
    family = groebner_family(build_q(args.r1, args.x1))
    if getattr(args, "sabotage_tail", None) is not None:
        family = mutate_tail(family, args.sabotage_tail)
    if getattr(args, "include_excluded_pair", False):
        family = include_excluded_pair(family)
    return family


def cmd_gb(args) -> int:
    q = build_q(args.r1, args.x1)
    if args.gb_command == "dump":
        family = groebner_family(q)
        payload = {
            "schema": 1,
            "params": {"r1": q.r1, "x1": q.x1},
            "num_generators": len(family.generators),
            "generators": [
                {
                    "tag": tag,
                    "text": binomial_text(g, q.r1),
                    "lead": list(g.lead.exponents),
                    "tail": list(g.tail.exponents),
                }
                for g, tag in zip(family.generators, family.tags)
            ],
            "b_pairs": [
                {"pair": list(pair), "companion": list(comp)}
                for pair, comp in family.b_pairs
            ],
        }
        _emit(payload, args.json)
        return EXIT_PASS

    # gb verify
    payload = {"schema": 1, "params": {"r1": q.r1, "x1": q.x1}}
    try:
        family = _family_for_verify(args)
    except InternalConsistency as exc:
        payload.update({"pass": False, "failure": {"stage": "construction",
                                                   "detail": str(exc)}})
        _emit(payload, args.json)
        return EXIT_VERIFICATION

    balance_failures = pi_balance_failures(family)
    payload["num_generators"] = len(family.generators)
    if balance_failures:
        payload.update(
            {
                "pass": False,
                "failure": {
                    "stage": "pi_balance",
                    "generators": list(balance_failures),
                },
            }
        )
        _emit(payload, args.json)
        return EXIT_VERIFICATION

    report = buchberger_verify(family)
    in_ideal = initial_ideal(family)
    try:
        injective = injectivity_check(family, max_degree=args.max_degree)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    payload.update(
        {
            "spairs_total": report.pairs_total,
            "spairs_reduced_to_zero": report.pairs_reduced_to_zero,
            "squarefree": in_ideal.squarefree,
            "injectivity_max_degree": args.max_degree,
            "pass": report.passed and in_ideal.squarefree and injective,
        }
    )
    if report.failures:
        payload["failure"] = {
            "stage": "buchberger",
            "pairs": [list(p) for p in report.failures],
        }
    elif not in_ideal.squarefree:
        payload["failure"] = {"stage": "squarefree"}
    elif not injective:
        payload["failure"] = {"stage": "injectivity"}
    _emit(payload, args.json)
    return EXIT_PASS if payload["pass"] else EXIT_VERIFICATION


def cmd_triangulate(args) -> int:
    q = build_q(args.r1, args.x1)
    payload = {"schema": 1, "params": {"r1": q.r1, "x1": q.x1}}
    try:
        family = groebner_family(q)
        tri = triangulation_from_family(family)
        if args.drop_facet is not None:
            if not 0 <= args.drop_facet < len(tri.facets):
                print(
                    f"error: facet index must lie in [0, {len(tri.facets) - 1}]",
                    file=sys.stderr,
                )
                return EXIT_USAGE
            kept = tuple(
                f for i, f in enumerate(tri.facets) if i != args.drop_facet
            )
            vols = tuple(
                v for i, v in enumerate(tri.volumes) if i != args.drop_facet
            )
            tri = Triangulation(facets=kept, volumes=vols)
        unimodular = verify_unimodular(tri, q)
        certificate = make_weight_certificate(family)
        regular = regularity_check(tri, certificate, family.columns)
    except WpsimplexError as exc:
        payload.update({"pass": False, "failure": str(exc)})
        _emit(payload, args.json)
        return EXIT_VERIFICATION

    payload.update(
        {
            "num_facets": len(tri.facets),
            "all_unimodular": all(v == 1 for v in tri.volumes),
            "volume_sum": sum(tri.volumes),
            "regular_certified": regular,
            "facets": [list(f) for f in tri.facets],
        }
    )
    ok = unimodular and regular
    payload["pass"] = ok

    if args.format == "off":
        cfg = lattice_points_formula(q)
        lines = ["OFF", f"{len(cfg.columns)} {len(tri.facets)} 0"]
        for col in cfg.columns:
            lines.append(" ".join(str(v) for v in col))
        for facet in tri.facets:
            lines.append(
                f"{len(facet)} " + " ".join(str(p - 1) for p in facet)
            )
        print("\n".join(lines))
    else:
        _emit(payload, args.json)
    return EXIT_PASS if ok else EXIT_VERIFICATION


def cmd_sweep(args) -> int:
    try:
        r1_lo, r1_hi = _parse_range(args.r1)
        x1_lo, x1_hi = _parse_range(args.x1)
    except ValueError as exc:
        print(f"error: bad range: {exc}", file=sys.stderr)
        return EXIT_USAGE
    grid = [
        (r1, x1)
        for r1 in range(r1_lo, r1_hi + 1)
        for x1 in range(x1_lo, x1_hi + 1)
    ]
    if not grid:
        print("error: empty sweep grid", file=sys.stderr)
        return EXIT_USAGE
    for r1, x1 in grid:
        if r1 < 2 or x1 < 1:
            print(
                f"error: grid point ({r1}, {x1}) outside r1 >= 2, x1 >= 1",
                file=sys.stderr,
            )
            return EXIT_USAGE

    t0 = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(
                pool.map(
                    evaluate_point,
                    [p[0] for p in grid],
                    [p[1] for p in grid],
                    [args.max_degree] * len(grid),
                )
            )
    else:
        results = []
        for r1, x1 in grid:
            result = evaluate_point(r1, x1, max_degree=args.max_degree)
            results.append(result)
            if args.fail_fast and not result["pass"]:
                break

    per_point = {
        f"{res['r1']},{res['x1']}": {
            **res["flags"],
            "timings": res["timings"],
            **({"skipped": res["skipped"]} if "skipped" in res else {}),
            **({"errors": res["errors"]} if "errors" in res else {}),
        }
        for res in results
    }
    overall = all(res["pass"] for res in results) and len(results) == len(grid)
    payload = {
        "schema": 1,
        "grid": [list(p) for p in grid],
        "perPoint": per_point,
        "overallPass": overall,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    _emit(payload, args.json)
    return EXIT_PASS if overall else EXIT_VERIFICATION


def build_parser() -> _Parser:
    parser = _Parser(prog="wpsimplex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_point_args(p):
        p.add_argument("r1", type=int)
        p.add_argument("x1", type=int)
        p.add_argument("--json", metavar="FILE", default=None,
                       help="write the JSON payload to FILE instead of stdout")

    p_points = sub.add_parser("points", help="lattice point list")
    add_point_args(p_points)
    p_points.add_argument("--verify", action="store_true",
                          help="cross-check against the brute-force enumerator")
    p_points.set_defaults(func=cmd_points)

    p_hstar = sub.add_parser("hstar", help="h*-vector")
    add_point_args(p_hstar)
    p_hstar.add_argument("--verify", action="store_true",
                         help="check sum, linear coefficient, and dilation counts")
    p_hstar.set_defaults(func=cmd_hstar)

    p_gb = sub.add_parser("gb", help="binomial rewrite family")
    gb_sub = p_gb.add_subparsers(dest="gb_command", required=True)
    p_dump = gb_sub.add_parser("dump", help="emit the generators")
    add_point_args(p_dump)
    p_dump.set_defaults(func=cmd_gb)
    p_verify = gb_sub.add_parser("verify", help="run the verification stack")
    add_point_args(p_verify)
    p_verify.add_argument("--max-degree", type=int, default=3,
                          help="injectivity check degree bound (default 3)")
    p_verify.add_argument("--sabotage-tail", type=int, default=None,
                          metavar="K", help="mutate generator K's tail")
    p_verify.add_argument("--include-excluded-pair", action="store_true",
                          help="append the excluded pair's literal binomial")
    p_verify.set_defaults(func=cmd_gb)

    p_tri = sub.add_parser("triangulate", help="facets, volumes, regularity")
    add_point_args(p_tri)
    p_tri.add_argument("--format", choices=("json", "off"), default="json")
    p_tri.add_argument("--drop-facet", type=int, default=None, metavar="K",
                       help="drop facet K before verification")
    p_tri.set_defaults(func=cmd_triangulate)

    p_sweep = sub.add_parser("sweep", help="full pipeline over a grid")
    p_sweep.add_argument("--r1", default="2..6", help="range, e.g. 2..6")
    p_sweep.add_argument("--x1", default="1..5", help="range, e.g. 1..5")
    p_sweep.add_argument("--max-degree", type=int, default=3)
    p_sweep.add_argument("--fail-fast", action="store_true")
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="worker processes (default 1)")
    p_sweep.add_argument("--json", metavar="FILE", default=None)
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParameterOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def entry() -> None:
    sys.exit(main())
