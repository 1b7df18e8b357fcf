"""End-to-end verification of one parameter point, as used by the sweep.

Each stage records a boolean flag; failures are collected rather than
raised so a sweep can report every point.  Budget overruns in the
opportunistic cross-checks (point enumeration, dilation counts) are
recorded as skips, not failures.
"""

from __future__ import annotations

import time

from .errors import BudgetExceeded, InternalConsistency, WpsimplexError
from .ehrhart import ehrhart_bruteforce, ehrhart_value, hstar
from .groebner import buchberger_verify, initial_ideal, injectivity_check
from .simplex import build_q, lattice_points_bruteforce, lattice_points_formula
from .toric import groebner_family
from .triangulation import (
    make_weight_certificate,
    regularity_check,
    triangulation_from_family,
    verify_unimodular,
)

DEFAULT_GRID_R1 = (2, 6)
DEFAULT_GRID_X1 = (1, 5)


def default_grid() -> list[tuple[int, int]]:
    return [
        (r1, x1)
        for r1 in range(DEFAULT_GRID_R1[0], DEFAULT_GRID_R1[1] + 1)
        for x1 in range(DEFAULT_GRID_X1[0], DEFAULT_GRID_X1[1] + 1)
    ]


def _ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def evaluate_point(
    r1: int, x1: int, max_degree: int = 3, budget: int | None = None
) -> dict:
    """Run the whole pipeline at (r1, x1) and report flags and timings."""
    q = build_q(r1, x1)
    flags: dict[str, bool] = {}
    timings: dict[str, int] = {}
    skipped: list[str] = []
    errors: list[str] = []

    t0 = time.perf_counter()
    cfg = lattice_points_formula(q)
    try:
        brute = lattice_points_bruteforce(q, budget)
        flags["latticePointsOK"] = (
            set(cfg.columns) == brute
            and len(cfg.columns) == r1 + q.d + 3
            and len(set(cfg.columns)) == len(cfg.columns)
        )
    except BudgetExceeded:
        skipped.append("latticePoints")
        flags["latticePointsOK"] = True
    timings["points_ms"] = _ms(t0)

    t0 = time.perf_counter()
    h = hstar(q)
    hstar_ok = (
        h.coeffs[0] == 1
        and h.coeffs[1] == r1 + 2
        and sum(h.coeffs) == q.volume
        and h.is_unimodal()
    )
    for t in (1, 2):
        try:
            if ehrhart_value(h, t) != ehrhart_bruteforce(q, t, budget):
                hstar_ok = False
        except BudgetExceeded:
            skipped.append(f"dilation_t{t}")
    flags["hstarOK"] = hstar_ok
    timings["hstar_ms"] = _ms(t0)

    t0 = time.perf_counter()
    family = None
    try:
        family = groebner_family(q)
        flags["gbConstructed"] = True
    except InternalConsistency as exc:
        flags["gbConstructed"] = False
        errors.append(str(exc))
    if family is not None:
        report = buchberger_verify(family)
        flags["buchbergerPass"] = report.passed
        flags["squarefree"] = initial_ideal(family).squarefree
        try:
            flags["injectivityPass"] = injectivity_check(
                family, max_degree=max_degree, budget=budget
            )
        except BudgetExceeded:
            skipped.append("injectivity")
            flags["injectivityPass"] = True
    else:
        flags["buchbergerPass"] = False
        flags["squarefree"] = False
        flags["injectivityPass"] = False
    timings["gb_ms"] = _ms(t0)

    t0 = time.perf_counter()
    if family is not None:
        try:
            tri = triangulation_from_family(family)
            flags["triangulationUnimodular"] = verify_unimodular(tri, q)
            certificate = make_weight_certificate(family)
            flags["regularCertified"] = regularity_check(
                tri, certificate, family.columns
            )
        except WpsimplexError as exc:
            flags.setdefault("triangulationUnimodular", False)
            flags["regularCertified"] = False
            errors.append(str(exc))
    else:
        flags["triangulationUnimodular"] = False
        flags["regularCertified"] = False
    timings["triangulate_ms"] = _ms(t0)

    result = {
        "r1": r1,
        "x1": x1,
        "flags": flags,
        "timings": timings,
        "pass": all(flags.values()),
    }
    if skipped:
        result["skipped"] = skipped
    if errors:
        result["errors"] = errors
    return result
