"""Lex order, binomial rewriting, and the certificate checks.

Everything here works on exponent tuples with coefficients +-1, which is
all a binomial rewrite family needs: S-pair remainders of binomials stay
binomials, so "reduces to zero" becomes "both sides have the same normal
form".  The checks stack up as follows: a pi-balance audit shows every
generator is a valid relation; an all-pairs S-pair run certifies the
family is a Groebner basis of the ideal it generates; counting standard
monomials per degree against the dilation polynomial, with pairwise
distinct pushforwards, upgrades that to the full relation ideal at the
audited degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InternalConsistency,
    ParameterOutOfRange,
)
from .ehrhart import ehrhart_value, hstar
from .simplex import QVector, resolve_enum_budget
from .toric import (
    Binomial,
    GroebnerFamily,
    Monomial,
    pi_image,
    zsupport,
)

LESS, EQUAL, GREATER = -1, 0, 1

#: Hard cap on rewrite steps for a single monomial; hitting it means a
#: mis-oriented generator slipped past construction.
_MAX_REWRITE_STEPS = 100_000


@dataclass(frozen=True)
class TermOrder:
    """Pure lex order given by a significance ranking of the variables.

    ``ranks[0]`` is the most significant variable index.  The family
    always uses the identity ranking (z_1 > ... > z_{r1+3} > y_1 > ... >
    y_d matches the column order), but permuted rankings are supported
    for order-sensitivity tests.
    """

    ranks: tuple[int, ...]

    @classmethod
    def lex_default(cls, nvars: int) -> "TermOrder":
        return cls(tuple(range(nvars)))


def lex_cmp(m1: Monomial, m2: Monomial, order: TermOrder | None = None) -> int:
    """Compare in pure lex; returns LESS, EQUAL or GREATER."""
    a, b = m1.exponents, m2.exponents
    if len(a) != len(b):
        raise DimensionMismatch("monomials over different variable counts")
    if order is not None:
        a = tuple(a[i] for i in order.ranks)
        b = tuple(b[i] for i in order.ranks)
    return (a > b) - (a < b)


@lru_cache(maxsize=64)
def _prepared(family: GroebnerFamily):
    """Generators as raw tuples, lex-largest lead first, with support
    masks for fast divisibility rejection."""
    entries = []
    for g in family.generators:
        le, te = g.lead.exponents, g.tail.exponents
        mask = 0
        support = []
        for i, e in enumerate(le):
            if e:
                mask |= 1 << i
                support.append(i)
        entries.append((le, te, mask, tuple(support)))
    entries.sort(key=lambda ent: ent[0], reverse=True)
    return tuple(entries)


def _reduce_tuple(exps: tuple[int, ...], prepared) -> tuple[int, ...]:
    steps = 0
    while True:
        mask = 0
        for i, e in enumerate(exps):
            if e:
                mask |= 1 << i
        for le, te, lmask, support in prepared:
            if lmask & ~mask:
                continue
            if all(exps[i] >= le[i] for i in support):
                exps = tuple(e - a + b for e, a, b in zip(exps, le, te))
                break
        else:
            return exps
        steps += 1
        if steps > _MAX_REWRITE_STEPS:
            raise InternalConsistency(
                "rewrite did not terminate; a generator must be mis-oriented"
            )


def normal_form(m: Monomial, family: GroebnerFamily) -> Monomial:
    """Fully rewrite a monomial: while some generator's lead divides it,
    swap that lead for the tail.  The applicable generator with the
    lex-largest lead is used at every step (construction order breaks
    ties), so results are reproducible; each step strictly decreases the
    monomial in lex, so the loop terminates."""
    return Monomial(_reduce_tuple(m.exponents, _prepared(family)))


def is_standard(m: Monomial, family: GroebnerFamily) -> bool:
    """True when no generator's lead divides m."""
    return all(not g.lead.divides(m) for g in family.generators)


def s_polynomial(g1: Binomial, g2: Binomial) -> Binomial | None:
    """The S-pair binomial, lex-oriented, or None when it cancels.

    Cross-multiplying the tails up to the lead lcm keeps everything a
    difference of two monomials; if the two products coincide the S-pair
    is identically zero.
    """
    if g1 == g2:
        return None
    l1, l2 = g1.lead.exponents, g2.lead.exponents
    lcm = tuple(max(a, b) for a, b in zip(l1, l2))
    p1 = tuple(c - a + b for c, a, b in zip(lcm, l1, g1.tail.exponents))
    p2 = tuple(c - a + b for c, a, b in zip(lcm, l2, g2.tail.exponents))
    if p1 == p2:
        return None
    if p1 > p2:
        return Binomial(Monomial(p1), Monomial(p2))
    return Binomial(Monomial(p2), Monomial(p1))


@dataclass(frozen=True)
class BuchbergerReport:
    """Outcome of the all-pairs S-pair reduction."""

    pairs_total: int
    pairs_reduced_to_zero: int
    failures: tuple[tuple[int, int], ...]
    passed: bool


def buchberger_verify(
    family: GroebnerFamily, skip_coprime: bool = False
) -> BuchbergerReport:
    """Reduce every S-pair and report.

    PASS certifies the family is a Groebner basis of the ideal it
    generates.  ``skip_coprime`` enables the coprime-lead shortcut;
    verification runs reduce all pairs, which is the default.
    """
    prepared = _prepared(family)
    gens = family.generators
    total = 0
    zero = 0
    failures: list[tuple[int, int]] = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            total += 1
            if skip_coprime:
                li, lj = gens[i].lead.exponents, gens[j].lead.exponents
                if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                    zero += 1
                    continue
            s = s_polynomial(gens[i], gens[j])
            if s is None:
                zero += 1
                continue
            nf1 = _reduce_tuple(s.lead.exponents, prepared)
            nf2 = _reduce_tuple(s.tail.exponents, prepared)
            if nf1 == nf2:
                zero += 1
            else:
                failures.append((i, j))
    return BuchbergerReport(
        pairs_total=total,
        pairs_reduced_to_zero=zero,
        failures=tuple(failures),
        passed=not failures,
    )


@dataclass(frozen=True)
class InitialIdeal:
    """Inclusion-minimal lead monomials of the family."""

    generators: tuple[Monomial, ...]
    squarefree: bool


def initial_ideal(family: GroebnerFamily) -> InitialIdeal:
    """Collect the lead monomials and drop the non-minimal ones."""
    leads = {g.lead.exponents for g in family.generators}
    monos = [Monomial(e) for e in leads]
    minimal = [
        m
        for m in monos
        if not any(other != m and other.divides(m) for other in monos)
    ]
    minimal.sort(key=lambda m: m.exponents, reverse=True)
    return InitialIdeal(
        generators=tuple(minimal),
        squarefree=all(m.is_squarefree() for m in minimal),
    )


def standard_monomials(
    family: GroebnerFamily, degree: int, budget: int | None = None
) -> list[Monomial]:
    """All monomials of the given total degree divisible by no lead.

    The candidate count C(n + degree - 1, degree) is checked against the
    enumeration budget up front.
    """
    if degree < 0:
        raise ParameterOutOfRange(f"degree must be >= 0, got {degree}")
    n = family.nvars
    candidates = comb(n + degree - 1, degree)
    limit = resolve_enum_budget(budget)
    if candidates > limit:
        raise BudgetExceeded(
            f"{candidates} degree-{degree} monomials exceed the budget {limit}"
        )
    min_leads = initial_ideal(family).generators
    lead_data = [
        (m.exponents, tuple(i for i, e in enumerate(m.exponents) if e))
        for m in min_leads
    ]
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for v in combo:
            exps[v] += 1
        for le, support in lead_data:
            if all(exps[i] >= le[i] for i in support):
                break
        else:
            out.append(Monomial(exps))
    return out


def injectivity_check(
    family: GroebnerFamily,
    columns: tuple[tuple[int, ...], ...] | None = None,
    max_degree: int = 3,
    budget: int | None = None,
) -> bool:
    """Bounded-degree completeness check.

    For every degree t <= max_degree the standard monomials must have
    pairwise distinct pushforwards AND their count must equal the
    dilation polynomial at t.  The count equality is what ties the
    family to the full relation ideal: it says no relation at that
    degree is missing.
    """
    if columns is None:
        columns = family.columns
    h = hstar(family.q)
    for t in range(1, max_degree + 1):
        std = standard_monomials(family, t, budget)
        if len(std) != ehrhart_value(h, t):
            return False
        images = set()
        for m in std:
            img = pi_image(columns, m)
            if img in images:
                return False
            images.add(img)
    return True


class SupportCase(Enum):
    """Shape classes for the z-support of a standard monomial.

    EMPTY: no z-variable occurs.  CASE1: minimal z-index m <= r1 - 1 and
    support within {m, m+1, r1+1}.  CASE2: m = r1 and support within
    {r1, r1+1, r1+2}.  CASE3: m >= r1 + 1 (support then automatically
    sits inside {r1+1, r1+2, r1+3}).  VIOLATION: none of the above.
    """

    EMPTY = 0
    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    VIOLATION = -1


@dataclass(frozen=True)
class ZSupportShape:
    case: SupportCase
    zsupport: frozenset[int]


def zsupport_shape(m: Monomial, q: QVector) -> ZSupportShape:
    """Classify the z-support of a monomial (meaningful for standard ones).

    Every standard monomial with nonempty z-support must land in exactly
    one of the three cases; VIOLATION never occurs for them, and the
    sweep tests assert exactly that.
    """
    supp = zsupport(m, q.r1)
    if not supp:
        return ZSupportShape(SupportCase.EMPTY, supp)
    mn = min(supp)
    r1 = q.r1
    if mn <= r1 - 1:
        case = (
            SupportCase.CASE1
            if supp <= {mn, mn + 1, r1 + 1}
            else SupportCase.VIOLATION
        )
    elif mn == r1:
        case = (
            SupportCase.CASE2
            if supp <= {r1, r1 + 1, r1 + 2}
            else SupportCase.VIOLATION
        )
    else:
        case = SupportCase.CASE3
    return ZSupportShape(case, supp)
