"""Homogenized point configuration and its explicit binomial rewrite family.

The configuration matrix has one column per lattice point, lifted to
height 1.  Ring variables follow the column order: z_1..z_{r1+3} for the
a-block, then y_1..y_d for the b-block, so n = r1 + d + 3 variables in
total.  A binomial lead - tail is a valid relation exactly when both
sides push forward to the same exponent vector under the configuration
matrix; we call that pi-balance and enforce it at construction time.

The rewrite family consists of five groups:

  eq1  z_i z_j - z_k z_l           for (i, j) in the pair set B
  eq2  z_{k+1} y_1..y_{r1-1} - z_{r1+1}^{r1-k} z_{r1+3}^k
  eq3  z_{r1-k} y_{r1}..y_d - z_{r1}^k z_{r1+2}^{x1+1-k}   (k <= x1+1)
  eq3* same leads, with the tail support sliding down the a-block for
       k > x1 + 1 (only possible when x1 < r1 - 2)
  eq4  z_{r1+2} y_1..y_{r1-1} - z_{r1+3}^{r1}
  eq5  z_{r1+1} y_{r1}..y_d - z_{r1+2}^{x1} z_{r1+3}

The pair set B excludes the single pair (r1, r1+2): the companion rule
would emit z_{r1} z_{r1+2} - z_{r1} z_{r1+1}, which is not pi-balanced.
That pair is kept available separately so the failure stays pinned by a
regression test.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InternalConsistency,
    InvalidPair,
)
from .simplex import PointConfiguration, QVector, lattice_points_formula


class Monomial:
    """Exponent vector over the n ring variables (z-block then y-block)."""

    __slots__ = ("exponents",)

    def __init__(self, exponents):
        exps = tuple(exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        self.exponents = exps

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Monomial":
        return cls(tuple(1 if i == index else 0 for i in range(nvars)))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def _check_compatible(self, other: "Monomial") -> None:
        if len(self.exponents) != len(other.exponents):
            raise DimensionMismatch(
                f"monomials over {len(self.exponents)} and "
                f"{len(other.exponents)} variables"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check_compatible(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_compatible(other)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def quotient(self, other: "Monomial") -> "Monomial":
        """Exact division; raises ValueError if ``other`` does not divide."""
        self._check_compatible(other)
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_compatible(other)
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


class Binomial:
    """Oriented binomial lead - tail over a common variable set."""

    __slots__ = ("lead", "tail")

    def __init__(self, lead: Monomial, tail: Monomial):
        if lead.nvars != tail.nvars:
            raise DimensionMismatch("lead and tail over different variable sets")
        if lead == tail:
            raise ValueError("lead and tail must differ")
        if lead.degree != tail.degree:
            raise ValueError("binomial must be homogeneous")
        self.lead = lead
        self.tail = tail

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Binomial)
            and self.lead == other.lead
            and self.tail == other.tail
        )

    def __hash__(self) -> int:
        return hash((self.lead, self.tail))

    def __repr__(self) -> str:
        return f"Binomial({self.lead!r}, {self.tail!r})"


# -- variable bookkeeping ---------------------------------------------------

def z_index(i: int) -> int:
    """0-based position of z_i (1 <= i <= r1+3)."""
    return i - 1


def y_index(r1: int, j: int) -> int:
    """0-based position of y_j (1 <= j <= d)."""
    return r1 + 2 + j


def total_vars(q: QVector) -> int:
    return q.r1 + q.d + 3


def var_name(index: int, r1: int) -> str:
    if index < r1 + 3:
        return f"z{index + 1}"
    return f"y{index - r1 - 2}"


def monomial_text(m: Monomial, r1: int) -> str:
    parts = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            parts.append(var_name(i, r1))
        elif e > 1:
            parts.append(f"{var_name(i, r1)}^{e}")
    return "*".join(parts) if parts else "1"


def binomial_text(b: Binomial, r1: int) -> str:
    return f"{monomial_text(b.lead, r1)} - {monomial_text(b.tail, r1)}"


def zsupport(m: Monomial, r1: int) -> frozenset[int]:
    """1-based z-indices with positive exponent."""
    return frozenset(
        i + 1 for i in range(r1 + 3) if m.exponents[i] > 0
    )


# -- the configuration matrix ------------------------------------------------

def homogenize(cfg: PointConfiguration) -> tuple[tuple[int, ...], ...]:
    """Columns of the configuration, each lifted to height 1."""
    return cfg.homogenized


def pi_image(columns: tuple[tuple[int, ...], ...], m: Monomial) -> tuple[int, ...]:
    """Push a monomial forward: the matrix-vector product of the column
    matrix with the exponent vector."""
    if len(columns) != m.nvars:
        raise DimensionMismatch(
            f"monomial has {m.nvars} variables, configuration has {len(columns)}"
        )
    height = len(columns[0])
    acc = [0] * height
    for col, e in zip(columns, m.exponents):
        if e:
            for t in range(height):
                acc[t] += e * col[t]
    return tuple(acc)


def is_toric_member(columns: tuple[tuple[int, ...], ...], b: Binomial) -> bool:
    """True iff the binomial is pi-balanced (hence a valid relation)."""
    return b.lead.degree == b.tail.degree and pi_image(columns, b.lead) == pi_image(
        columns, b.tail
    )


# -- the pair set B and its companions ----------------------------------------

def excluded_pair(r1: int) -> tuple[int, int]:
    """The one pair the raw side conditions admit but B rejects."""
    return (r1, r1 + 2)


@lru_cache(maxsize=None)
def build_B(r1: int) -> tuple[tuple[int, int], ...]:
    """All pairs (i, j) with j - i >= 2, 1 <= i <= r1, j <= r1 + 3 and
    j != r1 + 1, minus the excluded pair (r1, r1 + 2)."""
    if r1 < 2:
        raise InvalidPair(f"need r1 >= 2, got {r1}")
    pairs = []
    for i in range(1, r1 + 1):
        for j in range(i + 2, r1 + 4):
            if j == r1 + 1 or (i, j) == excluded_pair(r1):
                continue
            pairs.append((i, j))
    return tuple(pairs)


def _companion_rule(i: int, j: int, r1: int) -> tuple[int, int]:
    if j < r1 + 1:
        s = i + j
    elif j == r1 + 2:
        s = i + j - 1
    else:  # j == r1 + 3
        return (i + 1, r1 + 1) if i != r1 else (r1 + 1, r1 + 2)
    return (s // 2, s - s // 2)


def companion(i: int, j: int, r1: int) -> tuple[int, int]:
    """The rewrite partner (k, l) of a pair (i, j) in B.

    Raises InvalidPair when (i, j) is not a member of B.
    """
    if (i, j) not in build_B(r1):
        raise InvalidPair(f"({i}, {j}) is not in the pair set for r1={r1}")
    return _companion_rule(i, j, r1)


def excluded_pair_binomial(q: QVector) -> Binomial:
    """The binomial the companion rule would emit for the excluded pair.

    It is z_{r1} z_{r1+2} - z_{r1} z_{r1+1}, which fails pi-balance;
    kept constructible so the exclusion stays pinned by tests.
    """
    r1 = q.r1
    n = total_vars(q)
    i, j = excluded_pair(r1)
    k, l = _companion_rule(i, j, r1)
    lead = Monomial.variable(z_index(i), n) * Monomial.variable(z_index(j), n)
    tail = Monomial.variable(z_index(k), n) * Monomial.variable(z_index(l), n)
    return Binomial(lead, tail)


# -- generator constructors ----------------------------------------------------

def _check_k(k: int, upper: int) -> None:
    if not 0 <= k <= upper:
        raise IndexOutOfRange(f"k must lie in [0, {upper}], got {k}")


def eq1_binomial(q: QVector, i: int, j: int) -> Binomial:
    """z_i z_j - z_k z_l for a pair (i, j) in B."""
    n = total_vars(q)
    k, l = companion(i, j, q.r1)
    lead = Monomial.variable(z_index(i), n) * Monomial.variable(z_index(j), n)
    tail = Monomial.variable(z_index(k), n) * Monomial.variable(z_index(l), n)
    return Binomial(lead, tail)


def _head_y_block(q: QVector) -> list[int]:
    """Exponent template for y_1 .. y_{r1-1}."""
    exps = [0] * total_vars(q)
    for j in range(1, q.r1):
        exps[y_index(q.r1, j)] = 1
    return exps


def _tail_y_block(q: QVector) -> list[int]:
    """Exponent template for y_{r1} .. y_d."""
    exps = [0] * total_vars(q)
    for j in range(q.r1, q.d + 1):
        exps[y_index(q.r1, j)] = 1
    return exps


def eq2_binomial(q: QVector, k: int) -> Binomial:
    """z_{k+1} y_1..y_{r1-1} - z_{r1+1}^{r1-k} z_{r1+3}^k, 0 <= k <= r1-1."""
    _check_k(k, q.r1 - 1)
    r1, n = q.r1, total_vars(q)
    lead = _head_y_block(q)
    lead[z_index(k + 1)] = 1
    tail = [0] * n
    tail[z_index(r1 + 1)] = r1 - k
    tail[z_index(r1 + 3)] = k
    return Binomial(Monomial(lead), Monomial(tail))


def eq3_lead(q: QVector, k: int) -> Monomial:
    """Shared lead z_{r1-k} y_{r1}..y_d of the k-th eq3/eq3* binomial."""
    _check_k(k, q.r1 - 1)
    lead = _tail_y_block(q)
    lead[z_index(q.r1 - k)] = 1
    return Monomial(lead)


def eq3_binomial(q: QVector, k: int) -> Binomial:
    """z_{r1-k} y_{r1}..y_d - z_{r1}^k z_{r1+2}^{x1+1-k}.

    Only defined for k <= x1 + 1; beyond that the z_{r1+2} exponent
    would go negative and the eq3* tail takes over.
    """
    _check_k(k, q.r1 - 1)
    if k > q.x1 + 1:
        raise IndexOutOfRange(
            f"k={k} exceeds x1+1={q.x1 + 1}; use the sliding-tail variant"
        )
    tail = [0] * total_vars(q)
    tail[z_index(q.r1)] = k
    tail[z_index(q.r1 + 2)] = q.x1 + 1 - k
    return Binomial(eq3_lead(q, k), Monomial(tail))


def eq3star_binomial(q: QVector, k: int) -> Binomial:
    """Same lead as eq3; tail support slides down the a-block as k grows.

    For k <= x1 + 1 the tail agrees with eq3.  For larger k, write
    k = s*(x1+1) + a with 1 <= a <= x1 + 1; the tail is
    z_{r1-s}^a z_{r1-s+1}^{x1+1-a}, the unique degree-(x1+1) monomial on
    two adjacent a-columns with the required pushforward.  (For
    k <= 2*x1 + 2 this is the two-variable tail on z_{r1-1}, z_{r1};
    deeper k keeps sliding, one a-column per x1+1 steps.)
    """
    _check_k(k, q.r1 - 1)
    if k <= q.x1 + 1:
        return eq3_binomial(q, k)
    tail = [0] * total_vars(q)
    s = (k - 1) // (q.x1 + 1)
    a = k - s * (q.x1 + 1)
    tail[z_index(q.r1 - s)] = a
    tail[z_index(q.r1 - s + 1)] += q.x1 + 1 - a
    return Binomial(eq3_lead(q, k), Monomial(tail))


def eq4_binomial(q: QVector) -> Binomial:
    """z_{r1+2} y_1..y_{r1-1} - z_{r1+3}^{r1}."""
    r1, n = q.r1, total_vars(q)
    lead = _head_y_block(q)
    lead[z_index(r1 + 2)] = 1
    tail = [0] * n
    tail[z_index(r1 + 3)] = r1
    return Binomial(Monomial(lead), Monomial(tail))


def eq5_binomial(q: QVector) -> Binomial:
    """z_{r1+1} y_{r1}..y_d - z_{r1+2}^{x1} z_{r1+3}."""
    r1, n = q.r1, total_vars(q)
    lead = _tail_y_block(q)
    lead[z_index(r1 + 1)] = 1
    tail = [0] * n
    tail[z_index(r1 + 2)] = q.x1
    tail[z_index(r1 + 3)] = 1
    return Binomial(Monomial(lead), Monomial(tail))


# -- the assembled family -------------------------------------------------------

@dataclass(frozen=True)
class GroebnerFamily:
    """The full rewrite family for one parameter point, with provenance.

    ``tags[i]`` records which group generator i came from; ``b_pairs``
    lists each eq1 pair with its companion.  Generators are pi-balanced
    and lex-oriented (lead > tail) by construction.
    """

    q: QVector
    columns: tuple[tuple[int, ...], ...]
    generators: tuple[Binomial, ...]
    tags: tuple[str, ...]
    b_pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def nvars(self) -> int:
        return len(self.columns)

    def leads(self) -> tuple[Monomial, ...]:
        return tuple(g.lead for g in self.generators)


def pi_balance_failures(family: GroebnerFamily) -> tuple[int, ...]:
    """Indices of generators that are not pi-balanced (empty when sound)."""
    return tuple(
        i
        for i, g in enumerate(family.generators)
        if not is_toric_member(family.columns, g)
    )


@lru_cache(maxsize=None)
def groebner_family(q: QVector) -> GroebnerFamily:
    """Construct the family and audit every generator.

    Raises InternalConsistency if any emitted binomial fails pi-balance
    or is not lex-oriented; either would mean a transcription bug, never
    a data-dependent condition.
    """
    r1, x1 = q.r1, q.x1
    columns = homogenize(lattice_points_formula(q))
    gens: list[Binomial] = []
    tags: list[str] = []

    pairs = build_B(r1)
    b_pairs = tuple(((i, j), companion(i, j, r1)) for i, j in pairs)
    for i, j in pairs:
        gens.append(eq1_binomial(q, i, j))
        tags.append("eq1")
    for k in range(r1):
        gens.append(eq2_binomial(q, k))
        tags.append("eq2")
    deep = x1 < r1 - 2
    for k in range(r1):
        gens.append(eq3star_binomial(q, k) if deep else eq3_binomial(q, k))
        tags.append("eq3star" if deep else "eq3")
    gens.append(eq4_binomial(q))
    tags.append("eq4")
    gens.append(eq5_binomial(q))
    tags.append("eq5")

    for idx, g in enumerate(gens):
        if not is_toric_member(columns, g):
            raise InternalConsistency(
                f"generator {idx} ({tags[idx]}) {binomial_text(g, r1)} "
                f"is not pi-balanced"
            )
        if not g.lead.exponents > g.tail.exponents:
            raise InternalConsistency(
                f"generator {idx} ({tags[idx]}) is not lex-oriented"
            )

    return GroebnerFamily(
        q=q,
        columns=columns,
        generators=tuple(gens),
        tags=tuple(tags),
        b_pairs=b_pairs,
    )


def with_generators(
    family: GroebnerFamily, generators: tuple[Binomial, ...], tags: tuple[str, ...]
) -> GroebnerFamily:
    """Copy of the family with a different generator list (no audit).

    Exists for sabotage-style tests; regular construction always goes
    through ``groebner_family``.
    """
    return replace(family, generators=generators, tags=tags)


def mutate_tail(family: GroebnerFamily, index: int) -> GroebnerFamily:
    """Sabotage hook: shift one unit of exponent in generator ``index``'s
    tail to the cyclically next variable.  Degree is preserved but the
    pushforward changes (columns are pairwise distinct), so the mutated
    family must fail the pi-balance audit."""
    if not 0 <= index < len(family.generators):
        raise IndexOutOfRange(
            f"generator index must lie in [0, {len(family.generators) - 1}]"
        )
    victim = family.generators[index]
    exps = list(victim.tail.exponents)
    src = next(i for i, e in enumerate(exps) if e > 0)
    dst = (src + 1) % len(exps)
    exps[src] -= 1
    exps[dst] += 1
    mutated = Binomial(victim.lead, Monomial(exps))
    gens = list(family.generators)
    gens[index] = mutated
    return with_generators(family, tuple(gens), family.tags)


def include_excluded_pair(family: GroebnerFamily) -> GroebnerFamily:
    """Sabotage hook: append the excluded pair's literal binomial."""
    bad = excluded_pair_binomial(family.q)
    return with_generators(
        family,
        family.generators + (bad,),
        family.tags + ("eq1",),
    )
