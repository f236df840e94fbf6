"""Exact subset sums of unit fractions ``sum_{s in I} 1/n_s``.

Subset sums are carried as integer numerators over the common denominator
``N = lcm(moduli)``: ``1/n_s`` is ``(N // n_s) / N``.  Floors, fractional
parts and equality tests are then integer ``divmod`` operations, and results
leave the module as reduced :class:`fractions.Fraction` values.

Two enumeration engines are provided.  ``"gray"`` walks all ``2^k`` subsets in
reflected Gray-code order with one addition or subtraction per step.
``"mitm"`` enumerates the two halves separately and joins them by residue
modulo ``N``; it is the default above :data:`GRAY_LIMIT` classes.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .core import (
    DEFAULT_TABLE_CAP,
    CoverSystem,
    _check_index,
    covering_table,
    is_exact_m_cover,
    irredundant_indices,
    is_period,
    minimal_period,
)
from .errors import (
    CapExceededError,
    CoverError,
    MinimumNotUniqueError,
    NotAPeriodError,
    NotExactCoverError,
    NotMCoverError,
    RedundantClassError,
)

DEFAULT_ENUM_CAP = 30
GRAY_LIMIT = 24


def gray_flips(k: int) -> Iterator[tuple[int, bool]]:
    """Steps of the reflected Gray code on ``k`` bits, starting from the empty set.

    Yields ``(bit, entering)`` for each of the ``2^k - 1`` transitions;
    ``entering`` is True when ``bit`` joins the current subset.
    """
    mask = 0
    for i in range(1, 1 << k):
        bit = (i & -i).bit_length() - 1
        mask ^= 1 << bit
        yield bit, bool(mask >> bit & 1)


def gray_sums(weights: list[int]) -> Iterator[int]:
    """Every subset sum of ``weights`` (with multiplicity), empty set first."""
    total = 0
    yield total
    for bit, entering in gray_flips(len(weights)):
        total += weights[bit] if entering else -weights[bit]
        yield total


def _sum_counter(weights: list[int]) -> Counter:
    return Counter(gray_sums(weights))


def _check_cap(k: int, cap: int):
    if k > cap:
        raise CapExceededError(f"too many classes: {k} exceeds enumeration cap {cap}")


def _pick_engine(k: int, engine: str | None) -> str:
    if engine is None:
        return "gray" if k <= GRAY_LIMIT else "mitm"
    if engine not in ("gray", "mitm"):
        raise CoverError(f"unknown engine {engine!r}")
    return engine


def _numerators(moduli: Iterable[int], N: int) -> list[int]:
    return [N // n for n in moduli]


def subset_sum_counts(moduli: list[int], engine: str | None = None,
                      cap: int = DEFAULT_ENUM_CAP) -> tuple[Counter, int]:
    """Multiset of subset sums as ``(Counter of numerators, N)``.

    ``N`` is the lcm of ``moduli`` (1 when empty); sum ``S`` means ``S / N``.
    """
    moduli = list(moduli)
    _check_cap(len(moduli), cap)
    N = math.lcm(*moduli) if moduli else 1
    weights = _numerators(moduli, N)
    if _pick_engine(len(weights), engine) == "gray":
        return _sum_counter(weights), N
    half = len(weights) // 2
    left, right = _sum_counter(weights[:half]), _sum_counter(weights[half:])
    combined: Counter = Counter()
    for u, cu in left.items():
        for v, cv in right.items():
            combined[u + v] += cu * cv
    return combined, N


def subset_sum_set(moduli: list[int], engine: str | None = None,
                   cap: int = DEFAULT_ENUM_CAP) -> set[Fraction]:
    """Distinct values of ``sum_{n in S} 1/n`` over all sub-multisets ``S``."""
    counts, N = subset_sum_counts(moduli, engine, cap)
    return {Fraction(S, N) for S in counts}


def fractional_parts(moduli: list[int], engine: str | None = None,
                     cap: int = DEFAULT_ENUM_CAP) -> set[Fraction]:
    counts, N = subset_sum_counts(moduli, engine, cap)
    return {Fraction(S % N, N) for S in counts}


@dataclass
class ProfileRow:
    floors: set[int] = field(default_factory=set)
    count: int = 0


@dataclass
class SubsetSumProfile:
    """Subsets of ``[1,k] minus {t}`` grouped by fractional part ``r / n_t``.

    Subsets whose fractional part is not a multiple of ``1/n_t`` belong to
    no row.
    """

    modulus: int
    excluded_index: int
    rows: dict[int, ProfileRow]

    def lines(self) -> list[str]:
        return [
            f"r={r} floors={sorted(row.floors)} count={row.count}"
            for r, row in sorted(self.rows.items())
        ]


def subset_sum_profile(A: CoverSystem, t: int, engine: str | None = None,
                       cap: int = DEFAULT_ENUM_CAP) -> SubsetSumProfile:
    _check_index(A, t)
    others = [c.n for i, c in enumerate(A.classes, start=1) if i != t]
    _check_cap(len(others), cap)
    n_t = A[t].n
    N = math.lcm(n_t, *others)
    step = N // n_t
    rows = {r: ProfileRow() for r in range(n_t)}
    weights = _numerators(others, N)

    if _pick_engine(len(weights), engine) == "gray":
        for S in gray_sums(weights):
            q, rem = divmod(S, N)
            if rem % step == 0:
                row = rows[rem // step]
                row.floors.add(q)
                row.count += 1
        return SubsetSumProfile(n_t, t, rows)

    # Meet in the middle: bucket the right half by residue mod N, then for
    # every left sum look up the residues that complete it to a row.
    half = len(weights) // 2
    left = _sum_counter(weights[:half])
    buckets: dict[int, Counter] = defaultdict(Counter)
    for v, cv in _sum_counter(weights[half:]).items():
        buckets[v % N][v - v % N] += cv
    for u, cu in left.items():
        for r in range(n_t):
            need = (r * step - u) % N
            for base, cv in buckets.get(need, {}).items():
                total = u + need + base
                rows[r].floors.add(total // N)
                rows[r].count += cu * cv
    return SubsetSumProfile(n_t, t, rows)


def check_theorem_hypotheses(A: CoverSystem, m: int, t: int,
                             need_period: bool = True,
                             cap: int = DEFAULT_TABLE_CAP):
    """Raise the matching error unless ``A`` is an m-cover, class ``t`` is
    irredundant and (optionally) ``n_t`` is a period of ``w_A``."""
    _check_index(A, t)
    table = covering_table(A, cap)
    if table.min() < m:
        raise NotMCoverError(
            f"not an m-cover: multiplicity {int(table.min())} < {m}")
    if t not in irredundant_indices(A, m, cap):
        raise RedundantClassError(f"class {t} ({A[t]}) is redundant for m={m}")
    if need_period and not is_period(A, A[t].n, cap):
        raise NotAPeriodError(
            f"modulus {A[t].n} is not a period of the covering function "
            f"(minimal period {minimal_period(A, cap)})")


@dataclass(frozen=True)
class FloorCountRow:
    r: int
    floors: tuple[int, ...]
    required: int

    @property
    def size(self) -> int:
        return len(self.floors)

    @property
    def passed(self) -> bool:
        return self.size >= self.required


def theorem1_check(A: CoverSystem, m: int, t: int, engine: str | None = None,
                   cap: int = DEFAULT_ENUM_CAP) -> list[FloorCountRow]:
    """For each ``r in [0, n_t)``, the number of distinct floors of subset sums
    over ``[1,k] minus {t}`` whose fractional part is ``r/n_t``.

    Each row passes when that number is at least ``m``; the verdicts are
    computed, not assumed.
    """
    check_theorem_hypotheses(A, m, t)
    profile = subset_sum_profile(A, t, engine, cap)
    return [FloorCountRow(r, tuple(sorted(row.floors)), m)
            for r, row in sorted(profile.rows.items())]


@dataclass(frozen=True)
class BoundRow:
    a: int
    count: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.count >= self.bound


def binom(n: int, j: int) -> int:
    """``C(n, j)`` with ``C(n, j) = 0`` for ``j > n`` or ``j < 0``."""
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def exact_cover_bound_check(A: CoverSystem, m: int, t: int | None = None,
                            cap: int = DEFAULT_ENUM_CAP) -> list[BoundRow]:
    """Compare ``#{I : sum_{s in I} 1/n_s = a/n_t}`` with ``C(m-1, floor(a/n_t))``.

    ``I`` ranges over subsets of the classes other than ``t`` (default: the
    last class).  Rows cover ``a = 0 .. floor(n_t * sum_{s != t} 1/n_s)``;
    beyond that every count is 0.
    """
    if t is None:
        t = len(A)
    _check_index(A, t)
    if not is_exact_m_cover(A, m):
        raise NotExactCoverError(f"not an exact {m}-cover")
    n_t = A[t].n
    others = [c.n for i, c in enumerate(A.classes, start=1) if i != t]
    counts, N = subset_sum_counts(others, cap=cap)
    per_a: Counter = Counter()
    for S, c in counts.items():
        if (S * n_t) % N == 0:
            per_a[S * n_t // N] += c
    top = (n_t * sum(_numerators(others, N))) // N
    return [BoundRow(a, per_a[a], binom(m - 1, a // n_t)) for a in range(top + 1)]


def corollary1_check(A: CoverSystem, D: Iterable[int], period: int | None = None,
                     cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Whether fractional parts of subset sums with floor outside ``D`` contain
    every ``r / n_0``.

    ``n_0`` is ``period`` if given (it must be a period of ``w_A``), else the
    minimal period.  Requires ``|D| = m(A)`` and a unique minimiser of
    ``w_A`` in ``[0, n_0)``.
    """
    return not corollary1_missing(A, D, period, cap)


def corollary1_missing(A: CoverSystem, D: Iterable[int], period: int | None = None,
                       cap: int = DEFAULT_ENUM_CAP) -> list[Fraction]:
    """The values ``r / n_0`` not attained; empty when the corollary holds."""
    D = set(D)
    table = covering_table(A)
    mult = int(table.min())
    if len(D) != mult:
        raise CoverError(f"|D| = {len(D)} but m(A) = {mult}")
    n0 = minimal_period(A) if period is None else period
    if not is_period(A, n0):
        raise NotAPeriodError(f"{n0} is not a period of the covering function")
    N = len(table)
    minima = [x for x in range(n0) if table[x % N] == mult]
    if len(minima) != 1:
        raise MinimumNotUniqueError(
            f"minimum-not-unique: w_A = {mult} at {len(minima)} residues mod {n0}")
    counts, L = subset_sum_counts(list(A.moduli), cap=cap)
    fracs = {Fraction(S % L, L) for S in counts if S // L not in D}
    return [Fraction(r, n0) for r in range(n0) if Fraction(r, n0) not in fracs]
