"""Numerical checks of exponential-sum and product identities for covers.

Every root of unity is first reduced to an exact phase (a Fraction of a turn,
taken mod 1) and only then turned into a complex number, so phases that are
exactly 0, 1/4, 1/2 or 3/4 produce exact values.  Comparisons are relative:
``|lhs - rhs| <= tol * (1 + |rhs|)`` unless noted otherwise.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .core import (
    DEFAULT_TABLE_CAP,
    CoverSystem,
    _check_index,
    covering_multiplicity,
    covering_table,
    is_period,
)
from .errors import CoverError, DegreeExceedsMultiplicityError, NotAPeriodError
from .unitfrac import binom, check_theorem_hypotheses, gray_flips

DEFAULT_TOL = 1e-9

DEFAULT_SAMPLES = (
    0j,
    0.5 + 0j,
    -1 / 3 + 0j,
    0.7j,
    0.9 * cmath.exp(2j * cmath.pi / 7),
)

_EXACT_UNITS = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


@dataclass(frozen=True)
class UnityPhase:
    """``e^{2 pi i value}`` with ``value`` an exact fraction of a turn in [0, 1)."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    def __add__(self, other: "UnityPhase") -> "UnityPhase":
        return UnityPhase(self.value + other.value)

    def __neg__(self) -> "UnityPhase":
        return UnityPhase(-self.value)

    def to_complex(self) -> complex:
        exact = _EXACT_UNITS.get(self.value)
        if exact is not None:
            return exact
        return cmath.exp(2j * math.pi * self.value.numerator / self.value.denominator)


def unit(num: int, den: int) -> complex:
    """``e^{2 pi i num/den}``."""
    return UnityPhase(Fraction(num, den)).to_complex()


class SparsePolynomial:
    """Polynomial in ``k`` variables stored as ``{exponent tuple: coefficient}``."""

    def __init__(self, k: int, terms: Mapping[tuple[int, ...], complex] | None = None):
        self.k = k
        self.terms: dict[tuple[int, ...], complex] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != k or any(e < 0 for e in exps):
                raise CoverError(f"bad exponent vector {exps} for {k} variables")
            if c != 0:
                self.terms[exps] = self.terms.get(exps, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c != 0}

    @classmethod
    def constant(cls, k: int, c: complex = 1) -> "SparsePolynomial":
        return cls(k, {(0,) * k: c})

    @classmethod
    def variable(cls, k: int, s: int, c: complex = 1) -> "SparsePolynomial":
        """``c * x_s`` with ``s`` 1-based."""
        exps = [0] * k
        exps[s - 1] = 1
        return cls(k, {tuple(exps): c})

    @classmethod
    def linear(cls, coeffs: Sequence[complex], const: complex = 0) -> "SparsePolynomial":
        k = len(coeffs)
        poly = cls.constant(k, const)
        for s, c in enumerate(coeffs, start=1):
            poly = poly + cls.variable(k, s, c)
        return poly

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePolynomial(self.k, terms)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        terms: dict[tuple[int, ...], complex] = defaultdict(complex)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SparsePolynomial(self.k, terms)

    def __pow__(self, p: int) -> "SparsePolynomial":
        out = SparsePolynomial.constant(self.k)
        for _ in range(p):
            out = out * self
        return out

    def coefficient(self, exps: Sequence[int]) -> complex:
        return self.terms.get(tuple(exps), 0)

    def at_subset(self, I: frozenset[int] | set[int]) -> complex:
        """Value at the 0/1 point ``x_s = [s in I]`` (``I`` 1-based)."""
        total = 0j
        for exps, c in self.terms.items():
            if all(s + 1 in I for s, e in enumerate(exps) if e):
                total += c
        return total

    def __repr__(self):
        return f"SparsePolynomial(k={self.k}, terms={self.terms!r})"


def _rel_residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / (1 + abs(rhs))


def _subsets(indices: Sequence[int]):
    for size in range(len(indices) + 1):
        for I in combinations(indices, size):
            yield frozenset(I)


def lemma1_sides(A: CoverSystem, m_list: Sequence[int], f: SparsePolynomial,
                 z: int, enforce_degree: bool = True) -> tuple[complex, complex]:
    """Both sides of the alternating subset-sum identity for ``f`` at ``z``.

    Left: ``sum_I (-1)^|I| f([s in I]) e^{2 pi i sum_{s in I} (a_s - z) m_s / n_s}``.
    Right: ``(-1)^k c(I_z) prod_{s not in I_z} (e^{2 pi i (a_s - z) m_s / n_s} - 1)``
    where ``c(I_z)`` is the coefficient of ``prod_{s in I_z} x_s`` in ``f``.
    The identity is only guaranteed for ``deg f <= m(A)``; ``enforce_degree``
    turns that gate off for experiments.
    """
    k = len(A)
    if len(m_list) != k:
        raise CoverError(f"need {k} multipliers, got {len(m_list)}")
    if f.k != k:
        raise CoverError(f"polynomial has {f.k} variables, system has {k} classes")
    if enforce_degree and f.degree > covering_multiplicity(A):
        raise DegreeExceedsMultiplicityError(
            f"degree-exceeds-multiplicity: deg f = {f.degree} > m(A) = "
            f"{covering_multiplicity(A)}")
    phases = [Fraction((c.a - z) * ms, c.n) for c, ms in zip(A.classes, m_list)]

    lhs = 0j
    for I in _subsets(range(1, k + 1)):
        value = f.at_subset(I)
        if value == 0:
            continue
        sign = -1 if len(I) % 2 else 1
        lhs += sign * value * UnityPhase(sum((phases[s - 1] for s in I), Fraction(0))).to_complex()

    I_z = [s for s, c in enumerate(A.classes, start=1) if z in c]
    c_Iz = f.coefficient([1 if s in I_z else 0 for s in range(1, k + 1)])
    rhs = (-1) ** k * c_Iz
    for s in range(1, k + 1):
        if s not in I_z:
            rhs *= UnityPhase(phases[s - 1]).to_complex() - 1
    return lhs, rhs


def lemma1_residual(A, m_list, f, z, enforce_degree=True) -> float:
    return _rel_residual(*lemma1_sides(A, m_list, f, z, enforce_degree))


def lemma1_check(A: CoverSystem, m_list: Sequence[int], f: SparsePolynomial, z: int,
                 tol: float = DEFAULT_TOL, enforce_degree: bool = True) -> bool:
    return lemma1_residual(A, m_list, f, z, enforce_degree) <= tol


def lemma2_sums(A: CoverSystem, m: int, t: int,
                m_list: Sequence[int]) -> dict[Fraction, dict[int, complex]]:
    """``C_r(alpha)`` for every offset ``alpha`` that occurs, keyed ``[alpha][r]``.

    Subsets ``I`` of the classes other than ``t`` are grouped by writing the
    fractional part of ``v = sum_{s in I} m_s / n_s`` as ``(alpha + r) / n_t``;
    each contributes ``(-1)^|I| C(floor v, m-1) e^{2 pi i sum (a_s - a_t) m_s / n_s}``.
    """
    check_theorem_hypotheses(A, m, t, need_period=False)
    others = [c for i, c in enumerate(A.classes, start=1) if i != t]
    if len(m_list) != len(others):
        raise CoverError(f"need {len(others)} multipliers, got {len(m_list)}")
    if any(ms <= 0 for ms in m_list):
        raise CoverError("multipliers must be positive")
    a_t, n_t = A[t].a, A[t].n
    N = math.lcm(n_t, *(c.n for c in others))
    weights = [ms * (N // c.n) for c, ms in zip(others, m_list)]
    twists = [(c.a - a_t) * ms * (N // c.n) for c, ms in zip(others, m_list)]

    sums: dict[Fraction, dict[int, complex]] = defaultdict(lambda: defaultdict(complex))
    value = twist = 0
    size = 0

    def record():
        q, rem = divmod(value, N)
        scaled = Fraction(rem * n_t, N)
        r = math.floor(scaled)
        sign = -1 if size % 2 else 1
        sums[scaled - r][r] += sign * binom(q, m - 1) * unit(twist, N)

    record()
    for bit, entering in gray_flips(len(others)):
        delta = 1 if entering else -1
        value += delta * weights[bit]
        twist += delta * twists[bit]
        size += delta
        record()
    return {alpha: dict(rows) for alpha, rows in sums.items()}


def lemma2_residual(A: CoverSystem, m: int, t: int, m_list: Sequence[int]) -> float:
    """``max_alpha max_r |C_r(alpha) - C_0(alpha)|`` (absolute)."""
    n_t = A[t].n if 1 <= t <= len(A) else 0
    worst = 0.0
    for rows in lemma2_sums(A, m, t, m_list).values():
        base = rows.get(0, 0j)
        for r in range(n_t):
            worst = max(worst, abs(rows.get(r, 0j) - base))
    return worst


def lemma2_constancy_check(A: CoverSystem, m: int, t: int, m_list: Sequence[int],
                           tol: float = DEFAULT_TOL) -> bool:
    return lemma2_residual(A, m, t, m_list) <= tol


def lemma3_sides(A: CoverSystem, m: int, t: int, z: int) -> tuple[complex, complex]:
    """``prod_{s not in I_z} (1 - e^{2 pi i (a_s - z)/n_s})`` against
    ``prod_{s in I_z} n_s * prod_{j=1}^{n_t} (1 - e^{2 pi i (j - a_t)/n_t})^{w_A(j) - m}``.
    """
    check_theorem_hypotheses(A, m, t)
    a_t, n_t = A[t].a, A[t].n
    if (z - a_t) % n_t:
        raise CoverError(f"z={z} is not in class {t} ({A[t]})")
    lhs = 1 + 0j
    rhs = 1 + 0j
    for c in A.classes:
        if z in c:
            rhs *= c.n
        else:
            lhs *= 1 - unit(c.a - z, c.n)
    table = covering_table(A)
    N = len(table)
    for j in range(1, n_t + 1):
        exponent = int(table[j % N]) - m
        if (j - a_t) % n_t == 0:
            # vanishing base: the hypotheses force w_A(j) = m here
            assert exponent == 0, f"zero base with exponent {exponent} at j={j}"
            continue
        rhs *= (1 - unit(j - a_t, n_t)) ** exponent
    return lhs, rhs


def lemma3_residual(A, m, t, z) -> float:
    return _rel_residual(*lemma3_sides(A, m, t, z))


def lemma3_check(A: CoverSystem, m: int, t: int, z: int, tol: float = DEFAULT_TOL) -> bool:
    return lemma3_residual(A, m, t, z) <= tol


def product_identity_sides(A: CoverSystem, t: int, y: complex,
                           enforce_period: bool = True) -> tuple[complex, complex]:
    """``prod_s (1 - y^{N/n_s} e^{2 pi i a_s/n_s})`` against
    ``prod_{j=1}^{n_t} (1 - y^{N/n_t} e^{2 pi i j/n_t})^{w_A(j)}``."""
    _check_index(A, t)
    n_t = A[t].n
    if enforce_period and not is_period(A, n_t):
        raise NotAPeriodError(f"modulus {n_t} is not a period of the covering function")
    table = covering_table(A)
    N = len(table)
    lhs = 1 + 0j
    for c in A.classes:
        lhs *= 1 - y ** (N // c.n) * unit(c.a, c.n)
    rhs = 1 + 0j
    y_t = y ** (N // n_t)
    for j in range(1, n_t + 1):
        rhs *= (1 - y_t * unit(j, n_t)) ** int(table[j % N])
    return lhs, rhs


def product_identity_residual(A: CoverSystem, t: int,
                              y_samples: Iterable[complex] = DEFAULT_SAMPLES,
                              enforce_period: bool = True) -> float:
    return max(_rel_residual(*product_identity_sides(A, t, y, enforce_period))
               for y in y_samples)


def product_identity_check(A: CoverSystem, t: int,
                           y_samples: Iterable[complex] = DEFAULT_SAMPLES,
                           tol: float = DEFAULT_TOL, enforce_period: bool = True) -> bool:
    return product_identity_residual(A, t, y_samples, enforce_period) <= tol


def average_equality_check(A: CoverSystem, cap: int = DEFAULT_TABLE_CAP) -> bool:
    """``(1/N_A) sum_{x<N_A} w_A(x) == sum_s 1/n_s`` in exact rationals."""
    table = covering_table(A, cap)
    return Fraction(int(table.sum()), len(table)) == sum(
        (Fraction(1, n) for n in A.moduli), Fraction(0))

