"""Finite-window criteria for (exact) m-coverage.

If a system covers a run of ``window_bound_cover(A)`` consecutive integers at
least ``m`` times it is an m-cover; if it covers a run of
``window_bound_exact(A)`` consecutive integers exactly ``m`` times it is an
exact m-cover.  The checkers below compute the local and the global side
independently so the implication itself can be tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    DEFAULT_TABLE_CAP,
    CoverSystem,
    covering_count,
    divisors,
    is_exact_m_cover,
    is_m_cover,
)
from .errors import CoverError
from .unitfrac import DEFAULT_ENUM_CAP, fractional_parts


@dataclass(frozen=True)
class WindowVerdict:
    window_start: int
    window_length: int
    local_holds: bool
    global_holds: bool

    @property
    def consistent(self) -> bool:
        """False only for a counterexample to the criterion."""
        return self.global_holds or not self.local_holds


def window_bound_cover(A: CoverSystem, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of distinct fractional parts among all subset sums of ``1/n_s``."""
    return _fractional_part_count(tuple(sorted(A.moduli)), cap)


@lru_cache(maxsize=1024)
def _fractional_part_count(moduli: tuple[int, ...], cap: int) -> int:
    return len(fractional_parts(list(moduli), cap=cap))


def _totient(n: int) -> int:
    result, p, m = n, 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def window_bound_exact(A: CoverSystem) -> int:
    """``|union_s {r/n_s : 0 <= r < n_s}|``.

    A reduced fraction ``a/d`` lies in the grid of ``n`` iff ``d | n``, so the
    union has ``sum phi(d)`` elements over all ``d`` dividing some modulus.
    """
    if not len(A):
        raise CoverError("no moduli")
    dens = set()
    for n in set(A.moduli):
        dens.update(divisors(n))
    return sum(_totient(d) for d in dens)


def _window(A: CoverSystem, x0: int, length: int):
    return (covering_count(A, x) for x in range(x0, x0 + length))


def check_local_global_cover(A: CoverSystem, m: int, x0: int = 0,
                             cap: int = DEFAULT_TABLE_CAP) -> WindowVerdict:
    length = window_bound_cover(A)
    local = all(w >= m for w in _window(A, x0, length))
    return WindowVerdict(x0, length, local, is_m_cover(A, m, cap))


def check_local_global_exact(A: CoverSystem, m: int, x0: int = 0,
                             cap: int = DEFAULT_TABLE_CAP) -> WindowVerdict:
    length = window_bound_exact(A)
    local = all(w == m for w in _window(A, x0, length))
    return WindowVerdict(x0, length, local, is_exact_m_cover(A, m, cap))
