"""Residue classes, finite systems of them, and their covering function.

A system ``A = {a_1(n_1), ..., a_k(n_k)}`` is an ordered tuple of classes.
Indices exposed by this module are 1-based, matching the usual notation
``a_t(n_t)`` for the distinguished class of a system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import CapExceededError, CoverError, NotMCoverError, ParseError

DEFAULT_TABLE_CAP = 10**7


@dataclass(frozen=True, order=True)
class ResidueClass:
    """The residue class ``a(n)``; ``a`` is normalized into ``[0, n)``."""

    a: int
    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise CoverError(f"modulus must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "a", int(self.a) % self.n)

    def __contains__(self, x: int) -> bool:
        return (x - self.a) % self.n == 0

    def __str__(self):
        return f"{self.a}({self.n})"


@dataclass(frozen=True)
class CoverSystem:
    classes: tuple[ResidueClass, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "CoverSystem":
        """Build from ``(a, n)`` pairs."""
        return cls(tuple(ResidueClass(a, n) for a, n in pairs))

    def __len__(self):
        return len(self.classes)

    def __iter__(self) -> Iterator[ResidueClass]:
        return iter(self.classes)

    def __getitem__(self, index: int) -> ResidueClass:
        """1-based access: ``A[t]`` is ``a_t(n_t)``."""
        return self.classes[_check_index(self, index) - 1]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(c.n for c in self.classes)

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(c.a for c in self.classes)

    def without(self, index: int) -> "CoverSystem":
        i = _check_index(self, index) - 1
        return CoverSystem(self.classes[:i] + self.classes[i + 1 :])

    def __or__(self, other: "CoverSystem") -> "CoverSystem":
        return CoverSystem(self.classes + other.classes)

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.classes) + "}"

    def to_text(self) -> str:
        return "".join(f"{c.a} mod {c.n}\n" for c in self.classes)


def _check_index(A: CoverSystem, index: int) -> int:
    if not 1 <= index <= len(A):
        raise CoverError(f"class index {index} out of range 1..{len(A)}")
    return index


def parse_system(text: str) -> CoverSystem:
    """Parse the line format ``a mod n``; ``#`` comments and blank lines are skipped."""
    classes = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 3 or parts[1] != "mod":
            raise ParseError(lineno, f"expected 'a mod n', got {stripped!r}")
        try:
            a, n = int(parts[0]), int(parts[2])
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {stripped!r}") from None
        if n <= 0:
            raise ParseError(lineno, f"modulus must be positive, got {n}")
        classes.append(ResidueClass(a, n))
    return CoverSystem(tuple(classes))


def covering_count(A: CoverSystem, x: int) -> int:
    """Number of classes of ``A`` containing ``x``."""
    return sum(1 for c in A.classes if (x - c.a) % c.n == 0)


def lcm_moduli(A: CoverSystem) -> int:
    if not A.classes:
        raise CoverError("no moduli")
    return math.lcm(*A.moduli)


def _period_of(A: CoverSystem) -> int:
    return math.lcm(*A.moduli) if A.classes else 1


@lru_cache(maxsize=512)
def _stamped_table(classes: tuple[ResidueClass, ...], N: int) -> np.ndarray:
    table = np.zeros(N, dtype=np.int64)
    for c in classes:
        table[c.a :: c.n] += 1
    table.setflags(write=False)
    return table


def covering_table(A: CoverSystem, cap: int = DEFAULT_TABLE_CAP) -> np.ndarray:
    """Values ``w_A(0), ..., w_A(N_A - 1)`` as a read-only int64 array.

    The empty system has period 1 and table ``[0]``.
    """
    N = _period_of(A)
    if N > cap:
        raise CapExceededError(f"period too large: N_A = {N} exceeds cap {cap}")
    return _stamped_table(A.classes, N)


def covering_multiplicity(A: CoverSystem, cap: int = DEFAULT_TABLE_CAP) -> int:
    return int(covering_table(A, cap).min())


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def minimal_period(A: CoverSystem, cap: int = DEFAULT_TABLE_CAP) -> int:
    """Least positive period of ``w_A``.

    Every period is a multiple of the minimal one and ``N_A`` is a period, so
    only divisors of ``N_A`` need testing.
    """
    table = covering_table(A, cap)
    N = len(table)
    for d in divisors(N):
        if np.array_equal(table, np.roll(table, -d)):
            return d
    raise AssertionError("N_A is always a period")  # pragma: no cover


def is_period(A: CoverSystem, n: int, cap: int = DEFAULT_TABLE_CAP) -> bool:
    return n >= 1 and n % minimal_period(A, cap) == 0


def is_m_cover(A: CoverSystem, m: int, cap: int = DEFAULT_TABLE_CAP) -> bool:
    return covering_multiplicity(A, cap) >= m


def is_exact_m_cover(A: CoverSystem, m: int, cap: int = DEFAULT_TABLE_CAP) -> bool:
    return bool((covering_table(A, cap) == m).all())


def irredundant_indices(A: CoverSystem, m: int, cap: int = DEFAULT_TABLE_CAP) -> set[int]:
    """Indices ``t`` such that ``A`` minus class ``t`` is no longer an m-cover.

    Removing ``a_t(n_t)`` lowers ``w_A`` by one exactly on that class, so the
    class is irredundant iff ``w_A`` attains ``m`` somewhere on it.
    """
    table = covering_table(A, cap)
    if table.min() < m:
        raise NotMCoverError(f"not an m-cover: multiplicity {int(table.min())} < {m}")
    return {t for t, c in enumerate(A.classes, start=1) if table[c.a :: c.n].min() == m}


def distinguished_indices(A: CoverSystem, m: int, cap: int = DEFAULT_TABLE_CAP) -> list[int]:
    """Irredundant indices whose modulus is also a period of ``w_A``."""
    d = minimal_period(A, cap)
    return sorted(t for t in irredundant_indices(A, m, cap) if A[t].n % d == 0)


@dataclass(frozen=True)
class CoverReport:
    lcm: int
    table: tuple[int, ...] = field(repr=False)
    multiplicity: int
    minimal_period: int
    irredundant: frozenset[int]
    m: int

    def lines(self) -> list[str]:
        return [
            f"N={self.lcm}",
            f"m={self.multiplicity}",
            f"period={self.minimal_period}",
            "irredundant=" + ",".join(str(t) for t in sorted(self.irredundant)),
            "table=" + ",".join(str(v) for v in self.table),
        ]


def analyze(A: CoverSystem, m: int | None = None, cap: int = DEFAULT_TABLE_CAP) -> CoverReport:
    """Full analysis record; irredundancy is taken w.r.t. ``m`` (default ``m(A)``)."""
    table = covering_table(A, cap)
    mult = int(table.min())
    if m is None:
        m = mult
    irr = irredundant_indices(A, m, cap) if m >= 1 else set()
    return CoverReport(
        lcm=lcm_moduli(A),
        table=tuple(int(v) for v in table),
        multiplicity=mult,
        minimal_period=minimal_period(A, cap),
        irredundant=frozenset(irr),
        m=m,
    )
