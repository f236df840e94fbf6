"""Instance generators: the classical example, class splitting, seeded random
systems, completion to covers, and exhaustive residue search."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TABLE_CAP,
    CoverSystem,
    ResidueClass,
    _check_index,
    covering_table,
)
from .errors import CapExceededError, CoverError

DEFAULT_SEARCH_CAP = 10**7
DEFAULT_RANDOM_CAP = 10**4

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014).

    ``state += 0x9E3779B97F4A7C15``; output is the state mixed by
    ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9``, ``z = (z ^ z>>27) * 0x94D049BB133111EB``,
    ``z ^ z>>31``, all mod 2^64.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            u = self.next()
            if u < limit:
                return u % n


def erdos_example() -> CoverSystem:
    """``{0(2), 0(3), 1(4), 5(6), 7(12)}``: a cover with distinct moduli."""
    return CoverSystem.from_pairs([(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)])


def split_class(A: CoverSystem, index: int, p: int) -> CoverSystem:
    """Replace ``a(n)`` at ``index`` by ``a + j n (p n)`` for ``j < p``, in place.

    The covering function is unchanged.
    """
    _check_index(A, index)
    if p < 2:
        raise CoverError(f"split factor must be >= 2, got {p}")
    c = A[index]
    parts = tuple(ResidueClass(c.a + j * c.n, p * c.n) for j in range(p))
    i = index - 1
    return CoverSystem(A.classes[:i] + parts + A.classes[i + 1 :])


def random_system(k: int, max_modulus: int, seed: int,
                  cap: int = DEFAULT_RANDOM_CAP) -> CoverSystem:
    """``k`` classes, moduli uniform in ``[1, max_modulus]``, residues uniform mod n.

    Deterministic in ``seed`` via :class:`SplitMix64`; for each class the
    modulus is drawn before the residue.
    """
    if k < 0 or k > cap:
        raise CapExceededError(f"k={k} outside [0, {cap}]")
    if max_modulus < 1:
        raise CoverError("max_modulus must be >= 1")
    rng = SplitMix64(seed)
    pairs = []
    for _ in range(k):
        n = 1 + rng.below(max_modulus)
        pairs.append((rng.below(n), n))
    return CoverSystem.from_pairs(pairs)


def complete_to_cover(A: CoverSystem, m: int,
                      cap: int = DEFAULT_TABLE_CAP) -> CoverSystem:
    """Append ``x(N_A)`` once per unit of deficit ``m - w_A(x)``.

    The result is an m-cover in which every appended class is irredundant and
    has modulus ``N_A``, a period of the covering function.
    """
    table = covering_table(A, cap)
    N = len(table)
    extra = []
    for x in np.flatnonzero(table < m):
        extra.extend([ResidueClass(int(x), N)] * int(m - table[x]))
    return CoverSystem(A.classes + tuple(extra))


@dataclass(frozen=True)
class SearchSpec:
    moduli: tuple[int, ...]
    target_multiplicity: int = 1
    exact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(n) for n in self.moduli))
        if not self.moduli or any(n < 1 for n in self.moduli):
            raise CoverError("moduli must be a nonempty list of positive integers")
        if self.target_multiplicity < 1:
            raise CoverError("target multiplicity must be positive")


def find_covers(spec: SearchSpec, cap: int = DEFAULT_SEARCH_CAP) -> list[tuple[int, ...]]:
    """All residue tuples making ``spec.moduli`` an m-cover (exact if requested).

    Depth-first over residues in mixed-radix order.  A partial assignment is
    abandoned when the remaining classes cannot fill the outstanding deficit,
    or, for exact covers, when some point is already covered more than ``m``
    times.
    """
    moduli = spec.moduli
    m = spec.target_multiplicity
    if math.prod(moduli) > cap:
        raise CapExceededError(
            f"search space {math.prod(moduli)} exceeds cap {cap}")
    N = math.lcm(*moduli)
    k = len(moduli)
    # capacity[i] = most points (with multiplicity) classes i.. can still cover
    capacity = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        capacity[i] = capacity[i + 1] + N // moduli[i]
    if capacity[0] < m * N:
        return []

    table = [0] * N
    deficit = m * N
    residues = [0] * k
    found = []

    def stamp(a, n, delta):
        nonlocal deficit
        for x in range(a, N, n):
            if delta > 0:
                if table[x] < m:
                    deficit -= 1
            elif table[x] <= m:
                deficit += 1
            table[x] += delta

    def overfull(a, n):
        return any(table[x] > m for x in range(a, N, n))

    def descend(i):
        if i == k:
            if deficit == 0:
                found.append(tuple(residues))
            return
        n = moduli[i]
        for a in range(n):
            stamp(a, n, 1)
            if not (spec.exact and overfull(a, n)) and deficit <= capacity[i + 1]:
                residues[i] = a
                descend(i + 1)
            stamp(a, n, -1)

    descend(0)
    return found
