"""Independent brute-force oracles.

Nothing here touches the stamping, Gray-code or residue-join code paths: every
value is recomputed from the definitions with per-point scans and fresh
Fraction sums per subset.
"""

import math
from fractions import Fraction
from itertools import combinations


def subsets(indices):
    indices = list(indices)
    for size in range(len(indices) + 1):
        yield from combinations(indices, size)


def naive_w(pairs, x):
    return sum(1 for a, n in pairs if (x - a) % n == 0)


def naive_table(pairs):
    N = math.lcm(*(n for _, n in pairs)) if pairs else 1
    return [naive_w(pairs, x) for x in range(N)]


def naive_is_m_cover(pairs, m):
    return min(naive_table(pairs)) >= m


def naive_irredundant(pairs, m):
    out = set()
    for t in range(len(pairs)):
        rest = pairs[:t] + pairs[t + 1:]
        # w of the reduced system must be checked on the full period of the original
        N = math.lcm(*(n for _, n in pairs))
        if min(naive_w(rest, x) for x in range(N)) < m:
            out.add(t + 1)
    return out


def naive_min_period(pairs):
    table = naive_table(pairs)
    N = len(table)
    return min(d for d in range(1, N + 1)
               if all(table[x] == table[(x + d) % N] for x in range(N)))


def naive_sum(moduli):
    return sum((Fraction(1, n) for n in moduli), Fraction(0))


def naive_subset_sums(moduli):
    return {naive_sum(S) for S in subsets(moduli)}


def naive_profile(moduli, t):
    """``{r: (floors, count)}`` for subsets of the indices other than ``t`` (1-based)."""
    n_t = moduli[t - 1]
    others = [n for i, n in enumerate(moduli, start=1) if i != t]
    rows = {r: (set(), 0) for r in range(n_t)}
    for S in subsets(others):
        v = naive_sum(S)
        frac = v - math.floor(v)
        r = frac * n_t
        if r.denominator == 1:
            floors, count = rows[int(r)]
            floors.add(math.floor(v))
            rows[int(r)] = (floors, count + 1)
    return rows


def naive_fractional_parts(moduli):
    return {v - math.floor(v) for v in naive_subset_sums(moduli)}


def naive_grid_union(moduli):
    return {Fraction(r, n) for n in moduli for r in range(n)}
