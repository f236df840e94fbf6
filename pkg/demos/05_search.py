# Exhaustive residue search over fixed moduli, and seeded random systems.
from coverfrac import CoverSystem, SearchSpec, find_covers, random_system, theorem1_check
from coverfrac import distinguished_indices

found = find_covers(SearchSpec((2, 3, 4, 6, 12), 1))
print(len(found), "covers with moduli 2,3,4,6,12; first few:", found[:4])
assert (0, 0, 1, 5, 7) in found

exact = find_covers(SearchSpec((2, 4, 4, 3, 3, 3), 2, exact=True))
print(len(exact), "exact 2-covers with moduli 2,4,4,3,3,3")

checked = 0
for residues in found:
    A = CoverSystem.from_pairs(zip(residues, (2, 3, 4, 6, 12)))
    for t in distinguished_indices(A, 1):
        assert all(r.passed for r in theorem1_check(A, 1, t))
        checked += 1
print("floor-count check passed on", checked, "(cover, class) pairs")

print("seeded system:", random_system(5, 12, seed=2006))
