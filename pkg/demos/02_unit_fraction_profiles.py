# Subset sums of 1/n_s grouped by fractional part, and the floor counts
# that a cover forces into every class r/n_t.
from coverfrac import erdos_example, subset_sum_profile, subset_sum_set, theorem1_check
from coverfrac import CoverSystem, distinguished_indices, exact_cover_bound_check

B = erdos_example()
sums = sorted(subset_sum_set(list(B.moduli)))
print(len(sums), "distinct subset sums:", " ".join(str(q) for q in sums))

# only 7(12) has a modulus that is a period of w_B and is irredundant
print("admissible distinguished classes:", distinguished_indices(B, 1))
print("profile of the other four classes by r/12:")
for line in subset_sum_profile(B, 5).lines():
    print(" ", line)

for row in theorem1_check(B, 1, 5):
    assert row.passed
print("every r/12 is hit by at least one floor")

# an exact 2-cover: counts of subsets hitting a/n_k against C(m-1, floor(a/n_k))
A = CoverSystem.from_pairs([(0, 1), (0, 2), (1, 2)])
for row in exact_cover_bound_check(A, 2):
    print(f"  a={row.a} count={row.count} bound={row.bound}")
