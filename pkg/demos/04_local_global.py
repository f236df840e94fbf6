# Certifying (exact) m-covers from one finite window.
from coverfrac import (
    CoverSystem,
    check_local_global_cover,
    check_local_global_exact,
    erdos_example,
    random_system,
    window_bound_cover,
    window_bound_exact,
)

B = erdos_example()
print("window for m-covers:", window_bound_cover(B), "exact:", window_bound_exact(B))
print(check_local_global_cover(B, 1, x0=100))
print(check_local_global_exact(B, 1, x0=100))

halves = CoverSystem.from_pairs([(0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
print(check_local_global_exact(halves, 2, x0=-7))

# sweep random systems and every window start over two periods
bad = 0
for seed in range(200):
    A = random_system(6, 8, seed)
    for x0 in range(-8, 9):
        bad += not check_local_global_cover(A, 1, x0).consistent
print("counterexamples:", bad)
