# Root-of-unity identities behind the subset-sum results, evaluated
# numerically with exact phases.
from coverfrac import SparsePolynomial, erdos_example
from coverfrac.identities import (
    lemma1_residual,
    lemma2_residual,
    lemma3_sides,
    product_identity_residual,
)

B = erdos_example()

# alternating sum over all 32 subsets, polynomial of degree m(B) = 1
f = SparsePolynomial.linear([1 / n for n in B.moduli])
print("alternating sum residual, max over z in [0,12):",
      f"{max(lemma1_residual(B, [1] * 5, f, z) for z in range(12)):.2e}")

# constancy of the grouped sums C_r(alpha) across r
print(f"C_r constancy residual (m_s = 1): {lemma2_residual(B, 1, 5, [1] * 4):.2e}")
print(f"C_r constancy residual (m_s = 2,1,3,1): {lemma2_residual(B, 1, 5, [2, 1, 3, 1]):.2e}")

# the product formula at z in 7(12); both sides are nonzero
for z in (7, 19, -5):
    lhs, rhs = lemma3_sides(B, 1, 5, z)
    print(f"z={z:>3}: lhs={lhs:.6f} rhs={rhs:.6f}")

print(f"generating-product residual at default samples: {product_identity_residual(B, 5):.2e}")
