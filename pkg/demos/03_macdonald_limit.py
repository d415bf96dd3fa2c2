"""The main identity at desk scale.

At the combinatorial point q^{2l+1} = 1 the partition function Z_{n,l}
becomes a fully symmetric polynomial, and it is proportional to the
Macdonald polynomial of the staircase partition Y_{n,l} evaluated along
a one-parameter branch through (p, t) = (q^2, q). This script verifies
the identity exactly for (n, l) = (2, 1), where the Macdonald limit
degenerates to a Schur polynomial.
"""

from macvertex import (
    MultiPoly,
    fused_determinant,
    gamma_const,
    macdonald_at_combinatorial_point,
    schur,
    staircase,
    zeta,
)

n, ell = 2, 1
q = zeta(2 * ell + 1)
lam = staircase(n, ell)
print("staircase Y_{2,1} =", lam.parts)

z = fused_determinant(n, ell, q)
print("Z_{2,1} =", z)

# The Macdonald polynomial at the combinatorial point, as a polynomial
# in 2n variables. The second return value is the pole order absorbed
# while taking the branch limit.
limit, n_pole = macdonald_at_combinatorial_point(lam, ell, 2 * n)
big = limit.to_multipoly()
print("Macdonald limit pole order:", n_pole)
print("P~_{Y_{2,1}} =", big)

# The proportionality constant gamma_{n,l} is a q-factorial power with a
# sign and a q-power; for l = 1 it is just 1.
gamma = gamma_const(n, ell, q, "appendix").as_order(big.order)
print("gamma_{2,1} =", gamma)

scaled = big * MultiPoly.constant(gamma, 2 * n, big.order)
assert z.embed_order(big.order) == scaled
print("Z_{2,1} == gamma * P~_{Y_{2,1}}  (exact)")

# For l = 1 the limit is a Schur polynomial: the same identity again.
assert z == schur(lam, 2 * n, q.order)
print("Z_{2,1} == s_{Y_{2,1}}          (exact)")
