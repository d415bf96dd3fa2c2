"""A tour of the exact arithmetic layer: cyclotomic numbers and sparse
multivariate polynomials over them.

Everything in this library is exact. Scalars live in cyclotomic fields
Q(zeta_M) represented on the power basis modulo the M-th cyclotomic
polynomial, and polynomials carry those scalars as coefficients.
"""

from fractions import Fraction

from macvertex import CyclotomicNumber, MultiPoly, zeta

# A primitive cube root of unity. zeta(3) satisfies z^2 + z + 1 = 0, so
# its square is reduced back onto the power basis {1, z}.
z = zeta(3)
print("zeta_3        :", z)
print("zeta_3^2      :", z * z)
print("zeta_3^3      :", z ** 3)
print("1 + z + z^2   :", 1 + z + z * z)

# Inverses are exact: z^{-1} = z^2 for a cube root of unity.
print("zeta_3^{-1}   :", z.inverse())

# Rational numbers embed as order-1 cyclotomic numbers and can be
# promoted into any larger field with as_order.
half = CyclotomicNumber.from_rational(Fraction(1, 2))
print("1/2 in Q(z3)  :", half.as_order(3))

# Polynomials: x^2 - y^2 factors as (x - y)(x + y), and exact_div
# recovers one factor from the other with zero remainder.
x = MultiPoly.variable(0, 2)
y = MultiPoly.variable(1, 2)
diff_sq = x ** 2 - y ** 2
print("x^2 - y^2              :", diff_sq)
print("(x^2 - y^2)/(x - y)    :", diff_sq.exact_div(x - y))

# Evaluation is exact too.
print("at x=3, y=2            :", diff_sq.eval([Fraction(3), Fraction(2)]))

# Determinants of polynomial matrices use fraction-free elimination, so
# the result is again a polynomial, not a rational function.
vdm = [[(x + i) ** j for j in range(2)] for i in range(2)]
print("det [[1, x], [1, x+1]] :", vdm[0][0] * vdm[1][1] - vdm[0][1] * vdm[1][0])
