"""The wheel condition as a membership certificate.

At the combinatorial point the partition function lies in a very rigid
space: symmetric, homogeneous of degree l n (n-1), per-variable degree
at most l (n-1), and vanishing whenever three variables form a
geometric chain z' / z = t p^s with bounded total shift. This script
runs the full membership check on Z_{2,1} and shows the negative
control at a generic q, where the wheel condition genuinely fails.
"""

from fractions import Fraction

from macvertex import (
    CyclotomicNumber,
    check_Vn_membership,
    check_wheel,
    fused_determinant,
    wheel_chains,
    zeta,
)

n, ell = 2, 1
q = zeta(2 * ell + 1)
z = fused_determinant(n, ell, q)

chains = wheel_chains(ell, 2, 2 * n)
print(f"wheel chains for (r, k) = ({ell}, 2) in {2 * n} variables:")
for chain in chains:
    print("  indices", chain.indices, "shifts", chain.shifts)

report = check_Vn_membership(z, n, ell, q)
print("membership report for Z_{2,1} at the combinatorial point:")
for key, value in report.items():
    if key == "wheel_report":
        continue
    print(f"  {key}: {value}")

# Negative control: at a generic rational q the precondition
# p^{r-1} t^{k+1} = 1 fails, and forcing the check past it exhibits
# explicit non-vanishing witnesses.
qg = CyclotomicNumber.from_rational(Fraction(5, 2))
zg = fused_determinant(n, ell, qg)
bad = check_wheel(zg, ell, 2, qg * qg, qg, force=True)
print("generic q control: passed =", bad.passed,
      "failures =", len(bad.failures))
chain, point, value = bad.failures[0]
print("  first witness: chain", chain.indices, "value", value)
