"""Reading counts off truncated generating functions.

x^(r^2) / prod_{i<=r} (1 - x^i)^2 generates p(n, r).  Its multivariate
refinement has a coefficient for each hook type, equal to the number of
partitions of that hook type.
"""

from hookmonoid.counting import p_hooktype, p_nr
from hookmonoid.series import gf_dh_coeff, gf_pn_coeff, mv_series, pnr_series

s = pnr_series(2, 20)
print("p(n,2), n = 0..20:", s.coeffs)
assert all(s[n] == p_nr(n, 2) for n in range(4, 21))

print("p(n) from the series, n = 1..20:", [gf_pn_coeff(n) for n in range(1, 21)])
print("sum of x^(r^2)/(1-x^r)^2, n = 1..15:", [gf_dh_coeff(n) for n in range(1, 16)])

print()
print("two-hook terms of total degree 13:")
for exps, c in sorted(mv_series(2, 13).terms.items(), reverse=True):
    if sum(exps) == 13:
        print(f"  x1^{exps[0]} x2^{exps[1]}: {c}  (partitions of hook type {exps}: {p_hooktype(exps)})")
