"""Counting partitions by the size of their Durfee square.

p(n, r) has a bounded nested sum, a recurrence that adds one inner hook at
a time, exact polynomial-with-correction closed forms for r = 2 and 3, and
a brute-force count to check them against.
"""

from math import isqrt

from hookmonoid import oracle
from hookmonoid.counting import dh, p_hdecomp, p_n, p_nr, p_nr_closed

print(f"{'n':>3} {'r':>2} {'sum':>6} {'recur':>6} {'closed':>6} {'brute':>6}")
for n in (7, 9, 10, 11, 20, 30):
    seen = oracle.tally(n, "durfee")
    for r in range(2, min(3, isqrt(n)) + 1):
        row = (p_nr(n, r), p_nr(n, r, "recurrence"), p_nr_closed(n, r), seen[r])
        print(f"{n:>3} {r:>2}" + "".join(f"{v:>7}" for v in row))

print()
print("p(n) summed over hook types vs. the 1-hook/2-hook/r-hook decomposition:")
for n in (10, 25, 40):
    print(f"  p({n}) = {p_n(n)} = {p_hdecomp(n)}")

print()
print("squares times a single hook, dh(n):", [dh(n) for n in range(1, 16)])
