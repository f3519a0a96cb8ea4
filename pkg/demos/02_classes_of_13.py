"""The hook-type classes of 13 and the three ways to label them.

A class is the set of partitions sharing a hook type.  The same class can
be named by its hook type, by its difference sequence, or by a partition
inside a staircase box.  Class sizes are products of the differences.
"""

from hookmonoid import cli, oracle
from hookmonoid.quotient import class_count

cli.run(["classes", "13"])

print()
print("counted by brute force:", sum(1 for _ in oracle.enumerate_partitions(13)))

# The number of classes of n is the number of partitions of n into parts
# congruent to 1 or 4 modulo 5.
for n in (13, 20, 30):
    print(f"classes of {n}: {class_count(n)}, parts = +-1 mod 5: {oracle.count_where(n, parts_pm1_mod5=True)}")
