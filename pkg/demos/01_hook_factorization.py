"""Every partition is a unique product of 1-hooks.

Peel the innermost central hook off a partition and what is left is again
a partition with one fewer hook.  Repeating this gives the factorization,
and multiplying the hooks back together gives the partition again.
"""

from hookmonoid import Partition, factor, product, product_all
from hookmonoid.partitions import delta_of, hook_type, render

lam = Partition((5, 4, 3, 2, 2))
print(f"lambda = {lam}, weight {lam.weight}, Durfee square {lam.durfee}")
print(render(lam, hooks=True))
print()

hooks = factor(lam)
print("hooks, outermost first:", " ".join(f"[{h.as_partition()}]" for h in hooks))
print("hook type:", tuple(hook_type(lam)), " difference sequence:", tuple(delta_of(hook_type(lam))))
print("sizes of the hooks are the difference sequence:", tuple(h.size for h in hooks))
assert product_all(hooks) == lam

# Multiplying two dots gives a 2x2 square; multiplying a square by a hook
# threads the hook around the inside corner of the square.
dot = Partition((1,))
print()
print("(1) * (1) =", product(dot, dot))
print("(2,2) * (2,1,1) =", product(Partition((2, 2)), Partition((2, 1, 1))))
print("(3,1) * (1) =", product(Partition((3, 1)), dot))
