"""Signed permutations, their matrices, and the parity subgroups.

Run: python demos/01_arrow_permutations.py
"""

from rigidspace.arrow import (
    ArrowPermutation,
    IntervalPartition,
    classify,
    closure,
    composite_parity,
    rotation_generator,
    standard_generators,
    to_matrix,
)

# A signed permutation sends index i to ±p(i).  Its matrix has one ±1 per column.
p = ArrowPermutation.parse("[+2,-1]")
q = ArrowPermutation.parse("[-1,+3,+2]")
print("p =", p)
print(to_matrix(p))

# Composition agrees with matrix multiplication.
r = ArrowPermutation.parse("[+3,-1,+2]")
assert (to_matrix(q * r) == to_matrix(q) @ to_matrix(r)).all()
print("q * r =", q * r)

# The quarter turn in the (1,2) plane generates a cyclic group of order 4.
l = rotation_generator(2, 1)
print("quarter turn:", l, " l^2 =", l * l, " l^4 =", l * l * l * l)

# Three generator sets, three groups of the same order.
for kind in ("full", "even", "even_inverse"):
    for n in (2, 3, 4):
        g = closure(standard_generators(kind, n))
        print(f"{kind:>13s} n={n}: order {g.order}")

# Each element carries a determinant and a negative-count parity.
for elem in (p, q, ArrowPermutation.parse("[-1,-2,+3]")):
    f = classify(elem)
    print(f"{str(elem):>12s}  det=+1: {f.in_P_plus!s:5}  even negatives: {f.in_P_minus}")

# The blockwise parity multiplies signed minors over the blocks of a partition.
part = IntervalPartition.parse("2+1")
for elem in (ArrowPermutation.parse("[+1,+2,+3]"), ArrowPermutation.parse("[+3,+2,+1]")):
    print(f"blockwise parity of {elem} over {part}: {composite_parity(elem, part):+d}")

# Those generators are not confined to the parity-one set: they reach every element.
g = closure(standard_generators("composite", 3, part))
kernel = [e for e in g if composite_parity(e, part) == 1]
print(f"blockwise generators over {part}: group order {g.order}, parity-one elements {len(kernel)}")
