"""Even-weight subgroups of bit vectors and the cosets they cut out.

Run: python demos/02_quotients.py
"""

import itertools

from rigidspace.discrete import BitVector, TRITS, associativity_violations, b_add, k_add, k_reduce
from rigidspace.quotient import EvenSubgroup, enumerate_members, induced_factorization, syndrome, z_syndrome

# Signed addition mod 2 on {-1, 0, 1} is commutative but not associative.
bad = associativity_violations(b_add, TRITS)
print("non-associative triples:", bad)

# The circle group folds every real into (-2, 2].
for x in (3.5, -2.0, 4.0, 0.25):
    print(f"k_reduce({x}) = {k_reduce(x)}")
print("1 + 1 on the circle:", k_add(1, 1))

# Four kinds of even-weight subgroup in dimension 4.
subgroups = [EvenSubgroup.parse(s) for s in ("H-:4", "H+:4", "Hpm:2+2", "full:4")]
space = [BitVector(b) for b in itertools.product((0, 1), repeat=4)]
for H in subgroups:
    members = sorted(str(v) for v in enumerate_members(H))
    cosets = {syndrome(v, H) for v in space}
    print(f"{str(H):>8s}: |H| = {H.order:2d}, {len(cosets):2d} cosets, members {members[:4]}{' ...' if len(members) > 4 else ''}")

# The syndrome of a vector names its coset.
H = EvenSubgroup.parse("Hpm:2+2")
for text in ("1100", "1011", "0110"):
    print(f"syndrome of {text} in {H}: {syndrome(BitVector.parse(text), H)}")

# Integer vectors reduce mod 2 first.
print("z_syndrome((3,-1,2)) in H+:3:", z_syndrome((3, -1, 2), EvenSubgroup.plus(3)))

# Cosets split the nodes 0, ±e_i of the two coordinate graphs into classes.
for H in (EvenSubgroup.parse("H+:3"), EvenSubgroup.parse("Hpm:2+1"), EvenSubgroup.parse("H-:3")):
    f = induced_factorization(H, "double")
    print(f"{str(H):>8s} classes: {f.classes}")
