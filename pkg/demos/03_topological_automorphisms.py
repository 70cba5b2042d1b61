"""Automorphisms of factorized coordinate graphs.

A move that swaps two nodes of the same class is forbidden unless that class
contains the origin.  The surviving moves generate the automorphism group.

Run: python demos/03_topological_automorphisms.py
"""

from rigidspace.topology import FactorizedGraph, aut_group, allowed_generators, canonical_graphs, verify_case

g = FactorizedGraph.parse("b:n=3:classes=one")
print(g.classes)
print("allowed moves:", ", ".join(str(mv) for mv in allowed_generators(g)))
print("group order:", aut_group(g).order)

print()
print(f"{'graph':<28s}{'prediction':<12s}{'order':>7s}{'predicted':>11s}  equal")
for kind, n in (("simple", 3), ("simple", 4), ("simple", 5), ("double", 2), ("double", 3)):
    for g in canonical_graphs(kind, n):
        r = verify_case(g)
        name = f"{kind} n={n}, {len(g.classes)} classes"
        print(f"{name:<28s}{r.label.value:<12s}{r.computed_order:>7d}{r.expected_order:>11d}  {r.set_equal}")

# Block shapes: the prohibition keeps each block in place, so the group is a
# product of small rotation groups rather than the blockwise-parity set.
r = verify_case(FactorizedGraph.parse("b:n=4:classes=blocks:2+2"))
print()
print(f"blocks 2+2: computed {r.computed_order}, parity-one set {r.expected_order}, equal {r.set_equal}")

# Graphs outside the canonical shapes get no prediction.
mixed = FactorizedGraph("double", 2, ((0, 1, -1), (2, -2)))
print("mixed shape prediction:", verify_case(mixed).label, "order", aut_group(mixed).order)
