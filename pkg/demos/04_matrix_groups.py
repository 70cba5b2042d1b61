"""Continuous groups generated by plane rotations, boosts and unitary blocks.

Run: python demos/04_matrix_groups.py
"""

import cmath

import numpy as np

from rigidspace.arrow import IntervalPartition, from_matrix
from rigidspace.matrix_groups import (
    check_pseudo_orthogonal,
    check_su_embedding,
    expand_to_real,
    gauss_str,
    givens_decompose,
    product,
    quat_group_closure,
    random_generator_word,
    random_special_group_element,
    realify,
    reconstruction_error,
    signature_metric,
)

np.set_printoptions(precision=4, suppress=True)
rng = np.random.default_rng(0)

# Rotations inside blocks and boosts across block boundaries keep the signature metric.
part = IntervalPartition.parse("2+2")
eta = signature_metric(part)
m = product(random_generator_word(part, 30, rng), part.n)
print("metric signs:", eta.signs)
print("30-letter word preserves it:", check_pseudo_orthogonal(m, eta, 1e-9))

# Any rotation matrix factors into adjacent plane rotations.
so5 = random_special_group_element("so", 5, seed=3)
gens = givens_decompose(so5)
print(f"SO(5) sample -> {len(gens)} plane rotations, reconstruction error {reconstruction_error(so5, gens):.1e}")
print("first few:", [(g.position, round(g.parameter, 4)) for g in gens[:4]])

# Replacing x + iy by a 2x2 block turns unitary matrices into rotations.
print("realify(i) =\n", realify(1j))
print("realify(e^{0.5i}) =\n", realify(cmath.exp(0.5j)))
su3 = random_special_group_element("su", 3, seed=1)
print("SU(3) sample lands in SO(6):", check_su_embedding(su3, 1e-9))

# The eight unit quaternions as exact Gaussian-integer matrices.
q8 = quat_group_closure()
print("quaternion group order:", q8.order)
for e in q8:
    print(f"  {gauss_str(e):<28s} -> {from_matrix(expand_to_real(e))}")
