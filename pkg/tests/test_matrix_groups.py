import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rigidspace.arrow import IntervalPartition, classify, det, from_matrix
from rigidspace.matrix_groups import (
    BOOST,
    ROTATION,
    U1,
    U2,
    U3,
    U4,
    EmbeddingError,
    NotSpecialOrthogonal,
    PlaneGenerator,
    Quat2,
    Rot2,
    SignatureMetric,
    Split2,
    check_pseudo_orthogonal,
    check_su_embedding,
    expand_to_real,
    gauss_matmul,
    gauss_neg,
    gauss_to_complex,
    givens_decompose,
    normalize,
    plane_generator_matrix,
    product,
    quat_block_closure,
    quat_group_closure,
    random_generator_word,
    random_special_group_element,
    realify,
    reconstruction_error,
    signature_metric,
)

reals = st.floats(-10, 10, allow_nan=False)


@given(reals, reals, reals, reals)
def test_rot_and_split_products_match_numpy(a, b, c, d):
    for cls in (Rot2, Split2):
        x, y = cls(a, b), cls(c, d)
        assert np.allclose((x * y).matrix, x.matrix @ y.matrix, atol=1e-9)


@given(st.lists(reals, min_size=8, max_size=8))
def test_quat_product_matches_numpy_and_norm_is_multiplicative(v):
    a, b = Quat2(*v[:4]), Quat2(*v[4:])
    ab = a * b
    assert np.allclose(ab.matrix, a.matrix @ b.matrix, atol=1e-9)
    assert math.isclose(math.sqrt(ab.norm2), math.sqrt(a.norm2) * math.sqrt(b.norm2), rel_tol=1e-12, abs_tol=1e-12)


def test_family_examples():
    assert Rot2(0, 1) * Rot2(0, 1) == Rot2(-1, 0)
    a = Rot2(0.3, -2.0)
    assert Rot2(1, 0) * a == a
    u2, u3, u4 = Quat2(0, 0, 0, 1), Quat2(0, 0, 1, 0), Quat2(0, 1, 0, 0)
    assert u2 * u3 == Quat2(0, -1, 0, 0)
    assert np.allclose((u2 * u3).matrix, -u4.matrix)


def test_normalize_examples():
    assert normalize(Rot2(3, 4)) == Rot2(0.6, 0.8)
    assert normalize(Split2(2, 0)) == Split2(1, 0)
    assert normalize(Rot2(0.6, 0.8)) == Rot2(0.6, 0.8)
    with pytest.raises(ValueError):
        normalize(Rot2(0, 0))
    with pytest.raises(ValueError):
        normalize(Split2(1, 1))


@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=4, max_size=4))
def test_normalized_quat_is_special_unitary(v):
    q = Quat2(*v)
    if q.norm2 < 1e-6:
        return
    u = normalize(q).matrix
    assert np.max(np.abs(u.conj().T @ u - np.eye(2))) <= 1e-12
    assert abs(np.linalg.det(u) - 1) <= 1e-12


def test_plane_generator_examples():
    l = np.array([[0, 1], [-1, 0]])
    assert np.allclose(plane_generator_matrix(PlaneGenerator(ROTATION, 1, math.pi / 2), 2), l)
    assert np.array_equal(plane_generator_matrix(PlaneGenerator(ROTATION, 2, 0.0), 4), np.eye(4))
    phi = 0.7
    t = plane_generator_matrix(PlaneGenerator(BOOST, 1, phi), 2)
    assert np.allclose(t, [[math.cosh(phi), math.sinh(phi)], [math.sinh(phi), math.cosh(phi)]])
    eta = np.diag([1.0, -1.0])
    assert np.allclose(t.T @ eta @ t, eta)
    with pytest.raises(ValueError):
        plane_generator_matrix(PlaneGenerator(ROTATION, 3, 0.1), 3)


def test_signature_metric_examples():
    assert signature_metric(IntervalPartition.single(3)).signs == (1, 1, 1)
    assert signature_metric(IntervalPartition((1, 1))).signs == (1, -1)
    assert signature_metric(IntervalPartition((2, 2))).signs == (1, 1, -1, -1)
    assert signature_metric(IntervalPartition((1, 2, 1))).signs == (1, -1, -1, 1)


def test_pseudo_orthogonal_examples():
    eta = signature_metric(IntervalPartition((2, 1)))
    assert check_pseudo_orthogonal(np.eye(3), eta, 1e-9)
    word = random_generator_word(IntervalPartition((2, 1)), 20, np.random.default_rng(0))
    assert check_pseudo_orthogonal(product(word, 3), eta, 1e-9)
    assert not check_pseudo_orthogonal(np.diag([1.0, -1.0]), SignatureMetric.euclidean(2), 1e-9)
    with pytest.raises(ValueError):
        check_pseudo_orthogonal(np.eye(2), eta, 1e-9)


@pytest.mark.parametrize("sizes", [(3,), (2, 1), (2, 2), (1, 1), (1, 2, 2)])
def test_words_preserve_signature(sizes):
    part = IntervalPartition(sizes)
    eta = signature_metric(part)
    rng = np.random.default_rng(7)
    for length in (1, 10, 50):
        m = product(random_generator_word(part, length, rng), part.n)
        assert check_pseudo_orthogonal(m, eta, 1e-9 * length)


def test_boost_breaks_euclidean_metric():
    t = plane_generator_matrix(PlaneGenerator(BOOST, 1, 0.5), 2)
    assert not check_pseudo_orthogonal(t, SignatureMetric.euclidean(2), 1e-9)


def test_givens_examples():
    assert givens_decompose(np.eye(4)) == []
    gens = givens_decompose(plane_generator_matrix(PlaneGenerator(ROTATION, 1, 0.3), 2))
    assert len(gens) == 1 and gens[0].position == 1
    assert math.isclose(math.remainder(gens[0].parameter - 0.3, 2 * math.pi), 0.0, abs_tol=1e-12)
    # a half turn needs the sign flip on the last pair
    gens = givens_decompose(-np.eye(2))
    assert reconstruction_error(-np.eye(2), gens) < 1e-12


def test_givens_rejects_non_special():
    with pytest.raises(NotSpecialOrthogonal, match="det"):
        givens_decompose(np.diag([1.0, -1.0, 1.0]))
    with pytest.raises(NotSpecialOrthogonal, match="orthogonal"):
        givens_decompose(np.array([[1.0, 0.5], [0.0, 1.0]]))
    with pytest.raises(NotSpecialOrthogonal):
        givens_decompose(np.zeros((2, 3)))


@pytest.mark.parametrize("n", range(2, 9))
def test_givens_round_trip(n):
    bound = n * (n - 1) // 2 + (n - 1)
    for seed in range(10):
        m = random_special_group_element("so", n, seed)
        gens = givens_decompose(m)
        assert all(g.kind == ROTATION for g in gens)
        assert len(gens) <= bound
        assert reconstruction_error(m, gens) < 1e-9


def test_givens_on_signed_permutation_matrices():
    # exact zeros exercise the skip rule
    from rigidspace.arrow import all_arrow_permutations, to_matrix

    for p in all_arrow_permutations(3):
        m = to_matrix(p)
        if det(m) == 1:
            m = m.astype(float)
            assert reconstruction_error(m, givens_decompose(m)) < 1e-12


def test_realify_examples():
    assert np.array_equal(realify(1j), [[0, 1], [-1, 0]])
    assert np.array_equal(realify(np.eye(3)), np.eye(6))


def test_realify_homomorphism():
    rng = np.random.default_rng(1)
    for _ in range(100):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        assert np.max(np.abs(realify(a @ b) - realify(a) @ realify(b))) <= 1e-12
        assert np.max(np.abs(realify(a + b) - realify(a) - realify(b))) <= 1e-12
        assert np.max(np.abs(realify(a.conj().T) - realify(a).T)) <= 1e-12


@given(st.floats(-10, 10, allow_nan=False))
def test_unit_circle_goes_to_rotation(theta):
    r = realify(cmath.exp(1j * theta))
    rot = plane_generator_matrix(PlaneGenerator(ROTATION, 1, theta), 2)
    assert np.max(np.abs(r - rot)) <= 1e-12


def test_su_embedding_examples():
    # a bare phase is unitary but not special; its image is still a rotation
    phase = np.array([[cmath.exp(0.4j)]])
    assert not check_su_embedding(phase, 1e-9)
    assert check_pseudo_orthogonal(realify(phase), SignatureMetric.euclidean(2), 1e-12)
    assert check_su_embedding(np.eye(1), 1e-9)
    assert check_su_embedding(np.eye(3), 1e-9)
    for n in range(1, 6):
        for seed in range(10):
            assert check_su_embedding(random_special_group_element("su", n, seed), 1e-9)
    assert not check_su_embedding(np.diag([1j, 1.0]), 1e-9)
    assert not check_su_embedding(np.ones((2, 3)), 1e-9)


def test_random_special_group_element():
    m = random_special_group_element("so", 3, 42)
    assert np.max(np.abs(m.T @ m - np.eye(3))) <= 1e-12
    assert np.array_equal(m, random_special_group_element("so", 3, 42))
    assert np.array_equal(random_special_group_element("su", 1, 5), np.eye(1))
    r = random_special_group_element("so", 2, 11)
    assert math.isclose(r[0, 0], r[1, 1], abs_tol=1e-12) and math.isclose(r[0, 1], -r[1, 0], abs_tol=1e-12)
    with pytest.raises(ValueError):
        random_special_group_element("sp", 2, 0)


def test_quat_group():
    group = quat_group_closure()
    assert group.order == 8
    assert U1 in group and gauss_neg(U1) in group
    assert gauss_matmul(U3, U3) == gauss_neg(U1)
    assert gauss_matmul(U2, U3) == gauss_neg(U4)
    assert np.array_equal(gauss_to_complex(U1), np.eye(2))
    assert set(group) == {u for g in (U1, U2, U3, U4) for u in (g, gauss_neg(g))}


def test_expand_to_real():
    assert np.array_equal(expand_to_real(U1), np.eye(4))
    r2 = expand_to_real(U2)
    assert round(np.linalg.det(r2)) == 1
    images = set()
    for e in quat_group_closure():
        p = from_matrix(expand_to_real(e))
        assert classify(p).in_P_plus
        images.add(p)
    assert len(images) == 8
    with pytest.raises(EmbeddingError):
        expand_to_real((((1, 1), (0, 0)), ((0, 0), (1, 0))))


def test_quat_block_closure_n3_lands_in_even_group():
    group = quat_block_closure(3)
    assert group.order == 96
    for e in group:
        assert det(expand_to_real(e)) == 1
