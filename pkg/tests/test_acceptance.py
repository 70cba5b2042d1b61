"""One test per acceptance criterion; each records a pass/fail line shown in the summary."""

import cmath
import itertools
import json
import math
import subprocess
import sys

import jsonschema
import numpy as np

from rigidspace.arrow import (
    IntervalPartition,
    closure,
    composite_parity,
    det,
    from_matrix,
    negative_parity,
    standard_generators,
    to_matrix,
)
from rigidspace.discrete import (
    BITS,
    TRITS,
    associativity_violations,
    b_add,
    b_mul,
    d_add,
    d_mul,
    k_add_restricted,
    k_mul_restricted,
    mod2_signed,
)
from rigidspace.matrix_groups import (
    ROTATION,
    PlaneGenerator,
    Quat2,
    SignatureMetric,
    check_pseudo_orthogonal,
    check_su_embedding,
    expand_to_real,
    givens_decompose,
    normalize,
    plane_generator_matrix,
    product,
    pseudo_orthogonality_defect,
    quat_group_closure,
    random_generator_word,
    random_special_group_element,
    realify,
    reconstruction_error,
    signature_metric,
)
from rigidspace.quotient import (
    EvenSubgroup,
    enumerate_members,
    induced_factorization,
    syndrome,
)
from rigidspace.discrete import BitVector
from rigidspace.report import REPORT_SCHEMA
from rigidspace.topology import GroupLabel, canonical_graphs, verify_case

from conftest import brute_force_arrow_perms


def test_criterion_01_group_orders(acceptance):
    lines, ok = [], True
    for n in (2, 3, 4):
        space = brute_force_arrow_perms(n)
        full = closure(standard_generators("full", n)).as_set()
        even = closure(standard_generators("even", n)).as_set()
        negs = closure(standard_generators("even_inverse", n)).as_set()
        det_kernel = {p for p in space if round(np.linalg.det(to_matrix(p))) == 1}
        neg_kernel = {p for p in space if sum(t < 0 for t in p.targets) % 2 == 0}
        ok &= len(full) == 2**n * math.factorial(n) == len(space)
        ok &= len(even) == 2 ** (n - 1) * math.factorial(n) and even == det_kernel
        ok &= negs == neg_kernel
        lines.append(f"n={n}: |P|={len(full)} |P+|={len(even)} |P-|={len(negs)}")
    acceptance(1, "group orders and parity kernels", ok, "; ".join(lines))
    assert ok


def test_criterion_02_composite_parity(acceptance):
    contained_all, details = True, []
    for sizes in ((2, 1), (2, 2)):
        part = IntervalPartition(sizes)
        group = closure(standard_generators("composite", part.n, part)).as_set()
        kernel = {p for p in brute_force_arrow_perms(part.n) if composite_parity(p, part) == 1}
        contained = group <= kernel
        contained_all &= contained
        details.append(
            f"{part}: |closure|={len(group)} |kernel|={len(kernel)} "
            f"contained={contained} equal={group == kernel}"
        )
    acceptance(2, "composite generators stay in the composite-parity kernel", contained_all, "; ".join(details))
    assert contained_all, "; ".join(details)


def test_criterion_03_factorized_graph_cases(acceptance):
    bad, checked = [], 0
    cases = [("double", n) for n in range(1, 5)] + [("simple", n) for n in range(1, 6)]
    for kind, n in cases:
        for g in canonical_graphs(kind, n):
            r = verify_case(g)
            checked += 1
            if not r.set_equal:
                bad.append(f"{'b' if kind == 'double' else 'd'} n={n} {r.label.value} {r.computed_order}!={r.expected_order}")
    alternating = {n: verify_case(next(canonical_graphs("simple", n))).computed_order for n in (3, 4, 5)}
    ok = not bad and alternating == {3: 3, 4: 12, 5: 60}
    acceptance(3, "automorphism groups of factorized graphs", ok,
               f"{checked - len(bad)}/{checked} cases equal; A_n orders {alternating}"
               + (f"; mismatched: {', '.join(bad)}" if bad else ""))
    assert ok, f"mismatched: {bad}"


def test_criterion_04_quotient_structure(acceptance):
    ok = True
    for n in range(1, 7):
        space = [BitVector(b) for b in itertools.product(BITS, repeat=n)]
        subgroups = [EvenSubgroup.trivial(n), EvenSubgroup.plus(n), EvenSubgroup.full(n)]
        subgroups += [EvenSubgroup.blockwise(p) for p in _all_partitions(n)]
        for H in subgroups:
            kernel = {v for v in space if syndrome(v, H).is_zero()}
            ok &= kernel == enumerate_members(H)
            cosets = len({syndrome(v, H) for v in space})
            want = {"trivial": 2**n, "plus": 2, "blockwise": 2 ** H.m, "full": 1}[H.variant]
            ok &= cosets == want
            for kind in ("simple", "double"):
                f = induced_factorization(H, kind)
                if H.variant == "full":
                    ok &= len(f.classes) == 1
                elif H.variant == "plus":
                    ok &= len(f.classes) == 2 and f.basepoint_class == (0,)
                else:
                    # one class per block, basepoint isolated
                    want_classes = [(0,)] + [
                        tuple(s * i for i in block for s in ((1, -1) if kind == "double" else (1,)))
                        for block in H.blocks
                    ]
                    ok &= list(f.classes) == want_classes
    acceptance(4, "quotient cosets and induced factorizations", ok, "n=1..6, all four variants")
    assert ok


def _all_partitions(n):
    from rigidspace.arrow import compositions

    return list(compositions(n))


def test_criterion_05_non_associative_addition(acceptance):
    violations = associativity_violations(b_add, TRITS)
    direct = [
        (x, y, z) for x, y, z in itertools.product(TRITS, repeat=3)
        if mod2_signed(mod2_signed(x + y) + z) != mod2_signed(x + mod2_signed(y + z))
    ]
    table = all(b_add(x, y) == mod2_signed(x + y) for x, y in itertools.product(TRITS, repeat=2))
    ok = bool(violations) and sorted(violations) == sorted(direct) and table
    acceptance(5, "signed addition is not associative", ok, f"{len(violations)} violating triples, e.g. {violations[0]}")
    assert ok


def test_criterion_06_circle_restrictions(acceptance):
    to_bits = all(
        k_add_restricted(x, y) == d_add(x, y) and k_mul_restricted(x, y) == d_mul(x, y)
        for x, y in itertools.product(BITS, repeat=2)
    )
    to_trits = all(
        k_add_restricted(x, y) == b_add(x, y) and k_mul_restricted(x, y) == b_mul(x, y)
        for x, y in itertools.product(TRITS, repeat=2)
    )
    acceptance(6, "circle arithmetic restricts to the two discrete tables", to_bits and to_trits,
               f"bits={to_bits} trits={to_trits}")
    assert to_bits and to_trits


def test_criterion_07_metric_preservation(acceptance):
    worst_metric = worst_det = 0.0
    rng = np.random.default_rng(0)
    for sizes in ((3,), (2, 1), (2, 2)):
        part = IntervalPartition(sizes)
        eta = signature_metric(part)
        for _ in range(100):
            word = random_generator_word(part, int(rng.integers(1, 51)), rng)
            m_err, d_err = pseudo_orthogonality_defect(product(word, part.n), eta)
            worst_metric, worst_det = max(worst_metric, m_err), max(worst_det, d_err)
    ok = worst_metric <= 1e-9 and worst_det <= 1e-9
    acceptance(7, "generator words preserve the signature metric", ok,
               f"max metric error {worst_metric:.2e}, max det error {worst_det:.2e}")
    assert ok


def test_criterion_08_givens_surjectivity(acceptance):
    worst = 0.0
    for n in range(2, 9):
        for seed in range(50):
            m = random_special_group_element("so", n, seed)
            worst = max(worst, reconstruction_error(m, givens_decompose(m)))
    ok = worst < 1e-9
    acceptance(8, "SO(n) matrices factor into plane rotations", ok, f"max reconstruction error {worst:.2e}")
    assert ok


def test_criterion_09_realification(acceptance):
    rng = np.random.default_rng(0)
    hom = 0.0
    for _ in range(100):
        a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        hom = max(
            hom,
            np.max(np.abs(realify(a @ b) - realify(a) @ realify(b))),
            np.max(np.abs(realify(a + b) - realify(a) - realify(b))),
            np.max(np.abs(realify(a.conj().T) - realify(a).T)),
        )
    emb = 0.0
    su_ok = True
    for n in range(1, 6):
        for seed in range(50):
            u = random_special_group_element("su", n, seed)
            su_ok &= check_su_embedding(u, 1e-9)
            r = realify(u)
            emb = max(emb, np.max(np.abs(r.T @ r - np.eye(2 * n))), abs(np.linalg.det(r) - 1))
    circle = 0.0
    for theta in rng.uniform(-math.pi, math.pi, 100):
        rot = plane_generator_matrix(PlaneGenerator(ROTATION, 1, theta), 2)
        circle = max(circle, np.max(np.abs(realify(cmath.exp(1j * theta)) - rot)))
    ok = hom <= 1e-12 and su_ok and emb <= 1e-9 and circle <= 1e-12
    acceptance(9, "realification embeds SU(n) in SO(2n)", ok,
               f"homomorphism {hom:.1e}, embedding {emb:.1e}, circle {circle:.1e}")
    assert ok


def test_criterion_10_quaternionic_structure(acceptance):
    group = quat_group_closure()
    images = set()
    ok = group.order == 8
    for e in group:
        r = expand_to_real(e)
        ok &= det(r) == 1 and round(np.linalg.det(r)) == 1
        images.add(from_matrix(r))
    ok &= len(images) == 8
    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(100):
        u = normalize(Quat2(*rng.normal(size=4))).matrix
        worst = max(worst, np.max(np.abs(u.conj().T @ u - np.eye(2))), abs(np.linalg.det(u) - 1))
    ok &= worst <= 1e-12
    acceptance(10, "quaternion unit group and its real image", ok,
               f"order {group.order}, {len(images)} distinct images in P_4^+, SU(2) error {worst:.1e}")
    assert ok


def test_criterion_11_cli_contract(acceptance):
    cmd = [sys.executable, "-m", "rigidspace", "verify", "all", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    doc = json.loads(first.stdout)
    try:
        jsonschema.validate(doc, REPORT_SCHEMA)
        valid = True
    except jsonschema.ValidationError:
        valid = False
    identical = first.stdout == second.stdout
    failed = [r["claim_id"] for r in doc["reports"] if r["status"] == "fail"]
    ok = first.returncode == 0 and valid and identical
    acceptance(11, "verify all: exit 0, schema-valid, reproducible", ok,
               f"exit {first.returncode}, schema valid={valid}, byte-identical={identical}, "
               f"failing claims: {', '.join(failed) or 'none'}")
    assert valid and identical
    code = first.returncode
    assert code == 0, f"failing claims: {failed}"
