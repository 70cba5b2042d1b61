"""Verification claims, suites and the JSON report format.

Every claim has a stable id, belongs to one suite and carries one anchor
string naming the construction it checks.  Reports are sorted by claim id so
output does not depend on execution order, and runtimes are left out of JSON
unless explicitly requested, so identical configs give byte-identical files.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

import numpy as np

from . import arrow, discrete, matrix_groups as mg, quotient, topology

SCHEMA_ID = "rigidspace-report/1"
SUITES = ("all", "section0", "section1", "section2", "section3")
MAX_N_LIMIT = 6
QUOTIENT_MAX_N = 6

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "suite", "config", "summary", "reports"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "suite": {"type": "string"},
        "config": {
            "type": "object",
            "required": ["max_n", "tolerance", "seed"],
            "properties": {
                "max_n": {"type": "integer", "minimum": 1, "maximum": MAX_N_LIMIT},
                "tolerance": {"type": "number", "exclusiveMinimum": 0},
                "seed": {"type": "integer"},
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "skipped"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("pass", "fail", "skipped")},
        },
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["claim_id", "status", "computed", "expected", "paper_anchor", "runtime_ms"],
                "additionalProperties": False,
                "properties": {
                    "claim_id": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "computed": {},
                    "expected": {},
                    "paper_anchor": {"type": "string"},
                    "runtime_ms": {"type": ["number", "null"]},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class RunConfig:
    max_n: int = 4
    tolerance: float = 1e-9
    seed: int = 0
    output_format: str = "text"
    timings: bool = False

    def __post_init__(self):
        if not 1 <= self.max_n <= MAX_N_LIMIT:
            raise ValueError(f"max_n must be in 1..{MAX_N_LIMIT}, got {self.max_n}")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @property
    def max_n_simple(self) -> int:
        return self.max_n + 1


@dataclass
class VerificationReport:
    claim_id: str
    status: str
    computed: Any
    expected: Any
    paper_anchor: str
    runtime_ms: float | None = None

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "computed": self.computed,
            "expected": self.expected,
            "paper_anchor": self.paper_anchor,
            "runtime_ms": self.runtime_ms,
        }


# A check returns (computed, expected, passed); passed=None means skipped.
Check = Callable[[RunConfig], tuple[Any, Any, "bool | None"]]


@dataclass(frozen=True)
class Claim:
    claim_id: str
    suite: str
    anchor: str
    check: Check = field(compare=False)


def run_claim(claim: Claim, config: RunConfig) -> VerificationReport:
    start = time.perf_counter()
    computed, expected, passed = claim.check(config)
    elapsed = (time.perf_counter() - start) * 1000.0
    status = "skipped" if passed is None else ("pass" if passed else "fail")
    return VerificationReport(
        claim.claim_id,
        status,
        computed,
        expected,
        claim.anchor,
        round(elapsed, 3) if config.timings else None,
    )


# -- suite section0: scalar structures ----------------------------------------


def _d_axioms(_cfg):
    failures = []
    for x, y, z in itertools.product(discrete.BITS, repeat=3):
        add = discrete.d_add
        if add(add(x, y), z) != add(x, add(y, z)):
            failures.append(f"assoc{(x, y, z)}")
        if add(x, y) != add(y, x):
            failures.append(f"comm{(x, y)}")
    for x in discrete.BITS:
        if discrete.d_add(x, 0) != x or discrete.d_add(x, x) != 0:
            failures.append(f"identity/inverse {x}")
    return {"failures": sorted(set(failures))}, {"failures": []}, not failures


def _b_nonassociative(_cfg):
    viol = discrete.associativity_violations(discrete.b_add, discrete.TRITS)
    table_ok = all(
        discrete.b_add(x, y) == discrete.mod2_signed(x + y)
        for x, y in itertools.product(discrete.TRITS, repeat=2)
    )
    comm = all(
        discrete.b_add(x, y) == discrete.b_add(y, x)
        for x, y in itertools.product(discrete.TRITS, repeat=2)
    )
    computed = {
        "violations": len(viol),
        "witnesses": [list(v) for v in viol],
        "table_matches_mod2_signed": table_ok,
        "commutative": comm,
    }
    expected = {"violations": ">= 1", "table_matches_mod2_signed": True, "commutative": True}
    return computed, expected, bool(viol) and table_ok and comm


def _k_restriction(carrier, add, mul):
    def check(_cfg):
        mismatches = [
            (x, y)
            for x, y in itertools.product(carrier, repeat=2)
            if discrete.k_add_restricted(x, y) != add(x, y)
            or discrete.k_mul_restricted(x, y) != mul(x, y)
        ]
        return {"mismatches": [list(m) for m in mismatches]}, {"mismatches": []}, not mismatches

    return check


def _circle_consistency(cfg):
    rng = np.random.default_rng(cfg.seed)
    xs = rng.uniform(-50.0, 50.0, size=2000)
    worst = 0.0
    idempotent = True
    for x in xs:
        phi = discrete.k_reduce(float(x))
        worst = max(worst, abs(cmath.exp(1j * math.pi * phi) - cmath.exp(1j * math.pi * float(x))))
        idempotent &= discrete.k_reduce(phi) == phi and -2.0 < phi <= 2.0
    return (
        {"max_circle_error": worst, "idempotent_in_range": idempotent},
        {"max_circle_error": "<= 1e-12", "idempotent_in_range": True},
        worst <= 1e-12 and idempotent,
    )


def _section0() -> list[Claim]:
    return [
        Claim("circle.consistency", "section0", "signed circle residue |x| mod 2 with exp(i*pi*phi) = exp(i*pi*x)", _circle_consistency),
        Claim(
            "circle.restriction.integers",
            "section0",
            "circle structure restricted to {-1,0,1} coincides with the signed mod-2 structure",
            _k_restriction(discrete.TRITS, discrete.b_add, discrete.b_mul),
        ),
        Claim(
            "circle.restriction.naturals",
            "section0",
            "circle structure restricted to {0,1} coincides with the two-element field",
            _k_restriction(discrete.BITS, discrete.d_add, discrete.d_mul),
        ),
        Claim("discrete.D.field_axioms", "section0", "two-element field with x+y = |x+y| mod 2", _d_axioms),
        Claim("discrete.B.nonassociative", "section0", "signed remainder structure on {-1,0,1} is not associative under addition", _b_nonassociative),
    ]


# -- suite section1: arrow permutations and matrix generators -----------------


def _needs(n):
    def wrap(fn):
        def check(cfg):
            if n > cfg.max_n:
                return None, {"requires_max_n": n}, None
            return fn(cfg)

        return check

    return wrap


def _full_order(n):
    @_needs(n)
    def check(_cfg):
        got = arrow.closure(arrow.standard_generators("full", n)).order
        want = 2**n * math.factorial(n)
        return got, want, got == want

    return check


def _kernel_claim(n, kind, predicate):
    @_needs(n)
    def check(_cfg):
        group = arrow.closure(arrow.standard_generators(kind, n))
        kernel = {p for p in arrow.all_arrow_permutations(n) if predicate(p)}
        want = 2 ** (n - 1) * math.factorial(n)
        got = {"order": group.order, "equals_kernel": group.as_set() == kernel}
        return got, {"order": want, "equals_kernel": True}, got == {"order": want, "equals_kernel": True}

    return check


def _composite_claim(part: arrow.IntervalPartition):
    n = part.n

    @_needs(n)
    def check(_cfg):
        group = arrow.closure(arrow.standard_generators("composite", n, part)).as_set()
        kernel = {p for p in arrow.all_arrow_permutations(n) if arrow.composite_parity(p, part) == 1}
        kernel_closed = all(a * b in kernel for a in kernel for b in kernel)
        computed = {
            "closure_order": len(group),
            "kernel_order": len(kernel),
            "contained": group <= kernel,
            "equal": group == kernel,
            "kernel_closed": kernel_closed,
        }
        return computed, {"contained": True}, group <= kernel

    return check


def _homomorphisms(n):
    @_needs(n)
    def check(_cfg):
        elems = list(arrow.all_arrow_permutations(n))
        bad = 0
        for a, b in itertools.product(elems, repeat=2):
            ab = a * b
            ma, mb = arrow.to_matrix(a), arrow.to_matrix(b)
            if not np.array_equal(arrow.to_matrix(ab), ma @ mb):
                bad += 1
            elif arrow.det(arrow.to_matrix(ab)) != arrow.det(ma) * arrow.det(mb):
                bad += 1
            elif arrow.negative_parity(ab) != arrow.negative_parity(a) * arrow.negative_parity(b):
                bad += 1
        return {"pairs": len(elems) ** 2, "failures": bad}, {"failures": 0}, bad == 0

    return check


def _metric_claim(part: arrow.IntervalPartition):
    def check(cfg):
        rng = np.random.default_rng([cfg.seed, *part.sizes])
        eta = mg.signature_metric(part)
        worst_metric = worst_det = 0.0
        for _ in range(100):
            word = mg.random_generator_word(part, int(rng.integers(1, 51)), rng)
            m = mg.product(word, part.n)
            e_metric, e_det = mg.pseudo_orthogonality_defect(m, eta)
            worst_metric, worst_det = max(worst_metric, e_metric), max(worst_det, e_det)
        ok = worst_metric <= cfg.tolerance and worst_det <= cfg.tolerance
        return (
            {"words": 100, "max_metric_error": worst_metric, "max_det_error": worst_det},
            {"max_error": f"<= {cfg.tolerance:g}"},
            ok,
        )

    return check


def _givens_claim(n):
    def check(cfg):
        worst = 0.0
        too_long = 0
        for i in range(50):
            m = mg.random_special_group_element("so", n, cfg.seed * 1000 + i)
            gens = mg.givens_decompose(m, cfg.tolerance)
            too_long += len(gens) > n * (n - 1) // 2 + (n - 1)
            worst = max(worst, mg.reconstruction_error(m, gens))
        return (
            {"samples": 50, "max_reconstruction_error": worst, "over_length_bound": too_long},
            {"max_reconstruction_error": "< 1e-9", "over_length_bound": 0},
            worst < 1e-9 and too_long == 0,
        )

    return check


def _section1(cfg: RunConfig) -> list[Claim]:
    anchor_full = "arrow permutations form a group isomorphic to the signed transition matrices"
    anchor_plus = "even arrow permutations correspond to transition matrices with unit determinant"
    anchor_minus = "permutations with an even number of inversions correspond to an even number of negative entries"
    anchor_pm = "even-composite permutations: unit product of block determinants over the partition"
    claims = []
    for n in range(2, max(cfg.max_n, 4) + 1):
        claims.append(Claim(f"arrow.P.order.n{n}", "section1", anchor_full, _full_order(n)))
        claims.append(
            Claim(f"arrow.Pplus.det_kernel.n{n}", "section1", anchor_plus,
                  _kernel_claim(n, "even", lambda p: arrow.det(arrow.to_matrix(p)) == 1))
        )
        claims.append(
            Claim(f"arrow.Pminus.negative_kernel.n{n}", "section1", anchor_minus,
                  _kernel_claim(n, "even_inverse", lambda p: arrow.negative_parity(p) == 1))
        )
    for n in (2, 3):
        claims.append(Claim(f"arrow.homomorphism.n{n}", "section1", anchor_full, _homomorphisms(n)))
    for sizes in ((2, 1), (2, 2)):
        part = arrow.IntervalPartition(sizes)
        claims.append(Claim(f"arrow.Ppm.containment.{part}", "section1", anchor_pm, _composite_claim(part)))
    for sizes in ((3,), (2, 1), (2, 2)):
        part = arrow.IntervalPartition(sizes)
        claims.append(
            Claim(f"matrix.metric.{part}", "section1",
                  "rotation and boost plane generators generate the generalized special orthogonal group",
                  _metric_claim(part))
        )
    for n in range(2, 9):
        claims.append(
            Claim(f"matrix.givens.n{n:d}", "section1",
                  "for a single block the automorphism group is SO(n)", _givens_claim(n))
        )
    return claims


# -- suite section2: factorized graphs ----------------------------------------


def _graph_id(g: topology.FactorizedGraph) -> str:
    letter = "d" if g.kind == "simple" else "b"
    label = topology.expected_label(g)
    part = topology.block_partition(g)
    if label is topology.GroupLabel.P_n_pm:
        shape = f"blocks.{part}"
    elif len(g.class_of(0)) == len(g.nodes):
        shape = "point"
    elif label in (topology.GroupLabel.P_n_minus,):
        shape = "axes"
    else:
        shape = "one"
    return f"topo.{letter}.{shape}.n{g.n}"


def _case_claim(g: topology.FactorizedGraph):
    def check(_cfg):
        r = topology.verify_case(g)
        computed = {
            "label": r.label.value if r.label else None,
            "order": r.computed_order,
            "set_equal": r.set_equal,
            "preserves_classes": r.preserves_classes,
        }
        expected = {"order": r.expected_order, "set_equal": True, "preserves_classes": True}
        return computed, expected, bool(r.set_equal) and r.preserves_classes

    return check


def _allowed_recheck(cfg):
    bad = 0
    checked = 0
    for kind, top in (("double", cfg.max_n), ("simple", cfg.max_n_simple)):
        for n in range(1, top + 1):
            for g in topology.canonical_graphs(kind, n):
                for mv in topology.allowed_generators(g):
                    checked += 1
                    if mv.reversible and topology.violates_prohibition(mv, g):
                        bad += 1
                    if not g.preserves_classes(mv.permutation(n)):
                        bad += 1
    return {"moves_checked": checked, "violations": bad}, {"violations": 0}, bad == 0


def _monotone(cfg):
    shrinking = []
    for kind, top in (("double", cfg.max_n), ("simple", cfg.max_n_simple)):
        for n in range(2, top + 1):
            for fine, coarse in topology.coarsening_edges(kind, n):
                a, b = topology.aut_group(fine).order, topology.aut_group(coarse).order
                if b < a:
                    shrinking.append([_graph_id(fine), _graph_id(coarse), a, b])
    return {"shrinking_edges": shrinking}, {"shrinking_edges": []}, not shrinking


def _section2(cfg: RunConfig) -> list[Claim]:
    anchor = "automorphisms of factorized graphs under the reversible-arrow prohibition"
    claims = []
    seen = set()
    for kind, top in (("double", cfg.max_n), ("simple", cfg.max_n_simple)):
        for n in range(2, top + 1):
            for g in topology.canonical_graphs(kind, n):
                cid = _graph_id(g)
                if cid not in seen:
                    seen.add(cid)
                    claims.append(Claim(cid, "section2", anchor, _case_claim(g)))
    claims.append(Claim("topo.allowed.recheck", "section2", "reversible-arrow prohibition principle", _allowed_recheck))
    claims.append(Claim("topo.monotone", "section2", "coarsening toward the basepoint lifts the prohibition", _monotone))
    return claims


# -- suite section3: quotients and unitary embeddings -------------------------


def _subgroups(n: int) -> Iterator[quotient.EvenSubgroup]:
    yield quotient.EvenSubgroup.trivial(n)
    yield quotient.EvenSubgroup.plus(n)
    for part in arrow.compositions(n):
        if part.m > 1:
            yield quotient.EvenSubgroup.blockwise(part)
    yield quotient.EvenSubgroup.full(n)


def _quotient_cosets(cfg):
    failures = []
    checked = 0
    for n in range(1, QUOTIENT_MAX_N + 1):
        space = [discrete.BitVector(b) for b in itertools.product((0, 1), repeat=n)]
        for H in _subgroups(n):
            checked += 1
            kernel = {v for v in space if quotient.syndrome(v, H).is_zero()}
            images = {quotient.syndrome(v, H) for v in space}
            want_cosets = {"trivial": 2**n, "plus": 2, "blockwise": 2**H.m, "full": 1}[H.variant]
            if kernel != quotient.enumerate_members(H):
                failures.append(f"{H}: kernel != members")
            if len(images) != want_cosets:
                failures.append(f"{H}: {len(images)} cosets, expected {want_cosets}")
    return {"subgroups_checked": checked, "failures": failures}, {"failures": []}, not failures


def _factorization_shapes(_cfg):
    failures = []
    for n in range(1, QUOTIENT_MAX_N + 1):
        for H in _subgroups(n):
            for kind in ("simple", "double"):
                f = quotient.induced_factorization(H, kind)
                rest = [c for c in f.classes if 0 not in c]
                if H.variant == "full":
                    ok = len(f.classes) == 1
                else:
                    ok = f.basepoint_class == (0,) and len(rest) == H.m
                if not ok:
                    failures.append(f"{H}/{kind}: {f.classes}")
    return {"failures": failures}, {"failures": []}, not failures


def _random_complex(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def _realify_hom(cfg):
    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 5))
        a, b = _random_complex(rng, n), _random_complex(rng, n)
        ra, rb = mg.realify(a), mg.realify(b)
        worst = max(
            worst,
            float(np.max(np.abs(mg.realify(a @ b) - ra @ rb))),
            float(np.max(np.abs(mg.realify(a + b) - (ra + rb)))),
            float(np.max(np.abs(mg.realify(a.conj().T) - ra.T))),
        )
    return {"pairs": 100, "max_error": worst}, {"max_error": "<= 1e-12"}, worst <= 1e-12


def _su_embedding(n):
    def check(cfg):
        worst_orth = worst_det = 0.0
        all_ok = True
        for i in range(50):
            u = mg.random_special_group_element("su", n, cfg.seed * 1000 + i)
            r = mg.realify(u)
            worst_orth = max(worst_orth, float(np.max(np.abs(r.T @ r - np.eye(2 * n)))))
            worst_det = max(worst_det, abs(float(np.linalg.det(r)) - 1.0))
            all_ok &= mg.check_su_embedding(u, cfg.tolerance)
        ok = all_ok and worst_orth <= 1e-9 and worst_det <= 1e-9
        return (
            {"samples": 50, "max_orthogonality_error": worst_orth, "max_det_error": worst_det},
            {"max_error": "<= 1e-9"},
            ok,
        )

    return check


def _u1_so2(cfg):
    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    for theta in rng.uniform(-math.pi, math.pi, size=200):
        rot = mg.Rot2(math.cos(theta), math.sin(theta)).matrix
        worst = max(worst, float(np.max(np.abs(mg.realify(cmath.exp(1j * theta)) - rot))))
    return {"angles": 200, "max_error": worst}, {"max_error": "<= 1e-12"}, worst <= 1e-12


def _quat_structure(_cfg):
    group = mg.quat_group_closure()
    in_p4_plus = 0
    images = set()
    for e in group:
        try:
            r = mg.expand_to_real(e)
        except mg.EmbeddingError:
            continue
        p = arrow.from_matrix(r)
        images.add(p)
        in_p4_plus += arrow.classify(p).in_P_plus
    computed = {"order": group.order, "in_P4_plus": in_p4_plus, "injective": len(images) == group.order}
    expected = {"order": 8, "in_P4_plus": 8, "injective": True}
    return computed, expected, computed == expected


def _quat_su2(cfg):
    rng = np.random.default_rng(cfg.seed)
    worst_unit = worst_det = 0.0
    for _ in range(200):
        u = mg.random_unit_quat(rng).matrix
        worst_unit = max(worst_unit, float(np.max(np.abs(u.conj().T @ u - np.eye(2)))))
        worst_det = max(worst_det, abs(np.linalg.det(u) - 1.0))
    ok = worst_unit <= 1e-12 and worst_det <= 1e-12
    return {"samples": 200, "max_unitarity_error": worst_unit, "max_det_error": float(worst_det)}, {"max_error": "<= 1e-12"}, ok


def _section3(cfg: RunConfig) -> list[Claim]:
    claims = [
        Claim("quotient.cosets", "section3", "quotient of D^n by an even-weight subgroup is D^m", _quotient_cosets),
        Claim("quotient.factorization", "section3", "a quotient group induces a partition of the graphs d and b", _factorization_shapes),
        Claim("matrix.realify.homomorphism", "section3", "realification x+iy -> [[x, y], [-y, x]] applied entrywise", _realify_hom),
        Claim("matrix.realify.u1_so2", "section3", "U(1) corresponds to SO(2) under realification", _u1_so2),
        Claim("matrix.quat.order", "section3", "group generated by u_1..u_4 embeds into the even signed permutations", _quat_structure),
        Claim("matrix.quat.su2", "section3", "normalized quaternionic elements form SU(2)", _quat_su2),
    ]
    for n in range(1, 6):
        claims.append(
            Claim(f"matrix.su_embedding.n{n}", "section3",
                  "realification maps SU(n) into SO(2n)", _su_embedding(n))
        )
    return claims


def claims_for(suite: str, config: RunConfig) -> list[Claim]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    builders = {
        "section0": lambda: _section0(),
        "section1": lambda: _section1(config),
        "section2": lambda: _section2(config),
        "section3": lambda: _section3(config),
    }
    names = builders if suite == "all" else [suite]
    claims = [c for name in names for c in builders[name]()]
    return sorted(claims, key=lambda c: c.claim_id)


def run_suite(suite: str, config: RunConfig) -> list[VerificationReport]:
    return [run_claim(c, config) for c in claims_for(suite, config)]


def exit_code(reports: list[VerificationReport]) -> int:
    return 0 if all(r.status in ("pass", "skipped") for r in reports) else 1


def report_document(suite: str, config: RunConfig, reports: list[VerificationReport]) -> dict:
    summary = {k: sum(r.status == k for r in reports) for k in ("pass", "fail", "skipped")}
    return {
        "schema": SCHEMA_ID,
        "suite": suite,
        "config": {"max_n": config.max_n, "tolerance": config.tolerance, "seed": config.seed},
        "summary": summary,
        "reports": [r.to_json() for r in sorted(reports, key=lambda r: r.claim_id)],
    }


def dumps(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def format_text(reports: list[VerificationReport]) -> str:
    lines = []
    for r in sorted(reports, key=lambda r: r.claim_id):
        timing = f"  ({r.runtime_ms:.1f} ms)" if r.runtime_ms is not None else ""
        lines.append(f"{r.status.upper():7s} {r.claim_id}{timing}")
        if r.status == "fail":
            lines.append(f"        computed: {json.dumps(r.computed, default=_json_default)}")
            lines.append(f"        expected: {json.dumps(r.expected, default=_json_default)}")
    summary = {k: sum(r.status == k for r in reports) for k in ("pass", "fail", "skipped")}
    lines.append(f"{summary['pass']} passed, {summary['fail']} failed, {summary['skipped']} skipped")
    return "\n".join(lines) + "\n"
