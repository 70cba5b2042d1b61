"""Command-line front end: ``rigidspace enumerate|verify|quotient|decompose|embed``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import arrow, matrix_groups as mg, quotient, report
from .discrete import BitVector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _config(args) -> report.RunConfig:
    try:
        return report.RunConfig(
            max_n=args.max_n,
            tolerance=args.tol,
            seed=args.seed,
            output_format=args.format,
            timings=getattr(args, "timings", False),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- enumerate ----------------------------------------------------------------


def enumerate_group(spec: str):
    """Elements (as strings) of ``P:n``, ``P+:n``, ``P-:n``, ``Ppm:2+1``, ``Poplus:n`` or ``Q8``."""
    spec = spec.strip()
    if spec == "Q8":
        return [mg.gauss_str(e) for e in mg.quat_group_closure()]
    m = re.fullmatch(r"(P|P\+|P-|Ppm|Poplus):([0-9+]+)", spec)
    if not m:
        raise UsageError(f"bad group spec {spec!r}")
    name, arg = m.groups()
    if name == "Ppm":
        part = arrow.IntervalPartition.parse(arg)
        n, kind = part.n, "composite"
    else:
        if not arg.isdigit():
            raise UsageError(f"bad group spec {spec!r}")
        n, part = int(arg), None
        kind = {"P": "full", "P+": "even", "P-": "even_inverse", "Poplus": None}[name]
    if name == "Poplus":
        if not 2 <= n <= 3:
            raise UsageError("Poplus:n supports n in 2..3")
        return [mg.gauss_str(e) for e in mg.quat_block_closure(n)]
    if not 1 <= n <= arrow.MAX_DEGREE:
        raise UsageError(f"degree {n} outside 1..{arrow.MAX_DEGREE}")
    group = arrow.closure(arrow.standard_generators(kind, n, part), n=n)
    return [str(p) for p in group]


def cmd_enumerate(args) -> int:
    elements = enumerate_group(args.group)
    if args.format == "json":
        text = report.dumps({"group": args.group, "order": len(elements), "elements": elements})
    else:
        text = "\n".join(elements) + f"\norder: {len(elements)}\n"
    _emit(text, args)
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    config = _config(args)
    reports = report.run_suite(args.suite, config)
    if args.format == "json":
        text = report.dumps(report.report_document(args.suite, config, reports))
    else:
        text = report.format_text(reports)
    _emit(text, args)
    return report.exit_code(reports)


# -- quotient -----------------------------------------------------------------


def cmd_quotient(args) -> int:
    try:
        H = quotient.EvenSubgroup.parse(args.subgroup)
        v = BitVector.parse(args.vector)
        syn = quotient.syndrome(v, H)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = {"subgroup": str(H), "vector": str(v), "syndrome": str(syn)}
    if args.classes:
        fact = quotient.induced_factorization(H, args.classes)
        doc["classes"] = [list(c) for c in fact.classes]
    if args.format == "json":
        text = report.dumps(doc)
    else:
        text = f"syndrome: {doc['syndrome']}\n"
        for c in doc.get("classes", []):
            text += "class: {" + ", ".join(f"{x:+d}" if x else "0" for x in c) + "}\n"
    _emit(text, args)
    return EXIT_OK


# -- decompose ----------------------------------------------------------------


def cmd_decompose(args) -> int:
    try:
        m = np.array(json.loads(Path(args.matrix_file).read_text()), dtype=float)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read matrix from {args.matrix_file}: {exc}") from None
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise UsageError(f"matrix must be square, got shape {m.shape}")
    try:
        gens = mg.givens_decompose(m, args.tol)
    except mg.NotSpecialOrthogonal as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_FAIL
    err = mg.reconstruction_error(m, gens)
    doc = {
        "generators": [{"kind": g.kind, "position": g.position, "angle": g.parameter} for g in gens],
        "reconstruction_error": err,
    }
    if args.format == "json":
        text = report.dumps(doc)
    else:
        lines = [f"L_{g.position},{g.position + 1}({g.parameter:.12g})" for g in gens]
        text = "\n".join(lines + [f"reconstruction error: {err:.3g}"]) + "\n"
    _emit(text, args)
    return EXIT_OK


# -- embed --------------------------------------------------------------------


def embed_report(kind: str, n: int, config: report.RunConfig) -> report.VerificationReport:
    if kind == "su-to-so":
        worst = 0.0
        ok = True
        for i in range(50):
            u = mg.random_special_group_element("su", n, config.seed * 1000 + i)
            r = mg.realify(u)
            worst = max(worst, float(np.max(np.abs(r.T @ r - np.eye(2 * n)))))
            ok &= mg.check_su_embedding(u, config.tolerance)
        if n == 1:
            # SU(1) is trivial, so also send sampled phases through realify
            rng = np.random.default_rng(config.seed)
            for theta in rng.uniform(-np.pi, np.pi, size=50):
                r = mg.realify(np.exp(1j * theta))
                worst = max(worst, float(np.max(np.abs(r.T @ r - np.eye(2)))))
                ok &= mg.check_pseudo_orthogonal(r, mg.SignatureMetric.euclidean(2), config.tolerance)
        return report.VerificationReport(
            f"embed.su_to_so.n{n}",
            "pass" if ok else "fail",
            {"samples": 50, "max_orthogonality_error": worst},
            {"max_error": f"<= {config.tolerance:g}"},
            "realification maps SU(n) into SO(2n)",
        )
    if kind == "quat-to-perm":
        group = mg.quat_block_closure(n)
        landed = 0
        for e in group:
            try:
                mg.expand_to_real(e)
                landed += 1
            except mg.EmbeddingError:
                pass
        return report.VerificationReport(
            f"embed.quat_to_perm.n{n}",
            "pass" if landed == group.order else "fail",
            {"order": group.order, f"in_P{2 * n}_plus": landed},
            {f"in_P{2 * n}_plus": group.order},
            "quaternionic unit group embeds into even signed permutations of twice the degree",
        )
    raise UsageError(f"unknown embedding {kind!r}")


def cmd_embed(args) -> int:
    config = _config(args)
    n = args.n if args.n is not None else (2 if args.kind == "quat-to-perm" else 3)
    if args.kind == "su-to-so" and not 1 <= n <= 8:
        raise UsageError("su-to-so supports n in 1..8")
    if args.kind == "quat-to-perm" and not 2 <= n <= 3:
        raise UsageError("quat-to-perm supports n in 2..3")
    r = embed_report(args.kind, n, config)
    if args.format == "json":
        text = report.dumps(r.to_json())
    else:
        text = report.format_text([r])
    _emit(text, args)
    return EXIT_OK if r.status == "pass" else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=4, help="degree bound for double-kind exhaustive checks")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE")

    parser = argparse.ArgumentParser(prog="rigidspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the elements of a finite group")
    p.add_argument("group", help='e.g. "P:3", "P+:3", "P-:3", "Ppm:2+1", "Q8", "Poplus:3"')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=report.SUITES)
    p.add_argument("--timings", action="store_true", help="record per-claim runtimes (breaks byte-identical output)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quotient", parents=[common], help="syndrome of a bit vector")
    p.add_argument("subgroup", help='e.g. "H+:3", "Hpm:2+2", "H-:3", "full:3"')
    p.add_argument("vector", help='bit string, e.g. "110"')
    p.add_argument("--classes", choices=("simple", "double"), help="also list the induced node classes")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("decompose", parents=[common], help="factor an SO(n) matrix into plane rotations")
    p.add_argument("matrix_file", help="JSON file holding a row-major array")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("embed", parents=[common], help="check an embedding claim")
    p.add_argument("kind", choices=("su-to-so", "quat-to-perm"))
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_embed)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, arrow.ClosureOverflow) as exc:
        print(f"rigidspace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"rigidspace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
