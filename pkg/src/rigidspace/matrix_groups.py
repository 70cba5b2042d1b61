"""Two-by-two algebra families, plane generators and the realification map.

Conventions
-----------
* ``Rot2(x, y)`` is ``[[x, y], [-y, x]]``; a rotation by ``theta`` is
  ``Rot2(cos theta, sin theta)``, so ``theta = pi/2`` gives ``[[0, 1], [-1, 0]]``.
* ``Split2(x, y)`` is ``[[x, y], [y, x]]``.
* ``Quat2(x, y, r, s)`` is ``[[x+iy, r+is], [-r+is, x-iy]]``.
* ``realify`` replaces each complex entry ``x+iy`` by the block ``Rot2(x, y)``.

Plane positions ``k`` are 1-based and act on rows/columns ``k, k+1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .arrow import (
    ArrowPermutation,
    GroupClosure,
    IntervalPartition,
    bfs_closure,
    det as transition_det,
    from_matrix,
)


class NotSpecialOrthogonal(ValueError):
    """Input to a decomposition is not in SO(n) within tolerance."""


class EmbeddingError(ValueError):
    """A realified element failed the signed-permutation shape or det check."""


# -- 2x2 families -------------------------------------------------------------


@dataclass(frozen=True)
class Rot2:
    x: float
    y: float

    def __mul__(self, other: Rot2) -> Rot2:
        return rot2_mul(self, other)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.x, self.y], [-self.y, self.x]], dtype=float)

    @property
    def det(self) -> float:
        return self.x * self.x + self.y * self.y


@dataclass(frozen=True)
class Split2:
    x: float
    y: float

    def __mul__(self, other: Split2) -> Split2:
        return split2_mul(self, other)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.x, self.y], [self.y, self.x]], dtype=float)

    @property
    def det(self) -> float:
        return self.x * self.x - self.y * self.y


@dataclass(frozen=True)
class Quat2:
    x: float
    y: float
    r: float
    s: float

    def __mul__(self, other: Quat2) -> Quat2:
        return quat2_mul(self, other)

    @property
    def alpha(self) -> complex:
        return complex(self.x, self.y)

    @property
    def beta(self) -> complex:
        return complex(self.r, self.s)

    @property
    def matrix(self) -> np.ndarray:
        a, b = self.alpha, self.beta
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]], dtype=complex)

    @property
    def norm2(self) -> float:
        return self.x**2 + self.y**2 + self.r**2 + self.s**2


def rot2_mul(a: Rot2, b: Rot2) -> Rot2:
    return Rot2(a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x)


def split2_mul(a: Split2, b: Split2) -> Split2:
    return Split2(a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x)


def quat2_mul(a: Quat2, b: Quat2) -> Quat2:
    # [[α, β], [-β̄, ᾱ]] is closed under products:
    # α = α1 α2 - β1 β̄2,  β = α1 β2 + β1 ᾱ2
    alpha = a.alpha * b.alpha - a.beta * b.beta.conjugate()
    beta = a.alpha * b.beta + a.beta * b.alpha.conjugate()
    return Quat2(alpha.real, alpha.imag, beta.real, beta.imag)


Element2 = Union[Rot2, Split2, Quat2]


def normalize(a: Element2) -> Element2:
    """Divide by the positive scale that brings ``|det|`` to 1."""
    if isinstance(a, Quat2):
        scale = math.sqrt(a.norm2)
    else:
        scale = math.sqrt(abs(a.det))
    if scale == 0.0:
        raise ValueError(f"{a!r} is not invertible")
    if isinstance(a, Quat2):
        return Quat2(a.x / scale, a.y / scale, a.r / scale, a.s / scale)
    return type(a)(a.x / scale, a.y / scale)


# -- plane generators ---------------------------------------------------------

ROTATION = "rotation"
BOOST = "boost"
UNITARY = "unitary"


@dataclass(frozen=True)
class PlaneGenerator:
    """A 2x2 block at rows/columns ``position, position+1``.

    ``parameter`` is an angle (rotation), a rapidity (boost) or a unit
    :class:`Quat2` (unitary).
    """

    kind: str
    position: int
    parameter: Union[float, Quat2]

    def block(self) -> np.ndarray:
        if self.kind == ROTATION:
            return Rot2(math.cos(self.parameter), math.sin(self.parameter)).matrix
        if self.kind == BOOST:
            return Split2(math.cosh(self.parameter), math.sinh(self.parameter)).matrix
        if self.kind == UNITARY:
            return self.parameter.matrix
        raise ValueError(f"unknown generator kind {self.kind!r}")


def plane_generator_matrix(g: PlaneGenerator, n: int) -> np.ndarray:
    if not 1 <= g.position < n:
        raise ValueError(f"position {g.position} out of range 1..{n - 1}")
    dtype = complex if g.kind == UNITARY else float
    m = np.eye(n, dtype=dtype)
    k = g.position - 1
    m[k : k + 2, k : k + 2] = g.block()
    return m


def product(gens: Sequence[PlaneGenerator], n: int) -> np.ndarray:
    """Ordered product ``g_1 g_2 ... g_K`` of plane generators."""
    complex_ = any(g.kind == UNITARY for g in gens)
    m = np.eye(n, dtype=complex if complex_ else float)
    for g in gens:
        m = m @ plane_generator_matrix(g, n)
    return m


@dataclass(frozen=True)
class SignatureMetric:
    signs: tuple[int, ...]

    @classmethod
    def euclidean(cls, n: int) -> SignatureMetric:
        return cls((1,) * n)

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(np.array(self.signs, dtype=float))


def signature_metric(part: IntervalPartition) -> SignatureMetric:
    """Block ``j`` (1-based) gets sign ``(-1)^(j+1)``."""
    return SignatureMetric(tuple(1 if j % 2 == 0 else -1 for j, b in enumerate(part.blocks) for _ in b))


def partition_generator_slots(part: IntervalPartition) -> list[tuple[str, int]]:
    """Where rotations and boosts may sit: rotations inside blocks, boosts across boundaries."""
    slots = [(ROTATION, k) for block in part.blocks for k in block[:-1]]
    slots += [(BOOST, block[-1]) for block in part.blocks[:-1]]
    return sorted(slots, key=lambda s: s[1])


def random_generator_word(
    part: IntervalPartition, length: int, rng: np.random.Generator
) -> list[PlaneGenerator]:
    slots = partition_generator_slots(part)
    if not slots:
        return []
    word = []
    for _ in range(length):
        kind, k = slots[rng.integers(len(slots))]
        if kind == ROTATION:
            param = float(math.pi - rng.uniform(0.0, 2 * math.pi))
        else:
            param = float(rng.uniform(-1.0, 1.0))
        word.append(PlaneGenerator(kind, k, param))
    return word


def pseudo_orthogonality_defect(m: np.ndarray, eta: SignatureMetric) -> tuple[float, float]:
    """``(max|M^T η M - η|, |det M - 1|)``."""
    m = np.asarray(m, dtype=float)
    h = eta.matrix
    if m.shape != h.shape:
        raise ValueError(f"size mismatch: matrix {m.shape}, metric {h.shape}")
    return float(np.max(np.abs(m.T @ h @ m - h))), float(abs(np.linalg.det(m) - 1.0))


def check_pseudo_orthogonal(m: np.ndarray, eta: SignatureMetric, tol: float) -> bool:
    metric_err, det_err = pseudo_orthogonality_defect(m, eta)
    return metric_err <= tol and det_err <= tol


# -- Givens decomposition -----------------------------------------------------


def givens_decompose(m: np.ndarray, tol: float = 1e-9) -> list[PlaneGenerator]:
    """Factor ``M`` in SO(n) into adjacent-plane rotations.

    Each column is swept bottom-up, zeroing sub-diagonal entries with
    rotations on rows ``(i-1, i)``.  A rotation is skipped when its entry is
    already zero, except on the last pair of a column where a negative pivot
    is flipped by a half turn.  The returned list ``[g_1, ..., g_K]``
    satisfies ``g_1 @ g_2 @ ... @ g_K == M``.
    """
    m = np.array(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSpecialOrthogonal(f"matrix must be square, got shape {m.shape}")
    n = m.shape[0]
    metric_err, det_err = pseudo_orthogonality_defect(m, SignatureMetric.euclidean(n))
    if metric_err > tol:
        raise NotSpecialOrthogonal(f"not orthogonal: max|M^T M - I| = {metric_err:.3g}")
    if det_err > tol:
        raise NotSpecialOrthogonal(f"det M = {np.linalg.det(m):.6g}, expected +1")

    a = m.copy()
    applied: list[tuple[int, float]] = []
    for j in range(n - 1):
        for i in range(n - 1, j, -1):
            top, bottom = a[i - 1, j], a[i, j]
            if bottom == 0.0 and (i - 1 > j or top >= 0.0):
                continue
            phi = math.atan2(bottom, top)
            c, s = math.cos(phi), math.sin(phi)
            rows = a[i - 1 : i + 1, :].copy()
            a[i - 1, :] = c * rows[0] + s * rows[1]
            a[i, :] = -s * rows[0] + c * rows[1]
            applied.append((i, phi))
    # G_K ... G_1 M = I, so M = G_1^T ... G_K^T and G(phi)^T = G(-phi)
    return [PlaneGenerator(ROTATION, k, -phi) for k, phi in applied]


def reconstruction_error(m: np.ndarray, gens: Sequence[PlaneGenerator]) -> float:
    m = np.asarray(m, dtype=float)
    return float(np.max(np.abs(m - product(gens, m.shape[0])))) if m.size else 0.0


# -- realification ------------------------------------------------------------


def realify(a) -> np.ndarray:
    """Replace each complex entry ``x+iy`` by the block ``[[x, y], [-y, x]]``."""
    a = np.atleast_2d(np.asarray(a, dtype=complex))
    rows, cols = a.shape
    out = np.zeros((2 * rows, 2 * cols), dtype=float)
    out[0::2, 0::2] = a.real
    out[0::2, 1::2] = a.imag
    out[1::2, 0::2] = -a.imag
    out[1::2, 1::2] = a.real
    return out


def is_special_unitary(u: np.ndarray, tol: float) -> bool:
    u = np.atleast_2d(np.asarray(u, dtype=complex))
    if u.shape[0] != u.shape[1]:
        return False
    eye = np.eye(u.shape[0])
    return bool(
        np.max(np.abs(u.conj().T @ u - eye)) <= tol and abs(np.linalg.det(u) - 1.0) <= tol
    )


def check_su_embedding(u: np.ndarray, tol: float) -> bool:
    u = np.atleast_2d(np.asarray(u, dtype=complex))
    if u.shape[0] != u.shape[1]:
        return False
    r = realify(u)
    return is_special_unitary(u, tol) and check_pseudo_orthogonal(
        r, SignatureMetric.euclidean(r.shape[0]), tol
    )


# -- exact Gaussian-integer matrices ------------------------------------------

# A Gaussian integer is a pair (re, im) of ints; a matrix is a tuple of rows.
GaussMatrix = tuple


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def gauss_matmul(a: GaussMatrix, b: GaussMatrix) -> GaussMatrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = (0, 0)
            for k in range(n):
                acc = _gadd(acc, _gmul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def gauss_identity(n: int) -> GaussMatrix:
    return tuple(tuple((int(i == j), 0) for j in range(n)) for i in range(n))


def gauss_to_complex(a: GaussMatrix) -> np.ndarray:
    return np.array([[complex(*z) for z in row] for row in a], dtype=complex)


def gauss_neg(a: GaussMatrix) -> GaussMatrix:
    return tuple(tuple((-z[0], -z[1]) for z in row) for row in a)


def gauss_str(a: GaussMatrix) -> str:
    def entry(z):
        re_, im = z
        if im == 0:
            return str(re_)
        if re_ == 0:
            return {1: "i", -1: "-i"}.get(im, f"{im}i")
        return f"{re_}{im:+d}i"

    return "[" + ",".join("[" + ",".join(entry(z) for z in row) + "]" for row in a) + "]"


U1 = ((1, 0), (0, 0)), ((0, 0), (1, 0))
U2 = ((0, 0), (0, 1)), ((0, 1), (0, 0))
U3 = ((0, 0), (1, 0)), ((-1, 0), (0, 0))
U4 = ((0, 1), (0, 0)), ((0, 0), (0, -1))
QUAT_GENERATORS = (U1, U2, U3, U4)


def _embed_block(block: GaussMatrix, n: int, k: int) -> GaussMatrix:
    rows = [list(r) for r in gauss_identity(n)]
    for a in range(2):
        for b in range(2):
            rows[k - 1 + a][k - 1 + b] = block[a][b]
    return tuple(tuple(r) for r in rows)


def quat_block_closure(n: int = 2, cap: int = 4096) -> GroupClosure:
    """Group generated by ``u_1..u_4`` placed at every adjacent plane of ``n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    gens = [_embed_block(u, n, k) for k in range(1, n) for u in QUAT_GENERATORS]
    elements = bfs_closure(gens, gauss_identity(n), gauss_matmul, cap)
    return GroupClosure(elements=tuple(sorted(elements)), generators=tuple(gens))


def quat_group_closure() -> GroupClosure:
    return quat_block_closure(2)


def realify_exact(a: GaussMatrix) -> np.ndarray:
    n = len(a)
    out = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i, row in enumerate(a):
        for j, (x, y) in enumerate(row):
            out[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = [[x, y], [-y, x]]
    return out


def expand_to_real(a: GaussMatrix) -> np.ndarray:
    """Realify an element of ``{0, ±1, ±i}`` monomial matrices into ``P_2n^+``."""
    r = realify_exact(a)
    try:
        p: ArrowPermutation = from_matrix(r)
    except ValueError as exc:
        raise EmbeddingError(f"realified matrix is not a transition matrix: {exc}") from None
    if transition_det(r) != 1:
        raise EmbeddingError(f"realified element {p} has det -1")
    return r


# -- sampling -----------------------------------------------------------------


def random_unit_quat(rng: np.random.Generator) -> Quat2:
    while True:
        q = Quat2(*(float(v) for v in rng.normal(size=4)))
        if q.norm2 > 1e-12:
            return normalize(q)


def random_special_group_element(kind: str, n: int, seed: int) -> np.ndarray:
    """Seeded product of ``3n`` random plane generators in SO(n) or SU(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    kind = kind.lower()
    if kind not in ("so", "su"):
        raise ValueError(f"kind must be 'so' or 'su', got {kind!r}")
    if n == 1:
        return np.eye(1, dtype=float if kind == "so" else complex)
    gens = []
    for _ in range(3 * n):
        k = int(rng.integers(1, n))
        if kind == "so":
            gens.append(PlaneGenerator(ROTATION, k, float(math.pi - rng.uniform(0.0, 2 * math.pi))))
        else:
            gens.append(PlaneGenerator(UNITARY, k, random_unit_quat(rng)))
    return product(gens, n)
