"""Arrow permutations (signed permutations) and their parity subgroups.

An arrow permutation of degree ``n`` maps ``{1..n}`` into ``{±1..±n}`` so that
the absolute values form a bijection.  Composition follows

    (p2 * p1)(i) = sign(p1(i)) * p2(|p1(i)|)

and :func:`to_matrix` sends ``p`` to the transition matrix whose column ``i``
carries ``sign(p(i))`` in row ``|p(i)|``.  With that convention
``to_matrix(p2 * p1) == to_matrix(p2) @ to_matrix(p1)``.

Indices are 1-based throughout this module, matching the literal syntax
``"[+2,-1]"``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Sequence, TypeVar

import numpy as np

MAX_DEGREE = 6

T = TypeVar("T", bound=Hashable)


class ClosureOverflow(RuntimeError):
    """Raised when a generated group grows past the requested cap."""

    def __init__(self, cap: int):
        super().__init__(f"closure exceeded cap of {cap} elements")
        self.cap = cap


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


def _perm_sign(seq: Sequence[int]) -> int:
    """Sign of a sequence of distinct sortable items, by cycle count."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    seen = [False] * len(seq)
    sign = 1
    for start in range(len(seq)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True, order=True)
class ArrowPermutation:
    targets: tuple[int, ...]

    def __post_init__(self):
        targets = tuple(int(t) for t in self.targets)
        n = len(targets)
        if n == 0:
            raise ValueError("arrow permutation needs degree >= 1")
        if sorted(abs(t) for t in targets) != list(range(1, n + 1)):
            raise ValueError(f"|p| is not a bijection of 1..{n}: {targets}")
        object.__setattr__(self, "targets", targets)

    @classmethod
    def identity(cls, n: int) -> ArrowPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> ArrowPermutation:
        m = re.fullmatch(r"\s*\[([^\]]*)\]\s*", text)
        if not m:
            raise ValueError(f"bad arrow permutation literal {text!r}")
        try:
            return cls(tuple(int(t) for t in m.group(1).split(",")))
        except ValueError as exc:
            raise ValueError(f"bad arrow permutation literal {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.targets)

    def __call__(self, i: int) -> int:
        return self.targets[i - 1]

    def __mul__(self, other: ArrowPermutation) -> ArrowPermutation:
        return compose(self, other)

    def __str__(self) -> str:
        return "[" + ",".join(f"{t:+d}" for t in self.targets) + "]"

    def act(self, node: int) -> int:
        """Image of a signed node label; ``0`` is fixed."""
        if node == 0:
            return 0
        return _sign(node) * self.targets[abs(node) - 1]


def _compose_raw(p2: tuple[int, ...], p1: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p2[t - 1] if t > 0 else -p2[-t - 1] for t in p1)


def compose(p2: ArrowPermutation, p1: ArrowPermutation) -> ArrowPermutation:
    """``p2`` after ``p1``."""
    if p2.n != p1.n:
        raise ValueError(f"degree mismatch: {p2.n} != {p1.n}")
    return ArrowPermutation(_compose_raw(p2.targets, p1.targets))


def inverse(p: ArrowPermutation) -> ArrowPermutation:
    inv = [0] * p.n
    for i, t in enumerate(p.targets, start=1):
        inv[abs(t) - 1] = _sign(t) * i
    return ArrowPermutation(tuple(inv))


def to_matrix(p: ArrowPermutation) -> np.ndarray:
    m = np.zeros((p.n, p.n), dtype=np.int64)
    for i, t in enumerate(p.targets):
        m[abs(t) - 1, i] = _sign(t)
    return m


def _check_transition(m) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"transition matrix must be square and non-empty, got shape {m.shape}")
    if not np.all(np.isin(m, (-1, 0, 1))):
        raise ValueError("transition matrix entries must lie in {-1, 0, 1}")
    nz = m != 0
    if not (np.all(nz.sum(axis=0) == 1) and np.all(nz.sum(axis=1) == 1)):
        raise ValueError("transition matrix needs exactly one nonzero per row and column")
    return m.astype(np.int64)


def from_matrix(m) -> ArrowPermutation:
    m = _check_transition(m)
    targets = []
    for i in range(m.shape[1]):
        row = int(np.flatnonzero(m[:, i])[0])
        targets.append(int(m[row, i]) * (row + 1))
    return ArrowPermutation(tuple(targets))


def det(m) -> int:
    """Determinant of a transition matrix, computed combinatorially."""
    m = _check_transition(m)
    rows = [int(np.flatnonzero(m[:, i])[0]) for i in range(m.shape[1])]
    entries = math.prod(int(m[r, i]) for i, r in enumerate(rows))
    return _perm_sign(rows) * entries


def negative_parity(p: ArrowPermutation) -> int:
    """``(-1)`` to the number of negative images."""
    return -1 if sum(t < 0 for t in p.targets) % 2 else 1


def subset_det(m, rows: Iterable[int]) -> int:
    """Signed pattern of the rows ``rows`` (1-based) of a transition matrix.

    The rows' nonzero entries sit in some column set ``C``.  The result is the
    sign of the bijection from the rank order of ``rows`` to the rank order of
    ``C`` times the product of the entries; for ``rows == 1..n`` this is the
    ordinary determinant.
    """
    m = _check_transition(m)
    rows = sorted(set(rows))
    if not rows or rows[0] < 1 or rows[-1] > m.shape[0]:
        raise ValueError(f"row set {rows} invalid for order {m.shape[0]}")
    cols = [int(np.flatnonzero(m[r - 1])[0]) for r in rows]
    entries = math.prod(int(m[r - 1, c]) for r, c in zip(rows, cols))
    return _perm_sign(cols) * entries


# -- partitions ---------------------------------------------------------------


@dataclass(frozen=True)
class IntervalPartition:
    """Consecutive blocks ``I_1, ..., I_m`` of sizes ``n_1, ..., n_m``."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError(f"partition sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> IntervalPartition:
        try:
            return cls(tuple(int(s) for s in text.split("+")))
        except ValueError:
            raise ValueError(f"bad partition {text!r}") from None

    @classmethod
    def single(cls, n: int) -> IntervalPartition:
        return cls((n,))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def m(self) -> int:
        return len(self.sizes)

    @property
    def blocks(self) -> tuple[range, ...]:
        out = []
        start = 1
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return tuple(out)

    def block_of(self, i: int) -> int:
        """0-based index of the block containing ``i``."""
        for j, block in enumerate(self.blocks):
            if i in block:
                return j
        raise ValueError(f"index {i} outside 1..{self.n}")

    def __str__(self) -> str:
        return "+".join(str(s) for s in self.sizes)


def compositions(n: int) -> Iterator[IntervalPartition]:
    """Every interval partition of ``1..n``."""
    for cuts in itertools.product((False, True), repeat=n - 1):
        sizes, run = [], 1
        for cut in cuts:
            if cut:
                sizes.append(run)
                run = 1
            else:
                run += 1
        sizes.append(run)
        yield IntervalPartition(tuple(sizes))


def composite_parity(p: ArrowPermutation, part: IntervalPartition) -> int:
    if part.n != p.n:
        raise ValueError(f"partition of {part.n} does not match degree {p.n}")
    m = to_matrix(p)
    return math.prod(subset_det(m, block) for block in part.blocks)


@dataclass(frozen=True)
class Parities:
    in_P_plus: bool
    in_P_minus: bool
    in_P_pm: bool


def classify(p: ArrowPermutation, part: IntervalPartition | None = None) -> Parities:
    part = part or IntervalPartition.single(p.n)
    return Parities(
        in_P_plus=det(to_matrix(p)) == 1,
        in_P_minus=negative_parity(p) == 1,
        in_P_pm=composite_parity(p, part) == 1,
    )


# -- generators ---------------------------------------------------------------


def rotation_generator(n: int, k: int) -> ArrowPermutation:
    """``l_{k,k+1}``: the block ``[[0, 1], [-1, 0]]`` at rows/cols ``k, k+1``."""
    t = list(range(1, n + 1))
    t[k - 1], t[k] = -(k + 1), k
    return ArrowPermutation(tuple(t))


def swap_generator(n: int, k: int, sign: int = 1) -> ArrowPermutation:
    """``t_{k,k+1}`` (``sign=1``) or ``-t_{k,k+1}`` (``sign=-1``)."""
    t = list(range(1, n + 1))
    t[k - 1], t[k] = sign * (k + 1), sign * k
    return ArrowPermutation(tuple(t))


def inversion_generator(n: int, i: int) -> ArrowPermutation:
    t = list(range(1, n + 1))
    t[i - 1] = -i
    return ArrowPermutation(tuple(t))


GENERATOR_KINDS = ("even", "even_inverse", "composite", "full")


def standard_generators(
    kind: str, n: int, part: IntervalPartition | None = None
) -> list[ArrowPermutation]:
    """Generating sets for ``P_n^+``, ``P_n^-``, ``P_n^±`` and ``P_n``."""
    if kind == "even":
        return [rotation_generator(n, k) for k in range(1, n)]
    if kind == "even_inverse":
        return [g for k in range(1, n) for g in (swap_generator(n, k), swap_generator(n, k, -1))]
    if kind == "full":
        return [inversion_generator(n, i) for i in range(1, n + 1)] + [
            swap_generator(n, k) for k in range(1, n)
        ]
    if kind == "composite":
        if part is None:
            raise ValueError("composite generators need a partition")
        if part.n != n:
            raise ValueError(f"partition of {part.n} does not match degree {n}")
        gens = []
        for block in part.blocks:
            gens += [rotation_generator(n, k) for k in block[:-1]]
        for block in part.blocks[:-1]:
            s = block[-1]
            gens += [swap_generator(n, s), swap_generator(n, s, -1)]
        return gens
    raise ValueError(f"unknown generator kind {kind!r}; expected one of {GENERATOR_KINDS}")


# -- closure ------------------------------------------------------------------


def bfs_closure(
    generators: Sequence[T],
    identity: T,
    multiply: Callable[[T, T], T],
    cap: int,
) -> list[T]:
    """Breadth-first closure of ``generators`` inside a finite group.

    Elements are returned in discovery order.  In a finite group closure under
    multiplication by the generators already contains all inverses.
    """
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for h in generators:
            x = multiply(h, g)
            if x not in seen:
                if len(seen) >= cap:
                    raise ClosureOverflow(cap)
                seen.add(x)
                order.append(x)
                queue.append(x)
    return order


@dataclass(frozen=True)
class GroupClosure:
    elements: tuple = field(repr=False)
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.as_set()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def default_cap(n: int) -> int:
    return 2**n * math.factorial(n)


def closure(
    generators: Sequence[ArrowPermutation], cap: int | None = None, n: int | None = None
) -> GroupClosure:
    """Group generated by arrow permutations, elements in lexicographic order.

    ``n`` is only needed when ``generators`` is empty.
    """
    generators = list(generators)
    degrees = {g.n for g in generators}
    if len(degrees) > 1:
        raise ValueError(f"generators of mixed degree {sorted(degrees)}")
    if degrees:
        n = degrees.pop()
    elif n is None:
        n = 1
    if cap is None:
        cap = default_cap(n)
    if cap < 1:
        raise ValueError("cap must be positive")
    raw = bfs_closure(
        [g.targets for g in generators], tuple(range(1, n + 1)), _compose_raw, cap
    )
    elements = tuple(ArrowPermutation(t) for t in sorted(raw))
    return GroupClosure(elements=elements, generators=tuple(generators))


def all_arrow_permutations(n: int, max_degree: int = MAX_DEGREE) -> Iterator[ArrowPermutation]:
    """Every element of ``P_n`` by direct enumeration (independent of closure)."""
    if not 1 <= n <= max_degree:
        raise ValueError(f"degree {n} outside exhaustive range 1..{max_degree}")
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield ArrowPermutation(tuple(s * t for s, t in zip(signs, perm)))


def all_permutations(n: int) -> Iterator[ArrowPermutation]:
    """Every unsigned permutation of degree ``n`` as an arrow permutation."""
    for perm in itertools.permutations(range(1, n + 1)):
        yield ArrowPermutation(perm)


def permutation_sign(p: ArrowPermutation) -> int:
    """Sign of the underlying permutation ``|p|``."""
    return _perm_sign([abs(t) for t in p.targets])
