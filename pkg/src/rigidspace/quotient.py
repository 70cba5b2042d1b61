"""Even-weight subgroups of ``D^n``, their cosets, and induced factorizations.

A subgroup is described by a set of consecutive coordinate blocks: a vector
belongs to it iff its weight on every block is even.  The per-block parities
form the *syndrome*, which labels the coset and realises ``D^n / H = D^m``.

=========  ===============================  =====================
variant    blocks                           quotient
=========  ===============================  =====================
trivial    every coordinate on its own      ``D^n``
plus       one block ``1..n``               ``D``
blockwise  the blocks of a partition        ``D^m``
full       none                             ``0``
=========  ===============================  =====================
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .arrow import IntervalPartition
from .discrete import BitVector, mod2_unsigned

VARIANTS = ("trivial", "plus", "blockwise", "full")
ENUMERATE_CAP = 20

_SPEC_PREFIX = {"H-": "trivial", "H+": "plus", "Hpm": "blockwise", "full": "full"}
_PREFIX_OF = {v: k for k, v in _SPEC_PREFIX.items()}


@dataclass(frozen=True)
class EvenSubgroup:
    n: int
    variant: str
    partition: IntervalPartition | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == "blockwise":
            if self.partition is None:
                raise ValueError("blockwise subgroup needs a partition")
            if self.partition.n != self.n:
                raise ValueError(f"partition of {self.partition.n} does not match n={self.n}")
        elif self.partition is not None:
            raise ValueError(f"variant {self.variant!r} takes no partition")

    @classmethod
    def trivial(cls, n: int) -> EvenSubgroup:
        return cls(n, "trivial")

    @classmethod
    def plus(cls, n: int) -> EvenSubgroup:
        return cls(n, "plus")

    @classmethod
    def blockwise(cls, part: IntervalPartition) -> EvenSubgroup:
        return cls(part.n, "blockwise", part)

    @classmethod
    def full(cls, n: int) -> EvenSubgroup:
        return cls(n, "full")

    @classmethod
    def parse(cls, text: str) -> EvenSubgroup:
        """Parse ``"H+:3"``, ``"Hpm:2+2"``, ``"H-:3"`` or ``"full:3"``."""
        m = re.fullmatch(r"\s*(H\+|H-|Hpm|full):([0-9+]+)\s*", text)
        if not m:
            raise ValueError(f"bad subgroup spec {text!r}")
        variant = _SPEC_PREFIX[m.group(1)]
        if variant == "blockwise":
            return cls.blockwise(IntervalPartition.parse(m.group(2)))
        if "+" in m.group(2):
            raise ValueError(f"bad subgroup spec {text!r}")
        return cls(int(m.group(2)), variant)

    @property
    def blocks(self) -> tuple[range, ...]:
        if self.variant == "trivial":
            return tuple(range(i, i + 1) for i in range(1, self.n + 1))
        if self.variant == "plus":
            return (range(1, self.n + 1),)
        if self.variant == "blockwise":
            return self.partition.blocks
        return ()

    @property
    def m(self) -> int:
        """Dimension of the quotient ``D^n / H``."""
        return len(self.blocks)

    @property
    def order(self) -> int:
        if self.variant == "full":
            return 2**self.n
        return 2 ** (self.n - self.m)

    def __str__(self) -> str:
        arg = str(self.partition) if self.variant == "blockwise" else str(self.n)
        return f"{_PREFIX_OF[self.variant]}:{arg}"


@dataclass(frozen=True)
class Syndrome:
    parities: tuple[int, ...]

    def __add__(self, other: Syndrome) -> Syndrome:
        if len(self.parities) != len(other.parities):
            raise ValueError("syndrome length mismatch")
        return Syndrome(tuple(a ^ b for a, b in zip(self.parities, other.parities)))

    def is_zero(self) -> bool:
        return not any(self.parities)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.parities)


def _check_dim(H: EvenSubgroup, k: int) -> None:
    if k != H.n:
        raise ValueError(f"dimension mismatch: vector of length {k}, subgroup of {H.n}")


def syndrome(v: BitVector | Sequence[int], H: EvenSubgroup) -> Syndrome:
    bits = tuple(v)
    _check_dim(H, len(bits))
    return Syndrome(tuple(sum(bits[i - 1] for i in block) % 2 for block in H.blocks))


def contains(H: EvenSubgroup, v: BitVector | Sequence[int]) -> bool:
    return syndrome(v, H).is_zero()


def z_syndrome(z: Sequence[int], H: EvenSubgroup) -> Syndrome:
    """Coset of an integer vector in ``Z^n / ZH``, via its mod-2 reduction."""
    return syndrome(tuple(mod2_unsigned(x) for x in z), H)


def _even_patterns(size: int) -> Iterator[tuple[int, ...]]:
    # all placements of 2m ones among `size` slots
    for ones in range(0, size + 1, 2):
        for where in itertools.combinations(range(size), ones):
            yield tuple(int(i in where) for i in range(size))


def enumerate_members(H: EvenSubgroup, cap: int = ENUMERATE_CAP) -> set[BitVector]:
    """All members of ``H``, built blockwise from even placements of ones."""
    if H.n > cap:
        raise ValueError(f"n={H.n} exceeds enumeration cap {cap}")
    if H.variant == "full":
        return {BitVector(b) for b in itertools.product((0, 1), repeat=H.n)}
    per_block = [list(_even_patterns(len(block))) for block in H.blocks]
    return {
        BitVector(tuple(itertools.chain.from_iterable(choice)))
        for choice in itertools.product(*per_block)
    }


# -- induced factorizations of the graphs d and b -----------------------------


def node_vector(node: int, n: int) -> tuple[int, ...]:
    """Integer vector of a node label: ``0`` or ``±i`` for ``±e_i``."""
    v = [0] * n
    if node:
        v[abs(node) - 1] = 1 if node > 0 else -1
    return tuple(v)


def graph_nodes(kind: str, n: int) -> tuple[int, ...]:
    if kind == "simple":
        return (0, *range(1, n + 1))
    if kind == "double":
        return (0, *(s * i for i in range(1, n + 1) for s in (1, -1)))
    raise ValueError(f"unknown graph kind {kind!r}")


def canonical_classes(classes) -> tuple[tuple[int, ...], ...]:
    """Sort classes so the basepoint class comes first, then by smallest index."""
    cls = [tuple(sorted(c, key=lambda x: (abs(x), -x))) for c in classes]
    return tuple(sorted(cls, key=lambda c: (0 not in c, min(abs(x) for x in c if x) if any(c) else 0)))


@dataclass(frozen=True)
class InducedFactorization:
    kind: str
    n: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def basepoint_class(self) -> tuple[int, ...]:
        return next(c for c in self.classes if 0 in c)

    def class_of(self, node: int) -> tuple[int, ...]:
        return next(c for c in self.classes if node in c)

    def equivalent(self, a: int, b: int) -> bool:
        return b in self.class_of(a)


def induced_factorization(H: EvenSubgroup, kind: str) -> InducedFactorization:
    """Partition the nodes of ``d`` (simple) or ``b`` (double) by coset."""
    groups: dict[Syndrome, list[int]] = {}
    for node in graph_nodes(kind, H.n):
        groups.setdefault(z_syndrome(node_vector(node, H.n), H), []).append(node)
    return InducedFactorization(kind, H.n, canonical_classes(groups.values()))
