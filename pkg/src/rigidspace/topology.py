"""Automorphism groups of factorized graphs under the reversible-arrow rule.

The simple graph ``d`` has nodes ``0, 1, ..., n`` (``i`` standing for
``e_i``); the double graph ``b`` has nodes ``0, ±1, ..., ±n``.  A factorization
is a partition of the nodes into classes.  Automorphisms fix ``0`` and are
generated by a fixed pool of elementary moves, filtered by two rules:

* a reversible move (2-cycle, inversion, signed swap) may not exchange two
  equivalent nodes whose class misses the basepoint;
* every admitted move must send classes onto classes.

Cyclic moves (3-cycles, the 4-cycle ``(+j, +k, -j, -k)``) are one-directional
and are admitted only inside a single class, where the reversible moves they
replace are forbidden.

The predicted group for each canonical shape is kept as a separate lookup
(:func:`expected_label`) so the two can be compared rather than conflated.
"""

from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .arrow import (
    ArrowPermutation,
    GroupClosure,
    IntervalPartition,
    all_arrow_permutations,
    all_permutations,
    closure,
    compositions,
    composite_parity,
    det,
    negative_parity,
    permutation_sign,
    to_matrix,
)
from .quotient import (
    EvenSubgroup,
    InducedFactorization,
    canonical_classes,
    graph_nodes,
    induced_factorization,
)

MAX_SIMPLE_N = 7
MAX_DOUBLE_N = 5

KIND_OF_LETTER = {"d": "simple", "b": "double"}
SHAPES = ("none", "axes", "one", "blocks", "point")


class GroupLabel(str, enum.Enum):
    S_n = "S_n"
    S_n_plus = "S_n_plus"
    P_n = "P_n"
    P_n_minus = "P_n_minus"
    P_n_plus = "P_n_plus"
    P_n_pm = "P_n_pm"


@dataclass(frozen=True)
class FactorizedGraph:
    kind: str
    n: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.kind not in ("simple", "double"):
            raise ValueError(f"unknown graph kind {self.kind!r}")
        nodes = sorted(x for c in self.classes for x in c)
        if nodes != sorted(graph_nodes(self.kind, self.n)):
            raise ValueError("classes must partition the node set exactly once")
        object.__setattr__(self, "classes", canonical_classes(self.classes))

    @classmethod
    def from_factorization(cls, fact: InducedFactorization) -> FactorizedGraph:
        return cls(fact.kind, fact.n, fact.classes)

    @classmethod
    def canonical(
        cls, kind: str, n: int, shape: str, partition: IntervalPartition | None = None
    ) -> FactorizedGraph:
        """Build one of the named shapes.

        ``axes``, ``one``, ``blocks`` and ``point`` are the factorizations
        induced by the trivial, even-weight, blockwise and full subgroups;
        ``none`` leaves every node in its own class.
        """
        if shape == "none":
            return cls(kind, n, tuple((x,) for x in graph_nodes(kind, n)))
        if shape == "axes":
            H = EvenSubgroup.trivial(n)
        elif shape == "one":
            H = EvenSubgroup.plus(n)
        elif shape == "blocks":
            if partition is None:
                raise ValueError("blocks shape needs a partition")
            H = EvenSubgroup.blockwise(partition)
        elif shape == "point":
            H = EvenSubgroup.full(n)
        else:
            raise ValueError(f"unknown shape {shape!r}; expected one of {SHAPES}")
        return cls.from_factorization(induced_factorization(H, kind))

    @classmethod
    def parse(cls, text: str) -> FactorizedGraph:
        """Parse ``"b:n=3:classes=axes"`` or ``"b:n=4:classes=blocks:2+2"``."""
        m = re.fullmatch(r"\s*([db]):n=(\d+):classes=(\w+)(?::([0-9+]+))?\s*", text)
        if not m:
            raise ValueError(f"bad graph spec {text!r}")
        kind = KIND_OF_LETTER[m.group(1)]
        n = int(m.group(2))
        part = IntervalPartition.parse(m.group(4)) if m.group(4) else None
        if part is not None and part.n != n:
            raise ValueError(f"partition {part} does not cover n={n}")
        return cls.canonical(kind, n, m.group(3), part)

    @property
    def nodes(self) -> tuple[int, ...]:
        return graph_nodes(self.kind, self.n)

    def class_of(self, node: int) -> tuple[int, ...]:
        return next(c for c in self.classes if node in c)

    def equivalent(self, a: int, b: int) -> bool:
        return b in self.class_of(a)

    def preserves_classes(self, p: ArrowPermutation) -> bool:
        classes = {frozenset(c) for c in self.classes}
        return all(frozenset(p.act(x) for x in c) in classes for c in classes)


# -- moves --------------------------------------------------------------------


class MoveKind(str, enum.Enum):
    CYCLE2 = "2-cycle"
    CYCLE3 = "3-cycle"
    INVERSION = "inversion"
    SWAP = "swap"  # (±j, ±k)
    ANTISWAP = "antiswap"  # (±j, ∓k)
    CYCLE4 = "4-cycle"  # (+j, +k, -j, -k)


REVERSIBLE = {MoveKind.CYCLE2, MoveKind.INVERSION, MoveKind.SWAP, MoveKind.ANTISWAP}


@dataclass(frozen=True)
class MoveGenerator:
    kind: MoveKind
    indices: tuple[int, ...]

    @property
    def reversible(self) -> bool:
        return self.kind in REVERSIBLE

    def permutation(self, n: int) -> ArrowPermutation:
        if len(set(self.indices)) != len(self.indices) or not all(
            1 <= i <= n for i in self.indices
        ):
            raise ValueError(f"bad indices {self.indices} for n={n}")
        t = list(range(1, n + 1))
        idx = self.indices
        if self.kind is MoveKind.CYCLE2:
            i, j = idx
            t[i - 1], t[j - 1] = j, i
        elif self.kind is MoveKind.CYCLE3:
            i, j, k = idx
            t[i - 1], t[j - 1], t[k - 1] = j, k, i
        elif self.kind is MoveKind.INVERSION:
            (i,) = idx
            t[i - 1] = -i
        elif self.kind is MoveKind.SWAP:
            j, k = idx
            t[j - 1], t[k - 1] = k, j
        elif self.kind is MoveKind.ANTISWAP:
            j, k = idx
            t[j - 1], t[k - 1] = -k, -j
        else:
            j, k = idx
            t[j - 1], t[k - 1] = k, -j
        return ArrowPermutation(tuple(t))

    def exchanged_pairs(self) -> list[tuple[int, int]]:
        """Node pairs a reversible move swaps; empty for cyclic moves."""
        idx = self.indices
        if self.kind is MoveKind.CYCLE2:
            return [idx]
        if self.kind is MoveKind.INVERSION:
            return [(idx[0], -idx[0])]
        if self.kind is MoveKind.SWAP:
            j, k = idx
            return [(j, k), (-j, -k)]
        if self.kind is MoveKind.ANTISWAP:
            j, k = idx
            return [(j, -k), (-j, k)]
        return []

    def touched_nodes(self) -> tuple[int, ...]:
        if self.kind in (MoveKind.CYCLE2, MoveKind.CYCLE3):
            return self.indices
        return tuple(s * i for i in self.indices for s in (1, -1))

    def __str__(self) -> str:
        idx = self.indices
        if self.kind is MoveKind.INVERSION:
            return f"(±{idx[0]})"
        if self.kind is MoveKind.SWAP:
            return f"(±{idx[0]}, ±{idx[1]})"
        if self.kind is MoveKind.ANTISWAP:
            return f"(±{idx[0]}, ∓{idx[1]})"
        if self.kind is MoveKind.CYCLE4:
            j, k = idx
            return f"(+{j}, +{k}, -{j}, -{k})"
        return "(" + ", ".join(map(str, idx)) + ")"


def candidate_moves(kind: str, n: int) -> list[MoveGenerator]:
    if kind == "simple":
        moves = [MoveGenerator(MoveKind.CYCLE2, c) for c in itertools.combinations(range(1, n + 1), 2)]
        for i, j, k in itertools.combinations(range(1, n + 1), 3):
            moves += [MoveGenerator(MoveKind.CYCLE3, (i, j, k)), MoveGenerator(MoveKind.CYCLE3, (i, k, j))]
        return moves
    if kind == "double":
        moves = [MoveGenerator(MoveKind.INVERSION, (i,)) for i in range(1, n + 1)]
        for pair in itertools.combinations(range(1, n + 1), 2):
            moves += [MoveGenerator(MoveKind.SWAP, pair), MoveGenerator(MoveKind.ANTISWAP, pair)]
        moves += [MoveGenerator(MoveKind.CYCLE4, pair) for pair in itertools.permutations(range(1, n + 1), 2)]
        return moves
    raise ValueError(f"unknown graph kind {kind!r}")


def violates_prohibition(move: MoveGenerator, g: FactorizedGraph) -> bool:
    """True iff a reversible move exchanges equivalent nodes away from ``0``."""
    return any(
        g.equivalent(a, b) and 0 not in g.class_of(a) for a, b in move.exchanged_pairs()
    )


def is_allowed(move: MoveGenerator, g: FactorizedGraph) -> bool:
    if move.reversible:
        return not violates_prohibition(move, g) and g.preserves_classes(move.permutation(g.n))
    touched = move.touched_nodes()
    return all(g.equivalent(touched[0], x) for x in touched[1:])


def allowed_generators(g: FactorizedGraph) -> list[MoveGenerator]:
    return [mv for mv in candidate_moves(g.kind, g.n) if is_allowed(mv, g)]


def _check_bounds(g: FactorizedGraph) -> None:
    bound = MAX_SIMPLE_N if g.kind == "simple" else MAX_DOUBLE_N
    if not 1 <= g.n <= bound:
        raise ValueError(f"n={g.n} outside exhaustive range 1..{bound} for {g.kind} graphs")


def aut_group(g: FactorizedGraph, cap: int | None = None) -> GroupClosure:
    _check_bounds(g)
    if cap is None:
        cap = math.factorial(g.n) * (2**g.n if g.kind == "double" else 1)
    return closure([mv.permutation(g.n) for mv in allowed_generators(g)], cap=cap, n=g.n)


# -- predictions --------------------------------------------------------------


def _interval_partition(index_sets: Iterable[Iterable[int]], n: int) -> IntervalPartition | None:
    sets = sorted((sorted(s) for s in index_sets), key=lambda s: s[0])
    expected = 1
    for s in sets:
        if s != list(range(expected, expected + len(s))):
            return None
        expected += len(s)
    return IntervalPartition(tuple(len(s) for s in sets)) if expected == n + 1 else None


def block_partition(g: FactorizedGraph) -> IntervalPartition | None:
    """Interval partition read off a double graph whose classes are ``{±i : i in I_j}``."""
    rest = [c for c in g.classes if 0 not in c]
    if g.kind != "double" or any(set(c) != {-x for x in c} for c in rest):
        return None
    return _interval_partition(({abs(x) for x in c} for c in rest), g.n)


def expected_label(g: FactorizedGraph) -> GroupLabel | None:
    """Predicted automorphism group for a canonical shape, ``None`` otherwise."""
    base = g.class_of(0)
    if len(base) == len(g.nodes):
        return GroupLabel.S_n if g.kind == "simple" else GroupLabel.P_n
    if base != (0,):
        return None
    rest = [c for c in g.classes if 0 not in c]
    if all(len(c) == 1 for c in rest):
        # nothing identified: the unfactorized graph
        return GroupLabel.S_n if g.kind == "simple" else GroupLabel.P_n
    if g.kind == "simple":
        return GroupLabel.S_n_plus if len(rest) == 1 else None
    part = block_partition(g)
    if part is None:
        return None
    if part.m == g.n:
        return GroupLabel.P_n_minus
    if part.m == 1:
        return GroupLabel.P_n_plus
    return GroupLabel.P_n_pm


def predicted_members(
    label: GroupLabel, n: int, partition: IntervalPartition | None = None
) -> frozenset[ArrowPermutation]:
    """The subgroup a label names, characterised by parities over all of ``P_n``."""
    if label is GroupLabel.S_n:
        return frozenset(all_permutations(n))
    if label is GroupLabel.S_n_plus:
        return frozenset(p for p in all_permutations(n) if permutation_sign(p) == 1)
    ambient = all_arrow_permutations(n, max_degree=MAX_DOUBLE_N)
    if label is GroupLabel.P_n:
        return frozenset(ambient)
    if label is GroupLabel.P_n_minus:
        return frozenset(p for p in ambient if negative_parity(p) == 1)
    if label is GroupLabel.P_n_plus:
        return frozenset(p for p in ambient if det(to_matrix(p)) == 1)
    if partition is None:
        raise ValueError("P_n_pm needs a partition")
    return frozenset(p for p in ambient if composite_parity(p, partition) == 1)


@dataclass(frozen=True)
class CaseReport:
    graph: FactorizedGraph
    label: GroupLabel | None
    partition: IntervalPartition | None
    computed_order: int
    expected_order: int | None
    set_equal: bool | None
    preserves_classes: bool


def verify_case(g: FactorizedGraph, cap: int | None = None) -> CaseReport:
    group = aut_group(g, cap)
    label = expected_label(g)
    part = block_partition(g) if label is GroupLabel.P_n_pm else None
    preserves = all(g.preserves_classes(p) for p in group)
    if label is None:
        return CaseReport(g, None, None, group.order, None, None, preserves)
    expected = predicted_members(label, g.n, part)
    return CaseReport(
        g, label, part, group.order, len(expected), group.as_set() == expected, preserves
    )


def canonical_graphs(kind: str, n: int) -> Iterator[FactorizedGraph]:
    """The shapes with a predicted group, for one kind and degree."""
    if kind == "simple":
        yield FactorizedGraph.canonical(kind, n, "one")
        yield FactorizedGraph.canonical(kind, n, "point")
        return
    yield FactorizedGraph.canonical(kind, n, "axes")
    if n > 1:  # at n = 1 the single class is the axis class
        yield FactorizedGraph.canonical(kind, n, "one")
    for part in _proper_partitions(n):
        yield FactorizedGraph.canonical(kind, n, "blocks", part)
    yield FactorizedGraph.canonical(kind, n, "point")


def _proper_partitions(n: int) -> Iterator[IntervalPartition]:
    # at least two blocks, not all singletons
    for part in compositions(n):
        if 1 < part.m < n:
            yield part


def coarsening_edges(kind: str, n: int) -> list[tuple[FactorizedGraph, FactorizedGraph]]:
    """Pairs (finer, coarser) among canonical shapes, moving toward ``0``.

    A blockwise factorization coarsens to the single class, and every
    basepoint-free shape coarsens to the one where all nodes join ``0``.
    """
    point = FactorizedGraph.canonical(kind, n, "point")
    one = FactorizedGraph.canonical(kind, n, "one")
    edges = [(one, point)]
    if kind == "double":
        axes = FactorizedGraph.canonical(kind, n, "axes")
        edges += [(axes, point)] if n == 1 else [(axes, one), (axes, point)]
        for part in _proper_partitions(n):
            blocks = FactorizedGraph.canonical(kind, n, "blocks", part)
            edges += [(blocks, one), (blocks, point)]
    return edges
