"""Scalar mod-2 structures and their coordinate spaces.

Three scalar structures are provided:

* ``D`` -- the two-element field ``{0, 1}`` with ``x + y = |x + y| mod 2``.
* ``B`` -- the three-element set ``{-1, 0, 1}`` with the *signed* remainder
  ``x + y = sign(x + y) * (|x + y| mod 2)``.  Commutative with identity 0,
  but not associative.
* ``K`` -- signed residues on the circle, values in ``(-2, 2]``, with
  ``phi1 + phi2`` and ``phi1 * phi2`` reduced back onto the circle.

Bits and trits are plain ``int`` values; vectors over them are the immutable
:class:`BitVector` and :class:`TritVector`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

BITS = (0, 1)
TRITS = (-1, 0, 1)

_TRIT_CHARS = {-1: "-", 0: "0", 1: "+"}
_CHAR_TRITS = {"-": -1, "−": -1, "0": 0, "+": 1}


def _check_bit(x: int) -> int:
    if x not in BITS:
        raise ValueError(f"not a bit: {x!r}")
    return int(x)


def _check_trit(x: int) -> int:
    if x not in TRITS:
        raise ValueError(f"not a trit: {x!r}")
    return int(x)


def mod2_unsigned(z: int) -> int:
    """Remainder of ``|z|`` modulo 2."""
    return abs(int(z)) % 2


def mod2_signed(z: int) -> int:
    """Remainder of ``|z|`` modulo 2 carrying the sign of ``z`` (sign(0) = 0)."""
    z = int(z)
    r = abs(z) % 2
    return -r if z < 0 else r


def d_add(x: int, y: int) -> int:
    return mod2_unsigned(_check_bit(x) + _check_bit(y))


def d_mul(x: int, y: int) -> int:
    return _check_bit(x) * _check_bit(y)


def b_add(x: int, y: int) -> int:
    return mod2_signed(_check_trit(x) + _check_trit(y))


def b_mul(x: int, y: int) -> int:
    return _check_trit(x) * _check_trit(y)


def associativity_violations(add, carrier: Iterable[int]) -> list[tuple[int, int, int]]:
    """All triples ``(x, y, z)`` with ``(x+y)+z != x+(y+z)`` under ``add``."""
    carrier = tuple(carrier)
    return [
        (x, y, z)
        for x in carrier
        for y in carrier
        for z in carrier
        if add(add(x, y), z) != add(x, add(y, z))
    ]


# -- the circle structure K ---------------------------------------------------


def k_reduce(x: float) -> float:
    """Map a real onto its signed residue in ``(-2, 2]``.

    The result ``phi`` satisfies ``exp(i*pi*phi) == exp(i*pi*x)`` and keeps the
    sign of ``x``: positive multiples of 2 go to ``2``, negative multiples of 2
    and zero go to ``0``.  Values already in range are returned unchanged, so
    the map is exactly idempotent.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"k_reduce needs a finite real, got {x!r}")
    if x == 0.0:
        return 0.0
    # fmod is exact and keeps the sign of x
    f = math.fmod(x, 2.0)
    if x > 0:
        return 2.0 if f == 0.0 else f
    return 0.0 if f == 0.0 else f


def k_add(a: float, b: float) -> float:
    return k_reduce(a + b)


def k_mul(a: float, b: float) -> float:
    return k_reduce(a * b)


def k_to_integer(phi: float) -> int:
    """Read an integer-valued residue back into the carrier ``{-1, 0, 1}``.

    The boundary representative ``2`` is the same circle point as ``0`` and is
    read as ``0``; this is what restricting ``K`` to integer inputs means.
    """
    if phi != round(phi):
        raise ValueError(f"residue {phi!r} is not integer valued")
    v = int(round(phi))
    if v == 2:
        return 0
    if v not in TRITS:
        raise ValueError(f"residue {phi!r} outside the integer carrier")
    return v


def k_add_restricted(x: int, y: int) -> int:
    """``K`` addition restricted to integer arguments."""
    return k_to_integer(k_add(x, y))


def k_mul_restricted(x: int, y: int) -> int:
    return k_to_integer(k_mul(x, y))


# -- vectors ------------------------------------------------------------------


@dataclass(frozen=True)
class BitVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(_check_bit(b) for b in self.bits)
        if not bits:
            raise ValueError("BitVector needs dimension >= 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def zero(cls, n: int) -> BitVector:
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> BitVector:
        """The basis vector ``e_i`` (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"basis index {i} out of range 1..{n}")
        return cls(tuple(int(k == i - 1) for k in range(n)))

    @classmethod
    def parse(cls, text: str) -> BitVector:
        try:
            return cls(tuple(int(c) for c in text.strip()))
        except ValueError:
            raise ValueError(f"bad bit string {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __add__(self, other: BitVector) -> BitVector:
        return vec_add(self, other)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class TritVector:
    trits: tuple[int, ...]

    def __post_init__(self):
        trits = tuple(_check_trit(t) for t in self.trits)
        if not trits:
            raise ValueError("TritVector needs dimension >= 1")
        object.__setattr__(self, "trits", trits)

    @classmethod
    def zero(cls, n: int) -> TritVector:
        return cls((0,) * n)

    @classmethod
    def parse(cls, text: str) -> TritVector:
        try:
            return cls(tuple(_CHAR_TRITS[c] for c in text.strip()))
        except KeyError:
            raise ValueError(f"bad trit string {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.trits)

    def __len__(self) -> int:
        return len(self.trits)

    def __iter__(self):
        return iter(self.trits)

    def __getitem__(self, i):
        return self.trits[i]

    def __add__(self, other: TritVector) -> TritVector:
        return vec_add(self, other)

    def __str__(self) -> str:
        return "".join(_TRIT_CHARS[t] for t in self.trits)


def vec_add(u, v):
    """Componentwise sum over ``D`` (bit vectors) or ``B`` (trit vectors)."""
    if type(u) is not type(v):
        raise TypeError(f"cannot add {type(u).__name__} and {type(v).__name__}")
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")
    if isinstance(u, BitVector):
        return BitVector(tuple(d_add(a, b) for a, b in zip(u, v)))
    return TritVector(tuple(b_add(a, b) for a, b in zip(u, v)))
