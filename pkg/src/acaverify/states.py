"""Bit-packed cyclic binary states, block decomposition, and potentials.

Vertices are numbered 1..n and the text form of a state reads y1 y2 ... yn
left to right; internally vertex i lives at bit i-1 of a packed integer.
Indices are cyclic mod n throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _bitops

# Hard cap on the ring size for anything that tabulates all 2^n states.
# Build-time configuration, not an algorithmic limit.
MAX_VERTICES = 24

MIN_VERTICES = 4


def _check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < MIN_VERTICES:
        raise ValueError(f"ring size n must be an integer >= {MIN_VERTICES}, got {n!r}")
    if n > MAX_VERTICES:
        raise ValueError(f"ring size n={n} exceeds the cap of {MAX_VERTICES}")
    return n


@dataclass(frozen=True)
class CycState:
    """A cyclic binary state of length n, packed into an integer."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(
                f"state bits {self.bits} out of range for n={self.n}"
            )

    @classmethod
    def zeros(cls, n: int) -> "CycState":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "CycState":
        return cls(n, (1 << n) - 1)

    def get(self, i: int) -> int:
        """Value at vertex i; any integer index is reduced cyclically."""
        return (self.bits >> ((i - 1) % self.n)) & 1

    def with_vertex(self, i: int, value: int) -> "CycState":
        pos = (i - 1) % self.n
        if value:
            return CycState(self.n, self.bits | (1 << pos))
        return CycState(self.n, self.bits & ~(1 << pos))

    def __str__(self) -> str:
        return "".join(str(self.get(i)) for i in range(1, self.n + 1))


def parse_state(text: str) -> CycState:
    """Parse the text form y1 y2 ... yn; length >= 4, characters 0/1."""
    if len(text) < MIN_VERTICES:
        raise ValueError(
            f"state text must have length >= {MIN_VERTICES}, got {text!r}"
        )
    if set(text) - {"0", "1"}:
        raise ValueError(f"state text may contain only 0 and 1, got {text!r}")
    bits = 0
    for pos, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << pos
    return CycState(len(text), bits)


def format_state(state: CycState) -> str:
    return str(state)


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    """Maximal cyclic run of equal values starting at vertex `start`."""

    value: int
    start: int
    length: int

    @property
    def isolated(self) -> bool:
        return self.length == 1


def block_decomposition(state: CycState) -> list[Block]:
    """Maximal runs in cyclic order of their start vertex.

    A uniform state is a single block of length n starting at vertex 1.
    A run that wraps across vertex n reports its true cyclic start, so it
    sorts last.
    """
    n = state.n
    values = [state.get(i) for i in range(1, n + 1)]
    starts = [i for i in range(1, n + 1) if values[i - 1] != values[i - 2]]
    if not starts:
        return [Block(value=values[0], start=1, length=n)]
    blocks = []
    for pos, start in enumerate(starts):
        nxt = starts[(pos + 1) % len(starts)]
        length = (nxt - start) % n or n
        blocks.append(Block(value=values[start - 1], start=start, length=length))
    return blocks


def blocks_to_json(blocks: list[Block]) -> list[dict]:
    return [
        {"value": b.value, "start": b.start, "len": b.length, "isolated": b.isolated}
        for b in blocks
    ]


# ---------------------------------------------------------------------------
# Potentials
# ---------------------------------------------------------------------------

class PotentialFamily(Enum):
    """Integer state functions monotone under the matching rule families.

    A: number of 0s.
    B: non-isolated 0s minus isolated 0s.
    C: 0s plus twice the isolated 1s.
    D: 0s plus the isolated 1s.
    E: number of blocks.
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


def potential(family: PotentialFamily, state: CycState) -> int:
    """Scalar potential, computed from the block decomposition."""
    blocks = block_decomposition(state)
    zeros = sum(b.length for b in blocks if b.value == 0)
    iso_zeros = sum(1 for b in blocks if b.value == 0 and b.isolated)
    iso_ones = sum(1 for b in blocks if b.value == 1 and b.isolated)
    if family is PotentialFamily.A:
        return zeros
    if family is PotentialFamily.B:
        return (zeros - iso_zeros) - iso_zeros
    if family is PotentialFamily.C:
        return zeros + 2 * iso_ones
    if family is PotentialFamily.D:
        return zeros + iso_ones
    if family is PotentialFamily.E:
        return len(blocks)
    raise ValueError(f"unknown potential family {family!r}")


def potential_table(family: PotentialFamily, n: int) -> np.ndarray:
    """Potential of every packed state 0 .. 2^n - 1, as one vector.

    Independent of the scalar path: computed with bit kernels rather than
    block decompositions.
    """
    _check_n(n)
    states = _bitops.all_states(n)
    zeros = _bitops.zero_count(states, n)
    if family is PotentialFamily.A:
        return zeros
    if family is PotentialFamily.B:
        return zeros - 2 * _bitops.isolated_zero_count(states, n)
    if family is PotentialFamily.C:
        return zeros + 2 * _bitops.isolated_one_count(states, n)
    if family is PotentialFamily.D:
        return zeros + _bitops.isolated_one_count(states, n)
    if family is PotentialFamily.E:
        return _bitops.block_count(states, n)
    raise ValueError(f"unknown potential family {family!r}")
