"""Sequential dynamics of a single rule on a ring under update words.

The composite map of a word is tabulated over all 2^n states, its
periodic set extracted by in-degree peeling of the functional graph, and
order independence decided by sweeping simple orders lexicographically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _bitops
from .rules import _check_rule_number
from .states import CycState, _check_n


# ---------------------------------------------------------------------------
# Update words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UpdateWord:
    """A vertex sequence covering every vertex of the ring at least once."""

    n: int
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        object.__setattr__(self, "seq", tuple(self.seq))
        for v in self.seq:
            if not isinstance(v, int) or not 1 <= v <= self.n:
                raise ValueError(
                    f"update word entry {v!r} is not a vertex in 1..{self.n}"
                )
        missing = set(range(1, self.n + 1)) - set(self.seq)
        if missing:
            raise ValueError(
                f"update word must cover every vertex; missing {sorted(missing)}"
            )

    @classmethod
    def identity(cls, n: int) -> "UpdateWord":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str, n: int) -> "UpdateWord":
        """Parse the comma-separated form, e.g. "1,3,2,4"."""
        try:
            seq = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"update word {text!r} is not a comma-separated vertex list") from None
        return cls(n, seq)

    @property
    def is_simple(self) -> bool:
        return len(self.seq) == self.n

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.seq)


def renumber_word(word: UpdateWord) -> UpdateWord:
    """Entrywise vertex reversal i -> n+1-i, matching the reflection of rules."""
    return UpdateWord(word.n, tuple(word.n + 1 - v for v in word.seq))


def rotate_word(word: UpdateWord, shift: int = 1) -> UpdateWord:
    """Entrywise rotation i -> i+shift (mod n), the ring automorphism."""
    return UpdateWord(word.n, tuple((v - 1 + shift) % word.n + 1 for v in word.seq))


# ---------------------------------------------------------------------------
# Local updates
# ---------------------------------------------------------------------------

def apply_local(k: int, state: CycState, i: int) -> CycState:
    """Update vertex i once: the new value is the rule digit selected by
    the 3-bit configuration (left neighbor, center, right neighbor)."""
    _check_rule_number(k)
    if not 1 <= i <= state.n:
        raise ValueError(f"vertex {i} out of range 1..{state.n}")
    cfg = (state.get(i - 1) << 2) | (state.get(i) << 1) | state.get(i + 1)
    return state.with_vertex(i, (k >> cfg) & 1)


def apply_word(k: int, state: CycState, word: UpdateWord | Sequence[int]) -> CycState:
    """Apply the word's vertices left to right (first entry first)."""
    seq = word.seq if isinstance(word, UpdateWord) else word
    for v in seq:
        state = apply_local(k, state, v)
    return state


@lru_cache(maxsize=None)
def local_tables(k: int, n: int) -> np.ndarray:
    """Per-vertex update maps tabulated over all 2^n packed states.

    Row i-1 holds the image of every state under the update of vertex i.
    """
    _check_rule_number(k)
    _check_n(n)
    idx = _bitops.all_states(n)
    tables = np.empty((n, 1 << n), dtype=np.intp)
    for i in range(1, n + 1):
        left = (idx >> ((i - 2) % n)) & 1
        center = (idx >> (i - 1)) & 1
        right = (idx >> (i % n)) & 1
        cfg = (left << 2) | (center << 1) | right
        out = (k >> cfg) & 1
        tables[i - 1] = (idx & ~(1 << (i - 1))) | (out << (i - 1))
    tables.setflags(write=False)
    return tables


def _compose(tables: np.ndarray, seq: Sequence[int]) -> np.ndarray:
    table = tables[seq[0] - 1]
    for v in seq[1:]:
        table = tables[v - 1].take(table)
    return table


@dataclass(frozen=True, eq=False)
class TransitionMap:
    """Tabulated composite map of one rule under one update word."""

    n: int
    k: int
    word: UpdateWord
    table: np.ndarray

    def __post_init__(self) -> None:
        if self.word.n != self.n:
            raise ValueError("update word ring size does not match n")


def transition_map(k: int, n: int, word: UpdateWord | Sequence[int]) -> TransitionMap:
    if not isinstance(word, UpdateWord):
        word = UpdateWord(n, tuple(word))
    return TransitionMap(n=n, k=k, word=word, table=_compose(local_tables(k, n), word.seq))


# ---------------------------------------------------------------------------
# Periodic sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PerSet:
    """Membership bitset over the 2^n states: bit y set iff y is periodic."""

    n: int
    mask: int

    @classmethod
    def from_alive(cls, n: int, alive: np.ndarray) -> "PerSet":
        packed = np.packbits(alive, bitorder="little").tobytes()
        return cls(n, int.from_bytes(packed, "little"))

    @classmethod
    def from_states(cls, n: int, states: Iterable[CycState | int]) -> "PerSet":
        mask = 0
        for s in states:
            mask |= 1 << (s.bits if isinstance(s, CycState) else s)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "PerSet":
        return cls(n, (1 << (1 << n)) - 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, state: CycState | int) -> bool:
        y = state.bits if isinstance(state, CycState) else state
        return bool((self.mask >> y) & 1)

    def alive(self) -> np.ndarray:
        raw = self.mask.to_bytes((1 << self.n) // 8, "little")
        return np.unpackbits(
            np.frombuffer(raw, dtype=np.uint8), bitorder="little"
        )[: 1 << self.n].astype(bool)

    def state_indices(self) -> Iterator[int]:
        for y in range(1 << self.n):
            if (self.mask >> y) & 1:
                yield y

    def states(self) -> Iterator[CycState]:
        for y in self.state_indices():
            yield CycState(self.n, y)

    def strings(self) -> list[str]:
        return sorted(str(s) for s in self.states())

    def to_json(self) -> list[str] | str:
        """Sorted state strings, or the hex bitset once that gets too wide."""
        if self.n <= 16:
            return self.strings()
        return hex(self.mask)


def periodic_mask(table: np.ndarray) -> np.ndarray:
    """States on cycles of the functional graph, by in-degree peeling.

    Repeatedly removes states whose remaining in-degree is zero until none
    are left; survivors are exactly the periodic states.
    """
    size = table.shape[0]
    indeg = np.bincount(table, minlength=size)
    alive = np.ones(size, dtype=bool)
    frontier = np.nonzero(indeg == 0)[0]
    while frontier.size:
        alive[frontier] = False
        targets = table[frontier]
        indeg -= np.bincount(targets, minlength=size)
        candidates = np.unique(targets)
        frontier = candidates[(indeg[candidates] == 0) & alive[candidates]]
    return alive


def periodic_set(tm: TransitionMap) -> PerSet:
    return PerSet.from_alive(tm.n, periodic_mask(tm.table))


def fixed_points(k: int, n: int) -> PerSet:
    """States fixed by the update of every single vertex (order-free)."""
    tables = local_tables(k, n)
    idx = _bitops.all_states(n)
    fixed = np.ones(1 << n, dtype=bool)
    for i in range(n):
        fixed &= tables[i] == idx
    return PerSet.from_alive(n, fixed)


# ---------------------------------------------------------------------------
# Order-independence decision
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Two simple orders whose periodic sets differ."""

    order_a: UpdateWord
    order_b: UpdateWord
    per_a: PerSet
    per_b: PerSet


@dataclass(frozen=True)
class IndepVerdict:
    k: int
    n: int
    independent: bool
    per: PerSet | None
    witness: Witness | None

    def to_json(self) -> dict:
        witness = None
        if self.witness is not None:
            witness = [list(self.witness.order_a.seq), list(self.witness.order_b.seq)]
        return {
            "k": self.k,
            "n": self.n,
            "independent": self.independent,
            "witness": witness,
        }


def _sweep(tables: np.ndarray, orders: Iterable[tuple[int, ...]]):
    """Compare periodic sets across orders; stop at the first mismatch.

    Returns (True, reference_alive) or (False, (order_a, order_b,
    alive_a, alive_b)) where the pair is the lexicographically first
    failing one given orders in lexicographic sequence.
    """
    iterator = iter(orders)
    first = next(iterator)
    reference = periodic_mask(_compose(tables, first))
    for order in iterator:
        alive = periodic_mask(_compose(tables, order))
        if not np.array_equal(alive, reference):
            return False, (first, order, reference, alive)
    return True, reference


def pi_independent(k: int, n: int, reduced: bool = False) -> IndepVerdict:
    """Decide whether every simple order yields the same periodic set.

    The full sweep walks all n! orders lexicographically against the
    identity order and stops at the first mismatch, so the witness is the
    lexicographically first failing pair.

    With reduced=True the sweep fixes the last updated vertex to n and
    walks (n-1)! orders; agreement plus rotation invariance of the common
    set decides independence (rotating an order conjugates the map by the
    ring automorphism).  Any failure falls back to the full sweep so that
    verdicts and witnesses are identical in both modes.
    """
    _check_rule_number(k)
    _check_n(n)
    tables = local_tables(k, n)

    if reduced:
        restricted = (
            perm + (n,) for perm in itertools.permutations(range(1, n))
        )
        ok, result = _sweep(tables, restricted)
        if ok:
            rotation = _bitops.rotation_indices(n)
            if np.array_equal(result[rotation], result):
                return IndepVerdict(k, n, True, PerSet.from_alive(n, result), None)
        ok, result = _sweep(tables, itertools.permutations(range(1, n + 1)))
        if ok:
            # The restricted sweep only ever fails when some full-sweep pair
            # must differ; reaching this line means the engine is broken.
            raise RuntimeError(
                f"reduced sweep for rule {k}, n={n} disagreed with the full sweep"
            )
        return IndepVerdict(k, n, False, None, _make_witness(n, result))

    ok, result = _sweep(tables, itertools.permutations(range(1, n + 1)))
    if ok:
        return IndepVerdict(k, n, True, PerSet.from_alive(n, result), None)
    return IndepVerdict(k, n, False, None, _make_witness(n, result))


def _make_witness(n: int, mismatch) -> Witness:
    order_a, order_b, alive_a, alive_b = mismatch
    return Witness(
        order_a=UpdateWord(n, order_a),
        order_b=UpdateWord(n, order_b),
        per_a=PerSet.from_alive(n, alive_a),
        per_b=PerSet.from_alive(n, alive_b),
    )


# ---------------------------------------------------------------------------
# Deterministic word sampling
# ---------------------------------------------------------------------------

class Lcg:
    """64-bit linear congruential generator, fixed for reproducibility.

    State advances as x -> 6364136223846793005 * x + 1442695040888963407
    (mod 2^64); draws use the top 32 bits, and bounded draws map them to
    a range by multiply-shift.  The constants and the update are part of
    the output contract: identical seeds give identical words everywhere.
    """

    _MULT = 6364136223846793005
    _INC = 1442695040888963407
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self._x = seed & self._MASK
        self._step()

    def _step(self) -> int:
        self._x = (self._x * self._MULT + self._INC) & self._MASK
        return self._x >> 32

    def below(self, bound: int) -> int:
        """Uniform-ish draw in 0..bound-1 (bound < 2^32)."""
        return (self._step() * bound) >> 32


def random_update_word(n: int, rng: Lcg, min_extra: int = 0) -> UpdateWord:
    """A covering word: a shuffled simple order plus `extra` random entries.

    The total length lands in n+min_extra .. 3n; coverage holds by
    construction because the permutation prefix visits every vertex.
    """
    _check_n(n)
    extra = min_extra + rng.below(2 * n + 1 - min_extra)
    perm = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    suffix = [1 + rng.below(n) for _ in range(extra)]
    return UpdateWord(n, tuple(perm + suffix))


def random_word_perset(
    k: int, n: int, seed: int = 0, count: int = 10
) -> list[tuple[UpdateWord, PerSet]]:
    """Periodic sets of `count` seeded random words (lengths n..3n)."""
    rng = Lcg(seed)
    out = []
    for _ in range(count):
        word = random_update_word(n, rng)
        out.append((word, periodic_set(transition_map(k, n, word))))
    return out


def permutation_at_rank(n: int, rank: int) -> tuple[int, ...]:
    """Lexicographic unranking of the permutations of 1..n."""
    if not 0 <= rank < math.factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    items = list(range(1, n + 1))
    out = []
    for radix in range(n - 1, -1, -1):
        f = math.factorial(radix)
        out.append(items.pop(rank // f))
        rank %= f
    return tuple(out)
