"""Wolfram rule encodings and the reflection/inversion equivalence algebra.

A rule is identified by its number k in 0..255.  Digit a_i of k is the
output the rule writes at a cell whose local configuration (left, center,
right) reads as the 3-bit value i.  Every other notation (bit string,
planar grid of the 3-cube of configurations, 4-symbol tag) is a view
derived from k on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .constants import (
    BIJECTIVE_RULES,
    OMEGA_INDEPENDENT_RULES,
    POTENTIAL_RULES,
)

# A tag symbol summarizes one box of the grid, i.e. the pair of outputs
# (center reads 1, center reads 0) for a fixed neighbor configuration:
# set to 1, set to 0, hold, flip.
_PAIR_TO_SYMBOL = {(1, 1): "1", (0, 0): "0", (1, 0): "-", (0, 1): "x"}
_SYMBOL_TO_PAIR = {sym: pair for pair, sym in _PAIR_TO_SYMBOL.items()}


def _check_rule_number(k: int) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= 255:
        raise ValueError(f"rule number must be an integer in 0..255, got {k!r}")
    return k


@dataclass(frozen=True)
class Tag:
    """4-symbol rule encoding p4 p3 p2 p1 over the alphabet 1, 0, -, x."""

    p4: str
    p3: str
    p2: str
    p1: str

    def __post_init__(self) -> None:
        for name in ("p4", "p3", "p2", "p1"):
            sym = getattr(self, name)
            if sym not in _SYMBOL_TO_PAIR:
                raise ValueError(
                    f"tag symbol {name}={sym!r} is not one of '1', '0', '-', 'x'"
                )

    @classmethod
    def from_text(cls, text: str) -> "Tag":
        if len(text) != 4:
            raise ValueError(f"tag must be exactly 4 symbols, got {text!r}")
        return cls(text[0], text[1], text[2], text[3])

    def __str__(self) -> str:
        return self.p4 + self.p3 + self.p2 + self.p1

    @property
    def symmetric_part(self) -> str:
        """Boxes where the two neighbors agree (p4, p1)."""
        return self.p4 + self.p1

    @property
    def asymmetric_part(self) -> str:
        """Boxes where the two neighbors differ (p3, p2)."""
        return self.p3 + self.p2


@dataclass(frozen=True)
class Rule:
    """An 8-bit local update rule, identified by its number."""

    k: int

    def __post_init__(self) -> None:
        _check_rule_number(self.k)

    @classmethod
    def decode(cls, k: int) -> "Rule":
        return cls(k)

    def digit(self, i: int) -> int:
        """Output digit a_i for the local configuration with 3-bit value i."""
        if not 0 <= i <= 7:
            raise ValueError(f"configuration index must be in 0..7, got {i}")
        return (self.k >> i) & 1

    def output(self, left: int, center: int, right: int) -> int:
        """New center value for the configuration (left, center, right)."""
        return (self.k >> ((left << 2) | (center << 1) | right)) & 1

    @property
    def bits(self) -> str:
        """Digits a7..a0 as an 8-character binary string."""
        return f"{self.k:08b}"

    @property
    def tag(self) -> Tag:
        return tag_of(self)

    @property
    def reflected(self) -> "Rule":
        return Rule(reflect(self.k))

    @property
    def inverted(self) -> "Rule":
        return Rule(invert(self.k))

    def grid_lines(self) -> tuple[str, str, str]:
        """Planar 3-cube projection of the truth table, one box per pair.

        Top box holds (a6, a4), left (a7, a5), right (a2, a0), bottom
        (a3, a1); within each box the center-reads-1 digit comes first.
        """
        d = self.digit
        return (
            f"        [{d(6)} {d(4)}]",
            f"[{d(7)} {d(5)}]        [{d(2)} {d(0)}]",
            f"        [{d(3)} {d(1)}]",
        )

    def to_json(self) -> dict:
        return {"k": self.k, "bits": self.bits, "tag": str(self.tag)}


def decode(k: int) -> Rule:
    """Build the rule with number k, rejecting out-of-range input."""
    return Rule(_check_rule_number(k))


def tag_of(rule: Rule | int) -> Tag:
    """Tag view of a rule: p1=(a2,a0), p2=(a3,a1), p3=(a6,a4), p4=(a7,a5)."""
    k = rule.k if isinstance(rule, Rule) else _check_rule_number(rule)
    digit = lambda i: (k >> i) & 1
    return Tag(
        p4=_PAIR_TO_SYMBOL[(digit(7), digit(5))],
        p3=_PAIR_TO_SYMBOL[(digit(6), digit(4))],
        p2=_PAIR_TO_SYMBOL[(digit(3), digit(1))],
        p1=_PAIR_TO_SYMBOL[(digit(2), digit(0))],
    )


def rule_from_tag(tag: Tag | str) -> Rule:
    """Inverse of `tag_of`; accepts a Tag or its 4-character text form."""
    if isinstance(tag, str):
        tag = Tag.from_text(tag)
    a7, a5 = _SYMBOL_TO_PAIR[tag.p4]
    a6, a4 = _SYMBOL_TO_PAIR[tag.p3]
    a3, a1 = _SYMBOL_TO_PAIR[tag.p2]
    a2, a0 = _SYMBOL_TO_PAIR[tag.p1]
    return Rule(
        (a7 << 7) | (a6 << 6) | (a5 << 5) | (a4 << 4)
        | (a3 << 3) | (a2 << 2) | (a1 << 1) | a0
    )


def reflect(k: int) -> int:
    """Rule obtained by swapping the two neighbor coordinates.

    The output for (x, y, z) becomes the original output for (z, y, x);
    on digits this swaps a6 with a3 and a4 with a1, on tags it swaps p2
    with p3.  An involution.
    """
    _check_rule_number(k)
    swapped = k & ~0b01011010
    swapped |= ((k >> 6) & 1) << 3
    swapped |= ((k >> 3) & 1) << 6
    swapped |= ((k >> 4) & 1) << 1
    swapped |= ((k >> 1) & 1) << 4
    return swapped


def invert(k: int) -> int:
    """Rule obtained by conjugating with the all-bits complement map.

    Digit-wise a'_i = 1 - a_(7-i); on tags p4 p3 p2 p1 becomes
    c(p1) c(p2) c(p3) c(p4) with c swapping 1 and 0 and fixing - and x.
    An involution commuting with `reflect`.
    """
    _check_rule_number(k)
    out = 0
    for i in range(8):
        out |= (1 - ((k >> (7 - i)) & 1)) << i
    return out


def symmetric_part_value(p4: str, p1: str) -> int:
    """Decimal contribution of the symmetric tag part (digits a7 a5 a2 a0)."""
    a7, a5 = _SYMBOL_TO_PAIR[p4]
    a2, a0 = _SYMBOL_TO_PAIR[p1]
    return a7 * 128 + a5 * 32 + a2 * 4 + a0


def asymmetric_part_value(p3: str, p2: str) -> int:
    """Decimal contribution of the asymmetric tag part (digits a6 a4 a3 a1)."""
    a6, a4 = _SYMBOL_TO_PAIR[p3]
    a3, a1 = _SYMBOL_TO_PAIR[p2]
    return a6 * 64 + a4 * 16 + a3 * 8 + a1 * 2


# ---------------------------------------------------------------------------
# Equivalence classes under reflection and inversion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquivClass:
    """Orbit of a rule under reflection, inversion and their composite."""

    members: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.members[0]


def equivalence_class(k: int) -> EquivClass:
    _check_rule_number(k)
    orbit = {k, reflect(k), invert(k), reflect(invert(k))}
    return EquivClass(tuple(sorted(orbit)))


@lru_cache(maxsize=1)
def equivalence_classes() -> tuple[EquivClass, ...]:
    """Partition of all 256 rules, sorted by smallest member."""
    seen: set[int] = set()
    classes: list[EquivClass] = []
    for k in range(256):
        if k in seen:
            continue
        cls = equivalence_class(k)
        seen.update(cls.members)
        classes.append(cls)
    return tuple(classes)


# ---------------------------------------------------------------------------
# Static classification
# ---------------------------------------------------------------------------

class ProofStrategy(Enum):
    """Which argument establishes a rule's order independence, if any."""

    BIJECTIVE = "bijective"
    POTENTIAL_A = "potential-a"
    POTENTIAL_B = "potential-b"
    POTENTIAL_C = "potential-c"
    POTENTIAL_D = "potential-d"
    EXC_32_40 = "exceptional-32-40"
    EXC_152_184 = "exceptional-152-184"
    EXC_28_29 = "exceptional-28-29"
    VIA_EQUIVALENCE = "via-equivalence"
    NOT_INDEPENDENT = "not-independent"


@dataclass(frozen=True)
class StaticProfile:
    k: int
    bijective: bool
    symmetric: bool
    quasi_symmetric: bool
    flip_count: int
    proof_strategy: ProofStrategy
    # Class member whose direct argument carries this rule; set only for
    # VIA_EQUIVALENCE (smallest directly covered member of the class).
    equivalence_rep: int | None = None


def flip_count(k: int) -> int:
    """Number of local configurations where the rule changes the center bit."""
    _check_rule_number(k)
    return sum(1 for c in range(8) if ((k >> c) & 1) != ((c >> 1) & 1))


def is_bijective(k: int) -> bool:
    """True when the local map is a bijection (tag over '-' and 'x' only)."""
    tag = tag_of(k)
    return all(sym in "-x" for sym in str(tag))


def is_quasi_symmetric(k: int) -> bool:
    """True when the output is unchanged by swapping the two neighbors."""
    _check_rule_number(k)
    digit = lambda i: (k >> i) & 1
    return digit(6) == digit(3) and digit(4) == digit(1)


def is_symmetric(k: int) -> bool:
    """True when the output depends only on the multiset of the 3 inputs."""
    _check_rule_number(k)
    digit = lambda i: (k >> i) & 1
    return (
        digit(6) == digit(5) == digit(3) and digit(4) == digit(2) == digit(1)
    )


_DIRECT_STRATEGY: dict[int, ProofStrategy] = {}
for _k in BIJECTIVE_RULES:
    _DIRECT_STRATEGY[_k] = ProofStrategy.BIJECTIVE
for _fam, _strategy in (
    ("A", ProofStrategy.POTENTIAL_A),
    ("B", ProofStrategy.POTENTIAL_B),
    ("C", ProofStrategy.POTENTIAL_C),
    ("D", ProofStrategy.POTENTIAL_D),
):
    for _k in POTENTIAL_RULES[_fam]:
        _DIRECT_STRATEGY[_k] = _strategy
_DIRECT_STRATEGY[32] = ProofStrategy.EXC_32_40
_DIRECT_STRATEGY[40] = ProofStrategy.EXC_32_40
_DIRECT_STRATEGY[152] = ProofStrategy.EXC_152_184
_DIRECT_STRATEGY[184] = ProofStrategy.EXC_152_184
_DIRECT_STRATEGY[28] = ProofStrategy.EXC_28_29
_DIRECT_STRATEGY[29] = ProofStrategy.EXC_28_29


def static_profile(k: int) -> StaticProfile:
    """Order-free classification data for a rule.

    Rules on the independent list that no argument covers directly are
    routed to the smallest directly covered member of their equivalence
    class.
    """
    _check_rule_number(k)
    strategy = ProofStrategy.NOT_INDEPENDENT
    rep = None
    if k in _DIRECT_STRATEGY:
        strategy = _DIRECT_STRATEGY[k]
    elif k in OMEGA_INDEPENDENT_RULES:
        covered = [m for m in equivalence_class(k).members if m in _DIRECT_STRATEGY]
        if not covered:
            raise RuntimeError(
                f"rule {k} is on the independent list but its class has no "
                "directly covered member"
            )
        strategy = ProofStrategy.VIA_EQUIVALENCE
        rep = covered[0]
    return StaticProfile(
        k=k,
        bijective=is_bijective(k),
        symmetric=is_symmetric(k),
        quasi_symmetric=is_quasi_symmetric(k),
        flip_count=flip_count(k),
        proof_strategy=strategy,
        equivalence_rep=rep,
    )


def bijective_bruteforce(k: int) -> bool:
    """Injectivity of the local map checked row by row, used as an oracle.

    For each neighbor pair (x, z) the two configurations sharing it must
    map the center to distinct values.
    """
    _check_rule_number(k)
    for x, z in itertools.product((0, 1), repeat=2):
        lo = (k >> ((x << 2) | z)) & 1
        hi = (k >> ((x << 2) | 2 | z)) & 1
        if lo == hi:
            return False
    return True
