"""Independent brute-force oracles the engine is diffed against.

Everything here recomputes results by a different route than the library:
truth-table permutation for the rule algebra, string manipulation for
local updates, map iteration (never peeling) for periodic sets.
"""

from __future__ import annotations

import numpy as np


def reflect_oracle(k: int) -> int:
    """Permute all 8 truth-table rows by (x, y, z) -> (z, y, x)."""
    out = 0
    for cfg in range(8):
        x, y, z = (cfg >> 2) & 1, (cfg >> 1) & 1, cfg & 1
        source = (z << 2) | (y << 1) | x
        out |= ((k >> source) & 1) << cfg
    return out


def invert_oracle(k: int) -> int:
    """f'(x, y, z) = 1 - f(1-x, 1-y, 1-z), row by row."""
    out = 0
    for cfg in range(8):
        x, y, z = (cfg >> 2) & 1, (cfg >> 1) & 1, cfg & 1
        source = ((1 - x) << 2) | ((1 - y) << 1) | (1 - z)
        out |= (1 - ((k >> source) & 1)) << cfg
    return out


def apply_local_text(k: int, text: str, i: int) -> str:
    """Single-vertex update on the string form of a state."""
    n = len(text)
    left = int(text[(i - 2) % n])
    center = int(text[i - 1])
    right = int(text[i % n])
    new = (k >> ((left << 2) | (center << 1) | right)) & 1
    return text[: i - 1] + str(new) + text[i:]


def apply_word_text(k: int, text: str, seq) -> str:
    for v in seq:
        text = apply_local_text(k, text, v)
    return text


def periodic_states_bruteforce(table: np.ndarray) -> np.ndarray:
    """Recurrent states by iterating the map 2^n times from every state.

    T^(2^n) is evaluated by repeated self-composition; the set of its
    values over all starting states is exactly the periodic set.
    """
    size = table.shape[0]
    power = table.copy()
    steps = 1
    while steps < size:
        power = power.take(power)
        steps *= 2
    alive = np.zeros(size, dtype=bool)
    alive[np.unique(power)] = True
    return alive


def count_zeros(text: str) -> int:
    return text.count("0")


def count_isolated(text: str, value: str) -> int:
    n = len(text)
    return sum(
        1
        for i in range(n)
        if text[i] == value and text[(i - 1) % n] != value and text[(i + 1) % n] != value
    )


def count_blocks(text: str) -> int:
    n = len(text)
    boundaries = sum(1 for i in range(n) if text[i] != text[(i - 1) % n])
    return boundaries if boundaries else 1


def potential_text(family: str, text: str) -> int:
    """Potentials recomputed straight off the string."""
    if family == "A":
        return count_zeros(text)
    if family == "B":
        return count_zeros(text) - 2 * count_isolated(text, "0")
    if family == "C":
        return count_zeros(text) + 2 * count_isolated(text, "1")
    if family == "D":
        return count_zeros(text) + count_isolated(text, "1")
    if family == "E":
        return count_blocks(text)
    raise ValueError(family)


def has_cyclic_window_text(text: str, window: str) -> bool:
    doubled = text + text[: len(window) - 1]
    return window in doubled
