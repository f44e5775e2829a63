"""Vectorized bit kernels over the packed state space of a ring.

State y occupies the integer whose bit i-1 is the value at vertex i; all
functions here act elementwise on arrays of such integers.
"""

from __future__ import annotations

import numpy as np


def full_mask(n: int) -> int:
    return (1 << n) - 1


def all_states(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.intp)


def rol1(x: np.ndarray, n: int) -> np.ndarray:
    """Cyclic left shift by one bit: bit b of the result is bit b-1 of x."""
    return ((x << 1) | (x >> (n - 1))) & full_mask(n)


def ror1(x: np.ndarray, n: int) -> np.ndarray:
    """Cyclic right shift by one bit: bit b of the result is bit b+1 of x."""
    return ((x >> 1) | ((x & 1) << (n - 1))) & full_mask(n)


def popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def zero_count(states: np.ndarray, n: int) -> np.ndarray:
    return n - popcount(states)


def isolated_one_count(states: np.ndarray, n: int) -> np.ndarray:
    """Vertices holding 1 with both cyclic neighbors holding 0."""
    left = rol1(states, n)   # bit b = neighbor b-1
    right = ror1(states, n)  # bit b = neighbor b+1
    return popcount(states & ~left & ~right & full_mask(n))


def isolated_zero_count(states: np.ndarray, n: int) -> np.ndarray:
    left = rol1(states, n)
    right = ror1(states, n)
    return popcount(~states & left & right & full_mask(n))


def block_count(states: np.ndarray, n: int) -> np.ndarray:
    """Number of maximal equal-value runs; uniform states count as one."""
    boundaries = popcount(states ^ rol1(states, n))
    return np.where(boundaries == 0, 1, boundaries)


def has_cyclic_window(states: np.ndarray, n: int, window: tuple[int, int, int]) -> np.ndarray:
    """Whether the 3-bit pattern occurs at any cyclic position.

    window = (b1, b2, b3) matches positions i with y_i = b1,
    y_(i+1) = b2, y_(i+2) = b3.
    """
    mask = full_mask(n)

    def match(word: np.ndarray, bit: int) -> np.ndarray:
        return word if bit else ~word & mask

    w0 = states
    w1 = ror1(states, n)          # bit b = y at vertex b+2
    w2 = ror1(w1, n)              # bit b = y at vertex b+3
    hits = match(w0, window[0]) & match(w1, window[1]) & match(w2, window[2])
    return hits != 0


def reverse_bit_indices(n: int) -> np.ndarray:
    """Index map for the vertex-reversal involution (vertex i -> n+1-i)."""
    idx = all_states(n)
    out = np.zeros_like(idx)
    for b in range(n):
        out |= ((idx >> b) & 1) << (n - 1 - b)
    return out


def complement_indices(n: int) -> np.ndarray:
    """Index map for the all-bits complement involution."""
    return full_mask(n) ^ all_states(n)


def rotation_indices(n: int) -> np.ndarray:
    """Index map for the rotation automorphism (vertex i -> i+1)."""
    return rol1(all_states(n), n)
