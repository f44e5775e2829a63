"""Embedded reference tables for the order-independence classification.

Everything in this module is frozen ground truth that the verification
sweeps recompute from scratch and diff against.  Nothing here is ever fed
back into the engine as a shortcut.
"""

from __future__ import annotations

# The 104 rule numbers whose ring automata have update-order-independent
# periodic sets for every ring size n > 3.  `verify_theorem_104` recomputes
# this set by exhaustive sweep and compares.
OMEGA_INDEPENDENT_RULES: tuple[int, ...] = (
    0, 1, 4, 5, 8, 9, 12, 13, 28, 29, 32, 40, 51, 54, 57, 60, 64, 65,
    68, 69, 70, 71, 72, 73, 76, 77, 78, 79, 92, 93, 94, 95, 96, 99,
    102, 105, 108, 109, 110, 111, 124, 125, 126, 127, 128, 129, 132,
    133, 136, 137, 140, 141, 147, 150, 152, 153, 156, 157, 160, 164,
    168, 172, 184, 188, 192, 193, 194, 195, 196, 197, 198, 199, 200,
    201, 202, 204, 205, 206, 207, 216, 218, 220, 221, 222, 223, 224,
    226, 228, 230, 232, 234, 235, 236, 237, 238, 239, 248, 249, 250,
    251, 252, 253, 254, 255,
)

# The 16 rules whose local map is a bijection (tag drawn from {-, x} only);
# their periodic set is the full state space for every update word.
BIJECTIVE_RULES: tuple[int, ...] = (
    51, 54, 57, 60, 99, 102, 105, 108, 147, 150, 153, 156, 195, 198, 201, 204,
)

# Rule lists covered directly by each potential-function argument.
# A: count of 0s, non-decreasing, strict on change.
# B: non-isolated 0s minus isolated 0s, non-decreasing, strict on change.
# C: 0s plus twice the isolated 1s, non-decreasing, strict on change.
# D: 0s plus the isolated 1s, non-decreasing; ties only for the local
#    changes 000 -> 010 and 010 -> 000.
# E: block count, monotone (direction depends on the rule, see below).
POTENTIAL_RULES: dict[str, tuple[int, ...]] = {
    "A": (0, 4, 8, 12, 72, 76, 128, 132, 136, 140, 200),
    "B": (160, 164, 168, 172, 232),
    "C": (5, 13, 77, 133, 141),
    "D": (1, 9, 73, 129, 137),
    "E": (28, 29, 152, 184),
}

# Block count shrinks under 152/184 and grows under 28/29.
BLOCK_COUNT_NONINCREASING_RULES: tuple[int, ...] = (152, 184)
BLOCK_COUNT_NONDECREASING_RULES: tuple[int, ...] = (28, 29)

# Exceptional pairs with explicitly characterized periodic sets.
SINK_ZERO_RULES: tuple[int, ...] = (32, 40)           # Per = {all-zeros}
SINK_UNIFORM_RULES: tuple[int, ...] = (152, 184)      # Per = {all-zeros, all-ones}
FORBIDDEN_WINDOW_RULES: tuple[int, ...] = (1, 9, 73, 129, 137)
PAIRED_BLOCK_LIMIT_RULES: tuple[int, ...] = (28, 29)  # no 1-run/0-run pair of length >= 4

# Expected partition sizes under the reflection/inversion algebra.
EQUIV_CLASS_COUNT = 88
INDEPENDENT_CLASS_COUNT = 41

# Flip-count histogram rows (index = number of flipped local configurations).
FLIP_HISTOGRAM_INDEPENDENT: tuple[int, ...] = (1, 8, 26, 34, 26, 4, 4, 0, 1)
FLIP_HISTOGRAM_ALL: tuple[int, ...] = (1, 8, 28, 56, 70, 56, 28, 8, 1)

# The 16 x 10 tag grid ("table2"): rows are the 16 symmetric tag parts
# p4p1, columns the 10 asymmetric parts p3p2 that occur among the 104
# rules.  A cell holds row value + column value when that sum is one of
# the 104 rules, otherwise None.  Regenerated and byte-compared by
# `emit_reference_tables`.
TABLE2_ROWS: tuple[tuple[str, int], ...] = (
    ("--", 132), ("0-", 4), ("-0", 128), ("1-", 164), ("-1", 133),
    ("10", 160), ("01", 5), ("00", 0), ("x0", 32), ("0x", 1),
    ("-x", 129), ("x-", 36), ("x1", 37), ("1x", 161), ("11", 165),
    ("xx", 33),
)
TABLE2_COLS: tuple[tuple[str, int], ...] = (
    ("--", 72), ("-0", 64), ("0-", 8), ("00", 0), ("-1", 74),
    ("1-", 88), ("11", 90), ("-x", 66), ("x-", 24), ("xx", 18),
)
TABLE2_CELLS: tuple[tuple[int | None, ...], ...] = (
    (204, 196, 140, 132, 206, 220, 222, 198, 156, 150),
    (76, 68, 12, 4, 78, 92, 94, 70, 28, None),
    (200, 192, 136, 128, 202, 216, 218, 194, 152, None),
    (236, 228, 172, 164, 238, 252, 254, 230, 188, None),
    (205, 197, 141, 133, 207, 221, 223, 199, 157, None),
    (232, 224, 168, 160, 234, 248, 250, 226, 184, None),
    (77, 69, 13, 5, 79, 93, 95, 71, 29, None),
    (72, 64, 8, 0, None, None, None, None, None, None),
    (None, 96, 40, 32, None, None, None, None, None, None),
    (73, 65, 9, 1, None, None, None, None, None, None),
    (201, 193, 137, 129, None, None, None, 195, 153, 147),
    (108, None, None, None, 110, 124, 126, 102, 60, 54),
    (109, None, None, None, 111, 125, 127, None, None, None),
    (None, None, None, None, 235, 249, 251, None, None, None),
    (237, None, None, None, 239, 253, 255, None, None, None),
    (105, None, None, None, None, None, None, 99, 57, 51),
)

# The 41 class representatives ("fig41"), shown as two pared-down tag
# grids with the same fill rule as table2.
FIG41_LEFT_ROWS: tuple[tuple[str, int], ...] = (
    ("--", 132), ("0-", 4), ("-0", 128), ("00", 0), ("-1", 133),
    ("01", 5), ("-x", 129), ("0x", 1), ("1-", 164), ("10", 160),
    ("x0", 32),
)
FIG41_LEFT_COLS: tuple[tuple[str, int], ...] = (("00", 0), ("0-", 8))
FIG41_LEFT_CELLS: tuple[tuple[int | None, ...], ...] = (
    (132, 140), (4, 12), (128, 136), (0, 8), (133, 141), (5, 13),
    (129, 137), (1, 9), (164, 172), (160, 168), (32, 40),
)

FIG41_RIGHT_ROWS: tuple[tuple[str, int], ...] = (
    ("--", 132), ("x-", 36), ("xx", 33), ("-0", 128), ("10", 160),
    ("0-", 4), ("01", 5), ("00", 0), ("0x", 1),
)
FIG41_RIGHT_COLS: tuple[tuple[str, int], ...] = (("--", 72), ("x-", 24), ("xx", 18))
FIG41_RIGHT_CELLS: tuple[tuple[int | None, ...], ...] = (
    (204, 156, 150), (108, 60, 54), (105, 57, 51), (200, 152, None),
    (232, 184, None), (76, 28, None), (77, 29, None), (72, None, None),
    (73, None, None),
)
