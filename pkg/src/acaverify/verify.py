"""Machine checks for the order-independence classification.

Each suite recomputes one classification quantity from scratch with the engine
and diffs it against the frozen tables in `constants`.  All randomized
suites are seeded and deterministic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _bitops
from .constants import (
    BIJECTIVE_RULES,
    BLOCK_COUNT_NONINCREASING_RULES,
    EQUIV_CLASS_COUNT,
    FIG41_LEFT_CELLS,
    FIG41_LEFT_COLS,
    FIG41_LEFT_ROWS,
    FIG41_RIGHT_CELLS,
    FIG41_RIGHT_COLS,
    FIG41_RIGHT_ROWS,
    FLIP_HISTOGRAM_ALL,
    FLIP_HISTOGRAM_INDEPENDENT,
    FORBIDDEN_WINDOW_RULES,
    INDEPENDENT_CLASS_COUNT,
    OMEGA_INDEPENDENT_RULES,
    PAIRED_BLOCK_LIMIT_RULES,
    POTENTIAL_RULES,
    SINK_UNIFORM_RULES,
    SINK_ZERO_RULES,
    TABLE2_CELLS,
    TABLE2_COLS,
    TABLE2_ROWS,
)
from .dynamics import (
    IndepVerdict,
    Lcg,
    PerSet,
    UpdateWord,
    _compose,
    local_tables,
    periodic_mask,
    permutation_at_rank,
    pi_independent,
    random_update_word,
    renumber_word,
)
from .rules import (
    asymmetric_part_value,
    equivalence_class,
    flip_count,
    invert,
    reflect,
    symmetric_part_value,
)
from .states import CycState, PotentialFamily, block_decomposition, potential_table

Progress = Callable[[str], None]


def _say(progress: Progress | None, message: str) -> None:
    if progress is not None:
        progress(message)


# ---------------------------------------------------------------------------
# Main classification sweep
# ---------------------------------------------------------------------------

@dataclass
class TheoremReport:
    """Outcome of sweeping all 256 rules over a range of ring sizes."""

    n_min: int
    n_max: int
    reduced: bool
    computed: tuple[int, ...]
    witnesses: dict[int, IndepVerdict]
    verdicts: dict[tuple[int, int], bool]

    @property
    def matches_expected(self) -> bool:
        return self.computed == OMEGA_INDEPENDENT_RULES

    @property
    def contains_expected(self) -> bool:
        return set(OMEGA_INDEPENDENT_RULES) <= set(self.computed)

    @property
    def extras(self) -> tuple[int, ...]:
        return tuple(k for k in self.computed if k not in OMEGA_INDEPENDENT_RULES)

    @property
    def missing(self) -> tuple[int, ...]:
        return tuple(k for k in OMEGA_INDEPENDENT_RULES if k not in self.computed)

    def to_json(self) -> dict:
        return {
            "suite": "theorem104",
            "n_min": self.n_min,
            "n_max": self.n_max,
            "reduced": self.reduced,
            "computed": list(self.computed),
            "computed_count": len(self.computed),
            "matches_expected": self.matches_expected,
            "contains_expected": self.contains_expected,
            "extras": list(self.extras),
            "missing": list(self.missing),
            "witnesses": {
                str(k): v.to_json() for k, v in sorted(self.witnesses.items())
            },
        }


def verify_theorem_104(
    n_max: int = 7,
    reduced: bool = True,
    n_min: int = 4,
    progress: Progress | None = None,
) -> TheoremReport:
    """Sweep every rule over n_min..n_max and collect the survivors.

    A rule is kept while every simple order at the current ring size
    yields the same periodic set; the first failure is recorded as its
    witness and the rule drops out of larger sweeps.
    """
    if not 4 <= n_min <= n_max <= 9:
        raise ValueError(
            f"sweep range must satisfy 4 <= n_min <= n_max <= 9, got {n_min}..{n_max}"
        )
    survivors = list(range(256))
    witnesses: dict[int, IndepVerdict] = {}
    verdicts: dict[tuple[int, int], bool] = {}
    for n in range(n_min, n_max + 1):
        remaining = []
        for k in survivors:
            verdict = pi_independent(k, n, reduced=reduced)
            verdicts[(k, n)] = verdict.independent
            if verdict.independent:
                remaining.append(k)
            else:
                witnesses[k] = verdict
        survivors = remaining
        _say(progress, f"n={n}: {len(survivors)} rules still independent")
    return TheoremReport(
        n_min=n_min,
        n_max=n_max,
        reduced=reduced,
        computed=tuple(survivors),
        witnesses=witnesses,
        verdicts=verdicts,
    )


# ---------------------------------------------------------------------------
# Potential monotonicity
# ---------------------------------------------------------------------------

def potential_direction(family: PotentialFamily, k: int) -> int:
    """+1 when the potential may only grow under updates, -1 when it may
    only shrink (block count under 152/184)."""
    if family is PotentialFamily.E and k in BLOCK_COUNT_NONINCREASING_RULES:
        return -1
    return 1


@dataclass
class MonotonicityReport:
    family: PotentialFamily
    k: int
    n: int
    direction: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "k": self.k,
            "n": self.n,
            "direction": self.direction,
            "ok": self.ok,
            "violations": self.violations[:20],
        }


def verify_potential_monotone(
    family: PotentialFamily, k: int, n: int
) -> MonotonicityReport:
    """Exhaustively check one (family, rule) pair at one ring size.

    Every local update must move the potential the right way; families A,
    B and C must move it strictly whenever the state changes, and family D
    may tie exactly when an isolated 1 appears in or vanishes from a
    neighborhood of 0s (the local changes 000 <-> 010).
    """
    if k not in POTENTIAL_RULES[family.value]:
        raise ValueError(f"rule {k} is not covered by potential family {family.value}")
    direction = potential_direction(family, k)
    report = MonotonicityReport(family=family, k=k, n=n, direction=direction)
    rho = potential_table(family, n)
    tables = local_tables(k, n)
    idx = _bitops.all_states(n)
    for i in range(1, n + 1):
        image = tables[i - 1]
        delta = (rho[image] - rho) * direction
        changed = image != idx
        bad = np.nonzero(delta < 0)[0]
        for y in bad[:5]:
            report.violations.append(
                f"vertex {i}, state {CycState(n, int(y))}: potential moved the wrong way"
            )
        if family in (PotentialFamily.A, PotentialFamily.B, PotentialFamily.C):
            stuck = np.nonzero(changed & (delta == 0))[0]
            for y in stuck[:5]:
                report.violations.append(
                    f"vertex {i}, state {CycState(n, int(y))}: changed without raising the potential"
                )
        elif family is PotentialFamily.D:
            neighbors_zero = (
                ((idx >> ((i - 2) % n)) & 1) == 0
            ) & (((idx >> (i % n)) & 1) == 0)
            ties = changed & (delta == 0)
            # Ties must occur exactly at 000 -> 010 and 010 -> 000.
            wrong = np.nonzero(ties != (changed & neighbors_zero))[0]
            for y in wrong[:5]:
                report.violations.append(
                    f"vertex {i}, state {CycState(n, int(y))}: tie pattern differs from 000<->010"
                )
    return report


def potential_pairs() -> list[tuple[PotentialFamily, int]]:
    return [
        (PotentialFamily(fam), k)
        for fam, ks in POTENTIAL_RULES.items()
        for k in ks
    ]


def verify_potentials(
    n_min: int = 4, n_max: int = 10, progress: Progress | None = None
) -> list[MonotonicityReport]:
    reports = []
    for family, k in potential_pairs():
        for n in range(n_min, n_max + 1):
            reports.append(verify_potential_monotone(family, k, n))
        _say(progress, f"family {family.value}, rule {k}: checked n={n_min}..{n_max}")
    return reports


# ---------------------------------------------------------------------------
# Periodic-set characterizations
# ---------------------------------------------------------------------------

def characterization_rules() -> tuple[int, ...]:
    return tuple(
        sorted(
            set(BIJECTIVE_RULES)
            | set(SINK_ZERO_RULES)
            | set(SINK_UNIFORM_RULES)
            | set(FORBIDDEN_WINDOW_RULES)
            | set(PAIRED_BLOCK_LIMIT_RULES)
        )
    )


def predicted_periodic_set(k: int, n: int) -> PerSet:
    """Order-free construction of the periodic set for the covered rules.

    Bijective rules keep everything; 32/40 keep only the all-zeros state;
    152/184 keep the two uniform states; 1/9/73/129/137 drop states with a
    cyclic window the rule erases (011 when a3=0, 110 when a6=0, 111 when
    a7=0); 28/29 keep the mixed states in which every 1-run followed by a
    0-run has combined length at most 3, plus all-zeros for 28.
    """
    if k in BIJECTIVE_RULES:
        return PerSet.full(n)
    if k in SINK_ZERO_RULES:
        return PerSet.from_states(n, [0])
    if k in SINK_UNIFORM_RULES:
        return PerSet.from_states(n, [0, _bitops.full_mask(n)])
    if k in FORBIDDEN_WINDOW_RULES:
        states = _bitops.all_states(n)
        keep = np.ones(1 << n, dtype=bool)
        if (k >> 3) & 1 == 0:
            keep &= ~_bitops.has_cyclic_window(states, n, (0, 1, 1))
        if (k >> 6) & 1 == 0:
            keep &= ~_bitops.has_cyclic_window(states, n, (1, 1, 0))
        if (k >> 7) & 1 == 0:
            keep &= ~_bitops.has_cyclic_window(states, n, (1, 1, 1))
        return PerSet.from_alive(n, keep)
    if k in PAIRED_BLOCK_LIMIT_RULES:
        members = []
        for y in range(1 << n):
            blocks = block_decomposition(CycState(n, y))
            if len(blocks) == 1:
                continue
            pairs_ok = all(
                blocks[j].length + blocks[(j + 1) % len(blocks)].length <= 3
                for j in range(len(blocks))
                if blocks[j].value == 1
            )
            if pairs_ok:
                members.append(y)
        if k == 28:
            members.append(0)
        return PerSet.from_states(n, members)
    raise ValueError(f"no periodic-set characterization for rule {k}")


@dataclass
class CharacterizationReport:
    exhaustive_max: int
    sampled_max: int
    samples: int
    orders_checked: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "suite": "characterizations",
            "exhaustive_max": self.exhaustive_max,
            "sampled_max": self.sampled_max,
            "samples": self.samples,
            "orders_checked": self.orders_checked,
            "ok": self.ok,
            "mismatches": self.mismatches[:20],
        }


def _orders_for(n: int, exhaustive_max: int, samples: int) -> Iterable[tuple[int, ...]]:
    if n <= exhaustive_max:
        return itertools.permutations(range(1, n + 1))
    total = math.factorial(n)
    ranks = ((j * total) // samples for j in range(samples))
    return (permutation_at_rank(n, r) for r in ranks)


def verify_characterizations(
    exhaustive_max: int = 7,
    sampled_max: int = 12,
    samples: int = 1000,
    n_min: int = 4,
    progress: Progress | None = None,
) -> CharacterizationReport:
    """Diff the constructed periodic sets against sweeps of simple orders.

    Ring sizes up to exhaustive_max test every simple order; above that a
    deterministic stride through lexicographic ranks samples `samples`
    orders per ring size.
    """
    report = CharacterizationReport(
        exhaustive_max=exhaustive_max, sampled_max=sampled_max, samples=samples
    )
    for k in characterization_rules():
        for n in range(n_min, sampled_max + 1):
            predicted = predicted_periodic_set(k, n).alive()
            tables = local_tables(k, n)
            for order in _orders_for(n, exhaustive_max, samples):
                alive = periodic_mask(_compose(tables, order))
                report.orders_checked += 1
                if not np.array_equal(alive, predicted):
                    report.mismatches.append(
                        f"rule {k}, n={n}, order {order}: periodic set differs "
                        "from the characterization"
                    )
                    break
        _say(progress, f"rule {k}: characterization checked to n={sampled_max}")
    return report


# ---------------------------------------------------------------------------
# Reflection / inversion transport
# ---------------------------------------------------------------------------

@dataclass
class TransportCheck:
    k: int
    n: int
    word: UpdateWord
    reflection_map_ok: bool
    inversion_map_ok: bool
    reflection_per_ok: bool
    inversion_per_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.reflection_map_ok
            and self.inversion_map_ok
            and self.reflection_per_ok
            and self.inversion_per_ok
        )


def verify_equivalence_transport(
    k: int, n: int, word: UpdateWord | Sequence[int]
) -> TransportCheck:
    """Check the two conjugation identities on every state.

    Reversing the vertex numbering intertwines rule k under the word with
    its reflection under the entrywise-reversed word; complementing all
    bits intertwines k with its inversion under the same word.  Both
    identities transport periodic sets accordingly.
    """
    if not isinstance(word, UpdateWord):
        word = UpdateWord(n, tuple(word))
    table_k = _compose(local_tables(k, n), word.seq)
    table_refl = _compose(local_tables(reflect(k), n), renumber_word(word).seq)
    table_inv = _compose(local_tables(invert(k), n), word.seq)
    rev = _bitops.reverse_bit_indices(n)
    comp = _bitops.complement_indices(n)

    reflection_map_ok = bool(np.array_equal(rev[table_k], table_refl[rev]))
    inversion_map_ok = bool(np.array_equal(comp[table_k], table_inv[comp]))

    alive_k = periodic_mask(table_k)
    alive_refl = periodic_mask(table_refl)
    alive_inv = periodic_mask(table_inv)
    reflection_per_ok = bool(np.array_equal(alive_refl[rev], alive_k))
    inversion_per_ok = bool(np.array_equal(alive_inv[comp], alive_k))

    return TransportCheck(
        k=k,
        n=n,
        word=word,
        reflection_map_ok=reflection_map_ok,
        inversion_map_ok=inversion_map_ok,
        reflection_per_ok=reflection_per_ok,
        inversion_per_ok=inversion_per_ok,
    )


@dataclass
class TransportReport:
    count: int
    n_max: int
    seed: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": "transport",
            "count": self.count,
            "n_max": self.n_max,
            "seed": self.seed,
            "ok": self.ok,
            "failures": self.failures[:20],
        }


def transport_suite(
    count: int = 200,
    n_max: int = 8,
    seed: int = 0,
    progress: Progress | None = None,
) -> TransportReport:
    """Transport identities on seeded random (rule, ring size, word) triples."""
    report = TransportReport(count=count, n_max=n_max, seed=seed)
    rng = Lcg(seed)
    for index in range(count):
        k = rng.below(256)
        n = 4 + rng.below(n_max - 3)
        word = random_update_word(n, rng)
        check = verify_equivalence_transport(k, n, word)
        if not check.ok:
            report.failures.append(
                f"triple #{index} (k={k}, n={n}, word {word}): "
                f"refl map {check.reflection_map_ok}, inv map {check.inversion_map_ok}, "
                f"refl per {check.reflection_per_ok}, inv per {check.inversion_per_ok}"
            )
    _say(progress, f"transport: {count} triples checked")
    return report


# ---------------------------------------------------------------------------
# Non-simple word spot checks
# ---------------------------------------------------------------------------

@dataclass
class ReidysReport:
    k: int
    n: int
    samples: int
    seed: int
    independent: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.independent and not self.failures


def reidys_spotcheck(k: int, n: int, samples: int = 100, seed: int = 0) -> ReidysReport:
    """For a rule independent over simple orders, check that random
    non-simple words reproduce the common periodic set; every deviation is
    reported as a hard failure."""
    verdict = pi_independent(k, n, reduced=True)
    report = ReidysReport(
        k=k, n=n, samples=samples, seed=seed, independent=verdict.independent
    )
    if not verdict.independent:
        report.failures.append(f"rule {k} is not order independent at n={n}")
        return report
    expected = verdict.per.alive()
    tables = local_tables(k, n)
    rng = Lcg(seed)
    for _ in range(samples):
        word = random_update_word(n, rng, min_extra=1)
        alive = periodic_mask(_compose(tables, word.seq))
        if not np.array_equal(alive, expected):
            report.failures.append(
                f"rule {k}, n={n}, word {word}: periodic set differs from the "
                "simple-order set"
            )
    return report


@dataclass
class ReidysSuiteReport:
    ns: tuple[int, ...]
    samples: int
    seed: int
    reports: list[ReidysReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def to_json(self) -> dict:
        return {
            "suite": "reidys",
            "ns": list(self.ns),
            "samples": self.samples,
            "seed": self.seed,
            "ok": self.ok,
            "failures": [
                f for r in self.reports if not r.ok for f in r.failures
            ][:20],
        }


def reidys_suite(
    rules: Sequence[int] = OMEGA_INDEPENDENT_RULES,
    ns: tuple[int, ...] = (5, 6),
    samples: int = 100,
    seed: int = 0,
    progress: Progress | None = None,
) -> ReidysSuiteReport:
    suite = ReidysSuiteReport(ns=ns, samples=samples, seed=seed)
    for k in sorted(rules):
        for n in ns:
            # Each (rule, ring size) cell draws from its own derived seed so
            # reports merge associatively.
            derived = (seed << 32) ^ (k << 8) ^ n
            suite.reports.append(reidys_spotcheck(k, n, samples=samples, seed=derived))
        _say(progress, f"rule {k}: non-simple spot checks done")
    return suite


# ---------------------------------------------------------------------------
# Histograms and tag grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlipHistogram:
    independent: tuple[int, ...]
    total: tuple[int, ...]

    @property
    def fractions(self) -> tuple[str, ...]:
        # Exact fractions; the rounded percentage row is deliberately not
        # reproduced.
        return tuple(
            f"{ind}/{tot}" for ind, tot in zip(self.independent, self.total)
        )

    @property
    def matches_expected(self) -> bool:
        return (
            self.independent == FLIP_HISTOGRAM_INDEPENDENT
            and self.total == FLIP_HISTOGRAM_ALL
        )

    def to_json(self) -> dict:
        return {
            "flips": list(range(9)),
            "independent": list(self.independent),
            "total": list(self.total),
            "fraction": list(self.fractions),
        }


def flips_histogram(independent_rules: Iterable[int] | None = None) -> FlipHistogram:
    """Distribution of flip counts over all rules and over the independent
    ones (the embedded list unless a computed set is passed in)."""
    if independent_rules is None:
        independent_rules = OMEGA_INDEPENDENT_RULES
    total = [0] * 9
    independent = [0] * 9
    for k in range(256):
        total[flip_count(k)] += 1
    for k in independent_rules:
        independent[flip_count(k)] += 1
    return FlipHistogram(independent=tuple(independent), total=tuple(total))


@dataclass(frozen=True)
class TagGrid:
    """A grid of rule numbers addressed by tag parts.

    Cell (r, c) holds row value + column value when that sum is one of the
    104 independent rules, otherwise None.
    """

    rows: tuple[tuple[str, int], ...]
    cols: tuple[tuple[str, int], ...]
    cells: tuple[tuple[int | None, ...], ...]

    def filled(self) -> tuple[int, ...]:
        return tuple(v for row in self.cells for v in row if v is not None)


def _build_grid(
    row_syms: Sequence[str], col_syms: Sequence[str]
) -> TagGrid:
    members = set(OMEGA_INDEPENDENT_RULES)
    rows = tuple((sym, symmetric_part_value(sym[0], sym[1])) for sym in row_syms)
    cols = tuple((sym, asymmetric_part_value(sym[0], sym[1])) for sym in col_syms)
    cells = tuple(
        tuple(
            rv + cv if (rv + cv) in members else None for _, cv in cols
        )
        for _, rv in rows
    )
    return TagGrid(rows=rows, cols=cols, cells=cells)


def computed_table2() -> TagGrid:
    return _build_grid([s for s, _ in TABLE2_ROWS], [s for s, _ in TABLE2_COLS])


def computed_fig41() -> tuple[TagGrid, TagGrid]:
    left = _build_grid([s for s, _ in FIG41_LEFT_ROWS], [s for s, _ in FIG41_LEFT_COLS])
    right = _build_grid(
        [s for s, _ in FIG41_RIGHT_ROWS], [s for s, _ in FIG41_RIGHT_COLS]
    )
    return left, right


def render_grid_text(grid: TagGrid, corner: str = "") -> str:
    """Aligned text rendering; identical inputs give identical bytes."""
    label_width = max(
        [len(corner)] + [len(f"{sym}({val})") for sym, val in grid.rows]
    )
    cell_width = max(len(f"{sym}({val})") for sym, val in grid.cols) + 2
    header = corner.ljust(label_width) + "".join(
        f"{sym}({val})".rjust(cell_width) for sym, val in grid.cols
    )
    lines = [header]
    for (sym, val), row in zip(grid.rows, grid.cells):
        cells = "".join(
            (str(v) if v is not None else ".").rjust(cell_width) for v in row
        )
        lines.append(f"{sym}({val})".ljust(label_width) + cells)
    return "\n".join(lines)


def grid_to_json(grid: TagGrid) -> dict:
    return {
        "rows": [{"label": s, "value": v} for s, v in grid.rows],
        "cols": [{"label": s, "value": v} for s, v in grid.cols],
        "cells": [list(row) for row in grid.cells],
    }


@dataclass
class ReferenceTables:
    table2: TagGrid
    fig41_left: TagGrid
    fig41_right: TagGrid
    table2_matches: bool
    fig41_matches: bool
    representatives: tuple[int, ...]

    @property
    def representatives_cover_classes(self) -> bool:
        classes = {equivalence_class(k).members for k in self.representatives}
        union = set().union(*(set(m) for m in classes)) if classes else set()
        return (
            len(self.representatives) == INDEPENDENT_CLASS_COUNT
            and len(classes) == INDEPENDENT_CLASS_COUNT
            and union == set(OMEGA_INDEPENDENT_RULES)
        )

    @property
    def ok(self) -> bool:
        return (
            self.table2_matches
            and self.fig41_matches
            and self.representatives_cover_classes
        )

    def to_json(self) -> dict:
        return {
            "suite": "tables",
            "table2_matches": self.table2_matches,
            "fig41_matches": self.fig41_matches,
            "representative_count": len(self.representatives),
            "representatives_cover_classes": self.representatives_cover_classes,
            "ok": self.ok,
        }


def emit_reference_tables() -> ReferenceTables:
    """Regenerate both tag grids from scratch and diff them (bytewise on
    the canonical text rendering) against the embedded expectations."""
    table2 = computed_table2()
    left, right = computed_fig41()
    embedded_table2 = TagGrid(rows=TABLE2_ROWS, cols=TABLE2_COLS, cells=TABLE2_CELLS)
    embedded_left = TagGrid(
        rows=FIG41_LEFT_ROWS, cols=FIG41_LEFT_COLS, cells=FIG41_LEFT_CELLS
    )
    embedded_right = TagGrid(
        rows=FIG41_RIGHT_ROWS, cols=FIG41_RIGHT_COLS, cells=FIG41_RIGHT_CELLS
    )
    table2_matches = (
        render_grid_text(table2).encode() == render_grid_text(embedded_table2).encode()
    )
    fig41_matches = (
        render_grid_text(left).encode() == render_grid_text(embedded_left).encode()
        and render_grid_text(right).encode()
        == render_grid_text(embedded_right).encode()
    )
    return ReferenceTables(
        table2=table2,
        fig41_left=left,
        fig41_right=right,
        table2_matches=table2_matches,
        fig41_matches=fig41_matches,
        representatives=left.filled() + right.filled(),
    )


def equivalence_summary() -> dict:
    """Class counts recomputed from the reflection/inversion algebra."""
    from .rules import equivalence_classes

    classes = equivalence_classes()
    independent = {
        cls.members for cls in classes
        if set(cls.members) & set(OMEGA_INDEPENDENT_RULES)
    }
    union = set().union(*(set(m) for m in independent))
    return {
        "class_count": len(classes),
        "expected_class_count": EQUIV_CLASS_COUNT,
        "independent_class_count": len(independent),
        "expected_independent_class_count": INDEPENDENT_CLASS_COUNT,
        "independent_union_matches": union == set(OMEGA_INDEPENDENT_RULES),
    }
