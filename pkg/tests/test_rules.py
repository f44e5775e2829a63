"""Rule notations and the reflection/inversion algebra."""

from __future__ import annotations

import pytest

from acaverify.constants import (
    BIJECTIVE_RULES,
    FLIP_HISTOGRAM_ALL,
    OMEGA_INDEPENDENT_RULES,
    POTENTIAL_RULES,
)
from acaverify.rules import (
    ProofStrategy,
    Tag,
    bijective_bruteforce,
    decode,
    equivalence_class,
    equivalence_classes,
    flip_count,
    invert,
    is_bijective,
    is_quasi_symmetric,
    is_symmetric,
    reflect,
    rule_from_tag,
    static_profile,
    tag_of,
)

from oracles import invert_oracle, reflect_oracle


# ---------------------------------------------------------------------------
# decode
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "k,bits",
    [(29, "00011101"), (0, "00000000"), (204, "11001100")],
)
def test_decode_examples(k, bits):
    assert decode(k).bits == bits


def test_decode_round_trip():
    for k in range(256):
        assert int(decode(k).bits, 2) == k


@pytest.mark.parametrize("bad", [-1, 256, 1000, "29", 3.5, None, True])
def test_decode_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        decode(bad)


def test_rule_digit_matches_truth_table():
    rule = decode(29)
    # digits a7..a0 of 00011101
    assert [rule.digit(i) for i in range(7, -1, -1)] == [0, 0, 0, 1, 1, 1, 0, 1]
    assert rule.output(1, 1, 1) == 0
    assert rule.output(0, 0, 0) == 1


# ---------------------------------------------------------------------------
# tags
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "k,tag", [(29, "0x-1"), (255, "1111"), (204, "----"), (156, "-x--"), (201, "---x")]
)
def test_tag_examples(k, tag):
    assert str(tag_of(k)) == tag


def test_tag_round_trip_is_bijection():
    seen = set()
    for k in range(256):
        tag = tag_of(decode(k))
        assert rule_from_tag(tag).k == k
        seen.add(str(tag))
    assert len(seen) == 256


def test_tag_parts():
    tag = tag_of(29)
    assert tag.symmetric_part == "01"
    assert tag.asymmetric_part == "x-"


@pytest.mark.parametrize("bad", ["0ab1", "0x-", "0x-11", "ABCD"])
def test_malformed_tag_rejected(bad):
    with pytest.raises(ValueError):
        rule_from_tag(bad)


def test_rule_json():
    assert decode(29).to_json() == {"k": 29, "bits": "00011101", "tag": "0x-1"}


# ---------------------------------------------------------------------------
# reflection and inversion
# ---------------------------------------------------------------------------

def test_reflect_examples():
    assert str(tag_of(reflect(rule_from_tag("0-1x").k))) == "01-x"
    assert reflect(204) == 204
    assert reflect(75) == 89


def test_invert_examples():
    assert str(tag_of(invert(rule_from_tag("0-1x").k))) == "x0-1"
    assert invert(0) == 255
    assert invert(29) == 71


def test_reflect_matches_bruteforce_oracle():
    for k in range(256):
        assert reflect(k) == reflect_oracle(k)


def test_invert_matches_bruteforce_oracle():
    for k in range(256):
        assert invert(k) == invert_oracle(k)


def test_involutions_commute():
    for k in range(256):
        assert reflect(reflect(k)) == k
        assert invert(invert(k)) == k
        assert reflect(invert(k)) == invert(reflect(k))


def test_reflect_swaps_tag_middle():
    for k in range(256):
        tag = tag_of(k)
        expected = Tag(tag.p4, tag.p2, tag.p3, tag.p1)
        assert tag_of(reflect(k)) == expected


def test_invert_conjugates_tag():
    conj = {"1": "0", "0": "1", "-": "-", "x": "x"}
    for k in range(256):
        tag = tag_of(k)
        expected = Tag(conj[tag.p1], conj[tag.p2], conj[tag.p3], conj[tag.p4])
        assert tag_of(invert(k)) == expected


# ---------------------------------------------------------------------------
# equivalence classes
# ---------------------------------------------------------------------------

def test_equivalence_class_count():
    classes = equivalence_classes()
    assert len(classes) == 88
    assert sorted(m for cls in classes for m in cls.members) == list(range(256))


def test_class_of_204_is_singleton():
    assert equivalence_class(204).members == (204,)


def test_independent_list_is_union_of_41_classes():
    touched = {
        cls.members for cls in equivalence_classes()
        if set(cls.members) & set(OMEGA_INDEPENDENT_RULES)
    }
    assert len(touched) == 41
    union = set().union(*(set(m) for m in touched))
    assert union == set(OMEGA_INDEPENDENT_RULES)


# ---------------------------------------------------------------------------
# static profiles
# ---------------------------------------------------------------------------

def test_profile_204():
    profile = static_profile(204)
    assert profile.bijective
    assert profile.flip_count == 0
    assert profile.proof_strategy is ProofStrategy.BIJECTIVE


def test_bijective_rules_are_exactly_16():
    computed = tuple(k for k in range(256) if is_bijective(k))
    assert computed == BIJECTIVE_RULES
    assert len(computed) == 16


def test_bijectivity_matches_injectivity_bruteforce():
    for k in range(256):
        assert is_bijective(k) == bijective_bruteforce(k)


def test_profile_232_is_potential_b():
    assert static_profile(232).proof_strategy is ProofStrategy.POTENTIAL_B


def test_strategy_assignment_covers_the_whole_list():
    not_independent = 0
    for k in range(256):
        profile = static_profile(k)
        if k in OMEGA_INDEPENDENT_RULES:
            assert profile.proof_strategy is not ProofStrategy.NOT_INDEPENDENT
        else:
            assert profile.proof_strategy is ProofStrategy.NOT_INDEPENDENT
            not_independent += 1
    assert not_independent == 152


def test_via_equivalence_points_to_smallest_covered_member():
    direct = (
        set(BIJECTIVE_RULES)
        | {k for ks in POTENTIAL_RULES.values() for k in ks}
        | {32, 40, 152, 184}
    )
    for k in OMEGA_INDEPENDENT_RULES:
        profile = static_profile(k)
        if profile.proof_strategy is ProofStrategy.VIA_EQUIVALENCE:
            assert k not in direct
            covered = [m for m in equivalence_class(k).members if m in direct]
            assert profile.equivalence_rep == covered[0]
        else:
            assert profile.equivalence_rep is None


def test_flip_histogram_is_binomial_row():
    histogram = [0] * 9
    for k in range(256):
        histogram[flip_count(k)] += 1
    assert tuple(histogram) == FLIP_HISTOGRAM_ALL


def test_direct_strategies_match_the_rule_lists():
    strategy_lists = {
        ProofStrategy.BIJECTIVE: set(BIJECTIVE_RULES),
        ProofStrategy.POTENTIAL_A: set(POTENTIAL_RULES["A"]),
        ProofStrategy.POTENTIAL_B: set(POTENTIAL_RULES["B"]),
        ProofStrategy.POTENTIAL_C: set(POTENTIAL_RULES["C"]),
        ProofStrategy.POTENTIAL_D: set(POTENTIAL_RULES["D"]),
        ProofStrategy.EXC_32_40: {32, 40},
        ProofStrategy.EXC_152_184: {152, 184},
        ProofStrategy.EXC_28_29: {28, 29},
    }
    for strategy, rules in strategy_lists.items():
        computed = {
            k for k in range(256) if static_profile(k).proof_strategy is strategy
        }
        assert computed == rules
    via = {
        k for k in range(256)
        if static_profile(k).proof_strategy is ProofStrategy.VIA_EQUIVALENCE
    }
    assert len(via) == 104 - sum(len(r) for r in strategy_lists.values())


def test_symmetric_rule_counts():
    symmetric = [k for k in range(256) if is_symmetric(k)]
    assert len(symmetric) == 16
    assert sum(1 for k in symmetric if k in OMEGA_INDEPENDENT_RULES) == 11
    for k in symmetric:
        assert is_quasi_symmetric(k)
    assert sum(1 for k in range(256) if is_quasi_symmetric(k)) == 64
