from math import isqrt

import pytest
from hypothesis import given

from oracles import GOLDEN_TABLE, class_by_table, ppts_by_st
from pptcode.classes import ClassLabel, DivisibilityProfile, classify, classify_from_st, profile
from pptcode.enumeration import hypotenuse_ordered
from pptcode.triples import Ppt, StPair, gh_from_st, ppt_from_gh, ppt_from_st
from strategies import st_pairs


def test_label_digit_bijection():
    assert [label.digit for label in ClassLabel] == [0, 1, 2, 3, 4, 5]
    assert [label.letter for label in ClassLabel] == list("ABCDEF")
    for label in ClassLabel:
        assert ClassLabel.from_digit(label.digit) is label
        assert ClassLabel.from_letter(label.letter.lower()) is label
    with pytest.raises(ValueError):
        ClassLabel.from_letter("G")


@pytest.mark.parametrize(
    "triple, div3, div5",
    [((3, 4, 5), "a", "c"), ((15, 8, 17), "a", "a"), ((11, 60, 61), "b", "b")],
)
def test_profile(triple, div3, div5):
    assert profile(Ppt(*triple)) == DivisibilityProfile(div3=div3, div5=div5, div4="b")


@pytest.mark.parametrize(
    "triple, label",
    [
        ((3, 4, 5), "A"), ((33, 56, 65), "A"),
        ((5, 12, 13), "B"), ((35, 12, 37), "B"),
        ((15, 8, 17), "C"), ((45, 28, 53), "C"),
        ((7, 24, 25), "D"), ((13, 84, 85), "D"),
        ((21, 20, 29), "E"), ((9, 40, 41), "E"),
        ((11, 60, 61), "F"), ((91, 60, 109), "F"),
    ],
)
def test_class_examples(triple, label):
    x = Ppt(*triple)
    assert classify(x).name == label
    assert profile(x).label.name == label
    assert classify_from_st(StPair(*_st(x))).name == label


def _st(x):
    return isqrt(x.c + x.b), isqrt(x.c - x.b)


@pytest.mark.parametrize("s, t, label", [(3, 1, "A"), (5, 3, "C"), (11, 1, "F")])
def test_classify_from_st(s, t, label):
    p = StPair(s, t)
    assert classify_from_st(p).name == label == classify(ppt_from_st(p)).name


def test_golden_column():
    got = [classify(x).name for x in hypotenuse_ordered(33)]
    assert got == [row[3] for row in GOLDEN_TABLE]


def test_classify_matches_table_oracle():
    for triple in ppts_by_st(20000):
        assert classify(Ppt(*triple)).name == class_by_table(*triple)


def test_both_classification_paths_agree_to_s_999():
    for s in range(3, 1000, 2):
        for t in range(1, s, 2):
            try:
                p = StPair(s, t)
            except ValueError:
                continue
            assert classify_from_st(p) is classify(ppt_from_st(p))


@given(st_pairs())
def test_class_is_representation_invariant(p):
    assert classify(ppt_from_gh(gh_from_st(p))) is classify_from_st(p)
