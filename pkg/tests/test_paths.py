from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from hassepaths.paths import (
    CLASSES,
    PathWord,
    Step,
    enumerate_class,
    get_class,
    heights,
    is_level_balanced,
    iter_class,
    occurrences,
    occurrences_off_axis,
    occurrences_on_axis,
    parse_path,
    reflect,
    validate,
)
from reference import brute_paths, profile

SMALL = {"DD": 6, "GD": 5, "MM": 7, "GM": 6, "SS": 4, "GS": 4, "FF": 9, "GF": 8}


@pytest.mark.parametrize("cls", list(CLASSES))
def test_enumeration_matches_brute_force(cls):
    for n in range(SMALL[cls] + 1):
        got = [p.word for p in enumerate_class(cls, n)]
        assert got == brute_paths(cls, n), (cls, n)


def test_spec_examples():
    assert [str(p) for p in enumerate_class("DD", 0)] == ["-"]
    assert len(enumerate_class("DD", 3)) == 5
    assert {p.word for p in enumerate_class("GM", 2)} == {"HH", "UD", "DU"}
    assert len(enumerate_class("FF", 4)) == 5


def test_known_counts():
    counts = {
        "DD": [1, 1, 2, 5, 14, 42, 132, 429],
        "GD": [1, 2, 6, 20, 70, 252, 924],
        "MM": [1, 1, 2, 4, 9, 21, 51, 127],
        "GM": [1, 1, 3, 7, 19, 51, 141, 393],
        "SS": [1, 2, 6, 22, 90, 394, 1806],
        "GS": [1, 3, 13, 63, 321, 1683],
        "FF": [1, 1, 2, 3, 5, 8, 13, 21, 34],
        "GF": [1, 1, 3, 5, 11, 21, 43, 85, 171],
    }
    for cls, seq in counts.items():
        assert [len(enumerate_class(cls, n)) for n in range(len(seq))] == seq, cls


def test_negative_size_rejected():
    with pytest.raises(ValueError):
        enumerate_class("DD", -1)


def test_class_lookup():
    assert get_class("d").name == "DD"
    assert get_class("S") is CLASSES["SS"]
    with pytest.raises(ValueError):
        get_class("XX")
    assert CLASSES["SS"].flat == 2 and CLASSES["MM"].flat == 1
    assert not CLASSES["FF"].is_lattice and CLASSES["GS"].is_lattice


def test_steps_and_widths():
    assert [s.width for s in Step] == [1, 1, 1, 2]
    assert [s.delta for s in Step] == [1, -1, 0, 0]
    p = parse_path("UHD", "SS")
    assert p.width == 4 and p.length == 3
    assert p.heights == [0, 1, 1, 1, 0]
    assert p.steps == (Step.UP, Step.FLAT2, Step.DOWN)
    assert parse_path("-", "DD") == PathWord("")


def test_validate_diagnostics():
    ok, msg = validate("DD", PathWord("UDUD"))
    assert ok and msg == "ok"
    ok, msg = validate("DD", PathWord("DU"))
    assert not ok and "window" in msg
    ok, msg = validate("FF", PathWord("UHD"))
    assert not ok and "off the x-axis" in msg
    ok, msg = validate("DD", PathWord("UU"))
    assert not ok and "ends at height" in msg
    ok, msg = validate("DD", PathWord("H"))
    assert not ok and "flat" in msg
    ok, msg = validate("SS", PathWord("UHD", 1))
    assert not ok and "FlatUnit" in msg
    assert validate("GS", PathWord("DHU", 2))[0]


def test_factor_statistics():
    p = PathWord("UUDUDDUD")
    assert occurrences(p, "UD") == 3
    assert occurrences(p, "DU") == 2
    assert occurrences_off_axis(p, "UD") == 2
    assert occurrences_on_axis(p, "UD") == 1
    assert occurrences(PathWord("HHH"), "HH") == 2  # overlapping
    assert occurrences_off_axis(PathWord("UHHD"), "HH") == 1
    assert is_level_balanced("UD") and not is_level_balanced("UU")
    with pytest.raises(ValueError):
        occurrences_off_axis(p, "UU")
    with pytest.raises(ValueError):
        occurrences(p, "")


def test_reflect_and_heights():
    p = PathWord("UHD", 2)
    assert reflect(p) == PathWord("DHU", 2)
    assert heights(reflect(p)) == [-h for h in heights(p)]


@st.composite
def grand_paths(draw):
    cls = draw(st.sampled_from(["GD", "GM", "GS", "GF"]))
    n = draw(st.integers(0, 5))
    paths = enumerate_class(cls, n)
    return cls, draw(st.sampled_from(paths))


@given(grand_paths())
def test_heights_invariants(item):
    cls, p = item
    h = p.heights
    assert h[0] == 0 and h[-1] == 0
    assert len(h) == p.width + 1
    assert all(abs(a - b) <= 1 for a, b in zip(h, h[1:]))
    assert h == profile(p.word, p.flat)
    assert validate(cls, p)[0]
    assert validate(cls, reflect(p))[0]


@given(st.text(alphabet="UDH", max_size=12), st.sampled_from(list(CLASSES)))
def test_validate_agrees_with_enumeration(word, cls):
    spec = get_class(cls)
    p = PathWord(word, spec.flat)
    ok, _ = validate(cls, p)
    if ok:
        assert p in _members(cls, spec.size_of(p))


@lru_cache(maxsize=None)
def _members(cls, n):
    return frozenset(iter_class(cls, n))
