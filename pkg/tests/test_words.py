import pytest
from hypothesis import given
from hypothesis import strategies as st

from monid.words import (WordParseError, classify, delete, ini, ini2, ini_sq, is_2_limited, is_balanced,
                         nth_occ, occ, parse_word, render, retain, sorted_letters)

p = parse_word
letters = st.sampled_from(["x", "y", "z", "t", "x0", "x1"])
words = st.lists(letters, max_size=10).map(tuple)


def test_parse_examples():
    assert p("x s x t") == ("x", "s", "x", "t")
    assert p("1") == ()
    assert p("x0 x1") == ("x0", "x1")
    assert p("  x   zoo ") == ("x", "zoo")


@pytest.mark.parametrize("text,offset", [("x Y", 2), ("x,y", 1), ("", 0), ("x 1", 2), ("0x", 0)])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(WordParseError) as err:
        p(text)
    assert err.value.offset == offset


def test_render_empty_is_one():
    assert render(()) == "1"
    assert render(p("x y")) == "x y"


def test_classify():
    assert classify(p("x s x t")) == ({"x", "s", "t"}, {"s", "t"}, {"x"})
    assert classify(()) == (set(), set(), set())
    assert classify(p("x y x y")) == ({"x", "y"}, set(), {"x", "y"})


def test_occurrences():
    w = p("x s x t")
    assert occ(w, "x") == 2
    assert nth_occ(w, "x", 2).position == 2
    assert occ((), "x") == 0
    assert nth_occ(w, "x", 3) is None
    with pytest.raises(ValueError):
        nth_occ(w, "x", 0)


def test_delete_retain():
    w = p("x s x t")
    assert delete(w, {"x"}) == p("s t")
    assert retain(w, {"x", "t"}) == p("x x t")
    assert retain(w, set(w)) == w


def test_ini_family():
    w = p("x x x y z y x")
    assert ini(w) == p("x y z")
    assert ini_sq(w) == p("x x y y z z")
    assert ini2(w) == p("x x y z y")


def test_limited_and_balanced():
    assert is_2_limited(p("x s x t"))
    assert not is_2_limited(p("x x x"))
    assert is_balanced(p("x y x y"), p("x x y y"))
    assert not is_balanced(p("x y"), p("x x"))


def test_letter_order_is_numeric_aware():
    assert sorted_letters(["x10", "x2", "y", "x"]) == ["x", "x2", "x10", "y"]


@given(words)
def test_ini2_idempotent(w):
    assert ini2(ini2(w)) == ini2(w)


@given(words)
def test_ini_lengths(w):
    assert ini(ini2(w)) == ini(w)
    assert len(ini(w)) == len(set(w))
    assert len(ini_sq(w)) == 2 * len(set(w))


@given(words, st.sets(letters))
def test_retain_is_complement_of_delete(w, xs):
    assert retain(w, xs) == delete(w, set(w) - xs)


@given(words)
def test_classify_partitions(w):
    con, sim, mul = classify(w)
    assert not sim & mul
    assert sim | mul == con


@given(words)
def test_round_trip(w):
    assert p(render(w)) == w
