import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from monid.families import FIXED, delta, kappa, resolve
from monid.identities import (BACKWARD, FORWARD, I11, Budget, Derivation, Exhausted, Identity,
                              IdentityParseError, ReplayError, apply_subst, certificate_json,
                              critical_pairs, derive, directly_deducible, elementary_insertions,
                              from_certificate, is_variant, p_chain, parse_identity, removable, replay,
                              successors, swap_pair, to_certificate)
from monid.words import ini2
from monid.words import parse_word as p

letters = st.sampled_from(["x", "y", "z", "t"])
words = st.lists(letters, max_size=8).map(tuple)
AXIOMS = [I11, kappa(1), FIXED["XYXY"], FIXED["LRB_AX"], parse_identity("x y = y x", "COMM"),
          parse_identity("x x = x", "IDEMP")]


def test_parse_identity():
    ident = parse_identity("x s x t = x s x t x")
    assert ident == I11
    assert parse_identity("x ≈ 1").rhs == ()
    with pytest.raises(IdentityParseError):
        parse_identity("x = y = z")
    with pytest.raises(IdentityParseError):
        parse_identity("x = Y")


def test_apply_subst():
    lhs = p("y2 y1 x1 y2 x0 x1 y1")
    assert apply_subst({"y1": (), "y2": ("x",)}, lhs) == p("x x1 x x0 x1")
    assert apply_subst({}, lhs) == lhs
    assert apply_subst({"t": p("t x")}, p("x s x t")) == p("x s x t x")
    assert apply_subst({"x": ("y",)}, ()) == ()


@given(words, words, st.dictionaries(letters, words, max_size=3))
def test_apply_subst_distributes(u, v, phi):
    assert apply_subst(phi, u + v) == apply_subst(phi, u) + apply_subst(phi, v)


def test_directly_deducible_examples():
    found = directly_deducible(p("x s x t"), p("x s x t x"), I11)
    assert found and found[0].a == () and found[0].b == ()
    assert found[0].moved_letters() == {}
    found = directly_deducible(p("x s x t x"), p("x s x t x x"), I11)
    assert any(w.moved_letters() == {"t": p("t x")} and w.a == () for w in found)
    assert directly_deducible(p("x y"), p("y x"), I11) == []


def test_directly_deducible_is_symmetric():
    u, v = p("x s x t x"), p("x s x t x x")
    there = directly_deducible(u, v, I11)
    back = directly_deducible(v, u, I11)
    assert len(there) == len(back)
    assert {w.direction for w in there} == {FORWARD}
    assert {w.direction for w in back} == {BACKWARD}


@settings(max_examples=150, deadline=None)
@given(words, st.sampled_from(AXIOMS), st.sampled_from([FORWARD, BACKWARD]))
def test_successors_match_brute_force(w, axiom, direction):
    src, dst = axiom.sides(direction)
    if not set(dst) <= set(src):
        return
    got = {}
    for v, wit in successors(w, axiom, direction):
        assert v not in got  # each word reported once
        assert wit.source() == w and wit.target() == v
        got[v] = wit
    assert set(got) == oracles.one_step_words(w, src, dst)


@settings(max_examples=100, deadline=None)
@given(words, st.sampled_from(AXIOMS))
def test_successors_are_directly_deducible(w, axiom):
    for v, _ in successors(w, axiom, FORWARD, cap=2):
        assert directly_deducible(w, v, axiom)


@settings(max_examples=150, deadline=None)
@given(words)
def test_i11_steps_keep_ini2(w):
    for direction in (FORWARD, BACKWARD):
        for v, _ in successors(w, I11, direction):
            assert ini2(v) == ini2(w)


def test_derive_examples():
    d = derive([I11], p("x s x t x x"), p("x s x t"))
    assert isinstance(d, Derivation) and len(d) == 2
    d.verify()
    w = p("x y x")
    assert len(derive([I11], w, w)) == 0
    d = derive([I11, kappa(1)], delta(1, 1).lhs, delta(1, 1).rhs, Budget(max_steps=12))
    assert d
    d.verify()


def test_derive_exhaustion_is_a_value():
    result = derive([I11], p("x y"), p("y x"), Budget(max_steps=3))
    assert isinstance(result, Exhausted)
    assert not result
    assert "no derivation found within budget" in result.render()
    result = derive([], p("x y"), p("y x"), Budget(max_steps=3))
    assert isinstance(result, Exhausted)


def test_derive_without_i11_searches_raw_steps():
    comm = parse_identity("x y = y x", "COMM")
    d = derive([comm], p("x y z"), p("z y x"), Budget(max_steps=4))
    assert d and d.end == p("z y x")
    d.verify()


def test_replay():
    ident = delta(1, 1)
    d = derive([I11, kappa(1)], ident.lhs, ident.rhs, Budget(max_steps=12))
    again = replay([I11, kappa(1)], d.chain, [s.axiom.name for s in d.steps])
    assert again.chain == d.chain
    assert len(replay([I11], [p("x y")])) == 0
    with pytest.raises(ReplayError) as err:
        replay([I11], [p("x y"), p("y x")])
    assert err.value.index == 0


def test_replay_rejects_unknown_hint():
    with pytest.raises(ReplayError):
        replay([I11], [p("x s x t"), p("x s x t x")], ["kappa1"])


def test_certificate_round_trip():
    d = derive([I11], p("x s x t x x"), p("x s x t"))
    cert = json.loads(certificate_json(d))
    again = from_certificate(cert)
    assert again.chain == d.chain
    stripped = {k: v for k, v in to_certificate(d).items() if k != "definitions"}
    assert from_certificate(stripped, resolve).chain == d.chain


def test_certificate_tampering_is_caught():
    d = derive([I11], p("x s x t x x"), p("x s x t"))
    cert = to_certificate(d)
    cert["chain"][1] = "x s x t t"
    with pytest.raises(ReplayError):
        from_certificate(cert)


def test_p_chain_links_words_with_equal_ini2():
    u, v = p("x y x y x y"), p("x y x y y x")
    chain = p_chain(u, v)
    assert chain[0] == u and chain[-1] == v
    replay([I11], chain)
    with pytest.raises(ValueError):
        p_chain(p("x y"), p("y x"))


@given(words)
def test_elementary_insertions_keep_ini2(w):
    for v in elementary_insertions(w):
        assert len(v) == len(w) + 1 and ini2(v) == ini2(w)


def test_critical_pairs():
    assert critical_pairs(parse_identity("x y t x y = x y t y x")) == [(("x", 2), ("y", 2))]
    assert critical_pairs(parse_identity("x y = y x")) == [(("x", 1), ("y", 1))]
    assert critical_pairs(parse_identity("x y x = x y x")) == []
    with pytest.raises(ValueError):
        critical_pairs(parse_identity("x = x x"))


def test_swap_pair():
    assert swap_pair(p("x y t x y"), (("x", 2), ("y", 2))) == p("x y t y x")
    assert swap_pair(p("x y"), (("x", 1), ("y", 1))) == p("y x")
    w = p("x y t x y")
    pair = (("x", 2), ("y", 2))
    assert swap_pair(swap_pair(w, pair), (("y", 2), ("x", 2))) == w
    with pytest.raises(ValueError):
        swap_pair(p("x t y"), (("x", 1), ("y", 1)))


def test_removable():
    ident = parse_identity("x y t x y = x y t y x")
    pair = critical_pairs(ident)[0]
    assert removable(ident, pair, [I11, FIXED["XYTXY"]], Budget(max_steps=2))
    assert not removable(ident, pair, [], Budget(max_steps=2))
    # x has depth 2 on the left, so kappa1 lets its second occurrence jump
    ident = parse_identity("x x1 x x0 x1 = x x x1 x0 x1")
    result = removable(ident, critical_pairs(ident)[0], [I11, kappa(1)], Budget(max_steps=3))
    assert result


def test_identity_helpers():
    assert is_variant(parse_identity("a b a c = a b a c a"), I11)
    assert is_variant(I11.reversed(), I11)
    assert not I11.is_balanced() and kappa(1).is_balanced()
    assert Identity(p("x"), p("x")).is_trivial()
