import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from varcont.corpus import CORPUS, halve_a, identity, last_letter
from varcont.fsm import (
    Automaton, determinize, equivalent, evaluate, is_subset, minimize_dfa, reverse, slice_, transducer,
)
from varcont.words import lcp, lcp_all, primitive_root, roots

words = st.lists(st.sampled_from("ab"), max_size=8).map(tuple)


def ends_in_a():
    return Automaton((0, 1), ("a", "b"), frozenset({(0, "a", 1), (0, "b", 0), (1, "a", 1), (1, "b", 0)}),
                     frozenset({0}), frozenset({1}))


def test_halve_a_keeps_every_other_letter():
    t = halve_a()
    assert [len(evaluate(t, ("a",) * n)) for n in range(6)] == [0, 1, 1, 2, 2, 3]


def test_last_letter():
    t = last_letter()
    assert evaluate(t, tuple("abba")) == ("a",)
    assert evaluate(t, ()) is None


def test_corpus_machines_are_unambiguous():
    for name, make in CORPUS.items():
        assert make().unambiguous, name


def test_ambiguous_machine_has_witness():
    t = transducer("a", "x", [("p", "a", "q", "x"), ("p", "a", "r", "x")], ["p"], ["q", "r"])
    assert not t.unambiguous
    assert t.ambiguity_witness == ("a",)


def test_minimize_is_equivalent_and_small():
    a = ends_in_a()
    m = minimize_dfa(determinize(a))
    assert len(m.states) == 2
    assert equivalent(a, m)


def test_inclusion():
    a = ends_in_a()
    full = Automaton((0,), ("a", "b"), frozenset({(0, "a", 0), (0, "b", 0)}), frozenset({0}), frozenset({0}))
    assert is_subset(a, full)
    assert not is_subset(full, a)


@given(words)
def test_reverse_reverses(w):
    t = identity()
    assert evaluate(reverse(t), w[::-1]) == evaluate(t, w)[::-1]


@settings(max_examples=50)
@given(words)
def test_slice_from_initial_matches_outputs_without_lambda(w):
    t = halve_a()
    s = slice_(t, "p")
    assert (evaluate(s, w) is None) == (evaluate(t, w) is None)


@given(words, words)
def test_lcp_is_common_prefix(u, v):
    p = lcp(u, v)
    assert u[:len(p)] == p == v[:len(p)]
    assert len(p) == len(u) or len(p) == len(v) or u[len(p)] != v[len(p)]
    assert lcp_all([u, v]) == p


@given(st.lists(st.sampled_from("ab"), min_size=1, max_size=6).map(tuple), st.integers(1, 4))
def test_primitive_root(w, k):
    r = primitive_root(w * k)
    assert r == primitive_root(w)
    assert all(x * (len(w * k) // len(x)) == w * k for x in roots(w * k))


def test_words_exhaustive_small():
    t = identity()
    for w in itertools.product("ab", repeat=4):
        assert evaluate(t, w) == w
