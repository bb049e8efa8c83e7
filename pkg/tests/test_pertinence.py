import os
import random
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))
import oracles  # noqa: E402
from varcont.corpus import CORPUS, halve_a  # noqa: E402
from varcont.pertinence import (  # noqa: E402
    KINDS, enriched_monoid, enumerate_pertaining, same_input_coreachable_pairs, same_input_reachable_pairs,
)
from test_acceptance import pertaining_disagreements  # noqa: E402


def test_enriched_monoid_of_halve_a():
    assert len(enriched_monoid(halve_a())) == 4


def test_reachable_pairs_carry_words():
    t = halve_a()
    pairs = same_input_reachable_pairs(t)
    assert set(pairs) == {("p", "p"), ("q", "q")}
    for (p, q), s in pairs.items():
        ends = {r for r in t.states if t.runs(s, start="p", end=r)}
        assert {p, q} <= ends
    assert same_input_coreachable_pairs(t)["p", "q"] == ()


def test_unknown_kind():
    with pytest.raises(ValueError):
        enumerate_pertaining(halve_a(), "B")


@pytest.mark.parametrize("kind", KINDS)
def test_halve_a_tuples_are_full(kind):
    tuples = enumerate_pertaining(halve_a(), kind)
    assert tuples
    assert all(tp.classification == "full" for tp in tuples)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_duplicate_free_with_consistent_witnesses(name):
    t = CORPUS[name]()
    for kind in KINDS:
        tuples = enumerate_pertaining(t, kind)
        keys = [oracles.pertaining_keys([tp], kind) for tp in tuples]
        assert len(set().union(*keys) if keys else set()) == len(tuples)
        for tp in tuples:
            assert tp.u and set(tp.u) == set(tp.input_content)
            assert tp.n >= 1


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_matches_bounded_search(seed):
    rng = random.Random(seed)
    t = oracles.random_transducer(rng, states=rng.randint(1, 3))
    for kind in KINDS:
        assert pertaining_disagreements(t, kind) == []
