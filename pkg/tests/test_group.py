import itertools
import os
import random
import sys

from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))
import oracles  # noqa: E402
from varcont.checkers import (  # noqa: E402
    adjoin_codeterministic, adjoin_deterministic, group_pipeline, is_group_variety_transducer,
    is_plurisubsequential, merge_equivalent_states, normalize_outputs,
)
from varcont.checkers.group import find_fork, output_prefixes  # noqa: E402
from varcont.corpus import ab_ba, halve_a, last_letter, s5_marker  # noqa: E402
from varcont.fsm import evaluate, transducer  # noqa: E402


def same_function(t, u, bound=6):
    return all(evaluate(t, w) == evaluate(u, w)
               for k in range(bound + 1) for w in itertools.product(t.input_alphabet, repeat=k))


def test_last_letter_becomes_subsequential_on_the_dual_side():
    nf = group_pipeline(last_letter())
    assert same_function(last_letter(), nf)


def test_output_prefixes_are_pushed():
    t = transducer("a", "x", [("p", "a", "q", ""), ("q", "a", "q", "x")], ["p"], ["q"])
    t = t.with_(rho={"q": ("x",)})
    assert output_prefixes(t)["q"] == ("x",)
    n = normalize_outputs(t)
    assert same_function(t, n)
    assert n.lam["p"] == ("x",) and n.rho["q"] == ()


def test_adjoined_machines_realize_the_same_function():
    for t in (halve_a(), last_letter(), ab_ba()):
        assert same_function(t, adjoin_codeterministic(t))
        assert same_function(t, adjoin_deterministic(t))


def test_merge_collapses_duplicate_states():
    t = transducer("a", "x", [("p", "a", "q", "x"), ("q", "a", "p", "x")], ["p"], ["p", "q"])
    m = merge_equivalent_states(t)
    assert len(m.states) == 1
    assert same_function(t, m)


def test_plurisubsequential():
    assert is_plurisubsequential(group_pipeline(halve_a()))
    assert find_fork(group_pipeline(halve_a())) is None


def test_group_transducers():
    assert is_group_variety_transducer(halve_a(), "Gsol")
    assert is_group_variety_transducer(s5_marker(), "G")
    assert not is_group_variety_transducer(s5_marker(), "Gsol")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_pipeline_preserves_random_functions(seed):
    rng = random.Random(seed)
    t = oracles.random_transducer(rng, states=rng.randint(1, 3))
    assert same_function(t, group_pipeline(t), 5)
