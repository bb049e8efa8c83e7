import pytest

from varcont.checkers import UNSUPPORTED, check, evaluate_omega
from varcont.corpus import CORPUS, alternate_ab, drop_block_heads, halve_a, identity, last_letter, x_producer
from varcont.errors import NotUnambiguousError, UnsupportedVarietyError
from varcont.fsm import transducer
from varcont.monoid import VARIETIES

# columns follow VARIETIES: J R L DA A Com Ab Gsol G.  Every "n" has a
# pulled-back counterexample from the semantic oracle; every "y" survived it.
GOLDEN = {
    "halve_a": "y y y y y y y y y",
    "x_producer": "n n n n n n n y y",
    "ab_ba": "y y n y y y y n n",
    "last_letter": "n n y y y n n n n",
    "alternate_ab": "y y n n n y y y y",
    "alternate_ba": "y n y n n y y y y",
    "drop_block_heads": "n n n n y n n n n",
    "identity": "y y y y y y y y y",
    "swap_a": "y y y y y y y y y",
    "even_a": "n n n n n y y y y",
    "s5_marker": "y y n n n n n n y",
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_row(name):
    t = CORPUS[name]()
    got = " ".join(check(t, v).answer[0] for v in VARIETIES)
    assert got == GOLDEN[name]


def test_gnil_is_unsupported():
    assert UNSUPPORTED == ("Gnil",)
    v = check(identity(), "Gnil")
    assert v.answer == "unsupported" and v.witness is None


def test_unknown_variety():
    with pytest.raises(UnsupportedVarietyError):
        check(identity(), "Q")


def test_ambiguous_input_is_rejected():
    t = transducer("a", "x", [("p", "a", "q", "x"), ("p", "a", "r", "")], ["p"], ["q", "r"])
    with pytest.raises(NotUnambiguousError) as err:
        check(t, "A")
    assert err.value.witness == ("a",)


def test_no_verdicts_carry_witnesses():
    for t, v in ((last_letter(), "J"), (drop_block_heads(), "DA"), (x_producer(), "Ab"), (alternate_ab(), "L")):
        verdict = check(t, v)
        assert verdict.answer == "no"
        assert verdict.witness


def test_yes_verdicts_have_no_witness():
    verdict = check(halve_a(), "A")
    assert verdict.yes and verdict.witness is None


def test_omega_of_halve_a():
    term = evaluate_omega(halve_a(), ("a",))
    assert term is not None
    assert set(term.y) <= {"a"}


def test_omega_undefined_outside_domain():
    t = transducer("ab", "x", [("p", "a", "p", "x")], ["p"], ["p"])
    assert evaluate_omega(t, ("b",)) is None
