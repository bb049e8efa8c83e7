"""Small named transducers used as fixtures and in the experiment scripts."""

from __future__ import annotations

from .fsm import Transducer, transducer


def halve_a() -> Transducer:
    """Unary machine removing every second ``a``."""
    return transducer("a", "a", [("p", "a", "q", "a"), ("q", "a", "p", "")], ["p"], ["p", "q"])


def x_producer() -> Transducer:
    """``a`` writes ``x`` on state 1 and ``a`` on state 2; ``b`` swaps the states."""
    return transducer("ab", "abx",
                      [("1", "a", "1", "x"), ("2", "a", "2", "a"), ("1", "b", "2", "b"), ("2", "b", "1", "b")],
                      ["1"], ["1", "2"])


def ab_ba() -> Transducer:
    """``w`` in ``aA*`` to ``(ab)^|w|``, ``w`` in ``bA*`` to ``(ba)^|w|``."""
    return transducer("ab", "ab",
                      [("0", "a", "A", "ab"), ("0", "b", "B", "ba"),
                       ("A", "a", "A", "ab"), ("A", "b", "A", "ab"),
                       ("B", "a", "B", "ba"), ("B", "b", "B", "ba")],
                      ["0"], ["0", "A", "B"])


def last_letter() -> Transducer:
    """Erase everything but the last letter."""
    return transducer("ab", "ab",
                      [("0", "a", "0", ""), ("0", "b", "0", ""), ("0", "a", "1", "a"), ("0", "b", "1", "b")],
                      ["0"], ["1"])


def alternate_ab() -> Transducer:
    """``a^2n`` to ``(ab)^n`` and ``a^(2n+1)`` to ``(ab)^n a``."""
    return transducer("a", "ab", [("p", "a", "q", "a"), ("q", "a", "p", "b")], ["p"], ["p", "q"])


def alternate_ba() -> Transducer:
    """``a^2n`` to ``(ab)^n`` and ``a^(2n+1)`` to ``b (ab)^n``."""
    return transducer("a", "ab",
                      [("e0", "a", "e1", "a"), ("e1", "a", "e0", "b"),
                       ("o", "a", "o0", "b"), ("o0", "a", "o1", "a"), ("o1", "a", "o0", "b")],
                      ["e0", "o"], ["e0", "o0"])


def drop_block_heads() -> Transducer:
    """Remove the first letter of each block of ``a``'s and of ``b``'s."""
    return transducer("ab", "ab",
                      [("0", "a", "A", ""), ("0", "b", "B", ""),
                       ("A", "a", "A", "a"), ("A", "b", "B", ""),
                       ("B", "b", "B", "b"), ("B", "a", "A", "")],
                      ["0"], ["0", "A", "B"])


def identity(alphabet="ab") -> Transducer:
    return transducer(alphabet, alphabet, [("0", c, "0", c) for c in alphabet], ["0"], ["0"])


def swap_a() -> Transducer:
    """Copy the input; ``a`` toggles between two states."""
    return transducer("ab", "ab",
                      [("0", "a", "1", "a"), ("1", "a", "0", "a"), ("0", "b", "0", "b"), ("1", "b", "1", "b")],
                      ["0"], ["0", "1"])


def even_a() -> Transducer:
    """Identity restricted to ``(aa)*``."""
    return transducer("a", "a", [("0", "a", "1", "a"), ("1", "a", "0", "a")], ["0"], ["0"])


def s5_marker() -> Transducer:
    """``a`` cycles five states, ``b`` swaps the first two; ``x`` marks moves out of state 0."""
    trans = []
    for i in range(5):
        swap = {0: 1, 1: 0}.get(i, i)
        out = "x" if i == 0 else "y"
        trans.append((str(i), "a", str((i + 1) % 5), out))
        trans.append((str(i), "b", str(swap), out))
    return transducer("ab", "xy", trans, ["0"], [str(i) for i in range(5)])


CORPUS = {
    "halve_a": halve_a,
    "x_producer": x_producer,
    "ab_ba": ab_ba,
    "last_letter": last_letter,
    "alternate_ab": alternate_ab,
    "alternate_ba": alternate_ba,
    "drop_block_heads": drop_block_heads,
    "identity": identity,
    "swap_a": swap_a,
    "even_a": even_a,
    "s5_marker": s5_marker,
}
