"""Small helpers on finite words.

Words are tuples of symbols.  Plain strings are accepted wherever a word is
expected and are split into one symbol per character.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

Word = tuple

EMPTY: Word = ()


def as_word(w) -> Word:
    if isinstance(w, tuple):
        return w
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def show(w: Sequence, sep: str = "") -> str:
    return sep.join(str(c) for c in w)


def lcp(a: Sequence, b: Sequence) -> Word:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return tuple(a[:n])


def lcp_all(words: Iterable[Sequence]) -> Word | None:
    """Longest common prefix of a collection, ``None`` if it is empty."""
    out = None
    for w in words:
        out = tuple(w) if out is None else lcp(out, w)
    return out


def is_prefix(a: Sequence, b: Sequence) -> bool:
    return len(a) <= len(b) and tuple(b[: len(a)]) == tuple(a)


def is_suffix(a: Sequence, b: Sequence) -> bool:
    return len(a) <= len(b) and tuple(b[len(b) - len(a):]) == tuple(a)


def primitive_root(w: Sequence) -> Word:
    w = tuple(w)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def roots(w: Sequence) -> list[Word]:
    """All ``z`` with ``w == z**k`` for some ``k >= 1``, shortest first."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        return []
    return [w[:d] for d in range(1, n + 1) if n % d == 0 and w[:d] * (n // d) == w]


def contents(w: Iterable) -> frozenset:
    return frozenset(w)


def parikh(w: Iterable, alphabet: Sequence) -> tuple[int, ...]:
    c = Counter(w)
    return tuple(c[b] for b in alphabet)


def vec_add(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(u, v))


def words_upto(alphabet: Sequence, n: int):
    """All words of length at most ``n``, by increasing length."""
    layer: list[Word] = [()]
    yield ()
    for _ in range(n):
        layer = [w + (a,) for w in layer for a in alphabet]
        yield from layer


def strip_suffix_power(w: Sequence, x: Sequence) -> Word:
    """Remove the longest suffix of ``w`` lying in ``x*``."""
    w, x = tuple(w), tuple(x)
    if not x:
        return w
    while is_suffix(x, w):
        w = w[: len(w) - len(x)]
    return w


def strip_suffix_letters(w: Sequence, letters) -> Word:
    """Remove the longest suffix of ``w`` lying in ``letters*``."""
    w = tuple(w)
    i = len(w)
    while i and w[i - 1] in letters:
        i -= 1
    return w[:i]
