"""Values of transducers on omega powers ``x^w``, as terms ``s y^(w-1) t``."""

from __future__ import annotations

from dataclasses import dataclass

from ..fsm import ALL, Transducer, slice_
from ..monoid import identity_matrix, mat_mul
from ..words import Word, as_word


@dataclass(frozen=True)
class OmegaTerm:
    s: Word
    y: Word
    t: Word
    period: int  # copies of x read per copy of y

    def expand(self, j: int) -> Word:
        """Value on ``x^(j * period)``, ``j >= 1``."""
        return self.s + self.y * (j - 1) + self.t


def word_matrix(t: Transducer, w) -> tuple:
    pos = {q: i for i, q in enumerate(t.states)}
    m = identity_matrix(len(t.states))
    for a in as_word(w):
        rows = [0] * len(t.states)
        for p, x, q, _ in t.transitions:
            if x == a:
                rows[pos[p]] |= 1 << pos[q]
        m = mat_mul(m, tuple(rows))
    return m


def idempotent_exponent(m: tuple) -> int:
    """Least ``k >= 1`` with ``m^k`` idempotent."""
    k, cur = 1, m
    while mat_mul(cur, cur) != cur:
        cur = mat_mul(cur, m)
        k += 1
    return k


def _one_output(t: Transducer, w, p, q) -> Word:
    outs = set(t.runs(w, start=p, end=q))
    if len(outs) != 1:
        raise ValueError(f"expected a single path {p!r} -> {q!r}, got {len(outs)}")
    return outs.pop()


def evaluate_omega(t: Transducer, x, start=ALL, end=ALL) -> OmegaTerm | None:
    """Value of ``t`` (or of a slice) on ``x^w``, ``None`` when undefined."""
    x = as_word(x)
    if not x:
        return None
    t = slice_(t, start, end) if (start is not ALL or end is not ALL) else t.trim()
    if not t.states:
        return None
    pos = {q: i for i, q in enumerate(t.states)}
    w = idempotent_exponent(word_matrix(t, x))
    e = word_matrix(t, x * w)
    xw = x * w
    for p in sorted(t.lam, key=repr):
        for f in sorted(t.rho, key=repr):
            if not e[pos[p]] >> pos[f] & 1:
                continue
            for r in t.states:
                i = pos[r]
                if e[pos[p]] >> i & 1 and e[i] >> i & 1 and e[i] >> pos[f] & 1:
                    s = t.lam[p] + _one_output(t, xw, p, r)
                    z = _one_output(t, xw, r, r)
                    tail = _one_output(t, xw, r, f) + t.rho[f]
                    return OmegaTerm(s, z + z, tail, 2 * w)
    return None
