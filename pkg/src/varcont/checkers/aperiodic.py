"""A, J, R, L and DA: conditions quantified over pertaining tuples."""

from __future__ import annotations

from ..fsm import ALL, Transducer, output_language, reverse, slice_
from ..monoid import domain_in_variety
from ..pertinence import PertainingTuple, enumerate_pertaining
from ..relation import (
    from_automaton,
    input_sync,
    rel_concat,
    rel_reverse,
    relation_from_transducer,
    solve_dectrans,
    subset_of_id_affix,
    subset_of_identity,
)
from .verdict import Verdict, no, yes


class _Rels:
    """Cached slice relations (input tape left, output tape right)."""

    def __init__(self, t: Transducer):
        self.t = t
        self.B = tuple(t.output_alphabet)
        self._slices: dict = {}
        self._langs: dict = {}
        self._memo: dict = {}

    def sl(self, p=ALL, q=ALL):
        key = (p, q)
        if key not in self._slices:
            self._slices[key] = relation_from_transducer(slice_(self.t, p, q))
        return self._slices[key]

    def lang(self, p, q, C):
        key = (p, q, C)
        if key not in self._langs:
            self._langs[key] = output_language(self.t, p, q, C)
        return self._langs[key]

    def eps_lang(self, p, q, C):
        return from_automaton(self.lang(p, q, C), "right")

    def memo(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def pre(self, p, q):
        return self.memo(("pre", p, q), lambda: input_sync(self.sl(ALL, p), self.sl(ALL, q)))

    def suf(self, p, q):
        return self.memo(("suf", p, q), lambda: input_sync(self.sl(p, ALL), self.sl(q, ALL)))


def _fail(v: str, cond: str, tup: PertainingTuple, cex=None) -> Verdict:
    w = dict(condition=cond, states=tup.states, classification=tup.classification,
             input_content=tuple(sorted(tup.input_content, key=repr)),
             witness_input=(tup.s, tup.u, tup.n, tup.t))
    if cex is not None:
        w["counterexample"] = cex
    return no(v, **w)


def _has_solution(rels: _Rels, key, rel_fn) -> bool:
    return rels.memo(("dec",) + key, lambda: solve_dectrans(rel_fn()) is not None)


def _check_a(t: Transducer, rels: _Rels, v: str):
    for tup in enumerate_pertaining(t, "A"):
        p, q, q1 = tup.states
        if tup.classification == "degenerate":
            return _fail(v, "degenerate", tup)
        if tup.classification == "empty":
            ok, cex = rels.memo(("a-empty", p, q, q1),
                                lambda: subset_of_identity(rel_concat(rels.pre(p, q), rels.suf(p, q1))))
            if not ok:
                return _fail(v, "empty", tup, cex)
        else:
            if not _has_solution(rels, ("pre", p, q), lambda: rels.pre(p, q)):
                return _fail(v, "full-prefix", tup)
            if not _has_solution(rels, ("rsuf", p, q1), lambda: rel_reverse(rels.suf(p, q1))):
                return _fail(v, "full-suffix", tup)
    return None


def _check_j(t: Transducer, rels: _Rels, v: str):
    for tup in enumerate_pertaining(t, "J"):
        p, q, q1, q2 = tup.states
        C, D = tup.input_content, tup.D
        if tup.classification == "degenerate":
            return _fail(v, "degenerate", tup)
        if tup.classification == "full":
            left = input_sync(rels.sl(ALL, p),
                              rel_concat(rels.sl(ALL, q), rels.eps_lang(q, q1, C)))
            ok, cex = subset_of_id_affix(left, D, "suffix")
            if not ok:
                return _fail(v, "full-prefix", tup, cex)
            right = input_sync(rels.sl(p, ALL),
                               rel_concat(rels.eps_lang(q1, q2, C), rels.sl(q2, ALL)))
            ok, cex = subset_of_id_affix(right, D, "prefix")
            if not ok:
                return _fail(v, "full-suffix", tup, cex)
        else:
            rel = input_sync(rel_concat(rels.sl(ALL, p), rels.sl(p, ALL)),
                             rel_concat(rels.sl(ALL, q), rels.eps_lang(q, q1, C),
                                        rels.eps_lang(q1, q2, C), rels.sl(q2, ALL)))
            ok, cex = subset_of_identity(rel)
            if not ok:
                return _fail(v, "empty", tup, cex)
    return None


def _check_r(t: Transducer, rels: _Rels, v: str, kind: str = "R"):
    for tup in enumerate_pertaining(t, "R"):
        p, q, q1 = tup.states
        C = tup.input_content
        if tup.classification == "degenerate":
            return _fail(v, "degenerate", tup)
        if tup.classification == "full":
            # the root x must be that of the loop output, so cts(x) = cts(beta)
            if not _has_solution(rels, ("pre", p, q), lambda: rels.pre(p, q)):
                return _fail(v, "full-prefix", tup)
            right = input_sync(rels.sl(p, ALL), rel_concat(rels.eps_lang(q, q1, C), rels.sl(q1, ALL)))
            ok, cex = subset_of_id_affix(right, tup.output_contents[0], "prefix")
            if not ok:
                return _fail(v, "full-suffix", tup, cex)
        else:
            rel = input_sync(rel_concat(rels.sl(ALL, p), rels.sl(p, ALL)),
                             rel_concat(rels.sl(ALL, q), rels.eps_lang(q, q1, C), rels.sl(q1, ALL)))
            ok, cex = subset_of_identity(rel)
            if not ok:
                return _fail(v, "empty", tup, cex)
    return None


def _check_da(t: Transducer, rels: _Rels, v: str):
    for tup in enumerate_pertaining(t, "DA"):
        p, q, q1 = tup.states
        C = tup.input_content
        cls = tup.classification
        if cls == "degenerate":
            return _fail(v, "degenerate", tup)
        if cls == "full":
            if not _has_solution(rels, ("pre", p, q), lambda: rels.pre(p, q)):
                return _fail(v, "full-prefix", tup)
            if not _has_solution(rels, ("rsuf", p, q1), lambda: rel_reverse(rels.suf(p, q1))):
                return _fail(v, "full-suffix", tup)
            used = {c for _, c, _ in rels.lang(q, q1, C).transitions}
            if not used <= tup.output_contents[0]:
                return _fail(v, "full-content", tup)
        elif cls == "empty":
            rel = rel_concat(rels.pre(p, q), from_automaton(rels.lang(q, q1, C), "right"), rels.suf(p, q1))
            ok, cex = subset_of_identity(rel)
            if not ok:
                return _fail(v, "empty", tup, cex)
        elif cls == "right-empty":
            if not _has_solution(rels, ("pre", p, q), lambda: rels.pre(p, q)):
                return _fail(v, "right-empty-prefix", tup)
            rel = input_sync(rels.sl(p, ALL), rel_concat(rels.eps_lang(q, q1, C), rels.sl(q1, ALL)))
            if solve_dectrans(rel_reverse(rel)) is None:
                return _fail(v, "right-empty-suffix", tup)
        else:
            rel = input_sync(rels.sl(ALL, p), rel_concat(rels.sl(ALL, q), rels.eps_lang(q, q1, C)))
            if solve_dectrans(rel) is None:
                return _fail(v, "left-empty-prefix", tup)
            if not _has_solution(rels, ("rsuf", p, q1), lambda: rel_reverse(rels.suf(p, q1))):
                return _fail(v, "left-empty-suffix", tup)
    return None


def _reversed_witness(verdict: Verdict) -> Verdict:
    w = dict(verdict.witness)
    if "counterexample" in w and w["counterexample"]:
        u, v = w["counterexample"]
        w["counterexample"] = (u[::-1], v[::-1])
    if "witness_input" in w:
        s, u, n, t = w["witness_input"]
        w["witness_input"] = (t[::-1], u[::-1], n, s[::-1])
    w["reversed"] = True
    return Verdict(verdict.variety, verdict.answer, w)


def check_aperiodic(t: Transducer, v: str) -> Verdict:
    if v not in ("A", "J", "R", "L", "DA"):
        raise ValueError(v)
    t = t.trim()
    ok, bad = domain_in_variety(t, v)
    if not ok:
        return no(v, condition="domain", witness_input=bad)
    if v == "L":
        r = reverse(t).trim()
        res = _check_r(r, _Rels(r), v)
        return yes(v) if res is None else _reversed_witness(res)
    rels = _Rels(t)
    res = {"A": _check_a, "J": _check_j, "R": _check_r, "DA": _check_da}[v](t, rels, v)
    return yes(v) if res is None else res
