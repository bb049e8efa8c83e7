"""Pertaining tuples and the content-enriched transition monoid.

An enriched element abstracts a word ``u``: for each state pair it records
the set of output contents of the ``u``-labelled paths, plus ``cts(u)``.
Contents are bitmasks over the output (resp. input) alphabet.

The J and R shapes are searched with a relaxed entry/exit: the looping state
``p`` may be entered from, and left towards, states that are themselves
linked to ``p`` by powers of the looping element.  This matches the runs that
the underlying equations actually produce on ``s u^w t``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import ResourceLimitError
from .fsm import Transducer
from .monoid import monoid_cap

KINDS = ("A", "J", "R", "L", "DA")


@dataclass(frozen=True)
class EnrichedElement:
    entries: tuple  # n*n frozensets of output-content bitmasks
    input_content: int
    witness: tuple = field(compare=False, default=())

    def key(self):
        return self.entries, self.input_content


@dataclass(frozen=True)
class PertainingTuple:
    kind: str
    states: tuple
    classification: str
    input_content: frozenset
    output_contents: tuple  # contents of beta, beta', beta'' as applicable
    D: frozenset | None
    u: tuple
    n: int
    s: tuple
    t: tuple
    z: tuple = ()
    detail: str = ""

    def sort_key(self):
        return (repr(self.states), self.classification, sorted(map(repr, self.input_content)),
                sorted(map(repr, self.D or ())))


class Enricher:
    """Indexing and products for the enriched monoid of a trimmed transducer."""

    def __init__(self, t: Transducer):
        self.t = t
        self.states = t.states
        self.n = len(t.states)
        self.pos = {q: i for i, q in enumerate(t.states)}
        self.inputs = tuple(t.input_alphabet)
        self.outputs = tuple(t.output_alphabet)
        self.in_bit = {a: 1 << i for i, a in enumerate(self.inputs)}
        self.out_bit = {b: 1 << i for i, b in enumerate(self.outputs)}
        n = self.n
        self.identity = EnrichedElement(
            tuple(frozenset({0}) if i // n == i % n else frozenset() for i in range(n * n)), 0, ())
        self.gens = {}
        for a in self.inputs:
            cells = [set() for _ in range(n * n)]
            for p, x, q, o in t.transitions:
                if x == a:
                    cells[self.pos[p] * n + self.pos[q]].add(self.content(o))
            self.gens[a] = EnrichedElement(tuple(frozenset(c) for c in cells), self.in_bit[a], (a,))

    def content(self, w) -> int:
        c = 0
        for b in w:
            c |= self.out_bit[b]
        return c

    def mul(self, x: EnrichedElement, y: EnrichedElement) -> EnrichedElement:
        n = self.n
        ex, ey = x.entries, y.entries
        out = []
        for i in range(n):
            for k in range(n):
                acc = set()
                for j in range(n):
                    a = ex[i * n + j]
                    if a:
                        b = ey[j * n + k]
                        if b:
                            acc.update(c1 | c2 for c1 in a for c2 in b)
                out.append(frozenset(acc))
        return EnrichedElement(tuple(out), x.input_content | y.input_content, x.witness + y.witness)

    def of_word(self, w) -> EnrichedElement:
        e = self.identity
        for a in w:
            e = self.mul(e, self.gens[a])
        return e

    def closure(self, letters=None, cap: int | None = None) -> list:
        """Elements for all words over ``letters`` (default: all), breadth first."""
        cap = monoid_cap() if cap is None else cap
        letters = self.inputs if letters is None else tuple(a for a in self.inputs if a in set(letters))
        seen = {self.identity.key(): self.identity}
        order = [self.identity]
        todo = deque([self.identity])
        while todo:
            e = todo.popleft()
            for a in letters:
                f = self.mul(e, self.gens[a])
                if f.key() not in seen:
                    if len(seen) >= cap:
                        raise ResourceLimitError(f"enriched monoid exceeds {cap} elements")
                    seen[f.key()] = f
                    order.append(f)
                    todo.append(f)
        return order

    def powers(self, m: EnrichedElement) -> list:
        """``[m^0, m^1, ..., m^(index+period)]``."""
        seq = [self.identity, m]
        pos = {m.key(): 1}
        while True:
            nxt = self.mul(seq[-1], m)
            if nxt.key() in pos:
                seq.append(nxt)
                return seq
            pos[nxt.key()] = len(seq)
            seq.append(nxt)

    def symbols(self, mask: int, alphabet) -> frozenset:
        return frozenset(a for i, a in enumerate(alphabet) if mask >> i & 1)


def enriched_monoid(t: Transducer, letters=None) -> list:
    return Enricher(t).closure(letters)


def _pair_search(t: Transducer, starts, step) -> dict:
    """BFS over state pairs; ``step(p, a)`` lists successors of ``p`` on ``a``."""
    found = {}
    todo = deque()
    for pq in starts:
        if pq not in found:
            found[pq] = ()
            todo.append(pq)
    while todo:
        p, q = todo.popleft()
        for a in t.input_alphabet:
            for p2 in step(p, a):
                for q2 in step(q, a):
                    if (p2, q2) not in found:
                        found[p2, q2] = found[p, q] + (a,)
                        todo.append((p2, q2))
    return found


def same_input_reachable_pairs(t: Transducer) -> dict:
    """``(p, q) -> s`` with both ``p`` and ``q`` reached from initial states on ``s``."""
    succ = {}
    for p, a, q, _ in t.transitions:
        succ.setdefault((p, a), set()).add(q)
    return _pair_search(t, [(p, q) for p in t.initial for q in t.initial],
                        lambda p, a: succ.get((p, a), ()))


def same_input_coreachable_pairs(t: Transducer) -> dict:
    """``(p, q) -> t`` with final states reached from both ``p`` and ``q`` on ``t``."""
    pred = {}
    for p, a, q, _ in t.transitions:
        pred.setdefault((q, a), set()).add(p)
    back = _pair_search(t, [(p, q) for p in t.final for q in t.final],
                        lambda q, a: pred.get((q, a), ()))
    return {pq: w[::-1] for pq, w in back.items()}


class _Search:
    def __init__(self, t: Transducer):
        self.t = t
        self.en = Enricher(t)
        self.n = self.en.n
        self.idx = list(range(self.n))
        self.st = t.states
        pos = self.en.pos
        self.P = {(pos[p], pos[q]): w for (p, q), w in same_input_reachable_pairs(t).items()}
        self.CoP = {(pos[p], pos[q]): w for (p, q), w in same_input_coreachable_pairs(t).items()}
        self.succ = {}
        for p, a, q, _ in t.transitions:
            self.succ.setdefault(pos[p], []).append((a, pos[q]))
        self._reach: dict = {}

    def reach(self, q: int, cmask: int) -> dict:
        """States reachable from ``q`` on words over the letters of ``cmask``."""
        key = (q, cmask)
        if key not in self._reach:
            bits = self.en.in_bit
            found = {q: ()}
            todo = deque([q])
            while todo:
                p = todo.popleft()
                for a, r in self.succ.get(p, ()):
                    if bits[a] & cmask and r not in found:
                        found[r] = found[p] + (a,)
                        todo.append(r)
            self._reach[key] = found
        return self._reach[key]

    def loops(self, m: EnrichedElement) -> list:
        n = self.n
        return [p for p in self.idx if m.entries[p * n + p]]

    def cell(self, m: EnrichedElement, p: int, q: int) -> frozenset:
        return m.entries[p * self.n + q]

    def forward(self, m: EnrichedElement, p: int) -> set:
        """``p . m^k`` for all ``k >= 0``."""
        seen = {p}
        todo = [p]
        while todo:
            x = todo.pop()
            for y in self.idx:
                if y not in seen and m.entries[x * self.n + y]:
                    seen.add(y)
                    todo.append(y)
        return seen

    def backward(self, m: EnrichedElement, p: int) -> set:
        seen = {p}
        todo = [p]
        while todo:
            y = todo.pop()
            for x in self.idx:
                if x not in seen and m.entries[x * self.n + y]:
                    seen.add(x)
                    todo.append(x)
        return seen

    def elements(self):
        for m in self.en.closure():
            if m.witness:
                yield m, self.en.powers(m)

    def sym_in(self, mask):
        return self.en.symbols(mask, self.en.inputs)

    def sym_out(self, mask):
        return self.en.symbols(mask, self.en.outputs)


def _cls2(x_empty: bool, y_empty: bool) -> str:
    if x_empty and y_empty:
        return "empty"
    if not x_empty and not y_empty:
        return "full"
    return "degenerate"


def _enum_a(S: _Search, out: dict):
    for m, pw in S.elements():
        for n in range(1, len(pw)):
            mn, mn1 = pw[n], pw[n - 1]
            for p in S.loops(mn):
                for q in S.idx:
                    if (p, q) not in S.P:
                        continue
                    for q1 in S.idx:
                        c1s = S.cell(m, q, q1)
                        c2s = S.cell(mn1, q1, q)
                        if not c1s or not c2s or (p, q1) not in S.CoP:
                            continue
                        for cb in S.cell(mn, p, p):
                            for c1 in c1s:
                                for c2 in c2s:
                                    cls = _cls2(cb == 0, (c1 | c2) == 0)
                                    detail = ""
                                    if cls == "degenerate":
                                        detail = "beta empty" if cb == 0 else "beta' beta'' empty"
                                    key = ((p, q, q1), cls)
                                    if key not in out:
                                        out[key] = PertainingTuple(
                                            "A", (S.st[p], S.st[q], S.st[q1]), cls, S.sym_in(m.input_content),
                                            (S.sym_out(cb), S.sym_out(c1 | c2)), None, m.witness, n,
                                            S.P[p, q], S.CoP[p, q1], (), detail)


def _enum_r(S: _Search, out: dict, kind: str):
    for m, pw in S.elements():
        cm = m.input_content
        for n in range(1, len(pw)):
            mn = pw[n]
            lp = S.loops(mn)
            for p in lp:
                exits = S.forward(mn, p)
                for q in lp:
                    if (p, q) not in S.P:
                        continue
                    for q1, z in S.reach(q, cm).items():
                        po = next((x for x in sorted(exits) if (x, q1) in S.CoP), None)
                        if po is None:
                            continue
                        for cb in S.cell(mn, p, p):
                            for cb1 in S.cell(mn, q, q):
                                cls = _cls2(cb == 0, cb1 == 0)
                                key = ((p, q, q1), cm, cb, cls)
                                if key not in out:
                                    out[key] = PertainingTuple(
                                        kind, (S.st[p], S.st[q], S.st[q1]), cls, S.sym_in(cm),
                                        (S.sym_out(cb), S.sym_out(cb1)), None, m.witness, n,
                                        S.P[p, q], S.CoP[po, q1], (z,),
                                        "" if cls != "degenerate" else ("beta empty" if cb == 0 else "beta' empty"))


def _enum_j(S: _Search, out: dict):
    for m, pw in S.elements():
        cm = m.input_content
        for n in range(1, len(pw)):
            mn = pw[n]
            lp = S.loops(mn)
            for p in lp:
                exits = S.forward(mn, p)
                entries = S.backward(mn, p)
                for q in S.idx:
                    pin = next((x for x in sorted(entries) if (x, q) in S.P), None)
                    if pin is None:
                        continue
                    for q1, z in S.reach(q, cm).items():
                        if q1 not in lp:
                            continue
                        for q2, z2 in S.reach(q1, cm).items():
                            po = next((x for x in sorted(exits) if (x, q2) in S.CoP), None)
                            if po is None:
                                continue
                            for cb in S.cell(mn, p, p):
                                for cb1 in S.cell(mn, q1, q1):
                                    d = cb | cb1
                                    if d == 0:
                                        cls = "empty"
                                    elif cb == cb1:
                                        cls = "full"
                                    else:
                                        cls = "degenerate"
                                    key = ((p, q, q1, q2), cm, d, cls)
                                    if key not in out:
                                        out[key] = PertainingTuple(
                                            "J", (S.st[p], S.st[q], S.st[q1], S.st[q2]), cls, S.sym_in(cm),
                                            (S.sym_out(cb), S.sym_out(cb1)), S.sym_out(d), m.witness, n,
                                            S.P[pin, q], S.CoP[po, q2], (z, z2))


def _enum_da(S: _Search, out: dict):
    for m, pw in S.elements():
        cm = m.input_content
        for n in range(1, len(pw)):
            mn = pw[n]
            lp = S.loops(mn)
            for p in lp:
                for q in lp:
                    if (p, q) not in S.P:
                        continue
                    for q1, z in S.reach(q, cm).items():
                        if q1 not in lp or (p, q1) not in S.CoP:
                            continue
                        for cb in S.cell(mn, p, p):
                            for cb1 in S.cell(mn, q, q):
                                for cb2 in S.cell(mn, q1, q1):
                                    e = (cb == 0, cb1 == 0, cb2 == 0)
                                    if all(e):
                                        cls = "empty"
                                    elif not any(e):
                                        cls = "full"
                                    elif e == (False, True, False):
                                        cls = "left-empty"
                                    elif e == (False, False, True):
                                        cls = "right-empty"
                                    else:
                                        cls = "degenerate"
                                    key = ((p, q, q1), cm, cb, cls)
                                    if key not in out:
                                        out[key] = PertainingTuple(
                                            "DA", (S.st[p], S.st[q], S.st[q1]), cls, S.sym_in(cm),
                                            (S.sym_out(cb), S.sym_out(cb1), S.sym_out(cb2)), None,
                                            m.witness, n, S.P[p, q], S.CoP[p, q1], (z,))


def enumerate_pertaining(t: Transducer, kind: str) -> list:
    """All pertaining tuples of ``kind``, one per (states, contents, class)."""
    from .fsm import reverse
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    t = t.trim()
    out: dict = {}
    if kind == "A":
        _enum_a(_Search(t), out)
    elif kind == "R":
        _enum_r(_Search(t), out, "R")
    elif kind == "L":
        _enum_r(_Search(reverse(t).trim()), out, "L")
    elif kind == "J":
        _enum_j(_Search(t), out)
    else:
        _enum_da(_Search(t), out)
    return sorted(out.values(), key=PertainingTuple.sort_key)
