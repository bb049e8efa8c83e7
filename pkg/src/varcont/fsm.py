"""Automata and unambiguous transducers.

State ids are opaque hashables.  Constructions build fresh ids by tupling
existing ones, so ids read from files never collide with generated ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping

from .errors import NotUnambiguousError, UnknownStateError
from .words import Word, as_word

State = Hashable
ALL = None  # wildcard for slice endpoints


def _sorted(xs):
    return tuple(sorted(xs, key=repr))


@dataclass(frozen=True)
class Automaton:
    states: tuple
    alphabet: tuple
    transitions: frozenset  # of (src, symbol, dst)
    initial: frozenset
    final: frozenset

    def __post_init__(self):
        known = set(self.states)
        for p, a, q in self.transitions:
            if p not in known or q not in known:
                raise UnknownStateError(p if p not in known else q)
            if a not in self.alphabet:
                raise ValueError(f"undeclared symbol {a!r}")
        for q in self.initial | self.final:
            if q not in known:
                raise UnknownStateError(q)

    @cached_property
    def delta(self) -> dict:
        d: dict = {}
        for p, a, q in self.transitions:
            d.setdefault((p, a), set()).add(q)
        return d

    def step(self, qs: Iterable, a) -> frozenset:
        out = set()
        for q in qs:
            out |= self.delta.get((q, a), set())
        return frozenset(out)

    def run(self, w, start=None) -> frozenset:
        qs = self.initial if start is None else frozenset(start)
        for a in as_word(w):
            qs = self.step(qs, a)
        return qs

    def accepts(self, w) -> bool:
        return bool(self.run(w) & self.final)

    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(len(v) <= 1 for v in self.delta.values())

    def trim(self) -> Automaton:
        keep = _useful(self.states, self.initial, self.final,
                       [(p, q) for p, _, q in self.transitions])
        return Automaton(
            states=tuple(q for q in self.states if q in keep),
            alphabet=self.alphabet,
            transitions=frozenset(t for t in self.transitions if t[0] in keep and t[2] in keep),
            initial=self.initial & keep,
            final=self.final & keep,
        )


def _useful(states, initial, final, edges) -> set:
    fwd: dict = {}
    bwd: dict = {}
    for p, q in edges:
        fwd.setdefault(p, []).append(q)
        bwd.setdefault(q, []).append(p)
    return _closure(initial, fwd) & _closure(final, bwd)


def _closure(start, succ) -> set:
    seen = set(start)
    todo = list(start)
    while todo:
        p = todo.pop()
        for q in succ.get(p, ()):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def trim(a):
    return a.trim()


def word_nfa(alphabet, edges, initial, final) -> Automaton:
    """Automaton from edges labelled by words (possibly empty).

    ``edges`` holds ``(src, word, dst)``; empty words are removed by
    epsilon-closure.
    """
    states = set(initial) | set(final)
    letter_edges = set()
    eps: dict = {}
    fresh = 0
    for p, w, q in edges:
        states |= {p, q}
        w = as_word(w)
        if not w:
            eps.setdefault(p, set()).add(q)
            continue
        prev = p
        for i, c in enumerate(w):
            nxt = q if i == len(w) - 1 else ("~w", fresh, i)
            states.add(nxt)
            letter_edges.add((prev, c, nxt))
            prev = nxt
        fresh += 1
    close = {p: frozenset(_closure({p}, eps)) for p in states}
    transitions = frozenset(
        (p, c, r) for p in states for (x, c, q) in letter_edges if x in close[p]
        for r in [q]
    )
    finals = frozenset(p for p in states if close[p] & set(final))
    return Automaton(_sorted(states), tuple(alphabet), transitions,
                     frozenset(initial), finals).trim()


def determinize(a: Automaton, complete: bool = True) -> Automaton:
    """Subset construction; states are frozensets of ``a``'s states."""
    start = frozenset(a.initial)
    seen = {start}
    todo = [start]
    transitions = set()
    while todo:
        s = todo.pop()
        for c in a.alphabet:
            t = a.step(s, c)
            if not t and not complete:
                continue
            transitions.add((s, c, t))
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return Automaton(
        states=_sorted(seen),
        alphabet=a.alphabet,
        transitions=frozenset(transitions),
        initial=frozenset({start}),
        final=frozenset(s for s in seen if s & a.final),
    )


def minimize_dfa(a: Automaton) -> Automaton:
    """Minimal complete DFA (integer states, 0 initial) for the language of ``a``."""
    d = determinize(a, complete=True)
    (start,) = d.initial
    order = d.states
    succ = {(p, c): next(iter(qs)) for (p, c), qs in d.delta.items()}
    block = {q: int(q in d.final) for q in order}
    while True:
        sig = {q: (block[q],) + tuple(block[succ[q, c]] for c in d.alphabet) for q in order}
        ids: dict = {}
        for q in order:
            ids.setdefault(sig[q], len(ids))
        new = {q: ids[sig[q]] for q in order}
        if len(set(new.values())) == len(set(block.values())):
            block = new
            break
        block = new
    # renumber from the start state in BFS order for stable output
    ren = {block[start]: 0}
    todo = deque([start])
    reps = {block[start]: start}
    while todo:
        q = todo.popleft()
        for c in d.alphabet:
            r = succ[q, c]
            if block[r] not in ren:
                ren[block[r]] = len(ren)
                reps[block[r]] = r
                todo.append(r)
    transitions = frozenset(
        (ren[b], c, ren[block[succ[q, c]]]) for b, q in reps.items() for c in d.alphabet
    )
    return Automaton(
        states=tuple(range(len(ren))),
        alphabet=d.alphabet,
        transitions=transitions,
        initial=frozenset({0}),
        final=frozenset(ren[b] for b, q in reps.items() if q in d.final),
    )


def reverse_automaton(a: Automaton) -> Automaton:
    return Automaton(a.states, a.alphabet, frozenset((q, c, p) for p, c, q in a.transitions),
                     a.final, a.initial)


def product_reachable(a: Automaton, b: Automaton):
    """Pairs of states reachable in the synchronous product of ``a`` and ``b``."""
    start = {(p, q) for p in a.initial for q in b.initial}
    seen = set(start)
    todo = list(start)
    while todo:
        p, q = todo.pop()
        for c in a.alphabet:
            for p2 in a.delta.get((p, c), ()):
                for q2 in b.delta.get((q, c), ()):
                    if (p2, q2) not in seen:
                        seen.add((p2, q2))
                        todo.append((p2, q2))
    return seen


def is_subset(a: Automaton, b: Automaton) -> bool:
    """Language inclusion L(a) <= L(b); ``b`` is determinized on the fly."""
    start = [(p, frozenset(b.initial)) for p in a.initial]
    seen = set(start)
    todo = list(start)
    while todo:
        p, s = todo.pop()
        if p in a.final and not (s & b.final):
            return False
        for c in a.alphabet:
            s2 = b.step(s, c) if c in b.alphabet else frozenset()
            for p2 in a.delta.get((p, c), ()):
                if (p2, s2) not in seen:
                    seen.add((p2, s2))
                    todo.append((p2, s2))
    return True


def equivalent(a: Automaton, b: Automaton) -> bool:
    return is_subset(a, b) and is_subset(b, a)


@dataclass(frozen=True)
class Transducer:
    """Automaton with outputs: ``lam`` on initial states, ``rho`` on final
    states, and a word on every transition ``(src, symbol, dst, out)``."""

    states: tuple
    input_alphabet: tuple
    output_alphabet: tuple
    transitions: tuple
    lam: Mapping = field(default_factory=dict)
    rho: Mapping = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.states)
        outs = set(self.output_alphabet)
        ts = []
        for p, a, q, o in self.transitions:
            if p not in known or q not in known:
                raise UnknownStateError(p if p not in known else q)
            if a not in self.input_alphabet:
                raise ValueError(f"undeclared input symbol {a!r}")
            ts.append((p, a, q, as_word(o)))
        object.__setattr__(self, "transitions", tuple(dict.fromkeys(ts)))
        for m in (self.lam, self.rho):
            for q in m:
                if q not in known:
                    raise UnknownStateError(q)
        object.__setattr__(self, "lam", {q: as_word(w) for q, w in self.lam.items()})
        object.__setattr__(self, "rho", {q: as_word(w) for q, w in self.rho.items()})
        for w in list(self.lam.values()) + list(self.rho.values()) + [t[3] for t in self.transitions]:
            bad = set(w) - outs
            if bad:
                raise ValueError(f"undeclared output symbols {sorted(bad)}")

    @property
    def initial(self) -> frozenset:
        return frozenset(self.lam)

    @property
    def final(self) -> frozenset:
        return frozenset(self.rho)

    @cached_property
    def underlying(self) -> Automaton:
        return Automaton(self.states, self.input_alphabet,
                         frozenset((p, a, q) for p, a, q, _ in self.transitions),
                         self.initial, self.final)

    @cached_property
    def out_edges(self) -> dict:
        d: dict = {}
        for t in self.transitions:
            d.setdefault(t[0], []).append(t)
        return d

    @cached_property
    def by_letter(self) -> dict:
        d: dict = {}
        for p, a, q, o in self.transitions:
            d.setdefault((p, a), []).append((q, o))
        return d

    def with_(self, **kw) -> Transducer:
        base = dict(states=self.states, input_alphabet=self.input_alphabet,
                    output_alphabet=self.output_alphabet, transitions=self.transitions,
                    lam=self.lam, rho=self.rho)
        base.update(kw)
        return Transducer(**base)

    def trim(self) -> Transducer:
        keep = _useful(self.states, self.initial, self.final,
                       [(p, q) for p, _, q, _ in self.transitions])
        return self.with_(
            states=tuple(q for q in self.states if q in keep),
            transitions=tuple(t for t in self.transitions if t[0] in keep and t[2] in keep),
            lam={q: w for q, w in self.lam.items() if q in keep},
            rho={q: w for q, w in self.rho.items() if q in keep},
        )

    @cached_property
    def ambiguity_witness(self):
        return _ambiguity_witness(self.trim())

    @property
    def unambiguous(self) -> bool:
        return self.ambiguity_witness is None

    def runs(self, w, start=ALL, end=ALL) -> list:
        """Outputs of every path reading ``w`` between the given endpoints."""
        w = as_word(w)
        if start is ALL:
            cur = [(q, o) for q, o in self.lam.items()]
        else:
            cur = [(start, ())]
        for a in w:
            cur = [(q2, o + o2) for q, o in cur for q2, o2 in self.by_letter.get((q, a), ())]
        if end is ALL:
            return [o + self.rho[q] for q, o in cur if q in self.rho]
        return [o for q, o in cur if q == end]

    def __call__(self, w):
        return evaluate(self, w)


def _ambiguity_witness(t: Transducer):
    """Shortest input with two accepting paths, or ``None``."""
    idx = {tr: i for i, tr in enumerate(t.transitions)}
    start = [((p, q, p != q), ()) for p in t.initial for q in t.initial]
    seen = {s for s, _ in start}
    todo = deque(start)
    while todo:
        (p, q, split), w = todo.popleft()
        if split and p in t.rho and q in t.rho:
            return w
        for t1 in t.out_edges.get(p, ()):
            for t2 in t.out_edges.get(q, ()):
                if t1[1] != t2[1]:
                    continue
                s = (t1[2], t2[2], split or idx[t1] != idx[t2])
                if s not in seen:
                    seen.add(s)
                    todo.append((s, w + (t1[1],)))
    return None


def is_unambiguous(t: Transducer):
    """``(True, None)`` or ``(False, shortest witness word)``."""
    w = t.ambiguity_witness
    return w is None, w


def evaluate(t: Transducer, w) -> Word | None:
    if not t.unambiguous:
        raise NotUnambiguousError(t.ambiguity_witness)
    outs = t.runs(w)
    return outs[0] if outs else None


def _check_state(t: Transducer, q):
    if q is not ALL and q not in t.states:
        raise UnknownStateError(q)


def slice_(t: Transducer, start=ALL, end=ALL) -> Transducer:
    """``t`` with initial set ``{start}`` and final set ``{end}``; forced
    endpoints get empty outputs.  ``ALL`` keeps the original side."""
    _check_state(t, start)
    _check_state(t, end)
    lam = t.lam if start is ALL else {start: ()}
    rho = t.rho if end is ALL else {end: ()}
    return t.with_(lam=lam, rho=rho).trim()


def domain_automaton(t: Transducer) -> Automaton:
    return t.underlying.trim()


def reverse(t: Transducer) -> Transducer:
    return t.with_(
        transitions=tuple((q, a, p, o[::-1]) for p, a, q, o in t.transitions),
        lam={q: w[::-1] for q, w in t.rho.items()},
        rho={q: w[::-1] for q, w in t.lam.items()},
    )


def output_language(t: Transducer, p, q, letters) -> Automaton:
    """Outputs of the ``p -> q`` paths whose inputs all lie in ``letters``."""
    _check_state(t, p)
    _check_state(t, q)
    letters = set(letters)
    edges = [(s, o, d) for s, a, d, o in t.transitions if a in letters]
    return word_nfa(t.output_alphabet, edges, {p}, {q})


def transducer(input_alphabet, output_alphabet, transitions, initial, final, states=None) -> Transducer:
    """Convenience constructor.

    ``initial``/``final`` are mappings state -> word or plain iterables of
    states (empty outputs).  Transitions are ``(src, symbol, dst, out)``.
    """
    if not isinstance(initial, Mapping):
        initial = {q: () for q in initial}
    if not isinstance(final, Mapping):
        final = {q: () for q in final}
    if states is None:
        seen = dict.fromkeys(list(initial) + [s for tr in transitions for s in (tr[0], tr[2])] + list(final))
        states = tuple(seen)
    return Transducer(tuple(states), tuple(input_alphabet), tuple(output_alphabet),
                      tuple(transitions), dict(initial), dict(final))
