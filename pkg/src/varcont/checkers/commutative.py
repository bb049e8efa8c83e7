"""Com and Ab: Parikh differences along input-synchronized pairs of paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..fsm import Transducer
from ..monoid import domain_in_variety
from ..words import parikh, vec_add, vec_sub
from .omega import evaluate_omega, idempotent_exponent, word_matrix
from .verdict import Verdict, no, yes

START, END = "<start>", "<end>"


@dataclass(frozen=True)
class WeightedPairGraph:
    """Edges ``(src, label, weight, dst)``; ``label`` is an input word."""

    states: tuple
    edges: tuple
    initial: frozenset
    final: frozenset

    def trim(self) -> WeightedPairGraph:
        fwd, bwd = {}, {}
        for p, _, _, q in self.edges:
            fwd.setdefault(p, []).append(q)
            bwd.setdefault(q, []).append(p)
        keep = _reach(self.initial, fwd) & _reach(self.final, bwd)
        return WeightedPairGraph(tuple(sorted(keep, key=repr)),
                                 tuple(e for e in self.edges if e[0] in keep and e[3] in keep),
                                 self.initial & keep, self.final & keep)


def _reach(start, succ) -> set:
    seen = set(start)
    todo = list(start)
    while todo:
        p = todo.pop()
        for q in succ.get(p, ()):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def _label(path) -> tuple:
    return tuple(c for e in path for c in e[1])


def _weight(path, dim) -> tuple:
    w = (0,) * dim
    for e in path:
        w = vec_add(w, e[2])
    return w


def uniform_path_weight(g: WeightedPairGraph, dim: int):
    """``(d, None)`` if every initial-to-final path weighs ``d``; else ``(None, (path1, path2))``.

    ``(None, None)`` means there is no path at all.
    """
    g = g.trim()
    if not g.initial:
        return None, None
    out, back = {}, {}
    for e in g.edges:
        out.setdefault(e[0], []).append(e)
        back.setdefault(e[3], []).append(e)
    nxt = {q: None for q in g.final}
    todo = deque(sorted(g.final, key=repr))
    while todo:
        q = todo.popleft()
        for e in back.get(q, ()):
            if e[0] not in nxt:
                nxt[e[0]] = e
                todo.append(e[0])

    def completion(q):
        path = []
        while nxt[q] is not None:
            path.append(nxt[q])
            q = nxt[q][3]
        return path

    zero = (0,) * dim
    pot = {}
    tree = {}
    todo = deque()
    for q in sorted(g.initial, key=repr):
        pot[q] = zero
        tree[q] = []
        todo.append(q)
    ends = []
    while todo:
        p = todo.popleft()
        if p in g.final:
            ends.append(p)
        for e in out.get(p, ()):
            q = e[3]
            w = vec_add(pot[p], e[2])
            if q not in pot:
                pot[q] = w
                tree[q] = tree[p] + [e]
                todo.append(q)
            elif pot[q] != w:
                return None, (tree[q] + completion(q), tree[p] + [e] + completion(q))
    for f in ends[1:]:
        if pot[f] != pot[ends[0]]:
            return None, (tree[ends[0]], tree[f])
    return pot[ends[0]], None


def prefix_graph(t: Transducer, p, q) -> WeightedPairGraph:
    """Pairs of runs from initial states to ``p`` and ``q`` on a common input."""
    dim = t.output_alphabet
    edges = [(START, (), vec_sub(parikh(t.lam[i], dim), parikh(t.lam[j], dim)), (i, j))
             for i in t.lam for j in t.lam]
    edges += _sync_edges(t)
    return WeightedPairGraph((), tuple(edges), frozenset({START}), frozenset({(p, q)})).trim()


def suffix_graph(t: Transducer, p, q) -> WeightedPairGraph:
    """Pairs of runs from ``p`` and ``q`` to final states on a common input."""
    dim = t.output_alphabet
    edges = _sync_edges(t)
    edges += [((i, j), (), vec_sub(parikh(t.rho[i], dim), parikh(t.rho[j], dim)), END)
              for i in t.rho for j in t.rho]
    return WeightedPairGraph((), tuple(edges), frozenset({(p, q)}), frozenset({END})).trim()


def _sync_edges(t: Transducer) -> list:
    dim = t.output_alphabet
    by_letter = {}
    for tr in t.transitions:
        by_letter.setdefault(tr[1], []).append(tr)
    edges = []
    for a, trs in by_letter.items():
        for p, _, p2, o1 in trs:
            for q, _, q2, o2 in trs:
                edges.append(((p, q), (a,), vec_sub(parikh(o1, dim), parikh(o2, dim)), (p2, q2)))
    return edges


def _some_path(g: WeightedPairGraph) -> list:
    out = {}
    for e in g.edges:
        out.setdefault(e[0], []).append(e)
    tree = {q: [] for q in g.initial}
    todo = deque(sorted(g.initial, key=repr))
    while todo:
        p = todo.popleft()
        if p in g.final:
            return tree[p]
        for e in out.get(p, ()):
            if e[3] not in tree:
                tree[e[3]] = tree[p] + [e]
                todo.append(e[3])
    return []


class _Weights:
    """Cached uniform weights of prefix and suffix pair graphs."""

    def __init__(self, t: Transducer):
        self.t = t
        self.dim = len(t.output_alphabet)
        self.pre: dict = {}
        self.suf: dict = {}

    def _get(self, cache, build, p, q):
        if (p, q) not in cache:
            g = build(self.t, p, q)
            if not g.initial:
                cache[p, q] = None
            else:
                d, bad = uniform_path_weight(g, self.dim)
                paths = list(bad) if bad else [_some_path(g)]
                cache[p, q] = (d, [_label(x) for x in paths])
        return cache[p, q]

    def prefix(self, p, q):
        return self._get(self.pre, prefix_graph, p, q)

    def suffix(self, p, q):
        return self._get(self.suf, suffix_graph, p, q)


def _pk(t: Transducer, w) -> tuple:
    return parikh(w, t.output_alphabet)


def _replay(t: Transducer, left_in, right_in):
    from ..fsm import evaluate
    a, b = evaluate(t, left_in), evaluate(t, right_in)
    if a is None or b is None or _pk(t, a) == _pk(t, b):
        return None
    return a, b


def _com_failure(t, v, pre, suf, mid_l, mid_r, states):
    """Pick input contexts exhibiting a Parikh mismatch."""
    for s in pre[1]:
        for tail in suf[1]:
            li, ri = s + mid_l + tail, s + mid_r + tail
            outs = _replay(t, li, ri)
            if outs:
                return no(v, condition="commutation", states=states, witness_input=(li, ri),
                          counterexample=outs)
    s, tail = pre[1][0], suf[1][0]
    return no(v, condition="commutation", states=states,
              witness_input=(s + mid_l + tail, s + mid_r + tail))


def _runs_to(t: Transducer, p, w) -> dict:
    out: dict = {}
    cur = [(p, ())]
    for a in w:
        cur = [(q2, o + o2) for q, o in cur for q2, o2 in t.by_letter.get((q, a), ())]
    for q, o in cur:
        out.setdefault(q, []).append(o)
    return out


def check_commutative(t: Transducer, v: str) -> Verdict:
    if v not in ("Com", "Ab"):
        raise ValueError(v)
    t = t.trim()
    ok, bad = domain_in_variety(t, v)
    if not ok:
        return no(v, condition="domain", witness_input=bad)
    W = _Weights(t)
    zero = (0,) * W.dim
    letters = sorted(t.input_alphabet, key=repr)
    states = sorted(t.states, key=repr)
    for i, a in enumerate(letters):
        for b in letters[i + 1:]:
            for p in states:
                ab = _runs_to(t, p, (a, b))
                for q in states:
                    pre = W.prefix(p, q)
                    if pre is None:
                        continue
                    ba = _runs_to(t, q, (b, a))
                    for p2, outs1 in ab.items():
                        for q2, outs2 in ba.items():
                            suf = W.suffix(p2, q2)
                            if suf is None:
                                continue
                            st = (p, p2, q, q2)
                            if pre[0] is None or suf[0] is None:
                                return _com_failure(t, v, pre, suf, (a, b), (b, a), st)
                            for u1 in outs1:
                                for u2 in outs2:
                                    total = vec_add(vec_add(pre[0], suf[0]), vec_sub(_pk(t, u1), _pk(t, u2)))
                                    if total != zero:
                                        return _com_failure(t, v, pre, suf, (a, b), (b, a), st)
    if v == "Ab":
        bad = _check_ab_omega(t, W, letters, states)
        if bad is not None:
            return bad
    return yes(v)


def _check_ab_omega(t: Transducer, W: _Weights, letters, states):
    pos = {q: k for k, q in enumerate(t.states)}
    zero = (0,) * W.dim
    for a in letters:
        m = word_matrix(t, (a,))
        e = word_matrix(t, (a,) * idempotent_exponent(m))
        for p in states:
            for p2 in states:
                if not e[pos[p]] >> pos[p2] & 1:
                    continue
                for q in states:
                    pre, suf = W.prefix(p, q), W.suffix(p2, q)
                    if pre is None or suf is None:
                        continue
                    st = (p, p2, q)
                    if pre[0] is None or suf[0] is None:
                        return no("Ab", condition="omega-uniformity", states=st, letter=a,
                                  witness_input=(pre[1][0], suf[1][0]))
                    term = evaluate_omega(t, (a,), p, p2)
                    if term is None:
                        continue
                    total = vec_add(vec_add(pre[0], suf[0]),
                                    vec_sub(vec_add(_pk(t, term.s), _pk(t, term.t)), _pk(t, term.y)))
                    if total != zero:
                        return no("Ab", condition="omega", states=st, letter=a,
                                  witness_input=(pre[1][0], suf[1][0]),
                                  omega_term=(term.s, term.y, term.t))
    return None
