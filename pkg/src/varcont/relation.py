"""Two-tape rational relations and inclusion tests against the identity.

Relations are kept normalized: integer states, every edge reads at most one
letter per tape (``None`` marks an empty side), no edge is empty on both
tapes, and every state is useful.  All constructions emit word-labelled edges
and go through :func:`make_relation`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .fsm import Automaton, Transducer, _closure, _useful
from .words import Word, as_word, is_prefix, primitive_root, roots

EPS = None


@dataclass(frozen=True)
class Relation:
    size: int
    edges: tuple  # (src, left symbol or None, right symbol or None, dst)
    initial: frozenset
    final: frozenset

    @property
    def is_empty(self) -> bool:
        return not self.initial

    def out(self) -> dict:
        d: dict = {}
        for e in self.edges:
            d.setdefault(e[0], []).append(e)
        return d


EMPTY_RELATION = Relation(0, (), frozenset(), frozenset())


def make_relation(edges, initial, final) -> Relation:
    """Normalize word-labelled edges ``(src, left, right, dst)``."""
    letter = []
    eps: dict = {}
    states = set(initial) | set(final)
    fresh = 0
    for p, u, v, q in edges:
        u, v = as_word(u), as_word(v)
        states |= {p, q}
        n = max(len(u), len(v))
        if n == 0:
            eps.setdefault(p, set()).add(q)
            continue
        prev = p
        for i in range(n):
            nxt = q if i == n - 1 else ("~r", fresh, i)
            states.add(nxt)
            letter.append((prev, u[i] if i < len(u) else EPS, v[i] if i < len(v) else EPS, nxt))
            prev = nxt
        fresh += 1
    by_src: dict = {}
    for e in letter:
        by_src.setdefault(e[0], []).append(e)
    final = set(final)
    new_edges = set()
    new_final = set()
    for p in states:
        close = _closure({p}, eps) if p in eps else {p}
        if close & final:
            new_final.add(p)
        for x in close:
            for _, a, b, r in by_src.get(x, ()):
                new_edges.add((p, a, b, r))
    keep = _useful(states, set(initial), new_final, [(e[0], e[3]) for e in new_edges])
    order = sorted(keep, key=repr)
    ren = {q: i for i, q in enumerate(order)}
    return Relation(
        len(order),
        _sort_edges((ren[p], a, b, ren[q]) for p, a, b, q in new_edges if p in keep and q in keep),
        frozenset(ren[q] for q in initial if q in keep),
        frozenset(ren[q] for q in new_final if q in keep),
    )


def _sort_edges(edges) -> tuple:
    return tuple(sorted(edges, key=repr))


def _wrap(x):
    return () if x is None else (x,)


def relation_from_transducer(t: Transducer) -> Relation:
    """Input/output relation of ``t`` (left tape: input, right tape: output)."""
    edges = [(("s", p), a, o, ("s", q)) for p, a, q, o in t.transitions]
    edges += [("in", (), w, ("s", q)) for q, w in t.lam.items()]
    edges += [(("s", q), (), w, "out") for q, w in t.rho.items()]
    return make_relation(edges, {"in"}, {"out"})


def from_automaton(a: Automaton, side: str = "right") -> Relation:
    """``{(e, w)}`` (or ``{(w, e)}`` for ``side='left'``) for ``w`` in the language."""
    if side == "right":
        edges = [(p, (), (c,), q) for p, c, q in a.transitions]
    else:
        edges = [(p, (c,), (), q) for p, c, q in a.transitions]
    return make_relation(edges, a.initial, a.final)


def singleton(u, v) -> Relation:
    return make_relation([(0, as_word(u), as_word(v), 1)], {0}, {1})


def diagonal(alphabet) -> Relation:
    return make_relation([(0, (c,), (c,), 0) for c in alphabet], {0}, {0})


def rel_union(r: Relation, s: Relation) -> Relation:
    edges = [((0, p), _wrap(a), _wrap(b), (0, q)) for p, a, b, q in r.edges]
    edges += [((1, p), _wrap(a), _wrap(b), (1, q)) for p, a, b, q in s.edges]
    return make_relation(edges, {(0, q) for q in r.initial} | {(1, q) for q in s.initial},
                         {(0, q) for q in r.final} | {(1, q) for q in s.final})


def rel_concat(*rs: Relation) -> Relation:
    if not rs:
        return singleton((), ())
    edges = []
    for k, r in enumerate(rs):
        edges += [((k, p), _wrap(a), _wrap(b), (k, q)) for p, a, b, q in r.edges]
        if k:
            edges += [((k - 1, f), (), (), (k, i)) for f in rs[k - 1].final for i in r.initial]
    last = len(rs) - 1
    return make_relation(edges, {(0, q) for q in rs[0].initial}, {(last, q) for q in rs[last].final})


def rel_reverse(r: Relation) -> Relation:
    return make_relation([(q, _wrap(a), _wrap(b), p) for p, a, b, q in r.edges], r.final, r.initial)


def swap(r: Relation) -> Relation:
    return make_relation([(p, _wrap(b), _wrap(a), q) for p, a, b, q in r.edges], r.initial, r.final)


def input_sync(r: Relation, s: Relation) -> Relation:
    """Synchronize the left tapes of ``r`` and ``s``; keep the two right tapes."""
    ro, so = r.out(), s.out()
    start = {(p, q) for p in r.initial for q in s.initial}
    seen = set(start)
    todo = list(start)
    edges = []
    while todo:
        p, q = todo.pop()
        moves = []
        for _, a, b, p2 in ro.get(p, ()):
            if a is EPS:
                moves.append((_wrap(b), (), (p2, q)))
            else:
                for _, a2, b2, q2 in so.get(q, ()):
                    if a2 == a:
                        moves.append((_wrap(b), _wrap(b2), (p2, q2)))
        for _, a2, b2, q2 in so.get(q, ()):
            if a2 is EPS:
                moves.append(((), _wrap(b2), (p, q2)))
        for u, v, nxt in moves:
            edges.append(((p, q), u, v, nxt))
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    final = {(p, q) for p, q in seen if p in r.final and q in s.final}
    return make_relation(edges, start, final)


def sync_transducers(t1: Transducer, t2: Transducer) -> Relation:
    return input_sync(relation_from_transducer(t1), relation_from_transducer(t2))


def rel_quotient(r: Relation, rho, side: str = "right") -> Relation:
    """``r (rho1, rho2)^-1`` for ``side='right'``, ``(rho1, rho2)^-1 r`` for ``'left'``."""
    r1, r2 = as_word(rho[0]), as_word(rho[1])
    if side == "left":
        return rel_reverse(rel_quotient(rel_reverse(r), (r1[::-1], r2[::-1]), "right"))
    if side != "right":
        raise ValueError(side)

    def tape(pos, suffix, c):
        # (emitted, new position) options for reading c on one tape
        if c is EPS:
            return [((), pos)]
        opts = []
        if pos == 0:
            opts.append(((c,), 0))
        if pos < len(suffix) and suffix[pos] == c:
            opts.append(((), pos + 1))
        return opts

    edges = [((p, i, j), u, v, (q, i2, j2))
             for p, a, b, q in r.edges
             for i in range(len(r1) + 1) for j in range(len(r2) + 1)
             for u, i2 in tape(i, r1, a) for v, j2 in tape(j, r2, b)]
    return make_relation(edges, {(q, 0, 0) for q in r.initial},
                         {(q, len(r1), len(r2)) for q in r.final})


def compose_tapes(r: Relation, left: Relation | None = None, right: Relation | None = None) -> Relation:
    """Image of ``r`` when each tape is fed through a relation (``None`` = unchanged)."""
    lo = left.out() if left is not None else {}
    ro = right.out() if right is not None else {}

    def side(rel, outs, s, c):
        if rel is None:
            return [(_wrap(c), s)]
        if c is EPS:
            return [((), s)]
        return [(_wrap(y), s2) for _, x, y, s2 in outs.get(s, ()) if x == c]

    def eps_moves(rel, outs, s):
        if rel is None:
            return []
        return [(_wrap(y), s2) for _, x, y, s2 in outs.get(s, ()) if x is EPS]

    li = left.initial if left is not None else {0}
    ri = right.initial if right is not None else {0}
    start = {(p, a, b) for p in r.initial for a in li for b in ri}
    seen = set(start)
    todo = list(start)
    edges = []
    rout = r.out()
    while todo:
        p, s1, s2 = todo.pop()
        moves = []
        for _, a, b, q in rout.get(p, ()):
            for u, t1 in side(left, lo, s1, a):
                for v, t2 in side(right, ro, s2, b):
                    moves.append((u, v, (q, t1, t2)))
        moves += [(u, (), (p, t1, s2)) for u, t1 in eps_moves(left, lo, s1)]
        moves += [((), v, (p, s1, t2)) for v, t2 in eps_moves(right, ro, s2)]
        for u, v, nxt in moves:
            edges.append(((p, s1, s2), u, v, nxt))
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    final = {(p, a, b) for p, a, b in seen
             if p in r.final and (left is None or a in left.final) and (right is None or b in right.final)}
    return make_relation(edges, start, final)


def letter_stripper(letters, alphabet) -> Relation:
    """Function removing the longest suffix in ``letters*``."""
    letters = set(letters)
    edges = []
    for c in alphabet:
        nxt = "bad" if c in letters else "ok"
        edges += [("ok", (c,), (c,), nxt), ("bad", (c,), (c,), nxt)]
        if c in letters:
            edges.append(("strip", (c,), (), "strip"))
    edges.append(("ok", (), (), "strip"))
    return make_relation(edges, {"ok"}, {"ok", "strip"})


def _kmp(x: Word, alphabet) -> dict:
    delta = {}
    for k in range(len(x) + 1):
        for c in alphabet:
            w = x[:k] + (c,)
            m = min(len(w), len(x))
            while m and w[len(w) - m:] != x[:m]:
                m -= 1
            delta[k, c] = m
    return delta


def power_stripper(x, alphabet) -> Relation:
    """Function removing the longest suffix in ``x*``."""
    x = as_word(x)
    if not x:
        return diagonal(alphabet)
    n = len(x)
    delta = _kmp(x, alphabet)
    edges = [(("p", k), (c,), (c,), ("p", delta[k, c])) for k in range(n + 1) for c in alphabet]
    edges += [(("p", k), (), (), ("s", 0)) for k in range(n)]
    edges += [(("s", i), (x[i],), (), ("s", (i + 1) % n)) for i in range(n)]
    return make_relation(edges, {("p", 0)}, {("p", k) for k in range(n)} | {("s", 0)})


def rel_filter(r: Relation, left: Automaton | None = None, right: Automaton | None = None) -> Relation:
    """Restrict ``r`` to pairs whose tapes lie in the given languages."""
    la = left.delta if left is not None else {}
    ra = right.delta if right is not None else {}

    def step(auto, delta, s, c):
        if auto is None or c is EPS:
            return [s]
        return list(delta.get((s, c), ()))

    li = left.initial if left is not None else {0}
    ri = right.initial if right is not None else {0}
    start = {(p, a, b) for p in r.initial for a in li for b in ri}
    seen = set(start)
    todo = list(start)
    edges = []
    rout = r.out()
    while todo:
        p, s1, s2 = todo.pop()
        for _, a, b, q in rout.get(p, ()):
            for t1 in step(left, la, s1, a):
                for t2 in step(right, ra, s2, b):
                    nxt = (q, t1, t2)
                    edges.append(((p, s1, s2), _wrap(a), _wrap(b), nxt))
                    if nxt not in seen:
                        seen.add(nxt)
                        todo.append(nxt)
    final = {(p, a, b) for p, a, b in seen
             if p in r.final and (left is None or a in left.final) and (right is None or b in right.final)}
    return make_relation(edges, start, final)


def shortest_pair(r: Relation):
    """A pair of ``r`` read along a shortest path, or ``None``."""
    prev: dict = {q: None for q in r.initial}
    todo = deque(r.initial)
    out = r.out()
    hit = None
    while todo:
        p = todo.popleft()
        if p in r.final:
            hit = p
            break
        for e in out.get(p, ()):
            if e[3] not in prev:
                prev[e[3]] = e
                todo.append(e[3])
    if hit is None:
        return None
    path = []
    while prev[hit] is not None:
        path.append(prev[hit])
        hit = prev[hit][0]
    path.reverse()
    return _read(path)


def _read(path) -> tuple:
    return (tuple(e[1] for e in path if e[1] is not EPS), tuple(e[2] for e in path if e[2] is not EPS))


def _completions(r: Relation) -> dict:
    """Shortest ``(left, right)`` reading from each state to a final state."""
    back: dict = {}
    for e in r.edges:
        back.setdefault(e[3], []).append(e)
    nxt: dict = {q: None for q in r.final}
    todo = deque(r.final)
    while todo:
        q = todo.popleft()
        for e in back.get(q, ()):
            if e[0] not in nxt:
                nxt[e[0]] = e
                todo.append(e[0])
    comp = {}
    for q in nxt:
        path, p = [], q
        while nxt[p] is not None:
            path.append(nxt[p])
            p = nxt[p][3]
        comp[q] = _read(path)
    return comp


def _advance(delay, a, b):
    """New ``(left excess, right excess)`` or ``None`` on a mismatch."""
    left = delay[0] + _wrap(a)
    right = delay[1] + _wrap(b)
    k = 0
    while k < len(left) and k < len(right):
        if left[k] != right[k]:
            return None
        k += 1
    return left[k:], right[k:]


def _cat(*pairs) -> tuple:
    return tuple(sum((p[0] for p in pairs), ())), tuple(sum((p[1] for p in pairs), ()))


def subset_of_identity(r: Relation):
    """``(True, None)`` if every pair of ``r`` is ``(w, w)``, else ``(False, pair)``.

    On a trimmed relation included in the identity every state carries a
    single delay, so exploring (state, delay) stops after one visit per state.
    """
    if r.is_empty:
        return True, None
    out = r.out()
    comp = _completions(r)
    delay = {}
    path = {}
    todo = deque()
    for q in sorted(r.initial):
        delay[q] = ((), ())
        path[q] = ((), ())
        todo.append(q)
    while todo:
        p = todo.popleft()
        if p in r.final and delay[p] != ((), ()):
            return False, path[p]
        for e in out.get(p, ()):
            _, a, b, q = e
            step = (_wrap(a), _wrap(b))
            d = _advance(delay[p], a, b)
            here = _cat(path[p], step)
            if d is None:
                return False, _cat(here, comp[q])
            if q in delay:
                if delay[q] != d:
                    for cand in (_cat(path[q], comp[q]), _cat(here, comp[q])):
                        if cand[0] != cand[1]:
                            return False, cand
                    raise AssertionError("delay conflict without witness")
                continue
            delay[q] = d
            path[q] = here
            todo.append(q)
    return True, None


def alphabet_of(r: Relation) -> tuple:
    return tuple(sorted({c for e in r.edges for c in e[1:3] if c is not EPS}, key=repr))


def _word_then(alphabet, u, loops) -> Automaton:
    from .fsm import word_nfa
    n = len(u)
    edges = [(i, (u[i],), i + 1) for i in range(n)] + [(n, w, n) for w in loops]
    return word_nfa(alphabet, edges, {0}, {n})


def _pick_preimage(r: Relation, stripped, loops):
    alpha = tuple(sorted(set(alphabet_of(r)) | {c for w in loops for c in w}, key=repr))
    a1 = _word_then(alpha, stripped[0], loops)
    a2 = _word_then(alpha, stripped[1], loops)
    return shortest_pair(rel_filter(r, a1, a2))


def subset_of_id_affix(r: Relation, letters, side: str = "suffix"):
    """Decide ``r <= Id (D*, D*)`` (``side='suffix'``) or ``r <= (D*, D*) Id``."""
    letters = frozenset(letters)
    if side == "prefix":
        ok, cex = subset_of_id_affix(rel_reverse(r), letters, "suffix")
        return ok, None if ok else (cex[0][::-1], cex[1][::-1])
    alpha = tuple(sorted(set(alphabet_of(r)) | letters, key=repr))
    strip = letter_stripper(letters, alpha)
    ok, cex = subset_of_identity(compose_tapes(r, strip, strip))
    if ok:
        return True, None
    return False, _pick_preimage(r, cex, [(d,) for d in sorted(letters, key=repr)])


def subset_of_id_power(r: Relation, x):
    """Decide ``r <= Id (x*, x*)``."""
    x = as_word(x)
    alpha = tuple(sorted(set(alphabet_of(r)) | set(x), key=repr))
    strip = power_stripper(x, alpha)
    ok, cex = subset_of_identity(compose_tapes(r, strip, strip))
    if ok:
        return True, None
    return False, _pick_preimage(r, cex, [x] if x else [])


def in_id_power_shift(pair, x, rho) -> bool:
    """Membership of a single pair in ``Id ((x*, x*) rho^-1)``."""
    u, v = as_word(pair[0]), as_word(pair[1])
    x = as_word(x)
    r1, r2 = as_word(rho[0]), as_word(rho[1])
    for k in range(min(len(u), len(v)) + 1):
        if u[:k] != v[:k]:
            break
        if _in_power_quotient(u[k:], x, r1) and _in_power_quotient(v[k:], x, r2):
            return True
    return False


def _in_power_quotient(w, x, r) -> bool:
    # w == x^n r^-1 for some n
    full = w + r
    if not x:
        return not full
    return len(full) % len(x) == 0 and full == x * (len(full) // len(x))


@dataclass(frozen=True)
class DectransSolution:
    """``x`` and ``rho`` with ``R <= Id ((x*, x*) rho^-1)``.

    ``free`` marks solutions whose ``x`` may be extended by any word, so that
    any output content is achievable.
    """

    x: Word
    rho: tuple
    free: bool = False


def _not_ending_with(x: Word, alphabet) -> Automaton:
    delta = _kmp(x, alphabet)
    n = len(x)
    states = tuple(range(n + 1))
    return Automaton(states, tuple(alphabet),
                     frozenset((k, c, delta[k, c]) for k in states for c in alphabet),
                     frozenset({0}), frozenset(k for k in states if k != n))


def _canonical(x_prime: Word, z: Word) -> tuple:
    """Primitive ``x`` and ``rho1`` with ``x^n rho1^-1`` covering ``z^* x_prime``."""
    x = primitive_root(z)
    rest = x_prime[len(x) * (len(x_prime) // len(x)):]
    return x, (x[len(rest):] if rest else ())


def _oriented(r: Relation, swapped: bool) -> list:
    """Solutions with an empty second component of ``rho``."""
    ok, cex = subset_of_identity(r)
    if ok:
        return []
    alpha = alphabet_of(r)
    u = cex[0]
    found = []
    for k in range(len(u) + 1):
        xp = u[len(u) - k:]
        if xp and not rel_filter(r, _not_ending_with(xp, alpha)).is_empty:
            continue
        r1 = rel_quotient(r, (xp, ()), "right")
        ok1, c1 = subset_of_identity(r1)
        if ok1:
            x, rho1 = _canonical(xp, xp)
            found.append((x, rho1, True))
            continue
        u1, v1 = c1
        if is_prefix(u1, v1):
            z = v1[len(u1):]
        elif is_prefix(v1, u1):
            z = u1[len(v1):]
        else:
            continue
        for zp in roots(z):
            if is_prefix(xp, zp) and subset_of_id_power(r1, zp)[0]:
                x, rho1 = _canonical(xp, zp)
                found.append((x, rho1, False))
    out = []
    for x, rho1, free in found:
        rho = ((), rho1) if swapped else (rho1, ())
        out.append(DectransSolution(x, rho, free))
    return out


def _key(s: DectransSolution):
    return (len(s.rho[0]) + len(s.rho[1]), len(s.x), s.x, s.rho, not s.free)


def dectrans_candidates(r: Relation) -> list:
    """All solutions found by the search, canonical and deduplicated."""
    if subset_of_identity(r)[0]:
        return [DectransSolution((), ((), ()), True)]
    sols = _oriented(r, False) + _oriented(swap(r), True)
    best: dict = {}
    for s in sols:
        k = (s.x, s.rho)
        best[k] = DectransSolution(s.x, s.rho, s.free or best.get(k, s).free)
    return sorted(best.values(), key=_key)


def solve_dectrans(r: Relation):
    """Some ``(x, rho)`` with ``R <= Id ((x*, x*) rho^-1)``, or ``None``."""
    sols = dectrans_candidates(r)
    if not sols:
        return None
    return sols[0].x, sols[0].rho

