"""Transition monoids as boolean matrices, omega powers, variety predicates.

A matrix over ``n`` states is a tuple of ``n`` row bitmasks: bit ``q`` of row
``p`` is set when ``q`` is reachable from ``p``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .errors import ResourceLimitError, UnsupportedVarietyError
from .fsm import Automaton, domain_automaton, minimize_dfa
from .words import Word

DEFAULT_CAP = 1_000_000
VARIETIES = ("J", "R", "L", "DA", "A", "Com", "Ab", "Gsol", "G")

Matrix = tuple


def monoid_cap() -> int:
    raw = os.environ.get("VARCONT_MONOID_CAP")
    return int(raw) if raw else DEFAULT_CAP


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for row in a:
        acc = 0
        q = 0
        while row:
            if row & 1:
                acc |= b[q]
            row >>= 1
            q += 1
        out.append(acc)
    return tuple(out)


def identity_matrix(n: int) -> Matrix:
    return tuple(1 << i for i in range(n))


@dataclass(frozen=True)
class RelationElement:
    matrix: Matrix
    witness: Word


@dataclass(frozen=True)
class OmegaData:
    index: int
    period: int
    idempotent: int  # element id


@dataclass
class FiniteMonoid:
    """Closure of generator matrices; element 0 is the identity."""

    size: int  # number of states the matrices act on
    matrices: list
    witnesses: list
    generators: dict  # symbol -> element id
    right: list  # right[i][symbol] = i * generator
    ids: dict = field(default_factory=dict)
    _mul: dict = field(default_factory=dict, repr=False)
    _omega: dict = field(default_factory=dict, repr=False)

    identity = 0

    def __len__(self) -> int:
        return len(self.matrices)

    def element(self, i: int) -> RelationElement:
        return RelationElement(self.matrices[i], self.witnesses[i])

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        r = self._mul.get(key)
        if r is None:
            r = self.ids[mat_mul(self.matrices[i], self.matrices[j])]
            self._mul[key] = r
        return r

    def of_word(self, w) -> int:
        i = self.identity
        for a in w:
            i = self.right[i][a]
        return i

    def power(self, i: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = self.mul(r, i)
        return r

    def table(self) -> list:
        n = len(self)
        return [[self.mul(i, j) for j in range(n)] for i in range(n)]

    def omega(self, i: int) -> OmegaData:
        if i in self._omega:
            return self._omega[i]
        seen = {}
        cur, k = i, 1
        while cur not in seen:
            seen[cur] = k
            cur = self.mul(cur, i)
            k += 1
        index = seen[cur]
        period = k - index
        # the unique multiple of the period inside [index, index + period)
        e = index + (-index) % period
        for m, exp in seen.items():
            if exp == e:
                data = OmegaData(index, period, m)
                break
        self._omega[i] = data
        return data

    def is_idempotent(self, i: int) -> bool:
        return self.mul(i, i) == i


def from_generators(size: int, gens: dict, cap: int | None = None) -> FiniteMonoid:
    """Close ``gens`` (symbol -> matrix) under product, breadth first."""
    cap = monoid_cap() if cap is None else cap
    one = identity_matrix(size)
    mats, wits, ids = [one], [()], {one: 0}
    right: list = [{}]
    syms = list(gens)
    todo = deque([0])
    while todo:
        i = todo.popleft()
        for a in syms:
            m = mat_mul(mats[i], gens[a])
            j = ids.get(m)
            if j is None:
                if len(mats) >= cap:
                    raise ResourceLimitError(f"monoid exceeds {cap} elements")
                j = len(mats)
                ids[m] = j
                mats.append(m)
                wits.append(wits[i] + (a,))
                right.append({})
                todo.append(j)
            right[i][a] = j
    gen_ids = {a: ids[gens[a]] for a in syms}
    return FiniteMonoid(size, mats, wits, gen_ids, right, ids)


def letter_matrices(a: Automaton) -> dict:
    pos = {q: k for k, q in enumerate(a.states)}
    gens = {}
    for c in a.alphabet:
        rows = [0] * len(a.states)
        for p, x, q in a.transitions:
            if x == c:
                rows[pos[p]] |= 1 << pos[q]
        gens[c] = tuple(rows)
    return gens


def transition_monoid(a: Automaton, cap: int | None = None) -> FiniteMonoid:
    return from_generators(len(a.states), letter_matrices(a), cap)


def syntactic_monoid(lang: Automaton, cap: int | None = None) -> FiniteMonoid:
    return transition_monoid(minimize_dfa(lang), cap)


def omega_power(m: FiniteMonoid, i: int) -> OmegaData:
    return m.omega(i)


def _left(m: FiniteMonoid) -> list:
    return [{a: m.mul(g, i) for a, g in m.generators.items()} for i in range(len(m))]


def _scc_ids(n: int, succ) -> list:
    """Tarjan's algorithm, iterative; returns component id per node."""
    index = [None] * n
    low = [0] * n
    comp = [None] * n
    stack: list = []
    on = [False] * n
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on[root] = True
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if index[w] is None:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on[w] = True
                    work.append((w, iter(succ(w))))
                    pushed = True
                    break
                if on[w]:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def _trivial_classes(m: FiniteMonoid, edges: list):
    """``None`` if every strongly connected class is a singleton, else a pair in one."""
    comp = _scc_ids(len(m), lambda i: edges[i].values())
    first: dict = {}
    for i, c in enumerate(comp):
        if c in first:
            return first[c], i
        first[c] = i
    return None


def _words(m: FiniteMonoid, *ids) -> tuple:
    return tuple(m.witnesses[i] for i in ids)


def _aperiodic(m):
    for i in range(len(m)):
        if m.omega(i).period != 1:
            return _words(m, i)
    return None


def _commutative(m):
    gens = sorted(m.generators.items(), key=lambda kv: repr(kv[0]))
    for k, (a, x) in enumerate(gens):
        for b, y in gens[k + 1:]:
            if m.mul(x, y) != m.mul(y, x):
                return (a,), (b,)
    return None


def _group(m):
    for i in range(len(m)):
        e = m.omega(i).idempotent
        if e != m.identity:
            return _words(m, i)
    return None


def _inverse(m, i):
    return m.power(i, m.omega(i).period - 1) if m.omega(i).period > 1 else m.identity


def _subgroup(m, gens) -> frozenset:
    out = {m.identity}
    todo = list(out)
    gens = list(gens)
    while todo:
        x = todo.pop()
        for g in gens:
            y = m.mul(x, g)
            if y not in out:
                out.add(y)
                todo.append(y)
    return frozenset(out)


def derived_series(m: FiniteMonoid) -> list:
    """Derived series of a group monoid, as sets of element ids."""
    cur = frozenset(range(len(m)))
    series = [cur]
    while True:
        comms = {m.mul(m.mul(_inverse(m, a), _inverse(m, b)), m.mul(a, b)) for a in cur for b in cur}
        nxt = _subgroup(m, comms)
        if nxt == cur:
            return series
        series.append(nxt)
        cur = nxt


def _solvable(m):
    bad = _group(m)
    if bad is not None:
        return bad
    last = derived_series(m)[-1]
    if len(last) > 1:
        return _words(m, *sorted(last - {m.identity})[:1])
    return None


def _da(m):
    bad = _aperiodic(m)
    if bad is not None:
        return bad
    left = _left(m)
    idem = [e for e in range(len(m)) if m.is_idempotent(e)]
    for y in range(len(m)):
        # elements of the two-sided ideal M y M
        seen = {y}
        todo = [y]
        while todo:
            i = todo.pop()
            for j in list(m.right[i].values()) + list(left[i].values()):
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        for e in idem:
            if e in seen and m.mul(m.mul(e, y), e) != e:
                return _words(m, e, y)
    return None


def satisfies_variety(m: FiniteMonoid, v: str):
    """``(True, None)`` or ``(False, witness words of offending elements)``."""
    if v == "R":
        bad = _trivial_classes(m, m.right)
    elif v == "L":
        bad = _trivial_classes(m, _left(m))
    elif v == "J":
        bad = _trivial_classes(m, m.right) or _trivial_classes(m, _left(m))
    elif v == "A":
        bad = _aperiodic(m)
        return bad is None, bad
    elif v == "DA":
        bad = _da(m)
        return bad is None, bad
    elif v == "Com":
        bad = _commutative(m)
        return bad is None, bad
    elif v == "G":
        bad = _group(m)
        return bad is None, bad
    elif v == "Ab":
        bad = _group(m) or _commutative(m)
        return bad is None, bad
    elif v == "Gsol":
        bad = _solvable(m)
        return bad is None, bad
    else:
        raise UnsupportedVarietyError(v)
    if bad is None:
        return True, None
    return False, _words(m, *bad)


def domain_in_variety(t, v: str):
    return satisfies_variety(syntactic_monoid(domain_automaton(t)), v)
