"""G and Gsol: normal form, plurisubsequentiality and the group-transducer test."""

from __future__ import annotations

from collections import deque

from ..fsm import ALL, Transducer, domain_automaton, equivalent, reverse, slice_
from ..monoid import from_generators, letter_matrices, satisfies_variety
from ..relation import input_sync, relation_from_transducer, subset_of_identity
from ..words import lcp_all
from .verdict import Verdict, no, yes


def _pre(t: Transducer, target: frozenset, a) -> frozenset:
    return frozenset(p for p, b, q, _ in t.transitions if b == a and q in target)


def adjoin_codeterministic(t: Transducer) -> Transducer:
    """Product of ``t`` with the codeterministic automaton whose state on a
    suffix ``w`` is ``{q : w in R_q}`` (subset construction on the reverse)."""
    t = t.trim()
    start = frozenset(t.final)
    seen = {start}
    todo = deque([start])
    while todo:
        s = todo.popleft()
        for a in t.input_alphabet:
            r = _pre(t, s, a)
            if not r:
                continue
            if r not in seen:
                seen.add(r)
                todo.append(r)
    trans = []
    for p, a, q, out in t.transitions:
        for s in seen:
            if q in s:
                r = _pre(t, s, a)
                trans.append(((p, r), a, (q, s), out))
    lam = {(q, s): w for q, w in t.lam.items() for s in seen if q in s}
    rho = {(q, start): w for q, w in t.rho.items()}
    states = sorted({(q, s) for q in t.states for s in seen if q in s}, key=repr)
    return Transducer(tuple(states), t.input_alphabet, t.output_alphabet, tuple(trans), lam, rho).trim()


def adjoin_deterministic(t: Transducer) -> Transducer:
    """Dual of :func:`adjoin_codeterministic`: the adjoined state is the set
    of states reachable on the prefix read so far."""
    return reverse(adjoin_codeterministic(reverse(t))).trim()


def output_prefixes(t: Transducer) -> dict:
    """``pi_q``: longest common prefix of every output produced from ``q``."""
    pi: dict = {q: None for q in t.states}
    changed = True
    while changed:
        changed = False
        for q in t.states:
            cands = [t.rho[q]] if q in t.rho else []
            cands += [o + pi[d] for s, _, d, o in t.transitions if s == q and pi[d] is not None]
            new = lcp_all(cands) if cands else None
            if new != pi[q]:
                pi[q] = new
                changed = True
    return pi


def normalize_outputs(t: Transducer) -> Transducer:
    """Push outputs as early as possible."""
    t = t.trim()
    pi = output_prefixes(t)
    trans = tuple((p, a, q, (o + pi[q])[len(pi[p]):]) for p, a, q, o in t.transitions)
    lam = {q: w + pi[q] for q, w in t.lam.items()}
    rho = {q: w[len(pi[q]):] for q, w in t.rho.items()}
    return t.with_(transitions=trans, lam=lam, rho=rho)


def _same_residual(t: Transducer, p, q) -> bool:
    a, b = slice_(t, p, ALL), slice_(t, q, ALL)
    sync = input_sync(relation_from_transducer(a), relation_from_transducer(b))
    if sync.is_empty:
        return False
    if not equivalent(domain_automaton(a), domain_automaton(b)):
        return False
    return subset_of_identity(sync)[0]


def _merge(t: Transducer, keep, drop) -> Transducer:
    trans = tuple((p, a, keep if q == drop else q, o) for p, a, q, o in t.transitions if p != drop)
    lam = dict(t.lam)
    if drop in lam:
        lam.setdefault(keep, lam[drop])
        del lam[drop]
    rho = {q: w for q, w in t.rho.items() if q != drop}
    states = tuple(q for q in t.states if q != drop)
    return t.with_(states=states, transitions=trans, lam=lam, rho=rho).trim()


def merge_equivalent_states(t: Transducer) -> Transducer:
    """Merge states whose residual functions coincide, up to a fixpoint."""
    t = t.trim()
    while True:
        order = sorted(t.states, key=repr)
        pair = next(((p, q) for i, p in enumerate(order) for q in order[i + 1:] if _same_residual(t, p, q)),
                    None)
        if pair is None:
            return t
        t = _merge(t, *pair)


def normal_form(t: Transducer) -> Transducer:
    return merge_equivalent_states(normalize_outputs(adjoin_codeterministic(t)))


def dual_normal_form(t: Transducer) -> Transducer:
    return reverse(normal_form(reverse(t))).trim()


def group_pipeline(t: Transducer) -> Transducer:
    """Dual normal form first, then the primal one."""
    return normal_form(dual_normal_form(t.trim()))


def find_fork(t: Transducer):
    """A state and letter with two outgoing transitions, or ``None``."""
    seen: dict = {}
    for p, a, q, _ in sorted(t.transitions, key=repr):
        if (p, a) in seen and seen[p, a] != q:
            return p, a, (seen[p, a], q)
        seen[p, a] = q
    return None


def _overlapping_initials(t: Transducer):
    inits = sorted(t.initial, key=repr)
    for i, p in enumerate(inits):
        for q in inits[i + 1:]:
            a = relation_from_transducer(slice_(t, p, ALL))
            b = relation_from_transducer(slice_(t, q, ALL))
            if not input_sync(a, b).is_empty:
                return p, q
    return None


def is_plurisubsequential(t: Transducer) -> bool:
    t = t.trim()
    return find_fork(t) is None and _overlapping_initials(t) is None


def _group_failure(t: Transducer, v: str):
    a = t.underlying
    gens = letter_matrices(a)
    m = from_generators(len(a.states), gens)
    ok, bad = satisfies_variety(m, v)
    return None if ok else bad


def is_group_variety_transducer(t: Transducer, v: str) -> bool:
    if v not in ("G", "Gsol"):
        raise ValueError(v)
    return _group_failure(t.trim(), v) is None


def check_group(t: Transducer, v: str) -> Verdict:
    if v not in ("G", "Gsol"):
        raise ValueError(v)
    nf = group_pipeline(t)
    fork = find_fork(nf)
    if fork is not None:
        p, a, targets = fork
        return no(v, condition="fork", states=(p,) + targets, letter=a)
    both = _overlapping_initials(nf)
    if both is not None:
        return no(v, condition="overlapping-initials", states=both)
    bad = _group_failure(nf, v)
    if bad is not None:
        return no(v, condition="monoid", witness_input=bad)
    return yes(v, trace=(f"normal form has {len(nf.states)} states",))
