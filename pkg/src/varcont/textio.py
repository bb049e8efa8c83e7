"""Line-based transducer files.

    IN a b
    OUT x y
    STATE p
    INIT p ""
    FINAL p "x"
    T p a p "xy"      # comments run to end of line

Quoted words are split on whitespace when they contain any, per character
when every output symbol is a single character, and by greedy longest match
otherwise.
"""

from __future__ import annotations

import shlex

from .errors import ParseError
from .fsm import Transducer

_ARITY = {"IN": None, "OUT": None, "STATE": 1, "INIT": 2, "FINAL": 2, "T": 4}


def split_word(text: str, symbols, lineno: int = 0) -> tuple:
    symbols = list(symbols)
    if not text:
        return ()
    if any(c.isspace() for c in text):
        parts = tuple(text.split())
    elif all(len(s) == 1 for s in symbols):
        parts = tuple(text)
    else:
        parts = []
        i = 0
        ordered = sorted(symbols, key=len, reverse=True)
        while i < len(text):
            hit = next((s for s in ordered if text.startswith(s, i)), None)
            if hit is None:
                raise ParseError(lineno, f"cannot split {text!r} into symbols")
            parts.append(hit)
            i += len(hit)
        parts = tuple(parts)
    unknown = [p for p in parts if p not in symbols]
    if unknown:
        raise ParseError(lineno, f"undeclared symbol {unknown[0]!r} in {text!r}")
    return parts


def parse(text: str) -> Transducer:
    ins: list = []
    outs: list = []
    states: list = []
    lam: dict = {}
    rho: dict = {}
    trans: list = []
    for lineno, line in enumerate(text.splitlines(), 1):
        try:
            toks = shlex.split(line, comments=True)
        except ValueError as e:
            raise ParseError(lineno, str(e)) from None
        if not toks:
            continue
        head, args = toks[0], toks[1:]
        if head not in _ARITY:
            raise ParseError(lineno, f"unknown directive {head!r}")
        if _ARITY[head] is not None and len(args) != _ARITY[head]:
            raise ParseError(lineno, f"{head} takes {_ARITY[head]} arguments, got {len(args)}")
        if head == "IN":
            ins.extend(args)
        elif head == "OUT":
            outs.extend(args)
        elif head == "STATE":
            if args[0] in states:
                raise ParseError(lineno, f"state {args[0]!r} declared twice")
            states.append(args[0])
        else:
            for q in (args[0], args[2]) if head == "T" else (args[0],):
                if q not in states:
                    raise ParseError(lineno, f"undeclared state {q!r}")
            if head == "T":
                if args[1] not in ins:
                    raise ParseError(lineno, f"undeclared input symbol {args[1]!r}")
                trans.append((args[0], args[1], args[2], split_word(args[3], outs, lineno)))
            else:
                target = lam if head == "INIT" else rho
                if args[0] in target:
                    raise ParseError(lineno, f"{head} for {args[0]!r} given twice")
                target[args[0]] = split_word(args[1], outs, lineno)
    if not ins:
        raise ParseError(0, "missing IN directive")
    return Transducer(tuple(states), tuple(ins), tuple(outs), tuple(trans), lam, rho)


def _quote(w, symbols) -> str:
    if all(len(s) == 1 for s in symbols):
        return '"' + "".join(w) + '"'
    return '"' + " ".join(w) + '"'


def dump(t: Transducer, rename: bool = False) -> str:
    """Text form of ``t``; with ``rename`` states become ``s0, s1, ...``."""
    order = list(t.states)
    if rename:
        names = {q: f"s{i}" for i, q in enumerate(sorted(order, key=repr))}
    else:
        names = {q: shlex.quote(str(q)) for q in order}
    B = t.output_alphabet
    lines = ["IN " + " ".join(map(shlex.quote, t.input_alphabet)), "OUT " + " ".join(map(shlex.quote, B))]
    lines += [f"STATE {names[q]}" for q in sorted(order, key=lambda q: names[q])]
    lines += [f"INIT {names[q]} {_quote(w, B)}" for q, w in sorted(t.lam.items(), key=lambda kv: names[kv[0]])]
    lines += [f"FINAL {names[q]} {_quote(w, B)}" for q, w in sorted(t.rho.items(), key=lambda kv: names[kv[0]])]
    for p, a, q, o in sorted(t.transitions, key=lambda e: (names[e[0]], str(e[1]), names[e[2]], e[3])):
        lines.append(f"T {names[p]} {shlex.quote(a)} {names[q]} {_quote(o, B)}")
    return "\n".join(lines) + "\n"
