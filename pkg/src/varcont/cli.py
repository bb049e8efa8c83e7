"""Command line front end: ``varcont check|eval|omega|info|normalize|pertaining``."""

from __future__ import annotations

import argparse
import sys

from .checkers import check, evaluate_omega, group_pipeline
from .errors import NotUnambiguousError, VarcontError
from .fsm import evaluate
from .monoid import VARIETIES, domain_in_variety
from .pertinence import KINDS, enumerate_pertaining
from .textio import dump, parse, split_word


def _word(w, symbols=None) -> str:
    w = tuple(w)
    if symbols is not None and not all(len(s) == 1 for s in symbols):
        return '"' + " ".join(map(str, w)) + '"'
    return '"' + "".join(map(str, w)) + '"'


def render(value) -> str:
    """Witness values: words quoted, tuples parenthesised, sets braced."""
    if isinstance(value, tuple) and all(isinstance(x, str) for x in value):
        return _word(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(render(x) for x in value) + ")"
    if isinstance(value, (set, frozenset)):
        return "{" + ", ".join(sorted(render(x) for x in value)) + "}"
    return str(value)


def render_states(states) -> str:
    return "(" + ", ".join(map(str, states)) + ")"


def report(verdict) -> list:
    lines = [f"variety={verdict.variety} result={verdict.answer}"]
    for k, v in (verdict.witness or {}).items():
        if k == "states":
            text = render_states(v)
        elif k == "input_content":
            text = render(frozenset(v))
        else:
            text = render(v)
        lines.append(f"  {k}={text}")
    return lines


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _cmd_check(args, out) -> int:
    t = _load(args.file)
    wanted = list(VARIETIES) if args.variety == "all" else [args.variety]
    code = 0
    for v in wanted:
        verdict = check(t, v)
        out.extend(report(verdict))
        if verdict.answer == "unsupported":
            code = 2
        elif verdict.answer == "no" and code == 0:
            code = 1
    return code


def _cmd_eval(args, out) -> int:
    t = _load(args.file)
    res = evaluate(t, split_word(args.word, t.input_alphabet))
    out.append("undefined" if res is None else "".join(res) if all(len(b) == 1 for b in t.output_alphabet)
               else " ".join(res))
    return 0


def _cmd_omega(args, out) -> int:
    t = _load(args.file)
    if not t.unambiguous:
        raise NotUnambiguousError(t.ambiguity_witness)
    term = evaluate_omega(t, split_word(args.word, t.input_alphabet))
    if term is None:
        out.append("undefined")
    else:
        B = t.output_alphabet
        out.append(f"s {_word(term.s, B)} base {_word(term.y, B)} t {_word(term.t, B)}")
    return 0


def _cmd_info(args, out) -> int:
    t = _load(args.file)
    out.append(f"states={len(t.states)} transitions={len(t.transitions)}")
    out.append(f"initial={len(t.initial)} final={len(t.final)}")
    bad = t.ambiguity_witness
    out.append("unambiguous=yes" if bad is None else f"unambiguous=no witness={_word(bad)}")
    for v in VARIETIES:
        ok, _ = domain_in_variety(t, v)
        out.append(f"domain {v}={'yes' if ok else 'no'}")
    return 0


def _cmd_normalize(args, out) -> int:
    t = _load(args.file)
    if not t.unambiguous:
        raise NotUnambiguousError(t.ambiguity_witness)
    out.append(dump(group_pipeline(t), rename=True).rstrip("\n"))
    return 0


def _cmd_pertaining(args, out) -> int:
    t = _load(args.file)
    if not t.unambiguous:
        raise NotUnambiguousError(t.ambiguity_witness)
    for tup in enumerate_pertaining(t, args.kind):
        line = f"states={render_states(tup.states)} class={tup.classification} C={render(frozenset(tup.input_content))}"
        if tup.D is not None:
            line += f" D={render(frozenset(tup.D))}"
        out.append(line + f" u={_word(tup.u)} n={tup.n}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="varcont", description="Continuity of rational transducers.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", help="decide V-continuity")
    p.add_argument("--variety", "-V", required=True, help="one of %s, Gnil, or all" % ", ".join(VARIETIES))
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)
    for name, fn, helptext in (("eval", _cmd_eval, "evaluate on a word"),
                               ("omega", _cmd_omega, "image of x^omega as s y^(omega-1) t")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("word")
        p.set_defaults(fn=fn)
    p = sub.add_parser("info", help="size, unambiguity, domain memberships")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_info)
    p = sub.add_parser("normalize", help="print the group normal form")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_normalize)
    p = sub.add_parser("pertaining", help="list pertaining tuples")
    p.add_argument("--kind", "-k", required=True, choices=KINDS)
    p.add_argument("file")
    p.set_defaults(fn=_cmd_pertaining)
    return ap


def run(argv) -> tuple:
    """``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return (2 if e.code else 0), "", ""
    out: list = []
    try:
        code = args.fn(args, out)
    except NotUnambiguousError as e:
        return 2, "", f"error: not unambiguous, witness input {_word(e.witness)}\n"
    except (VarcontError, OSError) as e:
        return 2, "", f"error: {e}\n"
    return code, "".join(line + "\n" for line in out), ""


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
