"""Compare checker verdicts with pulled-back counterexample search.

The search pulls small random languages of the variety back through the
machine.  It can refute a "yes" but never confirm one, so a "yes" next to
"-" only means no counterexample was found.
"""

import argparse
import random
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import oracles  # noqa: E402
from varcont.checkers import check  # noqa: E402
from varcont.corpus import CORPUS  # noqa: E402
from varcont.monoid import VARIETIES  # noqa: E402


@dataclass
class SweepConfig:
    random_machines: int = 20
    states: int = 3
    languages: int = 40
    max_size: int = 3
    seed: int = 0


def compare(t, v: str, cfg: SweepConfig):
    answer = check(t, v).answer
    cex = oracles.continuity_counterexample(t, v, seed=cfg.seed, count=cfg.languages, max_size=cfg.max_size)
    clash = (cex is not None) == (answer == "yes")
    return answer, cex is not None, clash


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=SweepConfig.random_machines)
    ap.add_argument("--languages", type=int, default=SweepConfig.languages)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--skip-corpus", action="store_true")
    args = ap.parse_args()
    cfg = SweepConfig(random_machines=args.random, languages=args.languages, seed=args.seed)
    rng = random.Random(cfg.seed)
    machines = [] if args.skip_corpus else [(n, f()) for n, f in CORPUS.items() if n != "s5_marker"]
    machines += [(f"random#{i}", oracles.random_transducer(rng, states=rng.randint(1, cfg.states)))
                 for i in range(cfg.random_machines)]
    clashes = 0
    for name, t in machines:
        cells = []
        for v in VARIETIES:
            answer, refuted, clash = compare(t, v, cfg)
            clashes += clash
            cells.append(f"{v}={answer}{'/cex' if refuted else '/-'}{' !!' if clash else ''}")
        print(name, " ".join(cells), flush=True)
    print(f"clashes: {clashes}")
    return 1 if clashes else 0


if __name__ == "__main__":
    sys.exit(main())
