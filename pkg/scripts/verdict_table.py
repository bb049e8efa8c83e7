"""Print the verdict of every checker on every corpus machine."""

import argparse
import time
from dataclasses import dataclass

from varcont.checkers import check
from varcont.corpus import CORPUS
from varcont.monoid import VARIETIES


@dataclass
class TableConfig:
    machines: tuple = tuple(CORPUS)
    varieties: tuple = VARIETIES


def table(cfg: TableConfig) -> list:
    rows = []
    for name in cfg.machines:
        t = CORPUS[name]()
        t0 = time.perf_counter()
        answers = [check(t, v).answer for v in cfg.varieties]
        rows.append((name, answers, time.perf_counter() - t0))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--machine", action="append", choices=sorted(CORPUS))
    args = ap.parse_args()
    cfg = TableConfig(tuple(args.machine)) if args.machine else TableConfig()
    width = max(map(len, cfg.machines))
    print(" " * width, " ".join(f"{v:>4}" for v in cfg.varieties))
    for name, answers, took in table(cfg):
        print(f"{name:<{width}}", " ".join(f"{a:>4}" for a in answers), f"  {took:.2f}s")


if __name__ == "__main__":
    main()
