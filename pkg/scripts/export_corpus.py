"""Write every corpus machine to ``machines/<name>.t``."""

import argparse
from pathlib import Path

from varcont.corpus import CORPUS
from varcont.textio import dump


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="machines")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(exist_ok=True)
    for name, make in CORPUS.items():
        (out / f"{name}.t").write_text(dump(make()))
        print(out / f"{name}.t")


if __name__ == "__main__":
    main()
