from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    variety: str
    answer: str  # yes | no | unsupported
    witness: dict | None = None
    trace: tuple = field(default=(), compare=False)

    @property
    def yes(self) -> bool:
        return self.answer == "yes"


def yes(v: str, trace=()) -> Verdict:
    return Verdict(v, "yes", None, tuple(trace))


def no(v: str, **witness) -> Verdict:
    return Verdict(v, "no", witness)
