"""Continuity deciders, one family per kind of variety."""

from __future__ import annotations

from ..errors import NotUnambiguousError, UnsupportedVarietyError
from ..fsm import Transducer
from ..monoid import VARIETIES
from .aperiodic import check_aperiodic
from .commutative import WeightedPairGraph, check_commutative, uniform_path_weight
from .group import (
    adjoin_codeterministic,
    adjoin_deterministic,
    check_group,
    group_pipeline,
    is_group_variety_transducer,
    is_plurisubsequential,
    merge_equivalent_states,
    normalize_outputs,
)
from .omega import OmegaTerm, evaluate_omega
from .verdict import Verdict

UNSUPPORTED = ("Gnil",)

_FAMILY = {
    "A": check_aperiodic, "J": check_aperiodic, "R": check_aperiodic, "L": check_aperiodic,
    "DA": check_aperiodic, "Com": check_commutative, "Ab": check_commutative,
    "G": check_group, "Gsol": check_group,
}


def check(t: Transducer, v: str) -> Verdict:
    """Decide whether ``t`` realizes a ``v``-continuous function."""
    if v in UNSUPPORTED:
        return Verdict(v, "unsupported")
    if v not in _FAMILY:
        raise UnsupportedVarietyError(f"unknown variety {v!r}; expected one of {', '.join(VARIETIES)}")
    bad = t.ambiguity_witness
    if bad is not None:
        raise NotUnambiguousError(bad)
    return _FAMILY[v](t, v)


__all__ = [
    "OmegaTerm", "Verdict", "WeightedPairGraph", "UNSUPPORTED", "adjoin_codeterministic",
    "adjoin_deterministic", "check", "check_aperiodic", "check_commutative", "check_group",
    "evaluate_omega", "group_pipeline", "is_group_variety_transducer", "is_plurisubsequential",
    "merge_equivalent_states", "normalize_outputs", "uniform_path_weight",
]
