"""The groups Gamma_n and Q_n acting on the line."""

from __future__ import annotations

from .membership import (
    GammaElement,
    GeneratorSet,
    diagonal_lift,
    eta,
    generator_set,
    member_gamma,
    stab0_project,
    xi_build,
)
from .special import factor, is_special, mush
from .words import Comm, FAtom, Word, Xi, comm_word, dumps_word, f_word, loads_word, xi_word

__all__ = [
    "GammaElement",
    "GeneratorSet",
    "diagonal_lift",
    "eta",
    "generator_set",
    "member_gamma",
    "stab0_project",
    "xi_build",
    "factor",
    "is_special",
    "mush",
    "Comm",
    "FAtom",
    "Word",
    "Xi",
    "comm_word",
    "dumps_word",
    "f_word",
    "loads_word",
    "xi_word",
]
