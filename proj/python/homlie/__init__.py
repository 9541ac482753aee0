"""Biderivations and commuting maps of graded Hom-Lie (super)algebras over Q(q)."""

from ._core import (
    HomlieError,
    builtin_names,
    check_axioms,
    check_multiplicative,
    classify,
    commuting_maps,
    corollaries,
    presentation,
    q_brace,
    q_bracket,
    stable_solve,
)

__all__ = [
    "HomlieError",
    "builtin_names",
    "check_axioms",
    "check_multiplicative",
    "classify",
    "commuting_maps",
    "corollaries",
    "presentation",
    "q_brace",
    "q_bracket",
    "stable_solve",
]
