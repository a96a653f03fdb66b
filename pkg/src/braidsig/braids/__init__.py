"""Braid words, fence diagrams, normal forms and Seifert matrices."""

from .fence import Bar, FenceDiagram, LinkInvariants, betti_and_c, fence_diagram
from .garside import (
    NormalForm,
    PermutationBraid,
    braid_equal,
    half_twist,
    normal_form,
    normal_form_key,
    positive_rewrites,
)
from .seifert import Brick, SeifertMatrix, brick_basis, seifert_matrix
from .torus import TorusParams, sigma_torus, torus_word
from .words import (
    BraidWord,
    Letter,
    concat,
    cyclic_shift,
    format_word,
    inverse,
    parse_word,
    power,
    rotate180,
)

__all__ = [
    "Bar",
    "BraidWord",
    "Brick",
    "FenceDiagram",
    "Letter",
    "LinkInvariants",
    "NormalForm",
    "PermutationBraid",
    "SeifertMatrix",
    "TorusParams",
    "betti_and_c",
    "braid_equal",
    "brick_basis",
    "concat",
    "cyclic_shift",
    "fence_diagram",
    "format_word",
    "half_twist",
    "inverse",
    "normal_form",
    "normal_form_key",
    "parse_word",
    "positive_rewrites",
    "power",
    "rotate180",
    "seifert_matrix",
    "sigma_torus",
    "torus_word",
]
