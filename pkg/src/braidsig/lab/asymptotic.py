"""Asymptotic signature σ̃(β) = lim σ(βⁿ)/n with rigorous intervals.

The signature is a quasimorphism of defect b - 1 on b-braids, so
|σ(βⁿ) - n σ̃(β)| <= b - 1 and σ(βⁿ)/n is within (b - 1)/n of σ̃(β).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import structlog

from ..braids.words import BraidWord, format_word, power, require_positive
from ..utils.exceptions import ValidationError
from .invariants import signature

logger = structlog.get_logger(__name__)


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class AsymptoticEstimate:
    word: BraidWord
    n_used: int
    estimate: Fraction
    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, value: Fraction | int) -> bool:
        return self.lower <= value <= self.upper

    def to_dict(self) -> dict[str, Any]:
        return {
            "word": format_word(self.word),
            "strands": self.word.strands,
            "n_used": self.n_used,
            "estimate": format_fraction(self.estimate),
            "lower": format_fraction(self.lower),
            "upper": format_fraction(self.upper),
        }


def asymptotic_sigma(word: BraidWord, n_max: int) -> AsymptoticEstimate:
    """Estimate σ̃ by σ(β^n_max)/n_max with error at most (b - 1)/n_max."""
    require_positive(word)
    if n_max < 1:
        raise ValidationError(f"n_max must be at least 1, got {n_max}", field="n_max")

    estimate = Fraction(signature(power(word, n_max)), n_max)
    radius = Fraction(word.strands - 1, n_max)
    logger.debug("Asymptotic signature estimated", word=str(word), n=n_max, estimate=str(estimate))
    return AsymptoticEstimate(word, n_max, estimate, estimate - radius, estimate + radius)


def affine_signature_bound(word: BraidWord, constant: Fraction) -> Fraction:
    """Lower bound C·l - b + 1 on -σ implied by -σ̃ >= C·l."""
    return Fraction(constant) * word.length - word.strands + 1
