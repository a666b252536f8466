"""Probability that a random permutation reproduces one fixed arrangement.

A loop of n distinct members admits n! linear arrangements, so the chance
of hitting any single one by coincidence is 1/n!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import SynapperError


class NTooSmallError(SynapperError):
    """A loop needs at least two members for the question to make sense."""


@dataclass(frozen=True)
class ChanceProbability:
    n: int
    probability: float
    numerator: int
    denominator: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def chance_probability(n: int) -> ChanceProbability:
    if n < 2:
        raise NTooSmallError(f"need at least 2 members, got {n}")
    exact = Fraction(1, math.factorial(n))
    return ChanceProbability(
        n=n,
        probability=float(exact),
        numerator=exact.numerator,
        denominator=exact.denominator,
    )
