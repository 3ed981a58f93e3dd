"""Seeded exact-value streams shared by the CLI and the test suite.

The stream contract is part of the command-line interface: a rational
draws its numerator uniformly from [-9, 9] and its denominator from
[1, 9]; a cyclotomic coefficient draws one rational per power-basis
coordinate, in ascending order.  Same seed, same sequence of draws,
same values, so serialized output is byte-identical between runs.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, totient

__all__ = ["sample_rational", "sample_cyclotomic", "sample_coefficients"]


def sample_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def sample_cyclotomic(rng: random.Random, order: int) -> CyclotomicNumber:
    return CyclotomicNumber(
        order, [sample_rational(rng) for _ in range(totient(order))]
    )


def sample_coefficients(rng: random.Random, order: int, n: int):
    """n cyclotomic coefficients for a linear combination of generators."""
    return [sample_cyclotomic(rng, order) for _ in range(n)]
