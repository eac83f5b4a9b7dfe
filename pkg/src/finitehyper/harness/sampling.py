"""Seeded parameter sampling."""

from __future__ import annotations

import random
from fractions import Fraction

DEFAULT_NUM_BOUND = 20
DEFAULT_DEN_BOUND = 10


def rng_stream(seed: int, identity: str) -> random.Random:
    """Independent, reproducible stream per (seed, identity).

    String seeds go through SHA-512 inside :mod:`random`, so the stream does
    not depend on PYTHONHASHSEED.
    """
    return random.Random(f"{seed}:{identity}")


def sample_rational(rng: random.Random, num_bound: int = DEFAULT_NUM_BOUND,
                    den_bound: int = DEFAULT_DEN_BOUND) -> Fraction:
    """Numerator uniform in [-num_bound, num_bound], denominator in [1, den_bound]."""
    if num_bound < 1 or den_bound < 1:
        raise ValueError("sampling bounds must be at least 1")
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def sample_nonzero(rng: random.Random, num_bound: int = DEFAULT_NUM_BOUND,
                   den_bound: int = DEFAULT_DEN_BOUND) -> Fraction:
    while True:
        x = sample_rational(rng, num_bound, den_bound)
        if x:
            return x
