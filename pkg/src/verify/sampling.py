"""Seeded random vectors for the verification trials.

Coefficient magnitudes mix four laws: uniform, exponential, a few spikes over
a small background, and flat blocks. Inclusion constants are approached by
very different shapes, so every batch draws from all of them.
"""

import hashlib
import math
from typing import Optional

import numpy as np

from config.constants import (
    COEFFICIENT_LAWS,
    MAX_SAMPLE_INDEX,
    MAX_SAMPLE_SUPPORT,
    MIN_SAMPLE_SUPPORT,
)
from seqvec.vectors import FinVec


def default_seed(*parts: object) -> int:
    """Deterministic 32-bit seed derived from the textual form of `parts`."""
    digest = hashlib.sha256("|".join(str(part) for part in parts).encode("utf-8")).hexdigest()
    return int(digest[:8], 16)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, so trials can run in any order."""
    return np.random.default_rng([seed, trial])


def random_magnitudes(rng: np.random.Generator, size: int, law: Optional[str] = None) -> np.ndarray:
    """Strictly positive magnitudes drawn from one of the coefficient laws."""
    law = law or COEFFICIENT_LAWS[int(rng.integers(len(COEFFICIENT_LAWS)))]
    if law == "uniform":
        values = rng.uniform(0.0, 1.0, size)
    elif law == "exponential":
        values = rng.exponential(1.0, size)
    elif law == "spike":
        values = rng.uniform(0.0, 1e-2, size)
        spikes = rng.choice(size, size=max(1, size // 8), replace=False)
        values[spikes] = rng.uniform(1.0, 10.0, len(spikes))
    elif law == "flat":
        values = np.full(size, rng.uniform(0.1, 2.0))
    else:
        raise ValueError(f"unknown coefficient law {law!r}")
    return np.maximum(values, 1e-9)


def random_finvec(
    rng: np.random.Generator,
    min_support: int = MIN_SAMPLE_SUPPORT,
    max_support: int = MAX_SAMPLE_SUPPORT,
    max_index: int = MAX_SAMPLE_INDEX,
    law: Optional[str] = None,
) -> FinVec:
    """Random signed vector; the index range is tight, moderate or wide at random."""
    size = int(rng.integers(min_support, max_support + 1))
    ceilings = (size, 2 * size, 4 * size + 8, 100, max_index)
    ceiling = min(max(size, int(rng.choice(ceilings))), max_index)
    indices = np.sort(rng.choice(ceiling, size=size, replace=False) + 1)
    magnitudes = random_magnitudes(rng, size, law)
    signs = rng.choice((-1.0, 1.0), size=size)
    return FinVec(
        entries=tuple(
            (int(index), float(sign * value))
            for index, sign, value in zip(indices, signs, magnitudes)
        )
    )


def random_supported_in(
    rng: np.random.Generator, bound: int, law: Optional[str] = None
) -> FinVec:
    """Random vector with support inside {1, ..., bound}."""
    size = int(rng.integers(1, bound + 1))
    indices = np.sort(rng.choice(bound, size=size, replace=False) + 1)
    magnitudes = random_magnitudes(rng, size, law)
    signs = rng.choice((-1.0, 1.0), size=size)
    return FinVec(
        entries=tuple(
            (int(index), float(sign * value))
            for index, sign, value in zip(indices, signs, magnitudes)
        )
    )


def random_decreasing(rng: np.random.Generator, depth: int, law: Optional[str] = None) -> FinVec:
    """Non-negative decreasing vector on {1, ..., 2^depth}."""
    size = 2**depth
    magnitudes = np.sort(random_magnitudes(rng, size, law))[::-1]
    return FinVec(entries=tuple((i + 1, float(value)) for i, value in enumerate(magnitudes)))


def dyadic_depth(x: FinVec) -> int:
    """Smallest K with support(x) inside {1, ..., 2^K}."""
    support = x.support()
    if not support:
        return 0
    return max(0, math.ceil(math.log2(support[-1])))
