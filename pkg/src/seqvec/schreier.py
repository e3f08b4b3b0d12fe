"""Schreier sets, Schreier chains and the seminorms mu_p and beta_p."""

import math
from typing import Iterable, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from seqvec.vectors import FinVec


class SchreierSet(BaseModel):
    """Finite set F of positive integers with F empty or |F| <= min F."""

    model_config = ConfigDict(frozen=True)

    indices: Tuple[int, ...] = Field(
        default=(), description="Strictly increasing positive integers"
    )

    @field_validator("indices")
    @classmethod
    def _admissible(cls, indices: Tuple[int, ...]) -> Tuple[int, ...]:
        for earlier, later in zip(indices, indices[1:]):
            if earlier >= later:
                raise ValueError(f"indices must be strictly increasing: {list(indices)}")
        if indices and indices[0] < 1:
            raise ValueError(f"indices must be positive: {list(indices)}")
        if indices and len(indices) > indices[0]:
            raise ValueError(
                f"not a Schreier set: {len(indices)} elements but minimum {indices[0]}"
            )
        return indices

    @classmethod
    def of(cls, indices: Iterable[int]) -> "SchreierSet":
        """Build from any iterable, sorting and removing repeats first."""
        return cls(indices=tuple(sorted(set(indices))))

    @property
    def minimum(self) -> int:
        return self.indices[0]

    @property
    def maximum(self) -> int:
        return self.indices[-1]

    def is_empty(self) -> bool:
        return not self.indices


class SchreierChain(BaseModel):
    """Non-empty list of non-empty Schreier sets, each entirely left of the next."""

    model_config = ConfigDict(frozen=True)

    sets: Tuple[SchreierSet, ...] = Field(description="Consecutive non-empty Schreier sets")

    @field_validator("sets")
    @classmethod
    def _consecutive(cls, sets: Tuple[SchreierSet, ...]) -> Tuple[SchreierSet, ...]:
        if not sets:
            raise ValueError("a Schreier chain must contain at least one set")
        for member in sets:
            if member.is_empty():
                raise ValueError("chain members must be non-empty")
        for earlier, later in zip(sets, sets[1:]):
            if earlier.maximum >= later.minimum:
                raise ValueError(
                    f"chain members overlap: max {earlier.maximum} >= min {later.minimum}"
                )
        return sets

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "SchreierChain":
        return cls(sets=tuple(SchreierSet.of(member) for member in sets))


def is_schreier_set(indices: Iterable[int]) -> bool:
    """Check |F| <= min F (or F empty) after sorting and removing repeats."""
    members = sorted(set(indices))
    if not members:
        return True
    return members[0] >= 1 and len(members) <= members[0]


def is_schreier_chain(sets: Sequence[Iterable[int]]) -> bool:
    """Check that sets form a non-empty list of non-empty consecutive Schreier sets."""
    members = [sorted(set(member)) for member in sets]
    if not members:
        return False
    for member in members:
        if not member or not is_schreier_set(member):
            return False
    return all(earlier[-1] < later[0] for earlier, later in zip(members, members[1:]))


def check_exponent(p: float, minimum: float = 1.0, strict: bool = False) -> None:
    """Reject exponents outside [minimum, inf) (or (minimum, inf) when strict)."""
    if not math.isfinite(p) or p < minimum or (strict and p == minimum):
        bound = f"> {minimum:g}" if strict else f">= {minimum:g}"
        raise ValueError(f"exponent p must be {bound}, got {p}")


def power_sum_root(values: Iterable[float], p: float) -> float:
    """(sum v^p)^(1/p) over non-negative values, 0 when all vanish.

    Values are divided by the largest one before powering and the result is
    multiplied back, so huge coefficients do not overflow and tiny ones do not
    underflow to zero.
    """
    values = list(values)
    scale = max(values, default=0.0)
    if scale == 0.0:
        return 0.0
    if p == 1.0:
        return scale * math.fsum(value / scale for value in values)
    return scale * math.fsum((value / scale) ** p for value in values) ** (1.0 / p)


def mu_p(x: FinVec, F: Union[SchreierSet, Iterable[int]], p: float) -> float:
    """mu_p(x, F) = (sum_{n in F} |x(n)|^p)^(1/p), and 0 for empty F.

    Args:
        x: Finitely supported vector
        F: Schreier set (any iterable is validated into one)
        p: Exponent, p >= 1

    Returns:
        The seminorm value
    """
    check_exponent(p)
    if not isinstance(F, SchreierSet):
        F = SchreierSet.of(F)
    return power_sum_root((abs(x.coefficient(n)) for n in F.indices), p)


def block_sum(x: FinVec, F: SchreierSet) -> float:
    """sum_{n in F} |x(n)|."""
    return math.fsum(abs(x.coefficient(n)) for n in F.indices)


def beta_p(x: FinVec, C: Union[SchreierChain, Sequence[Iterable[int]]], p: float) -> float:
    """beta_p(x, C) = (sum_{F in C} (sum_{n in F} |x(n)|)^p)^(1/p).

    Args:
        x: Finitely supported vector
        C: Schreier chain (a list of index lists is validated into one)
        p: Exponent, p > 1

    Returns:
        The seminorm value

    Raises:
        ValueError: If p <= 1 or C is not a Schreier chain
    """
    check_exponent(p, strict=True)
    if not isinstance(C, SchreierChain):
        C = SchreierChain.of(C)
    scale = max((abs(x.coefficient(n)) for F in C.sets for n in F.indices), default=0.0)
    if scale == 0.0:
        return 0.0
    sums = [math.fsum(abs(x.coefficient(n)) / scale for n in F.indices) for F in C.sets]
    return scale * power_sum_root(sums, p)


def dyadic_block(n: int) -> SchreierSet:
    """F_n = [2^n, 2^(n+1)) as a Schreier set (|F_n| = 2^n = min F_n)."""
    if n < 0:
        raise ValueError(f"dyadic block level must be >= 0, got {n}")
    return SchreierSet(indices=tuple(range(2**n, 2 ** (n + 1))))
