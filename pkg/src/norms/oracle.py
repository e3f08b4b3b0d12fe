"""Brute-force oracles for the Schreier and Baernstein norms.

These enumerate admissible sets explicitly and are only meant for small
supports; they exist to cross-check the fast evaluators.
"""

from functools import lru_cache
from itertools import combinations
from typing import Tuple

from config.constants import CHAIN_ORACLE_MAX_SUPPORT, SCHREIER_ORACLE_MAX_SUPPORT
from seqvec.schreier import SchreierChain, SchreierSet, beta_p, check_exponent, mu_p
from seqvec.vectors import FinVec


def _guard_support(x: FinVec, limit: int) -> None:
    size = len(x.entries)
    if size > limit:
        raise ValueError(f"support of size {size} exceeds the enumeration limit {limit}")


def schreier_norm_oracle(x: FinVec, p: float) -> float:
    """Maximum of mu_p(x, F) over every Schreier subset F of support(x).

    Raises:
        ValueError: If p < 1 or the support has more than 20 elements
    """
    check_exponent(p)
    _guard_support(x, SCHREIER_ORACLE_MAX_SUPPORT)
    support = x.support()
    best = 0.0
    for size in range(1, len(support) + 1):
        for subset in combinations(support, size):
            if subset[0] < size:
                continue
            best = max(best, mu_p(x, SchreierSet(indices=subset), p))
    return best


def baernstein_norm_oracle(x: FinVec, p: float) -> float:
    """Maximum of beta_p(x, C) over every Schreier chain built from support(x).

    Chains are enumerated recursively block by block: every non-empty Schreier
    subset of the remaining support is tried as the next block. The best tail
    from a given position is memoized, which leaves the search exhaustive.

    Raises:
        ValueError: If p <= 1 or the support has more than 12 elements
    """
    check_exponent(p, strict=True)
    _guard_support(x, CHAIN_ORACLE_MAX_SUPPORT)
    support = x.support()
    scale = max(x.abs_values(), default=1.0)
    values = [value / scale for value in x.abs_values()]
    size = len(support)

    @lru_cache(maxsize=None)
    def best_from(position: int) -> Tuple[float, Tuple[Tuple[int, ...], ...]]:
        # chains whose first block has its minimum at `position` or later
        if position >= size:
            return 0.0, ()
        best = best_from(position + 1)
        later = range(position + 1, size)
        for extra in range(0, min(support[position] - 1, len(later)) + 1):
            for rest in combinations(later, extra):
                positions = (position,) + rest
                block_total = sum(values[j] for j in positions)
                tail_total, tail_blocks = best_from(positions[-1] + 1)
                candidate = block_total**p + tail_total
                if candidate > best[0]:
                    block = tuple(support[j] for j in positions)
                    best = (candidate, (block,) + tail_blocks)
        return best

    _, blocks = best_from(0)
    if not blocks:
        return 0.0
    return beta_p(x, SchreierChain.of(blocks), p)
