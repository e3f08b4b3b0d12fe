"""Exact norm evaluation on finitely supported vectors.

The Schreier and Baernstein norms are suprema over infinitely many admissible
sets, but on a finitely supported vector only sets built from support indices
matter: a zero coordinate adds nothing to a sum and, used as a minimum, only
shrinks the admissible cardinality. Both evaluators therefore work over support
positions, and both return a witness attaining the value.
"""

import heapq
import logging
import math
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from seqvec.schreier import (
    SchreierChain,
    SchreierSet,
    beta_p,
    check_exponent,
    mu_p,
    power_sum_root,
)
from seqvec.vectors import FinVec

logger = logging.getLogger(__name__)


class NormValue(BaseModel):
    """A norm value together with the set or chain attaining it."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0.0, description="The norm")
    witness: Optional[Union[SchreierSet, SchreierChain]] = Field(
        default=None, description="Schreier set or chain attaining the value; None for x = 0"
    )


def lp_norm(x: FinVec, p: float) -> float:
    """(sum_n |x(n)|^p)^(1/p) for p >= 1."""
    check_exponent(p)
    return power_sum_root(x.abs_values(), p)


def sup_norm(x: FinVec) -> float:
    """max_n |x(n)|, the c_0 norm; 0 for the empty vector."""
    return max(x.abs_values(), default=0.0)


def _top_positions(values: List[float], positions: range, count: int) -> List[int]:
    """Positions of the `count` largest values, ties broken toward smaller positions."""
    if count <= 0:
        return []
    ranked = sorted(positions, key=lambda j: (-values[j], j))
    return ranked[:count]


def schreier_norm(x: FinVec, p: float) -> NormValue:
    """Exact ||x||_{S_p} = sup { mu_p(x, F) : F Schreier }.

    For each support index m taken as the minimum of F, the best set adds the
    m - 1 largest |x(n)|^p with n > m. The earliest best minimum wins ties.

    Args:
        x: Finitely supported vector
        p: Exponent, p >= 1

    Returns:
        NormValue with a Schreier set witness
    """
    check_exponent(p)
    support = x.support()
    if not support:
        return NormValue(value=0.0)

    scale = sup_norm(x)
    powers = [(value / scale) ** p for value in x.abs_values()]
    best_total = -1.0
    best_positions: List[int] = []
    for position, m in enumerate(support):
        chosen = _top_positions(powers, range(position + 1, len(support)), m - 1)
        total = math.fsum([powers[position]] + [powers[j] for j in chosen])
        if total > best_total:
            best_total = total
            best_positions = [position] + chosen

    witness = SchreierSet(indices=tuple(sorted(support[j] for j in best_positions)))
    logger.debug("S_%g norm attained on %s", p, list(witness.indices))
    return NormValue(value=mu_p(x, witness, p), witness=witness)


def _block_sums(values: List[float], support: List[int]) -> List[List[float]]:
    """block[i][c]: |x(support[i])| plus the support[i] - 1 largest values at positions i+1..c-1.

    Entries are defined for i < c <= len(support); the window grows one position
    at a time while a min-heap keeps the chosen values.
    """
    size = len(support)
    block = [[0.0] * (size + 1) for _ in range(size)]
    for i in range(size):
        capacity = support[i] - 1
        chosen: List[float] = []
        running = values[i]
        block[i][i + 1] = running
        for c in range(i + 2, size + 1):
            incoming = values[c - 1]
            if len(chosen) < capacity:
                heapq.heappush(chosen, incoming)
                running += incoming
            elif chosen and incoming > chosen[0]:
                running += incoming - heapq.heapreplace(chosen, incoming)
            block[i][c] = running
    return block


def baernstein_norm(x: FinVec, p: float) -> NormValue:
    """Exact ||x||_{B_p} = sup { beta_p(x, C) : C Schreier chain } by dynamic programming.

    best[c] is the largest sum of block^p over chains using support positions
    >= c. A block starting at position m with cutoff c' > m takes x(m) and the
    largest support[m] - 1 values strictly between m and c'; the next block
    starts at or after c'. Ties go to the smaller first minimum, then the
    smaller cutoff.

    Args:
        x: Finitely supported vector
        p: Exponent, p > 1

    Returns:
        NormValue with a Schreier chain witness

    Raises:
        ValueError: If p <= 1
    """
    check_exponent(p, strict=True)
    support = x.support()
    if not support:
        return NormValue(value=0.0)

    values = x.abs_values()
    size = len(support)
    scale = sup_norm(x)
    block = _block_sums([value / scale for value in values], support)
    # block sums are divided by the largest one so every power lies in [0, 1]
    top = max(max(row) for row in block)

    best = [0.0] * (size + 1)
    start = [size] * (size + 1)
    cut = [size] * size
    for c in range(size - 1, -1, -1):
        leading = -1.0
        for c_next in range(c + 1, size + 1):
            candidate = (block[c][c_next] / top) ** p + best[c_next]
            if candidate > leading:
                leading = candidate
                cut[c] = c_next
        if leading >= best[c + 1]:
            best[c] = leading
            start[c] = c
        else:
            best[c] = best[c + 1]
            start[c] = start[c + 1]

    sets = []
    c = 0
    while c < size:
        m = start[c]
        c_next = cut[m]
        chosen = _top_positions(values, range(m + 1, c_next), support[m] - 1)
        sets.append(SchreierSet(indices=tuple(sorted(support[j] for j in [m] + chosen))))
        c = c_next

    witness = SchreierChain(sets=tuple(sets))
    logger.debug("B_%g norm attained on a chain of %d blocks", p, len(sets))
    return NormValue(value=beta_p(x, witness, p), witness=witness)


def decreasing_rearrangement(x: FinVec) -> FinVec:
    """The vector (y(1), ..., y(s)) of the moduli |x(n)| sorted decreasingly."""
    ordered = sorted(x.abs_values(), reverse=True)
    return FinVec(entries=tuple((i + 1, value) for i, value in enumerate(ordered)))
