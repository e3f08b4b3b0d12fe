"""Normalized block vectors x_k and a probe for failures of domination.

x_k spreads 2^(1-k) evenly over the images of the dyadic block
{2^(k-1), ..., 2^k - 1} under an increasing index map. Its support is a
Schreier set, so x_k is a unit vector in every B_p.
"""

import logging
import math
from typing import Callable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from config.constants import DOMINATION_MARGIN, PROBE_GEOMETRIC_RATIOS
from norms.evaluator import baernstein_norm
from seqvec.schreier import SchreierChain, check_exponent
from seqvec.vectors import FinVec
from verify.sampling import default_seed, random_magnitudes, trial_rng

logger = logging.getLogger(__name__)

MAX_PROBE_BLOCKS = 6

IndexMap = Union[Callable[[int], int], Mapping[int, int], None]


def _index_map(subseq: IndexMap) -> Callable[[int], int]:
    if subseq is None:
        return lambda j: j
    if isinstance(subseq, Mapping):

        def lookup(j: int) -> int:
            if j not in subseq:
                raise ValueError(f"index map is undefined at {j}")
            return subseq[j]

        return lookup
    return subseq


def make_xk(k: int, subseq: IndexMap = None, p: float = 2.0) -> FinVec:
    """x_k = 2^(1-k) * sum_{j = 2^(k-1)}^{2^k - 1} e_{subseq(j)}.

    Args:
        k: Block number, k >= 1
        subseq: Increasing index map given as a callable or a mapping; identity when None
        p: Exponent of the ambient B_p, p > 1. It is only range-checked: the vector
            is the same for every p and is a unit vector in each B_p

    Returns:
        FinVec with value 2^(1-k) on the mapped block

    Raises:
        ValueError: If p <= 1, k < 1 or the map is not strictly increasing with
            subseq(j) >= j
    """
    check_exponent(p, strict=True)
    if k < 1:
        raise ValueError(f"block number must be >= 1, got {k}")
    index = _index_map(subseq)
    block = range(2 ** (k - 1), 2**k)
    images = [index(j) for j in block]
    for j, image in zip(block, images):
        if image < j:
            raise ValueError(f"index map must satisfy subseq(j) >= j, got subseq({j}) = {image}")
    if any(later <= earlier for earlier, later in zip(images, images[1:])):
        raise ValueError(f"index map is not strictly increasing on {list(block)}: {images}")
    value = 2.0 ** (1 - k)
    return FinVec(entries=tuple((image, value) for image in images))


def combine_blocks(coefficients: Sequence[float], subseq: IndexMap = None) -> FinVec:
    """sum_k a_k x_k for k = 1, ..., len(coefficients)."""
    total = FinVec()
    for k, a in enumerate(coefficients, start=1):
        total = total + make_xk(k, subseq).scaled(a)
    return total


class DominationWitness(BaseModel):
    """Coefficients a with ||sum a_k y_k||_{B_q} > C ||sum a_k x_k||_{B_p}."""

    model_config = ConfigDict(frozen=True)

    p: float
    q: float
    constant: float = Field(gt=0.0, description="The domination constant C that fails")
    coefficients: Tuple[float, ...] = Field(description="Block coefficients a_1, ..., a_K")
    profile: str = Field(description="How the coefficients were generated")
    vector: FinVec = Field(description="The combined block vector")
    source_norm: float = Field(description="||sum a_k x_k||_{B_p}")
    target_norm: float = Field(description="||sum a_k y_k||_{B_q}")
    target_witness: SchreierChain
    ratio: float


def _candidates(
    blocks: int, budget: int, seed: int
) -> Iterator[Tuple[str, List[float]]]:
    structured = [("constant", [1.0] * blocks)]
    for r in PROBE_GEOMETRIC_RATIOS:
        structured.append((f"geometric {r:g}", [r**k for k in range(blocks)]))
    for attempt in range(budget):
        if attempt < len(structured):
            yield structured[attempt]
        else:
            rng = trial_rng(seed, attempt)
            yield "random", [float(a) for a in random_magnitudes(rng, blocks)]


def domination_probe(
    p: float,
    q: float,
    K: int,
    C: float,
    budget: int,
    seed: Optional[int] = None,
) -> Optional[DominationWitness]:
    """Search block coefficients on which B_q fails to be C-dominated by B_p.

    Identity index maps are used, so y_k = x_k as vectors and the search
    compares two norms of the same combination. Constant and geometric
    profiles are tried before random ones. A candidate counts only when the
    B_q value recomputed on its chain exceeds C (1 + 1e-9) times the B_p
    norm. Finding nothing is not a proof of domination.

    Args:
        p: Exponent of the dominating space, p > 1
        q: Exponent of the dominated space, q > 1
        K: Number of blocks, 1 <= K <= 6
        C: Domination constant, C > 0
        budget: Number of coefficient vectors to try
        seed: Seed of the random candidates; derived from the arguments when None

    Returns:
        The first witness found, or None

    Raises:
        ValueError: For invalid exponents, constant, block count or budget
    """
    check_exponent(p, strict=True)
    check_exponent(q, strict=True)
    if not 1 <= K <= MAX_PROBE_BLOCKS:
        raise ValueError(f"block count must lie in 1..{MAX_PROBE_BLOCKS}, got {K}")
    if not C > 0 or not math.isfinite(C):
        raise ValueError(f"domination constant must be positive, got {C}")
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    seed = default_seed("probe", p, q, K, C) if seed is None else seed

    for profile, coefficients in _candidates(K, budget, seed):
        z = combine_blocks(coefficients)
        source = baernstein_norm(z, p)
        target = baernstein_norm(z, q)
        if source.value == 0.0:
            continue
        if target.value > C * (1.0 + DOMINATION_MARGIN) * source.value:
            ratio = target.value / source.value
            logger.info("Domination fails for B_%g -> B_%g at C=%g: %s profile, ratio %.12g",
                        p, q, C, profile, ratio)
            return DominationWitness(
                p=p,
                q=q,
                constant=C,
                coefficients=tuple(coefficients),
                profile=profile,
                vector=z,
                source_norm=source.value,
                target_norm=target.value,
                target_witness=target.witness,
                ratio=ratio,
            )
        if target.value > C * source.value:
            logger.warning("Rejected %s candidate: ratio within the acceptance margin", profile)

    logger.info("No domination failure for B_%g -> B_%g at C=%g within %d candidates",
                p, q, C, budget)
    return None
