"""Certification of the nilpotency index of a finite direct sum.

A product of k + 1 strictly singular operators is compact iff every entry of its
operator matrix is, and each entry expands into a sum over label paths of
length k + 2. The certifier shows every such path triggers a compactness rule
(by exhaustive enumeration when small, always by the counting bound) and that
the witness chain of length k + 1 is rule-free and strictly increasing, its
consecutive formal inclusions being strictly singular and their composite
non-compact.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from config.constants import CERTIFICATE_SAMPLE_SIZE
from config.settings import EXHAUSTIVE_LIMIT, WORKERS
from nilpotency.index import (
    max_rule_free_length,
    max_rule_free_path,
    nilpotency_index,
    proof_family,
    uses_c0_rule,
    witness_chain,
)
from nilpotency.rules import RuleCertificate, rule_check_path
from nilpotency.spec import DirectSumSpec, canonicalize
from spaces.inclusion import Finding, InclusionAnswer, classify_pair, inclusion_constant
from spaces.labels import SpaceLabel
from spaces.order import strictly_precedes

logger = logging.getLogger(__name__)

AXIOMS = (
    "every strictly singular operator on l_q (and on c_0) is compact",
    "every composition of two strictly singular operators on B_p is compact",
    "TU is compact whenever U on S_r and T out of S_r are strictly singular",
    "a formal inclusion Y -> Z with Y ≺ Z is bounded and strictly singular",
)

COMPLETENESS_NOTE = (
    "non-compactness is claimed for the witness chain only; other rule-free paths are not claimed"
)


class CertReport(BaseModel):
    """Outcome of certifying the nilpotency index of one direct sum."""

    model_config = ConfigDict(frozen=True)

    spec: DirectSumSpec
    canonical_spec: DirectSumSpec
    k: int = Field(ge=0)
    witness_chain: Tuple[SpaceLabel, ...]
    witness_links: Tuple[InclusionAnswer, ...]
    proof_family: Tuple[SpaceLabel, ...]
    max_rule_free_length: int
    max_rule_free_path: Tuple[SpaceLabel, ...]
    exhaustive_paths_checked: Optional[int] = None
    all_long_paths_forced: bool
    index_matches_counting_bound: bool
    witness_rule_free: bool
    witness_strictly_increasing: bool
    witness_links_strictly_singular: bool
    max_path_rule_free: bool
    sample_certificates: Tuple[RuleCertificate, ...] = ()
    unforced_path: Optional[Tuple[SpaceLabel, ...]] = None
    axioms: Tuple[str, ...] = AXIOMS
    completeness_note: str = COMPLETENESS_NOTE

    @computed_field
    @property
    def nilpotency_index(self) -> int:
        return self.k + 1

    @computed_field
    @property
    def passed(self) -> bool:
        return all(
            (
                self.all_long_paths_forced,
                self.index_matches_counting_bound,
                self.witness_rule_free,
                self.witness_strictly_increasing,
                self.witness_links_strictly_singular,
                self.max_path_rule_free,
            )
        )


def _scan_prefix(
    args: Tuple[SpaceLabel, Tuple[SpaceLabel, ...], int, bool, int],
) -> Tuple[int, Optional[Tuple[SpaceLabel, ...]], List[RuleCertificate]]:
    """Check every path of the given length that starts with `first`."""
    first, family, length, c0_rule, keep = args
    checked = 0
    certificates: List[RuleCertificate] = []
    for tail in product(family, repeat=length - 1):
        path = (first,) + tail
        checked += 1
        certificate = rule_check_path(path, c0_rule)
        if certificate is None:
            return checked, path, certificates
        if len(certificates) < keep:
            certificates.append(certificate)
    return checked, None, certificates


def enumerate_paths(
    family: Sequence[SpaceLabel], length: int, c0_rule: bool, workers: int = 1
) -> Tuple[int, Optional[Tuple[SpaceLabel, ...]], List[RuleCertificate]]:
    """Rule-check every path of `length` labels over `family`, split by first label.

    Returns:
        (paths checked, first unforced path or None, sample of certificates)
    """
    tasks = [(first, tuple(family), length, c0_rule, CERTIFICATE_SAMPLE_SIZE) for first in family]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_prefix, tasks))
    else:
        results = [_scan_prefix(task) for task in tasks]

    checked = 0
    unforced = None
    certificates: List[RuleCertificate] = []
    for count, path, sample in results:
        checked += count
        if unforced is None and path is not None:
            unforced = path
        certificates.extend(sample[: CERTIFICATE_SAMPLE_SIZE - len(certificates)])
    return checked, unforced, certificates


def certify(
    spec: DirectSumSpec,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
    workers: int = WORKERS,
) -> CertReport:
    """Certify that the strictly singular mod compact algebra has index k + 1.

    Args:
        spec: Direct-sum specification
        exhaustive_limit: Enumerate all length-(k+2) paths when their number is at most this
        workers: Processes used for the enumeration

    Returns:
        CertReport with every check recorded
    """
    canonical = canonicalize(spec)
    k = nilpotency_index(spec)
    chain = witness_chain(spec)
    family = proof_family(spec)
    c0_rule = uses_c0_rule(spec)
    longest = max_rule_free_length(spec)
    longest_path = max_rule_free_path(spec)

    links = [inclusion_constant(a, b) for a, b in zip(chain, chain[1:])]
    links_singular = all(
        classify_pair(a, b).inclusion_strictly_singular is Finding.YES
        for a, b in zip(chain, chain[1:])
    )

    path_count = len(family) ** (k + 2)
    checked = None
    unforced = None
    certificates: List[RuleCertificate] = []
    if path_count <= exhaustive_limit:
        checked, unforced, certificates = enumerate_paths(family, k + 2, c0_rule, workers)
        forced = unforced is None
        logger.info("Checked %d paths of length %d: all forced=%s", checked, k + 2, forced)
    else:
        # a path of length k + 2 exceeds every rule-free length
        forced = longest < k + 2
        logger.info("%d paths exceed the limit %d; using the counting bound", path_count,
                    exhaustive_limit)

    return CertReport(
        spec=spec,
        canonical_spec=canonical,
        k=k,
        witness_chain=tuple(chain),
        witness_links=tuple(links),
        proof_family=tuple(family),
        max_rule_free_length=longest,
        max_rule_free_path=tuple(longest_path),
        exhaustive_paths_checked=checked,
        all_long_paths_forced=forced,
        index_matches_counting_bound=longest == k + 1 and len(longest_path) == longest,
        witness_rule_free=rule_check_path(chain, c0_rule) is None,
        witness_strictly_increasing=all(
            strictly_precedes(a, b) for a, b in zip(chain, chain[1:])
        ),
        witness_links_strictly_singular=links_singular,
        max_path_rule_free=rule_check_path(longest_path, c0_rule) is None,
        sample_certificates=tuple(certificates),
        unforced_path=unforced,
    )
