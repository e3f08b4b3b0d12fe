"""Nilpotency index, witness chain and the label family of composition paths."""

import logging
from typing import List

from nilpotency.spec import DirectSumSpec, canonicalize
from spaces.labels import SpaceLabel
from spaces.order import sort_by_order

logger = logging.getLogger(__name__)


def nilpotency_index(spec: DirectSumSpec) -> int:
    """k such that the strictly singular mod compact algebra is nilpotent of index k + 1.

    With l = |L| + |L ∪ M|:
        k = l - 1           if N is empty and c_0 is not added,
        k = l               if N is empty and c_0 is added,
        k = l + |N|         if N is non-empty (c_0 is absorbed).
    """
    base = len(spec.L) + len(set(spec.L) | set(spec.M))
    if spec.N:
        return base + len(spec.N)
    if spec.include_c0:
        return base
    return base - 1


def witness_chain(spec: DirectSumSpec) -> List[SpaceLabel]:
    """Increasing enumeration of the complemented subspaces whose inclusions compose non-compactly.

    {B_p : p in L} ∪ {l_q : q in L ∪ M}, plus {S_r : r in N} ∪ {c_0} when N is
    non-empty, plus c_0 when it is added to a sum without Schreier summands.
    """
    labels = [SpaceLabel.bp(p) for p in spec.L]
    labels += [SpaceLabel.lp(q) for q in sorted(set(spec.L) | set(spec.M))]
    labels += [SpaceLabel.sp(r) for r in spec.N]
    if spec.N or spec.include_c0:
        labels.append(SpaceLabel.c0())

    chain = sort_by_order(labels)
    k = nilpotency_index(spec)
    if len(chain) != k + 1:
        raise RuntimeError(f"witness chain has {len(chain)} members, expected {k + 1}")
    return chain


def proof_family(spec: DirectSumSpec) -> List[SpaceLabel]:
    """Summands of the canonical space; every composition path runs through these."""
    canonical = canonicalize(spec)
    labels = [SpaceLabel.bp(p) for p in canonical.L]
    labels += [SpaceLabel.lp(q) for q in canonical.M]
    labels += [SpaceLabel.sp(r) for r in canonical.N]
    if canonical.include_c0:
        labels.append(SpaceLabel.c0())
    return sort_by_order(labels)


def uses_c0_rule(spec: DirectSumSpec) -> bool:
    """A repeated c_0 forces compactness only when c_0 is a summand of the canonical space."""
    return canonicalize(spec).include_c0


def max_rule_free_length(spec: DirectSumSpec) -> int:
    """Longest path of family labels on which no compactness rule fires.

    Each B_p may occur twice, each l_q and c_0 once, each S_r once before the
    final position, and the final position may repeat one S_r.
    """
    canonical = canonicalize(spec)
    length = 2 * len(canonical.L) + len(canonical.M) + len(canonical.N)
    if canonical.N:
        length += 1
    if canonical.include_c0:
        length += 1
    return length


def max_rule_free_path(spec: DirectSumSpec) -> List[SpaceLabel]:
    """An explicit rule-free path of length max_rule_free_length(spec)."""
    canonical = canonicalize(spec)
    path: List[SpaceLabel] = []
    for p in canonical.L:
        path += [SpaceLabel.bp(p), SpaceLabel.bp(p)]
    path += [SpaceLabel.lp(q) for q in canonical.M]
    if canonical.include_c0:
        path.append(SpaceLabel.c0())
    schreier = [SpaceLabel.sp(r) for r in canonical.N]
    path += schreier
    if schreier:
        path.append(schreier[0])
    logger.debug("Maximal rule-free path of length %d", len(path))
    return path
