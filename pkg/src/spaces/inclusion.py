"""Formal inclusion maps between space labels: routes, constants and classification.

Every inclusion Y ≺ Z is routed through a fixed chain of primitive links, each
with a proven constant; the route constant is the product. Constants are upper
bounds only.
"""

import logging
import math
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from seqvec.schreier import check_exponent
from spaces.labels import SpaceKind, SpaceLabel
from spaces.order import precedes, strictly_precedes

logger = logging.getLogger(__name__)


class LinkId(str, Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P7 = "P7"
    P8 = "P8"
    P9 = "P9"


PRIMITIVE_LINKS: Dict[LinkId, str] = {
    LinkId.P1: "l_p -> l_q (p < q), C = 1: monotonicity of l_p norms",
    LinkId.P2: "l_1 -> B_p, C = 1: subadditivity of the B_p norm on a normalized basis",
    LinkId.P3: "B_p -> B_q (p < q), C = 1: beta_q(x, C) <= beta_p(x, C) for every chain",
    LinkId.P4: "B_p -> S_1, C = 1: mu_1(x, F) = beta_p(x, {F})",
    LinkId.P5: "S_p -> S_q (p < q), C = 1: mu_q(x, F) <= mu_p(x, F) for every set",
    LinkId.P6: "l_p -> S_p, C = 1: mu_p(x, F) <= ||x||_{l_p}",
    LinkId.P7: "S_p -> l_q (p < q), C = J(p, q): dyadic block bound on decreasing vectors",
    LinkId.P8: "l_p -> c_0, C = 1: sup norm <= l_p norm",
    LinkId.P9: "S_p -> c_0, C = 1: coordinate functionals on S_p have norm 1",
}


class RouteLink(BaseModel):
    """One primitive formal inclusion used along a route."""

    model_config = ConfigDict(frozen=True)

    link: LinkId
    source: SpaceLabel
    target: SpaceLabel
    constant: float = Field(gt=0.0)


class InclusionAnswer(BaseModel):
    """Whether Y ⪯ Z, and if so the inclusion constant and its route."""

    model_config = ConfigDict(frozen=True)

    source: SpaceLabel
    target: SpaceLabel
    comparable: bool = Field(description="True iff source ⪯ target")
    constant: Optional[float] = Field(default=None, description="Upper bound for C_{Y,Z}")
    route: Tuple[RouteLink, ...] = ()
    strictly_singular: Optional[bool] = None
    compact: Optional[bool] = None

    @model_validator(mode="after")
    def _consistent(self) -> "InclusionAnswer":
        if self.constant is not None and not self.route and self.source != self.target:
            raise ValueError("a constant needs a route unless the inclusion is the identity")
        if self.strictly_singular and self.source != self.target and self.compact is not False:
            raise ValueError("strictly singular formal inclusions along ≺ are never compact")
        return self


class Finding(str, Enum):
    YES = "yes"
    NO = "no"
    NOT_ESTABLISHED = "not established"
    NOT_APPLICABLE = "not applicable"


class PairClassification(BaseModel):
    """What is known about operators from Y to Z; nothing is extrapolated."""

    model_config = ConfigDict(frozen=True)

    source: SpaceLabel
    target: SpaceLabel
    formal_inclusion: Finding
    inclusion_strictly_singular: Finding
    inclusion_compact: Finding
    strictly_singular_noncompact_operators: Finding
    all_operators_compact: Finding
    notes: Tuple[str, ...] = ()


def jameson_constant(p: float, q: float) -> float:
    """J(p, q) = ((2^(q/p) - 1) / (2^((q-p)/p) - 1))^(1/q), the S_p -> l_q bound.

    Raises:
        ValueError: Unless 1 <= p < q
    """
    check_exponent(p)
    if not q > p or not math.isfinite(q):
        raise ValueError(f"need q > p, got p={p}, q={q}")
    ratio = (2.0 ** (q / p) - 1.0) / (2.0 ** ((q - p) / p) - 1.0)
    return ratio ** (1.0 / q)


def _link(link: LinkId, source: SpaceLabel, target: SpaceLabel) -> RouteLink:
    constant = 1.0
    if link is LinkId.P7:
        constant = jameson_constant(source.parameter, target.parameter)
    return RouteLink(link=link, source=source, target=target, constant=constant)


def route(Y: SpaceLabel, Z: SpaceLabel) -> List[RouteLink]:
    """Fixed chain of primitive links realising the inclusion Y ≺ Z; empty for Y = Z.

    Raises:
        ValueError: If Y ⪯ Z fails
    """
    if Y == Z:
        return []
    if not precedes(Y, Z):
        raise ValueError(f"{Y} does not precede {Z}")

    s1 = SpaceLabel.sp(1.0)
    if Y.kind is SpaceKind.LP:
        if Z.kind is SpaceKind.LP:
            return [_link(LinkId.P1, Y, Z)]
        if Z.kind is SpaceKind.BP:
            return [_link(LinkId.P2, Y, Z)]
        if Z.kind is SpaceKind.SP:
            if Z.parameter == Y.parameter:
                return [_link(LinkId.P6, Y, Z)]
            middle = SpaceLabel.sp(Y.parameter)
            return [_link(LinkId.P6, Y, middle), _link(LinkId.P5, middle, Z)]
        return [_link(LinkId.P8, Y, Z)]

    if Y.kind is SpaceKind.BP:
        if Z.kind is SpaceKind.BP:
            return [_link(LinkId.P3, Y, Z)]
        if Z.kind is SpaceKind.LP:
            return [_link(LinkId.P4, Y, s1), _link(LinkId.P7, s1, Z)]
        if Z.kind is SpaceKind.SP:
            if Z.parameter == 1.0:
                return [_link(LinkId.P4, Y, Z)]
            return [_link(LinkId.P4, Y, s1), _link(LinkId.P5, s1, Z)]
        return [_link(LinkId.P4, Y, s1), _link(LinkId.P9, s1, Z)]

    # Y = S_p; c_0 precedes only itself
    if Z.kind is SpaceKind.LP:
        return [_link(LinkId.P7, Y, Z)]
    if Z.kind is SpaceKind.SP:
        return [_link(LinkId.P5, Y, Z)]
    return [_link(LinkId.P9, Y, Z)]


def inclusion_constant(Y: SpaceLabel, Z: SpaceLabel) -> InclusionAnswer:
    """Constant C with ||x||_Z <= C ||x||_Y, with its route, when Y ⪯ Z.

    Args:
        Y: Source space
        Z: Target space

    Returns:
        InclusionAnswer; non-comparable pairs carry no constant
    """
    if not precedes(Y, Z):
        return InclusionAnswer(source=Y, target=Z, comparable=False)
    if Y == Z:
        return InclusionAnswer(
            source=Y, target=Z, comparable=True, constant=1.0, strictly_singular=False,
            compact=False,
        )
    links = route(Y, Z)
    constant = math.prod(link.constant for link in links)
    logger.debug("Route %s -> %s: %s", Y, Z, [link.link.value for link in links])
    return InclusionAnswer(
        source=Y,
        target=Z,
        comparable=True,
        constant=constant,
        route=tuple(links),
        strictly_singular=True,
        compact=False,
    )


def classify_pair(Y: SpaceLabel, Z: SpaceLabel) -> PairClassification:
    """Established facts about operators from Y to Z.

    Args:
        Y: Source space
        Z: Target space

    Returns:
        PairClassification; anything not proven is "not established"
    """
    if Y == Z:
        collapses = Y.kind in (SpaceKind.LP, SpaceKind.C0)
        notes = ["identity map; not strictly singular on an infinite-dimensional space"]
        if collapses:
            notes.append(f"every strictly singular operator on {Y.display()} is compact")
        else:
            notes.append(f"the strictly singular mod compact algebra of {Y.display()} has index 2")
        return PairClassification(
            source=Y,
            target=Z,
            formal_inclusion=Finding.YES,
            inclusion_strictly_singular=Finding.NO,
            inclusion_compact=Finding.NO,
            strictly_singular_noncompact_operators=Finding.NO if collapses else Finding.YES,
            all_operators_compact=Finding.NO,
            notes=tuple(notes),
        )

    if strictly_precedes(Y, Z):
        path = " -> ".join(link.link.value for link in route(Y, Z))
        return PairClassification(
            source=Y,
            target=Z,
            formal_inclusion=Finding.YES,
            inclusion_strictly_singular=Finding.YES,
            inclusion_compact=Finding.NO,
            strictly_singular_noncompact_operators=Finding.YES,
            all_operators_compact=Finding.NO,
            notes=(
                f"route {path}",
                "the inclusion maps the unit vector basis onto the unit vector basis",
            ),
        )

    if Y.kind is SpaceKind.LP and Z.kind is SpaceKind.LP:
        # Pitt: every operator l_p -> l_q with q < p is compact
        return PairClassification(
            source=Y,
            target=Z,
            formal_inclusion=Finding.NO,
            inclusion_strictly_singular=Finding.NOT_APPLICABLE,
            inclusion_compact=Finding.NOT_APPLICABLE,
            strictly_singular_noncompact_operators=Finding.NO,
            all_operators_compact=Finding.YES,
            notes=("Pitt's theorem: every operator from l_p to l_q is compact for q < p",),
        )

    both_baernstein = Y.kind is SpaceKind.BP and Z.kind is SpaceKind.BP
    notes = []
    if both_baernstein:
        notes.append(
            "compose the inclusion B_p -> l_q with a complemented copy of l_q in B_q"
        )
    return PairClassification(
        source=Y,
        target=Z,
        formal_inclusion=Finding.NOT_ESTABLISHED,
        inclusion_strictly_singular=Finding.NOT_ESTABLISHED,
        inclusion_compact=Finding.NOT_ESTABLISHED,
        strictly_singular_noncompact_operators=(
            Finding.YES if both_baernstein else Finding.NOT_ESTABLISHED
        ),
        all_operators_compact=Finding.NO if both_baernstein else Finding.NOT_ESTABLISHED,
        notes=tuple(notes),
    )
