"""Compactness rules on composition paths.

A path X_1, ..., X_m of summands stands for a product of strictly singular
operators T_j : X_j -> X_{j+1}. The product is compact as soon as

    B3  some B_p occurs at three positions h < i < j
        (two strictly singular operators on B_p compose to a compact one);
    L2  some l_q occurs at two positions (strictly singular on l_q is compact);
        with the c_0 rule, c_0 behaves the same way;
    S2  some S_r occurs at positions i < j with j < m
        (strictly singular on S_r followed by anything strictly singular out of S_r).
"""

from collections import defaultdict
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from spaces.labels import SpaceKind, SpaceLabel


class RuleName(str, Enum):
    B3 = "B3"
    L2 = "L2"
    S2 = "S2"


_ARITY = {RuleName.B3: 3, RuleName.L2: 2, RuleName.S2: 2}


class RuleCertificate(BaseModel):
    """Positions (1-based, on spaces) where a compactness rule fires."""

    model_config = ConfigDict(frozen=True)

    rule: RuleName
    space: SpaceLabel
    positions: Tuple[int, ...] = Field(description="Increasing 1-based positions in the path")

    @model_validator(mode="after")
    def _shape(self) -> "RuleCertificate":
        if len(self.positions) != _ARITY[self.rule]:
            raise ValueError(f"{self.rule.value} needs {_ARITY[self.rule]} positions")
        if list(self.positions) != sorted(set(self.positions)) or self.positions[0] < 1:
            raise ValueError(f"positions must be increasing and positive: {self.positions}")
        return self


def rule_check_path(path: Sequence[SpaceLabel], c0_rule: bool = False) -> Optional[RuleCertificate]:
    """First rule that fires scanning the path left to right, or None if the path is rule-free.

    Args:
        path: Space labels X_1, ..., X_m
        c0_rule: Treat a repeated c_0 like a repeated l_q

    Returns:
        The certificate completed at the earliest position
    """
    last = len(path)
    seen: Dict[SpaceLabel, List[int]] = defaultdict(list)
    for position, label in enumerate(path, start=1):
        occurrences = seen[label]
        occurrences.append(position)
        if label.kind is SpaceKind.BP and len(occurrences) == 3:
            return RuleCertificate(rule=RuleName.B3, space=label, positions=tuple(occurrences))
        repeats_collapse = label.kind is SpaceKind.LP or (label.kind is SpaceKind.C0 and c0_rule)
        if repeats_collapse and len(occurrences) == 2:
            return RuleCertificate(rule=RuleName.L2, space=label, positions=tuple(occurrences))
        if label.kind is SpaceKind.SP and len(occurrences) >= 2 and position < last:
            return RuleCertificate(
                rule=RuleName.S2, space=label, positions=(occurrences[0], position)
            )
    return None
