"""The linear order on space labels.

    l_1 < B_p < B_q < S_1 < l_p < S_p < l_q < S_q < c_0    (1 < p < q)
"""

from enum import Enum
from functools import cmp_to_key
from typing import Iterable, List

from spaces.labels import SpaceKind, SpaceLabel


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


_SYMBOLS = {Ordering.LESS: "≺", Ordering.EQUAL: "=", Ordering.GREATER: "≻"}


def precedes(Y: SpaceLabel, Z: SpaceLabel) -> bool:
    """Y ⪯ Z, decided by the five mutually exclusive cases on Y's family."""
    kind, p = Y.kind, Y.parameter
    if kind is SpaceKind.LP and p == 1.0:
        return True
    if kind is SpaceKind.BP:
        return (
            (Z.kind is SpaceKind.BP and Z.parameter >= p)
            or (Z.kind is SpaceKind.LP and Z.parameter > 1.0)
            or Z.kind is SpaceKind.SP
            or Z.kind is SpaceKind.C0
        )
    if kind is SpaceKind.LP:
        return (Z.kind in (SpaceKind.LP, SpaceKind.SP) and Z.parameter >= p) or (
            Z.kind is SpaceKind.C0
        )
    if kind is SpaceKind.SP:
        return (
            (Z.kind is SpaceKind.LP and Z.parameter > p)
            or (Z.kind is SpaceKind.SP and Z.parameter >= p)
            or Z.kind is SpaceKind.C0
        )
    return Z.kind is SpaceKind.C0


def strictly_precedes(Y: SpaceLabel, Z: SpaceLabel) -> bool:
    return Y != Z and precedes(Y, Z)


def compare(Y: SpaceLabel, Z: SpaceLabel) -> Ordering:
    if Y == Z:
        return Ordering.EQUAL
    if precedes(Y, Z):
        return Ordering.LESS
    if precedes(Z, Y):
        return Ordering.GREATER
    raise ValueError(f"{Y} and {Z} are not comparable")


def order_symbol(ordering: Ordering) -> str:
    return _SYMBOLS[ordering]


def _as_int(ordering: Ordering) -> int:
    return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[ordering]


def sort_by_order(labels: Iterable[SpaceLabel]) -> List[SpaceLabel]:
    """Enumerate pairwise distinct labels in increasing order.

    Raises:
        ValueError: If a label occurs twice
    """
    members = list(labels)
    if len(set(members)) != len(members):
        raise ValueError("labels must be pairwise distinct")
    return sorted(members, key=cmp_to_key(lambda a, b: _as_int(compare(a, b))))
