"""Finitely supported sequences and their text/JSON formats."""

import json
import logging
import math
from typing import Any, Dict, Iterable, List, Mapping, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

logger = logging.getLogger(__name__)


class FinVec(BaseModel):
    """Finitely supported real sequence, stored in canonical sparse form.

    Indices are 1-based exactly as in the sequence-space definitions; absent
    coordinates read as 0.
    """

    model_config = ConfigDict(frozen=True)

    entries: Tuple[Tuple[int, float], ...] = Field(
        default=(),
        description="(index, coefficient) pairs; indices >= 1, strictly increasing, no zeros",
    )

    _lookup: Dict[int, float] = PrivateAttr(default_factory=dict)

    @field_validator("entries")
    @classmethod
    def _canonical_form(
        cls, entries: Tuple[Tuple[int, float], ...]
    ) -> Tuple[Tuple[int, float], ...]:
        seen = set()
        kept = []
        for index, value in entries:
            if index < 1:
                raise ValueError(f"index must be a positive integer, got {index}")
            if index in seen:
                raise ValueError(f"duplicate index {index}")
            if not math.isfinite(value):
                raise ValueError(f"coefficient at index {index} is not finite: {value}")
            seen.add(index)
            if value != 0.0:
                kept.append((index, float(value)))
        kept.sort()
        return tuple(kept)

    def model_post_init(self, __context: Any) -> None:
        self._lookup = dict(self.entries)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, float]) -> "FinVec":
        """Build a vector from an index -> coefficient mapping."""
        return cls(entries=tuple(mapping.items()))

    @classmethod
    def unit(cls, n: int) -> "FinVec":
        """The unit vector e_n."""
        return cls(entries=((n, 1.0),))

    def support(self) -> List[int]:
        """Indices carrying a non-zero coefficient, increasing."""
        return [index for index, _ in self.entries]

    def coefficient(self, n: int) -> float:
        """The n-th coordinate x(n)."""
        return self._lookup.get(n, 0.0)

    def abs_values(self) -> List[float]:
        """|x(n)| for n in support(), same order."""
        return [abs(value) for _, value in self.entries]

    def is_empty(self) -> bool:
        return not self.entries

    def scaled(self, t: float) -> "FinVec":
        return FinVec(entries=tuple((index, t * value) for index, value in self.entries))

    def with_signs_flipped(self, indices: Iterable[int]) -> "FinVec":
        """Negate the coefficients at the given indices."""
        flip = set(indices)
        return FinVec(
            entries=tuple(
                (index, -value if index in flip else value) for index, value in self.entries
            )
        )

    def __add__(self, other: "FinVec") -> "FinVec":
        total = dict(self._lookup)
        for index, value in other.entries:
            total[index] = total.get(index, 0.0) + value
        return FinVec.from_mapping(total)


def _parse_pair(token: str) -> Tuple[int, float]:
    if ":" not in token:
        raise ValueError(f"expected 'index:value', got {token!r}")
    raw_index, raw_value = token.split(":", 1)
    try:
        index = int(raw_index.strip())
    except ValueError:
        raise ValueError(f"malformed index {raw_index.strip()!r}") from None
    try:
        value = float(raw_value.strip())
    except ValueError:
        raise ValueError(f"malformed coefficient {raw_value.strip()!r}") from None
    return index, value


def parse_vector(source: Union[str, Mapping[str, Any], FinVec]) -> FinVec:
    """Parse a vector from text or structured input.

    Accepted forms are the pair list ``"1:1,3:-2"`` and the JSON document
    ``{"entries": [[1, 1], [3, -2]]}`` (as text or as an already-decoded mapping).

    Args:
        source: Vector in one of the accepted forms

    Returns:
        Canonical FinVec (zero coefficients dropped)

    Raises:
        ValueError: On a duplicate or non-positive index, an empty pair or a malformed
            numeral
    """
    if isinstance(source, FinVec):
        return source
    if isinstance(source, Mapping):
        return FinVec.model_validate(source)

    text = source.strip()
    if text.startswith("{"):
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"malformed vector JSON: {e}") from None
        return FinVec.model_validate(document)
    if not text:
        return FinVec()

    tokens = text.split(",")
    if any(not token.strip() for token in tokens):
        raise ValueError(f"malformed vector {text!r}: empty index:value pair")
    pairs = [_parse_pair(token) for token in tokens]
    vector = FinVec(entries=tuple(pairs))
    logger.debug("Parsed vector with support size %d", len(vector.entries))
    return vector


def format_vector(x: FinVec) -> str:
    """Text form accepted by parse_vector."""
    return ",".join(f"{index}:{value!r}" for index, value in x.entries)
