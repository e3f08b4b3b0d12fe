"""Direct-sum specifications (L, M, N, c0) and their text format.

The space is (⊕_{p in L} B_p) ⊕ (⊕_{q in M} l_q) ⊕ (⊕_{r in N} S_r), optionally ⊕ c_0.
"""

import math
from typing import Dict, Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from spaces.labels import format_parameter

_TRUE = {"true", "yes", "1", "on"}
_FALSE = {"false", "no", "0", "off", ""}


def _as_parameter_set(values: Iterable[float]) -> Tuple[float, ...]:
    members = tuple(sorted({float(value) for value in values}))
    for value in members:
        if not math.isfinite(value):
            raise ValueError(f"parameters must be finite, got {value}")
    return members


class DirectSumSpec(BaseModel):
    """Index sets L ⊂ (1, ∞), M, N ⊂ [1, ∞), and whether c_0 is added."""

    model_config = ConfigDict(frozen=True)

    L: Tuple[float, ...] = Field(default=(), description="Baernstein exponents, each > 1")
    M: Tuple[float, ...] = Field(default=(), description="l_q exponents, each >= 1")
    N: Tuple[float, ...] = Field(default=(), description="Schreier exponents, each >= 1")
    include_c0: bool = Field(default=False, description="Add a c_0 summand")

    @field_validator("L", "M", "N", mode="before")
    @classmethod
    def _deduplicate(cls, values: Iterable[float]) -> Tuple[float, ...]:
        return _as_parameter_set(values)

    @field_validator("L")
    @classmethod
    def _baernstein_range(cls, values: Tuple[float, ...]) -> Tuple[float, ...]:
        for p in values:
            if p <= 1.0:
                raise ValueError(f"L needs parameters > 1, got {p}")
        return values

    @field_validator("M", "N")
    @classmethod
    def _unit_range(cls, values: Tuple[float, ...]) -> Tuple[float, ...]:
        for p in values:
            if p < 1.0:
                raise ValueError(f"M and N need parameters >= 1, got {p}")
        return values

    @model_validator(mode="after")
    def _not_all_empty(self) -> "DirectSumSpec":
        if not (self.L or self.M or self.N or self.include_c0):
            raise ValueError("L, M and N are all empty and c0 is not included")
        return self


def canonicalize(spec: DirectSumSpec) -> DirectSumSpec:
    """Replace M by M \\ L, and drop c_0 when N is non-empty (S_r ⊕ c_0 ≅ S_r).

    Neither change alters the isomorphism class of the space.
    """
    return DirectSumSpec(
        L=spec.L,
        M=tuple(q for q in spec.M if q not in spec.L),
        N=spec.N,
        include_c0=spec.include_c0 and not spec.N,
    )


def _parse_values(key: str, raw: str) -> Tuple[float, ...]:
    values = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(float(token))
        except ValueError:
            raise ValueError(f"malformed parameter {token!r} in {key}") from None
    return tuple(values)


def parse_spec(text: str) -> DirectSumSpec:
    """Parse `L=2,3; M=1; N=1,2; c0=false`; missing keys mean empty / false.

    Raises:
        ValueError: On unknown or repeated keys, malformed numbers or invalid ranges
    """
    fields: Dict[str, object] = {}
    for clause in text.split(";"):
        clause = clause.strip()
        if not clause:
            continue
        if "=" not in clause:
            raise ValueError(f"expected key=value, got {clause!r}")
        key, raw = (part.strip() for part in clause.split("=", 1))
        name = {"l": "L", "m": "M", "n": "N", "c0": "include_c0"}.get(key.lower())
        if name is None:
            raise ValueError(f"unknown key {key!r}; expected L, M, N or c0")
        if name in fields:
            raise ValueError(f"key {key!r} given twice")
        if name == "include_c0":
            flag = raw.lower()
            if flag not in _TRUE | _FALSE:
                raise ValueError(f"c0 must be true or false, got {raw!r}")
            fields[name] = flag in _TRUE
        else:
            fields[name] = _parse_values(key, raw)
    return DirectSumSpec(**{"L": (), "M": (), "N": (), "include_c0": False, **fields})


def format_spec(spec: DirectSumSpec) -> str:
    """Text form accepted by parse_spec."""

    def joined(values: Tuple[float, ...]) -> str:
        return ",".join(format_parameter(value) for value in values)

    c0 = "true" if spec.include_c0 else "false"
    return f"L={joined(spec.L)}; M={joined(spec.M)}; N={joined(spec.N)}; c0={c0}"
