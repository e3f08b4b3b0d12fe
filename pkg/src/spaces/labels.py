"""Labels for the spaces l_p, B_p, S_p and c_0, and their text format."""

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SpaceKind(str, Enum):
    LP = "l"
    BP = "b"
    SP = "s"
    C0 = "c0"


_DISPLAY = {SpaceKind.LP: "ℓ", SpaceKind.BP: "B", SpaceKind.SP: "S"}


class SpaceLabel(BaseModel):
    """One member of the family {B_p : p > 1} ∪ {l_p : p >= 1} ∪ {S_p : p >= 1} ∪ {c_0}."""

    model_config = ConfigDict(frozen=True)

    kind: SpaceKind = Field(description="Space family")
    parameter: Optional[float] = Field(
        default=None, description="Exponent p; absent for c_0"
    )

    @model_validator(mode="after")
    def _parameter_range(self) -> "SpaceLabel":
        p = self.parameter
        if self.kind is SpaceKind.C0:
            if p is not None:
                raise ValueError("c0 takes no parameter")
            return self
        if p is None or not math.isfinite(p):
            raise ValueError(f"{self.kind.value} needs a finite parameter, got {p}")
        if self.kind is SpaceKind.BP and p <= 1.0:
            raise ValueError(f"B_p needs p > 1, got {p}")
        if p < 1.0:
            raise ValueError(f"{self.kind.value}:p needs p >= 1, got {p}")
        return self

    @classmethod
    def lp(cls, p: float) -> "SpaceLabel":
        return cls(kind=SpaceKind.LP, parameter=p)

    @classmethod
    def bp(cls, p: float) -> "SpaceLabel":
        return cls(kind=SpaceKind.BP, parameter=p)

    @classmethod
    def sp(cls, p: float) -> "SpaceLabel":
        return cls(kind=SpaceKind.SP, parameter=p)

    @classmethod
    def c0(cls) -> "SpaceLabel":
        return cls(kind=SpaceKind.C0, parameter=None)

    def display(self) -> str:
        """Mathematical name, e.g. ℓ_2 or B_1.5."""
        if self.kind is SpaceKind.C0:
            return "c_0"
        return f"{_DISPLAY[self.kind]}_{format_parameter(self.parameter)}"

    def __str__(self) -> str:
        return format_label(self)


def format_parameter(p: float) -> str:
    """Shortest decimal that parses back to p, without a trailing '.0'."""
    text = repr(float(p))
    return text[:-2] if text.endswith(".0") else text


def format_label(label: SpaceLabel) -> str:
    """Text form `l:p`, `b:p`, `s:p` or `c0`."""
    if label.kind is SpaceKind.C0:
        return "c0"
    return f"{label.kind.value}:{format_parameter(label.parameter)}"


def parse_label(text: str) -> SpaceLabel:
    """Parse `l:p`, `b:p`, `s:p` or `c0` (case-insensitive).

    Raises:
        ValueError: On an unknown family or an invalid parameter
    """
    token = text.strip().lower()
    if token == "c0":
        return SpaceLabel.c0()
    if ":" not in token:
        raise ValueError(f"expected l:p, b:p, s:p or c0, got {text!r}")
    family, raw = token.split(":", 1)
    try:
        kind = SpaceKind(family.strip())
    except ValueError:
        raise ValueError(f"unknown space family {family!r} in {text!r}") from None
    if kind is SpaceKind.C0:
        raise ValueError("c0 takes no parameter")
    try:
        p = float(raw.strip())
    except ValueError:
        raise ValueError(f"malformed parameter {raw.strip()!r} in {text!r}") from None
    return SpaceLabel(kind=kind, parameter=p)
