"""Output helpers: fixed significant digits for text and JSON."""

import json
from typing import Any

from pydantic import BaseModel

from config.settings import SIGNIFICANT_DIGITS


def format_number(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """`value` with `digits` significant digits."""
    return f"{value:.{digits}g}"


def round_floats(data: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """Round every float nested in dicts and lists to `digits` significant digits."""
    if isinstance(data, bool):
        return data
    if isinstance(data, float):
        return float(format_number(data, digits))
    if isinstance(data, dict):
        return {key: round_floats(value, digits) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [round_floats(value, digits) for value in data]
    return data


def to_json(payload: Any) -> str:
    """JSON text of a model or plain data, floats rounded for display."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(round_floats(payload), indent=2, ensure_ascii=False)
