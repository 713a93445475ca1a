"""Serialization helpers: exact rationals as "p/q" strings, isolated roots as
{"lo": ..., "hi": ...}, and recursive conversion of result objects to plain
JSON-ready structures.  Every rational round-trips losslessly through the
text form."""

from __future__ import annotations

import enum
import math
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .exactpoly import IsolatedRoot


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"expected an exact rational like 1/3, got {text!r}")
    return Fraction(text)


def jsonable(obj):
    """Recursively convert package values to JSON-encodable structures."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, IsolatedRoot):
        out = {"lo": frac_str(obj.lo), "hi": frac_str(obj.hi)}
        if obj.is_exact:
            out["exact"] = True
        return out
    if isinstance(obj, enum.Enum):
        return obj.value
    if is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, "__iter__"):
        return [jsonable(x) for x in obj]
    return str(obj)
