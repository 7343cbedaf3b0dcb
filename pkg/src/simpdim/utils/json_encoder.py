"""JSON encoding of exact results (rationals, high-precision decimals, f-vectors)."""

import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any

import mpmath

from simpdim.formats import format_rational
from simpdim.genfun import FVector


class ExactJSONEncoder(json.JSONEncoder):
    """JSON encoder for the exact value types.

    - Fraction: "p/q" string ("p" for integers)
    - mpmath.mpf: decimal string
    - FVector: list of counts
    - tuples and frozensets: lists
    """

    def default(self, obj: Any) -> Any:
        if isinstance(obj, Fraction):
            return format_rational(obj)
        elif isinstance(obj, mpmath.mpf):
            return mpmath.nstr(obj, mpmath.mp.dps)
        elif isinstance(obj, FVector):
            return list(obj.counts)
        elif isinstance(obj, frozenset):
            return sorted(obj)
        elif is_dataclass(obj) and not isinstance(obj, type):
            return clean_for_json(asdict(obj))
        return super().default(obj)


def exact_json_serializer(obj: Any, indent: int = 2) -> str:
    """Serialize a result to a JSON string with stable key order.

    Args:
        obj: Result object, usually a dict produced by a tool

    Returns:
        str: JSON string
    """
    return json.dumps(clean_for_json(obj), cls=ExactJSONEncoder, indent=indent)


def clean_for_json(obj: Any) -> Any:
    """Recursively replace exact values by their JSON-safe renderings."""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    elif isinstance(obj, mpmath.mpf):
        return mpmath.nstr(obj, mpmath.mp.dps)
    elif isinstance(obj, FVector):
        return list(obj.counts)
    elif isinstance(obj, dict):
        return {key: clean_for_json(value) for key, value in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [clean_for_json(item) for item in obj]
    return obj
