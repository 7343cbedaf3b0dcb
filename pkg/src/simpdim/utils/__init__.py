"""Utility functions for simpdim."""

from simpdim.utils.json_encoder import (
    ExactJSONEncoder,
    exact_json_serializer,
    clean_for_json
)

__all__ = [
    "ExactJSONEncoder",
    "exact_json_serializer",
    "clean_for_json"
]
