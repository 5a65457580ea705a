"""Utility functions package initialization"""

from .io import dumps_json, load_json, read_text, save_json

__all__ = [
    "dumps_json",
    "load_json",
    "read_text",
    "save_json",
]
