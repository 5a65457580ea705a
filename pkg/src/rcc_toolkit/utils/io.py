"""
JSON helpers shared by the CLI, fixtures and suites
"""

import json
from pathlib import Path
from typing import Any, Optional

from ..config import Config, get_config


def _indent(indent: Optional[int], config: Optional[Config]) -> int:
    if indent is not None:
        return indent
    config = config or get_config()
    return int(config.get("output.indent", 2))


def dumps_json(data: Any, indent: Optional[int] = None, config: Optional[Config] = None) -> str:
    """
    Serialize to deterministic JSON text

    Keys are sorted and the text ends with a newline, so equal payloads
    give byte-identical output.
    """
    return json.dumps(data, indent=_indent(indent, config), sort_keys=True, ensure_ascii=False) + "\n"


def save_json(data: Any, path: str, indent: Optional[int] = None, config: Optional[Config] = None) -> None:
    """
    Save a JSON payload to file

    Args:
        data: JSON-serializable payload
        path: Output path; parent directories are created
        indent: Indentation; 'output.indent' by default
        config: Configuration to read the default indent from
    """
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_json(data, indent, config))


def load_json(path: str) -> Any:
    """Load a JSON payload from file"""
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def read_text(path: str) -> str:
    """File contents with surrounding whitespace removed"""
    with open(path, "r", encoding="utf-8") as f:
        return f.read().strip()
