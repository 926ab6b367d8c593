"""
Byte-stable result documents. JSON: sorted keys, compact separators,
rationals as "p/q", one trailing newline. TSV: header row plus rows.
"""

import json
import re
from fractions import Fraction
from typing import Any, Dict, List

import numpy as np

from orbitwist.src.utils.rationals import format_rational

_RATIONAL_TEXT = re.compile(r"^-?\d+/\d+$")


def to_plain(value: Any) -> Any:
    """Fractions become "p/q"; tuples, numpy arrays and scalars become JSON types."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _tsv_cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def _tsv(document: Dict[str, Any]) -> str:
    rows = document.get("rows")
    lines: List[str] = []
    if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
        header = sorted({key for row in rows for key in row})
        lines.append("\t".join(header))
        for row in rows:
            lines.append("\t".join(_tsv_cell(row.get(key)) for key in header))
    else:
        lines.append("key\tvalue")
        for key in sorted(document):
            lines.append(f"{key}\t{_tsv_cell(document[key])}")
    return "\n".join(lines) + "\n"


def format_output(result: Dict[str, Any], mode: str = "json") -> bytes:
    document = to_plain(result)
    if mode == "tsv":
        return _tsv(document).encode("utf-8")
    text = json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def _restore(value: Any) -> Any:
    if isinstance(value, str) and _RATIONAL_TEXT.match(value):
        numerator, denominator = value.split("/")
        return Fraction(int(numerator), int(denominator))
    if isinstance(value, dict):
        return {k: _restore(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_restore(v) for v in value]
    return value


def parse_output(data: bytes) -> Dict[str, Any]:
    """Inverse of ``format_output`` in JSON mode."""
    return _restore(json.loads(data.decode("utf-8")))
