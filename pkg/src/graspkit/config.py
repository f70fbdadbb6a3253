"""Parsers for the plain-text configuration formats.

Two formats are used: flat "key = value" files (gripper geometry,
tracking thresholds) and sectioned INI files (scene descriptions).
"""

from __future__ import annotations

import configparser

import numpy as np


def parse_kv_text(text: str) -> dict[str, str]:
    """Parse "key = value" lines; '#' starts a comment, blanks ignored."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def parse_kv_file(path) -> dict[str, str]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_kv_text(fh.read())


def parse_vector(value: str, n: int | None = None) -> np.ndarray:
    vec = np.array([float(tok) for tok in value.replace(",", " ").split()])
    if n is not None and vec.size != n:
        raise ValueError(f"expected {n} numbers, got {vec.size} in {value!r}")
    return vec


def read_ini(path) -> configparser.ConfigParser:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    with open(path, "r", encoding="utf-8") as fh:
        parser.read_file(fh)
    return parser
