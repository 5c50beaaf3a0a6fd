"""Shared utilities for padic-jets: JSON encoding, hashing and atomic writes."""

import hashlib
import json
import logging
import os
import tempfile
from fractions import Fraction
from typing import Any

logger = logging.getLogger("padic_jets")

# largest integer a double represents exactly
JSON_SAFE_INT = 2 ** 53


def encode_big_ints(data: Any) -> Any:
    """Recursively make *data* JSON-safe.

    Integers with absolute value above 2⁵³ become decimal strings, Fractions
    become ``"c/d"`` strings (``"c"`` when integral), tuples become lists.
    """
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, int):
        return str(data) if abs(data) > JSON_SAFE_INT else data
    if isinstance(data, Fraction):
        return str(data)
    if isinstance(data, dict):
        return {str(k): encode_big_ints(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [encode_big_ints(v) for v in data]
    return data


def dumps(data: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(encode_big_ints(data), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def input_hash(data: Any) -> str:
    """SHA-256 of the canonical JSON form of *data*."""
    payload = json.dumps(encode_big_ints(data), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def atomic_write_text(path: str, text: str) -> None:
    """Write *text* atomically.

    Prevents torn/partial writes from crashes or interrupted I/O: the data
    goes to a temporary file in the same directory, is fsynced, then renamed
    over *path*.
    """
    dir_path = os.path.dirname(path) or "."
    os.makedirs(dir_path, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=dir_path, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_path, path)
        # Best-effort directory fsync for crash-consistent rename on POSIX
        try:
            dir_fd = os.open(dir_path, os.O_RDONLY)
            try:
                os.fsync(dir_fd)
            finally:
                os.close(dir_fd)
        except (OSError, AttributeError):
            pass
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
    logger.debug(f"wrote {path}")


def atomic_write_json(path: str, data: Any) -> None:
    """Write *data* as canonical JSON atomically."""
    atomic_write_text(path, dumps(data))


def read_json(path: str) -> Any:
    with open(path, encoding="utf-8") as f:
        return json.load(f)
