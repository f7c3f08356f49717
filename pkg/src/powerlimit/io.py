"""Matrix file format.

A matrix file is a UTF-8 JSON object ``{"d": <int>, "entries": rows}`` where
``rows`` is row-major and every entry is a two-element ``[re, im]`` array.
"""
import json
import math
from numbers import Real

import numpy as np


class MatrixFileError(ValueError):
    """Malformed matrix document; the message names the offending field."""


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, Real):
        raise MatrixFileError(f"{where}: expected a number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise MatrixFileError(f"{where}: non-finite value {x}")
    return x


def parse_matrix_document(doc):
    if not isinstance(doc, dict):
        raise MatrixFileError("top level: expected a JSON object with 'd' and 'entries'")
    missing = [k for k in ("d", "entries") if k not in doc]
    if missing:
        raise MatrixFileError(f"top level: missing field(s) {', '.join(missing)}")
    d = doc["d"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise MatrixFileError(f"d: expected a positive integer, got {d!r}")
    rows = doc["entries"]
    if not isinstance(rows, list) or len(rows) != d:
        n = len(rows) if isinstance(rows, list) else type(rows).__name__
        raise MatrixFileError(f"entries: expected {d} rows, got {n}")
    out = np.empty((d, d), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            n = len(row) if isinstance(row, list) else type(row).__name__
            raise MatrixFileError(f"entries[{i}]: row length {n} != d = {d}")
        for j, z in enumerate(row):
            where = f"entries[{i}][{j}]"
            if not isinstance(z, list) or len(z) != 2:
                raise MatrixFileError(f"{where}: expected [re, im]")
            out[i, j] = complex(_number(z[0], where + "[0]"), _number(z[1], where + "[1]"))
    return out


def parse_matrix_file(data):
    """Parse matrix-file bytes (or text) into a complex128 array."""
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MatrixFileError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_matrix_document(doc)


def entries_to_json(M):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M)]


def dump_matrix(M):
    M = np.asarray(M)
    return {"d": int(M.shape[0]), "entries": entries_to_json(M)}
