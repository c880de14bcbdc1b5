"""Load finite groups from JSON definition documents.

The accepted document shape is
``{"kind": "perm" | "modmatrix" | "lemma52", "degree": k, "modulus": n,
"generators": [...]}`` where permutation generators are lists of cycles in
1-based point labels and matrix generators are row-major integer arrays
reduced mod n.  Matrix generators must be invertible mod n; the order-12n^2
family needs only ``modulus``.
"""

from __future__ import annotations

import json
from math import gcd, isqrt

from .groups import DEFAULT_CAP, FiniteGroup, ModMatrix, Permutation, close_generators
from .rational import exact_det
from .semidirect import build_group

__all__ = ["GroupFileError", "parse_group", "load_group"]


class GroupFileError(ValueError):
    """Malformed or inconsistent group definition document."""


def _require_int(doc: dict, key: str, minimum: int) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise GroupFileError("%r must be an integer >= %d, got %r" % (key, minimum, value))
    return value


def _matrix_rows(raw, modulus: int) -> tuple[tuple[int, ...], ...]:
    if not isinstance(raw, list) or not raw:
        raise GroupFileError("matrix generator must be a non-empty array")
    if all(isinstance(e, int) and not isinstance(e, bool) for e in raw):
        k = isqrt(len(raw))
        if k * k != len(raw):
            raise GroupFileError("flat matrix of length %d is not square" % len(raw))
        rows = [raw[i * k:(i + 1) * k] for i in range(k)]
    elif all(isinstance(row, list) for row in raw):
        rows = raw
        if any(len(row) != len(rows) for row in rows):
            raise GroupFileError("matrix generator must be square")
        for row in rows:
            if any(isinstance(e, bool) or not isinstance(e, int) for e in row):
                raise GroupFileError("matrix entries must be integers")
    else:
        raise GroupFileError("matrix generator must be a flat or nested integer array")
    det = exact_det(rows)
    if gcd(int(det) % modulus, modulus) != 1:
        raise GroupFileError(
            "matrix generator is not invertible mod %d (det = %d)" % (modulus, int(det))
        )
    return tuple(tuple(int(e) % modulus for e in row) for row in rows)


def parse_group(doc, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build the FiniteGroup described by an already-parsed JSON document."""
    if not isinstance(doc, dict):
        raise GroupFileError("group definition must be a JSON object")
    kind = doc.get("kind")
    if kind == "lemma52":
        return build_group(_require_int(doc, "modulus", 2), cap=cap)
    raw_gens = doc.get("generators")
    if not isinstance(raw_gens, list) or not raw_gens:
        raise GroupFileError("'generators' must be a non-empty array")
    if kind == "perm":
        degree = _require_int(doc, "degree", 1)
        payloads = []
        for cycles in raw_gens:
            if not isinstance(cycles, list):
                raise GroupFileError("permutation generator must be an array of cycles")
            try:
                payloads.append(Permutation.from_cycles(degree, cycles))
            except (ValueError, TypeError) as exc:
                raise GroupFileError("bad permutation generator %r: %s" % (cycles, exc)) from exc
        return close_generators(payloads, cap=cap)
    if kind == "modmatrix":
        modulus = _require_int(doc, "modulus", 2)
        payloads = [ModMatrix(modulus, _matrix_rows(raw, modulus)) for raw in raw_gens]
        dims = {p.dim for p in payloads}
        if len(dims) != 1:
            raise GroupFileError("matrix generators disagree on dimension: %s" % sorted(dims))
        return close_generators(payloads, cap=cap)
    raise GroupFileError("'kind' must be 'perm', 'modmatrix' or 'lemma52', got %r" % (kind,))


def load_group(path: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Read and build a group definition from a JSON file."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GroupFileError("not valid JSON: %s" % exc) from exc
    return parse_group(doc, cap=cap)
