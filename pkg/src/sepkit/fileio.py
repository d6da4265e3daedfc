"""On-disk formats: state files, decomposition candidates, report tables.

A state file is a single JSON object with "dims": [dA, dB] and either
"matrix" (row-major list of [re, im] pairs, length (dA*dB)^2) or "vector"
(length dA*dB) for pure states. Parsers reject trailing data and non-finite
numbers; parse diagnostics carry a byte offset.
"""
from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .decomposition import LiQiaoCandidate, candidate
from .errors import ParseError
from .linalg import BipartiteDims
from .states import DensityMatrix, PureState, pure_state, validate_density


def _reject_constant(name: str):
    raise ParseError(f"non-finite number {name!r} is not allowed")


def _loads_strict(text: str) -> dict:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at byte offset {exc.pos}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    return obj


def _parse_pairs(raw, expected: int, what: str) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != expected:
        got = len(raw) if isinstance(raw, list) else type(raw).__name__
        raise ParseError(f"{what} must be a list of {expected} [re, im] pairs, got {got}")
    out = np.empty(expected, dtype=complex)
    for i, pair in enumerate(raw):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                           for x in pair)):
            raise ParseError(f"{what}[{i}] must be a [re, im] pair, got {pair!r}")
        out[i] = complex(pair[0], pair[1])
    if not np.all(np.isfinite(out.view(float))):
        raise ParseError(f"{what} contains non-finite numbers")
    return out


def _parse_dims(obj: dict) -> BipartiteDims:
    dims = obj.get("dims")
    if (not isinstance(dims, list) or len(dims) != 2
            or not all(isinstance(d, int) and d >= 2 for d in dims)):
        raise ParseError(f'"dims" must be a pair of integers >= 2, got {dims!r}')
    return BipartiteDims(dims[0], dims[1])


def loads_state(text: str):
    """Parse a state file body into a DensityMatrix or PureState."""
    obj = _loads_strict(text)
    dims = _parse_dims(obj)
    has_matrix = "matrix" in obj
    has_vector = "vector" in obj
    if has_matrix == has_vector:
        raise ParseError('state object needs exactly one of "matrix" or "vector"')
    unknown = set(obj) - {"dims", "matrix", "vector"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    side = dims.side
    if has_matrix:
        entries = _parse_pairs(obj["matrix"], side * side, '"matrix"')
        return validate_density(entries.reshape(side, side), dims)
    entries = _parse_pairs(obj["vector"], side, '"vector"')
    return pure_state(entries, dims)


def load_state(path: str):
    with open(path, encoding="utf-8") as fh:
        return loads_state(fh.read())


def _pairs(values: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in values]


def dumps_state(state) -> str:
    if isinstance(state, DensityMatrix):
        body = {"dims": list(state.dims), "matrix": _pairs(state.mat.ravel())}
    elif isinstance(state, PureState):
        body = {"dims": list(state.dims), "vector": _pairs(state.vec)}
    else:
        raise TypeError(f"expected DensityMatrix or PureState, got {type(state).__name__}")
    return json.dumps(body, sort_keys=True) + "\n"


def loads_candidate(text: str) -> LiQiaoCandidate:
    """Parse a decomposition candidate file."""
    obj = _loads_strict(text)
    for key in ("weights", "bloch_a", "bloch_b"):
        if key not in obj:
            raise ParseError(f'candidate object is missing "{key}"')
    unknown = set(obj) - {"weights", "bloch_a", "bloch_b"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    try:
        w = np.asarray(obj["weights"], dtype=float)
        a = np.asarray(obj["bloch_a"], dtype=float)
        b = np.asarray(obj["bloch_b"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"candidate arrays are malformed: {exc}") from exc
    if not (np.all(np.isfinite(w)) and np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ParseError("candidate contains non-finite numbers")
    return candidate(w, a, b)


def load_candidate(path: str) -> LiQiaoCandidate:
    with open(path, encoding="utf-8") as fh:
        return loads_candidate(fh.read())


def dumps_candidate(cand: LiQiaoCandidate) -> str:
    body = {
        "weights": [float(w) for w in cand.weights],
        "bloch_a": [[float(x) for x in row] for row in cand.bloch_a],
        "bloch_b": [[float(x) for x in row] for row in cand.bloch_b],
    }
    return json.dumps(body, sort_keys=True) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sepkit-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
