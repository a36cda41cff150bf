"""JSON wire formats shared with the command-line harness.

Complex entries are always two-element ``[re, im]`` arrays.

* frame:      ``{"dim": M, "vectors": [[[re, im], ...M entries], ...N rows]}``
* projection: ``{"size": N, "rank": M, "matrix": [[[re, im], ...], ...]}``
* admissibility query: ``{"a": [...], "M": int, "lambda": [...] optional}``
"""

import json

import numpy as np

from .admissibility import AdmissibleSequence, SpectrumSpec
from .frames import Frame
from .subspaces import Projection

__all__ = [
    "complex_array_to_lists",
    "lists_to_complex_array",
    "frame_to_dict",
    "frame_from_dict",
    "projection_to_dict",
    "projection_from_dict",
    "admissibility_query_from_dict",
    "load_json",
    "dump_json",
]


def complex_array_to_lists(a: np.ndarray) -> list:
    """2-D complex array -> nested lists of [re, im] pairs."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(a)]


def lists_to_complex_array(rows, name: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise ValueError(f"{name} must be a nonempty list of rows")
    width = None
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise ValueError(f"{name}[{i}] must be a nonempty list")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"{name}[{i}] has {len(row)} entries, expected {width}")
        vals = []
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
            ):
                raise ValueError(f"{name}[{i}][{j}] must be a two-element [re, im] array")
            vals.append(complex(entry[0], entry[1]))
        out.append(vals)
    return np.array(out, dtype=np.complex128)


def frame_to_dict(frame: Frame) -> dict:
    return {"dim": frame.dim, "vectors": complex_array_to_lists(frame.vectors)}


def frame_from_dict(d: dict) -> Frame:
    if not isinstance(d, dict):
        raise ValueError("frame JSON must be an object")
    for key in ("dim", "vectors"):
        if key not in d:
            raise ValueError(f"frame JSON is missing field {key!r}")
    dim = d["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"field 'dim' must be a positive integer, got {dim!r}")
    vectors = lists_to_complex_array(d["vectors"], "vectors")
    if vectors.shape[1] != dim:
        raise ValueError(
            f"field 'dim' is {dim} but rows of 'vectors' have {vectors.shape[1]} entries"
        )
    return Frame(vectors)


def projection_to_dict(p: Projection) -> dict:
    return {"size": p.size, "rank": p.rank, "matrix": complex_array_to_lists(p.matrix)}


def projection_from_dict(d: dict) -> Projection:
    if not isinstance(d, dict):
        raise ValueError("projection JSON must be an object")
    for key in ("size", "rank", "matrix"):
        if key not in d:
            raise ValueError(f"projection JSON is missing field {key!r}")
    matrix = lists_to_complex_array(d["matrix"], "matrix")
    p = Projection(matrix)
    if p.size != d["size"]:
        raise ValueError(f"field 'size' is {d['size']!r} but matrix is {p.size}x{p.size}")
    if p.rank != d["rank"]:
        raise ValueError(f"field 'rank' is {d['rank']!r} but matrix has rank {p.rank}")
    return p


def admissibility_query_from_dict(d: dict) -> tuple[AdmissibleSequence, SpectrumSpec | None]:
    if not isinstance(d, dict):
        raise ValueError("admissibility query must be an object")
    for key in ("a", "M"):
        if key not in d:
            raise ValueError(f"admissibility query is missing field {key!r}")
    m = d["M"]
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"field 'M' must be a positive integer, got {m!r}")
    seq = AdmissibleSequence(d["a"], m)
    spectrum = SpectrumSpec(d["lambda"]) if d.get("lambda") is not None else None
    return seq, spectrum


def load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
