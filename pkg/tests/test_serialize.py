import numpy as np
import pytest

from framekit import harmonic_frame, hs_norm, projection_from_frame, random_parseval
from framekit.serialize import (
    admissibility_query_from_dict,
    complex_array_to_lists,
    frame_from_dict,
    frame_to_dict,
    lists_to_complex_array,
    projection_from_dict,
    projection_to_dict,
)


def test_complex_array_roundtrip():
    a = np.array([[1 + 2j, 0.5], [0.0, -1j]])
    assert np.array_equal(lists_to_complex_array(complex_array_to_lists(a), "x"), a)


def test_frame_roundtrip():
    f = random_parseval(3, 7, 12)
    d = frame_to_dict(f)
    assert d["dim"] == 3 and len(d["vectors"]) == 7
    g = frame_from_dict(d)
    assert np.array_equal(g.vectors, f.vectors)


def test_frame_dict_validation():
    with pytest.raises(ValueError, match="missing field 'vectors'"):
        frame_from_dict({"dim": 2})
    with pytest.raises(ValueError, match="'dim'"):
        frame_from_dict({"dim": "two", "vectors": [[[1.0, 0.0]]]})
    with pytest.raises(ValueError, match=r"vectors\[0\]\[0\]"):
        frame_from_dict({"dim": 1, "vectors": [[[1.0]], [[0.5]]]})
    with pytest.raises(ValueError, match="rows of 'vectors'"):
        frame_from_dict({"dim": 3, "vectors": [[[1.0, 0.0], [0.0, 0.0]]]})


def test_ragged_rows_rejected():
    with pytest.raises(ValueError, match="expected"):
        lists_to_complex_array([[[1.0, 0.0]], [[1.0, 0.0], [0.0, 0.0]]], "rows")


def test_projection_roundtrip():
    p = projection_from_frame(harmonic_frame(2, 5))
    d = projection_to_dict(p)
    assert d["size"] == 5 and d["rank"] == 2
    q = projection_from_dict(d)
    assert hs_norm(q.matrix - p.matrix) <= 1e-12


def test_projection_dict_consistency_checks():
    p = projection_from_frame(harmonic_frame(2, 5))
    d = projection_to_dict(p)
    d["rank"] = 3
    with pytest.raises(ValueError, match="rank"):
        projection_from_dict(d)


def test_admissibility_query_parsing():
    seq, spec = admissibility_query_from_dict({"a": [1.0, 0.5], "M": 1})
    assert spec is None
    assert seq.target_dim == 1
    seq, spec = admissibility_query_from_dict({"a": [1.0, 1.0, 1.0], "M": 2, "lambda": [2.0, 1.0]})
    assert spec is not None and len(spec) == 2
    with pytest.raises(ValueError, match="missing field 'M'"):
        admissibility_query_from_dict({"a": [1.0]})
