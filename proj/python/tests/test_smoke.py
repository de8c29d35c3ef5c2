import pytest

import lcsq


def test_component_dim():
    assert lcsq.component_dim([2, 1]) == 3
    assert lcsq.component_dim([2, 2, 2, 2]) == 2520


def test_schur_and_bound():
    assert lcsq.schur([2, 1], 3)[(1, 1, 1)] == 2
    assert lcsq.lambda_bound(3, 2) == 4
    assert lcsq.lambda_bound(4, 4) == 8


def test_engine_dims():
    e = lcsq.Engine(2)
    assert e.dim_M(2, [2, 1]) == 2
    assert e.dim_N(3, [2, 2]) == 3
    h = e.hilbert_N(3, 3)
    assert h[(2, 1)] == 1 and h[(1, 2)] == 1 and h[(3, 0)] == 0
    e.check_agreement()
    exact = lcsq.Engine(2, exact=True)
    assert exact.dim_N(3, [2, 2]) == 3


def test_decompose():
    r = lcsq.decompose(2, 3)
    assert r["text"] == "(2,1) + (2,2)"
    assert r["bound_satisfied"]
    assert sorted(r["modules"]) == [((2, 1), 1), ((2, 2), 1)]


def test_verify_small_tables():
    rows = lcsq.verify_tables("m=3")
    assert len(rows) == 3
    assert all(row["match"] for row in rows)
    assert len(lcsq.reference_tables()) == 9


def test_errors():
    with pytest.raises(ValueError):
        lcsq.Engine(2).dim_N(3, [1, -1])
    with pytest.raises(ValueError):
        lcsq.decompose(2, 3, max_degree=2)
    with pytest.raises(ValueError):
        lcsq.Engine(2, primes=(101, 103))
