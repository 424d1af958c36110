import csv
import io
import math
import os

import pytest

import sgsc


def test_index_sets():
    assert len(sgsc.total_degree_set(3, 2)) == 10
    assert len(sgsc.tensor_product_set(2, 2)) == 9
    assert [0, 0] in sgsc.smolyak_set(2, 3)


def test_sparsity():
    assert sgsc.binomial(6, 2) == 15
    assert sgsc.nnz_exact(2, 3, [1, 1]) == sgsc.nnz_bruteforce(2, 3, [1, 1])
    assert sgsc.nnz_exact(1, 4, [2]) == sgsc.closed_form_1d(4, 2)
    assert sgsc.nnz_exact(3, 2, [0, 1, 0]) == sgsc.closed_form_linear(3, 2)
    assert sgsc.mpr_bound(4, 3, 3) <= sgsc.mpr_r_dependent_bound(4, 3, 3)


def test_quadrature_and_polynomials():
    nodes, weights = sgsc.gauss_rule(4)
    assert math.isclose(sum(weights), 1.0, abs_tol=1e-14)
    assert math.isclose(sgsc.legendre(2, 1.0), math.sqrt(5.0))
    assert sgsc.triple_product(1, 1, 1) == 0.0


@pytest.mark.parametrize("rule", ["CC", "GL", "LJ"])
def test_sparse_grid_weights(rule):
    points, weights = sgsc.sparse_grid(2, 3, rule)
    assert len(points) == len(weights)
    assert math.isclose(sum(weights), 1.0, abs_tol=1e-12)
    second = sum(w * p[0] ** 2 for p, w in zip(points, weights))
    assert math.isclose(second, 1.0 / 3.0, abs_tol=1e-10)
    with pytest.raises(ValueError):
        sgsc.sparse_grid(2, 3, "XX")


def test_work_bounds():
    rows = sgsc.work_bounds([1e-2, 1e-4])
    assert len(rows) == 2
    assert all(len(r) == 5 for r in rows)
    assert rows[1][1] >= rows[0][1]


def test_compare_tiny_scenario():
    text = """
model = "poly"
N = 2
rbar = 2
methods = ["SG-TD", "SC-CC"]
[mesh]
n = 4
[sg]
orders = [0, 2]
[sc]
levels = [0, 2]
reference_level = 4
"""
    rows = list(csv.DictReader(io.StringIO(sgsc.compare(text))))
    assert len(rows) == 6
    assert set(rows[0]) == {"method", "order", "sdof", "error", "cost_units", "iterations", "seconds"}
    assert all(float(r["error"]) >= 0.0 for r in rows)


def test_config_errors():
    with pytest.raises(sgsc.ConfigError, match="model"):
        sgsc.compare("N = 2\n")
    assert issubclass(sgsc.ConfigError, ValueError)


def test_shipped_config_parses():
    cfg_dir = os.environ.get("SGSC_CONFIG_DIR")
    if not cfg_dir:
        pytest.skip("SGSC_CONFIG_DIR not set")
    with open(os.path.join(cfg_dir, "constants.toml")) as fh:
        rows = sgsc.work_bounds([1e-3], fh.read(), 3)
    assert rows[0][0] == 1e-3
