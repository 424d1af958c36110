"""Stochastic Galerkin and stochastic collocation FEM for random elliptic problems."""

from ._sgsc import (
    ConfigError,
    binomial,
    closed_form_1d,
    closed_form_linear,
    compare,
    gauss_rule,
    legendre,
    mpr_bound,
    mpr_r_dependent_bound,
    nnz_bound,
    nnz_bruteforce,
    nnz_exact,
    smolyak_set,
    sparse_grid,
    tensor_product_set,
    total_degree_set,
    triple_product,
    work_bounds,
)

__all__ = [
    "ConfigError",
    "binomial",
    "closed_form_1d",
    "closed_form_linear",
    "compare",
    "gauss_rule",
    "legendre",
    "mpr_bound",
    "mpr_r_dependent_bound",
    "nnz_bound",
    "nnz_bruteforce",
    "nnz_exact",
    "smolyak_set",
    "sparse_grid",
    "tensor_product_set",
    "total_degree_set",
    "triple_product",
    "work_bounds",
]
