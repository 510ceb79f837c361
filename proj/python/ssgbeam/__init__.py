"""Differential quadrature element for second strain gradient Euler-Bernoulli
beams: static, free-vibration and buckling analyses, plus the closed-form
analytical oracles used to validate them.

The heavy lifting lives in the compiled extension ``_ssgbeam``.
"""

from _ssgbeam import (
    grid,
    modified_matrices,
    solve_static,
    solve_modal,
    solve_buckling,
    exact_static,
    exact_frequencies,
    exact_buckling,
)

__all__ = [
    "grid",
    "modified_matrices",
    "solve_static",
    "solve_modal",
    "solve_buckling",
    "exact_static",
    "exact_frequencies",
    "exact_buckling",
]
