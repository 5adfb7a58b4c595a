"""Exact Chern-class calculus, restriction bounds and finite holonomy groups.

Rationals come back as fractions.Fraction and big integers as int; inputs
may be int, str ("p/q") or Fraction. Floats are rejected.
"""

from ._core import (
    ChernData,
    Error,
    alpha_of_curve,
    burnside_irreducible,
    check_assumptions,
    direct_sum,
    discriminant,
    dual,
    ell_bound,
    etale_criterion,
    frobenius_degree_scale,
    genuinely_ramified_criterion,
    h0_plane,
    holonomy_order,
    jordan_constant,
    jordan_verify,
    langer_index,
    mu_max,
    pushforward_bound_check,
    run_cli,
    secondary_slope,
    serre_plan,
    sl2_order,
    slope,
    sym_power,
    sym_rank,
    tensor,
    validate_profile,
    wedge_power,
)

__all__ = [name for name in dir() if not name.startswith("_")]
