"""Parameter and dynamical planes of symmetric Newton-like rational maps."""

from ._paramplane import (
    Error,
    Operator,
    cli,
    critical_points,
    families,
    free_critical_count,
    infinity,
    instantiate,
    is_palindromic,
    lift_root,
    param_cell,
    reduce_palindromic,
    render_dynamical_plane,
    render_parameter_plane,
    render_stability_map,
    solve_poly,
    solve_poly_oracle,
)

__all__ = [
    "Error",
    "Operator",
    "cli",
    "critical_points",
    "families",
    "free_critical_count",
    "infinity",
    "instantiate",
    "is_palindromic",
    "lift_root",
    "param_cell",
    "reduce_palindromic",
    "render_dynamical_plane",
    "render_parameter_plane",
    "render_stability_map",
    "solve_poly",
    "solve_poly_oracle",
]

__version__ = "0.1.0"
