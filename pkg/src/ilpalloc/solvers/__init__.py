from .bnb import BnbOptions, SearchState, lower_bound_extra, solve_branch_and_bound
from .brute import solve_brute_force
from .common import SolveReport, Status
from .heuristics import solve_best_fit_decreasing, solve_first_fit_decreasing

SOLVERS = ("brute", "bnb", "ffd", "bfd")
EXACT_SOLVERS = ("bnb", "brute")


def run_solver(name: str, inst, *, symmetry_breaking: bool = True, node_limit: int | None = None,
               time_limit_s: float | None = None) -> SolveReport:
    """Dispatch by CLI solver name."""
    if name == "brute":
        return solve_brute_force(inst) if node_limit is None else solve_brute_force(inst, node_limit)
    if name == "bnb":
        opts = BnbOptions(symmetry_breaking=symmetry_breaking, time_limit_s=time_limit_s)
        if node_limit is not None:
            opts = BnbOptions(symmetry_breaking, node_limit, time_limit_s)
        return solve_branch_and_bound(inst, opts)
    if name == "ffd":
        return solve_first_fit_decreasing(inst)
    if name == "bfd":
        return solve_best_fit_decreasing(inst)
    raise ValueError(f"unknown solver {name!r}; choose from {', '.join(SOLVERS)}")


__all__ = [
    "BnbOptions",
    "EXACT_SOLVERS",
    "SOLVERS",
    "SearchState",
    "SolveReport",
    "Status",
    "lower_bound_extra",
    "run_solver",
    "solve_best_fit_decreasing",
    "solve_branch_and_bound",
    "solve_brute_force",
    "solve_first_fit_decreasing",
]
