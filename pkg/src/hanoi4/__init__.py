"""Memoized Frame-Stewart solver for the 4-peg Tower of Hanoi with arbitrary configurations."""

from .core import Configuration, Plan, apply_move, full_tower, validate_configuration, validate_plan
from .instance_io import Instance, emit_instance, emit_plan, parse_instance
from .oracle import bfs_optimal, fs_number
from .partitions import Heuristic, candidate_mids
from .plan3 import plan3_solve
from .plan4 import SolveOutcome, Status, plan4_solve, solve_with_bound

__all__ = [
    "Configuration", "Plan", "apply_move", "full_tower", "validate_configuration", "validate_plan",
    "Instance", "emit_instance", "emit_plan", "parse_instance",
    "bfs_optimal", "fs_number", "Heuristic", "candidate_mids",
    "plan3_solve", "SolveOutcome", "Status", "plan4_solve", "solve_with_bound",
]
