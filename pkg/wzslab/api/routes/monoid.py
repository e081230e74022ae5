"""
Monoid endpoints: atoms, invariants, sets of lengths
"""
from typing import Optional

from fastapi import APIRouter

from wzslab.api.report_cache import cached_report, run_config
from wzslab.cli_module import commands

router = APIRouter()

@router.get("/atoms")
def atoms(group: str = "3", weights: str = "pm", order_cap: Optional[int] = None):
    config = run_config(group=group, weights=weights, order_cap=order_cap)
    return cached_report("atoms", config, commands.cmd_atoms)

@router.get("/invariants")
def invariants(group: str = "3", weights: str = "pm",
               length_bound: Optional[int] = None, omega_cap: Optional[int] = None,
               k_max: Optional[int] = None, order_cap: Optional[int] = None):
    """D, d, Δ, c, ω and the U_k table"""
    config = run_config(group=group, weights=weights, length_bound=length_bound,
                        omega_cap=omega_cap, k_max=k_max, order_cap=order_cap)
    return cached_report("invariants", config, commands.cmd_invariants)

@router.get("/lengths")
def lengths(seq: str, group: str = "3", weights: str = "pm", order_cap: Optional[int] = None):
    config = run_config(group=group, weights=weights, order_cap=order_cap)
    return cached_report("lengths", config, commands.cmd_lengths, seq)
