"""
Structure endpoints: seminormality, class semigroup, Krull verdicts
"""
from typing import Optional

from fastapi import APIRouter

from wzslab.api.report_cache import cached_report, run_config
from wzslab.cli_module import commands

router = APIRouter()

@router.get("/seminormal")
def seminormal(group: str = "3", weights: str = "pm", search_bound: Optional[int] = None):
    config = run_config(group=group, weights=weights, search_bound=search_bound)
    return cached_report("seminormal", config, commands.cmd_seminormal)

@router.get("/class-semigroup")
def class_semigroup(group: str = "3", weights: str = "pm"):
    config = run_config(group=group, weights=weights)
    return cached_report("class-semigroup", config, commands.cmd_class_semigroup)

@router.get("/verdict")
def verdict(group: str = "3", weights: str = "pm"):
    config = run_config(group=group, weights=weights)
    return cached_report("structure", config, commands.cmd_structure)
