"""
Quadratic form endpoints
"""
from fastapi import APIRouter

from wzslab.api.report_cache import cached_report, run_config
from wzslab.cli_module import commands
from wzslab.parse_module import parse_discriminant

router = APIRouter()

@router.get("/classgroup")
def classgroup(disc: str):
    """Form class group, P′ data for small primes"""
    delta = parse_discriminant(disc)
    return cached_report("qform classgroup", run_config(), commands.cmd_qform_classgroup, delta)

@router.get("/check")
def check(disc: str, n: int):
    delta = parse_discriminant(disc)
    return cached_report("qform check", run_config(), commands.cmd_qform_check, delta, n)
