"""
System information endpoints
"""
from fastapi import APIRouter

from wzslab.api.report_cache import report_cache
from wzslab.system_info import get_system_info

router = APIRouter()

@router.get("/info")
def system_info():
    """Get runtime versions and caps"""
    info = get_system_info()
    info["cachedReports"] = len(report_cache)
    return info
