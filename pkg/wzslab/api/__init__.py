"""
API package initialization
"""
from .server import app

__all__ = ["app"]
