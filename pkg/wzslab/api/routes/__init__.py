"""
API Routes Package
"""
from . import monoid, structure, qform, system
