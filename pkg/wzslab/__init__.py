"""
Weighted zero-sum laboratory
Monoids of Γ-weighted zero-sum sequences and binary quadratic forms
"""
__version__ = "1.0.0"
