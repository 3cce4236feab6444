"""Exact orbifold invariants of finite quotient orbifolds."""
__version__ = "0.1.0"
