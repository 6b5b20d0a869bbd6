"""Exact (q,t)-deformed Cartan matrices of finite type and their invariants."""

from .cartan import CartanData, FiniteType, all_types, build, parse_type
from .poly import BiLaurent

__version__ = "0.1.0"

__all__ = ["BiLaurent", "CartanData", "FiniteType", "all_types", "build", "parse_type"]
