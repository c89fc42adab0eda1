"""Conjugacy classes of Weyl groups, their Springer-type shadows, and the
oriented graph whose connected components are the strata."""

from .strata_graph import StrataGraph, compute_strata
from .weyl_engine.registry import GroupContext, build

__all__ = ["GroupContext", "StrataGraph", "build", "compute_strata"]
__version__ = "0.1.0"
