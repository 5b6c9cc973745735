"""Exact Bredon-cohomology calculator for rank-two elementary abelian groups.

Everything is computed over F_p with exact integer arithmetic: degree
lattices, point rings, Mackey tables, the cohomology of universal spaces,
Tate-square cross-checks, and the degree bookkeeping for smash powers of
equivariant projective space.
"""

from .degrees import Degree, GroupSpec, SubDegree, parse_degree, parse_subdegree

__all__ = [
    "Degree",
    "GroupSpec",
    "SubDegree",
    "parse_degree",
    "parse_subdegree",
]

__version__ = "0.1.0"
