"""Exact invariants of group-structured links and 3-manifolds.

The package builds ribbon crossed group-categories from cocycle data on a
finite group, evaluates the associated invariants of colored diagrams and of
surgery presentations of closed 3-manifolds, and verifies the axiom systems
involved (crossed/braided/ribbon categories, crossed algebras, Hopf
group-coalgebras) on concrete finite data.  All arithmetic is exact, in
cyclotomic fields.
"""

from .cyclotomic import CycloNum, zeta  # noqa: F401
from .groups import FiniteGroup, GroupHom, FreeHom  # noqa: F401
