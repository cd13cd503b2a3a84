"""Dihedral coverings of the projective line and the arithmetic around them."""
from .perm import Perm, PermGroup, parse_cycles

__version__ = "0.1.0"

__all__ = ["Perm", "PermGroup", "parse_cycles", "__version__"]
