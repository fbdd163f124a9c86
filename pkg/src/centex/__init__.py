"""centex: word problems in iterated centralizer extensions of free
products, with constructors and verifiers for standard quadratic equations."""

from .words import ABELIAN, FREE, BaseWord, Classification, Factor, GroupSpec
from .tower import Element, Level, Tower

__version__ = "0.1.0"

__all__ = [
    "ABELIAN",
    "FREE",
    "BaseWord",
    "Classification",
    "Element",
    "Factor",
    "GroupSpec",
    "Level",
    "Tower",
    "__version__",
]
