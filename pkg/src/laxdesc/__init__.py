"""Finite computational category theory engine.

Lax descent categories of truncated pseudocosimplicial objects, pointwise
Kan extensions, descent factorizations of indexed categories, and
monadicity / Beck-Chevalley checking, all on finite (or boundedly
enumerated) data.
"""

__version__ = "0.1.0"
