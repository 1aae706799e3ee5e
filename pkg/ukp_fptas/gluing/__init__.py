"""
Gluing Module

Iterated item gluing, the a_eff^c bundle and ungluing.
"""

from .glued import (
    GluedItem,
    GluedLevels,
    Leaf,
    Pair,
    SmallBundle,
    build_aeffc,
    build_glued_sets,
    glue,
    unglue,
)

__all__ = [
    "GluedItem",
    "GluedLevels",
    "Leaf",
    "Pair",
    "SmallBundle",
    "build_aeffc",
    "build_glued_sets",
    "glue",
    "unglue",
]
