"""Dynamic lower-envelope structures over integer coordinates.

`LiChaoTree` is the general-purpose structure (lines, segments, min/max).
`ZkwTree` is the flat-array variant for static universes, `PersistentForest`
the path-copying persistent variant, `LineContainer` the dynamic
convex-hull-trick baseline, and `NaiveSet` the brute-force oracle used for
differential testing.  The `bench`, `verify` and `cli` modules provide the
reproducible benchmark and verification harness.
"""

from .baseline import LineContainer
from .core import (I64_MAX, I64_MIN, MAX, MIN, Domain, InvalidDomainError,
                   InvalidSegmentError, LiChaoTree, Line, OutOfDomainError,
                   RoutingDominanceError, TreeStats)
from .oracle import NaiveSet
from .persistent import PersistentForest, UnknownVersionError
from .zkw import ZkwTree

__all__ = [
    "Domain",
    "I64_MAX",
    "I64_MIN",
    "InvalidDomainError",
    "InvalidSegmentError",
    "LiChaoTree",
    "Line",
    "LineContainer",
    "MAX",
    "MIN",
    "NaiveSet",
    "OutOfDomainError",
    "PersistentForest",
    "RoutingDominanceError",
    "TreeStats",
    "UnknownVersionError",
    "ZkwTree",
]

__version__ = "0.1.0"
