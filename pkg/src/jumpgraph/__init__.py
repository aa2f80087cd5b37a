"""Dynamic successor graphs with O(log n) retargeting and k-step jumps."""

from .errors import (
    DepthRangeError,
    DifferentTreesError,
    EdgeAbsentError,
    EdgeExistsError,
    HasIncomingEdgesError,
    InvalidNodeError,
    JumpgraphError,
    NotRootError,
    RootCutError,
    SameTreeError,
    SelfEdgeError,
    WorkloadParseError,
)
from .lct import LinkCutForest
from .oracle import NaiveGraph
from .pathconn import PathConn
from .pseudoforest import Pseudoforest
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "LinkCutForest",
    "Pseudoforest",
    "NaiveGraph",
    "PathConn",
    "SplitMix64",
    "JumpgraphError",
    "InvalidNodeError",
    "NotRootError",
    "SameTreeError",
    "RootCutError",
    "DepthRangeError",
    "DifferentTreesError",
    "HasIncomingEdgesError",
    "EdgeExistsError",
    "SelfEdgeError",
    "EdgeAbsentError",
    "WorkloadParseError",
    "__version__",
]
