"""Exception types shared by the engine, the oracle and the CLI.

Error messages must be deterministic functions of the offending arguments:
the differential runner compares the rendered text of errors raised by the
engine and the oracle, so two backends rejecting the same operation must
produce byte-identical messages.
"""


class JumpgraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidNodeError(JumpgraphError):
    """Referenced node id is out of range or has been deleted."""

    def __init__(self, v):
        super().__init__(f"node {v} is invalid or deleted")
        self.node = v


class NotRootError(JumpgraphError):
    """link() called with a child that is not a tree root."""

    def __init__(self, v):
        super().__init__(f"node {v} is not a tree root")
        self.node = v


class SameTreeError(JumpgraphError):
    """link() would create a cycle inside one represented tree."""

    def __init__(self, c, p):
        super().__init__(f"nodes {c} and {p} are already in the same tree")
        self.child = c
        self.parent = p


class RootCutError(JumpgraphError):
    """cut() called on a node with no parent."""

    def __init__(self, v):
        super().__init__(f"node {v} is a tree root and has no parent edge")
        self.node = v


class DepthRangeError(JumpgraphError):
    """level_ancestor() asked for a depth below the node itself."""

    def __init__(self, v, d, depth):
        super().__init__(f"node {v} has depth {depth}, no ancestor at depth {d}")
        self.node = v
        self.requested = d
        self.depth = depth


class DifferentTreesError(JumpgraphError):
    """lca() called on nodes in different trees."""

    def __init__(self, x, y):
        super().__init__(f"nodes {x} and {y} are in different trees")


class HasIncomingEdgesError(JumpgraphError):
    """delete() called on a node that other nodes still point to."""

    def __init__(self, v, indegree):
        super().__init__(f"node {v} has indegree {indegree}, cannot delete")
        self.node = v
        self.indegree = indegree


class EdgeExistsError(JumpgraphError):
    """add_edge() called on a vertex that already has an outgoing edge."""

    def __init__(self, v):
        super().__init__(f"node {v} already has an outgoing edge")
        self.node = v


class SelfEdgeError(JumpgraphError):
    """add_edge() called with identical endpoints."""

    def __init__(self, v):
        super().__init__(f"self edge on node {v} is not a path edge")
        self.node = v


class EdgeAbsentError(JumpgraphError):
    """remove_edge() called on an edge that is not present."""

    def __init__(self, v, w):
        super().__init__(f"edge {v} -> {w} is not present")
        self.src = v
        self.dst = w


class WorkloadParseError(JumpgraphError):
    """Workload text could not be parsed; carries a 1-based line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
