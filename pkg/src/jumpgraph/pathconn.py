"""Path dynamic connectivity on top of a successor graph.

When every component of an edge set is a simple directed path, the whole
problem embeds into a successor graph: "no outgoing edge" is encoded as a
self-loop, adding v -> w retargets v's pointer, and removing it points v
back at itself. Two nodes are then connected exactly when jumping `size`
steps from each lands on the same node — the unique terminal of their
shared path — so every connectivity operation costs at most two engine
operations.

Only the locally checkable part of the path-shape guarantee is enforced
(the vertex gaining an edge must currently be a self-loop, the edge being
removed must exist). Keeping components path-shaped globally — never
closing a cycle, never giving a node two incoming edges — is the caller's
contract; behavior outside it is undefined.
"""

from .errors import EdgeAbsentError, EdgeExistsError, SelfEdgeError
from .pseudoforest import Pseudoforest


class PathConn:
    """Connectivity facade; wraps a fresh engine or any successor-graph
    backend with the same surface (e.g. the oracle, for differential runs).
    """

    def __init__(self, n: int = None, *, backend=None):
        if backend is None:
            backend = Pseudoforest(n)
        self.graph = backend

    def add_edge(self, v, w):
        if v == w:
            self.graph.succ(v)  # surfaces invalid-id errors uniformly
            raise SelfEdgeError(v)
        if self.graph.succ(v) != v:
            raise EdgeExistsError(v)
        self.graph.update(v, w)

    def remove_edge(self, v, w):
        if v == w or self.graph.succ(v) != w:
            raise EdgeAbsentError(v, w)
        self.graph.update(v, v)

    def connected(self, x, y) -> bool:
        k = self.graph.size
        return self.graph.query(x, k) == self.graph.query(y, k)
