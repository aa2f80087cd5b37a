"""Dynamic successor graphs: every node points at exactly one node.

Each component of such a graph is a "rho": trees hanging off a single
directed cycle. The component is stored as one represented tree in a
link-cut forest, rooted at a designated cycle node r, with successor
edges running child -> parent; r's own outgoing edge (which would close
the cycle) is kept aside in ``_side_edge`` instead of the tree. The cycle
is then exactly r plus the tree path from b = side_edge[r] up to r, so
its length is depth(b) + 1, and a k-step jump query is two level-ancestor
lookups plus modular arithmetic — O(log n) amortized for any k.

``retarget`` (point v somewhere else) is a constant number of cut/link
calls: the only delicate case is retargeting a node on the cycle, which
strands the old root's side edge; relinking the old root below b repairs
it and makes v the new designated root.
"""

from .errors import HasIncomingEdgesError
from .lct import LinkCutForest


class Pseudoforest:
    """Successor graph over ids 0..size-1 with O(log n) update/query."""

    def __init__(self, n: int):
        self.forest = LinkCutForest(n)
        # One entry per component, keyed by its represented root r:
        # the root's outgoing edge r -> f(r).
        self._side_edge = {v: v for v in range(n)}
        self._indegree = [1] * n  # every node starts as a self-loop
        self.op_count = 0

    # -- bookkeeping ----------------------------------------------------------

    @property
    def size(self) -> int:
        return self.forest.size

    @property
    def live_count(self) -> int:
        return self.forest.live_count

    @property
    def rotations(self) -> int:
        return self.forest.rotations

    def is_live(self, v) -> bool:
        return self.forest.is_live(v)

    def live_nodes(self):
        return self.forest.live_nodes()

    def indegree(self, v) -> int:
        self.forest._check(v)
        return self._indegree[v]

    def successor_array(self):
        """Debug export: successor per id, None for dead slots."""
        return [
            self._succ_of(v) if self.forest.is_live(v) else None
            for v in range(self.forest.size)
        ]

    # -- internal helpers -------------------------------------------------------

    def _succ_of(self, v) -> int:
        side = self._side_edge.get(v)
        if side is not None:
            return side
        return self.forest.parent(v)

    def _detach(self, v):
        """Remove v's outgoing edge, leaving v a represented root with no
        side edge. Repairs the old root's stranded side edge when v was on
        the cycle."""
        forest = self.forest
        if v in self._side_edge:
            del self._side_edge[v]
            return
        r = forest.find_root(v)
        b = self._side_edge[r]
        db = forest.depth(b)
        dv = forest.depth(v)
        if dv <= db and forest.level_ancestor(b, dv) == v:
            # v is on the cycle. Cutting v -> parent(v) strands r's side
            # edge (b moves into v's subtree), so turn that side edge into
            # the tree edge r -> b; v becomes the component's root.
            forest.cut(v)
            del self._side_edge[r]
            forest._link_root(r, b)
        else:
            forest.cut(v)

    def _attach(self, v, w):
        """Point detached root v at w."""
        forest = self.forest
        rw = forest.find_root(w)
        if rw == v:
            # w is below v: the new edge closes a cycle through v.
            self._side_edge[v] = w
        else:
            forest._link_root(v, w)

    def _update_impl(self, v, w):
        old = self._succ_of(v)
        self._detach(v)
        self._attach(v, w)
        self._indegree[old] -= 1
        self._indegree[w] += 1

    # -- operations ---------------------------------------------------------

    def succ(self, v) -> int:
        """f(v): the node v points to."""
        self.forest._check(v)
        self.op_count += 1
        return self._succ_of(v)

    def update(self, v, w):
        """Retarget v's outgoing edge to w."""
        self.forest._check(v)
        self.forest._check(w)
        self.op_count += 1
        self._update_impl(v, w)

    def query(self, v, k) -> int:
        """f^k(v) for any k >= 0; huge k reduces modulo the cycle length."""
        self.forest._check(v)
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.op_count += 1
        forest = self.forest
        d = forest.depth(v)
        if k <= d:
            return forest.level_ancestor(v, d - k)
        r = forest.find_root(v)
        b = self._side_edge[r]
        db = forest.depth(b)
        m = (k - d) % (db + 1)
        if m == 0:
            return r
        return forest.level_ancestor(b, db - (m - 1))

    def cycle_length(self, v) -> int:
        """Length of the cycle in v's component."""
        self.forest._check(v)
        self.op_count += 1
        forest = self.forest
        b = self._side_edge[forest.find_root(v)]
        return forest.depth(b) + 1

    def on_cycle(self, v) -> bool:
        """Whether v lies on its component's cycle, i.e. is an ancestor of
        the root's side-edge target."""
        self.forest._check(v)
        self.op_count += 1
        forest = self.forest
        b = self._side_edge[forest.find_root(v)]
        db = forest.depth(b)
        dv = forest.depth(v)
        return dv <= db and forest.level_ancestor(b, dv) == v

    def inverse_query(self, x, y):
        """Smallest k with f^k(x) = y, or None if y is never reached.

        y is reachable from x exactly when y is an ancestor of x (walk up
        the tree) or on the component's cycle (walk up, then around).
        """
        self.forest._check(x)
        self.forest._check(y)
        self.op_count += 1
        forest = self.forest
        rx = forest.find_root(x)
        if forest.find_root(y) != rx:
            return None
        dx = forest.depth(x)
        dy = forest.depth(y)
        if dy <= dx and forest.level_ancestor(x, dy) == y:
            return dx - dy
        b = self._side_edge[rx]
        db = forest.depth(b)
        if dy <= db and forest.level_ancestor(b, dy) == y:
            # y sits (db - dy + 1) steps past the root along the cycle.
            return dx + db - dy + 1
        return None

    def lca(self, x, y):
        """Where the forward walks of x and y first merge.

        None for different components. When the merge point is off-cycle it
        is unique and is returned exactly; when the walks only merge on the
        cycle, the returned node is some cycle node (which one depends on
        the internal tree shape).
        """
        self.forest._check(x)
        self.forest._check(y)
        self.op_count += 1
        forest = self.forest
        if forest.find_root(x) != forest.find_root(y):
            return None
        return forest._lca_connected(x, y)

    def cycle_proximity(self, v) -> int:
        """Steps until v's forward walk enters the cycle; 0 on the cycle."""
        self.forest._check(v)
        self.op_count += 1
        forest = self.forest
        b = self._side_edge[forest.find_root(v)]
        # The first on-cycle ancestor of v is its deepest common ancestor
        # with b.
        a = forest._lca_connected(v, b)
        return forest.depth(v) - forest.depth(a)

    def delete(self, v):
        """Remove v. Only nodes with no incoming edges can go (such a node
        is never on a cycle and is a leaf in the represented tree)."""
        self.forest._check(v)
        self.op_count += 1
        deg = self._indegree[v]
        if deg > 0:
            raise HasIncomingEdgesError(v, deg)
        old = self._succ_of(v)
        self.forest.cut(v)
        self.forest.remove_singleton(v)
        self._indegree[old] -= 1

    def subdivide(self, x) -> int:
        """Splice a fresh node y into x's outgoing edge (f(x) = y,
        f(y) = old f(x)); returns y."""
        self.forest._check(x)
        self.op_count += 1
        old = self._succ_of(x)
        y = self.forest.add_node()
        self._side_edge[y] = y
        self._indegree.append(1)
        self._update_impl(y, old)
        self._update_impl(x, y)
        return y

    def component_root(self, v) -> int:
        """The designated root of v's component; always a cycle node.
        Stable across queries, may change on updates."""
        self.forest._check(v)
        self.op_count += 1
        return self.forest.find_root(v)
