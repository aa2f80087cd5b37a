"""Link-cut trees over a fixed (growable) universe of integer node ids.

A rooted forest is maintained under ``link``/``cut`` with ``access``-based
path queries, all O(log n) amortized. The forest is decomposed into
preferred paths; each preferred path is stored as a splay tree whose
in-order traversal lists the path from shallowest to deepest node. Instead
of storing depth keys (which link/cut would have to rewrite wholesale),
every splay node carries its splay-subtree size, and depth-d lookups are
order-statistic selects: after ``access(v)`` the number of in-order
predecessors of a node in v's splay tree equals its depth.

Storage is flat lists indexed by node id rather than node objects; the
benchmark harness drives this structure with tens of millions of
operations, and attribute-per-node objects are measurably slower in
CPython. -1 is the nil sentinel throughout. ``_ppar`` (the path-parent
pointer that hangs a preferred path below its parent path) is only ever
non-nil on splay-tree roots.
"""

from .errors import (
    DepthRangeError,
    DifferentTreesError,
    InvalidNodeError,
    NotRootError,
    RootCutError,
    SameTreeError,
)


class LinkCutForest:
    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self._sleft = [-1] * n
        self._sright = [-1] * n
        self._spar = [-1] * n
        self._ppar = [-1] * n
        self._count = [1] * n
        self._alive = [True] * n
        self.live_count = n
        self.rotations = 0

    # -- universe management ------------------------------------------------

    @property
    def size(self) -> int:
        """Total ids ever allocated, dead slots included."""
        return len(self._alive)

    def is_live(self, v) -> bool:
        return 0 <= v < len(self._alive) and self._alive[v]

    def _check(self, v):
        if not (isinstance(v, int) and 0 <= v < len(self._alive) and self._alive[v]):
            raise InvalidNodeError(v)

    def add_node(self) -> int:
        """Append a fresh singleton root; returns its id."""
        v = len(self._alive)
        self._sleft.append(-1)
        self._sright.append(-1)
        self._spar.append(-1)
        self._ppar.append(-1)
        self._count.append(1)
        self._alive.append(True)
        self.live_count += 1
        return v

    def remove_singleton(self, v):
        """Tombstone an isolated node.

        v must be a represented root with no children. Rootness is checked;
        childlessness cannot be checked cheaply (children hang off arbitrary
        preferred paths) and is the caller's obligation — ``Pseudoforest``
        guarantees it via its indegree counts.
        """
        self._check(v)
        self.access(v)
        if self._sleft[v] != -1:
            raise NotRootError(v)
        self._alive[v] = False
        self.live_count -= 1

    def live_nodes(self):
        return [v for v in range(len(self._alive)) if self._alive[v]]

    # -- splay machinery ------------------------------------------------------

    def _rotate(self, x):
        """Rotate x above its splay parent, preserving in-order; transfers
        the path-parent pointer when x becomes a splay root."""
        sl, sr, sp, ct = self._sleft, self._sright, self._spar, self._count
        p = sp[x]
        g = sp[p]
        if sl[p] == x:
            b = sr[x]
            sl[p] = b
            if b != -1:
                sp[b] = p
            sr[x] = p
        else:
            b = sl[x]
            sr[p] = b
            if b != -1:
                sp[b] = p
            sl[x] = p
        sp[p] = x
        sp[x] = g
        if g != -1:
            if sl[g] == p:
                sl[g] = x
            else:
                sr[g] = x
        else:
            pp = self._ppar
            pp[x] = pp[p]
            pp[p] = -1
        c = 1
        l = sl[p]
        if l != -1:
            c += ct[l]
        r = sr[p]
        if r != -1:
            c += ct[r]
        ct[x] = ct[p]  # x now owns p's old subtree
        ct[p] = c
        self.rotations += 1

    def _splay(self, x):
        """Bottom-up splay of x to the root of its splay tree
        (zig / zig-zig / zig-zag)."""
        sl, sp = self._sleft, self._spar
        rotate = self._rotate
        while True:
            p = sp[x]
            if p == -1:
                return
            g = sp[p]
            if g != -1:
                if (sl[g] == p) == (sl[p] == x):
                    rotate(p)
                else:
                    rotate(x)
            rotate(x)

    def access(self, v) -> int:
        """Make the represented root-to-v path one splay tree with v on top.

        Returns the node where the last preferred-child switch happened
        (v itself when no parent path was joined). Calling access(x) then
        access(y) on the same tree therefore returns lca(x, y) from the
        second call.
        """
        self._check(v)
        sr, sp, pp, ct = self._sright, self._spar, self._ppar, self._count
        self._splay(v)
        r = sr[v]
        if r != -1:
            sp[r] = -1
            pp[r] = v
            sr[v] = -1
            ct[v] -= ct[r]
        switch = v
        w = pp[v]
        while w != -1:
            switch = w
            self._splay(w)
            r = sr[w]
            if r != -1:
                sp[r] = -1
                pp[r] = w
                ct[w] -= ct[r]
            sr[w] = v
            sp[v] = w
            pp[v] = -1
            ct[w] += ct[v]
            self._rotate(v)  # single zig: w was the splay root
            w = pp[v]
        return switch

    # -- represented-tree operations ----------------------------------------

    def find_root(self, v) -> int:
        """Depth-0 node of v's tree. Restructures splay internals only."""
        self.access(v)
        sl = self._sleft
        x = v
        while sl[x] != -1:
            x = sl[x]
        self._splay(x)
        return x

    def depth(self, v) -> int:
        """Number of proper ancestors of v."""
        self.access(v)
        l = self._sleft[v]
        return self._count[l] if l != -1 else 0

    def link(self, c, p):
        """Attach root c below p. c must be a root, p in another tree."""
        self._check(c)
        self._check(p)
        self.access(c)
        if self._sleft[c] != -1:
            raise NotRootError(c)
        if self.find_root(p) == c:
            raise SameTreeError(c, p)
        self._link_root(c, p)

    def _link_root(self, c, p):
        """link() body without precondition checks; c must be an accessed
        represented root, p in a different tree."""
        self.access(c)
        self.access(p)
        self._sleft[c] = p
        self._spar[p] = c
        self._count[c] += self._count[p]

    def cut(self, c):
        """Remove the edge from c to its parent; c becomes a root."""
        self._check(c)
        self.access(c)
        l = self._sleft[c]
        if l == -1:
            raise RootCutError(c)
        self._spar[l] = -1
        self._sleft[c] = -1
        self._count[c] -= self._count[l]

    def level_ancestor(self, v, d) -> int:
        """The ancestor of v at depth d (v itself when d = depth(v))."""
        self.access(v)
        sl, sr, ct = self._sleft, self._sright, self._count
        l = sl[v]
        dv = ct[l] if l != -1 else 0
        if d < 0 or d > dv:
            raise DepthRangeError(v, d, dv)
        # Order-statistic select: the ancestor at depth d has exactly d
        # in-order predecessors in v's splay tree.
        x = v
        need = d
        while True:
            l = sl[x]
            c = ct[l] if l != -1 else 0
            if need < c:
                x = l
            elif need == c:
                break
            else:
                need -= c + 1
                x = sr[x]
        self._splay(x)
        return x

    def parent(self, v):
        """Represented parent of v, or None for roots."""
        self.access(v)
        x = self._sleft[v]
        if x == -1:
            return None
        sr = self._sright
        while sr[x] != -1:
            x = sr[x]
        self._splay(x)
        return x

    def lca(self, x, y) -> int:
        """Deepest common ancestor of x and y (same tree required)."""
        self._check(x)
        self._check(y)
        if self.find_root(x) != self.find_root(y):
            raise DifferentTreesError(x, y)
        return self._lca_connected(x, y)

    def _lca_connected(self, x, y) -> int:
        """lca() body for nodes already known to share a tree."""
        self.access(x)
        return self.access(y)

    # -- debug exports --------------------------------------------------------

    def represented_parents(self):
        """Parent per id (None for roots and dead slots). For oracle diffs;
        splays internally but never changes the represented structure."""
        return [
            self.parent(v) if self._alive[v] else None
            for v in range(len(self._alive))
        ]

    def _splay_inorder(self, v):
        """In-order node list of the splay tree currently containing v,
        without restructuring anything. Test hook."""
        sp = self._spar
        x = v
        while sp[x] != -1:
            x = sp[x]
        out = []
        stack = []
        sl, sr = self._sleft, self._sright
        while stack or x != -1:
            while x != -1:
                stack.append(x)
                x = sl[x]
            x = stack.pop()
            out.append(x)
            x = sr[x]
        return out
