"""Brute-force reference for the successor-graph operation surface.

``NaiveGraph`` stores the successor function as a plain array and answers
every query by walking it. It is deliberately unsophisticated: each method
should be checkable by eye, because the engine in ``pseudoforest`` is
tested by diffing against this class. It exposes the same method names as
``Pseudoforest`` so runners and tests can treat the two interchangeably.

Everything here may take O(n) per call; that is the point.
"""

from .errors import HasIncomingEdgesError, InvalidNodeError


class NaiveGraph:
    """Successor array plus walk-based queries."""

    def __init__(self, n: int):
        self._succ = list(range(n))
        self._alive = [True] * n
        self.live_count = n
        self.op_count = 0

    # -- bookkeeping ------------------------------------------------------

    @property
    def size(self) -> int:
        """Total ids ever allocated, dead slots included."""
        return len(self._succ)

    def is_live(self, v) -> bool:
        return 0 <= v < len(self._succ) and self._alive[v]

    def _check(self, v):
        if not (isinstance(v, int) and 0 <= v < len(self._succ) and self._alive[v]):
            raise InvalidNodeError(v)

    def live_nodes(self):
        return [v for v in range(len(self._succ)) if self._alive[v]]

    def successor_array(self):
        """Debug export: successor per id, None for dead slots."""
        return [self._succ[v] if self._alive[v] else None for v in range(len(self._succ))]

    # -- core operations --------------------------------------------------

    def succ(self, v) -> int:
        self._check(v)
        self.op_count += 1
        return self._succ[v]

    def update(self, v, w):
        self._check(v)
        self._check(w)
        self.op_count += 1
        self._succ[v] = w

    def query(self, v, k) -> int:
        """f^k(v). Walks until the orbit closes, then reduces k modulo the
        cycle length: on revisiting a node first seen at step p1 while at
        step p2, the answer is the node at step p1 + (k - p1) % (p2 - p1).
        """
        self._check(v)
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.op_count += 1
        seq = [v]
        pos = {v: 0}
        cur = v
        while len(seq) <= k:
            cur = self._succ[cur]
            if cur in pos:
                p1 = pos[cur]
                p2 = len(seq)
                return seq[p1 + (k - p1) % (p2 - p1)]
            pos[cur] = len(seq)
            seq.append(cur)
        return seq[k]

    def indegree(self, v) -> int:
        self._check(v)
        succ = self._succ
        return sum(1 for u in range(len(succ)) if self._alive[u] and succ[u] == v)

    def delete(self, v):
        self._check(v)
        self.op_count += 1
        deg = self.indegree(v)
        if deg > 0:
            raise HasIncomingEdgesError(v, deg)
        self._alive[v] = False
        self.live_count -= 1

    def subdivide(self, x) -> int:
        """Insert a fresh node between x and its successor; returns its id."""
        self._check(x)
        self.op_count += 1
        y = len(self._succ)
        self._succ.append(self._succ[x])
        self._alive.append(True)
        self._succ[x] = y
        self.live_count += 1
        return y

    # -- cycle structure ----------------------------------------------------

    def _walk_to_cycle(self, v):
        """(prefix, cycle): forward orbit of v split at the first revisit.
        prefix holds the off-cycle steps (possibly empty), cycle holds the
        cycle nodes starting from v's entry point."""
        seq = [v]
        pos = {v: 0}
        cur = v
        while True:
            cur = self._succ[cur]
            if cur in pos:
                p1 = pos[cur]
                return seq[:p1], seq[p1:]
            pos[cur] = len(seq)
            seq.append(cur)

    def cycle_length(self, v) -> int:
        self._check(v)
        self.op_count += 1
        return len(self._walk_to_cycle(v)[1])

    def on_cycle(self, v) -> bool:
        self._check(v)
        self.op_count += 1
        return len(self._walk_to_cycle(v)[0]) == 0

    def cycle_proximity(self, v) -> int:
        self._check(v)
        self.op_count += 1
        return len(self._walk_to_cycle(v)[0])

    def cycle_nodes(self, v) -> frozenset:
        """The cycle of v's component, as a set."""
        self._check(v)
        return frozenset(self._walk_to_cycle(v)[1])

    def component_root(self, v) -> int:
        """A canonical on-cycle node for v's component: v's cycle entry.

        Representation detail, not a contract: the engine is free to return
        a different cycle node. Comparisons must only rely on the result
        being on the component's cycle.
        """
        self._check(v)
        self.op_count += 1
        prefix, cycle = self._walk_to_cycle(v)
        return cycle[0]

    def same_component(self, x, y) -> bool:
        self._check(x)
        self._check(y)
        return min(self._walk_to_cycle(x)[1]) == min(self._walk_to_cycle(y)[1])

    def inverse_query(self, x, y):
        """Smallest k with f^k(x) = y, or None. Plain walk of at most the
        orbit length."""
        self._check(x)
        self._check(y)
        self.op_count += 1
        cur = x
        k = 0
        seen = set()
        while cur not in seen:
            if cur == y:
                return k
            seen.add(cur)
            cur = self._succ[cur]
            k += 1
        return None

    def meet(self, x, y):
        """Where the forward orbits of x and y merge.

        Returns None if the orbits are disjoint (different components),
        ("tail", node) if the deepest shared node lies off the cycle (then
        it is unique), or ("cycle", nodes) if the orbits only share the
        component's cycle.
        """
        self._check(x)
        self._check(y)
        px, cx = self._walk_to_cycle(x)
        py, cy = self._walk_to_cycle(y)
        if set(cx) != set(cy):
            return None
        shared_tail = [u for u in px if u in set(py)]
        if shared_tail:
            # Orbits coincide from the first shared node on; the earliest
            # one in x's walk is the deepest shared off-cycle node.
            return ("tail", shared_tail[0])
        return ("cycle", frozenset(cx))

    def lca(self, x, y):
        """Deterministic merge point for printing: the unique tail meet, or
        x's cycle entry when the orbits only share the cycle, or None."""
        m = self.meet(x, y)
        self.op_count += 1
        if m is None:
            return None
        kind, val = m
        if kind == "tail":
            return val
        return self._walk_to_cycle(x)[1][0]

    def cycle_decompose(self):
        """Split the live graph into components.

        Returns a list of (cycle_nodes_in_order, dist) pairs, one per
        component, where cycle_nodes_in_order follows successor edges and
        dist maps every member node to its distance from the cycle.
        """
        comp_of = {}
        comps = []
        for v in range(len(self._succ)):
            if not self._alive[v] or v in comp_of:
                continue
            path = []
            cur = v
            while cur not in comp_of:
                path.append(cur)
                comp_of[cur] = -1  # provisional marker for the current walk
                cur = self._succ[cur]
            if comp_of[cur] == -1:
                # Closed a new cycle within the current walk.
                at = path.index(cur)
                cycle = path[at:]
                dist = {u: 0 for u in cycle}
                idx = len(comps)
                comps.append([cycle, dist])
                for u in reversed(path[:at]):
                    dist[u] = dist[self._succ[u]] + 1
                    comp_of[u] = idx
                for u in cycle:
                    comp_of[u] = idx
            else:
                # Walked into a previously classified component.
                idx = comp_of[cur]
                dist = comps[idx][1]
                for u in reversed(path):
                    dist[u] = dist[self._succ[u]] + 1
                    comp_of[u] = idx
        return [(cycle, dist) for cycle, dist in comps]
