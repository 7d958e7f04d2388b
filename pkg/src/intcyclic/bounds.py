"""Closed-form upper bounds, parity obstruction, and exact feasible-set
formulas for cycles and trees.

Every bound records which structural premises it verified; a bound whose
premises fail reports not-applicable (None) instead of a value.  The edge
count always caps the number of usable colors, so best_upper is finite for
every graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, GraphError, is_tree, metrics


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: Optional[int]  # None = not-applicable
    premises: tuple[tuple[str, bool], ...]

    @property
    def applicable(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {"name": self.name,
                "value": self.value if self.applicable else "not-applicable",
                "premises": {k: v for k, v in self.premises}}


@dataclass(frozen=True)
class ParityObstruction:
    excludes_even: bool
    premises: tuple[tuple[str, bool], ...]

    @property
    def description(self) -> str:
        return "all even t" if self.excludes_even else "nothing excluded"

    def excludes(self, t: int) -> bool:
        return self.excludes_even and t % 2 == 0

    def to_dict(self) -> dict:
        return {"excluded_t": self.description,
                "premises": {k: v for k, v in self.premises}}


@dataclass(frozen=True)
class BoundReport:
    graph_digest: str
    entries: tuple[BoundEntry, ...]
    parity: ParityObstruction
    best_upper: int

    @property
    def excluded_t(self) -> str:
        return self.parity.description

    def to_dict(self) -> dict:
        return {"graph": self.graph_digest,
                "bounds": [e.to_dict() for e in self.entries],
                "excluded_t": self.excluded_t,
                "best_upper": self.best_upper}

    def table(self) -> str:
        rows = [f"{'bound':<26} {'value':>8}  premises"]
        for e in self.entries:
            val = str(e.value) if e.applicable else "n/a"
            prem = ", ".join(f"{k}={'y' if v else 'n'}" for k, v in e.premises) or "-"
            rows.append(f"{e.name:<26} {val:>8}  {prem}")
        rows.append(f"{'excluded t':<26} {self.excluded_t:>8}")
        rows.append(f"{'best upper':<26} {self.best_upper:>8}")
        return "\n".join(rows)


def bound_triangle_free(g: Graph) -> Optional[int]:
    """|V| + max_degree - 2 for connected triangle-free graphs on >= 2
    vertices; not-applicable otherwise."""
    m = metrics(g)
    if not (m.is_connected and m.is_triangle_free and g.vertex_count >= 2):
        return None
    return g.vertex_count + m.max_degree - 2


def bound_general(g: Graph) -> Optional[int]:
    """2|V| + max_degree - 4 for connected graphs on two vertices, one less
    with three or more vertices."""
    m = metrics(g)
    if not m.is_connected or g.vertex_count < 2:
        return None
    slack = 4 if g.vertex_count == 2 else 5
    return 2 * g.vertex_count + m.max_degree - slack


def bound_shortest_paths(g: Graph) -> Optional[int]:
    """1 + 2 * max over shortest paths of the path's degree-sum excess.

    The max runs over every minimum-length path between every ordered vertex
    pair, computed by dynamic programming over each BFS level structure.
    """
    if g.vertex_count < 2 or not metrics(g).is_connected:
        return None
    weight = [d - 1 for d in g.degrees]
    best = 0
    for s in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        dist[s] = 0
        order = [s]
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    order.append(v)
                    q.append(v)
        f = [0] * g.vertex_count
        f[s] = weight[s]
        for v in order[1:]:
            f[v] = weight[v] + max(f[u] for u in g.adjacency[v] if dist[u] == dist[v] - 1)
            best = max(best, f[v])
    return 1 + 2 * best


def bound_bipartite_diam(g: Graph) -> Optional[int]:
    """1 + 2 * diameter * (max_degree - 1) for connected bipartite graphs."""
    m = metrics(g)
    if not (m.is_connected and m.is_bipartite) or m.diameter is None:
        return None
    return 1 + 2 * m.diameter * (m.max_degree - 1)


def parity_obstruction(g: Graph) -> ParityObstruction:
    """Eulerian graphs with an odd edge count admit no coloring with an even
    number of colors."""
    m = metrics(g)
    odd_edges = g.edge_count % 2 == 1
    return ParityObstruction(
        excludes_even=m.is_eulerian and odd_edges,
        premises=(("eulerian", m.is_eulerian), ("odd-edge-count", odd_edges)),
    )


def report(g: Graph) -> BoundReport:
    m = metrics(g)
    nv, delta = g.vertex_count, m.max_degree
    conn = m.is_connected
    entries = (
        BoundEntry("triangle-free-order", bound_triangle_free(g),
                   (("connected", conn), ("triangle-free", m.is_triangle_free),
                    ("at-least-2-vertices", nv >= 2))),
        BoundEntry("general-order", bound_general(g),
                   (("connected", conn), ("at-least-2-vertices", nv >= 2))),
        BoundEntry("shortest-path-degree-sum", bound_shortest_paths(g),
                   (("connected", conn), ("at-least-2-vertices", nv >= 2))),
        BoundEntry("bipartite-diameter", bound_bipartite_diam(g),
                   (("connected", conn), ("bipartite", m.is_bipartite))),
        BoundEntry("edge-count", g.edge_count, ()),
    )
    best = min(e.value for e in entries if e.applicable)
    return BoundReport(g.digest(), entries, parity_obstruction(g), best)


# ---------------------------------------------------------------------------
# exact feasible-set formulas

def cycle_feasible_set(n: int) -> tuple[int, ...]:
    """Every color count admitting a cyclic coloring of the n-cycle: odd
    values in [3, n] for odd n; for even n, all of [2, n/2+1] plus the even
    values of the upper stretch (which starts one step higher when n = 4k+2)."""
    if n < 3:
        raise ValueError("needs n >= 3")
    if n % 2 == 1:
        return tuple(range(3, n + 1, 2))
    half = n // 2
    low = list(range(2, half + 2))
    start = half + 2 if n % 4 == 0 else half + 3
    return tuple(low + list(range(start, n + 1, 2)))


def tree_lp(tree: Graph, u: int, v: int) -> int:
    """Edges of the unique u-v path plus edges hanging off the path."""
    if not is_tree(tree):
        raise GraphError("input must be a tree")
    if u == v:
        raise ValueError("endpoints must differ")
    parent = [-1] * tree.vertex_count
    parent[u] = u
    q = deque([u])
    while q:
        x = q.popleft()
        if x == v:
            break
        for y in tree.adjacency[x]:
            if parent[y] < 0:
                parent[y] = x
                q.append(y)
    path = {v}
    x = v
    while x != u:
        x = parent[x]
        path.add(x)
    path_edges = len(path) - 1
    off = sum(1 for a, b in tree.edges if (a in path) != (b in path))
    return path_edges + off


def tree_m(tree: Graph) -> int:
    """Max of tree_lp over all vertex pairs; equals the largest usable color
    count for the tree."""
    if not is_tree(tree) or tree.vertex_count < 2:
        raise GraphError("input must be a tree with at least 2 vertices")
    return max(tree_lp(tree, u, v)
               for u in range(tree.vertex_count)
               for v in range(u + 1, tree.vertex_count))


def tree_feasible_set(tree: Graph) -> tuple[int, ...]:
    """The gap-free interval [max_degree, tree_m] of usable color counts."""
    if not is_tree(tree) or tree.vertex_count < 2:
        raise GraphError("input must be a tree with at least 2 vertices")
    return tuple(range(tree.max_degree(), tree_m(tree) + 1))


def k2n_interval_bound(n: int) -> int:
    """Lower bound 4n-2-p-q on the largest usable color count of the complete
    graph on 2n vertices, where n = p * 2^q with p odd."""
    if n < 1:
        raise ValueError("needs n >= 1")
    q = (n & -n).bit_length() - 1
    p = n >> q
    return 4 * n - 2 - p - q
