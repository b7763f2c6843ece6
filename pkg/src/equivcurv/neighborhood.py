"""Construction of n-neighbourhood graphs.

Three graph variants are supported: simple paths of length exactly n,
non-backtracking walks of length exactly n, and unrestricted walks of length
exactly n. Hypergraphs get the path variant over hyperedge paths. All outputs
are loop-free: a closed length-n walk never produces a self-edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Graph, Hypergraph
from .errors import PreconditionError, ResourceCapError

DEFAULT_PATH_CAP = 8
DEFAULT_VERTEX_CAP = 256
DEFAULT_WORK_BUDGET = 5_000_000


class WalkMode(enum.Enum):
    PATH = "path"
    NON_BACKTRACKING = "nb"
    WALK = "walk"


@dataclass(frozen=True)
class NeighborhoodGraph:
    base: object  # source Graph or Hypergraph
    n: int
    mode: WalkMode
    graph: Graph


def _check_graph_input(g, n):
    if n < 1:
        raise PreconditionError("neighbourhood order n must be >= 1")
    if g.has_loops():
        raise PreconditionError("neighbourhood graphs require a loop-free input")


def _path_edges(g, n, work_budget):
    """Pairs joined by a simple path of length exactly n (DFS enumeration)."""
    adj = g.adjacency()
    pairs = set()
    work = 0

    def extend(start, cur, depth, visited):
        nonlocal work
        if depth == n:
            pairs.add((min(start, cur), max(start, cur)))
            return
        for nxt in adj[cur]:
            if nxt in visited:
                continue
            work += 1
            if work > work_budget:
                raise ResourceCapError(
                    f"path enumeration exceeded work budget {work_budget}"
                )
            visited.add(nxt)
            extend(start, nxt, depth + 1, visited)
            visited.remove(nxt)

    for start in range(g.n_vertices()):
        extend(start, start, 0, {start})
    return pairs


def _nb_edges(g, n):
    """Pairs joined by a non-backtracking walk of length exactly n.

    Reachability in exactly n steps on the directed state graph of oriented
    edges, forbidding immediate reversal.
    """
    adj = g.adjacency()
    pairs = set()
    for start in range(g.n_vertices()):
        states = {(start, nxt) for nxt in adj[start]}  # after one step
        for _ in range(n - 1):
            states = {
                (cur, nxt)
                for prev, cur in states
                for nxt in adj[cur]
                if nxt != prev
            }
        for _, end in states:
            if end != start:
                pairs.add((min(start, end), max(start, end)))
    return pairs


def _walk_edges(g, n):
    """Pairs joined by any walk of length exactly n (boolean relation power)."""
    adj = [set(a) for a in g.adjacency()]
    reach = adj
    for _ in range(n - 1):
        reach = [set().union(*(adj[w] for w in r)) if r else set() for r in reach]
    pairs = set()
    for u, r in enumerate(reach):
        for v in r:
            if v != u:
                pairs.add((min(u, v), max(u, v)))
    return pairs


def neighborhood_graph(
    g: Graph,
    n: int,
    mode: WalkMode = WalkMode.PATH,
    path_cap: int = DEFAULT_PATH_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    override_caps: bool = False,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> NeighborhoodGraph:
    """Build the n-neighbourhood graph of g in the requested mode.

    Path mode enumerates simple paths and is exponential; it is guarded by
    `path_cap` on n and `vertex_cap` on the vertex count unless
    `override_caps` is set, plus a hard work budget that always applies.
    """
    _check_graph_input(g, n)
    if mode is WalkMode.PATH and not override_caps:
        if n > path_cap:
            raise ResourceCapError(
                f"path-mode n={n} exceeds cap {path_cap} (override to proceed)"
            )
        if g.n_vertices() > vertex_cap:
            raise ResourceCapError(
                f"path-mode vertex count {g.n_vertices()} exceeds cap {vertex_cap}"
            )
    if mode is WalkMode.PATH:
        pairs = _path_edges(g, n, work_budget)
    elif mode is WalkMode.NON_BACKTRACKING:
        pairs = _nb_edges(g, n)
    else:
        pairs = _walk_edges(g, n)
    edges = [(g.vertices[i], g.vertices[j]) for i, j in sorted(pairs)]
    return NeighborhoodGraph(base=g, n=n, mode=mode, graph=Graph(g.vertices, edges))


def hyper_neighborhood_graph(
    h: Hypergraph,
    n: int,
    path_cap: int = DEFAULT_PATH_CAP,
    override_caps: bool = False,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> NeighborhoodGraph:
    """Build H_n: edges between vertices joined by a path of n hyperedges.

    A hyperedge path has all vertices and all hyperedges distinct. H_1 is the
    associated graph minus loops.
    """
    if n < 1:
        raise PreconditionError("neighbourhood order n must be >= 1")
    if h.has_loops():
        raise PreconditionError("H_n requires all hyperedges to have |e| >= 2")
    if n > path_cap and not override_caps:
        raise ResourceCapError(
            f"hypergraph path n={n} exceeds cap {path_cap} (override to proceed)"
        )
    incidence = [h.incident_hyperedges(v) for v in h.vertices]
    members = [tuple(h.index[v] for v in e) for e in h.hyperedges]
    pairs = set()
    work = 0

    def extend(start, cur, depth, visited, used):
        nonlocal work
        if depth == n:
            pairs.add((min(start, cur), max(start, cur)))
            return
        for ei in incidence[cur]:
            if ei in used:
                continue
            for nxt in members[ei]:
                if nxt in visited:
                    continue
                work += 1
                if work > work_budget:
                    raise ResourceCapError(
                        f"hyperedge path enumeration exceeded work budget {work_budget}"
                    )
                visited.add(nxt)
                used.add(ei)
                extend(start, nxt, depth + 1, visited, used)
                used.remove(ei)
                visited.remove(nxt)

    for start in range(h.n_vertices()):
        extend(start, start, 0, {start}, set())
    edges = [(h.vertices[i], h.vertices[j]) for i, j in sorted(pairs)]
    return NeighborhoodGraph(
        base=h, n=n, mode=WalkMode.PATH, graph=Graph(h.vertices, edges)
    )


@dataclass(frozen=True)
class InclusionReport:
    n: int
    path_in_nb: bool
    nb_in_walk: bool
    counterexample: tuple | None  # (edge, relation) on violation

    @property
    def holds(self):
        return self.path_in_nb and self.nb_in_walk


def inclusion_check(g: Graph, n: int, **kwargs) -> InclusionReport:
    """Verify E_n <= E_n^NB <= E_n^walk by building all three modes."""
    path = neighborhood_graph(g, n, WalkMode.PATH, **kwargs).graph
    nb = neighborhood_graph(g, n, WalkMode.NON_BACKTRACKING).graph
    walk = neighborhood_graph(g, n, WalkMode.WALK).graph
    path_edges = set(map(frozenset, path.edge_ids()))
    nb_edges = set(map(frozenset, nb.edge_ids()))
    walk_edges = set(map(frozenset, walk.edge_ids()))
    counterexample = None
    path_in_nb = path_edges <= nb_edges
    nb_in_walk = nb_edges <= walk_edges
    if not path_in_nb:
        bad = sorted(tuple(sorted(e)) for e in path_edges - nb_edges)[0]
        counterexample = (bad, "path not in nb")
    elif not nb_in_walk:
        bad = sorted(tuple(sorted(e)) for e in nb_edges - walk_edges)[0]
        counterexample = (bad, "nb not in walk")
    return InclusionReport(n, path_in_nb, nb_in_walk, counterexample)
