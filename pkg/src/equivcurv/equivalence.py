"""Verification of structural and regular equivalences.

Graphs get the classical structural/regular partition checks; hypergraphs get
weak and strong variants plus the four-level equivalence hierarchy driven by
the equal-edges random walk. Verifiers return a witness explaining the first
violation found (deterministic iteration order).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .core import Graph, Hypergraph, Partition
from .errors import PreconditionError
from .transport import ee_weights


@dataclass(frozen=True)
class EquivalenceWitness:
    verdict: bool
    violation: dict | None = None  # keys: pair, neighbor, block

    def __bool__(self):
        return self.verdict

    def to_json(self):
        out = {"verdict": self.verdict}
        if self.violation is not None:
            out["violation"] = dict(self.violation)
        return out


class HierarchyLevel(enum.Enum):
    """Hypergraph structural-equivalence strength, weakest to strongest."""

    EE_MEASURE = "ee-measure"
    WEIGHTED_NEIGHBOURHOOD = "weighted-neighbourhood"
    MULTISET = "multiset"
    STRONG = "strong"


def _check_partition(structure, p: Partition):
    if not p.covers(structure.vertices):
        raise PreconditionError("partition does not cover the vertex set exactly")


def _same_block_pairs(structure, p: Partition):
    """Same-block vertex pairs, ordered by dense index within ordered blocks."""
    for block in p.blocks:
        ordered = sorted(block, key=structure.index.__getitem__)
        for a_pos, a in enumerate(ordered):
            for b in ordered[a_pos + 1 :]:
                yield a, b


def is_structural_partition(g: Graph, p: Partition) -> EquivalenceWitness:
    """Same-block vertices must have identical neighbour sets.

    A loop at v puts v in its own neighbour set and is compared verbatim.
    """
    _check_partition(g, p)
    for a, b in _same_block_pairs(g, p):
        na, nb = g.neighbors(a), g.neighbors(b)
        if na != nb:
            c = min(na ^ nb, key=g.index.__getitem__)
            return EquivalenceWitness(
                False,
                {"pair": [a, b], "neighbor": c, "block": p.block_of[c]},
            )
    return EquivalenceWitness(True)


def _neighbor_blocks(g, p, v):
    return {p.block_of[w] for w in g.neighbors(v)}


def is_regular_partition(g: Graph, p: Partition) -> EquivalenceWitness:
    """Same-block vertices must see the same set of neighbour blocks.

    Checked symmetrically in each pair: both directions of the existential
    condition are required.
    """
    _check_partition(g, p)
    for a, b in _same_block_pairs(g, p):
        blocks_a = _neighbor_blocks(g, p, a)
        blocks_b = _neighbor_blocks(g, p, b)
        if blocks_a != blocks_b:
            if blocks_b - blocks_a:
                lacking, having = a, b
                beta = min(blocks_b - blocks_a)
            else:
                lacking, having = b, a
                beta = min(blocks_a - blocks_b)
            c = min(
                (w for w in g.neighbors(having) if p.block_of[w] == beta),
                key=g.index.__getitem__,
            )
            return EquivalenceWitness(
                False,
                {"pair": [lacking, having], "neighbor": c, "block": beta},
            )
    return EquivalenceWitness(True)


def structural_classes(g: Graph) -> Partition:
    """Group vertices with identical neighbour sets.

    Equals the grouping by pairwise curvature 1 on connected loop-free graphs.
    Blocks are ordered by their smallest dense index.
    """
    if g.has_loops():
        raise PreconditionError("structural classes require a loop-free graph")
    groups = {}
    for v in g.vertices:
        groups.setdefault(frozenset(g.neighbors(v)), []).append(v)
    blocks = sorted(groups.values(), key=lambda b: g.index[b[0]])
    return Partition([tuple(b) for b in blocks])


# -- hypergraph equivalences -------------------------------------------------


def is_weak_structural(h: Hypergraph, x, y) -> bool:
    """Weak structural equivalence: identical neighbour sets."""
    return h.neighbors(x) == h.neighbors(y)


def _cardinalities_to(h, x, z):
    """Multiset of |e| over hyperedges containing both x and z."""
    return Counter(
        len(h.hyperedges[ei])
        for ei in h.incident_hyperedges(x)
        if z in h.hyperedges[ei]
    )


def is_strong_structural(h: Hypergraph, x, y) -> bool:
    """Strong structural equivalence, existential cardinality matching.

    Same neighbours, and for every common neighbour a, each hyperedge through
    {x, a} has some hyperedge through {y, a} of equal cardinality, and
    symmetrically. (The hierarchy level STRONG is the stricter bijective
    star-matching notion; see `hierarchy_level`.)
    """
    if not is_weak_structural(h, x, y):
        return False
    for a in h.neighbors(x):
        cards_x = set(_cardinalities_to(h, x, a))
        cards_y = set(_cardinalities_to(h, y, a))
        if cards_x != cards_y:
            return False
    return True


def _weak_neighbor_blocks(h, p, v):
    return {p.block_of[w] for w in h.neighbors(v)}


def is_weak_regular_partition(h: Hypergraph, p: Partition) -> EquivalenceWitness:
    """Weak regular equivalence: neighbour blocks match, cardinalities ignored."""
    _check_partition(h, p)
    for u, v in _same_block_pairs(h, p):
        blocks_u = _weak_neighbor_blocks(h, p, u)
        blocks_v = _weak_neighbor_blocks(h, p, v)
        if blocks_u != blocks_v:
            if blocks_v - blocks_u:
                lacking, having = u, v
                beta = min(blocks_v - blocks_u)
            else:
                lacking, having = v, u
                beta = min(blocks_u - blocks_v)
            c = min(
                (w for w in h.neighbors(having) if p.block_of[w] == beta),
                key=h.index.__getitem__,
            )
            return EquivalenceWitness(
                False,
                {"pair": [lacking, having], "neighbor": c, "block": beta},
            )
    return EquivalenceWitness(True)


def _block_cardinality_pairs(h, p, v):
    """Set of (neighbour block, |e|) reachable from v through some hyperedge."""
    out = set()
    for ei in h.incident_hyperedges(v):
        e = h.hyperedges[ei]
        for w in e:
            if w != v:
                out.add((p.block_of[w], len(e)))
    return out


def is_strong_regular_partition(h: Hypergraph, p: Partition) -> EquivalenceWitness:
    """Strong regular equivalence: witnessing hyperedges must match in |e|."""
    _check_partition(h, p)
    for u, v in _same_block_pairs(h, p):
        pairs_u = _block_cardinality_pairs(h, p, u)
        pairs_v = _block_cardinality_pairs(h, p, v)
        if pairs_u != pairs_v:
            if pairs_v - pairs_u:
                lacking, having = u, v
                beta, _card = min(pairs_v - pairs_u)
            else:
                lacking, having = v, u
                beta, _card = min(pairs_u - pairs_v)
            c = min(
                (w for w in h.neighbors(having) if p.block_of[w] == beta),
                key=h.index.__getitem__,
            )
            return EquivalenceWitness(
                False,
                {"pair": [lacking, having], "neighbor": c, "block": beta},
            )
    return EquivalenceWitness(True)


# -- equivalence hierarchy ---------------------------------------------------


def _star_multiset(h, v, other):
    """Multiset of hyperedge contents seen from v, with v mapped onto `other`."""
    return Counter(
        frozenset(other if w == v else w for w in h.hyperedges[ei])
        for ei in h.incident_hyperedges(v)
    )


def hierarchy_level(h: Hypergraph, x, y) -> set:
    """Every hierarchy level whose predicate holds for the pair (x, y).

    EE_MEASURE: equal equal-edges transition measures.
    WEIGHTED_NEIGHBOURHOOD: equal unnormalised per-neighbour weights
    sum 1/(|e|-1).
    MULTISET: same neighbours and equal per-neighbour cardinality multisets
    (with multiplicity).
    STRONG: a bijection of the incidence stars of x and y preserving hyperedge
    contents (hence cardinalities with multiplicity).
    """
    if h.has_loops():
        raise PreconditionError("hierarchy levels require a loop-free hypergraph")
    levels = set()

    wx, wy = ee_weights(h, x), ee_weights(h, y)
    dx, dy = h.degree(x), h.degree(y)
    mu_x = {z: w / dx for z, w in wx.items()} if dx else {}
    mu_y = {z: w / dy for z, w in wy.items()} if dy else {}
    if mu_x == mu_y:
        levels.add(HierarchyLevel.EE_MEASURE)
    if wx == wy:
        levels.add(HierarchyLevel.WEIGHTED_NEIGHBOURHOOD)

    nx_, ny_ = h.neighbors(x), h.neighbors(y)
    if nx_ == ny_ and all(
        _cardinalities_to(h, x, z) == _cardinalities_to(h, y, z) for z in nx_
    ):
        levels.add(HierarchyLevel.MULTISET)
    if _star_multiset(h, x, y) == _star_multiset(h, y, y):
        levels.add(HierarchyLevel.STRONG)
    return levels


def ee_lemma_check(h: Hypergraph, x, y) -> bool:
    """Hypotheses under which EE-curvature 1 forces strong structural equivalence.

    True iff every common neighbour of x and y is reached through exactly one
    hyperedge on each side, and the degrees of x and y agree.
    """
    if h.degree(x) != h.degree(y):
        return False
    for z in h.neighbors(x) & h.neighbors(y):
        if sum(_cardinalities_to(h, x, z).values()) != 1:
            return False
        if sum(_cardinalities_to(h, y, z).values()) != 1:
            return False
    return True


__all__ = [
    "EquivalenceWitness",
    "HierarchyLevel",
    "is_structural_partition",
    "is_regular_partition",
    "structural_classes",
    "is_weak_structural",
    "is_strong_structural",
    "is_weak_regular_partition",
    "is_strong_regular_partition",
    "hierarchy_level",
    "ee_lemma_check",
]
