"""Bundled example corpus used by tests and the `fixtures` CLI command.

Each entry reproduces one of the small graphs and hypergraphs used throughout
the package documentation and test suite. Loaders return fresh structures.
"""

from __future__ import annotations

from .core import parse_graph, parse_hypergraph

GRAPHS = {
    # 6-cycle (hexagon)
    "c6": "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n",
    # path 1-2-3 attached to the 6-cycle 4-5-6-9-8-7
    "p9": "1 2\n2 3\n3 4\n4 5\n5 6\n6 9\n9 8\n8 7\n7 4\n",
    # 4-cycle a-p-b-q with pendant c on q
    "fig3": "p b\nb q\nq a\na p\nq c\n",
    # theta graph: a and e joined by three length-2 paths through b, c, d
    "h5": "a b\nb e\ne d\nd a\na c\nc e\n",
    # pendant a on a 6-cycle b-c-e-g-f-d
    "g3": "a b\nb c\nb d\nc e\nd f\ne g\nf g\n",
    # line graph with three edges
    "l3": "1 2\n2 3\n3 4\n",
    # star with three leaves
    "star3": "h l1\nh l2\nh l3\n",
    # two 5-cycles sharing the vertex s
    "two5": "s a1\na1 a2\na2 a3\na3 a4\na4 s\ns b1\nb1 b2\nb2 b3\nb3 b4\nb4 s\n",
}

HYPERGRAPHS = {
    # x reaches a, b, c through one 4-ary hyperedge; y through three edges
    "hx": "x a b c\ny a\ny b\ny c\n",
    # four hyperedges; x and y share all four neighbours
    "h1": "x a b c\na b y\nc d y\nx d\n",
    # weighted-neighbourhood equal, cardinality multisets differ
    "hw": "x z u\nx z w\nx u w\ny z\ny u\ny w\n",
    # per-neighbour multisets equal, incidence stars not matchable
    "hs": "x a b\nx c d\ny a c\ny b d\n",
}


def graph(name):
    return parse_graph(GRAPHS[name])


def hypergraph(name):
    return parse_hypergraph(HYPERGRAPHS[name])


def names():
    return sorted(GRAPHS) + sorted(HYPERGRAPHS)
