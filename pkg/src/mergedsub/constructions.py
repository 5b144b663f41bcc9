"""The (H1, H2)-merged subdivision of a graph and its named special cases.

Vertex labels of every construction are fixed:

* ``0 .. n-1`` are the vertices of ``G`` in their original order;
* ``n + j`` is the subdivision vertex placed on edge ``j`` of ``G``.

``H1`` lives on the first block and ``H2`` on the second, so vertex ``j`` of
``H2`` is identified with edge ``j`` of ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import GraphError, OrderMismatchError, ParameterError
from .graph import (
    Graph,
    complement,
    complete,
    degree,
    empty,
    incidence,
    laplacian,
    line_graph,
)


@dataclass(frozen=True)
class MergedTriple:
    g: Graph
    h1: Graph
    h2: Graph

    def __post_init__(self):
        if self.g.size == 0:
            raise GraphError("G needs at least one edge")
        if self.h1.order != self.g.order:
            raise OrderMismatchError(
                f"H1 has order {self.h1.order}, G has {self.g.order} vertices"
            )
        if self.h2.order != self.g.size:
            raise OrderMismatchError(f"H2 has order {self.h2.order}, G has {self.g.size} edges")


@dataclass(frozen=True)
class MergedLaplacianBlocks:
    top_left: np.ndarray
    top_right: np.ndarray
    bottom_right: np.ndarray

    def assemble(self) -> np.ndarray:
        return np.block([[self.top_left, self.top_right], [self.top_right.T, self.bottom_right]])


def merged_subdivision(t: MergedTriple) -> Graph:
    """Subdivision edges first (``(u, n+j)``, ``(v, n+j)`` per edge ``j``), then
    the edges of H1, then the edges of H2 shifted by ``n``."""
    n = t.g.order
    edges = []
    for j, (u, v) in enumerate(t.g.edges):
        edges += [(u, n + j), (v, n + j)]
    edges += list(t.h1.edges)
    edges += [(n + a, n + b) for a, b in t.h2.edges]
    return Graph(n + t.g.size, tuple(edges))


def merged_laplacian_blocks(t: MergedTriple) -> MergedLaplacianBlocks:
    m = t.g.size
    return MergedLaplacianBlocks(
        top_left=laplacian(t.h1) + degree(t.g),
        top_right=-incidence(t.g),
        bottom_right=laplacian(t.h2) + 2 * np.identity(m, dtype=np.int64),
    )


def _line_complement(g: Graph) -> Graph:
    return complement(line_graph(g))


# name -> (H1 builder, H2 builder); each builder takes G
_PAIRS: dict[str, tuple[Callable[[Graph], Graph], Callable[[Graph], Graph]]] = {
    "subdivision": (lambda g: empty(g.order), lambda g: empty(g.size)),
    "r_graph": (lambda g: g, lambda g: empty(g.size)),
    "central": (complement, lambda g: empty(g.size)),
    "q_graph": (lambda g: empty(g.order), line_graph),
    "total": (lambda g: g, line_graph),
    "quasitotal": (complement, line_graph),
    "point_complete_subdivision": (lambda g: complete(g.order), lambda g: empty(g.size)),
    "q_complemented": (lambda g: empty(g.order), _line_complement),
    "total_complemented": (lambda g: g, _line_complement),
    "quasitotal_complemented": (complement, _line_complement),
    "complete_q_complemented": (lambda g: complete(g.order), _line_complement),
    "complete_subdivision": (lambda g: empty(g.order), lambda g: complete(g.size)),
    "complete_r_graph": (lambda g: g, lambda g: complete(g.size)),
    "complete_central": (complement, lambda g: complete(g.size)),
    "fully_complete_subdivision": (lambda g: complete(g.order), lambda g: complete(g.size)),
}

NAMED_OPS = tuple(_PAIRS) + ("overlay",)


def named_triple(name: str, g: Graph, h: Graph | None = None) -> MergedTriple:
    """The (G, H1, H2) triple a named operation stands for."""
    if name == "overlay":
        if h is None:
            raise ParameterError("overlay needs a second graph H")
        if h.order != g.order:
            raise OrderMismatchError("overlay needs H of the same order as G")
        return MergedTriple(g, h, line_graph(g))
    try:
        b1, b2 = _PAIRS[name]
    except KeyError:
        raise ParameterError(
            f"unknown operation {name!r}; valid names: {', '.join(NAMED_OPS)}"
        ) from None
    return MergedTriple(g, b1(g), b2(g))


def named_op(name: str, g: Graph, h: Graph | None = None) -> Graph:
    return merged_subdivision(named_triple(name, g, h))


def subdivision(g: Graph) -> Graph:
    return named_op("subdivision", g)


def total_graph(g: Graph) -> Graph:
    return named_op("total", g)


def q_complemented(g: Graph) -> Graph:
    return named_op("q_complemented", g)


def complete_subdivision(g: Graph) -> Graph:
    return named_op("complete_subdivision", g)
