"""Labeled simple graphs and their integer matrices.

A :class:`Graph` keeps its edges as an ordered tuple. The position of an edge
in that tuple is its label, and several constructions (line graphs, the
merged subdivision) rely on it, so every family constructor below fixes and
documents its edge order.

All matrices are returned as read-only ``numpy`` int64 arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import GraphError, ParameterError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    ``edges[j]`` is edge ``j``. Endpoint orientation is kept as given so that
    files round-trip unchanged; it carries no meaning otherwise.
    """

    order: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.order, (int, np.integer)) or self.order < 1:
            raise GraphError(f"order must be a positive integer, got {self.order!r}")
        object.__setattr__(self, "order", int(self.order))
        normalized = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for u, v in normalized:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise GraphError(f"edge ({u}, {v}) has a label outside [0, {self.order})")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "edges", normalized)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        adj = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def same_edges(self, other: Graph) -> bool:
        """Equality of labeled graphs, ignoring edge order and orientation."""
        return self.order == other.order and self.edge_set() == other.edge_set()

    def to_json(self) -> dict:
        return {"order": self.order, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        try:
            order = data["order"]
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph object: {exc}") from exc
        if any(len(e) != 2 for e in edges):
            raise GraphError("every edge must be a pair [u, v]")
        return cls(order, tuple(edges))


def from_adjacency(A) -> Graph:
    """Graph of a symmetric 0/1 matrix, edges in lexicographic order."""
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n) or not np.array_equal(A, A.T):
        raise GraphError("adjacency matrix must be square and symmetric")
    if np.any(np.diag(A) != 0) or not np.isin(A, (0, 1)).all():
        raise GraphError("adjacency matrix must be 0/1 with zero diagonal")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n) if A[i, j]))


# -- families ---------------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph(n)


def cycle(n: int) -> Graph:
    """C_n with edges in traversal order ``(0,1), (1,2), ..., (n-2,n-1), (0,n-1)``."""
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def path(n: int) -> Graph:
    """P_n with edge ``i`` joining ``i`` and ``i+1``."""
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with parts ``0..p-1`` and ``p..p+q-1``, edges lexicographic."""
    _need(p >= 1 and q >= 1, "complete bipartite graph needs p, q >= 1")
    return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def star(m: int) -> Graph:
    """K_{1,m}: center 0, edge ``i`` joins 0 to leaf ``i+1``."""
    _need(m >= 1, "star needs m >= 1")
    return complete_bipartite(1, m)


def star_copies(t: int) -> Graph:
    """tK_{1,2}: copy ``c`` has center ``3c`` and leaves ``3c+1``, ``3c+2``."""
    _need(t >= 1, "need at least one copy")
    edges = []
    for c in range(t):
        edges += [(3 * c, 3 * c + 1), (3 * c, 3 * c + 2)]
    return Graph(3 * t, tuple(edges))


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph: ``i ~ i +- j (mod n)`` for each jump ``j``."""
    jumps = sorted({j % n for j in jumps} - {0})
    _need(n >= 2 and bool(jumps), "circulant needs n >= 2 and a nonzero jump")
    A = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in jumps:
            A[i, (i + j) % n] = A[(i + j) % n, i] = 1
    return from_adjacency(A)


def petersen() -> Graph:
    """Outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner pentagram ``5..9``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(sorted(tuple(sorted(e)) for e in outer + spokes + inner)))


def _cayley_z4z4(connection: set[tuple[int, int]]) -> Graph:
    n = 16
    A = np.zeros((n, n), dtype=np.int64)
    for a, b in itertools.product(range(4), repeat=2):
        for da, db in connection:
            c, d = (a + da) % 4, (b + db) % 4
            A[4 * a + b, 4 * c + d] = 1
    return from_adjacency(A)


def rook(k: int = 4) -> Graph:
    """k x k rook's graph K_k x K_k; cell ``(a, b)`` is vertex ``k*a + b``."""
    _need(k >= 2, "rook graph needs k >= 2")
    n = k * k
    A = np.zeros((n, n), dtype=np.int64)
    for (a, b), (c, d) in itertools.permutations(itertools.product(range(k), repeat=2), 2):
        if a == c or b == d:
            A[k * a + b, k * c + d] = 1
    return from_adjacency(A)


def shrikhande() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1)."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    return _cayley_z4z4(conn)


def kpp_matching(p: int) -> Graph:
    """Perfect matching ``i -- p+i`` inside the canonical K_{p,p}."""
    _need(p >= 1, "p >= 1")
    return Graph(2 * p, tuple((i, p + i) for i in range(p)))


def kpp_minus_matching(p: int) -> Graph:
    """K_{p,p} with the perfect matching ``i -- p+i`` removed."""
    _need(p >= 2, "p >= 2")
    return Graph(2 * p, tuple((i, p + j) for i in range(p) for j in range(p) if i != j))


FAMILIES = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "empty": empty,
    "t_copies_of_star": star_copies,
    "circulant": lambda n, *jumps: circulant(n, jumps),
    "petersen": petersen,
    "rook": rook,
    "shrikhande": shrikhande,
    "kpp_matching": kpp_matching,
    "kpp_minus_matching": kpp_minus_matching,
}


def make_family(name: str, *params: int) -> Graph:
    try:
        ctor = FAMILIES[name]
    except KeyError:
        raise ParameterError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {name}: {exc}") from exc


# -- matrices ---------------------------------------------------------------


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def adjacency(g: Graph) -> np.ndarray:
    A = np.zeros((g.order, g.order), dtype=np.int64)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1
    return _frozen(A)


def incidence(g: Graph) -> np.ndarray:
    """n x m vertex-edge incidence matrix; column ``j`` is edge ``j``."""
    B = np.zeros((g.order, g.size), dtype=np.int64)
    for j, (u, v) in enumerate(g.edges):
        B[u, j] = B[v, j] = 1
    return _frozen(B)


def degree(g: Graph) -> np.ndarray:
    return _frozen(np.diag(np.array(g.degrees(), dtype=np.int64)))


def laplacian(g: Graph) -> np.ndarray:
    return _frozen(degree(g) - adjacency(g))


def signless_laplacian(g: Graph) -> np.ndarray:
    return _frozen(degree(g) + adjacency(g))


MATRIX_KINDS = {
    "adjacency": adjacency,
    "laplacian": laplacian,
    "signless": signless_laplacian,
}


def matrix_of(g: Graph, kind: str) -> np.ndarray:
    try:
        return MATRIX_KINDS[kind](g)
    except KeyError:
        raise ParameterError(f"unknown matrix kind {kind!r}") from None


# -- derived graphs -----------------------------------------------------------


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is edge ``i`` of ``g``; edges lexicographic."""
    if g.size == 0:
        raise GraphError("line graph of an edgeless graph is empty")
    ends = [set(e) for e in g.edges]
    return Graph(
        g.size,
        tuple((i, j) for i, j in itertools.combinations(range(g.size), 2) if ends[i] & ends[j]),
    )


def complement(g: Graph) -> Graph:
    present = g.edge_set()
    return Graph(
        g.order,
        tuple(e for e in itertools.combinations(range(g.order), 2) if frozenset(e) not in present),
    )


def is_regular(g: Graph) -> int | None:
    """Common degree of ``g``, or None when degrees differ."""
    deg = set(g.degrees())
    return deg.pop() if len(deg) == 1 else None

