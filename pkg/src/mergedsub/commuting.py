"""Common eigenbases of commuting graphs and the paired eigenvalue indexing.

For commuting symmetric matrices ``M1`` and ``M2`` the pairing is built as
follows:

1. anchor vectors (the all-ones vector when it is a common eigenvector, plus
   any caller-supplied ones) become the first basis vectors;
2. the orthogonal complement of the anchors is diagonalized for ``M1``;
3. inside each eigenvalue cluster of ``M1``, ``M2`` is projected onto the
   cluster's eigenspace and that small block is diagonalized.

Pair ``k`` is then ``(v_k^T M1 v_k, v_k^T M2 v_k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import HypothesisError, NotCommutingError, OrderMismatchError, RegularityError
from .graph import Graph, adjacency, is_regular, laplacian
from .numeric import DEFAULT_TOL, eigen_symmetric

SNAP_TOL = 1e-9


def snap(value: float) -> int | float:
    """Integer when ``value`` is within 1e-9 (relative) of one.

    Graph eigenvalues are algebraic integers, so a rational eigenvalue is an
    integer; snapping lets downstream closed forms stay in exact arithmetic.
    """
    nearest = round(value)
    if abs(value - nearest) <= SNAP_TOL * max(1.0, abs(value)):
        return int(nearest)
    return float(value)


@dataclass(frozen=True)
class PairedSpectrum:
    """Eigenvalue pairs ``(mu_g, mu_h)`` sharing one eigenvector each.

    ``pairs[0]`` belongs to the all-ones vector whenever that is anchored.
    """

    pairs: tuple[tuple[int | float, int | float], ...]
    kind: str
    basis: np.ndarray | None = None

    def __len__(self):
        return len(self.pairs)

    @property
    def first(self) -> list[int | float]:
        return [a for a, _ in self.pairs]

    @property
    def second(self) -> list[int | float]:
        return [b for _, b in self.pairs]


def commutes(g: Graph, h: Graph) -> bool:
    if g.order != h.order:
        raise OrderMismatchError(f"orders differ: {g.order} vs {h.order}")
    A, B = adjacency(g), adjacency(h)
    return bool(np.array_equal(A @ B, B @ A))


def _matrices(g: Graph, h: Graph, kind: str) -> tuple[np.ndarray, np.ndarray]:
    if kind == "adjacency":
        return adjacency(g), adjacency(h)
    if kind == "laplacian":
        return laplacian(g), laplacian(h)
    raise ValueError(f"unknown pairing kind {kind!r}")


def common_eigenbasis(
    g: Graph,
    h: Graph,
    kind: str = "laplacian",
    anchors: Sequence[Sequence[float]] = (),
    tol: float = DEFAULT_TOL,
) -> PairedSpectrum:
    """Paired spectra of two commuting graphs.

    ``kind="laplacian"`` requires both graphs to be regular (only then do the
    Laplacians inherit commutation from the adjacency matrices). The all-ones
    vector is always anchored first when both graphs are regular. Extra
    ``anchors`` must be common eigenvectors; they are orthonormalized in the
    order given.
    """
    if not commutes(g, h):
        raise NotCommutingError("adjacency matrices do not commute")
    rg, rh = is_regular(g), is_regular(h)
    regular = rg is not None and rh is not None
    if kind == "laplacian" and not regular:
        raise RegularityError("Laplacian pairing needs both graphs regular")
    M1, M2 = (m.astype(float) for m in _matrices(g, h, kind))
    n = g.order

    seeds = [np.ones(n)] if regular else []
    seeds += [np.asarray(a, dtype=float) for a in anchors]
    basis: list[np.ndarray] = []
    for s in seeds:
        v = s.copy()
        for b in basis:
            v -= (b @ v) * b
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise HypothesisError("anchor vectors are linearly dependent")
        v /= norm
        for M in (M1, M2):
            lam = v @ M @ v
            if np.linalg.norm(M @ v - lam * v) > tol * max(1.0, np.linalg.norm(M, 2)):
                raise HypothesisError("anchor is not a common eigenvector")
        basis.append(v)

    if basis:
        Q = scipy.linalg.null_space(np.array(basis))
    else:
        Q = np.identity(n)
    if Q.shape[1]:
        w, V = eigen_symmetric(Q.T @ M1 @ Q)
        scale = tol * max(1.0, np.abs(w).max())
        start = 0
        for k in range(1, len(w) + 1):
            if k == len(w) or w[k] - w[k - 1] > scale:
                block = Q @ V[:, start:k]
                inner = block.T @ M2 @ block
                _, W = eigen_symmetric((inner + inner.T) / 2)
                basis.extend((block @ W).T)
                start = k

    P = np.array(basis).T
    pairs = []
    for v in P.T:
        pairs.append((snap(float(v @ M1 @ v)), snap(float(v @ M2 @ v))))
        for M, lam in ((M1, pairs[-1][0]), (M2, pairs[-1][1])):
            if np.linalg.norm(M @ v - lam * v) > tol * max(1.0, np.linalg.norm(M, 2)):
                raise ArithmeticError("common eigenbasis residual above tolerance")
    return PairedSpectrum(tuple(pairs), kind, P)


def bipartition_vector(p: int) -> np.ndarray:
    """``[1_p ; -1_p]``, the eigenvector of L(K_{p,p}) for eigenvalue 2p."""
    return np.concatenate([np.ones(p), -np.ones(p)])
