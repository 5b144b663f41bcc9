"""Floating-point spectra: the numeric oracle side of every comparison."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import AsymmetricMatrixError, ParameterError
from .graph import Graph, matrix_of

DEFAULT_TOL = 1e-8
RESIDUAL_TOL = 1e-10


def _as_symmetric(M) -> np.ndarray:
    a = np.asarray(M, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max(initial=0))):
        raise AsymmetricMatrixError("matrix is not symmetric")
    return (a + a.T) / 2


def jacobi_eigh(a: np.ndarray, sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations on a symmetric float matrix."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.identity(n)
    scale = max(1.0, np.linalg.norm(a))
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(1.0, theta)) if theta else 1.0
                c = 1 / np.hypot(1.0, t)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def eigen_symmetric(M, method: str = "lapack") -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvector columns.

    ``method`` is ``"lapack"`` (numpy's ``eigh``) or ``"jacobi"``. Every pair
    is checked against ``||Mv - lv|| <= 1e-10 * max(1, ||M||)``.
    """
    a = _as_symmetric(M)
    if method == "lapack":
        w, v = np.linalg.eigh(a)
    elif method == "jacobi":
        w, v = jacobi_eigh(a)
    else:
        raise ParameterError(f"unknown eigensolver {method!r}")
    norm = max(1.0, np.linalg.norm(a, 2)) if a.size else 1.0
    resid = np.linalg.norm(a @ v - v * w, axis=0) if a.size else np.zeros(0)
    if resid.size and resid.max() > RESIDUAL_TOL * norm:
        raise ArithmeticError(f"eigensolver residual {resid.max():.3e} above tolerance")
    return w, v


@dataclass(frozen=True)
class Spectrum:
    """Sorted ``(value, multiplicity)`` entries."""

    entries: tuple[tuple[float, int], ...]

    @property
    def order(self) -> int:
        return sum(k for _, k in self.entries)

    def expanded(self) -> list[float]:
        return [v for v, k in self.entries for _ in range(k)]

    def to_json(self) -> list[dict]:
        return [{"value": v, "mult": k} for v, k in self.entries]


def cluster(values: Iterable[float], tol: float | None = None) -> Spectrum:
    """Group sorted values whose consecutive gaps are within ``tol``.

    The default tolerance is ``1e-8 * max(1, spectral radius)``. Each cluster
    is reported at its mean.
    """
    vals = sorted(float(v) for v in values)
    if not vals:
        return Spectrum(())
    if tol is None:
        tol = DEFAULT_TOL * max(1.0, max(abs(vals[0]), abs(vals[-1])))
    groups: list[list[float]] = [[vals[0]]]
    for v in vals[1:]:
        if v - groups[-1][-1] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return Spectrum(tuple((float(np.mean(g)), len(g)) for g in groups))


def spectrum_of(g: Graph, kind: str = "laplacian", method: str = "lapack") -> Spectrum:
    w, _ = eigen_symmetric(matrix_of(g, kind), method=method)
    return cluster(w)


def eigenvalues_of(g: Graph, kind: str = "laplacian") -> list[float]:
    w, _ = eigen_symmetric(matrix_of(g, kind))
    return [float(x) for x in w]


@dataclass
class VerificationReport:
    matched: bool
    max_abs_residual: float
    pairs: list[tuple[float, float, float]] = field(default_factory=list)
    tol: float = DEFAULT_TOL

    def to_json(self) -> dict:
        return {
            "matched": self.matched,
            "max_abs_residual": self.max_abs_residual,
            "tol": self.tol,
            "pairs": [{"closed_form": a, "oracle": b, "residual": r} for a, b, r in self.pairs],
        }


def _flatten(s: Spectrum | Sequence[float]) -> list[float]:
    if isinstance(s, Spectrum):
        return s.expanded()
    return [float(x) for x in s]


def compare_spectra(
    a: Spectrum | Sequence[float], b: Spectrum | Sequence[float], tol: float = DEFAULT_TOL
) -> VerificationReport:
    """Sorted pairwise multiset comparison; ``a`` sets the relative scale."""
    xs, ys = sorted(_flatten(a)), sorted(_flatten(b))
    if len(xs) != len(ys):
        raise ParameterError(f"spectra have different sizes: {len(xs)} vs {len(ys)}")
    pairs = [(x, y, abs(x - y)) for x, y in zip(xs, ys)]
    matched = all(r <= tol * max(1.0, abs(x)) for x, _, r in pairs)
    worst = max((r for _, _, r in pairs), default=0.0)
    return VerificationReport(matched, worst, pairs, tol)
