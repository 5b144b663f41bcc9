"""Exact rational linear algebra used as independent oracles.

Nothing here touches floating point. Matrices are taken as anything
``numpy.asarray`` accepts and converted to nested lists of Python ``int`` or
``Fraction`` before any arithmetic, so there is no overflow.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import DisconnectedGraphError, ParameterError
from .graph import Graph, laplacian
from .poly import ExactPolynomial, RationalFunction


def _to_exact(M) -> list[list]:
    rows = np.asarray(M, dtype=object).tolist()
    if rows and not isinstance(rows[0], list):
        raise ParameterError("expected a 2-d matrix")
    out = []
    for row in rows:
        conv = []
        for v in row:
            if isinstance(v, (int, Fraction)):
                conv.append(v)
            elif isinstance(v, np.integer):
                conv.append(int(v))
            elif isinstance(v, float) and v.is_integer():
                conv.append(int(v))
            else:
                raise ParameterError(f"non-rational matrix entry {v!r}")
        out.append(conv)
    return out


def _square(M) -> list[list]:
    rows = _to_exact(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParameterError(f"matrix is not square ({n} rows)")
    return rows


def det_bareiss(M) -> int | Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rational input is scaled row-wise to integers first and the scale divided
    out at the end, so the elimination itself is always integer.
    """
    rows = _square(M)
    n = len(rows)
    if n == 0:
        return 1
    scale = 1
    a = []
    for row in rows:
        lcm = 1
        for v in row:
            if isinstance(v, Fraction):
                lcm = math.lcm(lcm, v.denominator)
        scale *= lcm
        a.append([int(v * lcm) for v in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    result = sign * a[n - 1][n - 1]
    return Fraction(result, scale) if scale != 1 else result


def char_poly(M) -> ExactPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier recursion.

    With ``N_0 = I`` and ``c_n = 1``::

        c_{n-k} = -trace(M N_{k-1}) / k
        N_k     = M N_{k-1} + c_{n-k} I

    For an integer matrix every ``c`` is an integer and the division is exact.
    """
    rows = _square(M)
    n = len(rows)
    A = np.array(rows, dtype=object).reshape(n, n)
    integral = all(isinstance(v, int) for row in rows for v in row)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    N = np.identity(n, dtype=object) if n else np.zeros((0, 0), dtype=object)
    for k in range(1, n + 1):
        AN = A.dot(N)
        tr = sum(AN[i, i] for i in range(n))
        if integral:
            q, r = divmod(-tr, k)
            assert r == 0, "Faddeev-LeVerrier produced a non-integer coefficient"
            c = q
        else:
            c = Fraction(-tr) / k
        coeffs[n - k] = c
        N = AN
        for i in range(n):
            N[i, i] = N[i, i] + c
    return ExactPolynomial(coeffs)


def shifted(M, x) -> list[list]:
    """``x I - M`` with exact entries."""
    rows = _square(M)
    n = len(rows)
    return [[(x if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]


def _gauss_jordan(rows: list[list], rhs: list[list]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(v) for v in extra]
           for row, extra in zip(rows, rhs)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [v * inv for v in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [vi - f * vk for vi, vk in zip(aug[i], aug[k])]
    return [row[n:] for row in aug]


def solve(M, b) -> list[Fraction]:
    """Solve ``M y = b`` exactly (Gauss-Jordan over Fractions)."""
    rows = _square(M)
    return [row[0] for row in _gauss_jordan(rows, [[v] for v in b])]


def inverse(M) -> list[list[Fraction]]:
    rows = _square(M)
    n = len(rows)
    return _gauss_jordan(rows, [[int(i == j) for j in range(n)] for i in range(n)])


def coronal(M) -> RationalFunction:
    """Coronal ``1^T (xI - M)^{-1} 1`` as a reduced rational function.

    Uses the rank-one identity ``det(xI - M - J) = (1 - chi(x)) det(xI - M)``,
    i.e. ``chi = (det(xI - M) - det(xI - M - J)) / det(xI - M)``.
    """
    rows = _square(M)
    base = char_poly(rows)
    bumped = char_poly([[v + 1 for v in row] for row in rows])
    return RationalFunction(base - bumped, base)


def coronal_at(M, x) -> Fraction:
    """Coronal evaluated at one rational point by solving ``(xI - M) y = 1``."""
    n = len(_square(M))
    y = solve(shifted(M, Fraction(x)), [1] * n)
    return sum(y, Fraction(0))


def partitioned_identity_sides(A, B, t1, t2, t3, x) -> tuple[Fraction, Fraction]:
    """Both sides of the partitioned characteristic-polynomial identity at ``x``.

    ``M = [[A, B], [B^T, t1 I + t2 J + t3 B^T B]]``. Returns
    ``(det(xI - M), (x - t1)^(m-n) det(((x-t1) I - t3 B B^T - (t2/2) r J)(xI - A) - B B^T))``
    where ``r`` is the common row sum of ``B``. The two agree when every row of
    ``B`` sums to ``r`` and every column sums to 2.
    """
    A = np.array(_square(A), dtype=object)
    B = np.array(_to_exact(B), dtype=object)
    n, m = B.shape
    t1, t2, t3, x = (Fraction(v) for v in (t1, t2, t3, x))
    row_sums = {sum(B[i, :], Fraction(0)) for i in range(n)}
    if len(row_sums) != 1:
        raise ParameterError("B must have a constant row sum")
    r = row_sums.pop()
    BtB = B.T.dot(B)
    BBt = B.dot(B.T)
    bottom = t3 * BtB + t1 * np.identity(m, dtype=object) + t2 * np.ones((m, m), dtype=object)
    M = np.block([[A, B], [B.T, bottom]])
    lhs = det_bareiss(shifted(M, x))

    In = np.identity(n, dtype=object)
    left = (x - t1) * In - t3 * BBt - (t2 / 2) * r * np.ones((n, n), dtype=object)
    inner = left.dot(x * In - A) - BBt
    rhs = (x - t1) ** (m - n) * det_bareiss(inner)
    return Fraction(lhs), Fraction(rhs)


# -- graph oracles -----------------------------------------------------------


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected (spanning tree count is 0)")


def _minor(M: list[list], drop: set[int]) -> list[list]:
    keep = [i for i in range(len(M)) if i not in drop]
    return [[M[i][j] for j in keep] for i in keep]


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: the cofactor of L(g) at (0, 0)."""
    _require_connected(g)
    if g.order == 1:
        return 1
    L = _to_exact(laplacian(g))
    return int(det_bareiss(_minor(L, {0})))


def resistance_distance(g: Graph, i: int, j: int) -> Fraction:
    """Effective resistance ``det L_{ij} / det L_i`` (rows/cols removed)."""
    _require_connected(g)
    if i == j:
        raise ParameterError("resistance distance needs two distinct vertices")
    if not (0 <= i < g.order and 0 <= j < g.order):
        raise ParameterError("vertex out of range")
    L = _to_exact(laplacian(g))
    return Fraction(det_bareiss(_minor(L, {i, j}))) / det_bareiss(_minor(L, {i}))


def kirchhoff_exact(g: Graph) -> Fraction:
    """Sum of resistance distances over unordered vertex pairs.

    With ``X`` the inverse of L(g) minus row/column 0, every pair resistance is
    ``X_ii + X_jj - 2 X_ij`` (and ``X_jj`` against vertex 0), which sums to
    ``n * trace(X) - sum(X)``. This is the same cofactor ratio as
    :func:`resistance_distance`, computed with one exact inversion.
    """
    _require_connected(g)
    n = g.order
    if n == 1:
        return Fraction(0)
    L = _to_exact(laplacian(g))
    X = inverse(_minor(L, {0}))
    trace = sum((X[k][k] for k in range(n - 1)), Fraction(0))
    total = sum((v for row in X for v in row), Fraction(0))
    return n * trace - total


def kirchhoff_pairwise(g: Graph) -> Fraction:
    """Kirchhoff index straight from the pairwise minor ratios (slow; for checks)."""
    return sum(
        (resistance_distance(g, i, j) for i, j in combinations(range(g.order), 2)),
        Fraction(0),
    )
