"""Closed-form spectra and characteristic polynomials of merged subdivisions.

Every eigenvalue list is assembled from two kinds of pieces: single values
with a multiplicity, and root pairs ``(S +- sqrt(D)) / 2``. Everything before
the square root is done in exact rationals (floats coming from a numeric
eigenbasis are converted exactly with ``Fraction``), and a single float square
root is taken per pair.

A negative multiplicity (``m < n`` in the ``t1^(m-n)`` block, for instance)
means the polynomial identity has a factor ``(x - t1)`` in the denominator;
it cancels against a root of one of the pairs, and :class:`_Roots` performs
that cancellation explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .commuting import PairedSpectrum, bipartition_vector, common_eigenbasis, snap
from .errors import (
    HypothesisError,
    NegativeDiscriminantError,
    ParameterError,
    RegularityError,
)
from .exact import char_poly, coronal
from .graph import (
    Graph,
    adjacency,
    complete_bipartite,
    is_regular,
    laplacian,
    line_graph,
    path,
    signless_laplacian,
)
from .numeric import eigen_symmetric
from .poly import ExactPolynomial, RationalFunction

Value = int | Fraction
_REL = 1e-9


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class _Roots:
    def __init__(self):
        self.singles: list[tuple[Fraction, int]] = []
        self.pairs: list[tuple[Fraction, Fraction]] = []
        self._cancel: list[tuple[Fraction, int]] = []

    def add(self, value, mult: int = 1) -> None:
        if mult > 0:
            self.singles.append((_q(value), mult))
        elif mult < 0:
            self._cancel.append((_q(value), -mult))

    def pair(self, s, d) -> None:
        """Roots ``(s +- sqrt(d)) / 2``."""
        s, d = _q(s), _q(d)
        if d < 0:
            if -d > _REL * max(1, s * s):
                raise NegativeDiscriminantError(
                    f"discriminant {float(d):.6g} < 0 for pair with sum {float(s):.6g}"
                )
            d = Fraction(0)
        self.pairs.append((s, d))

    def count(self) -> int:
        return sum(k for _, k in self.singles) + 2 * len(self.pairs) - sum(
            k for _, k in self._cancel
        )

    def _take(self, value: Fraction) -> bool:
        for idx, (v, k) in enumerate(self.singles):
            if abs(v - value) <= _REL * max(1, abs(value)):
                if k == 1:
                    del self.singles[idx]
                else:
                    self.singles[idx] = (v, k - 1)
                return True
        for idx, (s, d) in enumerate(self.pairs):
            # value is a root iff (2 value - s)^2 == d
            if abs((2 * value - s) ** 2 - d) <= _REL * max(1, s * s, abs(d)):
                del self.pairs[idx]
                self.singles.append((s - value, 1))
                return True
        return False

    def finish(self, expected: int) -> list[float]:
        for value, k in self._cancel:
            for _ in range(k):
                if not self._take(value):
                    raise HypothesisError(
                        f"negative multiplicity of {value} does not cancel against any root"
                    )
        self._cancel = []
        if self.count() != expected:
            raise AssertionError(f"closed form has {self.count()} eigenvalues, expected {expected}")
        out = [float(v) for v, k in self.singles for _ in range(k)]
        for s, d in self.pairs:
            root = math.sqrt(d)
            out += [(float(s) + root) / 2, (float(s) - root) / 2]
        return sorted(out)


# -- commuting regular pairs --------------------------------------------------


@dataclass(frozen=True)
class ParamTriple:
    t1: Fraction
    t2: Fraction
    t3: Fraction

    def __post_init__(self):
        for name in ("t1", "t2", "t3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


@dataclass(frozen=True)
class RegularPairContext:
    """An r-regular G (n vertices, m = nr/2 edges) paired with a commuting regular H."""

    n: int
    m: int
    r: int
    paired: PairedSpectrum
    # the source graphs, when known; lets callers refine irrational pairs
    graphs: tuple[Graph, Graph] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.r < 1:
            raise HypothesisError(f"G must be r-regular with r >= 1, got r={self.r}")
        if 2 * self.m != self.n * self.r:
            raise HypothesisError("edge count must equal n*r/2")
        if len(self.paired) != self.n:
            raise HypothesisError("paired spectrum must have one pair per vertex")
        if self.paired.kind != "laplacian" or self.paired.pairs[0] != (0, 0):
            raise HypothesisError("first Laplacian pair must be (0, 0) for the all-ones vector")

    @classmethod
    def from_graphs(
        cls, g: Graph, h: Graph, anchors: Sequence[Sequence[float]] = ()
    ) -> RegularPairContext:
        r = is_regular(g)
        if r is None:
            raise RegularityError("G must be regular")
        if is_regular(h) is None:
            raise RegularityError("H must be regular")
        paired = common_eigenbasis(g, h, "laplacian", anchors=anchors)
        return cls(g.order, g.size, r, paired, (g, h))

    @property
    def rest(self) -> tuple[tuple[int | float, int | float], ...]:
        """Pairs ``(mu_i(G), mu_i(H))`` for ``i = 2..n``."""
        return self.paired.pairs[1:]


def block_matrix_eigenvalues(ctx: RegularPairContext, t: ParamTriple) -> list[float]:
    """Spectrum of ``[[L(H) + rI, B], [B^T, t1 I + t2 J + t3 B^T B]]``.

    ``t1`` with multiplicity ``m - n``; one pair from the all-ones direction;
    one pair per remaining common eigenvector.
    """
    n, m, r = ctx.n, ctx.m, ctx.r
    t1, t2, t3 = t.t1, t.t2, t.t3
    roots = _Roots()
    roots.add(t1, m - n)
    top = t1 + 2 * r * t3 + m * t2
    roots.pair(r + top, (r - top) ** 2 + 8 * r)
    for mu_g, mu_h in ctx.rest:
        mu_g, mu_h = _q(mu_g), _q(mu_h)
        a = t1 + 2 * r * t3 - t3 * mu_g
        b = r + mu_h
        roots.pair(a + b, (b - a) ** 2 + 4 * (2 * r - mu_g))
    return roots.finish(n + m)


VARIANTS = ("plain", "complete_Km", "line", "line_complement")


def variant_params(ctx: RegularPairContext, variant: str) -> ParamTriple:
    """Bottom-right block ``L(H2) + 2I`` written as ``t1 I + t2 J + t3 B^T B``.

    H2 is the empty graph, K_m, the line graph, or its complement.
    """
    m, r = ctx.m, ctx.r
    table = {
        "plain": (2, 0, 0),
        "complete_Km": (m + 2, -1, 0),
        "line": (2 * r + 2, 0, -1),
        "line_complement": (m - 2 * r + 2, -1, 1),
    }
    try:
        return ParamTriple(*table[variant])
    except KeyError:
        raise ParameterError(f"unknown variant {variant!r}; expected one of {VARIANTS}") from None


def lspec_merged(ctx: RegularPairContext, variant: str) -> list[float]:
    return block_matrix_eigenvalues(ctx, variant_params(ctx, variant))


# -- K_{p,p} ----------------------------------------------------------------------


def _check_kpp_subgraph(p: int, h: Graph) -> int:
    if p < 1:
        raise ParameterError("p >= 1")
    if h.order != 2 * p:
        raise HypothesisError(f"H must have 2p = {2 * p} vertices")
    if any((u < p) == (v < p) for u, v in h.edges):
        raise HypothesisError("H has an edge inside one part of K_{p,p}")
    r = is_regular(h)
    if r is None or r < 1:
        raise HypothesisError("H must be a regular spanning subgraph with r >= 1")
    return r


def kpp_pairing(p: int, h: Graph, h_first: bool = False) -> PairedSpectrum:
    """Pairing of K_{p,p} with H, index 2 anchored to ``[1_p; -1_p]``."""
    kpp = complete_bipartite(p, p)
    first, second = (h, kpp) if h_first else (kpp, h)
    return common_eigenbasis(first, second, "laplacian", anchors=[bipartition_vector(p)])


def lspec_kpp_family(p: int, h: Graph, case: int) -> list[float]:
    """L-spectra of merged subdivisions built from K_{p,p} and a spanning r-regular H.

    Cases 1-3 take G = K_{p,p} with H1 = H and H2 = empty, complete, or
    line-graph complement. Cases 4-6 swap roles (G = H, H1 = K_{p,p}) with the
    same three choices of H2.
    """
    r = _check_kpp_subgraph(p, h)
    if case in (4, 5, 6):
        paired = kpp_pairing(p, h, h_first=True)
        ctx = RegularPairContext(2 * p, p * r, r, paired)
        variant = {4: "plain", 5: "complete_Km", 6: "line_complement"}[case]
        return lspec_merged(ctx, variant)
    if case not in (1, 2, 3):
        raise ParameterError("case must be 1..6")

    paired = kpp_pairing(p, h)
    if paired.pairs[1] != (2 * p, 2 * r):
        raise ArithmeticError(f"anchored pair is {paired.pairs[1]}, expected {(2 * p, 2 * r)}")
    mus = [_q(mu_h) for _, mu_h in paired.pairs[2:]]
    big = p * p - 2 * p + 1
    roots = _Roots()
    roots.add(0)
    roots.add(p + 2)
    roots.add(p + 2 * r)
    if case == 1:
        roots.add(2, big)
        for mu in mus:
            roots.pair(p + mu + 2, (p + mu + 2) ** 2 - 8 * mu - 4 * p)
    elif case == 2:
        roots.add(p * p + 2, big)
        for mu in mus:
            # the discriminant constant is 4p; 8p does not reproduce the spectrum
            roots.pair(p * p + p + mu + 2, (p * p - p - mu + 2) ** 2 + 4 * p)
    else:
        roots.add(p * p - 2 * p + 2, big)
        for mu in mus:
            roots.pair(p * p + mu + 2, (p * p - 2 * p - mu + 2) ** 2 + 4 * p)
    return roots.finish(2 * p + p * p)


# -- stars and paths ------------------------------------------------------------


def _drop_one(values: Sequence[float], target: Value) -> list[int | float]:
    vals = [snap(float(v)) for v in values]
    idx = min(range(len(vals)), key=lambda k: abs(vals[k] - target))
    if abs(vals[idx] - target) > 1e-8 * max(1, abs(target)):
        raise HypothesisError(f"{target} is not an eigenvalue")
    return vals[:idx] + vals[idx + 1:]


def star_spectra(m: int, h: Graph, kind: str = "laplacian") -> list[float]:
    """Spectrum of S(K_{1,m}) with H joined on its m subdivision vertices."""
    if h.order != m:
        raise HypothesisError(f"H must have m = {m} vertices")
    roots = _Roots()
    roots.add(0)
    if kind == "adjacency":
        r = is_regular(h)
        if r is None:
            raise RegularityError("the adjacency formula needs H regular")
        w, _ = eigen_symmetric(adjacency(h))
        roots.pair(r, r * r + 4 * m + 4)
        for lam in _drop_one(w, r):
            lam = _q(lam)
            roots.pair(lam, lam * lam + 4)
    elif kind == "laplacian":
        w, _ = eigen_symmetric(laplacian(h))
        roots.pair(m + 3, (m - 1) ** 2 + 4)
        for mu in _drop_one(w, 0):
            mu = _q(mu)
            roots.pair(mu + 3, (mu + 1) ** 2 + 4)
    else:
        raise ParameterError(f"kind must be adjacency or laplacian, got {kind!r}")
    return roots.finish(2 * m + 1)


def path_polynomial(k: int) -> ExactPolynomial:
    """Characteristic polynomial of A(P_k): ``sum_j (-1)^j C(k-j, j) x^(k-2j)``."""
    coeffs = [0] * (k + 1)
    for j in range(k // 2 + 1):
        coeffs[k - 2 * j] = (-1) ** j * math.comb(k - j, j)
    return ExactPolynomial(coeffs)


def _check_path_index(n: int, i: int) -> None:
    if n < 3:
        raise ParameterError("n >= 3")
    if not 0 <= i <= (n - 1) // 2 - 1:
        raise ParameterError(f"i must lie in [0, {(n - 1) // 2 - 1}] for n={n}")


def path_poly_adjacency(n: int, i: int) -> np.ndarray:
    """``p(A(P_{n-1}))`` for p the characteristic polynomial of P_{2i+1}, exact."""
    _check_path_index(n, i)
    A = np.array(adjacency(path(n - 1)), dtype=object)
    poly = path_polynomial(2 * i + 1)
    out = np.zeros_like(A)
    power = np.identity(n - 1, dtype=object)
    for c in poly.coeffs:
        if c:
            out = out + int(c) * power
        power = power.dot(A)
    out = out.astype(np.int64)
    # a violation here would contradict the classification of path polynomials
    assert np.array_equal(out, out.T), "polynomial image is not symmetric"
    assert np.isin(out, (0, 1)).all() and not np.diag(out).any(), "image is not 0/1"
    out.flags.writeable = False
    return out


def path_polynomial_spectrum(n: int, i: int) -> list[float]:
    """A-spectrum of S(P_n) with H = p(A(P_{n-1})) on the subdivision vertices."""
    _check_path_index(n, i)
    roots = _Roots()
    roots.add(0)
    for j in range(1, n):
        c2 = 2 * math.cos(math.pi * j / n)
        cj = sum(
            (-1) ** k * math.comb(2 * i + 1 - k, k) * c2 ** (2 * (i - k) + 1) for k in range(i + 1)
        )
        roots.pair(cj, cj * cj + 8 * (c2 / 2 + 1))
    return roots.finish(2 * n - 1)


# -- Q-complemented graphs ------------------------------------------------------


def _line_regularity(g: Graph, minimum: int) -> int:
    r = is_regular(line_graph(g))
    if r is None or r < minimum:
        raise RegularityError(f"line graph must be r-regular with r >= {minimum}")
    return r


def _x() -> ExactPolynomial:
    return ExactPolynomial.x()


def q_complemented_charpoly(g: Graph) -> ExactPolynomial:
    """``(-1)^n (x-1)^m (1 - x/(1-x) chi((x^2+x-2)/(1-x))) Q(-x)`` reduced to a polynomial.

    ``chi`` is the coronal of A(L(G)) and ``Q`` the signless Laplacian
    characteristic polynomial of G.
    """
    n, m = g.order, g.size
    x = _x()
    chi = coronal(adjacency(line_graph(g)))
    inner = RationalFunction(x * x + x - 2, 1 - x)
    bracket = 1 - RationalFunction(x, 1 - x) * chi.compose(inner)
    q_neg = char_poly(signless_laplacian(g)).compose(-x)
    result = bracket * ((x - 1) ** m * q_neg * (-1) ** n)
    poly = result.as_polynomial()
    if poly.degree != n + m or not poly.is_monic():
        raise ArithmeticError("assembled polynomial is not monic of degree n+m")
    return poly


def q_complemented_aspec_line_regular(g: Graph) -> list[float]:
    """A-spectrum of the Q-complemented graph when L(G) is r-regular (r >= 1)."""
    n, m = g.order, g.size
    r = _line_regularity(g, 1)
    w, _ = eigen_symmetric(signless_laplacian(g))
    roots = _Roots()
    roots.add(1, m - 1)
    for nu in _drop_one(w, r + 2):
        roots.add(-_q(nu))
    s = m - r - 1
    roots.pair(s, s * s + 4 * r + 8)
    return roots.finish(n + m)


def q_complemented_kpq(p: int, q: int) -> list[float]:
    if p < 1 or q < 1:
        raise ParameterError("p, q >= 1")
    s = p * q - p - q + 1
    roots = _Roots()
    roots.add(0)
    roots.add(1, p * q - 1)
    roots.add(-p, q - 1)
    roots.add(-q, p - 1)
    roots.pair(s, s * s + 4 * (p + q))
    return roots.finish(p + q + p * q)


# -- complete subdivision graphs ------------------------------------------------


def complete_subdivision_charpoly(g: Graph) -> ExactPolynomial:
    """``(x+1)^(m-n) (1 - x chi(x^2+x-2)) Q(x^2+x)`` reduced to a polynomial."""
    n, m = g.order, g.size
    x = _x()
    chi = coronal(adjacency(line_graph(g)))
    bracket = 1 - RationalFunction(x) * chi.compose(x * x + x - 2)
    q_part = char_poly(signless_laplacian(g)).compose(x * x + x)
    result = RationalFunction(x + 1) ** (m - n) * bracket * q_part
    poly = result.as_polynomial()
    if poly.degree != n + m or not poly.is_monic():
        raise ArithmeticError("assembled polynomial is not monic of degree n+m")
    return poly


def complete_subdivision_tstars(t: int) -> list[float]:
    """A-spectrum of the complete subdivision of t disjoint copies of K_{1,2}."""
    if t < 1:
        raise ParameterError("t >= 1")
    roots = _Roots()
    roots.add(0, t)
    for _ in range(t):
        roots.pair(-1, 5)
    for _ in range(t - 1):
        roots.pair(-1, 13)
    roots.pair(2 * t - 1, (2 * t - 1) ** 2 + 12)
    return roots.finish(5 * t)


def complete_subdivision_line_regular(g: Graph) -> list[float]:
    """A-spectrum of the complete subdivision when L(G) is r-regular (r >= 2)."""
    n, m = g.order, g.size
    r = _line_regularity(g, 2)
    w, _ = eigen_symmetric(signless_laplacian(g))
    roots = _Roots()
    roots.add(-1, m - n)
    roots.pair(m - 1, (m - 1) ** 2 + 4 * r + 8)
    for nu in _drop_one(w, r + 2):
        roots.pair(-1, 4 * _q(nu) + 1)
    return roots.finish(n + m)


def complete_subdivision_kpq(p: int, q: int) -> list[float]:
    if p < 1 or q < 1:
        raise ParameterError("p, q >= 1")
    if {p, q} == {1, 2}:
        raise HypothesisError("(p, q) = (1, 2) and (2, 1) are excluded")
    alpha = p * q - p - q + 1
    roots = _Roots()
    roots.add(0)
    roots.add(-1, alpha)
    for _ in range(q - 1):
        roots.pair(-1, 4 * p + 1)
    for _ in range(p - 1):
        roots.pair(-1, 4 * q + 1)
    roots.pair(p * q - 1, (p * q - 1) ** 2 + 4 * (p + q))
    return roots.finish(p + q + p * q)
