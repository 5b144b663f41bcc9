"""Univariate polynomials and rational functions over the rationals.

Coefficients are :class:`fractions.Fraction`, stored in ascending degree with
no trailing zeros. Only what the characteristic-polynomial and coronal
machinery needs is implemented: ring arithmetic, Euclidean division and gcd,
composition, and evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

Number = int | Fraction


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class ExactPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def x(cls) -> ExactPolynomial:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Number) -> ExactPolynomial:
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> ExactPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading == 1

    def monic(self) -> ExactPolynomial:
        if self.is_zero():
            return self
        lead = self.leading
        return ExactPolynomial(c / lead for c in self.coeffs)

    # arithmetic

    @staticmethod
    def _lift(other) -> ExactPolynomial:
        if isinstance(other, ExactPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return ExactPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ExactPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> ExactPolynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial; use RationalFunction")
        result = ExactPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: ExactPolynomial) -> tuple[ExactPolynomial, ExactPolynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return ExactPolynomial(quot), ExactPolynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int, float, mpf, or a polynomial."""
        if isinstance(x, ExactPolynomial):
            return self.compose(x)
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else _as(c, x))
        return acc

    def compose(self, inner: ExactPolynomial) -> ExactPolynomial:
        acc = ExactPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> ExactPolynomial:
        return ExactPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: ExactPolynomial) -> ExactPolynomial:
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_parts(self) -> list[tuple[ExactPolynomial, int]]:
        """Yun's algorithm: ``self = c * prod(s_k ** k)`` with each ``s_k`` squarefree."""
        if self.degree < 1:
            return []
        f = self.monic()
        a = f.gcd(f.derivative())
        b = f // a
        c = f.derivative() // a
        d = c - b.derivative()
        parts = []
        k = 1
        while b.degree > 0:
            s = b.gcd(d)
            if s.degree > 0:
                parts.append((s, k))
            b = b // s
            c = d // s
            d = c - b.derivative()
            k += 1
        return parts

    def real_roots(self, imag_tol: float = 1e-9, dps: int = 60) -> list[float]:
        """Real roots with multiplicity, ascending.

        Multiplicities come from the exact squarefree decomposition, so each
        numeric root-finding call sees only simple roots. Raises ValueError if
        a root has an imaginary part above ``imag_tol``.
        """
        roots: list[float] = []
        for part, mult in self.squarefree_parts():
            for z in _simple_roots(part, dps):
                if abs(z.imag) > imag_tol * max(1.0, abs(z.real)):
                    raise ValueError(f"non-real root {z}")
                roots.extend([float(z.real)] * mult)
        return sorted(roots)

    def __repr__(self):
        if self.is_zero():
            return "ExactPolynomial(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c}" + ("" if i == 0 else ("*x" if i == 1 else f"*x^{i}")))
        return "ExactPolynomial(" + " + ".join(terms) + ")"

    def to_json(self) -> list[dict[str, str]]:
        return [{"num": str(c.numerator), "den": str(c.denominator)} for c in self.coeffs]


def _as(c: Fraction, like):
    if isinstance(like, mpmath.mpf) or isinstance(like, mpmath.mpc):
        return mpmath.mpf(c.numerator) / c.denominator
    return type(like)(c) if isinstance(like, float) else c


def _simple_roots(p: ExactPolynomial, dps: int) -> list[complex]:
    if p.degree == 1:
        return [complex(-p.coeffs[0] / p.coeffs[1])]
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
        found = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps)
    return [complex(z) for z in found]


class RationalFunction:
    """``numerator / denominator`` kept reduced with a monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: ExactPolynomial, denominator: ExactPolynomial | None = None):
        if denominator is None:
            denominator = ExactPolynomial([1])
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = numerator.gcd(denominator)
        if g.degree > 0:
            numerator, denominator = numerator // g, denominator // g
        lead = denominator.leading
        self.numerator = ExactPolynomial(c / lead for c in numerator.coeffs)
        self.denominator = ExactPolynomial(c / lead for c in denominator.coeffs)

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, ExactPolynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(ExactPolynomial([other]))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int) -> RationalFunction:
        if k >= 0:
            return RationalFunction(self.numerator**k, self.denominator**k)
        return RationalFunction(self.denominator**-k, self.numerator**-k)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)

    def compose(self, inner: RationalFunction | ExactPolynomial) -> RationalFunction:
        """``self(inner(x))`` as a reduced rational function."""
        inner = self._lift(inner)
        p, q = inner.numerator, inner.denominator
        d = max(self.numerator.degree, self.denominator.degree, 0)

        # homogenize: f(p/q) = sum c_i p^i q^(d-i) / q^d
        def hom(poly: ExactPolynomial) -> ExactPolynomial:
            acc = ExactPolynomial()
            for i, c in enumerate(poly.coeffs):
                acc = acc + (p**i) * (q ** (d - i)) * c
            return acc

        return RationalFunction(hom(self.numerator), hom(self.denominator))

    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def as_polynomial(self) -> ExactPolynomial:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: denominator {self.denominator}")
        return self.numerator

    def __repr__(self):
        return f"RationalFunction({self.numerator} / {self.denominator})"

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}


def poly_from_json(items: Sequence[dict]) -> ExactPolynomial:
    return ExactPolynomial(Fraction(int(c["num"]), int(c["den"])) for c in items)
