"""Spanning-tree counts and Kirchhoff indices from closed-form spectra.

Note on the product index in the spanning-tree formulas: the products run
over ``i = 2..n``. With ``i = 1`` included, the all-ones factor is 0 for the
plain merge (giving tau = 0) and a spurious constant for the other two
(e.g. 324 instead of the true 54 for G = C_3, H = empty, H2 = K_3).
``start_index=1`` reproduces that reading for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from .closed_form import RegularPairContext, _drop_one
from .errors import DisconnectedGraphError, HypothesisError, ParameterError
from .exact import char_poly
from .graph import Graph, laplacian
from .numeric import eigen_symmetric

TAU_VARIANTS = ("plain", "complete_Km", "line_complement")
_DPS = 50


def _polisher(g: Graph) -> Callable[[float], mpmath.mpf]:
    """Newton refinement of a float Laplacian eigenvalue of ``g`` to ``_DPS`` digits.

    Runs on the squarefree part of the exact characteristic polynomial, so
    repeated eigenvalues still converge quadratically.
    """
    p = char_poly(laplacian(g))
    core = p // p.gcd(p.derivative())
    dcore = core.derivative()

    def polish(v: float) -> mpmath.mpf:
        with mpmath.workdps(_DPS):
            x = mpmath.mpf(v)
            for _ in range(12):
                step = core(x) / dcore(x)
                x -= step
                if abs(step) <= mpmath.mpf(10) ** (5 - _DPS) * max(1, abs(x)):
                    break
        if abs(x - v) > 1e-6 * max(1.0, abs(v)):
            raise ArithmeticError(f"refinement of eigenvalue {v} drifted to {x}")
        return x

    return polish


def _mp(c) -> mpmath.mpf:
    c = Fraction(c)
    return mpmath.mpf(c.numerator) / c.denominator


def _numbers(ctx: RegularPairContext, pairs) -> tuple[list, Callable]:
    """Pairs as exact Fractions when all are integers, else as refined mpf values.

    The second item converts constants into the same number type.
    """
    if all(isinstance(a, int) and isinstance(b, int) for a, b in pairs):
        return [(Fraction(a), Fraction(b)) for a, b in pairs], Fraction
    if ctx.graphs is None:
        return [(_mp(a), _mp(b)) for a, b in pairs], _mp
    pg, ph = (_polisher(x) for x in ctx.graphs)
    with mpmath.workdps(_DPS):
        out = [
            (_mp(a) if isinstance(a, int) else pg(a), _mp(b) if isinstance(b, int) else ph(b))
            for a, b in pairs
        ]
    return out, _mp


def _pairs_from(ctx: RegularPairContext, start_index: int):
    if start_index not in (1, 2):
        raise ParameterError("start_index must be 1 or 2")
    pairs = ctx.paired.pairs if start_index == 1 else ctx.rest
    return _numbers(ctx, pairs)


def tau_closed(ctx: RegularPairContext, variant: str, start_index: int = 2):
    """Closed-form spanning-tree count; a Fraction for integral spectra, else an mpf."""
    n, m, r = ctx.n, ctx.m, ctx.r
    pairs, num = _pairs_from(ctx, start_index)
    with mpmath.workdps(_DPS):
        prod = num(1)
        if variant == "plain":
            for mu_g, mu_h in pairs:
                prod *= 2 * mu_h + mu_g
            value = num(Fraction(2) ** (m - n + 1) / n) * prod
        elif variant == "complete_Km":
            for mu_g, mu_h in pairs:
                prod *= (m + 2) * (r + mu_h) + mu_g - 2 * r
            value = num(Fraction(m + 2) ** (m - n) * Fraction(2, n)) * prod
        elif variant == "line_complement":
            for mu_g, mu_h in pairs:
                prod *= (r + mu_h) * (m - mu_g + 2) + mu_g - 2 * r
            value = num(Fraction(m - 2 * r + 2) ** (m - n) * Fraction(2, n)) * prod
        else:
            raise ParameterError(f"unknown variant {variant!r}; expected one of {TAU_VARIANTS}")
    if start_index == 2 and value <= 0:
        raise HypothesisError("non-positive spanning-tree product (construction disconnected?)")
    return value


def tau_star(m: int, h: Graph) -> int:
    """``prod_{i>=2} (mu_i(H) + 1)``, evaluated exactly.

    Since ``mu_1(H) = 0``, the product over ``i >= 2`` equals
    ``prod_i (1 + mu_i(H)) = (-1)^m L_H(-1)`` where ``L_H`` is the Laplacian
    characteristic polynomial.
    """
    if h.order != m:
        raise HypothesisError(f"H must have m = {m} vertices")
    value = char_poly(laplacian(h))(Fraction(-1)) * (-1) ** m
    assert value.denominator == 1
    return int(value)


def kf_closed(ctx: RegularPairContext, variant: str):
    n, m, r = ctx.n, ctx.m, ctx.r
    k1, k2, k3 = m + n, r + 2, m - 2 * r + 2
    rest, num = _numbers(ctx, ctx.rest)
    total = num(0)
    try:
        with mpmath.workdps(_DPS):
            if variant == "plain":
                head = num(Fraction(n, 2) + Fraction(m * m - n * n, 2))
                for mu_g, mu_h in rest:
                    total += (k2 + mu_h) / (2 * mu_h + mu_g)
            elif variant == "complete_Km":
                head = num(Fraction(n, 2) + Fraction(m * m - n * n, m + 2))
                for mu_g, mu_h in rest:
                    total += (m + k2 + mu_h) / (m * (r + mu_h) + 2 * mu_h + mu_g)
            elif variant == "line_complement":
                # with m = n the middle term vanishes even when k3 = 0
                head = num(Fraction(n, 2) + (Fraction(m * m - n * n, k3) if m != n else 0))
                for mu_g, mu_h in rest:
                    total += (m + k2 + mu_h - mu_g) / ((m - mu_g) * (r + mu_h) + 2 * mu_h + mu_g)
            else:
                raise ParameterError(f"unknown variant {variant!r}; expected one of {TAU_VARIANTS}")
            return head + k1 * total
    except ZeroDivisionError:
        raise DisconnectedGraphError("zero denominator: the construction is disconnected") from None


def kf_star(m: int, h: Graph):
    if h.order != m:
        raise HypothesisError(f"H must have m = {m} vertices")
    w, _ = eigen_symmetric(laplacian(h))
    mus = _drop_one(w, 0)
    if all(isinstance(mu, int) for mu in mus):
        total = sum(((Fraction(mu) + 3) / (mu + 1) for mu in mus), Fraction(0))
        return m + 3 + (2 * m + 1) * total
    polish = _polisher(h)
    with mpmath.workdps(_DPS):
        vals = [_mp(mu) if isinstance(mu, int) else polish(mu) for mu in mus]
        return m + 3 + (2 * m + 1) * mpmath.fsum((mu + 3) / (mu + 1) for mu in vals)


# generic Laplacian-spectrum formulas, applied to any connected graph


def tau_from_spectrum(eigenvalues: Sequence[float]) -> float:
    mus = sorted(eigenvalues)
    return math.prod(mus[1:]) / len(mus)


def kf_from_spectrum(eigenvalues: Sequence[float]) -> float:
    mus = sorted(eigenvalues)
    return len(mus) * sum(1 / mu for mu in mus[1:])


@dataclass
class InvariantResult:
    quantity: str
    closed_form_value: Fraction | float | mpmath.mpf
    oracle_value: Fraction | int
    rounding_error: float
    agrees: bool

    def to_json(self) -> dict:
        ov = Fraction(self.oracle_value)
        return {
            "quantity": self.quantity,
            "closed_form": float(self.closed_form_value),
            "oracle": {"num": str(ov.numerator), "den": str(ov.denominator)},
            "rounding_error": self.rounding_error,
            "agrees": self.agrees,
        }


def _exact_or_mp(v):
    return v if isinstance(v, mpmath.mpf) else Fraction(v)


def judge_tau(closed, oracle: int) -> InvariantResult:
    """Agreement: round(closed) == oracle, pre-round error <= 1e-6, relative gap <= 1e-6."""
    q = _exact_or_mp(closed)
    with mpmath.workdps(_DPS):
        nearest = int(mpmath.nint(q)) if isinstance(q, mpmath.mpf) else round(q)
        err = float(abs(q - nearest))
        gap = float(abs(q - oracle))
    agrees = nearest == oracle and err <= 1e-6 and gap <= 1e-6 * max(1, oracle)
    return InvariantResult("tau", closed, oracle, err, agrees)


def judge_kf(closed, oracle: Fraction, rel: float = 1e-9) -> InvariantResult:
    with mpmath.workdps(_DPS):
        gap = abs(_exact_or_mp(closed) - (_mp(oracle) if isinstance(closed, mpmath.mpf) else oracle))
        agrees = bool(gap <= rel * max(1, float(oracle)))
    return InvariantResult("kirchhoff", closed, oracle, 0.0, agrees)
