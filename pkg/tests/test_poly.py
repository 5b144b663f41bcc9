from fractions import Fraction

import pytest

from mergedsub.poly import ExactPolynomial as P
from mergedsub.poly import RationalFunction as R
from mergedsub.poly import poly_from_json

x = P.x()


def test_arithmetic_and_division():
    p = (x - 1) ** 3 * (x + 2)
    q, r = divmod(p, x - 1)
    assert r == P([]) and q == (x - 1) ** 2 * (x + 2)
    assert p(2) == 4
    assert (x * x).compose(x + 1) == x * x + 2 * x + 1


def test_gcd_and_squarefree():
    p = (x - 1) ** 3 * (x + 2) ** 2 * (x - 5)
    assert p.gcd(p.derivative()) == (x - 1) ** 2 * (x + 2)
    parts = dict((k, f) for f, k in p.squarefree_parts())
    assert parts[1] == x - 5 and parts[2] == x + 2 and parts[3] == x - 1


def test_real_roots_with_multiplicity():
    p = (x - 2) ** 3 * (x * x - 2)
    roots = p.real_roots()
    assert len(roots) == 5
    assert roots == pytest.approx([-(2**0.5), 2**0.5, 2, 2, 2], abs=1e-12)


def test_rational_function_reduced_and_composed():
    f = R((x - 1) * (x + 3), (x - 1) * (2 * x))
    assert f.denominator == x
    assert f.numerator == P([Fraction(3, 2), Fraction(1, 2)])
    g = R(P([1]), x).compose(R(x * x, x - 1))
    assert g == R(x - 1, x * x)
    assert g(Fraction(2)) == Fraction(1, 4)


def test_json_round_trip():
    p = P([Fraction(1, 3), 0, -7])
    assert poly_from_json(p.to_json()) == p
    assert p.to_json()[0] == {"num": "1", "den": "3"}
