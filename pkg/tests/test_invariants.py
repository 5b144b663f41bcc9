from fractions import Fraction

import mpmath
import pytest

from mergedsub import invariants as inv
from mergedsub.closed_form import RegularPairContext
from mergedsub.constructions import MergedTriple, merged_subdivision
from mergedsub.exact import kirchhoff_exact, spanning_tree_count
from mergedsub.graph import complete, cycle, empty, path, petersen, star
from mergedsub.numeric import eigenvalues_of


def test_spot_values():
    ctx = RegularPairContext.from_graphs(cycle(4), empty(4))
    assert inv.tau_closed(ctx, "plain") == 8 == spanning_tree_count(cycle(8))
    assert inv.kf_closed(ctx, "plain") == kirchhoff_exact(cycle(8))
    assert inv.tau_star(2, complete(2)) == 3
    assert inv.kf_star(2, empty(2)) == 20


def test_product_must_start_at_two():
    ctx = RegularPairContext.from_graphs(cycle(3), empty(3))
    g = merged_subdivision(MergedTriple(cycle(3), empty(3), complete(3)))
    assert spanning_tree_count(g) == 54
    assert inv.tau_closed(ctx, "complete_Km") == 54
    assert inv.tau_closed(ctx, "complete_Km", start_index=1) == 324
    # the plain variant collapses to zero under i = 1
    assert inv.tau_closed(ctx, "plain", start_index=1) == 0


def test_irrational_spectra_use_refined_values():
    ctx = RegularPairContext.from_graphs(complete(5), cycle(5))
    value = inv.tau_closed(ctx, "complete_Km")
    assert isinstance(value, mpmath.mpf)
    oracle = spanning_tree_count(merged_subdivision(MergedTriple(complete(5), cycle(5), complete(10))))
    res = inv.judge_tau(value, oracle)
    assert res.agrees and res.rounding_error < 1e-20


def test_star_irregular_h():
    h = path(4)
    g = merged_subdivision(MergedTriple(star(4), empty(5), h))
    assert inv.tau_star(4, h) == spanning_tree_count(g)
    assert inv.judge_kf(inv.kf_star(4, h), kirchhoff_exact(g)).agrees


def test_generic_spectral_formulas():
    w = eigenvalues_of(petersen())
    assert inv.tau_from_spectrum(w) == pytest.approx(2000)
    assert inv.kf_from_spectrum(w) == pytest.approx(float(kirchhoff_exact(petersen())))


def test_judges():
    assert not inv.judge_tau(Fraction(541, 10), 54).agrees
    assert inv.judge_tau(54.0000000001, 54).agrees
    assert not inv.judge_kf(Fraction(20) + Fraction(1, 10**6), Fraction(20)).agrees
    assert inv.judge_tau(8, 8).to_json()["oracle"] == {"num": "8", "den": "1"}
    with pytest.raises(ValueError):
        inv.tau_closed(RegularPairContext.from_graphs(cycle(4), empty(4)), "line")
