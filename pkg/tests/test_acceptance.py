"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; ``conftest.py`` prints them at the end of
the pytest run, and ``python3 tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import math
import sys

import numpy as np
import pytest

from mergedsub import closed_form as cf
from mergedsub import invariants as inv
from mergedsub.constructions import MergedTriple, merged_subdivision
from mergedsub.exact import kirchhoff_exact, spanning_tree_count
from mergedsub.graph import complement, complete, cycle, empty, path, rook, shrikhande, star
from mergedsub.numeric import compare_spectra, eigenvalues_of
from mergedsub.suite import paper_core, run_verify

TOL = 1e-8
RESULTS: dict[int, str] = {}

_CASES = paper_core()


def _suite(*prefixes: str) -> tuple[bool, str]:
    cases = [c for c in _CASES if c.id.startswith(prefixes)]
    summary = run_verify(cases)
    failed = [r["id"] for r in summary.reports if not r["passed"]]
    return summary.ok and bool(cases), f"{summary.passed}/{len(cases)} suite cases" + (
        f"; failed: {failed[:5]}" if failed else ""
    )


def _record(k: int, title: str, checks: list[tuple[bool, str]]) -> bool:
    ok = all(c for c, _ in checks)
    RESULTS[k] = f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {title}: " + "; ".join(d for _, d in checks)
    print(RESULTS[k])
    return ok


def _spot(got, want, tol=TOL) -> tuple[bool, str]:
    rep = compare_spectra(got, want, tol)
    return rep.matched, f"spot value residual {rep.max_abs_residual:.1e}"


def criterion_1():
    return _record(1, "construction law on 100 random triples", [_suite("law/")])


def criterion_2():
    ctx = cf.RegularPairContext.from_graphs(cycle(4), empty(4))
    r2 = math.sqrt(2)
    spot = _spot(cf.lspec_merged(ctx, "plain"), [0, 2 - r2, 2 - r2, 2, 2, 2 + r2, 2 + r2, 4])
    return _record(2, "merged L-spectra over the regular catalog", [_suite("merged/", "block/"), spot])


def criterion_3():
    return _record(3, "K_(p,p) family, six cases", [_suite("kpp/")])


def criterion_4():
    r5 = math.sqrt(5)
    want = [0, (5 - r5) / 2, (5 + r5) / 2, (3 - r5) / 2, (3 + r5) / 2]
    got = cf.star_spectra(2, empty(2))
    checks = [_suite("star/"), _spot(got, want), _spot(got, eigenvalues_of(path(5)))]
    return _record(4, "subdivided star with H on the leaves", checks)


def criterion_5():
    images_ok = all(
        np.isin(cf.path_poly_adjacency(n, i), (0, 1)).all()
        for n in range(3, 11)
        for i in range((n - 1) // 2)
    )
    return _record(5, "path polynomials", [_suite("path/"), (images_ok, "0/1 images")])


def criterion_6():
    r17 = math.sqrt(17)
    spot = _spot(cf.q_complemented_kpq(2, 2), [0, 1, 1, 1, -2, -2, (1 + r17) / 2, (1 - r17) / 2])
    return _record(6, "Q-complemented graphs", [_suite("qcomp/"), spot])


def criterion_7():
    cross = _spot(cf.complete_subdivision_tstars(1), cf.star_spectra(2, complete(2), "adjacency"), 1e-10)
    return _record(7, "complete subdivision graphs", [_suite("csub/"), (cross[0], "t=1 cross-check")])


def criterion_8():
    c3 = cf.RegularPairContext.from_graphs(cycle(3), empty(3))
    c4 = cf.RegularPairContext.from_graphs(cycle(4), empty(4))
    g54 = merged_subdivision(MergedTriple(cycle(3), empty(3), complete(3)))
    g3 = merged_subdivision(MergedTriple(star(2), empty(3), complete(2)))
    spots = [
        inv.tau_closed(c4, "plain") == 8 == spanning_tree_count(cycle(8)),
        inv.tau_closed(c3, "complete_Km") == 54 == spanning_tree_count(g54),
        inv.tau_star(2, complete(2)) == 3 == spanning_tree_count(g3),
        inv.tau_closed(c3, "complete_Km", start_index=1) == 324,
    ]
    checks = [_suite("tau/"), (all(spots), "spot values 8, 54, 3; i=1 gives 324")]
    return _record(8, "spanning-tree closed forms", checks)


def criterion_9():
    spot = inv.kf_star(2, empty(2)) == 20 == kirchhoff_exact(path(5))
    return _record(9, "Kirchhoff-index closed forms", [_suite("kf/"), (spot, "Kf(P_5) = 20")])


def _h_for(g, h_of):
    return {"empty": empty(g.order), "complete": complete(g.order), "self": g, "complement": complement(g)}[h_of]


def criterion_10():
    a, b = rook(), shrikhande()
    worst = 0.0
    for h_of in ("empty", "complete", "self", "complement"):
        ca = cf.RegularPairContext.from_graphs(a, _h_for(a, h_of))
        cb = cf.RegularPairContext.from_graphs(b, _h_for(b, h_of))
        for variant in cf.VARIANTS:
            rep = compare_spectra(cf.lspec_merged(ca, variant), cf.lspec_merged(cb, variant), TOL)
            worst = max(worst, rep.max_abs_residual if rep.matched else math.inf)
    checks = [(worst <= TOL, f"closed forms equal, residual {worst:.1e}"), _suite("cospectral/")]
    return _record(10, "rook's graph vs Shrikhande graph", checks)


def criterion_11():
    return _record(11, "partitioned-determinant and coronal identities", [_suite("identity/")])


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    sys.exit(0 if all([c() for c in CRITERIA]) else 1)
