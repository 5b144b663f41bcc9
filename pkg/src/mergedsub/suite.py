"""Formula registry and the closed-form-vs-oracle verification harness.

Every closed form is registered under a descriptive id (``merged.L.plain``)
and a short alias (``cor3.1.1``). A :class:`SuiteCase` names a formula and its
inputs; :func:`run_verify` evaluates the closed form and the matching oracle
and reports agreement. Reports come back in declared order whatever the
execution order, and carry no timings, so output is reproducible byte for byte.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from . import closed_form as cf
from . import invariants as inv
from .constructions import MergedTriple, merged_laplacian_blocks, merged_subdivision, named_op
from .errors import GraphError, GraphIOError, MergedSubError, ParameterError
from .exact import (
    char_poly,
    coronal,
    coronal_at,
    kirchhoff_exact,
    partitioned_identity_sides,
    spanning_tree_count,
)
from .graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    cycle,
    empty,
    from_adjacency,
    incidence,
    is_regular,
    laplacian,
    line_graph,
    matrix_of,
    path,
    star,
    star_copies,
)
from .io import parse_graph
from .numeric import DEFAULT_TOL, compare_spectra, eigen_symmetric
from .poly import RationalFunction

KF_TOL = 1e-9

# H2 as a function of G for the three (four) merged variants
_H2 = {
    "plain": lambda g: empty(g.size),
    "complete_Km": lambda g: complete(g.size),
    "line": line_graph,
    "line_complement": lambda g: complement(line_graph(g)),
}


@dataclass(frozen=True)
class Formula:
    id: str
    alias: str
    quantity: str  # spectrum | charpoly | tau | kirchhoff | exact
    needs: tuple[str, ...]
    closed: Callable[[dict], Any]
    build: Callable[[dict], Graph] | None = None
    kind: str = "laplacian"
    oracle: Callable[[dict], Any] | None = None
    tol: float = DEFAULT_TOL
    summary: str = ""


FORMULAS: dict[str, Formula] = {}
ALIASES: dict[str, str] = {}


def _register(f: Formula) -> None:
    FORMULAS[f.id] = f
    ALIASES[f.alias] = f.id


def get_formula(name: str) -> Formula:
    key = ALIASES.get(name, name)
    try:
        return FORMULAS[key]
    except KeyError:
        known = ", ".join(f"{f.id} ({f.alias})" for f in FORMULAS.values())
        raise ParameterError(f"unknown formula {name!r}; known: {known}") from None


# -- input coercion -------------------------------------------------------------

_GRAPH_INPUTS = {"g", "g2", "h"}


def resolve_inputs(formula: Formula, raw: dict) -> dict:
    missing = [k for k in formula.needs if k not in raw]
    if missing:
        raise ParameterError(f"{formula.id} needs inputs {', '.join(missing)}")
    out = {}
    for key, value in raw.items():
        if key in _GRAPH_INPUTS:
            out[key] = parse_graph(value)
        elif key in ("t1", "t2", "t3"):
            out[key] = Fraction(value)
        elif key in ("variant", "h_of"):
            out[key] = str(value)
        else:
            try:
                out[key] = int(value)
            except (TypeError, ValueError):
                raise ParameterError(f"input {key} must be an integer, got {value!r}") from None
    return out


# -- constructions used by the oracles -------------------------------------------


def _ctx(inp: dict) -> cf.RegularPairContext:
    return cf.RegularPairContext.from_graphs(inp["g"], inp["h"])


def _merged(g: Graph, h: Graph, variant: str) -> Graph:
    return merged_subdivision(MergedTriple(g, h, _H2[variant](g)))


def _kpp_build(inp: dict, case: int) -> Graph:
    p, h = inp["p"], inp["h"]
    variant = {1: "plain", 2: "complete_Km", 3: "line_complement"}[(case - 1) % 3 + 1]
    if case <= 3:
        return _merged(complete_bipartite(p, p), h, variant)
    return _merged(h, complete_bipartite(p, p), variant)


def _star_build(inp: dict) -> Graph:
    m = inp["m"]
    return merged_subdivision(MergedTriple(star(m), empty(m + 1), inp["h"]))


def _path_build(inp: dict) -> Graph:
    n, i = inp["n"], inp["i"]
    h = from_adjacency(cf.path_poly_adjacency(n, i))
    return merged_subdivision(MergedTriple(path(n), empty(n), h))


def _block_matrix(inp: dict) -> np.ndarray:
    g, h = inp["g"], inp["h"]
    r = is_regular(g)
    B = incidence(g).astype(float)
    m = g.size
    bottom = (
        float(inp["t1"]) * np.identity(m)
        + float(inp["t2"]) * np.ones((m, m))
        + float(inp["t3"]) * B.T @ B
    )
    top = laplacian(h) + (r or 0) * np.identity(g.order)
    return np.block([[top, B], [B.T, bottom]])


# -- randomized instances (seeded, so cases stay reproducible) -------------------


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    rng.shuffle(edges)
    return Graph(n, tuple(edges))


def random_triple(seed: int, max_order: int = 8) -> MergedTriple:
    rng = random.Random(seed)
    while True:
        g = random_graph(rng, rng.randint(2, max_order))
        if g.size:
            break
    return MergedTriple(g, random_graph(rng, g.order), random_graph(rng, g.size))


def random_irregular(m: int, seed: int) -> Graph:
    rng = random.Random(1000 * m + seed)
    while True:
        h = random_graph(rng, m)
        if is_regular(h) is None:
            return h


def _rational(rng: random.Random, span: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_row_column_matrix(rng: random.Random) -> tuple[list[list[Fraction]], int]:
    """Rational n x m matrix with every row summing to r and every column to 2.

    The incidence matrix of a relabeled r-regular graph plus a doubly centered
    rational perturbation.
    """
    n, r = rng.choice([(2, 1), (3, 2), (4, 1), (4, 2)])
    base = {1: lambda k: Graph(k, tuple((2 * j, 2 * j + 1) for j in range(k // 2))), 2: cycle}[r](n)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in base.edges]
    rng.shuffle(edges)
    inc = incidence(Graph(n, tuple(edges)))
    m = len(edges)
    R = [[_rational(rng) for _ in range(m)] for _ in range(n)]
    row = [sum(R[i], Fraction(0)) / m for i in range(n)]
    col = [sum((R[i][j] for i in range(n)), Fraction(0)) / n for j in range(m)]
    mean = sum(row, Fraction(0)) / n
    B = [[int(inc[i, j]) + R[i][j] - row[i] - col[j] + mean for j in range(m)] for i in range(n)]
    return B, r


def _random_symmetric(rng: random.Random, n: int) -> list[list[Fraction]]:
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A[i][j] = A[j][i] = _rational(rng)
    return A


def partitioned_instance(seed: int, points: int = 20):
    """Random ``(A, B, t1, t2, t3)`` and evaluation points for the partitioned identity."""
    rng = random.Random(seed)
    B, _ = random_row_column_matrix(rng)
    A = _random_symmetric(rng, len(B))
    ts = [_rational(rng) for _ in range(3)]
    xs = []
    while len(xs) < points:
        x = _rational(rng, 40, 7)
        if x != ts[0] and x not in xs:
            xs.append(x)
    return A, B, ts, xs


def coronal_instance(seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = rng.randint(-3, 3)
    return M


# -- exact-comparison closed forms and oracles -----------------------------------


def _law_closed(inp: dict) -> list:
    t = random_triple(inp["seed"])
    n, m = t.g.order, t.g.size
    return [n + m, 2 * m + t.h1.size + t.h2.size, merged_laplacian_blocks(t).assemble().tolist()]


def _law_oracle(inp: dict) -> list:
    G = merged_subdivision(random_triple(inp["seed"]))
    return [G.order, G.size, laplacian(G).tolist()]


def _partitioned(inp: dict, side: int) -> list[Fraction]:
    A, B, (t1, t2, t3), xs = partitioned_instance(inp["seed"])
    return [partitioned_identity_sides(A, B, t1, t2, t3, x)[side] for x in xs]


def _coronal_closed(inp: dict) -> list:
    """``(1 - alpha chi(x)) det(xI - M)`` for alpha in (1, -1, 2), plus chi at sample points."""
    M = coronal_instance(inp["seed"])
    chi = coronal(M)
    base = RationalFunction(char_poly(M))
    out: list = [(1 - a * chi) * base for a in (1, -1, 2)]
    out += [chi(Fraction(x)) for x in _coronal_points(M)]
    return out


def _coronal_oracle(inp: dict) -> list:
    M = coronal_instance(inp["seed"])
    n = len(M)
    out: list = [
        RationalFunction(char_poly([[M[i][j] + a for j in range(n)] for i in range(n)]))
        for a in (1, -1, 2)
    ]
    out += [coronal_at(M, x) for x in _coronal_points(M)]
    return out


def _coronal_points(M) -> list[Fraction]:
    poly = char_poly(M)
    pts = [Fraction(k, 3) for k in range(-12, 13)]
    return [x for x in pts if poly(x) != 0][:5]


def _cospectral_closed(inp: dict) -> list[float]:
    return cf.lspec_merged(_ctx(inp), inp["variant"])


def _h_like(g: Graph, h_of: str) -> Graph:
    return {
        "empty": lambda: empty(g.order),
        "complete": lambda: complete(g.order),
        "self": lambda: g,
        "complement": lambda: complement(g),
    }[h_of]()


# -- the registry -----------------------------------------------------------------

_CF1 = {"plain": "1", "complete_Km": "2", "line": "3", "line_complement": "4"}
for _variant, _num in _CF1.items():
    _register(
        Formula(
            f"merged.L.{_variant}",
            f"cor3.1.{_num}",
            "spectrum",
            ("g", "h"),
            closed=lambda inp, v=_variant: cf.lspec_merged(_ctx(inp), v),
            build=lambda inp, v=_variant: _merged(inp["g"], inp["h"], v),
            summary=f"L-spectrum of the merged subdivision of r-regular G with H1 = H, H2 = {_variant}",
        )
    )

_register(
    Formula(
        "merged.M",
        "thm3.1",
        "spectrum",
        ("g", "h", "t1", "t2", "t3"),
        closed=lambda inp: cf.block_matrix_eigenvalues(
            _ctx(inp), cf.ParamTriple(inp["t1"], inp["t2"], inp["t3"])
        ),
        oracle=lambda inp: list(eigen_symmetric(_block_matrix(inp))[0]),
        summary="spectrum of [[L(H)+rI, B], [B^T, t1 I + t2 J + t3 B^T B]]",
    )
)

for _case in range(1, 7):
    _register(
        Formula(
            f"kpp.case{_case}",
            f"cor3.2.{_case}",
            "spectrum",
            ("p", "h"),
            closed=lambda inp, c=_case: cf.lspec_kpp_family(inp["p"], inp["h"], c),
            build=lambda inp, c=_case: _kpp_build(inp, c),
            summary="L-spectrum for K_{p,p} with a spanning regular subgraph H",
        )
    )

for _kind, _tag in (("adjacency", "A"), ("laplacian", "L")):
    _register(
        Formula(
            f"star.{_tag}",
            f"thm3.2.{_tag}",
            "spectrum",
            ("m", "h"),
            closed=lambda inp, k=_kind: cf.star_spectra(inp["m"], inp["h"], k),
            build=_star_build,
            kind=_kind,
            summary=f"{_kind} spectrum of S(K_(1,m)) with H on the subdivision vertices",
        )
    )

_register(
    Formula(
        "path.poly",
        "cor3.3",
        "spectrum",
        ("n", "i"),
        closed=lambda inp: cf.path_polynomial_spectrum(inp["n"], inp["i"]),
        build=_path_build,
        kind="adjacency",
        summary="A-spectrum of S(P_n) with H = P_(2i+1)(A(P_(n-1)))",
    )
)

_register(
    Formula(
        "qcomp.charpoly",
        "thm3.3",
        "charpoly",
        ("g",),
        closed=lambda inp: cf.q_complemented_charpoly(inp["g"]),
        build=lambda inp: named_op("q_complemented", inp["g"]),
        kind="adjacency",
        summary="characteristic polynomial of the Q-complemented graph",
    )
)
_register(
    Formula(
        "qcomp.line_regular",
        "cor3.4",
        "spectrum",
        ("g",),
        closed=lambda inp: cf.q_complemented_aspec_line_regular(inp["g"]),
        build=lambda inp: named_op("q_complemented", inp["g"]),
        kind="adjacency",
        summary="A-spectrum of the Q-complemented graph, line graph regular",
    )
)
_register(
    Formula(
        "qcomp.kpq",
        "cor3.5",
        "spectrum",
        ("p", "q"),
        closed=lambda inp: cf.q_complemented_kpq(inp["p"], inp["q"]),
        build=lambda inp: named_op("q_complemented", complete_bipartite(inp["p"], inp["q"])),
        kind="adjacency",
        summary="A-spectrum of the Q-complemented K_(p,q)",
    )
)
_register(
    Formula(
        "csub.charpoly",
        "thm3.4",
        "charpoly",
        ("g",),
        closed=lambda inp: cf.complete_subdivision_charpoly(inp["g"]),
        build=lambda inp: named_op("complete_subdivision", inp["g"]),
        kind="adjacency",
        summary="characteristic polynomial of the complete subdivision graph",
    )
)
_register(
    Formula(
        "csub.tstars",
        "cor3.6.1",
        "spectrum",
        ("t",),
        closed=lambda inp: cf.complete_subdivision_tstars(inp["t"]),
        build=lambda inp: named_op("complete_subdivision", star_copies(inp["t"])),
        kind="adjacency",
        summary="A-spectrum of the complete subdivision of t copies of K_(1,2)",
    )
)
_register(
    Formula(
        "csub.line_regular",
        "cor3.6.2",
        "spectrum",
        ("g",),
        closed=lambda inp: cf.complete_subdivision_line_regular(inp["g"]),
        build=lambda inp: named_op("complete_subdivision", inp["g"]),
        kind="adjacency",
        summary="A-spectrum of the complete subdivision graph, line graph r-regular (r >= 2)",
    )
)
_register(
    Formula(
        "csub.kpq",
        "cor3.7",
        "spectrum",
        ("p", "q"),
        closed=lambda inp: cf.complete_subdivision_kpq(inp["p"], inp["q"]),
        build=lambda inp: named_op("complete_subdivision", complete_bipartite(inp["p"], inp["q"])),
        kind="adjacency",
        summary="A-spectrum of the complete subdivision of K_(p,q)",
    )
)

for _variant, _num in (("plain", "1"), ("complete_Km", "2"), ("line_complement", "3")):
    _register(
        Formula(
            f"tau.{_variant}",
            f"cor4.1.{_num}",
            "tau",
            ("g", "h"),
            closed=lambda inp, v=_variant: inv.tau_closed(_ctx(inp), v),
            build=lambda inp, v=_variant: _merged(inp["g"], inp["h"], v),
            summary=f"spanning trees of the {_variant} merged subdivision",
        )
    )
    _register(
        Formula(
            f"kf.{_variant}",
            f"cor4.2.{_num}",
            "kirchhoff",
            ("g", "h"),
            closed=lambda inp, v=_variant: inv.kf_closed(_ctx(inp), v),
            build=lambda inp, v=_variant: _merged(inp["g"], inp["h"], v),
            tol=KF_TOL,
            summary=f"Kirchhoff index of the {_variant} merged subdivision",
        )
    )

_register(
    Formula(
        "tau.star",
        "cor4.1.4",
        "tau",
        ("m", "h"),
        closed=lambda inp: inv.tau_star(inp["m"], inp["h"]),
        build=_star_build,
        summary="spanning trees of S(K_(1,m)) with H on the subdivision vertices",
    )
)
_register(
    Formula(
        "kf.star",
        "cor4.2.4",
        "kirchhoff",
        ("m", "h"),
        closed=lambda inp: inv.kf_star(inp["m"], inp["h"]),
        build=_star_build,
        tol=KF_TOL,
        summary="Kirchhoff index of S(K_(1,m)) with H on the subdivision vertices",
    )
)
_register(
    Formula(
        "tau.spectral",
        "thm4.1",
        "tau",
        ("g",),
        closed=lambda inp: inv.tau_from_spectrum(eigen_symmetric(laplacian(inp["g"]))[0]),
        build=lambda inp: inp["g"],
        summary="prod of nonzero Laplacian eigenvalues / n",
    )
)
_register(
    Formula(
        "kf.spectral",
        "thm4.2",
        "kirchhoff",
        ("g",),
        closed=lambda inp: inv.kf_from_spectrum(eigen_symmetric(laplacian(inp["g"]))[0]),
        build=lambda inp: inp["g"],
        tol=KF_TOL,
        summary="n * sum of reciprocal nonzero Laplacian eigenvalues",
    )
)

_register(
    Formula(
        "construction.law",
        "def2.1",
        "exact",
        ("seed",),
        closed=_law_closed,
        oracle=_law_oracle,
        summary="vertex/edge counts and block Laplacian of a random merged subdivision",
    )
)
_register(
    Formula(
        "identity.partitioned",
        "prop3.1",
        "exact",
        ("seed",),
        closed=lambda inp: _partitioned(inp, 0),
        oracle=lambda inp: _partitioned(inp, 1),
        summary="partitioned determinant identity at 20 rational points",
    )
)
_register(
    Formula(
        "identity.coronal",
        "coronal",
        "exact",
        ("seed",),
        closed=_coronal_closed,
        oracle=_coronal_oracle,
        summary="det(xI - M - aJ) = (1 - a chi(x)) det(xI - M) for a in 1, -1, 2",
    )
)
_register(
    Formula(
        "merged.L.cospectral",
        "note3.1",
        "spectrum",
        ("g", "g2", "h_of", "variant"),
        closed=lambda inp: cf.lspec_merged(
            cf.RegularPairContext.from_graphs(inp["g"], _h_like(inp["g"], inp["h_of"])),
            inp["variant"],
        ),
        build=lambda inp: _merged(inp["g2"], _h_like(inp["g2"], inp["h_of"]), inp["variant"]),
        summary="closed form for G compared with the constructed graph for an L-cospectral G2",
    )
)


# -- evaluation -------------------------------------------------------------------


def closed_value(formula_id: str, raw_inputs: dict):
    f = get_formula(formula_id)
    return f.closed(resolve_inputs(f, raw_inputs))


def oracle_value(formula_id: str, raw_inputs: dict):
    f = get_formula(formula_id)
    inp = resolve_inputs(f, raw_inputs)
    return _oracle(f, inp)


def _oracle(f: Formula, inp: dict):
    if f.oracle is not None:
        return f.oracle(inp)
    G = f.build(inp)
    if f.quantity == "spectrum":
        return [float(v) for v in eigen_symmetric(matrix_of(G, f.kind))[0]]
    if f.quantity == "charpoly":
        M = matrix_of(G, f.kind)
        return char_poly(M), [float(v) for v in eigen_symmetric(M)[0]]
    if f.quantity == "tau":
        return spanning_tree_count(G)
    if f.quantity == "kirchhoff":
        return kirchhoff_exact(G)
    raise AssertionError(f.quantity)


def _rounded(x: float) -> float:
    return float(f"{x:.3e}")


def _compare(f: Formula, closed, oracle, tol: float) -> tuple[bool, dict]:
    if f.quantity == "spectrum":
        rep = compare_spectra(closed, oracle, tol)
        return rep.matched, {"size": len(rep.pairs), "max_abs_residual": _rounded(rep.max_abs_residual)}
    if f.quantity == "charpoly":
        poly, eigs = oracle
        exact_equal = closed == poly
        rep = compare_spectra(closed.real_roots(), eigs, tol)
        detail = {
            "degree": closed.degree,
            "equals_oracle_polynomial": exact_equal,
            "roots_max_abs_residual": _rounded(rep.max_abs_residual),
        }
        return exact_equal and rep.matched, detail
    if f.quantity == "tau":
        res = inv.judge_tau(closed, oracle)
        return res.agrees, res.to_json()
    if f.quantity == "kirchhoff":
        res = inv.judge_kf(closed, oracle, tol)
        return res.agrees, res.to_json()
    if f.quantity == "exact":
        mismatches = sum(1 for a, b in zip(closed, oracle) if a != b) + abs(len(closed) - len(oracle))
        return mismatches == 0, {"checks": len(oracle), "mismatches": mismatches}
    raise AssertionError(f.quantity)


def verify_formula(formula_id: str, raw_inputs: dict, tol: float | None = None) -> tuple[bool, dict]:
    """Closed form vs oracle for one formula instance. Errors propagate."""
    f = get_formula(formula_id)
    inp = resolve_inputs(f, raw_inputs)
    closed = f.closed(inp)
    oracle = _oracle(f, inp)
    return _compare(f, closed, oracle, f.tol if tol is None else tol)


def verify_invariants(formula_id: str, raw_inputs: dict) -> inv.InvariantResult:
    """Closed-form tau or Kirchhoff index of a construction judged against its exact oracle."""
    f = get_formula(formula_id)
    if f.quantity not in ("tau", "kirchhoff"):
        raise ParameterError(f"{f.id} is not a spanning-tree or Kirchhoff formula")
    inp = resolve_inputs(f, raw_inputs)
    closed, oracle = f.closed(inp), _oracle(f, inp)
    if f.quantity == "tau":
        return inv.judge_tau(closed, oracle)
    return inv.judge_kf(closed, oracle, f.tol)


# -- suites -----------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteCase:
    id: str
    formula: str
    construction: dict = field(default_factory=dict)
    tol: float | None = None
    expect: str = "pass"  # "pass" or "error:<ExceptionName>"

    def __post_init__(self):
        get_formula(self.formula)
        if self.expect != "pass" and not self.expect.startswith("error:"):
            raise ParameterError(f"case {self.id}: expect must be 'pass' or 'error:<Name>'")

    def to_json(self) -> dict:
        out = {"id": self.id, "formula": self.formula, "construction": self.construction}
        if self.tol is not None:
            out["tol"] = self.tol
        out["expect"] = self.expect
        return out

    @classmethod
    def from_json(cls, data: dict) -> SuiteCase:
        try:
            return cls(
                id=str(data["id"]),
                formula=str(data["formula"]),
                construction=dict(data.get("construction", {})),
                tol=None if data.get("tol") is None else float(data["tol"]),
                expect=str(data.get("expect", "pass")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, MergedSubError):
                raise
            raise ParameterError(f"malformed case {data!r}: {exc}") from exc


def _error_matches(exc: BaseException, name: str) -> bool:
    return any(cls.__name__ == name for cls in type(exc).__mro__)


def run_case(case: SuiteCase, default_tol: float | None = None) -> dict:
    f = get_formula(case.formula)
    tol = case.tol if case.tol is not None else (default_tol if default_tol is not None else f.tol)
    report: dict[str, Any] = {"id": case.id, "formula": f.id, "expect": case.expect, "tol": tol}
    try:
        ok, detail = verify_formula(case.formula, case.construction, tol)
    except MergedSubError as exc:
        report["outcome"] = f"error:{type(exc).__name__}"
        report["message"] = str(exc)
        expected = case.expect.partition(":")[2]
        report["passed"] = case.expect != "pass" and _error_matches(exc, expected)
        return report
    report["outcome"] = "match" if ok else "mismatch"
    report["detail"] = detail
    report["passed"] = ok and case.expect == "pass"
    return report


@dataclass
class SuiteSummary:
    reports: list[dict]

    @property
    def passed(self) -> int:
        return sum(r["passed"] for r in self.reports)

    @property
    def failed(self) -> int:
        return len(self.reports) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "total": len(self.reports),
            "passed": self.passed,
            "failed": self.failed,
            "cases": self.reports,
        }

    def table(self) -> str:
        rows = [("case", "formula", "outcome", "residual", "result")]
        for r in self.reports:
            d = r.get("detail", {})
            resid = d.get("max_abs_residual", d.get("roots_max_abs_residual", d.get("mismatches", "")))
            rows.append(
                (r["id"], r["formula"], r["outcome"], str(resid), "PASS" if r["passed"] else "FAIL")
            )
        widths = [max(len(row[k]) for row in rows) for k in range(5)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        lines.append(f"{self.passed}/{len(self.reports)} passed")
        return "\n".join(lines)


def _run_star(args):
    return run_case(*args)


def run_verify(
    suite: Sequence[SuiteCase], jobs: int = 1, tol: float | None = None
) -> SuiteSummary:
    """Run every case; reports come back in declared order."""
    work = [(c, tol) for c in suite]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_star, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        reports = [run_case(c, tol) for c in suite]
    return SuiteSummary(reports)


def load_suite(path: str) -> list[SuiteCase]:
    """A JSON file holding a list of cases (or ``{"cases": [...]}``)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphIOError(f"{path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from exc
    if isinstance(data, dict):
        data = data.get("cases")
    if not isinstance(data, list):
        raise ParameterError(f"{path}: expected a list of cases")
    cases = []
    for k, item in enumerate(data):
        try:
            if not isinstance(item, dict):
                raise ParameterError("case must be an object")
            cases.append(SuiteCase.from_json(item))
        except MergedSubError as exc:
            raise ParameterError(f"{path}: case #{k}: {exc}") from exc
    ids = [c.id for c in cases]
    if len(set(ids)) != len(ids):
        raise ParameterError(f"{path}: duplicate case ids")
    return cases


# -- the built-in suite -----------------------------------------------------------


def regular_catalog() -> list[tuple[str, list[str]]]:
    """Regular G with commuting regular H, as spec strings."""
    return [
        ("cycle:4", ["empty:4", "complete:4", "cycle:4", "complement(cycle:4)"]),
        (
            "cycle:6",
            ["empty:6", "complete:6", "cycle:6", "complement(cycle:6)", "circulant:6,2", "circulant:6,3", "circulant:6,1,2"],
        ),
        ("complete:4", ["empty:4", "complete:4", "cycle:4", "circulant:4,2"]),
        ("complete:5", ["empty:5", "complete:5", "cycle:5"]),
        (
            "complete_bipartite:3,3",
            ["empty:6", "complete:6", "complete_bipartite:3,3", "complement(complete_bipartite:3,3)", "kpp_matching:3", "kpp_minus_matching:3"],
        ),
        ("petersen", ["empty:10", "complete:10", "petersen", "complement(petersen)"]),
    ]


def paper_core() -> list[SuiteCase]:
    cases: list[SuiteCase] = []
    add = cases.append

    for seed in range(100):
        add(SuiteCase(f"law/{seed}", "construction.law", {"seed": seed}))

    for g, hs in regular_catalog():
        for h in hs:
            for variant, num in _CF1.items():
                add(SuiteCase(f"merged/{variant}/{g}/{h}", f"cor3.1.{num}", {"g": g, "h": h}))
            for variant, num in (("plain", "1"), ("complete_Km", "2"), ("line_complement", "3")):
                add(SuiteCase(f"tau/{variant}/{g}/{h}", f"cor4.1.{num}", {"g": g, "h": h}))
                add(SuiteCase(f"kf/{variant}/{g}/{h}", f"cor4.2.{num}", {"g": g, "h": h}))
        add(SuiteCase(f"block/{g}", "thm3.1", {"g": g, "h": hs[-1], "t1": "3/2", "t2": "-1/3", "t3": "2"}))

    for p in (2, 3, 4):
        for h in (f"kpp_matching:{p}", f"kpp_minus_matching:{p}", f"complete_bipartite:{p},{p}"):
            for case in range(1, 7):
                add(SuiteCase(f"kpp/{case}/{h}", f"cor3.2.{case}", {"p": p, "h": h}))

    for m in range(2, 9):
        hs = [f"empty:{m}", f"complete:{m}"] + ([f"cycle:{m}"] if m >= 3 else [])
        for h in hs:
            add(SuiteCase(f"star/A/{m}/{h}", "thm3.2.A", {"m": m, "h": h}))
            add(SuiteCase(f"star/L/{m}/{h}", "thm3.2.L", {"m": m, "h": h}))
        for seed in range(5):
            if m == 2:
                break  # every graph on 2 vertices is regular
            h = random_irregular(m, seed).to_json()
            add(SuiteCase(f"star/L/{m}/irregular{seed}", "thm3.2.L", {"m": m, "h": h}))
            add(SuiteCase(f"star/A/{m}/irregular{seed}", "thm3.2.A", {"m": m, "h": h}, expect="error:RegularityError"))
            add(SuiteCase(f"tau/star/{m}/irregular{seed}", "cor4.1.4", {"m": m, "h": h}))
            add(SuiteCase(f"kf/star/{m}/irregular{seed}", "cor4.2.4", {"m": m, "h": h}))
        for h in hs:
            add(SuiteCase(f"tau/star/{m}/{h}", "cor4.1.4", {"m": m, "h": h}))
            add(SuiteCase(f"kf/star/{m}/{h}", "cor4.2.4", {"m": m, "h": h}))

    for n in range(3, 11):
        for i in range((n - 1) // 2):
            add(SuiteCase(f"path/{n}/{i}", "cor3.3", {"n": n, "i": i}))

    for g in ("cycle:4", "cycle:5", "complete:4", "complete_bipartite:2,3"):
        add(SuiteCase(f"qcomp/charpoly/{g}", "thm3.3", {"g": g}))
        add(SuiteCase(f"qcomp/line_regular/{g}", "cor3.4", {"g": g}))
        add(SuiteCase(f"csub/charpoly/{g}", "thm3.4", {"g": g}))
        add(SuiteCase(f"csub/line_regular/{g}", "cor3.6.2", {"g": g}))
    for p, q in ((2, 2), (2, 3), (3, 3), (2, 4)):
        add(SuiteCase(f"qcomp/kpq/{p},{q}", "cor3.5", {"p": p, "q": q}))
    for t in range(1, 5):
        add(SuiteCase(f"csub/tstars/{t}", "cor3.6.1", {"t": t}, tol=1e-10))
    for p, q in ((2, 2), (2, 3), (3, 3)):
        add(SuiteCase(f"csub/kpq/{p},{q}", "cor3.7", {"p": p, "q": q}, tol=1e-10))
    add(SuiteCase("csub/kpq/1,2", "cor3.7", {"p": 1, "q": 2}, expect="error:HypothesisError"))

    for g in ("cycle:4", "complete:4", "complete_bipartite:3,3", "petersen", "path:5", "star:4"):
        add(SuiteCase(f"tau/spectral/{g}", "thm4.1", {"g": g}))
        add(SuiteCase(f"kf/spectral/{g}", "thm4.2", {"g": g}))

    for a, b in (("rook", "shrikhande"), ("shrikhande", "rook")):
        for h_of in ("empty", "complete", "self", "complement"):
            for variant in cf.VARIANTS:
                add(
                    SuiteCase(
                        f"cospectral/{a}/{h_of}/{variant}",
                        "note3.1",
                        {"g": a, "g2": b, "h_of": h_of, "variant": variant},
                    )
                )

    for seed in range(5):
        add(SuiteCase(f"identity/partitioned/{seed}", "prop3.1", {"seed": seed}))
    for seed in range(8):
        add(SuiteCase(f"identity/coronal/{seed}", "coronal", {"seed": seed}))
    return cases


BUILTIN_SUITES: dict[str, Callable[[], list[SuiteCase]]] = {"paper-core": paper_core}
