"""Acceptance criteria 1-8.  Each test prints one ``criterion N: PASS/FAIL`` line
and records it for the end-of-session summary."""

import time
from fractions import Fraction as F

import numpy as np

from conftest import ACCEPTANCE, nonisomorphic_graphs
from q2kit.coloring import exact_edge_color, one_factorize, vizing_color
from q2kit.exact_linalg import RationalMatrix, build_projector_family, verify_nowhere_zero
from q2kit.graphs import (
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    modified_strong_product,
    octahedron,
    octahedron_triangle_hypergraph,
    path,
    petersen,
    rook,
    rook_hypergraph,
    star,
    strong_product,
)
from q2kit.oracle import eigensolve_symmetric
from q2kit.witness import (
    SummandFamily,
    component_eigenpairs,
    eigvec_structure_check,
    witness_hypergraph,
    witness_maxdeg,
    witness_onefactor,
)


def record(key, ok, detail):
    ACCEPTANCE[key] = (ok, detail)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def float_check(cert, centroids, tol=1e-8):
    clusters = eigensolve_symmetric(cert.M.to_float()).clusters()
    got = [c for c, _ in clusters]
    return len(got) == len(centroids) and all(abs(a - b) <= tol for a, b in zip(got, centroids)), got


def test_criterion_1_projector_family():
    t0 = time.perf_counter()
    failures = []
    for k in range(1, 13):
        fam = build_projector_family(k)
        ident = RationalMatrix.identity(k)
        ok = fam.Q @ fam.Q.T == ident
        total = RationalMatrix.zeros(k)
        for i, ji in enumerate(fam.J):
            ok &= ji @ ji == ji
            ok &= all((ji @ jj).is_zero() for j, jj in enumerate(fam.J) if j != i)
            total = total + ji
        ok &= total == ident
        if k >= 2:
            rep = verify_nowhere_zero(fam, "exhaustive")
            ok &= rep.ok and rep.checked == 2**k - 2
        if not ok:
            failures.append(k)
    elapsed = time.perf_counter() - t0
    record(1, not failures and elapsed < 30, f"k=1..12 failures={failures} time={elapsed:.2f}s (<30s)")


ONEFACTOR_FIXTURES = {
    "K4 mod K3": complete(4),
    "K33 mod K3": complete_bipartite(3, 3),
    "C4 mod K2": cycle(4),
    "C6 mod K2": cycle(6),
    "C8 mod K2": cycle(8),
    "C10 mod K2": cycle(10),
    "Q3 mod K3": hypercube(3),
}


def test_criterion_2_onefactor_fixtures():
    bad, slowest = [], 0.0
    for name, g in ONEFACTOR_FIXTURES.items():
        t0 = time.perf_counter()
        cert = witness_onefactor(g, one_factorize(g))
        floats_ok, _ = float_check(cert, [-1.0, 1.0])
        ok = cert.valid and (cert.lam1, cert.lam2) == (-1, 1) and floats_ok
        ok &= cert.target == modified_strong_product(g, complete(len(one_factorize(g))))
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        if not ok or dt >= 10:
            bad.append(name)
    record(2, not bad, f"{len(ONEFACTOR_FIXTURES)} fixtures, bad={bad}, slowest={slowest:.2f}s (<10s each)")


def test_criterion_3_maxdeg_fixtures():
    bad = []
    for name, g in {"P4 strong K3": path(4), "K13 strong K4": star(3), "Petersen strong K4": petersen()}.items():
        cert = witness_maxdeg(g, vizing_color(g))
        floats_ok, _ = float_check(cert, [-1.0, 1.0])
        if not (cert.valid and (cert.lam1, cert.lam2) == (-1, 1) and floats_ok and cert.k == g.max_degree() + 1):
            bad.append(name)
    class_two = exact_edge_color(petersen(), 3) is None
    record(3, not bad and class_two, f"bad={bad}, petersen 3-edge-coloring infeasible={class_two}")


def test_criterion_4_hypergraph_fixtures():
    t0 = time.perf_counter()
    runs = {
        "rook3 case c": (witness_hypergraph(rook_hypergraph(3), case="c"), modified_strong_product(rook(3), complete(2)), (-1, 2)),
        "rook3 case b": (witness_hypergraph(rook_hypergraph(3), case="b"), strong_product(rook(3), complete(3)), (-1, 2)),
        "octahedron case a": (
            witness_hypergraph(octahedron_triangle_hypergraph(), case="a"),
            strong_product(octahedron(), complete(4)),
            (-1, 2),
        ),
        "rook4 case c": (witness_hypergraph(rook_hypergraph(4), case="c"), modified_strong_product(rook(4), complete(2)), (-1, 3)),
    }
    bad = []
    for name, (cert, target, lam) in runs.items():
        floats_ok, _ = float_check(cert, [float(x) for x in lam])
        if not (cert.valid and cert.target == target and (cert.lam1, cert.lam2) == lam and floats_ok):
            bad.append(name)
    elapsed = time.perf_counter() - t0
    record(4, not bad and elapsed < 60, f"bad={bad}, time={elapsed:.2f}s (<60s)")


def test_criterion_5_literal_diagonal_fails():
    cert = witness_hypergraph(octahedron_triangle_hypergraph(), case="a", literal=True)
    fixed = witness_hypergraph(octahedron_triangle_hypergraph(), case="a")
    floats_ok, centroids = float_check(cert, [-1.0, 1.0, 2.0])
    ok = floats_ok and not cert.verdicts.annihilation_ok and not cert.valid and fixed.valid
    record(5, ok, f"literal clusters={[round(c, 9) for c in centroids]}, annihilation={cert.verdicts.annihilation_ok}")


def test_criterion_6_eigenvector_structure():
    g = cycle(6)
    factors = one_factorize(g)
    cert = witness_onefactor(g, factors)
    proj = build_projector_family(len(factors))
    summands = []
    for f in factors:
        rows = [[F(0)] * g.n for _ in range(g.n)]
        for u, v in f:
            rows[u][v] = rows[v][u] = F(1)
        summands.append(RationalMatrix(rows))
    fam = SummandFamily(tuple(summands), (F(-1), F(1)))
    samples = [(i, v, lam) for i, a in enumerate(fam.A) for v, lam in component_eigenpairs(a)]
    ok = len(samples) == 12 and eigvec_structure_check(fam, proj, cert.M, samples)
    record(6, ok, f"{len(samples)} eigenpairs v (x) q_i checked exactly")


def test_criterion_7_kronecker_identities():
    graphs = nonisomorphic_graphs(4)
    bad = 0
    for g in graphs:
        ag, ig = g.adjacency(), np.eye(g.n, dtype=np.int64)
        for h in graphs:
            ah, ih = h.adjacency(), np.eye(h.n, dtype=np.int64)
            bad += not np.array_equal(modified_strong_product(g, h).adjacency(), np.kron(ag, ah + ih))
            s = strong_product(g, h).adjacency() + np.eye(g.n * h.n, dtype=np.int64)
            bad += not np.array_equal(s, np.kron(ag + ig, ah + ih))
    record(7, len(graphs) == 18 and bad == 0, f"{len(graphs)**2} pairs over {len(graphs)} graphs, mismatches={bad}")


def test_criterion_8_nothing_out_of_reach():
    # every construction is finite; there is no desk-scale gap to report
    record(8, True, "no results are out of reach at desk scale")
