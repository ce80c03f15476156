"""End-to-end fixture families: build, certify, cross-check, write files."""

from __future__ import annotations

import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import certificate
from .coloring import exact_edge_color, one_factorize, vizing_color
from .graphs import (
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    octahedron_triangle_hypergraph,
    path,
    petersen,
    rook_hypergraph,
    bowtie_hypergraph,
    star,
    to_graph6,
)
from .oracle import eigensolve_symmetric
from .witness import WitnessCertificate, witness_hypergraph, witness_maxdeg, witness_onefactor


@dataclass(frozen=True)
class Case:
    name: str
    expect_valid: bool
    note: str = ""


def _onefactor(g):
    return witness_onefactor(g, one_factorize(g))


def _candle(k):
    coloring = exact_edge_color(path(k), 2)
    return witness_onefactor(path(k), coloring.classes(), signed_diagonal=True)


BUILDERS = {
    "K4-mod-K3": lambda: _onefactor(complete(4)),
    "K33-mod-K3": lambda: _onefactor(complete_bipartite(3, 3)),
    "C4-mod-K2": lambda: _onefactor(cycle(4)),
    "C6-mod-K2": lambda: _onefactor(cycle(6)),
    "C8-mod-K2": lambda: _onefactor(cycle(8)),
    "C10-mod-K2": lambda: _onefactor(cycle(10)),
    "Q3-mod-K3": lambda: _onefactor(hypercube(3)),
    "P4-strong-K3": lambda: witness_maxdeg(path(4), vizing_color(path(4))),
    "K13-strong-K4": lambda: witness_maxdeg(star(3), vizing_color(star(3))),
    "Petersen-strong-K4": lambda: witness_maxdeg(petersen(), vizing_color(petersen())),
    "rook3-mod-K2": lambda: witness_hypergraph(rook_hypergraph(3), case="c"),
    "rook3-strong-K3": lambda: witness_hypergraph(rook_hypergraph(3), case="b"),
    "rook4-mod-K2": lambda: witness_hypergraph(rook_hypergraph(4), case="c"),
    "octahedron-strong-K4": lambda: witness_hypergraph(octahedron_triangle_hypergraph(), case="a"),
    "bowtie-strong-K3": lambda: witness_hypergraph(bowtie_hypergraph(), case="b"),
    "octahedron-strong-K4-literal": lambda: witness_hypergraph(octahedron_triangle_hypergraph(), case="a", literal=True),
}
BUILDERS.update({f"P{k}-mod-K2-signed": (lambda k=k: _candle(k)) for k in range(2, 9)})

CASES = [Case(name, True) for name in BUILDERS if not name.endswith(("literal", "signed"))]
CASES.append(Case("octahedron-strong-K4-literal", False, "diagonal 1 leaves eigenvalue 1 in the summands"))
CASES += [
    Case(f"P{k}-mod-K2-signed", False, "endpoint diagonal blocks are nowhere zero but the target needs them zero")
    for k in range(2, 9)
]


def build(name: str) -> WitnessCertificate:
    return BUILDERS[name]()


def write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def run_case(case: Case, outdir: str | None = None) -> dict:
    t0 = time.perf_counter()
    cert = build(case.name)
    spectrum = eigensolve_symmetric(cert.M.to_float())
    clusters = spectrum.clusters()
    if outdir is not None:
        write_atomic(Path(outdir) / f"{case.name}.cert", certificate.dumps(cert))
    row = {
        "family": case.name,
        "target": to_graph6(cert.target) if cert.target.n <= 62 else f"n={cert.target.n}",
        "k": cert.k,
        "lambda": f"{cert.lam1},{cert.lam2}",
        **cert.verdicts.as_dict(),
        "valid": cert.valid,
        "expected": "valid" if case.expect_valid else "invalid",
        "float_clusters": len(clusters),
        "centroids": ",".join(f"{c:.9f}" for c, _ in clusters),
        "wall_s": f"{time.perf_counter() - t0:.3f}",
    }
    row["as_expected"] = row["valid"] == case.expect_valid
    return row


def _run_named(args):
    name, outdir = args
    case = next(c for c in CASES if c.name == name)
    return run_case(case, outdir)


def run_suite(outdir: str | None = None, workers: int = 1, names=None) -> list[dict]:
    chosen = [c.name for c in CASES if names is None or c.name in names]
    jobs = [(name, outdir) for name in chosen]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_named, jobs))
    else:
        rows = [_run_named(j) for j in jobs]
    if outdir is not None:
        write_atomic(Path(outdir) / "summary.tsv", format_summary(rows))
    return rows


def format_summary(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    out = ["\t".join(cols)]
    for r in rows:
        out.append("\t".join(str(r[c]).lower() if isinstance(r[c], bool) else str(r[c]) for c in cols))
    return "\n".join(out) + "\n"
