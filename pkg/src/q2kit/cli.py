"""Command line entry point: ``q2kit <subcommand> ...``.

Graph arguments accept a graph6 string, ``family:param,param`` (for example
``cycle:6`` or ``complete_bipartite:3,3``), or a path to a graph6 / edge-list
file.  Failures print one ``error code=<name> reason=<text>`` line on stderr
and exit with the code listed in ``EXIT``.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import certificate
from .coloring import (
    DEFAULT_BUDGET,
    EdgeColoring,
    NotBipartiteError,
    NotRegularError,
    SearchBudgetExceeded,
    bipartite_delta_color,
    color_hyperedges,
    exact_edge_color,
    hypergraph_chromatic_index,
    one_factorize,
    vizing_color,
)
from .exact_linalg import RationalMatrix, build_projector_family, verify_nowhere_zero
from .graphs import (
    GRAPH_FAMILIES,
    HYPERGRAPH_FAMILIES,
    Graph,
    GraphFormatError,
    Hypergraph,
    dump_hypergraph,
    from_graph6,
    generate,
    load_hypergraph,
    modified_strong_product,
    parse_edge_list,
    strong_product,
    to_dot,
    to_edge_list,
    to_graph6,
)
from .oracle import DEFAULT_GAP, DEFAULT_SWEEPS, NoConvergence, eigensolve_symmetric, parse_numeric_matrix
from .suite import format_summary, run_suite
from .witness import PreconditionError, witness_hypergraph, witness_maxdeg, witness_onefactor

EXIT = {
    "ok": 0,
    "invalid": 1,
    "usage": 2,
    "io": 3,
    "parse": 4,
    "hypothesis": 5,
    "undecided": 6,
    "infeasible": 7,
    "numeric": 8,
}

THEOREMS = {
    "3.1": "onefactor",
    "3.2": "maxdeg",
    "3.4a": "hyper-a",
    "3.4b": "hyper-b",
    "3.4c": "hyper-c",
    "onefactor": "onefactor",
    "maxdeg": "maxdeg",
    "hyper-a": "hyper-a",
    "hyper-b": "hyper-b",
    "hyper-c": "hyper-c",
}


class CliError(Exception):
    def __init__(self, code: str, reason: str):
        super().__init__(reason)
        self.code = code
        self.reason = reason


@dataclass(frozen=True)
class RunConfig:
    budget: int = DEFAULT_BUDGET
    sweeps: int = DEFAULT_SWEEPS
    literal: bool = False
    relax_connectivity: bool = False
    exhaustive_nowhere_zero: bool = False

    @classmethod
    def from_args(cls, ns) -> RunConfig:
        return cls(
            budget=ns.budget if getattr(ns, "budget", None) is not None else DEFAULT_BUDGET,
            sweeps=ns.sweeps if getattr(ns, "sweeps", None) is not None else DEFAULT_SWEEPS,
            literal=getattr(ns, "literal_paper_variant", False),
            relax_connectivity=getattr(ns, "relax_connectivity", False),
            exhaustive_nowhere_zero=getattr(ns, "exhaustive_nowhere_zero", False),
        )


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError("io", f"cannot read {path}: {exc.strerror}") from exc


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise CliError("io", f"cannot write {out}: {exc.strerror}") from exc


def _family(spec: str):
    name, _, params = spec.partition(":")
    args = [int(p) for p in params.split(",") if p.strip()]
    return generate(name, *args)


def load_graph(spec: str) -> Graph:
    try:
        name = spec.partition(":")[0]
        if name in GRAPH_FAMILIES:
            return _family(spec)
        if os.path.exists(spec):
            text = _read(spec)
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) == 1 and len(lines[0].split()) == 1:
                return from_graph6(lines[0])
            return parse_edge_list(text)
        return from_graph6(spec)
    except (GraphFormatError, ValueError) as exc:
        raise CliError("parse", f"cannot read graph {spec!r}: {exc}") from exc


def load_hyper(spec: str) -> Hypergraph:
    try:
        if spec.partition(":")[0] in HYPERGRAPH_FAMILIES:
            return _family(spec)
        return load_hypergraph(_read(spec))
    except (GraphFormatError, ValueError) as exc:
        raise CliError("parse", f"cannot read hypergraph {spec!r}: {exc}") from exc


def _render(obj, fmt: str) -> str:
    if isinstance(obj, Hypergraph):
        return dump_hypergraph(obj)
    if fmt == "graph6":
        return to_graph6(obj) + "\n"
    if fmt == "edges":
        return to_edge_list(obj)
    if fmt == "dot":
        return to_dot(obj)
    raise CliError("usage", f"unknown format {fmt}")


# -- subcommands -------------------------------------------------------------------


def cmd_gen(ns, cfg):
    params = list(ns.params or [])
    if ns.n is not None:
        params.insert(0, ns.n)
    try:
        obj = generate(ns.family, *params)
    except ValueError as exc:
        raise CliError("usage", str(exc)) from exc
    _write(_render(obj, ns.format), ns.out)
    return 0


def cmd_product(ns, cfg):
    g, h = load_graph(ns.left), load_graph(ns.right)
    prod = strong_product(g, h) if ns.kind == "strong" else modified_strong_product(g, h)
    _write(_render(prod, ns.format), ns.out)
    return 0


def cmd_color(ns, cfg):
    try:
        if ns.hypergraph:
            h = load_hyper(ns.hypergraph)
            if ns.k is None:
                _, hc = hypergraph_chromatic_index(h, cfg.budget)
            else:
                hc = color_hyperedges(h, ns.k, cfg.budget)
            if hc is None:
                raise CliError("infeasible", f"no proper hyperedge coloring with {ns.k} colors")
            _write(hc.to_text(), ns.out)
            return 0
        g = load_graph(ns.graph)
        if ns.method == "vizing":
            c = vizing_color(g)
        elif ns.method == "bipartite":
            c = bipartite_delta_color(g)
        else:
            c = exact_edge_color(g, ns.k if ns.k is not None else g.max_degree(), cfg.budget)
            if c is None:
                raise CliError("infeasible", f"no proper edge coloring with {ns.k or g.max_degree()} colors")
    except SearchBudgetExceeded as exc:
        raise CliError("undecided", str(exc)) from exc
    except NotBipartiteError as exc:
        raise CliError("hypothesis", str(exc)) from exc
    _write(c.to_text(), ns.out)
    return 0


def cmd_factorize(ns, cfg):
    g = load_graph(ns.graph)
    try:
        factors = one_factorize(g, cfg.budget)
    except NotRegularError as exc:
        raise CliError("hypothesis", str(exc)) from exc
    except SearchBudgetExceeded as exc:
        raise CliError("undecided", str(exc)) from exc
    if factors is None:
        raise CliError("infeasible", "graph is not 1-factorable")
    _write("".join(f"{u} {v} {i}\n" for i, f in enumerate(factors) for u, v in f), ns.out)
    return 0


def _build_witness(ns, cfg):
    which = THEOREMS[ns.theorem]
    if which.startswith("hyper"):
        if not ns.hypergraph:
            raise CliError("usage", "hypergraph constructions need --hypergraph")
        h = load_hyper(ns.hypergraph)
        return witness_hypergraph(h, None, which[-1], literal=cfg.literal)
    if ns.graph:
        g = load_graph(ns.graph)
    elif ns.family:
        params = ([ns.n] if ns.n is not None else []) + list(ns.params or [])
        try:
            g = generate(ns.family, *params)
        except ValueError as exc:
            raise CliError("usage", str(exc)) from exc
    else:
        raise CliError("usage", "need --graph or --family")
    if which == "maxdeg":
        if ns.h_size is not None and ns.h_size != g.max_degree() + 1:
            raise CliError("hypothesis", f"--h-size must be max degree + 1 = {g.max_degree() + 1}")
        return witness_maxdeg(g, vizing_color(g) if g.m else None, relax_connectivity=cfg.relax_connectivity)
    k = ns.h_size if ns.h_size is not None else g.max_degree()
    if ns.signed_diagonal:
        coloring = exact_edge_color(g, k, cfg.budget)
        if coloring is None:
            raise CliError("infeasible", f"no proper {k}-edge-coloring")
        return witness_onefactor(g, coloring.classes(), signed_diagonal=True)
    if not g.is_regular(k):
        raise CliError("hypothesis", f"graph is not {k}-regular")
    factors = one_factorize(g, cfg.budget)
    if factors is None:
        raise CliError("infeasible", "graph is not 1-factorable")
    return witness_onefactor(g, factors)


def cmd_witness(ns, cfg):
    try:
        cert = _build_witness(ns, cfg)
    except PreconditionError as exc:
        raise CliError("hypothesis", str(exc)) from exc
    except NotRegularError as exc:
        raise CliError("hypothesis", str(exc)) from exc
    except SearchBudgetExceeded as exc:
        raise CliError("undecided", str(exc)) from exc
    _write(certificate.dumps(cert), ns.out)
    if cfg.exhaustive_nowhere_zero:
        rep = verify_nowhere_zero(build_projector_family(cert.k), "exhaustive")
        print(f"nowhere_zero_exhaustive k={cert.k} subsets={rep.checked} violations={len(rep.zero_entries)}", file=sys.stderr)
        if not rep.ok:
            return EXIT["invalid"]
    return EXIT["ok"] if cert.valid else EXIT["invalid"]


def cmd_verify(ns, cfg):
    try:
        cert = certificate.loads(_read(ns.cert))
    except certificate.CertificateFormatError as exc:
        raise CliError("parse", str(exc)) from exc
    fresh = cert.recheck()
    for key, val in fresh.as_dict().items():
        print(f"{key} {str(val).lower()}")
    print(f"valid {str(fresh.valid).lower()}")
    if fresh != cert.verdicts:
        print("stored verdicts differ from recomputed verdicts", file=sys.stderr)
    return EXIT["ok"] if fresh.valid and cert.target.m >= 1 else EXIT["invalid"]


def cmd_oracle(ns, cfg):
    text = _read(ns.matrix)
    try:
        if text.startswith(certificate.MAGIC):
            a = certificate.loads(text).M.to_float()
        elif text.lstrip().startswith("matrix"):
            a = RationalMatrix.from_text(text).to_float()
        else:
            a = parse_numeric_matrix(text)
    except ValueError as exc:
        raise CliError("parse", str(exc)) from exc
    try:
        spec = eigensolve_symmetric(a, max_sweeps=cfg.sweeps)
    except NoConvergence as exc:
        raise CliError("numeric", str(exc)) from exc
    except ValueError as exc:
        raise CliError("parse", str(exc)) from exc
    lines = [f"eigenvalues {' '.join(f'{x:.12g}' for x in spec.eigenvalues)}", f"sweeps {spec.sweeps}"]
    clusters = spec.clusters(ns.gap)
    lines.append(f"distinct {len(clusters)}")
    lines += [f"cluster {c:.12g} {mult}" for c, mult in clusters]
    _write("\n".join(lines) + "\n", ns.out)
    return 0


def cmd_suite(ns, cfg):
    rows = run_suite(ns.out, workers=ns.workers)
    sys.stdout.write(format_summary(rows))
    return EXIT["ok"] if all(r["as_expected"] for r in rows) else EXIT["invalid"]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="q2kit", description="Exact two-eigenvalue witnesses for graph products.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def budgets(sp):
        sp.add_argument("--budget", type=int, help="backtracking node cap (env Q2KIT_SEARCH_BUDGET)")
        sp.add_argument("--sweeps", type=int, help="Jacobi sweep cap (env Q2KIT_JACOBI_SWEEPS)")

    sp = sub.add_parser("gen", help="generate a named graph or hypergraph")
    sp.add_argument("--family", required=True, choices=sorted(GRAPH_FAMILIES) + sorted(HYPERGRAPH_FAMILIES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--params", type=int, nargs="*")
    sp.add_argument("--format", choices=["graph6", "edges", "dot"], default="graph6")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("product", help="strong or modified strong product")
    sp.add_argument("kind", choices=["strong", "modified"])
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--format", choices=["graph6", "edges", "dot"], default="graph6")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("color", help="edge or hyperedge coloring")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--hypergraph")
    sp.add_argument("--method", choices=["vizing", "exact", "bipartite"], default="vizing")
    sp.add_argument("--k", type=int)
    sp.add_argument("--out")
    budgets(sp)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("factorize", help="1-factorization of a regular graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--out")
    budgets(sp)
    sp.set_defaults(func=cmd_factorize)

    sp = sub.add_parser("witness", help="build and certify a witness matrix")
    sp.add_argument("--theorem", required=True, choices=list(THEOREMS))
    sp.add_argument("--graph")
    sp.add_argument("--family", choices=sorted(GRAPH_FAMILIES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--params", type=int, nargs="*")
    sp.add_argument("--hypergraph")
    sp.add_argument("--h-size", type=int, help="clique order of the second factor")
    sp.add_argument("--literal-paper-variant", action="store_true", help="diagonal 1 instead of l-1 (hypergraph cases a/b)")
    sp.add_argument("--relax-connectivity", action="store_true", help="max-degree route: require min degree >= 1 only")
    sp.add_argument("--signed-diagonal", action="store_true", help="one-factor route for non-regular class-1 graphs")
    sp.add_argument("--exhaustive-nowhere-zero", action="store_true")
    sp.add_argument("--out")
    budgets(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("verify", help="recompute the verdicts of a certificate file")
    sp.add_argument("--cert", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="float eigenvalues of a matrix file")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--gap", type=float, default=DEFAULT_GAP)
    sp.add_argument("--out")
    budgets(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("suite", help="certify every fixture family")
    sp.add_argument("--out", default="certificates")
    sp.add_argument("--workers", type=int, default=min(4, os.cpu_count() or 1))
    sp.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig.from_args(ns)
    try:
        return ns.func(ns, cfg)
    except CliError as exc:
        print(f"error code={exc.code} reason={exc.reason}", file=sys.stderr)
        return EXIT[exc.code]


if __name__ == "__main__":
    sys.exit(main())
