"""Two-eigenvalue witness matrices ``M = sum_i A_i (x) J_i`` and their certificates.

Every construction here follows the same recipe.  Split the edges of a graph
into color classes, turn class ``i`` into a symmetric summand ``A_i`` whose
spectrum lies in a fixed pair ``{lam1, lam2}``, and tensor it with the rank-one
projector ``J_i``.  Since the ``J_i`` are mutually orthogonal, ``M`` inherits
exactly the union of the summand spectra, while its zero pattern is read off
block by block from which colors touch each cell.

Nothing is trusted: each :class:`WitnessCertificate` carries four verdicts
recomputed from the finished matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .coloring import (
    EdgeColoring,
    HyperedgeColoring,
    hypergraph_chromatic_index,
    vizing_color,
)
from .exact_linalg import (
    ProjectorFamily,
    RationalMatrix,
    annihilated_by,
    annihilates,
    build_projector_family,
    kron,
    kron_vec,
    verify_nowhere_zero,
)
from .graphs import (
    Graph,
    Hypergraph,
    complete,
    dump_hypergraph,
    modified_strong_product,
    representing_graph,
    strong_product,
    to_graph6,
)


class PreconditionError(ValueError):
    """A construction's hypotheses do not hold; ``violations`` lists each one."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class SummandFamily:
    A: tuple[RationalMatrix, ...]
    lam: tuple[Fraction, Fraction]

    def __post_init__(self):
        if not self.A:
            raise ValueError("need at least one summand")
        n = self.A[0].rows
        for a in self.A:
            if a.shape != (n, n):
                raise ValueError("summands must share one square shape")
            if not a.is_symmetric():
                raise ValueError("summands must be symmetric")

    @property
    def k(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return self.A[0].rows

    def spectra_ok(self) -> list[bool]:
        """Per summand: is its spectrum inside ``lam`` (exact annihilation)?"""
        return [annihilates(a, *self.lam).annihilates for a in self.A]

    def count_matrix(self) -> list[list[int]]:
        """Number of summands nonzero at each cell (the ``A_1 + ... + A_k`` of 0-1 summands)."""
        return [[sum(1 for a in self.A if a[l, m] != 0) for m in range(self.n)] for l in range(self.n)]

    def cell_subsets(self) -> list[list[tuple[int, ...]]]:
        return [[tuple(i for i, a in enumerate(self.A) if a[l, m] != 0) for m in range(self.n)] for l in range(self.n)]


def assemble(fam: SummandFamily, proj: ProjectorFamily) -> RationalMatrix:
    if fam.k != proj.k:
        raise ValueError(f"{fam.k} summands but a projector family of size {proj.k}")
    m = None
    for a, j in zip(fam.A, proj.J):
        term = kron(a, j)
        m = term if m is None else m + term
    return m


class Block(enum.Enum):
    ZERO = "0"
    FULL = "J"
    IDENT = "I"


def block_pattern(b, k: int) -> list[list[Block]]:
    """Classify each cell of a summand-count matrix: 0 -> zero block, k -> identity, else nowhere-zero."""
    out = []
    for row in b:
        line = []
        for x in row:
            if not 0 <= x <= k:
                raise ValueError(f"count {x} outside [0, {k}]")
            line.append(Block.ZERO if x == 0 else Block.IDENT if x == k else Block.FULL)
        out.append(line)
    return out


def pattern_mask(pattern: list[list[Block]], k: int) -> np.ndarray:
    """Expand a block pattern into the predicted nonzero mask of ``M``."""
    tiles = {Block.ZERO: np.zeros((k, k), bool), Block.FULL: np.ones((k, k), bool), Block.IDENT: np.eye(k, dtype=bool)}
    return np.block([[tiles[x] for x in row] for row in pattern]) if pattern else np.zeros((0, 0), bool)


def check_pattern_membership(m: RationalMatrix, target: Graph) -> bool:
    """Off-diagonal support of ``m`` equals the edge set of ``target``; the diagonal is free."""
    if m.shape != (target.n, target.n):
        raise ValueError(f"matrix {m.shape} does not match a {target.n}-vertex graph")
    if not m.is_symmetric():
        raise ValueError("pattern membership needs a symmetric matrix")
    mask = m.nonzero_mask()
    np.fill_diagonal(mask, False)
    return bool(np.array_equal(mask, target.adjacency().astype(bool)))


# -- certificates ----------------------------------------------------------------


@dataclass(frozen=True)
class Verdicts:
    pattern_ok: bool
    annihilation_ok: bool
    both_attained: bool
    nowhere_zero_ok: bool

    @property
    def valid(self) -> bool:
        return self.pattern_ok and self.annihilation_ok and self.both_attained and self.nowhere_zero_ok

    def as_dict(self) -> dict[str, bool]:
        return {
            "pattern_ok": self.pattern_ok,
            "annihilation_ok": self.annihilation_ok,
            "both_attained": self.both_attained,
            "nowhere_zero_ok": self.nowhere_zero_ok,
        }


def compute_verdicts(target: Graph, m: RationalMatrix, lam1, lam2, k: int, subsets) -> Verdicts:
    if m.shape != (target.n, target.n) or not m.is_symmetric():
        return Verdicts(False, False, False, False)
    ann = annihilates(m, lam1, lam2)
    nz = verify_nowhere_zero(build_projector_family(k), "targeted", subsets)
    return Verdicts(check_pattern_membership(m, target), ann.annihilates, ann.first_attained and ann.second_attained, nz.ok)


@dataclass(frozen=True)
class WitnessCertificate:
    target: Graph
    M: RationalMatrix = field(repr=False)
    lam1: Fraction
    lam2: Fraction
    construction: str
    k: int
    verdicts: Verdicts
    variant: str = "standard"
    source: str = ""
    coloring: str = field(default="", repr=False)
    subsets: tuple[tuple[int, ...], ...] = ()

    @property
    def valid(self) -> bool:
        return self.verdicts.valid

    @property
    def proves_q_two(self) -> bool:
        """Valid witness on a graph with an edge: q = 2 exactly (q = 1 only for edgeless graphs)."""
        return self.valid and self.target.m >= 1

    def recheck(self) -> Verdicts:
        return compute_verdicts(self.target, self.M, self.lam1, self.lam2, self.k, self.subsets)


def _certify(target, fam, proj, construction, variant, source, coloring) -> WitnessCertificate:
    m = assemble(fam, proj)
    subsets = sorted({s for row in fam.cell_subsets() for s in row if s}, key=lambda s: (len(s), s))
    lam1, lam2 = fam.lam
    verdicts = compute_verdicts(target, m, lam1, lam2, proj.k, subsets)
    return WitnessCertificate(target, m, lam1, lam2, construction, proj.k, verdicts, variant, source, coloring, tuple(subsets))


def _matrix(n: int, entries: dict) -> RationalMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), x in entries.items():
        rows[i][j] = rows[j][i] = Fraction(x)
    return RationalMatrix(rows)


# -- constructions ---------------------------------------------------------------


def witness_onefactor(g: Graph, factors, signed_diagonal: bool = False) -> WitnessCertificate:
    """Witness on ``g ⋈ K_k`` from a split of ``E(g)`` into k perfect matchings.

    Each matching's adjacency has spectrum {-1, 1}.  With ``signed_diagonal``
    the factors may be non-perfect matchings; uncovered vertices then get a
    diagonal entry 1 so the summand keeps spectrum {-1, 1}.  Whether the
    resulting pattern fits the target is left to the verdicts.
    """
    factors = [sorted((min(u, v), max(u, v)) for u, v in f) for f in factors]
    k = len(factors)
    problems = []
    if k == 0:
        problems.append("no factors given")
    flat = [e for f in factors for e in f]
    if len(flat) != len(set(flat)) or set(flat) != set(g.edges):
        problems.append("factors do not partition the edge set")
    diag = []
    for i, f in enumerate(factors):
        hit = [v for e in f for v in e]
        if len(hit) != len(set(hit)):
            problems.append(f"factor {i} is not a matching")
        missing = sorted(set(range(g.n)) - set(hit))
        if missing and not signed_diagonal:
            problems.append(f"factor {i} is not a perfect matching (misses {missing})")
        diag.append(missing)
    if problems:
        raise PreconditionError(problems)

    summands = []
    for f, missing in zip(factors, diag):
        entries = {e: 1 for e in f}
        entries.update({(v, v): 1 for v in missing})
        summands.append(_matrix(g.n, entries))
    fam = SummandFamily(tuple(summands), (Fraction(-1), Fraction(1)))
    coloring = "".join(f"{u} {v} {i}\n" for i, f in enumerate(factors) for u, v in sorted(f))
    return _certify(
        modified_strong_product(g, complete(k)),
        fam,
        build_projector_family(k),
        "onefactor",
        "signed-diagonal" if signed_diagonal else "standard",
        f"graph6 {to_graph6(g)}",
        coloring,
    )


def maxdeg_summands(g: Graph, coloring: EdgeColoring) -> SummandFamily:
    """Color class ``i`` as a matching, plus a diagonal 1 at every vertex color ``i`` misses."""
    summands = []
    for i, cls in enumerate(coloring.classes()):
        entries = {e: 1 for e in cls}
        hit = {v for e in cls for v in e}
        entries.update({(v, v): 1 for v in range(g.n) if v not in hit})
        summands.append(_matrix(g.n, entries))
    return SummandFamily(tuple(summands), (Fraction(-1), Fraction(1)))


def witness_maxdeg(g: Graph, coloring: EdgeColoring | None = None, relax_connectivity: bool = False) -> WitnessCertificate:
    """Witness on ``g ⊠ K_(Delta+1)`` from a proper (Delta+1)-edge-coloring."""
    problems = []
    if g.m == 0:
        problems.append("graph has no edges")
    if relax_connectivity:
        if g.min_degree() < 1:
            problems.append("graph has an isolated vertex")
    elif not g.is_connected():
        problems.append("graph is not connected")
    if problems:
        raise PreconditionError(problems)
    c = g.max_degree() + 1
    if coloring is None:
        coloring = vizing_color(g)
    if coloring.graph != g:
        raise PreconditionError(["coloring belongs to a different graph"])
    if not coloring.is_proper():
        raise PreconditionError(["edge coloring is not proper"])
    if coloring.num_colors > c:
        raise PreconditionError([f"coloring uses a palette of {coloring.num_colors} > max degree + 1 = {c}"])
    coloring = coloring.padded(c)
    fam = maxdeg_summands(g, coloring)
    return _certify(
        strong_product(g, complete(c)),
        fam,
        build_projector_family(c),
        "maxdeg",
        "standard",
        f"graph6 {to_graph6(g)}",
        coloring.to_text(),
    )


def check_hypergraph(h: Hypergraph) -> list[str]:
    problems = []
    if not h.edges:
        problems.append("hypergraph has no hyperedges")
    elif h.uniformity() is None:
        problems.append("hypergraph is not uniform")
    if not h.is_linear():
        problems.append("hypergraph is not linear")
    uncovered = h.uncovered_vertices()
    if uncovered:
        problems.append(f"vertices {uncovered} lie in no hyperedge")
    return problems


def hypergraph_summands(h: Hypergraph, coloring: HyperedgeColoring, missing_diagonal) -> SummandFamily:
    """Color class ``i`` as disjoint cliques; ``missing_diagonal`` (or None) at vertices it misses."""
    l = h.uniformity()
    summands = []
    for cls in coloring.classes():
        entries = {}
        hit = set()
        for idx in cls:
            e = h.edges[idx]
            hit.update(e)
            entries.update({(a, b): 1 for a in e for b in e if a < b})
        if missing_diagonal is not None:
            entries.update({(v, v): missing_diagonal for v in range(h.n) if v not in hit})
        summands.append(_matrix(h.n, entries))
    return SummandFamily(tuple(summands), (Fraction(-1), Fraction(l - 1)))


def witness_hypergraph(
    h: Hypergraph, coloring: HyperedgeColoring | None = None, case: str = "a", literal: bool = False
) -> WitnessCertificate:
    """Witness on a product of the representing graph with a clique.

    case ``a``: colors > max degree, target ``G ⊠ K_c``.
    case ``b``: colors == max degree; one unused color is added, target ``G ⊠ K_(c+1)``.
    case ``c``: regular with colors == degree, target ``G ⋈ K_c``.

    In cases a/b a vertex missing color ``i`` gets diagonal ``l - 1`` in ``A_i``
    so that every summand has spectrum {-1, l - 1}; ``literal=True`` uses 1
    instead, which only works for l = 2.
    """
    if case not in ("a", "b", "c"):
        raise ValueError(f"unknown case {case!r}")
    problems = check_hypergraph(h)
    if problems:
        raise PreconditionError(problems)
    if coloring is None:
        _, coloring = hypergraph_chromatic_index(h)
    if coloring.hypergraph != h:
        raise PreconditionError(["coloring belongs to a different hypergraph"])
    if not coloring.is_proper():
        raise PreconditionError(["hyperedge coloring is not proper"])
    l = h.uniformity()
    k = h.max_degree()
    c = coloring.num_colors
    if case == "a" and not c > k:
        problems.append(f"case a needs more colors than max degree ({c} <= {k})")
    if case == "b" and c != k:
        problems.append(f"case b needs colors == max degree ({c} != {k})")
    if case == "c":
        if not h.is_regular(k):
            problems.append("case c needs a regular hypergraph")
        if c != k:
            problems.append(f"case c needs colors == degree ({c} != {k})")
    if problems:
        raise PreconditionError(problems)

    if case == "b":
        coloring = coloring.padded(c + 1)
    size = coloring.num_colors
    if case == "c":
        fam = hypergraph_summands(h, coloring, None)
        target = modified_strong_product(representing_graph(h), complete(size))
    else:
        fam = hypergraph_summands(h, coloring, 1 if literal else l - 1)
        target = strong_product(representing_graph(h), complete(size))
    counts = fam.count_matrix()
    # two vertices share at most one hyperedge, so off-diagonal blocks are single J_i
    assert all(counts[a][b] <= 1 for a in range(h.n) for b in range(h.n) if a != b)
    return _certify(
        target,
        fam,
        build_projector_family(size),
        f"hypergraph-{case}",
        "literal" if literal and case != "c" else "standard",
        f"hypergraph {dump_hypergraph(h).strip()}",
        coloring.to_text(),
    )


# -- eigenvector structure ---------------------------------------------------------


def component_eigenpairs(a: RationalMatrix) -> list[tuple[list[Fraction], Fraction]]:
    """Rational eigenpairs of a summand whose off-diagonal components are unit-weight cliques.

    Singleton ``v`` gives ``(e_v, a[v, v])``; a clique ``C`` with zero diagonal gives
    its indicator with ``|C| - 1`` and the differences ``e_c0 - e_c`` with -1.
    """
    n = a.rows
    seen, pairs = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in range(n):
                if w != u and a[u, w] != 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp.sort()
        if len(comp) == 1:
            v = [Fraction(0)] * n
            v[s] = Fraction(1)
            pairs.append((v, a[s, s]))
            continue
        ones = [Fraction(int(i in comp)) for i in range(n)]
        pairs.append((ones, Fraction(len(comp) - 1)))
        for c in comp[1:]:
            v = [Fraction(0)] * n
            v[comp[0]], v[c] = Fraction(1), Fraction(-1)
            pairs.append((v, Fraction(-1)))
    return pairs


def eigvec_structure_check(fam: SummandFamily, proj: ProjectorFamily, m: RationalMatrix, samples) -> bool:
    """For samples ``(i, v, lam)`` with ``A_i v = lam v``, check ``M (v (x) q_i) = lam (v (x) q_i)``.

    Raises ValueError naming the first sample that is not an eigenpair of its summand.
    """
    ok = True
    for idx, (i, v, lam) in enumerate(samples):
        v = [Fraction(x) for x in v]
        lam = Fraction(lam)
        if fam.A[i].matvec(v) != [lam * x for x in v]:
            raise ValueError(f"bad sample {idx}: not an eigenpair of summand {i}")
        big = kron_vec(v, proj.column(i))
        ok &= m.matvec(big) == [lam * x for x in big]
    return ok


def spectral_containment(fam: SummandFamily, m: RationalMatrix) -> bool:
    """Spectrum of ``M`` lies in the union of the summand eigenvalues."""
    lams = {lam for _, lam in (p for a in fam.A for p in component_eigenpairs(a))} | set(fam.lam)
    return annihilated_by(m, lams)
