"""Simple graphs, uniform hypergraphs, graph products and small fixtures.

Vertices are always ``0..n-1``.  Product graphs on ``V(G) x V(H)`` index the
pair ``(a, b)`` as ``a * H.n + b`` so that the ``G`` coordinate is major; with
this ordering the adjacency matrix of a product is literally a Kronecker
product of the factors' matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np


class GraphFormatError(ValueError):
    """Raised when a serialized graph or hypergraph cannot be decoded."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {(u, v)} is not normalized or out of range")

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        out = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            out.add(_norm(u, v))
        return cls(n, frozenset(out))

    @classmethod
    def from_adjacency(cls, a) -> Graph:
        a = np.asarray(a)
        n = a.shape[0]
        if a.shape != (n, n) or not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be square and symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency matrix has a nonzero diagonal")
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.neighbors]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        return k is None or degs <= {k}

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbors[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bipartition(self) -> list[int] | None:
        """Return a 0/1 side for each vertex, or None if the graph has an odd cycle."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.neighbors[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        return side

    def relabel(self, perm) -> Graph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph with an ordered list of hyperedges (order fixes edge indices)."""

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        for e in self.edges:
            if len(e) < 2:
                raise ValueError(f"hyperedge {e} has fewer than 2 vertices")
            if len(set(e)) != len(e):
                raise ValueError(f"hyperedge {e} repeats a vertex")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError(f"hyperedge {e} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> Hypergraph:
        return cls(n, tuple(tuple(sorted(int(v) for v in e)) for e in edges))

    def uniformity(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_uniform(self, l: int) -> bool:
        return self.uniformity() == l

    def is_linear(self) -> bool:
        sets = [set(e) for e in self.edges]
        return all(len(a & b) <= 1 for a, b in combinations(sets, 2))

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Hyperedge indices containing each vertex."""
        inc = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v].append(idx)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def max_degree(self) -> int:
        return max((len(x) for x in self.incidence), default=0)

    def is_regular(self, k: int | None = None) -> bool:
        degs = {len(x) for x in self.incidence}
        if len(degs) > 1:
            return False
        return k is None or degs <= {k}

    def uncovered_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.incidence[v]]

    def intersection_graph(self) -> Graph:
        """Graph on hyperedge indices; two hyperedges adjacent iff they share a vertex."""
        pairs = set()
        for inc in self.incidence:
            pairs.update(combinations(inc, 2))
        return Graph.from_edges(len(self.edges), pairs)


# -- products -----------------------------------------------------------------


def strong_product(g: Graph, h: Graph) -> Graph:
    if g.n < 1 or h.n < 1:
        raise ValueError("strong product needs nonempty factors")
    nh = h.n
    edges = set()
    for a in range(g.n):
        for b, b2 in h.edges:
            edges.add(_norm(a * nh + b, a * nh + b2))
    for a, a2 in g.edges:
        for b in range(nh):
            edges.add(_norm(a * nh + b, a2 * nh + b))
        for b, b2 in h.edges:
            edges.add(_norm(a * nh + b, a2 * nh + b2))
            edges.add(_norm(a * nh + b2, a2 * nh + b))
    return Graph(g.n * nh, frozenset(edges))


def modified_strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product without the edges that keep the ``g`` coordinate fixed."""
    if g.n < 1 or h.n < 1:
        raise ValueError("modified strong product needs nonempty factors")
    nh = h.n
    edges = set()
    for a, a2 in g.edges:
        for b in range(nh):
            edges.add(_norm(a * nh + b, a2 * nh + b))
        for b, b2 in h.edges:
            edges.add(_norm(a * nh + b, a2 * nh + b2))
            edges.add(_norm(a * nh + b2, a2 * nh + b))
    return Graph(g.n * nh, frozenset(edges))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    nh = h.n
    edges = set()
    for a in range(g.n):
        for b, b2 in h.edges:
            edges.add(_norm(a * nh + b, a * nh + b2))
    for a, a2 in g.edges:
        for b in range(nh):
            edges.add(_norm(a * nh + b, a2 * nh + b))
    return Graph(g.n * nh, frozenset(edges))


def representing_graph(h: Hypergraph) -> Graph:
    return Graph.from_edges(h.n, (p for e in h.edges for p in combinations(e, 2)))


# -- named families -------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides nonempty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def hypercube(d: int) -> Graph:
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if not v >> i & 1))


def rook(m: int) -> Graph:
    """K_m box K_m; cell (r, c) is vertex r*m + c."""
    if m < 1:
        raise ValueError("rook graph needs m >= 1")
    return cartesian_product(complete(m), complete(m))


def octahedron() -> Graph:
    # antipodal pairs (0,3), (1,4), (2,5)
    return Graph.from_edges(6, (p for p in combinations(range(6), 2) if p[1] - p[0] != 3))


def bowtie() -> Graph:
    return representing_graph(bowtie_hypergraph())


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def rook_hypergraph(m: int) -> Hypergraph:
    """Rows then columns of an m x m board, as m-vertex hyperedges."""
    if m < 2:
        raise ValueError("rook hypergraph needs m >= 2")
    rows = [[r * m + c for c in range(m)] for r in range(m)]
    cols = [[r * m + c for r in range(m)] for c in range(m)]
    return Hypergraph.from_edges(m * m, rows + cols)


def octahedron_triangle_hypergraph() -> Hypergraph:
    """Four edge-disjoint triangles covering the octahedron."""
    return Hypergraph.from_edges(6, [(0, 1, 2), (0, 4, 5), (3, 1, 5), (3, 4, 2)])


def bowtie_hypergraph() -> Hypergraph:
    return Hypergraph.from_edges(5, [(0, 1, 2), (0, 3, 4)])


GRAPH_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "hypercube": hypercube,
    "rook": rook,
    "octahedron": octahedron,
    "bowtie": bowtie,
    "petersen": petersen,
}

HYPERGRAPH_FAMILIES = {
    "rook_hypergraph": rook_hypergraph,
    "octahedron_triangle_hypergraph": octahedron_triangle_hypergraph,
    "bowtie_hypergraph": bowtie_hypergraph,
}


def generate(family: str, *params: int) -> Graph | Hypergraph:
    """Build a named fixture, e.g. ``generate("cycle", 6)``."""
    fn = GRAPH_FAMILIES.get(family) or HYPERGRAPH_FAMILIES.get(family)
    if fn is None:
        raise ValueError(f"unknown family {family!r}")
    try:
        return fn(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {family}: {params}") from exc


# -- serialization --------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphFormatError("graph6 long form (n > 62) is not supported")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphFormatError("graph6 string has characters outside '?'..'~'")
    n = codes[0]
    if n == 63:
        raise GraphFormatError("graph6 long form (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    if len(codes) - 1 != -(-nbits // 6):
        raise GraphFormatError(f"graph6 body has {len(codes) - 1} bytes, expected {-(-nbits // 6)} for n={n}")
    bits = [c >> (5 - i) & 1 for c in codes[1:] for i in range(6)]
    if any(bits[nbits:]):
        raise GraphFormatError("graph6 padding bits are not zero")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return Graph(n, frozenset(p for p, b in zip(pairs, bits) if b))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    return f"# n={g.n}\n" + "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines.  A ``# n=<int>`` comment fixes the vertex count."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n=") and n is None:
                n = int(body[2:])
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {raw!r}") from exc
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def dump_hypergraph(h: Hypergraph) -> str:
    return json.dumps({"n": h.n, "edges": [list(e) for e in h.edges]}) + "\n"


def load_hypergraph(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
        return Hypergraph.from_edges(int(data["n"]), data["edges"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad hypergraph file: {exc}") from exc

