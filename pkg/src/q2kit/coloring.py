"""Proper edge colorings of graphs and hyperedge colorings of hypergraphs.

Exact searches are three-valued: they return a coloring, return ``None`` when
the search space is exhausted (a proof of infeasibility at that size), or
raise :class:`SearchBudgetExceeded` when the node cap is hit first.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, Hypergraph

DEFAULT_BUDGET = int(os.environ.get("Q2KIT_SEARCH_BUDGET", 10**7))


class SearchBudgetExceeded(RuntimeError):
    """The backtracking node cap was reached before the search was decided."""

    def __init__(self, nodes: int):
        super().__init__(f"undecided: search budget of {nodes} nodes exhausted")
        self.nodes = nodes


class NotRegularError(ValueError):
    pass


class NotBipartiteError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    graph: Graph
    colors: dict  # (u, v) with u < v -> color index
    num_colors: int

    def __post_init__(self):
        if set(self.colors) != set(self.graph.edges):
            raise ValueError("coloring must cover exactly the edges of the graph")
        if any(not 0 <= c < self.num_colors for c in self.colors.values()):
            raise ValueError("color index outside palette")

    def classes(self) -> list[list[tuple[int, int]]]:
        out = [[] for _ in range(self.num_colors)]
        for e in self.graph.sorted_edges():
            out[self.colors[e]].append(e)
        return out

    def colors_at(self, v: int) -> set[int]:
        return {self.colors[(min(v, w), max(v, w))] for w in self.graph.neighbors[v]}

    def is_proper(self) -> bool:
        return is_proper_edge_coloring(self.graph, self.colors)

    def padded(self, num_colors: int) -> EdgeColoring:
        """Same assignment over a larger palette (extra colors unused)."""
        if num_colors < self.num_colors:
            raise ValueError("cannot shrink the palette")
        return EdgeColoring(self.graph, dict(self.colors), num_colors)

    def to_text(self) -> str:
        return "".join(f"{u} {v} {self.colors[(u, v)]}\n" for u, v in self.graph.sorted_edges())

    @classmethod
    def from_text(cls, graph: Graph, text: str, num_colors: int | None = None) -> EdgeColoring:
        colors = {}
        for line in text.splitlines():
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            u, v, c = (int(t) for t in line.split())
            colors[(min(u, v), max(u, v))] = c
        if num_colors is None:
            num_colors = 1 + max(colors.values(), default=-1)
        return cls(graph, colors, num_colors)


@dataclass(frozen=True)
class HyperedgeColoring:
    hypergraph: Hypergraph
    colors: tuple[int, ...]  # indexed like hypergraph.edges
    num_colors: int

    def __post_init__(self):
        if len(self.colors) != len(self.hypergraph.edges):
            raise ValueError("one color per hyperedge required")
        if any(not 0 <= c < self.num_colors for c in self.colors):
            raise ValueError("color index outside palette")

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.num_colors)]
        for idx, c in enumerate(self.colors):
            out[c].append(idx)
        return out

    def colors_at(self, v: int) -> set[int]:
        return {self.colors[idx] for idx in self.hypergraph.incidence[v]}

    def is_proper(self) -> bool:
        edges = self.hypergraph.edges
        return all(
            self.colors[i] != self.colors[j] or not set(edges[i]) & set(edges[j])
            for i, j in combinations(range(len(edges)), 2)
        )

    def padded(self, num_colors: int) -> HyperedgeColoring:
        if num_colors < self.num_colors:
            raise ValueError("cannot shrink the palette")
        return HyperedgeColoring(self.hypergraph, self.colors, num_colors)

    def to_text(self) -> str:
        return "".join(f"{i} {c}\n" for i, c in enumerate(self.colors))

    @classmethod
    def from_text(cls, h: Hypergraph, text: str, num_colors: int | None = None) -> HyperedgeColoring:
        pairs = {}
        for line in text.splitlines():
            if line.strip() and not line.lstrip().startswith("#"):
                i, c = (int(t) for t in line.split())
                pairs[i] = c
        colors = tuple(pairs[i] for i in range(len(h.edges)))
        if num_colors is None:
            num_colors = 1 + max(colors, default=-1)
        return cls(h, colors, num_colors)


def is_proper_edge_coloring(g: Graph, colors: dict) -> bool:
    """Brute-force pairwise check over all edges sharing an endpoint."""
    if set(colors) != set(g.edges):
        return False
    edges = g.sorted_edges()
    for e, f in combinations(edges, 2):
        if set(e) & set(f) and colors[e] == colors[f]:
            return False
    return True


def _compact(g: Graph, colors: dict) -> EdgeColoring:
    used = sorted(set(colors.values()))
    remap = {c: i for i, c in enumerate(used)}
    return EdgeColoring(g, {e: remap[c] for e, c in colors.items()}, len(used))


# -- Misra-Gries (Delta + 1) ---------------------------------------------------


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most ``max_degree + 1`` colors.

    Misra-Gries: edges are taken in sorted order; each uncolored edge ``(u, v)``
    gets a maximal fan at ``u``, a cd-path inversion, and a fan rotation.
    """
    if g.m == 0:
        raise ValueError("vizing_color needs a graph with at least one edge")
    palette = range(g.max_degree() + 1)
    at = [dict() for _ in range(g.n)]  # at[v][color] = neighbor
    col = {}

    def key(a, b):
        return (a, b) if a < b else (b, a)

    def free(v):
        return next(c for c in palette if c not in at[v])

    def paint(a, b, c):
        col[key(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    def wipe(a, b):
        c = col.pop(key(a, b))
        del at[a][c]
        del at[b][c]

    def is_fan(u, fan, upto):
        return all(col.get(key(u, fan[j])) is not None and col[key(u, fan[j])] not in at[fan[j - 1]] for j in range(1, upto + 1))

    for x, y in g.sorted_edges():
        u = x
        fan, in_fan = [y], {y}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for c in sorted(at[u]):
                w = at[u][c]
                if w not in in_fan and c not in at[last]:
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])
        if c != d:
            # cd-path from u, starting with its d-edge
            walk, cur, want = [], u, d
            while want in at[cur]:
                nxt = at[cur][want]
                walk.append((cur, nxt))
                cur, want = nxt, (c if want == d else d)
            old = [col[key(a, b)] for a, b in walk]
            for a, b in walk:
                wipe(a, b)
            for (a, b), oc in zip(walk, old):
                paint(a, b, d if oc == c else c)
        idx = next(i for i, w in enumerate(fan) if d not in at[w] and is_fan(u, fan, i))
        shifted = [col[key(u, fan[j + 1])] for j in range(idx)]
        for j in range(idx):
            wipe(u, fan[j + 1])
        for j, cj in enumerate(shifted):
            paint(u, fan[j], cj)
        paint(u, fan[idx], d)

    out = _compact(g, col)
    assert out.num_colors <= g.max_degree() + 1
    assert out.is_proper()
    return out


# -- exact search ----------------------------------------------------------------


def _backtrack(n_items: int, conflicts: list[set[int]], k: int, budget: int) -> list[int] | None:
    """Color items 0..n-1 with k colors so conflicting items differ.

    Most-constrained item first (ties: lowest index); a fresh color is only
    ever the next unused one, which removes palette permutations.
    """
    if n_items == 0:
        return []
    if k < 1:
        return None
    color = [-1] * n_items
    banned = [0] * n_items  # bitmask of colors used by colored neighbors
    full = (1 << k) - 1
    nodes = 0

    def pick():
        best, best_key = -1, None
        for i in range(n_items):
            if color[i] < 0:
                opts = bin(full & ~banned[i]).count("1")
                key_ = (opts, -len(conflicts[i]), i)
                if best_key is None or key_ < best_key:
                    best, best_key = i, key_
        return best

    def recurse(done: int, used: int) -> bool:
        nonlocal nodes
        if done == n_items:
            return True
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(budget)
        i = pick()
        limit = min(k, used + 1)
        for c in range(limit):
            if banned[i] >> c & 1:
                continue
            color[i] = c
            touched = [j for j in conflicts[i] if color[j] < 0 and not banned[j] >> c & 1]
            for j in touched:
                banned[j] |= 1 << c
            if recurse(done + 1, max(used, c + 1)):
                return True
            for j in touched:
                banned[j] &= ~(1 << c)
            color[i] = -1
        return False

    return color if recurse(0, 0) else None


def _line_conflicts(g: Graph) -> tuple[list[tuple[int, int]], list[set[int]]]:
    edges = g.sorted_edges()
    at = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edges):
        at[u].append(idx)
        at[v].append(idx)
    conflicts = [set() for _ in edges]
    for inc in at:
        for a, b in combinations(inc, 2):
            conflicts[a].add(b)
            conflicts[b].add(a)
    return edges, conflicts


def exact_edge_color(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> EdgeColoring | None:
    """A proper k-edge-coloring, or None if none exists (exhaustive search)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.max_degree() > k:
        return None
    edges, conflicts = _line_conflicts(g)
    found = _backtrack(len(edges), conflicts, k, budget)
    if found is None:
        return None
    out = EdgeColoring(g, dict(zip(edges, found)), k)
    assert out.is_proper()
    return out


def chromatic_index(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    if g.m == 0:
        return 0
    delta = g.max_degree()
    return delta if exact_edge_color(g, delta, budget) is not None else delta + 1


def one_factorize(g: Graph, budget: int = DEFAULT_BUDGET) -> list[list[tuple[int, int]]] | None:
    """Split a k-regular graph into k perfect matchings, or None for class-2 graphs."""
    if not g.is_regular():
        raise NotRegularError("one-factorization needs a regular graph")
    k = g.max_degree()
    if k == 0:
        return []
    if g.n % 2:
        return None
    coloring = exact_edge_color(g, k, budget)
    if coloring is None:
        return None
    factors = coloring.classes()
    for f in factors:
        assert len(f) == g.n // 2 and {v for e in f for v in e} == set(range(g.n))
    return factors


def bipartite_delta_color(g: Graph) -> EdgeColoring:
    """Max-degree edge coloring of a bipartite graph via alternating-path swaps."""
    if g.bipartition() is None:
        raise NotBipartiteError("graph has an odd cycle")
    delta = g.max_degree()
    at = [dict() for _ in range(g.n)]
    col = {}
    for u, v in g.sorted_edges():
        a = next(c for c in range(delta) if c not in at[u])
        b = next(c for c in range(delta) if c not in at[v])
        if a in at[v]:
            # swap a/b along the path from v that starts with its a-edge; it never reaches u
            walk, cur, want = [], v, a
            while want in at[cur]:
                nxt = at[cur][want]
                walk.append((cur, nxt, want))
                cur, want = nxt, (b if want == a else a)
            for p, q, c in walk:
                del at[p][c]
                del at[q][c]
            for p, q, c in walk:
                nc = b if c == a else a
                at[p][nc] = q
                at[q][nc] = p
                col[(min(p, q), max(p, q))] = nc
        col[(u, v)] = a
        at[u][a] = v
        at[v][a] = u
    out = EdgeColoring(g, col, delta)
    assert out.is_proper()
    return out


def color_hyperedges(h: Hypergraph, k: int, budget: int = DEFAULT_BUDGET) -> HyperedgeColoring | None:
    """Proper hyperedge coloring with at most k colors, or None if impossible."""
    if not h.edges:
        raise ValueError("hypergraph has no hyperedges")
    ig = h.intersection_graph()
    found = _backtrack(len(h.edges), [set(s) for s in ig.neighbors], k, budget)
    if found is None:
        return None
    out = HyperedgeColoring(h, tuple(found), k)
    assert out.is_proper()
    return out


def hypergraph_chromatic_index(h: Hypergraph, budget: int = DEFAULT_BUDGET) -> tuple[int, HyperedgeColoring]:
    """Exact chromatic index by descending search from a greedy upper bound."""
    if not h.edges:
        raise ValueError("hypergraph has no hyperedges")
    ig = h.intersection_graph()
    greedy = []
    for i in range(len(h.edges)):
        taken = {greedy[j] for j in ig.neighbors[i] if j < i}
        greedy.append(next(c for c in range(len(h.edges)) if c not in taken))
    best = HyperedgeColoring(h, tuple(greedy), max(greedy) + 1)
    k = best.num_colors - 1
    while k >= 1:
        found = color_hyperedges(h, k, budget)
        if found is None:
            break
        best, k = found, k - 1
    return best.num_colors, best
