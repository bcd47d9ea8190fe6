"""Labeled simple graphs on vertices 1..n with bitset adjacency.

Family generators fix their labelings so facet lists downstream are
reproducible: grids are flattened row-major, bipartite sides come in order
x_1..x_m then y_1..y_n, the prism over K_n lists x_1..x_n then y_1..y_n, and
the wheel hub is the last vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .bitsets import full_mask, iter_vertices, mask_of, sort_canonical


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[i] is the neighbor bitmask of vertex i+1."""

    n: int
    adj: tuple[int, ...]

    def neighbors(self, v: int) -> int:
        return self.adj[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(1, self.n + 1):
            for v in iter_vertices(self.adj[u - 1]):
                if v > u:
                    out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for e in edges:
        if len(e) != 2:
            raise ValueError(f"edge must be a pair, got {e!r}")
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge {e!r} out of range 1..{n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Named families


def points(n: int) -> Graph:
    """n isolated vertices."""
    _require(n >= 1, "n >= 1")
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    _require(n >= 1, "n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(1, n)])


def star(n: int) -> Graph:
    """Edges {i, n} for i < n; the center is vertex n."""
    _require(n >= 1, "n >= 1")
    return graph_from_edges(n, [(i, n) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _require(n >= 1, "n >= 1")
    return graph_from_edges(n, _mod_edges(n, (1,)))


def wheel(n: int) -> Graph:
    """Cycle on 1..n plus a hub n+1 joined to every rim vertex."""
    _require(n >= 1, "n >= 1")
    rim = _mod_edges(n, (1,))
    return graph_from_edges(n + 1, rim + [(i, n + 1) for i in range(1, n + 1)])


def cycle_square(n: int) -> Graph:
    """Cyclic distance-1 and distance-2 edges on 1..n."""
    _require(n >= 1, "n >= 1")
    return graph_from_edges(n, _mod_edges(n, (1, 2)))


def path_square(n: int) -> Graph:
    """Edges {i,i+1} and {i,i+2} along 1..n."""
    _require(n >= 1, "n >= 1")
    es = [(i, i + 1) for i in range(1, n)] + [(i, i + 2) for i in range(1, n - 1)]
    return graph_from_edges(n, es)


def complete(n: int) -> Graph:
    _require(n >= 1, "n >= 1")
    return graph_from_edges(n, combinations(range(1, n + 1), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """Sides x_1..x_m = 1..m and y_1..y_n = m+1..m+n."""
    _require(m >= 1 and n >= 1, "m, n >= 1")
    return graph_from_edges(m + n, [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)])


def complete_prism(n: int) -> Graph:
    """Two copies of K_n (x_1..x_n, then y_1..y_n) joined by the matching x_i y_i."""
    _require(n >= 1, "n >= 1")
    es = list(combinations(range(1, n + 1), 2))
    es += [(n + i, n + j) for i, j in combinations(range(1, n + 1), 2)]
    es += [(i, n + i) for i in range(1, n + 1)]
    return graph_from_edges(2 * n, es)


def grid(m: int, n: int) -> Graph:
    """m x n grid; vertex (i, j) is numbered (i-1)*n + j, row-major."""
    _require(m >= 1 and n >= 1, "m, n >= 1")

    def num(i, j):
        return (i - 1) * n + j

    es = [(num(i, j), num(i + 1, j)) for i in range(1, m) for j in range(1, n + 1)]
    es += [(num(i, j), num(i, j + 1)) for i in range(1, m + 1) for j in range(1, n)]
    return graph_from_edges(m * n, es)


def tree_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    g = graph_from_edges(n, edges)
    if g.edge_count() != n - 1:
        raise ValueError(f"a tree on {n} vertices needs exactly {n - 1} edges")
    if not _is_connected(g):
        raise ValueError("tree edge list is not connected")
    return g


def _mod_edges(n: int, offsets: tuple[int, ...]) -> list[tuple[int, int]]:
    # Degenerate n (loops, doubled edges) collapse naturally.
    es = set()
    for i in range(n):
        for d in offsets:
            u, v = i + 1, (i + d) % n + 1
            if u != v:
                es.add((min(u, v), max(u, v)))
    return sorted(es)


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise ValueError(f"parameter out of range: need {what}")


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    queue = deque([1])
    while queue:
        v = queue.popleft()
        new = g.adj[v - 1] & ~seen
        seen |= new
        queue.extend(iter_vertices(new))
    return seen == full_mask(g.n)


# ---------------------------------------------------------------------------
# Family specs and JSON


FAMILY_IDS = ("P", "L", "S", "C", "W", "C2", "L2", "Kmn", "K2xKn", "Grid", "TreeEdges", "ExplicitEdges")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    m: int | None = None
    edges: tuple[tuple[int, int], ...] | None = None


def build_family(spec: FamilySpec) -> Graph:
    fam = spec.family
    if fam not in FAMILY_IDS:
        raise ValueError(f"unknown family {fam!r}; expected one of {FAMILY_IDS}")
    if fam in ("TreeEdges", "ExplicitEdges"):
        if spec.n is None or spec.edges is None:
            raise ValueError(f"family {fam} needs n and an edge list")
        if fam == "TreeEdges":
            return tree_from_edges(spec.n, spec.edges)
        return graph_from_edges(spec.n, spec.edges)
    if fam in ("Kmn", "Grid"):
        if spec.m is None or spec.n is None:
            raise ValueError(f"family {fam} needs both m and n")
        return complete_bipartite(spec.m, spec.n) if fam == "Kmn" else grid(spec.m, spec.n)
    if spec.n is None:
        raise ValueError(f"family {fam} needs n")
    builder = {
        "P": points,
        "L": path,
        "S": star,
        "C": cycle,
        "W": wheel,
        "C2": cycle_square,
        "L2": path_square,
        "K2xKn": complete_prism,
    }[fam]
    return builder(spec.n)


def graph_from_json(obj: dict) -> Graph:
    """Accepts {"n":…, "edges":[[u,v],…]} or {"family":…, "n":…, "m":…, "edges":…}."""
    if "family" in obj:
        edges = obj.get("edges")
        spec = FamilySpec(
            family=obj["family"],
            n=obj.get("n"),
            m=obj.get("m"),
            edges=tuple((int(u), int(v)) for u, v in edges) if edges is not None else None,
        )
        return build_family(spec)
    if "n" in obj and "edges" in obj:
        return graph_from_edges(int(obj["n"]), obj["edges"])
    raise ValueError('graph JSON needs either "family" or both "n" and "edges"')


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


# ---------------------------------------------------------------------------
# Predicates


def complement(g: Graph) -> Graph:
    full = full_mask(g.n)
    return Graph(g.n, tuple((full & ~a & ~(1 << i)) for i, a in enumerate(g.adj)))


def is_independent(g: Graph, s: int | Iterable[int]) -> bool:
    mask = s if isinstance(s, int) else mask_of(s)
    if mask & ~full_mask(g.n):
        raise ValueError("vertex set not within 1..n")
    for v in iter_vertices(mask):
        if g.adj[v - 1] & mask:
            return False
    return True


def independent_sets(g: Graph, k: int) -> list[int]:
    """All independent k-subsets as masks, lexicographic by vertex tuple."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k must be in 0..{g.n}, got {k}")
    out = []
    for combo in combinations(range(1, g.n + 1), k):
        m = mask_of(combo)
        if is_independent(g, m):
            out.append(m)
    return out


def maximal_cliques(g: Graph) -> list[int]:
    """Inclusion-maximal cliques as masks, sorted canonically."""
    if g.n == 0:
        return []
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot on the vertex covering most of p
        pivot_nb = 0
        best = -1
        for u in iter_vertices(p | x):
            c = (g.adj[u - 1] & p).bit_count()
            if c > best:
                best, pivot_nb = c, g.adj[u - 1]
        for v in iter_vertices(p & ~pivot_nb):
            b = 1 << (v - 1)
            expand(r | b, p & g.adj[v - 1], x & g.adj[v - 1])
            p &= ~b
            x |= b

    expand(0, full_mask(g.n), 0)
    return list(sort_canonical(out))


# ---------------------------------------------------------------------------
# Chordality


@dataclass(frozen=True)
class ChordalityCertificate:
    chordal: bool
    elimination_order: tuple[int, ...] | None
    chordless_cycle: tuple[int, ...] | None


def is_chordal(g: Graph) -> ChordalityCertificate:
    """Maximum cardinality search plus a simplicial check on the resulting order.

    A positive answer carries a perfect elimination ordering; a negative one
    carries a chordless cycle of length at least 4.
    """
    n = g.n
    if n == 0:
        return ChordalityCertificate(True, (), None)
    weight = [0] * (n + 1)
    visited = 0
    visit_order = []
    for _ in range(n):
        best_v, best_w = 0, -1
        for v in range(1, n + 1):
            if not visited >> (v - 1) & 1 and weight[v] > best_w:
                best_v, best_w = v, weight[v]
        visit_order.append(best_v)
        visited |= 1 << (best_v - 1)
        for u in iter_vertices(g.adj[best_v - 1] & ~visited):
            weight[u] += 1
    peo = tuple(reversed(visit_order))
    if is_perfect_elimination_order(g, peo):
        return ChordalityCertificate(True, peo, None)
    cyc = _find_chordless_cycle(g)
    assert cyc is not None, "simplicial check failed but no chordless cycle found"
    return ChordalityCertificate(False, None, cyc)


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(1, g.n + 1)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    later = full_mask(g.n)
    for v in order:
        later &= ~(1 << (v - 1))
        s = g.adj[v - 1] & later
        if s:
            u = min(iter_vertices(s), key=pos.__getitem__)
            rest = s & ~(1 << (u - 1))
            if rest & ~g.adj[u - 1]:
                return False
    return True


def is_chordless_cycle(g: Graph, cyc: Sequence[int]) -> bool:
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = (j - i == 1) or (i == 0 and j == k - 1)
            if g.has_edge(cyc[i], cyc[j]) != adjacent:
                return False
    return True


def _find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    # For any chordless cycle v,u,...,w the internal vertices avoid N[v], so a
    # shortest u-w path outside N[v] closes a chordless cycle through v.
    for v in range(1, g.n + 1):
        nb = list(iter_vertices(g.adj[v - 1]))
        for u, w in combinations(nb, 2):
            if g.has_edge(u, w):
                continue
            allowed = (full_mask(g.n) & ~g.adj[v - 1] & ~(1 << (v - 1))) | (1 << (u - 1)) | (1 << (w - 1))
            mid = _shortest_path(g, u, w, allowed)
            if mid is not None:
                cyc = (v, *mid)
                if is_chordless_cycle(g, cyc):
                    return cyc
    return None


def _shortest_path(g: Graph, src: int, dst: int, allowed: int) -> tuple[int, ...] | None:
    prev = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            out = []
            while x:
                out.append(x)
                x = prev[x]
            return tuple(reversed(out))
        for y in iter_vertices(g.adj[x - 1] & allowed):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def find_chordless_cycle_bruteforce(g: Graph) -> tuple[int, ...] | None:
    """Exhaustive induced-cycle search; test oracle for is_chordal."""
    for size in range(4, g.n + 1):
        for combo in combinations(range(1, g.n + 1), size):
            cyc = _as_induced_cycle(g, combo)
            if cyc is not None:
                return cyc
    return None


def _as_induced_cycle(g: Graph, verts: tuple[int, ...]) -> tuple[int, ...] | None:
    mask = mask_of(verts)
    for v in verts:
        if (g.adj[v - 1] & mask).bit_count() != 2:
            return None
    # trace it; connectivity check comes free
    start = verts[0]
    cyc = [start]
    prev, cur = 0, start
    for _ in range(len(verts) - 1):
        nxt = None
        for u in iter_vertices(g.adj[cur - 1] & mask):
            if u != prev:
                nxt = u
                break
        if nxt is None or nxt == start:
            return None
        cyc.append(nxt)
        prev, cur = cur, nxt
    if not g.has_edge(cyc[-1], start) or len(cyc) != len(verts):
        return None
    return tuple(cyc)
