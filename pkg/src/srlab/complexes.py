"""Simplicial complexes with an explicit ground set 1..n, stored by facets.

Two degenerate complexes are kept distinct: the VOID complex (no faces at
all, empty facet list) and the IRRELEVANT complex (whose only face is the
empty set, facet list [0]). Alexander duality swaps the void complex with
the full simplex, so both must be representable.

All operations are pure; facet lists are kept in a canonical order (sorted
lexicographically by vertex tuple) so outputs are deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .bitsets import (
    full_mask,
    is_subset,
    mask_of,
    maximal_masks,
    minimal_masks,
    sort_canonical,
    vertices_of,
)
from .errors import GuardExceeded, VoidComplexError
from .graphs import Graph, independent_sets, maximal_cliques

NEG_INF = float("-inf")

#: Face enumeration refuses larger ground sets unless explicitly overridden.
DEFAULT_GROUND_GUARD = 24


@dataclass(frozen=True)
class SimplicialComplex:
    """Facets as bitmasks over ground set 1..n. Empty facet tuple means VOID."""

    n: int
    facets: tuple[int, ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    def dim(self):
        return NEG_INF if self.is_void else max(f.bit_count() for f in self.facets) - 1

    def facet_vertices(self) -> list[tuple[int, ...]]:
        return [vertices_of(f) for f in self.facets]

    def is_face(self, sigma: int) -> bool:
        return any(is_subset(sigma, f) for f in self.facets)


def make_complex(n: int, facets: Iterable[int]) -> SimplicialComplex:
    """Canonical complex from candidate faces; empty input gives VOID."""
    if n < 0:
        raise ValueError("ground set size must be nonnegative")
    full = full_mask(n)
    cand = list(facets)
    for f in cand:
        if f & ~full:
            raise ValueError(f"facet {vertices_of(f)} not within ground set 1..{n}")
    return SimplicialComplex(n, sort_canonical(maximal_masks(cand)))


def void_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ())


def irrelevant_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (0,))


def simplex_complex(n: int) -> SimplicialComplex:
    """The full simplex on 1..n."""
    return SimplicialComplex(n, (full_mask(n),))


def dimension(c: SimplicialComplex):
    """Dimension; -inf sentinel for VOID, -1 for IRRELEVANT."""
    return c.dim()


def is_pure(c: SimplicialComplex) -> bool:
    if c.is_void:
        return True
    sizes = {f.bit_count() for f in c.facets}
    return len(sizes) == 1


# ---------------------------------------------------------------------------
# Face enumeration


def _check_ground_guard(c: SimplicialComplex, override: bool) -> None:
    if c.n > DEFAULT_GROUND_GUARD and not override:
        raise GuardExceeded(
            f"ground set {c.n} exceeds face-enumeration guard {DEFAULT_GROUND_GUARD}; "
            "pass override=True (CLI: --override-guards)"
        )


def all_faces(c: SimplicialComplex, override: bool = False) -> dict[int, list[int]]:
    """Faces bucketed by cardinality; deduplicated union of facet power sets."""
    _check_ground_guard(c, override)
    seen: set[int] = set()
    for f in c.facets:
        s = f
        while True:
            seen.add(s)
            if s == 0:
                break
            s = (s - 1) & f
    by: dict[int, list[int]] = {}
    for m in seen:
        by.setdefault(m.bit_count(), []).append(m)
    for bucket in by.values():
        bucket.sort(key=vertices_of)
    return by


def faces_of_card(c: SimplicialComplex, card: int, override: bool = False) -> list[int]:
    """All faces with exactly `card` vertices, canonically ordered."""
    _check_ground_guard(c, override)
    seen: set[int] = set()
    for f in c.facets:
        if f.bit_count() < card:
            continue
        for combo in combinations(vertices_of(f), card):
            seen.add(mask_of(combo))
    return sorted(seen, key=vertices_of)


def f_vector(c: SimplicialComplex, override: bool = False) -> tuple[int, ...]:
    """(f_-1, f_0, ..., f_d); the void complex yields the empty tuple."""
    if c.is_void:
        return ()
    by = all_faces(c, override=override)
    top = max(by)
    return tuple(len(by.get(i, ())) for i in range(top + 1))


# ---------------------------------------------------------------------------
# Constructions from graphs


def cover_complex(g: Graph, k: int) -> SimplicialComplex:
    """Complex whose facets are complements of the independent k-sets of g.

    Equivalently the facets are the vertex covers of size n-k; a set is a
    face exactly when its complement contains an independent k-set. Returns
    VOID when g has no independent k-set.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in 1..{g.n}, got {k}")
    full = full_mask(g.n)
    return SimplicialComplex(g.n, sort_canonical(full ^ s for s in independent_sets(g, k)))


def clique_complex(g: Graph) -> SimplicialComplex:
    """All cliques of g; isolated vertices appear as 0-dimensional facets."""
    if g.n == 0:
        return irrelevant_complex(0)
    return SimplicialComplex(g.n, sort_canonical(maximal_cliques(g)))


# ---------------------------------------------------------------------------
# Stanley-Reisner combinatorics


def minimal_nonfaces(c: SimplicialComplex, *, limit: int | None = None) -> tuple[int, ...]:
    """Inclusion-minimal subsets of the ground set that are not faces.

    These support the minimal generators of the face ideal. Computed as the
    minimal transversals of the facet complements, processed edge by edge.
    An optional limit bounds the intermediate antichain size (GuardExceeded
    when hit); internal callers use it to bail out of hopeless duals.
    """
    if c.is_void:
        raise VoidComplexError("the void complex has no face ideal here")
    full = full_mask(c.n)
    hyperedges = [full & ~f for f in c.facets]
    if any(e == 0 for e in hyperedges):
        return ()  # full simplex: no nonfaces
    trans: list[int] = [1 << (v - 1) for v in vertices_of(hyperedges[0])]
    for e in hyperedges[1:]:
        nxt = []
        for t in trans:
            if t & e:
                nxt.append(t)
            else:
                b = e
                while b:
                    low = b & -b
                    nxt.append(t | low)
                    b ^= low
        if limit is not None and len(nxt) > limit:
            raise GuardExceeded(f"minimal nonface search exceeded {limit} intermediates")
        trans = minimal_masks(nxt)
    return sort_canonical(trans)


def minimal_nonfaces_bruteforce(c: SimplicialComplex) -> tuple[int, ...]:
    """Levelwise scan over all subsets; independent oracle for small n."""
    if c.is_void:
        raise VoidComplexError("void complex")
    out = []
    for card in range(1, c.n + 1):
        for combo in combinations(range(1, c.n + 1), card):
            m = mask_of(combo)
            if c.is_face(m):
                continue
            if all(c.is_face(m ^ (1 << (v - 1))) for v in combo):
                out.append(m)
    return sort_canonical(out)


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """Sets whose ground-set complements are nonfaces of c.

    Facets of the dual are complements of the minimal nonfaces. The dual of
    the void complex is the full simplex and vice versa; the operation is an
    involution.
    """
    if c.is_void:
        return simplex_complex(c.n)
    mnf = minimal_nonfaces(c)
    if not mnf:
        return void_complex(c.n)
    full = full_mask(c.n)
    return SimplicialComplex(c.n, sort_canonical(full ^ m for m in mnf))


def dual_ideal_generators(c: SimplicialComplex) -> tuple[int, ...]:
    """Minimal monomial generators of the dual complex's face ideal.

    Each facet F contributes the product of the variables outside F; the list
    is reduced to divisibility-minimal members and equals
    minimal_nonfaces(alexander_dual(c)). For the full simplex the dual is
    VOID, whose ideal is out of domain; an empty tuple is returned there.
    """
    if c.is_void:
        raise VoidComplexError("void complex")
    full = full_mask(c.n)
    gens = [full ^ f for f in c.facets]
    if any(g == 0 for g in gens):
        return ()
    return sort_canonical(minimal_masks(gens))


def dual_fvector(f: tuple[int, ...], n: int) -> tuple[int, ...]:
    """f-vector of the Alexander dual from the f-vector of a complex on 1..n.

    Entry i of the dual counts i-faces and equals C(n, i+1) - f_{n-i-2}.
    The empty tuple stands for the void complex on either side.
    """
    from math import comb

    def fval(j: int) -> int:
        idx = j + 1
        return f[idx] if 0 <= idx < len(f) else 0

    h = [comb(n, i + 1) - fval(n - i - 2) for i in range(-1, n)]
    if any(x < 0 for x in h):
        raise ValueError(f"not the f-vector of a complex on 1..{n}: {f}")
    while h and h[-1] == 0:
        h.pop()
    if not h:
        return ()
    if h[0] == 0:
        raise ValueError(f"not the f-vector of a complex on 1..{n}: {f}")
    return tuple(h)


# ---------------------------------------------------------------------------
# Subcomplexes and joins


def skeleton(c: SimplicialComplex, i: int, override: bool = False) -> SimplicialComplex:
    """All faces of dimension at most i."""
    if i < -1:
        raise ValueError("skeleton dimension must be >= -1")
    if c.is_void:
        return c
    if i >= c.dim():
        return c
    keep = faces_of_card(c, i + 1, override=override)
    keep += [f for f in c.facets if f.bit_count() <= i]
    return make_complex(c.n, keep)


def link(c: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Faces disjoint from sigma whose union with sigma is a face.

    The ground set shrinks to exclude sigma, relabeled order-preserving.
    """
    if not c.is_face(sigma):
        raise ValueError(f"{vertices_of(sigma)} is not a face")
    if sigma == 0:
        return c
    cof = [f ^ sigma for f in c.facets if f & sigma == sigma]
    return _relabel_excluding(c.n, cof, sigma)


def deletion(c: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Faces that do not contain sigma.

    For a single vertex the ground set shrinks by that vertex; for larger
    sigma the ground set is kept, since other vertices of sigma remain faces.
    Deleting the empty set removes every face and yields VOID.
    """
    if sigma & ~full_mask(c.n):
        raise ValueError("vertex set not within ground set")
    if c.is_void:
        return _relabel_excluding(c.n, [], sigma) if sigma.bit_count() == 1 else c
    if sigma == 0:
        return void_complex(c.n)
    cand = []
    for f in c.facets:
        if f & sigma != sigma:
            cand.append(f)
        else:
            b = sigma
            while b:
                low = b & -b
                cand.append(f ^ low)
                b ^= low
    if sigma.bit_count() == 1:
        return _relabel_excluding(c.n, maximal_masks(cand), sigma)
    return make_complex(c.n, cand)


def _relabel_excluding(n: int, masks: list[int], dropped: int) -> SimplicialComplex:
    keep = [v for v in range(1, n + 1) if not dropped >> (v - 1) & 1]
    newbit = {v: 1 << i for i, v in enumerate(keep)}
    out = []
    for m in masks:
        x = 0
        for v in vertices_of(m):
            x |= newbit[v]
        out.append(x)
    return make_complex(len(keep), out)


def induced_subcomplex(c: SimplicialComplex, w: int | Iterable[int]) -> SimplicialComplex:
    """Faces of c contained in w, relabeled order-preserving onto 1..|w|."""
    mask = w if isinstance(w, int) else mask_of(w)
    if mask & ~full_mask(c.n):
        raise ValueError("restriction set not within ground set")
    if c.is_void:
        return void_complex(mask.bit_count())
    return _relabel_excluding(c.n, maximal_masks(f & mask for f in c.facets), full_mask(c.n) ^ mask)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join on disjoint ground sets; b's vertices are relabeled upward by a.n.

    Facets are unions of facet pairs, so joining with VOID gives VOID and
    joining with IRRELEVANT is the identity up to relabeling.
    """
    n = a.n + b.n
    return SimplicialComplex(n, sort_canonical(fa | (fb << a.n) for fa in a.facets for fb in b.facets))


# ---------------------------------------------------------------------------
# Serialization


def complex_to_json(c: SimplicialComplex) -> dict:
    return {
        "n": c.n,
        "facets": [list(vertices_of(f)) for f in c.facets],
        "void": c.is_void,
    }


def complex_from_json(obj: dict) -> SimplicialComplex:
    n = int(obj["n"])
    facets = [mask_of(f) for f in obj["facets"]]
    c = make_complex(n, facets)
    void_flag = bool(obj.get("void", False))
    if void_flag != c.is_void:
        raise ValueError("void flag inconsistent with facet list")
    return c


def canonical_json(c: SimplicialComplex) -> str:
    """Stable serialization used for hashing and cache keys."""
    return json.dumps(complex_to_json(c), sort_keys=True, separators=(",", ":"))
