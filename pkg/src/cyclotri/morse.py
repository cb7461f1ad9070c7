"""Polyhedral Morse theory for generic vertex orderings.

A regular simplexwise linear function on a complex is determined by an
injective assignment of values to vertices, i.e. by a total order.  A vertex
is critical of index i with multiplicity m when the part of its link spanned
by the earlier vertices has reduced mod-2 Betti number m in degree i-1 (the
empty span makes the minimum vertex critical of index 0).  Summing the
multiplicities per index gives the Morse vector; its alternating sum always
equals the Euler characteristic, and its total bounds the sum of the mod-2
Betti numbers from above.  Minimising the index-1 count over orderings
yields upper bounds for the Heegaard genus of a 3-manifold.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .homology import betti_numbers_f2
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class RslFunction:
    """A vertex order standing for a strictly increasing value assignment."""

    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if len(set(self.order)) != len(self.order):
            raise ValueError("order must not repeat vertices")

    @property
    def rank(self) -> dict:
        return {v: i for i, v in enumerate(self.order)}


def identity_rsl(complex_: SimplicialComplex) -> RslFunction:
    return RslFunction(complex_.vertices)


def random_rsl(complex_: SimplicialComplex, seed: int) -> RslFunction:
    order = list(complex_.vertices)
    random.Random(seed).shuffle(order)
    return RslFunction(order)


@dataclass(frozen=True)
class CriticalPoint:
    vertex: int
    index: int
    multiplicity: int


@lru_cache(maxsize=32)
def _link_tables(complex_: SimplicialComplex):
    """Per-vertex link facets, vertices and edges, computed once."""
    tables = {}
    for v in complex_.vertices:
        link = complex_.link((v,))
        verts = link.vertices
        edges = sorted(link.faces(1))
        tables[v] = (tuple(sorted(link.facets)), verts, edges)
    return tables


def _span_complex(link_facets, allowed) -> SimplicialComplex | None:
    gens = []
    for f in link_facets:
        cut = tuple(w for w in f if w in allowed)
        if cut:
            gens.append(cut)
    if not gens:
        return None
    return SimplicialComplex(gens)


def critical_points(complex_: SimplicialComplex, f: RslFunction) -> list:
    """All critical vertices of the ordering, with index and multiplicity.

    Expects a closed combinatorial 3-manifold (the caller usually knows
    this already; the pure-dimension check is cheap and catches misuse).
    """
    if complex_.dim != 3 or not complex_.is_pure:
        raise ValueError("critical points are computed on pure 3-complexes")
    if set(f.order) != set(complex_.vertices):
        raise ValueError("ordering does not match the vertex set")
    tables = _link_tables(complex_)
    rank = f.rank
    out = []
    for v in complex_.vertices:
        link_facets, _, _ = tables[v]
        below = {w for w in rank if rank[w] < rank[v]}
        span = _span_complex(link_facets, below)
        if span is None:
            out.append(CriticalPoint(v, 0, 1))
            continue
        reduced = betti_numbers_f2(span, reduced=True)
        for degree, value in enumerate(reduced):
            if value:
                out.append(CriticalPoint(v, degree + 1, value))
    return sorted(out, key=lambda cp: (rank[cp.vertex], cp.index))


def morse_vector(complex_: SimplicialComplex, points) -> tuple:
    """Per-index critical multiplicity totals (c_0, c_1, c_2, c_3).

    Raises when the Morse relations fail, since that can only mean a bug:
    the alternating sum must equal the Euler characteristic and the total
    must dominate the mod-2 Betti numbers.
    """
    counts = [0, 0, 0, 0]
    for cp in points:
        counts[cp.index] += cp.multiplicity
    chi = complex_.euler_characteristic()
    alternating = counts[0] - counts[1] + counts[2] - counts[3]
    if alternating != chi:
        raise AssertionError(f"alternating critical sum {alternating} != chi {chi}")
    if sum(counts) < sum(betti_numbers_f2(complex_)):
        raise AssertionError("critical total undercuts the mod-2 Betti sum")
    return tuple(counts)


# -- index-1 minimisation ------------------------------------------------------


def _index1_contribution(tables, v, rank) -> int:
    """Components-minus-one of the lower span of the link of v."""
    _, verts, edges = tables[v]
    rv = rank[v]
    present = [w for w in verts if rank[w] < rv]
    if not present:
        return 0
    parent = {w: w for w in present}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(present)
    for u, w in edges:
        if rank[u] < rv and rank[w] < rv:
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
                comps -= 1
    return comps - 1


def index1_total(complex_: SimplicialComplex, f: RslFunction) -> int:
    """Total index-1 multiplicity of an ordering (the genus-bound quantity)."""
    tables = _link_tables(complex_)
    rank = f.rank
    return sum(_index1_contribution(tables, v, rank) for v in complex_.vertices)


def heegaard_upper_bound(
    complex_: SimplicialComplex,
    strategies=("identity", "random", "search"),
    seed: int = 0,
    restarts: int = 16,
    iterations: int = 200,
):
    """Smallest index-1 critical total over the tried orderings.

    The identity order alone already gives a valid bound; seeded random
    restarts followed by adjacent-rank swap descent (accepting non-increase)
    often improve it.  Returns the bound and the witnessing ordering.
    """
    tables = _link_tables(complex_)
    best = None
    best_order = None

    def consider(order):
        nonlocal best, best_order
        f = RslFunction(order)
        total = index1_total(complex_, f)
        if best is None or total < best:
            best, best_order = total, order
        return total

    if "identity" in strategies:
        consider(tuple(complex_.vertices))
    rng = random.Random(seed)
    n_restarts = restarts if ("random" in strategies or "search" in strategies) else 0
    for _ in range(n_restarts):
        order = list(complex_.vertices)
        rng.shuffle(order)
        if "search" not in strategies:
            consider(tuple(order))
            continue
        rank = {v: i for i, v in enumerate(order)}
        contrib = {v: _index1_contribution(tables, v, rank) for v in order}
        total = sum(contrib.values())
        for _ in range(iterations):
            i = rng.randrange(len(order) - 1)
            u, w = order[i], order[i + 1]
            rank[u], rank[w] = rank[w], rank[u]
            new_u = _index1_contribution(tables, u, rank)
            new_w = _index1_contribution(tables, w, rank)
            delta = new_u + new_w - contrib[u] - contrib[w]
            if delta <= 0:
                order[i], order[i + 1] = w, u
                contrib[u], contrib[w] = new_u, new_w
                total += delta
            else:
                rank[u], rank[w] = rank[w], rank[u]
        consider(tuple(order))
    return best, RslFunction(best_order)
