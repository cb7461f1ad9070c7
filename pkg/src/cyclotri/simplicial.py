"""Explicit simplicial complexes given by facet lists.

A complex is stored as its set of inclusion-maximal faces (facets), each a
strictly increasing tuple of vertex ids.  All derived data (face sets per
dimension, vertex links, boundary, surface recognition) is computed from the
facet set and memoised on the complex.  Complexes are immutable; every
operation returns a new complex and shares nothing mutable with its input.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations


class SurfaceError(ValueError):
    """Raised when a 2-complex fails a local surface condition."""


def check_simplex(vertices) -> tuple:
    """Validate and return a simplex as a strictly increasing vertex tuple."""
    simplex = tuple(vertices)
    if len(simplex) == 0:
        raise ValueError("empty simplex")
    for v in simplex:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"bad vertex id {v!r}")
    if any(a >= b for a, b in zip(simplex, simplex[1:])):
        raise ValueError(f"vertices not strictly increasing: {simplex}")
    return simplex


@dataclass(frozen=True)
class SurfaceType:
    """Classification of a closed triangulated surface.

    ``genus`` is the orientable genus when ``orientable`` is true and the
    number of cross-caps otherwise; it is None for disconnected surfaces
    (classify the components individually instead).
    """

    closed: bool
    connected: bool
    orientable: bool
    genus: int | None

    @property
    def is_sphere(self) -> bool:
        return self.connected and self.orientable and self.genus == 0

    @property
    def is_torus(self) -> bool:
        return self.connected and self.orientable and self.genus == 1


@dataclass(frozen=True)
class ManifoldReport:
    """Outcome of the vertex-link test for a combinatorial 3-manifold."""

    is_manifold: bool
    failing_vertex: int | None
    reason: str | None
    checked_vertices: tuple
    link_results: dict

    def __bool__(self) -> bool:
        return self.is_manifold


class SimplicialComplex:
    """A finite abstract simplicial complex on vertex ids ``0 .. n-1``.

    ``n`` is the ambient label bound; subcomplexes (links, spans, collapse
    residues) keep their original labels, so not every id below ``n`` needs
    to occur in a facet.  Non-maximal input faces are absorbed silently.
    """

    __slots__ = ("n", "facets", "_cache")

    def __init__(self, facets, n=None):
        cleaned = sorted({check_simplex(f) for f in facets}, key=lambda f: (-len(f), f))
        # equal-length faces cannot contain one another, so candidates only
        # need checking against the strictly longer ones already kept
        maximal = []
        longer: list = []
        pending: list = []
        current_len = None
        for f in cleaned:
            if len(f) != current_len:
                longer.extend(pending)
                pending = []
                current_len = len(f)
            fs = frozenset(f)
            if any(fs <= other for other in longer):
                continue
            maximal.append(f)
            pending.append(fs)
        self.facets = frozenset(maximal)
        top = max((f[-1] for f in self.facets), default=-1)
        if n is None:
            n = top + 1
        elif top >= n:
            raise ValueError(f"vertex id {top} exceeds vertex count {n}")
        self.n = n
        self._cache = {}

    # -- basic structure ---------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={len(self.facets)}, dim={self.dim})"

    def __len__(self):
        return len(self.facets)

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    @property
    def is_pure(self) -> bool:
        if not self.facets:
            return False
        return len({len(f) for f in self.facets}) == 1

    @property
    def vertices(self) -> tuple:
        key = "vertices"
        if key not in self._cache:
            used = set()
            for f in self.facets:
                used.update(f)
            self._cache[key] = tuple(sorted(used))
        return self._cache[key]

    def faces(self, k: int) -> frozenset:
        """All k-dimensional faces (downward closure, memoised per k)."""
        if k < 0:
            return frozenset()
        key = ("faces", k)
        if key not in self._cache:
            out = set()
            for f in self.facets:
                if len(f) > k:
                    out.update(combinations(f, k + 1))
                elif len(f) == k + 1:
                    out.add(f)
            self._cache[key] = frozenset(out)
        return self._cache[key]

    def all_faces(self) -> frozenset:
        key = "all_faces"
        if key not in self._cache:
            out = set()
            for f in self.facets:
                for k in range(1, len(f) + 1):
                    out.update(combinations(f, k))
            self._cache[key] = frozenset(out)
        return self._cache[key]

    def has_face(self, face) -> bool:
        face = tuple(face)
        fs = set(face)
        return any(fs <= set(f) for f in self.facets)

    def f_vector(self) -> tuple:
        """Face counts (f_0, ..., f_d)."""
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * fk for k, fk in enumerate(self.f_vector()))

    def is_neighbourly(self) -> bool:
        """True when every pair of vertices spans an edge."""
        m = len(self.vertices)
        return len(self.faces(1)) == m * (m - 1) // 2

    # -- subcomplex operations ----------------------------------------------

    def link(self, face) -> "SimplicialComplex":
        """The link of ``face``: all faces g disjoint from it with g + face a face.

        Vertex labels are inherited from the ambient complex.
        """
        face = check_simplex(sorted(face))
        fs = set(face)
        gens = []
        found = False
        for f in self.facets:
            other = set(f)
            if fs <= other:
                found = True
                rest = tuple(sorted(other - fs))
                if rest:
                    gens.append(rest)
        if not found:
            raise ValueError(f"face absent: {face}")
        return SimplicialComplex(gens, n=self.n)

    def span(self, vertex_set) -> "SimplicialComplex":
        """The full subcomplex on ``vertex_set`` (may be empty or non-pure)."""
        keep = set(vertex_set)
        gens = []
        for f in self.facets:
            cut = tuple(v for v in f if v in keep)
            if cut:
                gens.append(cut)
        return SimplicialComplex(gens, n=self.n)

    def connected_components(self) -> list:
        """Partition into facet-connected pieces, labels preserved."""
        parent: dict = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for f in self.facets:
            for v in f:
                parent.setdefault(v, v)
            for v in f[1:]:
                union(f[0], v)
        groups: dict = {}
        for f in self.facets:
            groups.setdefault(find(f[0]), []).append(f)
        comps = [SimplicialComplex(fs, n=self.n) for fs in groups.values()]
        comps.sort(key=lambda c: c.vertices[0])
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    # -- boundary and surface recognition -----------------------------------

    def boundary_complex(self) -> "SimplicialComplex":
        """Faces of codimension one lying in exactly one facet.

        Requires a pure complex in which every ridge lies in at most two
        facets (a pseudomanifold condition).
        """
        if not self.is_pure:
            raise ValueError("boundary of a non-pure complex is undefined")
        counts: dict = {}
        for f in self.facets:
            for ridge in combinations(f, len(f) - 1):
                counts[ridge] = counts.get(ridge, 0) + 1
        bad = [r for r, c in counts.items() if c > 2]
        if bad:
            raise ValueError(f"not a pseudomanifold: ridge {min(bad)} lies in >2 facets")
        gens = [r for r, c in counts.items() if c == 1]
        return SimplicialComplex(gens, n=self.n)

    def identify_closed_surface(self) -> SurfaceType:
        """Classify a pure 2-complex as a closed surface.

        Checks that every edge lies in exactly two triangles and that the
        triangles around each vertex form a single cycle, then derives
        orientability by propagating triangle orientations across the dual
        graph and reads the genus off the Euler characteristic.
        """
        if self.dim != 2 or not self.is_pure:
            raise SurfaceError(f"not a pure 2-complex (dim={self.dim})")
        tris = sorted(self.facets)
        edge_tris: dict = {}
        for t in tris:
            for e in combinations(t, 2):
                edge_tris.setdefault(e, []).append(t)
        for e, ts in edge_tris.items():
            if len(ts) != 2:
                raise SurfaceError(f"edge {e} lies in {len(ts)} triangles, not 2")
        # around every vertex the incident edges must close into one cycle
        for v in self.vertices:
            nbrs: dict = {}
            deg = 0
            for t in tris:
                if v not in t:
                    continue
                a, b = (x for x in t if x != v)
                nbrs.setdefault(a, set()).add(b)
                nbrs.setdefault(b, set()).add(a)
                deg += 1
            if any(len(s) != 2 for s in nbrs.values()):
                bad = min(w for w, s in nbrs.items() if len(s) != 2)
                raise SurfaceError(f"link of vertex {v} is not a cycle at {bad}")
            start = min(nbrs)
            prev, cur, seen = None, start, 1
            while True:
                a, b = sorted(nbrs[cur])
                nxt = b if a == prev else a
                prev, cur = cur, nxt
                if cur == start:
                    break
                seen += 1
            if seen != len(nbrs):
                raise SurfaceError(f"link of vertex {v} splits into several cycles")

        comps = self.connected_components()
        orientable = all(_orientable(c) for c in comps)
        if len(comps) == 1:
            chi = self.euler_characteristic()
            genus = (2 - chi) // 2 if orientable else 2 - chi
            return SurfaceType(True, True, orientable, genus)
        return SurfaceType(True, False, orientable, None)

    def is_combinatorial_3_manifold(self, check_vertices=None) -> ManifoldReport:
        """Vertex-link test: every link must be a 2-sphere.

        ``check_vertices`` restricts the test (used for vertex-transitive
        complexes, where a single link decides all of them).
        """
        if self.dim != 3 or not self.is_pure:
            raise ValueError(f"not a pure 3-complex (dim={self.dim})")
        todo = tuple(check_vertices) if check_vertices is not None else self.vertices
        results: dict = {}
        for v in todo:
            try:
                surface = self.link((v,)).identify_closed_surface()
            except SurfaceError as err:
                results[v] = str(err)
                return ManifoldReport(False, v, str(err), todo, results)
            results[v] = surface
            if not surface.is_sphere:
                reason = f"link of {v} is not a sphere: {surface}"
                return ManifoldReport(False, v, reason, todo, results)
        return ManifoldReport(True, None, None, todo, results)

    # -- collapsing ----------------------------------------------------------

    def greedy_collapse(self) -> "SimplicialComplex":
        """Remove free-face pairs until none remain.

        A face is free when exactly one other face properly contains it.
        Ties are broken by taking the lexicographically smallest free face,
        so the residual complex is deterministic.
        """
        faces = set(self.all_faces())
        above: dict = {f: set() for f in faces}
        for f in faces:
            for k in range(1, len(f)):
                for sub in combinations(f, k):
                    above[sub].add(f)
        heap = [f for f in faces if len(above[f]) == 1]
        heapq.heapify(heap)
        while heap:
            free = heapq.heappop(heap)
            if free not in faces or len(above[free]) != 1:
                continue
            (top,) = above[free]
            for gone in (free, top):
                faces.discard(gone)
                for k in range(1, len(gone)):
                    for sub in combinations(gone, k):
                        if sub in above:
                            sup = above[sub]
                            sup.discard(gone)
                            if len(sup) == 1 and sub in faces:
                                heapq.heappush(heap, sub)
        if not faces:
            return SimplicialComplex([], n=self.n)
        return SimplicialComplex(faces, n=self.n)


def _orientable(component: SimplicialComplex) -> bool:
    """Orientation propagation over the dual graph of a closed 2-complex."""
    tris = sorted(component.facets)
    edge_tris: dict = {}
    for t in tris:
        for e in combinations(t, 2):
            edge_tris.setdefault(e, []).append(t)
    sign = {tris[0]: 1}
    stack = [tris[0]]
    while stack:
        t = stack.pop()
        for e in combinations(t, 2):
            for u in edge_tris[e]:
                if u == t:
                    continue
                # relative orientation of the shared edge inside each triangle
                flip = _edge_parity(t, e) == _edge_parity(u, e)
                want = -sign[t] if flip else sign[t]
                if u in sign:
                    if sign[u] != want:
                        return False
                else:
                    sign[u] = want
                    stack.append(u)
    return True


def _edge_parity(tri, edge) -> int:
    """Parity of the edge (a,b) inside the cyclic order of a sorted triangle."""
    a, b = edge
    i, j = tri.index(a), tri.index(b)
    return 1 if (j - i) % 3 == 1 else -1
