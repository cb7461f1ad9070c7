"""Difference cycles: compressed descriptions of cyclically symmetric complexes.

A difference cycle ``(a_0 : ... : a_d)`` with ``n = sum(a_i)`` stands for the
orbit of the simplex ``<0, a_0, a_0+a_1, ...>`` under the vertex shift
``v -> v+1 (mod n)``.  A set of difference cycles on a common ``n`` therefore
encodes a simplicial complex that is invariant under the full cyclic group,
using one line of data per orbit instead of one per facet.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .simplicial import SimplicialComplex


@dataclass(frozen=True, order=True)
class DifferenceCycle:
    """A cyclic tuple of positive vertex differences, in canonical rotation.

    The canonical rotation is the lexicographically least one; two tuples
    describe the same orbit exactly when their canonical rotations agree.
    A cycle whose entry tuple has a non-trivial rotation period generates a
    short orbit: its length is the sum of the first ``period`` entries.
    """

    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise ValueError("empty difference cycle")
        if any((not isinstance(a, int)) or a <= 0 for a in self.entries):
            raise ValueError(f"entries must be positive integers: {self.entries}")
        object.__setattr__(self, "entries", _least_rotation(self.entries))

    @property
    def n(self) -> int:
        return sum(self.entries)

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    @property
    def period(self) -> int:
        """Least positive rotation period of the entry tuple."""
        e = self.entries
        for rho in range(1, len(e) + 1):
            if len(e) % rho == 0 and e[rho:] + e[:rho] == e:
                return rho
        return len(e)

    @property
    def orbit_length(self) -> int:
        return sum(self.entries[: self.period])

    @property
    def is_short_orbit(self) -> bool:
        return self.orbit_length < self.n

    def base_simplex(self) -> tuple:
        out = [0]
        for a in self.entries[:-1]:
            out.append(out[-1] + a)
        return tuple(out)

    def facets(self):
        """All simplices of the orbit, as sorted vertex tuples."""
        n = self.n
        base = self.base_simplex()
        return [tuple(sorted((v + j) % n for v in base)) for j in range(self.orbit_length)]

    def rotate_max_last(self) -> tuple:
        """The entry rotation placing a maximal entry last (ties resolved
        lexicographically)."""
        e = self.entries
        best = None
        for r in range(len(e)):
            rot = e[r:] + e[:r]
            if rot[-1] == max(e) and (best is None or rot < best):
                best = rot
        return best

    def __str__(self):
        return ":".join(str(a) for a in self.entries)


def _least_rotation(entries: tuple) -> tuple:
    return min(entries[r:] + entries[:r] for r in range(len(entries)))


def canonicalize(entries) -> DifferenceCycle:
    """Canonical difference cycle for an entry sequence."""
    return DifferenceCycle(tuple(entries))


def parse_cycle(text: str) -> DifferenceCycle:
    """Parse ``"1:6:1:6"`` into a canonical difference cycle."""
    try:
        entries = tuple(int(part) for part in text.strip().split(":"))
    except ValueError as err:
        raise ValueError(f"malformed difference cycle {text!r}") from err
    return canonicalize(entries)


@dataclass(frozen=True)
class CyclicComplex:
    """A shift-invariant complex given by a duplicate-free set of cycles."""

    n: int
    cycles: tuple

    def __post_init__(self):
        cycles = tuple(sorted(set(self.cycles)))
        for c in cycles:
            if not isinstance(c, DifferenceCycle):
                raise TypeError(f"not a difference cycle: {c!r}")
            if c.n != self.n:
                raise ValueError(f"cycle {c} sums to {c.n}, expected {self.n}")
        object.__setattr__(self, "cycles", cycles)

    def __contains__(self, cycle: DifferenceCycle) -> bool:
        return cycle in self.cycles

    def __str__(self):
        return f"n={self.n}: " + ", ".join(f"({c})" for c in self.cycles)

    def facet_count(self) -> int:
        return sum(c.orbit_length for c in self.cycles)

    def expand(self) -> SimplicialComplex:
        """The explicit facet-list complex of the union of all orbits.

        Distinct canonical cycles always generate disjoint orbits (a facet
        determines its difference tuple up to rotation), which is asserted
        here as a cheap internal consistency check.
        """
        facets = []
        for c in self.cycles:
            facets.extend(c.facets())
        if len(set(facets)) != len(facets):
            raise ValueError("cycles not disjoint")
        complex_ = SimplicialComplex(facets, n=self.n)
        if len(complex_.facets) != self.facet_count():
            raise ValueError("cycles not disjoint")
        return complex_

    def relabel(self, unit: int) -> "CyclicComplex":
        """The complex with every vertex label multiplied by a unit of Z_n."""
        if gcd(unit, self.n) != 1:
            raise ValueError(f"{unit} is not a unit modulo {self.n}")
        out = []
        for c in self.cycles:
            base = [(unit * v) % self.n for v in c.base_simplex()]
            out.append(_cycle_of_vertex_set(sorted(base), self.n))
        return CyclicComplex(self.n, tuple(out))

    def multipliers(self) -> frozenset:
        """All units of Z_n whose relabelling fixes the facet set."""
        return frozenset(
            u for u in range(1, self.n) if gcd(u, self.n) == 1 and self.relabel(u) == self
        )

    def verify_manifold(self):
        """Vertex-link test using transitivity: only vertex 0 is checked."""
        return self.expand().is_combinatorial_3_manifold(check_vertices=(0,))


def _cycle_of_vertex_set(vertices, n: int) -> DifferenceCycle:
    vs = sorted(vertices)
    diffs = [b - a for a, b in zip(vs, vs[1:])] + [vs[0] + n - vs[-1]]
    return canonicalize(diffs)


def compress(complex_: SimplicialComplex, n: int) -> CyclicComplex:
    """Recover the difference-cycle form of a shift-invariant complex.

    Raises when some facet's shift by one is missing, naming the facet.
    """
    facets = complex_.facets
    if not facets:
        raise ValueError("cannot compress an empty complex")
    if any(f[-1] >= n for f in facets):
        raise ValueError(f"vertex ids exceed the stated count {n}")
    facet_set = set(facets)
    for f in sorted(facets):
        shifted = tuple(sorted((v + 1) % n for v in f))
        if shifted not in facet_set:
            raise ValueError(f"not shift-invariant: facet {f} has no image {shifted}")
    cycles = {_cycle_of_vertex_set(f, n) for f in facets}
    return CyclicComplex(n, tuple(cycles))


# -- cyclic polytope boundaries ----------------------------------------------


def gale_facets(n: int) -> SimplicialComplex:
    """Brute-force facet list of the boundary of the cyclic 4-polytope.

    A 4-tuple is a facet exactly when every two vertices outside it are
    separated by an even number of its elements; this enumeration over all
    4-subsets is the independent oracle for ``cyclic_polytope_boundary``.
    """
    if n < 5:
        raise ValueError("need at least 5 vertices")
    facets = []
    for quad in combinations(range(n), 4):
        members = set(quad)
        rest = [v for v in range(n) if v not in members]
        ok = True
        for i, u in enumerate(rest):
            for w in rest[i + 1 :]:
                between = sum(1 for x in quad if u < x < w)
                if between % 2:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            facets.append(quad)
    return SimplicialComplex(facets, n=n)


def cyclic_polytope_boundary(n: int) -> CyclicComplex:
    """The boundary of the cyclic 4-polytope as difference cycles.

    The cycles are ``(1 : i : 1 : n-2-i)`` for ``1 <= i <= n//2``; rotation
    duplicates collapse in the canonical set (for even ``n`` the top index
    repeats an earlier cycle, for odd ``n`` the last two coincide).
    """
    if n < 5:
        raise ValueError("need at least 5 vertices")
    cycles = {canonicalize((1, i, 1, n - 2 - i)) for i in range(1, n // 2 + 1)}
    return CyclicComplex(n, tuple(cycles))


def short_cycle(n: int) -> DifferenceCycle:
    """The half-length orbit ``(1 : n/2-1 : 1 : n/2-1)`` (n even)."""
    if n % 2:
        raise ValueError("short cycle needs an even vertex count")
    return canonicalize((1, n // 2 - 1, 1, n // 2 - 1))


def torus_decomposition(n: int, l: int) -> tuple:
    """Split the cyclic 4-polytope boundary into two complementary pieces.

    The first part collects the cycles ``(1 : i : 1 : n-2-i)`` with
    ``i <= l``, the second the remainder; their union is the full boundary
    and both parts carry solid-torus evidence (circle homology, torus
    boundary, collapsibility onto a circle).  That requires the remainder
    to keep at least one full-length orbit: for even n the half-length
    cycle alone is a ring of tetrahedra glued along edges, pinched rather
    than solid, and its complement is not a solid torus either.
    """
    distinct = len(cyclic_polytope_boundary(n).cycles)
    top = distinct - 1 - (1 if n % 2 == 0 else 0)
    if not 1 <= l <= top:
        raise ValueError(f"l={l} outside 1..{top}")
    inner = {canonicalize((1, i, 1, n - 2 - i)) for i in range(1, l + 1)}
    rest = set(cyclic_polytope_boundary(n).cycles) - inner
    return CyclicComplex(n, tuple(inner)), CyclicComplex(n, tuple(rest))
