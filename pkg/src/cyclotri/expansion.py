"""Expansion of cyclic 3-manifolds that contain the half-length orbit.

A cyclic complex on an even number n of vertices whose cycle set contains
``(1 : n/2-1 : 1 : n/2-1)`` can be stretched: every other cycle gains k on
its maximal entry, while the half-length orbit unfolds into the tail family
``(1 : l-1 : 1 : (n+k)-l-1)`` of cyclic-polytope cycles.  The stretched
complex is again a combinatorial manifold for every k >= 0 exactly when each
ordinary cycle carries an entry of size at least n/2; a violating cycle
forces a pinched vertex link after enough stretching.

This module decides the criterion, generates the stretched complexes, forms
the one-step contraction, and searches small vertex counts for violating
complexes that demonstrate the failure direction concretely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diffcycles import CyclicComplex, DifferenceCycle, canonicalize, short_cycle


@dataclass(frozen=True)
class ExpansionReport:
    n_even: bool
    short_cycle_present: bool
    violators: tuple

    @property
    def expandable(self) -> bool:
        return self.n_even and self.short_cycle_present and not self.violators


def check_expandable(cc: CyclicComplex) -> ExpansionReport:
    """Decide the stretching criterion for a cyclic complex.

    Expandable means: even vertex count, the half-length orbit is present,
    and every other cycle has an entry of at least n/2 (equivalently, with
    its maximal entry rotated to the rear, the first three entries sum to
    at most n/2).
    """
    n_even = cc.n % 2 == 0
    short = short_cycle(cc.n) if n_even else None
    short_present = n_even and short in cc.cycles
    violators = tuple(
        c
        for c in cc.cycles
        if c != short and max(c.entries) < (cc.n + 1) // 2
    )
    return ExpansionReport(n_even, short_present, violators)


@dataclass(frozen=True)
class ExpansionFamily:
    """A cyclic complex split into its half-length orbit and the rest.

    Ordinary cycles are stored in the rotation that puts a maximal entry
    last (ties resolved lexicographically), which is the form in which the
    stretching adds k to the final entry.
    """

    n: int
    ordinary: tuple

    @classmethod
    def from_cyclic(cls, cc: CyclicComplex) -> "ExpansionFamily":
        if cc.n % 2:
            raise ValueError("expansion needs an even vertex count")
        short = short_cycle(cc.n)
        if short not in cc.cycles:
            raise ValueError(f"half-length orbit ({short}) missing")
        ordinary = tuple(
            sorted(c.rotate_max_last() for c in cc.cycles if c != short)
        )
        return cls(cc.n, ordinary)

    @property
    def base(self) -> CyclicComplex:
        cycles = [canonicalize(t) for t in self.ordinary]
        cycles.append(short_cycle(self.n))
        return CyclicComplex(self.n, tuple(cycles))

    @property
    def is_valid(self) -> bool:
        return all(sum(t[:3]) <= self.n // 2 for t in self.ordinary)


def expand_family(fam: ExpansionFamily, k: int, enforce_criterion: bool = True) -> CyclicComplex:
    """The k-th stretched complex of a family.

    With ``enforce_criterion`` the family must satisfy the stretching
    criterion (the stretched complexes of a violating family are generally
    not manifolds; the failure search builds them deliberately).
    """
    if k < 0:
        raise ValueError("k must be non-negative; use contract_once to shrink")
    if enforce_criterion and not fam.is_valid:
        bad = [t for t in fam.ordinary if sum(t[:3]) > fam.n // 2]
        raise ValueError(f"family violates the stretching criterion: {bad}")
    n, m = fam.n, fam.n + k
    cycles = [canonicalize(t[:3] + (t[3] + k,)) for t in fam.ordinary]
    for l in range(n // 2, m // 2 + 1):
        cycles.append(canonicalize((1, l - 1, 1, m - l - 1)))
    return CyclicComplex(m, tuple(set(cycles)))


def contract_once(fam: ExpansionFamily):
    """The (-1)-member: drop the half-length orbit, shrink each maximal entry.

    Whether the result is again a combinatorial manifold is reported, not
    asserted; the construction does not guarantee it.
    """
    if not fam.ordinary:
        raise ValueError("nothing to contract: the family has no ordinary cycles")
    if any(t[3] < 2 for t in fam.ordinary):
        raise ValueError("an entry would drop to zero")
    cycles = tuple(canonicalize(t[:3] + (t[3] - 1,)) for t in fam.ordinary)
    contracted = CyclicComplex(fam.n - 1, cycles)
    return contracted, contracted.verify_manifold()


# -- the failure direction, demonstrated on small complexes --------------------


def all_cycles(n: int) -> list:
    """Every canonical 3-dimensional difference cycle on n vertices."""
    out = set()
    for a in range(1, n - 2):
        for b in range(1, n - a - 1):
            for c in range(1, n - a - b):
                out.add(canonicalize((a, b, c, n - a - b - c)))
    return sorted(out)


def _triangle_degrees(cycle: DifferenceCycle) -> dict:
    deg: dict = {}
    for f in cycle.facets():
        for t in combinations(f, 3):
            deg[t] = deg.get(t, 0) + 1
    return deg


def _complete_to_pseudomanifolds(n, fixed, candidates, max_nodes):
    """Backtracking over difference cycles until every triangle has degree 2.

    Yields cycle sets extending ``fixed``; the node budget keeps degenerate
    branches from taking over.
    """
    cand_tris = {c: _triangle_degrees(c) for c in candidates}
    deg: dict = {}
    for c in fixed:
        for t, d in _triangle_degrees(c).items():
            deg[t] = deg.get(t, 0) + d
    if any(d > 2 for d in deg.values()):
        return
    nodes = [0]

    def rec(chosen):
        if nodes[0] > max_nodes:
            return
        nodes[0] += 1
        open_tris = [t for t, d in deg.items() if d == 1]
        if not open_tris:
            if all(d == 2 for d in deg.values()):
                yield tuple(chosen)
            return
        focus = min(open_tris)
        for c in candidates:
            if c in chosen or c in fixed:
                continue
            ct = cand_tris[c]
            if focus not in ct:
                continue
            if any(deg.get(t, 0) + d > 2 for t, d in ct.items()):
                continue
            for t, d in ct.items():
                deg[t] = deg.get(t, 0) + d
            chosen.append(c)
            yield from rec(chosen)
            chosen.pop()
            for t, d in ct.items():
                deg[t] -= d
                if not deg[t]:
                    del deg[t]

    yield from rec([])


@dataclass(frozen=True)
class ViolatingFamilyWitness:
    base: CyclicComplex
    violators: tuple
    k_failing: int
    singular_vertex: int
    reason: str


def search_violating_family(max_n: int = 16, k_range: int = 6, max_nodes: int = 200000):
    """Find a cyclic 3-manifold violating the criterion whose stretch breaks.

    Scans even vertex counts upwards: completes {half-length orbit, one
    undersized cycle} to closed pseudomanifolds, keeps those that are
    combinatorial manifolds, and returns the first whose stretched complex
    fails the vertex-link test for some k, together with the reported
    singular vertex.
    """
    for n in range(10, max_n + 1, 2):
        candidates = all_cycles(n)
        short = short_cycle(n)
        undersized = [
            c for c in candidates if c != short and max(c.entries) < n // 2
        ]
        for seed in undersized:
            for extra in _complete_to_pseudomanifolds(
                n, [short, seed], candidates, max_nodes
            ):
                cc = CyclicComplex(n, (short, seed) + extra)
                if not cc.verify_manifold().is_manifold:
                    continue
                fam = ExpansionFamily.from_cyclic(cc)
                report = check_expandable(cc)
                if not report.violators:
                    continue
                for k in range(1, k_range + 1):
                    stretched = expand_family(fam, k, enforce_criterion=False)
                    mrep = stretched.verify_manifold()
                    if not mrep.is_manifold:
                        return ViolatingFamilyWitness(
                            cc,
                            report.violators,
                            k,
                            mrep.failing_vertex,
                            mrep.reason,
                        )
    return None
