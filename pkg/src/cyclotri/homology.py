"""Integral simplicial homology and explicit first-homology coordinates.

Homology groups come from Smith normal forms of the integer boundary
matrices.  For degree one there is additional machinery: the kernel of the
vertex-edge boundary map has the fundamental cycles of a spanning forest as a
basis, in which the coordinates of any 1-cycle can be read off its non-tree
edges.  Diagonalising the triangle relations in that basis (tracking only row
operations, as an operation log) yields generators of H_1 together with the
maps needed to express arbitrary cycles, compare classes, and push classes
through simplicial automorphisms -- all in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .simplicial import SimplicialComplex
from .snf import (
    apply_ops,
    apply_ops_inverse,
    invariant_factors_of_multiset,
    smith_normal_form,
    snf_diagonal,
    snf_left_tracked,
)

__all__ = [
    "HomologyGroups",
    "CycleClass",
    "homology_groups",
    "betti_numbers_f2",
    "h1_data",
    "path_to_cycle",
    "are_homologous",
    "induced_h1_matrix",
    "smith_normal_form",
]


def boundary_entries(complex_: SimplicialComplex, k: int):
    """Sparse entries of the boundary map from k-faces to (k-1)-faces.

    Faces are indexed in sorted order; the sign of dropping the i-th vertex
    of a sorted tuple is (-1)^i, so edges are oriented from the smaller to
    the larger vertex.
    """
    low = {f: i for i, f in enumerate(sorted(complex_.faces(k - 1)))}
    for col, face in enumerate(sorted(complex_.faces(k))):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1 :]
            yield low[sub], col, (-1) ** i


@dataclass(frozen=True)
class HomologyGroups:
    """Betti numbers plus per-dimension torsion coefficients.

    Torsion coefficients are invariant factors in a divisibility chain,
    listed in ascending order.
    """

    betti: tuple
    torsion: tuple

    def __post_init__(self):
        object.__setattr__(self, "betti", tuple(self.betti))
        object.__setattr__(self, "torsion", tuple(tuple(t) for t in self.torsion))
        if len(self.betti) != len(self.torsion):
            raise ValueError("betti/torsion length mismatch")

    @property
    def dim(self) -> int:
        return len(self.betti) - 1

    def group_str(self, k: int) -> str:
        rank = self.betti[k]
        parts = []
        if rank == 1:
            parts.append("Z")
        elif rank > 1:
            parts.append(f"Z^{rank}")
        parts.extend(f"Z_{t}" for t in self.torsion[k])
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return "(" + ", ".join(self.group_str(k) for k in range(len(self.betti))) + ")"


def homology_groups(complex_: SimplicialComplex, reduced: bool = False) -> HomologyGroups:
    """Integral homology in every dimension of the complex."""
    d = complex_.dim
    if d < 0:
        raise ValueError("homology of the empty complex is not defined here")
    fvec = complex_.f_vector()
    ranks = [0] * (d + 2)
    torsion = [()] * (d + 1)
    for k in range(1, d + 1):
        nrows = fvec[k - 1]
        ncols = fvec[k]
        diag = snf_diagonal(boundary_entries(complex_, k), nrows, ncols)
        ranks[k] = sum(1 for x in diag if x)
        torsion[k - 1] = tuple(x for x in diag if x > 1)
    betti = [fvec[k] - ranks[k] - ranks[k + 1] for k in range(d + 1)]
    if reduced:
        betti[0] -= 1
    return HomologyGroups(tuple(betti), tuple(torsion))


# -- mod-2 Betti numbers (used by the Morse machinery) ------------------------


def _rank_f2(columns) -> int:
    """Rank over F_2 of columns given as integer bitmasks."""
    pivots: dict = {}
    rank = 0
    for col in columns:
        while col:
            low = col & -col
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def _boundary_columns_f2(complex_, k):
    low = {f: i for i, f in enumerate(sorted(complex_.faces(k - 1)))}
    for face in sorted(complex_.faces(k)):
        mask = 0
        for i in range(len(face)):
            mask |= 1 << low[face[:i] + face[i + 1 :]]
        yield mask


def betti_numbers_f2(complex_: SimplicialComplex, reduced: bool = False) -> tuple:
    """Betti numbers with F_2 coefficients, by bitset elimination."""
    d = complex_.dim
    if d < 0:
        return (1,) if reduced else ()
    fvec = complex_.f_vector()
    ranks = [0] * (d + 2)
    for k in range(1, d + 1):
        ranks[k] = _rank_f2(_boundary_columns_f2(complex_, k))
    betti = [fvec[k] - ranks[k] - ranks[k + 1] for k in range(d + 1)]
    if reduced:
        betti[0] -= 1
    return tuple(betti)


# -- H_1 coordinates ----------------------------------------------------------


class H1Data:
    """First-homology basis data for a fixed complex.

    Fixed at first request and cached, so every coordinate vector computed
    for the complex refers to one and the same basis.
    """

    def __init__(self, complex_: SimplicialComplex):
        self.complex = complex_
        edges = sorted(complex_.faces(1))
        adjacency: dict = {}
        for u, v in edges:
            adjacency.setdefault(u, []).append(v)
            adjacency.setdefault(v, []).append(u)
        self.parent: dict = {}
        self.depth: dict = {}
        tree = set()
        for root in complex_.vertices:
            if root in self.parent:
                continue
            self.parent[root] = None
            self.depth[root] = 0
            queue = [root]
            while queue:
                x = queue.pop()
                for y in sorted(adjacency.get(x, ())):
                    if y not in self.parent:
                        self.parent[y] = x
                        self.depth[y] = self.depth[x] + 1
                        tree.add((min(x, y), max(x, y)))
                        queue.append(y)
        self.nontree = [e for e in edges if e not in tree]
        self.edge_index = {e: i for i, e in enumerate(self.nontree)}
        k = len(self.nontree)
        entries = []
        for col, tri in enumerate(sorted(complex_.faces(2))):
            for i in range(3):
                e = tri[:i] + tri[i + 1 :]
                row = self.edge_index.get(e)
                if row is not None:
                    entries.append((row, col, (-1) ** i))
        result = snf_left_tracked(entries, k, len(complex_.faces(2)))
        self.ops = result.left_ops
        self.diag = result.diag
        self.kept = tuple(i for i in range(k) if self.diag[i] != 1)
        self.orders = tuple(self.diag[i] for i in self.kept)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.orders if d == 0)

    def kernel_coordinates(self, chain: dict) -> dict:
        """Coordinates of a 1-cycle in the fundamental-cycle basis."""
        boundary: dict = {}
        for (u, v), coef in chain.items():
            boundary[v] = boundary.get(v, 0) + coef
            boundary[u] = boundary.get(u, 0) - coef
        if any(boundary.values()):
            raise ValueError("chain is not a cycle")
        out = {}
        for e, coef in chain.items():
            idx = self.edge_index.get(e)
            if idx is not None and coef:
                out[idx] = coef
        return out

    def class_coordinates(self, chain: dict) -> tuple:
        """Coordinates of the homology class, one slot per generator.

        Free generators give plain integers; a generator of finite order d
        gives a residue in [0, d).
        """
        y = apply_ops(self.ops, self.kernel_coordinates(chain))
        out = []
        for i, d in zip(self.kept, self.orders):
            v = y.get(i, 0)
            out.append(v % d if d else v)
        return tuple(out)

    def _tree_path_chain(self, start: int, end: int) -> dict:
        """Edge chain of the tree path from start to end."""
        chain: dict = {}

        def step(chain, x, y):
            e = (min(x, y), max(x, y))
            chain[e] = chain.get(e, 0) + (1 if x < y else -1)

        a, b = start, end
        rising = []
        while self.depth[a] > self.depth[b]:
            rising.append((a, self.parent[a]))
            a = self.parent[a]
        falling = []
        while self.depth[b] > self.depth[a]:
            falling.append((self.parent[b], b))
            b = self.parent[b]
        while a != b:
            rising.append((a, self.parent[a]))
            falling.append((self.parent[b], b))
            a, b = self.parent[a], self.parent[b]
        for x, y in rising:
            step(chain, x, y)
        for x, y in reversed(falling):
            step(chain, x, y)
        return chain

    def fundamental_cycle(self, index: int) -> dict:
        u, v = self.nontree[index]
        chain = self._tree_path_chain(v, u)
        chain[(u, v)] = chain.get((u, v), 0) + 1
        return {e: c for e, c in chain.items() if c}

    def generator_chain(self, slot: int) -> dict:
        """An explicit edge cycle representing the slot-th generator."""
        x = apply_ops_inverse(self.ops, {self.kept[slot]: 1})
        chain: dict = {}
        for idx, coef in x.items():
            for e, c in self.fundamental_cycle(idx).items():
                new = chain.get(e, 0) + coef * c
                if new:
                    chain[e] = new
                else:
                    chain.pop(e, None)
        return chain


@lru_cache(maxsize=128)
def h1_data(complex_: SimplicialComplex) -> H1Data:
    return H1Data(complex_)


@dataclass(frozen=True)
class CycleClass:
    """A 1-cycle with its coordinates in the ambient complex's H_1 basis."""

    ambient: SimplicialComplex
    chain: tuple
    coordinates: tuple

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coordinates)


def chain_of_path(path) -> dict:
    """Oriented edge chain of a closed vertex path."""
    path = list(path)
    if len(path) < 2 or path[0] != path[-1]:
        raise ValueError("path must be closed (first vertex = last vertex)")
    chain: dict = {}
    for u, v in zip(path, path[1:]):
        if u == v:
            raise ValueError(f"repeated consecutive vertex {u}")
        e = (min(u, v), max(u, v))
        chain[e] = chain.get(e, 0) + (1 if u < v else -1)
    return {e: c for e, c in chain.items() if c}


def path_to_cycle(complex_: SimplicialComplex, path) -> CycleClass:
    """Turn a closed vertex path into a homology class of the complex."""
    edges = complex_.faces(1)
    for u, v in zip(path, path[1:]):
        e = (min(u, v), max(u, v))
        if e not in edges:
            raise ValueError(f"missing edge: ({u}, {v})")
    chain = chain_of_path(path)
    coords = h1_data(complex_).class_coordinates(chain)
    return CycleClass(complex_, tuple(sorted(chain.items())), coords)



def are_homologous(x: CycleClass, y: CycleClass) -> bool:
    if x.ambient != y.ambient:
        raise ValueError("classes live in different complexes")
    return x.coordinates == y.coordinates


def permute_chain(chain: dict, perm) -> dict:
    out: dict = {}
    for (u, v), coef in chain.items():
        pu, pv = perm[u], perm[v]
        if pu < pv:
            e, s = (pu, pv), 1
        else:
            e, s = (pv, pu), -1
        new = out.get(e, 0) + s * coef
        if new:
            out[e] = new
        else:
            out.pop(e, None)
    return out


def is_automorphism(complex_: SimplicialComplex, perm) -> bool:
    mapped = {tuple(sorted(perm[v] for v in f)) for f in complex_.facets}
    return mapped == set(complex_.facets)


def induced_h1_matrix(complex_: SimplicialComplex, perm) -> list:
    """Matrix of the action of a simplicial automorphism on H_1.

    Column j holds the coordinates of the image of the j-th generator;
    rows belonging to finite-order generators are residues.  For free H_1
    the result is an integer matrix of determinant +-1.
    """
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("not a permutation of the vertex ids")
    if not is_automorphism(complex_, perm):
        raise ValueError("permutation is not a simplicial automorphism")
    basis = h1_data(complex_)
    cols = []
    for slot in range(len(basis.kept)):
        image = permute_chain(basis.generator_chain(slot), perm)
        cols.append(basis.class_coordinates(image))
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(basis.kept))]


def solve_integer_matrix(a, b) -> list:
    """Solve a X = b for integer X, where a is square and unimodular-ish.

    Gaussian elimination over the rationals with an integrality check; used
    to express homology classes in a caller-chosen basis.
    """
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(x) for x in brow] for row, brow in zip(a, b)]
    width = len(aug[0])
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular coefficient matrix")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        row += 1
    out = [[aug[i][n + j] for j in range(width - n)] for i in range(n)]
    for r in out:
        for x in r:
            if x.denominator != 1:
                raise ValueError("solution is not integral")
    return [[int(x) for x in r] for r in out]
