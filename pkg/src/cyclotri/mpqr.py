"""The three-parameter family M(p,q,r) of cyclic combinatorial 3-manifolds.

For coprime 2 <= p < q and r >= 0 the construction glues a base complex of
three full orbits to three collections of solid tori on n = 2pq + r vertices:

* the base ``B`` carries the circle-bundle structure,
* ``F1`` and ``F2`` come from subtractive Euclidean-algorithm runs on
  (kq, (p-k)q) and (mp, (q-m)p), where mp - kq = 1,
* ``F3`` is a tail segment of the cyclic 4-polytope boundary.

Everything here is derived and verified by exact integer computation:
predicted first homology (free rank and torsion from a = gcd(p,r),
b = gcd(q,r)), Seifert-style fibre data solving the consistency equation
q*r*b1 - p*r*b2 + p*q*b3 = a*b, explicit meridian curves on the boundary
tori, and the order-2q action of the vertex rotation on H_1 when p = 2 and
q is prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .diffcycles import CyclicComplex, canonicalize
from .homology import (
    HomologyGroups,
    are_homologous,
    chain_of_path,
    h1_data,
    invariant_factors_of_multiset,
    path_to_cycle,
    permute_chain,
    solve_integer_matrix,
)
from .simplicial import SimplicialComplex


def subtractive_euclid(x: int, y: int) -> list:
    """Argument pairs after each step of the subtractive gcd scheme.

    Starting from the sorted pair, each step replaces (a, b) by (a-b, b),
    swapping the arguments whenever the difference drops below b; the pair
    reached after every step is recorded, so the sequence ends at (g, g)
    for the gcd g.  Equal starting arguments take no steps at all and give
    the empty sequence.  Consecutive recorded pairs satisfy
    a_i + b_i = max(a_{i-1}, b_{i-1}), which is the property the fibre
    construction leans on.
    """
    a, b = (x, y) if x > y else (y, x)
    pairs = []
    while a != b:
        if a > b:
            a = a - b
        else:
            a, b = b - a, a
        pairs.append((a, b))
    return pairs


@dataclass(frozen=True)
class MpqrParams:
    """Derived data for one member of the family."""

    p: int
    q: int
    r: int
    m: int
    k: int
    a: int
    b: int
    euclid1: tuple
    euclid2: tuple
    euclid1_swapped: bool
    euclid2_swapped: bool

    @property
    def n(self) -> int:
        return 2 * self.p * self.q + self.r


def derive_params(p: int, q: int, r: int) -> MpqrParams:
    """Validate (p, q, r) and compute the multiplier pair and gcd ladders."""
    if not (2 <= p < q):
        raise ValueError(f"need 2 <= p < q, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    if r < 0:
        raise ValueError(f"need r >= 0, got r={r}")
    m = pow(p, -1, q)
    k = (m * p - 1) // q
    if not (1 <= m <= q - 1 and 1 <= k <= p - 1 and m * p - k * q == 1):
        raise AssertionError(f"multiplier normalisation failed for ({p},{q})")
    a = gcd(p, r) if r else p
    b = gcd(q, r) if r else q
    e1_swapped = k * q >= (p - k) * q
    e2_swapped = m * p >= (q - m) * p
    euclid1 = tuple(subtractive_euclid((p - k) * q, k * q))
    euclid2 = tuple(subtractive_euclid((q - m) * p, m * p))
    # the first ladder runs on two multiples of q and is empty exactly when
    # kq = (p-k)q, which forces p = 2; the second set never degenerates
    if euclid1 and euclid1[-1] != (q, q):
        raise AssertionError("gcd ladder did not terminate at q")
    if not euclid1 and p != 2:
        raise AssertionError("empty gcd ladder for p > 2")
    if not euclid2 or euclid2[-1] != (p, p):
        raise AssertionError("gcd ladder did not terminate at p")
    return MpqrParams(p, q, r, m, k, a, b, euclid1, euclid2, e1_swapped, e2_swapped)


def build_base(params: MpqrParams) -> CyclicComplex:
    """The base complex: three full orbits mixing kq, (q-m)p and pq+r."""
    p, q, r, m, k = params.p, params.q, params.r, params.m, params.k
    u, v, w = k * q, (q - m) * p, p * q + r
    cycles = (
        canonicalize((1, u, v, w)),
        canonicalize((1, u, w, v)),
        canonicalize((1, w, u, v)),
    )
    return CyclicComplex(params.n, cycles)


def build_fibre(params: MpqrParams, which: int) -> CyclicComplex:
    """One of the three solid-torus collections F1, F2, F3."""
    p, q, r = params.p, params.q, params.r
    two_pq = 2 * p * q
    if which == 1:
        cycles = [canonicalize((bi, ai, bi, two_pq - 2 * bi - ai + r)) for ai, bi in params.euclid1]
    elif which == 2:
        cycles = [canonicalize((di, ci, di, two_pq - 2 * di - ci + r)) for ci, di in params.euclid2]
    elif which == 3:
        if r == 0:
            cycles = [canonicalize((1, p * q - 1, 1, p * q - 1))]
        else:
            cycles = [
                canonicalize((1, p * q - 1 + i, 1, p * q - 1 + r - i))
                for i in range(r // 2 + 2)
            ]
    else:
        raise ValueError(f"which must be 1, 2 or 3, got {which}")
    return CyclicComplex(params.n, tuple(cycles))


@lru_cache(maxsize=None)
def build_manifold(p: int, q: int, r: int) -> CyclicComplex:
    """The closed manifold: union of the base and the three fibre parts."""
    params = derive_params(p, q, r)
    parts = [build_base(params)] + [build_fibre(params, i) for i in (1, 2, 3)]
    cycles = []
    for part in parts:
        cycles.extend(part.cycles)
    if len(set(cycles)) != len(cycles):
        raise AssertionError(f"orbit overlap in M({p},{q},{r})")
    return CyclicComplex(params.n, tuple(cycles))


@lru_cache(maxsize=64)
def manifold_complex(p: int, q: int, r: int) -> SimplicialComplex:
    return build_manifold(p, q, r).expand()


def expected_homology(p: int, q: int, r: int) -> HomologyGroups:
    """Predicted homology from a = gcd(p,r) and b = gcd(q,r).

    H_1 is free of rank (a-1)(b-1) plus (b-1) torsion factors p/a and (a-1)
    factors q/b; H_2 is free of rank (a-1)(b-1); H_0 and H_3 are Z.
    """
    params = derive_params(p, q, r)
    a, b = params.a, params.b
    free = (a - 1) * (b - 1)
    torsion = [p // a] * (b - 1) + [q // b] * (a - 1)
    return HomologyGroups(
        (1, free, free, 1),
        ((), invariant_factors_of_multiset(torsion), (), ()),
    )


@dataclass(frozen=True)
class SeifertData:
    """Fibre data normalised against the consistency equation.

    ``fibres`` lists (alpha, beta, multiplicity); the equation
    q*r*b1 - p*r*b2 + p*q*b3 = a*b pins the beta values modulo the moves
    that do not change the fibration, and ``residual`` reports how far the
    normalised solution is from satisfying it (always 0).
    For r = 0 the family degenerates to a connected sum of (p-1)(q-1)
    copies of S^2 x S^1 and no fibre data is produced.
    """

    p: int
    q: int
    r: int
    sfs: bool
    base_genus: int
    fibres: tuple
    connected_sum_copies: int

    @property
    def residual(self) -> int:
        if not self.sfs:
            return 0
        a = gcd(self.p, self.r)
        b = gcd(self.q, self.r)
        (_, b1, _), (_, b2, _), (_, b3, _) = self.fibres
        return (
            self.q * self.r * b1 - self.p * self.r * b2 + self.p * self.q * b3 - a * b
        )


def expected_seifert(p: int, q: int, r: int) -> SeifertData:
    """Solve and normalise the fibre invariants for one family member."""
    params = derive_params(p, q, r)
    if r == 0:
        return SeifertData(p, q, r, False, 0, (), (p - 1) * (q - 1))
    a, b = params.a, params.b
    # qr*b1 - pr*b2 + pq*b3 = ab; gcd(qr, pr) = r and gcd(r, pq) = ab
    u, v = _bezout(q, p)  # u*q + v*p = 1
    s, t = _bezout(r, p * q)  # s*r + t*pq = ab
    if s * r + t * p * q != a * b:
        raise AssertionError("fibre equation is unsolvable; gcd bookkeeping broke")
    b1, b2, b3 = s * u, -s * v, t
    # normalise: b1 into [0, p/a), b2 into [0, q/b), the rest flows into b3
    pa, qb = p // a, q // b
    shift1 = b1 // pa if pa > 1 else b1
    b1 -= shift1 * pa
    b3 += shift1 * (r // a)
    shift2 = b2 // qb if qb > 1 else b2
    b2 -= shift2 * qb
    b3 -= shift2 * (r // b)
    fibres = (
        (-(p // a), b1, b),
        (q // b, b2, a),
        (-(r // (a * b)), b3, 1),
    )
    data = SeifertData(p, q, r, True, (a - 1) * (b - 1) // 2, fibres, 0)
    if data.residual != 0:
        raise AssertionError(f"normalisation broke the consistency equation for ({p},{q},{r})")
    for alpha, beta, _ in fibres:
        if abs(alpha) >= 2 and gcd(alpha, beta) != 1:
            raise AssertionError(f"exceptional fibre ({alpha},{beta}) not coprime")
    return data


def _bezout(x: int, y: int):
    """(u, v) with u*x + v*y = gcd(x, y)."""
    old_r, rr = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while rr:
        qq = old_r // rr
        old_r, rr = rr, old_r - qq * rr
        old_u, u = u, old_u - qq * u
        old_v, v = v, old_v - qq * v
    return old_u, old_v


# -- meridian curves -----------------------------------------------------------


@dataclass(frozen=True)
class MeridianPath:
    """A verified meridian boundary on one solid-torus component.

    ``source`` records whether the closed-form path worked or a search on
    the boundary torus had to replace it: the closed form walks multiples
    of kq (resp. mp) and corrects by multiples of pq, which self-intersects
    modulo n on a handful of small members where those multiples wrap.
    """

    fibre: int
    component_index: int
    path: tuple
    source: str = "formula"


def meridian_vertex_paths(params: MpqrParams) -> list:
    """The raw meridian curves, one per torus component of F1, F2, F3."""
    p, q, r, m, k, n = params.p, params.q, params.r, params.m, params.k, params.n
    pq = p * q
    out = []
    # no F1 components exist for p = 2 (its gcd ladder is empty)
    for i in range(params.b if params.euclid1 else 0):
        path = [(i + j * k * q) % n for j in range(p + 1)]
        path += [(i + j * pq) % n for j in range(k - 1, 0, -1)]
        path.append(i)
        out.append((1, i, tuple(path)))
    for j in range(params.a):
        path = [(j + t * m * p) % n for t in range(q + 1)]
        path += [(j + s * pq) % n for s in range(m - 1, 0, -1)]
        path.append(j)
        out.append((2, j, tuple(path)))
    if r > 0:
        path = [0] + [(pq + t) % n for t in range(r + 1)] + [0]
        out.append((3, 0, tuple(path)))
    return out


def meridian_paths(params: MpqrParams) -> list:
    """Verify and return the meridian curves of all fibre components.

    Each curve must be closed and simple, run inside the boundary of its
    solid-torus component, bound in the component, and stay homologically
    non-trivial on the boundary torus.  Where the closed-form curve
    degenerates (its legs collide modulo n), a shortest verified curve on
    the boundary torus is returned instead.
    """
    out = []
    for fibre, index, path in meridian_vertex_paths(params):
        component = fibre_component(params, fibre, path[0])
        label = f"m_{fibre}^({index})"
        interior = path[:-1]
        source = "formula"
        if len(set(interior)) != len(interior):
            path = _search_meridian(component, label)
            source = "search"
        _verify_meridian(component, path, label)
        out.append(MeridianPath(fibre, index, path, source))
    return out


def _search_meridian(component: SimplicialComplex, label: str) -> tuple:
    """Shortest simple curve on the boundary torus that bounds inside.

    Iterative deepening over simple closed walks in the boundary
    1-skeleton; a simple essential curve on a torus is primitive, so the
    first curve that is null-homologous in the solid torus and essential
    on the torus is a genuine meridian boundary.
    """
    boundary = component.boundary_complex()
    adjacency: dict = {}
    for u, v in sorted(boundary.faces(1)):
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    vertices = sorted(adjacency)

    def closes_ok(cycle):
        inside = path_to_cycle(component, cycle)
        if any(c != 0 for c in inside.coordinates):
            return False
        on_torus = path_to_cycle(boundary, cycle)
        return any(c != 0 for c in on_torus.coordinates)

    for length in range(3, len(vertices) + 1):
        for base in vertices:
            stack = [(base,)]
            while stack:
                walk = stack.pop()
                if len(walk) == length:
                    if base in adjacency[walk[-1]] and walk[1] < walk[-1]:
                        cycle = walk + (base,)
                        if closes_ok(cycle):
                            return cycle
                    continue
                for nxt in adjacency[walk[-1]]:
                    if nxt not in walk and (nxt > base):
                        stack.append(walk + (nxt,))
    raise ValueError(f"{label}: no meridian curve found on the boundary torus")


def fibre_component(params: MpqrParams, which: int, vertex: int) -> SimplicialComplex:
    """The connected component of F_which containing the given vertex."""
    for comp in build_fibre(params, which).expand().connected_components():
        if vertex in comp.vertices:
            return comp
    raise ValueError(f"vertex {vertex} not in F{which}")


def _verify_meridian(component: SimplicialComplex, path, label: str):
    if path[0] != path[-1]:
        raise ValueError(f"{label}: path is not closed")
    interior = path[:-1]
    if len(set(interior)) != len(interior):
        raise ValueError(f"{label}: path is not simple")
    boundary = component.boundary_complex()
    bedges = boundary.faces(1)
    for u, v in zip(path, path[1:]):
        e = (min(u, v), max(u, v))
        if e not in bedges:
            raise ValueError(f"{label}: edge {e} is not on the component boundary")
    inside = path_to_cycle(component, path)
    if not all(c == 0 for c in inside.coordinates):
        raise ValueError(f"{label}: not null-homologous in its solid torus")
    on_torus = path_to_cycle(boundary, path)
    if all(c == 0 for c in on_torus.coordinates):
        raise ValueError(f"{label}: null-homologous on the boundary torus")


# -- homology checks across the shift -----------------------------------------


def h1_basis_paths(params: MpqrParams) -> list:
    """Generating cycles of H_1: short descending loops closed by one long edge.

    The loops <v, v-1, ..., v-p, v> for p <= v <= kq together with
    <v, v-1, ..., v-q, v> for q <= v <= (q-m)p generate the first homology;
    there are (p-1)(q-1) of them in total.
    """
    p, q, m, k = params.p, params.q, params.m, params.k
    paths = []
    for v in range(p, k * q + 1):
        paths.append(tuple([v - j for j in range(p + 1)] + [v]))
    for v in range(q, (q - m) * p + 1):
        paths.append(tuple([v - j for j in range(q + 1)] + [v]))
    return paths


def shift_homology_check(p: int, q: int, r: int) -> bool:
    """Every generating cycle is homologous to its translate by pq."""
    params = derive_params(p, q, r)
    complex_ = manifold_complex(p, q, r)
    n, pq = params.n, p * q
    for path in h1_basis_paths(params):
        original = path_to_cycle(complex_, path)
        shifted = path_to_cycle(complex_, tuple((v + pq) % n for v in path))
        if not are_homologous(original, shifted):
            return False
    return True


def rotation_h1_action(q: int, k: int):
    """Action of the vertex rotation on H_1 of M(2, q, 2kq), q an odd prime.

    H_1 is free of rank q-1 with basis the triangle loops
    a_{v-1} = <v, v-1, v-2, v> for 2 <= v <= q.  Returns the matrix of the
    rotation v -> v+1 in that basis together with its multiplicative order,
    which is exactly 2q.
    """
    params = derive_params(2, q, 2 * k * q)
    complex_ = manifold_complex(2, q, 2 * k * q)
    basis = h1_data(complex_)
    if basis.orders != (0,) * (q - 1):
        raise ValueError(f"H_1 of M(2,{q},{2 * k * q}) is not free of rank {q - 1}")
    n = params.n
    loops = [chain_of_path((v, v - 1, v - 2, v)) for v in range(2, q + 1)]
    coord_cols = [basis.class_coordinates(c) for c in loops]
    coord_matrix = [[coord_cols[j][i] for j in range(q - 1)] for i in range(q - 1)]
    shift = [(v + 1) % n for v in range(n)]
    image_cols = [basis.class_coordinates(permute_chain(c, shift)) for c in loops]
    image_matrix = [[image_cols[j][i] for j in range(q - 1)] for i in range(q - 1)]
    # express the images in the loop basis: coord_matrix * X = image_matrix
    action = solve_integer_matrix(coord_matrix, image_matrix)
    order = _matrix_order(action, 2 * q)
    if order != 2 * q:
        raise AssertionError(f"rotation action has order {order}, expected {2 * q}")
    return action, order


def _matrix_order(matrix, bound: int) -> int:
    n = len(matrix)
    identity = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    power = identity
    for exponent in range(1, bound + 1):
        power = [
            [sum(power[i][t] * matrix[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        if power == identity:
            return exponent
    raise AssertionError(f"matrix order exceeds {bound}")
