"""The three-parameter family: construction and exact homology.

M(p,q,r) glues a base of three full orbits to collections of solid tori on
2pq+r vertices.  Its first homology is predicted by a = gcd(p,r) and
b = gcd(q,r) alone; here we recompute everything with integer Smith normal
forms and compare.  Coprime triples give homology spheres, (2,q,2) gives
lens spaces, and r = 0 gives connected sums of S^2 x S^1.
"""

from cyclotri import (
    build_manifold,
    derive_params,
    expected_homology,
    expected_seifert,
    homology_groups,
)

print("member          n  facets  computed H_*              predicted")
for p, q, r in [(2, 3, 1), (2, 3, 2), (2, 3, 0), (2, 5, 5), (3, 4, 6), (3, 5, 10)]:
    cyclic = build_manifold(p, q, r)
    complex_ = cyclic.expand()
    computed = homology_groups(complex_)
    predicted = expected_homology(p, q, r)
    mark = "ok" if computed == predicted else "MISMATCH"
    print(
        f"M({p},{q},{r:>2})   {cyclic.n:>4}  {cyclic.facet_count():>5}   "
        f"{str(computed):<24}  {str(predicted):<20} {mark}"
    )

print("\ncycles of M(2,3,2) (a 14-vertex lens space L(3,1)):")
for cycle in build_manifold(2, 3, 2).cycles:
    print(f"   ({cycle})")

print("\nfibre data from the consistency equation q*r*b1 - p*r*b2 + p*q*b3 = a*b:")
for p, q, r in [(2, 3, 5), (3, 4, 1), (4, 5, 6)]:
    data = expected_seifert(p, q, r)
    fibres = ", ".join(f"({a},{b})x{m}" for a, b, m in data.fibres)
    print(f"   ({p},{q},{r}): base genus {data.base_genus}, fibres {fibres}, residual {data.residual}")

params = derive_params(3, 4, 6)
print(
    f"\nderived data for (3,4,6): m={params.m}, k={params.k}, "
    f"a={params.a}, b={params.b}, gcd ladders {params.euclid1} and {params.euclid2}"
)
