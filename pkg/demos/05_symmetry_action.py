"""How the cyclic symmetry acts on first homology.

Every member of the family is fixed by the full vertex rotation, and for
p = 2, q prime, r = 2kq the first homology is free of rank q-1.  Expressing
the rotation in the basis of short triangle loops <v, v-1, v-2, v> yields an
integer matrix of multiplicative order exactly 2q -- the symmetry is visible
in the topology.  Translating any loop by pq never changes its class.
"""

from cyclotri import (
    build_manifold,
    h1_data,
    homology_groups,
    path_to_cycle,
    rotation_h1_action,
    shift_homology_check,
)

complex_ = build_manifold(2, 5, 0).expand()
print(f"M(2,5,0): H_* = {homology_groups(complex_)}")
print(f"H_1 generators found: {len(h1_data(complex_).kept)} free classes")

action, order = rotation_h1_action(5, 0)
print("\nrotation v -> v+1 on the loop basis a_1..a_4 of H_1(M(2,5,0)):")
for row in action:
    print("   ", row)
print(f"multiplicative order: {order} = 2q")

for q, k in [(3, 0), (3, 1), (5, 1)]:
    action, order = rotation_h1_action(q, k)
    print(f"q={q}, k={k} (n = {2 * q * (k + 2)}): order {order}")

print("\ntranslation by pq fixes every homology class:")
for p, q, r in [(2, 3, 6), (3, 4, 12), (2, 5, 5)]:
    print(f"   M({p},{q},{r}): {shift_homology_check(p, q, r)}")

c = build_manifold(2, 3, 6).expand()
loop = path_to_cycle(c, (2, 1, 0, 2))
shifted = path_to_cycle(c, tuple((v + 6) % 18 for v in (2, 1, 0, 2)))
print(f"\nexample in M(2,3,6): [<2,1,0,2>] = {loop.coordinates}, "
      f"its pq-translate = {shifted.coordinates}")
