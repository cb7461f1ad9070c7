"""Stretching one symmetric manifold into an infinite family.

A cyclic manifold on an even vertex count containing the half-length orbit
(1 : n/2-1 : 1 : n/2-1) can be stretched vertex by vertex exactly when every
other cycle carries an entry of at least n/2.  Stretching M(2,3,2) walks up
the r-axis of the three-parameter family; shrinking recovers M(2,3,1).  A
violating complex found by exhaustive search breaks immediately: its first
stretch already has a pinched vertex link.
"""

from cyclotri import (
    ExpansionFamily,
    build_manifold,
    check_expandable,
    contract_once,
    expand_family,
    search_violating_family,
)

base = build_manifold(2, 3, 2)
report = check_expandable(base)
print(f"M(2,3,2) = {base}")
print(f"expandable: {report.expandable} (violators: {list(map(str, report.violators))})")

family = ExpansionFamily.from_cyclic(base)
print("\nstretching reproduces the family members exactly:")
for k in range(0, 5):
    stretched = expand_family(family, k)
    same = stretched == build_manifold(2, 3, 2 + k)
    manifold = stretched.verify_manifold().is_manifold
    print(f"   k={k}: {stretched.n} vertices, equals M(2,3,{2 + k}): {same}, manifold: {manifold}")

contracted, rep = contract_once(family)
print(f"\none-step contraction gives {contracted}")
print(f"equal to M(2,3,1): {contracted == build_manifold(2, 3, 1)}, manifold: {rep.is_manifold}")

print("\nsearching small vertex counts for a criterion violator that breaks...")
witness = search_violating_family(max_n=12)
print(f"base: {witness.base}")
print(f"violating cycles: {[str(v) for v in witness.violators]}")
print(
    f"stretch k={witness.k_failing} fails the link test at vertex "
    f"{witness.singular_vertex}: {witness.reason}"
)
