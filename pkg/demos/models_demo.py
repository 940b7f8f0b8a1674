"""The three equivalent models for shape (3,1) on (5,3,2,1).

Single-entry shifted tableaux, subsets of the ambient shifted diagram, and
families of nonintersecting lattice paths are in canonical bijection; this
script lists all ten elements in each model and shows the correspondences
and the symmetric doubling.
"""

from lgrass import (enumerate_model, family_to_subset, subset_to_family,
                    subset_to_tableau, tableau_to_subset, unfold_symmetric)
from lgrass.render import ascii_family, ascii_shifted_tableau, ascii_subset

lam, mu = (3, 1), (5, 3, 2, 1)

tableaux = enumerate_model(lam, mu, "tableaux")
subsets = enumerate_model(lam, mu, "subsets")
families = enumerate_model(lam, mu, "families")
print(f"shape {lam} on {mu}: {len(tableaux)} tableaux, "
      f"{len(subsets)} subsets, {len(families)} path families")
print()

for i, (p, d, f) in enumerate(zip(tableaux, subsets, families)):
    print(f"=== element {i} ===")
    print(ascii_shifted_tableau(p))
    print("maps to the subset (## = member):")
    print(ascii_subset(d))
    print("whose complement decomposes into paths (digits = path index):")
    print(ascii_family(f))
    # the bijections really are mutually inverse
    assert subset_to_tableau(d, lam) == p
    assert tableau_to_subset(p, mu) == d
    assert subset_to_family(d) == f
    assert family_to_subset(f) == d
    print()

# Every shifted tableau unfolds to a symmetric filling of the doubled shape.
p = tableaux[0]
q = unfold_symmetric(p)
print("first tableau unfolded to the symmetric doubled shape", q.shape, ":")
for row in q.grid:
    print("  ", row)
