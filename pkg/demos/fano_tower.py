"""Fano versus non-Fano: one missing line changes the tower.

The Fano plane's holonomy algebra has the graded dimensions of a tower of
free Lie algebras of ranks 4, 2 and 1.  Dropping one line gives the non-Fano
configuration, and the prediction then fails already in degree 2.
"""
from holokit import catalog
from holokit.holonomy import graded_dims, holonomy_presentation, lcs_series, verify_tower

D = 5

for name in ("fano", "nonfano"):
    h = holonomy_presentation(catalog(name))
    dims = graded_dims(h, D)
    print(f"{name}: {len(h.arrangement.blocks)} blocks on {h.n} points")
    print(f"  dims      {list(dims)}")
    print(f"  series    {lcs_series(h, D).text('t')}")
    chk = verify_tower(h, [4, 2, 1], D)
    if chk.ok:
        print("  tower 4,2,1: matches")
    else:
        print(f"  tower 4,2,1: predicts {chk.predicted.text('t')}")
        print(f"  first difference in degree {chk.first_mismatch}")
