"""The Roos configuration: an ideal that is one-dimensional from degree 3 on.

In degrees 2 and up the holonomy algebra maps onto the direct sum of the
local algebras, one per block.  The kernel I measures what the blocks do not
account for.  For the Roos configuration it is 0 in degree 2 and a single
dimension in every degree after that, so the algebra is not decomposable.
"""
from holokit import catalog
from holokit.holonomy import decomposability, graded_dims, holonomy_presentation, ideal_I_dims

D = 6

h = holonomy_presentation(catalog("roos"))
print("blocks:", " ".join("".join(b) for b in h.arrangement.blocks))
print("dims:  ", list(graded_dims(h, D)))
print("dim I: ", list(ideal_I_dims(h, D))[1:], "(degrees 2..6)")

rep = decomposability(h)
print("decomposable:", rep.decomposable)
for x, y, z, b in rep.witnesses[:3]:
    print(f"  [{x},[{y},{z}]] survives, block {''.join(b)}")
