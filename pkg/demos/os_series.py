"""Orlik-Solomon series from the lattice of flats.

The example matroid on seven points has a four-point line and three
three-point lines.  Its Whitney numbers give the series, and in rank 3
the series is fixed by the number of points and one extra count.
"""
from holokit.io import load_matroid
from holokit.lattice import flats_lattice, os_hilbert_series, rank3_d, rank3_series, region_count
from holokit.matroid import complete_graph, graphic_matroid

m = load_matroid("catalog:example7")
lat = flats_lattice(m)
print("flats per rank:", [len(g) for g in lat.by_rank])
print("OS series:     ", os_hilbert_series(m).text("z"))
print("rank-3 formula:", rank3_series(len(m.ground), rank3_d(m)).text("z"))

for n in (3, 4, 5):
    print(f"K{n} braid arrangement: {region_count(graphic_matroid(complete_graph(n)))} chambers")
