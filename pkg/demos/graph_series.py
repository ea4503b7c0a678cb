"""Graphic arrangements: the clique-count product formula and chordal towers.

For a graph G the triangles form the blocks.  The enveloping series of the
holonomy algebra is predicted from clique counts alone, and for complete
graphs this is the braid-arrangement product.
"""
from holokit.graphs import bowtie, complete_minus_edge, elimination_tower, has_k4, lfs_exponents, wheel
from holokit.holonomy import compare_series, graph_holonomy, kohno_series, lcs_series, lfs_series
from holokit.matroid import complete_graph

D = 5

print("complete graphs")
for n in (3, 4, 5):
    h = graph_holonomy(complete_graph(n))
    chk = compare_series(lcs_series(h, D), kohno_series(n, D))
    print(f"  K{n}: {chk.computed.text('t')}  {'ok' if chk.ok else 'MISMATCH'}")

print("other graphs")
for name, g in (("bowtie", bowtie()), ("W4", wheel(4)), ("K5-e", complete_minus_edge(5))):
    h = graph_holonomy(g)
    chk = compare_series(lcs_series(h, D), lfs_series(g, D))
    ex = ", ".join(f"e{j}={e}" for j, e in lfs_exponents(g))
    try:
        tower = elimination_tower(g)
    except Exception:
        tower = "not chordal"
    print(f"  {name}: {ex}; tower {tower}; K4 inside: {has_k4(g)}; "
          f"{'ok' if chk.ok else 'MISMATCH'}")
