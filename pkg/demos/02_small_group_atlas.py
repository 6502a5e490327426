"""
A small atlas of class-size divisibility graphs
===============================================

Enumerate a handful of classical groups over tiny fields, compute their
conjugacy classes by brute force, and tabulate what the divisibility graph
looks like next to the prime graph.  The headline facts visible below:

* at most one connected component has two or more vertices, and
* the divisibility graph has exactly as many components as the prime graph.
"""

from divgraphs import graphs, matgroups, reports
from divgraphs.matgroups import GroupSpec

SPECS = [
    GroupSpec("SL", 2, 3),
    GroupSpec("SL", 2, 5, projective=True),
    GroupSpec("SL", 2, 7, projective=True),
    GroupSpec("SL", 2, 9, projective=True),
    GroupSpec("SL", 3, 3),
    GroupSpec("SU", 3, 3),
    GroupSpec("Sp", 4, 3, projective=True),
    GroupSpec("GO", 5, 3),
    GroupSpec("Omega", 4, 3, sign=-1),
]

last = None
for spec in SPECS:
    rep = reports.analyze(spec)
    comps = graphs.connected_components(rep.graph)
    nclasses = sum(r.mult for r in rep.profile.records) + rep.center_order
    print("%-12s order %-8d classes %-3d shape %-12s D-comps %d  prime-comps %d"
          % (spec.describe(), rep.order, nclasses,
             graphs.shape_name(graphs.shape(rep.graph)),
             len(comps), rep.prime_graph.component_count()))
    if rep.unipotent_vertices:
        print("             unipotent class sizes %s, involutions %s, together: %s"
              % (list(rep.unipotent_vertices), list(rep.involution_vertices),
                 "one component" if rep.containment_ok else "SPLIT"))
    if spec.family == "Sp":
        last = rep

# The genuinely big enumeration in the atlas: PSp(4,3) has 25920 elements
# and its graph still collapses to one fat component plus an isolated
# vertex coming from a torus of order 5.
print()
print(reports.report_text(last))
