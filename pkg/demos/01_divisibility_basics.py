"""
Divisibility graphs from scratch
================================

A divisibility graph takes a list of positive integers, keeps the distinct
values larger than 1 as vertices, and joins two vertices when one divides
the other.  For a finite group the interesting input is the list of
conjugacy class sizes.
"""

from divgraphs import graphs

# Start with the noncentral class sizes of the alternating group A5,
# i.e. PSL(2,5): three classes of involutions/3-cycles/5-cycles.
sizes = [15, 20, 12, 12]
g = graphs.divisibility_graph(sizes)
print("vertices:", g.vertices)
print("edges:   ", g.edges or "(none)")

# No divisibilities at all: three isolated vertices.
for comp in graphs.connected_components(g):
    print("component:", comp)
print("shape:", graphs.shape_name(graphs.shape(g)))

# The same construction via centralizer orders.  A class of size s has
# centralizer order |G|/s, so handing the centralizer orders and the group
# order over must give the identical graph.
cents = [60 // s for s in set(sizes)]
dual = graphs.from_centralizer_orders(cents, 60)
print("dual equals direct:", dual == g)

# A graph with actual edges: the noncentral class sizes of SL(2,3).
h = graphs.divisibility_graph([4, 4, 4, 4, 6])
print()
print("SL(2,3) vertices:", h.vertices, "edges:", h.edges)
print("shape:", graphs.shape_name(graphs.shape(h)))

# Graphviz export; isolated vertices get a box outline.
print()
print(graphs.to_dot(g, name="psl25", mark_isolated=True))
