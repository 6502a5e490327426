"""
Generic class data for PSL(3,q) and PSU(3,q) versus brute force
===============================================================

For the three-dimensional linear and unitary quotients the centralizer
orders of all noncentral classes are known as polynomials in q.  This
script instantiates them at small q and then rebuilds the same groups
element by element to compare.

The comparison is also a cautionary tale: at q = 3 with epsilon = +1 the
generic table predicts split-torus classes that need three distinct
nonzero eigenvalues in GF(3), which does not have three nonzero elements
to give.  The predicted vertex simply has no elements behind it.
"""

from divgraphs import generic, graphs, matgroups

for q, eps in [(3, 1), (3, -1), (5, 1), (7, 1), (9, -1)]:
    data = generic.psl3_data(q, eps)
    shp = generic.psl3_shape(q, eps)
    print("q=%-2d eps=%+d  |G| = %-8d a = %d  shape %-10s isolated size %d"
          % (q, eps, data.order, data.a, graphs.shape_name(shp),
             generic.isolated_class_size(data.order, data.t_prime, 1)))

# Brute force both q = 3 groups and line the vertex sets up.
print()
for q, eps, fam in [(3, 1, "SL"), (3, -1, "SU")]:
    predicted = generic.psl3_divgraph(q, eps)
    spec = matgroups.GroupSpec(fam, 3, q, projective=True)
    observed = matgroups.generate(spec).profile().div_graph()
    print("%s: predicted %d vertices, observed %d" %
          (spec.describe(), len(predicted.vertices), len(observed.vertices)))
    missing = sorted(set(predicted.vertices) - set(observed.vertices))
    if missing:
        print("  predicted class sizes with no elements over GF(%d): %s" %
              (q, missing))
    else:
        print("  exact match, shape %s" %
              graphs.shape_name(graphs.shape(observed)))
