"""Divisibility graphs on multisets of positive integers.

The divisibility graph of a multiset X of positive integers has one vertex
for each distinct value in X other than 1, and an undirected edge between
two vertices exactly when one divides the other.  For a finite group the
multiset of interest is the set of conjugacy class sizes; the same graph can
be built from centralizer orders, since a class size is the group order
divided by the centralizer order of a representative.

Graphs are small (tens of vertices), so everything here is plain Python on
sorted tuples.  All outputs are deterministic: vertices ascend, edge pairs
are (a, b) with a < b and ascend lexicographically.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class DivGraph:
    """An undirected graph on integer vertices, stored in canonical order."""

    vertices: tuple
    edges: tuple

    def has_edge(self, a, b):
        if a > b:
            a, b = b, a
        return (a, b) in self.edges

    def neighbors(self, v):
        out = [b for (a, b) in self.edges if a == v]
        out += [a for (a, b) in self.edges if b == v]
        return tuple(sorted(out))

    def isolated_vertices(self):
        seen = set()
        for a, b in self.edges:
            seen.add(a)
            seen.add(b)
        return tuple(v for v in self.vertices if v not in seen)


def divisibility_graph(values):
    """Build the divisibility graph of a multiset of integers >= 1.

    Duplicates collapse to one vertex and the value 1 is dropped.  An empty
    input gives the empty graph.
    """
    verts = set()
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError("values must be integers >= 1, got %r" % (v,))
        if v > 1:
            verts.add(v)
    verts = tuple(sorted(verts))
    edges = []
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if b % a == 0:
                edges.append((a, b))
    return DivGraph(verts, tuple(sorted(edges)))


def from_centralizer_orders(cent_orders, group_order):
    """Divisibility graph on class sizes, given centralizer orders.

    Each centralizer order must divide the group order; the class size is
    group_order // c.  Centralizer orders equal to the group order (central
    classes) map to the dropped vertex 1.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    sizes = []
    for c in cent_orders:
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ValueError("centralizer orders must be integers >= 1, got %r" % (c,))
        if group_order % c != 0:
            raise ValueError(
                "centralizer order %d does not divide group order %d" % (c, group_order))
        sizes.append(group_order // c)
    return divisibility_graph(sizes)


def connected_components(g):
    """Connected components as sorted lists, ordered by smallest vertex."""
    adj = {v: set() for v in g.vertices}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        stack = [v]
        comp = []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def shape(g):
    """Component shape descriptor: [(vertex_count, edge_count, is_complete), ...].

    Sorted descending by vertex count, then edge count.  A component is
    complete when e = v(v-1)/2.
    """
    comps = connected_components(g)
    out = []
    for comp in comps:
        cs = set(comp)
        e = sum(1 for (a, b) in g.edges if a in cs)
        v = len(comp)
        out.append((v, e, e == v * (v - 1) // 2))
    out.sort(key=lambda t: (-t[0], -t[1]))
    return out


def shape_name(shp):
    """Short human name for a shape, e.g. "3K1" or "K2+2K1".

    Complete components print as K<v>; incomplete ones as (<v>v,<e>e).
    """
    if not shp:
        return "empty"
    names = []
    for v, e, complete in shp:
        names.append("K%d" % v if complete else "(%dv,%de)" % (v, e))
    out = []
    i = 0
    while i < len(names):
        j = i
        while j < len(names) and names[j] == names[i]:
            j += 1
        count = j - i
        out.append(names[i] if count == 1 else "%d%s" % (count, names[i]))
        i = j
    return "+".join(out)


def to_dot(g, name="divisibility", mark_isolated=False):
    """Render as Graphviz dot.  Isolated vertices get shape=box when asked."""
    lines = ["graph %s {" % name]
    isolated = set(g.isolated_vertices()) if mark_isolated else set()
    for v in g.vertices:
        if v in isolated:
            lines.append('  "%d" [shape=box];' % v)
        else:
            lines.append('  "%d";' % v)
    for a, b in g.edges:
        lines.append('  "%d" -- "%d";' % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(g):
    """JSON-ready dict: vertices, edges, components, shape."""
    return {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges],
        "components": [list(c) for c in connected_components(g)],
        "shape": [{"vertices": v, "edges": e, "complete": c} for (v, e, c) in shape(g)],
        "shape_name": shape_name(shape(g)),
    }
