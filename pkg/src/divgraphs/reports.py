"""Analysis reports: everything the divisibility graph of one group says.

analyze() enumerates a group, profiles its classes, builds the divisibility
graph and the prime graph, and evaluates the structural claims that hold for
classical groups of rank >= 2: at most one multi-vertex component, unipotent
and involution class vertices inside that component, and component count
equal to the prime graph's.  Out-of-scope groups (rank < 2, or 4-dimensional
orthogonal groups, which split as central products) get the same report with
in_theorem_scope = False and never produce violations.

The report object is the single source of truth: JSON and text renderings
are both derived from it.
"""

from dataclasses import dataclass

from . import generic, graphs, matgroups


def in_theorem_scope(spec):
    """Whether the one-main-component statement is asserted for this group.

    Linear and unitary groups need n >= 3, symplectic n >= 4, odd orthogonal
    n >= 5 and even orthogonal n >= 6 (rank >= 2; the 4-dimensional even case
    is a central product of two rank-1 groups and is excluded).
    """
    fam, n = spec.family, spec.n
    if fam in ("GL", "SL", "GU", "SU"):
        return n >= 3
    if fam == "Sp":
        return n >= 4
    if n % 2 == 1:
        return n >= 5
    return n >= 6


@dataclass(frozen=True)
class AnalysisReport:
    spec: object
    order: int
    center_order: int
    profile: object
    graph: object
    theorem_main_ok: bool
    offending_components: tuple
    unipotent_vertices: tuple
    involution_vertices: tuple
    containment_ok: bool
    prime_graph: object
    component_count_match: bool
    commuting: object
    generic_comparison: dict
    in_theorem_scope: bool
    violations: tuple


def _containment(comps, special):
    """True when all special vertices share one component."""
    if not special:
        return True
    homes = []
    for v in special:
        for c in comps:
            if v in c:
                homes.append(id(c))
                break
    return len(set(homes)) == 1


def _generic_block(spec, graph):
    eps = 1 if spec.family == "SL" else -1
    try:
        data = generic.psl3_data(spec.q, eps)
    except ValueError:
        return None
    predicted = generic.psl3_divgraph(spec.q, eps)
    observed_sizes = set(graph.vertices)
    predicted_sizes = set(predicted.vertices)
    match = (graph.vertices == predicted.vertices and graph.edges == predicted.edges)
    return {
        "epsilon": eps,
        "a": data.a,
        "predicted_sizes": sorted(predicted_sizes),
        "observed_sizes": sorted(observed_sizes),
        "predicted_shape": graphs.shape_name(graphs.shape(predicted)),
        "observed_shape": graphs.shape_name(graphs.shape(graph)),
        "missing_sizes": sorted(predicted_sizes - observed_sizes),
        "extra_sizes": sorted(observed_sizes - predicted_sizes),
        "match": match,
    }


def analyze(spec, cap=matgroups.DEFAULT_GENERATE_CAP, commuting=False,
            max_n=matgroups.DEFAULT_MAX_N, max_q=matgroups.DEFAULT_MAX_Q):
    g = matgroups.generate(spec, cap=cap, max_n=max_n, max_q=max_q)
    profile = g.profile()
    dg = profile.div_graph()
    comps = graphs.connected_components(dg)
    multi = [c for c in comps if len(c) >= 2]
    theorem_main_ok = len(multi) <= 1
    offenders = tuple(tuple(c) for c in multi[:2]) if not theorem_main_ok else ()
    unip = tuple(sorted({r.size for r in profile.reps if r.unipotent}))
    invol = tuple(sorted({r.size for r in profile.reps if r.order_mod_center == 2}))
    containment_ok = _containment(comps, sorted(set(unip) | set(invol)))
    pg = matgroups.prime_graph(g)
    count_match = len(comps) == pg.component_count()
    comm = matgroups.commuting_components(g) if commuting else None
    gen_block = None
    if spec.family in ("SL", "SU") and spec.n == 3:
        if spec.projective or generic.center_order(spec.family, 3, spec.q) == 1:
            gen_block = _generic_block(spec, dg)
    scope = in_theorem_scope(spec)
    violations = []
    if scope:
        if not theorem_main_ok:
            violations.append(
                "more than one multi-vertex component: %s and %s"
                % (list(offenders[0]), list(offenders[1])))
        if not containment_ok:
            violations.append(
                "unipotent/involution vertices split across components")
        if not count_match:
            violations.append(
                "divisibility components (%d) != prime graph components (%d)"
                % (len(comps), pg.component_count()))
    return AnalysisReport(
        spec=spec, order=g.order, center_order=profile.center_order,
        profile=profile, graph=dg, theorem_main_ok=theorem_main_ok,
        offending_components=offenders, unipotent_vertices=unip,
        involution_vertices=invol, containment_ok=containment_ok,
        prime_graph=pg, component_count_match=count_match, commuting=comm,
        generic_comparison=gen_block, in_theorem_scope=scope,
        violations=tuple(violations))


def report_json(rep):
    spec = rep.spec
    out = {
        "spec": {"family": spec.family, "n": spec.n, "q": spec.q,
                 "sign": spec.sign, "projective": spec.projective,
                 "name": spec.describe()},
        "order": rep.order,
        "center": rep.center_order,
        "classes": rep.profile.to_json_dict()["classes"],
        "divisibility_graph": graphs.graph_json(rep.graph),
        "theorem_main_ok": rep.theorem_main_ok,
        "offending_components": [list(c) for c in rep.offending_components] or None,
        "unipotent_vertices": list(rep.unipotent_vertices),
        "involution_vertices": list(rep.involution_vertices),
        "containment_ok": rep.containment_ok,
        "prime_graph": rep.prime_graph.to_json_dict(),
        "component_count_match": rep.component_count_match,
        "commuting": None,
        "generic_comparison": rep.generic_comparison,
        "in_theorem_scope": rep.in_theorem_scope,
        "violations": list(rep.violations),
    }
    if rep.commuting is not None:
        out["commuting"] = {"component_count": rep.commuting.component_count,
                            "orbit_class_count": rep.commuting.orbit_class_count}
    return out


def report_text(rep):
    j = report_json(rep)
    lines = []
    add = lines.append
    add("group %s  order %d  center %d" % (j["spec"]["name"], j["order"], j["center"]))
    add("noncentral classes: %d records" % len(j["classes"]))
    for c in j["classes"]:
        add("  size %7d  cent %7d  rep order %3d%s  x%d"
            % (c["size"], c["cent"], c["rep_order"],
               "  unipotent" if c["unipotent"] else "", c["mult"]))
    dg = j["divisibility_graph"]
    add("divisibility graph: %d vertices, %d edges, shape %s"
        % (len(dg["vertices"]), len(dg["edges"]), dg["shape_name"]))
    for comp in dg["components"]:
        add("  component: %s" % " ".join(str(v) for v in comp))
    add("theorem_main_ok: %s" % j["theorem_main_ok"])
    if j["offending_components"]:
        add("  offending components: %s | %s"
            % (j["offending_components"][0], j["offending_components"][1]))
    add("unipotent vertices: %s" % (list(j["unipotent_vertices"]) or "none"))
    add("involution vertices: %s" % (list(j["involution_vertices"]) or "none"))
    add("containment_ok: %s" % j["containment_ok"])
    pg = j["prime_graph"]
    add("prime graph: primes %s  edges %s  components %d"
        % (pg["primes"], pg["edges"] or "none", len(pg["components"])))
    add("component_count_match: %s" % j["component_count_match"])
    if j["commuting"] is not None:
        add("commuting graph: %d components, %d orbit classes"
            % (j["commuting"]["component_count"],
               j["commuting"]["orbit_class_count"]))
    if j["generic_comparison"] is not None:
        gc = j["generic_comparison"]
        add("generic comparison (epsilon %+d): predicted %s observed %s -> match %s"
            % (gc["epsilon"], gc["predicted_shape"], gc["observed_shape"], gc["match"]))
        if gc["missing_sizes"]:
            add("  predicted sizes with no class: %s" % gc["missing_sizes"])
        if gc["extra_sizes"]:
            add("  observed sizes not predicted: %s" % gc["extra_sizes"])
    add("in_theorem_scope: %s" % j["in_theorem_scope"])
    if j["violations"]:
        for v in j["violations"]:
            add("VIOLATION: %s" % v)
    return "\n".join(lines)
