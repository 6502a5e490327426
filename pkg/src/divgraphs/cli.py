"""Command line front end.

Subcommands: divgraph (graph from explicit values), analyze (full group
report), unipotent (Jordan types, exponents, bound and oracle checks),
psl3 (generic three-dimensional linear/unitary data), oracle-centralizer
(commutant-based centralizer count).

Exit codes: 0 ok, 2 usage or bad input, 3 resource cap exceeded,
4 verification failure.  JSON output is the machine interface; the printed
text renders the same data.
"""

import argparse
import json
import sys

from . import generic, graphs, jordan, matgroups, reports
from .errors import CapExceeded, VerificationError
from .gf import split_prime_power


def _write_json(path, payload):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_dot(path, graph, name):
    text = graphs.to_dot(graph, name=name, mark_isolated=True)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _parse_values(raw):
    out = []
    for piece in raw.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            out.append(int(piece))
        except ValueError:
            raise ValueError("not an integer: %r" % piece)
    if not out:
        raise ValueError("no values given")
    return out


def _spec_from_args(args):
    sign = getattr(args, "sign", None)
    return matgroups.GroupSpec(args.family, args.n, args.q, sign=sign,
                               projective=getattr(args, "projective", False))


def cmd_divgraph(args):
    values = _parse_values(args.values)
    g = graphs.divisibility_graph(values)
    comps = graphs.connected_components(g)
    print("vertices:", " ".join(str(v) for v in g.vertices) or "(none)")
    if g.edges:
        print("edges:", " ".join("%d|%d" % e for e in g.edges))
    else:
        print("edges: none")
    for c in comps:
        print("component:", " ".join(str(v) for v in c))
    print("shape:", graphs.shape_name(graphs.shape(g)))
    if args.json:
        _write_json(args.json, graphs.graph_json(g))
    if args.dot:
        _write_dot(args.dot, g, "divgraph")
    return 0


def cmd_analyze(args):
    spec = _spec_from_args(args)
    rep = reports.analyze(spec, cap=args.max_order, commuting=args.commuting,
                          max_n=args.max_n, max_q=args.max_q)
    print(reports.report_text(rep))
    if args.json:
        _write_json(args.json, reports.report_json(rep))
    if args.dot:
        _write_dot(args.dot, rep.graph, spec.describe().replace("(", "_")
                   .replace(")", "").replace(",", "_").replace("+", "p")
                   .replace("-", "m"))
    if rep.violations:
        for v in rep.violations:
            print("verification failure: %s" % v, file=sys.stderr)
        return 4
    return 0


def cmd_unipotent(args):
    fam, n = args.family, args.n
    rank = jordan.lie_rank(fam, n)
    types = jordan.enumerate_types(fam, n)
    payload = {"family": fam, "n": n, "rank": rank, "types": [], "bound_ok": None}
    print("family %s  n %d  rank %d  %d types" % (fam, n, rank, len(types)))
    for jt in types:
        a = jordan.q_exponent(jt)
        reg = jt == jordan.regular_type(fam, n)
        payload["types"].append({"parts": [list(p) for p in jt.parts],
                                 "a": a, "regular": reg})
        print("  %-24s a = %-3d%s" % (jordan.type_label(jt), a,
                                      "  regular" if reg else ""))
    status = 0
    if args.check_bound:
        rep = jordan.verify_unipotent_bound(fam, n)
        payload["bound_ok"] = rep.ok
        print("bound a >= rank with equality only at the regular type:",
              "pass" if rep.ok else "FAIL")
        if not rep.ok:
            print("  witnesses:", rep.witnesses, file=sys.stderr)
            status = 4
    if args.oracle:
        if args.q is None:
            raise ValueError("--oracle needs --q")
        results, ok = _oracle_sweep(fam, n, args.q, args.sign,
                                    args.max_order, args.max_oracle,
                                    args.max_n, args.max_q)
        payload["oracle"] = results
        for row in results:
            print("  %-24s classes %d  q-part check %s"
                  % (row["label"], row["classes"], "ok" if row["ok"] else "FAIL"))
        if not ok:
            status = 4
    if args.json:
        _write_json(args.json, payload)
    return status


def _oracle_group(fam, n, q, sign):
    if fam == "GL":
        return matgroups.GroupSpec("GL", n, q)
    if fam == "Sp":
        return matgroups.GroupSpec("Sp", n, q)
    return matgroups.GroupSpec("GO", n, q, sign=sign)


def _oracle_sweep(fam, n, q, sign, max_order, max_oracle, max_n, max_q):
    """Check q-part of the oracle centralizer against q^a for every type."""
    spec = _oracle_group(fam, n, q, sign)
    p = split_prime_power(q)[0]
    table = matgroups.generate(spec, cap=max_order, max_n=max_n, max_q=max_q)
    by_type = {}
    for idx, jt in matgroups.unipotent_class_types(table):
        by_type.setdefault(jt.parts, []).append(idx)
    results, all_ok = [], True
    for jt in jordan.enumerate_types(fam, n):
        a = jordan.q_exponent(jt)
        want = q ** a
        if jt.parts == ((1, n),):
            cents = [matgroups.commutant_centralizer_order(
                matgroups.jordan_block_matrix(n, (1,) * n), spec,
                max_algebra=max_oracle)]
            count = 1
        else:
            idxs = by_type.get(jt.parts, [])
            cents = [matgroups.commutant_centralizer_order(
                table.matrix_at(i), spec, max_algebra=max_oracle) for i in idxs]
            count = len(idxs)
        ok = count > 0 and all(_q_part(c, p) == want for c in cents)
        results.append({"label": jordan.type_label(jt), "parts":
                        [list(pr) for pr in jt.parts], "a": a,
                        "classes": count, "ok": ok})
        all_ok = all_ok and ok
    return results, all_ok


def _q_part(value, p):
    part = 1
    while value % p == 0:
        value //= p
        part *= p
    return part


def cmd_psl3(args):
    eps = args.epsilon
    data = generic.psl3_data(args.q, eps)
    dg = generic.psl3_divgraph(args.q, eps)
    shp = generic.psl3_shape(args.q, eps)
    payload = generic.psl3_json(args.q, eps)
    print("q %d  epsilon %+d  r %d  s %d  t %d  a %d  r' %d  t' %d"
          % (data.q, data.epsilon, data.r, data.s, data.t, data.a,
             data.r_prime, data.t_prime))
    print("group order", data.order)
    print("centralizer orders:", " ".join(str(c) for c in
                                          sorted(data.distinct_cent_orders())))
    print("class sizes:", " ".join(str(s) for s in
                                   sorted(data.distinct_class_sizes())))
    print("predicted shape: %s with isolated class size %d"
          % (graphs.shape_name(shp), data.order // data.t_prime))
    status = 0
    if args.compare_bruteforce:
        fam = "SL" if eps == 1 else "SU"
        spec = matgroups.GroupSpec(fam, 3, args.q, projective=True)
        table = matgroups.generate(spec, cap=args.max_order,
                                   max_n=args.max_n, max_q=args.max_q)
        observed = table.profile().div_graph()
        match = observed.vertices == dg.vertices and observed.edges == dg.edges
        payload["bruteforce"] = {
            "group": spec.describe(),
            "observed_sizes": list(observed.vertices),
            "observed_shape": graphs.shape_name(graphs.shape(observed)),
            "agreement": match,
        }
        print("brute force %s: observed shape %s  agreement %s"
              % (spec.describe(), payload["bruteforce"]["observed_shape"], match))
        if not match:
            missing = sorted(set(dg.vertices) - set(observed.vertices))
            extra = sorted(set(observed.vertices) - set(dg.vertices))
            if missing:
                print("  predicted sizes with no class:", missing)
            if extra:
                print("  observed sizes not predicted:", extra)
    if args.json:
        _write_json(args.json, payload)
    if args.dot:
        _write_dot(args.dot, dg, "psl3_q%d_e%s" % (args.q, "p" if eps == 1 else "m"))
    return status


def cmd_oracle_centralizer(args):
    parts = tuple(sorted(_parse_values(args.jordan)))
    spec = _spec_from_args(args)
    fam_key = matgroups.family_key(spec.family)
    jt = jordan.from_partition(fam_key, spec.n, parts)
    a = jordan.q_exponent(jt)
    if spec.family in ("GL", "SL"):
        u = matgroups.jordan_block_matrix(spec.n, parts)
    else:
        table = matgroups.generate(spec, cap=args.max_order,
                                   max_n=args.max_n, max_q=args.max_q)
        u = None
        for idx, found in matgroups.unipotent_class_types(table):
            if found.parts == jt.parts:
                u = table.matrix_at(idx)
                break
        if u is None and parts == tuple([1] * spec.n):
            u = matgroups.jordan_block_matrix(spec.n, parts)
        if u is None:
            raise ValueError("no class of type %s in %s"
                             % (jordan.type_label(jt), spec.describe()))
    cent = matgroups.commutant_centralizer_order(u, spec,
                                                 max_algebra=args.max_oracle)
    p = split_prime_power(spec.q)[0]
    qpart = _q_part(cent, p)
    match = qpart == spec.q ** a
    payload = {"group": spec.describe(), "jordan": [list(pr) for pr in jt.parts],
               "centralizer_order": cent, "q_part": qpart,
               "q_exponent": a, "predicted_q_part": spec.q ** a, "match": match}
    print("group %s  type %s" % (spec.describe(), jordan.type_label(jt)))
    print("centralizer order %d  q-part %d  predicted q^%d = %d  match %s"
          % (cent, qpart, a, spec.q ** a, match))
    if args.json:
        _write_json(args.json, payload)
    return 0 if match else 4


def _add_caps(p, oracle=False):
    p.add_argument("--max-order", type=int,
                   default=matgroups.DEFAULT_GENERATE_CAP,
                   help="largest group enumeration allowed")
    p.add_argument("--max-n", type=int, default=matgroups.DEFAULT_MAX_N,
                   help="dimension guardrail")
    p.add_argument("--max-q", type=int, default=matgroups.DEFAULT_MAX_Q,
                   help="field size guardrail")
    if oracle:
        p.add_argument("--max-oracle", type=int,
                       default=matgroups.DEFAULT_ORACLE_CAP,
                       help="largest commutant enumeration allowed")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="divgraphs",
        description="divisibility graphs of small classical groups")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divgraph", help="graph from explicit class sizes")
    p.add_argument("--values", required=True,
                   help="comma separated positive integers")
    p.add_argument("--json")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_divgraph)

    p = sub.add_parser("analyze", help="full report for one group")
    p.add_argument("--family", required=True, choices=matgroups.FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--sign", type=int, choices=(1, -1))
    p.add_argument("--projective", action="store_true")
    p.add_argument("--commuting", action="store_true",
                   help="also compute commuting graph components")
    p.add_argument("--json")
    p.add_argument("--dot")
    _add_caps(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("unipotent", help="Jordan types and exponents")
    p.add_argument("--family", required=True, choices=jordan.FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--check-bound", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check q-parts against the commutant oracle")
    p.add_argument("--q", type=int)
    p.add_argument("--sign", type=int, choices=(1, -1))
    p.add_argument("--json")
    _add_caps(p, oracle=True)
    p.set_defaults(func=cmd_unipotent)

    p = sub.add_parser("psl3", help="generic PSL3/PSU3 data")
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--epsilon", required=True, type=int, choices=(1, -1))
    p.add_argument("--compare-bruteforce", action="store_true")
    p.add_argument("--json")
    p.add_argument("--dot")
    _add_caps(p)
    p.set_defaults(func=cmd_psl3)

    p = sub.add_parser("oracle-centralizer",
                       help="centralizer order from the commutant")
    p.add_argument("--family", required=True, choices=matgroups.FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--sign", type=int, choices=(1, -1))
    p.add_argument("--jordan", required=True,
                   help="comma separated block sizes, e.g. 1,2")
    p.add_argument("--json")
    _add_caps(p, oracle=True)
    p.set_defaults(func=cmd_oracle_centralizer)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as e:
        print("cap exceeded: %s" % e, file=sys.stderr)
        return 3
    except VerificationError as e:
        print("verification failure: %s" % e, file=sys.stderr)
        return 4
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
