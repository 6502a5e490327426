"""Closed-form data for the classical groups as polynomials in q.

Everything here is evaluated at a concrete odd prime power q; no symbolic
algebra.  Covers the standard order formulas, ambient center orders, the
rank-2 linear/unitary quotient family PSL(3,q) / PSU(3,q) whose class data
has a uniform description in q, fundamental-group orders per Dynkin type,
the good-prime predicate, and the predicted class size of an isolated
vertex coming from a self-centralizing torus.
"""

from dataclasses import dataclass
from math import gcd, prod

from . import graphs
from .gf import split_prime_power


def check_odd_prime_power(q):
    pf = split_prime_power(q) if isinstance(q, int) and q > 1 else None
    if pf is None or pf[0] == 2:
        raise ValueError("q must be an odd prime power, got %r" % (q,))
    return pf


# -- standard order formulas --

def _gl_order(n, q):
    return q ** (n * (n - 1) // 2) * prod(q ** i - 1 for i in range(1, n + 1))


def _gu_order(n, q):
    return q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(1, n + 1))


def _sp_order(n, q):
    m = n // 2
    return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))


def _go_order(n, q, sign):
    if n % 2 == 1:
        m = (n - 1) // 2
        return 2 * q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    m = n // 2
    return (2 * q ** (m * (m - 1)) * (q ** m - sign)
            * prod(q ** (2 * i) - 1 for i in range(1, m)))


def ambient_order(family, n, q, sign=None):
    """Order of GL/SL/GU/SU/Sp/GO/SO/Omega as a matrix group (no quotient)."""
    check_odd_prime_power(q)
    if n < 1:
        raise ValueError("n must be positive")
    if family == "GL":
        return _gl_order(n, q)
    if family == "SL":
        return _gl_order(n, q) // (q - 1)
    if family == "GU":
        return _gu_order(n, q)
    if family == "SU":
        return _gu_order(n, q) // (q + 1)
    if family == "Sp":
        if n % 2:
            raise ValueError("Sp needs even n")
        return _sp_order(n, q)
    if family in ("GO", "SO", "Omega"):
        if n % 2 == 0:
            if sign not in (1, -1):
                raise ValueError("even orthogonal groups need sign +1 or -1")
        elif sign is not None:
            raise ValueError("odd orthogonal groups take no sign")
        full = _go_order(n, q, sign)
        if family == "GO":
            return full
        if n == 1:
            # GO(1) = {1, -1}; SO and Omega are trivial
            return 1
        if family == "SO":
            return full // 2
        return full // 4
    raise ValueError("unknown family %r" % (family,))


def center_order(family, n, q, sign=None):
    """Order of the center of the ambient matrix group (scalar subgroup)."""
    check_odd_prime_power(q)
    if family == "GL":
        return q - 1
    if family == "SL":
        return gcd(n, q - 1)
    if family == "GU":
        return q + 1
    if family == "SU":
        return gcd(n, q + 1)
    if family == "Sp":
        return 2
    if family in ("GO", "SO", "Omega"):
        if n <= 2:
            raise ValueError("orthogonal center formula needs n >= 3 (small cases are abelian or dihedral)")
        if n % 2 == 1:
            return {"GO": 2, "SO": 1, "Omega": 1}[family]
        if sign not in (1, -1):
            raise ValueError("even orthogonal groups need sign +1 or -1")
        if family == "GO":
            return 2
        if family == "SO":
            return 2
        m = n // 2
        return 2 if (q ** m - sign) % 4 == 0 else 1
    raise ValueError("unknown family %r" % (family,))


def group_order(spec):
    """Order of the group described by a spec object (family, n, q, sign, projective)."""
    base = ambient_order(spec.family, spec.n, spec.q, getattr(spec, "sign", None))
    if getattr(spec, "projective", False):
        return base // center_order(spec.family, spec.n, spec.q, getattr(spec, "sign", None))
    return base


# -- the rank-2 linear/unitary quotient family --

@dataclass(frozen=True)
class GenericClassData:
    q: int
    epsilon: int
    r: int
    s: int
    t: int
    a: int
    r_prime: int
    t_prime: int
    order: int
    cent_orders: tuple      # the eight values, duplicates kept
    class_sizes: tuple      # order // c for each, same order as cent_orders

    def distinct_cent_orders(self):
        return tuple(sorted(set(self.cent_orders)))

    def distinct_class_sizes(self):
        return tuple(sorted(set(self.class_sizes)))


def psl3_data(q, epsilon):
    """Noncentral centralizer orders of PSL(3,q) (epsilon=+1) or PSU(3,q) (-1)."""
    check_odd_prime_power(q)
    if q < 3:
        raise ValueError("need q >= 3")
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    r = q - epsilon
    s = q + epsilon
    t = q * q + epsilon * q + 1
    a = gcd(3, r)
    # 3 | t exactly when 3 | r, so t' is an integer whenever r' is
    assert (t % 3 == 0) == (r % 3 == 0)
    rp = r // a
    tp = t // a
    order = q ** 3 * (q * q - 1) * r * t // a
    cents = (q ** 3 * rp, q * q, q * rp * r * s, q * rp, r * r, rp * r, rp * s, tp)
    sizes = []
    for c in cents:
        assert order % c == 0, (q, epsilon, c)
        sizes.append(order // c)
    return GenericClassData(q, epsilon, r, s, t, a, rp, tp, order, cents, tuple(sizes))


def psl3_divgraph(q, epsilon):
    data = psl3_data(q, epsilon)
    return graphs.from_centralizer_orders(data.cent_orders, data.order)


def psl3_shape(q, epsilon):
    """Predicted component shape: one big component (7 vertices when gcd(3,r)=3,
    6 when gcd is 1) plus one isolated vertex from the order-t' torus."""
    data = psl3_data(q, epsilon)
    g = psl3_divgraph(q, epsilon)
    shp = graphs.shape(g)
    big = 7 if data.a == 3 else 6
    comps = graphs.connected_components(g)
    if len(comps) != 2 or shp[0][0] != big or shp[1] != (1, 0, True):
        raise AssertionError("unexpected shape %r for q=%d epsilon=%d" % (shp, q, epsilon))
    if data.order // data.t_prime not in [c[0] for c in comps if len(c) == 1]:
        raise AssertionError("torus vertex not isolated for q=%d epsilon=%d" % (q, epsilon))
    return shp


def psl3_json(q, epsilon):
    data = psl3_data(q, epsilon)
    g = psl3_divgraph(q, epsilon)
    return {
        "q": data.q,
        "epsilon": data.epsilon,
        "group_order": data.order,
        "params": {
            "r": data.r, "s": data.s, "t": data.t,
            "a": data.a, "r_prime": data.r_prime, "t_prime": data.t_prime,
        },
        "cent_orders": list(data.cent_orders),
        "class_sizes": list(data.class_sizes),
        "graph": graphs.graph_json(g),
        "shape": [list(x) for x in graphs.shape(g)],
    }


# -- per-Dynkin-type data --

_FUNDAMENTAL = {
    "B": 2, "C": 2, "D": 4,
    "G2": 1, "F4": 1, "E8": 1,
    "E6": 3, "E7": 2,
}


def fundamental_group_order(dynkin_type, rank, q):
    """Order of the fundamental group for the given Dynkin type.

    Type A depends on rank and q-1, twisted type 2A on rank and q+1; the
    remaining supported types are constants.
    """
    if dynkin_type == "A":
        return gcd(rank + 1, q - 1)
    if dynkin_type == "2A":
        return gcd(rank + 1, q + 1)
    if dynkin_type in _FUNDAMENTAL:
        return _FUNDAMENTAL[dynkin_type]
    raise ValueError("unknown Dynkin type %r" % (dynkin_type,))


_GOOD_PRIME_CLASSICAL = ("A", "2A", "B", "C", "D", "2D")
_GOOD_PRIME_23 = ("G2", "F4", "E6", "2E6", "E7")


def good_prime(dynkin_type, p):
    """Whether p is a good prime for the given type: classical types exclude 2,
    the smaller exceptional types exclude {2,3}, E8 excludes {2,3,5}."""
    if dynkin_type in _GOOD_PRIME_CLASSICAL:
        return p != 2
    if dynkin_type in _GOOD_PRIME_23:
        return p not in (2, 3)
    if dynkin_type == "E8":
        return p not in (2, 3, 5)
    raise ValueError("unknown Dynkin type %r" % (dynkin_type,))


def isolated_class_size(group_order, torus_order, center_order, overlap=1):
    """Class size |G| / |T Z| predicted for an element whose centralizer is
    exactly the image torus; T and Z intersect in `overlap` elements."""
    tz = torus_order * center_order
    if tz % overlap != 0:
        raise ValueError("overlap must divide |T|*|Z|")
    tz //= overlap
    if group_order % tz != 0:
        raise ValueError("|T||Z|/overlap = %d does not divide group order %d" % (tz, group_order))
    return group_order // tz
