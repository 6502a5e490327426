"""Brute-force enumeration and analysis of small classical matrix groups.

The kernel builds a complete element table for GL/SL/GU/SU/Sp/GO/SO/Omega
over an odd prime power q by breadth-first closure from standard generators,
working on integer-coded matrices (see matops).  On top of the table it
computes centers, conjugacy class profiles, quotients by the center, prime
graphs, commuting-graph components, and torus centralizer checks.

Independent of any enumeration, commutant_centralizer_order counts the
centralizer of a unipotent element directly from the solution space of the
linear commutation constraint, so it can cross-check both the table path
and the closed-form q-exponents.

Element order is the lexicographic order of the packed row-major encoding;
class and coset representatives are minimal in that order.  Everything is
deterministic.
"""

import dataclasses
import json
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

from . import generic, linalg
from .errors import CapExceeded
from .gf import GF, factorize, split_prime_power
from .matops import MatOps, base_digits

FAMILIES = ("GL", "SL", "GU", "SU", "Sp", "GO", "SO", "Omega")
DEFAULT_GENERATE_CAP = 2 ** 22
DEFAULT_ORACLE_CAP = 10 ** 7
DEFAULT_MAX_N = 6
DEFAULT_MAX_Q = 11

_MAGIC = b"DGT1"


@dataclass(frozen=True)
class GroupSpec:
    """A classical group choice: family, dimension, field size, optional sign,
    and whether to pass to the quotient by the center."""

    family: str
    n: int
    q: int
    sign: int = None
    projective: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r (expected one of %s)"
                             % (self.family, ", ".join(FAMILIES)))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be a positive integer, got %r" % (self.n,))
        generic.check_odd_prime_power(self.q)
        if self.family == "Sp" and self.n % 2:
            raise ValueError("Sp needs even n, got %d" % self.n)
        orth = self.family in ("GO", "SO", "Omega")
        if orth and self.n % 2 == 0:
            if self.sign not in (1, -1):
                raise ValueError("even orthogonal groups need sign +1 or -1")
        elif self.sign is not None:
            raise ValueError("sign is only meaningful for even orthogonal groups")

    def ambient(self):
        return dataclasses.replace(self, projective=False)

    def describe(self):
        sgn = {1: "+", -1: "-"}.get(self.sign, "")
        name = "%s%s(%d,%d)" % (self.family, sgn, self.n, self.q)
        return "P" + name if self.projective else name


def field_for(spec):
    """The matrix-entry field: GF(q^2) for unitary families, GF(q) otherwise."""
    p, f = split_prime_power(spec.q)
    if spec.family in ("GU", "SU"):
        return GF(p, 2 * f)
    return GF(p, f)


# -- forms --

def symplectic_form(F, n):
    """Antidiagonal skew form: +1 above the antidiagonal center, -1 below."""
    m = n // 2
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][n - 1 - i] = 1
    for i in range(m, n):
        rows[i][n - 1 - i] = F.neg(1)
    return tuple(tuple(r) for r in rows)


def hermitian_form(F, n):
    return linalg.identity(n)


def _diag_form(F, entries):
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def _count_singular(ops, diag_entries):
    """Number of nonzero vectors v with sum d_i v_i^2 = 0, over all of F^n."""
    q = ops.q
    n = len(diag_entries)
    d = np.array(diag_entries, dtype=np.int64)
    total = 0
    block = 1 << 16
    for start in range(0, q ** n, block):
        codes = np.arange(start, min(start + block, q ** n), dtype=np.int64)
        vecs = base_digits(codes, q, n)
        sq = ops.elem_mul(vecs, vecs)
        terms = ops.elem_mul(d[None, :], sq)
        acc = terms[:, 0]
        for i in range(1, n):
            acc = ops.elem_add(acc, terms[:, i])
        total += int((acc == 0).sum())
    return total - 1  # drop the zero vector


def orthogonal_form(F, n, sign):
    """Diagonal form realizing the requested sign.

    Odd n: the identity form (the two similarity classes of forms give the
    same group).  Even n: choose between diag(1,...,1) and diag(1,...,1,nu)
    (nu the least nonsquare) by counting nonzero singular vectors; the plus
    type has (q^m - 1)(q^(m-1) + 1) of them and the minus type
    (q^m + 1)(q^(m-1) - 1).
    """
    if n % 2 == 1:
        if sign is not None:
            raise ValueError("odd orthogonal groups take no sign")
        return _diag_form(F, [1] * n)
    if sign not in (1, -1):
        raise ValueError("even orthogonal groups need sign +1 or -1")
    nu = next(a for a in range(2, F.order) if not F.is_square(a))
    ops = MatOps(F, n)
    q, m = F.order, n // 2
    counts = {1: (q ** m - 1) * (q ** (m - 1) + 1),
              -1: (q ** m + 1) * (q ** (m - 1) - 1)}
    for entries in ([1] * n, [1] * (n - 1) + [nu]):
        got = _count_singular(ops, entries)
        if got == counts[sign]:
            return _diag_form(F, entries)
        if got != counts[-sign]:
            raise AssertionError("singular count %d matches neither sign" % got)
    raise AssertionError("no diagonal form of sign %+d found (impossible)" % sign)


def form_for(spec, F=None):
    """The invariant form checked by membership, or None for GL/SL."""
    F = F or field_for(spec)
    if spec.family == "Sp":
        return symplectic_form(F, spec.n)
    if spec.family in ("GU", "SU"):
        return hermitian_form(F, spec.n)
    if spec.family in ("GO", "SO", "Omega"):
        return orthogonal_form(F, spec.n, spec.sign)
    return None


# -- generator construction --

def _field_basis(F):
    w = F.generator()
    return [F.pow(w, k) for k in range(F.f)]


def _subfield_basis(F, q0):
    """Basis of the index-2 subfield GF(q0) inside F = GF(q0^2), over GF(p)."""
    eta = F.generator()
    g = F.pow(eta, q0 + 1)          # generates GF(q0)*
    f0 = F.f // 2
    return [F.pow(g, k) for k in range(f0)]


def _trace_zero_unit(F, q0):
    """A nonzero element with a^q0 = -a."""
    for a in range(1, F.order):
        if F.pow(a, q0) == F.neg(a):
            return a
    raise AssertionError("no trace-zero unit (impossible for odd q)")


def _projective_points(F, n):
    """Vectors with first nonzero coordinate 1, lexicographic by code."""
    q = F.order
    pts = []
    block = 1 << 16
    for start in range(0, q ** n, block):
        codes = np.arange(start, min(start + block, q ** n), dtype=np.int64)
        digs = base_digits(codes, q, n)
        nz = digs != 0
        any_nz = nz.any(axis=1)
        first = np.argmax(nz, axis=1)
        lead = digs[np.arange(len(codes)), first]
        keep = any_nz & (lead == 1)
        for row in digs[keep]:
            pts.append(tuple(int(x) for x in row))
    return pts


def _quadratic_value(F, form, v):
    return linalg.bilinear(F, v, form, v)


def _sl_generators(F, n):
    """Adjacent-position elementary transvections over a field basis."""
    gens = []
    for lam in _field_basis(F):
        for i in range(n - 1):
            for (r, c) in ((i, i + 1), (i + 1, i)):
                m = [list(row) for row in linalg.identity(n)]
                m[r][c] = lam
                gens.append(tuple(tuple(row) for row in m))
    return gens


def _diag_with(F, n, value, pos=0):
    m = [list(row) for row in linalg.identity(n)]
    m[pos][pos] = value
    return tuple(tuple(row) for row in m)


def _sp_transvection(F, form, v, lam):
    jv = linalg.mat_vec(F, form, v)
    t = linalg.mat_add(F, linalg.identity(len(v)),
                       linalg.scalar_mul(F, lam, linalg.outer(F, v, jv)))
    return t


def _su_transvection(F, v, lam, q0):
    vs = tuple(F.q_power(x, q0) for x in v)
    t = linalg.mat_add(F, linalg.identity(len(v)),
                       linalg.scalar_mul(F, lam, linalg.outer(F, v, vs)))
    return t


def _reflection(F, form, v):
    qv = _quadratic_value(F, form, v)
    if qv == 0:
        raise ValueError("reflection needs a nonsingular vector")
    bv = linalg.mat_vec(F, form, v)
    c = F.div(F.add(1, 1), qv)
    return linalg.mat_sub(F, linalg.identity(len(v)),
                          linalg.scalar_mul(F, c, linalg.outer(F, v, bv)))


def _check_isometry(F, form, m, q0=None):
    mt = linalg.transpose(m)
    right = linalg.frob_entrywise(F, m, q0) if q0 else m
    return linalg.mat_mul(F, linalg.mat_mul(F, mt, form), right) == form


def _generator_candidates(spec, F, form):
    """Yield candidate generating sets, cheapest first; the last is complete
    by the standard generation theorems, so the order check must succeed."""
    n, q = spec.n, spec.q
    fam = spec.family
    if fam in ("GL", "SL"):
        gens = _sl_generators(F, n) if n >= 2 else []
        if fam == "GL":
            gens = gens + [_diag_with(F, n, F.generator())]
        yield gens
        return
    if fam in ("GU", "SU"):
        q0 = q
        delta = _trace_zero_unit(F, q0)
        lams = [F.mul(delta, b) for b in _subfield_basis(F, q0)]
        pts = [v for v in _projective_points(F, n)
               if _hermitian_norm(F, v, q0) == 0]
        extra = []
        if fam == "GU":
            eta = F.generator()
            zeta = F.pow(eta, q0 - 1)       # has multiplicative order q0+1
            extra = [_diag_with(F, n, zeta)]
        if n == 1:
            yield extra
            return
        tv = lambda sub: [_su_transvection(F, v, lam, q0) for v in sub for lam in lams]
        for k in (3, 6, 12):
            if k < len(pts):
                yield tv(pts[:k]) + extra
        yield tv(pts) + extra
        return
    if fam == "Sp":
        pts = _projective_points(F, n)
        lams = _field_basis(F)
        tv = lambda sub: [_sp_transvection(F, form, v, lam) for v in sub for lam in lams]
        for k in (4, 8, 16):
            if k < len(pts):
                yield tv(pts[:k])
        yield tv(pts)
        return
    # orthogonal families
    pts = [v for v in _projective_points(F, n) if _quadratic_value(F, form, v) != 0]
    if fam == "GO":
        refl = lambda sub: [_reflection(F, form, v) for v in sub]
        for k in (6, 12, 24):
            if k < len(pts):
                yield refl(pts[:k])
        yield refl(pts)
        return
    # SO and Omega: even products through a fixed base point generate SO
    v0 = pts[0] if pts else None
    if n == 1 or not pts:
        yield []
        return
    r0 = _reflection(F, form, v0)
    prod = lambda sub: [linalg.mat_mul(F, r0, _reflection(F, form, v)) for v in sub]
    for k in (6, 12, 24):
        if k < len(pts):
            yield prod(pts[:k])
    yield prod(pts)


def _hermitian_norm(F, v, q0):
    s = 0
    for x in v:
        s = F.add(s, F.mul(x, F.q_power(x, q0)))
    return s


def _spin_bit(F, form, v):
    return 0 if F.is_square(_quadratic_value(F, form, v)) else 1


def standard_generators(spec, max_n=DEFAULT_MAX_N, max_q=DEFAULT_MAX_Q,
                        cap=DEFAULT_GENERATE_CAP):
    """Generating matrices for the spec (and the form, when there is one).

    The returned set provably generates the group: for Omega this requires
    building the table and extracting verified generators, for the other
    families the complete transvection/reflection sets are used.
    """
    spec = spec.ambient()
    table = generate(spec, cap=cap, max_n=max_n, max_q=max_q)
    gens = [table.matrix_at(i) for i in table.sweep_gens]
    return gens, table.form


# -- breadth-first closure --

def _member_sorted(sorted_arr, values):
    pos = np.searchsorted(sorted_arr, values)
    pos_c = np.minimum(pos, len(sorted_arr) - 1) if len(sorted_arr) else pos
    ok = np.zeros(values.shape, dtype=bool)
    if len(sorted_arr):
        ok = sorted_arr[pos_c] == values
        ok &= pos < len(sorted_arr)
    return ok


def _bfs_closure(ops, gen_mats, expected, gen_bits=None):
    """Close {I} under right multiplication by the generators.

    Returns sorted packed codes, aligned matrices, and (optionally) aligned
    xor-propagated bit columns.  Raises if the closure overshoots expected.
    """
    ident = ops.identity()[None]
    known_packed = ops.pack(ident)
    known_mats = ident.copy()
    track = gen_bits is not None
    if track:
        gen_bits = np.asarray(gen_bits, dtype=np.uint8)
        known_bits = np.zeros((1,) + gen_bits.shape[1:], dtype=np.uint8)
    frontier = ident
    frontier_bits = known_bits if track else None
    while len(frontier):
        cand_packs, cand_mats, cand_bits = [], [], []
        for gi in range(len(gen_mats)):
            prods = ops.matmul(frontier, gen_mats[gi])
            pk = ops.pack(prods)
            pk_u, first = np.unique(pk, return_index=True)
            fresh = ~_member_sorted(known_packed, pk_u)
            if fresh.any():
                cand_packs.append(pk_u[fresh])
                cand_mats.append(prods[first[fresh]])
                if track:
                    cand_bits.append(frontier_bits[first[fresh]] ^ gen_bits[gi])
        if not cand_packs:
            break
        cat = np.concatenate(cand_packs)
        uniq, idx = np.unique(cat, return_index=True)
        frontier = np.concatenate(cand_mats)[idx]
        if track:
            frontier_bits = np.concatenate(cand_bits)[idx]
        merged = np.concatenate([known_packed, uniq])
        order = np.argsort(merged, kind="stable")
        known_packed = merged[order]
        known_mats = np.concatenate([known_mats, frontier])[order]
        if track:
            known_bits = np.concatenate([known_bits, frontier_bits])[order]
        if len(known_packed) > expected:
            raise RuntimeError(
                "closure reached %d elements, more than the expected order %d"
                % (len(known_packed), expected))
    return known_packed, known_mats, (known_bits if track else None)


def _closure_count_from_indices(ops, codes, mats, gen_positions, identity_pos):
    """Size of the subgroup generated by table elements at gen_positions."""
    known = np.zeros(len(codes), dtype=bool)
    known[identity_pos] = True
    frontier = np.array([identity_pos], dtype=np.int64)
    gens = mats[np.asarray(gen_positions, dtype=np.int64)]
    while len(frontier):
        prods = ops.matmul(mats[frontier][:, None, :, :], gens[None, :, :, :])
        pk = ops.pack(prods).ravel()
        pos = np.searchsorted(codes, pk)
        fresh = np.unique(pos[~known[pos]])
        if not len(fresh):
            break
        known[fresh] = True
        frontier = fresh
    return int(known.sum())


def _find_generator_indices(ops, codes, mats, identity_pos, construction_positions=None):
    """A small verified generating set of table positions."""
    n = len(codes)
    if n == 1:
        return np.array([], dtype=np.int64)
    if construction_positions is not None and len(construction_positions) <= 8:
        if _closure_count_from_indices(ops, codes, mats, construction_positions,
                                       identity_pos) == n:
            return np.asarray(construction_positions, dtype=np.int64)
    for k in (1, 2, 3, 4, 5, 6, 8):
        picks = [(n * (i + 1)) // (k + 1) for i in range(k)]
        picks = sorted({p for p in picks if p != identity_pos and 0 <= p < n})
        if picks and _closure_count_from_indices(ops, codes, mats, picks,
                                                 identity_pos) == n:
            return np.array(picks, dtype=np.int64)
    rng = np.random.default_rng(0)
    for k in (2, 3, 4, 6, 8, 12):
        for _ in range(8):
            picks = sorted(set(int(x) for x in rng.integers(0, n, size=k))
                           - {identity_pos})
            if picks and _closure_count_from_indices(ops, codes, mats, picks,
                                                     identity_pos) == n:
                return np.array(picks, dtype=np.int64)
    raise RuntimeError("could not find a small generating set")


def generate(spec, cap=DEFAULT_GENERATE_CAP, max_n=DEFAULT_MAX_N, max_q=DEFAULT_MAX_Q):
    """Enumerate the group as a table; projective specs return the quotient."""
    if spec.projective:
        return generate(spec.ambient(), cap=cap, max_n=max_n, max_q=max_q).quotient()
    if spec.n > max_n:
        raise ValueError("n=%d exceeds the dimension limit %d" % (spec.n, max_n))
    if spec.q > max_q:
        raise ValueError("q=%d exceeds the field limit %d" % (spec.q, max_q))
    expected = generic.ambient_order(spec.family, spec.n, spec.q, spec.sign)
    # Omega is filtered out of an SO enumeration, so SO is what must fit
    enumerated = expected * 2 if (spec.family == "Omega" and spec.n >= 2) else expected
    if enumerated > cap:
        raise CapExceeded(
            "%s needs %d elements enumerated, above the cap %d"
            % (spec.describe(), enumerated, cap), needed=enumerated, cap=cap)
    F = field_for(spec)
    ops = MatOps(F, spec.n)
    form = form_for(spec, F)
    if spec.family == "Omega" and spec.n >= 2:
        return _generate_omega(spec, F, ops, form, expected)
    q0 = spec.q if spec.family in ("GU", "SU") else None
    last_error = None
    for gens in _generator_candidates(spec, F, form):
        for g in gens:
            if form is not None and not _check_isometry(F, form, g, q0):
                raise AssertionError("generator does not preserve the form")
        gen_arr = np.array(gens, dtype=np.int64).reshape(len(gens), spec.n, spec.n)
        try:
            codes, mats, _ = _bfs_closure(ops, gen_arr, expected)
        except RuntimeError as e:
            raise RuntimeError("%s: %s" % (spec.describe(), e))
        if len(codes) == expected:
            return _build_table(spec, F, ops, codes, mats, form, gens)
        last_error = "candidate set of %d generators closed at %d, want %d" % (
            len(gens), len(codes), expected)
    raise RuntimeError("%s: %s" % (spec.describe(), last_error))


def _generate_omega(spec, F, ops, form, expected):
    """Enumerate SO with spinor bits on the generators, keep the kernel."""
    so_expected = expected * 2
    pts = [v for v in _projective_points(F, spec.n)
           if _quadratic_value(F, form, v) != 0]
    v0 = pts[0]
    r0 = _reflection(F, form, v0)
    b0 = _spin_bit(F, form, v0)
    gens = [linalg.mat_mul(F, r0, _reflection(F, form, v)) for v in pts]
    bits = np.array([[b0 ^ _spin_bit(F, form, v)] for v in pts], dtype=np.uint8)
    gen_arr = np.array(gens, dtype=np.int64).reshape(len(gens), spec.n, spec.n)
    codes, mats, flags = _bfs_closure(ops, gen_arr, so_expected, gen_bits=bits)
    if len(codes) != so_expected:
        raise RuntimeError("%s: rotation closure gave %d, want %d"
                           % (spec.describe(), len(codes), so_expected))
    keep = flags[:, 0] == 0
    codes, mats = codes[keep], mats[keep]
    if len(codes) != expected:
        raise RuntimeError("%s: spinor kernel has %d elements, want %d"
                           % (spec.describe(), len(codes), expected))
    return _build_table(spec, F, ops, codes, mats, form, construction_gens=None)


def _build_table(spec, F, ops, codes, mats, form, construction_gens):
    table = GroupTable(spec, F, ops, codes, mats, form)
    positions = None
    if construction_gens:
        packed = ops.pack(np.array(construction_gens, dtype=np.int64))
        positions = np.searchsorted(codes, packed)
    table.sweep_gens = _find_generator_indices(ops, codes, mats,
                                               table.identity_index, positions)
    table._verify_form()
    return table


class GroupTable:
    """Complete element enumeration of a matrix group, in canonical order."""

    def __init__(self, spec, F, ops, codes, mats, form):
        self.spec = spec
        self.F = F
        self.ops = ops
        self.codes = codes
        self.mats = mats
        self.form = form
        self.n = spec.n
        self.p = F.p
        self.order = len(codes)
        self.sweep_gens = np.array([], dtype=np.int64)
        self._center = None
        self._conj_perms = {}
        self._profile = None
        self._quotient = None

    def __repr__(self):
        return "<GroupTable %s order %d>" % (self.spec.describe(), self.order)

    # -- indexing --

    def _pos(self, packed):
        pos = np.searchsorted(self.codes, packed)
        ok = _member_sorted(self.codes, np.atleast_1d(packed))
        if not ok.all():
            raise KeyError("element not in the table (closure violation?)")
        return pos

    @property
    def identity_index(self):
        return int(self._pos(self.ops.pack(self.ops.identity()[None]))[0])

    @property
    def num_sweep_gens(self):
        return len(self.sweep_gens)

    def matrix_at(self, i):
        return self.ops.as_tuple(self.mats[i])

    def index_of(self, m):
        return int(self._pos(self.ops.pack(np.array(m, dtype=np.int64)[None]))[0])

    # -- structure --

    def center_indices(self):
        if self._center is None:
            mask = np.ones(self.order, dtype=bool)
            for k in range(self.num_sweep_gens):
                g = self.mats[self.sweep_gens[k]]
                left = self.ops.pack(self.ops.matmul(g, self.mats))
                right = self.ops.pack(self.ops.matmul(self.mats, g))
                mask &= left == right
            self._center = np.nonzero(mask)[0]
        return self._center

    def conj_perm(self, k):
        if k not in self._conj_perms:
            g = self.matrix_at(int(self.sweep_gens[k]))
            ginv = linalg.inv(self.F, g)
            garr = np.array(g, dtype=np.int64)
            ginv_arr = np.array(ginv, dtype=np.int64)
            prods = self.ops.matmul(self.ops.matmul(garr, self.mats), ginv_arr)
            self._conj_perms[k] = self._pos(self.ops.pack(prods))
        return self._conj_perms[k]

    def commute_row(self, i):
        x = self.mats[i]
        left = self.ops.pack(self.ops.matmul(x, self.mats))
        right = self.ops.pack(self.ops.matmul(self.mats, x))
        return left == right

    def mult_index(self, i, j):
        prod = self.ops.matmul(self.mats[i], self.mats[j])
        return int(self._pos(self.ops.pack(prod[None] if prod.ndim == 2 else prod))[0])

    def mult_row(self, i):
        return self._pos(self.ops.pack(self.ops.matmul(self.mats[i], self.mats)))

    def element_order(self, i):
        return linalg.matrix_order(self.F, self.matrix_at(i), self.order)

    def element_order_mod(self, i, central_set):
        cur = int(i)
        for m in range(1, self.order + 1):
            if cur in central_set:
                return m
            cur = self.mult_index(cur, i)
        raise AssertionError("power chase left the group (impossible)")

    def quotient(self):
        if self._quotient is None:
            self._quotient = QuotientTable(self)
        return self._quotient

    def profile(self):
        if self._profile is None:
            self._profile = conjugacy_profile(self)
        return self._profile

    def _verify_form(self):
        if self.form is None:
            return
        q0 = self.spec.q if self.spec.family in ("GU", "SU") else None
        J = np.array(self.form, dtype=np.int64)
        right = self.ops.frob(self.mats, q0) if q0 else self.mats
        prod = self.ops.matmul(self.ops.matmul(self.ops.transpose(self.mats), J), right)
        if not (prod == J).all():
            raise RuntimeError("%s: an enumerated element breaks the form"
                               % self.spec.describe())


class QuotientTable:
    """The quotient of a GroupTable by its center, with the same interface
    surface as a table (cosets indexed by their minimal representative)."""

    def __init__(self, parent):
        self.parent = parent
        self.spec = dataclasses.replace(parent.spec, projective=True)
        self.F = parent.F
        self.ops = parent.ops
        self.n = parent.n
        self.p = parent.p
        z = parent.center_indices()
        best = None
        for zi in z:
            packs = parent.ops.pack(parent.ops.matmul(parent.mats[zi], parent.mats))
            best = packs if best is None else np.minimum(best, packs)
        canon_pos = parent._pos(best)
        self.reps = np.unique(canon_pos)
        self.qid_of_parent = np.searchsorted(self.reps, canon_pos)
        self.order = len(self.reps)
        assert self.order * len(z) == parent.order
        self.rep_mats = parent.mats[self.reps]
        self._center = None
        self._conj_perms = {}
        self._profile = None

    def __repr__(self):
        return "<QuotientTable %s order %d>" % (self.spec.describe(), self.order)

    def _qid(self, packed):
        return self.qid_of_parent[self.parent._pos(packed)]

    @property
    def identity_index(self):
        return int(self.qid_of_parent[self.parent.identity_index])

    @property
    def num_sweep_gens(self):
        return self.parent.num_sweep_gens

    def matrix_at(self, a):
        """Minimal parent matrix representing coset a."""
        return self.parent.matrix_at(int(self.reps[a]))

    def center_indices(self):
        if self._center is None:
            mask = np.ones(self.order, dtype=bool)
            for k in range(self.num_sweep_gens):
                g = self.parent.mats[self.parent.sweep_gens[k]]
                left = self._qid(self.ops.pack(self.ops.matmul(g, self.rep_mats)))
                right = self._qid(self.ops.pack(self.ops.matmul(self.rep_mats, g)))
                mask &= left == right
            self._center = np.nonzero(mask)[0]
        return self._center

    def conj_perm(self, k):
        if k not in self._conj_perms:
            pp = self.parent.conj_perm(k)
            self._conj_perms[k] = self.qid_of_parent[pp[self.reps]]
        return self._conj_perms[k]

    def commute_row(self, a):
        x = self.rep_mats[a]
        left = self._qid(self.ops.pack(self.ops.matmul(x, self.rep_mats)))
        right = self._qid(self.ops.pack(self.ops.matmul(self.rep_mats, x)))
        return left == right

    def mult_index(self, a, b):
        prod = self.ops.matmul(self.rep_mats[a], self.rep_mats[b])
        return int(self._qid(self.ops.pack(prod[None]))[0])

    def mult_row(self, a):
        return self._qid(self.ops.pack(self.ops.matmul(self.rep_mats[a], self.rep_mats)))

    def element_order(self, a):
        ident = self.identity_index
        cur = int(a)
        for m in range(1, self.order + 1):
            if cur == ident:
                return m
            cur = self.mult_index(cur, a)
        raise AssertionError("power chase failed (impossible)")

    def element_order_mod(self, a, central_set):
        cur = int(a)
        for m in range(1, self.order + 1):
            if cur in central_set:
                return m
            cur = self.mult_index(cur, a)
        raise AssertionError("power chase failed (impossible)")

    def profile(self):
        if self._profile is None:
            self._profile = conjugacy_profile(self)
        return self._profile


# -- conjugacy machinery --

@dataclass(frozen=True)
class ClassRecord:
    size: int
    cent: int
    rep_order: int
    unipotent: bool
    mult: int


@dataclass(frozen=True)
class ClassRepInfo:
    index: int
    size: int
    cent: int
    rep_order: int
    unipotent: bool
    order_mod_center: int


@dataclass(frozen=True)
class ClassProfile:
    group_order: int
    center_order: int
    p: int
    records: tuple
    reps: tuple

    def class_sizes(self):
        out = []
        for r in self.records:
            out.extend([r.size] * r.mult)
        return sorted(out)

    def distinct_class_sizes(self):
        return tuple(sorted({r.size for r in self.records}))

    def distinct_cent_orders(self):
        return tuple(sorted({r.cent for r in self.records}))

    def div_graph(self):
        from . import graphs
        return graphs.divisibility_graph(self.class_sizes())

    def to_json_dict(self):
        return {
            "order": self.group_order,
            "center": self.center_order,
            "classes": [
                {"size": r.size, "cent": r.cent, "rep_order": r.rep_order,
                 "unipotent": r.unipotent, "mult": r.mult}
                for r in self.records
            ],
        }


def _is_power_of(value, p):
    if value < 1:
        return False
    while value % p == 0:
        value //= p
    return value == 1


def conjugacy_profile(g):
    """Class profile by conjugation-orbit sweep over the whole table."""
    n = g.order
    central = g.center_indices()
    central_set = set(int(c) for c in central)
    if g.num_sweep_gens and n > 1:
        rows = np.tile(np.arange(n, dtype=np.int64), g.num_sweep_gens)
        cols = np.concatenate([g.conj_perm(k) for k in range(g.num_sweep_gens)])
        graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                           shape=(n, n))
        _, labels = _csgraph_components(graph, directed=True, connection="weak")
    else:
        labels = np.arange(n)
    uniq, first = np.unique(labels, return_index=True)
    sizes = np.bincount(labels)
    reps = []
    for lab, rep in zip(uniq, first):
        rep = int(rep)
        if rep in central_set:
            continue
        size = int(sizes[lab])
        assert n % size == 0
        cent = n // size
        rep_order = g.element_order(rep)
        unip = rep_order > 1 and _is_power_of(rep_order, g.p)
        omc = g.element_order_mod(rep, central_set)
        reps.append(ClassRepInfo(rep, size, cent, rep_order, unip, omc))
    reps.sort(key=lambda r: (r.size, r.index))
    counted = {}
    for r in reps:
        key = (r.size, r.cent, r.rep_order, r.unipotent)
        counted[key] = counted.get(key, 0) + 1
    records = tuple(ClassRecord(s, c, o, u, m)
                    for (s, c, o, u), m in sorted(counted.items()))
    total = sum(r.size for r in reps) + len(central)
    assert total == n, "class equation failed: %d != %d" % (total, n)
    return ClassProfile(n, len(central), g.p, records, tuple(reps))


def quotient_profile(g):
    """Profile of G/Z(G); for trivial center this equals conjugacy_profile(g)."""
    if isinstance(g, QuotientTable):
        raise ValueError("already a quotient; take its profile directly")
    return g.quotient().profile()


# -- prime graph --

@dataclass(frozen=True)
class PrimeGraph:
    primes: tuple
    edges: tuple

    def components(self):
        adj = {v: set() for v in self.primes}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, comps = set(), []
        for v in self.primes:
            if v in seen:
                continue
            stack, comp = [v], []
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

    def component_count(self):
        return len(self.components())

    def to_json_dict(self):
        return {"primes": list(self.primes),
                "edges": [list(e) for e in self.edges],
                "components": [list(c) for c in self.components()]}


def prime_graph(g):
    """Vertices: primes dividing |G|; edge {r,s} iff some element order is
    divisible by rs.  Element orders come from class representatives plus
    the center, which covers the group."""
    profile = g.profile()
    orders = {r.rep_order for r in profile.reps}
    for c in g.center_indices():
        orders.add(g.element_order(int(c)))
    primes = tuple(sorted(factorize(g.order)))
    edges = []
    for i, r in enumerate(primes):
        for s in primes[i + 1:]:
            if any(o % (r * s) == 0 for o in orders):
                edges.append((r, s))
    return PrimeGraph(primes, tuple(edges))


# -- commuting graph --

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class CommutingReport:
    component_count: int
    orbit_class_count: int


def commuting_components(g):
    """Components of the commuting graph on noncentral elements, plus the
    number of conjugation orbits on the set of components.  Needs trivial
    center; abelian input therefore errors out."""
    central = g.center_indices()
    ident = g.identity_index
    if len(central) != 1 or int(central[0]) != ident:
        raise ValueError("commuting components need a trivial center")
    n = g.order
    if n == 1:
        raise ValueError("no noncentral elements")
    uf = _UnionFind(n)
    for i in range(n):
        if i == ident:
            continue
        mask = g.commute_row(i)
        js = np.nonzero(mask)[0]
        for j in js:
            j = int(j)
            if j > i and j != ident:
                uf.union(i, j)
    comp_root = np.array([uf.find(i) for i in range(n)], dtype=np.int64)
    noncentral = np.array([i for i in range(n) if i != ident], dtype=np.int64)
    roots = sorted(set(int(comp_root[i]) for i in noncentral))
    root_id = {r: k for k, r in enumerate(roots)}
    orbit = _UnionFind(len(roots))
    for k in range(g.num_sweep_gens):
        perm = g.conj_perm(k)
        a = comp_root[noncentral]
        b = comp_root[perm[noncentral]]
        for ra, rb in set(zip(a.tolist(), b.tolist())):
            orbit.union(root_id[ra], root_id[rb])
    orbit_count = len({orbit.find(k) for k in range(len(roots))})
    return CommutingReport(len(roots), orbit_count)


# -- torus centralizer check --

@dataclass(frozen=True)
class CCTorusReport:
    is_cc: bool
    tz_order: int
    predicted_class_size: int
    vertex_present: bool
    isolated: bool


def verify_cc_torus(g, t_indices):
    """Check C_G(t) <= T*Z for every noncentral t of the abelian subgroup T,
    and whether the predicted class size |G|/|TZ| is an isolated vertex of
    the divisibility graph."""
    T = sorted(set(int(i) for i in t_indices))
    tset = set(T)
    for i in T:
        row = g.mult_row(i)
        for j in T:
            if int(row[j]) not in tset:
                raise ValueError("T is not closed under multiplication")
    for i in T:
        for j in T:
            if g.mult_index(i, j) != g.mult_index(j, i):
                raise ValueError("T is not abelian")
    if g.identity_index not in tset:
        raise ValueError("T does not contain the identity")
    central = set(int(c) for c in g.center_indices())
    noncentral_t = [i for i in T if i not in central]
    if not noncentral_t:
        raise ValueError("T has no noncentral elements")
    tz = set()
    for i in T:
        row = g.mult_row(i)
        for z in central:
            tz.add(int(row[z]))
    is_cc = True
    for t in noncentral_t:
        cent_members = np.nonzero(g.commute_row(t))[0]
        if not all(int(c) in tz for c in cent_members):
            is_cc = False
            break
    tz_order = len(tz)
    assert g.order % tz_order == 0
    predicted = g.order // tz_order
    dg = g.profile().div_graph()
    vertex_present = predicted in dg.vertices
    isolated = predicted in dg.isolated_vertices()
    return CCTorusReport(is_cc, tz_order, predicted, vertex_present, isolated)


# -- element helpers --

def element_of_order(g, m):
    """Index of some element of order m, or None.  Checks class reps and
    central elements, which reach every order the group attains."""
    for c in g.center_indices():
        if g.element_order(int(c)) == m:
            return int(c)
    for r in g.profile().reps:
        if r.rep_order == m:
            return r.index
    return None


def cyclic_subgroup(g, i):
    """Indices of the powers of element i."""
    out = [g.identity_index]
    cur = int(i)
    while cur != g.identity_index:
        out.append(cur)
        cur = g.mult_index(cur, i)
    return sorted(out)


def jordan_partition(F, u):
    """Block partition of a unipotent matrix, ascending, e.g. (1, 2, 2)."""
    n = len(u)
    ident = linalg.identity(n)
    nil = linalg.mat_sub(F, u, ident)
    powers = [linalg.identity(n), nil]
    while len(powers) <= n:
        powers.append(linalg.mat_mul(F, powers[-1], nil))
    ranks = [linalg.rank(F, m) for m in powers]
    if ranks[n] != 0:
        raise ValueError("matrix is not unipotent")
    ranks.append(0)
    parts = []
    for i in range(1, n + 1):
        exact = (ranks[i - 1] - ranks[i]) - (ranks[i] - ranks[i + 1])
        parts.extend([i] * exact)
    return tuple(sorted(parts))


def family_key(family):
    """Jordan-type family for a matrix family tag."""
    if family in ("GL", "SL", "GU", "SU"):
        return "GL"
    if family == "Sp":
        return "Sp"
    return "O"


def unipotent_class_types(g):
    """(rep index, JordanType) for each noncentral unipotent class."""
    from . import jordan as jordan_mod
    fam = family_key(g.spec.family)
    out = []
    for r in g.profile().reps:
        if r.unipotent:
            parts = jordan_partition(g.F, g.matrix_at(r.index))
            out.append((r.index, jordan_mod.from_partition(fam, g.n, parts)))
    return out


def jordan_block_matrix(n, partition):
    """Block-diagonal unipotent matrix with the given ascending block sizes."""
    if sum(partition) != n:
        raise ValueError("partition does not sum to n")
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    offset = 0
    for b in sorted(partition):
        for i in range(b - 1):
            m[offset + i][offset + i + 1] = 1
        offset += b
    return tuple(tuple(r) for r in m)


# -- commutant oracle --

def spinor_norm_bit(F, form, x):
    """0 when x in SO has trivial spinor norm, 1 otherwise.

    Factors x into reflections constructively and multiplies the square
    classes of the reflected vectors' form values.
    """
    n = len(x)
    ident = linalg.identity(n)
    work = x
    spin = 1
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    for i in range(n):
        guard = 0
        while True:
            col = tuple(work[k][i] for k in range(n))
            if col == basis[i]:
                break
            guard += 1
            if guard > 2 * n + 4:
                raise AssertionError("reflection factorization did not converge")
            u = tuple(F.sub(a, b) for a, b in zip(col, basis[i]))
            qu = _quadratic_value(F, form, u)
            if qu != 0:
                work = linalg.mat_mul(F, _reflection(F, form, u), work)
                spin = F.mul(spin, qu)
                continue
            w = _complement_nonsingular(F, form, basis[:i], work, i)
            work = linalg.mat_mul(F, _reflection(F, form, w), work)
            spin = F.mul(spin, _quadratic_value(F, form, w))
    if work != ident:
        raise ValueError("matrix does not fix the form (not orthogonal?)")
    return 0 if F.is_square(spin) else 1


def _complement_nonsingular(F, form, fixed, work, i):
    """A nonsingular w orthogonal to the fixed vectors whose reflection makes
    progress on column i (leaves it fixed or with a nonsingular defect)."""
    n = len(form)
    rows = [linalg.mat_vec(F, form, e) for e in fixed]
    space = linalg.nullspace(F, tuple(rows)) if rows else \
        [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    q = F.order
    d = len(space)
    e_i = tuple(1 if k == i else 0 for k in range(n))
    for code in range(1, q ** d):
        cs = []
        rest = code
        for _ in range(d):
            cs.append(rest % q)
            rest //= q
        w = tuple(0 for _ in range(n))
        for c, v in zip(cs, space):
            if c:
                w = tuple(F.add(a, F.mul(c, b)) for a, b in zip(w, v))
        if _quadratic_value(F, form, w) == 0:
            continue
        cand = linalg.mat_mul(F, _reflection(F, form, w), work)
        col = tuple(cand[k][i] for k in range(n))
        if col == e_i:
            return w
        u = tuple(F.sub(a, b) for a, b in zip(col, e_i))
        if _quadratic_value(F, form, u) != 0:
            return w
    raise AssertionError("no progress reflection found (impossible)")


def commutant_centralizer_order(u, spec, max_algebra=DEFAULT_ORACLE_CAP):
    """Centralizer order of a unipotent u in the group of spec, computed by
    solving X u = u X and counting solutions that lie in the group.  No
    group enumeration happens here."""
    if spec.projective:
        raise ValueError("the commutant oracle works on matrix groups, not quotients")
    F = field_for(spec)
    n = spec.n
    u = tuple(tuple(int(x) for x in row) for row in u)
    if len(u) != n or any(len(r) != n for r in u):
        raise ValueError("matrix shape does not match the spec dimension")
    for row in u:
        for x in row:
            if not (0 <= x < F.order):
                raise ValueError("entry %r outside the field" % (x,))
    q0 = spec.q if spec.family in ("GU", "SU") else None
    form = form_for(spec, F)
    if form is not None:
        if not _check_isometry(F, form, u, q0):
            raise ValueError("matrix does not preserve the form: not in %s"
                             % spec.describe())
    else:
        if linalg.det(F, u) == 0:
            raise ValueError("matrix is singular: not in %s" % spec.describe())
    if spec.family in ("SL", "SU", "SO", "Omega") and linalg.det(F, u) != 1:
        raise ValueError("determinant is not 1: not in %s" % spec.describe())
    ident = linalg.identity(n)
    nil = linalg.mat_sub(F, u, ident)
    power = nil
    for _ in range(n - 1):
        power = linalg.mat_mul(F, power, nil)
    if any(any(x != 0 for x in row) for row in power):
        raise ValueError("matrix is not unipotent")
    if u == ident:
        return generic.group_order(spec)
    # nullspace of the commutation constraint on n x n matrices
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[k * n + j] = F.add(row[k * n + j], u[i][k])
            for l in range(n):
                row[i * n + l] = F.sub(row[i * n + l], u[l][j])
            rows.append(tuple(row))
    basis_vecs = linalg.nullspace(F, tuple(rows))
    d = len(basis_vecs)
    q = F.order
    if q ** d > max_algebra:
        raise CapExceeded("commutant has %d elements, above the cap %d"
                          % (q ** d, max_algebra), needed=q ** d, cap=max_algebra)
    ops = MatOps(F, n)
    basis = np.array([np.array(v, dtype=np.int64).reshape(n, n) for v in basis_vecs])
    need_form = form is not None
    need_det1 = spec.family in ("SL", "SU", "SO", "Omega")
    need_invertible = spec.family == "GL"
    need_spinor = spec.family == "Omega"
    Jb = np.array(form, dtype=np.int64) if need_form else None
    count = 0
    block = 1 << 14
    for start in range(0, q ** d, block):
        codes = np.arange(start, min(start + block, q ** d), dtype=np.int64)
        coeffs = base_digits(codes, q, d)
        X = None
        for k in range(d):
            term = ops.scalar_mul(coeffs[:, k], basis[k])
            X = term if X is None else ops.elem_add(X, term)
        mask = np.ones(len(codes), dtype=bool)
        if need_form:
            right = ops.frob(X, q0) if q0 else X
            prod = ops.matmul(ops.matmul(ops.transpose(X), Jb), right)
            mask &= (prod == Jb).all(axis=(-2, -1))
        if need_det1 or need_invertible:
            dets = ops.det(X)
            mask &= (dets == 1) if need_det1 else (dets != 0)
        if need_spinor and mask.any():
            idx = np.nonzero(mask)[0]
            for k in idx:
                m = ops.as_tuple(X[k])
                if spinor_norm_bit(F, form, m) != 0:
                    mask[k] = False
        count += int(mask.sum())
    return count


# -- binary cache --

def save_table(g, path):
    """Write a GroupTable to a binary cache file."""
    if isinstance(g, QuotientTable):
        raise ValueError("quotient tables are rebuilt from their parent; save that")
    header = {
        "family": g.spec.family,
        "n": g.spec.n,
        "q": g.spec.q,
        "sign": g.spec.sign,
        "p": g.F.p,
        "f": g.F.f,
        "modulus": list(g.F.modulus),
        "order": g.order,
        "form": [list(r) for r in g.form] if g.form is not None else None,
        "sweep_gens": [int(x) for x in g.sweep_gens],
    }
    blob = json.dumps(header, sort_keys=True).encode()
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(len(blob).to_bytes(4, "little"))
        fh.write(blob)
        fh.write(np.ascontiguousarray(g.codes, dtype="<u8").tobytes())


def load_table(path):
    """Read a table back; field encoding and order are re-verified."""
    with open(path, "rb") as fh:
        if fh.read(4) != _MAGIC:
            raise ValueError("not a group table cache file")
        hlen = int.from_bytes(fh.read(4), "little")
        header = json.loads(fh.read(hlen).decode())
        body = fh.read()
    spec = GroupSpec(header["family"], header["n"], header["q"],
                     sign=header["sign"])
    F = GF(header["p"], header["f"])
    if list(F.modulus) != header["modulus"]:
        raise ValueError("field encoding mismatch (different modulus)")
    codes = np.frombuffer(body, dtype="<u8").astype(np.uint64)
    if len(codes) != header["order"]:
        raise ValueError("element count does not match the header")
    if (np.diff(codes.astype(np.uint64)) <= 0).any():
        raise ValueError("cache body is not in canonical order")
    expected = generic.ambient_order(spec.family, spec.n, spec.q, spec.sign)
    if expected != header["order"]:
        raise ValueError("order %d does not match the formula %d"
                         % (header["order"], expected))
    ops = MatOps(F, spec.n)
    mats = ops.unpack(codes)
    form = tuple(tuple(r) for r in header["form"]) if header["form"] else None
    table = GroupTable(spec, F, ops, codes, mats, form)
    table.sweep_gens = np.array(header["sweep_gens"], dtype=np.int64)
    if table.num_sweep_gens:
        got = _closure_count_from_indices(ops, codes, mats, table.sweep_gens,
                                          table.identity_index)
        if got != table.order:
            raise ValueError("stored generators do not generate the table")
    table._verify_form()
    return table
