"""Exact dense linear algebra over a GF instance, scalar paths.

Matrices are tuples of tuples of element codes.  Everything here runs on
single small matrices (n <= 8 or so); the batch code paths live in matops.
"""


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def from_rows(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


def transpose(a):
    return tuple(zip(*a))


def mat_add(F, a, b):
    return tuple(tuple(F.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(F, a, b):
    return tuple(tuple(F.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_neg(F, a):
    return tuple(tuple(F.neg(x) for x in r) for r in a)


def scalar_mul(F, c, a):
    return tuple(tuple(F.mul(c, x) for x in r) for r in a)


def mat_mul(F, a, b):
    bt = transpose(b)
    out = []
    for ra in a:
        row = []
        for cb in bt:
            s = 0
            for x, y in zip(ra, cb):
                s = F.add(s, F.mul(x, y))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(F, a, v):
    out = []
    for ra in a:
        s = 0
        for x, y in zip(ra, v):
            s = F.add(s, F.mul(x, y))
        out.append(s)
    return tuple(out)


def bilinear(F, u, m, v):
    """u^T m v as a field scalar."""
    s = 0
    mv = mat_vec(F, m, v)
    for x, y in zip(u, mv):
        s = F.add(s, F.mul(x, y))
    return s


def outer(F, u, v):
    return tuple(tuple(F.mul(x, y) for y in v) for x in u)


def frob_entrywise(F, a, q0):
    return tuple(tuple(F.q_power(x, q0) for x in r) for r in a)


def mat_pow(F, a, e):
    n = len(a)
    result = identity(n)
    base = a
    if e < 0:
        base = inv(F, a)
        e = -e
    while e:
        if e & 1:
            result = mat_mul(F, result, base)
        base = mat_mul(F, base, base)
        e >>= 1
    return result


def _elim(F, a):
    """Row echelon scratch: returns (rows as lists, pivot column list, det-ish scalar).

    The scalar accumulates pivots with row-swap signs, so for square input it
    equals the determinant once multiplied over all pivots (0 if rank deficient).
    """
    m = [list(r) for r in a]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    det = 1
    prow = 0
    for col in range(ncols):
        piv = None
        for r in range(prow, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != prow:
            m[prow], m[piv] = m[piv], m[prow]
            det = F.neg(det)
        det = F.mul(det, m[prow][col])
        pinv = F.inv(m[prow][col])
        m[prow] = [F.mul(pinv, x) for x in m[prow]]
        for r in range(nrows):
            if r != prow and m[r][col] != 0:
                c = m[r][col]
                m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[prow])]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return m, pivots, det


def rank(F, a):
    if not a:
        return 0
    return len(_elim(F, a)[1])


def det(F, a):
    n = len(a)
    _, pivots, d = _elim(F, a)
    return d if len(pivots) == n else 0


def inv(F, a):
    n = len(a)
    aug = tuple(tuple(list(r) + [1 if i == j else 0 for j in range(n)])
                for i, r in enumerate(a))
    m, pivots, _ = _elim(F, aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in m)


def nullspace(F, a):
    """Basis of the right nullspace, as tuples.  Free variables set to 1 in turn."""
    if not a:
        return []
    ncols = len(a[0])
    m, pivots, _ = _elim(F, a)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for prow, pcol in enumerate(pivots):
            v[pcol] = F.neg(m[prow][free])
        basis.append(tuple(v))
    return basis


def matrix_order(F, a, limit):
    """Multiplicative order of an invertible matrix; error if it exceeds limit."""
    n = len(a)
    ident = identity(n)
    x = a
    for k in range(1, limit + 1):
        if x == ident:
            return k
        x = mat_mul(F, x, a)
    raise ValueError("matrix order exceeds limit %d" % limit)
