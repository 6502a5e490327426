"""Vectorized arithmetic on batches of matrices over a small finite field.

A batch is an int64 ndarray of shape (..., n, n) holding element codes (see
gf).  Extension-field products are computed on base-p digit planes: one
integer matmul per pair of planes, then a reduction against the modulus
table, everything mod p.  Prime fields skip the plane juggling entirely.

Batches pack into uint64 scalars (row-major, first entry most significant),
so sorting packed codes sorts matrices lexicographically by entry.
"""

from itertools import permutations

import numpy as np

from . import linalg


def base_digits(arr, base, width):
    """Base-`base` digits of an int array, least significant first, trailing axis."""
    arr = np.asarray(arr, dtype=np.int64)
    out = np.empty(arr.shape + (width,), dtype=np.int64)
    rest = arr
    for i in range(width):
        out[..., i] = rest % base
        rest = rest // base
    return out


class MatOps:
    """Batch matrix arithmetic bound to one field and one matrix size."""

    def __init__(self, field, n):
        self.F = field
        self.n = n
        self.p = field.p
        self.f = field.f
        self.q = field.order
        nsq = n * n
        if self.q ** nsq > 2 ** 62:
            raise ValueError(
                "cannot pack %dx%d matrices over GF(%d) into 64-bit codes" % (n, n, self.q))
        self._pack_pows = np.array(
            [self.q ** (nsq - 1 - k) for k in range(nsq)], dtype=np.uint64)
        self._red = field.reduction_rows          # (2f-1, f)
        self._pow_p = np.array([self.p ** i for i in range(self.f)], dtype=np.int64)

    # -- representation shuffling --

    def digits(self, a):
        """(..., n, n) codes -> (..., f, n, n) base-p planes."""
        d = self.F.digits_of(a)                   # (..., n, n, f)
        return np.moveaxis(d, -1, -3)

    def codes_from_entry_digits(self, d):
        """(..., f) digit vectors (not necessarily reduced) -> codes."""
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._pow_p

    def identity(self, copies=None):
        ident = np.eye(self.n, dtype=np.int64)
        if copies is None:
            return ident
        return np.broadcast_to(ident, (copies, self.n, self.n)).copy()

    def pack(self, a):
        a = np.asarray(a, dtype=np.int64)
        flat = a.reshape(a.shape[:-2] + (self.n * self.n,)).astype(np.uint64)
        return (flat * self._pack_pows).sum(axis=-1, dtype=np.uint64)

    def unpack(self, packed):
        packed = np.asarray(packed, dtype=np.uint64)
        nsq = self.n * self.n
        out = np.empty(packed.shape + (nsq,), dtype=np.int64)
        rest = packed.copy()
        q = np.uint64(self.q)
        for k in range(nsq - 1, -1, -1):
            out[..., k] = (rest % q).astype(np.int64)
            rest //= q
        return out.reshape(packed.shape + (self.n, self.n))

    # -- arithmetic --

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.f == 1:
            return (a @ b) % self.p
        ad = self.digits(a)
        bd = self.digits(b)
        shape = np.broadcast_shapes(ad[..., 0, :, :].shape, bd[..., 0, :, :].shape)
        conv = np.zeros(shape[:-2] + (2 * self.f - 1,) + shape[-2:], dtype=np.int64)
        for da in range(self.f):
            for db in range(self.f):
                conv[..., da + db, :, :] += ad[..., da, :, :] @ bd[..., db, :, :]
        # contract the plane axis against the reduction table
        red = np.tensordot(conv, self._red, axes=([-3], [0])) % self.p  # (..., n, n, f)
        return (red @ self._pow_p)

    def elem_mul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.f == 1:
            return (x * y) % self.p
        xd = self.F.digits_of(x)
        yd = self.F.digits_of(y)
        shape = np.broadcast_shapes(xd[..., 0].shape, yd[..., 0].shape)
        conv = np.zeros(shape + (2 * self.f - 1,), dtype=np.int64)
        for da in range(self.f):
            for db in range(self.f):
                conv[..., da + db] += xd[..., da] * yd[..., db]
        return ((conv @ self._red) % self.p) @ self._pow_p

    def elem_add(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.f == 1:
            return (x + y) % self.p
        return self.codes_from_entry_digits(self.F.digits_of(x) + self.F.digits_of(y))

    def elem_neg(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.f == 1:
            return (-x) % self.p
        return self.codes_from_entry_digits(-self.F.digits_of(x))

    def scalar_mul(self, c, a):
        """Multiply every entry of a matrix batch by scalar code(s) c."""
        c = np.asarray(c, dtype=np.int64)
        return self.elem_mul(c[..., None, None], a)

    def frob(self, a, q0):
        table = self.F.frob_table(q0)
        return table[np.asarray(a, dtype=np.int64)]

    def transpose(self, a):
        return np.swapaxes(np.asarray(a, dtype=np.int64), -1, -2)

    def det(self, a):
        """Batched determinant.  Leibniz for n <= 4, scalar fallback above."""
        a = np.asarray(a, dtype=np.int64)
        if self.n <= 4:
            total = None
            for perm in permutations(range(self.n)):
                term = a[..., 0, perm[0]]
                for i in range(1, self.n):
                    term = self.elem_mul(term, a[..., i, perm[i]])
                if _perm_sign(perm) < 0:
                    term = self.elem_neg(term)
                total = term if total is None else self.elem_add(total, term)
            return total
        flat = a.reshape(-1, self.n, self.n)
        out = np.array([linalg.det(self.F, tuple(map(tuple, m))) for m in flat],
                       dtype=np.int64)
        return out.reshape(a.shape[:-2])

    def as_tuple(self, a):
        return tuple(tuple(int(x) for x in row) for row in np.asarray(a))

    def from_tuple(self, m):
        return np.array(m, dtype=np.int64)


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign
