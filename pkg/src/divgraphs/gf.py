"""Arithmetic in odd-characteristic finite fields GF(p^f).

Field elements are plain ints in range(p**f): the element with polynomial
coordinates (c0, c1, ..., c_{f-1}) in the power basis is encoded as
c0 + c1*p + c2*p**2 + ...  (constant term least significant).  The reducing
polynomial is the lexicographically smallest monic irreducible of degree f,
comparing coefficient tuples constant term first, so encodings are stable
across runs and machines.

Even characteristic is rejected: everything downstream divides by 2.

Small fields (order <= 512) carry full numpy add/mul tables, which the
matrix-group kernel uses for vectorized scalar work.  Larger fields fall
back to per-call polynomial arithmetic.
"""

from itertools import product

import numpy as np

from .errors import CapExceeded

DEFAULT_FIELD_CAP = 2 ** 32
_TABLE_CAP = 512


def is_prime(m):
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorization as a dict {prime: exponent}.  Trial division."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def split_prime_power(n):
    """Return (p, f) with n == p**f, or None if n is not a prime power."""
    fac = factorize(n)
    if len(fac) != 1:
        return None
    ((p, f),) = fac.items()
    return p, f


# -- polynomial helpers over GF(p); coefficient lists, constant term first --

def _ptrim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # m is monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        shift = len(a) - 1 - dm
        c = a[-1]
        for i in range(dm + 1):
            a[shift + i] = (a[shift + i] - c * m[i]) % p
        _ptrim(a)
        if len(a) == 1 and a[0] == 0:
            break
    return _ptrim(a)


def _ppow_x(e, m, p):
    """x**e mod m over GF(p)."""
    result = [1]
    base = _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b != [0]:
        # normalize b monic, then a mod b
        lc = b[-1]
        if lc != 1:
            lci = pow(lc, p - 2, p)
            b = [(c * lci) % p for c in b]
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(m, p):
    """Rabin's test for a monic polynomial m of degree f >= 1 over GF(p)."""
    f = len(m) - 1
    if m[0] == 0 and f > 1:
        return False
    xq = _ppow_x(p ** f, m, p)
    if xq != _pmod([0, 1], m, p):
        return False
    for r in factorize(f):
        h = _ppow_x(p ** (f // r), m, p)
        # gcd(x^(p^(f/r)) - x, m) must be trivial
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(m, _ptrim(diff), p)
        if len(g) > 1:
            return False
    return True


def _find_modulus(p, f):
    """Lexicographically least monic irreducible of degree f, constant term first."""
    if f == 1:
        return (0, 1)
    for digs in product(range(p), repeat=f):
        m = list(digs) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise RuntimeError("no irreducible polynomial found (impossible)")


class GF:
    """The finite field GF(p^f), p an odd prime, with integer-coded elements."""

    def __init__(self, p, f=1, cap=DEFAULT_FIELD_CAP):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError("p must be prime, got %r" % (p,))
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if not isinstance(f, int) or f < 1:
            raise ValueError("f must be a positive integer, got %r" % (f,))
        order = p ** f
        if order > cap:
            raise CapExceeded("field order %d exceeds cap %d" % (order, cap),
                              needed=order, cap=cap)
        self.p = p
        self.f = f
        self.order = order
        self.modulus = _find_modulus(p, f)
        self._red = self._reduction_rows()
        self._pow_p = np.array([p ** i for i in range(f)], dtype=np.int64)
        if order <= _TABLE_CAP:
            self._build_tables()
        else:
            self.add_table = None
            self.mul_table = None
            self.inv_table = None
            self.neg_table = None
        self._frob_tables = {}
        self._generator = None

    def __repr__(self):
        return "GF(%d, %d)" % (self.p, self.f)

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash(("GF", self.p, self.f))

    # -- element encoding --

    def coeffs(self, a):
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, cs):
        a = 0
        for c in reversed(list(cs)):
            a = a * self.p + (c % self.p)
        return a

    def elements(self):
        return range(self.order)

    def _check(self, a):
        if not (0 <= a < self.order):
            raise ValueError("element code %r out of range for %r" % (a, self))

    # -- scalar arithmetic --

    def add(self, a, b):
        if self.add_table is not None:
            return int(self.add_table[a, b])
        self._check(a), self._check(b)
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs((x + y) % self.p for x, y in zip(ca, cb))

    def neg(self, a):
        if self.neg_table is not None:
            return int(self.neg_table[a])
        self._check(a)
        return self.from_coeffs((-x) % self.p for x in self.coeffs(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        self._check(a), self._check(b)
        conv = _pmul(list(self.coeffs(a)), list(self.coeffs(b)), self.p)
        red = _pmod(conv, list(self.modulus), self.p)
        return self.from_coeffs(red + [0] * (self.f - len(red)))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.inv_table is not None:
            return int(self.inv_table[a])
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        self._check(a)
        if e < 0:
            return self.inv(self.pow(a, -e))
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_square(self, a):
        """True when a is a square in the field (0 counts as a square)."""
        if a == 0:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def generator(self):
        """Smallest element generating the multiplicative group."""
        if self._generator is not None:
            return self._generator
        n = self.order - 1
        primes = list(factorize(n))
        for a in range(2, self.order):
            if all(self.pow(a, n // r) != 1 for r in primes):
                self._generator = a
                return a
        raise RuntimeError("no multiplicative generator found (impossible)")

    def q_power(self, a, q0):
        """The field automorphism a -> a**q0 of GF(q0^2); requires order == q0**2."""
        if self.order != q0 * q0:
            raise ValueError("q_power needs field order %d, have %d" % (q0 * q0, self.order))
        return self.pow(a, q0)

    # -- vectorized helpers for the matrix kernel --

    def digits_of(self, arr):
        """Base-p digits of an int array, new trailing axis of length f."""
        arr = np.asarray(arr, dtype=np.int64)
        out = np.empty(arr.shape + (self.f,), dtype=np.int64)
        rest = arr
        for i in range(self.f):
            out[..., i] = rest % self.p
            rest = rest // self.p
        return out

    def codes_of(self, digs):
        """Inverse of digits_of.  Digits need not be reduced mod p."""
        digs = np.asarray(digs, dtype=np.int64) % self.p
        return digs @ self._pow_p

    def _reduction_rows(self):
        """Row k holds the coefficients of x^k mod modulus, k = 0 .. 2f-2."""
        rows = np.zeros((2 * self.f - 1, self.f), dtype=np.int64)
        for k in range(2 * self.f - 1):
            r = _pmod([0] * k + [1], list(self.modulus), self.p)
            for j, c in enumerate(r):
                rows[k, j] = c
        return rows

    @property
    def reduction_rows(self):
        return self._red

    def frob_table(self, q0):
        """Lookup table for a -> a**q0 over the whole field (small fields only)."""
        if q0 not in self._frob_tables:
            if self.order > _TABLE_CAP * _TABLE_CAP:
                raise ValueError("field too large for a frobenius table")
            self._frob_tables[q0] = np.array(
                [self.pow(a, q0) for a in range(self.order)], dtype=np.int64)
        return self._frob_tables[q0]

    def _build_tables(self):
        q, p, f = self.order, self.p, self.f
        digs = self.digits_of(np.arange(q))                      # (q, f)
        add = (digs[:, None, :] + digs[None, :, :]) % p          # (q, q, f)
        self.add_table = (add @ self._pow_p).astype(np.int64)
        self.neg_table = (((-digs) % p) @ self._pow_p).astype(np.int64)
        conv = np.zeros((q, q, 2 * f - 1), dtype=np.int64)
        for i in range(f):
            for j in range(f):
                conv[:, :, i + j] += digs[:, None, i] * digs[None, :, j]
        red = (conv @ self._red) % p                             # (q, q, f)
        self.mul_table = (red @ self._pow_p).astype(np.int64)
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == 1)
        inv[rows] = cols
        self.inv_table = inv


def make_field(p, f=1, cap=DEFAULT_FIELD_CAP):
    """Construct GF(p^f).  Rejects p = 2, composite p, and orders above cap."""
    return GF(p, f, cap=cap)


def field_of_order(q, cap=DEFAULT_FIELD_CAP):
    """GF(q) for a prime power q, factoring q automatically."""
    pf = split_prime_power(q)
    if pf is None:
        raise ValueError("%d is not a prime power" % q)
    return GF(pf[0], pf[1], cap=cap)
