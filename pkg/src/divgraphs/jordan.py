"""Unipotent class types and the q-part of their centralizer orders.

A unipotent conjugacy class in a classical group over GF(q) is labelled by
its Jordan type: the partition of n recording block sizes, with parity
constraints in the symplectic and orthogonal cases (odd blocks occur with
even multiplicity for Sp, even blocks with even multiplicity for O).

For each type the order of the centralizer has q-part exactly q**a where
the exponent a depends only on the type, not on q.  q_exponent computes
that exponent in closed form, with exact rational arithmetic inside and an
integrality assertion at the end.

The family tag is one of "GL", "Sp", "O".  "GL" covers both the linear and
unitary groups: the exponent is the same for GL(n, q) and GU(n, q).
"""

from dataclasses import dataclass
from fractions import Fraction

FAMILIES = ("GL", "Sp", "O")


@dataclass(frozen=True)
class JordanType:
    """Jordan type: ((block_size, multiplicity), ...) with block sizes ascending."""

    family: str
    n: int
    parts: tuple

    def __post_init__(self):
        problems = describe_invalid(self.family, self.n, self.parts)
        if problems:
            raise ValueError(problems)

    def multiplicity(self, block):
        for i, r in self.parts:
            if i == block:
                return r
        return 0

    def expanded(self):
        """The partition as an ascending tuple of block sizes with repeats."""
        out = []
        for i, r in self.parts:
            out.extend([i] * r)
        return tuple(out)

    def is_identity(self):
        return self.parts == ((1, self.n),)


def describe_invalid(family, n, parts):
    """Reason the triple is not a valid Jordan type, or '' when it is valid."""
    if family not in FAMILIES:
        return "unknown family %r (expected one of %s)" % (family, ", ".join(FAMILIES))
    if not isinstance(n, int) or n < 1:
        return "n must be a positive integer, got %r" % (n,)
    if family == "Sp" and n % 2 != 0:
        return "Sp needs even dimension, got n=%d" % n
    try:
        parts = tuple((int(i), int(r)) for i, r in parts)
    except (TypeError, ValueError):
        return "parts must be (block, multiplicity) pairs, got %r" % (parts,)
    total = 0
    prev = 0
    for i, r in parts:
        if i <= prev:
            return "block sizes must be strictly ascending, got %r" % (parts,)
        if r < 1:
            return "multiplicities must be positive, got %r" % (parts,)
        prev = i
        total += i * r
    if total != n:
        return "block sizes sum to %d, not n=%d" % (total, n)
    for i, r in parts:
        if family == "Sp" and i % 2 == 1 and r % 2 != 0:
            return "Sp type needs even multiplicity for odd block %d" % i
        if family == "O" and i % 2 == 0 and r % 2 != 0:
            return "O type needs even multiplicity for even block %d" % i
    return ""


def is_valid(family, n, parts):
    return describe_invalid(family, n, parts) == ""


def validate(family, n, parts):
    """True iff the triple satisfies the block-sum and parity invariants."""
    return is_valid(family, n, parts)


def jordan_type(family, n, parts):
    """Build a validated JordanType from any iterable of (block, mult) pairs."""
    return JordanType(family, n, tuple((int(i), int(r)) for i, r in parts))


def from_partition(family, n, blocks):
    """Build a type from a plain partition like (1, 1, 3)."""
    blocks = sorted(int(b) for b in blocks)
    parts = []
    for b in blocks:
        if parts and parts[-1][0] == b:
            parts[-1][1] += 1
        else:
            parts.append([b, 1])
    return jordan_type(family, n, tuple((i, r) for i, r in parts))


def q_exponent(jt):
    """Exponent a with |centralizer|_q = q**a, from the closed form for jt.family.

    Exact for every valid type including the identity (where it returns the
    q-exponent of the whole group order).
    """
    parts = jt.parts
    if jt.family == "GL":
        a = Fraction(0)
        for i, r in parts:
            a += i * r * r - Fraction(r * (r + 1), 2)
        for x, (i, ri) in enumerate(parts):
            for j, rj in parts[x + 1:]:
                a += 2 * i * ri * rj
    elif jt.family == "Sp":
        a = Fraction(0)
        for i, r in parts:
            a += Fraction(1, 2) * (i - Fraction(1, 2)) * r * r
            if i % 2 == 0 and r % 2 == 1:
                a += Fraction(1, 4)
        for x, (i, ri) in enumerate(parts):
            for j, rj in parts[x + 1:]:
                a += i * ri * rj
    else:  # "O"
        a = Fraction(0)
        for i, r in parts:
            a += Fraction(1, 2) * (i - Fraction(1, 2)) * r * r - Fraction(r, 2)
            if r % 2 == 1:
                a += Fraction(1, 4)
        for x, (i, ri) in enumerate(parts):
            for j, rj in parts[x + 1:]:
                a += i * ri * rj
    assert a.denominator == 1, "non-integer exponent %s for %r" % (a, jt)
    return int(a)


def lie_rank(family, n):
    """Rank of the ambient algebraic group: n-1, n/2, or floor(n/2)."""
    if family == "GL":
        if n < 2:
            raise ValueError("rank of the linear family needs n >= 2")
        return n - 1
    if family == "Sp":
        if n < 2 or n % 2:
            raise ValueError("Sp needs even n >= 2")
        return n // 2
    if family == "O":
        if n < 3:
            raise ValueError("rank of the orthogonal family needs n >= 3")
        return n // 2
    raise ValueError("unknown family %r" % (family,))


def regular_type(family, n):
    """The unique type whose centralizer q-exponent equals the Lie rank.

    A single full block, except in even orthogonal dimension where the type
    is one block of size n-1 plus a fixed vector.
    """
    lie_rank(family, n)
    if family == "O" and n % 2 == 0:
        return jordan_type(family, n, ((1, 1), (n - 1, 1)))
    return jordan_type(family, n, ((n, 1),))


def enumerate_types(family, n):
    """All valid types for the family in dimension n, ordered lexicographically
    by the expanded ascending partition."""
    out = []
    for partition in _ascending_partitions(n):
        parts = []
        for b in partition:
            if parts and parts[-1][0] == b:
                parts[-1][1] += 1
            else:
                parts.append([b, 1])
        parts = tuple((i, r) for i, r in parts)
        if is_valid(family, n, parts):
            out.append(JordanType(family, n, parts))
    return out


def _ascending_partitions(n, minimum=1):
    if n == 0:
        yield ()
        return
    for first in range(minimum, n + 1):
        for rest in _ascending_partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class BoundReport:
    family: str
    n: int
    rank: int
    entries: tuple          # ((parts, exponent, is_regular), ...)
    ok: bool
    witnesses: tuple        # types attaining the rank


_BOUND_MINIMUM = {"GL": 4, "Sp": 6, "O": 5}


def verify_unipotent_bound(family, n):
    """Check a >= rank for every nontrivial type, equality exactly at the regular type.

    Only meaningful from moderate rank up; below the per-family minimum
    dimension (GL: 4, Sp: 6, O: 5 odd / 6 even) the call is rejected.
    """
    if family not in _BOUND_MINIMUM:
        raise ValueError("unknown family %r" % (family,))
    minimum = _BOUND_MINIMUM[family]
    if family == "O" and n % 2 == 0:
        minimum = 6
    if n < minimum:
        raise ValueError("bound check for %s needs n >= %d, got %d" % (family, minimum, n))
    rank = lie_rank(family, n)
    reg = regular_type(family, n)
    entries = []
    witnesses = []
    ok = True
    for jt in enumerate_types(family, n):
        if jt.is_identity():
            continue
        a = q_exponent(jt)
        entries.append((jt.parts, a, jt == reg))
        if a < rank:
            ok = False
        if a == rank:
            witnesses.append(jt)
    if witnesses != [reg]:
        ok = False
    return BoundReport(family, n, rank, tuple(entries), ok, tuple(witnesses))


def type_label(jt):
    """Compact partition label, e.g. [1^2 3] for blocks 1, 1, 3."""
    bits = []
    for i, r in jt.parts:
        bits.append(str(i) if r == 1 else "%d^%d" % (i, r))
    return "[%s]" % " ".join(bits)


def type_json(jt):
    return {
        "family": jt.family,
        "n": jt.n,
        "parts": [[i, r] for i, r in jt.parts],
        "partition": list(jt.expanded()),
        "q_exponent": q_exponent(jt),
    }


def bound_report_json(rep):
    return {
        "family": rep.family,
        "n": rep.n,
        "rank": rep.rank,
        "bound_ok": rep.ok,
        "types": [
            {"parts": [[i, r] for i, r in parts], "a": a, "regular": regular}
            for (parts, a, regular) in rep.entries
        ],
    }
