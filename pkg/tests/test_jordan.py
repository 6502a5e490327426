"""Jordan types, parity constraints, and centralizer q-exponents.

The exponent check is backed by an independent computation: the dimension
of the full centralizer (commutant intersected with the isometry condition)
minus the dimension of its reductive part, plus the q-exponent of that
reductive part.  The implementation under test uses a different route, the
explicit per-family summation formulas, so agreement here is meaningful.
"""

import pytest

from divgraphs import jordan


def _dim_commutant(parts):
    return sum(min(i, j) * ri * rj
               for (i, ri) in parts for (j, rj) in parts)


def _q_exp_orth(k):
    # q-exponent of the full orthogonal group in dimension k
    m = k // 2
    return m * m if k % 2 else m * (m - 1)


def _independent_exponent(family, parts):
    if family == "GL":
        unip = _dim_commutant(parts) - sum(r * r for _, r in parts)
        levi = sum(r * (r - 1) // 2 for _, r in parts)
        return unip + levi
    if family == "Sp":
        dim_c = (_dim_commutant(parts) + sum(r for i, r in parts if i % 2)) // 2
        dim_levi = (sum(r * (r + 1) // 2 for i, r in parts if i % 2)
                    + sum(r * (r - 1) // 2 for i, r in parts if not i % 2))
        levi_q = (sum((r // 2) ** 2 for i, r in parts if i % 2)
                  + sum(_q_exp_orth(r) for i, r in parts if not i % 2))
        return dim_c - dim_levi + levi_q
    dim_c = (_dim_commutant(parts) - sum(r for i, r in parts if i % 2)) // 2
    dim_levi = (sum(r * (r - 1) // 2 for i, r in parts if i % 2)
                + sum(r * (r + 1) // 2 for i, r in parts if not i % 2))
    levi_q = (sum(_q_exp_orth(r) for i, r in parts if i % 2)
              + sum((r // 2) ** 2 for i, r in parts if not i % 2))
    return dim_c - dim_levi + levi_q


def test_validation_rules():
    assert jordan.is_valid("GL", 3, ((1, 1), (2, 1)))
    # blocks must ascend strictly and sum to n
    assert not jordan.is_valid("GL", 3, ((2, 1), (1, 1)))
    assert not jordan.is_valid("GL", 4, ((1, 1), (2, 1)))
    # Sp: odd blocks need even multiplicity
    assert not jordan.is_valid("Sp", 4, ((1, 1), (3, 1)))
    assert jordan.is_valid("Sp", 4, ((2, 2),))
    assert not jordan.is_valid("Sp", 5, ((1, 1), (2, 2)))
    # O: even blocks need even multiplicity
    assert not jordan.is_valid("O", 3, ((1, 1), (2, 1)))
    assert jordan.is_valid("O", 5, ((1, 1), (2, 2)))
    with pytest.raises(ValueError):
        jordan.jordan_type("Sp", 4, ((1, 1), (3, 1)))
    with pytest.raises(ValueError):
        jordan.jordan_type("GL", 0, ())


def test_from_partition_and_label():
    jt = jordan.from_partition("GL", 5, (3, 1, 1))
    assert jt.parts == ((1, 2), (3, 1))
    assert jt.expanded() == (1, 1, 3)
    assert jordan.type_label(jt) == "[1^2 3]"
    assert jordan.type_label(jordan.from_partition("GL", 4, (4,))) == "[4]"
    assert jordan.from_partition("GL", 3, (1, 1, 1)).is_identity()


def test_enumeration_counts():
    assert len(jordan.enumerate_types("GL", 5)) == 7
    assert len(jordan.enumerate_types("Sp", 4)) == 4
    assert len(jordan.enumerate_types("O", 5)) == 4
    # every enumerated type is valid and distinct
    for fam, n in [("GL", 6), ("Sp", 8), ("O", 7)]:
        types = jordan.enumerate_types(fam, n)
        assert len(set(types)) == len(types)
        for jt in types:
            assert jordan.is_valid(fam, n, jt.parts)


@pytest.mark.parametrize("family", jordan.FAMILIES)
def test_q_exponent_against_dimension_count(family):
    lo = {"GL": 1, "Sp": 2, "O": 2}[family]
    for n in range(lo, 12):
        if family == "Sp" and n % 2:
            continue
        for jt in jordan.enumerate_types(family, n):
            a = jordan.q_exponent(jt)
            assert isinstance(a, int)
            assert a == _independent_exponent(family, jt.parts), jt


def test_known_exponents():
    # a few values small enough to verify by hand
    assert jordan.q_exponent(jordan.from_partition("GL", 2, (2,))) == 1
    assert jordan.q_exponent(jordan.from_partition("GL", 3, (3,))) == 2
    assert jordan.q_exponent(jordan.from_partition("GL", 3, (1, 2))) == 3
    assert jordan.q_exponent(jordan.from_partition("GL", 3, (1, 1, 1))) == 3
    assert jordan.q_exponent(jordan.from_partition("Sp", 4, (4,))) == 2
    assert jordan.q_exponent(jordan.from_partition("Sp", 4, (2, 2))) == 3
    assert jordan.q_exponent(jordan.from_partition("O", 5, (5,))) == 2
    assert jordan.q_exponent(jordan.from_partition("O", 5, (1, 2, 2))) == 4


def test_lie_rank_and_regular():
    assert jordan.lie_rank("GL", 4) == 3
    assert jordan.lie_rank("Sp", 6) == 3
    assert jordan.lie_rank("O", 7) == 3
    assert jordan.lie_rank("O", 8) == 4
    with pytest.raises(ValueError):
        jordan.lie_rank("Sp", 5)
    assert jordan.regular_type("GL", 4).parts == ((4, 1),)
    assert jordan.regular_type("O", 8).parts == ((1, 1), (7, 1))
    # the regular type attains the rank
    for fam, n in [("GL", 5), ("Sp", 6), ("O", 7), ("O", 8)]:
        reg = jordan.regular_type(fam, n)
        assert jordan.q_exponent(reg) == jordan.lie_rank(fam, n)


def test_bound_report():
    rep = jordan.verify_unipotent_bound("GL", 4)
    assert rep.ok
    assert len(rep.witnesses) == 1
    assert rep.witnesses[0] == jordan.regular_type("GL", 4)
    for fam, n in [("Sp", 6), ("O", 5), ("O", 6), ("GL", 7)]:
        assert jordan.verify_unipotent_bound(fam, n).ok
    # dimensions below the supported minimum are rejected, not silently passed
    with pytest.raises(ValueError):
        jordan.verify_unipotent_bound("GL", 3)
    with pytest.raises(ValueError):
        jordan.verify_unipotent_bound("O", 4)


def test_json_shapes():
    jt = jordan.from_partition("Sp", 4, (2, 2))
    j = jordan.type_json(jt)
    assert j == {"family": "Sp", "n": 4, "parts": [[2, 2]],
                 "partition": [2, 2], "q_exponent": 3}
    rep = jordan.verify_unipotent_bound("Sp", 6)
    rj = jordan.bound_report_json(rep)
    assert rj["bound_ok"] is True
    assert rj["rank"] == 3
    assert all(row["a"] >= 3 for row in rj["types"])
