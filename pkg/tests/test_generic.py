"""Order polynomials and the closed-form PSL3/PSU3 class data."""

import pytest

from divgraphs import generic, graphs


KNOWN_ORDERS = [
    ("GL", 2, 3, None, 48),
    ("SL", 2, 3, None, 24),
    ("SL", 2, 9, None, 720),
    ("GL", 3, 3, None, 11232),
    ("SL", 3, 3, None, 5616),
    ("GU", 3, 3, None, 24192),
    ("SU", 3, 3, None, 6048),
    ("Sp", 4, 3, None, 51840),
    ("GO", 3, 3, None, 48),
    ("SO", 3, 3, None, 24),
    ("Omega", 3, 3, None, 12),
    ("GO", 4, 3, 1, 1152),
    ("GO", 4, 3, -1, 1440),
    ("Omega", 4, 3, 1, 288),
    ("Omega", 4, 3, -1, 360),
    ("GO", 5, 3, None, 103680),
    ("SL", 3, 5, None, 372000),
    ("SU", 3, 5, None, 378000),
]


@pytest.mark.parametrize("family,n,q,sign,order", KNOWN_ORDERS)
def test_ambient_orders(family, n, q, sign, order):
    assert generic.ambient_order(family, n, q, sign) == order


def test_order_guards():
    with pytest.raises(ValueError):
        generic.ambient_order("GL", 2, 4)  # even q
    with pytest.raises(ValueError):
        generic.ambient_order("Sp", 3, 3)
    with pytest.raises(ValueError):
        generic.ambient_order("GO", 4, 3)  # sign needed
    with pytest.raises(ValueError):
        generic.ambient_order("GO", 5, 3, sign=1)


def test_center_orders():
    assert generic.center_order("SL", 3, 3) == 1
    assert generic.center_order("SL", 3, 7) == 3
    assert generic.center_order("GU", 3, 3) == 4
    assert generic.center_order("SU", 3, 3) == 1
    assert generic.center_order("SU", 3, 5) == 3
    assert generic.center_order("Sp", 4, 3) == 2
    assert generic.center_order("GO", 5, 3) == 2
    assert generic.center_order("SO", 5, 3) == 1
    # -I lies in Omega exactly when 4 | q^m - sign
    assert generic.center_order("Omega", 4, 3, 1) == 2
    assert generic.center_order("Omega", 4, 3, -1) == 1


def test_psl3_data_q3():
    d = generic.psl3_data(3, 1)
    assert (d.r, d.s, d.t, d.a, d.r_prime, d.t_prime) == (2, 4, 13, 1, 2, 13)
    assert d.order == 5616
    assert d.distinct_cent_orders() == (4, 6, 8, 9, 13, 48, 54)
    assert 432 in d.class_sizes
    du = generic.psl3_data(3, -1)
    assert (du.r, du.s, du.t, du.a, du.r_prime, du.t_prime) == (4, 2, 7, 1, 4, 7)
    assert du.order == 6048
    assert du.distinct_cent_orders() == (7, 8, 9, 12, 16, 96, 108)
    assert du.distinct_class_sizes() == (56, 63, 378, 504, 672, 756, 864)


def test_psl3_data_q5():
    d = generic.psl3_data(5, 1)
    assert d.a == 1 and d.order == 372000
    assert d.distinct_cent_orders() == (16, 20, 24, 25, 31, 480, 500)
    du = generic.psl3_data(5, -1)
    assert du.a == 3 and du.order == 126000
    assert du.distinct_cent_orders() == (7, 8, 10, 12, 25, 36, 240, 250)


def test_psl3_guards():
    for bad_q in (2, 4, 6, 15, 1):
        with pytest.raises(ValueError):
            generic.psl3_data(bad_q, 1)
    with pytest.raises(ValueError):
        generic.psl3_data(7, 0)


@pytest.mark.parametrize("q,eps", [(3, 1), (3, -1), (5, 1), (5, -1),
                                   (7, 1), (7, -1), (9, 1), (9, -1),
                                   (11, 1), (13, -1), (27, 1), (81, -1)])
def test_psl3_shape_across_q(q, eps):
    d = generic.psl3_data(q, eps)
    shp = generic.psl3_shape(q, eps)
    big = 7 if d.a == 3 else 6
    assert shp[0][0] == big
    assert shp[1] == (1, 0, True)
    # the isolated vertex is the coxeter-torus class size
    g = generic.psl3_divgraph(q, eps)
    assert d.order // d.t_prime in g.isolated_vertices()


def test_psl3_json_keys():
    j = generic.psl3_json(7, 1)
    assert j["q"] == 7 and j["epsilon"] == 1
    assert j["params"]["t_prime"] == 19
    assert j["group_order"] == 1876896
    assert len(j["cent_orders"]) == 8
    assert j["graph"]["shape_name"] == "(7v,6e)+K1"


def test_group_order_with_spec_duck():
    class S:
        family, n, q, sign, projective = "SL", 3, 7, None, True
    # |PSL(3,7)| = |SL(3,7)| / 3
    assert generic.group_order(S) == generic.ambient_order("SL", 3, 7) // 3


def test_fundamental_group_order():
    assert generic.fundamental_group_order("A", 2, 7) == 3
    assert generic.fundamental_group_order("A", 2, 5) == 1
    assert generic.fundamental_group_order("2A", 2, 5) == 3
    assert generic.fundamental_group_order("B", 3, 5) == 2
    assert generic.fundamental_group_order("D", 4, 3) == 4
    assert generic.fundamental_group_order("E6", 6, 5) == 3
    assert generic.fundamental_group_order("G2", 2, 7) == 1
    with pytest.raises(ValueError):
        generic.fundamental_group_order("H", 2, 3)


def test_good_prime():
    assert generic.good_prime("A", 3)
    assert not generic.good_prime("A", 2)
    assert not generic.good_prime("G2", 3)
    assert generic.good_prime("G2", 5)
    assert not generic.good_prime("E8", 5)
    assert generic.good_prime("E8", 7)


def test_isolated_class_size():
    assert generic.isolated_class_size(5616, 13, 1) == 432
    assert generic.isolated_class_size(372000, 31, 1) == 12000
    # overlap divides out of the product
    assert generic.isolated_class_size(120, 10, 2, overlap=2) == 12
    with pytest.raises(ValueError):
        generic.isolated_class_size(100, 7, 1)


def test_divgraph_duality():
    # building from centralizer orders equals building from class sizes
    d = generic.psl3_data(9, -1)
    g1 = generic.psl3_divgraph(9, -1)
    g2 = graphs.divisibility_graph([s for s in d.class_sizes])
    assert g1 == g2
