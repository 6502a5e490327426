"""Shared table cache so each matrix group is enumerated once per session."""

import pytest

from divgraphs import matgroups

_TABLES = {}


def build_table(family, n, q, sign=None, projective=False):
    key = (family, n, q, sign, projective)
    if key not in _TABLES:
        spec = matgroups.GroupSpec(family, n, q, sign=sign,
                                   projective=projective)
        _TABLES[key] = matgroups.generate(
            spec, max_q=max(q, matgroups.DEFAULT_MAX_Q))
    return _TABLES[key]


@pytest.fixture(scope="session")
def table():
    return build_table
