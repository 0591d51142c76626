from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from grassclique.gf import FieldSpec, get_field
from grassclique.matfq import MatFq, Subspace, rowspace


def code(q: int, rows) -> Subspace:
    return rowspace(MatFq.from_rows(get_field(q), rows))


def span_set(field: FieldSpec, vectors) -> frozenset:
    """All linear combinations of ``vectors`` by direct expansion."""
    add, mul = field.add_table, field.mul_table
    n = len(vectors[0])
    out = set()
    for coefs in itertools.product(range(field.q), repeat=len(vectors)):
        v = [0] * n
        for a, w in zip(coefs, vectors):
            v = [add[x][mul[a][y]] for x, y in zip(v, w)]
        out.add(tuple(v))
    return frozenset(out)


def matrices(q: int, rows: int, cols: int):
    return st.lists(
        st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(lambda m: MatFq.from_rows(get_field(q), m))


def invertible(q: int, size: int):
    """Random invertible size x size matrices (rejection sampled)."""
    from grassclique.matfq import rank_of

    f = get_field(q)
    return matrices(q, size, size).filter(lambda m: rank_of(f, m.entries, size) == size)


@pytest.fixture
def gf4():
    return get_field(4)
