import itertools

import pytest
from conftest import code, invertible, matrices
from hypothesis import given, settings
from hypothesis import strategies as st

from grassclique.codeprof import column_profile, is_nondegenerate, is_projective, puncture_zero
from grassclique.gf import get_field
from grassclique.grassmann import GrassmannParams, enumerate_grassmannian, star_superspaces
from grassclique.matfq import MatFq, MatrixError, permute_columns, rank_of, rowspace


def test_three_pairs_profile():
    p = column_profile(code(2, [[1, 0, 1, 1, 0, 1], [0, 1, 1, 0, 1, 1]]))
    assert p.zero_count == 0
    assert p.size_multiset() == [2, 2, 2]
    assert p.class_count == 3 and len(p.big_l) == 3


def test_all_ones_profile():
    p = column_profile(code(4, [[1, 1, 1, 1]]))
    assert p.size_multiset() == [4] and p.class_count == 1
    assert p.to_dict() == {"c": 0, "classes": [{"rep": [1], "l": 4}], "lS": 1, "L_size": 1}


def test_zero_columns_not_a_class():
    p = column_profile(code(3, [[1, 0, 0, 1, 1], [0, 1, 0, 0, 0]]))
    assert p.zero_count == 1 and p.zero_columns == (2,)
    assert p.size_multiset() == [1, 3]


def test_scalar_multiples_share_a_class():
    p = column_profile(code(5, [[1, 2, 3, 0], [0, 0, 0, 1]]))
    assert p.size_multiset() == [1, 3]


def test_predicates():
    assert is_projective(code(2, [[1, 0, 1], [0, 1, 1]]))
    assert not is_projective(code(2, [[1, 1, 0], [0, 0, 1]]))
    assert is_nondegenerate(code(2, [[1, 1, 0], [0, 0, 1]]))
    assert not is_nondegenerate(code(2, [[1, 0, 0], [0, 1, 0]]))


def test_projective_implies_nondegenerate():
    for u in enumerate_grassmannian(GrassmannParams(get_field(3), 4, 2)):
        if is_projective(u):
            assert is_nondegenerate(u)


def test_superspace_of_projective_is_projective():
    for s in enumerate_grassmannian(GrassmannParams(get_field(2), 5, 2)):
        if is_projective(s):
            assert all(is_projective(u) for u in star_superspaces(s))


def test_puncture():
    s = code(3, [[1, 0, 0, 1, 1], [0, 1, 0, 0, 0]])
    t = puncture_zero(s)
    assert t.n == 4 and t.basis == ((1, 0, 1, 1), (0, 1, 0, 0))
    with pytest.raises(MatrixError):
        puncture_zero(code(2, [[1, 1, 1]]))
    with pytest.raises(MatrixError):
        puncture_zero(code(2, [[1, 0, 0]]))


def _invariants(s):
    p = column_profile(s)
    return p.zero_count, p.size_multiset()


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([2, 3, 4]).flatmap(
        lambda q: st.tuples(matrices(q, 2, 5), invertible(q, 2), st.permutations(range(5)))
    )
)
def test_profile_invariant_under_basis_and_permutation(triple):
    m, t, sigma = triple
    if rank_of(m.field, m.entries, 5) == 0:
        return
    base = _invariants(rowspace(m))
    assert _invariants(rowspace(t @ m)) == base
    assert _invariants(rowspace(permute_columns(m, list(sigma)))) == base
    assert is_projective(rowspace(permute_columns(m, list(sigma)))) == is_projective(rowspace(m))


def test_classes_partition_nonzero_columns():
    f = get_field(3)
    for rows in itertools.islice(itertools.product(range(3), repeat=8), 0, 6561, 37):
        m = MatFq.from_rows(f, [rows[:4], rows[4:]])
        if rank_of(f, m.entries, 4) == 0:
            continue
        p = column_profile(rowspace(m))
        cols = sorted(p.zero_columns + tuple(j for c in p.classes for j in c.columns))
        assert cols == [0, 1, 2, 3]
