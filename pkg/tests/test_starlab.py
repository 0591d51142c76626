import itertools

import pytest
from conftest import code

from grassclique.codeprof import is_projective
from grassclique.gf import get_field
from grassclique.grassmann import GrassmannParams, ParameterError, enumerate_grassmannian, q_number, star_superspaces, top_subspaces
from grassclique.matfq import MatFq, contains, permute_columns, rowspace
from grassclique.starlab import (
    CliqueError,
    Kind,
    analyze,
    census,
    classify_star,
    component_count,
    extension_vectors,
    graph_stats,
    is_extending_witness,
    is_maximal_clique_oracle,
    local_candidates,
    predicted_star_size,
    projective_universe,
    star_pi,
    theorem_kind,
    top_pi,
    w_dim,
)
from grassclique.verify import check_golden, load_goldens

GOLDENS = load_goldens()


@pytest.mark.parametrize("g", GOLDENS, ids=[g["name"] for g in GOLDENS])
def test_golden(g):
    assert check_golden(g) == []


def test_all_ones_line_over_gf4():
    s = code(4, [[1, 1, 1, 1]])
    assert extension_vectors(s) == [(0, 1, 2, 3), (0, 1, 3, 2)]
    assert w_dim(s) == 2
    cl = classify_star(s)
    assert cl.kind is Kind.STAR and cl.equals_top
    assert set(top_pi(cl.top_witness)) == set(star_pi(s))
    # the top holds non-projective codes too, so it is bigger than its projective part
    assert len(top_subspaces(cl.top_witness, 2)) > len(star_pi(s))


def test_predicted_size_cases():
    assert predicted_star_size(code(2, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])) == 0  # two zero columns
    assert predicted_star_size(code(2, [[1, 1, 1, 0, 0], [0, 0, 0, 1, 1]])) == 0  # l = 3 > q
    proj = code(2, [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]])
    assert not is_projective(proj)
    s = code(3, [[1, 0, 1, 2], [0, 1, 1, 1]])
    assert is_projective(s)
    assert predicted_star_size(s) == q_number(4 - 3 + 1, 3)


@pytest.mark.parametrize("q,n,k", [(2, 5, 3), (3, 4, 2), (4, 4, 2), (5, 4, 2), (2, 6, 4)])
def test_predicted_size_matches_direct_count(q, n, k):
    """Compare with superspaces filtered by the codeword-set projectivity test."""
    f = get_field(q)
    universe = set(projective_universe(f, n, k))
    for s in enumerate_grassmannian(GrassmannParams(f, n, k - 1)):
        direct = sum(u in universe for u in star_superspaces(s))
        assert predicted_star_size(s) == direct == len(star_pi(s)), s


def test_core_range_enforced():
    with pytest.raises(ParameterError):
        extension_vectors(code(2, [[1, 0, 0, 0], [0, 1, 0, 0]]))  # k = 3 = n - 1
    with pytest.raises(ParameterError):
        theorem_kind(code(2, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0]]))


def test_oracle_input_validation():
    a = code(2, [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]])
    with pytest.raises(CliqueError):
        is_maximal_clique_oracle([])
    with pytest.raises(CliqueError):
        is_maximal_clique_oracle([a])  # a is not projective
    p = code(2, [[1, 0, 0, 1, 1, 0, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 0, 1, 1, 1]])
    r = code(2, [[1, 0, 0, 1, 1, 1, 0], [0, 1, 0, 0, 1, 1, 1], [0, 0, 1, 1, 0, 1, 1]])
    assert is_projective(p) and is_projective(r)
    with pytest.raises(CliqueError):
        is_maximal_clique_oracle([p, p])
    with pytest.raises(ValueError):
        is_maximal_clique_oracle([p], scope="nearby")


def test_oracle_witness_extends():
    g = next(x for x in GOLDENS if x["name"] == "q4_two_codes_not_maximal")
    s = rowspace(MatFq.from_rows(get_field(4), g["matrix"]))
    members = star_pi(s)
    ok, wit = is_maximal_clique_oracle(members)
    assert not ok and is_extending_witness(wit, members)
    listed = rowspace(MatFq.from_rows(get_field(4), g["expect"]["witness"]))
    assert is_extending_witness(listed, members)


@pytest.mark.parametrize("q,n,k", [(2, 5, 3), (3, 5, 3), (4, 4, 2)])
def test_local_scope_finds_the_full_scan_witness(q, n, k):
    f = get_field(q)
    for s in enumerate_grassmannian(GrassmannParams(f, n, k - 1)):
        members = star_pi(s)
        if members:
            assert is_maximal_clique_oracle(members, scope="local") == is_maximal_clique_oracle(members)


def test_local_candidates_cover_single_member():
    f = get_field(3)
    u = projective_universe(f, 5, 3)[0]
    cands = set(local_candidates([u]))
    neighbours = {v for v in projective_universe(f, 5, 3) if v != u and len(v.codewords & u.codewords) == 9}
    assert neighbours <= cands


def test_kind_invariant_under_column_permutation():
    f = get_field(3)
    cores = list(enumerate_grassmannian(GrassmannParams(f, 5, 2)))
    for i, s in enumerate(cores[::11]):
        sigma = list(itertools.permutations(range(5)))[(7 * i) % 120]
        t = rowspace(permute_columns(s.matrix, sigma))
        assert theorem_kind(t) == theorem_kind(s)
        assert len(star_pi(t)) == len(star_pi(s))


def test_census_laws_small():
    c = census(GrassmannParams(get_field(2), 6, 3))
    assert c.mismatches == 0 and c.w_law_violations == 0
    for r in c.rows:
        # a star bigger than a line of the top is always maximal
        if r.actual_size > 2 + 1:
            assert r.oracle_maximal is True
        # l(S) = k - 1 over GF(2) leaves at most one extension
        if r.c == 0 and r.l_s == 2:
            assert r.actual_size <= 1


def test_q2_three_core_classes_in_n5():
    """No core over GF(2) with n = 5, k = 3 ends up a maximal star."""
    c = census(GrassmannParams(get_field(2), 5, 3))
    assert c.summary()["kinds"] == {"Empty": 95, "NotMaximal": 60, "Star": 0}


def test_census_rows_independent_of_jobs():
    p = GrassmannParams(get_field(2), 5, 3)
    assert census(p, jobs=1).rows == census(p, jobs=2).rows


def _maximal_cliques(vertices, nbrs):
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(nbrs[v] & p))
        for v in list(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(vertices), set())
    return out


@pytest.mark.parametrize("q", [3, 4])
def test_every_maximal_clique_is_a_star_or_a_top(q):
    f = get_field(q)
    verts = projective_universe(f, 4, 2)
    nbrs = {v: {w for w in verts if w != v and len(v.codewords & w.codewords) == q} for v in verts}
    stars = {frozenset(star_pi(s)) for s in enumerate_grassmannian(GrassmannParams(f, 4, 1))}
    tops = {frozenset(top_pi(u, 2)) for u in enumerate_grassmannian(GrassmannParams(f, 4, 3))}
    cliques = _maximal_cliques(verts, nbrs)
    assert cliques
    for cl in cliques:
        assert cl in stars or cl in tops


def test_connectivity():
    f2 = get_field(2)
    assert graph_stats(GrassmannParams(f2, 5, 3)).to_dict() == {"vertices": 15, "edges": 45, "components": 1}
    assert graph_stats(GrassmannParams(get_field(3), 4, 2)).components == 1
    assert component_count(GrassmannParams(get_field(7), 4, 2)) == 1


def test_empty_graph():
    assert graph_stats(GrassmannParams(get_field(2), 4, 2)).to_dict() == {"vertices": 0, "edges": 0, "components": 0}


def test_analyze_report_fields():
    rep = analyze(code(4, [[1, 1, 1, 1]]))
    d = rep.to_dict()
    assert d["kind"] == "Star" and d["equals_top"] is True and d["agree"] is True
    assert d["actual_size"] == d["predicted_size"] == 2
    assert d["oracle_witness"] is None
    assert contains(rep.theorem_class.top_witness, rep.s)
