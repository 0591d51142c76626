"""Stars and tops of the projective-code graph, and their verification.

For a (k-1)-dimensional code S the clique ``star_pi(S)`` holds every
projective k-code containing S. Its size is predicted from the column
profile of S, and whether it is a maximal clique is decided by a case table
over (q, n, k, number of classes, number of classes of size > 1). A
brute-force scan over all projective k-codes is the ground truth that both
predictions are checked against.

Extension vectors: with P the pivot columns of S's RREF basis, every code
Q containing S meets the coordinate subspace {x : x_P = 0} in exactly one
line. The normalized generators of those lines, restricted to the Q that are
projective, form the set W; ``w_dim`` is the dimension of their span.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .codeprof import ColumnProfile, column_profile, is_projective, puncture_zero
from .gf import FieldSpec, get_field
from .grassmann import (
    GrassmannParams,
    ParameterError,
    adjacent,
    check_guard,
    complement_support,
    enumerate_grassmannian,
    gaussian_binomial,
    normalized_vectors,
    q_number,
    star_superspaces,
    top_subspaces,
)
from .matfq import MatrixError, Row, Subspace, rank_of, span, subspace_from_rows

log = logging.getLogger(__name__)

FULL_SCAN_LIMIT = 50_000


class Kind(str, Enum):
    EMPTY = "Empty"
    NOT_MAXIMAL = "NotMaximal"
    STAR = "Star"


class CliqueError(ValueError):
    """Oracle input is empty or not a clique of projective codes."""


@dataclass(frozen=True)
class Classification:
    kind: Kind
    equals_top: bool = False
    top_witness: Subspace | None = None


def _check_core(s: Subspace) -> tuple[int, int]:
    k, n = s.dim + 1, s.n
    if s.dim < 1:
        raise ParameterError("S must have dimension >= 1")
    if not 1 < k < n - 1:
        raise ParameterError(f"need 1 < k < n-1, got n={n}, k={k}")
    return n, k


def _rows_projective(field: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> bool:
    inv, mul = field.inv_table, field.mul_table
    seen = set()
    for j in range(n):
        col = [r[j] for r in rows]
        lead = next((x for x in col if x), 0)
        if not lead:
            return False
        sc = mul[inv[lead]]
        key = tuple(sc[x] for x in col)
        if key in seen:
            return False
        seen.add(key)
    return True


# -- enumeration ---------------------------------------------------------------


def extension_vectors(s: Subspace) -> list[Row]:
    """Normalized w, zero on the pivot columns of s, with [S; w] projective."""
    _check_core(s)
    rows = list(s.basis)
    return [
        w
        for w in normalized_vectors(s.field, s.n, complement_support(s))
        if _rows_projective(s.field, rows + [w], s.n)
    ]


def star_pi(s: Subspace) -> list[Subspace]:
    """All projective k-codes containing the (k-1)-code s, canonically sorted."""
    out = [subspace_from_rows(s.field, s.basis + (w,), s.n) for w in extension_vectors(s)]
    out.sort(key=Subspace.sort_key)
    return out


def top_pi(u: Subspace, k: int | None = None) -> list[Subspace]:
    """Projective k-codes inside the (k+1)-space u."""
    if k is None:
        k = u.dim - 1
    return [t for t in top_subspaces(u, k) if is_projective(t)]


def w_dim(s: Subspace) -> int:
    ws = extension_vectors(s)
    return rank_of(s.field, ws, s.n) if ws else 0


# -- predictions ---------------------------------------------------------------


def _falling(q: int, prof: ColumnProfile) -> int:
    """Product over classes of size l > 1 of (q-1)(q-2)...(q-l+1)."""
    out = 1
    for c in prof.big_l:
        for i in range(1, c.size):
            out *= q - i
    return out


def predicted_star_size(s: Subspace) -> int:
    """|star_pi(s)| read off the column profile."""
    q, n, k = s.field.q, s.n, s.dim + 1
    prof = column_profile(s)
    if prof.zero_count >= 2 or prof.max_l > q:
        return 0
    if prof.zero_count == 0:
        if prof.max_l == 1:
            return q_number(n - k + 1, q)
        num = _falling(q, prof) * q ** (prof.class_count - k + 1)
        assert num % (q - 1) == 0
        return num // (q - 1)
    pprof = column_profile(puncture_zero(s))
    if pprof.max_l == 1:
        return q ** (n - k)
    return _falling(q, pprof) * q ** (pprof.class_count - k + 1)


def _nondegenerate_star(q: int, n: int, k: int, ls: int, big: int) -> bool:
    if q == 2:
        return (ls == k == 3 and n == 6) or ls >= k + 1
    if q == 3:
        return (ls == k - 1 and big >= 3) or (ls == k and big >= 2) or ls >= k + 1
    if q == 4:
        return (ls == k - 1 == 1) or (ls == k - 1 and big >= 2) or ls >= k
    return True


def _degenerate_star(q: int, n: int, k: int, ls: int, big: int) -> bool:
    if q == 2:
        return (ls == k == 3 and k < n - 2) or (ls >= k + 1 and k < n - 2)
    if q == 3:
        return (ls == k - 1 == 1) or (ls == k - 1 and big >= 2) or ls >= k
    return True


def theorem_kind(s: Subspace) -> Kind:
    """Maximality of star_pi(s) decided from the profile alone."""
    n, k = _check_core(s)
    q = s.field.q
    prof = column_profile(s)
    if predicted_star_size(s) == 0:
        return Kind.EMPTY
    if prof.zero_count == 0:
        if prof.max_l == 1:
            return Kind.STAR
        ok = _nondegenerate_star(q, n, k, prof.class_count, len(prof.big_l))
        return Kind.STAR if ok else Kind.NOT_MAXIMAL
    pprof = column_profile(puncture_zero(s))
    if pprof.max_l == 1:
        return Kind.STAR
    ok = _degenerate_star(q, n, k, pprof.class_count, len(pprof.big_l))
    return Kind.STAR if ok else Kind.NOT_MAXIMAL


def classify_star(s: Subspace) -> Classification:
    kind = theorem_kind(s)
    if kind is not Kind.STAR:
        return Classification(kind)
    ws = extension_vectors(s)
    if rank_of(s.field, ws, s.n) != 2:
        return Classification(kind)
    # equals_top follows dim<W> = 2, not the case table
    return Classification(kind, True, span(s, *ws))


# -- oracle --------------------------------------------------------------------


def _projective_by_projection(words: Iterable[Row], n: int, q: int) -> bool:
    """Projective iff every coordinate and coordinate pair is onto."""
    words = list(words)
    for i in range(n):
        if len({w[i] for w in words}) != q:
            return False
    for i, j in itertools.combinations(range(n), 2):
        if len({(w[i], w[j]) for w in words}) != q * q:
            return False
    return True


@lru_cache(maxsize=8)
def projective_universe(field: FieldSpec, n: int, k: int, force: bool = False) -> tuple[Subspace, ...]:
    """Every projective k-code of GF(q)^n in canonical enumeration order.

    Projectivity here is judged from the codeword set, independently of the
    column-profile code under test.
    """
    check_guard(gaussian_binomial(n, k, field.q), force)
    return tuple(
        u
        for u in enumerate_grassmannian(GrassmannParams(field, n, k))
        if _projective_by_projection(u.codewords, n, field.q)
    )


def local_candidates(members: Sequence[Subspace]) -> list[Subspace]:
    """Every projective k-code that could be adjacent to all members.

    Two distinct hyperplanes of a code Q adjacent to both A and B either
    coincide with A & B or span Q inside A + B. So a common neighbour of
    two members lies in the star of their meet or the top of their sum; a
    neighbour of a single member lies in a star through one of its
    hyperplanes. Sorted in enumeration order, so the first witness found
    here is the first one a full scan would find.
    """
    first = members[0]
    k = first.dim
    if len(members) == 1:
        pool = set()
        for h in top_subspaces_of(first):
            pool.update(star_superspaces(h))
    else:
        a, b = members[0], members[1]
        meet = subspace_from_rows(a.field, _meet_rows(a, b), a.n)
        pool = set(top_subspaces(span(a, b), k)) | set(star_superspaces(meet))
    q = first.field.q
    out = [u for u in pool if _projective_by_projection(u.codewords, u.n, q)]
    out.sort(key=Subspace.enumeration_key)
    return out


def top_subspaces_of(u: Subspace) -> list[Subspace]:
    """Hyperplanes of u."""
    if u.dim == 1:
        return []
    return top_subspaces(u, u.dim - 1)


def _meet_rows(a: Subspace, b: Subspace) -> list[Row]:
    return sorted(a.codewords & b.codewords)


def _meets_in_hyperplane(a: Subspace, b: Subspace, target: int) -> bool:
    return len(a.codewords & b.codewords) == target


def is_maximal_clique_oracle(
    members: Sequence[Subspace],
    universe: Sequence[Subspace] | None = None,
    scope: str = "full",
    force: bool = False,
) -> tuple[bool, Subspace | None]:
    """Scan projective k-codes for one adjacent to every member.

    Returns ``(True, None)`` if none exists, else ``(False, first_witness)``
    in enumeration order. Adjacency is |A & B| == q**(k-1) on codeword sets.
    ``scope="full"`` scans every projective k-code (or ``universe`` when
    given); ``scope="local"`` scans only :func:`local_candidates`.
    """
    if not members:
        raise CliqueError("empty clique")
    first = members[0]
    field, n, k = first.field, first.n, first.dim
    q = field.q
    target = q ** (k - 1)
    for m in members:
        if m.field != field or m.n != n or m.dim != k:
            raise CliqueError("members differ in field, ambient dimension or dimension")
        if not _projective_by_projection(m.codewords, n, q):
            raise CliqueError(f"member is not projective: {m}")
    for a, b in itertools.combinations(members, 2):
        if a == b or not _meets_in_hyperplane(a, b, target):
            raise CliqueError(f"not a clique: {a} and {b} are not adjacent")
    if universe is None:
        if scope == "local":
            universe = local_candidates(members)
        elif scope == "full":
            universe = projective_universe(field, n, k, force)
        else:
            raise ValueError(f"unknown oracle scope {scope!r}")
    inside = set(members)
    for cand in universe:
        if cand in inside:
            continue
        if all(_meets_in_hyperplane(cand, m, target) for m in members):
            return False, cand
    return True, None


def is_extending_witness(cand: Subspace, members: Sequence[Subspace]) -> bool:
    """cand is a projective code outside ``members`` adjacent to all of them."""
    return (
        is_projective(cand)
        and cand not in set(members)
        and all(cand.dim == m.dim and adjacent(cand, m) for m in members)
    )


# -- reports -------------------------------------------------------------------


def _basis_list(s: Subspace | None) -> list[list[int]] | None:
    return None if s is None else [list(r) for r in s.basis]


@dataclass
class StarReport:
    s: Subspace
    profile: ColumnProfile
    predicted_size: int
    members: list[Subspace]
    extension_vectors: list[Row]
    w_dim: int
    theorem_class: Classification
    oracle_maximal: bool | None
    oracle_witness: Subspace | None

    @property
    def agree(self) -> bool:
        if self.predicted_size != len(self.members):
            return False
        if not self.members:
            return self.theorem_class.kind is Kind.EMPTY
        return (self.theorem_class.kind is Kind.STAR) == self.oracle_maximal

    def to_dict(self) -> dict:
        return {
            "q": self.s.field.q,
            "n": self.s.n,
            "k": self.s.dim + 1,
            "s": _basis_list(self.s),
            "profile": self.profile.to_dict(),
            "predicted_size": self.predicted_size,
            "actual_size": len(self.members),
            "members": [_basis_list(m) for m in self.members],
            "extension_vectors": [list(w) for w in self.extension_vectors],
            "w_dim": self.w_dim,
            "kind": self.theorem_class.kind.value,
            "equals_top": self.theorem_class.equals_top,
            "top_witness": _basis_list(self.theorem_class.top_witness),
            "oracle_maximal": self.oracle_maximal,
            "oracle_witness": _basis_list(self.oracle_witness),
            "agree": self.agree,
        }


def analyze(
    s: Subspace,
    run_oracle: bool = True,
    universe: Sequence[Subspace] | None = None,
    force: bool = False,
    scope: str = "auto",
) -> StarReport:
    """Full report for one core S.

    ``scope="auto"`` runs the full oracle scan when the Grassmannian of
    k-codes has at most FULL_SCAN_LIMIT members and the local scan beyond.
    """
    n, k = _check_core(s)
    ws = extension_vectors(s)
    members = sorted(
        (subspace_from_rows(s.field, s.basis + (w,), s.n) for w in ws), key=Subspace.sort_key
    )
    maximal = witness = None
    if run_oracle and members:
        if scope == "auto":
            full = gaussian_binomial(n, k, s.field.q) <= FULL_SCAN_LIMIT
            scope = "full" if full else "local"
        maximal, witness = is_maximal_clique_oracle(members, universe, scope, force)
    return StarReport(
        s=s,
        profile=column_profile(s),
        predicted_size=predicted_star_size(s),
        members=members,
        extension_vectors=ws,
        w_dim=rank_of(s.field, ws, s.n) if ws else 0,
        theorem_class=classify_star(s),
        oracle_maximal=maximal,
        oracle_witness=witness,
    )


# -- census --------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    index: int
    s: tuple[Row, ...]
    c: int
    class_sizes: tuple[int, ...]
    l_s: int
    l_size: int
    predicted_size: int
    actual_size: int
    w_dim: int
    kind: str
    equals_top: bool
    oracle_maximal: bool | None
    w_law_ok: bool
    agree: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["s"] = [list(r) for r in self.s]
        d["class_sizes"] = list(self.class_sizes)
        return d


CSV_COLUMNS = [
    "index",
    "s",
    "c",
    "class_sizes",
    "l_s",
    "l_size",
    "predicted_size",
    "actual_size",
    "w_dim",
    "kind",
    "equals_top",
    "oracle_maximal",
    "w_law_ok",
    "agree",
]


def w_laws_hold(report: StarReport) -> bool:
    """dim<W> = 1 => not maximal; > 2 => star; star with 2 => equals its top."""
    kind = report.theorem_class.kind
    verdicts = [kind]
    if report.oracle_maximal is not None:
        verdicts.append(Kind.STAR if report.oracle_maximal else Kind.NOT_MAXIMAL)
    wd = report.w_dim
    if (wd == 0) != (not report.members):
        return False
    if wd == 1 and (len(report.members) != 1 or any(v is Kind.STAR for v in verdicts)):
        return False
    if wd > 2 and any(v is not Kind.STAR for v in verdicts):
        return False
    if wd == 2 and kind is Kind.STAR:
        tw = report.theorem_class.top_witness
        if tw is None or set(top_pi(tw)) != set(report.members):
            return False
    return True


def census_row(index: int, s: Subspace, universe: Sequence[Subspace] | None = None) -> CensusRow:
    rep = analyze(s, universe=universe)
    prof = rep.profile
    return CensusRow(
        index=index,
        s=s.basis,
        c=prof.zero_count,
        class_sizes=tuple(prof.size_multiset()),
        l_s=prof.class_count,
        l_size=len(prof.big_l),
        predicted_size=rep.predicted_size,
        actual_size=len(rep.members),
        w_dim=rep.w_dim,
        kind=rep.theorem_class.kind.value,
        equals_top=rep.theorem_class.equals_top,
        oracle_maximal=rep.oracle_maximal,
        w_law_ok=w_laws_hold(rep),
        agree=rep.agree,
    )


def _census_shard(
    q: int, modulus: tuple[int, ...] | None, n: int, k: int, start: int, stop: int, force: bool
) -> list[CensusRow]:
    field = get_field(q, modulus)
    cores = enumerate_grassmannian(GrassmannParams(field, n, k - 1))
    universe = projective_universe(field, n, k, force)
    return [
        census_row(i, s, universe)
        for i, s in zip(range(start, stop), itertools.islice(cores, start, stop))
    ]


@dataclass
class Census:
    params: GrassmannParams
    rows: list[CensusRow]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def mismatches(self) -> int:
        return sum(not r.agree for r in self.rows)

    @property
    def w_law_violations(self) -> int:
        return sum(not r.w_law_ok for r in self.rows)

    def summary(self) -> dict:
        kinds = Counter(r.kind for r in self.rows)
        return {
            "q": self.params.q,
            "n": self.params.n,
            "k": self.params.k,
            "rows": len(self.rows),
            "kinds": {k.value: kinds.get(k.value, 0) for k in Kind},
            "equals_top": sum(r.equals_top for r in self.rows),
            "oracle_maximal": sum(r.oracle_maximal is True for r in self.rows),
            "mismatches": self.mismatches,
            "w_law_violations": self.w_law_violations,
        }


def census(params: GrassmannParams, jobs: int = 1, force: bool = False) -> Census:
    """Classify every (k-1)-code S and check each against the oracle.

    Rows come back in canonical enumeration order whatever ``jobs`` is.
    """
    params.require_graph_range()
    field, n, k, q = params.field, params.n, params.k, params.q
    total = gaussian_binomial(n, k - 1, q)
    check_guard(total, force)
    check_guard(gaussian_binomial(n, k, q), force)
    t0 = time.perf_counter()
    modulus = field.modulus or None
    if jobs <= 1:
        rows = _census_shard(q, modulus, n, k, 0, total, force)
    else:
        nshards = max(1, min(total, jobs * 4))
        bounds = [total * i // nshards for i in range(nshards + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_census_shard, q, modulus, n, k, a, b, force)
                for a, b in zip(bounds, bounds[1:])
                if b > a
            ]
            rows = [r for fut in futures for r in fut.result()]
        rows.sort(key=lambda r: r.index)
    elapsed = time.perf_counter() - t0
    log.info("census q=%d n=%d k=%d: %d rows in %.2fs", q, n, k, len(rows), elapsed)
    return Census(params, rows, elapsed)


# -- whole graph ---------------------------------------------------------------


@dataclass(frozen=True)
class GraphStats:
    vertices: int
    edges: int
    components: int

    def to_dict(self) -> dict:
        return asdict(self)


def graph_stats(params: GrassmannParams, force: bool = False) -> GraphStats:
    """Vertex, edge and component counts of the projective-code graph.

    Every edge lies in exactly one star (the intersection of its ends), so
    adjacency lists are assembled star by star, then traversed breadth-first.
    """
    params.require_graph_range()
    field, n, k, q = params.field, params.n, params.k, params.q
    check_guard(gaussian_binomial(n, k, q), force)
    check_guard(gaussian_binomial(n, k - 1, q), force)
    vertices = [u for u in enumerate_grassmannian(params) if is_projective(u)]
    nbrs: dict[Subspace, set[Subspace]] = {v: set() for v in vertices}
    edges = 0
    for s in enumerate_grassmannian(GrassmannParams(field, n, k - 1)):
        mem = star_pi(s)
        edges += len(mem) * (len(mem) - 1) // 2
        for a in mem:
            nbrs[a].update(mem)
    seen: set[Subspace] = set()
    components = 0
    for v in vertices:
        if v in seen:
            continue
        components += 1
        seen.add(v)
        queue = deque([v])
        while queue:
            cur = queue.popleft()
            for w in nbrs[cur]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return GraphStats(len(vertices), edges, components)


def component_count(params: GrassmannParams, force: bool = False) -> int:
    return graph_stats(params, force).components


__all__ = [
    "Census",
    "CensusRow",
    "Classification",
    "CliqueError",
    "GraphStats",
    "Kind",
    "MatrixError",
    "StarReport",
    "analyze",
    "census",
    "classify_star",
    "component_count",
    "extension_vectors",
    "graph_stats",
    "is_extending_witness",
    "is_maximal_clique_oracle",
    "predicted_star_size",
    "projective_universe",
    "star_pi",
    "theorem_kind",
    "top_pi",
    "w_dim",
]
