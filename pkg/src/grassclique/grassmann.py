"""Grassmannians over GF(q): counting, enumeration, stars and tops."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator

from .gf import FieldSpec
from .matfq import MatrixError, Subspace, intersect_dim, subspace_from_rows

DEFAULT_GUARD = 10**7


class GuardError(RuntimeError):
    """Requested enumeration exceeds the size guard."""


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class GrassmannParams:
    field: FieldSpec
    n: int
    k: int

    @property
    def q(self) -> int:
        return self.field.q

    def require_graph_range(self) -> None:
        if not 1 < self.k < self.n - 1:
            raise ParameterError(f"need 1 < k < n-1, got n={self.n}, k={self.k}")


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if n < 0:
        raise ParameterError(f"negative n: {n}")
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def q_number(n: int, q: int) -> int:
    """[n]_q = (q^n - 1)/(q - 1)."""
    return (q**n - 1) // (q - 1)


def guard_limit() -> int:
    raw = os.environ.get("GRASSCLIQUE_GUARD")
    return int(raw) if raw else DEFAULT_GUARD


def check_guard(count: int, force: bool = False) -> None:
    if not force and count > guard_limit():
        raise GuardError(
            f"enumeration of {count} subspaces exceeds the guard {guard_limit()}"
            " (use --force or raise GRASSCLIQUE_GUARD)"
        )


def enumerate_grassmannian(params: GrassmannParams) -> Iterator[Subspace]:
    """Yield every k-subspace of GF(q)^n once, in canonical order.

    Order: pivot column sets lexicographically (itertools.combinations),
    then the free entries row-major, each ranging over codes 0..q-1
    lexicographically.
    """
    field, n, k = params.field, params.n, params.k
    if not 0 < k <= n:
        raise ParameterError(f"need 0 < k <= n, got n={n}, k={k}")
    q = field.q
    for pivots in itertools.combinations(range(n), k):
        pivset = set(pivots)
        slots = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivset]
        for free in itertools.product(range(q), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(slots, free):
                rows[i][j] = x
            yield Subspace(field, n, tuple(tuple(r) for r in rows))


def normalized_vectors(field: FieldSpec, n: int, support: list[int]) -> Iterator[tuple[int, ...]]:
    """Projective representatives (first nonzero = 1) supported on ``support``.

    Ordered by leading position, then remaining coordinates lexicographically.
    Yields (q^len(support) - 1)/(q - 1) vectors.
    """
    q = field.q
    for t, lead in enumerate(support):
        rest = support[t + 1 :]
        for vals in itertools.product(range(q), repeat=len(rest)):
            v = [0] * n
            v[lead] = 1
            for j, x in zip(rest, vals):
                v[j] = x
            yield tuple(v)


def complement_support(s: Subspace) -> list[int]:
    """Non-pivot coordinates of s; their unit vectors span a complement."""
    piv = set(s.pivots)
    return [j for j in range(s.n) if j not in piv]


def star_superspaces(s: Subspace) -> list[Subspace]:
    """All (dim s + 1)-dimensional superspaces of s, in canonical order."""
    if s.dim >= s.n:
        raise MatrixError("the full space has no proper superspaces")
    out = [
        subspace_from_rows(s.field, s.basis + (w,), s.n)
        for w in normalized_vectors(s.field, s.n, complement_support(s))
    ]
    out.sort(key=Subspace.sort_key)
    return out


def top_subspaces(u: Subspace, k: int) -> list[Subspace]:
    """All k-dimensional subspaces (hyperplanes) of the (k+1)-space u."""
    if u.dim != k + 1:
        raise MatrixError(f"top needs dim u = k+1 = {k + 1}, got {u.dim}")
    field = u.field
    mul, add, neg = field.mul_table, field.add_table, field.neg_table
    out = []
    # each hyperplane is the kernel of a functional f on coefficient space
    for f in normalized_vectors(field, k + 1, list(range(k + 1))):
        t = next(i for i, x in enumerate(f) if x)
        rows = []
        for j in range(k + 1):
            if j == t:
                continue
            # coefficient vector e_j - f_j e_t
            coef = [0] * (k + 1)
            coef[j] = 1
            coef[t] = neg[f[j]]
            v = [0] * u.n
            for a, brow in zip(coef, u.basis):
                if a:
                    ma = mul[a]
                    v = [add[x][ma[y]] for x, y in zip(v, brow)]
            rows.append(v)
        out.append(subspace_from_rows(field, rows, u.n))
    out.sort(key=Subspace.sort_key)
    return out


def adjacent(a: Subspace, b: Subspace) -> bool:
    """Grassmann-graph adjacency: (k-1)-dimensional intersection."""
    if a.dim != b.dim:
        raise MatrixError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return intersect_dim(a, b) == a.dim - 1


__all__ = [
    "GrassmannParams",
    "GuardError",
    "ParameterError",
    "adjacent",
    "check_guard",
    "complement_support",
    "enumerate_grassmannian",
    "gaussian_binomial",
    "normalized_vectors",
    "q_number",
    "star_superspaces",
    "top_subspaces",
]
