"""Dense matrices over GF(q), RREF, and canonical subspaces (linear codes)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .gf import FieldMismatchError, FieldSpec

Row = tuple[int, ...]


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class MatFq:
    """Row-major matrix of element codes over ``field``."""

    field: FieldSpec
    entries: tuple[Row, ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise MatrixError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        q = self.field.q
        for row in self.entries:
            if len(row) != width:
                raise MatrixError("ragged matrix rows")
            for x in row:
                if not 0 <= x < q:
                    raise MatrixError(f"entry {x} is not an element code of GF({q})")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable[int]]) -> MatFq:
        return cls(field, tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> Row:
        return tuple(r[j] for r in self.entries)

    def stack(self, other: MatFq) -> MatFq:
        if other.field != self.field:
            raise FieldMismatchError("cannot stack matrices over different fields")
        if other.cols != self.cols:
            raise MatrixError("column count mismatch")
        return MatFq(self.field, self.entries + other.entries)

    def __matmul__(self, other: MatFq) -> MatFq:
        if other.field != self.field:
            raise FieldMismatchError("cannot multiply matrices over different fields")
        if self.cols != other.rows:
            raise MatrixError("shape mismatch")
        add, mul = self.field.add_table, self.field.mul_table
        out = []
        for row in self.entries:
            acc = [0] * other.cols
            for a, orow in zip(row, other.entries):
                if a:
                    ma = mul[a]
                    acc = [add[x][ma[y]] for x, y in zip(acc, orow)]
            out.append(tuple(acc))
        return MatFq(self.field, tuple(out))


def _rref_rows(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan elimination; returns (nonzero rref rows, pivot columns)."""
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        scale = mul[inv[work[r][c]]]
        prow = [scale[x] for x in work[r]]
        work[r] = prow
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = mul[neg[work[i][c]]]
                work[i] = [add[x][f[y]] for x, y in zip(work[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank_of(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> int:
    return len(_rref_rows(field, rows, ncols)[1])


def rref(m: MatFq) -> tuple[MatFq, int, list[int]]:
    """Reduced row echelon form, keeping the shape (zero rows at the bottom)."""
    nz, pivots = _rref_rows(m.field, m.entries, m.cols)
    full = [tuple(r) for r in nz] + [(0,) * m.cols] * (m.rows - len(nz))
    return MatFq(m.field, tuple(full)), len(pivots), pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n stored by its unique RREF basis.

    Two Subspace values are equal iff their bases are identical, so hashing
    and deduplication work directly on codes.
    """

    field: FieldSpec
    n: int
    basis: tuple[Row, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> MatFq:
        return MatFq(self.field, self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    @cached_property
    def codewords(self) -> frozenset[Row]:
        """Every vector of the subspace (q**dim of them)."""
        f = self.field
        add, mul = f.add_table, f.mul_table
        words = set()
        for coefs in itertools.product(range(f.q), repeat=self.dim):
            v = [0] * self.n
            for a, row in zip(coefs, self.basis):
                if a:
                    ma = mul[a]
                    v = [add[x][ma[y]] for x, y in zip(v, row)]
            words.add(tuple(v))
        return frozenset(words)

    def sort_key(self) -> tuple:
        return (self.dim, self.basis)

    def enumeration_key(self) -> tuple:
        """Rank key matching the order of ``enumerate_grassmannian``."""
        return (self.dim, self.pivots, tuple(x for r in self.basis for x in r))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(map(str, r)) for r in self.basis)
        return f"Subspace(q={self.field.q}, n={self.n}, [{body}])"


def subspace_from_rows(field: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> Subspace:
    """Canonical span of ``rows``; the zero span is allowed here."""
    nz, _ = _rref_rows(field, rows, n)
    return Subspace(field, n, tuple(tuple(r) for r in nz))


def rowspace(m: MatFq) -> Subspace:
    s = subspace_from_rows(m.field, m.entries, m.cols)
    if s.dim == 0:
        raise MatrixError("zero matrix spans the zero subspace (unsupported code)")
    return s


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.field != b.field:
        raise FieldMismatchError("subspaces over different fields")
    if a.n != b.n:
        raise MatrixError(f"ambient dimension mismatch: {a.n} vs {b.n}")


def sum_dim(a: Subspace, b: Subspace) -> int:
    _check_compatible(a, b)
    return rank_of(a.field, a.basis + b.basis, a.n)


def intersect_dim(a: Subspace, b: Subspace) -> int:
    return a.dim + b.dim - sum_dim(a, b)


def contains(outer: Subspace, inner: Subspace) -> bool:
    return sum_dim(outer, inner) == outer.dim


def span(*parts: Subspace | Sequence[int]) -> Subspace:
    """Span of subspaces and/or raw vectors (all over one field and n)."""
    subs = [p for p in parts if isinstance(p, Subspace)]
    if not subs:
        raise MatrixError("span needs at least one Subspace to fix the field")
    field, n = subs[0].field, subs[0].n
    rows: list[Sequence[int]] = []
    for p in parts:
        if isinstance(p, Subspace):
            _check_compatible(subs[0], p)
            rows.extend(p.basis)
        else:
            if len(p) != n:
                raise MatrixError("vector length mismatch")
            rows.append(p)
    return subspace_from_rows(field, rows, n)


def permute_columns(m: MatFq, sigma: Sequence[int]) -> MatFq:
    """Column j of the result is column ``sigma[j]`` of ``m``."""
    if sorted(sigma) != list(range(m.cols)):
        raise MatrixError(f"not a permutation of range({m.cols}): {list(sigma)}")
    return MatFq(m.field, tuple(tuple(r[s] for s in sigma) for r in m.entries))


def normalize(field: FieldSpec, v: Sequence[int]) -> Row:
    """Scale ``v`` so its first nonzero coordinate is 1 (zero stays zero)."""
    for x in v:
        if x:
            scale = field.mul_table[field.inv_table[x]]
            return tuple(scale[y] for y in v)
    return tuple(v)
