"""Column profile of a code and the predicates built on it.

Columns of the canonical generator matrix are grouped into proportionality
classes. Zero columns are not a class; they are counted separately as
``zero_count``. So ``class_count`` and ``big_l`` range over nonzero classes
only, which lets the degenerate-code formulas read the same profile after
the zero column is punctured away.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matfq import MatrixError, Row, Subspace, normalize, subspace_from_rows


@dataclass(frozen=True)
class ColumnClass:
    rep: Row  # first nonzero coordinate is 1
    size: int
    columns: tuple[int, ...]


@dataclass(frozen=True)
class ColumnProfile:
    zero_count: int
    zero_columns: tuple[int, ...]
    classes: tuple[ColumnClass, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def big_l(self) -> tuple[ColumnClass, ...]:
        return tuple(c for c in self.classes if c.size > 1)

    @property
    def max_l(self) -> int:
        return max((c.size for c in self.classes), default=0)

    def size_multiset(self) -> list[int]:
        return sorted(c.size for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "c": self.zero_count,
            "classes": [{"rep": list(c.rep), "l": c.size} for c in self.classes],
            "lS": self.class_count,
            "L_size": len(self.big_l),
        }


def column_profile(s: Subspace) -> ColumnProfile:
    if s.dim < 1:
        raise MatrixError("profile needs a code of dimension >= 1")
    field = s.field
    zeros = []
    groups: dict[Row, list[int]] = {}
    for j in range(s.n):
        col = tuple(r[j] for r in s.basis)
        rep = normalize(field, col)
        if not any(rep):
            zeros.append(j)
        else:
            groups.setdefault(rep, []).append(j)
    classes = tuple(ColumnClass(rep, len(cols), tuple(cols)) for rep, cols in groups.items())
    return ColumnProfile(len(zeros), tuple(zeros), classes)


def is_nondegenerate(s: Subspace) -> bool:
    return column_profile(s).zero_count == 0


def is_projective(s: Subspace) -> bool:
    prof = column_profile(s)
    return prof.zero_count == 0 and prof.max_l == 1


def puncture_zero(s: Subspace) -> Subspace:
    """Delete the single zero coordinate of a code (ambient n -> n-1)."""
    prof = column_profile(s)
    if prof.zero_count != 1:
        raise MatrixError(f"puncture needs exactly one zero column, found {prof.zero_count}")
    z = prof.zero_columns[0]
    rows = [r[:z] + r[z + 1 :] for r in s.basis]
    return subspace_from_rows(s.field, rows, s.n - 1)
