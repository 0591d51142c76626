"""Finite fields GF(p^e) for q <= 32.

Elements are integer codes: ``code = sum(c_i * p**i)`` stands for the
polynomial ``sum(c_i * x**i)`` in the polynomial basis. In GF(4) with the
default modulus x^2+x+1 the element x is code 2 and x+1 is code 3.

All arithmetic goes through q x q tables built once per field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

MAX_Q = 32

# constant term first, monic
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (1, 1, 1),  # x^2 + x + 1
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
}


class FieldError(ValueError):
    """Invalid field parameters."""


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise FieldError."""
    if q < 2:
        raise FieldError(f"q must be a prime power >= 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not _is_prime(p):
                raise FieldError(f"{q} is not a prime power")
            return p, e
    raise FieldError(f"{q} is not a prime power")  # pragma: no cover


def supported_orders() -> list[int]:
    out = []
    for q in range(2, MAX_Q + 1):
        try:
            prime_power(q)
        except FieldError:
            continue
        out.append(q)
    return out


# -- polynomials over GF(p), coefficient lists, constant term first ----------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    b = _poly_trim([c % p for c in b])
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive factor search: no monic divisor of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            lower = [(code // p**i) % p for i in range(d)]
            if not _poly_mod(poly, lower + [1], p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^e) with a fixed monic irreducible modulus.

    Equality and hashing use ``(p, e, modulus)`` only; the tables are derived.
    """

    p: int
    e: int
    modulus: tuple[int, ...] = ()
    add_table: tuple[tuple[int, ...], ...] = dc_field(default=(), repr=False)
    mul_table: tuple[tuple[int, ...], ...] = dc_field(default=(), repr=False)
    neg_table: tuple[int, ...] = dc_field(default=(), repr=False)
    inv_table: tuple[int, ...] = dc_field(default=(), repr=False)

    @property
    def q(self) -> int:
        return self.p**self.e

    def _key(self) -> tuple:
        return (self.p, self.e, self.modulus)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.q}, modulus={list(self.modulus)})"

    # scalar helpers on raw codes; hot loops use the tables directly

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.inv_table[a]

    def pow(self, a: int, n: int) -> int:
        out = 1
        for _ in range(n):
            out = self.mul_table[out][a]
        return out

    def elem(self, code: int) -> Elem:
        return Elem(self, code)

    def elements(self) -> list[Elem]:
        return [Elem(self, c) for c in range(self.q)]

    def digits(self, code: int) -> list[int]:
        """Polynomial coefficients of an element code, constant term first."""
        return [(code // self.p**i) % self.p for i in range(self.e)]

    def describe(self, code: int) -> str:
        """Human-readable polynomial form, e.g. ``x+1``."""
        terms = []
        for i, c in reversed(list(enumerate(self.digits(code)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = "" if (c == 1 and i > 0) else str(c)
            terms.append(coef + mono)
        return "+".join(terms) or "0"


def _build(p: int, e: int, modulus: tuple[int, ...]) -> FieldSpec:
    q = p**e

    def to_poly(code: int) -> list[int]:
        return [(code // p**i) % p for i in range(e)]

    def to_code(poly: Sequence[int]) -> int:
        return sum((c % p) * p**i for i, c in enumerate(poly))

    add = tuple(
        tuple(to_code([x + y for x, y in zip(to_poly(a), to_poly(b))]) for b in range(q))
        for a in range(q)
    )
    if e == 1:
        mul = tuple(tuple(a * b % p for b in range(q)) for a in range(q))
    else:
        rows = []
        for a in range(q):
            pa = to_poly(a)
            row = []
            for b in range(q):
                pb = to_poly(b)
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(pa):
                    for j, y in enumerate(pb):
                        prod[i + j] += x * y
                row.append(to_code(_poly_mod(prod, modulus, p)))
            rows.append(tuple(row))
        mul = tuple(rows)
    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
    inv = (0,) + tuple(next(b for b in range(q) if mul[a][b] == 1) for a in range(1, q))
    return FieldSpec(p, e, modulus, add, mul, neg, inv)


@lru_cache(maxsize=None)
def get_field(q: int, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Return the (cached) field of order q.

    ``modulus`` overrides the default table; it is a monic coefficient tuple,
    constant term first, and is ignored for prime q.
    """
    p, e = prime_power(q)
    if q > MAX_Q:
        raise FieldError(f"q={q} exceeds the supported maximum {MAX_Q}")
    if e == 1:
        return _build(p, 1, ())
    mod = tuple(DEFAULT_MODULI[q] if modulus is None else modulus)
    if len(mod) != e + 1 or mod[-1] != 1:
        raise FieldError(f"modulus for GF({q}) must be monic of degree {e}: {list(mod)}")
    if any(not 0 <= c < p for c in mod):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if not is_irreducible(mod, p):
        raise FieldError(f"modulus {list(mod)} is reducible over GF({p})")
    return _build(p, e, mod)


@dataclass(frozen=True)
class Elem:
    field: FieldSpec
    code: int

    def __post_init__(self) -> None:
        if not 0 <= self.code < self.field.q:
            raise FieldError(f"element code {self.code} outside [0, {self.field.q})")

    def __add__(self, other: Elem) -> Elem:
        return fq_add(self, other)

    def __sub__(self, other: Elem) -> Elem:
        _same_field(self, other)
        return Elem(self.field, self.field.sub(self.code, other.code))

    def __neg__(self) -> Elem:
        return Elem(self.field, self.field.neg(self.code))

    def __mul__(self, other: Elem) -> Elem:
        return fq_mul(self, other)

    def __truediv__(self, other: Elem) -> Elem:
        return fq_mul(self, fq_inv(other))

    def __pow__(self, n: int) -> Elem:
        if n < 0:
            return fq_inv(self) ** (-n)
        return Elem(self.field, self.field.pow(self.code, n))

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"Elem({self.code} in {self.field!r})"


def _same_field(a: Elem, b: Elem) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")


def fq_add(a: Elem, b: Elem) -> Elem:
    _same_field(a, b)
    return Elem(a.field, a.field.add_table[a.code][b.code])


def fq_mul(a: Elem, b: Elem) -> Elem:
    _same_field(a, b)
    return Elem(a.field, a.field.mul_table[a.code][b.code])


def fq_inv(a: Elem) -> Elem:
    return Elem(a.field, a.field.inv(a.code))


def parse_modulus(text: str) -> tuple[int, ...]:
    """Parse ``"1,1,1"`` (constant term first) into a coefficient tuple."""
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise FieldError(f"bad modulus {text!r}") from exc
