import itertools

import pytest

from grassclique.gf import (
    DEFAULT_MODULI,
    Elem,
    FieldError,
    FieldMismatchError,
    fq_add,
    fq_inv,
    fq_mul,
    get_field,
    is_irreducible,
    supported_orders,
)

SMALL = [q for q in supported_orders() if q <= 16]


def E(q, c):
    return Elem(get_field(q), c)


def test_add_examples():
    assert fq_add(E(4, 2), E(4, 3)) == E(4, 1)
    assert fq_add(E(5, 3), E(5, 4)) == E(5, 2)
    for q in SMALL:
        for a in range(q):
            assert fq_add(E(q, a), E(q, 0)) == E(q, a)


def test_mul_examples():
    assert fq_mul(E(4, 2), E(4, 2)) == E(4, 3)
    assert fq_mul(E(3, 2), E(3, 2)) == E(3, 1)
    for q in SMALL:
        for a in range(q):
            assert fq_mul(E(q, a), E(q, 1)) == E(q, a)


def test_inv_examples():
    assert fq_inv(E(5, 3)) == E(5, 2)
    assert fq_inv(E(4, 2)) == E(4, 3)
    assert fq_inv(E(2, 1)) == E(2, 1)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        fq_inv(E(7, 0))


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        fq_add(E(4, 1), E(2, 1))
    with pytest.raises(FieldMismatchError):
        fq_mul(E(3, 1), E(9, 1))
    # same order, different modulus
    other = get_field(4, (1, 1, 1))
    assert other == get_field(4)
    with pytest.raises(FieldMismatchError):
        fq_mul(E(8, 1), Elem(get_field(8, (1, 0, 1, 1)), 1))


def test_operators():
    f = get_field(9)
    a, b = f.elem(5), f.elem(7)
    assert (a - b) + b == a
    assert (a / b) * b == a
    assert -a + a == f.elem(0)
    assert a**8 == f.elem(1)
    assert a**-1 == fq_inv(a)


@pytest.mark.parametrize("q", SMALL)
def test_axioms_exhaustive(q):
    els = get_field(q).elements()
    zero, one = els[0], els[1]
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a != zero:
            assert a * fq_inv(a) == one
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", SMALL)
def test_frobenius(q):
    f = get_field(q)
    for a, b in itertools.product(f.elements(), repeat=2):
        assert (a + b) ** f.p == a**f.p + b**f.p


@pytest.mark.parametrize("q", [q for q in supported_orders() if get_field(q).e > 1])
def test_x_has_order_dividing_q_minus_1(q):
    f = get_field(q)
    x = f.elem(f.p)
    order = next(m for m in range(1, q) if (x**m).code == 1)
    assert (q - 1) % order == 0


def test_default_moduli_irreducible():
    for q, mod in DEFAULT_MODULI.items():
        f = get_field(q)
        assert f.modulus == mod
        assert is_irreducible(mod, f.p)


def test_irreducibility_check():
    assert not is_irreducible((1, 0, 1), 2)  # x^2+1 = (x+1)^2
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((0, 1, 1), 3)  # x(x+1)
    # degree 4 product of two irreducible quadratics over GF(2)
    assert not is_irreducible((1, 0, 1, 0, 1), 2)


def test_all_supported_orders_build():
    qs = supported_orders()
    assert qs == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
    for q in qs:
        f = get_field(q)
        assert f.q == q
        assert all(f.mul(a, f.inv(a)) == 1 for a in range(1, q))


@pytest.mark.parametrize("q", [1, 6, 12, 64, 49])
def test_bad_orders(q):
    with pytest.raises(FieldError):
        get_field(q)


def test_modulus_override():
    f = get_field(8, (1, 0, 1, 1))  # x^3 + x^2 + 1
    assert f.modulus == (1, 0, 1, 1)
    # x * x^2 = x^3 = x^2 + 1  -> code 5
    assert f.mul(2, 4) == 5
    with pytest.raises(FieldError):
        get_field(4, (1, 0, 1))  # reducible
    with pytest.raises(FieldError):
        get_field(4, (1, 1))  # wrong degree


def test_describe():
    f = get_field(4)
    assert [f.describe(c) for c in range(4)] == ["0", "1", "x", "x+1"]
    assert get_field(9).describe(7) == "2x+1"


def test_elem_range():
    with pytest.raises(FieldError):
        E(4, 4)
