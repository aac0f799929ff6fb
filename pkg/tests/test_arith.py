import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fields import all_fields, field_id, smallest_type_fields
from gnbmul.arith import (
    Element,
    bits_to_ints,
    gf_add,
    gf_mult,
    gf_mult_bits,
    gf_square,
    ints_to_bits,
)
from gnbmul.gnb_core import build_params
from gnbmul.matrix import mult_matrix_c0


def field(k, T):
    prm = build_params(k, T)
    return prm, mult_matrix_c0(prm)


def el(bits: str) -> Element:
    return Element.from_bits(int(c) for c in bits)


# -- polynomial-basis oracles ---------------------------------------------------

def poly_mulmod(x: int, y: int, mod: int) -> int:
    deg = mod.bit_length() - 1
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x >> deg & 1:
            x ^= mod
    return r


def normal_to_poly_table(basis, k):
    table = {}
    for v in range(1 << k):
        acc = 0
        for i in range(k):
            if v >> i & 1:
                acc ^= basis[i]
        table[v] = acc
    return table


@pytest.mark.parametrize("k,T,modulus,basis", [
    # x^3+x+1 with beta_i = x+1, x^2+1, x^2+x+1
    (3, 2, 0b1011, [0b011, 0b101, 0b111]),
    # x^4+x^3+x^2+x+1 with beta_i = x+1, x^2+1, x^3+x^2+x, x^3+1
    (4, 3, 0b11111, [0b0011, 0b0101, 0b1110, 0b1001]),
])
def test_gf_mult_matches_polynomial_arithmetic(k, T, modulus, basis):
    prm, m0 = field(k, T)
    to_poly = normal_to_poly_table(basis, k)
    from_poly = {v: c for c, v in to_poly.items()}
    assert len(from_poly) == 1 << k
    # the basis really is normal: beta_{i+1} = beta_i^2
    for i in range(k):
        assert poly_mulmod(basis[i], basis[i], modulus) == basis[(i + 1) % k]
    for a, b in product(range(1 << k), repeat=2):
        want = from_poly[poly_mulmod(to_poly[a], to_poly[b], modulus)]
        assert gf_mult(prm, m0, Element(k, a), Element(k, b)).value == want


def test_gf_mult_k3_example():
    prm, m0 = field(3, 2)
    assert gf_mult(prm, m0, el("100"), el("010")) == el("101")


def test_gf_add_examples():
    a = el("101")
    assert gf_add(a, el("011")) == el("110")
    assert gf_add(a, a) == Element.zero(3)
    assert gf_add(a, Element.zero(3)) == a
    with pytest.raises(ValueError):
        gf_add(a, Element.zero(4))


def test_gf_square_examples():
    assert gf_square(el("100")) == el("010")
    a = el("1101001")
    x = a
    for _ in range(7):
        x = gf_square(x)
    assert x == a


def test_gf_mult_dimension_checks():
    prm, m0 = field(4, 3)
    with pytest.raises(ValueError):
        gf_mult(prm, m0, Element(3, 1), Element(3, 1))
    with pytest.raises(ValueError):
        gf_mult(prm, m0, Element(4, 1), Element(3, 1))


def test_element_encoding():
    e = Element.from_hex("0x2d", 6)
    assert e.bits == [1, 0, 1, 1, 0, 1]
    assert e.to_hex() == "2d"
    assert Element(9, 5).to_hex() == "005"
    assert str(el("110")) == "110"
    with pytest.raises(ValueError):
        Element.from_hex("40", 6)
    with pytest.raises(ValueError):
        Element.from_hex("zz", 6)


SMALL = all_fields(2, 8, 20)


@pytest.mark.parametrize("k,T", SMALL, ids=map(field_id, SMALL))
def test_squaring_is_self_product_exhaustive(k, T):
    prm, m0 = field(k, T)
    for v in range(1 << k):
        a = Element(k, v)
        assert gf_mult(prm, m0, a, a) == gf_square(a)


@pytest.mark.parametrize("k,T", SMALL, ids=map(field_id, SMALL))
def test_identity_and_annihilator_exhaustive(k, T):
    prm, m0 = field(k, T)
    one, zero = Element.one(k), Element.zero(k)
    for v in range(1 << k):
        a = Element(k, v)
        assert gf_mult(prm, m0, one, a) == a
        assert gf_mult(prm, m0, zero, a) == zero


PROPERTY_FIELDS = sorted(set(smallest_type_fields(60)) | {(4, 3), (6, 3), (12, 5), (20, 9)})


@st.composite
def field_and_elements(draw, n=3):
    k, T = draw(st.sampled_from(PROPERTY_FIELDS))
    vals = [draw(st.integers(0, (1 << k) - 1)) for _ in range(n)]
    return k, T, [Element(k, v) for v in vals]


@settings(max_examples=300, deadline=None)
@given(field_and_elements())
def test_field_axioms(case):
    k, T, (a, b, c) = case
    prm, m0 = field(k, T)
    mul = lambda x, y: gf_mult(prm, m0, x, y)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, gf_add(b, c)) == gf_add(mul(a, b), mul(a, c))
    assert gf_square(mul(a, b)) == mul(gf_square(a), gf_square(b))
    assert mul(Element.one(k), a) == a


@pytest.mark.parametrize("k,T", PROPERTY_FIELDS, ids=map(field_id, PROPERTY_FIELDS))
def test_associativity_1000_triples(k, T):
    _, m0 = field(k, T)
    rng = np.random.default_rng(k * 1000 + T)
    A, B, C = (rng.integers(0, 2, size=(1000, k), dtype=np.uint8) for _ in range(3))
    left = gf_mult_bits(m0, gf_mult_bits(m0, A, B), C)
    right = gf_mult_bits(m0, A, gf_mult_bits(m0, B, C))
    assert np.array_equal(left, right)
    assert np.array_equal(gf_mult_bits(m0, A, B), gf_mult_bits(m0, B, A))


@pytest.mark.parametrize("k,T", [(6, 3), (20, 3), (33, 2), (54, 3), (53, 2)])
def test_batched_and_scalar_products_agree(k, T):
    prm, m0 = field(k, T)
    rng = random.Random(k)
    avals = [rng.getrandbits(k) for _ in range(200)]
    bvals = [rng.getrandbits(k) for _ in range(200)]
    C = gf_mult_bits(m0, ints_to_bits(avals, k), ints_to_bits(bvals, k))
    want = [gf_mult(prm, m0, Element(k, a), Element(k, b)).value for a, b in zip(avals, bvals)]
    assert bits_to_ints(C) == want


def test_bits_int_conversion_roundtrip():
    vals = [0, 1, (1 << 70) - 1, 12345678901234567890]
    assert bits_to_ints(ints_to_bits(vals, 70)) == vals
