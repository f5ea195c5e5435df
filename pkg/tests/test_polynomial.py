import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nat_polys
from gaussrig.polynomial import (
    GaussInt,
    IntPoly,
    NatPoly,
    PolyParseError,
    divide_by_one_plus_x_squared,
    eval_at_i,
    eval_at_two,
    format,
    parse,
    pos_neg_split,
    sub,
)

I = GaussInt(0, 1)


def horner_at_i(coeffs):
    # independent of the exponent-mod-4 route used by eval_at_i
    acc = GaussInt()
    for c in reversed(coeffs):
        acc = acc * I + GaussInt(c, 0)
    return acc


int_polys = st.lists(st.integers(-10**6, 10**6), max_size=51).map(IntPoly)
gauss = st.builds(GaussInt, st.integers(-1000, 1000), st.integers(-1000, 1000))


def test_add_mul_examples():
    assert parse("1+x") + parse("x^2") == parse("1 + x + x^2")
    assert parse("x") * parse("x^4") == parse("x^5")
    assert parse("1+x^3") * parse("1+x^3") == NatPoly((1, 0, 0, 2, 0, 0, 1))


def test_canonical_trimming():
    assert NatPoly((0, 0, 0)).coeffs == ()
    assert NatPoly((1, 2, 0)).degree == 1
    assert NatPoly().degree == -1
    with pytest.raises(ValueError):
        NatPoly((1, -1))


@pytest.mark.parametrize(
    "text, value",
    [("x", GaussInt(0, 1)), ("1 + x^2", GaussInt(0, 0)), ("2 + x^2", GaussInt(1, 0)), ("x^4", GaussInt(1, 0))],
)
def test_eval_at_i(text, value):
    assert eval_at_i(parse(text)) == value


@pytest.mark.parametrize("text, value", [("x^4", 16), ("2 + x^2", 6), ("0", 0)])
def test_eval_at_two(text, value):
    assert eval_at_two(parse(text)) == value


def test_eval_at_two_no_overflow():
    assert eval_at_two(NatPoly.monomial(200, 3)) == 3 * 2**200


def test_sub():
    assert sub(parse("2 + x^2"), parse("x^4")) == IntPoly((2, 0, 1, 0, -1))
    assert sub(parse("x + x^3"), parse("x + x^3")) == IntPoly()
    assert sub(parse("x"), parse("x^5")) == IntPoly((0, 1, 0, 0, 0, -1))


def test_divide_examples():
    q, r = divide_by_one_plus_x_squared(IntPoly((2, 0, 1, 0, -1)))
    assert q == IntPoly((2, 0, -1)) and r == IntPoly()
    q, r = divide_by_one_plus_x_squared(IntPoly((0, 1, 0, 0, 0, -1)))
    assert q == IntPoly((0, 1, 0, -1)) and r == IntPoly()
    assert q * IntPoly((1, 0, 1)) == IntPoly((0, 1, 0, 0, 0, -1))
    assert divide_by_one_plus_x_squared(IntPoly((1, 1))) == (IntPoly(), IntPoly((1, 1)))


@given(int_polys)
def test_divide_multiply_back(d):
    q, r = divide_by_one_plus_x_squared(d)
    assert q * IntPoly((1, 0, 1)) + r == d
    assert r.degree <= 1


def test_pos_neg_split():
    assert pos_neg_split(IntPoly((2, 0, -1))) == (NatPoly((2,)), NatPoly((0, 0, 1)))
    assert pos_neg_split(IntPoly()) == (NatPoly(), NatPoly())
    assert pos_neg_split(IntPoly((0, -3, 0, 0, 1))) == (parse("x^4"), parse("3x"))


@given(int_polys)
def test_pos_neg_split_disjoint(w):
    w1, w2 = pos_neg_split(w)
    assert IntPoly(w1.coeffs) - IntPoly(w2.coeffs) == w
    assert not any(w1[k] and w2[k] for k in range(len(w)))


@given(nat_polys(), nat_polys(), nat_polys())
def test_rig_laws(p, q, r):
    zero, one = NatPoly(), NatPoly((1,))
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + zero == p and p * one == p and p * zero == zero


@given(int_polys, int_polys, int_polys)
def test_int_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert p - p == IntPoly()
    assert (p + q) + r == p + (q + r)


@given(gauss, gauss, gauss)
def test_gauss_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + (-a) == GaussInt()
    assert a * GaussInt(1, 0) == a


@given(nat_polys(), nat_polys())
def test_eval_at_i_homomorphism(p, q):
    assert eval_at_i(p * q) == eval_at_i(p) * eval_at_i(q)
    assert eval_at_i(p + q) == eval_at_i(p) + eval_at_i(q)
    assert eval_at_i(p) == horner_at_i(p.coeffs)


@given(nat_polys(), nat_polys(min_size=1))
def test_eval_at_two_monotone(p, q):
    if not q.is_zero():
        assert eval_at_two(p + q) > eval_at_two(p)
    if not p.is_zero():
        assert eval_at_two(p) >= 1


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("2 + 3x^2 + x^5", (2, 0, 3, 0, 0, 1)),
        ("x", (0, 1)),
        ("x^2 + x^2", (0, 0, 2)),
        (" 3 x ^ 2+ 1 ", (1, 0, 3)),
        ("0", ()),
        ("x^0 + 1", (2,)),
    ],
)
def test_parse(text, coeffs):
    assert parse(text).coeffs == coeffs


@pytest.mark.parametrize(
    "text, pos, token",
    [("x - 1", 2, "-"), ("2 ++ x", 3, "+"), ("x^", 2, "<end>"), ("3y", 1, "y"), ("", 0, "<end>"), ("2x x", 3, "x")],
)
def test_parse_errors(text, pos, token):
    with pytest.raises(PolyParseError) as info:
        parse(text)
    assert info.value.pos == pos
    assert info.value.token == token


def test_negative_coefficient_message():
    with pytest.raises(PolyParseError, match="negative"):
        parse("-3x")


def test_format():
    assert format(parse("x^2 + 2")) == "2 + x^2"
    assert format(NatPoly()) == "0"
    assert format(parse("1 + x + 3x^4")) == "1 + x + 3x^4"
    assert format(IntPoly((2, 0, 1, 0, -1))) == "2 + x^2 - x^4"
    assert format(IntPoly((0, -1))) == "-x"


@given(nat_polys(max_coeff=20))
def test_parse_format_round_trip(p):
    assert parse(format(p)) == p
    assert format(parse(format(p))) == format(p)


@pytest.mark.parametrize(
    "g, text", [(GaussInt(0, 0), "0"), (GaussInt(3, 0), "3"), (GaussInt(0, -1), "-1i"), (GaussInt(2, -3), "2-3i")]
)
def test_gauss_str(g, text):
    assert str(g) == text
    assert GaussInt.parse(text) == g


def test_power():
    assert parse("1 + x^3") ** 2 == parse("1 + 2x^3 + x^6")
    assert parse("x") ** 0 == parse("1")
