import pytest
from hypothesis import given, strategies as st

from braidcert.polynomial import LaurentPoly1, LaurentPoly2

coeffs = st.integers(min_value=-50, max_value=50)
exps = st.integers(min_value=-6, max_value=6)


def poly1s(var="t"):
    return st.dictionaries(exps, coeffs, max_size=6).map(
        lambda d: LaurentPoly1(d, var)
    )


def poly2s():
    return st.dictionaries(st.tuples(exps, exps), coeffs, max_size=6).map(
        lambda d: LaurentPoly2(d)
    )


t = LaurentPoly1.monomial(1)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert (t - 1) * (t + 1) == LaurentPoly1({2: 1, 0: -1})

    def test_multiply_by_zero(self):
        p = LaurentPoly1({3: 2, -1: 5})
        assert (p * LaurentPoly1.zero()).is_zero
        assert p * 0 == 0

    def test_symmetric_square(self):
        p = t + t.reciprocal_var()
        assert p * p == LaurentPoly1({2: 1, 0: 2, -2: 1})

    def test_zero_coefficients_dropped(self):
        assert LaurentPoly1({2: 0, 1: 3}).terms() == {1: 3}

    def test_variable_mismatch(self):
        with pytest.raises(ValueError, match="variable mismatch"):
            t + LaurentPoly1.monomial(1, var="z")
        with pytest.raises(ValueError, match="variable mismatch"):
            LaurentPoly2.one() * LaurentPoly2.one(vars=("v", "z"))

    def test_pow(self):
        assert (t + 1) ** 0 == 1
        assert (t + 1) ** 3 == LaurentPoly1({3: 1, 2: 3, 1: 3, 0: 1})
        with pytest.raises(ValueError):
            t ** -1

    @given(poly1s(), poly1s(), poly1s())
    def test_ring_axioms_1var(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p + LaurentPoly1.zero() == p
        assert p * LaurentPoly1.one() == p
        assert p - p == 0

    @given(poly2s(), poly2s(), poly2s())
    def test_ring_axioms_2var(self, p, q, r):
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)

    @given(poly1s(), poly1s())
    def test_product_degree_bounds_cancellation_free(self, p, q):
        # positive coefficients cannot cancel
        p = LaurentPoly1({e: abs(c) for e, c in p.terms().items()})
        q = LaurentPoly1({e: abs(c) for e, c in q.terms().items()})
        if p.is_zero or q.is_zero:
            return
        prod = p * q
        assert prod.min_exp == p.min_exp + q.min_exp
        assert prod.max_exp == p.max_exp + q.max_exp


class TestBreadthAndEvaluation:
    def test_breadth_examples(self):
        p = LaurentPoly2({(4, 1): 1, (-2, 0): -1})
        assert p.breadth("a") == 6
        assert LaurentPoly2.one().breadth("a") == 0
        q = LaurentPoly2({(0, 3): 1, (0, 1): 1})
        assert q.breadth("a") == 0
        assert q.breadth("z") == 2

    def test_breadth_zero_polynomial(self):
        with pytest.raises(ValueError, match="zero polynomial"):
            LaurentPoly2.zero().breadth("a")

    def test_breadth_unknown_variable(self):
        with pytest.raises(ValueError, match="unknown variable"):
            LaurentPoly2.one().breadth("q")

    def test_evaluate_unit(self):
        p = LaurentPoly1({1: 1, 0: -1, -1: 1})
        assert p.evaluate_unit(1) == 1
        assert LaurentPoly1({2: 1, 0: -1}).evaluate_unit(1) == 0
        assert LaurentPoly1({1: 1, -1: 1}).evaluate_unit(-1) == -2
        with pytest.raises(ValueError):
            p.evaluate_unit(2)

    def test_set_var_to_one(self):
        p = LaurentPoly2({(2, 1): 3, (-1, 1): 1, (0, 0): 5})
        collapsed = p.set_var_to_one("a")
        assert collapsed == LaurentPoly1({1: 4, 0: 5}, var="z")


class TestDivision:
    def test_exact(self):
        p = LaurentPoly1({3: 1, 0: -1})  # t^3 - 1
        d = LaurentPoly1({1: 1, 0: -1})  # t - 1
        assert p.divexact(d) == LaurentPoly1({2: 1, 1: 1, 0: 1})

    def test_exact_laurent_shift(self):
        p = LaurentPoly1({1: 1, -2: 1})
        d = LaurentPoly1({2: 1, -1: 1})
        assert p.divexact(d) == LaurentPoly1({-1: 1})

    def test_inexact_raises(self):
        with pytest.raises(ValueError, match="inexact"):
            LaurentPoly1({1: 1}).divexact(LaurentPoly1({1: 1, 0: 1}))
        with pytest.raises(ValueError, match="inexact"):
            LaurentPoly1({2: 1, 0: 1}).divexact(LaurentPoly1({1: 1, 0: 1}))

    @given(poly1s(), poly1s())
    def test_mul_then_div_roundtrip(self, p, q):
        if q.is_zero:
            return
        assert (p * q).divexact(q) == p


class TestSerialization:
    def test_text_form(self):
        p = LaurentPoly1({-4: -1, -2: 2, 0: 1})
        assert str(p) == "-t^-4 + 2*t^-2 + 1"
        assert str(LaurentPoly1.zero()) == "0"
        assert str(LaurentPoly1({1: -1})) == "-t"
        q = LaurentPoly2({(-2, 2): 1, (0, 0): -3, (1, 1): -2})
        assert str(q) == "a^-2*z^2 - 3 - 2*a*z"

    @given(poly1s())
    def test_text_roundtrip_1var(self, p):
        assert LaurentPoly1.from_text(str(p)) == p

    @given(poly2s())
    def test_text_roundtrip_2var(self, p):
        assert LaurentPoly2.from_text(str(p)) == p

    @given(poly1s())
    def test_json_roundtrip_1var(self, p):
        assert LaurentPoly1.from_json_obj(p.to_json_obj()) == p

    @given(poly2s())
    def test_json_roundtrip_2var(self, p):
        assert LaurentPoly2.from_json_obj(p.to_json_obj()) == p

    def test_json_big_coefficients(self):
        p = LaurentPoly1({0: 10**40})
        obj = p.to_json_obj()
        assert obj["terms"][0]["coeff"] == str(10**40)
        assert LaurentPoly1.from_json_obj(obj) == p
