"""Ring operations, scalar products, adjoints on the power-sum presentation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symfock.partitions import partitions_of, partitions_up_to, z_factor
from symfock.ratfun import RatFun, rf_inv_one_minus_t_pow, rf_one_minus_t_pow
from symfock.symfunc import (
    SymFunc,
    perp_apply,
    scalar_product,
    symfunc_from_json,
    symfunc_to_json,
)

p = SymFunc.p
mono = SymFunc.monomial


def test_multiply_examples():
    assert p(1) * p(1) == mono((1, 1))
    f = mono((2, 1), Fraction(3, 2)) + p(3)
    assert SymFunc.one() * f == f
    assert (p(1) + p(2)) * (p(1) - p(2)) == mono((1, 1)) - mono((2, 2))


def test_diff_examples():
    assert mono((1, 1)).diff_p(1) == p(1).scaled(2)
    assert p(1).diff_p(2).is_zero()
    assert mono((3, 3, 1)).diff_p(3) == mono((3, 1)).scaled(2)


def test_scale_p_examples():
    f = mono((2, 1))
    scaled = f.scale_p(rf_one_minus_t_pow)
    assert scaled == mono((2, 1), rf_one_minus_t_pow(2) * rf_one_minus_t_pow(1))
    assert f.scale_p(lambda n: RatFun.from_int(1)) == f
    back = scaled.scale_p(rf_inv_one_minus_t_pow)
    assert back == f


def test_scale_p_is_ring_hom():
    f = p(1) + mono((2, 1), Fraction(1, 3))
    g = p(2) - mono((1, 1))
    sig = rf_one_minus_t_pow
    assert (f * g).scale_p(sig) == f.scale_p(sig) * g.scale_p(sig)


def test_scalar_product_examples():
    assert scalar_product(p(1), p(1)) == RatFun.from_int(1)
    expected = rf_inv_one_minus_t_pow(2).scale(Fraction(2))
    assert scalar_product(p(2), p(2), deformed=True) == expected
    assert scalar_product(p(1), p(2)).is_zero()


def test_scalar_product_monomials_z_factor():
    for w in range(5):
        for la in partitions_of(w):
            for mu in partitions_of(w):
                v = scalar_product(mono(la), mono(mu))
                if la == mu:
                    assert v == RatFun.from_int(z_factor(la))
                else:
                    assert v.is_zero()


def test_scalar_product_grading():
    assert scalar_product(p(1), mono((1, 1))).is_zero()
    assert scalar_product(p(3), mono((2, 1)), deformed=True) != scalar_product(
        p(3), p(3), deformed=True
    )


def test_perp_examples():
    assert perp_apply(p(1), p(1)) == SymFunc.one()
    assert perp_apply(p(2), mono((2, 1))) == p(1).scaled(2)
    # e_2-perp of e_2 equals <e_2, e_2> = 1, brute-forced through the p-basis
    e2 = mono((1, 1), Fraction(1, 2)) - p(2).scaled(Fraction(1, 2))
    assert scalar_product(e2, e2) == RatFun.from_int(1)
    assert perp_apply(e2, e2) == SymFunc.one()


def test_adjointness_both_products():
    # <f-perp g, w> = <g, f w> over homogeneous monomial triples
    for deformed in (False, True):
        for a in range(1, 4):
            for b in range(0, 3):
                for fa in partitions_of(a):
                    for wb in partitions_of(b):
                        f, w = mono(fa), mono(wb)
                        fw = f * w
                        for g in map(mono, partitions_of(a + b)):
                            lhs = scalar_product(perp_apply(f, g, deformed), w, deformed)
                            rhs = scalar_product(g, fw, deformed)
                            assert lhs == rhs


small_coeff = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def symfuncs(draw, max_weight=4, max_terms=3):
    pool = list(partitions_up_to(max_weight))
    n = draw(st.integers(min_value=0, max_value=max_terms))
    f = SymFunc.zero()
    for _ in range(n):
        la = draw(st.sampled_from(pool))
        c = draw(small_coeff)
        f = f + mono(la, c)
    return f


@settings(max_examples=60, deadline=None)
@given(symfuncs(), symfuncs(), symfuncs())
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


@settings(max_examples=40, deadline=None)
@given(symfuncs(), symfuncs())
def test_scalar_product_symmetric(f, g):
    assert scalar_product(f, g) == scalar_product(g, f)
    assert scalar_product(f, g, deformed=True) == scalar_product(g, f, deformed=True)


def test_specialize_t():
    f = mono((2,), rf_one_minus_t_pow(2))
    assert f.specialize_t(0) == mono((2,))
    assert f.specialize_t(1).is_zero()
    with pytest.raises(ZeroDivisionError):
        mono((1,), rf_inv_one_minus_t_pow(1)).specialize_t(1)


def test_json_roundtrip():
    f = mono((2, 1), Fraction(-5, 3)) + mono((4,), rf_inv_one_minus_t_pow(2))
    assert symfunc_from_json(symfunc_to_json(f)) == f
    assert symfunc_to_json(SymFunc.zero()) == {"terms": []}


def test_json_term_order_is_weight_then_revlex():
    f = mono((1, 1, 1)) + mono((3,)) + mono((2, 1)) + SymFunc.one()
    ps = [tuple(entry["p"]) for entry in symfunc_to_json(f)["terms"]]
    assert ps == [(), (3,), (2, 1), (1, 1, 1)]


def test_json_rejects_malformed():
    with pytest.raises(ValueError):
        symfunc_from_json({"terms": [{"p": [1, 2], "coeff": {"num": ["1"], "den": ["1"]}}]})
    with pytest.raises(ValueError):
        symfunc_from_json({"nope": []})
    with pytest.raises(ValueError):
        symfunc_from_json(
            {
                "terms": [
                    {"p": [1], "coeff": {"num": ["1"], "den": ["1"]}},
                    {"p": [1], "coeff": {"num": ["2"], "den": ["1"]}},
                ]
            }
        )
