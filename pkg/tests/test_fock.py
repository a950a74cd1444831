"""Mode actions of the vertex kernels and the derived operator algebras."""

from fractions import Fraction

import pytest

from symfock.bases import complete_h, elementary_e, q_coefficient
from symfock.fock import (
    DEFORMED_MINUS,
    DEFORMED_PLUS,
    FERMION_MINUS,
    FERMION_PLUS,
    TWISTED_MINUS,
    TWISTED_PLUS,
    FockVector,
    ModeExpression,
    check_mode_identity,
    corrupted_kernel,
    heisenberg_mode,
    mode_apply,
    twisted_heisenberg_mode,
    virasoro_mode,
)
from symfock.ratfun import RatFun, TPoly, rf_inv_one_minus_t_pow, rf_one_minus_t_pow
from symfock.symfunc import SymFunc

ME = ModeExpression
RF_T = RatFun(TPoly.from_coeffs([0, 1]))
vac = FockVector.vacuum


def K(kernel, j):
    return ("kernel", kernel, j)


def test_mode_apply_vacuum_examples():
    r = mode_apply(FERMION_PLUS, -1, vac())
    assert (r.charge, r.body) == (1, SymFunc.one())
    assert mode_apply(FERMION_PLUS, 0, vac()).is_zero()
    assert mode_apply(FERMION_PLUS, 3, vac()).is_zero()
    r = mode_apply(FERMION_MINUS, -1, vac())
    assert (r.charge, r.body) == (-1, SymFunc.one())


def test_mode_apply_generates_h_and_e():
    for k in range(5):
        r = mode_apply(FERMION_PLUS, -k - 1, vac())
        assert r.body == complete_h(k)
        r = mode_apply(FERMION_MINUS, -k - 1, vac())
        assert r.body == elementary_e(k).scaled(Fraction((-1) ** k))


def test_mult_coefficients_match_bases():
    for k in range(6):
        assert FERMION_PLUS.mult_coefficient(k) == complete_h(k)
        assert FERMION_MINUS.mult_coefficient(k) == elementary_e(k).scaled(Fraction((-1) ** k))
        assert TWISTED_PLUS.mult_coefficient(k) == q_coefficient(k)
        assert DEFORMED_PLUS.mult_coefficient(k) == q_coefficient(k)


def test_deriv_coefficient_examples():
    # mode 1 of exp(sum d/dp_n u^n) is d/dp_1
    ((c, mu),) = FERMION_MINUS.deriv_coefficient(1)
    assert (c, mu) == (RatFun.from_int(1), (1,))
    # mode 2 of exp(-sum d/dp_n u^n) is (1/2) d^2/dp_1^2 - d/dp_2
    terms = dict((mu, c) for c, mu in FERMION_PLUS.deriv_coefficient(2))
    assert terms[(1, 1)] == RatFun.from_fraction(Fraction(1, 2))
    assert terms[(2,)] == RatFun.from_int(-1)
    # single term -1/(1-t) d/dp_1 for the deformed kernel
    ((c, mu),) = DEFORMED_PLUS.deriv_coefficient(1)
    assert mu == (1,) and c == -rf_inv_one_minus_t_pow(1)


def test_heisenberg_action_examples():
    v = FockVector(2, SymFunc.p(1))
    assert heisenberg_mode(0, v) == v.scaled(2)
    assert heisenberg_mode(-1, vac()) == FockVector(0, SymFunc.p(1))
    assert heisenberg_mode(1, FockVector(0, SymFunc.p(1))) == FockVector(0, SymFunc.one())
    assert heisenberg_mode(1, vac()).is_zero()


def test_heisenberg_matches_multiplication_and_derivation():
    from symfock.partitions import partitions_up_to

    for m in (-2, 0, 1):
        for la in partitions_up_to(4):
            v = FockVector(m, SymFunc.monomial(la))
            for n in (1, 2, 3):
                assert heisenberg_mode(-n, v) == FockVector(m, v.body.times_p(n))
                want = v.body.diff_p(n).scaled(Fraction(n))
                assert heisenberg_mode(n, v) == FockVector(m, want)
            assert heisenberg_mode(0, v) == v.scaled(Fraction(m))


def test_twisted_heisenberg_examples():
    assert twisted_heisenberg_mode(-2, vac()) == FockVector(0, SymFunc.p(2))
    r = twisted_heisenberg_mode(2, FockVector(0, SymFunc.p(2)))
    assert r.body == SymFunc.constant(rf_inv_one_minus_t_pow(2).scale(2))
    assert twisted_heisenberg_mode(1, vac()).is_zero()


def test_virasoro_bracket_examples():
    # [L_1, L_-1] = 2 L_0, no central term at j = 1
    beta = Fraction(1, 2)
    v = FockVector(0, SymFunc.p(1))
    comm = virasoro_mode(beta, 1, virasoro_mode(beta, -1, v)) - virasoro_mode(
        beta, -1, virasoro_mode(beta, 1, v)
    )
    assert comm == virasoro_mode(beta, 0, v).scaled(2)


@pytest.mark.parametrize("beta", [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2)])
def test_virasoro_central_term(beta):
    # [L_2, L_-2] = 4 L_0 + c/2 with c = -12 beta^2 + 12 beta - 2
    c_beta = -12 * beta * beta + 12 * beta - 2
    for m in (-1, 0, 1):
        v = FockVector(m, SymFunc.one())
        comm = virasoro_mode(beta, 2, virasoro_mode(beta, -2, v)) - virasoro_mode(
            beta, -2, virasoro_mode(beta, 2, v)
        )
        want = virasoro_mode(beta, 0, v).scaled(4) + v.scaled(Fraction(c_beta, 2))
        assert comm == want


def test_central_charge_at_beta_zero():
    beta = Fraction(0)
    assert -12 * beta * beta + 12 * beta - 2 == -2


def test_fermion_anticommutators_window():
    for a in range(-2, 3):
        for b in range(-2, 3):
            lhs = ME.single(K(FERMION_PLUS, a), K(FERMION_MINUS, b)) + ME.single(
                K(FERMION_MINUS, b), K(FERMION_PLUS, a)
            )
            rhs = ME.single(("id",)) if a + b == -1 else ME.zero()
            assert check_mode_identity(lhs, rhs, 3, (-1, 0, 1)).equal


def test_twisted_anticommutators_window():
    one_minus_t_sq = rf_one_minus_t_pow(1) * rf_one_minus_t_pow(1)
    for a in range(-2, 2):
        for b in range(-2, 2):
            lhs = (
                ME.single(K(TWISTED_PLUS, a), K(TWISTED_MINUS, b))
                + ME.single(K(TWISTED_PLUS, a + 1), K(TWISTED_MINUS, b - 1), coeff=-RF_T)
                + ME.single(K(TWISTED_MINUS, b), K(TWISTED_PLUS, a))
                + ME.single(K(TWISTED_MINUS, b + 1), K(TWISTED_PLUS, a - 1), coeff=-RF_T)
            )
            rhs = ME.single(("id",), coeff=one_minus_t_sq) if a + b == -1 else ME.zero()
            assert check_mode_identity(lhs, rhs, 3, (-1, 0, 1)).equal


def test_commutation_relation_sample():
    e = elementary_e
    lhs = ME.single(("perp", e(1)), ("mul", e(1))) - ME.single(("perp", e(0)), ("mul", e(0)))
    rhs = ME.single(("mul", e(1)), ("perp", e(1)))
    assert check_mode_identity(lhs, rhs, 4, (0,)).equal


def test_check_mode_identity_trivial_and_negative():
    lhs = ME.single(("heis", -1))
    assert check_mode_identity(lhs, lhs, 3, (-1, 0, 1)).equal
    rhs = lhs.scaled(RatFun.from_int(-1))
    verdict = check_mode_identity(lhs, rhs, 3, (0,))
    assert not verdict.equal
    w = verdict.witness_json()
    assert w is not None and w["charge"] == 0 and w["p"] == []


def test_corrupted_kernel_breaks_relations():
    bad = corrupted_kernel(FERMION_PLUS)
    lhs = ME.single(K(bad, 0), K(FERMION_MINUS, -1)) + ME.single(
        K(FERMION_MINUS, -1), K(bad, 0)
    )
    verdict = check_mode_identity(lhs, ME.single(("id",)), 3, (0,))
    assert not verdict.equal


def test_kernel_factorization_sample():
    # fermion+[a] = sum_s t^s h_s twisted+[a+s] on low degrees
    for a in (-2, -1, 0, 1):
        lhs = ME.single(K(FERMION_PLUS, a))
        rhs = ME.zero()
        ts = RatFun.from_int(1)
        for s in range(0, 8):
            rhs = rhs + ME.single(("mul", complete_h(s)), K(TWISTED_PLUS, a + s), coeff=ts)
            ts = ts * RF_T
        assert check_mode_identity(lhs, rhs, 3, (-1, 0, 1)).equal


def test_conjugation_by_substitution():
    for a in (-2, -1, 0, 1, 2):
        lhs = ME.single(K(DEFORMED_PLUS, a), ("scale_p", rf_one_minus_t_pow))
        rhs = ME.single(("scale_p", rf_one_minus_t_pow), K(FERMION_PLUS, a))
        assert check_mode_identity(lhs, rhs, 3, (-1, 0, 1)).equal
        lhs = ME.single(K(DEFORMED_MINUS, a), ("scale_p", rf_one_minus_t_pow))
        rhs = ME.single(("scale_p", rf_one_minus_t_pow), K(FERMION_MINUS, a))
        assert check_mode_identity(lhs, rhs, 3, (-1, 0, 1)).equal


def test_charge_mismatch_rejected():
    with pytest.raises(ValueError):
        FockVector(0, SymFunc.p(1)) + FockVector(1, SymFunc.p(1))


def test_expression_json_roundtrippable_shape():
    expr = ME.single(K(FERMION_PLUS, -1), ("heis", 2), coeff=RatFun.from_int(3))
    payload = expr.to_json()
    assert payload["terms"][0]["ops"][0] == {"op": "kernel", "kernel": "fermion+", "mode": -1}
