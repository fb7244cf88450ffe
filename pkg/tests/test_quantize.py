import random
from fractions import Fraction

import pytest

from projquant import ResonantWeight, canonicalize, resonances
from projquant.flatmodel import (
    density_quant_coefficients,
    quantization_operator,
    quantize_densities,
    random_polynomial,
    random_section,
    solver_singular_deltas,
    symbolic_solution,
    verify_equivariance,
)
from projquant.flatmodel.deltapoly import DPoly, RatFunc, rational_roots
from projquant.flatmodel.quantize import QuantCoefficients


def test_order_zero_is_multiplication():
    m = 2
    coeffs = density_quant_coefficients(m, 0, Fraction(1, 3), Fraction(9, 4))
    assert coeffs.values == (Fraction(1),)
    rng = random.Random(0)
    symbol = random_section(m, (), 0, Fraction(9, 4) - Fraction(1, 3), 3, rng)
    op, _ = quantize_densities(m, 0, Fraction(1, 3), Fraction(9, 4), symbol)
    f = random_polynomial(m, 3, rng)
    assert op.apply(f) == symbol.component(()) * f


def test_order_one_closed_form():
    # the unique equivariant constant is c1 = lambda / (1 - delta)
    for m in (2, 3):
        for lam, mu in ((Fraction(0), Fraction(1, 3)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(2, 7), Fraction(1, 7))):
            delta = mu - lam
            coeffs = density_quant_coefficients(m, 1, lam, mu)
            assert coeffs.values == (Fraction(1), lam / (1 - delta))


def test_order_one_resonance():
    with pytest.raises(ResonantWeight):
        density_quant_coefficients(2, 1, Fraction(0), Fraction(1))
    with pytest.raises(ResonantWeight):
        density_quant_coefficients(2, 1, Fraction(1, 2), Fraction(3, 2))


def test_order_two_singularities_match_resonances():
    m = 2
    hits = resonances(canonicalize((2,), m, 0, 0))
    assert hits == {Fraction(5, 3), Fraction(4, 3)}
    lam = Fraction(1, 7)
    for delta in hits:
        with pytest.raises(ResonantWeight):
            density_quant_coefficients(m, 2, lam, lam + delta)
    coeffs = density_quant_coefficients(m, 2, lam, lam)
    assert len(coeffs.values) == 3


def test_order_three_resonant_at_two():
    with pytest.raises(ResonantWeight):
        density_quant_coefficients(2, 3, Fraction(0), Fraction(2))


def test_symbol_preservation():
    # the order-k part of Q(P) is the plain contraction against P
    m, k = 2, 2
    lam, mu = Fraction(1, 2), Fraction(5, 6)
    rng = random.Random(1)
    symbol = random_section(m, (k,), 0, mu - lam, 2, rng)
    op, coeffs = quantize_densities(m, k, lam, mu, symbol)
    assert op.order == k
    plain = quantization_operator(symbol, (1, 0, 0), lam, mu)
    for beta, p in op.coeffs.items():
        if sum(beta) == k:
            assert plain.coeffs[beta] == p
    for beta, p in plain.coeffs.items():
        if sum(beta) == k and p:
            assert op.coeffs[beta] == p


def test_quantize_validates_symbol():
    m, k = 2, 1
    lam, mu = Fraction(0), Fraction(1, 3)
    rng = random.Random(2)
    wrong_weight = random_section(m, (k,), 0, Fraction(1), 2, rng)
    with pytest.raises(ValueError):
        quantize_densities(m, k, lam, mu, wrong_weight)
    wrong_degree = random_section(m, (2,), 0, mu - lam, 2, rng)
    with pytest.raises(ValueError):
        quantize_densities(m, k, lam, mu, wrong_degree)


def test_quant_coefficients_normalization():
    with pytest.raises(ValueError):
        QuantCoefficients((Fraction(2),))


def test_equivariance_full_generating_set():
    m = 2
    lam = Fraction(1, 3)
    rng = random.Random(5)
    for k, delta in ((1, Fraction(1, 5)), (2, Fraction(0)), (3, Fraction(1, 3))):
        mu = lam + delta
        coeffs = density_quant_coefficients(m, k, lam, mu)
        symbols = [random_section(m, (k,), 0, delta, 2, rng) for _ in range(3)]
        functions = [random_polynomial(m, 3, rng) for _ in range(3)]
        report = verify_equivariance(m, k, lam, mu, coeffs.values, symbols, functions)
        assert report.all_exact, report.failures


def test_equivariance_heaviest_corner():
    m, k = 4, 4
    lam = Fraction(1, 3)
    delta = Fraction(1, 5)
    coeffs = density_quant_coefficients(m, k, lam, lam + delta)
    rng = random.Random(9)
    symbols = [random_section(m, (k,), 0, delta, 1, rng) for _ in range(2)]
    functions = [random_polynomial(m, 2, rng) for _ in range(2)]
    report = verify_equivariance(m, k, lam, lam + delta, coeffs.values, symbols, functions)
    assert report.all_exact, report.failures


def test_equivariance_fails_only_in_quadratic_direction_for_wrong_constants():
    m, k = 2, 1
    lam, mu = Fraction(1, 2), Fraction(1, 2)
    rng = random.Random(6)
    symbols = [random_section(m, (k,), 0, Fraction(0), 2, rng) for _ in range(2)]
    functions = [random_polynomial(m, 2, rng) for _ in range(2)]
    wrong = (Fraction(1), Fraction(17, 3))
    report = verify_equivariance(m, k, lam, mu, wrong, symbols, functions)
    assert report.translations_exact and report.linear_exact
    assert not report.quadratic_exact


@pytest.mark.parametrize("m,k", [(2, 1), (2, 2), (3, 2)])
def test_symbolic_matches_numeric(m, k):
    lam = Fraction(1, 2)
    coeffs, det = symbolic_solution(m, k, lam)
    singular = set(solver_singular_deltas(m, k))
    for delta in (Fraction(0), Fraction(1, 5), Fraction(-2, 3)):
        assert delta not in singular
        numeric = density_quant_coefficients(m, k, lam, lam + delta)
        for level in range(k + 1):
            assert coeffs[level].eval(delta) == numeric.values[level]


def test_singular_deltas_match_resonances():
    for m in (2, 3):
        for k in (1, 2, 3):
            got = set(solver_singular_deltas(m, k))
            assert got == set(resonances(canonicalize((k,), m, 0, 0)))
    assert solver_singular_deltas(2, 0) == ()


def test_singular_deltas_stable_across_lambda():
    for m, k in ((2, 2), (3, 1)):
        default = solver_singular_deltas(m, k)
        other = solver_singular_deltas(m, k, Fraction(2, 7))
        assert default == other


def test_rational_root_helpers():
    # (delta - 1)(delta - 5/3) expanded
    poly = DPoly((Fraction(5, 3), Fraction(-8, 3), Fraction(1)))
    assert dict(rational_roots(poly)) == {Fraction(1): 1, Fraction(5, 3): 1}
    r = RatFunc(DPoly((Fraction(1),)), poly)
    assert r.eval(0) == Fraction(3, 5)
    with pytest.raises(ZeroDivisionError):
        r.eval(1)
