"""Equivariant quantization of density-valued symbols on flat space.

The ansatz is the constant-coefficient divergence form

    Q(P) f = sum_{l=0..k} c_l < Div^l P, grad^{k-l} f >,      c_0 = 1.

Translation and linear equivariance hold for every choice of the c_l, so
the defining conditions come from the quadratic generators alone.  Those
conditions form a linear system in c_1..c_k assembled here from a fixed
family of monomial symbols; it is solved exactly, and the solve degenerates
(rank drop or inconsistency) precisely at the resonant weights.

The same assembly runs with the weight shift delta = mu - lambda kept
symbolic: every matrix entry is affine in delta by construction (each term
of the residual passes through exactly one weight-bearing Lie derivative),
so entries are recovered exactly from assemblies at delta = 0 and delta = 1
and cross-checked at delta = 2.  Cramer's rule on a full-rank square
subsystem then yields the coefficients as rational functions of delta whose
denominators divide the subsystem determinant; the determinant's rational
roots are the only candidate singular shifts, and each candidate is
confirmed against the fixed-weight solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import ResonantWeight
from .algebra import proj_embedding, sl_basis
from .deltapoly import DPoly, RatFunc, rational_roots
from .linalg import LinearSystem
from .operators import DiffOperator, compose, contraction_operator, lie_operator
from .poly import Poly
from .sections import (
    PolyVectorField,
    TensorSection,
    divergence,
    lie_derivative,
    symmetric_section,
)


@dataclass(frozen=True)
class QuantCoefficients:
    """Divergence-ansatz constants c_0..c_k with the symbol normalization c_0 = 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("quantization coefficients must start with c_0 = 1")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @property
    def order(self) -> int:
        return len(self.values) - 1


def quadratic_generator(m: int, direction: int) -> PolyVectorField:
    """The quadratic field generated by the lower-left matrix unit in a direction."""
    h = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
    h[m][direction] = Fraction(1)
    return proj_embedding(h)


def generator_grading(h) -> int:
    """-1, 0, or 1 according to the block of sl(m+1) a basis matrix lives in."""
    m = len(h) - 1
    if any(h[m][j] for j in range(m)):
        return 1
    if any(h[i][m] for i in range(m)):
        return -1
    return 0


def divergence_tower(symbol: TensorSection) -> list[TensorSection]:
    """[P, Div P, ..., Div^k P] down to the scalar slot."""
    tower = [symbol]
    for _ in range(symbol.degree):
        tower.append(divergence(tower[-1]))
    return tower


def quantization_operator(
    symbol: TensorSection, coefficients, lam, mu
) -> DiffOperator:
    """Assemble Q(P) from a symbol and divergence-ansatz constants."""
    tower = divergence_tower(symbol)
    total = DiffOperator(symbol.rank, {}, lam, mu)
    for level, tensor in enumerate(tower):
        op = contraction_operator(tensor, lam, mu)
        total = total + op.scale(coefficients[level])
    return total


def _monomial_symbol(m: int, k: int, index, exponents, weight) -> TensorSection:
    data = {tuple(index): Poly.monomial(m, exponents)}
    return symmetric_section(m, k, 0, weight, data)


def _sample_symbols(m: int, k: int, weight, degrees) -> list[TensorSection]:
    """Deterministic monomial symbols spanning enough directions for the solve."""
    index_types = {(0,) * k, tuple(min(i, m - 1) for i in range(k))}
    symbols = []
    for degree in degrees:
        for index in sorted(index_types):
            for v in range(min(m, 2)):
                exponents = [0] * m
                exponents[v] = degree
                symbols.append(_monomial_symbol(m, k, index, exponents, weight))
    return symbols


def _residual_family(m, k, lam, mu, symbol, direction):
    """Operators O_l with residual(c) = sum_l c_l O_l for one quadratic generator."""
    field = quadratic_generator(m, direction)
    lie_in = lie_operator(field, lam)
    lie_out = lie_operator(field, mu)
    moved = lie_derivative(field, symbol)
    tower = divergence_tower(symbol)
    moved_tower = divergence_tower(moved)
    family = []
    for level in range(k + 1):
        op = contraction_operator(tower[level], lam, mu)
        moved_op = contraction_operator(moved_tower[level], lam, mu)
        family.append(compose(lie_out, op) - compose(op, lie_in) - moved_op)
    return family


def _equations(m, k, lam, mu, degrees):
    """Keyed linear equations sum_{l>=1} c_l row[l-1] = rhs over all samples."""
    delta = mu - lam
    equations = {}
    for sid, symbol in enumerate(_sample_symbols(m, k, delta, degrees)):
        for direction in range(min(m, 2)):
            family = _residual_family(m, k, lam, mu, symbol, direction)
            keys = set()
            for op in family:
                for beta, p in op.coeffs.items():
                    keys.update((beta, mono) for mono in p.coeffs)
            for beta, mono in keys:
                row = tuple(
                    family[level].coeffs.get(beta, Poly.zero(m)).coeffs.get(mono, 0)
                    for level in range(k + 1)
                )
                if any(x != 0 for x in row):
                    equations[(sid, direction, beta, mono)] = (row[1:], -row[0])
    return equations


_SOLVE_DEGREES = tuple(range(0, 5))


def density_quant_coefficients(m, k, lam, mu) -> QuantCoefficients:
    """Solve the quadratic-generator conditions exactly at fixed weights.

    Raises ResonantWeight when the system is singular (rank-deficient or
    inconsistent); this happens exactly at the resonant weight shifts.
    """
    lam = Fraction(lam)
    mu = Fraction(mu)
    return _cached_coefficients(m, k, lam, mu)


@lru_cache(maxsize=512)
def _cached_coefficients(m, k, lam, mu) -> QuantCoefficients:
    if m < 2:
        raise ValueError("rank must be at least 2")
    if k < 0:
        raise ValueError("symbol order must be non-negative")
    if k == 0:
        return QuantCoefficients((Fraction(1),))
    delta = mu - lam
    degrees = tuple(d for d in _SOLVE_DEGREES if d <= max(k, 1))
    system = LinearSystem(k)
    for row, rhs in _equations(m, k, lam, mu, degrees).values():
        system.add(list(row), rhs)
        if system.inconsistent:
            raise ResonantWeight(
                f"quantization system inconsistent at delta = {delta}", delta
            )
    solution = system.solve()
    if solution is None:
        raise ResonantWeight(
            f"quantization system rank-deficient at delta = {delta}", delta
        )
    # residuals on held-out higher-degree samples must vanish identically
    for row, rhs in _equations(m, k, lam, mu, (max(degrees) + 1,)).values():
        lhs = sum(c * x for c, x in zip(solution, row))
        if lhs != rhs:
            raise ResonantWeight(
                f"quantization conditions unsatisfiable at delta = {delta}", delta
            )
    return QuantCoefficients((Fraction(1),) + tuple(solution))


def quantize_densities(m, k, lam, mu, symbol: TensorSection):
    """Quantize a degree-k symbol of weight mu - lambda into an operator.

    Returns the operator together with the solved coefficients; raises
    ResonantWeight when mu - lambda is resonant for degree-k symbols.
    """
    lam = Fraction(lam)
    mu = Fraction(mu)
    if symbol.rank != m or symbol.degree != k:
        raise ValueError(f"symbol has shape ({symbol.rank}, {symbol.degree}), want ({m}, {k})")
    if symbol.twist != 0 or Fraction(symbol.weight) != mu - lam:
        raise ValueError("symbol must be twist-free with weight mu - lambda")
    coeffs = density_quant_coefficients(m, k, lam, mu)
    return quantization_operator(symbol, coeffs.values, lam, mu), coeffs


def symbolic_solution(m, k, lam=Fraction(1, 2)):
    """Coefficients as rational functions of the weight shift, plus the
    determinant of the solved subsystem.

    Every equation entry is affine in delta (each residual term passes
    through exactly one weight-bearing derivative), so entries are exact
    interpolations of assemblies at delta = 0 and 1, verified at delta = 2.
    """
    lam = Fraction(lam)
    if k == 0:
        return [RatFunc.const(1)], DPoly.const(1)
    degrees = tuple(d for d in _SOLVE_DEGREES if d <= max(k, 1))
    eq0 = _equations(m, k, lam, lam + 0, degrees)
    eq1 = _equations(m, k, lam, lam + 1, degrees)
    eq2 = _equations(m, k, lam, lam + 2, degrees)
    keys = sorted(set(eq0) | set(eq1) | set(eq2))

    def entry(eqs, key, col):
        got = eqs.get(key)
        if got is None:
            return Fraction(0)
        row, rhs = got
        return Fraction(rhs if col == k else row[col])

    matrix: dict = {}
    rhs_poly: dict = {}
    for key in keys:
        row = []
        for col in range(k + 1):
            a = entry(eq0, key, col)
            b = entry(eq1, key, col)
            c = entry(eq2, key, col)
            assert c == 2 * b - a, "matrix entry is not affine in delta"
            row.append(DPoly((a, b - a)))
        matrix[key] = row[:k]
        rhs_poly[key] = row[k]
    system = LinearSystem(k)
    selected: list = []
    for key in keys:
        rat_row = [RatFunc(p) for p in matrix[key]]
        if system.add(rat_row, RatFunc(rhs_poly[key])):
            selected.append(key)
        if len(selected) == k:
            break
    if len(selected) < k:
        raise RuntimeError("sample family failed to span the quantization system")
    square = [matrix[key] for key in selected]
    rhs_col = [rhs_poly[key] for key in selected]
    det = _poly_det(square)
    if not det:
        raise RuntimeError("selected subsystem is identically singular")
    coeffs = [RatFunc.const(1)]
    for col in range(k):
        replaced = [
            [rhs_col[r] if c == col else square[r][c] for c in range(k)]
            for r in range(k)
        ]
        coeffs.append(RatFunc(_poly_det(replaced), det))
    # every remaining equation must hold identically in delta
    for key in keys:
        total = RatFunc(DPoly())
        for col in range(k):
            total = total + RatFunc(matrix[key][col]) * coeffs[col + 1]
        assert total == RatFunc(rhs_poly[key]), "inconsistent equation off resonance"
    return coeffs, det


def _poly_det(matrix):
    """Determinant over the polynomial ring by Laplace expansion (tiny sizes)."""
    n = len(matrix)
    if n == 0:
        return DPoly.const(1)
    if n == 1:
        return matrix[0][0]
    total = DPoly()
    sign = 1
    for col in range(n):
        top = matrix[0][col]
        if top:
            minor = [
                [matrix[r][c] for c in range(n) if c != col] for r in range(1, n)
            ]
            term = top * _poly_det(minor)
            total = total + (term if sign > 0 else -term)
        sign = -sign
    return total


@lru_cache(maxsize=None)
def solver_singular_deltas(m: int, k: int, lam=Fraction(1, 2)) -> tuple[Fraction, ...]:
    """All rational weight shifts at which the quantization solve degenerates.

    Candidates are the rational roots of the symbolic subsystem
    determinant; where the determinant is nonzero the subsystem is
    invertible and the full equation set was checked consistent
    identically in delta, so no other rational shift can fail.  Each
    candidate is then confirmed against the fixed-weight solver.
    """
    if k == 0:
        return ()
    lam = Fraction(lam)
    _, det = symbolic_solution(m, k, lam)
    singular = []
    for root, _ in sorted(rational_roots(det)):
        try:
            _cached_coefficients(m, k, lam, lam + root)
        except ResonantWeight:
            singular.append(root)
    return tuple(singular)


@dataclass(frozen=True)
class EquivarianceReport:
    """Exactness of the commutation defect per grading of the generator."""

    translations_exact: bool
    linear_exact: bool
    quadratic_exact: bool
    failures: tuple[str, ...] = ()

    @property
    def all_exact(self) -> bool:
        return self.translations_exact and self.linear_exact and self.quadratic_exact


def _lie_scalar(field: PolyVectorField, f: Poly, weight) -> Poly:
    total = Poly.zero(field.rank)
    for j in range(field.rank):
        if field.components[j]:
            total = total + field.components[j] * f.diff(j)
    return total + (field.div * f).scale(weight)


def verify_equivariance(
    m, k, lam, mu, coefficients, symbols, functions
) -> EquivarianceReport:
    """Check L_X(Q(P) f) = Q(L_X P) f + Q(P)(L_X f) over a generating set.

    Residuals are computed exactly for every basis generator of sl(m+1),
    each sample symbol, and each test function; nonzero residuals are
    reported per grading rather than raised.
    """
    lam = Fraction(lam)
    mu = Fraction(mu)
    exact = {-1: True, 0: True, 1: True}
    failures = []
    for h in sl_basis(m):
        grading = generator_grading(h)
        field = proj_embedding(h)
        for si, symbol in enumerate(symbols):
            qop = quantization_operator(symbol, coefficients, lam, mu)
            moved = quantization_operator(
                lie_derivative(field, symbol), coefficients, lam, mu
            )
            for fi, f in enumerate(functions):
                lhs = _lie_scalar(field, qop.apply(f), mu)
                rhs = moved.apply(f) + qop.apply(_lie_scalar(field, f, lam))
                if lhs != rhs:
                    exact[grading] = False
                    failures.append(f"grading {grading}, symbol {si}, function {fi}")
    return EquivarianceReport(
        translations_exact=exact[-1],
        linear_exact=exact[0],
        quadratic_exact=exact[1],
        failures=tuple(failures),
    )
