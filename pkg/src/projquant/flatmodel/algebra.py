"""The projective embedding of sl(m+1) and its Casimir operator on flat space.

Traceless (m+1)x(m+1) matrices act on affine space through the projective
action on lines; in block form h = [[A, u], [xi, a]] with a = -tr A the
generated field is

    X_h = u  +  (A - a Id) x  -  (xi . x) x,

constant for the u block, linear for the A block, quadratic for the xi
block.  The map is an antihomomorphism: [X_h, X_k] = -X_{[h,k]}.

The Casimir operator sums L_u L_{u+} over a Killing-dual pair of bases,
with the Killing form kappa(X, Y) = 2(m+1) tr(XY); on a section attached to
an irreducible label it acts by the scalar eigenvalue, which is what the
exact tests downstream verify.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .linalg import invert_matrix
from .poly import Poly
from .sections import PolyVectorField, TensorSection, lie_derivative

Matrix = tuple[tuple[Fraction, ...], ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def matrix_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def matrix_trace(a: Matrix) -> Fraction:
    return sum(a[i][i] for i in range(len(a)))


def matrix_bracket(a: Matrix, b: Matrix) -> Matrix:
    ab = matrix_mul(a, b)
    ba = matrix_mul(b, a)
    n = len(a)
    return tuple(tuple(ab[i][j] - ba[i][j] for j in range(n)) for i in range(n))


def killing_form(a: Matrix, b: Matrix) -> Fraction:
    """kappa(a, b) = 2(m+1) tr(ab) on sl(m+1)."""
    n = len(a)
    return 2 * n * matrix_trace(matrix_mul(a, b))


def sl_basis(m: int) -> list[Matrix]:
    """Elementary traceless matrices spanning sl(m+1), in a fixed order.

    Off-diagonal units E_ab first (row-major), then E_ii - E_{m+1,m+1}.
    """
    if m < 2:
        raise ValueError("rank must be at least 2")
    p = m + 1
    basis: list[Matrix] = []
    for a in range(p):
        for b in range(p):
            if a != b:
                basis.append(
                    tuple(
                        tuple(
                            Fraction(1) if (i, j) == (a, b) else Fraction(0)
                            for j in range(p)
                        )
                        for i in range(p)
                    )
                )
    for i in range(m):
        basis.append(
            tuple(
                tuple(
                    Fraction(1)
                    if (r, c) == (i, i)
                    else Fraction(-1)
                    if (r, c) == (m, m)
                    else Fraction(0)
                    for c in range(p)
                )
                for r in range(p)
            )
        )
    return basis


@lru_cache(maxsize=None)
def killing_dual_basis(m: int) -> tuple[tuple[Matrix, ...], tuple[Matrix, ...]]:
    """Basis of sl(m+1) together with its Killing-dual basis.

    The dual is obtained by exact inversion of the Gram matrix, so the
    pairing kappa(u_i, u+_j) is exactly the identity.
    """
    basis = sl_basis(m)
    p = len(basis)
    gram = [[killing_form(basis[i], basis[j]) for j in range(p)] for i in range(p)]
    inv = invert_matrix(gram)
    dual: list[Matrix] = []
    size = m + 1
    for i in range(p):
        entries = [
            [
                sum(inv[j][i] * basis[j][r][c] for j in range(p))
                for c in range(size)
            ]
            for r in range(size)
        ]
        dual.append(_as_matrix(entries))
    for i in range(p):
        for j in range(p):
            expected = Fraction(1) if i == j else Fraction(0)
            assert killing_form(basis[i], dual[j]) == expected
    return tuple(basis), tuple(dual)


def _plain(value: Fraction):
    """Demote integral Fractions to int so polynomial products stay on the
    fast integer path."""
    return value.numerator if value.denominator == 1 else value


def proj_embedding(h) -> PolyVectorField:
    """Vector field generated by a traceless matrix under the projective action."""
    h = _as_matrix(h)
    m = len(h) - 1
    if m < 2:
        raise ValueError("matrix must be at least 3x3")
    if matrix_trace(h) != 0:
        raise ValueError(f"matrix must be traceless, got trace {matrix_trace(h)}")
    a = h[m][m]
    comps = []
    for i in range(m):
        p = Poly.zero(m)
        if h[i][m]:
            p = p + Poly.constant(m, _plain(h[i][m]))
        for j in range(m):
            c = h[i][j] - (a if i == j else 0)
            if c:
                p = p + Poly.variable(m, j).scale(_plain(c))
        for j in range(m):
            if h[m][j]:
                p = p - (Poly.variable(m, j) * Poly.variable(m, i)).scale(_plain(h[m][j]))
        comps.append(p)
    return PolyVectorField(tuple(comps))


@lru_cache(maxsize=None)
def casimir_field_pairs(m: int) -> tuple[tuple[PolyVectorField, PolyVectorField, Fraction], ...]:
    """Killing-dual field pairs, the dual scaled to integer entries.

    Each entry is (embedded u, embedded c * u_dual, 1/c) with c clearing the
    denominators of the dual matrix; the Lie derivative is linear in the
    field, so the scalar is reapplied after both derivatives.
    """
    basis, dual = killing_dual_basis(m)
    pairs = []
    for u, ud in zip(basis, dual):
        c = lcm(*(x.denominator for row in ud for x in row))
        scaled = tuple(tuple(x * c for x in row) for row in ud)
        pairs.append((proj_embedding(u), proj_embedding(scaled), Fraction(1, c)))
    return tuple(pairs)


def classical_casimir(section: TensorSection) -> TensorSection:
    """Casimir operator along the projective embedding, exactly.

    Sum of iterated Lie derivatives over the cached Killing-dual field
    pairs; independent of the basis choice.
    """
    m = section.rank
    total = TensorSection(m, section.degree, section.twist, section.weight)
    for outer, inner, scale in casimir_field_pairs(m):
        term = lie_derivative(outer, lie_derivative(inner, section))
        total = total + (term if scale == 1 else term.scale(scale))
    return total
