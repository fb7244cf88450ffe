"""Casimir eigenvalues and resonant weights.

The Casimir operator of the projective embedding of sl(m+1) acts on sections
associated to an irreducible (D, n, delta) by a scalar alpha that is an
exact quadratic polynomial in delta with leading coefficient m/2.

A weight delta is *resonant* when some nonzero-removal component of the rank
extension shares its eigenvalue with the zero-removal component; the set of
such delta is finite.  It is computed here twice: from a closed-form
expression over removal vectors, and generically by solving
alpha_q(delta) = alpha_0(delta) for each component (the quadratic terms
cancel, leaving one root per q with slope exactly |q|).  The two routes must
agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .branching import BranchLabel, branch_labels, component
from .diagrams import IrrepLabel, extend_rank


@dataclass(frozen=True)
class EigenvaluePoly:
    """alpha(delta) = c0 + c1*delta + c2*delta**2 with exact coefficients."""

    c0: Fraction
    c1: Fraction
    c2: Fraction

    def __call__(self, delta: Fraction) -> Fraction:
        delta = Fraction(delta)
        return self.c0 + self.c1 * delta + self.c2 * delta * delta


def eigenvalue(label: IrrepLabel) -> EigenvaluePoly:
    """Casimir eigenvalue of a canonical label, as a polynomial in the weight.

    With rows d padded by zeros to the rank m, size d and twist n:

        alpha = (m(n - delta) + d)(m(n + 1 - delta) + d) / 2m
              + (1 / 2m(m+1)) * sum_{i,j=1..m}
                    d_i d_j (m kron_ij - 1) + 2 d_i (m - j)(m kron_ij - 1)
    """
    m = label.rank
    d = label.diagram.padded(m)
    size = label.size
    a = m * label.twist + size
    # (a - m*delta)(a + m - m*delta) / 2m expanded in delta
    c0 = Fraction(a * (a + m), 2 * m)
    c1 = Fraction(-(2 * a + m), 2)
    c2 = Fraction(m, 2)
    s = 0
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            kron = m if i == j else 0
            s += d[i - 1] * d[j - 1] * (kron - 1) + 2 * d[i - 1] * (m - j) * (kron - 1)
    c0 += Fraction(s, 2 * m * (m + 1))
    return EigenvaluePoly(c0, c1, c2)


def _closed_form_resonances(label: IrrepLabel) -> frozenset[Fraction]:
    m = label.rank
    n = label.twist
    d = label.diagram.padded(m)
    size = label.size
    slacks = [d[i] - (d[i + 1] if i + 1 < m else 0) for i in range(m)]
    values = set()
    for q in product(*(range(s + 1) for s in slacks)):
        norm = sum(q)
        if norm == 0:
            continue
        num = norm * (2 * (m + 1) * (n + 1) + 2 * size - norm)
        for i in range(1, m + 1):
            qi = q[i - 1]
            num += 2 * d[i - 1] * qi - qi * qi - 2 * i * qi
        values.add(Fraction(num, 2 * norm * (m + 1)))
    return frozenset(values)


def resonances_generic(label: IrrepLabel) -> frozenset[Fraction]:
    """Resonant weights found by equating eigenvalues of branching components.

    For each nonzero removal vector q of the rank extension of `label`,
    alpha_q - alpha_0 is affine in delta with slope |q|, so it has exactly
    one root; the set of those roots is returned.
    """
    parent = extend_rank(label)
    alpha0 = eigenvalue(component(parent, BranchLabel()))
    values = set()
    for q in branch_labels(parent):
        if q.norm == 0:
            continue
        alphaq = eigenvalue(component(parent, q))
        assert alphaq.c2 == alpha0.c2
        slope = alphaq.c1 - alpha0.c1
        assert slope == q.norm, (label, q, slope)
        values.add(-(alphaq.c0 - alpha0.c0) / slope)
    return frozenset(values)


def resonances(label: IrrepLabel, base: Fraction = Fraction(0)) -> frozenset[Fraction]:
    """Resonant weights of a canonical label, treating its weight slot as free.

    The closed form is cross-checked against the generic eigenvalue route on
    every call.  A nonzero `base` weight shifts the condition from delta to
    delta + base, i.e. shifts the returned set by -base.
    """
    values = _closed_form_resonances(label)
    assert values == resonances_generic(label), label
    if base:
        base = Fraction(base)
        values = frozenset(v - base for v in values)
    return values


def is_resonant(label: IrrepLabel, delta: Fraction) -> bool:
    """Whether delta is a resonant weight for the label."""
    return Fraction(delta) in resonances(label)


def resonances_for_symbols(
    v1: IrrepLabel, v2: IrrepLabel, kmax: int
) -> frozenset[Fraction]:
    """Union of resonance sets over all components of v1* (x) v2 (x) S^k, k <= kmax.

    A weight is resonant for a direct sum when it is resonant for at least
    one irreducible component, so the union is the right aggregate.
    """
    from .tensor import symbol_rep

    if v1.rank != v2.rank:
        raise ValueError(f"rank mismatch: {v1.rank} vs {v2.rank}")
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    values: set[Fraction] = set()
    for k in range(kmax + 1):
        for term, _ in symbol_rep(v1, v2, k).terms:
            values |= resonances(term)
    return frozenset(values)
