"""Polynomial vector fields and weighted tensor fields on flat space.

A section of twist n and weight delta with k contravariant slots is stored
as a map from full index tuples to polynomial coefficients.  The Lie
derivative along a polynomial vector field X is

    (L_X T)^I = X . T^I  -  sum_slots (DX acting on the slot)  +  (delta - n) div(X) T^I

which reproduces the classical bracket on vector fields and makes the trace
coupling of twist and weight opposite in sign; that relative sign is pinned
by the Casimir eigenvalue checks and by the location of the first
quantization resonance.

Only symmetric-power sections and the alternating two-slot case are given
constructors; those are the shapes the eigenvalue oracle exercises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Mapping

from .poly import Poly

Index = tuple[int, ...]


@dataclass(frozen=True)
class PolyVectorField:
    """Vector field with polynomial components; Jacobian data precomputed."""

    components: tuple[Poly, ...]
    jacobian: tuple[tuple[Poly, ...], ...] = field(init=False, compare=False, repr=False)
    div: Poly = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        m = len(self.components)
        jac = tuple(
            tuple(self.components[i].diff(j) for j in range(m)) for i in range(m)
        )
        div = Poly.zero(m)
        for j in range(m):
            div = div + jac[j][j]
        object.__setattr__(self, "jacobian", jac)
        object.__setattr__(self, "div", div)

    @property
    def rank(self) -> int:
        return len(self.components)

    def bracket(self, other: "PolyVectorField") -> "PolyVectorField":
        """Commutator [self, other] of vector fields."""
        m = self.rank
        comps = []
        for i in range(m):
            acc = Poly.zero(m)
            for j in range(m):
                acc = acc + self.components[j] * other.jacobian[i][j]
                acc = acc - other.components[j] * self.jacobian[i][j]
            comps.append(acc)
        return PolyVectorField(tuple(comps))

    def is_zero(self) -> bool:
        return all(not c for c in self.components)


class TensorSection:
    """Weighted polynomial tensor field: full index tuples -> coefficients."""

    __slots__ = ("rank", "degree", "twist", "weight", "coeffs")

    def __init__(
        self,
        rank: int,
        degree: int,
        twist: int,
        weight,
        coeffs: Mapping[Index, Poly] | None = None,
    ):
        self.rank = rank
        self.degree = degree
        self.twist = twist
        self.weight = weight
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSection):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.degree == other.degree
            and self.twist == other.twist
            and self.weight == other.weight
            and self.coeffs == other.coeffs
        )

    def component(self, index: Index) -> Poly:
        return self.coeffs.get(tuple(index), Poly.zero(self.rank))

    def __add__(self, other: "TensorSection") -> "TensorSection":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            out[k] = v if s is None else s + v
        return TensorSection(self.rank, self.degree, self.twist, self.weight, out)

    def __sub__(self, other: "TensorSection") -> "TensorSection":
        return self + other.scale(-1)

    def scale(self, factor) -> "TensorSection":
        return TensorSection(
            self.rank,
            self.degree,
            self.twist,
            self.weight,
            {k: v.scale(factor) for k, v in self.coeffs.items()},
        )

    def max_coefficient_degree(self) -> int:
        return max((p.total_degree() for p in self.coeffs.values()), default=-1)

    def is_symmetric(self) -> bool:
        for index, p in self.coeffs.items():
            for perm in permutations(index):
                if self.component(perm) != p:
                    return False
        return True

    def _check_compatible(self, other: "TensorSection") -> None:
        if (
            self.rank != other.rank
            or self.degree != other.degree
            or self.twist != other.twist
            or self.weight != other.weight
        ):
            raise ValueError("sections live in different bundles")

    def __repr__(self) -> str:
        return (
            f"TensorSection(rank={self.rank}, degree={self.degree}, "
            f"twist={self.twist}, weight={self.weight}, {len(self.coeffs)} coeffs)"
        )


def symmetric_section(
    rank: int, degree: int, twist: int, weight, data: Mapping[Index, Poly]
) -> TensorSection:
    """Build a symmetric section from coefficients keyed by sorted index tuples."""
    coeffs: dict[Index, Poly] = {}
    for index, p in data.items():
        if tuple(sorted(index)) != tuple(index):
            raise ValueError(f"key {index} is not sorted")
        for perm in set(permutations(index)):
            coeffs[perm] = p
    return TensorSection(rank, degree, twist, weight, coeffs)


def alternating_section(
    rank: int, twist: int, weight, data: Mapping[Index, Poly]
) -> TensorSection:
    """Build an antisymmetric two-slot section from coefficients keyed by i < j."""
    coeffs: dict[Index, Poly] = {}
    for (i, j), p in data.items():
        if not i < j:
            raise ValueError(f"key {(i, j)} must have i < j")
        coeffs[(i, j)] = p
        coeffs[(j, i)] = p.scale(-1)
    return TensorSection(rank, 2, twist, weight, coeffs)


def random_polynomial(rank: int, max_degree: int, rng) -> Poly:
    coeffs = {}
    for exps in product(range(max_degree + 1), repeat=rank):
        if sum(exps) <= max_degree:
            coeffs[exps] = rng.randint(-3, 3)
    return Poly(rank, coeffs)


def random_section(
    rank: int,
    diagram_rows: tuple[int, ...],
    twist: int,
    weight,
    max_degree: int,
    rng,
) -> TensorSection:
    """Random section of the bundle labelled by (diagram, twist, weight).

    Supports the trivial diagram, one-row diagrams (symmetric powers), and
    the two-box column (alternating two-tensors); other shapes would need
    explicit symmetry projectors and are out of scope here.
    """
    rows = tuple(r for r in diagram_rows if r)
    if rows == ():
        return TensorSection(
            rank, 0, twist, weight, {(): random_polynomial(rank, max_degree, rng)}
        )
    if len(rows) == 1:
        k = rows[0]
        data = {
            index: random_polynomial(rank, max_degree, rng)
            for index in combinations_with_replacement(range(rank), k)
        }
        return symmetric_section(rank, k, twist, weight, data)
    if rows == (1, 1):
        data = {
            (i, j): random_polynomial(rank, max_degree, rng)
            for i in range(rank)
            for j in range(i + 1, rank)
        }
        return alternating_section(rank, twist, weight, data)
    raise ValueError(f"no section model for diagram {rows}")


def lie_derivative(field: PolyVectorField, section: TensorSection) -> TensorSection:
    """Lie derivative of a weighted tensor section along a polynomial field.

    Exact; output coefficient degree is bounded by
    max_degree(section) + deg(field) - 1.
    """
    m = section.rank
    if field.rank != m:
        raise ValueError("field and section rank differ")
    jac = field.jacobian
    trace_factor = section.weight - section.twist
    out: dict[Index, Poly] = {}

    def accumulate(index: Index, p: Poly) -> None:
        if not p:
            return
        s = out.get(index)
        out[index] = p if s is None else s + p

    weighted_div = field.div.scale(trace_factor) if field.div else None
    for index, p in section.coeffs.items():
        transport = Poly.zero(m)
        for j in range(m):
            if field.components[j]:
                transport = transport + field.components[j] * p.diff(j)
        if weighted_div is not None and weighted_div:
            transport = transport + weighted_div * p
        accumulate(index, transport)
        # slot action scatters from source slot value j to target value i
        for slot in range(section.degree):
            j = index[slot]
            for i in range(m):
                g = jac[i][j]
                if g:
                    target = list(index)
                    target[slot] = i
                    accumulate(tuple(target), (g * p).scale(-1))
    return TensorSection(m, section.degree, section.twist, section.weight, out)


def divergence(section: TensorSection) -> TensorSection:
    """Contract the first slot with a derivative: (Div T)^I = sum_j d_j T^{jI}.

    Intended for symmetric sections, where the slot choice is immaterial.
    """
    if section.degree < 1:
        raise ValueError("divergence needs at least one slot")
    m = section.rank
    out: dict[Index, Poly] = {}
    for index in product(range(m), repeat=section.degree - 1):
        acc = Poly.zero(m)
        for j in range(m):
            p = section.coeffs.get((j,) + index)
            if p:
                acc = acc + p.diff(j)
        if acc:
            out[index] = acc
    return TensorSection(m, section.degree - 1, section.twist, section.weight, out)
