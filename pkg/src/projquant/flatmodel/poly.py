"""Sparse multivariate polynomials over exact scalars.

Coefficients may be ints, Fractions, or any exact scalar type supporting
ring arithmetic and comparison with 0 (the symbolic-weight machinery feeds
rational functions through the same code paths).  Keys are exponent tuples,
one entry per variable; zero coefficients are dropped eagerly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple[int, ...]


class Poly:
    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Poly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Iterable[int], value=1) -> "Poly":
        return cls(nvars, {tuple(exps): value})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        result = Poly.__new__(Poly)
        result.nvars = self.nvars
        result.coeffs = out
        return result

    def __neg__(self) -> "Poly":
        result = Poly.__new__(Poly)
        result.nvars = self.nvars
        result.coeffs = {k: -v for k, v in self.coeffs.items()}
        return result

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            out: dict[Monomial, object] = {}
            for ka, va in self.coeffs.items():
                for kb, vb in other.coeffs.items():
                    k = tuple(a + b for a, b in zip(ka, kb))
                    s = out.get(k, 0) + va * vb
                    if s == 0:
                        out.pop(k, None)
                    else:
                        out[k] = s
            result = Poly.__new__(Poly)
            result.nvars = self.nvars
            result.coeffs = out
            return result
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor) -> "Poly":
        if factor == 0:
            return Poly(self.nvars)
        result = Poly.__new__(Poly)
        result.nvars = self.nvars
        result.coeffs = {k: v * factor for k, v in self.coeffs.items()}
        return result

    def diff(self, index: int) -> "Poly":
        out: dict[Monomial, object] = {}
        for k, v in self.coeffs.items():
            e = k[index]
            if e:
                kk = list(k)
                kk[index] = e - 1
                out[tuple(kk)] = v * e
        result = Poly.__new__(Poly)
        result.nvars = self.nvars
        result.coeffs = out
        return result

    def total_degree(self) -> int:
        """Largest monomial degree; -1 for the zero polynomial."""
        return max((sum(k) for k in self.coeffs), default=-1)

    def eval(self, point) -> Fraction:
        total = Fraction(0)
        for k, v in self.coeffs.items():
            term = Fraction(v)
            for x, e in zip(point, k):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.nvars, {k: fn(v) for k, v in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        parts = []
        for k in sorted(self.coeffs):
            factors = [f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(k) if e]
            mono = "*".join(factors) if factors else "1"
            parts.append(f"{self.coeffs[k]}*{mono}")
        return "Poly(" + " + ".join(parts) + ")"
