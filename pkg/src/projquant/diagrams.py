"""Young diagrams and the classification of GL(m) irreducibles.

A finite-dimensional continuous irreducible representation of GL(m) is
classified by a triple: a Young diagram of depth at most m-1, an integer
power of the determinant character (the *twist*), and a rational power of
|det| (the *weight*).  A diagram with a full column of m boxes is the
determinant character in disguise, so full columns are stripped and folded
into the twist; that normal form makes the triple a unique key.

Weights are exact rationals throughout: every downstream formula is
polynomial with rational coefficients, and exactness keeps resonance
detection decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rows = tuple[int, ...]


@dataclass(frozen=True)
class YoungDiagram:
    """Non-increasing row lengths; trailing zeros are trimmed on construction."""

    rows: Rows = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        if any(r < 0 for r in rows):
            raise ValueError(f"negative row length in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be non-increasing: {rows}")
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def depth(self) -> int:
        return len(self.rows)

    @property
    def first_row(self) -> int:
        return self.rows[0] if self.rows else 0

    def row(self, i: int) -> int:
        """Length of 0-based row i, zero beyond the depth."""
        return self.rows[i] if i < len(self.rows) else 0

    def padded(self, length: int) -> Rows:
        if length < self.depth:
            raise ValueError(f"cannot pad depth-{self.depth} diagram to length {length}")
        return self.rows + (0,) * (length - self.depth)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows) if self.rows else "0"

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """Parse comma-separated row lengths, e.g. ``"3,2,2"``; ``"0"`` is empty."""
        parts = [chunk.strip() for chunk in text.split(",")]
        try:
            rows = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"invalid diagram text {text!r}") from exc
        return cls(rows)


@dataclass(frozen=True)
class IrrepLabel:
    """Classifier (diagram, rank m, twist n, weight delta) of a GL(m) irreducible.

    The label must be canonical: diagram depth at most rank - 1.  Use
    :func:`canonicalize` to build labels from raw row data.
    """

    diagram: YoungDiagram
    rank: int
    twist: int = 0
    weight: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise ValueError(f"rank must be at least 2, got {self.rank}")
        if self.diagram.depth > self.rank - 1:
            raise ValueError(
                f"diagram depth {self.diagram.depth} exceeds rank {self.rank} - 1; "
                "canonicalize first"
            )
        object.__setattr__(self, "weight", Fraction(self.weight))
        object.__setattr__(self, "twist", int(self.twist))

    @property
    def size(self) -> int:
        return self.diagram.size

    def padded_rows(self) -> Rows:
        return self.diagram.padded(self.rank)

    def with_weight(self, weight: Fraction) -> "IrrepLabel":
        return IrrepLabel(self.diagram, self.rank, self.twist, Fraction(weight))

    def __str__(self) -> str:
        return f"D={self.diagram}; m={self.rank}; n={self.twist}; delta={self.weight}"

    @classmethod
    def parse(cls, text: str) -> "IrrepLabel":
        """Parse ``"D=3,2,2; m=4; n=0; delta=1/2"`` (fields in any order)."""
        fields: dict[str, str] = {}
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            key, _, value = chunk.partition("=")
            fields[key.strip().lower()] = value.strip()
        missing = {"d", "m", "n", "delta"} - fields.keys()
        if missing:
            raise ValueError(f"label text {text!r} is missing fields {sorted(missing)}")
        return cls(
            YoungDiagram.parse(fields["d"]),
            int(fields["m"]),
            int(fields["n"]),
            Fraction(fields["delta"]),
        )


def canonicalize(
    rows: Iterable[int],
    rank: int,
    twist: int = 0,
    weight: Fraction | int = 0,
) -> IrrepLabel:
    """Normal form of (rows, rank, twist, weight).

    A full column of `rank` boxes is the determinant character, so if every
    row is positive the minimal row length r is subtracted throughout and r
    is added to the twist.  Rejects non-monotone rows and depth > rank.
    """
    diagram = YoungDiagram(tuple(rows))
    if diagram.depth > rank:
        raise ValueError(f"diagram depth {diagram.depth} exceeds rank {rank}")
    if diagram.depth == rank:
        strip = diagram.rows[-1]
        diagram = YoungDiagram(tuple(r - strip for r in diagram.rows))
        twist += strip
    return IrrepLabel(diagram, rank, twist, Fraction(weight))


def dual(label: IrrepLabel) -> IrrepLabel:
    """Contragredient label: complemented diagram, twist -n-d1, weight -delta.

    The diagram is complemented inside the rank x d1 rectangle (rows read
    bottom-up).  Involution on canonical labels.
    """
    m = label.rank
    d = label.diagram.padded(m)
    d1 = d[0]
    complement = tuple(d1 - d[m - 1 - i] for i in range(m))
    return canonicalize(complement, m, -label.twist - d1, -label.weight)


def extend_rank(label: IrrepLabel) -> IrrepLabel:
    """Rank m+1 label with the same diagram and twist and weight zero."""
    return IrrepLabel(label.diagram, label.rank + 1, label.twist, Fraction(0))


def extend_rank_dual(label: IrrepLabel) -> IrrepLabel:
    """Dual of the rank extension of the dual.

    On diagrams this prepends a copy of the first row; the twist survives
    the double complement unchanged and the weight is zeroed.
    """
    out = dual(extend_rank(dual(label)))
    rows = label.diagram.rows
    expected = canonicalize(
        (rows[0],) + rows if rows else (), label.rank + 1, label.twist, 0
    )
    assert out.diagram == expected.diagram, (out, expected)
    return out


def dimension(label: IrrepLabel) -> int:
    """Dimension of the irreducible by the Weyl product formula.

    prod_{i<j} (lam_i - lam_j + j - i)/(j - i) over rows padded to the rank;
    independent of twist and weight.
    """
    lam = label.diagram.padded(label.rank)
    num = 1
    den = 1
    for i in range(label.rank):
        for j in range(i + 1, label.rank):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(matrix)
    a = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def schur_eval(diagram: YoungDiagram, point: Sequence[Fraction]) -> Fraction:
    """Schur polynomial value at a point with distinct nonzero coordinates.

    Computed as the ratio of alternants det(x_i^{lam_j+m-1-j}) / Vandermonde.
    Zero when the diagram is deeper than the number of variables.
    """
    xs = [Fraction(x) for x in point]
    m = len(xs)
    if len(set(xs)) != m:
        raise ValueError(f"point coordinates must be pairwise distinct: {xs}")
    if any(x == 0 for x in xs):
        raise ValueError(f"point coordinates must be nonzero: {xs}")
    if diagram.depth > m:
        return Fraction(0)
    lam = diagram.padded(m)
    num = _det([[x ** (lam[j] + m - 1 - j) for j in range(m)] for x in xs])
    den = _det([[x ** (m - 1 - j) for j in range(m)] for x in xs])
    return num / den


def char_eval(label: IrrepLabel, point: Sequence[Fraction]) -> Fraction:
    """Character value s_D(x) * (x1...xm)^twist of the rational part of a label.

    The |det|^weight factor is continuous, not rational, and is excluded;
    this is the quantity that character identities balance exactly.
    """
    if len(point) != label.rank:
        raise ValueError(f"need {label.rank} coordinates, got {len(point)}")
    value = schur_eval(label.diagram, point)
    prod = Fraction(1)
    for x in point:
        prod *= Fraction(x)
    return value * prod**label.twist
