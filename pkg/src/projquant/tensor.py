"""Tensor product decompositions: Pieri rule and Littlewood-Richardson rule.

Both rules operate on diagrams, then labels are reassembled: twists add,
weights add, and diagrams deeper than the rank are discarded (their Schur
polynomials vanish in that many variables) before canonicalization.

The Littlewood-Richardson multiplicities are computed by direct enumeration
of skew fillings with the lattice-word condition; instance sizes here stay
small enough that the simple algorithm is the right one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import IrrepLabel, canonicalize, dual

Rows = tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """Multiset of (label, multiplicity) terms in a fixed canonical order."""

    terms: tuple[tuple[IrrepLabel, int], ...]

    def __iter__(self):
        return iter(self.terms)

    def labels(self) -> list[IrrepLabel]:
        return [label for label, _ in self.terms]

    def multiplicity(self, label: IrrepLabel) -> int:
        for term, mult in self.terms:
            if term == label:
                return mult
        return 0

    @staticmethod
    def from_counts(counts: dict[IrrepLabel, int]) -> "Decomposition":
        ordered = sorted(
            ((label, mult) for label, mult in counts.items() if mult),
            key=lambda item: (item[0].diagram.rows, item[0].twist, item[0].weight),
        )
        return Decomposition(tuple(ordered))


def _horizontal_strips(rows: Rows, k: int) -> list[Rows]:
    """All diagrams obtained by adding k boxes, no two in the same column."""
    results: list[Rows] = []
    depth = len(rows)

    def place(i: int, prev_old: int, remaining: int, acc: list[int]) -> None:
        if i > depth:
            if remaining == 0:
                results.append(tuple(acc))
            return
        old = rows[i] if i < depth else 0
        if i + 1 <= depth:
            tail_capacity = sum(
                (rows[j - 1] if j - 1 < depth else 0) - (rows[j] if j < depth else 0)
                for j in range(i + 1, depth + 1)
            )
        else:
            tail_capacity = 0
        # strip condition: old <= new <= previous old row (boundless for the top row)
        upper = prev_old if i > 0 else old + remaining
        upper = min(upper, old + remaining)
        for new in range(old, upper + 1):
            used = new - old
            if remaining - used > tail_capacity:
                continue
            acc.append(new)
            place(i + 1, old, remaining - used, acc)
            acc.pop()

    place(0, 0, k, [])
    return results


def pieri(label: IrrepLabel, k: int) -> Decomposition:
    """Decomposition of label (x) S^k: one term per horizontal k-strip.

    The symmetric-power factor carries no twist and no weight, so both pass
    through unchanged (up to column stripping in canonicalization).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    counts: dict[IrrepLabel, int] = {}
    for rows in _horizontal_strips(label.diagram.rows, k):
        if len(tuple(r for r in rows if r)) > label.rank:
            continue
        term = canonicalize(rows, label.rank, label.twist, label.weight)
        counts[term] = counts.get(term, 0) + 1
    return Decomposition.from_counts(counts)


def _outer_shapes(inner: Rows, total: int, max_depth: int) -> list[Rows]:
    """Partitions of `total` boxes containing `inner`, at most `max_depth` rows."""
    results: list[Rows] = []
    extra = total - sum(inner)

    def build(i: int, prev: int, remaining: int, acc: list[int]) -> None:
        if remaining == 0:
            results.append(tuple(acc) + inner[i:])
            return
        if i >= max_depth:
            return
        low = inner[i] if i < len(inner) else 0
        high = min(prev, low + remaining)
        for c in range(low, high + 1):
            # rows below must still be able to hold their inner parts
            acc.append(c)
            build(i + 1, c, remaining - (c - low), acc)
            acc.pop()

    build(0, sum(inner) + extra, extra, [])
    cleaned = []
    for rows in results:
        rows = tuple(r for r in rows if r)
        if all(a >= b for a, b in zip(rows, rows[1:])):
            cleaned.append(rows)
    return sorted(set(cleaned), reverse=True)


def _lr_fillings(outer: Rows, inner: Rows, content: Rows) -> int:
    """Number of skew fillings of outer/inner with the given content that are
    semistandard and whose reverse reading word is a lattice word.

    Cells are filled in reverse reading order (each row right to left, rows
    top to bottom), which makes the lattice condition checkable as letters
    are placed: letter v may appear only while #v placed so far stays below
    #(v-1).
    """
    depth = len(outer)
    inner = inner + (0,) * (depth - len(inner))
    cells = [
        (r, c) for r in range(depth) for c in range(outer[r] - 1, inner[r] - 1, -1)
    ]
    p = len(content)
    remaining = list(content)
    seen = [0] * (p + 1)
    grid: dict[tuple[int, int], int] = {}
    count = 0

    def fill(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        right = grid.get((r, c + 1))
        # an inner-shape cell above imposes no constraint; grid holds skew cells only
        above = grid.get((r - 1, c)) if r > 0 else None
        for v in range(1, p + 1):
            if remaining[v - 1] == 0:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            if v > 1 and seen[v] + 1 > seen[v - 1]:
                continue
            grid[(r, c)] = v
            remaining[v - 1] -= 1
            seen[v] += 1
            fill(idx + 1)
            seen[v] -= 1
            remaining[v - 1] += 1
            del grid[(r, c)]

    fill(0)
    return count


def littlewood_richardson(a: IrrepLabel, b: IrrepLabel) -> Decomposition:
    """Full decomposition of a (x) b over a common rank.

    Multiplicity of an outer shape c is the number of lattice skew fillings
    of c/a with content b.  Shapes deeper than the rank are discarded before
    canonicalization; twists and weights add.
    """
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    m = a.rank
    inner = a.diagram.rows
    content = b.diagram.rows
    total = a.size + b.size
    counts: dict[IrrepLabel, int] = {}
    max_depth = len(inner) + len(content) if total else 0
    for outer in _outer_shapes(inner, total, max(max_depth, 1)):
        if outer and outer[0] > a.diagram.first_row + b.diagram.first_row:
            continue
        mult = _lr_fillings(outer, inner, content)
        if mult == 0:
            continue
        if len(outer) > m:
            continue
        term = canonicalize(outer, m, a.twist + b.twist, a.weight + b.weight)
        counts[term] = counts.get(term, 0) + mult
    return Decomposition.from_counts(counts)


def symbol_rep(v1: IrrepLabel, v2: IrrepLabel, k: int) -> Decomposition:
    """Decomposition of v1* (x) v2 (x) S^k into irreducibles.

    Every term carries weight weight(v2) - weight(v1); that invariant is
    asserted, since downstream resonance checks rely on it.
    """
    if v1.rank != v2.rank:
        raise ValueError(f"rank mismatch: {v1.rank} vs {v2.rank}")
    shift = Fraction(v2.weight) - Fraction(v1.weight)
    counts: dict[IrrepLabel, int] = {}
    for pair, mult in littlewood_richardson(dual(v1), v2).terms:
        for term, submult in pieri(pair, k).terms:
            assert term.weight == shift, (term, shift)
            counts[term] = counts.get(term, 0) + mult * submult
    return Decomposition.from_counts(counts)
