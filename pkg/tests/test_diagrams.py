import random
from fractions import Fraction

import pytest

from projquant import (
    IrrepLabel,
    YoungDiagram,
    canonicalize,
    char_eval,
    dimension,
    dual,
    extend_rank,
    extend_rank_dual,
    schur_eval,
)
from support import random_canonical_label, random_point, schur_by_tableaux


def test_diagram_normalization_and_text():
    d = YoungDiagram((3, 2, 2, 0, 0))
    assert d.rows == (3, 2, 2)
    assert d.size == 7 and d.depth == 3
    assert str(d) == "3,2,2"
    assert YoungDiagram.parse("3,2,2") == d
    assert YoungDiagram.parse("0") == YoungDiagram(())
    assert str(YoungDiagram(())) == "0"


def test_diagram_rejects_bad_rows():
    with pytest.raises(ValueError):
        YoungDiagram((1, 2))
    with pytest.raises(ValueError):
        YoungDiagram((2, -1))


def test_canonicalize_examples():
    label = canonicalize((2, 1), 3, 0, 0)
    assert label.diagram.rows == (2, 1) and label.twist == 0 and label.weight == 0

    stripped = canonicalize((2, 1, 1), 3, 0, 0)
    assert stripped.diagram.rows == (1,) and stripped.twist == 1 and stripped.weight == 0

    with pytest.raises(ValueError):
        canonicalize((1, 2), 3, 0, 0)
    with pytest.raises(ValueError):
        canonicalize((1, 1, 1, 1), 3, 0, 0)


def test_label_text_round_trip():
    label = canonicalize((3, 2, 2), 4, -1, Fraction(1, 2))
    assert str(label) == "D=3,2,2; m=4; n=-1; delta=1/2"
    assert IrrepLabel.parse(str(label)) == label
    trivial = canonicalize((), 2, 0, Fraction(-2, 3))
    assert IrrepLabel.parse(str(trivial)) == trivial


def test_label_requires_canonical_depth():
    with pytest.raises(ValueError):
        IrrepLabel(YoungDiagram((1, 1)), 2)
    with pytest.raises(ValueError):
        IrrepLabel(YoungDiagram(()), 1)


def test_dual_examples():
    trivial = canonicalize((), 2, 0, 0)
    assert dual(trivial) == trivial

    standard = canonicalize((1,), 2, 0, 0)
    assert dual(standard) == canonicalize((1,), 2, -1, 0)


def test_dual_character_oracle():
    # the dual character at x equals the character at the inverted point
    rng = random.Random(101)
    for _ in range(40):
        rank = rng.choice((2, 3, 4))
        label = random_canonical_label(rng, rank)
        point = random_point(rng, rank)
        inverted = tuple(1 / x for x in point)
        assert char_eval(dual(label), point) == char_eval(label, inverted)


def test_dual_is_involution():
    rng = random.Random(7)
    for _ in range(50):
        rank = rng.choice((2, 3, 4))
        label = random_canonical_label(rng, rank)
        assert dual(dual(label)) == label


def test_extend_rank_examples():
    label = canonicalize((3, 2, 2), 4, 0, Fraction(5, 2))
    lifted = extend_rank(label)
    assert lifted.diagram.rows == (3, 2, 2)
    assert lifted.rank == 5 and lifted.twist == 0 and lifted.weight == 0

    for delta in (Fraction(1, 3), Fraction(-2)):
        scalar = canonicalize((), 2, 0, delta)
        assert extend_rank(scalar) == canonicalize((), 3, 0, 0)

    for k in range(1, 5):
        row = canonicalize((k,), 3, 2, Fraction(1, 2))
        lifted = extend_rank(row)
        assert lifted.diagram.rows == (k,) and lifted.twist == 2 and lifted.weight == 0


def test_extend_rank_dual_prepends_first_row():
    label = canonicalize((3, 2, 2), 4, 0, 0)
    assert extend_rank_dual(label).diagram.rows == (3, 3, 2, 2)
    assert extend_rank_dual(label).rank == 5

    scalar = canonicalize((), 2, 1, Fraction(1, 2))
    out = extend_rank_dual(scalar)
    assert out.diagram.rows == () and out.rank == 3 and out.twist == 1


def test_extend_rank_dual_matches_hand_composition():
    # chase dual -> extend -> dual by hand for single rows over rank 2
    for k in (1, 2):
        label = canonicalize((k,), 2, 0, 0)
        inner = dual(label)
        assert inner == canonicalize((k,), 2, -k, 0)
        lifted = extend_rank(inner)
        outer = dual(lifted)
        assert outer.diagram.rows == (k, k)
        assert extend_rank_dual(label) == outer


def test_extend_rank_dual_keeps_twist():
    rng = random.Random(13)
    for _ in range(25):
        label = random_canonical_label(rng, rng.choice((2, 3, 4)))
        out = extend_rank_dual(label)
        assert out.twist == label.twist and out.weight == 0


def test_dimension_values():
    assert dimension(canonicalize((), 3)) == 1
    assert dimension(canonicalize((1,), 3)) == 3
    # S^2 of the plane has basis xx, xy, yy
    assert dimension(canonicalize((2,), 2)) == 3


def test_dimension_dual_invariant():
    rng = random.Random(23)
    for _ in range(30):
        label = random_canonical_label(rng, rng.choice((2, 3, 4)))
        assert dimension(dual(label)) == dimension(label)


def test_schur_eval_basics():
    point = (Fraction(1), Fraction(2), Fraction(3))
    assert schur_eval(YoungDiagram(()), point) == 1
    assert schur_eval(YoungDiagram((1,)), point) == 6


def test_schur_eval_tableau_oracle():
    point = (Fraction(1), Fraction(2), Fraction(3))
    assert schur_by_tableaux((2, 1), point) == 60
    assert schur_eval(YoungDiagram((2, 1)), point) == 60

    rng = random.Random(31)
    for _ in range(25):
        m = rng.choice((2, 3, 4))
        rows = tuple(
            sorted((rng.randint(0, 3) for _ in range(rng.randint(0, m))), reverse=True)
        )
        rows = tuple(r for r in rows if r)
        point = random_point(rng, m)
        assert schur_eval(YoungDiagram(rows), point) == schur_by_tableaux(rows, point)


def test_schur_bialternant_identity_rank_two():
    rng = random.Random(37)
    for _ in range(20):
        a = rng.randint(0, 5)
        b = rng.randint(0, a)
        x, y = random_point(rng, 2)
        expected = (x ** (a + 1) * y**b - x**b * y ** (a + 1)) / (x - y)
        assert schur_eval(YoungDiagram((a, b)), (x, y)) == expected


def test_schur_eval_rejects_bad_points():
    with pytest.raises(ValueError):
        schur_eval(YoungDiagram((1,)), (Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        schur_eval(YoungDiagram((1,)), (Fraction(0), Fraction(1)))


def test_schur_deep_diagram_vanishes():
    assert schur_eval(YoungDiagram((1, 1, 1)), (Fraction(2), Fraction(3))) == 0
