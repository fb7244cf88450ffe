import random
from fractions import Fraction

import pytest

from projquant import (
    BranchLabel,
    YoungDiagram,
    branch_labels,
    canonicalize,
    char_eval,
    component,
    dimension,
    extend_rank,
    extend_rank_dual,
    max_removal_embedding,
    schur_eval,
    zero_removal_embedding,
)
from support import random_canonical_label, random_point


def test_branch_labels_of_box():
    parent = canonicalize((1,), 3, 0, Fraction(1, 2))
    labels = branch_labels(parent)
    assert labels == [BranchLabel(()), BranchLabel((1,))]
    assert component(parent, labels[0]).diagram.rows == (1,)
    assert component(parent, labels[1]).diagram.rows == ()
    for q in labels:
        child = component(parent, q)
        assert child.twist == 0 and child.weight == Fraction(1, 2)


def test_branch_labels_of_322():
    parent = canonicalize((3, 2, 2), 4, 0, 0)
    labels = branch_labels(parent)
    assert len(labels) == 6
    assert all(q.padded(3)[1] == 0 for q in labels)
    assert {q.padded(3)[0] for q in labels} == {0, 1}
    assert {q.padded(3)[2] for q in labels} == {0, 1, 2}
    # lexicographic output order
    assert [q.padded(3) for q in labels] == sorted(q.padded(3) for q in labels)


def test_branch_labels_trivial():
    parent = canonicalize((), 3, 1, 0)
    assert branch_labels(parent) == [BranchLabel(())]


def test_component_examples():
    parent = canonicalize((3, 2, 2), 4, 0, 0)
    child = component(parent, BranchLabel((1, 0, 2)))
    assert child.diagram.rows == (2, 2)

    with pytest.raises(ValueError):
        component(parent, BranchLabel((2, 0, 0)))
    with pytest.raises(ValueError):
        component(parent, BranchLabel((0, 1, 0)))


def test_component_strips_full_columns():
    # depth-m parents (from the dualized extension) can leave full columns
    parent = extend_rank_dual(canonicalize((2,), 2, 0, 0))
    assert parent.diagram.rows == (2, 2)
    child = component(parent, BranchLabel((0, 1)))
    assert child.diagram.rows == (1,)
    assert child.twist == parent.twist + 1


def test_zero_removal_embedding():
    rng = random.Random(5)
    for _ in range(30):
        label = random_canonical_label(rng, rng.choice((2, 3, 4)))
        q = zero_removal_embedding(label)
        assert q == BranchLabel(())
        assert component(extend_rank(label), q).diagram == label.diagram


def test_max_removal_embedding_recovers_diagram():
    label = canonicalize((3, 2, 2), 4, 0, 0)
    q = max_removal_embedding(label)
    parent = extend_rank_dual(label)
    assert component(parent, q).diagram == label.diagram

    assert max_removal_embedding(canonicalize((), 2)) == BranchLabel(())


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_max_removal_unique_maximum_single_row(k):
    label = canonicalize((k,), 2, 0, 0)
    parent = extend_rank_dual(label)
    assert parent.diagram.rows == (k, k)
    labels = branch_labels(parent)
    top = max(q.norm for q in labels)
    best = [q for q in labels if q.norm == top]
    assert len(best) == 1
    assert component(parent, best[0]).diagram.rows == (k,)
    assert best[0] == max_removal_embedding(label)


def test_dimension_conservation_21_over_rank3():
    parent = canonicalize((2, 1), 3, 0, 0)
    total = sum(dimension(component(parent, q)) for q in branch_labels(parent))
    assert total == dimension(parent)


def test_dimension_conservation_random():
    rng = random.Random(11)
    for _ in range(40):
        rank = rng.choice((3, 4, 5))
        parent = random_canonical_label(rng, rank)
        total = sum(dimension(component(parent, q)) for q in branch_labels(parent))
        assert total == dimension(parent)


def test_character_identity_random():
    rng = random.Random(17)
    for _ in range(15):
        rank = rng.choice((3, 4, 5))
        parent = random_canonical_label(rng, rank)
        point = random_point(rng, rank)
        xs, t = point[:-1], point[-1]
        m = rank - 1
        d = parent.diagram.padded(m)
        total = Fraction(0)
        for q in branch_labels(parent):
            removed = q.padded(m)
            rows = tuple(d[i] - removed[i] for i in range(m))
            total += schur_eval(YoungDiagram(rows), xs) * t**q.norm
        assert schur_eval(parent.diagram, point) == total


def test_character_identity_with_twists():
    # the same identity phrased through canonicalized component labels
    rng = random.Random(19)
    for _ in range(10):
        rank = rng.choice((3, 4))
        parent = random_canonical_label(rng, rank)
        point = random_point(rng, rank)
        xs, t = point[:-1], point[-1]
        total = Fraction(0)
        for q in branch_labels(parent):
            child = component(parent, q)
            total += char_eval(child, xs) * t ** (q.norm + parent.twist)
        assert char_eval(parent, point) == total


def test_multiplicity_free():
    rng = random.Random(29)
    for _ in range(20):
        parent = random_canonical_label(rng, rng.choice((3, 4, 5)))
        labels = branch_labels(parent)
        assert len(set(labels)) == len(labels)


def test_branch_requires_child_rank_two():
    with pytest.raises(ValueError):
        branch_labels(canonicalize((1,), 2, 0, 0))
