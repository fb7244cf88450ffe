"""Dependency plan for building a Casimir eigenvector from its base component.

An eigenvector of the Casimir operator valued in the rank extension of a
label is determined by its zero-removal projection: every other component
is obtained from the components one box below it, scaled by
-2 / (alpha_0 - alpha_q).  Those scalars and the single-box-transfer edges
form a DAG rooted at q = 0; the denominators vanish exactly at the resonant
weights, where no lift exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..branching import BranchLabel, branch_labels, component
from ..casimir import eigenvalue
from ..diagrams import IrrepLabel, extend_rank
from ..errors import ResonantWeight


@dataclass(frozen=True)
class LiftNode:
    removals: BranchLabel
    component: IrrepLabel
    coefficient: Fraction | None  # None on the root


@dataclass(frozen=True)
class LiftPlan:
    label: IrrepLabel
    delta: Fraction
    nodes: tuple[LiftNode, ...]
    edges: tuple[tuple[BranchLabel, BranchLabel], ...]

    @property
    def root(self) -> LiftNode:
        return self.nodes[0]


def lift_plan(label: IrrepLabel, delta: Fraction) -> LiftPlan:
    """Nodes, single-box edges, and exact recursion scalars of the lift.

    Raises ResonantWeight when some denominator alpha_0 - alpha_q vanishes
    at the requested weight.
    """
    delta = Fraction(delta)
    parent = extend_rank(label)
    labels = branch_labels(parent)
    m = label.rank
    alpha = {q: eigenvalue(component(parent, q))(delta) for q in labels}
    base = alpha[BranchLabel()]
    nodes = []
    for q in labels:
        if q.norm == 0:
            nodes.append(LiftNode(q, component(parent, q), None))
            continue
        gap = base - alpha[q]
        if gap == 0:
            raise ResonantWeight(
                f"eigenvalue collision at removal {q} for delta = {delta}",
                delta,
                detail=str(q),
            )
        nodes.append(LiftNode(q, component(parent, q), Fraction(-2) / gap))
    label_set = set(labels)
    edges = []
    for q in labels:
        padded = q.padded(m)
        for i in range(m):
            bumped = list(padded)
            bumped[i] += 1
            target = BranchLabel(tuple(bumped))
            if target in label_set:
                edges.append((q, target))
    return LiftPlan(label, delta, tuple(nodes), tuple(edges))
