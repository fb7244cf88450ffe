"""Batch command-line front end with machine-readable, reproducible output.

Defaults to JSON on stdout; `--format table` (or the PROJQUANT_FORMAT
environment variable) switches to an aligned text rendering.  Rationals are
always serialized as "p/q" strings.  Exit codes: 0 success, 1 domain error
(for example a resonant weight), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .branching import branch_labels, component
from .casimir import eigenvalue, resonances
from .diagrams import IrrepLabel, YoungDiagram, canonicalize, dimension
from .errors import ResonantWeight
from .flatmodel import (
    classical_casimir,
    density_quant_coefficients,
    lift_plan,
    random_section,
    solver_singular_deltas,
)
from .tensor import symbol_rep


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _diagram(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _label(text: str) -> IrrepLabel:
    try:
        return IrrepLabel.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fmt(value) -> str:
    return str(Fraction(value))


def _label_payload(label: IrrepLabel) -> dict:
    return {
        "label": str(label),
        "diagram": str(label.diagram),
        "n": label.twist,
        "delta": _fmt(label.weight),
    }


def _cmd_eigenvalue(args) -> tuple[dict, int]:
    label = canonicalize(args.diagram.rows, args.m, args.n, args.delta)
    poly = eigenvalue(label)
    payload = _label_payload(label)
    payload.update(
        {
            "c0": _fmt(poly.c0),
            "c1": _fmt(poly.c1),
            "c2": _fmt(poly.c2),
            "alpha": _fmt(poly(label.weight)),
        }
    )
    return payload, 0


def _cmd_resonances(args) -> tuple[list, int]:
    label = canonicalize(args.diagram.rows, args.m, args.n, 0)
    values = resonances(label, base=args.base)
    return [_fmt(v) for v in sorted(values)], 0


def _cmd_branch(args) -> tuple[list, int]:
    parent = canonicalize(args.diagram.rows, args.m, args.n, args.delta)
    child_rank = parent.rank - 1
    rows = []
    for q in branch_labels(parent):
        child = component(parent, q)
        rows.append(
            {
                "q": ",".join(str(x) for x in q.padded(child_rank)),
                "diagram": str(child.diagram),
                "label": str(child),
                "dim": dimension(child),
            }
        )
    return rows, 0


def _cmd_decompose(args) -> tuple[list, int]:
    decomposition = symbol_rep(args.v1, args.v2, args.k)
    rows = []
    for label, mult in decomposition.terms:
        entry = _label_payload(label)
        entry["multiplicity"] = mult
        entry["dim"] = dimension(label)
        rows.append(entry)
    return rows, 0


def _cmd_quantize(args) -> tuple[list, int]:
    coeffs = density_quant_coefficients(args.m, args.k, args.lam, args.mu)
    return [_fmt(c) for c in coeffs.values], 0


def _cmd_casimir_check(args) -> tuple[dict, int]:
    label = canonicalize(args.diagram.rows, args.m, args.n, args.delta)
    alpha = eigenvalue(label)(label.weight)
    rng = random.Random(args.seed)
    matches = True
    for _ in range(args.trials):
        section = random_section(
            label.rank, label.diagram.rows, label.twist, label.weight, args.max_degree, rng
        )
        if classical_casimir(section) != section.scale(alpha):
            matches = False
            break
    payload = _label_payload(label)
    payload.update(
        {"alpha": _fmt(alpha), "trials": args.trials, "matches": matches}
    )
    return payload, 0 if matches else 1


def _cmd_lift_plan(args) -> tuple[dict, int]:
    label = canonicalize(args.diagram.rows, args.m, args.n, args.delta)
    plan = lift_plan(label, args.delta)
    child_rank = label.rank
    payload = {
        "label": str(label),
        "delta": _fmt(plan.delta),
        "nodes": [
            {
                "q": ",".join(str(x) for x in node.removals.padded(child_rank)),
                "diagram": str(node.component.diagram),
                "label": str(node.component),
                "coefficient": None if node.coefficient is None else _fmt(node.coefficient),
            }
            for node in plan.nodes
        ],
        "edges": [
            [
                ",".join(str(x) for x in src.padded(child_rank)),
                ",".join(str(x) for x in dst.padded(child_rank)),
            ]
            for src, dst in plan.edges
        ],
    }
    return payload, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projquant",
        description="Young-diagram calculus, branching, Casimir resonances, "
        "and flat-space equivariant quantization with exact arithmetic.",
    )
    parser.add_argument(
        "--format",
        choices=("json", "table"),
        default=None,
        help="output format (default json; PROJQUANT_FORMAT overrides the default)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_label_flags(p, with_delta=True):
        p.add_argument("--m", type=int, required=True, help="rank of the group")
        p.add_argument("--diagram", type=_diagram, required=True, help='rows, e.g. "3,2,2"')
        p.add_argument("--n", type=int, default=0, help="determinant twist")
        if with_delta:
            p.add_argument("--delta", type=_rational, default=Fraction(0), help="weight")

    p = sub.add_parser("eigenvalue", help="Casimir eigenvalue polynomial and value")
    add_label_flags(p)
    p.set_defaults(handler=_cmd_eigenvalue)

    p = sub.add_parser("resonances", help="resonant weights of a label")
    add_label_flags(p, with_delta=False)
    p.add_argument("--base", type=_rational, default=Fraction(0), help="base weight shift")
    p.set_defaults(handler=_cmd_resonances)

    p = sub.add_parser("branch", help="restriction of a rank-m label to rank m-1")
    add_label_flags(p)
    p.set_defaults(handler=_cmd_branch)

    p = sub.add_parser("decompose", help="decompose v1* (x) v2 (x) S^k")
    p.add_argument("--v1", type=_label, required=True, help='label text "D=..; m=..; n=..; delta=.."')
    p.add_argument("--v2", type=_label, required=True, help="label text")
    p.add_argument("-k", type=int, required=True, help="symmetric power")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("quantize", help="divergence-ansatz quantization constants")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("-k", type=int, required=True, help="symbol order")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--mu", type=_rational, required=True)
    p.set_defaults(handler=_cmd_quantize)

    p = sub.add_parser("casimir-check", help="verify the eigenvalue on random sections")
    add_label_flags(p)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=3)
    p.set_defaults(handler=_cmd_casimir_check)

    p = sub.add_parser("lift-plan", help="eigenvector lift DAG with exact scalars")
    add_label_flags(p)
    p.set_defaults(handler=_cmd_lift_plan)

    return parser


def _render_table(payload, indent: str = "") -> list[str]:
    lines: list[str] = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value and not _is_scalar_list(value):
                lines.append(f"{indent}{key}:")
                lines.extend(_render_table(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_scalar_text(value)}")
    elif isinstance(payload, list):
        if payload and all(isinstance(item, dict) for item in payload):
            keys = list(payload[0].keys())
            widths = {
                k: max(len(k), *(len(_scalar_text(item.get(k))) for item in payload))
                for k in keys
            }
            lines.append(indent + "  ".join(k.ljust(widths[k]) for k in keys))
            for item in payload:
                lines.append(
                    indent
                    + "  ".join(_scalar_text(item.get(k)).ljust(widths[k]) for k in keys)
                )
        else:
            for item in payload:
                if _is_scalar_list(item) or not isinstance(item, (dict, list)):
                    lines.append(f"{indent}{_scalar_text(item)}")
                else:
                    lines.extend(_render_table(item, indent))
    else:
        lines.append(f"{indent}{_scalar_text(payload)}")
    return lines


def _is_scalar_list(value) -> bool:
    return isinstance(value, list) and all(
        not isinstance(item, (dict, list)) for item in value
    )


def _scalar_text(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        return ", ".join(_scalar_text(v) for v in value)
    return str(value)


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(_render_table(payload)) + "\n")


def _resonance_diagnostic(exc: ResonantWeight, args) -> dict:
    payload = {"error": "resonant weight", "message": str(exc)}
    if exc.delta is not None:
        payload["delta"] = _fmt(exc.delta)
    m = getattr(args, "m", None)
    k = getattr(args, "k", None)
    if m is not None and k is not None:
        singular = solver_singular_deltas(m, k)
        payload["singular_deltas"] = [_fmt(v) for v in singular]
        if exc.delta is not None and exc.delta in singular:
            payload["offending_denominator"] = f"delta - ({_fmt(exc.delta)})"
    return payload


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    if fmt is None:
        fmt = os.environ.get("PROJQUANT_FORMAT", "json")
    if fmt not in ("json", "table"):
        parser.error(f"PROJQUANT_FORMAT must be 'json' or 'table', got {fmt!r}")
    try:
        payload, code = args.handler(args)
    except ResonantWeight as exc:
        _emit(_resonance_diagnostic(exc, args), fmt)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        _emit({"error": "domain error", "message": str(exc)}, fmt)
        return 1
    _emit(payload, fmt)
    return code


if __name__ == "__main__":
    sys.exit(main())
