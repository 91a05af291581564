#!/usr/bin/env python3
"""
Result Rendering for whitealg

Turns controller results into text: aligned tables (pandas) for tabular reports,
``key: value`` lines for records, or the versioned JSON envelope.
"""

from typing import Any, Iterable, List, Tuple

import pandas as pd

from src.models.lie_element import LieElement
from src.models.reports import (
    AutReport,
    ExactSequenceReport,
    NoncommuteWitness,
    NoncommutingPair,
    OrderResult,
    PrimitiveCheck,
    RankTable,
    RankTableRow,
    SntReport,
)
from src.models.tensor_element import SuspendedElement, TensorElement
from src.services import expr_io, json_codec

FORMAT_TABLE = "table"
FORMAT_JSON = "json"


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return "-" if value is None else str(value)


def _lines(pairs: Iterable[Tuple[str, Any]]) -> List[str]:
    return [f"{key}: {_text(value)}" for key, value in pairs]


def _table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(empty)"
    return frame.to_string(index=False)


def _pair_lines(pair: NoncommutingPair) -> List[str]:
    return _lines(
        [
            ("f", pair.f),
            ("g", pair.g),
            ("generator", pair.generator),
            ("f(g(x))", pair.fg_image),
            ("g(f(x))", pair.gf_image),
            ("discrepancy", pair.discrepancy),
        ]
    )


def _order_lines(result: OrderResult) -> List[str]:
    pairs = [("morphism", result.morphism), ("finite", result.is_finite)]
    if result.is_finite:
        pairs.append(("order", result.order))
    else:
        pairs += [
            ("witness", result.witness_generator),
            ("displacement", result.displacement),
            ("orbit", result.orbit),
        ]
    return _lines(pairs)


def render_table(result: Any, notation: str = expr_io.NOTATION_WHITEHEAD) -> str:
    """
    Human-readable text of a result.

    Raises:
        TypeError: If the result type has no rendering
    """
    if isinstance(result, LieElement):
        return expr_io.format_lie(result, notation)
    if isinstance(result, TensorElement):
        return expr_io.format_tensor(result)
    if isinstance(result, SuspendedElement):
        return expr_io.format_suspended(result)

    if isinstance(result, RankTableRow):
        frame = pd.DataFrame({"basis": list(result.basis_expressions)})
        header = f"dim {result.whitehead_dim}: rank {result.rank}"
        return header if not result.rank else f"{header}\n{_table(frame)}"

    if isinstance(result, RankTable):
        frame = pd.DataFrame(
            [
                {
                    "dim": row.whitehead_dim,
                    "rank": row.rank,
                    "basis": ", ".join(row.basis_expressions),
                }
                for row in result.rows
            ]
        )
        return f"{result.space} up to dim {result.max_whitehead_dim}\n{_table(frame)}"

    if isinstance(result, PrimitiveCheck):
        return "\n".join(
            _lines(
                [
                    ("expression", result.expression),
                    ("element", result.element),
                    ("primitive", result.is_primitive),
                    ("decomposable", result.is_decomposable),
                ]
            )
        )

    if isinstance(result, OrderResult):
        return "\n".join(_order_lines(result))

    if isinstance(result, AutReport):
        lines = _lines(
            [
                ("space", result.space),
                ("truncation", result.top_index),
                ("ring", result.ring_mode),
                ("finite", result.is_finite),
                ("order", result.order),
                ("abelian", result.is_abelian),
                ("unipotent rank", result.unipotent_rank),
                ("structure", result.structure),
            ]
        )
        if result.infinite_witness is not None:
            lines.append(f"infinite witness: {result.infinite_witness}")
            lines.append(f"witness orbit: {result.witness_order.orbit}")
        if result.noncommuting_pair is not None:
            lines += ["noncommuting pair:"]
            lines += [f"  {line}" for line in _pair_lines(result.noncommuting_pair)]
        return "\n".join(lines)

    if isinstance(result, NoncommuteWitness):
        lines = _lines(
            [("m", result.m), ("alpha1", result.alpha1), ("alpha2", result.alpha2)]
        )
        return "\n".join(lines + _pair_lines(result.pair))

    if isinstance(result, ExactSequenceReport):
        frame = pd.DataFrame(
            [
                {"check": name, "passed": _text(passed)}
                for name, passed in result.checks.items()
            ]
        )
        lines = _lines(
            [
                ("space", result.space),
                ("layer", result.n),
                ("kernel rank", result.kernel_rank),
                ("kernel basis", ", ".join(result.kernel_basis) or None),
                ("exact", result.passed),
            ]
        )
        return "\n".join(lines + [_table(frame)])

    if isinstance(result, SntReport):
        frame = pd.DataFrame(
            [
                {
                    "layer": layer.layer,
                    "dim": layer.whitehead_dim,
                    "decomposables": ", ".join(layer.decomposables),
                    "alphas": ", ".join(str(a) for a in layer.alphas),
                    "index": layer.index,
                }
                for layer in result.layers
            ]
        )
        lines = [_table(frame)]
        lines += _lines(
            [("total index", result.total_index), ("verdict", result.verdict)]
        )
        return "\n".join(lines)

    raise TypeError(f"No table rendering for {type(result).__name__}")


def render(
    result: Any,
    output_format: str = FORMAT_TABLE,
    notation: str = expr_io.NOTATION_WHITEHEAD,
) -> str:
    """Render a result as a table or as the JSON envelope."""
    if output_format == FORMAT_JSON:
        return json_codec.to_json(result)
    return render_table(result, notation)
