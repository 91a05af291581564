#!/usr/bin/env python3
"""
JSON Codec for whitealg

Every value and report is wrapped in a versioned envelope
``{"schema": "whitealg/1", "type": <name>, "data": <to_dict()>}``.
"""

import json
import logging
from typing import Any, Dict

from src.errors import MalformedJson, SchemaMismatch
from src.models.lie_element import LieElement
from src.models.morphism import GradedMorphism
from src.models.reports import (
    AutReport,
    ExactSequenceReport,
    NoncommuteWitness,
    OrderResult,
    PrimitiveCheck,
    RankTable,
    RankTableRow,
    SntReport,
)
from src.models.schedule import GeneratorSchedule
from src.models.tensor_element import CoproductValue, SuspendedElement, TensorElement
from src.models.truncated_algebra import TruncatedAlgebra

logger = logging.getLogger(__name__)

SCHEMA = "whitealg/1"

REGISTRY: Dict[str, type] = {
    cls.__name__: cls
    for cls in (
        LieElement,
        TensorElement,
        CoproductValue,
        SuspendedElement,
        GeneratorSchedule,
        TruncatedAlgebra,
        GradedMorphism,
        RankTable,
        RankTableRow,
        OrderResult,
        NoncommuteWitness,
        AutReport,
        ExactSequenceReport,
        SntReport,
        PrimitiveCheck,
    )
}


def envelope(value: Any) -> Dict[str, Any]:
    """
    Wrap a registered value in the schema envelope.

    Raises:
        SchemaMismatch: If the value's type is not serializable
    """
    name = type(value).__name__
    if REGISTRY.get(name) is not type(value):
        raise SchemaMismatch(f"Type {name} has no JSON form")
    return {"schema": SCHEMA, "type": name, "data": value.to_dict()}


def to_json(value: Any, indent: int = 2) -> str:
    """Serialize a value; keys keep insertion order so output is deterministic."""
    return json.dumps(envelope(value), indent=indent, ensure_ascii=False)


def from_json(text: str) -> Any:
    """
    Rebuild a value from its JSON envelope.

    Raises:
        MalformedJson: If the text is not JSON
        SchemaMismatch: If the schema tag, type or payload is wrong
    """
    try:
        document = json.loads(text)
    except (json.JSONDecodeError, TypeError) as e:
        raise MalformedJson(f"Invalid JSON: {e}")

    if not isinstance(document, dict) or document.get("schema") != SCHEMA:
        raise SchemaMismatch(f"Expected schema {SCHEMA}")
    name = document.get("type")
    cls = REGISTRY.get(name) if isinstance(name, str) else None
    if cls is None:
        raise SchemaMismatch(f"Unknown type: {name}")
    try:
        value = cls.from_dict(document.get("data") or {})
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise SchemaMismatch(f"Invalid {cls.__name__} payload: {e}")
    logger.debug("Decoded %s", cls.__name__)
    return value
