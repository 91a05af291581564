"""Tests for the versioned JSON envelope."""

import json

import pytest

from src.errors import MalformedJson, SchemaMismatch
from src.models.tensor_element import TensorElement
from src.services.json_codec import SCHEMA, envelope, from_json, to_json


@pytest.fixture
def values(aut_group, model, hopf6, lie6, hp6):
    """One value of every serializable type."""
    group = aut_group(5)
    psi = group.unipotent_morphism(3, (1, 2), 2)
    u = TensorElement(hp6, [((1, 2), "1/2"), ((3,), -1)])
    return [
        lie6.reduce("2*x3 - 1/3*[x1,[x1,x2]]"),
        u,
        hopf6.coproduct(u),
        hopf6.homology_suspension(hopf6.hurewicz(3)),
        hp6,
        group.algebra,
        psi,
        model.whitehead_rank_table(hp6, 21),
        model.basis_row(hp6, 21),
        group.order(psi),
        group.noncommuting_witness(3, 2, -1),
        aut_group(4).aut_report(),
        aut_group(2).aut_report(),
        group.exact_sequence_report(4),
        group.snt_cokernel_witness({(3, (1, 2)): 2}, default=1),
    ]


class TestRoundTrip:
    def test_every_type(self, values):
        for value in values:
            assert from_json(to_json(value)) == value, type(value).__name__

    def test_envelope(self, lie6):
        document = envelope(lie6.reduce("[x1,x2]"))
        assert document["schema"] == SCHEMA
        assert document["type"] == "LieElement"
        assert document["data"]["terms"] == [{"word": [1, 2], "coefficient": "1"}]

    def test_deterministic(self, values):
        for value in values:
            assert to_json(value) == to_json(value)
            assert json.loads(to_json(value))["schema"] == "whitealg/1"

    def test_rationals_are_exact(self, lie6):
        data = envelope(lie6.reduce("1/3*[x1,x2]"))["data"]
        assert data["terms"][0]["coefficient"] == "1/3"


class TestErrors:
    def test_unregistered_type(self):
        with pytest.raises(SchemaMismatch):
            to_json({"not": "a value"})

    @pytest.mark.parametrize("text", ["{", "", "not json", None])
    def test_malformed(self, text):
        with pytest.raises(MalformedJson):
            from_json(text)

    @pytest.mark.parametrize(
        "document",
        [
            {},
            [1, 2],
            {"schema": "whitealg/2", "type": "LieElement", "data": {}},
            {"schema": SCHEMA, "type": "Polynomial", "data": {}},
            {"schema": SCHEMA, "type": ["LieElement"], "data": {}},
            {"schema": SCHEMA, "type": "LieElement", "data": {}},
            {"schema": SCHEMA, "type": "OrderResult", "data": {"morphism": "id"}},
        ],
    )
    def test_schema_mismatch(self, document):
        with pytest.raises(SchemaMismatch):
            from_json(json.dumps(document))

    def test_invalid_payload_values(self, lie6):
        document = envelope(lie6.reduce("[x1,x2]"))
        document["data"]["terms"][0]["word"] = [2, 1]
        with pytest.raises(SchemaMismatch):
            from_json(json.dumps(document))
