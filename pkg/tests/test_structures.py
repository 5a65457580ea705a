"""
Tests for region structures, valuations and structure enumeration
"""

import pytest

from rcc_toolkit.algebra import BaseRelation5, BaseRelation8, Kind
from rcc_toolkit.errors import BoundExceededError, DuplicateRegionError, KindMismatchError, RCCToolkitError
from rcc_toolkit.geometry import ForkRegion, HyperRect, IntervalUnion
from rcc_toolkit.structures import (
    RegionStructure,
    Valuation,
    check_sup_property,
    enumerate_structures,
    induced,
    model_from_dict,
    model_to_dict,
    naive_structures,
    powerset_rcc5,
    substructure,
    validate,
)

CORRUPTED = [
    ["eq", "tpp", "dc"],
    ["tppi", "eq", "tpp"],
    ["dc", "tppi", "eq"],
]


class TestValidate:

    def test_valid_matrix(self, chain_structure):
        assert validate(chain_structure.matrix) == []

    def test_composition_violation(self):
        violations = validate(CORRUPTED, Kind.RCC8)
        conditions = {v.condition for v in violations}
        assert conditions == {"composition"}
        assert any(v.indices == (0, 1, 2) for v in violations)

    def test_diagonal_identity_converse(self):
        violations = validate([["ec", "eq"], ["tpp", "eq"]], Kind.RCC8)
        conditions = {v.condition for v in violations}
        assert {"diagonal", "identity", "converse"} <= conditions

    def test_shape(self):
        violations = validate([["eq", "dc"], ["dc"]], Kind.RCC8)
        assert violations[0].condition == "shape"

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatchError):
            validate([[BaseRelation5.EQ, BaseRelation5.DR], [BaseRelation5.DR, BaseRelation5.EQ]], Kind.RCC8)

    def test_violation_text(self):
        violation = validate(CORRUPTED, Kind.RCC8)[0]
        assert str(violation).startswith("composition at (")
        assert violation.to_dict()["condition"] == "composition"


class TestRegionStructure:

    def test_construction_checks(self):
        with pytest.raises(RCCToolkitError):
            RegionStructure("rcc8", ["a", "b", "c"], CORRUPTED)
        unchecked = RegionStructure("rcc8", ["a", "b", "c"], CORRUPTED, check=False)
        assert unchecked.size == 3

    def test_duplicate_ids(self):
        with pytest.raises(DuplicateRegionError):
            RegionStructure("rcc8", ["a", "a"], [["eq", "dc"], ["dc", "eq"]])

    def test_lookup(self, chain_structure):
        assert chain_structure.relation("r1", "r3") is BaseRelation8.NTPP
        assert chain_structure.successors(BaseRelation8.NTPPI)[2] == {0, 1}
        with pytest.raises(KeyError):
            chain_structure.index("r9")

    def test_dict_round_trip(self, chain_structure):
        assert RegionStructure.from_dict(chain_structure.to_dict()) == chain_structure

    def test_malformed_payload(self):
        with pytest.raises(ValueError):
            RegionStructure.from_dict({"kind": "rcc8", "regions": ["a"]})

    def test_substructure(self, chain_structure):
        sub = substructure(chain_structure, ["r3", "r1"])
        assert sub.regions == ("r1", "r3")
        assert sub.relation("r3", "r1") is BaseRelation8.NTPPI


class TestInduced:

    def test_intervals(self):
        structure = induced([IntervalUnion.single(0, 2), IntervalUnion.single(1, 3)])
        assert structure.regions == ("r1", "r2")
        assert structure.relation("r1", "r2") is BaseRelation8.PO

    def test_rcc5_coarsening(self):
        structure = induced([IntervalUnion.single(0, 1), IntervalUnion.single(1, 2)], kind="rcc5")
        assert structure.relation("r1", "r2").value == "dr"

    def test_boxes_and_forks(self):
        boxes = induced([HyperRect([(0, 1), (0, 1)]), HyperRect([(0, 2), (0, 2)])], ["a", "b"])
        assert boxes.relation("a", "b") is BaseRelation8.TPP
        forks = induced([ForkRegion({1: "left"}), ForkRegion({1: "right"}), ForkRegion({2: "both"})])
        assert forks.relation("r1", "r2") is BaseRelation8.EC
        assert forks.relation("r1", "r3") is BaseRelation8.DC

    def test_equal_regions_rejected(self):
        with pytest.raises(DuplicateRegionError):
            induced([IntervalUnion.single(0, 1), IntervalUnion([(0, "1/2"), ("1/2", 1)])])

    def test_id_count_mismatch(self):
        with pytest.raises(ValueError):
            induced([IntervalUnion.single(0, 1)], ["a", "b"])


class TestValuation:

    def test_unknown_variable_is_empty(self):
        assert Valuation({"p": ["r1"]}).extension("q") == frozenset()

    def test_updates(self):
        valuation = Valuation({"p": ["r1", "r2"]}).with_variable("q", ["r3"])
        assert valuation.variables() == ["p", "q"]
        assert valuation.restrict(["r2", "r3"]).to_dict() == {"p": ["r2"], "q": ["r3"]}

    def test_model_round_trip(self, chain_structure):
        valuation = Valuation({"p": ["r2"]})
        structure, parsed = model_from_dict(model_to_dict(chain_structure, valuation))
        assert structure == chain_structure
        assert parsed == valuation

    def test_model_with_unknown_region(self, chain_structure):
        data = model_to_dict(chain_structure, Valuation({"p": ["r7"]}))
        with pytest.raises(ValueError):
            model_from_dict(data)

    def test_model_payload_must_be_an_object(self):
        with pytest.raises(ValueError):
            model_from_dict(["not", "a", "model"])


class TestEnumeration:

    @pytest.mark.parametrize("kind, count", [("rcc8", 7), ("rcc5", 4)])
    def test_two_regions(self, kind, count):
        assert len(list(enumerate_structures(kind, 2))) == count

    def test_single_region(self):
        assert [s.matrix for s in enumerate_structures("rcc8", 1)] == [((BaseRelation8.EQ,),)]

    @pytest.mark.parametrize("kind", ["rcc8", "rcc5"])
    def test_agrees_with_naive_filter(self, kind):
        fast = {s.matrix for s in enumerate_structures(kind, 3)}
        slow = {s.matrix for s in naive_structures(kind, 3)}
        assert fast == slow

    def test_every_structure_is_valid(self):
        for structure in enumerate_structures("rcc8", 3):
            assert validate(structure.matrix) == []

    def test_deterministic(self):
        first = [s.matrix for s in enumerate_structures("rcc5", 3)]
        assert first == [s.matrix for s in enumerate_structures("rcc5", 3)]

    def test_bounds(self):
        with pytest.raises(BoundExceededError):
            next(enumerate_structures("rcc8", 7))
        with pytest.raises(ValueError):
            next(enumerate_structures("rcc8", 0))


class TestSupProperty:

    def test_powerset_has_sups(self):
        structure = powerset_rcc5([{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}])
        assert check_sup_property(structure).ok

    def test_missing_sup(self):
        report = check_sup_property(powerset_rcc5([{1}, {2}]))
        assert not report.ok
        assert report.missing == [("s1", "s2")]

    def test_powerset_relations(self):
        structure = powerset_rcc5([{1}, {1, 2}, {2, 3}])
        assert structure.relation("s1", "s2").value == "pp"
        assert structure.relation("s2", "s3").value == "po"
        assert structure.relation("s1", "s3").value == "dr"

    def test_requires_rcc5(self, chain_structure):
        with pytest.raises(KindMismatchError):
            check_sup_property(chain_structure)
