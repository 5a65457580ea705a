"""
Tests for the fixture manager and the table payload format
"""

import os

import pytest

from rcc_toolkit.algebra import RCC5_TABLE_AS_PRINTED
from rcc_toolkit.fixtures import KINDS, Fixture, FixtureManager, table_from_dict, table_to_dict
from rcc_toolkit.reductions import DominoSystem, TuringMachine
from rcc_toolkit.solver import ConstraintNetwork
from rcc_toolkit.structures import RegionStructure
from rcc_toolkit.utils import load_json


@pytest.fixture
def manager(config):
    return FixtureManager(config=config)


class TestFixtureManager:

    def test_defaults_cover_every_kind(self, manager):
        assert {f.kind for f in manager.list_fixtures()} == set(KINDS)
        names = [f.name for f in manager.list_fixtures()]
        assert names == sorted(names)

    def test_filters(self, manager):
        networks = manager.list_fixtures(kind="network")
        assert {"ec3", "tpp-chain-dc", "ec-pair", "ec4-hull"} <= {f.name for f in networks}
        assert all(f.kind == "network" for f in networks)
        corrupted = manager.list_fixtures(tag="corrupted")
        assert {f.name for f in corrupted} == {"corrupted-matrix", "rcc5-table-as-printed"}

    def test_search(self, manager):
        assert [f.name for f in manager.search_fixtures("dresden")] == ["harbor"]
        assert "domino-checkerboard" in {f.name for f in manager.search_fixtures("TILES")}
        assert manager.search_fixtures("no-such-thing") == []

    @pytest.mark.parametrize("name, expected", [
        ("ec3", ConstraintNetwork),
        ("domino-single", DominoSystem),
        ("tm-one-step", TuringMachine),
        ("corrupted-matrix", RegionStructure),
    ])
    def test_build(self, manager, name, expected):
        assert isinstance(manager.get_fixture(name).build(), expected)

    def test_build_model_and_table(self, manager):
        structure, valuation = manager.get_fixture("harbor").build()
        assert set(structure.regions) == {"sea", "elbe", "dresden", "harbor"}
        assert valuation.to_dict()["harbor"] == ["harbor"]
        table = manager.get_fixture("rcc5-table-as-printed").build()
        assert table[("ppi", "po")] == "po pp"

    def test_unknown_name(self, manager):
        assert manager.get_fixture("missing") is None

    def test_save_load_delete(self, manager, config):
        fixture = Fixture("pair", "Two touching regions", "network",
                          ConstraintNetwork.atomic(["a", "b"], {("a", "b"): "ec"}).to_dict(), ["custom"])
        path = manager.save_fixture(fixture)
        assert path == os.path.join(config.get("fixtures.directory"), "pair.json")
        assert load_json(path)["kind"] == "network"

        fresh = FixtureManager(config=config)
        assert fresh.get_fixture("pair").tags == ["custom"]
        assert fresh.delete_fixture("pair")
        assert not os.path.exists(path)
        assert not fresh.delete_fixture("pair")

    def test_auto_load_can_be_disabled(self, manager, config):
        manager.save_fixture(Fixture("solo", "", "model", {"regions": ["r1"], "matrix": [["eq"]]}))
        config.set("fixtures.auto_load", False)
        assert FixtureManager(config=config).get_fixture("solo") is None

    def test_broken_files_are_skipped(self, config):
        directory = config.get("fixtures.directory")
        os.makedirs(directory)
        with open(os.path.join(directory, "broken.json"), "w") as f:
            f.write('{"name": "broken"}')
        manager = FixtureManager(config=config)
        assert manager.get_fixture("broken") is None
        assert manager.get_fixture("ec3") is not None


class TestFixturePayloads:

    def test_round_trip(self):
        fixture = Fixture("t", "d", "table", {"entries": []}, ["x"])
        again = Fixture.from_dict(fixture.to_dict())
        assert again.to_dict() == fixture.to_dict()

    def test_malformed(self):
        with pytest.raises(ValueError):
            Fixture.from_dict({"name": "x", "kind": "network"})
        with pytest.raises(ValueError):
            Fixture.from_dict({"name": "x", "kind": "picture", "data": {}})
        with pytest.raises(ValueError):
            table_from_dict({"entries": [["dc", "dc"]]})

    def test_table_payload(self):
        payload = table_to_dict(RCC5_TABLE_AS_PRINTED, "rcc5")
        assert payload["kind"] == "rcc5"
        assert table_from_dict(payload) == RCC5_TABLE_AS_PRINTED
