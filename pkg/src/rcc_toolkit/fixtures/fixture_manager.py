"""
Named JSON artefacts: networks, domino systems, machines, models and structures
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..config import Config, get_config
from ..utils.io import load_json, save_json

LOGGER = logging.getLogger(__name__)

KINDS = ("network", "domino", "machine", "model", "structure", "table")


class Fixture:
    """A named payload in one of the JSON formats of the toolkit"""

    def __init__(
        self,
        name: str,
        description: str,
        kind: str,
        data: Dict[str, Any],
        tags: Optional[List[str]] = None
    ):
        """
        Initialize fixture

        Args:
            name: Fixture name, also the file stem when saved
            description: One-line description
            kind: Payload format, one of KINDS
            data: JSON payload
            tags: Tags for filtering
        """
        if kind not in KINDS:
            raise ValueError(f"unknown fixture kind {kind!r}, expected one of {', '.join(KINDS)}")
        self.name = name
        self.description = description
        self.kind = kind
        self.data = data
        self.tags = tags or []

    def build(self) -> Any:
        """
        Domain object for the payload

        Returns:
            ConstraintNetwork, DominoSystem, TuringMachine, a (structure,
            valuation) pair, an unchecked RegionStructure, or a raw table
            mapping (r1, r2) -> relation names
        """
        if self.kind == "network":
            from ..solver.network import ConstraintNetwork
            return ConstraintNetwork.from_dict(self.data)
        if self.kind == "domino":
            from ..reductions.domino import DominoSystem
            return DominoSystem.from_dict(self.data)
        if self.kind == "machine":
            from ..reductions.turing import TuringMachine
            return TuringMachine.from_dict(self.data)
        if self.kind == "model":
            from ..structures.region_structure import model_from_dict
            return model_from_dict(self.data)
        if self.kind == "structure":
            from ..structures.region_structure import RegionStructure
            return RegionStructure.from_dict(self.data, check=False)
        return table_from_dict(self.data)

    def to_dict(self) -> Dict[str, Any]:
        """Convert fixture to dictionary"""
        return {
            "name": self.name,
            "description": self.description,
            "kind": self.kind,
            "data": self.data,
            "tags": self.tags,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Fixture":
        """Create fixture from dictionary"""
        try:
            return cls(
                name=data["name"],
                description=data.get("description", ""),
                kind=data["kind"],
                data=data["data"],
                tags=data.get("tags"),
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed fixture payload: {e}")


def table_from_dict(data: Dict[str, Any]) -> Dict:
    """{"entries": [[r1, r2, "names"], ...]} -> {(r1, r2): "names"}"""
    try:
        return {(r1, r2): names for r1, r2, names in data["entries"]}
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"malformed table payload: {e}")


def table_to_dict(table: Dict, kind: str) -> Dict[str, Any]:
    return {"kind": kind, "entries": [[r1, r2, names] for (r1, r2), names in sorted(table.items())]}


def _default_fixtures() -> List[Fixture]:
    from ..algebra.tables import RCC5_TABLE_AS_PRINTED
    from ..reductions.corpus import ec4_hull_network, ec_k, harbor_model
    from ..reductions.domino import DominoSystem
    from ..reductions.turing import TuringMachine
    from ..solver.network import ConstraintNetwork
    from ..geometry.intervals import IntervalUnion
    from ..structures.region_structure import induced, model_to_dict

    harbor_structure, harbor_valuation = harbor_model()
    intervals = [IntervalUnion.single(0, 2), IntervalUnion.single(1, 3), IntervalUnion.single(0, 3)]

    return [
        Fixture(
            name="ec3",
            description="Three regions, pairwise externally connected",
            kind="network",
            data=ec_k(3).to_dict(),
            tags=["network", "sat", "separation"],
        ),
        Fixture(
            name="tpp-chain-dc",
            description="x tpp y, y tpp z and x dc z: ruled out by composition",
            kind="network",
            data=ConstraintNetwork.atomic(
                ["x", "y", "z"], {("x", "y"): "tpp", ("y", "z"): "tpp", ("x", "z"): "dc"}).to_dict(),
            tags=["network", "unsat"],
        ),
        Fixture(
            name="ec-pair",
            description="Two externally connected regions",
            kind="network",
            data=ConstraintNetwork.atomic(["x", "y"], {("x", "y"): "ec"}).to_dict(),
            tags=["network", "sat", "realize"],
        ),
        Fixture(
            name="ec4-hull",
            description="Four touching regions and a common proper superregion per pair",
            kind="network",
            data=ec4_hull_network().to_dict(),
            tags=["network", "separation"],
        ),
        Fixture(
            name="domino-single",
            description="One tile matching itself both ways; origin and final tile coincide",
            kind="domino",
            data=DominoSystem(("t",), {("t", "t")}, {("t", "t")}, s0="t", f0="t", t0="t").to_dict(),
            tags=["domino", "tiles"],
        ),
        Fixture(
            name="domino-checkerboard",
            description="Two alternating colours, white at the origin",
            kind="domino",
            data=DominoSystem(("w", "k"), {("w", "k"), ("k", "w")}, {("w", "k"), ("k", "w")},
                              s0="w", f0="k").to_dict(),
            tags=["domino", "tiles"],
        ),
        Fixture(
            name="domino-start-middle-final",
            description="Start tile followed by middle tiles that drift into final tiles",
            kind="domino",
            data=DominoSystem(
                ("s", "m", "f"),
                {("s", "m"), ("m", "f"), ("f", "f"), ("m", "m")},
                {("s", "m"), ("m", "m"), ("m", "f"), ("f", "f")},
                s0="s", f0="f",
            ).to_dict(),
            tags=["domino", "tiles"],
        ),
        Fixture(
            name="domino-no-tiling",
            description="Start and final tile with no horizontal match",
            kind="domino",
            data=DominoSystem(("s", "f"), set(), {("s", "f")}, s0="s", f0="f").to_dict(),
            tags=["domino", "unsat"],
        ),
        Fixture(
            name="tm-one-step",
            description="Writes the marker and halts after one step to the right",
            kind="machine",
            data=TuringMachine(
                states=("q0", "qf"),
                alphabet=("b", "#"),
                initial="q0",
                final="qf",
                transitions=(("q0", "b", "qf", "#", "R"), ("q0", "#", "qf", "#", "R")),
            ).to_dict(),
            tags=["machine", "tiles"],
        ),
        Fixture(
            name="harbor",
            description="Sea, river Elbe, the city of Dresden and its harbour on the line",
            kind="model",
            data=model_to_dict(harbor_structure, harbor_valuation),
            tags=["model", "geography"],
        ),
        Fixture(
            name="induced-intervals",
            description="Structure induced by three overlapping intervals",
            kind="structure",
            data=induced(intervals, ["r1", "r2", "r3"]).to_dict(),
            tags=["structure", "valid"],
        ),
        Fixture(
            name="corrupted-matrix",
            description="r1 tpp r2 and r2 tpp r3 but r1 dc r3",
            kind="structure",
            data={
                "kind": "rcc8",
                "regions": ["r1", "r2", "r3"],
                "matrix": [
                    ["eq", "tpp", "dc"],
                    ["tppi", "eq", "tpp"],
                    ["dc", "tppi", "eq"],
                ],
            },
            tags=["structure", "corrupted"],
        ),
        Fixture(
            name="rcc5-table-as-printed",
            description="RCC5 composition table with ppi∘po as printed",
            kind="table",
            data=table_to_dict(RCC5_TABLE_AS_PRINTED, "rcc5"),
            tags=["table", "corrupted"],
        ),
    ]


class FixtureManager:
    """Manages named fixtures"""

    def __init__(self, fixture_dir: Optional[str] = None, config: Optional[Config] = None):
        """
        Initialize fixture manager

        Args:
            fixture_dir: Directory of fixture files; 'fixtures.directory' by default
            config: Configuration object
        """
        config = config or get_config()
        self.fixture_dir = fixture_dir or config.get("fixtures.directory", "fixtures")
        self.fixtures: Dict[str, Fixture] = {}
        for fixture in _default_fixtures():
            self.fixtures[fixture.name] = fixture

        if config.get("fixtures.auto_load", True) and os.path.exists(self.fixture_dir):
            self.load_fixtures()

    def add_fixture(self, fixture: Fixture) -> None:
        """Add a fixture to the manager"""
        self.fixtures[fixture.name] = fixture

    def get_fixture(self, name: str) -> Optional[Fixture]:
        """Get fixture by name"""
        return self.fixtures.get(name)

    def list_fixtures(self, kind: Optional[str] = None, tag: Optional[str] = None) -> List[Fixture]:
        """
        List all fixtures, optionally filtered by kind or tag

        Args:
            kind: Filter by payload kind
            tag: Filter by tag

        Returns:
            Matching fixtures in name order
        """
        fixtures = sorted(self.fixtures.values(), key=lambda f: f.name)

        if kind:
            fixtures = [f for f in fixtures if f.kind == kind]

        if tag:
            fixtures = [f for f in fixtures if tag in f.tags]

        return fixtures

    def save_fixture(self, fixture: Fixture, filepath: Optional[str] = None) -> str:
        """
        Save fixture to file

        Args:
            fixture: Fixture to save
            filepath: Custom filepath (optional)

        Returns:
            Path written
        """
        if filepath is None:
            Path(self.fixture_dir).mkdir(parents=True, exist_ok=True)
            filepath = os.path.join(self.fixture_dir, f"{fixture.name}.json")

        save_json(fixture.to_dict(), filepath)
        return filepath

    def load_fixture(self, filepath: str) -> Fixture:
        """Load fixture from file"""
        fixture = Fixture.from_dict(load_json(filepath))
        self.fixtures[fixture.name] = fixture
        return fixture

    def load_fixtures(self, directory: Optional[str] = None) -> None:
        """Load all fixtures from directory"""
        directory = directory or self.fixture_dir

        if not os.path.exists(directory):
            return

        for filename in sorted(os.listdir(directory)):
            if filename.endswith(".json"):
                filepath = os.path.join(directory, filename)
                try:
                    self.load_fixture(filepath)
                except (OSError, ValueError) as e:
                    LOGGER.warning("skipping fixture %s: %s", filename, e)

    def delete_fixture(self, name: str) -> bool:
        """Delete fixture by name, together with its file"""
        if name in self.fixtures:
            del self.fixtures[name]

            filepath = os.path.join(self.fixture_dir, f"{name}.json")
            if os.path.exists(filepath):
                os.remove(filepath)

            return True
        return False

    def search_fixtures(self, query: str) -> List[Fixture]:
        """
        Search fixtures by query in name, description, or tags

        Args:
            query: Search query

        Returns:
            Matching fixtures in name order
        """
        query = query.lower()
        results = []

        for fixture in sorted(self.fixtures.values(), key=lambda f: f.name):
            if (query in fixture.name.lower() or
                    query in fixture.description.lower() or
                    any(query in tag.lower() for tag in fixture.tags)):
                results.append(fixture)

        return results
