"""
Finite region structures and valuations
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..algebra.relations import BaseRelation, Kind, coarsen, parse_relation
from ..algebra.tables import table_for
from ..errors import DuplicateRegionError, KindMismatchError, RCCToolkitError
from ..geometry.forks import ForkFrame, ForkRegion
from ..geometry.relate import Region, relate

LOGGER = logging.getLogger(__name__)

RelationLike = Union[BaseRelation, str]


@dataclass(frozen=True)
class Violation:
    """One failed structure condition"""

    condition: str            # diagonal | identity | converse | composition | kind
    indices: Tuple[int, ...]
    detail: str

    def to_dict(self) -> Dict:
        return {"condition": self.condition, "indices": list(self.indices), "detail": self.detail}

    def __str__(self) -> str:
        where = ",".join(str(i + 1) for i in self.indices)
        return f"{self.condition} at ({where}): {self.detail}"


def _coerce_matrix(kind: Kind, matrix: Sequence[Sequence[RelationLike]]) -> Tuple[Tuple[BaseRelation, ...], ...]:
    rows = []
    for row in matrix:
        converted = []
        for entry in row:
            r = parse_relation(entry, kind) if isinstance(entry, str) else entry
            if r.kind is not kind:
                raise KindMismatchError(f"{r.value} in an {kind.value} matrix")
            converted.append(r)
        rows.append(tuple(converted))
    return tuple(rows)


def validate(matrix: Sequence[Sequence[RelationLike]], kind: Kind = Kind.RCC8) -> List[Violation]:
    """
    Check a candidate relation matrix against the region-structure axioms

    Args:
        matrix: Square matrix of base relations (or their names)
        kind: Relation kind of the entries

    Returns:
        Every violated condition; an empty list means the matrix is valid
    """
    kind = Kind.parse(kind)
    rel = _coerce_matrix(kind, matrix)
    size = len(rel)
    identity = kind.identity
    table = table_for(kind)
    violations: List[Violation] = []

    for i, row in enumerate(rel):
        if len(row) != size:
            violations.append(Violation("shape", (i,), f"row has {len(row)} entries, expected {size}"))
    if violations:
        return violations

    for i in range(size):
        if rel[i][i] is not identity:
            violations.append(Violation("diagonal", (i, i), f"{rel[i][i].value} on the diagonal"))
        for j in range(size):
            if i == j:
                continue
            if rel[i][j] is identity:
                violations.append(Violation("identity", (i, j), "eq between distinct regions"))
            if rel[j][i] is not rel[i][j].converse():
                violations.append(Violation(
                    "converse", (i, j),
                    f"rel({i + 1},{j + 1})={rel[i][j].value} but rel({j + 1},{i + 1})={rel[j][i].value}"))

    for i, j, k in itertools.permutations(range(size), 3):
        allowed = table.compose(rel[i][j], rel[j][k])
        if rel[i][k] not in allowed:
            violations.append(Violation(
                "composition", (i, j, k),
                f"rel({i + 1},{k + 1})={rel[i][k].value} not in "
                f"{rel[i][j].value}∘{rel[j][k].value}={allowed!r}"))
    return violations


class RegionStructure:
    """
    Finite general region structure: region ids and a matrix of base relations

    Args:
        kind: RCC8 or RCC5
        regions: Region ids in order
        matrix: rel[i][j] between regions[i] and regions[j]
        check: Validate on construction and raise on any violation
    """

    def __init__(self, kind: Union[Kind, str], regions: Sequence[str],
                 matrix: Sequence[Sequence[RelationLike]], check: bool = True):
        self.kind = Kind.parse(kind)
        self.regions: Tuple[str, ...] = tuple(str(r) for r in regions)
        if len(set(self.regions)) != len(self.regions):
            raise DuplicateRegionError(f"repeated region id in {list(self.regions)}")
        self.matrix = _coerce_matrix(self.kind, matrix)
        if len(self.matrix) != len(self.regions):
            raise ValueError(f"{len(self.regions)} regions but {len(self.matrix)} matrix rows")
        if check:
            violations = validate(self.matrix, self.kind)
            if violations:
                raise RCCToolkitError("not a region structure: " + "; ".join(str(v) for v in violations[:5]))
        self._index = {r: i for i, r in enumerate(self.regions)}
        self._successors: Dict[BaseRelation, Tuple[FrozenSet[int], ...]] = {}

    @property
    def size(self) -> int:
        return len(self.regions)

    def index(self, region: str) -> int:
        try:
            return self._index[region]
        except KeyError:
            raise KeyError(f"unknown region id: {region!r}")

    def rel(self, i: int, j: int) -> BaseRelation:
        return self.matrix[i][j]

    def relation(self, a: str, b: str) -> BaseRelation:
        """Relation between two regions given by id"""
        return self.matrix[self.index(a)][self.index(b)]

    def successors(self, relation: BaseRelation) -> Tuple[FrozenSet[int], ...]:
        """Per region index, the indices j with rel(i, j) = relation"""
        cached = self._successors.get(relation)
        if cached is None:
            if relation.kind is not self.kind:
                raise KindMismatchError(f"{relation.value} in an {self.kind.value} structure")
            cached = tuple(
                frozenset(j for j in range(self.size) if self.matrix[i][j] is relation)
                for i in range(self.size)
            )
            self._successors[relation] = cached
        return cached

    def __eq__(self, other) -> bool:
        return (isinstance(other, RegionStructure) and self.kind is other.kind
                and self.regions == other.regions and self.matrix == other.matrix)

    def __hash__(self) -> int:
        return hash((self.kind, self.regions, self.matrix))

    def __repr__(self) -> str:
        return f"RegionStructure({self.kind.value}, {list(self.regions)})"

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.value,
            "regions": list(self.regions),
            "matrix": [[r.value for r in row] for row in self.matrix],
        }

    @classmethod
    def from_dict(cls, data: Mapping, check: bool = True) -> "RegionStructure":
        try:
            return cls(data["kind"], data["regions"], data["matrix"], check=check)
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed structure payload: {e}")


class Valuation:
    """Map from propositional variable to the set of region ids it holds at"""

    def __init__(self, assignment: Optional[Mapping[str, Iterable[str]]] = None):
        self.assignment: Dict[str, FrozenSet[str]] = {
            name: frozenset(ids) for name, ids in (assignment or {}).items()
        }

    def extension(self, name: str) -> FrozenSet[str]:
        """Regions where the variable holds; unknown variables denote the empty set"""
        return self.assignment.get(name, frozenset())

    def variables(self) -> List[str]:
        return sorted(self.assignment)

    def with_variable(self, name: str, ids: Iterable[str]) -> "Valuation":
        assignment = dict(self.assignment)
        assignment[name] = frozenset(ids)
        return Valuation(assignment)

    def restrict(self, ids: Iterable[str]) -> "Valuation":
        keep = frozenset(ids)
        return Valuation({name: ext & keep for name, ext in self.assignment.items()})

    def check(self, structure: RegionStructure) -> None:
        known = set(structure.regions)
        for name, ids in self.assignment.items():
            unknown = ids - known
            if unknown:
                raise ValueError(f"variable {name!r} mentions unknown regions {sorted(unknown)}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Valuation) and self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"Valuation({self.to_dict()})"

    def to_dict(self) -> Dict[str, List[str]]:
        return {name: sorted(ids) for name, ids in sorted(self.assignment.items())}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Valuation":
        if not isinstance(data, Mapping):
            raise ValueError(f"malformed valuation payload: {data!r}")
        return cls({str(k): [str(i) for i in v] for k, v in data.items()})


def model_to_dict(structure: RegionStructure, valuation: Valuation) -> Dict:
    """Structure JSON with the valuation stored under its own key"""
    data = structure.to_dict()
    data["valuation"] = valuation.to_dict()
    return data


def model_from_dict(data: Mapping, check: bool = True) -> Tuple[RegionStructure, Valuation]:
    """
    Parse a model: structure JSON plus a "valuation" object

    Raises:
        ValueError: Malformed payload, or the valuation names unknown regions
    """
    if not isinstance(data, Mapping):
        raise ValueError(f"malformed model payload: {data!r}")
    structure = RegionStructure.from_dict(data, check=check)
    valuation = Valuation.from_dict(data.get("valuation", {}))
    valuation.check(structure)
    return structure, valuation


def induced(regions: Sequence[Region], ids: Optional[Sequence[str]] = None,
            frame: Optional[ForkFrame] = None, kind: Union[Kind, str] = Kind.RCC8) -> RegionStructure:
    """
    Region structure induced by concrete regions of one kind

    Args:
        regions: Pairwise distinct geometric regions
        ids: Region ids; "r1".."rn" when omitted
        frame: Fork frame for fork regions (smallest covering frame by default)
        kind: RCC5 coarsens every relation

    Returns:
        The induced structure, validated
    """
    kind = Kind.parse(kind)
    if ids is None:
        ids = [f"r{i + 1}" for i in range(len(regions))]
    if len(ids) != len(regions):
        raise ValueError(f"{len(ids)} ids for {len(regions)} regions")
    if frame is None and regions and all(isinstance(r, ForkRegion) for r in regions):
        frame = ForkFrame(max(r.max_fork for r in regions))

    matrix = []
    for i, s in enumerate(regions):
        row = []
        for j, t in enumerate(regions):
            r = relate(s, t, frame)
            if i != j and r.value == "eq":
                raise DuplicateRegionError(f"regions {ids[i]} and {ids[j]} are the same point set")
            row.append(r)
        matrix.append(row)
    if kind is Kind.RCC5:
        matrix = [[coarsen(r) for r in row] for row in matrix]

    structure = RegionStructure(kind, ids, matrix, check=False)
    violations = validate(structure.matrix, kind)
    if violations:
        raise RCCToolkitError(f"geometry induced an invalid structure: {violations[0]}")
    return structure


def substructure(structure: RegionStructure, ids: Iterable[str]) -> RegionStructure:
    """Restriction of a structure to a non-empty subset of its regions"""
    keep = [r for r in structure.regions if r in set(ids)]
    if not keep:
        raise ValueError("substructure needs a non-empty subset of regions")
    index = [structure.index(r) for r in keep]
    matrix = [[structure.matrix[i][j] for j in index] for i in index]
    return RegionStructure(structure.kind, keep, matrix, check=False)


def powerset_rcc5(atom_sets: Sequence[Iterable], ids: Optional[Sequence[str]] = None) -> RegionStructure:
    """
    RCC5 structure whose regions are finite non-empty sets of atoms

    dr is disjointness, pp proper inclusion, ppi proper containment, eq
    equality and po everything else.
    """
    sets = [frozenset(s) for s in atom_sets]
    if any(not s for s in sets):
        raise ValueError("atom sets must be non-empty")
    if len(set(sets)) != len(sets):
        raise DuplicateRegionError("atom sets must be pairwise distinct")
    if ids is None:
        ids = [f"s{i + 1}" for i in range(len(sets))]

    def rel5(a: FrozenSet, b: FrozenSet) -> str:
        if a == b:
            return "eq"
        if not a & b:
            return "dr"
        if a < b:
            return "pp"
        if b < a:
            return "ppi"
        return "po"

    matrix = [[rel5(a, b) for b in sets] for a in sets]
    return RegionStructure(Kind.RCC5, ids, matrix, check=False)


@dataclass
class SupReport:
    """Per region subset, the region serving as its least upper bound (or None)"""

    entries: List[Tuple[Tuple[str, ...], Optional[str]]]

    @property
    def ok(self) -> bool:
        return all(sup is not None for _, sup in self.entries)

    @property
    def missing(self) -> List[Tuple[str, ...]]:
        return [subset for subset, sup in self.entries if sup is None]

    def to_dict(self) -> Dict:
        return {
            "ok": self.ok,
            "entries": [{"subset": list(subset), "sup": sup} for subset, sup in self.entries],
        }


def _is_sup(structure: RegionStructure, subset: Tuple[int, ...], candidate: int) -> bool:
    rel = structure.matrix
    if any(rel[s][candidate].value not in ("eq", "pp") for s in subset):
        return False
    for t in range(structure.size):
        if all(rel[s][t].value == "pp" for s in subset) and rel[candidate][t].value not in ("eq", "pp"):
            return False
        if all(rel[t][s].value == "dr" for s in subset) and rel[t][candidate].value != "dr":
            return False
    return True


def check_sup_property(structure: RegionStructure, max_subset: int = 3) -> SupReport:
    """
    Check the least-upper-bound condition on every region subset of size 2..max_subset

    Args:
        structure: RCC5 structure
        max_subset: Largest subset size examined (3 covers the stated condition)

    Returns:
        SupReport with one entry per subset, naming the first region that
        satisfies all three conditions or None
    """
    if structure.kind is not Kind.RCC5:
        raise KindMismatchError("check_sup_property expects an RCC5 structure")
    entries = []
    for size in range(2, max_subset + 1):
        for subset in itertools.combinations(range(structure.size), size):
            sup = next((c for c in range(structure.size) if _is_sup(structure, subset, c)), None)
            entries.append((
                tuple(structure.regions[i] for i in subset),
                structure.regions[sup] if sup is not None else None,
            ))
    LOGGER.debug("sup check over %d subsets", len(entries))
    return SupReport(entries)
