"""
Qualitative constraint networks over RCC8 (or RCC5) relation sets
"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..algebra.relations import Kind, RelationSet
from ..errors import DuplicateRegionError, KindMismatchError


class ConstraintNetwork:
    """
    Variables with relation-set constraints between ordered pairs

    Constraints are stored for index pairs (i, j) with i < j; a missing pair
    means the full set. Constraints given in the other orientation are
    stored as their converse, and repeated constraints are intersected.

    Args:
        variables: Distinct variable names
        constraints: Mapping (a, b) -> RelationSet, by variable name
        kind: Relation kind of every constraint
    """

    def __init__(self, variables: Sequence[str],
                 constraints: Optional[Mapping[Tuple[str, str], RelationSet]] = None,
                 kind: Union[Kind, str] = Kind.RCC8):
        self.kind = Kind.parse(kind)
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise DuplicateRegionError(f"repeated variable in {list(self.variables)}")
        self._index = {v: i for i, v in enumerate(self.variables)}
        self.constraints: Dict[Tuple[int, int], RelationSet] = {}
        # Self-constraints that exclude eq make the network trivially inconsistent.
        self.self_conflicts: List[str] = []
        for (a, b), rels in (constraints or {}).items():
            self.add(a, b, rels)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable: {name!r}")

    @property
    def size(self) -> int:
        return len(self.variables)

    def add(self, a: str, b: str, rels: RelationSet) -> None:
        """Intersect the constraint between a and b with rels"""
        if rels.kind is not self.kind:
            raise KindMismatchError(f"{rels.kind.value} constraint in an {self.kind.value} network")
        if rels.is_empty():
            raise ValueError(f"empty relation set between {a} and {b}")
        i, j = self.index(a), self.index(b)
        if i == j:
            if self.kind.identity not in rels:
                self.self_conflicts.append(a)
            return
        if i > j:
            i, j, rels = j, i, rels.converse()
        current = self.constraints.get((i, j))
        self.constraints[(i, j)] = rels if current is None else current & rels

    def constraint(self, a: str, b: str) -> RelationSet:
        """Constraint from a to b (full set when unconstrained)"""
        return self.constraint_by_index(self.index(a), self.index(b))

    def constraint_by_index(self, i: int, j: int) -> RelationSet:
        if i == j:
            return RelationSet.of(self.kind.identity, kind=self.kind)
        if i > j:
            return self.constraint_by_index(j, i).converse()
        return self.constraints.get((i, j), RelationSet.full(self.kind))

    def is_atomic(self) -> bool:
        """Every pair constrained to exactly one base relation"""
        return all(self.constraint_by_index(i, j).is_singleton()
                   for i in range(self.size) for j in range(i + 1, self.size))

    def items(self) -> Iterable[Tuple[str, str, RelationSet]]:
        for (i, j), rels in sorted(self.constraints.items()):
            yield self.variables[i], self.variables[j], rels

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstraintNetwork) or other.variables != self.variables:
            return False
        return all(self.constraint_by_index(i, j) == other.constraint_by_index(i, j)
                   for i in range(self.size) for j in range(i + 1, self.size))

    def __repr__(self) -> str:
        body = ", ".join(f"{a} {rels!r} {b}" for a, b, rels in self.items())
        return f"ConstraintNetwork([{', '.join(self.variables)}]; {body})"

    def to_dict(self) -> Dict:
        data = {
            "vars": list(self.variables),
            "constraints": [
                {"i": a, "j": b, "rels": rels.to_names()}
                for a, b, rels in self.items() if not rels.is_full()
            ],
        }
        if self.kind is not Kind.RCC8:
            data["kind"] = self.kind.value
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> "ConstraintNetwork":
        """Parse {"vars": [...], "constraints": [{"i": .., "j": .., "rels": [...]}]}"""
        try:
            kind = Kind.parse(data.get("kind", "rcc8"))
            variables = data["vars"]
            if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
                raise ValueError(f"vars must be a list of names, got {variables!r}")
            network = cls(variables, kind=kind)
            for entry in data.get("constraints", []):
                rels = RelationSet.from_names(entry["rels"], kind)
                network.add(entry["i"], entry["j"], rels)
        except (KeyError, TypeError, AttributeError) as e:
            raise ValueError(f"malformed network payload: {e}")
        return network

    @classmethod
    def atomic(cls, variables: Sequence[str], relation_names: Mapping[Tuple[str, str], str],
               kind: Union[Kind, str] = Kind.RCC8) -> "ConstraintNetwork":
        """Network with one base relation per listed pair"""
        kind = Kind.parse(kind)
        return cls(variables, {pair: RelationSet.from_names([name], kind)
                               for pair, name in relation_names.items()}, kind)


def merge_equalities(network: ConstraintNetwork) -> Tuple[Optional[ConstraintNetwork], Dict[str, str]]:
    """
    Merge variables whose constraint is exactly {eq}

    Returns:
        The quotient network over class representatives (the first member
        in variable order) and the map variable -> representative; the
        network is None when merging exposes a conflict
    """
    parent = list(range(network.size))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    identity = RelationSet.of(network.kind.identity, kind=network.kind)
    for (i, j), rels in network.constraints.items():
        if rels == identity:
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)

    roots = sorted({find(i) for i in range(network.size)})
    assignment = {v: network.variables[find(i)] for i, v in enumerate(network.variables)}
    if len(roots) == network.size:
        return network, assignment

    merged = ConstraintNetwork([network.variables[r] for r in roots], kind=network.kind)
    if network.self_conflicts:
        merged.self_conflicts = list(network.self_conflicts)
    for (i, j), rels in network.constraints.items():
        a, b = find(i), find(j)
        if a == b:
            if network.kind.identity not in rels:
                return None, assignment
            continue
        if a > b:
            a, b, rels = b, a, rels.converse()
        key = (merged.index(network.variables[a]), merged.index(network.variables[b]))
        narrowed = merged.constraints.get(key, RelationSet.full(network.kind)) & rels
        if narrowed.is_empty():
            return None, assignment
        merged.constraints[key] = narrowed
    return merged, assignment
