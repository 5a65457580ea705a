"""
Bounded satisfiability over finite region structures
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

import pycosat

from ..algebra.relations import BaseRelation, Kind, parse_relation
from ..algebra.tables import table_for
from ..config import Config, get_config
from ..errors import BoundExceededError
from ..structures.enumerate import enumerate_structures
from ..structures.region_structure import RegionStructure, Valuation
from .formula import And, Box, Formula, Mode, Not, Top, Var, variables
from .semantics import ModelChecker, expand

LOGGER = logging.getLogger(__name__)

ENGINES = ("auto", "enumerate", "sat")


@dataclass
class Witness:
    """A model and a region where the formula holds"""

    structure: RegionStructure
    valuation: Valuation
    region: str
    engine: str = "enumerate"

    def to_dict(self) -> Dict:
        return {
            "satisfiable": True,
            "structure": self.structure.to_dict(),
            "valuation": self.valuation.to_dict(),
            "region": self.region,
            "engine": self.engine,
        }


def _valuation(structure: RegionStructure, masks: Dict[str, int]) -> Valuation:
    return Valuation({
        name: [structure.regions[i] for i in range(structure.size) if mask >> i & 1]
        for name, mask in masks.items()
    })


def candidate_count(kind: Kind, max_regions: int, variable_count: int) -> int:
    """Upper bound on (structure, valuation) pairs the enumeration engine visits"""
    proper = len(kind.proper)
    return sum(proper ** (k * (k - 1) // 2) * 2 ** (k * variable_count) for k in range(1, max_regions + 1))


def _enumerate_size(core: Formula, names: List[str], kind: Kind, k: int) -> Optional[Witness]:
    for structure in enumerate_structures(kind, k, limit=None):
        successors: Dict[str, tuple] = {}
        for masks in itertools.product(range(1 << k), repeat=len(names)):
            valuation = dict(zip(names, masks))
            mask = ModelChecker(structure, valuation, successors).extension(core)
            if mask:
                region = structure.regions[(mask & -mask).bit_length() - 1]
                return Witness(structure, _valuation(structure, valuation), region, "enumerate")
    return None


class _Encoder:
    """CNF of 'some structure on k regions satisfies the core formula somewhere'"""

    def __init__(self, kind: Kind, k: int):
        self.kind = kind
        self.k = k
        self.clauses: List[List[int]] = []
        self.top = 0
        self.rel_vars: Dict[Tuple[int, int, BaseRelation], int] = {}
        self.atom_vars: Dict[Tuple[str, int], int] = {}
        self._nodes: Dict[int, Tuple[Formula, List[int]]] = {}
        self._structure_axioms()

    def fresh(self) -> int:
        self.top += 1
        return self.top

    def rel(self, i: int, j: int, r: BaseRelation) -> int:
        """Literal for rel(i, j) = r with i != j"""
        if i > j:
            return self.rel(j, i, r.converse())
        return self.rel_vars[(i, j, r)]

    def _structure_axioms(self) -> None:
        proper = self.kind.proper
        for i in range(self.k):
            for j in range(i + 1, self.k):
                literals = []
                for r in proper:
                    self.rel_vars[(i, j, r)] = self.fresh()
                    literals.append(self.rel_vars[(i, j, r)])
                self.clauses.append(literals)
                for a, b in itertools.combinations(literals, 2):
                    self.clauses.append([-a, -b])
        table = table_for(self.kind)
        for i, j, m in itertools.permutations(range(self.k), 3):
            for r1 in proper:
                for r2 in proper:
                    allowed = [r for r in table.compose(r1, r2) if r is not self.kind.identity]
                    clause = [-self.rel(i, j, r1), -self.rel(j, m, r2)]
                    clause.extend(self.rel(i, m, r) for r in allowed)
                    self.clauses.append(clause)

    def atom(self, name: str, i: int) -> int:
        key = (name, i)
        if key not in self.atom_vars:
            self.atom_vars[key] = self.fresh()
        return self.atom_vars[key]

    def node(self, phi: Formula) -> List[int]:
        """Per region, a literal equivalent to φ holding there"""
        hit = self._nodes.get(id(phi))
        if hit is not None and hit[0] is phi:
            return hit[1]
        literals = self._encode(phi)
        self._nodes[id(phi)] = (phi, literals)
        return literals

    def _encode(self, phi: Formula) -> List[int]:
        if isinstance(phi, Var):
            return [self.atom(phi.name, i) for i in range(self.k)]
        if isinstance(phi, Top):
            t = self.fresh()
            self.clauses.append([t])
            return [t] * self.k
        if isinstance(phi, Not):
            return [-lit for lit in self.node(phi.arg)]
        if isinstance(phi, And):
            left, right = self.node(phi.left), self.node(phi.right)
            result = []
            for a, b in zip(left, right):
                t = self.fresh()
                self.clauses.extend([[-t, a], [-t, b], [t, -a, -b]])
                result.append(t)
            return result
        if isinstance(phi, Box):
            return self._box(phi)
        raise TypeError(f"not a core formula: {phi!r}")

    def _box(self, phi: Box) -> List[int]:
        inner = self.node(phi.arg)
        if phi.modality == self.kind.identity.value:
            return inner
        relation = parse_relation(phi.modality, self.kind)
        result = []
        for i in range(self.k):
            t = self.fresh()
            witnesses = []
            for j in range(self.k):
                if j == i:
                    continue
                r = self.rel(i, j, relation)
                self.clauses.append([-t, -r, inner[j]])
                w = self.fresh()
                self.clauses.extend([[-w, r], [-w, -inner[j]]])
                witnesses.append(w)
            self.clauses.append([t] + witnesses)
            result.append(t)
        return result

    def decode(self, model: List[int], names: List[str]) -> Tuple[RegionStructure, Dict[str, int]]:
        true = {lit for lit in model if lit > 0}
        matrix = [[self.kind.identity] * self.k for _ in range(self.k)]
        for (i, j, r), var in self.rel_vars.items():
            if var in true:
                matrix[i][j] = r
                matrix[j][i] = r.converse()
        ids = [f"r{i + 1}" for i in range(self.k)]
        structure = RegionStructure(self.kind, ids, matrix)
        masks = {}
        for name in names:
            masks[name] = sum(1 << i for i in range(self.k)
                              if self.atom_vars.get((name, i)) in true)
        return structure, masks


def _sat_size(core: Formula, names: List[str], kind: Kind, k: int) -> Optional[Witness]:
    encoder = _Encoder(kind, k)
    root = encoder.node(core)
    encoder.clauses.append(list(root))
    LOGGER.debug("sat encoding on %d regions: %d variables, %d clauses", k, encoder.top, len(encoder.clauses))
    model = pycosat.solve(encoder.clauses)
    if model == "UNSAT":
        return None
    structure, masks = encoder.decode(model, names)
    mask = ModelChecker(structure, masks).extension(core)
    if not mask:
        raise AssertionError("SAT model does not satisfy the formula")
    region = structure.regions[(mask & -mask).bit_length() - 1]
    return Witness(structure, _valuation(structure, masks), region, "sat")


def bounded_sat(phi: Formula, max_regions: int = 3, kind: Union[Kind, str] = Kind.RCC8,
                engine: Optional[str] = None, config: Optional[Config] = None) -> Optional[Witness]:
    """
    Search a finite model of φ with at most max_regions regions

    Sizes are tried in increasing order, so a witness is of minimal size.
    The enumeration engine walks structures in canonical order and
    valuations of φ's variables lexicographically and returns the first
    witness. The SAT engine hands the structure axioms and the grounded
    formula to pycosat and returns whichever model it finds. The auto
    engine enumerates; above 'logic.enumeration_budget' candidates it
    first asks pycosat which sizes have a model, so its witness is still
    the canonical one. Every witness is re-checked by the model checker.

    Args:
        phi: Formula in the alphabet of kind
        max_regions: Largest structure size tried
        kind: RCC8 or RCC5
        engine: auto, enumerate or sat ('logic.bounded_sat_engine' when None)
        config: Configuration object

    Returns:
        Witness, or None when no model of size <= max_regions exists
    """
    config = config or get_config()
    kind = Kind.parse(kind)
    limit = int(config.get("logic.max_regions", 6))
    if max_regions > limit:
        raise BoundExceededError(f"max_regions={max_regions} exceeds logic.max_regions={limit}")
    if max_regions < 1:
        raise ValueError("max_regions must be at least 1")
    engine = engine or config.get("logic.bounded_sat_engine", "auto")
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {', '.join(ENGINES)}")

    core = expand(phi, Mode.parse(kind))
    names = sorted(variables(core))
    sizing = False
    if engine == "auto":
        budget = int(config.get("logic.enumeration_budget", 200000))
        sizing = candidate_count(kind, max_regions, len(names)) > budget
        engine = "enumerate"
    LOGGER.info("bounded_sat: %s engine%s, %d variables, up to %d regions",
                engine, " after SAT sizing" if sizing else "", len(names), max_regions)

    for k in range(1, max_regions + 1):
        if engine == "sat":
            witness = _sat_size(core, names, kind, k)
        elif sizing:
            # pycosat rules out empty sizes; enumeration picks the witness
            witness = _enumerate_size(core, names, kind, k) if _sat_size(core, names, kind, k) else None
        else:
            witness = _enumerate_size(core, names, kind, k)
        if witness is not None:
            return witness
    return None


def naive_sat(phi: Formula, max_regions: int, structures: Iterator[RegionStructure],
              kind: Union[Kind, str] = Kind.RCC8) -> bool:
    """Generate-and-test over the given structures and every valuation of φ's variables"""
    core = expand(phi, Mode.parse(kind))
    names = sorted(variables(core))
    for structure in structures:
        if structure.size > max_regions:
            continue
        for masks in itertools.product(range(1 << structure.size), repeat=len(names)):
            if ModelChecker(structure, dict(zip(names, masks))).extension(core):
                return True
    return False
