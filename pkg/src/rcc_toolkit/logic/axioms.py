"""
Axiom schemata of the region logic and their soundness on finite structures

Nominals are ordinary variables; soundness runs give them singleton
valuations.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.relations import BaseRelation, Kind, parse_relation
from ..algebra.tables import table_for
from ..errors import UnknownSchemaError
from ..structures.region_structure import RegionStructure, Valuation
from .formula import (
    And,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Not,
    Var,
    big_or,
    box_u,
    diamond_u,
    random_formula,
    variables,
)
from .semantics import valid_in

LOGGER = logging.getLogger(__name__)

# schema id -> (formula arguments, nominal?, relation arguments)
SCHEMAS: Dict[str, Tuple[int, bool, int]] = {
    "k": (2, False, 1),
    "disjoint": (0, True, 2),
    "composition": (1, False, 2),
    "symmetric": (1, False, 1),
    "inverse": (1, False, 1),
    "t_u": (1, False, 0),
    "4_u": (1, False, 0),
    "b_u": (1, False, 0),
    "eq": (1, False, 0),
    "nominal": (0, True, 0),
    "nominal_unique": (1, True, 0),
}

DESCRIPTIONS = {
    "k": "[r](φ -> ψ) -> ([r]φ -> [r]ψ)",
    "disjoint": "<r1>i -> !<r2>i for r1 != r2",
    "composition": "<r1><r2>φ -> OR of <q>φ over q in r1∘r2",
    "symmetric": "φ -> [r]<r>φ for symmetric r",
    "inverse": "φ -> [r]<r'>φ for r' the converse of r",
    "t_u": "[u]φ -> φ",
    "4_u": "[u]φ -> [u][u]φ",
    "b_u": "φ -> [u]<u>φ",
    "eq": "[eq]φ <-> φ",
    "nominal": "<u>i",
    "nominal_unique": "<u>(i & φ) -> [u](i -> φ)",
}


def _relation(value: Union[BaseRelation, str], kind: Kind) -> BaseRelation:
    return parse_relation(value, kind) if isinstance(value, str) else value


def schema_relations(schema: str, kind: Union[Kind, str] = Kind.RCC8) -> List[Tuple[BaseRelation, ...]]:
    """Relation arguments the schema admits, in canonical order"""
    kind = Kind.parse(kind)
    if schema not in SCHEMAS:
        raise UnknownSchemaError(schema)
    count = SCHEMAS[schema][2]
    if count == 0:
        return [()]
    if schema == "symmetric":
        return [(r,) for r in kind.relations if r.converse() is r]
    if schema == "inverse":
        return [(r,) for r in kind.relations if r.converse() is not r]
    if schema == "disjoint":
        return [(a, b) for a in kind.relations for b in kind.relations if a is not b]
    if count == 1:
        return [(r,) for r in kind.relations]
    return [(a, b) for a in kind.relations for b in kind.relations]


def axiom_instances(schema: str, formulas: Sequence[Formula] = (), nominal: Optional[str] = None,
                    relations: Sequence[Union[BaseRelation, str]] = (),
                    kind: Union[Kind, str] = Kind.RCC8) -> Formula:
    """
    Instantiate one axiom schema

    Args:
        schema: Schema id (see SCHEMAS)
        formulas: φ (and ψ for the K axiom)
        nominal: Variable name standing for the nominal i
        relations: Relation arguments r (r1, r2 where the schema has two)
        kind: Relation kind of the alphabet

    Returns:
        The instantiated axiom
    """
    kind = Kind.parse(kind)
    if schema not in SCHEMAS:
        raise UnknownSchemaError(schema)
    n_formulas, needs_nominal, n_relations = SCHEMAS[schema]
    if len(formulas) < n_formulas:
        raise ValueError(f"schema {schema} needs {n_formulas} formula(s)")
    if needs_nominal and not nominal:
        raise ValueError(f"schema {schema} needs a nominal")
    if len(relations) < n_relations:
        raise ValueError(f"schema {schema} needs {n_relations} relation(s)")
    rels = [_relation(r, kind) for r in relations[:n_relations]]
    phi = formulas[0] if formulas else None
    i = Var(nominal) if nominal else None

    if schema == "k":
        r, psi = rels[0].value, formulas[1]
        return Implies(Box(r, Implies(phi, psi)), Implies(Box(r, phi), Box(r, psi)))
    if schema == "disjoint":
        if rels[0] is rels[1]:
            raise ValueError("disjointness needs two different relations")
        return Implies(Diamond(rels[0].value, i), Not(Diamond(rels[1].value, i)))
    if schema == "composition":
        entry = table_for(kind).compose(rels[0], rels[1])
        return Implies(Diamond(rels[0].value, Diamond(rels[1].value, phi)),
                       big_or(Diamond(q.value, phi) for q in entry))
    if schema == "symmetric":
        if rels[0].converse() is not rels[0]:
            raise ValueError(f"{rels[0].value} is not symmetric")
        return Implies(phi, Box(rels[0].value, Diamond(rels[0].value, phi)))
    if schema == "inverse":
        return Implies(phi, Box(rels[0].value, Diamond(rels[0].converse().value, phi)))
    if schema == "t_u":
        return Implies(box_u(phi), phi)
    if schema == "4_u":
        return Implies(box_u(phi), box_u(box_u(phi)))
    if schema == "b_u":
        return Implies(phi, box_u(diamond_u(phi)))
    if schema == "eq":
        return Iff(Box(kind.identity.value, phi), phi)
    if schema == "nominal":
        return diamond_u(i)
    # nominal_unique
    return Implies(diamond_u(And(i, phi)), box_u(Implies(i, phi)))


def random_instance(rng: random.Random, schema: str, names: Sequence[str], depth: int = 2,
                    kind: Union[Kind, str] = Kind.RCC8, nominal: str = "i") -> Formula:
    """Instance with random formula and relation arguments"""
    kind = Kind.parse(kind)
    n_formulas = SCHEMAS[schema][0] if schema in SCHEMAS else 0
    formulas = [random_formula(rng, names, depth, kind) for _ in range(n_formulas)]
    relations = rng.choice(schema_relations(schema, kind))
    return axiom_instances(schema, formulas, nominal, relations, kind)


@dataclass
class SoundnessReport:
    """Counterexamples found while checking axiom instances"""

    checked: int = 0
    counterexamples: List[Dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict:
        return {"checked": self.checked, "ok": self.ok, "counterexamples": self.counterexamples[:10]}


def soundness_check(instances: Sequence[Formula], structures: Sequence[RegionStructure],
                    rng: random.Random, nominals: Sequence[str] = ("i",),
                    valuations_per_structure: int = 1) -> SoundnessReport:
    """
    Check that every instance is valid in every structure

    Nominal variables get a random singleton; every other variable of the
    instance gets a random subset of the regions.
    """
    report = SoundnessReport()
    for structure in structures:
        for _ in range(valuations_per_structure):
            for instance in instances:
                assignment = {}
                for name in sorted(variables(instance)):
                    if name in nominals:
                        assignment[name] = [rng.choice(structure.regions)]
                    else:
                        assignment[name] = [r for r in structure.regions if rng.random() < 0.5]
                valuation = Valuation(assignment)
                report.checked += 1
                if not valid_in(structure, valuation, instance):
                    report.counterexamples.append({
                        "formula": str(instance),
                        "structure": structure.to_dict(),
                        "valuation": valuation.to_dict(),
                    })
    LOGGER.debug("soundness: %d checks, %d counterexamples", report.checked, len(report.counterexamples))
    return report


def rule_cov_check(premise: Formula, nominal: str, structure: Optional[RegionStructure] = None,
                   valuation: Optional[Valuation] = None) -> bool:
    """
    Applicability (and, given a model, preservation) of the covering rule

    From i -> φ infer φ, provided the nominal i does not occur in φ.

    Args:
        premise: Formula of the form i -> φ
        nominal: Name of the nominal variable i
        structure: Optional model to test semantic preservation in
        valuation: Valuation of the other variables

    Returns:
        False when the side condition fails or, with a structure, when the
        premise is valid under every singleton placement of i while φ is not
    """
    if not isinstance(premise, Implies) or premise.left != Var(nominal):
        return False
    conclusion = premise.right
    if nominal in variables(conclusion):
        return False
    if structure is None:
        return True
    base = valuation or Valuation()
    premise_valid = all(
        valid_in(structure, base.with_variable(nominal, [region]), premise)
        for region in structure.regions
    )
    return not premise_valid or valid_in(structure, base, conclusion)
