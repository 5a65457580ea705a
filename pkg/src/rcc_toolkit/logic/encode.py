"""
Constraint networks as modal formulas
"""

from typing import Dict

from ..solver.network import ConstraintNetwork
from ..structures.region_structure import Valuation
from .formula import BOTTOM, And, Diamond, Formula, Nom, Var, big_and, big_or, diamond_u


def variable_for(name: str) -> str:
    return f"p_{name}"


def network_to_formula(network: ConstraintNetwork) -> Formula:
    """
    Formula satisfiable exactly when the network is

    Each constraint (x R y) becomes <u>(p_x & <r1>p_y | ... ) with one
    diamond per member of R, followed by nom(p_x) for every variable.

    Args:
        network: RCC8 or RCC5 network

    Returns:
        The conjunction, in constraint order then variable order
    """
    conjuncts = []
    for a, b, rels in network.items():
        if rels.is_full():
            continue
        reach = big_or(Diamond(r.value, Var(variable_for(b))) for r in rels)
        conjuncts.append(diamond_u(And(Var(variable_for(a)), reach)))
    if network.self_conflicts:
        conjuncts.append(BOTTOM)
    conjuncts.extend(Nom(Var(variable_for(v))) for v in network.variables)
    return big_and(conjuncts)


def nominal_valuation(assignment: Dict[str, str]) -> Valuation:
    """Singleton valuation p_x -> {region of x}"""
    return Valuation({variable_for(var): [region] for var, region in assignment.items()})
