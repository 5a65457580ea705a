"""
Algebraic closure (path consistency) and atomic-refinement search
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from ..algebra.relations import Kind, RelationSet
from ..algebra.tables import CompositionTable, table_for
from ..structures.enumerate import enumerate_structures
from ..structures.region_structure import RegionStructure
from .network import ConstraintNetwork, merge_equalities

LOGGER = logging.getLogger(__name__)

Matrix = List[List[int]]


@dataclass(frozen=True)
class Inconsistent:
    """Closure emptied the constraint between two variables"""

    pair: Tuple[str, str]

    satisfiable = False

    def __bool__(self) -> bool:
        return False


@dataclass
class Unsat:
    reason: str = ""

    satisfiable = False

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> Dict:
        return {"satisfiable": False, "reason": self.reason}


@dataclass
class Sat:
    """
    Satisfiable verdict with its atomic refinement

    The refinement is a region structure over merged variables; assignment
    maps every network variable to its region id.
    """

    structure: RegionStructure
    assignment: Dict[str, str] = field(default_factory=dict)

    satisfiable = True

    def __bool__(self) -> bool:
        return True

    def to_dict(self) -> Dict:
        return {
            "satisfiable": True,
            "refinement": self.structure.to_dict(),
            "assignment": dict(sorted(self.assignment.items())),
        }


@lru_cache(maxsize=None)
def _converse_mask(kind: Kind, mask: int) -> int:
    return RelationSet(kind, mask).converse().mask


def _to_matrix(network: ConstraintNetwork) -> Matrix:
    n = network.size
    return [[network.constraint_by_index(i, j).mask for j in range(n)] for i in range(n)]


def _close(kind: Kind, table: CompositionTable, m: Matrix,
           queue: Optional[deque] = None) -> Optional[Tuple[int, int]]:
    """
    Refine m in place to its path-consistent fixpoint

    Returns:
        The pair that became empty, or None when the matrix stays consistent
    """
    n = len(m)
    if queue is None:
        queue = deque((i, j) for i in range(n) for j in range(i + 1, n))
    queued = set(queue)
    while queue:
        i, j = queue.popleft()
        queued.discard((i, j))
        for k in range(n):
            if k == i or k == j:
                continue
            # (i,k) <- (i,k) ∩ (i,j)∘(j,k)
            refined = m[i][k] & table.compose_masks(m[i][j], m[j][k])
            if refined != m[i][k]:
                if not refined:
                    return (i, k)
                m[i][k] = refined
                m[k][i] = _converse_mask(kind, refined)
                pair = (min(i, k), max(i, k))
                if pair not in queued:
                    queue.append(pair)
                    queued.add(pair)
            # (k,j) <- (k,j) ∩ (k,i)∘(i,j)
            refined = m[k][j] & table.compose_masks(m[k][i], m[i][j])
            if refined != m[k][j]:
                if not refined:
                    return (k, j)
                m[k][j] = refined
                m[j][k] = _converse_mask(kind, refined)
                pair = (min(k, j), max(k, j))
                if pair not in queued:
                    queue.append(pair)
                    queued.add(pair)
    return None


def _from_matrix(network: ConstraintNetwork, m: Matrix) -> ConstraintNetwork:
    closed = ConstraintNetwork(network.variables, kind=network.kind)
    full = RelationSet.full(network.kind).mask
    for i in range(network.size):
        for j in range(i + 1, network.size):
            if m[i][j] != full:
                closed.constraints[(i, j)] = RelationSet(network.kind, m[i][j])
    return closed


def a_closure(network: ConstraintNetwork) -> Union[ConstraintNetwork, Inconsistent]:
    """
    Path-consistent refinement of a network

    Repeatedly narrows rel(i,k) to rel(i,k) ∩ rel(i,j)∘rel(j,k) until
    nothing changes.

    Args:
        network: Input network (left untouched)

    Returns:
        The refined network, or Inconsistent naming the pair that emptied
    """
    if network.self_conflicts:
        v = network.self_conflicts[0]
        return Inconsistent((v, v))
    m = _to_matrix(network)
    empty = _close(network.kind, table_for(network.kind), m)
    if empty is not None:
        i, j = empty
        LOGGER.debug("closure emptied (%s, %s)", network.variables[i], network.variables[j])
        return Inconsistent((network.variables[i], network.variables[j]))
    return _from_matrix(network, m)


def _choose_pair(m: Matrix) -> Optional[Tuple[int, int]]:
    best, best_size = None, None
    n = len(m)
    for i in range(n):
        for j in range(i + 1, n):
            size = bin(m[i][j]).count("1")
            if size > 1 and (best_size is None or size < best_size):
                best, best_size = (i, j), size
    return best


def _search(kind: Kind, table: CompositionTable, m: Matrix, stats: Dict[str, int]) -> Optional[Matrix]:
    pair = _choose_pair(m)
    if pair is None:
        return m
    i, j = pair
    for r in kind.relations:
        if not m[i][j] & r.bit:
            continue
        stats["branches"] += 1
        child = [row[:] for row in m]
        child[i][j] = r.bit
        child[j][i] = r.converse().bit
        if _close(kind, table, child, deque([(i, j)])) is None:
            found = _search(kind, table, child, stats)
            if found is not None:
                return found
    return None


def _quotient(network: ConstraintNetwork, m: Matrix,
              assignment: Dict[str, str]) -> Tuple[RegionStructure, Dict[str, str]]:
    """Collapse pairs the search fixed to eq into single regions"""
    kind = network.kind
    eq_bit = kind.identity.bit
    n = network.size
    representative = list(range(n))
    for j in range(n):
        for i in range(j):
            if m[i][j] == eq_bit and representative[i] == i:
                representative[j] = i
                break
    keep = [i for i in range(n) if representative[i] == i]
    relation_of = {r.bit: r for r in kind.relations}
    matrix = [[relation_of[m[i][j]] for j in keep] for i in keep]
    ids = [network.variables[i] for i in keep]
    structure = RegionStructure(kind, ids, matrix)
    region_of = {network.variables[i]: network.variables[representative[i]] for i in range(n)}
    return structure, {v: region_of[r] for v, r in assignment.items()}


def satisfiable_rs(network: ConstraintNetwork) -> Union[Sat, Unsat]:
    """
    Decide satisfiability over general region structures

    Variables forced to eq are merged first; then the search picks the
    undecided pair with the smallest domain (lexicographic on ties), tries
    its relations in canonical order and prunes with closure.

    Args:
        network: Input network

    Returns:
        Sat with the atomic refinement, or Unsat
    """
    merged, assignment = merge_equalities(network)
    if merged is None or merged.self_conflicts:
        return Unsat("conflicting equality constraints")
    kind = merged.kind
    table = table_for(kind)
    m = _to_matrix(merged)
    empty = _close(kind, table, m)
    if empty is not None:
        return Unsat(f"closure emptied ({merged.variables[empty[0]]}, {merged.variables[empty[1]]})")
    stats = {"branches": 0}
    solution = _search(kind, table, m, stats)
    LOGGER.debug("atomic search over %d variables: %d branches", merged.size, stats["branches"])
    if solution is None:
        return Unsat("no atomic refinement")
    structure, assignment = _quotient(merged, solution, assignment)
    return Sat(structure, assignment)


def brute_force_sat(network: ConstraintNetwork,
                    structures: Optional[List[RegionStructure]] = None) -> Optional[RegionStructure]:
    """
    Oracle: first enumerated structure matching every constraint

    Variable i is interpreted by region i; eq between distinct variables is
    never matched, so the oracle is meant for eq-free networks.
    """
    if network.self_conflicts:
        return None
    candidates = structures if structures is not None else enumerate_structures(network.kind, network.size, limit=None)
    for structure in candidates:
        if all(structure.rel(i, j) in rels for (i, j), rels in network.constraints.items()):
            return structure
    return None
