"""
Case analysis shared by every geometry kind
"""

from ..algebra.relations import BaseRelation8


def relation_from_sets(meet: bool, interiors_meet: bool,
                       s_in_t: bool, t_in_s: bool,
                       s_in_interior_t: bool, t_in_interior_s: bool) -> BaseRelation8:
    """
    Decide the RCC8 relation between two regular closed regions s and t

    Args:
        meet: s ∩ t ≠ ∅
        interiors_meet: I(s) ∩ I(t) ≠ ∅
        s_in_t: s ⊆ t
        t_in_s: t ⊆ s
        s_in_interior_t: s ⊆ I(t)
        t_in_interior_s: t ⊆ I(s)

    Returns:
        The unique base relation whose defining condition holds
    """
    if not meet:
        return BaseRelation8.DC
    if not interiors_meet:
        return BaseRelation8.EC
    if s_in_t and t_in_s:
        return BaseRelation8.EQ
    if s_in_t:
        return BaseRelation8.NTPP if s_in_interior_t else BaseRelation8.TPP
    if t_in_s:
        return BaseRelation8.NTPPI if t_in_interior_s else BaseRelation8.TPPI
    return BaseRelation8.PO
