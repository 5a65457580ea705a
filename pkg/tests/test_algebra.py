"""
Tests for relations, relation sets and composition tables
"""

import pytest

from rcc_toolkit.algebra import (
    RCC5_TABLE_AS_PRINTED,
    RCC8_TABLE,
    BaseRelation5,
    BaseRelation8,
    Kind,
    RelationSet,
    coarsen,
    compose,
    compose5,
    compose_sets,
    converse,
    parse_relation,
    refine,
    table_meta_check,
)
from rcc_toolkit.errors import KindMismatchError


class TestRelations:

    def test_converse_pairs(self):
        assert converse(BaseRelation8.TPP) is BaseRelation8.TPPI
        assert converse(BaseRelation8.NTPPI) is BaseRelation8.NTPP
        assert converse(BaseRelation5.PP) is BaseRelation5.PPI
        for r in BaseRelation8:
            assert r.converse().converse() is r

    def test_symmetric_relations_are_self_converse(self):
        for name in ("dc", "ec", "po", "eq"):
            r = parse_relation(name, Kind.RCC8)
            assert r.converse() is r

    def test_coarsen(self):
        assert coarsen(BaseRelation8.EC) is BaseRelation5.DR
        assert coarsen(BaseRelation8.NTPP) is BaseRelation5.PP
        assert coarsen(BaseRelation8.TPPI) is BaseRelation5.PPI
        with pytest.raises(KindMismatchError):
            coarsen(BaseRelation5.PO)

    def test_refine_inverts_coarsen(self):
        assert refine(BaseRelation5.DR) == {BaseRelation8.DC, BaseRelation8.EC}
        for r8 in BaseRelation8:
            assert r8 in refine(coarsen(r8))

    def test_parse_relation_prefers_rcc8_for_shared_names(self):
        assert parse_relation("PO") is BaseRelation8.PO
        assert parse_relation("po", "rcc5") is BaseRelation5.PO
        assert parse_relation("dr") is BaseRelation5.DR

    def test_parse_relation_rejects_unknown(self):
        with pytest.raises(ValueError):
            parse_relation("dr", Kind.RCC8)
        with pytest.raises(ValueError):
            parse_relation("overlaps")

    def test_kind_parse(self):
        assert Kind.parse("RCC5") is Kind.RCC5
        with pytest.raises(ValueError):
            Kind.parse("rcc3")


class TestRelationSet:

    def test_of_and_names(self):
        s = RelationSet.of("tpp", "dc")
        assert s.to_names() == ["dc", "tpp"]
        assert len(s) == 2
        assert BaseRelation8.TPP in s
        assert BaseRelation8.EC not in s

    def test_set_operations(self):
        a = RelationSet.of("dc", "ec", "po")
        b = RelationSet.of("po", "tpp")
        assert (a | b).to_names() == ["dc", "ec", "po", "tpp"]
        assert (a & b).single() is BaseRelation8.PO
        assert RelationSet.of("dc").issubset(a)
        assert not b.issubset(a)

    def test_converse_of_set(self):
        assert RelationSet.of("tpp", "ntppi").converse() == RelationSet.of("tppi", "ntpp")

    def test_full_and_empty(self):
        assert RelationSet.full(Kind.RCC8).is_full()
        assert len(RelationSet.full(Kind.RCC5)) == 5
        assert RelationSet.empty().is_empty()
        with pytest.raises(ValueError):
            RelationSet.empty().single()

    def test_mixed_kinds_rejected(self):
        with pytest.raises(KindMismatchError):
            RelationSet.of("dc") | RelationSet.of("dr")
        with pytest.raises(KindMismatchError):
            RelationSet.of(BaseRelation8.DC, BaseRelation5.DR)

    def test_immutable_and_hashable(self):
        s = RelationSet.of("ec")
        with pytest.raises(AttributeError):
            s.mask = 3
        assert len({s, RelationSet.of("ec")}) == 1


class TestComposition:

    def test_identity(self):
        for r in BaseRelation8:
            assert compose(r, BaseRelation8.EQ) == RelationSet.of(r)
            assert compose(BaseRelation8.EQ, r) == RelationSet.of(r)

    def test_known_entries(self):
        assert compose(BaseRelation8.TPP, BaseRelation8.NTPP) == RelationSet.of("ntpp")
        assert compose(BaseRelation8.DC, BaseRelation8.TPPI) == RelationSet.of("dc")
        assert compose(BaseRelation8.EC, BaseRelation8.EC) == RelationSet.of("dc", "ec", "po", "eq", "tpp", "tppi")
        assert compose(BaseRelation8.NTPP, BaseRelation8.NTPPI).is_full()
        assert compose5(BaseRelation5.PP, BaseRelation5.PP) == RelationSet.of("pp", kind=Kind.RCC5)
        assert compose5(BaseRelation5.PPI, BaseRelation5.PO) == RelationSet.of("po", "ppi", kind=Kind.RCC5)

    def test_compose_rejects_wrong_kind(self):
        with pytest.raises(KindMismatchError):
            compose(BaseRelation5.PP, BaseRelation5.PP)
        with pytest.raises(KindMismatchError):
            compose5(BaseRelation8.TPP, BaseRelation8.TPP)

    def test_compose_sets_is_union_of_members(self):
        s1 = RelationSet.of("tpp", "ntpp")
        s2 = RelationSet.of("ntpp")
        assert compose_sets(s1, s2) == RelationSet.of("ntpp")
        assert compose_sets(RelationSet.empty(), s2).is_empty()

    def test_converse_law_on_every_pair(self):
        for r in BaseRelation8:
            for s in BaseRelation8:
                assert compose(r, s).converse() == compose(s.converse(), r.converse())


class TestTableAudit:

    @pytest.mark.parametrize("kind, entries", [(Kind.RCC8, 49), (Kind.RCC5, 16)])
    def test_embedded_tables_pass(self, kind, entries):
        report = table_meta_check(None, kind)
        assert report.ok, report.violations
        assert report.stored_entries == entries

    def test_misprinted_rcc5_entry_is_flagged(self):
        report = table_meta_check(RCC5_TABLE_AS_PRINTED, Kind.RCC5)
        assert not report.ok
        assert any("ppi∘po" in v or "po∘pp" in v for v in report.violations)

    def test_missing_entry_is_flagged(self):
        table = dict(RCC8_TABLE)
        del table[("ec", "ntpp")]
        report = table_meta_check(table, Kind.RCC8)
        assert not report.ok
        assert report.stored_entries == 48
        assert report.to_dict()["ok"] is False

    def test_corrupted_entry_breaks_converse_law(self):
        table = dict(RCC8_TABLE)
        table[("tpp", "ntpp")] = "tpp ntpp"
        assert not table_meta_check(table, Kind.RCC8).ok
