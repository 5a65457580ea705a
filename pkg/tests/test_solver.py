"""
Tests for constraint networks, closure, satisfiability and realization
"""

import itertools

import pytest

from rcc_toolkit.algebra import BaseRelation8, Kind, RelationSet
from rcc_toolkit.errors import DuplicateRegionError, KindMismatchError, SearchExhausted
from rcc_toolkit.geometry import relate
from rcc_toolkit.reductions import ec4_hull_network, ec_k
from rcc_toolkit.solver import (
    ConstraintNetwork,
    Inconsistent,
    Sat,
    Unsat,
    a_closure,
    brute_force_sat,
    default_fork_cap,
    embed_reals,
    grid_interval_realizable,
    merge_equalities,
    realize,
    realize_forks,
    satisfiable_rs,
)
from rcc_toolkit.structures import enumerate_structures, induced

PROPER8 = [r.value for r in Kind.RCC8.proper]


def tpp_chain_dc():
    return ConstraintNetwork.atomic(["x", "y", "z"], {("x", "y"): "tpp", ("y", "z"): "tpp", ("x", "z"): "dc"})


class TestNetwork:

    def test_converse_storage_and_intersection(self):
        network = ConstraintNetwork(["a", "b"])
        network.add("b", "a", RelationSet.of("tppi", "dc"))
        assert network.constraint("a", "b") == RelationSet.of("tpp", "dc")
        network.add("a", "b", RelationSet.of("tpp", "po"))
        assert network.constraint("a", "b") == RelationSet.of("tpp")
        assert network.constraint("b", "a") == RelationSet.of("tppi")

    def test_unconstrained_pair_is_full(self):
        network = ConstraintNetwork(["a", "b"])
        assert network.constraint("a", "b").is_full()
        assert not network.is_atomic()

    def test_rejections(self):
        network = ConstraintNetwork(["a", "b"])
        with pytest.raises(ValueError):
            network.add("a", "c", RelationSet.of("dc"))
        with pytest.raises(ValueError):
            network.add("a", "b", RelationSet.empty())
        with pytest.raises(KindMismatchError):
            network.add("a", "b", RelationSet.of("dr"))
        with pytest.raises(DuplicateRegionError):
            ConstraintNetwork(["a", "a"])

    def test_self_constraint_without_eq(self):
        network = ConstraintNetwork(["a"])
        network.add("a", "a", RelationSet.of("dc"))
        assert network.self_conflicts == ["a"]
        assert isinstance(a_closure(network), Inconsistent)
        assert not satisfiable_rs(network)

    def test_dict_round_trip(self):
        network = tpp_chain_dc()
        assert ConstraintNetwork.from_dict(network.to_dict()) == network
        rcc5 = ConstraintNetwork.atomic(["a", "b"], {("a", "b"): "pp"}, kind="rcc5")
        assert rcc5.to_dict()["kind"] == "rcc5"
        assert ConstraintNetwork.from_dict(rcc5.to_dict()).kind is Kind.RCC5

    def test_malformed_payload(self):
        with pytest.raises(ValueError):
            ConstraintNetwork.from_dict({"constraints": []})
        with pytest.raises(ValueError):
            ConstraintNetwork.from_dict({"vars": ["a", "b"], "constraints": [{"i": "a", "rels": ["dc"]}]})
        with pytest.raises(ValueError):
            ConstraintNetwork.from_dict({"vars": "xy", "constraints": []})
        with pytest.raises(ValueError):
            ConstraintNetwork.from_dict({"vars": [1, 2], "constraints": []})

    def test_merge_equalities(self):
        network = ConstraintNetwork.atomic(["x", "y", "z"], {("x", "y"): "eq", ("y", "z"): "dc"})
        merged, assignment = merge_equalities(network)
        assert merged.variables == ("x", "z")
        assert assignment == {"x": "x", "y": "x", "z": "z"}
        assert merged.constraint("x", "z") == RelationSet.of("dc")


class TestClosure:

    def test_detects_composition_conflict(self):
        result = a_closure(tpp_chain_dc())
        assert isinstance(result, Inconsistent)
        assert not result

    def test_narrows_constraints(self):
        network = ConstraintNetwork.atomic(["x", "y", "z"], {("x", "y"): "tpp", ("y", "z"): "tpp"})
        closed = a_closure(network)
        assert closed.constraint("x", "z") == RelationSet.of("tpp", "ntpp")
        assert network.constraint("x", "z").is_full()

    def test_rcc5_conflict(self):
        network = ConstraintNetwork.atomic(
            ["x", "y", "z"], {("x", "y"): "pp", ("y", "z"): "dr", ("x", "z"): "po"}, kind="rcc5")
        assert isinstance(a_closure(network), Inconsistent)


class TestSatisfiability:

    def test_unsat(self):
        verdict = satisfiable_rs(tpp_chain_dc())
        assert isinstance(verdict, Unsat)
        assert verdict.to_dict()["satisfiable"] is False

    def test_sat_refinement(self):
        verdict = satisfiable_rs(ec_k(3))
        assert isinstance(verdict, Sat)
        assert verdict.structure.size == 3
        assert verdict.to_dict()["assignment"] == {"x1": "x1", "x2": "x2", "x3": "x3"}

    def test_refinement_respects_constraints(self):
        network = ConstraintNetwork(["a", "b", "c"], {
            ("a", "b"): RelationSet.of("ec", "po"),
            ("b", "c"): RelationSet.of("ntpp"),
            ("a", "c"): RelationSet.of("dc", "ec", "tpp"),
        })
        verdict = satisfiable_rs(network)
        assert verdict
        structure = verdict.structure
        for a, b, rels in network.items():
            assert structure.relation(a, b) in rels

    def test_equalities_are_merged(self):
        network = ConstraintNetwork.atomic(["x", "y", "z"], {("x", "y"): "eq", ("y", "z"): "dc"})
        verdict = satisfiable_rs(network)
        assert verdict.structure.regions == ("x", "z")
        assert verdict.assignment["y"] == "x"

    def test_conflicting_equalities(self):
        network = ConstraintNetwork.atomic(["x", "y", "z"], {("x", "y"): "eq", ("x", "z"): "dc", ("y", "z"): "ec"})
        assert not satisfiable_rs(network)

    def test_agrees_with_brute_force_on_atomic_triangles(self):
        structures = list(enumerate_structures("rcc8", 3))
        for r1, r2, r3 in itertools.product(PROPER8, repeat=3):
            network = ConstraintNetwork.atomic(["a", "b", "c"], {("a", "b"): r1, ("b", "c"): r2, ("a", "c"): r3})
            oracle = brute_force_sat(network, structures)
            assert bool(satisfiable_rs(network)) == (oracle is not None), (r1, r2, r3)

    def test_agrees_with_brute_force_on_random_networks(self, rng):
        structures = list(enumerate_structures("rcc8", 4))
        for _ in range(20):
            constraints = {}
            for a, b in itertools.combinations(["a", "b", "c", "d"], 2):
                if rng.random() < 0.8:
                    constraints[(a, b)] = RelationSet.of(*rng.sample(PROPER8, rng.randint(1, 3)))
            network = ConstraintNetwork(["a", "b", "c", "d"], constraints)
            assert bool(satisfiable_rs(network)) == (brute_force_sat(network, structures) is not None)

    def test_hull_network_is_satisfiable(self):
        verdict = satisfiable_rs(ec4_hull_network())
        assert verdict
        assert verdict.structure.size == 10


class TestRealization:

    def test_ec_pair(self):
        result = realize(ConstraintNetwork.atomic(["x", "y"], {("x", "y"): "ec"}))
        assert result.verified
        assert relate(result.regions["x"], result.regions["y"]) is BaseRelation8.EC
        data = result.to_dict()
        assert data["fork_count"] == result.frame.fork_count
        assert data["x"] == result.regions["x"].to_list()

    def test_empty_network(self):
        result = realize(ConstraintNetwork.from_dict({"vars": [], "constraints": []}))
        assert result.satisfiable
        assert result.regions == {}
        assert result.frame.fork_count == 1
        assert result.to_dict()["fork_count"] == 1

    def test_three_touching_regions_need_unions(self):
        network = ec_k(3)
        assert grid_interval_realizable(network, 6) is None
        result = realize(network)
        for a, b in itertools.combinations(network.variables, 2):
            assert relate(result.regions[a], result.regions[b]) is BaseRelation8.EC

    def test_equal_variables_share_a_region(self):
        network = ConstraintNetwork.atomic(["x", "y", "z"], {("x", "y"): "eq", ("x", "z"): "ntpp"})
        result = realize(network)
        assert result.regions["x"] == result.regions["y"]
        assert relate(result.regions["y"], result.regions["z"]) is BaseRelation8.NTPP

    def test_unsat_network(self):
        assert isinstance(realize(tpp_chain_dc()), Unsat)

    def test_rcc5_rejected(self):
        network = ConstraintNetwork.atomic(["a", "b"], {("a", "b"): "pp"}, kind="rcc5")
        with pytest.raises(KindMismatchError):
            realize(network)

    def test_fork_cap(self, chain_structure):
        assert default_fork_cap(3) == 6
        with pytest.raises(SearchExhausted):
            realize_forks(chain_structure, cap=0)

    def test_forks_embed_to_the_same_structure(self, chain_structure):
        frame, forks = realize_forks(chain_structure)
        assert frame.fork_count <= default_fork_cap(3)
        intervals = embed_reals(frame, forks)
        ordered = [intervals[r] for r in chain_structure.regions]
        assert induced(ordered, list(chain_structure.regions)) == chain_structure

    def test_grid_search_finds_single_intervals(self):
        network = ConstraintNetwork.atomic(["a", "b"], {("a", "b"): "tpp"})
        found = grid_interval_realizable(network, 2)
        assert relate(found["a"], found["b"]) is BaseRelation8.TPP
