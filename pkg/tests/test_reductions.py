"""
Tests for the quadrant enumeration, domino systems, Turing machines and the reduction formulas
"""

import pytest

from rcc_toolkit.errors import MissingTileError, NormalizationError
from rcc_toolkit.geometry import HyperRect
from rcc_toolkit.logic import check, extension, parse, valid_in, variables
from rcc_toolkit.logic.formula import Mode
from rcc_toolkit.reductions import (
    RESERVED,
    DominoSystem,
    S53Model,
    Tiling,
    TuringMachine,
    brute_force_triangle,
    check_domino_ready,
    chi_d,
    chi_d_fin,
    chi_rcc5,
    disconnected_parts_formula,
    domready_witness,
    dovetail_label,
    find_triangle,
    harbor_formulas,
    harbor_model,
    lambda_,
    lambda_inv,
    left_of,
    loeb_formula,
    model_from_s53,
    model_from_tiling,
    on_floor,
    on_wall,
    phi_d,
    phi_d_fin,
    phi_d_recurring,
    right_of,
    s53_check,
    s53_reduction,
    sharp_translate,
    square_positions,
    tile_square,
    tile_triangle,
    tm_to_domino,
    triangle_positions,
    triangle_size,
    triple_region,
    up_of,
)
from rcc_toolkit.structures import RegionStructure, Valuation, enumerate_structures

SINGLE = DominoSystem(("t",), {("t", "t")}, {("t", "t")}, s0="t", f0="t", t0="t")
CHECKERBOARD = DominoSystem(("w", "k"), {("w", "k"), ("k", "w")}, {("w", "k"), ("k", "w")}, s0="w", f0="k")
START_MIDDLE_FINAL = DominoSystem(
    ("s", "m", "f"),
    {("s", "m"), ("m", "f"), ("f", "f"), ("m", "m")},
    {("s", "m"), ("m", "m"), ("m", "f"), ("f", "f")},
    s0="s", f0="f",
)
NO_TILING = DominoSystem(("s", "f"), set(), {("s", "f")}, s0="s", f0="f")

ONE_STEP = TuringMachine(
    states=("q0", "qf"),
    alphabet=("b", "#"),
    initial="q0",
    final="qf",
    transitions=(("q0", "b", "qf", "#", "R"), ("q0", "#", "qf", "#", "R")),
)


class TestGrid:

    def test_first_positions(self):
        assert [lambda_(i) for i in range(1, 7)] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]

    def test_inverse(self):
        for i in range(1, 100):
            assert lambda_inv(*lambda_(i)) == i
        with pytest.raises(ValueError):
            lambda_(0)
        with pytest.raises(ValueError):
            lambda_inv(-1, 0)

    def test_neighbours(self):
        assert right_of(1) == 2
        assert up_of(1) == 3
        assert left_of(2) == 1
        assert left_of(3) is None
        for i in range(1, 50):
            assert up_of(i) == right_of(i) + 1

    def test_wall_and_floor(self):
        assert on_wall(1) and on_floor(1)
        assert on_floor(2) and not on_wall(2)
        assert on_wall(3) and not on_floor(3)

    def test_dovetail_label(self):
        assert [dovetail_label(i) for i in (1, 2, 3)] == [(0, 0), (1, 0), (1, 1)]

    def test_shapes(self):
        assert triangle_size(2) == 6
        assert triangle_positions(1) == [(0, 0), (1, 0), (0, 1)]
        assert square_positions(2) == [(0, 0), (1, 0), (0, 1), (1, 1)]


class TestDomino:

    def test_validation(self):
        with pytest.raises(ValueError):
            DominoSystem((), set(), set())
        with pytest.raises(ValueError):
            DominoSystem(("a",), {("a", "b")}, set())
        with pytest.raises(ValueError):
            DominoSystem(("a", "a"), set(), set())
        with pytest.raises(ValueError):
            DominoSystem(("a",), set(), set(), s0="z")

    def test_dict_round_trip(self):
        assert DominoSystem.from_dict(CHECKERBOARD.to_dict()) == CHECKERBOARD
        with pytest.raises(ValueError):
            DominoSystem.from_dict({"h": []})

    def test_tile_variables_are_identifiers(self):
        system = DominoSystem(("q0/b/L",), set(), set())
        assert system.tile_variable("q0/b/L") == "p_q0_2f_b_2f_L"

    def test_checkerboard_triangle(self):
        tiling = tile_triangle(CHECKERBOARD, 2)
        assert tiling is not None
        assert tiling.violations(CHECKERBOARD) == []
        assert tiling.cells[(0, 0)] == "w"
        assert tiling.cells[(1, 1)] == "w"

    def test_search_agrees_with_brute_force(self):
        for system in (SINGLE, CHECKERBOARD, START_MIDDLE_FINAL, NO_TILING):
            for k in range(3):
                assert (tile_triangle(system, k) is not None) == brute_force_triangle(system, k)

    def test_find_triangle(self, config):
        assert find_triangle(SINGLE, config=config).k == 0
        assert find_triangle(START_MIDDLE_FINAL, config=config).k == 2
        assert find_triangle(NO_TILING, max_k=3, config=config) is None

    def test_square(self):
        tiling = tile_square(CHECKERBOARD, 3)
        assert tiling.shape == "square"
        assert tiling.violations(CHECKERBOARD) == []
        assert tile_square(NO_TILING, 2) is None

    def test_tiling_violations(self):
        tiling = Tiling(1, {(0, 0): "w", (1, 0): "w"})
        problems = tiling.violations(CHECKERBOARD)
        assert "no tile at (0, 1)" in problems
        assert any(p.startswith("H fails") for p in problems)
        assert Tiling.from_dict(tiling.to_dict()).cells == tiling.cells


class TestTuringMachines:

    def test_normal_form(self):
        assert ONE_STEP.normalization_failures() == []

    def test_normalization_failures(self):
        machine = TuringMachine(("q0", "qf"), ("b", "#"), "q0", "qf", (("q0", "b", "q0", "b", "L"),))
        failures = machine.normalization_failures()
        assert failures == [
            "initial_state_reentered", "stops_outside_final", "marker_never_written", "blank_written",
        ]
        with pytest.raises(NormalizationError):
            tm_to_domino(machine)

    def test_declarations_are_checked(self):
        with pytest.raises(ValueError):
            TuringMachine(("q0",), ("b", "#"), "q0", "qf", ())
        with pytest.raises(ValueError):
            TuringMachine(("q0", "qf"), ("b", "#"), "q0", "qf", (("q0", "b", "qf", "#", "N"),))

    def test_dict_round_trip(self):
        assert TuringMachine.from_dict(ONE_STEP.to_dict()) == ONE_STEP
        with pytest.raises(ValueError):
            TuringMachine.from_dict({"states": ["q0"]})

    def test_domino_system(self):
        system = tm_to_domino(ONE_STEP)
        assert system.s0 == "q0/b/L"
        assert system.f0 == "qf/#/R"
        assert len(system.tiles) == 2 + 8 + 8 + 1
        assert ("q0/b/L", "qf/#/R^") in system.h

    def test_halting_machine_tiles_a_triangle(self, config):
        system = tm_to_domino(ONE_STEP)
        tiling = find_triangle(system, 12, config=config)
        assert tiling is not None
        assert tiling.cells[(0, 0)] == system.s0
        assert system.f0 in tiling.cells.values()
        assert tiling.violations(system) == []


class TestWitness:

    @pytest.mark.parametrize("count, dims", [(20, 1), (6, 2)])
    def test_domino_ready(self, count, dims):
        xs, ys = domready_witness(count, dims)
        assert len(xs) == 2 * count
        assert check_domino_ready(xs, ys) == []

    def test_shapes(self):
        xs, ys = domready_witness(2, 2)
        assert isinstance(xs[0], HyperRect)
        assert xs[0].to_list() == [["-1", "1"], ["-1", "1"]]
        xs, ys = domready_witness(1)
        assert ys[0] == xs[1]

    def test_broken_prefix_is_reported(self):
        xs, ys = domready_witness(3)
        xs[1], xs[2] = xs[2], xs[1]
        assert check_domino_ready(xs, ys)

    def test_bounds(self):
        with pytest.raises(ValueError):
            domready_witness(0)
        with pytest.raises(ValueError):
            domready_witness(2, dims=0)


class TestReductionFormulas:

    def test_group_counts(self):
        assert len(chi_d(SINGLE)) == 17
        assert len(chi_d_fin(SINGLE)) == 18

    def test_vocabulary(self):
        names = variables(phi_d(CHECKERBOARD))
        assert {"a", "b", "c", "wall", "floor", "p_w", "p_k"} <= names

    def test_missing_tiles(self):
        with pytest.raises(MissingTileError):
            phi_d_fin(DominoSystem(("t",), {("t", "t")}, {("t", "t")}))
        with pytest.raises(MissingTileError):
            phi_d_recurring(CHECKERBOARD)
        assert phi_d_recurring(SINGLE) is not None

    @pytest.mark.parametrize("system", [SINGLE, CHECKERBOARD, START_MIDDLE_FINAL], ids=["single", "checker", "smf"])
    def test_tiling_model_satisfies_finite_formula(self, system):
        tiling = next(t for t in (tile_triangle(system, k) for k in (1, 2, 3)) if t is not None)
        structure, valuation, root = model_from_tiling(system, tiling)
        assert root == "r1"
        assert check(structure, valuation, root, phi_d_fin(system))

    def test_unguarded_groups_fail_on_finite_models(self):
        tiling = tile_triangle(SINGLE, 1)
        structure, valuation, root = model_from_tiling(SINGLE, tiling)
        assert not check(structure, valuation, root, phi_d_fin(SINGLE, guarded=False))

    def test_single_tile_model(self):
        structure, valuation, _ = model_from_tiling(SINGLE, tile_triangle(SINGLE, 1))
        assert structure.regions == ("r1", "s1", "r2", "s2", "r3")
        assert valuation.extension("c") == {"s1"}
        assert valuation.extension("wall") == {"r1", "r3"}
        assert valuation.extension("floor") == {"r1", "r2"}

    def test_down_walks_prev_then_left(self):
        structure, valuation, _ = model_from_tiling(SINGLE, tile_triangle(SINGLE, 2))
        assert structure.regions[-1] == "r6"
        for i in range(1, 7):
            x, y = lambda_(i)
            if y == 0:
                continue
            below = f"r{lambda_inv(x, y - 1)}"
            marked = Valuation({**valuation.assignment, "z": [below]})
            assert check(structure, marked, f"r{i}", parse("<down>z")), i
            if x == 0:
                assert not check(structure, marked, f"r{i}", parse("<left><prev>z")), i

    def test_model_size_bounds(self):
        tiling = tile_triangle(SINGLE, 1)
        with pytest.raises(ValueError):
            model_from_tiling(SINGLE, tiling, size=4)
        with pytest.raises(ValueError):
            model_from_tiling(SINGLE, Tiling(1, {}))


class TestS53:

    def test_model_checking(self):
        model = S53Model((2, 1, 1), {"p": [(1, 0, 0)]})
        assert s53_check(model, (0, 0, 0), parse("<1>p", "s53"))
        assert not s53_check(model, (0, 0, 0), parse("<2>p", "s53"))
        assert not s53_check(model, (0, 0, 0), parse("[1]p", "s53"))
        with pytest.raises(ValueError):
            s53_check(model, (2, 0, 0), parse("p", "s53"))

    def test_model_validation(self):
        with pytest.raises(ValueError):
            S53Model((2, 0, 1))
        with pytest.raises(ValueError):
            S53Model((1, 1, 1), {"p": [(0, 0, 1)]})
        model = S53Model((2, 2, 1), {"p": [(0, 1, 0)]})
        assert S53Model.from_dict(model.to_dict()).valuation == model.valuation

    def test_reduction_agrees_with_product_semantics(self, rng):
        chi = chi_rcc5()
        for _ in range(10):
            model = S53Model.random(rng, (2, 2, 1), ["p", "q"])
            structure, valuation = model_from_s53(model)
            assert valid_in(structure, valuation, chi)
            for text in ("<1>p", "[2](p | q)", "<3>!p & <1><2>q"):
                psi = parse(text, Mode.S53)
                holds = extension(structure, valuation, sharp_translate(psi))
                for world in model.worlds():
                    assert s53_check(model, world, psi) == (triple_region(world) in holds), text

    def test_reduction_formula(self):
        model = S53Model((1, 1, 1), {"p": [(0, 0, 0)]})
        structure, valuation = model_from_s53(model)
        phi = s53_reduction(parse("p", "s53"))
        assert check(structure, valuation, triple_region((0, 0, 0)), phi)

    def test_reserved_names(self):
        assert "d12" in RESERVED
        with pytest.raises(ValueError):
            sharp_translate(parse("d & p", "s53"))
        with pytest.raises(ValueError):
            model_from_s53(S53Model((1, 1, 1), {"a1": [(0, 0, 0)]}))


class TestCorpus:

    def test_harbor_knowledge_base(self):
        structure, valuation = harbor_model()
        assert structure.relation("dresden", "elbe").value == "po"
        assert structure.relation("harbor", "dresden").value == "ntpp"
        for name, phi in harbor_formulas().items():
            assert valid_in(structure, valuation, phi), name

    def test_loeb_formula_on_small_structures(self):
        loeb = loeb_formula()
        for structure in enumerate_structures("rcc8", 2):
            for p in ([], ["r1"], ["r2"], ["r1", "r2"]):
                assert valid_in(structure, Valuation({"p": p}), loeb)

    def test_disconnected_parts_has_a_small_countermodel(self):
        structure = RegionStructure("rcc8", ["a", "b"], [["eq", "dc"], ["dc", "eq"]])
        valuation = Valuation({"p": ["a"], "q": ["b"]})
        assert not valid_in(structure, valuation, disconnected_parts_formula())
