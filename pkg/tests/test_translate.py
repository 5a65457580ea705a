"""
Tests for the first-order translations and the order-theoretic box encoding
"""

import pytest

from rcc_toolkit.errors import FormulaSyntaxError, FreeVariableError
from rcc_toolkit.geometry import HyperRect, IntervalUnion
from rcc_toolkit.logic import Mode, ModelChecker, check, expand, extension, parse, random_formula, size, valid_in
from rcc_toolkit.structures import Valuation, induced
from rcc_toolkit.translate import (
    Exists,
    FAnd,
    FL4Model,
    FOChecker,
    Pred,
    Rel,
    check_order_formulas,
    eval_fl4,
    eval_fo,
    fl4_to_sexpr,
    fo2_to_modal,
    free_variables,
    modal_to_fl4,
    modal_to_fo,
    parse_sexpr,
    quantifier_depth,
    random_fo2,
    succinctness_formula,
    to_sexpr,
)

MODAL_SAMPLES = ["<ec>p", "[tpp]p", "<tppi>p & !p", "<ntpp>true", "[u](p -> <ec>!p)", "nom(p) | <po>q"]


class TestSexpr:

    def test_parse(self):
        phi = parse_sexpr("(exists y (and (ec x y) (p y)))")
        assert phi == Exists("y", FAnd(Rel("ec", "x", "y"), Pred("p", "y")))
        assert to_sexpr(phi) == "(exists y (and (ec x y) (p y)))"

    def test_derived_connectives(self):
        phi = parse_sexpr("(forall y (implies (dc x y) (q y)))")
        assert free_variables(phi) == {"x"}
        assert quantifier_depth(phi) == 1

    def test_vocabulary_depends_on_kind(self):
        assert parse_sexpr("(dr x y)", "rcc5") == Rel("dr", "x", "y")
        with pytest.raises(FormulaSyntaxError):
            parse_sexpr("(dr x y)", "rcc8")

    @pytest.mark.parametrize("text", ["(exists z (p z))", "(p x", "(not (p x) (q x))", "(and (p x) y)"])
    def test_malformed(self, text):
        with pytest.raises(FormulaSyntaxError):
            parse_sexpr(text)


class TestStandardTranslation:

    def test_diamond_shape(self):
        assert to_sexpr(modal_to_fo(parse("<ec>p"))) == "(exists y (and (ec x y) (p y)))"

    def test_variables_alternate(self):
        phi = modal_to_fo(parse("<ec><dc>p"))
        assert to_sexpr(phi) == "(exists y (and (ec x y) (exists x (and (dc y x) (p x)))))"
        assert quantifier_depth(phi) == 2

    def test_agrees_with_model_checker(self, chain_structure, rng):
        valuation = Valuation({"p": ["r1"], "q": ["r2", "r3"]})
        for _ in range(30):
            phi = random_formula(rng, ["p", "q"], depth=3)
            fo = modal_to_fo(phi)
            for region in chain_structure.regions:
                assert eval_fo(chain_structure, valuation, {"x": region}, fo) == check(
                    chain_structure, valuation, region, phi), str(phi)

    def test_free_variable_must_be_assigned(self, chain_structure):
        with pytest.raises(FreeVariableError):
            eval_fo(chain_structure, None, {}, modal_to_fo(parse("p")))

    def test_batched_valuations_agree(self, chain_structure, rng):
        regions = chain_structure.regions
        width = 64
        # valuation v puts p on the regions of bits v & 7 and q on v >> 3
        valuations = [
            Valuation({"p": [r for i, r in enumerate(regions) if v >> i & 1],
                       "q": [r for i, r in enumerate(regions) if v >> (i + 3) & 1]})
            for v in range(width)
        ]
        blocks = {
            name: [sum(1 << v for v in range(width) if regions[i] in valuations[v].extension(name))
                   for i in range(3)]
            for name in ("p", "q")
        }
        masks = {name: sum(b << (i * width) for i, b in enumerate(rows)) for name, rows in blocks.items()}
        for _ in range(20):
            phi = random_formula(rng, ["p", "q"], depth=3)
            fo = modal_to_fo(phi)
            truth = FOChecker(chain_structure, blocks=blocks, width=width).pairs(fo)
            mask = ModelChecker(chain_structure, masks, width=width).extension(expand(phi, Mode.RCC8))
            for v, valuation in enumerate(valuations):
                for i, region in enumerate(regions):
                    expected = check(chain_structure, valuation, region, phi)
                    assert bool(truth >> ((i * 3) * width + v) & 1) is expected, str(phi)
                    assert bool(mask >> (i * width + v) & 1) is expected, str(phi)


class TestBackTranslation:

    def test_round_trip_is_equivalent(self, chain_structure, rng):
        valuation = Valuation({"p": ["r2"], "q": ["r1", "r3"]})
        for _ in range(20):
            phi = random_formula(rng, ["p", "q"], depth=2)
            back = fo2_to_modal(modal_to_fo(phi))
            assert extension(chain_structure, valuation, back) == extension(chain_structure, valuation, phi)

    def test_random_fo2_formulas(self, pair_structure, chain_structure, rng):
        models = [
            (pair_structure, Valuation({"p": ["a"], "q": ["a", "b"]})),
            (chain_structure, Valuation({"p": ["r1", "r3"], "q": ["r2"]})),
        ]
        for _ in range(30):
            fo = random_fo2(rng, ["p", "q"], depth=2)
            modal = fo2_to_modal(fo)
            for structure, valuation in models:
                for region in structure.regions:
                    assert check(structure, valuation, region, modal) == eval_fo(
                        structure, valuation, {"x": region}, fo), to_sexpr(fo)

    def test_rcc5_vocabulary(self):
        structure = induced([IntervalUnion.single(0, 1), IntervalUnion.single(0, 2)], kind="rcc5")
        fo = parse_sexpr("(exists y (and (pp x y) (p y)))", "rcc5")
        modal = fo2_to_modal(fo, "rcc5")
        valuation = Valuation({"p": ["r2"]})
        assert check(structure, valuation, "r1", modal)
        assert not check(structure, valuation, "r2", modal)

    def test_only_x_may_be_free(self):
        with pytest.raises(FreeVariableError):
            fo2_to_modal(parse_sexpr("(ec x y)"))

    def test_succinctness_family(self, chain_structure):
        modal = {n: fo2_to_modal(succinctness_formula(n)) for n in (1, 2)}
        assert size(modal[2]) > size(modal[1])
        determined = Valuation({"p0": ["r1"], "p1": ["r1"]})
        split = Valuation({"p0": ["r1", "r2"], "p1": ["r2"]})
        for valuation, expected in ((determined, True), (split, False)):
            assert eval_fo(chain_structure, valuation, {}, succinctness_formula(1)) is expected
            assert valid_in(chain_structure, valuation, modal[1]) is expected

    def test_succinctness_needs_positive_n(self):
        with pytest.raises(ValueError):
            succinctness_formula(0)


class TestBoxEncoding:

    @pytest.mark.parametrize("n", [1, 2])
    def test_order_formulas_match_geometry(self, n):
        assert check_order_formulas(n, grid=4 if n == 1 else 2) == []

    def test_unsupported_dimension(self):
        with pytest.raises(ValueError):
            modal_to_fl4(parse("p"), 3)
        with pytest.raises(ValueError):
            check_order_formulas(3)

    @pytest.mark.parametrize("regions", [
        [IntervalUnion.single(0, 1), IntervalUnion.single(1, 2), IntervalUnion.single(0, 2)],
        [HyperRect([(0, 1), (0, 1)]), HyperRect([(1, 2), (0, 1)]), HyperRect([(0, 2), (0, 2)])],
    ])
    def test_agrees_with_model_checker(self, regions):
        n = 1 if isinstance(regions[0], IntervalUnion) else 2
        structure = induced(regions)
        valuation = Valuation({"p": ["r1"], "q": ["r3"]})
        model = FL4Model(regions, valuation=valuation)
        for text in MODAL_SAMPLES:
            phi = parse(text)
            open_form = modal_to_fl4(phi, n, closed=False)
            for region in structure.regions:
                assert eval_fl4(model, open_form, region) == check(structure, valuation, region, phi), text
            assert eval_fl4(model, modal_to_fl4(phi, n)) == valid_in(structure, valuation, phi), text

    def test_sexpr_output(self):
        text = fl4_to_sexpr(modal_to_fl4(parse("p"), 1, closed=False))
        assert "(p x1 x2)" in text
        assert "(exists x1 x2)" in text
        assert fl4_to_sexpr(modal_to_fl4(parse("p"), 1)).startswith("(not (exists (x1 x2)")

    def test_unions_are_not_boxes(self):
        with pytest.raises(ValueError):
            FL4Model([IntervalUnion([(0, 1), (2, 3)])])
