"""
Acceptance suite: eleven seeded property and regression checks

Each criterion returns counts and failure descriptions; the report
prints one tab-separated line per criterion and a closing "PASS k/n"
line.
"""

import itertools
import logging
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from tqdm import tqdm

from ..algebra.relations import BaseRelation8, Kind, RelationSet
from ..algebra.tables import RCC8_TABLE, table_for, table_meta_check
from ..config import Config, get_config
from ..errors import RCCToolkitError
from ..geometry.forks import ForkFrame, random_fork_region
from ..geometry.intervals import random_interval_union
from ..geometry.rects import random_rect
from ..geometry.relate import relate
from ..logic.axioms import SCHEMAS, random_instance, soundness_check
from ..logic.formula import Mode, Not, random_formula
from ..logic.search import bounded_sat
from ..logic.semantics import ModelChecker, expand, extension, valid_in
from ..reductions.corpus import disconnected_parts_formula, ec_k, loeb_formula
from ..reductions.domino import DominoSystem, tile_triangle
from ..reductions.phi import phi_d_fin
from ..reductions.s53 import (
    S53Model,
    chi_rcc5,
    model_from_s53,
    random_s53_formula,
    s53_check,
    sharp_translate,
    triple_region,
)
from ..reductions.witness import check_domino_ready, domready_witness, model_from_tiling
from ..solver.closure import Sat, brute_force_sat, satisfiable_rs
from ..solver.network import ConstraintNetwork
from ..solver.realize import grid_interval_realizable, realize
from ..structures.enumerate import enumerate_structures
from ..structures.region_structure import RegionStructure, Valuation, induced, validate
from ..translate.fl4 import FL4Model, check_order_formulas, eval_fl4, modal_to_fl4
from ..translate.fo2 import FOChecker, modal_to_fo, random_fo2, succinctness_formula
from ..translate.sigma import fo2_to_modal

LOGGER = logging.getLogger(__name__)

LEVELS = ("quick", "full")

# failure descriptions kept per criterion
MAX_FAILURES = 20


@dataclass
class CriterionResult:
    """Outcome of one acceptance criterion"""

    id: int
    name: str
    passed: bool
    counts: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0
    failures: List[str] = field(default_factory=list)

    def to_line(self) -> str:
        counts = ",".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return f"{self.id}\t{self.name}\t{'pass' if self.passed else 'fail'}\t{counts}\t{self.elapsed:.2f}s"

    def to_dict(self) -> Dict:
        return {
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "counts": dict(sorted(self.counts.items())),
            "elapsed": round(self.elapsed, 3),
            "failures": list(self.failures),
        }


@dataclass
class SuiteReport:
    """Results of one suite run"""

    seed: int
    level: str
    results: List[CriterionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def pass_count(self) -> int:
        return sum(1 for r in self.results if r.passed)

    def format_lines(self) -> List[str]:
        lines = [r.to_line() for r in self.results]
        lines.append(f"PASS {self.pass_count}/{len(self.results)}")
        return lines

    def to_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "level": self.level,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }


class _Tally:
    """Counters and capped failure list of a running criterion"""

    def __init__(self):
        self.counts: Dict[str, int] = {}
        self.failures: List[str] = []
        self.failed = 0

    def count(self, key: str, n: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + n

    def fail(self, message: str) -> None:
        self.failed += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message)

    def expect(self, condition: bool, message: str) -> None:
        if not condition:
            self.fail(message)


@dataclass
class _Context:
    seed: int
    rng: random.Random
    samples: Mapping[str, Optional[int]]
    rcc8_table: Optional[Mapping[Tuple[str, str], str]]
    config: Config


@lru_cache(maxsize=None)
def _structures(kind: Kind, k: int) -> Tuple[RegionStructure, ...]:
    return tuple(enumerate_structures(kind, k, limit=None))


def _all_valuations(structure: RegionStructure, names: Sequence[str]):
    regions = structure.regions
    for masks in itertools.product(range(1 << structure.size), repeat=len(names)):
        yield Valuation({
            name: [regions[i] for i in range(structure.size) if mask >> i & 1]
            for name, mask in zip(names, masks)
        })


def _random_valuation(rng: random.Random, structure: RegionStructure, names: Sequence[str]) -> Valuation:
    return Valuation({name: [r for r in structure.regions if rng.random() < 0.5] for name in names})


@lru_cache(maxsize=None)
def _all_valuation_blocks(size: int, names: Tuple[str, ...]) -> Tuple[int, Dict[str, List[int]]]:
    """
    Every valuation of the names over `size` regions, packed per region

    Valuation v gives name k the region set (v >> k*size) & (2**size - 1).
    Bit v of blocks[name][i] is set when that set contains region i.
    """
    width = 1 << (size * len(names))
    blocks = {name: [0] * size for name in names}
    for v in range(width):
        for k, name in enumerate(names):
            chosen = v >> (k * size)
            for i in range(size):
                if chosen >> i & 1:
                    blocks[name][i] |= 1 << v
    return width, blocks


def _random_valuation_blocks(rng: random.Random, size: int, names: Sequence[str],
                             count: int) -> Tuple[int, Dict[str, List[int]]]:
    return count, {name: [rng.getrandbits(count) for _ in range(size)] for name in names}


def _block_valuation(structure: RegionStructure, blocks: Mapping[str, Sequence[int]], v: int) -> Valuation:
    return Valuation({
        name: [structure.regions[i] for i, b in enumerate(rows) if b >> v & 1]
        for name, rows in blocks.items()
    })


# 1

def _tables(ctx: _Context, tally: _Tally) -> None:
    injected = ctx.rcc8_table
    report8 = table_meta_check(injected, Kind.RCC8)
    report5 = table_meta_check(None, Kind.RCC5)
    for report in (report8, report5):
        tally.count(f"{report.kind.value}_entries", report.stored_entries)
        for violation in report.violations:
            tally.fail(f"{report.kind.value}: {violation}")
    if injected is not None:
        for key, names in sorted(RCC8_TABLE.items()):
            got = injected.get(key)
            if got is None or set(got.split()) != set(names.split()):
                tally.fail(f"rcc8 {key[0]}∘{key[1]} = {got!r}, transcription has {names!r}")


# 2

def _geometry(ctx: _Context, tally: _Tally) -> None:
    rng, n = ctx.rng, int(ctx.samples["geometry_triples"])
    table = table_for(Kind.RCC8)
    frame = ForkFrame(4)
    makers: Dict[str, Callable] = {
        "intervals": lambda: random_interval_union(rng, pieces=4),
        "boxes": lambda: random_rect(rng, dims=2),
        "forks": lambda: random_fork_region(rng, forks=4),
    }
    for label, make in makers.items():
        for _ in range(n):
            s, t, u = make(), make(), make()
            st, tu, su = relate(s, t, frame), relate(t, u, frame), relate(s, u, frame)
            tally.count(label)
            tally.expect(relate(s, s, frame) is BaseRelation8.EQ, f"{label}: {s!r} is not eq to itself")
            tally.expect(relate(t, s, frame) is st.converse(), f"{label}: converse fails for {s!r}, {t!r}")
            tally.expect(su in table.compose(st, tu),
                         f"{label}: {su.value} not in {st.value}∘{tu.value} for {s!r}, {t!r}, {u!r}")


# 3 and 4

def _random_network(rng: random.Random, k: int) -> ConstraintNetwork:
    names = [f"v{i}" for i in range(1, k + 1)]
    proper = list(Kind.RCC8.proper)
    constraints = {}
    for a, b in itertools.combinations(names, 2):
        chosen = rng.sample(proper, rng.randint(1, 3))
        constraints[(a, b)] = RelationSet.of(*chosen, kind=Kind.RCC8)
    return ConstraintNetwork(names, constraints)


def _solver_corpus(ctx: _Context) -> List[ConstraintNetwork]:
    names = ["v1", "v2", "v3"]
    pairs = [("v1", "v2"), ("v2", "v3"), ("v1", "v3")]
    proper = [r.value for r in Kind.RCC8.proper]
    corpus = [ConstraintNetwork.atomic(names, dict(zip(pairs, choice)))
              for choice in itertools.product(proper, repeat=3)]
    # criteria 3 and 4 share the corpus
    rng = random.Random(ctx.seed * 1000 + 3)
    corpus += [_random_network(rng, 4) for _ in range(int(ctx.samples["random_networks"]))]
    return corpus


def _solver_oracle(ctx: _Context, tally: _Tally) -> None:
    for network in _solver_corpus(ctx):
        verdict = satisfiable_rs(network)
        oracle = brute_force_sat(network, _structures(Kind.RCC8, network.size))
        tally.count("networks")
        tally.count("sat" if verdict else "unsat")
        tally.expect(bool(verdict) == (oracle is not None),
                     f"solver says {bool(verdict)}, oracle says {oracle is not None} on {network!r}")


def _realization(ctx: _Context, tally: _Tally) -> None:
    for network in _solver_corpus(ctx):
        verdict = satisfiable_rs(network)
        if not isinstance(verdict, Sat):
            continue
        tally.count("realized")
        try:
            realization = realize(network, config=ctx.config)
        except RCCToolkitError as e:
            tally.fail(f"{type(e).__name__} on {network!r}: {e}")
            continue
        regions = [realization.regions[v] for v in network.variables]
        geometric = induced(regions, list(network.variables))
        for (i, j), rels in network.constraints.items():
            tally.expect(geometric.rel(i, j) in rels,
                         f"intervals give {geometric.rel(i, j).value} for constraint {rels!r} in {network!r}")


# 5

def _fo2_equivalence(ctx: _Context, tally: _Tally) -> None:
    rng = ctx.rng
    per_structure = ctx.samples.get("fo2_valuations")
    structures = [s for k in (1, 2, 3) for s in _structures(Kind.RCC8, k)]

    def agree(fo, modal, label: str, names: Sequence[str]) -> None:
        core = expand(modal, Mode.RCC8)
        for structure in structures:
            if per_structure is None:
                width, blocks = _all_valuation_blocks(structure.size, tuple(names))
            else:
                width, blocks = _random_valuation_blocks(rng, structure.size, names, int(per_structure))
            n, ones = structure.size, (1 << width) - 1
            truth = FOChecker(structure, blocks=blocks, width=width).pairs(fo)
            masks = {name: sum(b << (i * width) for i, b in enumerate(blocks[name])) for name in names}
            mask = ModelChecker(structure, masks, width=width).extension(core)
            tally.count("points", n * width)
            for i in range(n):
                diff = ((truth >> (i * n * width)) ^ (mask >> (i * width))) & ones
                if diff:
                    v = (diff & -diff).bit_length() - 1
                    valuation = _block_valuation(structure, blocks, v)
                    tally.fail(f"{label} disagrees at {structure.regions[i]} of {structure.to_dict()} "
                               f"under {valuation.to_dict()}")
                    return

    for _ in range(int(ctx.samples["fo2_formulas"])):
        phi = random_fo2(rng, ["p", "q"], depth=3)
        tally.count("fo2_formulas")
        agree(phi, fo2_to_modal(phi), "fo2_to_modal", ["p", "q"])
    for n in (1, 2, 3):
        phi = succinctness_formula(n)
        tally.count("phi_n")
        names = [f"p{i}" for i in range(n + 1)]
        agree(phi, fo2_to_modal(phi), f"phi_{n}", names)

    for _ in range(int(ctx.samples["modal_pairs"])):
        structure = rng.choice(structures)
        valuation = _random_valuation(rng, structure, ["p", "q"])
        phi = random_formula(rng, ["p", "q"], 3, Mode.RCC8)
        fo = modal_to_fo(phi)
        truth = FOChecker(structure, valuation).pairs(fo)
        holds = extension(structure, valuation, phi)
        n = structure.size
        tally.count("modal_pairs")
        for i, region in enumerate(structure.regions):
            tally.expect(bool(truth >> (i * n) & 1) == (region in holds),
                         f"modal_to_fo disagrees on {phi} at {region}")


# 6

def _axioms(ctx: _Context, tally: _Tally) -> None:
    rng = ctx.rng
    pool = [s for k in (2, 3, 4) for s in _structures(Kind.RCC8, k)]
    count = min(int(ctx.samples["axiom_structures"]), len(pool))
    structures = rng.sample(pool, count)
    for schema in SCHEMAS:
        instances = [random_instance(rng, schema, ["p", "q"], depth=2, nominal="i")
                     for _ in range(int(ctx.samples["axiom_instances"]))]
        report = soundness_check(instances, structures, rng, nominals=("i",))
        tally.count("checks", report.checked)
        for example in report.counterexamples:
            tally.fail(f"{schema}: {example['formula']}")


# 7

def _domino_ready(ctx: _Context, tally: _Tally) -> None:
    for count, dims in ((50, 1), (12, 2)):
        xs, ys = domready_witness(count, dims)
        tally.count(f"regions_{dims}d", len(xs) + len(ys))
        for failure in check_domino_ready(xs, ys):
            tally.fail(f"{dims}d: {failure}")


# 8

MICRO_SYSTEMS = {
    "single": DominoSystem(("t",), {("t", "t")}, {("t", "t")}, s0="t", f0="t"),
    "checkerboard": DominoSystem(("w", "k"), {("w", "k"), ("k", "w")}, {("w", "k"), ("k", "w")},
                                 s0="w", f0="k"),
    "start-middle-final": DominoSystem(
        ("s", "m", "f"),
        {("s", "m"), ("m", "f"), ("f", "f"), ("m", "m")},
        {("s", "m"), ("m", "m"), ("m", "f"), ("f", "f")},
        s0="s", f0="f",
    ),
}
NO_TILING = DominoSystem(("s", "f"), set(), {("s", "f")}, s0="s", f0="f")


def _finite_tilings(ctx: _Context, tally: _Tally) -> None:
    for name, system in MICRO_SYSTEMS.items():
        tiling = next((t for t in (tile_triangle(system, k) for k in (1, 2, 3)) if t is not None), None)
        if tiling is None:
            tally.fail(f"{name}: no triangle tiling with k <= 3")
            continue
        structure, valuation, root = model_from_tiling(system, tiling)
        tally.count("models")
        tally.count("regions", structure.size)
        for violation in validate(structure.matrix, structure.kind):
            tally.fail(f"{name}: {violation}")
        phi = phi_d_fin(system)
        tally.expect(root in extension(structure, valuation, phi), f"{name}: formula fails at {root}")

    for k in range(5):
        tally.expect(tile_triangle(NO_TILING, k) is None, f"no-tiling system tiles the {k}-triangle")
    witness = bounded_sat(phi_d_fin(NO_TILING), 5, Kind.RCC8, engine="sat", config=ctx.config)
    tally.count("refuted", int(witness is None))
    tally.expect(witness is None, "no-tiling system has a model with at most 5 regions")


# 9

def _s53(ctx: _Context, tally: _Tally) -> None:
    rng = ctx.rng
    names = ["p", "q"]
    chi = chi_rcc5()
    for _ in range(int(ctx.samples["s53_formulas"])):
        psi = random_s53_formula(rng, names, depth=3)
        sharp = sharp_translate(psi)
        tally.count("formulas")
        for _ in range(int(ctx.samples["s53_models"])):
            model = S53Model.random(rng, (2, 2, 2), names)
            structure, valuation = model_from_s53(model)
            tally.expect(valid_in(structure, valuation, chi), "χ fails in the powerset model")
            holds = extension(structure, valuation, sharp)
            for world in model.worlds():
                tally.count("points")
                tally.expect(s53_check(model, world, psi) == (triple_region(world) in holds),
                             f"{psi} disagrees at {world} in {model.to_dict()}")


# 10

def _distinct_rects(rng: random.Random, count: int, grid: int) -> list:
    rects = []
    while len(rects) < count:
        rect = random_rect(rng, dims=2, grid=grid)
        if rect not in rects:
            rects.append(rect)
    return rects


def _fl4(ctx: _Context, tally: _Tally) -> None:
    rng = ctx.rng
    for n in (1, 2):
        mismatches = check_order_formulas(n, grid=4)
        tally.count(f"order_{n}d")
        for mismatch in mismatches:
            tally.fail(f"n={n}: {mismatch}")
    for _ in range(int(ctx.samples["fl4_pairs"])):
        rects = _distinct_rects(rng, rng.randint(1, 3), 4)
        ids = [f"r{i + 1}" for i in range(len(rects))]
        structure = induced(rects, ids)
        valuation = Valuation({name: [r for r in ids if rng.random() < 0.5] for name in ("p", "q")})
        phi = random_formula(rng, ["p", "q"], 2, Mode.RCC8)
        translated = modal_to_fl4(phi, 2, closed=False)
        model = FL4Model(rects, ids, valuation)
        holds = extension(structure, valuation, phi)
        tally.count("pairs")
        for region in ids:
            tally.expect(eval_fl4(model, translated, region) == (region in holds),
                         f"{phi} disagrees at {region} of {[r.to_list() for r in rects]}")


# 11

def _regression(ctx: _Context, tally: _Tally) -> None:
    loeb = loeb_formula()
    for k in (1, 2, 3):
        for structure in _structures(Kind.RCC8, k):
            for valuation in _all_valuations(structure, ["p"]):
                tally.count("loeb_models")
                tally.expect(valid_in(structure, valuation, loeb),
                             f"Löb formula fails in {structure.to_dict()} under {valuation.to_dict()}")
    witness = bounded_sat(Not(disconnected_parts_formula()), 3, Kind.RCC8, config=ctx.config)
    tally.count("countermodels", int(witness is not None))
    tally.expect(witness is not None, "no countermodel for the disconnected-parts formula")
    network = ec_k(3)
    tally.expect(bool(satisfiable_rs(network)), "ec[3] is not satisfiable over region structures")
    tally.expect(grid_interval_realizable(network, 6) is None, "ec[3] realized by single intervals on 0..6")
    tally.count("grid_refutations")


CRITERIA: List[Tuple[int, str, Callable[[_Context, _Tally], None]]] = [
    (1, "composition_tables", _tables),
    (2, "geometry_oracle", _geometry),
    (3, "solver_oracle", _solver_oracle),
    (4, "realization", _realization),
    (5, "fo2_equivalence", _fo2_equivalence),
    (6, "axiom_soundness", _axioms),
    (7, "domino_ready", _domino_ready),
    (8, "finite_tilings", _finite_tilings),
    (9, "s53_reduction", _s53),
    (10, "fl4_translation", _fl4),
    (11, "separation_corpus", _regression),
]


def run_suite(seed: Optional[int] = None, level: Optional[str] = None, progress: bool = False,
              rcc8_table: Optional[Mapping[Tuple[str, str], str]] = None,
              criteria: Optional[Sequence[int]] = None, config: Optional[Config] = None) -> SuiteReport:
    """
    Run the acceptance criteria

    Every criterion draws from its own generator seeded with (seed, id),
    so results do not depend on which other criteria run.

    Args:
        seed: Base seed; 'suite.seed' by default
        level: quick or full; 'suite.level' by default
        progress: Show a tqdm bar over the criteria
        rcc8_table: RCC8 composition table to audit instead of the embedded one
        criteria: Ids to run; all by default
        config: Configuration object

    Returns:
        SuiteReport with one result per criterion run
    """
    config = config or get_config()
    seed = int(config.get("suite.seed", 0) if seed is None else seed)
    level = level or config.get("suite.level", "quick")
    if level not in LEVELS:
        raise ValueError(f"unknown suite level {level!r}; expected quick or full")
    samples = config.get(f"suite.{level}", {}) or {}
    selected = [c for c in CRITERIA if criteria is None or c[0] in criteria]

    report = SuiteReport(seed=seed, level=level)
    for cid, name, run in tqdm(selected, desc="Criteria", disable=not progress):
        ctx = _Context(seed, random.Random(seed * 1000 + cid), samples, rcc8_table, config)
        tally = _Tally()
        start = time.perf_counter()
        try:
            run(ctx, tally)
        except (RCCToolkitError, ValueError) as e:
            tally.fail(f"{type(e).__name__}: {e}")
        elapsed = time.perf_counter() - start
        if tally.failed:
            tally.count("failures", tally.failed)
        result = CriterionResult(cid, name, tally.failed == 0, tally.counts, elapsed, tally.failures)
        if tally.failed:
            LOGGER.warning("criterion %d (%s) failed: %s", cid, name, tally.failures[0])
        else:
            LOGGER.info("criterion %d (%s) passed in %.2fs", cid, name, elapsed)
        report.results.append(result)
    return report
