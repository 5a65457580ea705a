"""
Main CLI application for RCC Toolkit
"""

import functools
import os
import sys

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import click

VERSION = "1.0.0"

EXIT_POSITIVE, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def _config(ctx: click.Context):
    return ctx.obj["config"]


def handle_errors(command):
    """Map toolkit and input errors to exit code 2 with a message on stderr"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        from rcc_toolkit.errors import RCCToolkitError
        try:
            return command(*args, **kwargs)
        except (RCCToolkitError, ValueError, KeyError, OSError) as e:
            message = e.args[0] if isinstance(e, KeyError) and e.args else e
            click.echo(f"Error: {message}", err=True)
            sys.exit(EXIT_ERROR)

    return wrapper


def load_payload(ctx: click.Context, source: str, kind: str):
    """
    JSON payload from a file path, or from the fixture of that name

    Raises:
        ValueError: Neither a file nor a fixture of the expected kind
    """
    from rcc_toolkit.utils import load_json

    if os.path.exists(source):
        return load_json(source)
    from rcc_toolkit.fixtures import FixtureManager
    fixture = FixtureManager(config=_config(ctx)).get_fixture(source)
    if fixture is None:
        raise ValueError(f"no such file or fixture: {source}")
    if fixture.kind != kind:
        raise ValueError(f"fixture {source} holds a {fixture.kind}, expected a {kind}")
    return fixture.data


def emit(ctx: click.Context, payload, output) -> None:
    """Write JSON (or text) to the output file, or echo it"""
    from rcc_toolkit.utils import dumps_json

    text = payload if isinstance(payload, str) else dumps_json(payload, config=_config(ctx))
    if not text.endswith("\n"):
        text += "\n"
    if output:
        parent = os.path.dirname(output)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
        click.echo(f"✓ Written: {output}", err=True)
    else:
        click.echo(text, nl=False)


def formula_text(formula, formula_file) -> str:
    if bool(formula) == bool(formula_file):
        raise click.UsageError("give exactly one of --formula and --formula-file")
    if formula_file:
        from rcc_toolkit.utils import read_text
        return read_text(formula_file)
    return formula


@click.group()
@click.version_option(version=VERSION)
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), help='YAML configuration file')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging')
@click.pass_context
def cli(ctx, config_path, verbose):
    """RCC Toolkit - Qualitative spatial reasoning with RCC8 and RCC5"""
    from rcc_toolkit.config import Config, get_config

    config = get_config()
    if config_path:
        config = Config(config_path)
        config.load_environment()
    config.configure_logging(verbose)
    ctx.obj = {"config": config}


@cli.command()
@click.argument('network')
@click.option('--refine', is_flag=True, help='Emit the atomic refinement')
@click.option('--output', '-o', help='Output path for the refinement')
@click.pass_context
@handle_errors
def solve(ctx, network, refine, output):
    """Decide satisfiability of a constraint network over region structures"""

    from rcc_toolkit.solver import ConstraintNetwork, satisfiable_rs

    verdict = satisfiable_rs(ConstraintNetwork.from_dict(load_payload(ctx, network, "network")))
    click.echo("SAT" if verdict else "UNSAT")
    if verdict and refine:
        emit(ctx, verdict.to_dict(), output)
    sys.exit(EXIT_POSITIVE if verdict else EXIT_NEGATIVE)


@cli.command()
@click.argument('network')
@click.option('--cap', type=int, help='Largest fork count tried')
@click.option('--output', '-o', help='Output path')
@click.pass_context
@handle_errors
def realize(ctx, network, cap, output):
    """Realize a satisfiable RCC8 network by unions of intervals"""

    from rcc_toolkit.solver import ConstraintNetwork, realize as realize_network

    result = realize_network(ConstraintNetwork.from_dict(load_payload(ctx, network, "network")),
                             cap=cap, config=_config(ctx))
    if not result:
        click.echo("UNSAT")
        sys.exit(EXIT_NEGATIVE)
    emit(ctx, result.to_dict(), output)


@cli.command()
@click.argument('model')
@click.option('--formula', '-f', help='Formula text')
@click.option('--formula-file', type=click.Path(exists=True, dir_okay=False), help='File holding the formula')
@click.option('--at', 'region', help='Region to evaluate at')
@click.option('--valid', is_flag=True, help='Check truth at every region')
@click.option('--mode', type=click.Choice(['rcc8', 'rcc5']), help='Formula alphabet (the model kind by default)')
@click.pass_context
@handle_errors
def check(ctx, model, formula, formula_file, region, valid, mode):
    """Model-check a formula in a finite model"""

    if bool(region) == valid:
        raise click.UsageError("give exactly one of --at and --valid")

    from rcc_toolkit.errors import KindMismatchError
    from rcc_toolkit.logic import check as check_at, parse, valid_in
    from rcc_toolkit.structures import model_from_dict

    structure, valuation = model_from_dict(load_payload(ctx, model, "model"))
    if mode and mode != structure.kind.value:
        raise KindMismatchError(f"{mode} formula on an {structure.kind.value} model")
    phi = parse(formula_text(formula, formula_file), structure.kind.value)
    holds = valid_in(structure, valuation, phi) if valid else check_at(structure, valuation, region, phi)
    click.echo("true" if holds else "false")
    sys.exit(EXIT_POSITIVE if holds else EXIT_NEGATIVE)


@cli.command()
@click.argument('text', required=False)
@click.option('--fo2-to-modal', 'direction', flag_value='fo2-to-modal', help='FO² s-expression to modal formula')
@click.option('--modal-to-fo', 'direction', flag_value='modal-to-fo', help='Modal formula to FO² s-expression')
@click.option('--modal-to-fl4', 'fl4_dims', type=int, help='Modal formula to first-order order logic over n-boxes')
@click.option('--phi-n', type=int, help='Use the succinctness formula of size n as FO² input')
@click.option('--kind', type=click.Choice(['rcc8', 'rcc5']), default='rcc8', help='Relation vocabulary')
@click.option('--input', '-i', 'input_path', type=click.Path(exists=True, dir_okay=False), help='Read input from file')
@click.pass_context
@handle_errors
def translate(ctx, text, direction, fl4_dims, phi_n, kind, input_path):
    """Translate between modal, two-variable and order languages"""

    from rcc_toolkit.logic import format_formula, parse
    from rcc_toolkit.translate import (
        fl4_to_sexpr,
        fo2_to_modal,
        modal_to_fl4,
        modal_to_fo,
        parse_sexpr,
        succinctness_formula,
        to_sexpr,
    )
    from rcc_toolkit.utils import read_text

    if fl4_dims is not None:
        direction = direction or 'modal-to-fl4'
        if direction != 'modal-to-fl4':
            raise click.UsageError("choose one translation direction")
    if direction is None:
        raise click.UsageError("choose --fo2-to-modal, --modal-to-fo or --modal-to-fl4 N")
    if input_path:
        text = read_text(input_path)

    if direction == 'fo2-to-modal':
        if phi_n is not None:
            phi = succinctness_formula(phi_n)
        elif text:
            phi = parse_sexpr(text, kind)
        else:
            raise click.UsageError("give an FO² formula or --phi-n N")
        click.echo(format_formula(fo2_to_modal(phi, kind)))
        return

    if not text:
        raise click.UsageError("give a modal formula")
    if direction == 'modal-to-fo':
        click.echo(to_sexpr(modal_to_fo(parse(text, kind), kind)))
        return
    if kind != 'rcc8':
        raise click.UsageError("the order translation is defined for rcc8 formulas")
    click.echo(fl4_to_sexpr(modal_to_fl4(parse(text, kind), fl4_dims)))


@cli.command()
@click.option('--phi-d', 'phi_d', help='Quadrant reduction formula for a domino system')
@click.option('--phi-d-fin', 'phi_d_fin', help='Triangle reduction formula for a domino system')
@click.option('--phi-d-recurring', 'phi_d_recurring', help='Recurring-tile reduction formula for a domino system')
@click.option('--unguarded', is_flag=True, help='Emit the finite formula without successor guards')
@click.option('--tiling-model', help='Finite model built from the smallest triangle tiling of a domino system')
@click.option('--s53', help='RCC5 reduction of an S5³ formula')
@click.option('--domready', type=int, help='Domino-ready witness with N positions')
@click.option('--dims', type=int, default=1, help='Dimension of the witness boxes')
@click.option('--ec-k', 'ec_k', type=int, help='Network of K pairwise externally connected regions')
@click.option('--loeb', is_flag=True, help='Löb formula for proper parts')
@click.option('--tm-to-domino', 'tm', help='Domino system of a Turing machine')
@click.option('--output', '-o', help='Output path')
@click.pass_context
@handle_errors
def generate(ctx, phi_d, phi_d_fin, phi_d_recurring, unguarded, tiling_model, s53, domready, dims,
             ec_k, loeb, tm, output):
    """Generate reduction formulas, networks, witnesses and models"""

    chosen = [name for name, value in (
        ('--phi-d', phi_d), ('--phi-d-fin', phi_d_fin), ('--phi-d-recurring', phi_d_recurring),
        ('--tiling-model', tiling_model), ('--s53', s53), ('--domready', domready),
        ('--ec-k', ec_k), ('--loeb', loeb or None), ('--tm-to-domino', tm),
    ) if value is not None]
    if len(chosen) != 1:
        raise click.UsageError("choose exactly one artefact to generate")

    from rcc_toolkit.logic import format_formula, parse
    from rcc_toolkit import reductions

    def system(source):
        return reductions.DominoSystem.from_dict(load_payload(ctx, source, "domino"))

    if phi_d:
        emit(ctx, format_formula(reductions.phi_d(system(phi_d))), output)
    elif phi_d_fin:
        emit(ctx, format_formula(reductions.phi_d_fin(system(phi_d_fin), guarded=not unguarded)), output)
    elif phi_d_recurring:
        emit(ctx, format_formula(reductions.phi_d_recurring(system(phi_d_recurring))), output)
    elif tiling_model:
        from rcc_toolkit.structures import model_to_dict
        domino = system(tiling_model)
        tiling = reductions.find_triangle(domino, config=_config(ctx))
        if tiling is None:
            click.echo("no triangle tiling found", err=True)
            sys.exit(EXIT_NEGATIVE)
        structure, valuation, _ = reductions.model_from_tiling(domino, tiling)
        emit(ctx, model_to_dict(structure, valuation), output)
    elif s53:
        emit(ctx, format_formula(reductions.s53_reduction(parse(s53, 's53'))), output)
    elif domready is not None:
        xs, ys = reductions.domready_witness(domready, dims)
        emit(ctx, {"xs": [r.to_list() for r in xs], "ys": [r.to_list() for r in ys]}, output)
    elif ec_k is not None:
        emit(ctx, reductions.ec_k(ec_k).to_dict(), output)
    elif loeb:
        emit(ctx, format_formula(reductions.loeb_formula()), output)
    else:
        machine = reductions.TuringMachine.from_dict(load_payload(ctx, tm, "machine"))
        emit(ctx, reductions.tm_to_domino(machine).to_dict(), output)


@cli.command()
@click.option('--structure', help='Structure file or fixture to validate')
@click.option('--tables', is_flag=True, help='Audit the embedded composition tables')
@click.option('--table', help='Table fixture or file to audit')
@click.pass_context
@handle_errors
def validate(ctx, structure, tables, table):
    """Validate a structure against the axioms, or audit composition tables"""

    if sum(bool(x) for x in (structure, tables, table)) != 1:
        raise click.UsageError("give exactly one of --structure, --tables and --table")

    from rcc_toolkit.algebra import Kind, table_meta_check
    from rcc_toolkit.structures import RegionStructure, validate as validate_matrix

    if structure:
        parsed = RegionStructure.from_dict(load_payload(ctx, structure, "structure"), check=False)
        violations = validate_matrix(parsed.matrix, parsed.kind)
        for violation in violations:
            click.echo(str(violation))
        click.echo("OK" if not violations else f"{len(violations)} violation(s)")
        sys.exit(EXIT_POSITIVE if not violations else EXIT_NEGATIVE)

    from rcc_toolkit.fixtures import table_from_dict

    if table:
        payload = load_payload(ctx, table, "table")
        reports = [table_meta_check(table_from_dict(payload), Kind.parse(payload.get("kind", "rcc8")))]
    else:
        reports = [table_meta_check(None, Kind.RCC8), table_meta_check(None, Kind.RCC5)]
    for report in reports:
        for violation in report.violations:
            click.echo(f"{report.kind.value}\t{violation}")
        click.echo(f"{report.kind.value}\t{report.stored_entries} entries\t{len(report.violations)} violation(s)")
    sys.exit(EXIT_POSITIVE if all(r.ok for r in reports) else EXIT_NEGATIVE)


@cli.command()
@click.option('--seed', '-s', type=int, help='Random seed for reproducibility')
@click.option('--level', type=click.Choice(['quick', 'full']), help='Sample sizes')
@click.option('--criterion', '-c', type=int, multiple=True, help='Run only these criteria')
@click.option('--progress', is_flag=True, help='Show progress bar')
@click.option('--json', 'json_path', help='Also write the full report as JSON')
@click.pass_context
@handle_errors
def suite(ctx, seed, level, criterion, progress, json_path):
    """Run the acceptance criteria"""

    from rcc_toolkit.suite import run_suite
    from rcc_toolkit.utils import save_json

    report = run_suite(seed=seed, level=level, progress=progress,
                       criteria=list(criterion) or None, config=_config(ctx))
    for line in report.format_lines():
        click.echo(line)
    if json_path:
        save_json(report.to_dict(), json_path, config=_config(ctx))
    sys.exit(EXIT_POSITIVE if report.passed else EXIT_NEGATIVE)


@cli.command()
@click.option('--show', '-s', help='Show specific fixture details')
@click.option('--export', '-e', help='Write the payload of a fixture')
@click.option('--output', '-o', help='Output path for --export')
@click.option('--delete', '-d', help='Delete fixture by name')
@click.option('--search', help='Search fixtures')
@click.option('--kind', help='Filter by kind')
@click.option('--tag', help='Filter by tag')
@click.pass_context
@handle_errors
def fixtures(ctx, show, export, output, delete, search, kind, tag):
    """Manage named fixtures"""

    from rcc_toolkit.fixtures import FixtureManager
    fixture_manager = FixtureManager(config=_config(ctx))

    if show or export:
        fixture = fixture_manager.get_fixture(show or export)
        if fixture is None:
            click.echo(f"Fixture '{show or export}' not found", err=True)
            sys.exit(EXIT_NEGATIVE)
        if export:
            emit(ctx, fixture.data, output)
            return
        click.echo(f"\nFixture: {fixture.name}")
        click.echo("=" * 60)
        click.echo(f"Description: {fixture.description}")
        click.echo(f"Kind: {fixture.kind}")
        click.echo(f"Tags: {', '.join(fixture.tags)}")
        click.echo("\nData:")
        emit(ctx, fixture.data, None)
        return

    if delete:
        if fixture_manager.delete_fixture(delete):
            click.echo(f"✓ Fixture '{delete}' deleted")
        else:
            click.echo(f"Fixture '{delete}' not found")
        return

    if search:
        results = fixture_manager.search_fixtures(search)
        click.echo(f"\nSearch results for '{search}':")
        for f in results:
            click.echo(f"  • {f.name}: {f.description}")
        return

    fixture_list = fixture_manager.list_fixtures(kind=kind, tag=tag)

    click.echo("\nAvailable Fixtures:")
    click.echo("=" * 60)

    for f in fixture_list:
        click.echo(f"\n{f.name}")
        click.echo(f"  {f.description}")
        click.echo(f"  Kind: {f.kind} | Tags: {', '.join(f.tags)}")


@cli.command()
@click.pass_context
def info(ctx):
    """Show system information"""

    config = _config(ctx)

    click.echo("\nRCC Toolkit - System Information")
    click.echo("=" * 60)
    click.echo(f"Version: {VERSION}")
    click.echo(f"Python: {sys.version.split()[0]}")

    try:
        import pycosat
        click.echo(f"pycosat: {pycosat.__version__}")
    except ImportError:
        click.echo("pycosat: Not installed (required for the SAT engine)")

    click.echo("\nConfiguration:")
    click.echo(f"  Fork cap: {config.get('solver.fork_cap') or 'v(v-1)/2 + v'}")
    click.echo(f"  Max regions: {config.get('logic.max_regions')}")
    click.echo(f"  Bounded SAT engine: {config.get('logic.bounded_sat_engine')}")
    click.echo(f"  Max triangle: {config.get('reductions.max_triangle')}")
    click.echo(f"  Suite: seed {config.get('suite.seed')}, level {config.get('suite.level')}")
    click.echo(f"  Fixtures Directory: {config.get('fixtures.directory')}")


if __name__ == '__main__':
    cli()
