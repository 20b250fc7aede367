"""Main entry point for pga-kit.

Provides the `pga` command: expression evaluation, the REPL, Cayley table
verification, the formula catalog and rigid-body simulation.
"""

import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

import click

from . import __version__
from .algebra.cayley import cayley_table, verify_golden
from .cli import (
    describe,
    echo_error,
    echo_header,
    echo_success,
    echo_warning,
    format_cayley_table,
    format_mismatches,
    format_value,
    get_config,
    get_signature,
    make_evaluator,
    parse_formula_args,
    parse_triplet,
    render_cayley_table,
)
from .config import load_config
from .dynamics.kinematics import bivector_coords
from .dynamics.runner import SimulationJob, run_simulations
from .errors import PGAError
from .geometry.catalog import UnknownFormulaError, formulas_for, get_formula
from .geometry.primitives import D301
from .lang import FUNCTION_NAMES, PGASyntaxError
from .utils import column_width, matching_names, truncate_list_display

EXIT_EVALUATION = 1
EXIT_PARSE = 2
EXIT_GOLDEN = 3

# Template for config.toml created by 'pga init'
CONFIG_TEMPLATE = """\
# pga-kit configuration

[algebra]
# Default algebra: d201, d301, r300 or custom:p,m,z[,dual]
signature = "d201"  # or set PGA_SIG environment variable
# Coefficients at or below this magnitude are not printed
zero_tolerance = 1e-12

[display]
significant_digits = 10
# Formula name matching: substring, fuzzy or word_boundary
formula_match_style = "word_boundary"
max_suggestions = 5

[simulation]
dt = 1e-3
steps = 10000
renormalize = true
progress = false

[logging]
# Log level: DEBUG, INFO, WARNING, ERROR (default: WARNING)
log_level = "WARNING"
# Log file (relative to data dir, empty = no file logging)
log_file = ""
"""


def _setup_logging(cfg) -> None:
    """Configure logging based on config settings.

    Logs only to file if log_file is configured, otherwise no logging setup.
    """
    from .config import Config

    if not isinstance(cfg, Config):
        return

    if not cfg.logging.log_file:
        return

    level = getattr(logging, cfg.logging.log_level.upper(), logging.WARNING)

    cfg.data_dir.mkdir(parents=True, exist_ok=True)
    log_path = cfg.data_dir / cfg.logging.log_file
    file_handler = logging.FileHandler(log_path)
    file_handler.setFormatter(
        logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    )

    logging.basicConfig(level=level, handlers=[file_handler], force=True)


@contextmanager
def _exit_on_error(ctx: click.Context) -> Iterator[None]:
    """Map library errors to exit codes: 2 for parse errors, 1 for the rest."""
    try:
        yield
    except PGASyntaxError as e:
        echo_error(f"Parse error: {e}")
        ctx.exit(EXIT_PARSE)
    except (PGAError, ArithmeticError, ValueError) as e:
        echo_error(str(e))
        ctx.exit(EXIT_EVALUATION)


def _render(ctx: click.Context, value) -> str:
    cfg = get_config(ctx)
    return format_value(value, cfg.display.significant_digits, cfg.algebra.zero_tolerance)


@click.group()
@click.version_option(version=__version__, prog_name="pga")
@click.option("--config", "-c", type=click.Path(exists=True), help="Path to config.toml")
@click.option("--sig", "sig", type=str, help="Algebra to work in (default: PGA_SIG or config)")
@click.pass_context
def main(ctx, config, sig):
    """pga - projective geometric algebra calculator and simulator.

    Evaluate PGA expressions, check Cayley tables, run catalog formulas and
    integrate rigid bodies.
    """
    config_path = Path(config) if config else None
    cfg = load_config(config_path)

    _setup_logging(cfg)

    ctx.ensure_object(dict)
    ctx.obj["config"] = cfg
    ctx.obj["sig"] = sig


@main.command("init")
@click.option("--force", "-f", is_flag=True, help="Overwrite existing config file")
@click.pass_context
def init_config(ctx, force):
    """Initialize configuration file.

    Creates ~/.config/pga-kit/config.toml with a template configuration.

    \b
    Examples:
        pga init           # Create config file
        pga init --force   # Overwrite existing config
    """
    cfg = get_config(ctx)
    config_file = cfg.config_path

    if config_file.exists() and not force:
        click.echo(click.style(f"Config file already exists: {config_file}", fg="yellow"))
        click.echo("Use --force to overwrite")
        return

    config_file.parent.mkdir(parents=True, exist_ok=True)
    config_file.write_text(CONFIG_TEMPLATE)

    click.echo(click.style("Initialized pga-kit:", fg="green"))
    click.echo(f"  Config: {config_file}")


@main.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("expressions", nargs=-1, required=True, type=click.UNPROCESSED)
@click.option("--sig", "sig_option", type=str, help="Algebra for this command")
@click.pass_context
def eval_expressions(ctx, expressions, sig_option):
    """Evaluate expressions and print one result per argument.

    Variables assigned in one argument are visible in the next; `;`
    separates statements inside one argument.

    \b
    Examples:
        pga eval "e1 ^ e2"
        pga eval --sig d301 "p = point(1, 2, 3)" "norm(p)"
        pga eval "a = e0 + e1; a * a"
    """
    sig = get_signature(ctx, sig_option)
    evaluator = make_evaluator(ctx, sig)
    with _exit_on_error(ctx):
        for source in expressions:
            results = evaluator.evaluate_program(source)
            if results:
                click.echo(_render(ctx, results[-1]))


@main.command("repl")
@click.option("--sig", "sig_option", type=str, help="Algebra to start in")
@click.pass_context
def repl(ctx, sig_option):
    """Read expressions line by line until end of input or :quit.

    \b
    Meta-commands:
        :sig NAME   switch algebra (clears variables)
        :vars       list assigned variables
        :help       list functions
        :quit       leave
    """
    evaluator = make_evaluator(ctx, get_signature(ctx, sig_option))
    stdin = click.get_text_stream("stdin")
    interactive = stdin.isatty()

    while True:
        if interactive:
            click.echo(f"{evaluator.sig.name}> ", nl=False)
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(":"):
            if not _repl_command(ctx, evaluator, line):
                break
            continue
        try:
            results = evaluator.evaluate_program(line)
        except PGASyntaxError as e:
            echo_error(f"Parse error: {e}")
            continue
        except PGAError as e:
            echo_error(str(e))
            continue
        if results:
            click.echo(_render(ctx, results[-1]))


def _repl_command(ctx, evaluator, line: str) -> bool:
    """Run one meta-command; False means leave the REPL."""
    command, _, argument = line.partition(" ")
    argument = argument.strip()
    if command in (":quit", ":q", ":exit"):
        return False
    if command == ":sig":
        if not argument:
            click.echo(evaluator.sig.name)
            return True
        try:
            sig = get_signature(ctx, argument)
        except click.UsageError as e:
            echo_error(e.format_message())
            return True
        evaluator.set_signature(sig)
        click.echo(f"Algebra: {sig.name}")
    elif command == ":vars":
        if not evaluator.env:
            click.echo("(no variables)")
        for name, value in sorted(evaluator.env.items()):
            click.echo(f"{name} = {_render(ctx, value)}  [{describe(value)}]")
    elif command == ":help":
        click.echo("Functions: " + ", ".join(FUNCTION_NAMES))
        click.echo("Operators: + - * ^ & | ~ !  (juxtaposition multiplies)")
    else:
        echo_warning(f"Unknown command {command}")
    return True


@main.command("tables")
@click.option("--sig", "sig_option", type=str, help="Algebra to tabulate")
@click.option("--golden/--no-golden", default=True, help="Compare with the embedded golden table")
@click.option("--pretty", is_flag=True, help="Render with rich instead of a plain grid")
@click.pass_context
def tables(ctx, sig_option, golden, pretty):
    """Print the Cayley table of an algebra and check it against its golden copy.

    Exits with status 3 when the generated table differs from the golden one.

    \b
    Examples:
        pga tables --sig d201
        pga tables --sig r300 --pretty
        pga tables --sig d301 --no-golden
    """
    sig = get_signature(ctx, sig_option)
    table = cayley_table(sig)
    if pretty:
        render_cayley_table(table)
    else:
        click.echo(format_cayley_table(table))

    if not golden:
        return
    mismatches = verify_golden(sig)
    if mismatches is None:
        echo_warning(f"No golden table for {sig.name}")
        return
    if mismatches:
        echo_error(f"{len(mismatches)} cells differ from the golden table for {sig.name}")
        for line in format_mismatches(mismatches):
            click.echo(line, err=True)
        ctx.exit(EXIT_GOLDEN)
    echo_success(f"Matches golden table for {sig.name}")


@main.command("formula", context_settings={"ignore_unknown_options": True})
@click.argument("name", required=False)
@click.argument("args", nargs=-1, type=click.UNPROCESSED)
@click.option("--sig", "sig_option", type=str, help="Algebra whose catalog to use")
@click.option("--list", "list_formulas", is_flag=True, help="List formulas matching NAME")
@click.pass_context
def formula(ctx, name, args, sig_option, list_formulas):
    """Run a named catalog formula; each argument is an expression.

    \b
    Examples:
        pga formula --list
        pga formula --list dist
        pga formula oriented-dist-point-line "point(1, 2)" "line(1, 0, 0)"
        pga formula --sig d301 dist-point-plane "point(0, 0, 2)" "plane(0, 0, 1, 0)"
    """
    cfg = get_config(ctx)
    sig = get_signature(ctx, sig_option)
    catalog = formulas_for(sig.name)
    if not catalog:
        echo_error(f"No formula catalog for {sig.name} (use d201 or d301)")
        ctx.exit(EXIT_EVALUATION)

    if list_formulas or not name:
        names = sorted(catalog)
        if name:
            names = matching_names(name, names, cfg.display.formula_match_style)
        echo_header(f"Formulas for {sig.name}")
        width = column_width([catalog[n].usage() for n in names], minimum=0)
        for formula_name in names:
            spec = catalog[formula_name]
            click.echo(f"  {spec.usage():<{width}}  {spec.doc}")
        if not names:
            click.echo("  (no matching formulas)")
        return

    try:
        spec = get_formula(sig.name, name)
    except UnknownFormulaError as e:
        echo_error(str(e))
        suggestions = matching_names(name, catalog, cfg.display.formula_match_style)
        hint = truncate_list_display(
            suggestions, max_items=cfg.display.max_suggestions, empty="(no similar names)"
        )
        click.echo(f"Did you mean: {hint}", err=True)
        ctx.exit(EXIT_EVALUATION)

    evaluator = make_evaluator(ctx, sig)
    with _exit_on_error(ctx):
        values = parse_formula_args(spec, args, evaluator)
        click.echo(_render(ctx, spec(*values)))


def _parse_force(ctx, text: str | None) -> tuple[float, ...] | None:
    if not text:
        return None
    value = make_evaluator(ctx, D301).evaluate_source(text)
    if not value.is_zero(1e-12) and value.grades(1e-12) != [2]:
        raise click.BadParameter(f"{text!r} is not a bivector", param_hint="--force")
    return tuple(float(c) for c in bivector_coords(value))


@main.command("simulate")
@click.option(
    "--body",
    "bodies",
    multiple=True,
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Body file of 'mass x y z' lines (repeatable)",
)
@click.option("--dt", type=float, help="Step size (default from config)")
@click.option("--steps", type=int, help="Number of steps (default from config)")
@click.option(
    "--out",
    type=click.Path(path_type=Path),
    help="Trajectory CSV file, or a directory when several bodies are given",
)
@click.option("--omega", default="0,0,0", help="Initial angular velocity 'wx,wy,wz'")
@click.option("--velocity", default="0,0,0", help="Initial velocity of the origin 'vx,vy,vz'")
@click.option("--force", "force_expr", help="Constant body-frame force bivector, e.g. 'e12'")
@click.option("--renormalize/--no-renormalize", default=None, help="Renormalize the motor")
@click.option("--progress/--no-progress", default=None, help="Show a progress bar")
@click.pass_context
def simulate(ctx, bodies, dt, steps, out, omega, velocity, force_expr, renormalize, progress):
    """Integrate rigid bodies and print one summary line per body.

    Several bodies run in parallel processes.

    \b
    Examples:
        pga simulate --body cube.txt --dt 1e-3 --steps 10000 --omega 1,2,3
        pga simulate --body cube.txt --out cube.csv --force "0.1*e12"
        pga simulate --body a.txt --body b.txt --out runs/
    """
    sim_cfg = get_config(ctx).simulation
    angular = parse_triplet(omega, "--omega")
    linear = parse_triplet(velocity, "--velocity")

    outputs: list[Path | None] = [None] * len(bodies)
    if out is not None and len(bodies) > 1:
        out.mkdir(parents=True, exist_ok=True)
        outputs = [out / f"{body.stem}.csv" for body in bodies]
    elif out is not None:
        outputs = [out]

    show_progress = sim_cfg.progress if progress is None else progress
    with _exit_on_error(ctx):
        force = _parse_force(ctx, force_expr)
        jobs = [
            SimulationJob(
                body=body,
                dt=sim_cfg.dt if dt is None else dt,
                steps=sim_cfg.steps if steps is None else steps,
                omega=angular,
                velocity=linear,
                force=force,
                out=target,
                renormalize=sim_cfg.renormalize if renormalize is None else renormalize,
                progress=show_progress and len(bodies) == 1,
            )
            for body, target in zip(bodies, outputs)
        ]
        for summary in run_simulations(jobs):
            click.echo(summary.line())


if __name__ == "__main__":
    main()
