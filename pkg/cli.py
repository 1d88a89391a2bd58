#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command line front end

Every word command accepts either one WORD argument or --input FILE with
one word per line ('-' reads standard input). Lines are processed
independently: a bad line is reported on standard error with its line
number and the remaining lines still run.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 downset budget
exceeded.
"""

import sys
import time
import logging
from functools import wraps
from typing import Any, Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import click

from arch import arch_factorize
from bench import run_suite
from errors import PreconditionError, ResourceBudgetError, WordValidationError
from health_checker import check_health, is_healthy
from measures import MeasureReport, measure
from oracle import delta_bf, h_bf, rho_bf
from periodic import arch_period, pow_measure
from side_distance import l_table, l_vector, r_table, r_vector
from utils import (
    EMPTY_WORD, factorization_record, format_factorization, format_measure,
    format_period, format_power, format_side_table, format_vectors, measure_record,
    period_record, power_record, render_arch_svg, render_json, table_record,
    vector_record, word_text,
)
from words import INFINITE, Alphabet, Word, make_word, read_int_setting

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_BUDGET = 3

# Largest n for which pow --verify materializes u^n
VERIFY_LIMIT = read_int_setting("PIECEWISE_VERIFY_LIMIT", 64)

EXPONENT = click.IntRange(0, 2 ** 63 - 1)

_META = "piecewise."


class Rendered(NamedTuple):
    """Text lines and the JSON record for one processed input"""

    lines: List[str]
    record: Dict[str, Any]


def printe(*args, **kwargs):
    print(*args, file=sys.stderr, flush=True, **kwargs)


def exit_code_for(error: Exception) -> int:
    if isinstance(error, ResourceBudgetError):
        return EXIT_BUDGET
    return EXIT_VALIDATION


def handle_cli_errors(func: Callable) -> Callable:
    """
    Decorator translating library errors into exit codes.

    Validation and precondition errors exit with 2, budget errors with 3.
    Anything else (invariant violations included) propagates.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (WordValidationError, PreconditionError, ResourceBudgetError) as e:
            logger.debug(f"{type(e).__name__} in {func.__name__}: {e}")
            printe(f"error: {e}")
            click.get_current_context().exit(exit_code_for(e))
    return wrapper


def _remember(ctx: click.Context, param: click.Parameter, value):
    # meta is shared by the group context and the subcommand context
    if value is not None and value is not False:
        ctx.meta[_META + param.name] = value
        if param.name == "verbose":
            logging.getLogger().setLevel(logging.DEBUG)
    return value


def _setting(ctx: click.Context, name: str, default=None):
    return ctx.meta.get(_META + name, default)


_COMMON_OPTIONS = (
    click.option("--alphabet", metavar="LETTERS", expose_value=False, callback=_remember,
                 help="Alphabet in letter order (default: first-occurrence order of the word)"),
    click.option("--json", "json_output", is_flag=True, expose_value=False, callback=_remember,
                 help="One compact JSON object per input"),
    click.option("--input", "input_file", type=click.File("r", encoding="utf-8"),
                 expose_value=False, callback=_remember,
                 help="Read one word per line from FILE ('-' for standard input)"),
    click.option("--oracle", is_flag=True, expose_value=False, callback=_remember,
                 help="Compute through the brute-force oracles"),
    click.option("--timing", is_flag=True, expose_value=False, callback=_remember,
                 help="Add elapsed_us to every output"),
    click.option("-v", "--verbose", is_flag=True, expose_value=False, callback=_remember,
                 help="Debug logging"),
)


def common_options(func: Callable) -> Callable:
    for option in reversed(_COMMON_OPTIONS):
        func = option(func)
    return func


def _alphabet(ctx: click.Context) -> Optional[Alphabet]:
    text = _setting(ctx, "alphabet")
    return Alphabet(tuple(text)) if text else None


def parse_word(text: str, alphabet: Optional[Alphabet]) -> Word:
    """Word from command line text; ε stands for the empty word"""
    if text == EMPTY_WORD:
        text = ""
    for position, symbol in enumerate(text, start=1):
        if not (symbol.isascii() and symbol.isprintable() and not symbol.isspace()):
            raise WordValidationError(
                f"symbol {symbol!r} at position {position} is not an ASCII graphic character",
                symbol=symbol, position=position,
            )
    return make_word(text, alphabet)


def _sources(ctx: click.Context, given: Sequence[str], arity: int) -> Iterator[Tuple[Optional[int], List[str]]]:
    """(line number or None, fields) for every input to process"""
    stream = _setting(ctx, "input_file")
    if stream is not None:
        if given:
            raise click.UsageError("give either the word arguments or --input, not both")
        for number, line in enumerate(stream, start=1):
            fields = line.split()
            if fields:
                yield number, fields
        return
    if len(given) != arity:
        raise click.UsageError(f"expected {arity} word argument(s), got {len(given)}")
    yield None, list(given)


def _located(error: Exception, line: Optional[int]) -> str:
    if line is None:
        return str(error)
    if isinstance(error, WordValidationError):
        return str(error.at_line(line))
    return f"line {line}: {error}"


def _emit(ctx: click.Context, rendered: Rendered, elapsed_us: int) -> None:
    timing = _setting(ctx, "timing", False)
    if _setting(ctx, "json_output", False):
        record = dict(rendered.record)
        if timing:
            record["elapsed_us"] = elapsed_us
        click.echo(render_json(record))
        return
    lines = list(rendered.lines)
    if timing:
        lines[0] += f" elapsed_us={elapsed_us}"
    for line in lines:
        click.echo(line)


def run_batch(ctx: click.Context, given: Sequence[str], arity: int,
              compute: Callable[..., Rendered]) -> None:
    """Process every input; exit with the worst status seen"""
    status = EXIT_OK
    for line, fields in _sources(ctx, given, arity):
        try:
            if len(fields) != arity:
                raise WordValidationError(f"expected {arity} word(s), got {len(fields)}")
            start = time.perf_counter_ns()
            rendered = compute(*fields)
            elapsed_us = (time.perf_counter_ns() - start) // 1000
        except (WordValidationError, PreconditionError, ResourceBudgetError) as e:
            printe(f"error: {_located(e, line)}")
            status = max(status, exit_code_for(e))
            continue
        _emit(ctx, rendered, elapsed_us)
    ctx.exit(status)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@common_options
def cli():
    """Piecewise complexity h and minimality index ρ of words."""


@cli.command("measure")
@click.argument("word", required=False)
@common_options
@click.pass_context
@handle_cli_errors
def measure_command(ctx, word):
    """h(WORD) and ρ(WORD) with the positions attaining them."""
    alphabet = _alphabet(ctx)
    oracle = _setting(ctx, "oracle", False)

    def compute(text: str) -> Rendered:
        u = parse_word(text, alphabet)
        report = MeasureReport(u, h_bf(u), rho_bf(u)) if oracle else measure(u)
        return Rendered([format_measure(report)], measure_record(report))

    run_batch(ctx, [word] if word is not None else [], 1, compute)


@cli.command("rtable")
@click.argument("word", required=False)
@common_options
@click.pass_context
@handle_cli_errors
def rtable_command(ctx, word):
    """r-table and ℓ-table of WORD, one column per letter."""
    alphabet = _alphabet(ctx)

    def compute(text: str) -> Rendered:
        u = parse_word(text, alphabet)
        rtable, ltable = r_table(u), l_table(u)
        lines = [f"word={word_text(u)} alphabet={u.alphabet.text}"]
        lines += format_side_table(rtable, "r") + format_side_table(ltable, "l")
        return Rendered(lines, table_record(rtable, ltable))

    run_batch(ctx, [word] if word is not None else [], 1, compute)


@cli.command("rvector")
@click.argument("word", required=False)
@common_options
@click.pass_context
@handle_cli_errors
def rvector_command(ctx, word):
    """r-vector and ℓ-vector of WORD."""
    alphabet = _alphabet(ctx)

    def compute(text: str) -> Rendered:
        u = parse_word(text, alphabet)
        rvector, lvector = r_vector(u), l_vector(u)
        lines = [f"word={word_text(u)} alphabet={u.alphabet.text}"] + format_vectors(rvector, lvector)
        return Rendered(lines, vector_record(rvector, lvector))

    run_batch(ctx, [word] if word is not None else [], 1, compute)


@cli.command("arch")
@click.argument("word", required=False)
@click.option("--svg", type=click.File("w", encoding="utf-8"),
              help="Write the α/β arcs of WORD as a static SVG to FILE")
@common_options
@click.pass_context
@handle_cli_errors
def arch_command(ctx, word, svg):
    """Arch factorization of WORD."""
    alphabet = _alphabet(ctx)
    if svg is not None and _setting(ctx, "input_file") is not None:
        raise click.UsageError("--svg renders a single word and cannot be combined with --input")

    def compute(text: str) -> Rendered:
        u = parse_word(text, alphabet)
        factorization = arch_factorize(u)
        if svg is not None:
            svg.write(render_arch_svg(factorization))
            svg.write("\n")
        return Rendered(format_factorization(factorization), factorization_record(factorization))

    run_batch(ctx, [word] if word is not None else [], 1, compute)


@cli.command("period")
@click.argument("word", required=False)
@common_options
@click.pass_context
@handle_cli_errors
def period_command(ctx, word):
    """Transient, arch-period and span of WORD^ω."""
    alphabet = _alphabet(ctx)

    def compute(text: str) -> Rendered:
        u = parse_word(text, alphabet)
        data = arch_period(u)
        return Rendered([format_period(u, data)], period_record(u, data))

    run_batch(ctx, [word] if word is not None else [], 1, compute)


@cli.command("pow")
@click.argument("params", nargs=-1, metavar="[WORD] N")
@click.option("--verify", is_flag=True,
              help="Also compute on the materialized power when N <= PIECEWISE_VERIFY_LIMIT")
@common_options
@click.pass_context
@handle_cli_errors
def pow_command(ctx, params, verify):
    """h and ρ of WORD^N, N up to 2^63-1. With --input, only N is given."""
    alphabet = _alphabet(ctx)
    if not params:
        raise click.UsageError("missing exponent N")
    n = EXPONENT.convert(params[-1], None, ctx)
    if verify and n > VERIFY_LIMIT:
        logger.warning(f"--verify skipped: n={n} exceeds PIECEWISE_VERIFY_LIMIT={VERIFY_LIMIT}")

    def compute(text: str) -> Rendered:
        u = parse_word(text, alphabet)
        report = pow_measure(u, n)
        direct = None
        if verify and n <= VERIFY_LIMIT:
            direct = measure(u ** n)
            if (direct.h, direct.rho) != (report.h, report.rho):
                logger.warning(
                    f"pow mismatch for {u.text}^{n}: fast h={report.h} rho={report.rho}, "
                    f"direct h={direct.h} rho={direct.rho}"
                )
        return Rendered([format_power(report, direct)], power_record(report, direct))

    run_batch(ctx, list(params[:-1]), 1, compute)


@cli.command("delta")
@click.argument("words", nargs=-1, metavar="[U V]")
@click.option("--kmax", type=click.IntRange(min=0), default=None,
              help="Largest distance searched (default: max(|U|,|V|), always exact)")
@common_options
@click.pass_context
@handle_cli_errors
def delta_command(ctx, words, kmax):
    """Subword distance δ(U,V) by downset comparison. With --input, two words per line."""
    alphabet = _alphabet(ctx)

    def compute(u_text: str, v_text: str) -> Rendered:
        shared = alphabet
        if shared is None:
            letters = "" if u_text == EMPTY_WORD else u_text
            letters += "" if v_text == EMPTY_WORD else v_text
            if not letters:
                raise WordValidationError("two empty words need an explicit --alphabet")
            shared = Alphabet.of(letters)
        u, v = parse_word(u_text, shared), parse_word(v_text, shared)
        bound = kmax if kmax is not None else max(len(u), len(v))
        distance = delta_bf(u, v, bound)
        exact_number = distance.is_exact and distance.value is not INFINITE
        record = {
            "u": u.text,
            "v": v.text,
            "alphabet": shared.text,
            "delta": distance.value if exact_number else str(distance),
            "kmax": bound,
        }
        line = f"u={word_text(u)} v={word_text(v)} delta={distance}"
        return Rendered([line], record)

    run_batch(ctx, list(words), 2, compute)


@cli.command("bench")
@click.option("--size", type=click.IntRange(min=4), default=1_000_000, show_default=True,
              help="Largest word length; h and ρ also run at size/2 and size/4")
@click.option("--letters", type=click.IntRange(1, 62), default=26, show_default=True)
@click.option("--pow-size", type=click.IntRange(min=1), default=10_000, show_default=True)
@click.option("--pow-letters", type=click.IntRange(1, 62), default=10, show_default=True)
@click.option("--exponent", type=EXPONENT, default=10 ** 18, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@common_options
@click.pass_context
def bench_command(ctx, size, letters, pow_size, pow_letters, exponent, seed):
    """Wall-clock timings of h, ρ and the fast power path on random words."""
    sizes = (size // 4, size // 2, size)
    results = run_suite(sizes, letters, pow_size, min(pow_letters, pow_size), exponent, seed)
    for result in results:
        if _setting(ctx, "json_output", False):
            click.echo(render_json(result))
            continue
        extra = f" n={result['n']}" if "n" in result else ""
        click.echo(
            f"{result['name']} size={result['size']} letters={result['letters']}{extra} "
            f"seconds={result['seconds']:.6f}"
        )
    ctx.exit(EXIT_OK)


@cli.command("health")
@common_options
@click.pass_context
def health_command(ctx):
    """Run every component against its reference values."""
    status = check_health()
    if _setting(ctx, "json_output", False):
        click.echo(render_json(status))
    else:
        for component, entry in status.items():
            click.echo(f"{component}: {entry['status']} ({entry['message']})")
    ctx.exit(EXIT_OK if is_healthy(status) else EXIT_VALIDATION)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line on argv and return the exit code"""
    try:
        result = cli.main(args=list(argv) if argv is not None else None,
                          prog_name="piecewise", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        printe("Aborted!")
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK
