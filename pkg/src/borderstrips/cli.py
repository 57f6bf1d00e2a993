"""Command-line front end.

All numeric output is printed as exact decimal strings; identical invocations
produce byte-identical output.  Exit codes: 0 ok, 2 usage, 3 budget exceeded,
4 verification failure.
"""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from .enumeration import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    EnumerationBudget,
    count_bsd,
    count_bsp,
    enum_bsd,
    enum_bst,
    qpoly_bsd,
)
from .formulas import (
    UnsupportedRangeError,
    bsd_count_formula,
    bst_closed,
    conjecture_scan,
    format_sequence,
    q_factorial,
    qpoly_single_column,
    rect_recurrence,
    total_over_words,
    wp_volume,
    zograf_sequence,
)
from .polynomial import Polynomial
from .ribbon import decomposition_to_json, tableau_to_json
from .shape import Word, build_diagram, render_ascii
from .verify import SUITES, run_suite

EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _parse_word(text: str) -> Word:
    try:
        return Word.parse(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _budget(override: int | None) -> EnumerationBudget:
    if override is None:
        return DEFAULT_BUDGET
    if override < 1:
        raise click.UsageError("--budget must be positive")
    return EnumerationBudget(
        max_symbols=override, count_symbols=override, hard_cap=DEFAULT_BUDGET.hard_cap
    )


def _exit_codes(fn):
    """Map library errors to the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BudgetExceededError as exc:
            click.echo(f"budget exceeded: {exc}", err=True)
            sys.exit(EXIT_BUDGET)
        except UnsupportedRangeError as exc:
            raise click.UsageError(str(exc))
        except BrokenPipeError:
            # Downstream closed the pipe; terminate quietly.
            devnull = os.open(os.devnull, os.O_WRONLY)
            os.dup2(devnull, sys.stdout.fileno())
            sys.exit(0)

    return wrapper


@click.group()
@click.version_option(package_name="borderstrips")
def main() -> None:
    """Count, enumerate and verify border-strip decompositions of simple
    diagrams (shapes grown from an n x n square by a word over {r, c})."""


word_option = click.option(
    "--word", "word_text", default="", show_default='""',
    help="Word over {r, c}; the empty string is the bare square.",
)
n_option = click.option("--n", "n", type=int, required=True, help="Strip size.")
format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    show_default=True, help="Output format.",
)
budget_option = click.option(
    "--budget", type=int, default=None, help="Override the n+k search bound."
)


@main.command()
@word_option
@n_option
@click.option(
    "--method", type=click.Choice(["auto", "enum", "formula"]), default="auto",
    show_default=True, help="Counting route; auto picks the polynomial when it applies.",
)
@click.option("--tableaux", is_flag=True, help="Also print the tableau count.")
@click.option("--check", is_flag=True, help="Run both routes and require agreement.")
@format_option
@budget_option
@_exit_codes
def count(word_text, n, method, tableaux, check, fmt, budget) -> None:
    """Count the decompositions of (word, n)."""
    word = _parse_word(word_text)
    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    k = len(word)
    bud = _budget(budget)
    formula_applies = n > 2 * k - 1
    if method == "formula" and not formula_applies:
        raise click.UsageError(f"the polynomial route needs n > 2k - 1 = {2 * k - 1}")
    use_formula = method == "formula" or (method == "auto" and formula_applies)
    method_name = "polynomial" if use_formula else "enumeration"
    bsd = bsd_count_formula(word, n, bud) if use_formula else count_bsd(word, n, bud)
    checked = None
    if check:
        if formula_applies:
            other_name = "enumeration" if use_formula else "polynomial"
            other = count_bsd(word, n, bud) if use_formula else bsd_count_formula(word, n, bud)
        else:
            # No polynomial route below the threshold; the direct tiling
            # search is the second, independent computation.
            from .enumeration import oracle_tilings

            other_name = "tiling oracle"
            other = len(oracle_tilings(build_diagram(word, n), n, bud))
        if other != bsd:
            click.echo(
                f"method disagreement: {method_name} gives {bsd}, {other_name} gives {other}",
                err=True,
            )
            sys.exit(EXIT_VERIFY)
        checked = other_name
    bst = None
    if tableaux:
        bst = bst_closed(k, n) if k <= n else count_bsp(word, n, bud)
    if fmt == "json":
        payload = {
            "word": str(word),
            "n": n,
            "bsd": str(bsd),
            "method": method_name,
            "checked": checked,
        }
        if bst is not None:
            payload["bst"] = str(bst)
        click.echo(json.dumps(payload))
        return
    click.echo(f"BSD({word.display()}, {n}) = {bsd}")
    if bst is not None:
        click.echo(f"BST({word.display()}, {n}) = {bst}")
    click.echo(f"method: {method_name}" + (f" (agrees with {checked})" if checked else ""))


def _qpoly_identity(word: Word, n: int) -> tuple[str, Polynomial]:
    if len(word) == 0:
        return "[n]_q!", q_factorial(n)
    if str(word) == "c":
        return "[n-1]_q! * sum i q^(i-1)", qpoly_single_column(n)
    raise click.UsageError(
        f"no closed-form identity for word {word.display()!r}; "
        "use --all-words for the length-k total"
    )


@main.command()
@word_option
@n_option
@click.option("--all-words", is_flag=True, help="Sum over every word of length --k.")
@click.option("--k", "k_value", type=int, default=None, help="Word length for --all-words.")
@click.option("--identity", is_flag=True, help="Print and verify the applicable closed form.")
@format_option
@budget_option
@_exit_codes
def qpoly(word_text, n, all_words, k_value, identity, fmt, budget) -> None:
    """Print the inversion generating polynomial, lowest degree first."""
    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    bud = _budget(budget)
    if all_words:
        if k_value is None or k_value < 0:
            raise click.UsageError("--all-words needs a nonnegative --k")
        from itertools import product

        poly = Polynomial((), "q")
        for letters in product("cr", repeat=k_value):
            poly = poly + qpoly_bsd(Word(letters), n, bud)
        closed_name, closed = "[n+1]_q^k [n]_q!", total_over_words(k_value, n)[1]
        label = f"all words, k={k_value}"
    else:
        word = _parse_word(word_text)
        poly = qpoly_bsd(word, n, bud)
        label = f"({word.display()}, {n})"
        closed_name = closed = None
        if identity:
            closed_name, closed = _qpoly_identity(word, n)
    coeffs = [str(c) for c in poly.coeffs] or ["0"]
    if fmt == "json":
        payload = {"label": label, "polynomial": poly.to_json()}
        if identity and closed is not None:
            payload["identity"] = {"form": closed_name, "holds": closed == poly}
        click.echo(json.dumps(payload))
        if identity and closed is not None and closed != poly:
            sys.exit(EXIT_VERIFY)
        return
    click.echo(" ".join(coeffs))
    if identity and closed is not None:
        if closed == poly:
            click.echo(f"identity: {closed_name} (verified)")
        else:
            click.echo(f"identity: {closed_name} FAILED", err=True)
            sys.exit(EXIT_VERIFY)


@main.command()
@click.option("--suite", default="all", show_default=True,
              help="One of: " + ", ".join(sorted(SUITES)) + ", all.")
@click.option("--max-n", type=int, default=None, help="Bound on n.")
@click.option("--max-k", type=int, default=None, help="Bound on the word length.")
@click.option("--max-symbols", type=int, default=None, help="Bound on n + k.")
@budget_option
@_exit_codes
def verify(suite, max_n, max_k, max_symbols, budget) -> None:
    """Run a named verification suite and print one line per check."""
    bounds = {"max_n": max_n, "max_k": max_k, "max_symbols": max_symbols}
    if budget is not None:
        bounds["budget"] = _budget(budget)
    try:
        results = run_suite(suite, **bounds)
    except KeyError:
        raise click.UsageError(
            f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}, all"
        )
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        detail = f": {r.detail}" if r.detail else ""
        click.echo(f"{status} {r.name}{detail}")
        failed += 0 if r.ok else 1
    click.echo(f"{len(results) - failed}/{len(results)} checks passed")
    if failed:
        sys.exit(EXIT_VERIFY)


@main.command()
@click.option("--n", "n", type=int, required=True, help="Number of punctures (n >= 4).")
@format_option
@_exit_codes
def wp(n, fmt) -> None:
    """Print v_n and the volume of the n-punctured-sphere moduli space."""
    coefficient, exponent = wp_volume(n)
    v_n = zograf_sequence(n)[-1]
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "n": n,
                    "v": str(v_n),
                    "coefficient": str(coefficient),
                    "pi_exponent": exponent,
                }
            )
        )
        return
    click.echo(f"v_{n} = {v_n}; Vol = ({coefficient})·π^{exponent}")


@main.command()
@click.option("--n", "n", type=int, required=True, help="Largest rectangle index.")
@click.option("--check", is_flag=True,
              help="Verify the recurrence against enumeration (n <= 4) and the partition sum.")
@click.option("--figure", "figure_path", type=click.Path(), default=None,
              help="Also write a growth plot to this file.")
@format_option
@budget_option
@_exit_codes
def rect(n, check, figure_path, fmt, budget) -> None:
    """Print a(0..n), the ribbon tiling counts of the 2n x n rectangle."""
    if n < 0:
        raise click.UsageError("--n must be nonnegative")
    values = rect_recurrence(n)
    verified_to = None
    if check:
        from .formulas import partition_ie_sum

        bud = _budget(budget)
        verified_to = min(n, 4)
        for i in range(1, n + 1):
            if partition_ie_sum(i) != values[i]:
                click.echo(f"partition sum disagrees at n={i}", err=True)
                sys.exit(EXIT_VERIFY)
        for i in range(1, verified_to + 1):
            if count_bsd(Word(("r",) * i), i, bud) != values[i]:
                click.echo(f"enumeration disagrees at n={i}", err=True)
                sys.exit(EXIT_VERIFY)
    if figure_path:
        from .viz import draw_sequence

        draw_sequence(values, figure_path, start_index=0, title="2n x n ribbon tilings")
    if fmt == "json":
        payload = {"values": [str(v) for v in values]}
        if verified_to is not None:
            payload["verified_by_enumeration_to"] = verified_to
        if figure_path:
            payload["figure"] = figure_path
        click.echo(json.dumps(payload))
        return
    click.echo(format_sequence(values, 0))
    if verified_to is not None:
        click.echo(f"verified: partition sum for n <= {n}, enumeration for n <= {verified_to}")
    if figure_path:
        click.echo(f"figure written to {figure_path}")


@main.command()
@click.option("--k", "k_value", type=int, required=True, help="Word length to scan.")
@format_option
@budget_option
@_exit_codes
def scan(k_value, fmt, budget) -> None:
    """Group words by counting polynomial and compare with isometry orbits."""
    if k_value < 0:
        raise click.UsageError("--k must be nonnegative")
    report = conjecture_scan(k_value, _budget(budget))
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "k": report.k,
                    "orbits": [list(o) for o in report.orbits],
                    "polynomial_groups": [list(g) for g in report.polynomial_groups],
                    "count_groups": [list(g) for g in report.count_groups],
                    "conjecture_holds": report.conjecture_holds,
                    "stronger_holds": report.stronger_holds,
                    "counterexamples": list(report.counterexamples),
                }
            )
        )
        return
    click.echo(f"k = {report.k}")
    click.echo("isometry orbits:       " + "  ".join("{" + ", ".join(o) + "}" for o in report.orbits))
    click.echo("polynomial groups:     " + "  ".join("{" + ", ".join(g) + "}" for g in report.polynomial_groups))
    click.echo("count groups (n = k):  " + "  ".join("{" + ", ".join(g) + "}" for g in report.count_groups))
    click.echo(
        "polynomial groups match orbits: "
        + ("yes (word recovery holds at this k)" if report.conjecture_holds else "NO")
    )
    click.echo(
        "count groups match orbits: " + ("yes" if report.stronger_holds else "no")
    )
    for line in report.counterexamples:
        click.echo("counterexample: " + line)


@main.command()
@word_option
@n_option
@click.option("--strips", is_flag=True, help="Color a decomposition instead of the bare shape.")
@click.option("--index", "dec_index", type=int, default=0, show_default=True,
              help="Which decomposition to draw (enumeration order).")
@click.option("--perm", "perm_text", default=None,
              help='Draw the decomposition of this member permutation, e.g. "[3,1,2,4]".')
@click.option("--figure", "figure_path", type=click.Path(), default=None,
              help="Also write a figure to this file.")
@budget_option
@_exit_codes
def render(word_text, n, strips, dec_index, perm_text, figure_path, budget) -> None:
    """Draw the diagram (optionally one of its decompositions) as ASCII art."""
    word = _parse_word(word_text)
    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    diagram = build_diagram(word, n)
    dec = None
    if perm_text is not None:
        from .perm import MembershipError, Permutation, psi_inverse
        from .ribbon import decomposition_of

        try:
            sigma = Permutation.parse(perm_text)
            dec = decomposition_of(psi_inverse(sigma, word, n))
        except (ValueError, MembershipError) as exc:
            raise click.UsageError(str(exc))
    elif strips:
        bud = _budget(budget)
        for i, candidate in enumerate(enum_bsd(word, n, bud)):
            if i == dec_index:
                dec = candidate
                break
        if dec is None:
            raise click.UsageError(f"no decomposition with index {dec_index}")
    click.echo(render_ascii(diagram, dec))
    if figure_path:
        from .viz import draw_diagram

        draw_diagram(diagram, dec, figure_path)
        click.echo(f"figure written to {figure_path}")


@main.command(name="enumerate")
@word_option
@n_option
@click.option("--tableaux", is_flag=True, help="Stream tableaux instead of decompositions.")
@click.option("--bsp", is_flag=True,
              help="Stream member permutations in one-line bracket form instead.")
@budget_option
@_exit_codes
def enumerate_cmd(word_text, n, tableaux, bsp, budget) -> None:
    """Stream decompositions of (word, n) as JSON lines."""
    word = _parse_word(word_text)
    if n < 1:
        raise click.UsageError("--n must be a positive integer")
    bud = _budget(budget)
    if bsp:
        from .enumeration import enum_bsp

        for sigma in enum_bsp(word, n, bud):
            click.echo(str(sigma))
    elif tableaux:
        for tab in enum_bst(word, n, bud):
            click.echo(json.dumps(tableau_to_json(tab)))
    else:
        for dec in enum_bsd(word, n, bud):
            click.echo(json.dumps(decomposition_to_json(dec)))


if __name__ == "__main__":
    main()
