"""Command-line interface.

Usage:
    fibword words --n 10 --out words.txt
    fibword table1 --format markdown
    fibword table2 --paper-layout
    fibword indices star 6
    fibword tree kragujevac 2 2 2
    fibword density pair 9 6
    fibword series binom --x 1/8 --terms 60
    fibword verify all --seed 7 --out ledger.json

Exit codes: 0 success (or every pinned claim confirmed), 1 usage error,
2 I/O error, 3 a pinned claim was not confirmed.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import mpmath

from . import claims as claims_mod
from .indices import index_report
from .series import binom_fib_closed, binom_fib_partial, gf_fib_coeffs, proex1_lhs, proex1_rhs
from .tables import FORMATS, render, table1_rows, table2_rows
from .trees import (
    Tree,
    TreeFormatError,
    decomposition_tree,
    kragujevac,
    parse_edge_list,
    path,
    star,
)
from .words import df_pair, fib_word, fib_words_up_to, grid_growth, ones_density, residue_density

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CLAIMS = 3


class ClaimFailure(click.ClickException):
    exit_code = EXIT_CLAIMS


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise click.FileError(out, hint=exc.strerror or str(exc)) from exc


format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True
)
out_option = click.option("--out", "out", type=click.Path(dir_okay=False), default=None,
                          help="Write to this file instead of stdout.")


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Fibonacci words, word trees and their irregularity indices."""


@cli.command()
@click.option("--n", "n", type=int, default=10, show_default=True, help="Highest order F_n.")
@out_option
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def words(n, out, fmt):
    """Export Fibonacci words F_1 .. F_n."""
    try:
        ws = fib_words_up_to(n)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--n") from exc
    if fmt == "json":
        text = json.dumps([{"order": w.index, "length": len(w), "word": w.symbols} for w in ws],
                          indent=2) + "\n"
    else:
        lines = [f"Fibonacci words from F_1 to F_{n}:", ""]
        lines += [f"F_{w.index} (length {len(w)}): {w.symbols}" for w in ws]
        text = "\n".join(lines) + "\n"
    _emit(text, out)
    if out is not None:
        click.echo(f"Results successfully saved to '{out}'.")


@cli.command()
@click.option("--n", "n", type=int, default=10, show_default=True)
@format_option
@out_option
def table1(n, fmt, out):
    """Fibonacci words with their lengths."""
    _emit(render(["F_n", "Length", "Word"], table1_rows(n), fmt), out)


@cli.command()
@click.option("--a-max", type=click.IntRange(0, 12), default=10, show_default=True)
@click.option("--paper-layout", is_flag=True, help="Only the published cells, in published order.")
@format_option
@out_option
def table2(a_max, paper_layout, fmt, out):
    """Subword densities DF(n, m) to four decimals."""
    _emit(render(["n", "m", "DF"], table2_rows(a_max, paper_layout), fmt), out)


def _build_tree(source: str, params: tuple[str, ...]):
    try:
        if source == "file":
            if len(params) != 1:
                raise click.UsageError("file source takes exactly one path")
            try:
                text = Path(params[0]).read_text(encoding="utf-8")
            except OSError as exc:
                raise click.FileError(params[0], hint=exc.strerror or str(exc)) from exc
            return parse_edge_list(text)
        nums = [int(p) for p in params]
        if source == "path":
            return path(*nums)
        if source == "star":
            return star(*nums)
        if source == "fibword":
            return decomposition_tree(*nums)
        if source == "kragujevac":
            return kragujevac(nums)
    except TreeFormatError as exc:
        raise click.UsageError(f"malformed edge list: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise click.UsageError(f"bad parameters for {source}: {exc}") from exc
    raise click.UsageError(f"unknown tree source {source!r}")


TREE_SOURCES = click.Choice(["path", "star", "fibword", "kragujevac", "file"])


@cli.command()
@click.argument("source", type=TREE_SOURCES)
@click.argument("params", nargs=-1)
@click.option("--per-edge", is_flag=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="json")
@out_option
def indices(source, params, per_edge, fmt, out):
    """Degree-based indices of a constructed or loaded tree."""
    rep = index_report(_build_tree(source, params), per_edge=per_edge)
    if fmt == "csv":
        text = rep.to_csv()
    elif fmt == "text":
        text = "".join(f"{k}: {v}\n" for k, v in rep.to_dict().items() if k != "contributions")
    else:
        text = json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n"
    _emit(text, out)


@cli.command()
@click.argument("source", type=TREE_SOURCES)
@click.argument("params", nargs=-1)
@out_option
def tree(source, params, out):
    """Print a tree in edge-list format."""
    t = _build_tree(source, params)
    if not isinstance(t, Tree):
        t = t.underlying
    _emit(t.to_text(), out)


@cli.command()
@click.argument("kind", type=click.Choice(["ones", "pair", "residue", "grid"]))
@click.argument("args", nargs=-1, type=int)
@out_option
def density(kind, args, out):
    """ones N | pair N M | residue M LAMBDA | grid N."""
    arity = {"ones": 1, "pair": 2, "residue": 2, "grid": 1}[kind]
    if len(args) != arity:
        raise click.UsageError(f"density {kind} takes {arity} integer argument(s)")
    try:
        if kind == "ones":
            d = ones_density(fib_word(args[0]))
            payload = {"kind": kind, "n": args[0], "value": d.value, "method": d.method.value}
        elif kind == "pair":
            d = df_pair(*args)
            payload = {"kind": kind, "n": args[0], "m": args[1], "value": d.value,
                       "display": d.display(), "method": d.method.value}
        elif kind == "residue":
            d = residue_density(*args)
            payload = {"kind": kind, "m": args[0], "lambda": args[1], "value": d.value,
                       "method": d.method.value}
        else:
            payload = {"kind": kind, "N": args[0], "value": grid_growth(args[0])}
    except (ValueError, OverflowError) as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(json.dumps(payload, sort_keys=True) + "\n", out)


@cli.command()
@click.argument("kind", type=click.Choice(["binom", "proex1", "gf"]))
@click.option("--x", "x", default="1/8", show_default=True, help="Weight for the binomial series.")
@click.option("--n", "n", type=int, default=1, show_default=True)
@click.option("--terms", type=int, default=60, show_default=True)
@out_option
def series(kind, x, n, terms, out):
    """Evaluate the binomial series, the factorial series, or 1/(1-z-z^2) coefficients."""
    def s(v, digits=30):
        return mpmath.nstr(v, digits)

    try:
        if kind == "binom":
            p = binom_fib_partial(x, terms)
            payload = {"kind": kind, "x": x, "N": terms, "partial": s(p.value),
                       "tail_bound": s(p.tail_bound, 6), "closed_form": s(binom_fib_closed(x))}
        elif kind == "proex1":
            p = proex1_lhs(n, terms)
            payload = {"kind": kind, "n": n, "K": terms, "partial": s(p.value),
                       "tail_bound": s(p.tail_bound, 6),
                       "rhs_standard": s(proex1_rhs(n, "STANDARD")),
                       "rhs_printed": s(proex1_rhs(n, "PAPER"))}
        else:
            payload = {"kind": kind, "N": terms, "coefficients": gf_fib_coeffs(terms)}
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(json.dumps(payload, sort_keys=True) + "\n", out)


@cli.command()
@click.argument("claim_ids", nargs=-1)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "markdown", "csv"]), default="json")
@out_option
def verify(claim_ids, seed, fmt, out):
    """Run claim checkers ("all" or a list of ids) and write the ledger."""
    ids = None if not claim_ids or claim_ids == ("all",) else list(claim_ids)
    if ids is not None:
        unknown = [c for c in ids if c not in claims_mod.CHECKERS]
        if unknown:
            raise click.UsageError(
                f"unknown claim id(s): {', '.join(unknown)}; known: {', '.join(claims_mod.CHECKERS)}"
            )
    results = claims_mod.run_all(seed=seed, claim_ids=ids)
    render_ledger = {"json": claims_mod.ledger_json, "markdown": claims_mod.ledger_markdown,
                     "csv": claims_mod.ledger_csv}[fmt]
    text = render_ledger(results)
    _emit(text, out)
    failed = claims_mod.pinned_failures(results)
    if failed:
        raise ClaimFailure("pinned claims not confirmed: " + ", ".join(failed))


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="fibword", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except click.FileError as exc:
        exc.show()
        return EXIT_IO
    except ClaimFailure as exc:
        exc.show()
        return EXIT_CLAIMS
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
