"""Command-line front end.

Subcommands parse bracket expressions, apply the maps of the library
(coproducts, inversion, symbols, one-forms, variation matrices), and
run the verification suites.  Results go to standard output as JSON by
default, or as LaTeX / plain text with ``--format``; diagnostics go to
standard error.  Exit status: 0 on success or an all-pass report, 1
when a verification suite fails, 2 on usage errors.
"""

import json
import sys

import click

from . import verify as verification
from .algebra import H, HBAR
from .coproduct import coproduct as coproduct_map
from .coproduct import inv_element
from .expr import (
    ExprError,
    blocks_document,
    element_document,
    form_document,
    latex_element,
    latex_form,
    latex_matrix,
    latex_poly,
    latex_tensor,
    latex_words,
    matrix_document,
    parse,
    poly_document,
    report_document,
    tensor_document,
    text_form,
    text_poly,
    text_tensor,
    text_words,
    words_document,
)
from .forms import Form, Poly, w_element
from .tensor import symbol as symbol_map
from .variation import (
    build_V,
    mat_add,
    omega_form_matrix,
    omega_hat,
    omega_matrix,
    v_hat,
    w_of_V,
)

SORTS = {"H": H, "Hbar": HBAR}

format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "latex", "text"]),
    default="json", show_default=True, help="Output rendering.")


def _parse_expr(text, sort):
    try:
        return parse(text, sort)
    except ExprError as exc:
        raise click.UsageError(str(exc))


def _emit_json(doc):
    click.echo(json.dumps(doc, indent=2, sort_keys=True))


@click.group()
def main():
    """Exact calculus for symbolic multiple polylogarithms.

    Expressions use the grammar printed by the library itself:
    Li[2,1](1,2,3) is the bracket with weights (2,1) on the windows
    x_{1..2} and x_{2..3}; ILi[...] is its inverted-argument variant
    (extended sort only); log(i) is the weight-zero letter; rational
    coefficients, products, powers (^), and parentheses compose them.
    """


@main.command("coproduct")
@click.argument("expr")
@click.option("--sort", "sort_name", type=click.Choice(["H", "Hbar"]),
              default="H", show_default=True,
              help="Which Hopf algebra the expression lives in.")
@format_option
def coproduct_cmd(expr, sort_name, fmt):
    """Coproduct of EXPR, as a two-slot tensor."""
    e = _parse_expr(expr, SORTS[sort_name])
    t = coproduct_map(e)
    if fmt == "json":
        _emit_json(tensor_document(t))
    elif fmt == "latex":
        click.echo(latex_tensor(t))
    else:
        click.echo(text_tensor(t))


@main.command("inv")
@click.argument("expr")
@format_option
def inv_cmd(expr, fmt):
    """Rewrite EXPR (extended sort) without inverted generators."""
    e = _parse_expr(expr, HBAR)
    out = inv_element(e)
    if fmt == "json":
        _emit_json(element_document(out))
    elif fmt == "latex":
        click.echo(latex_element(out))
    else:
        click.echo(str(out))


@main.command("symbol")
@click.argument("expr")
@format_option
def symbol_cmd(expr, fmt):
    """Symbol of EXPR: its maximal iterated coproduct, as words in the
    weight-one letters u_i and v_{i,j}."""
    e = _parse_expr(expr, H)
    ws = symbol_map(e)
    if fmt == "json":
        _emit_json(words_document(ws))
    elif fmt == "latex":
        click.echo(latex_words(ws))
    else:
        click.echo(text_words(ws))


@main.command("form")
@click.argument("expr")
@format_option
def form_cmd(expr, fmt):
    """Holomorphic one-form attached to the symbol of EXPR."""
    e = _parse_expr(expr, H)
    f = w_element(e)
    if fmt == "json":
        _emit_json(form_document(f))
    elif fmt == "latex":
        click.echo(latex_form(f))
    else:
        click.echo(text_form(f))


def _weights_tuple(text):
    try:
        nvec = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise click.UsageError("--weights expects integers like 2,1")
    if not nvec or any(n < 1 for n in nvec):
        raise click.UsageError("--weights entries must be >= 1")
    return nvec


@main.command("varmatrix")
@click.option("--weights", required=True, metavar="N1,N2,...",
              help="Weight vector of the bracket family, e.g. 2,1.")
@click.option("--what", "what",
              type=click.Choice(["V", "Omega", "omega", "omegahat", "Vhat",
                                 "wV", "blocks"]),
              default="V", show_default=True,
              help="V: the variation matrix; Omega: its weight-one letter "
                   "matrix; omega: the connection d(Omega); omegahat/Vhat: "
                   "the gauge-lifted pair; wV: the one-form of V, all "
                   "weights; blocks: the weight block boundaries.")
@click.option("--sort", "sort_name", type=click.Choice(["H", "Hbar"]),
              default="H", show_default=True,
              help="Sort of the matrix entries (V only).")
@format_option
def varmatrix_cmd(weights, what, sort_name, fmt):
    """Variation matrix of the bracket family with the given weights,
    or one of its derived matrices."""
    nvec = _weights_tuple(weights)
    if what != "V" and sort_name != "H":
        raise click.UsageError("--what %s requires --sort H" % what)
    V = build_V(nvec, SORTS[sort_name])
    if what == "blocks":
        doc = blocks_document(nvec, V.block_boundaries())
        if fmt == "json":
            _emit_json(doc)
        else:
            click.echo(" | ".join(str(b) for b in doc["boundaries"]))
        return
    if what == "V":
        rows = V.rows
    elif what == "Omega":
        rows = omega_matrix(V)
    elif what == "omega":
        rows = omega_form_matrix(V)
    elif what == "omegahat":
        rows = omega_hat(V)
    elif what == "Vhat":
        rows = v_hat(V)
    else:
        acc = None
        for n in range(1, sum(nvec) + 1):
            part = w_of_V(V, n)
            acc = part if acc is None else mat_add(acc, part)
        rows = acc

    def entry_doc(x):
        if isinstance(x, Poly):
            return poly_document(x)
        if isinstance(x, Form):
            return form_document(x)
        return element_document(x)

    def entry_latex(x):
        if isinstance(x, Poly):
            return latex_poly(x)
        if isinstance(x, Form):
            return latex_form(x)
        return latex_element(x)

    def entry_text(x):
        if isinstance(x, Poly):
            return text_poly(x)
        if isinstance(x, Form):
            return text_form(x)
        return str(x)

    if fmt == "json":
        _emit_json(matrix_document(
            what, nvec, sort_name, V.keys,
            [[entry_doc(x) for x in row] for row in rows]))
    elif fmt == "latex":
        click.echo(latex_matrix(
            [[entry_latex(x) for x in row] for row in rows]))
    else:
        for row in rows:
            click.echo(" | ".join(entry_text(x) for x in row))


@main.command("verify")
@click.option("--suite", "suite_name", default="all", show_default=True,
              metavar="NAME|all", help="One suite by name, or all of them.")
@click.option("--max-weight", type=int, default=None,
              help="Override the default weight bound of a sweep.")
@click.option("--max-depth", type=int, default=None,
              help="Override the default depth bound of a sweep.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for the randomized spot checks.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="json", show_default=True, help="Report rendering.")
def verify_cmd(suite_name, max_weight, max_depth, seed, fmt):
    """Run identity-verification suites and report pass/fail.

    Exit status is 0 when every requested suite passes and 1 otherwise.
    """
    known = verification.suite_names()
    if suite_name == "all":
        names = known
    elif suite_name in known:
        names = [suite_name]
    else:
        raise click.UsageError(
            "unknown suite %r (known: %s, all)"
            % (suite_name, ", ".join(known)))
    reports = []
    for name in names:
        click.echo("running %s: %s" % (name,
                                       verification.suite_description(name)),
                   err=True)
        rep = verification.run_suite(name, max_weight=max_weight,
                                     max_depth=max_depth, seed=seed)
        click.echo(rep.summary(), err=True)
        reports.append(rep)
    if fmt == "json":
        _emit_json(report_document(reports))
    else:
        for rep in reports:
            click.echo(rep.summary())
            for failure in rep.failures:
                click.echo("    " + failure)
    if not all(rep.passed for rep in reports):
        sys.exit(1)


if __name__ == "__main__":
    main()
