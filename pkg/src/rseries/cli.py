"""Command-line surface.

Subcommands:
    r         CSV of the rational coefficients r(k), exact or float
    q         CSV of the integer coefficients q(k)
    tables    print reference table 1, 2 or 3
    constant  report the correction sequence and the constant C
    figure    CSV (k, r(k), C) for plotting the approach to the constant
    verify    run the cross-checking suite

Exact rationals render as "p/q" (or "p" for integers) so they reparse
losslessly; floats render with 7 decimals unless --digits overrides.
All data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import coeffs, constant, verify as verify_mod
from .errors import BudgetExceededError

__all__ = ["cli", "render_rational", "parse_rational"]


def render_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def _fmt(v: float, digits: int) -> str:
    return f"{v:.{digits}f}"


@click.group()
def cli():
    """Coefficients and asymptotics of the product prod(1 + x^k/k)."""


@cli.command("r")
@click.option("--max-k", type=int, required=True, help="Largest k to emit.")
@click.option("--exact/--float", "exact", default=True,
              help="Exact rationals (default) or a float pipeline.")
@click.option("--digits", type=int, default=7, show_default=True,
              help="Decimal places in float mode.")
def cmd_r(max_k: int, exact: bool, digits: int):
    """CSV stream of (k, r(k))."""
    try:
        if exact:
            series = coeffs.r_series(max_k)
            values = [render_rational(c) for c in series.coeffs]
        else:
            values = [_fmt(v, digits) for v in coeffs.r_series_float(max_k)]
    except BudgetExceededError as e:
        raise click.ClickException(str(e))
    click.echo("k,r")
    for k, v in enumerate(values):
        click.echo(f"{k},{v}")


@cli.command("q")
@click.option("--max-k", type=int, required=True, help="Largest k to emit.")
def cmd_q(max_k: int):
    """CSV stream of (k, q(k))."""
    try:
        series = coeffs.q_series(max_k)
    except BudgetExceededError as e:
        raise click.ClickException(str(e))
    click.echo("k,q")
    for k, v in enumerate(series.coeffs):
        click.echo(f"{k},{v}")


@cli.command("tables")
@click.argument("which", type=click.IntRange(1, 3))
@click.option("--digits", type=int, default=7, show_default=True)
def cmd_tables(which: int, digits: int):
    """Reference tables: 1 constant approximations, 2 integer field,
    3 rational field (rows n = 0..5, columns k = 0..16)."""
    if which == 1:
        click.echo("m,delta,C")
        for m in range(1, 14):
            d = constant.delta_m(m)
            click.echo(f"{m},{_fmt(d.delta_m, digits)},{_fmt(d.c_m, digits)}")
    elif which == 2:
        table = coeffs.q_table(5, 16)
        click.echo("n," + ",".join(str(k) for k in range(17)))
        for n in range(6):
            click.echo(f"{n}," + ",".join(str(v) for v in table.row(n)))
    else:
        table = coeffs.r_table(5, 16)
        click.echo("n," + ",".join(str(k) for k in range(17)))
        for n in range(6):
            click.echo(f"{n}," + ",".join(render_rational(v) for v in table.row(n)))


@cli.command("constant")
@click.option("--tol", type=float, default=None,
              help="Target accuracy; picks the number of terms.")
@click.option("--terms", type=int, default=None,
              help="Fixed number of correction terms.")
@click.option("--digits", type=int, default=7, show_default=True)
def cmd_constant(tol: float | None, terms: int | None, digits: int):
    """Report the correction sequence, the constant, its error bound,
    and the harmonic-oracle cross-check."""
    if tol is not None and terms is not None:
        raise click.UsageError("--tol and --terms are mutually exclusive")
    if tol is not None:
        est = constant.constant_c(tol)
        m_final = est.terms_used
    else:
        m_final = terms if terms is not None else 13
        approx = constant.delta_m(m_final)
        est = constant.ConstantEstimate(
            value=approx.c_m,
            error_bound=constant.delta_tail_bound(m_final) * approx.c_m * 1.01,
            terms_used=m_final,
            method="zeta_series",
        )
    click.echo("m,delta,C")
    for m in range(1, m_final + 1):
        d = constant.delta_m(m)
        click.echo(f"{m},{_fmt(d.delta_m, digits)},{_fmt(d.c_m, digits)}")
    oracle = constant.harmonic_oracle(10 ** 6)
    click.echo(f"C,{_fmt(est.value, digits)}")
    click.echo(f"error_bound,{est.error_bound:.3e}")
    click.echo(f"harmonic_oracle,{_fmt(oracle.value, digits)}")


@cli.command("figure")
@click.option("--max-k", type=int, required=True)
@click.option("--digits", type=int, default=7, show_default=True)
def cmd_figure(max_k: int, digits: int):
    """CSV (k, r(k) as float, C) for plotting."""
    if max_k > 2000:
        raise click.ClickException("figure data is limited to max-k <= 2000")
    try:
        values = coeffs.r_series_float(max_k)
    except BudgetExceededError as e:
        raise click.ClickException(str(e))
    c = constant.constant_c(1e-8).value
    c_str = _fmt(c, digits)
    click.echo("k,r,C")
    for k, v in enumerate(values):
        click.echo(f"{k},{_fmt(v, digits)},{c_str}")


@cli.command("verify")
@click.option("--depth", type=click.Choice(["quick", "full"]), default="quick",
              show_default=True)
def cmd_verify(depth: str):
    """Run the cross-checking suite; nonzero exit status on any failure."""
    results = verify_mod.run_checks(depth)
    failed = False
    for name, ok, detail in results:
        click.echo(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        if not ok:
            failed = True
    if failed:
        click.echo("verification failed", err=True)
        sys.exit(1)


if __name__ == "__main__":
    cli()
