"""
Command-line front end.

    python cli.py classify --n 6 --r 2 --s 4 --semidirect
    python cli.py enumerate --n 5 --max-order 8 --format csv
    python cli.py check-perm --n 3 --perm "(v1 w1 v2 w2 v3 w3)"
    python cli.py construct --family g1 --n 5 --m 4

Exit codes: 0 when the command completed, 1 on a module error or a failed
verification, 2 on bad flags.
"""
import csv
import io
import json
import sys
from typing import Callable, Optional

import click

from config import config
from services.families import FamilyKind, FamilyParams
from utils.errors import BipartiteTsgError, InvalidParams
from utils.logger import get_logger
from utils.reports import (
    Envelope,
    ErrorEnvelope,
    classification_report,
    construction_report,
    enumerate_report,
    group_from,
    oracle_report,
    permutation_report,
    plan_report,
    so4_report,
)

log = get_logger("CLI")

FORMATS = ["json", "text"]
CSV_COLUMNS = ["group", "order", "containment", "equality", "conditions", "note"]


def _format_option(choices=FORMATS):
    return click.option("--format", "fmt", type=click.Choice(choices), default="json", show_default=True)


def _group_options(f):
    f = click.option("--semidirect", is_flag=True, help="(Z_r x Z_s) x| Z_2 instead of Z_r x Z_s.")(f)
    f = click.option("--dihedral", is_flag=True, help="D_m instead of Z_m.")(f)
    f = click.option("--s", type=int)(f)
    f = click.option("--r", type=int)(f)
    f = click.option("--m", type=int)(f)
    return click.option("--n", type=int, required=True)(f)


def _group(m, r, s, dihedral, semidirect):
    if m is not None and semidirect:
        raise click.UsageError("--semidirect goes with --r/--s")
    if m is None and dihedral:
        raise click.UsageError("--dihedral goes with --m")
    try:
        return group_from(m, r, s, dihedral, semidirect)
    except InvalidParams as exc:
        raise click.UsageError(str(exc))


def _text(envelope: Envelope) -> str:
    lines = [f"query: {json.dumps(envelope.query, sort_keys=True)}"]
    verdict = envelope.verdict
    if isinstance(verdict, dict):
        for key in sorted(verdict):
            value = verdict[key]
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            lines.append(f"{key}: {value}")
    else:
        lines.append(f"verdict: {verdict}")
    for condition in envelope.matched_conditions:
        lines.append(f"matched: {condition}")
    for witness in envelope.witnesses:
        lines.append(f"witness: {json.dumps(witness, sort_keys=True)}")
    return "\n".join(lines)


def _emit(run: Callable[[], Envelope], fmt: str, failed: Optional[Callable[[Envelope], bool]] = None) -> None:
    """Run a report builder, print it and exit with the contract's code."""
    try:
        envelope = run()
    except BipartiteTsgError as exc:
        log.error(f"{exc.code}: {exc}")
        if fmt == "json":
            click.echo(ErrorEnvelope.from_exception(exc).to_json())
        else:
            click.echo(f"error: {exc.code}: {exc}", err=True)
        sys.exit(1)

    click.echo(envelope.to_json() if fmt == "json" else _text(envelope))
    if failed is not None and failed(envelope):
        sys.exit(1)


@click.group()
def cli():
    """Topological symmetry groups of complete bipartite graphs."""


@cli.command()
@_group_options
@_format_option()
def classify(n, m, r, s, dihedral, semidirect, fmt):
    """Decide whether a group is (or is contained in) TSG+ of some embedding of K_{n,n}."""
    _emit(lambda: classification_report(n, _group(m, r, s, dihedral, semidirect)), fmt)


@cli.command()
@_group_options
@_format_option()
def plan(n, m, r, s, dihedral, semidirect, fmt):
    """Name the construction that realizes a group, or exit 1 when there is none."""
    _emit(lambda: plan_report(n, _group(m, r, s, dihedral, semidirect)), fmt)


def _csv(envelope: Envelope) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in envelope.verdict["rows"]:
        writer.writerow({**row, "conditions": " ".join(row["conditions"]), "note": row["note"] or ""})
    return out.getvalue().rstrip("\n")


def _table(envelope: Envelope) -> str:
    rows = envelope.verdict["rows"]
    width = max([len(row["group"]) for row in rows] + [5])
    lines = [f"{'group':<{width}}  order  containment  equality        conditions"]
    for row in rows:
        conditions = " ".join(row["conditions"]) or "-"
        note = f"  ({row['note']})" if row["note"] else ""
        lines.append(
            f"{row['group']:<{width}}  {row['order']:>5}  {row['containment']:<11}  {row['equality']:<14}  {conditions}{note}"
        )
    return "\n".join(lines)


@cli.command("enumerate")
@click.option("--n", type=int, required=True)
@click.option("--max-order", type=int, required=True)
@_format_option(["json", "text", "csv"])
def enumerate_groups(n, max_order, fmt):
    """Classify every group up to an order bound."""
    if fmt == "json":
        _emit(lambda: enumerate_report(n, max_order), fmt)
        return
    try:
        envelope = enumerate_report(n, max_order)
    except BipartiteTsgError as exc:
        click.echo(f"error: {exc.code}: {exc}", err=True)
        sys.exit(1)
    click.echo(_csv(envelope) if fmt == "csv" else _table(envelope))


@cli.command("check-perm")
@click.option("--n", type=int, required=True)
@click.option("--perm", required=True, help='Cycle notation, e.g. "(v1 w1)(v2 v3)".')
@_format_option()
def check_perm(n, perm, fmt):
    """Order, cycle structure and realizability of one automorphism."""
    _emit(lambda: permutation_report(n, perm), fmt)


def _family_options(f):
    f = click.option("--s", type=int)(f)
    f = click.option("--r", type=int)(f)
    f = click.option("--m", type=int)(f)
    return click.option("--family", type=click.Choice([k.value for k in FamilyKind]), required=True)(f)


def _params(family, n, m, r, s) -> FamilyParams:
    try:
        return FamilyParams(FamilyKind(family), n, m=m, r=r, s=s)
    except InvalidParams as exc:
        raise click.UsageError(str(exc))


@cli.command()
@_family_options
@click.option("--n", type=int, required=True)
@_format_option()
def construct(family, m, r, s, n, fmt):
    """Build a placement and verify the edge conditions and subgroup witnesses."""
    params = _params(family, n, m, r, s)
    _emit(lambda: construction_report(params), fmt, lambda env: not env.verdict["passed"])


@cli.command("verify-so4")
@_family_options
@_format_option()
def verify_so4(family, m, r, s, fmt):
    """Compare the motion algebra with explicit 4x4 rotation matrices."""
    # the group does not depend on n; any admissible value builds it
    params = _params(family, 3, m, r, s)
    _emit(lambda: so4_report(params), fmt, lambda env: not env.verdict["passed"])


@cli.command()
@click.option("--max-n", type=int, required=True)
@click.option("--max-m", type=int, required=True)
@click.option("--workers", type=int, default=config.ORACLE_WORKERS, show_default=True)
@_format_option()
def oracle(max_n, max_m, workers, fmt):
    """Cross-check the cyclic/dihedral classification against exhaustive enumeration."""
    _emit(lambda: oracle_report(max_n, max_m, workers), fmt, lambda env: not env.verdict["passed"])


if __name__ == "__main__":
    cli()
