# Copyright (c) 2018-present Invforge Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import click

from invforge import app
from invforge import invstructure as ist
from invforge.app import OUTPUT_FORMATS
from invforge.commands import echo_schema, setting_default
from invforge.exprparse import print_expr
from invforge.schemas import BasisEntry, BasisReport


@click.command("invariants", short_help="Functional basis of invariants")
@click.option(
    "--order",
    "-k",
    type=click.IntRange(min=2),
    default=setting_default("order"),
    show_default="setting 'order'",
    help="Highest jet order of the basis (>= 2).")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(OUTPUT_FORMATS),
    default=setting_default("format"),
    show_default="setting 'format'")
@click.option(
    "--explicit", is_flag=True, help="Print closed forms in the jets.")
@click.option(
    "--schema", is_flag=True, help="Print the JSON schema of the report.")
def cli(order, fmt, explicit, schema):
    if schema:
        return echo_schema("basis")

    basis = ist.functional_basis(order)
    if fmt == "json":
        entries = [
            BasisEntry(
                label=item.label(),
                order=item.order,
                expr=print_expr(item.closed_form(), "plain")
                if explicit else None) for item in basis
        ]
        report = BasisReport(order=order, count=len(basis), entries=entries)
        click.echo(report.to_json(indent=2))
        return True

    if app.get_session_var("verbose"):
        click.secho(
            "%d invariants of order <= %d" % (len(basis), order),
            fg="cyan",
            err=True)
    for item in basis:
        label = item.label(fmt)
        if not explicit:
            click.echo(click.style(label, fg="cyan"))
            continue
        click.echo("%s = %s" % (click.style(label, fg="cyan"),
                                print_expr(item.closed_form(), fmt)))
    return True
