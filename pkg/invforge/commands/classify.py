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

from invforge import movingframe as mf
from invforge.app import OUTPUT_FORMATS
from invforge.commands import (echo_schema, expression_callback,
                               point_callback, setting_default, status)
from invforge.exprparse import print_expr
from invforge.schemas import ClassificationReport


def _value_str(value, style="plain"):
    if isinstance(value, float):
        return "%.15g" % value
    return print_expr(value, style)


@click.command("classify", short_help="Regularity class of f at a point")
@click.option(
    "--f",
    "f",
    callback=expression_callback,
    help="Nonlinearity f(u, v).")
@click.option(
    "--point",
    "-p",
    default="0,1",
    show_default=True,
    callback=point_callback,
    help="Point 'u,v' with rational coordinates.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(OUTPUT_FORMATS),
    default=setting_default("format"),
    show_default="setting 'format'")
@click.option(
    "--schema", is_flag=True, help="Print the JSON schema of the report.")
def cli(f, point, fmt, schema):
    if schema:
        return echo_schema("classification")
    if f is None:
        raise click.BadParameter("missing nonlinearity", param_hint="--f")

    result = mf.classify(f, point)
    if fmt == "json":
        report = ClassificationReport(
            f=print_expr(f),
            point=[print_expr(x) for x in point],
            tag=result.tag,
            W=_value_str(result.W),
            S=_value_str(result.S),
            exact=result.exact)
        click.echo(report.to_json(indent=2))
        return True

    click.echo("f = %s at (u, v) = (%s, %s): %s" %
               (print_expr(f, fmt), print_expr(point[0], fmt),
                print_expr(point[1], fmt), status(result.tag)))
    click.echo("W = %s" % _value_str(result.W, fmt))
    click.echo("S = %s" % _value_str(result.S, fmt))
    if not result.exact:
        click.secho(
            "Jets are not rational at this point, the threshold test was "
            "used", fg="yellow", err=True)
    return True
