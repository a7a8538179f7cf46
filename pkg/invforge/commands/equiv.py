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

from invforge import app, exception, util
from invforge import groupaction as ga
from invforge import harness as hs
from invforge.commands import (echo_schema, expression_callback,
                               setting_default, status)
from invforge.exprparse import print_expr

VERDICT_EXIT_CODES = {hs.CONSISTENT: 0, hs.INEQUIVALENT: 1,
                      hs.INCONCLUSIVE: 3}


def load_element(path):
    try:
        return ga.GroupElement.from_json(util.load_json(path))
    except (AttributeError, AssertionError, KeyError, TypeError, ValueError):
        raise click.BadParameter("not a group element: %s" % path,
                                 param_hint="--element")


@click.command("equiv", short_help="Necessary test of equivalence")
@click.option("--f1", callback=expression_callback, help="First f(u, v).")
@click.option("--f2", callback=expression_callback, help="Second f(u, v).")
@click.option(
    "--transform-seed",
    type=int,
    help="Use the image of --f1 under a seeded group element as --f2.")
@click.option(
    "--element",
    type=click.Path(exists=True, dir_okay=False),
    help="Use the image of --f1 under the group element in this JSON file "
    "as --f2.")
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=setting_default("samples"),
    show_default="setting 'samples'")
@click.option(
    "--tol",
    type=float,
    default=setting_default("tol"),
    show_default="setting 'tol'")
@click.option(
    "--seed",
    type=int,
    default=setting_default("seed"),
    show_default="setting 'seed' or INVFORGE_SEED")
@click.option("--json-output", is_flag=True)
@click.option(
    "--schema", is_flag=True, help="Print the JSON schema of the report.")
def cli(f1, f2, transform_seed, element, samples, tol, seed, json_output,
        schema):
    if schema:
        return echo_schema("equivalence")
    if f1 is None:
        raise click.BadParameter("missing nonlinearity", param_hint="--f1")
    given = (("--f2", f2), ("--transform-seed", transform_seed),
             ("--element", element))
    sources = [name for name, value in given if value is not None]
    if len(sources) > 1:
        raise click.BadParameter(
            "%s are mutually exclusive" % " and ".join(sources),
            param_hint=sources[0])
    if transform_seed is not None or element is not None:
        if element is not None:
            g = load_element(element)
        else:
            g = ga.random_element(transform_seed, ga.SYMBOLIC,
                                  taylor_degree=1)
        try:
            f2 = hs.transformed_nonlinearity(f1, g)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--element")
        if app.get_session_var("verbose"):
            click.secho("f2 = %s" % print_expr(f2), fg="cyan", err=True)
    if f2 is None:
        raise click.BadParameter(
            "missing nonlinearity",
            param_hint="--f2, --transform-seed or --element")

    try:
        report = hs.equivalence_necessary(f1, f2, samples, tol, seed)
    except exception.NoRegularPoint as e:
        click.secho(str(e), fg="yellow", err=True)
        raise exception.ReturnErrorCode(3)

    if json_output:
        click.echo(report.to_json(indent=2))
    else:
        click.echo("f1 = %s" % print_expr(f1))
        click.echo("f2 = %s" % print_expr(f2))
        click.echo("signature ranks: %d, %d" % (report.rank1, report.rank2))
        click.echo("matched points: %d, max distance: %.3e" %
                   (report.matched, report.max_distance))
        click.echo("Verdict: %s (%s)" % (status(report.verdict),
                                         report.message))

    code = VERDICT_EXIT_CODES[report.verdict]
    if code:
        raise exception.ReturnErrorCode(code)
    return True
