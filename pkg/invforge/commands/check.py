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
import sympy

from invforge import app, exception
from invforge import groupaction as ga
from invforge import harness as hs
from invforge import invstructure as ist
from invforge import jetspace as js
from invforge import movingframe as mf
from invforge import symkernel as sk
from invforge.commands import (echo_schema, expression_callback, progress,
                               setting_default, status)
from invforge.exprparse import parse
from invforge.schemas import CheckReport

SUITES = ("phantom", "recurrence", "commutator", "invariance", "frame",
          "generator", "basis", "all")

# values of I11, I03, I12, I21 on f = v^3
CUBIC_VALUES = {(1, 1): -6, (0, 3): 6, (1, 2): -24, (2, 1): 48}

BASIS_COUNTS = {2: 1, 3: 4, 4: 8, 5: 13, 6: 19}


def check_phantom(report, **_):
    for result in ist.phantom_check(order=3):
        report.add("phantom %s" % result.label, result.passed,
                   "" if result.passed else str(result.residual))
    # I^{k-2,1} omega2 is the only summand of top order in phi^(k)^
    for k in (5, 6):
        summands = ist.top_order_summands(k)
        expected = [("omega2", sk.invariant_symbol(k - 2, 1), 1)]
        report.add("phi^(%d) top order summands" % k, summands == expected,
                   ", ".join("%s %s*%s" % (which, coeff, s)
                             for which, s, coeff in summands))


def check_recurrence(report, **_):
    for index, ok in sorted(ist.verify_recurrences(order=3).items()):
        report.add("recurrence I%d%d" % index, ok)

    f = parse("v^3")
    values = js.jet_values(f, (0, 1), 4)
    table = ist.recurrence_table(3)
    for index, expected in sorted(CUBIC_VALUES.items()):
        expr = table[index] if index in table else sk.invariant_symbol(
            *index)
        value = sk.eval_numeric(ist.closed_form(expr), values)
        report.add("I%d%d on v^3" % index,
                   abs(value - expected) <= 1e-12 * (1 + abs(expected)),
                   "%.15g (expected %d)" % (value, expected))
    note_i04_display(report)


def note_i04_display(report):
    display = ist.i04_display_check()
    report.note("I04 against printed display",
                "matches" if display['matches'] else
                "printed display differs by %s; the recurrence is verified "
                "against direct invariantization" %
                (-display['difference']))


def check_commutator(report, seed, **_):
    coeffs = ist.commutator_coeffs()
    i03 = sk.invariant_symbol(0, 3)
    expected = (i03 / 2 - 2, i03 / 2)
    report.add(
        "coefficients",
        all(sympy.expand(a - b) == 0 for a, b in zip(coeffs, expected)),
        "Y1 = %s, Y2 = %s" % tuple(coeffs))
    functions = [sk.U, sk.V, sk.jet(0, 0), sk.jet(0, 1),
                 mf.i11_closed_form()]
    functions += ist.random_jet_functions(3, seed, order=2)
    for n, e in enumerate(functions):
        report.add("commutator on #%d" % n, ist.commutator_check(e))
    report.add("syzygy", ist.syzygy_check())


def check_invariance(report, f, order, samples, seed, tol):
    if f is None:
        raise click.BadParameter(
            "--f is required for the invariance suite", param_hint="--f")
    result = hs.invariance_test(
        f, min(order, hs.MAX_INVARIANCE_ORDER), samples, seed, tol,
        progress=progress("invariance"))
    report.reports.append(result)
    report.add("invariance of %s" % result.f, result.passed,
               "maxRelError=%.3e over %d samples" %
               (result.max_rel_error, result.samples))


def check_frame(report, order, **_):
    report.add("relative invariant W", ga.relative_W_law(),
               "W~ = phi' W / C1^2")
    report.add("conditional relative invariant S", ga.relative_S_law(),
               "S~ = (S + phi''/phi' W) / C1^2")
    for label, value, ok in mf.normalization_check(max(order, 3)):
        report.add("normalization %s" % label, ok,
                   "" if ok else str(value))
    for i in range(2, max(order, 3) + 1):
        display = mf.frame_display_check(i)
        report.add("phi^(%d) leading coefficient" % (i + 2),
                   display['derived_exponent'] == 4,
                   "W/(2v^%s), printed W/(2v^%d)" %
                   (display['derived_exponent'], display['printed_exponent']))
    display = mf.f20_display_check()
    report.note("f~20 against printed display",
                "matches" if display['matches'] else
                "printed display differs by %s" % display['difference'])
    note_i04_display(report)


def check_generator(report, f, seed, **_):
    report.add("I03 generator closed form", ist.generator_identity_holds())
    f = f if f is not None else parse("exp(u) + v^3")
    worst = 0.0
    for k in range(20):
        point = hs.regular_point(f, hs.sample_stream(seed, k))
        generated, direct = ist.i03_from_generator(f, point)
        worst = max(worst, abs(generated - direct) / (1 + abs(direct)))
    report.add("I03 generator at 20 points of %s" % f, worst <= 1e-9,
               "max relative error %.3e" % worst)
    max_order = app.get_setting("check_max_order")
    for index, ok in sorted(ist.generator_check(max_order).items()):
        report.add("I%d%d from I11" % index, ok)


def check_basis(report, f, seed, **_):
    for k, expected in sorted(BASIS_COUNTS.items()):
        count = len(ist.functional_basis(k))
        report.add("basis size k=%d" % k, count == expected,
                   "%d (expected %d)" % (count, expected))
        report.add("invariant count k=%d" % k,
                   mf.invariant_order_count(k) == expected)
    f = f if f is not None else parse("exp(u) + v^3")
    for k in (3, 4):
        basis = ist.functional_basis(k)
        ranked = hs.rank_report(basis, f, 20, seed)
        report.add("basis rank k=%d" % k, ranked.rank == len(basis),
                   "%d of %d" % (ranked.rank, len(basis)))


SUITE_RUNNERS = {
    "phantom": check_phantom,
    "recurrence": check_recurrence,
    "commutator": check_commutator,
    "invariance": check_invariance,
    "frame": check_frame,
    "generator": check_generator,
    "basis": check_basis
}


def print_report(report):
    for item in report.checks:
        if item.informational:
            word = "info"
        else:
            word = "passed" if item.passed else "failed"
        click.echo("%-45s %s %s" % (item.name, status(word), item.detail))
    click.echo("=" * 20)
    verdict = "passed" if report.passed else "failed"
    click.echo("Suite %s: %s" % (click.style(report.suite, fg="cyan"),
                                  status(verdict)))


@click.command("check", short_help="Run verification suites")
@click.option(
    "--suite",
    "-s",
    type=click.Choice(SUITES),
    default="all",
    show_default=True)
@click.option(
    "--f",
    "f",
    callback=expression_callback,
    help="Nonlinearity f(u, v), required by the invariance suite.")
@click.option(
    "--order",
    "-k",
    type=click.IntRange(min=2),
    default=setting_default("order"),
    show_default="setting 'order'")
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=setting_default("samples"),
    show_default="setting 'samples'")
@click.option(
    "--seed",
    type=int,
    default=setting_default("seed"),
    show_default="setting 'seed' or INVFORGE_SEED")
@click.option(
    "--tol",
    type=float,
    default=setting_default("tol"),
    show_default="setting 'tol'")
@click.option("--json-output", is_flag=True)
@click.option(
    "--schema", is_flag=True, help="Print the JSON schema of the report.")
def cli(suite, f, order, samples, seed, tol, json_output, schema):
    if schema:
        return echo_schema("check")

    if suite == "all":
        suites = [s for s in SUITES if s != "all"]
        if f is None:
            suites.remove("invariance")
    else:
        suites = [suite]

    report = CheckReport(suite=suite)
    try:
        for name in suites:
            if app.get_session_var("verbose"):
                click.secho("Running %s ..." % name, fg="cyan", err=True)
            SUITE_RUNNERS[name](
                report,
                f=f,
                order=order,
                samples=samples,
                seed=seed,
                tol=tol)
    except exception.DegenerateException as e:
        report.degenerate = True
        report.passed = False
        report.add("degenerate", False, str(e))

    if json_output:
        click.echo(report.to_json(indent=2))
    else:
        print_report(report)
        if report.degenerate:
            click.secho(report.checks[-1].detail, fg="yellow", err=True)

    if report.degenerate:
        raise exception.ReturnErrorCode(3)
    if not report.passed:
        raise exception.ReturnErrorCode(1)
    return True
