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
from invforge import symkernel as sk
from invforge.app import OUTPUT_FORMATS
from invforge.commands import echo_schema, setting_default
from invforge.exprparse import print_expr
from invforge.schemas import FrameEntry, FrameReport


def frame_label(s, style="plain"):
    info = sk.symbol_info(s)
    if info.kind != sk.PHI:
        return print_expr(s, style)
    if style == "latex":
        return print_expr(s, "latex")
    k = info.indices[0]
    return "phi" + ("'" * k if k <= 3 else "^(%d)" % k)


def _jsonable(value):
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return print_expr(value, "plain")


@click.command("frame", short_help="Closed forms of the moving frame")
@click.option(
    "--order",
    "-k",
    type=click.IntRange(min=2),
    default=setting_default("order"),
    show_default="setting 'order'",
    help="Normalize the jets up to this order (>= 2).")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(OUTPUT_FORMATS),
    default=setting_default("format"),
    show_default="setting 'format'")
@click.option(
    "--schema", is_flag=True, help="Print the JSON schema of the report.")
def cli(order, fmt, schema):
    if schema:
        return echo_schema("frame")

    frame = mf.solve_frame(order)
    if fmt == "json":
        checks = []
        for i in range(2, order + 1):
            checks.append({
                key: _jsonable(value)
                for key, value in mf.frame_display_check(i).items()
            })
        report = FrameReport(
            order=order,
            entries=[
                FrameEntry(name=frame_label(s), value=print_expr(
                    frame.value(s), "plain")) for s in frame.symbols()
            ],
            display_checks=checks)
        click.echo(report.to_json(indent=2))
        return True

    for s in frame.symbols():
        click.echo("%s = %s" % (click.style(frame_label(s, fmt), fg="cyan"),
                                print_expr(frame.value(s), fmt)))
    return True
