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

import json

import click

from invforge import app, exception, exprparse
from invforge.schemas import get_schema

STATUS_COLORS = {
    "passed": "green",
    "regular": "green",
    "consistent": "green",
    "failed": "red",
    "inequivalent": "red",
    "degenerate": "yellow",
    "singular": "yellow",
    "ultra-singular": "yellow",
    "inconclusive": "yellow",
    "info": "cyan"
}


def expression_callback(ctx, param, value):  # pylint: disable=W0613
    if value is None:
        return None
    try:
        return exprparse.parse(value)
    except exception.ExprSyntaxError as e:
        raise click.BadParameter(
            "%s\n%s" % (e, exprparse.format_error_location(value, e)))
    except exception.UsageException as e:
        raise click.BadParameter(str(e))


def point_callback(ctx, param, value):  # pylint: disable=W0613
    try:
        return exprparse.parse_point(value)
    except exception.UsageException as e:
        raise click.BadParameter(str(e))


def setting_default(name):
    return lambda: app.get_setting(name)


def echo_schema(name):
    click.echo(json_dumps(get_schema(name)))


def json_dumps(data):
    return json.dumps(data, indent=2, sort_keys=True)


def status(word):
    return click.style(word.upper(), fg=STATUS_COLORS.get(word), bold=True)


def progress(label):
    """ Progress callback for harness runs, silent unless verbose """
    if not app.get_session_var("verbose"):
        return None

    def _callback(done, total):
        click.secho("%s: %d/%d" % (label, done, total), fg="cyan", err=True)

    return _callback
