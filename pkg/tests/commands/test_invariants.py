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

from invforge.commands.invariants import cli


def test_plain_labels(clirunner, validate_cliresult, isolated_invforge_home):
    result = clirunner.invoke(cli, ["-k", "3", "--format", "plain"])
    validate_cliresult(result)
    assert result.output.splitlines() == ["I11", "Du I11", "Dv I11", "I03"]


def test_explicit(clirunner, validate_cliresult, isolated_invforge_home):
    result = clirunner.invoke(cli, ["-k", "2", "--explicit"])
    validate_cliresult(result)
    assert result.output.startswith("I11 = ")
    assert "f_uv" in result.output


def test_json(clirunner, validate_cliresult, isolated_invforge_home):
    result = clirunner.invoke(cli, ["--order", "4", "--format", "json"])
    validate_cliresult(result)
    data = json.loads(result.output)
    assert data['schema'] == {"name": "basis", "version": "1.0.0"}
    assert data['order'] == 4
    assert data['count'] == len(data['entries']) == 8
    assert all(entry['expr'] is None for entry in data['entries'])
    assert max(entry['order'] for entry in data['entries']) == 4


def test_schema(clirunner, validate_cliresult, isolated_invforge_home):
    result = clirunner.invoke(cli, ["--schema"])
    validate_cliresult(result)
    schema = json.loads(result.output)
    assert schema['version'] == "1.0.0"
    assert "entries" in schema['properties']


def test_order_below_two(clirunner, validate_exit_code,
                         isolated_invforge_home):
    result = clirunner.invoke(cli, ["-k", "1"])
    validate_exit_code(result, 2)
