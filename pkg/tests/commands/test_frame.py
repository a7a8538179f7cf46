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

from invforge import symkernel as sk
from invforge.commands.frame import cli, frame_label


def test_frame_label():
    assert frame_label(sk.phi(0)) == "phi"
    assert frame_label(sk.phi(2)) == "phi''"
    assert frame_label(sk.phi(5)) == "phi^(5)"
    assert frame_label(sk.group_param(1)) == "C1"


def test_plain(clirunner, validate_cliresult, isolated_invforge_home):
    result = clirunner.invoke(cli, ["-k", "2", "--format", "plain"])
    validate_cliresult(result)
    lines = result.output.splitlines()
    assert [line.split(" = ")[0] for line in lines] == \
        ["C1", "C2", "phi", "phi'", "phi''", "phi'''", "phi^(4)"]
    assert lines[2] == "phi = 0"


def test_latex(clirunner, validate_cliresult, isolated_invforge_home):
    result = clirunner.invoke(cli, ["-k", "2", "--format", "latex"])
    validate_cliresult(result)
    assert "\\varphi^{(4)} = " in result.output


def test_json(clirunner, validate_cliresult, isolated_invforge_home):
    result = clirunner.invoke(cli, ["-k", "3", "--format", "json"])
    validate_cliresult(result)
    data = json.loads(result.output)
    assert data['schema']['name'] == "frame"
    assert len(data['entries']) == 8
    assert [c['i'] for c in data['display_checks']] == [2, 3]
    for check in data['display_checks']:
        assert check['derived_exponent'] == 4
        assert check['printed_exponent'] == 1
        assert check['matches'] is False
