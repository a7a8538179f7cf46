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

import os

import pytest
from click.testing import CliRunner

from invforge import exception


@pytest.fixture(scope="session")
def validate_cliresult():

    def decorator(result):
        assert result.exit_code == 0
        assert not result.exception

    return decorator


@pytest.fixture(scope="session")
def validate_exit_code():
    """ Exit status as main() would report it for a CliRunner result """

    def decorator(result, code):
        if isinstance(result.exception, exception.ReturnErrorCode):
            assert str(result.exception) == str(code)
        elif isinstance(result.exception, exception.InvforgeException):
            assert result.exception.EXIT_CODE == code
        else:
            assert result.exit_code == code

    return decorator


@pytest.fixture(scope="module")
def clirunner():
    return CliRunner()


@pytest.fixture(scope="module")
def isolated_invforge_home(request, tmpdir_factory):
    home_dir = tmpdir_factory.mktemp(".invforge")
    os.environ['INVFORGE_HOME_DIR'] = str(home_dir)

    def fin():
        del os.environ['INVFORGE_HOME_DIR']

    request.addfinalizer(fin)
    return home_dir
