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

import pytest

from invforge import app, exception, util


def test_defaults(isolated_invforge_home):
    app.reset_settings()
    for name, data in app.DEFAULT_SETTINGS.items():
        assert app.get_setting(name) == data['value']


def test_sanitize_setting():
    assert app.sanitize_setting("order", "5") == 5
    assert app.sanitize_setting("tol", "1e-6") == 1e-6
    assert app.sanitize_setting("format", "LaTeX") == "latex"
    assert app.sanitize_setting("verbose", "No") is False
    for name, value in [("order", "1"), ("samples", "0"), ("tol", "-1"),
                        ("format", "html"), ("seed", "many")]:
        with pytest.raises(exception.InvalidSettingValue):
            app.sanitize_setting(name, value)
    with pytest.raises(exception.InvalidSettingName):
        app.sanitize_setting("colour", "red")


def test_settings_persist(isolated_invforge_home):
    app.set_setting("samples", "25")
    assert app.get_setting("samples") == 25
    assert isolated_invforge_home.join("appstate.json").check()
    app.reset_settings()
    assert app.get_setting("samples") == 100


def test_broken_state_file(isolated_invforge_home):
    isolated_invforge_home.join("appstate.json").write("{broken")
    assert app.get_setting("samples") == 100
    with pytest.raises(exception.InvforgeException):
        util.load_json(str(isolated_invforge_home.join("appstate.json")))
    isolated_invforge_home.join("appstate.json").remove()


def test_session_vars():
    assert app.get_session_var("missing", 7) == 7
    with pytest.raises(AssertionError):
        app.set_session_var("missing", 1)


def test_memoized():
    calls = []

    @util.memoized
    def square(x):
        calls.append(x)
        return x * x

    assert square(3) == 9
    assert square(3) == 9
    assert calls == [3]
    square.reset()
    assert square(3) == 9
    assert calls == [3, 3]

    @util.memoized
    def total(values):
        return sum(values)

    # unhashable arguments bypass the cache
    assert total([1, 2]) == 3
    assert total.cache == {}
