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

import pytest

from invforge import exception, schemas


@pytest.mark.parametrize("name", sorted(schemas.REPORTS))
def test_schema_versions(name):
    schema = schemas.get_schema(name)
    assert schema['version'] == schemas.SCHEMA_VERSION
    assert "schema" in schema['properties']


def test_unknown_schema():
    with pytest.raises(KeyError):
        schemas.get_schema("nothing")


def test_check_report():
    report = schemas.CheckReport(suite="frame")
    report.add("first", True)
    assert report.passed
    report.add("second", 0, "detail")
    assert not report.passed
    data = json.loads(report.to_json())
    assert data['schema'] == {"name": "check", "version": "1.0.0"}
    assert [c['passed'] for c in data['checks']] == [True, False]


def test_reports_load_back():
    report = schemas.InvarianceReport(
        f="exp(u)", order=2, seed=1, tol=1e-9, samples=3, maxRelError=0.5)
    data = json.loads(report.to_json())
    assert data['maxRelError'] == 0.5
    back = schemas.InvarianceReport.model_validate(data)
    assert back.max_rel_error == 0.5
    assert back.schema_ref.name == "invariance"


def test_compatibility():
    assert schemas.check_compatible("1.0.0")
    assert schemas.check_compatible("1.0.3")
    for version in ("2.0.0", "1.1.0", "0.9.0", "one"):
        with pytest.raises(exception.IncompatibleSchema):
            schemas.check_compatible(version)
