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
"""
Report models of the JSON outputs and their versioned schemas.
"""

from typing import Any, ClassVar, Dict, List, Optional

import semantic_version
from pydantic import BaseModel, ConfigDict, Field

from invforge import exception

SCHEMA_VERSION = "1.0.0"


class SchemaRef(BaseModel):
    name: str
    version: str = SCHEMA_VERSION


class Report(BaseModel):

    model_config = ConfigDict(populate_by_name=True)

    SCHEMA_NAME: ClassVar[Optional[str]] = None

    schema_ref: Optional[SchemaRef] = Field(default=None, alias="schema")

    def model_post_init(self, __context):
        if self.schema_ref is None and self.SCHEMA_NAME:
            self.schema_ref = SchemaRef(name=self.SCHEMA_NAME)

    def to_json(self, indent=None):
        return self.model_dump_json(by_alias=True, indent=indent)


class InvarianceFailure(BaseModel):
    f: str
    point: List[float]
    element: Dict[str, Any]
    index: List[int]
    lhs: float
    rhs: float


class InvarianceReport(Report):
    SCHEMA_NAME: ClassVar[str] = "invariance"

    f: str
    order: int
    seed: int
    tol: float
    samples: int
    max_rel_error: float = Field(alias="maxRelError")
    failures: List[InvarianceFailure] = []
    ranges: Dict[str, List[float]] = {}
    passed: bool = True


class SignatureSample(BaseModel):
    point: List[float]
    values: List[float]
    regularity: str


class EquivalenceReport(Report):
    SCHEMA_NAME: ClassVar[str] = "equivalence"

    f1: str
    f2: str
    verdict: str
    samples: int
    seed: int
    tol: float
    rank1: Optional[int] = None
    rank2: Optional[int] = None
    matched: int = 0
    max_distance: float = 0.0
    message: str = ""


class RankReport(Report):
    SCHEMA_NAME: ClassVar[str] = "rank"

    f: str
    invariants: List[str]
    points: int
    seed: int
    rank: int


class CheckItem(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    informational: bool = False


class CheckReport(Report):
    SCHEMA_NAME: ClassVar[str] = "check"

    suite: str
    passed: bool = True
    degenerate: bool = False
    checks: List[CheckItem] = []
    reports: List[InvarianceReport] = []

    def add(self, name, passed, detail=""):
        self.checks.append(CheckItem(name=name, passed=bool(passed),
                                     detail=detail))
        self.passed = self.passed and bool(passed)

    def note(self, name, detail):
        """ An item that reports a finding without affecting `passed` """
        self.checks.append(CheckItem(name=name, passed=True, detail=detail,
                                     informational=True))


class ClassificationReport(Report):
    SCHEMA_NAME: ClassVar[str] = "classification"

    f: str
    point: List[str]
    tag: str
    W: str
    S: str
    exact: bool


class FrameEntry(BaseModel):
    name: str
    value: str


class FrameReport(Report):
    SCHEMA_NAME: ClassVar[str] = "frame"

    order: int
    entries: List[FrameEntry]
    display_checks: List[Dict[str, Any]] = []


class BasisEntry(BaseModel):
    label: str
    order: int
    expr: Optional[str] = None


class BasisReport(Report):
    SCHEMA_NAME: ClassVar[str] = "basis"

    order: int
    count: int
    entries: List[BasisEntry]


REPORTS = {
    model.SCHEMA_NAME: model
    for model in (InvarianceReport, EquivalenceReport, RankReport,
                  CheckReport, ClassificationReport, FrameReport, BasisReport)
}


def get_schema(name):
    if name not in REPORTS:
        raise KeyError(name)
    schema = REPORTS[name].model_json_schema(by_alias=True)
    schema['version'] = SCHEMA_VERSION
    return schema


def check_compatible(version, name="report"):
    """ Same major version and a minor version not newer than ours """
    current = semantic_version.Version(SCHEMA_VERSION)
    try:
        other = semantic_version.Version(version)
    except ValueError:
        raise exception.IncompatibleSchema(name, version, SCHEMA_VERSION)
    if other.major != current.major or other.minor > current.minor:
        raise exception.IncompatibleSchema(name, version, SCHEMA_VERSION)
    return True
