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
import sympy
from hypothesis import given, settings
from hypothesis.strategies import integers

from invforge import exception
from invforge import jetspace as js
from invforge import symkernel as sk

U, V, F = sk.U, sk.V, sk.F


def test_total_derivative():
    assert js.total_derivative(F, "u") == sk.jet(1, 0)
    assert js.total_derivative(U * F, "v") == U * sk.jet(0, 1)
    assert js.total_derivative(V**2, "v") == 2 * V
    assert js.total_derivative(sk.phi(1) * V, "u") == sk.phi(2) * V
    assert js.total_derivative(sk.phi(1), "v") == 0
    assert js.total_derivative_n(F, 2, 1) == sk.jet(2, 1)
    with pytest.raises(ValueError):
        js.total_derivative(F, "x")


def test_jet_function_wrapper():
    e = js.JetFunction(sk.jet(1, 1) * V)
    assert e.order == 2
    d = js.total_derivative(e, "u")
    assert isinstance(d, js.JetFunction)
    assert d == js.JetFunction(sk.jet(2, 1) * V)


@given(integers(-5, 5), integers(-5, 5), integers(0, 3))
@settings(max_examples=20, deadline=None)
def test_total_derivatives_commute(a, b, n):
    e = (a * U * sk.jet(0, 1)**2 + b * V**n * sk.jet(2, 0) * sk.phi(1) +
         sympy.exp(U) * F / V)
    lhs = js.total_derivative(js.total_derivative(e, "u"), "v")
    rhs = js.total_derivative(js.total_derivative(e, "v"), "u")
    assert sympy.expand(lhs - rhs) == 0


def test_concrete_jet():
    jets = js.concrete_jet(V**3, 3)
    assert jets[(0, 3)] == 6
    assert jets[(0, 2)] == 6 * V
    assert jets[(1, 0)] == 0
    assert len(jets) == 10
    values = js.jet_values(sympy.exp(U), (0, 1), 2)
    assert values[sk.jet(2, 0)] == 1.0
    assert values[V] == 1.0
    assert js.substitute_jets(sk.jet(0, 2) * V, V**3) == 6 * V**2


def test_prolongation_closed_form():
    for n in range(4):
        for j in range(n + 1):
            closed = js.prolong_component(n - j, j)
            built = js.prolong_component_by_operators(n - j, j)
            assert sympy.expand(closed - built) == 0


def test_prolongation_base_components():
    c1, c2 = sk.algebra_param(1), sk.algebra_param(2)
    field = js.general_vector_field()
    assert sympy.expand(js.prolong_component(0, 0) - field.theta_comp) == 0
    assert sympy.expand(
        js.prolong_component(0, 1) -
        (-c1 * sk.jet(0, 1) - c2 - 2 * sk.phi(2) * V)) == 0
    assert sympy.expand(
        js.characteristic() -
        (field.theta_comp - sk.phi(0) * sk.jet(1, 0) -
         field.eta_comp * sk.jet(0, 1))) == 0


def test_relative_invariant_infinitesimally():
    # pr Q(W) = (p1 - 2 c1) W for W = 2f - 2v f_v + v^2 f_vv
    W = 2 * F - 2 * V * sk.jet(0, 1) + V**2 * sk.jet(0, 2)
    image = js.prolongation_apply(W)
    factor = sympy.cancel(image / W)
    assert sympy.expand(factor - (sk.phi(1) - 2 * sk.algebra_param(1))) == 0


def test_algebra_generators():
    generators = js.algebra_generators()
    assert set(generators) == set(["c0", "c1", "c2", "c3", "phi"])
    assert generators['c0']['tau'] == 1
    assert generators['c3']['xi'] == 1
    assert generators['c3']['theta'] == 0


def test_require_jets():
    js.require_jets({(0, 0): 1, (1, 0): 0, (0, 1): 2}, 1)
    with pytest.raises(exception.MissingJet):
        js.require_jets({(0, 0): 1}, 1)


def test_jacobian_entries():
    assert js.jacobian_coordinates(1) == [U, V, F, sk.jet(1, 0), sk.jet(0, 1)]
    assert js.jacobian_entries([F * V], 1) == [[0, F, V, 0, 0]]
