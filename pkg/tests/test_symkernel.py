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
from invforge import symkernel as sk

U, V = sk.U, sk.V


def test_jet_names():
    assert sk.jet(0, 0).name == "f"
    assert sk.jet(1, 2).name == "f_uvv"
    assert sk.parse_jet_name("f_uvv") == (1, 2)
    assert sk.parse_jet_name("f") == (0, 0)
    assert sk.parse_jet_name("f_vu") is None
    assert sk.parse_jet_name("g") is None
    assert sk.jet(2, 1) is sk.jet(2, 1)


def test_symbol_order():
    symbols = [sk.invariant_symbol(1, 1), sk.phi(2), sk.jet(0, 1), V,
               sk.group_param(1), U, sk.jet(1, 0)]
    assert sk.ordered_symbols(symbols) == [
        U, V, sk.jet(0, 1), sk.jet(1, 0), sk.group_param(1), sk.phi(2),
        sk.invariant_symbol(1, 1)
    ]
    assert sk.jet_coordinates(1) == [sk.jet(0, 0), sk.jet(1, 0), sk.jet(0, 1)]


def test_jet_order():
    assert sk.jet_order(sk.jet(2, 0) * sk.jet(0, 1) + U) == 2
    assert sk.jet_order(U * V) == 0


def test_substitute():
    e = sk.substitute(U * sk.jet(0, 1), {sk.jet(0, 1): 3 * V})
    assert sympy.expand(e - 3 * U * V) == 0
    with pytest.raises(exception.CyclicSubstitution):
        sk.substitute(U + V, {U: V, V: U})


def test_cross_multiply():
    num, den = sk.cross_multiply(1 / U + 1 / V)
    assert sympy.expand(num - (U + V)) == 0
    assert sympy.expand(den - U * V) == 0
    with pytest.raises(exception.DivisionByZeroPolynomial):
        sk.cross_multiply(U / (V - V))


def test_rational_normal_form():
    assert sk.rational_normal_form(2 * U / (4 * U * V)) == \
        sk.rational_normal_form(1 / (2 * V))
    assert sk.rational_normal_form((U**2 - 1) / (U - 1)) == \
        sk.rational_normal_form(U + 1)
    assert sk.rational_normal_form(U / V) != sk.rational_normal_form(V / U)
    with pytest.raises(exception.UnsupportedForm):
        sk.rational_normal_form(sympy.exp(U))


@given(integers(-9, 9), integers(-9, 9), integers(1, 9))
@settings(max_examples=25, deadline=None)
def test_normal_form_unique(a, b, c):
    lhs = (a * U + b * V) * (U + c) / (U + c)
    rhs = a * U + b * V
    assert sk.rational_normal_form(lhs) == sk.rational_normal_form(rhs)
    assert hash(sk.rational_normal_form(lhs)) == \
        hash(sk.rational_normal_form(rhs))


def test_canonical_equal():
    assert sk.canonical_equal((U**2 - V**2) / (U - V), U + V)
    assert not sk.canonical_equal(U * V, U * V + 1)
    assert sk.canonical_equal(
        sympy.exp(U) * sympy.exp(V), sympy.exp(U + V))
    assert sk.canonical_equal(
        sympy.exp(U) / U, sympy.exp(U) * V / (U * V), mode="exact")


def test_probabilistic_equal():
    verdict = sk.probabilistic_equal((U + V)**2, U**2 + 2 * U * V + V**2)
    assert verdict.equal
    assert verdict.points == 20
    assert 0 < verdict.bound < 1
    assert not sk.probabilistic_equal(U * V, V * U + U).equal
    with pytest.raises(AssertionError):
        sk.probabilistic_equal(U, U, n_points=5)


def test_eval_numeric():
    assert sk.eval_numeric(U * V + 1, {U: 2, V: 3}) == 7.0
    assert sk.eval_numeric(sympy.Integer(4), {}) == 4.0
    with pytest.raises(exception.UnboundSymbol):
        sk.eval_numeric(U + V, {U: 1})
    with pytest.raises(exception.NumericDomain):
        sk.eval_numeric(sympy.log(U), {U: -1.0})
    with pytest.raises(exception.NumericDomain):
        sk.eval_numeric(1 / U, {U: 0.0})
