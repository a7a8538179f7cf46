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

from invforge import exception
from invforge import jetspace as js
from invforge import movingframe as mf
from invforge import symkernel as sk
from invforge.exprparse import parse

V = sk.V


@pytest.mark.parametrize("f, point, tag", [
    ("u + v^2", (1, 1), mf.REGULAR),
    ("u + v^2", (0, 1), mf.SINGULAR),
    ("v^2", (0, 1), mf.ULTRA_SINGULAR),
    ("v^3", (0, 1), mf.REGULAR),
    ("exp(u)", (0, 1), mf.REGULAR),
])
def test_classify(f, point, tag):
    result = mf.classify(parse(f), point)
    assert result.tag == tag
    assert result.exact
    assert result.is_regular == (tag == mf.REGULAR)


def test_classify_threshold():
    result = mf.classify(parse("exp(u)"), (0.5, 1.0))
    assert not result.exact
    assert result.is_regular
    # W vanishes identically for f = v^2, also in floating point
    assert mf.classify(parse("v^2"), (0.25, 1.5)).tag == mf.ULTRA_SINGULAR
    assert not mf.is_regular_value(1e-12, 1.0, 1.0, 1.0, 1.0)
    assert mf.is_regular_value(2.0, 1.0, 1.0, 0.0, 0.0)


def test_solve_frame():
    frame = mf.solve_frame(2)
    assert frame.order == 2
    assert len(frame.symbols()) == 7
    W = mf.W_EXPR
    assert sk.canonical_equal(frame.value(sk.group_param(1)), W / (2 * V))
    assert sk.canonical_equal(frame.value(sk.phi(1)), W / (2 * V**2))
    assert sk.canonical_equal(
        frame.value(sk.phi(2)), W * sk.jet(0, 2) / (4 * V**2))
    assert sk.canonical_equal(frame.value(sk.phi(3)), mf.phi3_closed_form())
    with pytest.raises(exception.InvalidOrder):
        mf.solve_frame(1)


def test_normalization():
    for label, value, ok in mf.normalization_check(3):
        assert ok, "%s normalizes to %s" % (label, value)


def test_phantoms():
    for index in [(0, 0), (0, 1), (0, 2), (1, 0), (3, 0)]:
        assert mf.is_phantom(*index)
    assert not mf.is_phantom(1, 1)
    assert not mf.is_phantom(0, 3)
    invariant = mf.normalized_invariant(0, 0)
    assert invariant.phantom and invariant.expr == 1
    assert mf.normalized_invariant(2, 0).expr == 0
    with pytest.raises(exception.InvalidIndex):
        mf.normalized_invariant(-1, 2)


def test_invariant_counts():
    assert mf.non_phantom_indices(3) == [(1, 1), (0, 3), (1, 2), (2, 1)]
    assert [mf.invariant_order_count(k) for k in range(2, 7)] == \
        [1, 4, 8, 13, 19]
    with pytest.raises(exception.InvalidOrder):
        mf.invariant_order_count(1)


def test_closed_forms():
    i11 = mf.normalized_invariant(1, 1)
    assert not i11.phantom
    assert i11.order == 2
    assert sk.canonical_equal(i11.expr, mf.i11_closed_form())
    assert sk.canonical_equal(
        mf.normalized_invariant(0, 3).expr, mf.i03_closed_form())


def test_i11_is_annihilated_by_the_algebra():
    image = js.prolongation_apply(mf.i11_closed_form())
    assert sympy.cancel(sympy.together(image)) == 0


def test_invariantize():
    assert mf.invariantize(sk.F) == 1
    assert mf.invariantize(sk.jet(0, 1)) == 0
    assert sk.canonical_equal(
        mf.invariantize(sk.jet(1, 1)), mf.i11_closed_form())
    with pytest.raises(exception.FrameOrderTooLow):
        mf.invariantize(sk.jet(0, 3), mf.solve_frame(2))


@pytest.mark.parametrize("e", [
    sk.U * sk.jet(1, 1) + sk.jet(0, 2)**2 + V,
    sk.jet(2, 0) / sk.F,
    mf.i11_closed_form(),
])
def test_invariantize_is_idempotent(e):
    once = mf.invariantize(e)
    assert sk.canonical_equal(mf.invariantize(once), once)


def test_invariantize_fixes_invariants():
    i11 = mf.i11_closed_form()
    assert sk.canonical_equal(mf.invariantize(i11), i11)


def test_values_on_cubic():
    values = mf.evaluate_invariants(parse("v^3"), (0, 1),
                                    [(1, 1), (0, 3), (1, 2), (2, 1)])
    expected = {(1, 1): -6, (0, 3): 6, (1, 2): -24, (2, 1): 48}
    for index, value in expected.items():
        assert values[index] == pytest.approx(value)


@pytest.mark.parametrize("i", [2, 3])
def test_frame_display(i):
    display = mf.frame_display_check(i)
    assert display['derived_exponent'] == 4
    assert display['printed_exponent'] == 1
    assert not display['matches']
    leading = sympy.diff(mf.leading_frame_coefficients(i), sk.jet(i, 0))
    assert sk.canonical_equal(display['coefficient'], leading)
    with pytest.raises(exception.InvalidOrder):
        mf.frame_display_check(1)


def test_f20_display():
    display = mf.f20_display_check()
    assert not display['matches']
    assert display['difference'] != 0


def test_w_form():
    W = mf.w_symbol()
    assert mf.to_w_form(mf.W_EXPR) == W
    assert mf.from_w_form(W) == mf.W_EXPR
    d_v = mf.total_derivative_w(W, "v")
    assert sympy.expand(d_v - V**2 * sk.jet(0, 3)) == 0
