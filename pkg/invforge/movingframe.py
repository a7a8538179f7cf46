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
Relative invariants, regularity strata and the moving frame of the regular
stratum W != 0 with the cross-section

    u~ = 0, v~ = 1, f~ = 1, f~_01 = 0, f~_02 = 0, f~_i0 = 0 (i >= 1).

Frame values and normalized invariants are computed over an internal
stand-in symbol for W, where all denominators are monomials, and are
expanded back to jets on the way out.
"""

import sympy
from sympy import Integer, binomial

from invforge import exception
from invforge import groupaction as ga
from invforge import jetspace as js
from invforge import symkernel as sk
from invforge.util import memoized

REGULAR = "regular"
SINGULAR = "singular"
ULTRA_SINGULAR = "ultra-singular"

REGULARITY_THRESHOLD = 1e-8

# exponent of v in the printed leading coefficient W/(2v^k) of phi^(i+2)
PRINTED_FRAME_EXPONENT = 1

_W = sympy.Dummy("W")


def relative_W(jets, v=sk.V):
    return 2 * jets[(0, 0)] - 2 * v * jets[(0, 1)] + v**2 * jets[(0, 2)]


def relative_S(jets, v=sk.V):
    return 2 * jets[(1, 0)] - v * jets[(1, 1)]


W_EXPR = relative_W(ga.formal_jets(2))
S_EXPR = relative_S(ga.formal_jets(2))


def _to_w(e):
    return e.xreplace({
        sk.F: (_W + 2 * sk.V * sk.jet(0, 1) - sk.V**2 * sk.jet(0, 2)) / 2
    })


def _from_w(e):
    return sympy.sympify(e).xreplace({_W: W_EXPR})


#
# Regularity strata
#


class RegularityClass(object):

    def __init__(self, tag, W, S, exact):
        assert tag in (REGULAR, SINGULAR, ULTRA_SINGULAR)
        self.tag = tag
        self.W = W
        self.S = S
        self.exact = exact

    @property
    def is_regular(self):
        return self.tag == REGULAR

    def __repr__(self):
        return "RegularityClass(%s, W=%s, S=%s)" % (self.tag, self.W, self.S)


def _value_at(e, point):
    u, v = point
    value = sympy.sympify(e).xreplace({sk.U: u, sk.V: v})
    if value.is_Rational:
        return value, True
    return sk.eval_numeric(e, {sk.U: u, sk.V: v}), False


def classify(f, point):
    """
    Exact zero tests when the jets evaluate to rationals, otherwise the
    scale-aware threshold |W| > 1e-8 (1 + |f| + |v f_v| + |v^2 f_vv|).
    """
    u, v = [sympy.sympify(x) if not isinstance(x, float) else x
            for x in point]
    jets = js.concrete_jet(f, 2)
    values = {}
    exact = True
    for key, expr in jets.items():
        values[key], is_exact = _value_at(expr, (u, v))
        exact = exact and is_exact
    exact = exact and not isinstance(v, float)
    if not exact:
        values = {key: float(x) for key, x in values.items()}
        v = float(v)
    W = relative_W(values, v)
    S = relative_S(values, v)
    if exact:
        w_zero, s_zero = W == 0, S == 0
    else:
        w_scale = (1 + abs(values[(0, 0)]) + abs(v * values[(0, 1)]) +
                   abs(v**2 * values[(0, 2)]))
        s_scale = 1 + abs(values[(1, 0)]) + abs(v * values[(1, 1)])
        w_zero = abs(W) <= REGULARITY_THRESHOLD * w_scale
        s_zero = abs(S) <= REGULARITY_THRESHOLD * s_scale
    if not w_zero:
        tag = REGULAR
    elif not s_zero:
        tag = SINGULAR
    else:
        tag = ULTRA_SINGULAR
    return RegularityClass(tag, W, S, exact)


def is_regular_value(W, f, v, f_v, f_vv):
    scale = 1 + abs(f) + abs(v * f_v) + abs(v**2 * f_vv)
    return abs(W) > REGULARITY_THRESHOLD * scale


#
# Moving frame
#


@memoized
def _base_frame_w():
    v, f_vv = sk.V, sk.jet(0, 2)
    return {
        sk.group_param(1): _W / (2 * v),
        sk.group_param(2): sk.jet(0, 1) - v * f_vv,
        sk.phi(0): Integer(0),
        sk.phi(1): _W / (2 * v**2),
        sk.phi(2): _W * f_vv / (4 * v**2)
    }


@memoized
def _phi_w(k):
    """ phi^(k) from f~_{k-2,0} = 0, which is linear in it """
    base = _base_frame_w()
    if k <= 2:
        return base[sk.phi(k)]
    target = sk.phi(k)
    expr = _to_w(ga.transformed_jet_formula(k - 2, 0)).xreplace(
        _frame_bindings_w(k - 1))
    coeff = sympy.cancel(sympy.diff(expr, target))
    if coeff == 0:
        raise exception.FrameUnsolvable(k)
    return sympy.cancel(-expr.xreplace({target: 0}) / coeff)


def _frame_bindings_w(max_phi):
    bindings = dict(_base_frame_w())
    for k in range(3, max_phi + 1):
        bindings[sk.phi(k)] = _phi_w(k)
    return bindings


@memoized
def _jet_image_w(i, j):
    """ f~_ij with the frame substituted, no phantom shortcuts """
    expr = _to_w(ga.transformed_jet_formula(i, j)).xreplace(
        _frame_bindings_w(i + 2))
    return sympy.cancel(expr)


class Frame(object):

    def __init__(self, values, order):
        self.values = values
        self.order = order

    def value(self, s):
        return self.values[s]

    def symbols(self):
        return sk.ordered_symbols(self.values.keys())

    def bindings(self):
        return dict(self.values)

    def __repr__(self):
        return "Frame(order=%d)" % self.order


@memoized
def solve_frame(max_order):
    """
    Frame normalizing the jets of order <= max_order: C1, C2 and phi up to
    phi^(max_order + 2).
    """
    if max_order < 2:
        raise exception.InvalidOrder(max_order, "frame order must be >= 2")
    values = {
        s: _from_w(value)
        for s, value in _frame_bindings_w(max_order + 2).items()
    }
    return Frame(values, max_order)


def normalization_check(max_order=3):
    """
    Substitutes the frame into the transformed point and jets and compares
    them with the normalization constants. Returns (label, value, ok).
    """
    frame_w = _frame_bindings_w(max_order + 2)
    _, v_new, _ = ga.act_point(ga.formal_element(), (sk.U, sk.V, sk.F))
    results = [("u", sympy.cancel(_to_w(sk.phi(0)).xreplace(frame_w)),
                Integer(0)),
               ("v", sympy.cancel(v_new.xreplace(frame_w)), Integer(1))]
    for (i, j), expected in [((0, 0), 1), ((0, 1), 0), ((0, 2), 0)]:
        results.append(("f%d%d" % (i, j), _jet_image_w(i, j),
                        Integer(expected)))
    for i in range(1, max_order + 1):
        results.append(("f%d0" % i, _jet_image_w(i, 0), Integer(0)))
    return [(label, _from_w(value), value == expected)
            for label, value, expected in results]


#
# Normalized invariants
#


def is_phantom(i, j):
    return (i, j) in ((0, 0), (0, 1), (0, 2)) or (i >= 1 and j == 0)


def phantom_value(i, j):
    assert is_phantom(i, j)
    return Integer(1) if (i, j) == (0, 0) else Integer(0)


def non_phantom_indices(max_order):
    indices = [(1, 1)] if max_order >= 2 else []
    for n in range(3, max_order + 1):
        indices.extend((n - j, j) for j in range(n, 0, -1))
    return indices


def invariant_order_count(k):
    if k < 2:
        raise exception.InvalidOrder(k, "invariants start at order 2")
    return len(non_phantom_indices(k))


class Invariant(object):

    def __init__(self, index, expr, phantom):
        self.index = index
        self.expr = expr
        self.phantom = phantom

    @property
    def order(self):
        return sk.jet_order(self.expr) if not self.phantom else sum(
            self.index)

    @property
    def symbol(self):
        return sk.invariant_symbol(*self.index)

    def __repr__(self):
        return "Invariant(I%d%d, phantom=%s)" % (self.index[0],
                                                 self.index[1], self.phantom)


def _invariant_w(i, j):
    if is_phantom(i, j):
        return phantom_value(i, j)
    return _jet_image_w(i, j)


@memoized
def normalized_invariant(i, j):
    if i < 0 or j < 0:
        raise exception.InvalidIndex(i, j, "indices must be non-negative")
    if is_phantom(i, j):
        return Invariant((i, j), phantom_value(i, j), True)
    return Invariant((i, j), _from_w(_jet_image_w(i, j)), False)


def invariantize(e, frame=None):
    expr = js.as_expr(e)
    order = sk.jet_order(expr)
    if frame is None:
        frame = solve_frame(max(order, 2))
    if order > frame.order:
        raise exception.FrameOrderTooLow(frame.order, order)
    bindings = {sk.U: Integer(0), sk.V: Integer(1)}
    for s in sk.jets_of(expr):
        bindings[s] = _invariant_w(*sk.jet_indices(s))
    result = expr.xreplace(bindings)
    if sk.is_rational_expr(result):
        result = sympy.cancel(result)
    return _from_w(result)


def evaluate_invariants(f, point, indices):
    max_order = max([sum(index) for index in indices] + [2])
    values = js.jet_values(f, point, max_order)
    return {
        index: sk.eval_numeric(normalized_invariant(*index).expr, values)
        for index in indices
    }


#
# Cross-checks against published closed forms
#


def frame_display_check(i):
    """
    Exponent k of the leading coefficient W/(2 v^k) of f_i0 in the solved
    phi^(i+2), next to the printed exponent.
    """
    if i < 2:
        raise exception.InvalidOrder(i, "display check needs i >= 2")
    coeff = sympy.cancel(sympy.diff(_phi_w(i + 2), sk.jet(i, 0)))
    ratio = sympy.cancel(2 * coeff / _W)
    derived = None
    for k in range(0, 4 * i + 8):
        if sympy.cancel(ratio * sk.V**k) == 1:
            derived = k
            break
    return {
        "i": i,
        "coefficient": _from_w(coeff),
        "derived_exponent": derived,
        "printed_exponent": PRINTED_FRAME_EXPONENT,
        "matches": derived == PRINTED_FRAME_EXPONENT
    }


def printed_f20():
    """ The second u-derivative of f~ as it is usually displayed """
    C1, v = sk.group_param(1), sk.V
    p1, p2 = sk.phi(1), sk.phi(2)
    B = p2 / p1

    def d_u(e):
        return js.total_derivative(e, "u")

    f, f_u, f_v = sk.jet(0, 0), sk.jet(1, 0), sk.jet(0, 1)
    return (1 / (C1**2 * p1)) * (
        sk.jet(2, 0) - B * (f_u - 2 * v * sk.jet(1, 1)) +
        B**2 * v**2 * sk.jet(0, 2) + d_u(B) * (f - v * f_v) -
        p1**2 * d_u((1 / p1) * d_u(d_u(1 / p1))) * v**2)


def f20_display_check():
    derived = ga.transformed_jet_formula(2, 0)
    printed = printed_f20()
    difference = sympy.factor(sympy.cancel(derived - printed))
    return {
        "derived": derived,
        "printed": printed,
        "difference": difference,
        "matches": difference == 0
    }


def phi3_closed_form():
    f, f_v, f_vv = sk.jet(0, 0), sk.jet(0, 1), sk.jet(0, 2)
    v = sk.V
    return W_EXPR / (4 * v**4) * (2 * sk.jet(1, 0) +
                                  (f - v * f_v + v**2 * f_vv) * f_vv)


def i11_closed_form():
    v, f_u, f_uv, f_vv = sk.V, sk.jet(1, 0), sk.jet(1, 1), sk.jet(0, 2)
    return -2 * v**2 * (4 * f_u - 2 * v * f_uv + W_EXPR * f_vv) / W_EXPR**2


def i03_closed_form():
    return 2 * sk.V**3 * sk.jet(0, 3) / W_EXPR


def leading_frame_coefficients(i):
    """
    Top-order part of phi^(i+2): binom(i, i') W/(2v^4) (-v f_vv/2)^(i-i')
    """
    result = 0
    for ip in range(i + 1):
        result += binomial(i, ip) * W_EXPR / (2 * sk.V**4) * (
            -sk.V * sk.jet(0, 2) / 2)**(i - ip) * sk.jet(ip, i - ip)
    return result


#
# Stand-in coordinates (v, w = W, jets other than f) for exact work
#


def to_w_form(e):
    e = _to_w(sympy.sympify(e))
    if sk.is_rational_expr(e):
        e = sympy.cancel(e)
    return e


def from_w_form(e):
    return _from_w(e)


def invariant_w_form(i, j):
    return _invariant_w(i, j)


def total_derivative_w(e, direction):
    v = sk.V
    if direction == "u":
        d_w = 2 * sk.jet(1, 0) - 2 * v * sk.jet(1, 1) + v**2 * sk.jet(1, 2)
    else:
        d_w = v**2 * sk.jet(0, 3)
    return js.total_derivative(e, direction) + sympy.diff(e, _W) * d_w


def w_symbol():
    return _W
