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
The jet space J(u, v | f) with coordinates f_ij, total derivatives and the
prolongation of the projected equivalence algebra.
"""

import sympy
from sympy import Integer, binomial

from invforge import exception
from invforge import symkernel as sk
from invforge.util import memoized

DIRECTIONS = ("u", "v")


class JetFunction(object):
    """ Differential function over u, v and the jets f_ij """

    def __init__(self, expr):
        self.expr = sympy.sympify(expr)

    @property
    def order(self):
        return sk.jet_order(self.expr)

    def __eq__(self, other):
        if not isinstance(other, JetFunction):
            return NotImplemented
        return self.expr == other.expr

    def __hash__(self):
        return hash(self.expr)

    def __repr__(self):
        return "JetFunction(%s)" % self.expr


def as_expr(e):
    if isinstance(e, JetFunction):
        return e.expr
    return sympy.sympify(e)


def _check_direction(direction):
    if direction not in DIRECTIONS:
        raise ValueError("Unknown direction '%s'" % direction)


def total_derivative(e, direction):
    _check_direction(direction)
    expr = as_expr(e)
    result = sympy.diff(expr, sk.U if direction == "u" else sk.V)
    for s in expr.free_symbols:
        info = sk.symbol_info(s)
        if info.kind == sk.JET:
            i, j = info.indices
            target = sk.jet(i + 1, j) if direction == "u" else sk.jet(i, j + 1)
        elif info.kind == sk.PHI and direction == "u":
            # phi^(k) is a function of u alone
            target = sk.phi(info.indices[0] + 1)
        else:
            continue
        result += sympy.diff(expr, s) * target
    if isinstance(e, JetFunction):
        return JetFunction(result)
    return result


def total_derivative_n(e, i, j):
    """ D_u^i D_v^j e """
    for _ in range(j):
        e = total_derivative(e, "v")
    for _ in range(i):
        e = total_derivative(e, "u")
    return e


def concrete_jet(f, max_order):
    f = sympy.sympify(f)
    assert max_order >= 0
    assert not sk.jets_of(f), "f must be free of jet symbols"
    jets = {(0, 0): f}
    for n in range(1, max_order + 1):
        for j in range(n + 1):
            i = n - j
            if i:
                jets[(i, j)] = sympy.diff(jets[(i - 1, j)], sk.U)
            else:
                jets[(i, j)] = sympy.diff(jets[(i, j - 1)], sk.V)
    return jets


def jet_bindings(f, max_order):
    return {
        sk.jet(i, j): value
        for (i, j), value in concrete_jet(f, max_order).items()
    }


def substitute_jets(e, f, max_order=None):
    """ Instantiate a differential function on a concrete nonlinearity """
    expr = as_expr(e)
    if max_order is None:
        max_order = sk.jet_order(expr)
    return sk.substitute(expr, jet_bindings(f, max_order))


def jet_values(f, point, max_order):
    """ Float values of the jets of f at (u, v) """
    u, v = point
    values = {sk.U: float(u), sk.V: float(v)}
    for (i, j), value in concrete_jet(f, max_order).items():
        values[sk.jet(i, j)] = sk.eval_numeric(value, {
            sk.U: u,
            sk.V: v
        })
    return values


#
# Equivalence algebra
#


class VectorField(object):
    """
    General element tau d_t + xi d_x + phi d_u + eta d_{u_x} + theta d_f of
    the equivalence algebra. Only (phi, eta, theta) act on (u, v, f).
    """

    def __init__(self, tau, xi, phi_comp, eta_comp, theta_comp, params):
        self.tau = tau
        self.xi = xi
        self.phi_comp = phi_comp
        self.eta_comp = eta_comp
        self.theta_comp = theta_comp
        self.params = tuple(params)

    def __repr__(self):
        return ("VectorField(phi=%s, eta=%s, theta=%s)" %
                (self.phi_comp, self.eta_comp, self.theta_comp))


@memoized
def general_vector_field():
    c0, c1, c2, c3 = [sk.algebra_param(n) for n in range(4)]
    t, x = sk.user_param("t"), sk.user_param("x")
    p0, p1, p2 = sk.phi(0), sk.phi(1), sk.phi(2)
    return VectorField(
        tau=2 * c1 * t + c0,
        xi=c1 * x + c2 * t + c3,
        phi_comp=p0,
        eta_comp=(p1 - c1) * sk.V,
        theta_comp=(p1 - 2 * c1) * sk.F - c2 * sk.V - p2 * sk.V**2,
        params=(c0, c1, c2, c3))


def algebra_generators():
    """
    Named one-parameter pieces of the general element: the constants
    c0..c3 and the function family phi. Only c1, c2 and phi act on (u,v,f).
    """
    field = general_vector_field()
    generators = {}
    for param in field.params:
        generators[param.name] = {
            "tau": field.tau.coeff(param),
            "xi": field.xi.coeff(param),
            "eta": sympy.expand(field.eta_comp).coeff(param),
            "theta": sympy.expand(field.theta_comp).coeff(param)
        }
    generators['phi'] = {
        "phi": field.phi_comp,
        "eta": sk.phi(1) * sk.V,
        "theta": sk.phi(1) * sk.F - sk.phi(2) * sk.V**2
    }
    return generators


def characteristic(field=None):
    field = field or general_vector_field()
    return (field.theta_comp - field.phi_comp * sk.jet(1, 0) -
            field.eta_comp * sk.jet(0, 1))


def _delta(a, b):
    return Integer(1) if a == b else Integer(0)


def prolong_component(i, j, field=None):
    """
    The f_ij component theta^ij of the prolongation. The closed form holds
    for the general element, other fields go through total derivatives.
    """
    if field is not None and field is not general_vector_field():
        return prolong_component_by_operators(i, j, field)
    return _prolong_closed_form(i, j)


@memoized
def _prolong_closed_form(i, j):
    assert i >= 0 and j >= 0
    c1, c2 = sk.algebra_param(1), sk.algebra_param(2)
    v, p, f = sk.V, sk.phi, sk.jet
    result = Integer(0)
    for k in range(i + 1):
        result -= (j - 1) * binomial(i, k) * p(k + 1) * f(i - k, j)
    for k in range(1, i + 1):
        result -= binomial(i, k) * (p(k) * f(i - k + 1, j) +
                                    v * p(k + 1) * f(i - k, j + 1))
    result += (j - 2) * c1 * f(i, j)
    result -= c2 * _delta(i, 0) * (_delta(j, 0) * v + _delta(j, 1))
    result -= p(i + 2) * (_delta(j, 0) * v**2 + 2 * _delta(j, 1) * v +
                          2 * _delta(j, 2))
    return sympy.expand(result)


def prolong_component_by_operators(i, j, field=None):
    """
    D_u^i D_v^j (theta - phi f_10 - eta f_01) + phi f_i+1,j + eta f_i,j+1
    """
    field = field or general_vector_field()
    result = total_derivative_n(characteristic(field), i, j)
    result += field.phi_comp * sk.jet(i + 1, j)
    result += field.eta_comp * sk.jet(i, j + 1)
    return sympy.expand(result)


def prolongation_apply(e, field=None):
    """ pr Q (e) for a differential function e """
    expr = as_expr(e)
    field = field or general_vector_field()
    result = (field.phi_comp * sympy.diff(expr, sk.U) +
              field.eta_comp * sympy.diff(expr, sk.V))
    for s in sk.jets_of(expr):
        i, j = sk.jet_indices(s)
        result += prolong_component(i, j, field) * sympy.diff(expr, s)
    return result


def require_jets(jets, max_order):
    for n in range(max_order + 1):
        for j in range(n + 1):
            if (n - j, j) not in jets:
                raise exception.MissingJet(n - j, j)


def jacobian_coordinates(order):
    """ u, v and the jets up to `order` in the fixed order """
    return [sk.U, sk.V] + sk.jet_coordinates(order)


def jacobian_entries(exprs, order):
    """ Rows of partial derivatives of `exprs` by jacobian_coordinates """
    coordinates = jacobian_coordinates(order)
    return [[sympy.diff(as_expr(e), s) for s in coordinates] for e in exprs]
