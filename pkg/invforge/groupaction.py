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
Equivalence group of the class u_t = u_xx + f(u, u_x):

    t~ = C1^2 t + C0, x~ = C1 x + C1 C2 t + C3, u~ = phi(u),
    v~ = phi' v / C1, f~ = (phi' f - C2 phi' v - phi'' v^2) / C1^2

and its projection to (u, v, f) acting on jets.
"""

import random
from itertools import combinations
from math import factorial

import sympy
from sympy import Integer, Rational

from invforge import exception
from invforge import jetspace as js
from invforge import schemas
from invforge import symkernel as sk
from invforge.util import memoized

SYMBOLIC = "symbolic"
NUMERIC = "numeric"
ELEMENT_SCHEMA = "group-element"


class FormalPhi(object):
    """ phi held as the formal derivative symbols phi^(k) at u """

    def derivative(self, k, at=None):
        del at  # the symbols already denote values at the point
        return sk.phi(k)

    def derivatives(self, n, at=None):
        return [self.derivative(k, at) for k in range(n + 1)]

    def function(self, u):
        return sympy.Function("varphi")(u)

    def __eq__(self, other):
        return isinstance(other, FormalPhi)

    def __hash__(self):
        return hash("FormalPhi")

    def __repr__(self):
        return "FormalPhi()"


class TaylorPhi(object):
    """ phi(u) = sum a_k (u - anchor)^k, exact or float coefficients """

    def __init__(self, anchor, coeffs):
        self.anchor = anchor
        self.coeffs = list(coeffs)
        while len(self.coeffs) > 2 and self.coeffs[-1] == 0:
            self.coeffs.pop()
        assert len(self.coeffs) >= 2

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def derivative(self, k, at=None):
        at = self.anchor if at is None else at
        shift = at - self.anchor
        result = 0
        for n in range(self.degree, k - 1, -1):
            result = result * shift + self.coeffs[n] * (factorial(n) //
                                                        factorial(n - k))
        return result

    def derivatives(self, n, at=None):
        return [self.derivative(k, at) for k in range(n + 1)]

    def function(self, u):
        return self.derivative(0, u)

    def recentered(self, anchor):
        shift = anchor - self.anchor
        coeffs = []
        for m in range(self.degree + 1):
            coeffs.append(
                sum(self.coeffs[n] * int(sympy.binomial(n, m)) * shift**(n - m)
                    for n in range(m, self.degree + 1)))
        return TaylorPhi(anchor, coeffs)

    def compose(self, inner):
        """ self(inner(u)), exact polynomial composition """
        outer = self.recentered(inner.coeffs[0])
        tail = [0] + inner.coeffs[1:]
        result = [outer.coeffs[-1]]
        for coeff in reversed(outer.coeffs[:-1]):
            result = _poly_mul(result, tail)
            result[0] = result[0] + coeff
        return TaylorPhi(inner.anchor, result)

    def inverse(self):
        """ Series reversion around phi(anchor), truncated to the degree """
        a = self.coeffs
        b = [0, 1 / a[1] if isinstance(a[1], float) else Rational(1) / a[1]]
        for n in range(2, self.degree + 1):
            partial = b + [0] * (n - len(b) + 1)
            power = list(partial)
            acc = 0
            for k in range(2, n + 1):
                power = _poly_mul(power, partial)[:n + 1]
                if k < len(a) and n < len(power):
                    acc += a[k] * power[n]
            b.append(-acc * b[1])
        return TaylorPhi(a[0], [self.anchor] + b[1:])

    def __eq__(self, other):
        return (isinstance(other, TaylorPhi) and self.anchor == other.anchor
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.anchor, tuple(self.coeffs)))

    def __repr__(self):
        return "TaylorPhi(anchor=%s, coeffs=%s)" % (self.anchor, self.coeffs)


def _poly_mul(p, q):
    result = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            result[i + j] = result[i + j] + a * b
    return result


def _to_json_number(value):
    if isinstance(value, float):
        return repr(value)
    value = sympy.sympify(value)
    if value.is_Rational:
        return "%d/%d" % (value.p, value.q) if value.q != 1 else str(value.p)
    return str(value)


def _from_json_number(text, mode):
    if mode == NUMERIC:
        return float(Rational(text))
    return Rational(text)


class GroupElement(object):

    def __init__(self, C0, C1, C2, C3, phi, mode=SYMBOLIC):
        assert mode in (SYMBOLIC, NUMERIC)
        self.C0 = C0
        self.C1 = C1
        self.C2 = C2
        self.C3 = C3
        self.phi = phi
        self.mode = mode
        self._validate()

    def _validate(self):
        if self.C1 == 0:
            raise exception.SingularGroupElement("C1 = 0")
        if isinstance(self.phi, TaylorPhi) and self.phi.coeffs[1] == 0:
            raise exception.SingularGroupElement(
                "phi'(%s) = 0" % self.phi.anchor)
        values = [self.C0, self.C1, self.C2, self.C3]
        if isinstance(self.phi, TaylorPhi):
            values += [self.phi.anchor] + self.phi.coeffs
        if self.mode == NUMERIC:
            assert isinstance(self.phi, TaylorPhi)
            assert all(isinstance(x, (int, float)) for x in values)
        else:
            assert not any(isinstance(x, float) for x in values)

    @property
    def is_formal(self):
        return isinstance(self.phi, FormalPhi)

    def parameters(self, u=None, order=2):
        """ Bindings of C1, C2 and phi^(k)(u), k <= order """
        bindings = {sk.group_param(1): self.C1, sk.group_param(2): self.C2}
        for k, value in enumerate(self.phi.derivatives(order, u)):
            bindings[sk.phi(k)] = value
        return bindings

    def to_json(self):
        data = {
            "C%d" % n: _to_json_number(getattr(self, "C%d" % n))
            for n in range(4)
        }
        data['schema'] = {
            "name": ELEMENT_SCHEMA,
            "version": schemas.SCHEMA_VERSION
        }
        if isinstance(self.phi, TaylorPhi):
            data['phi'] = {
                "anchor": _to_json_number(self.phi.anchor),
                "coeffs": [_to_json_number(c) for c in self.phi.coeffs]
            }
        else:
            data['phi'] = "formal"
        return data

    @classmethod
    def from_json(cls, data, mode=SYMBOLIC):
        if "schema" in data:
            schemas.check_compatible(data['schema'].get("version", ""),
                                     ELEMENT_SCHEMA)
        phi = data['phi']
        if phi == "formal":
            phi = FormalPhi()
            constants = [sk.group_param(n) for n in range(4)]
        else:
            phi = TaylorPhi(
                _from_json_number(phi['anchor'], mode),
                [_from_json_number(c, mode) for c in phi['coeffs']])
            constants = [
                _from_json_number(data["C%d" % n], mode) for n in range(4)
            ]
        return cls(*constants, phi=phi, mode=mode)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and \
            self.to_json() == other.to_json() and self.mode == other.mode

    def __hash__(self):
        return hash(repr(sorted(self.to_json().items())))

    def __repr__(self):
        return "GroupElement(%s)" % self.to_json()


def formal_element():
    return GroupElement(*[sk.group_param(n) for n in range(4)],
                        phi=FormalPhi(),
                        mode=SYMBOLIC)


def identity(mode=SYMBOLIC):
    if mode == NUMERIC:
        return GroupElement(0.0, 1.0, 0.0, 0.0, TaylorPhi(0.0, [0.0, 1.0]),
                            NUMERIC)
    one, zero = Integer(1), Integer(0)
    return GroupElement(zero, one, zero, zero, TaylorPhi(zero, [zero, one]))


def scaling(C1, mode=SYMBOLIC):
    if mode == NUMERIC:
        return GroupElement(0.0, float(C1), 0.0, 0.0,
                            TaylorPhi(0.0, [0.0, 1.0]), NUMERIC)
    return GroupElement(
        Integer(0), sympy.sympify(C1), Integer(0), Integer(0),
        TaylorPhi(Integer(0), [Integer(0), Integer(1)]))


def _phi_at(g, u, order):
    values = g.phi.derivatives(order, u)
    if values[1] == 0:
        raise exception.SingularGroupElement("phi'(%s) = 0" % u)
    return values


def act_point(g, point):
    """ (u, v, f) -> (u~, v~, f~) """
    u, v, f = point
    p0, p1, p2 = _phi_at(g, u, 2)
    u_new = p0
    v_new = p1 * v / g.C1
    f_new = (p1 * f - g.C2 * p1 * v - p2 * v**2) / g.C1**2
    if g.mode == SYMBOLIC:
        u_new, v_new, f_new = [sympy.sympify(x) for x in (u_new, v_new, f_new)]
    return (u_new, v_new, f_new)


class DiffOperator(object):
    """ a D_u + b D_v """

    def __init__(self, a, b):
        self.a = sympy.sympify(a)
        self.b = sympy.sympify(b)

    def __call__(self, e):
        result = 0
        if self.a != 0:
            result += self.a * js.total_derivative(e, "u")
        if self.b != 0:
            result += self.b * js.total_derivative(e, "v")
        return sympy.expand(result)

    @property
    def coefficients(self):
        return (self.a, self.b)

    def __eq__(self, other):
        return isinstance(other, DiffOperator) and \
            sk.canonical_equal(self.a, other.a) and \
            sk.canonical_equal(self.b, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return "DiffOperator(%s, %s)" % (self.a, self.b)


def implicit_diff_ops(g):
    """ D_u~ = (1/phi') D_u - (phi''/phi'^2) v D_v, D_v~ = (C1/phi') D_v """
    if g.mode == NUMERIC:
        raise ValueError("Implicit differentiation needs a symbolic element")
    p0, p1, p2 = _phi_at(g, sk.U, 2)
    del p0
    return (DiffOperator(1 / p1, -p2 * sk.V / p1**2),
            DiffOperator(0, g.C1 / p1))


@memoized
def transformed_jet_formula(i, j):
    """
    f~_ij = D_u~^i D_v~^j F for the formal element, an expanded Laurent
    polynomial in C1 and phi'.
    """
    if (i, j) == (0, 0):
        C1, C2 = sk.group_param(1), sk.group_param(2)
        p1, p2 = sk.phi(1), sk.phi(2)
        return sympy.expand(
            (p1 * sk.F - C2 * p1 * sk.V - p2 * sk.V**2) / C1**2)
    d_u, d_v = implicit_diff_ops(formal_element())
    if i == 0:
        return d_v(transformed_jet_formula(0, j - 1))
    return d_u(transformed_jet_formula(i - 1, j))


def _jet_symbol_bindings(jets, max_order):
    js.require_jets(jets, max_order)
    return {
        sk.jet(i, j): value
        for (i, j), value in jets.items() if i + j <= max_order
    }


def transform_jet(g, jets, max_order, point=None, normalize=True):
    """
    Transformed jets f~_ij, i + j <= max_order. `jets` maps (i, j) to
    values or expressions at `point` = (u, v), default the formal (u, v).
    """
    u, v = point if point is not None else (sk.U, sk.V)
    bindings = _jet_symbol_bindings(jets, max_order)
    result = {}
    if g.mode == NUMERIC:
        values = {sk.V: float(v)}
        values.update({s: float(x) for s, x in bindings.items()})
        values.update(
            {s: float(x)
             for s, x in g.parameters(u, max_order + 2).items()})
        for n in range(max_order + 1):
            for j in range(n + 1):
                result[(n - j, j)] = sk.eval_numeric(
                    transformed_jet_formula(n - j, j), values)
        return result

    if g.is_formal:
        parameters = {}
    else:
        parameters = g.parameters(u, max_order + 2)
    parameters[sk.V] = v
    parameters.update(bindings)
    parameters = {k: x for k, x in parameters.items() if k != x}
    for n in range(max_order + 1):
        for j in range(n + 1):
            value = transformed_jet_formula(n - j, j).xreplace(parameters)
            if normalize and sk.is_rational_expr(value):
                value = sympy.cancel(value)
            result[(n - j, j)] = value
    return result


def formal_jets(max_order):
    return {(n - j, j): sk.jet(n - j, j)
            for n in range(max_order + 1) for j in range(n + 1)}


#
# Group law
#


def _check_modes(g1, g2):
    if g1.mode != g2.mode or g1.is_formal or g2.is_formal:
        raise ValueError("compose/inverse need concrete elements of "
                         "the same mode")


def compose(g1, g2):
    """ The element acting as g1 after g2 """
    _check_modes(g1, g2)
    return GroupElement(
        C0=g1.C1**2 * g2.C0 + g1.C0,
        C1=g1.C1 * g2.C1,
        C2=g2.C2 + g1.C2 * g2.C1,
        C3=g1.C1 * g2.C3 + g1.C1 * g1.C2 * g2.C0 + g1.C3,
        phi=g1.phi.compose(g2.phi),
        mode=g1.mode)


def inverse(g):
    _check_modes(g, g)
    C1 = 1 / g.C1 if g.mode == NUMERIC else Integer(1) / g.C1
    C0 = -g.C0 * C1**2
    return GroupElement(
        C0=C0,
        C1=C1,
        C2=-g.C2 * C1,
        C3=-g.C3 * C1 - g.C2 * C0,
        phi=g.phi.inverse(),
        mode=g.mode)


def random_element(seed, mode=NUMERIC, taylor_degree=6, anchor=0):
    """
    C1 in +-[1/2, 2], C0, C2, C3 in [-2, 2]; phi with phi'(anchor) in
    +-[1/2, 2] and the other coefficients in [-1, 1]. Exact elements draw
    from the quarter grid of the same ranges.
    """
    if mode == NUMERIC and taylor_degree < 2:
        raise exception.InvalidOrder(taylor_degree,
                                     "Taylor degree must be at least 2")
    rng = random.Random(seed)
    if mode == NUMERIC:

        def signed(low, high):
            return rng.choice((-1.0, 1.0)) * rng.uniform(low, high)

        def uniform(low, high):
            return rng.uniform(low, high)

        anchor = float(anchor)
    else:

        def signed(low, high):
            return rng.choice((-1, 1)) * Rational(
                rng.randint(int(4 * low), int(4 * high)), 4)

        def uniform(low, high):
            return Rational(rng.randint(int(4 * low), int(4 * high)), 4)

        anchor = sympy.sympify(anchor)
    C1 = signed(0.5, 2)
    C0, C2, C3 = uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)
    coeffs = [uniform(-1, 1), signed(0.5, 2)]
    coeffs += [uniform(-1, 1) for _ in range(max(taylor_degree, 1) - 1)]
    return GroupElement(C0, C1, C2, C3, TaylorPhi(anchor, coeffs), mode)


#
# Relative invariants under the formal element
#


def relative_W_expr(jets):
    return 2 * jets[(0, 0)] - 2 * sk.V * jets[(0, 1)] + \
        sk.V**2 * jets[(0, 2)]


def relative_S_expr(jets):
    return 2 * jets[(1, 0)] - sk.V * jets[(1, 1)]


def transform_relative_W(g=None):
    """ W~ in terms of the original jets, v~ = phi' v / C1 """
    g = g or formal_element()
    jets = transform_jet(g, formal_jets(2), 2, normalize=False)
    _, v_new, _ = act_point(g, (sk.U, sk.V, sk.F))
    return sympy.expand(2 * jets[(0, 0)] - 2 * v_new * jets[(0, 1)] +
                        v_new**2 * jets[(0, 2)])


def transform_relative_S(g=None):
    g = g or formal_element()
    jets = transform_jet(g, formal_jets(2), 2, normalize=False)
    _, v_new, _ = act_point(g, (sk.U, sk.V, sk.F))
    return sympy.expand(2 * jets[(1, 0)] - v_new * jets[(1, 1)])


def relative_W_law():
    """ W~ = phi' W / C1^2, which reduces to W / C1^2 only for phi' = 1 """
    C1, p1 = sk.group_param(1), sk.phi(1)
    W = relative_W_expr(formal_jets(2))
    return sk.canonical_equal(transform_relative_W(), p1 * W / C1**2)


def relative_S_law():
    """ S~ = S / C1^2 + (phi'' / phi') W / C1^2 """
    C1, p1, p2 = sk.group_param(1), sk.phi(1), sk.phi(2)
    jets = formal_jets(2)
    expected = (relative_S_expr(jets) +
                p2 / p1 * relative_W_expr(jets)) / C1**2
    return sk.canonical_equal(transform_relative_S(), expected)


#
# Class preservation
#


class PointMap(object):
    """
    A candidate transformation t~ = T, x~ = X, u~ = U of (t, x, u) with
    optional explicit v~ and f~ components in (t, x, u, v, f).
    """

    def __init__(self, T, X, U, v_comp=None, f_comp=None):
        self.T = sympy.sympify(T)
        self.X = sympy.sympify(X)
        self.U = sympy.sympify(U)
        self.v_comp = v_comp
        self.f_comp = f_comp

    @classmethod
    def from_element(cls, g):
        t, x = sk.user_param("t"), sk.user_param("x")
        return cls(
            T=g.C1**2 * t + g.C0,
            X=g.C1 * x + g.C1 * g.C2 * t + g.C3,
            U=g.phi.function(sk.U))


def _formal_phi_to_symbols(e):
    varphi = sympy.Function("varphi")
    replacements = {}
    for d in e.atoms(sympy.Derivative):
        if d.expr.func == varphi:
            replacements[d] = sk.phi(d.derivative_count)
    e = e.xreplace(replacements)
    return e.xreplace({varphi(sk.U): sk.phi(0)})


def check_class_preservation(g, f):
    """
    True iff the map takes u_t = u_xx + f to an equation of the class:
    T and X are admissible for evolution equations (T = T(t), X = X(t, x),
    T_t = X_x^2), v~ is the prolonged derivative and f~ obtained from the
    reduced determining equation depends on (u~, v~) only.
    """
    pmap = g if isinstance(g, PointMap) else PointMap.from_element(g)
    t, x, u, v = sk.user_param("t"), sk.user_param("x"), sk.U, sk.V
    f = sympy.sympify(f)
    T, X, Um = pmap.T, pmap.X, pmap.U

    def is_zero(e):
        return sk.canonical_equal(_formal_phi_to_symbols(e), 0)

    for e in (sympy.diff(T, x), sympy.diff(T, u), sympy.diff(X, u),
              sympy.diff(T, t) - sympy.diff(X, x)**2):
        if not is_zero(e):
            return False

    Xx, Xt = sympy.diff(X, x), sympy.diff(X, t)
    Uu, Ux, Ut = sympy.diff(Um, u), sympy.diff(Um, x), sympy.diff(Um, t)
    v_prolonged = (Ux + Uu * v) / Xx
    if pmap.v_comp is not None:
        if not is_zero(sympy.sympify(pmap.v_comp) - v_prolonged):
            return False
    f_new = (Uu * f + Ut - (Xt / Xx) * (Ux + Uu * v) - sympy.diff(Um, x, 2) -
             2 * sympy.diff(Um, x, u) * v - sympy.diff(Um, u, 2) * v**2)
    f_new = f_new / sympy.diff(T, t)
    if pmap.f_comp is not None:
        f_given = sk.substitute(sympy.sympify(pmap.f_comp), {sk.F: f})
        if not is_zero(f_given - f_new):
            return False

    jacobian = sympy.Matrix([Um, v_prolonged, f_new]).jacobian([t, x, u, v])
    for columns in combinations(range(4), 3):
        minor = jacobian[:, list(columns)].det(method="berkowitz")
        if not is_zero(minor):
            return False
    return True
