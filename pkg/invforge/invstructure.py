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
Structure of the algebra of differential invariants on the regular stratum.

Two levels are kept apart. The abstract level works with the symbols I^ij
and word symbols such as DuDvI11 standing for invariant derivatives; the
recurrence relations live there. The closed-form level substitutes the
normalized invariants and applies the operators of invariant
differentiation to them, which checks the abstract results.
"""

import random
import threading
from collections import namedtuple

import sympy
from sympy import Integer, Rational, binomial

from invforge import exception
from invforge import groupaction as ga
from invforge import jetspace as js
from invforge import movingframe as mf
from invforge import symkernel as sk
from invforge.util import memoized

DIRECTIONS = js.DIRECTIONS

# exact identity checks switch to the randomized test above this order
EXACT_MAX_ORDER = 4

#
# Operators of invariant differentiation
#


class InvDiffOp(object):
    """ a D_u + b D_v """

    def __init__(self, direction, a, b):
        assert direction in DIRECTIONS
        self.direction = direction
        self.a = sympy.sympify(a)
        self.b = sympy.sympify(b)

    @property
    def coefficients(self):
        return (self.a, self.b)

    def __call__(self, e):
        expr = js.as_expr(e)
        result = 0
        if self.a != 0:
            result += self.a * js.total_derivative(expr, "u")
        if self.b != 0:
            result += self.b * js.total_derivative(expr, "v")
        if isinstance(e, js.JetFunction):
            return js.JetFunction(result)
        return result

    def __repr__(self):
        return "InvDiffOp(%s, %s, %s)" % (self.direction, self.a, self.b)


@memoized
def invariant_operators():
    """ The implicit differentiation operators with the frame substituted """
    frame = mf.solve_frame(2).bindings()
    d_u, d_v = ga.implicit_diff_ops(ga.formal_element())
    ops = {}
    for direction, op in (("u", d_u), ("v", d_v)):
        a, b = [
            sympy.factor(sympy.cancel(mf.to_w_form(c.xreplace(frame))))
            for c in op.coefficients
        ]
        ops[direction] = InvDiffOp(direction, mf.from_w_form(a),
                                   mf.from_w_form(b))
    return ops


def invariant_derivative(e, direction):
    if direction not in DIRECTIONS:
        raise ValueError("Unknown direction '%s'" % direction)
    return invariant_operators()[direction](e)


def _invariant_derivative_w(e, direction):
    v, w = sk.V, mf.w_symbol()
    if direction == "u":
        a, b = 2 * v**2 / w, -v**3 * sk.jet(0, 2) / w
    else:
        a, b = Integer(0), v
    result = 0
    if a != 0:
        result += a * mf.total_derivative_w(e, "u")
    result += b * mf.total_derivative_w(e, "v")
    return sympy.cancel(result)


#
# Abstract invariant algebra
#

_WORDS = {}
_WORDS_LOCK = threading.Lock()


def word_symbol(word, index):
    """ Symbol for (D_{word[0]}^i ... D_{word[-1]}^i) I^index """
    assert all(letter in DIRECTIONS for letter in word)
    if not word:
        return sk.invariant_symbol(*index)
    name = "".join("D" + letter for letter in word) + "I%d%d" % index
    with _WORDS_LOCK:
        _WORDS[name] = (word, tuple(index))
    return sk.user_param(name)


def word_info(s):
    """ (word, index) of an abstract symbol, None for anything else """
    info = sk.symbol_info(s)
    if info.kind == sk.INVARIANT:
        return ("", info.indices)
    with _WORDS_LOCK:
        return _WORDS.get(s.name)


def word_label(word, index, style="plain"):
    parts = []
    n = 0
    while n < len(word):
        letter = word[n]
        power = len(word[n:]) - len(word[n:].lstrip(letter))
        if style == "latex":
            parts.append("(\\mathrm{D}_%s^{\\mathrm{i}})%s" %
                         (letter, "^{%d}" % power if power > 1 else ""))
        else:
            parts.append("D%s%s" %
                         (letter, "^%d" % power if power > 1 else ""))
        n += power
    if style == "latex":
        parts.append("I^{%d%d}" % tuple(index))
    else:
        parts.append("I%d%d" % tuple(index))
    return " ".join(parts)


def abstract_derivative(e, direction):
    """ The derivation D^i on the abstract algebra """
    e = sympy.sympify(e)
    result = 0
    for s in e.free_symbols:
        info = word_info(s)
        if info is None:
            continue
        word, index = info
        result += sympy.diff(e, s) * word_symbol(direction + word, index)
    return sympy.expand(result)


@memoized
def _word_w(word, i, j):
    if not word:
        return mf.invariant_w_form(i, j)
    return _invariant_derivative_w(_word_w(word[1:], i, j), word[0])


def closed_form_w(e):
    e = sympy.sympify(e)
    bindings = {}
    for s in e.free_symbols:
        info = word_info(s)
        if info is not None:
            word, index = info
            bindings[s] = _word_w(word, *index)
    e = e.xreplace(bindings)
    if sk.is_rational_expr(e):
        e = sympy.cancel(e)
    return e


def closed_form(e):
    """ Substitutes normalized invariants and invariant derivatives """
    return mf.from_w_form(closed_form_w(e))


def _closed_forms_equal(a, b, order):
    mode = None if order <= EXACT_MAX_ORDER else "probabilistic"
    return sk.canonical_equal(closed_form_w(a), closed_form_w(b), mode=mode)


#
# One-forms over the invariant coframe (omega1, omega2)
#


class OneForm(object):

    def __init__(self, omega1=0, omega2=0):
        self.omega1 = sympy.sympify(omega1)
        self.omega2 = sympy.sympify(omega2)

    def __add__(self, other):
        return OneForm(self.omega1 + other.omega1, self.omega2 + other.omega2)

    def __sub__(self, other):
        return OneForm(self.omega1 - other.omega1, self.omega2 - other.omega2)

    def __neg__(self):
        return OneForm(-self.omega1, -self.omega2)

    def __mul__(self, scalar):
        return OneForm(scalar * self.omega1, scalar * self.omega2)

    __rmul__ = __mul__

    def expand(self):
        return OneForm(sympy.expand(self.omega1), sympy.expand(self.omega2))

    def wedge(self, other):
        """ Coefficient of omega1 ^ omega2 """
        return sympy.expand(self.omega1 * other.omega2 -
                            self.omega2 * other.omega1)

    def is_zero(self):
        expanded = self.expand()
        return expanded.omega1 == 0 and expanded.omega2 == 0

    def __eq__(self, other):
        return isinstance(other, OneForm) and (self - other).is_zero()

    def __hash__(self):
        expanded = self.expand()
        return hash((expanded.omega1, expanded.omega2))

    def __repr__(self):
        return "OneForm(%s, %s)" % (self.omega1, self.omega2)


OMEGA1 = OneForm(1, 0)
OMEGA2 = OneForm(0, 1)

MaurerCartanForm = namedtuple("MaurerCartanForm", ["parameter", "form"])

CommutatorCoeffs = namedtuple("CommutatorCoeffs", ["Y112", "Y212"])

PhantomResult = namedtuple("PhantomResult", ["label", "residual", "passed"])


def form_label(parameter, style="plain"):
    if style == "latex":
        from invforge.exprparse import print_expr
        return "\\hat{%s}" % print_expr(parameter, "latex")
    return "hat_%s" % parameter.name


def iota_jet(i, j):
    """ I^ij with the phantom constants substituted """
    if mf.is_phantom(i, j):
        return mf.phantom_value(i, j)
    return sk.invariant_symbol(i, j)


def iota_coefficient(e):
    """ Invariantization of a differential function at the abstract level """
    e = sympy.sympify(e)
    bindings = {sk.U: Integer(0), sk.V: Integer(1)}
    for s in sk.jets_of(e):
        bindings[s] = iota_jet(*sk.jet_indices(s))
    return sympy.expand(e.xreplace(bindings))


def _is_parameter(s):
    return sk.symbol_info(s).kind in (sk.ALGEBRA, sk.PHI)


def iota_linear(e, forms):
    """
    Invariantization of an expression linear in the algebra parameters: each
    parameter becomes its invariantized Maurer-Cartan form.
    """
    e = sympy.expand(e)
    parameters = [s for s in sk.free_symbols(e) if _is_parameter(s)]
    result = OneForm()
    for p in parameters:
        result = result + iota_coefficient(sympy.diff(e, p)) * forms[p]
    assert sympy.expand(e.xreplace({p: 0 for p in parameters})) == 0, e
    return result.expand()


def _dh_invariant(i, j, forms):
    """ d_h I^ij = I^{i+1,j} omega1 + I^{i,j+1} omega2 + iota(theta^ij) """
    return (OneForm(iota_jet(i + 1, j), iota_jet(i, j + 1)) +
            iota_linear(js.prolong_component(i, j), forms)).expand()


def phantom_relations(order, forms):
    field = js.general_vector_field()
    relations = [("iota(u)", OMEGA1 + iota_linear(field.phi_comp, forms)),
                 ("iota(v)", OMEGA2 + iota_linear(field.eta_comp, forms))]
    for j in range(3):
        relations.append(("I0%d" % j, _dh_invariant(0, j, forms)))
    for i in range(1, order + 1):
        relations.append(("I%d0" % i, _dh_invariant(i, 0, forms)))
    return [(label, form.expand()) for label, form in relations]


@memoized
def _base_forms():
    """ c1^, c2^, phi^, phi'^, phi''^ from the first five phantom relations """
    parameters = [sk.algebra_param(1), sk.algebra_param(2)] + \
        [sk.phi(k) for k in range(3)]
    unknowns = {}
    forms = {}
    for p in parameters:
        a, b = sympy.Dummy("a_" + p.name), sympy.Dummy("b_" + p.name)
        unknowns[p] = (a, b)
        forms[p] = OneForm(a, b)
    equations = []
    for _, form in phantom_relations(0, forms):
        equations.extend([form.omega1, form.omega2])
    flat = [x for p in parameters for x in unknowns[p]]
    solution = sympy.solve(equations, flat, dict=True)
    if len(solution) != 1:
        raise exception.FrameUnsolvable(2)
    solution = solution[0]
    return {
        p: OneForm(solution[a], solution[b]).expand()
        for p, (a, b) in unknowns.items()
    }


@memoized
def _phi_form(k):
    """
    phi^(i+2)^ = phi^(i+1)^ - sum binom(i,i') I^{i-i',1} phi^(i'+1)^
    + I^i1 omega2
    """
    if k <= 2:
        return _base_forms()[sk.phi(k)]
    i = k - 2
    result = _phi_form(i + 1) + sk.invariant_symbol(i, 1) * OMEGA2
    for ip in range(1, i):
        result = result - (binomial(i, ip) * sk.invariant_symbol(i - ip, 1) *
                           _phi_form(ip + 1))
    return result.expand()


def maurer_cartan_table(max_k):
    table = dict(_base_forms())
    for k in range(3, max_k + 1):
        table[sk.phi(k)] = _phi_form(k)
    return table


def maurer_cartan_forms(max_k):
    if max_k < 0:
        raise exception.InvalidOrder(max_k, "form order must be >= 0")
    table = maurer_cartan_table(max(max_k, 2))
    parameters = [sk.algebra_param(1), sk.algebra_param(2)] + \
        [sk.phi(k) for k in range(max_k + 1)]
    return [MaurerCartanForm(p, table[p]) for p in parameters]


def phantom_check(order=3, forms=None):
    table = maurer_cartan_table(order + 2)
    if forms:
        table.update(forms)
    return [
        PhantomResult(label, residual, residual.is_zero())
        for label, residual in phantom_relations(order, table)
    ]


def top_order_summands(k):
    """ Invariants of the top order k-1 in phi^(k)^, with coefficients """
    form = _phi_form(k)
    summands = []
    for which, coeff in (("omega1", form.omega1), ("omega2", form.omega2)):
        for s in sk.free_symbols(coeff):
            info = sk.symbol_info(s)
            if info.kind == sk.INVARIANT and sum(info.indices) == k - 1:
                summands.append((which, s, sympy.diff(coeff, s)))
    return summands


#
# Recurrence relations
#


def _check_recurrence_index(i, j):
    if i < 0 or j < 0:
        raise exception.InvalidIndex(i, j, "indices must be non-negative")
    if (i, j) != (1, 1) and (i + j < 3 or j == 0):
        raise exception.InvalidIndex(
            i, j, "recurrences start from I11 or I^ij with i+j >= 3, j != 0")


@memoized
def recurrence(i, j):
    """
    (I^{i+1,j}, I^{i,j+1}) in terms of D_u^i I^ij, D_v^i I^ij and invariants
    of lower order, from d_h I^ij = D_u^i I^ij omega1 + D_v^i I^ij omega2.
    """
    _check_recurrence_index(i, j)
    dh = _dh_invariant(i, j, maurer_cartan_table(i + 2))
    next_u, next_v = sk.invariant_symbol(i + 1, j), sk.invariant_symbol(
        i, j + 1)
    equations = [
        word_symbol("u", (i, j)) - dh.omega1,
        word_symbol("v", (i, j)) - dh.omega2
    ]
    solution = sympy.solve(equations, [next_u, next_v], dict=True)
    if len(solution) != 1:
        raise exception.InvalidIndex(i, j, "recurrence is not solvable")
    solution = solution[0]
    return (sympy.expand(solution[next_u]), sympy.expand(solution[next_v]))


def _recurrence_source(i, j):
    """ The recurrence producing a non-phantom I^ij of order >= 3 """
    if j >= 2 and (i, j - 1) != (0, 2):
        return (i, j - 1), 1
    if j == 1 and i >= 2:
        return (i - 1, 1), 0
    return None


def recurrence_table(order):
    """ Non-phantom I^ij, 3 <= i+j <= order+1, from the recurrences """
    table = {}
    for index in mf.non_phantom_indices(order + 1):
        source = _recurrence_source(*index)
        if source is None:
            continue
        table[index] = recurrence(*source[0])[source[1]]
    return table


def printed_i04():
    """ I04 as printed with the non-phantom recurrence relations """
    i03 = sk.invariant_symbol(0, 3)
    return word_symbol("v", (0, 3)) + i03**2 / 2 - i03


def i04_display_check():
    """
    The recurrence for I04 against the printed display. Direct
    invariantization decides between them, e.g. I04 = 0 on f = v^3.
    """
    derived = recurrence(0, 3)[1]
    printed = printed_i04()
    difference = sympy.expand(derived - printed)
    return {
        "derived": derived,
        "printed": printed,
        "difference": difference,
        "matches": difference == 0
    }


def verify_recurrences(order=4):
    results = {}
    for index, expr in sorted(recurrence_table(order).items()):
        results[index] = _closed_forms_equal(expr,
                                             sk.invariant_symbol(*index),
                                             sum(index))
    return results


#
# Commutator and the generating invariant
#


def _iota_form_of_differential(component, forms):
    """ iota(d component) = iota(D_u component) omega1 + iota(D_v c) omega2 """
    return (iota_linear(js.total_derivative(component, "u"), forms),
            iota_linear(js.total_derivative(component, "v"), forms))


def horizontal_differential(forms=None):
    """
    (d_h omega1, d_h omega2) as coefficients of omega1 ^ omega2, from
    d_h iota(du) = iota(Q(du)) and d_h iota(dv) = iota(Q(dv)).
    """
    table = maurer_cartan_table(3)
    if forms:
        table.update(forms)
    field = js.general_vector_field()
    result = []
    for component in (field.phi_comp, field.eta_comp):
        alpha, beta = _iota_form_of_differential(component, table)
        result.append(sympy.expand(alpha.wedge(OMEGA1) + beta.wedge(OMEGA2)))
    return tuple(result)


@memoized
def commutator_coeffs():
    d_omega1, d_omega2 = horizontal_differential()
    return CommutatorCoeffs(sympy.expand(-d_omega1), sympy.expand(-d_omega2))


def commutator_check(e):
    """ [D_u^i, D_v^i] e = Y1 D_u^i e + Y2 D_v^i e, exactly """
    e = mf.to_w_form(js.as_expr(e))
    coeffs = commutator_coeffs()
    y1, y2 = closed_form_w(coeffs.Y112), closed_form_w(coeffs.Y212)
    d_u = _invariant_derivative_w(e, "u")
    d_v = _invariant_derivative_w(e, "v")
    lhs = _invariant_derivative_w(d_v, "u") - _invariant_derivative_w(d_u, "v")
    rhs = y1 * d_u + y2 * d_v
    return sk.canonical_equal(lhs, rhs)


def random_jet_functions(count, seed, order=2, terms=3):
    """ Random polynomial differential functions for operator identities """
    rng = random.Random(seed)
    coordinates = [sk.U, sk.V] + sk.jet_coordinates(order)
    functions = []
    for _ in range(count):
        expr = 0
        for _ in range(terms):
            monomial = Integer(rng.randint(-3, 3) or 1)
            for _ in range(rng.randint(1, 3)):
                monomial *= rng.choice(coordinates)
            expr += monomial
        functions.append(js.JetFunction(expr))
    return functions


def commutator_syzygy():
    """ The commutator applied to I11, as a relation among abstract symbols """
    coeffs = commutator_coeffs()
    return sympy.expand(
        word_symbol("uv", (1, 1)) - word_symbol("vu", (1, 1)) -
        coeffs.Y112 * word_symbol("u", (1, 1)) -
        coeffs.Y212 * word_symbol("v", (1, 1)))


def syzygy_check():
    return sk.canonical_equal(closed_form_w(commutator_syzygy()), 0)


def generator_i03_abstract():
    """
    I03 = 2 (2 D_u^i I11 + [D_u^i, D_v^i] I11) / (D_u^i I11 + D_v^i I11)
    """
    d_u, d_v = word_symbol("u", (1, 1)), word_symbol("v", (1, 1))
    bracket = word_symbol("uv", (1, 1)) - word_symbol("vu", (1, 1))
    return 2 * (2 * d_u + bracket) / (d_u + d_v)


@memoized
def generator_i03_w():
    return closed_form_w(generator_i03_abstract())


@memoized
def _word_closed_form(word, index):
    return closed_form(word_symbol(word, index))


def i03_from_generator(f=None, point=None, tol=1e-9):
    """
    Symbolic: the closed form of the generator formula. With `f` and
    `point`: (generator value, direct value of I03) in floats, the former
    assembled from the values of D_u^i I11, D_v^i I11, D_u^i D_v^i I11 and
    D_v^i D_u^i I11 at the point.
    """
    if f is None:
        return mf.from_w_form(generator_i03_w())
    values = js.jet_values(f, point, 4)
    words = {}
    for word in ("u", "v", "uv", "vu"):
        words[word] = sk.eval_numeric(_word_closed_form(word, (1, 1)),
                                      values)
    denominator = words['u'] + words['v']
    if abs(denominator) <= tol * (1 + abs(words['u']) + abs(words['v'])):
        raise exception.GeneratorDegenerate(point)
    generated = 2 * (2 * words['u'] + words['uv'] - words['vu']) / denominator
    direct = sk.eval_numeric(mf.i03_closed_form(), values)
    return generated, direct


def generator_identity_holds():
    return sk.canonical_equal(generator_i03_w(),
                              mf.invariant_w_form(0, 3))


#
# Generating set and functional bases
#


class BasisElement(object):

    def __init__(self, word, index):
        self.word = word
        self.index = tuple(index)

    @property
    def symbol(self):
        return word_symbol(self.word, self.index)

    @property
    def order(self):
        return sum(self.index) + len(self.word)

    def label(self, style="plain"):
        return word_label(self.word, self.index, style)

    def closed_form(self):
        return closed_form(self.symbol)

    def __eq__(self, other):
        return isinstance(other, BasisElement) and \
            (self.word, self.index) == (other.word, other.index)

    def __hash__(self):
        return hash((self.word, self.index))

    def __repr__(self):
        return "BasisElement(%s)" % self.label()


def functional_basis(k):
    """
    (D_u^i)^a (D_v^i)^b I11 for a+b <= k-2 and (D_v^i)^j I03 for j <= k-3
    """
    if k < 2:
        raise exception.InvalidOrder(k, "a functional basis needs k >= 2")
    basis = []
    for n in range(k - 1):
        for b in range(n + 1):
            basis.append(BasisElement("u" * (n - b) + "v" * b, (1, 1)))
    for j in range(k - 2):
        basis.append(BasisElement("v" * j, (0, 3)))
    return basis


def _rewrite_symbols(e):
    e = sympy.sympify(e)
    bindings = {}
    for s in e.free_symbols:
        info = word_info(s)
        if info is None:
            continue
        word, index = info
        value = rewrite_in_generators(*index)
        for letter in reversed(word):
            value = abstract_derivative(value, letter)
        bindings[s] = value
    return e.xreplace(bindings)


@memoized
def rewrite_in_generators(i, j):
    """
    I^ij in terms of I11 and its invariant derivatives, with I03 replaced by
    the generator formula.
    """
    if mf.is_phantom(i, j):
        raise exception.InvalidIndex(i, j, "phantom invariant")
    if (i, j) == (1, 1):
        return sk.invariant_symbol(1, 1)
    if (i, j) == (0, 3):
        return generator_i03_abstract()
    if i + j < 3:
        raise exception.InvalidIndex(i, j, "no such normalized invariant")
    source, position = _recurrence_source(i, j)
    return sympy.together(_rewrite_symbols(recurrence(*source)[position]))


#
# Restriction to the graph of a polynomial nonlinearity. Every invariant
# is then a rational function of (u, v) and invariant derivatives are
# plain partial derivatives with rational coefficients.
#

SECTION_F = sk.U * sk.V**3 + sk.V**4
SECTION_POINTS = 4
SECTION_ATTEMPTS = 50


@memoized
def _section_operators(f):
    jets = js.concrete_jet(f, 2)
    w = mf.relative_W(jets)
    return {
        "u": (2 * sk.V**2 / w, -sk.V**3 * jets[(0, 2)] / w),
        "v": (Integer(0), sk.V)
    }


@memoized
def section_word(f, word, index):
    """ (D_{word[0]}^i ... D_{word[-1]}^i) I^index on the graph of f """
    if not word:
        expr = mf.normalized_invariant(*index).expr
        return sympy.cancel(js.substitute_jets(expr, f, sum(index)))
    inner = section_word(f, word[1:], index)
    a, b = _section_operators(f)[word[0]]
    return sympy.cancel(a * sympy.diff(inner, sk.U) +
                        b * sympy.diff(inner, sk.V))


def section_value(e, f, point):
    """ Exact value of an abstract expression on the graph of f """
    e = sympy.sympify(e)
    at = {sk.U: point[0], sk.V: point[1]}
    bindings = {}
    for s in e.free_symbols:
        info = word_info(s)
        if info is not None:
            bindings[s] = section_word(f, *info).xreplace(at)
    return e.xreplace(bindings).xreplace(at)


def section_points(f, count, seed):
    """ Rational points (u, v), u in [-1, 1], v in [1/2, 2], with W != 0 """
    rng = random.Random(seed)
    w = mf.relative_W(js.concrete_jet(f, 2))
    points = []
    for _ in range(SECTION_ATTEMPTS):
        if len(points) == count:
            break
        point = (Rational(rng.randint(-16, 16), 16),
                 Rational(rng.randint(8, 32), 16))
        if point not in points and \
                w.xreplace({sk.U: point[0], sk.V: point[1]}) != 0:
            points.append(point)
    return points


def section_equal(a, b, f=SECTION_F, count=SECTION_POINTS, seed=0):
    """
    Compares two abstract expressions exactly at rational points of the
    graph of f. Points where either side is undefined are skipped.
    """
    compared = 0
    for point in section_points(f, count * 2, seed):
        lhs, rhs = section_value(a, f, point), section_value(b, f, point)
        if not (lhs.is_Rational and rhs.is_Rational):
            continue
        if lhs != rhs:
            return False
        compared += 1
        if compared == count:
            break
    return compared > 0


def verify_rewrite(i, j, f=SECTION_F):
    """
    The base cases I11 and I03 are compared as closed forms. Higher
    invariants are compared on the graph of f.
    """
    rewritten = rewrite_in_generators(i, j)
    target = sk.invariant_symbol(i, j)
    if (i, j) in ((1, 1), (0, 3)):
        return _closed_forms_equal(rewritten, target, i + j)
    return section_equal(rewritten, target, f)


def generator_check(max_order, f=SECTION_F):
    """ Bounded check that I11 generates every I^ij up to max_order """
    return {
        index: verify_rewrite(index[0], index[1], f)
        for index in mf.non_phantom_indices(max_order)
    }

