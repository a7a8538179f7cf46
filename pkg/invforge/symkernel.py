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
Exact symbolic kernel.

Expressions are plain immutable sympy expressions over a declared symbol
universe. This module owns the symbol universe and its fixed total order,
rational normal forms, exact and probabilistic identity checks and float
evaluation.
"""

import math
import random
import threading
from collections import namedtuple

import sympy
from sympy import Integer, Poly, Rational

from invforge import exception
from invforge.util import memoized

BASE = "base"
JET = "jet"
GROUP = "group"
PHI = "phi"
ALGEBRA = "algebra"
INVARIANT = "invariant"
USER = "user"

KIND_RANK = {
    BASE: 0,
    JET: 1,
    GROUP: 2,
    PHI: 3,
    ALGEBRA: 4,
    INVARIANT: 5,
    USER: 6
}

SymbolInfo = namedtuple("SymbolInfo", ["kind", "indices"])

_REGISTRY = {}
_REGISTRY_LOCK = threading.Lock()


def _register(name, kind, indices):
    with _REGISTRY_LOCK:
        info = _REGISTRY.get(name)
        if info is None:
            info = SymbolInfo(kind, tuple(indices))
            _REGISTRY[name] = info
        assert info == (kind, tuple(indices)), name
    return sympy.Symbol(name)


def symbol_info(s):
    return _REGISTRY.get(s.name, SymbolInfo(USER, (s.name, )))


@memoized
def jet(i, j):
    assert i >= 0 and j >= 0
    name = "f"
    if i + j:
        name += "_" + "u" * i + "v" * j
    return _register(name, JET, (i, j))


@memoized
def group_param(n):
    assert 0 <= n <= 3
    return _register("C%d" % n, GROUP, (n, ))


@memoized
def phi(k):
    assert k >= 0
    return _register("phi_%d" % k, PHI, (k, ))


@memoized
def algebra_param(n):
    assert 0 <= n <= 3
    return _register("c%d" % n, ALGEBRA, (n, ))


@memoized
def invariant_symbol(i, j):
    name = "I%d%d" % (i, j) if i < 10 and j < 10 else "I%d_%d" % (i, j)
    return _register(name, INVARIANT, (i, j))


def user_param(name):
    return _register(name, USER, (name, ))


U = _register("u", BASE, (0, ))
V = _register("v", BASE, (1, ))
F = jet(0, 0)


def jet_indices(s):
    info = symbol_info(s)
    if info.kind != JET:
        return None
    return info.indices


def parse_jet_name(name):
    if name == "f":
        return (0, 0)
    if not name.startswith("f_"):
        return None
    letters = name[2:]
    i = len(letters) - len(letters.lstrip("u"))
    rest = letters[i:]
    if not letters or rest.strip("v"):
        return None
    return (i, len(rest))


def sort_key(s):
    info = symbol_info(s)
    rank = KIND_RANK[info.kind]
    if info.kind in (JET, INVARIANT):
        i, j = info.indices
        return (rank, i + j, i, "")
    if info.kind == USER:
        return (rank, 0, 0, s.name)
    return (rank, info.indices[0], 0, "")


def ordered_symbols(symbols):
    return sorted(symbols, key=sort_key)


def free_symbols(e):
    return ordered_symbols(sympy.sympify(e).free_symbols)


def jets_of(e):
    return [s for s in free_symbols(e) if symbol_info(s).kind == JET]


def jet_order(e):
    orders = [sum(symbol_info(s).indices) for s in jets_of(e)]
    return max(orders) if orders else 0


def jet_coordinates(order):
    """ Jet symbols f_ij with i+j <= order in the fixed order """
    return [jet(n - j, j) for n in range(order + 1) for j in range(n + 1)]


def is_rational_expr(e):
    e = sympy.sympify(e)
    if e.atoms(sympy.Function):
        return False
    return all(p.exp.is_Integer for p in e.atoms(sympy.Pow))


def differentiate(e, s):
    return sympy.diff(sympy.sympify(e), s)


def substitute(e, bindings):
    bindings = {_as_symbol(k): sympy.sympify(v) for k, v in bindings.items()}
    for key in bindings:
        for value in bindings.values():
            if key in value.free_symbols:
                raise exception.CyclicSubstitution(key)
    if not bindings:
        return sympy.sympify(e)
    return sympy.sympify(e).xreplace(bindings)


def _as_symbol(key):
    if isinstance(key, str):
        return sympy.Symbol(key)
    return key


#
# Normal forms and identity checks
#


def _has_division_by_zero(e):
    return e.has(sympy.zoo) or e.has(sympy.nan)


def cross_multiply(e):
    """ Returns (numerator, denominator) with denominators cleared """
    e = sympy.sympify(e)
    if _has_division_by_zero(e):
        raise exception.DivisionByZeroPolynomial(e)
    num, den = sympy.fraction(sympy.together(e))
    for base in sympy.Mul.make_args(den):
        if sympy.expand(base) == 0:
            raise exception.DivisionByZeroPolynomial(base)
    return num, den


def is_zero_rational(e):
    num, _ = cross_multiply(e)
    return sympy.expand(num) == 0


class RationalNormalForm(object):
    """
    Unique representation num/den of a rational function: integer
    coefficients, no common integer factor, no common polynomial factor,
    positive leading coefficient of the denominator under the fixed order.
    """

    def __init__(self, numerator, denominator):
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def from_expr(cls, e):
        e = sympy.sympify(e)
        if not is_rational_expr(e):
            raise exception.UnsupportedForm(e)
        if _has_division_by_zero(e):
            raise exception.DivisionByZeroPolynomial(e)
        num, den = sympy.fraction(sympy.cancel(sympy.together(e)))
        gens = tuple(ordered_symbols(num.free_symbols | den.free_symbols))
        if not gens:
            gens = (U, )
        pden = Poly(den, *gens, domain=sympy.QQ)
        if pden.is_zero:
            raise exception.DivisionByZeroPolynomial(den)
        pnum = Poly(num, *gens, domain=sympy.QQ)
        if pnum.is_zero:
            return cls(
                Poly(0, *gens, domain=sympy.ZZ),
                Poly(1, *gens, domain=sympy.ZZ))

        cnum, pnum = pnum.clear_denoms(convert=True)
        cden, pden = pden.clear_denoms(convert=True)
        gnum, pnum = pnum.primitive()
        gden, pden = pden.primitive()
        scale = Rational(
            int(cden) * int(gnum), int(cnum) * int(gden))
        if pden.LC() < 0:
            pden = -pden
            scale = -scale
        return cls(pnum * scale.p, pden * scale.q)

    def as_expr(self):
        return self.numerator.as_expr() / self.denominator.as_expr()

    @property
    def gens(self):
        return self.numerator.gens

    def __eq__(self, other):
        if not isinstance(other, RationalNormalForm):
            return NotImplemented
        return (self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self):
        from invforge.exprparse import print_expr
        num = print_expr(self.numerator.as_expr(), "plain")
        den = print_expr(self.denominator.as_expr(), "plain")
        if den == "1":
            return num
        return "(%s)/(%s)" % (num, den)

    def __repr__(self):
        return "RationalNormalForm(%s)" % self


def rational_normal_form(e):
    return RationalNormalForm.from_expr(e)


def _degree_bound(e):
    """ Upper bounds (num, den) of total degrees once denominators clear """
    if e.is_Symbol:
        return (1, 0)
    if e.is_Number or not e.free_symbols:
        return (0, 0)
    if e.is_Add:
        parts = [_degree_bound(a) for a in e.args]
        den = sum(d for _, d in parts)
        return (max(n + den - d for n, d in parts), den)
    if e.is_Mul:
        parts = [_degree_bound(a) for a in e.args]
        return (sum(n for n, _ in parts), sum(d for _, d in parts))
    if e.is_Pow and e.exp.is_Integer:
        n, d = _degree_bound(e.base)
        k = int(e.exp)
        return (n * k, d * k) if k >= 0 else (d * -k, n * -k)
    raise exception.UnsupportedForm(e)


ProbabilisticVerdict = namedtuple("ProbabilisticVerdict",
                                  ["equal", "points", "bound"])

SAMPLE_SET_SIZE = 2**31


def probabilistic_equal(a, b, n_points=20, seed=0, tol=1e-9):
    """
    Randomized identity test. For rational differences the points are exact
    integers and `bound` is the per-point false positive probability of
    the Schwartz-Zippel lemma. Transcendental differences are compared in
    floating point and carry no bound.
    """
    assert n_points >= 20
    diff = sympy.sympify(a) - sympy.sympify(b)
    symbols = free_symbols(diff)
    rng = random.Random(seed)
    if not symbols:
        return _probabilistic_constant(diff, tol)

    if is_rational_expr(diff):
        bound = Rational(_degree_bound(diff)[0], SAMPLE_SET_SIZE)
        checked = 0
        attempts = 0
        while checked < n_points:
            attempts += 1
            if attempts > 50 * n_points:
                raise exception.DivisionByZeroPolynomial(diff)
            point = {
                s: Integer(rng.randrange(SAMPLE_SET_SIZE) -
                           SAMPLE_SET_SIZE // 2)
                for s in symbols
            }
            value = diff.xreplace(point)
            if _has_division_by_zero(value):
                continue
            if value != 0:
                return ProbabilisticVerdict(False, checked + 1, bound)
            checked += 1
        return ProbabilisticVerdict(True, checked, bound)

    a = sympy.sympify(a)
    b = sympy.sympify(b)
    symbols = ordered_symbols(a.free_symbols | b.free_symbols)
    checked = 0
    attempts = 0
    while checked < n_points:
        attempts += 1
        if attempts > 50 * n_points:
            raise exception.NumericDomain(diff, "no admissible sample point")
        point = {s: rng.uniform(0.5, 2.0) for s in symbols}
        try:
            lhs = eval_numeric(a, point)
            rhs = eval_numeric(b, point)
        except exception.NumericDomain:
            continue
        if abs(lhs - rhs) > tol * (1 + abs(lhs) + abs(rhs)):
            return ProbabilisticVerdict(False, checked + 1, None)
        checked += 1
    return ProbabilisticVerdict(True, checked, None)


def _probabilistic_constant(diff, tol):
    if is_rational_expr(diff):
        return ProbabilisticVerdict(diff == 0, 1, Integer(0))
    value = complex(sympy.N(diff, 30))
    return ProbabilisticVerdict(abs(value) <= tol, 1, None)


def canonical_equal(a, b, mode=None, n_points=20, seed=0):
    """
    mode=None picks exact cross-multiplication for rational differences and
    the probabilistic test otherwise; "exact" and "probabilistic" force one.
    """
    assert mode in (None, "exact", "probabilistic")
    a = sympy.sympify(a)
    b = sympy.sympify(b)
    diff = a - b
    if mode == "probabilistic":
        return probabilistic_equal(a, b, n_points, seed).equal
    if is_rational_expr(diff):
        return is_zero_rational(diff)
    if mode is None:
        return probabilistic_equal(a, b, n_points, seed).equal

    atoms = {}
    for item in sorted(
            diff.atoms(sympy.Function) | {
                p for p in diff.atoms(sympy.Pow) if not p.exp.is_Integer
            },
            key=sympy.default_sort_key):
        atoms[item] = sympy.Dummy()
    if is_zero_rational(diff.xreplace(atoms)):
        return True
    raise exception.UnsupportedForm(diff)


#
# Floating point evaluation
#


@memoized
def _compiled(e, symbols):
    return sympy.lambdify(symbols, e, modules="math")


def eval_numeric(e, point):
    e = sympy.sympify(e)
    point = {_as_symbol(k): v for k, v in point.items()}
    symbols = tuple(free_symbols(e))
    for s in symbols:
        if s not in point:
            raise exception.UnboundSymbol(s)
    try:
        value = _compiled(e, symbols)(*[float(point[s]) for s in symbols])
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise exception.NumericDomain(e, exc)
    if isinstance(value, complex):
        raise exception.NumericDomain(e, "complex result")
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        raise exception.NumericDomain(e, "non-finite result")
    return value
