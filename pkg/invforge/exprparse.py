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
Parser and printers for nonlinearities f(u, u_x) and engine output.

Grammar of user input::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" unary)?        # right associative
    atom    := NUMBER | "u" | "v" | "ux" | FUNC "(" expr ")" | "(" expr ")"
    FUNC    := "exp" | "log" | "sin" | "cos"

Exponents must be rational constants. Engine mode additionally accepts
the jet, group, algebra and invariant symbols printed by `print_expr`.
"""

import json
import re
from collections import namedtuple

import sympy
from sympy import Rational

from invforge import exception
from invforge import symkernel as sk

FUNCTIONS = {
    "exp": sympy.exp,
    "log": sympy.log,
    "sin": sympy.sin,
    "cos": sympy.cos
}

USER_SYMBOLS = {"u": sk.U, "v": sk.V, "ux": sk.V}

Token = namedtuple("Token", ["kind", "value", "line", "column"])

TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+) |
    (?P<newline>\n) |
    (?P<number>\d+(?:\.\d*)?|\.\d+) |
    (?P<ident>[A-Za-z_][A-Za-z_0-9]*) |
    (?P<op>[-+*/^(),])
""", re.VERBOSE)

# left binding powers
LBP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
PREFIX_MINUS_RBP = 25


def tokenize(text):
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if not match:
            raise exception.ExprSyntaxError(
                "unexpected character '%s'" % text[pos], line, column)
        kind = match.lastgroup
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind != "space":
            tokens.append(Token(kind, match.group(kind), line, column))
        pos = match.end()
    tokens.append(Token("end", None, line, len(text) - line_start + 1))
    return tokens


def _engine_symbol(name):
    indices = sk.parse_jet_name(name)
    if indices:
        return sk.jet(*indices)
    match = re.match(r"^(C|c|phi_|I)(\d+)(?:_(\d+))?$", name)
    if not match:
        return None
    prefix, first, second = match.groups()
    if prefix == "C" and int(first) <= 3 and second is None:
        return sk.group_param(int(first))
    if prefix == "c" and int(first) <= 3 and second is None:
        return sk.algebra_param(int(first))
    if prefix == "phi_" and second is None:
        return sk.phi(int(first))
    if prefix == "I":
        if second is not None:
            return sk.invariant_symbol(int(first), int(second))
        if len(first) == 2:
            return sk.invariant_symbol(int(first[0]), int(first[1]))
    return None


class Parser(object):

    def __init__(self, text, engine=False):
        self.text = text
        self.engine = engine
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self, value=None):
        token = self.token
        if value is not None and token.value != value:
            self.fail(token, "expected '%s'" % value)
        self.index += 1
        return token

    @staticmethod
    def fail(token, message):
        if token.kind == "end":
            message += " at end of input"
        else:
            message += ", found '%s'" % token.value
        raise exception.ExprSyntaxError(message, token.line, token.column)

    def parse(self):
        result = self.expression(0)
        if self.token.kind != "end":
            self.fail(self.token, "unexpected token")
        if result.has(sympy.zoo) or result.has(sympy.nan):
            raise exception.ExprSyntaxError("division by zero", 1, 1)
        return result

    def expression(self, rbp):
        left = self.nud(self.advance())
        while rbp < self._lbp(self.token):
            left = self.led(self.advance(), left)
        return left

    def _lbp(self, token):
        if token.kind == "op" and token.value in LBP:
            return LBP[token.value]
        if token.kind in ("number", "ident") or token.value == "(":
            self.fail(token, "implicit multiplication is not allowed")
        return 0

    def nud(self, token):
        if token.kind == "number":
            return Rational(token.value)
        if token.kind == "ident":
            return self._identifier(token)
        if token.value == "(":
            inner = self.expression(0)
            self.advance(")")
            return inner
        if token.value == "-":
            return -self.expression(PREFIX_MINUS_RBP)
        self.fail(token, "unexpected token")

    def led(self, token, left):
        op = token.value
        if op == "^":
            exponent_token = self.token
            right = self.expression(LBP["^"] - 1)
            if not right.is_Rational:
                self.fail(exponent_token,
                          "exponent must be a rational constant")
            return left**right
        right = self.expression(LBP[op])
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        return left / right

    def _identifier(self, token):
        name = token.value
        if name in FUNCTIONS:
            self.advance("(")
            argument = self.expression(0)
            self.advance(")")
            return FUNCTIONS[name](argument)
        if name in USER_SYMBOLS:
            return USER_SYMBOLS[name]
        if self.engine:
            symbol = _engine_symbol(name)
            if symbol is not None:
                return symbol
        raise exception.UnknownIdentifier(name, token.line, token.column)


def parse(text, engine=False):
    return Parser(text, engine).parse()


def parse_point(text):
    parts = [p for p in text.split(",")]
    if len(parts) != 2:
        raise exception.ExprSyntaxError("expected a point 'u,v'", 1, 1)
    values = []
    for part in parts:
        value = parse(part)
        if value.free_symbols or not value.is_Rational:
            raise exception.ExprSyntaxError(
                "point coordinates must be rational constants", 1, 1)
        values.append(value)
    return tuple(values)


def format_error_location(text, exc):
    """ Source line with a caret under the failing column """
    lines = text.split("\n")
    line = lines[exc.line - 1] if exc.line <= len(lines) else ""
    return "%s\n%s^" % (line, " " * (exc.column - 1))


#
# Printers
#


def _factor_key(factor):
    if isinstance(factor, sympy.Function):
        return ((len(sk.KIND_RANK) + 1, 0, 0, sympy.srepr(factor)), 1)
    base, exp = factor.as_base_exp()
    if base.is_Symbol and exp.is_Number:
        return (sk.sort_key(base), exp)
    if not exp.is_Number:
        base, exp = factor, 1
    return ((len(sk.KIND_RANK) + 1, 0, 0, sympy.srepr(base)), exp)


def _term_key(term):
    _, rest = term.as_coeff_Mul()
    keys = [_factor_key(f) for f in sympy.Mul.make_args(rest) if f != 1]
    return sorted(keys, reverse=True)


def ordered_terms(e):
    return sorted(sympy.Add.make_args(e), key=_term_key)


def ordered_factors(e):
    _, rest = e.as_coeff_Mul()
    return sorted([f for f in sympy.Mul.make_args(rest) if f != 1],
                  key=_factor_key)


def _plain_number(n):
    if n.is_Integer:
        return str(n.p)
    if n.is_Rational:
        return "%d/%d" % (n.p, n.q)
    return repr(float(n))


def _plain_atom(e):
    """ Operand of * or ^ """
    text = _plain(e)
    needs = e.is_Add or (e.is_Number and (e < 0 or not e.is_Integer))
    return "(%s)" % text if needs else text


def _plain_power(base, exp):
    if exp == 1:
        return _plain_atom(base)
    if exp.is_Integer:
        exp_text = str(exp)
    else:
        exp_text = "(%s)" % _plain(exp)
    if base.is_Pow or base.is_Mul:
        return "(%s)^%s" % (_plain(base), exp_text)
    return "%s^%s" % (_plain_atom(base), exp_text)


def _plain_mul(e):
    coeff, _ = e.as_coeff_Mul()
    if coeff < 0:
        return "-" + _plain_mul(-e)
    numer, denom = [], []
    for factor in ordered_factors(e):
        if isinstance(factor, sympy.Function):
            numer.append(_plain(factor))
            continue
        base, exp = factor.as_base_exp()
        if exp.is_Number and exp < 0:
            denom.append(_plain_power(base, -exp))
        else:
            numer.append(_plain_power(base, exp))
    if coeff.q != 1:
        denom.insert(0, str(coeff.q))
    if coeff.p != 1 or not numer:
        numer.insert(0, str(coeff.p))
    text = "*".join(numer)
    if len(denom) == 1:
        text += "/" + denom[0]
    elif denom:
        text += "/(%s)" % "*".join(denom)
    return text


def _plain(e):
    if e.is_Number:
        return _plain_number(e)
    if e.is_Symbol:
        return e.name
    if e.is_Add:
        parts = []
        for term in ordered_terms(e):
            coeff, _ = term.as_coeff_Mul()
            negative = coeff < 0
            text = _plain_mul(-term if negative else term)
            if not parts:
                parts.append("-" + text if negative else text)
            else:
                parts.append(("- " if negative else "+ ") + text)
        return " ".join(parts)
    if e.is_Mul or e.is_Pow:
        return _plain_mul(e)
    if isinstance(e, sympy.Function):
        return "%s(%s)" % (type(e).__name__, _plain(e.args[0]))
    return str(e)


def _latex_name(s):
    info = sk.symbol_info(s)
    if info.kind == sk.PHI:
        k = info.indices[0]
        return "\\varphi" + ("'" * k if k <= 3 else "^{(%d)}" % k)
    if info.kind == sk.INVARIANT:
        return "I^{%d%d}" % info.indices
    if info.kind == sk.GROUP:
        return "C_{%d}" % info.indices[0]
    if info.kind == sk.ALGEBRA:
        return "c_{%d}" % info.indices[0]
    if info.kind == sk.JET:
        i, j = info.indices
        if i + j:
            return "f_{%s}" % ("u" * i + "v" * j)
        return "f"
    return sympy.latex(s)


def _latex(e):
    names = {s: _latex_name(s) for s in e.free_symbols}
    return sympy.latex(e, symbol_names=names, order="lex")


def _json_node(e):
    if e.is_Rational:
        return {"op": "rat", "num": str(e.p), "den": str(e.q)}
    if e.is_Symbol:
        return {"op": "sym", "name": e.name}
    if e.is_Add:
        return {"op": "add", "args": [_json_node(t) for t in ordered_terms(e)]}
    if e.is_Mul:
        coeff, _ = e.as_coeff_Mul()
        args = [_json_node(f) for f in ordered_factors(e)]
        if coeff != 1:
            args.insert(0, _json_node(coeff))
        return {"op": "mul", "args": args}
    if e.is_Pow:
        return {"op": "pow", "args": [_json_node(e.base), _json_node(e.exp)]}
    if isinstance(e, sympy.Function) and type(e).__name__ in FUNCTIONS:
        return {
            "op": "call",
            "name": type(e).__name__,
            "args": [_json_node(e.args[0])]
        }
    raise exception.UnsupportedForm(e)


def to_json_ast(e):
    return _json_node(sympy.sympify(e))


def expr_from_json(node):
    op = node['op']
    if op == "rat":
        return Rational(int(node['num']), int(node['den']))
    if op == "sym":
        name = node["name"]
        if name in USER_SYMBOLS:
            return USER_SYMBOLS[name]
        symbol = _engine_symbol(name)
        return symbol if symbol is not None else sympy.Symbol(name)
    args = [expr_from_json(a) for a in node.get("args", [])]
    if op == "add":
        return sympy.Add(*args)
    if op == "mul":
        return sympy.Mul(*args)
    if op == "pow":
        return args[0]**args[1]
    if op == "call":
        return FUNCTIONS[node['name']](args[0])
    raise exception.InvforgeException("Unknown AST node '%s'" % op)


def print_expr(e, style="plain"):
    e = sympy.sympify(e)
    if style == "plain":
        return _plain(e)
    if style == "latex":
        return _latex(e)
    if style == "json":
        return json.dumps(
            to_json_ast(e), sort_keys=True, separators=(",", ":"))
    raise ValueError("Unknown style '%s'" % style)
