"""Expression parser and printer for bivariate integer polynomials.

Grammar: integer literals, X and Y (case-insensitive), + - * ^ and
parentheses.  ^ takes a nonnegative integer-literal tower and binds
tighter than unary minus, which binds tighter than *.  Implicit
multiplication is a syntax error, so the printer always emits '*'.
"""

from .errors import ParseError
from .bipoly import BiPoly

_X = BiPoly.variable(0)
_Y = BiPoly.variable(1)


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in "xXyY":
            tokens.append(("var", ch.upper(), i))
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2] + 1)
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2] + 1)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            return base ** self.exponent()
        return base

    def exponent(self):
        tok = self.peek()
        if tok[0] != "int":
            raise ParseError("exponent must be a nonnegative integer literal",
                             tok[2] + 1)
        value = self.take()[1]
        if self.peek()[0] == "^":
            self.take()
            return value ** self.exponent()
        return value

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            return BiPoly.constant(self.take()[1])
        if tok[0] == "var":
            return _X if self.take()[1] == "X" else _Y
        if tok[0] == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"expected a value, found {tok[1]!r}", tok[2] + 1)


def parse_polynomial(text):
    """Exact BiPoly from an expression string; errors carry a 1-based position."""
    return _Parser(text).parse()


def _emit_monomial(ex, ey):
    parts = []
    if ex:
        parts.append("X" if ex == 1 else f"X^{ex}")
    if ey:
        parts.append("Y" if ey == 1 else f"Y^{ey}")
    return "*".join(parts)


def emit_polynomial(p):
    """Canonical expression string; parses back to an equal BiPoly."""
    if not p:
        return "0"
    keys = sorted(p.terms, key=lambda e: (e[0] + e[1], e[0]), reverse=True)
    out = []
    for ex, ey in keys:
        c = p.terms[(ex, ey)]
        mono = _emit_monomial(ex, ey)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out)
