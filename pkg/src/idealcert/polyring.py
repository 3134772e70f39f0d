"""Sparse multivariate polynomials with exact rational coefficients.

Values are immutable after construction.  Terms are stored in canonical
descending degrevlex order regardless of which order a computation uses, so
structural equality and printing are order-independent.  Cross-ring
arithmetic raises instead of coercing.
"""

import math
import re
from fractions import Fraction

from .errors import PolyParseError
from .orders import degrevlex_key, negdegrevlex_key

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_INT_RE = re.compile(r"[0-9]+")


class PolyRing:
    """A fixed, ordered tuple of variable names."""

    __slots__ = ("variables",)

    def __init__(self, variables):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        if not variables:
            raise ValueError("a ring needs at least one variable")
        self.variables = variables

    @property
    def nvars(self):
        return len(self.variables)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: Fraction(1)})

    def var(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    def constant(self, value):
        c = Fraction(value)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exponents, coeff=1):
        c = Fraction(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, {tuple(exponents): c})

    def parse(self, text):
        return parse_polynomial(text, self)

    def extend(self, name):
        return PolyRing(self.variables + (name,))

    def drop_last(self):
        return PolyRing(self.variables[:-1])

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"PolyRing({', '.join(self.variables)})"


class Polynomial:
    """Finite map from exponent tuples to nonzero Fractions, canonically sorted."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        cleaned = {}
        for e, c in terms.items():
            c = Fraction(c)
            if c:
                cleaned[tuple(e)] = c
        ordered = {}
        for e in sorted(cleaned, key=degrevlex_key, reverse=True):
            ordered[e] = cleaned[e]
        self.ring = ring
        self.terms = ordered
        self._hash = None

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_monomial(self):
        return len(self.terms) == 1

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), Fraction(0))

    def total_degree(self):
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self):
        """Order of vanishing at the origin; +inf for the zero polynomial."""
        if not self.terms:
            return math.inf
        return min(sum(e) for e in self.terms)

    def initial_form(self):
        """Sum of the terms of minimal total degree."""
        if not self.terms:
            raise ValueError("the zero polynomial has no initial form")
        d = self.order()
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def leading_exponent(self, order):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order):
        return self.terms[self.leading_exponent(order)]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return Polynomial(self.ring, out)

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, Fraction(0)) + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self * other

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self.terms.items())))
        return self._hash

    def substitute(self, var_index, value):
        """Substitute a rational value for one variable, staying in the ring."""
        value = Fraction(value)
        out = {}
        for e, c in self.terms.items():
            c2 = c * value ** e[var_index]
            if not c2:
                continue
            e2 = e[:var_index] + (0,) + e[var_index + 1 :]
            v = out.get(e2, Fraction(0)) + c2
            if v:
                out[e2] = v
            else:
                del out[e2]
        return Polynomial(self.ring, out)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def ord_at_origin(p):
    return p.order()


def initial_form(p):
    return p.initial_form()


def specialize_parameter(p, value):
    """Substitute the last variable (the parameter) and drop it from the ring.

    The coefficient ring stays exact: value is any Fraction-convertible.
    """
    ring = p.ring
    if ring.nvars < 2:
        raise ValueError("ring has no parameter variable to specialize")
    small = ring.drop_last()
    value = Fraction(value)
    out = {}
    for e, c in p.terms.items():
        c2 = c * value ** e[-1]
        if not c2:
            continue
        e2 = e[:-1]
        v = out.get(e2, Fraction(0)) + c2
        if v:
            out[e2] = v
        else:
            del out[e2]
    return Polynomial(small, out)


# ---------------------------------------------------------------------------
# Parsing.  Grammar (whitespace ignored, no implicit multiplication):
#   expr   := term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := base ('^' nonneg-int)?
#   base   := variable | rational | '(' expr ')' | '-' base
#   rational := int ('/' positive-int)?
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, message):
        raise PolyParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_expr(self):
        p = self.parse_term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                p = p + self.parse_term()
            elif ch == "-":
                self.pos += 1
                p = p - self.parse_term()
            else:
                return p

    def parse_term(self):
        p = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            p = p * self.parse_factor()
        return p

    def parse_factor(self):
        p = self.parse_base()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            m = _INT_RE.match(self.text, self.pos)
            if not m:
                self.error("exponent must be a nonnegative integer")
            self.pos = m.end()
            return p ** int(m.group())
        return p

    def parse_base(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.parse_expr()
            self.expect(")")
            return p
        if ch == "-":
            self.pos += 1
            return -self.parse_base()
        if ch.isdigit():
            return self.ring.constant(self.parse_rational())
        m = _NAME_RE.match(self.text, self.pos)
        if m:
            name = m.group()
            if name not in self.ring.variables:
                self.error(f"unknown variable {name!r}")
            self.pos = m.end()
            return self.ring.var(self.ring.variables.index(name))
        self.error("expected a variable, number or parenthesized expression")

    def parse_rational(self):
        m = _INT_RE.match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        num = int(m.group())
        save = self.pos
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            m = _INT_RE.match(self.text, self.pos)
            if m and int(m.group()) > 0:
                self.pos = m.end()
                return Fraction(num, int(m.group()))
            self.pos = save
        return Fraction(num)


def parse_polynomial(text, ring):
    parser = _Parser(text, ring)
    p = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("unexpected trailing input")
    return p


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _format_monomial(exponents, variables):
    parts = []
    for name, e in zip(variables, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p):
    """Canonical text form; parsing it back yields the same polynomial.

    A leading negative coefficient is printed explicitly (e.g. "-1*x^2"),
    because "-x^2" would read back as (-x)^2 under the grammar.
    """
    if not p.terms:
        return "0"
    chunks = []
    first = True
    for e, c in p.terms.items():
        mono = _format_monomial(e, p.ring.variables)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{format_rational(mag)}*{mono}"
        else:
            body = format_rational(mag)
        if first:
            if c < 0:
                if mono:
                    chunks.append(f"-{format_rational(mag)}*{mono}")
                else:
                    chunks.append(f"-{body}")
            else:
                chunks.append(body)
            first = False
        else:
            chunks.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(chunks)
