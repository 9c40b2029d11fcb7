"""Text forms: ring/field elements, points and Weierstrass equations.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/')? unary)*        # juxtaposition multiplies
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'i' | 'w' | 'x' | 'y' | '(' expr ')'

Expressions evaluate to polynomials in x, y over the field; a curve is either
``[a1,a2,a3,a4,a6]`` or an equation ``y^2 + ... = x^3 + ...``, optionally
followed by ``over Qi`` / ``over Qw3``.
"""

from __future__ import annotations

import re

from .fields import QRat
from .rings import QInt, RingTag

Poly = dict  # {(deg_x, deg_y): QRat}


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        super().__init__(f"at position {pos} in {text!r}: expected {expected}")
        self.text = text
        self.pos = pos
        self.expected = expected


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-zω])|(\S))")
_VARS = {"x": (1, 0), "y": (0, 1)}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1):
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _padd(p: Poly, q: Poly, sign: int = 1) -> Poly:
    r = dict(p)
    for k, v in q.items():
        v = v if sign > 0 else -v
        r[k] = r[k] + v if k in r else v
        if r[k].is_zero():
            del r[k]
    return r


def _pmul(p: Poly, q: Poly) -> Poly:
    r: Poly = {}
    for (i1, j1), u in p.items():
        for (i2, j2), v in q.items():
            k = (i1 + i2, j1 + j2)
            r[k] = r[k] + u * v if k in r else u * v
            if r[k].is_zero():
                del r[k]
    return r


class _Parser:
    def __init__(self, text: str, tag: RingTag, variables: bool):
        self.text = text
        self.tag = tag
        self.variables = variables
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        raise ParseError(self.text, self.peek()[2], expected)

    def const(self, value: QRat) -> Poly:
        return {} if value.is_zero() else {(0, 0): value}

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail("end of input")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = 1 if self.take()[1] == "+" else -1
            p = _padd(p, self.term(), sign)
        return p

    def _starts_atom(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("int", "name") or (kind == "op" and val == "(")

    def term(self) -> Poly:
        p = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = _pmul(p, self.unary())
            elif kind == "op" and val == "/":
                self.take()
                pos = self.peek()[2]
                q = self.unary()
                if set(q) - {(0, 0)} or not q:
                    raise ParseError(self.text, pos, "a nonzero constant divisor")
                p = _pmul(p, self.const(q[(0, 0)].inv()))
            elif self._starts_atom():
                p = _pmul(p, self.power())
            else:
                return p

    def unary(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "op" and val in ("+", "-"):
            self.take()
            p = self.unary()
            return p if val == "+" else {k: -v for k, v in p.items()}
        return self.power()

    def power(self) -> Poly:
        p = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError(self.text, pos, "an integer exponent")
            r = self.const(QRat(1, 1, self.tag))
            for _ in range(int(val)):
                r = _pmul(r, p)
            return r
        return p

    def atom(self) -> Poly:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return self.const(QRat(int(val), 1, self.tag))
        if kind == "name":
            self.take()
            if val in ("i", "I"):
                if self.tag is not RingTag.GAUSSIAN:
                    raise ParseError(self.text, pos, "'w' (i is not in Q(sqrt(-3)))")
                return self.const(QRat.gen(self.tag))
            if val in ("w", "ω"):
                if self.tag is not RingTag.OMEGA:
                    raise ParseError(self.text, pos, "'i' (w is not in Q(i))")
                return self.const(QRat.gen(self.tag))
            if self.variables and val in _VARS:
                return {_VARS[val]: QRat(1, 1, self.tag)}
            raise ParseError(self.text, pos, "a number, generator or variable")
        if kind == "op" and val == "(":
            self.take()
            p = self.expr()
            if self.peek()[1] != ")":
                self.fail("')'")
            self.take()
            return p
        self.fail("a number, generator, variable or '('")


def infer_tag(text: str, default: RingTag | None = None) -> RingTag:
    has_i = re.search(r"(?<![A-Za-z])[iI](?![A-Za-z])", text) is not None
    has_w = re.search(r"(?<![A-Za-z])[wω](?![A-Za-z])", text) is not None
    if has_i and has_w:
        raise ParseError(text, 0, "a single field generator")
    if has_i:
        return RingTag.GAUSSIAN
    if has_w:
        return RingTag.OMEGA
    if default is None:
        raise ParseError(text, 0, "a field tag (text has no i or w)")
    return default


def parse_polynomial(text: str, tag: RingTag) -> Poly:
    return _Parser(text, tag, variables=True).parse()


def parse_qrat(text: str, tag: RingTag | None = None) -> QRat:
    tag = infer_tag(text, tag) if tag is None else tag
    p = _Parser(text, tag, variables=False).parse()
    return p.get((0, 0), QRat(0, 1, tag))


def parse_qint(text: str, tag: RingTag | None = None) -> QInt:
    x = parse_qrat(text, tag)
    if x.den != 1:
        raise ValueError(f"{text!r} is not integral")
    return x.num


_OVER = re.compile(r"^(.*?)\s+over\s+(\S+)\s*$", re.S)


def split_field(text: str, tag: RingTag | None = None) -> tuple[str, RingTag]:
    """Strip a trailing ``over Qi``/``over Qw3`` and resolve the tag."""
    m = _OVER.match(text)
    if m:
        body, named = m.group(1), RingTag.from_name(m.group(2))
        if tag is not None and tag is not named:
            raise ValueError(f"curve says over {named.value} but field {tag.value} was requested")
        return body, named
    return text, infer_tag(text, tag)


def _side(text: str, side: str, offset: int, tag: RingTag) -> Poly:
    # report positions relative to the whole (stripped) input
    try:
        return parse_polynomial(side, tag)
    except ParseError as exc:
        raise ParseError(text.strip(), exc.pos + offset, exc.expected) from None


def parse_ainvariants(text: str, tag: RingTag | None = None) -> tuple[tuple[QRat, ...], RingTag]:
    """Parse a curve to its a-invariants (a1, a2, a3, a4, a6)."""
    body, tag = split_field(text.strip(), tag)
    body = body.strip()
    if body.startswith("["):
        if not body.endswith("]"):
            raise ParseError(text, len(body), "']'")
        items = body[1:-1].split(",")
        if len(items) != 5:
            raise ParseError(text, 0, "exactly five a-invariants")
        return tuple(parse_qrat(s, tag) for s in items), tag
    if body.count("=") != 1:
        raise ParseError(text, 0, "an equation 'y^2 + ... = x^3 + ...' or '[a1,a2,a3,a4,a6]'")
    lhs, rhs = body.split("=")
    # F(x, y) = lhs - rhs = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
    f = _padd(_side(text, lhs, 0, tag), _side(text, rhs, len(lhs) + 1, tag), -1)
    zero = QRat(0, 1, tag)
    scale = f.get((0, 2))
    if scale is None or f.get((3, 0), zero) != -scale:
        raise ParseError(text, 0, "a Weierstrass equation with y^2 and x^3 on opposite sides")
    allowed = {(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)}
    if set(f) - allowed:
        raise ParseError(text, 0, "only Weierstrass monomials y^2, xy, y, x^3, x^2, x, 1")
    c = {k: v / scale for k, v in f.items()}
    get = lambda k: c.get(k, zero)  # noqa: E731
    return (get((1, 1)), -get((2, 0)), get((0, 1)), -get((1, 0)), -get((0, 0))), tag


def format_poly_terms(terms: list[tuple[QRat, str]]) -> str:
    """Join (coefficient, monomial) pairs into '+'/'-' separated text."""
    out = ""
    for coeff, mono in terms:
        if coeff.is_zero():
            continue
        # pull the sign out of single-term coefficients such as -3 or -2*i
        single = coeff.num.a == 0 or coeff.num.b == 0
        negative = single and str(coeff).startswith("-")
        c = -coeff if negative else coeff
        if mono and c == 1:
            body = mono
        else:
            cs = str(c)
            if mono and ("+" in cs[1:] or "-" in cs[1:] or "/" in cs):
                cs = f"({cs})" if not cs.startswith("(") else cs
            body = f"{cs}*{mono}" if mono else cs
        if not out:
            out = ("-" if negative else "") + body
        else:
            out += (" - " if negative else " + ") + body
    return out or "0"
