"""Text syntax for Laurent coefficients and Temperley-Lieb elements.

Grammar (whitespace is ignored)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := atom ("^" ["-"] INT)?
    atom    := INT | "A" | "Id" INT | "e" INT | "(" expr ")"
             | FUNC "(" expr ")" | "[" pair ("," pair)* "]"
    FUNC    := bar | sigma | w | u | phi_l | phi_t | phibar_l | phibar_t
    pair    := "(" POINT "," POINT ")"      POINT := ("L" | "R") INT

``*`` multiplies scalars, scales elements and composes elements.  A bare
scalar added to an element stands for that multiple of the identity.
Negative exponents are only accepted on monomials such as ``A^-4``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .coeff import ONE, A, LaurentPoly
from .tl import (
    TLDiagram,
    TLElement,
    compose,
    display_key,
    flip_sigma,
    generator_e,
    identity,
    mirror_bar,
)

__all__ = [
    "ParseError",
    "parse_expr",
    "parse_laurent",
    "print_element",
    "format_coeff",
]

Value = Union[LaurentPoly, TLElement]

_FUNCS = ("bar", "sigma", "w", "u", "phi_l", "phi_t", "phibar_l", "phibar_t")


class ParseError(ValueError):
    """Syntax or typing error in an expression, with a character offset."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()\[\],]))"
)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


# --- AST -------------------------------------------------------------------
# nodes are tuples: (tag, pos, *children)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> _Tok:
        t = self.cur
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "end" else "end of input"
            raise ParseError(f"expected {want}, found {got}", t.pos, self.text)
        self.i += 1
        return t

    def parse(self):
        node = self.expr()
        if self.cur.kind != "end":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos, self.text)
        return node

    def expr(self):
        node = self.term()
        while self.cur.text in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = ("add" if op.text == "+" else "sub", op.pos, node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.cur.text == "*":
            op = self.take()
            node = ("mul", op.pos, node, self.unary())
        return node

    def unary(self):
        if self.cur.text == "-":
            op = self.take()
            return ("neg", op.pos, self.unary())
        if self.cur.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.cur.text == "^":
            op = self.take()
            sign = 1
            if self.cur.text == "-":
                self.take()
                sign = -1
            n = self.take(kind="int")
            node = ("pow", op.pos, node, sign * int(n.text))
        return node

    def atom(self):
        t = self.cur
        if t.kind == "int":
            self.take()
            return ("int", t.pos, int(t.text))
        if t.text == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if t.text == "[":
            return self.raw_pairing()
        if t.kind == "name":
            self.take()
            name = t.text
            if name == "A":
                return ("A", t.pos)
            if name in _FUNCS:
                self.take("(")
                arg = self.expr()
                self.take(")")
                return ("func", t.pos, name, arg)
            m = re.fullmatch(r"Id(\d+)", name)
            if m:
                return ("Id", t.pos, int(m.group(1)))
            m = re.fullmatch(r"(e\d+)+", name)
            if m:
                idx = [int(s) for s in re.findall(r"e(\d+)", name)]
                return ("word", t.pos, tuple(idx))
            raise ParseError(f"unknown name {name!r}", t.pos, self.text)
        got = repr(t.text) if t.kind != "end" else "end of input"
        raise ParseError(f"unexpected {got}", t.pos, self.text)

    def raw_pairing(self):
        start = self.take("[")
        pairs = []
        while True:
            self.take("(")
            a = self.take(kind="name")
            self.take(",")
            b = self.take(kind="name")
            self.take(")")
            for p in (a, b):
                if not re.fullmatch(r"[LR]\d+", p.text):
                    raise ParseError(f"bad boundary point {p.text!r}", p.pos, self.text)
            pairs.append((a.text, b.text))
            if self.cur.text == ",":
                self.take()
                continue
            self.take("]")
            return ("raw", start.pos, tuple(pairs))


# --- evaluation --------------------------------------------------------------


def _infer_k(node, found: set[int]) -> None:
    tag = node[0]
    if tag == "Id":
        found.add(node[2])
    for child in node[2:]:
        if isinstance(child, tuple) and child and isinstance(child[0], str):
            _infer_k(child, found)


def _max_generator(node) -> int:
    best = 0
    if node[0] == "word" and node[2]:
        best = max(node[2])
    for child in node[2:]:
        if isinstance(child, tuple) and child and isinstance(child[0], str):
            best = max(best, _max_generator(child))
    return best


class _Evaluator:
    def __init__(self, text: str, k: int | None):
        self.text = text
        self.k = k

    def fail(self, msg: str, pos: int):
        raise ParseError(msg, pos, self.text)

    def need_k(self, pos: int) -> int:
        if self.k is None:
            self.fail("cannot infer the strand count; pass k explicitly", pos)
        return self.k

    def ev(self, node) -> Value:
        tag, pos = node[0], node[1]
        if tag == "int":
            return LaurentPoly.const(node[2])
        if tag == "A":
            return A
        if tag == "Id":
            return TLElement.of(identity(node[2]))
        if tag == "word":
            k = self.need_k(pos)
            out = TLElement.of(identity(k))
            for i in node[2]:
                if not 1 <= i <= k - 1:
                    self.fail(f"generator e{i} does not exist in TL_{k}", pos)
                out = compose(out, generator_e(k, i))
            return out
        if tag == "raw":
            pairs = node[2]
            m = max((int(p[1:]) for pr in pairs for p in pr if p[0] == "L"), default=0)
            n = max((int(p[1:]) for pr in pairs for p in pr if p[0] == "R"), default=0)
            try:
                return TLElement.of(TLDiagram.from_pairs(m, n, pairs))
            except ValueError as exc:
                self.fail(str(exc), pos)
        if tag == "neg":
            return -self.ev(node[2])
        if tag == "pow":
            base, n = self.ev(node[2]), node[3]
            if isinstance(base, LaurentPoly):
                try:
                    return base**n
                except ValueError as exc:
                    self.fail(str(exc), pos)
            if n < 0:
                self.fail("negative powers of TL elements are undefined", pos)
            if base.m != base.n:
                self.fail("powers need a square TL element", pos)
            out = TLElement.of(identity(base.m))
            for _ in range(n):
                out = compose(out, base)
            return out
        if tag in ("add", "sub"):
            x, y = self.ev(node[2]), self.ev(node[3])
            x, y = self.promote(x, y, pos)
            try:
                return x + y if tag == "add" else x - y
            except ValueError as exc:
                self.fail(str(exc), pos)
        if tag == "mul":
            x, y = self.ev(node[2]), self.ev(node[3])
            if isinstance(x, LaurentPoly) or isinstance(y, LaurentPoly):
                return x * y
            if x.n != y.m:
                self.fail(f"cannot compose TL({x.m},{x.n}) with TL({y.m},{y.n})", pos)
            return compose(x, y)
        if tag == "func":
            return self.func(node[2], self.ev(node[3]), pos)
        raise AssertionError(tag)

    def promote(self, x: Value, y: Value, pos: int):
        if isinstance(x, LaurentPoly) and isinstance(y, TLElement):
            if y.m != y.n:
                self.fail("a scalar can only be added to a square TL element", pos)
            x = TLElement.of(identity(y.m), x)
        elif isinstance(y, LaurentPoly) and isinstance(x, TLElement):
            if x.m != x.n:
                self.fail("a scalar can only be added to a square TL element", pos)
            y = TLElement.of(identity(x.m), y)
        return x, y

    def func(self, name: str, arg: Value, pos: int) -> Value:
        if name == "bar":
            if isinstance(arg, LaurentPoly):
                return arg.conj()
            return mirror_bar(arg)
        if not isinstance(arg, TLElement):
            self.fail(f"{name}() expects a TL element", pos)
        if name == "sigma":
            if arg.m != arg.n:
                self.fail("sigma() expects a square TL element", pos)
            return flip_sigma(arg)
        # sliding operators act on an identity bundle
        from . import sliding

        try:
            d = arg.single_diagram()
        except ValueError:
            d = None
        if d is None or d.m != d.n or d.through_degree != d.m:
            self.fail(f"{name}() expects an identity diagram such as Id4", pos)
        k = d.m
        try:
            if name == "w":
                return sliding.w_id(k)
            if name == "u":
                return sliding.u_id(k)
            variant = {
                "phi_l": sliding.LOWER_POS,
                "phi_t": sliding.UPPER_POS,
                "phibar_l": sliding.LOWER_NEG,
                "phibar_t": sliding.UPPER_NEG,
            }[name]
            return sliding.phi(variant, k)
        except ValueError as exc:
            self.fail(str(exc), pos)


def parse_expr(text: str, k: int | None = None) -> TLElement:
    """Parse ``text`` into a `TLElement`.

    ``k`` fixes the strand count used by bare generators ``e<i>``.  When it
    is omitted it is inferred from ``Id<k>`` occurrences, or from the
    largest generator index.  Pure scalars are returned as multiples of
    ``Id_k``.
    """
    node = _Parser(text).parse()
    if k is None:
        found: set[int] = set()
        _infer_k(node, found)
        if len(found) > 1:
            raise ParseError(f"conflicting strand counts {sorted(found)}", 0, text)
        if found:
            k = found.pop()
        elif _max_generator(node):
            k = _max_generator(node) + 1
    val = _Evaluator(text, k).ev(node)
    if isinstance(val, LaurentPoly):
        if k is None:
            raise ParseError("scalar expression has no strand count; pass k", 0, text)
        return TLElement.of(identity(k), val)
    return val


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial such as ``"A^10 - A^6"``."""
    node = _Parser(text).parse()
    val = _Evaluator(text, None).ev(node)
    if not isinstance(val, LaurentPoly):
        raise ParseError("expression is not a Laurent polynomial", 0, text)
    return val


def format_coeff(c: LaurentPoly, label: str, first: bool) -> str:
    """Render ``c * label`` as one signed term of a sum."""
    if c.is_monomial():
        (e, v), = c.terms.items()
        neg = v < 0
        mag = LaurentPoly({e: abs(v)})
        body = label if mag == ONE else f"{mag}*{label}"
    else:
        neg = False
        body = f"({c})*{label}"
    if first:
        return ("-" if neg else "") + body
    return ("- " if neg else "+ ") + body


def print_element(x: TLElement, raw: bool = False) -> str:
    """Deterministic text form; square diagrams are written as reduced words.

    ``parse_expr(print_element(x)) == x`` for every element.
    """
    if x.is_zero():
        return "0"
    parts = []
    for i, (d, c) in enumerate(x.items()):
        label = d.raw() if raw else str(d)
        parts.append(format_coeff(c, label, i == 0))
    return " ".join(parts)
