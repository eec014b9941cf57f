"""Text literals for elements, words, indices, triples and germs.

Every printer here round-trips through its parser.  The grammars:

    factor    ::=  "I" | "P(" nat "," nat ")" | "F(" nat "," nat ")"
    monomial  ::=  "ZERO" | "[" factor ("|" factor)* "]*t^" int
    element   ::=  "0" | "Z[" nat "]" | "Z*[" nat "]"
                 | "B[" nat ";" int ";" nat ("," nat)* ";" nat ("," nat)* "]"
    index     ::=  "(" entry ("," entry)* ")"      entry ::= nat | "inf"
    triple    ::=  "(" int ";" int ("," int)* ";" entry ("," entry)* ")"
    germ      ::=  JSON object {"base": index, "elem": element}

Parse errors carry the offending position for caller-side reporting.
"""

import json
import re

from .monomials import (
    FREE,
    IDENTITY,
    IDENTITY_FACTOR,
    PINCHED,
    ZERO,
    Monomial,
    PrimitiveFactor,
    free,
    monomial,
    pinched,
)
from .semigroup import T_ZERO, TElement, generator, star_t, telement
from .spectrum import INF, extended_index
from .germs import Germ, make_germ
from .triples import SheuTriple, make_triple


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"at position {pos}: {message}")
        self.message = message
        self.text = text
        self.pos = pos


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def eat(self, literal: str):
        if not self.text.startswith(literal, self.pos):
            self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def match(self, pattern: str, description: str) -> str:
        m = re.compile(pattern).match(self.text, self.pos)
        if not m:
            self.error(f"expected {description}")
        self.pos = m.end()
        return m.group(0)

    def peek(self, literal: str) -> bool:
        return self.text.startswith(literal, self.pos)

    def done(self):
        if self.pos != len(self.text):
            self.error("trailing input")

    def int(self) -> int:
        return int(self.match(r"-?\d+", "an integer"))

    def nat(self) -> int:
        return int(self.match(r"\d+", "a non-negative integer"))

    def entry(self):
        if self.peek("inf"):
            self.eat("inf")
            return INF
        return self.nat()

    def int_list(self) -> list:
        out = [self.int()]
        while self.peek(","):
            self.eat(",")
            out.append(self.int())
        return out

    def nat_list(self) -> list:
        out = [self.nat()]
        while self.peek(","):
            self.eat(",")
            out.append(self.nat())
        return out

    def entry_list(self) -> list:
        out = [self.entry()]
        while self.peek(","):
            self.eat(",")
            out.append(self.entry())
        return out


# -- factors and monomials --------------------------------------------------

def format_factor(f: PrimitiveFactor) -> str:
    if f.kind == IDENTITY:
        return "I"
    return f"{f.kind}({f.a},{f.b})"


def _parse_factor(cur: _Cursor) -> PrimitiveFactor:
    if cur.peek("I"):
        cur.eat("I")
        return IDENTITY_FACTOR
    if cur.peek("P") or cur.peek("F"):
        kind = cur.match(r"[PF]", "a factor kind")
        cur.eat("(")
        a = cur.nat()
        cur.eat(",")
        b = cur.nat()
        cur.eat(")")
        return pinched(a, b) if kind == PINCHED else free(a, b)
    cur.error("expected a factor (I, P(a,b) or F(a,b))")


def parse_factor(text: str) -> PrimitiveFactor:
    cur = _Cursor(text)
    f = _parse_factor(cur)
    cur.done()
    return f


def format_monomial(x: Monomial) -> str:
    if x.is_zero:
        return "ZERO"
    body = "|".join(format_factor(f) for f in x.factors)
    return f"[{body}]*t^{x.z_exp}"


def parse_monomial(text: str) -> Monomial:
    cur = _Cursor(text)
    if cur.peek("ZERO"):
        cur.eat("ZERO")
        cur.done()
        return ZERO
    cur.eat("[")
    factors = [_parse_factor(cur)]
    while cur.peek("|"):
        cur.eat("|")
        factors.append(_parse_factor(cur))
    cur.eat("]*t^")
    z = cur.int()
    cur.done()
    return monomial(factors, z)


# -- canonical elements -----------------------------------------------------

def format_element(s: TElement) -> str:
    if s.is_zero:
        return "0"
    m = ",".join(str(v) for v in s.m)
    n = ",".join(str(v) for v in s.n)
    return f"B[{s.level};{s.r};{m};{n}]"


def parse_element(text: str, ell: int = None) -> TElement:
    """Parse an element literal; Z forms need the ambient tensor length."""
    cur = _Cursor(text)
    if cur.peek("0"):
        cur.eat("0")
        cur.done()
        return T_ZERO
    if cur.peek("Z"):
        cur.eat("Z")
        starred = cur.peek("*")
        if starred:
            cur.eat("*")
        cur.eat("[")
        k = cur.nat()
        cur.eat("]")
        cur.done()
        if ell is None:
            cur.pos = 0
            cur.error("generator literals need the ambient tensor length")
        g = generator(ell, k)
        return star_t(g) if starred else g
    cur.eat("B[")
    level = cur.nat()
    cur.eat(";")
    r = cur.int()
    cur.eat(";")
    m = cur.nat_list()
    cur.eat(";")
    n = cur.nat_list()
    cur.eat("]")
    cur.done()
    if len(m) != len(n):
        cur.pos = 0
        cur.error("m and n must have the same length")
    if ell is not None and len(m) != ell:
        cur.pos = 0
        cur.error(f"element has tensor length {len(m)}, expected {ell}")
    return telement(level, r, m, n)


def element_to_json(s: TElement) -> dict:
    if s.is_zero:
        return {"zero": True}
    return {"level": s.level, "r": s.r, "m": list(s.m), "n": list(s.n)}


def element_from_json(data: dict) -> TElement:
    if data.get("zero"):
        return T_ZERO
    return telement(data["level"], data["r"], data["m"], data["n"])


# -- extended indices --------------------------------------------------------

def format_index(k) -> str:
    return "(" + ",".join("inf" if v == INF else str(v) for v in k) + ")"


def parse_index(text: str) -> tuple:
    cur = _Cursor(text)
    cur.eat("(")
    entries = cur.entry_list()
    cur.eat(")")
    cur.done()
    return extended_index(entries)


def index_to_json(k) -> list:
    return ["inf" if v == INF else v for v in k]


def index_from_json(data) -> tuple:
    return extended_index(INF if v == "inf" else v for v in data)


# -- transformation-groupoid triples ------------------------------------------

def format_triple(t: SheuTriple) -> str:
    x = ",".join(str(v) for v in t.x)
    w = ",".join("inf" if v == INF else str(v) for v in t.w)
    return f"({t.z};{x};{w})"


def parse_triple(text: str) -> SheuTriple:
    cur = _Cursor(text)
    cur.eat("(")
    z = cur.int()
    cur.eat(";")
    x = cur.int_list()
    cur.eat(";")
    w = cur.entry_list()
    cur.eat(")")
    cur.done()
    if len(x) != len(w):
        cur.pos = 0
        cur.error("x and w must have the same length")
    return make_triple(z, x, w)


def triple_to_json(t: SheuTriple) -> dict:
    return {"z": t.z, "x": list(t.x), "w": index_to_json(t.w)}


def triple_from_json(data: dict) -> SheuTriple:
    return make_triple(data["z"], data["x"], index_from_json(data["w"]))


# -- germs ---------------------------------------------------------------------

def format_germ(g: Germ) -> str:
    return json.dumps(
        {"base": format_index(g.base), "elem": format_element(g.elem)},
        sort_keys=True,
    )


def parse_germ(text: str, ell: int = None) -> Germ:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid germ JSON ({exc.msg})", text, exc.pos)
    if not isinstance(data, dict) or set(data) != {"base", "elem"}:
        raise ParseError('germ JSON needs exactly the keys "base" and "elem"', text, 0)
    base = parse_index(data["base"])
    elem = parse_element(data["elem"], ell=ell if ell is not None else len(base))
    return make_germ(base, elem)
