"""Text form of multivectors.

Grammar (whitespace is insignificant)::

    sum    := ['+'|'-'] prod { ('+'|'-') prod }
    prod   := factor { ('*'|'^') factor }
    factor := ('+'|'-') factor | atom
    atom   := number [blade] | blade | '(' sum ')'
    number := digits ['.' digits] ['E' ['+'|'-'] digits]   (or '.' digits ...)
    blade  := 'e' digits | 'e{' int { ',' int } '}'

``*`` is the geometric product and ``^`` the outer product.  In ``e132`` each
digit is one index; indices above 9 need the brace form.  The exponent marker
is upper-case ``E`` because lower-case ``e`` starts a blade, so ``2e12`` is
``2 * e1 e2``.  Blade factors are multiplied in the order written, so
``e21 == -e12``.
"""

from dataclasses import dataclass
import math
import re

import numpy as np

from .algebra import Multivector, Signature
from .errors import GAError, ParseError

MAX_DEPTH = 64
MAX_LENGTH = 1 << 20

_NUMBER = re.compile(r"(\d+(\.\d*)?|\.\d+)(E[+-]?\d+)?")
_DIGITS = re.compile(r"\d+")


class _Parser:
    def __init__(self, text, sig):
        self.text = text
        self.sig = sig
        self.pos = 0
        self.depth = 0

    def offset(self, pos=None):
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, msg, pos=None):
        raise ParseError(msg, self.offset(pos), self.text)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.fail(f"expression nested deeper than {MAX_DEPTH}")

    def parse(self):
        if self.peek() == "":
            self.fail("empty expression")
        value = self.sum()
        if self.peek() != "":
            self.fail(f"unexpected character {self.text[self.pos]!r}")
        return value

    def sum(self):
        sign = 1.0
        if self.peek() in ("+", "-"):
            sign = -1.0 if self.text[self.pos] == "-" else 1.0
            self.pos += 1
        value = self.prod() * sign
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.prod()
            value = value + rhs if op == "+" else value - rhs
        return value

    def prod(self):
        value = self.factor()
        while self.peek() in ("*", "^"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.factor()
            value = value * rhs if op == "*" else value ^ rhs
        return value

    def factor(self):
        c = self.peek()
        if c in ("+", "-"):
            self.pos += 1
            self.enter()
            value = self.factor()
            self.depth -= 1
            return -value if c == "-" else value
        return self.atom()

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            self.enter()
            value = self.sum()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            self.depth -= 1
            return value
        if c == "e":
            return self.blade()
        if c.isdigit() or c == ".":
            start = self.pos
            m = _NUMBER.match(self.text, self.pos)
            if not m or not m.group(0).isascii():
                self.fail("malformed number")
            self.pos = m.end()
            x = float(m.group(0))
            if not math.isfinite(x):
                self.fail("number out of range", start)
            if self.peek() == "e":
                return self.blade() * x
            return Multivector.scalar(self.sig, x)
        if c == "":
            self.fail("unexpected end of input")
        self.fail(f"unexpected character {c!r}")

    def blade(self):
        start = self.pos
        self.pos += 1  # 'e'
        t = self.text
        if self.pos < len(t) and t[self.pos] == "{":
            self.pos += 1
            indices = []
            while True:
                self.skip()
                m = _DIGITS.match(t, self.pos)
                if not m or not m.group(0).isascii():
                    self.fail("expected blade index")
                indices.append((int(m.group(0)), self.pos))
                self.pos = m.end()
                nxt = self.peek()
                self.pos += 1
                if nxt == "}":
                    break
                if nxt != ",":
                    self.fail("expected ',' or '}' in blade", self.pos - 1)
        else:
            m = _DIGITS.match(t, self.pos)
            if not m or not m.group(0).isascii():
                self.fail("expected digits after 'e'", start)
            indices = [(int(ch), m.start() + k) for k, ch in enumerate(m.group(0))]
            self.pos = m.end()
        for i, pos in indices:
            if not 1 <= i <= self.sig.n:
                self.fail(f"basis index {i} out of range for {self.sig}", pos)
        return Multivector.blade(self.sig, *(i for i, _ in indices))


def parse(text, sig: Signature) -> Multivector:
    """Parse ``text`` (str or UTF-8 bytes) into a multivector of ``sig``."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not valid UTF-8", exc.start, None) from None
    if not isinstance(text, str):
        raise GAError("parse expects a string")
    if len(text) > MAX_LENGTH:
        raise ParseError("expression too long", MAX_LENGTH, None)
    return _Parser(text, sig).parse()


@dataclass(frozen=True)
class ParsedExpression:
    """Merged ``(coefficient, mask)`` terms in ascending mask order."""

    terms: tuple
    sig: Signature

    def to_multivector(self):
        c = np.zeros(self.sig.dim)
        for coeff, mask in self.terms:
            c[mask] += coeff
        return Multivector(self.sig, c)

    @classmethod
    def from_multivector(cls, a):
        return cls(tuple((float(a.coeffs[m]), int(m)) for m in np.flatnonzero(a.coeffs)), a.sig)


def parse_expression(text, sig: Signature) -> ParsedExpression:
    return ParsedExpression.from_multivector(parse(text, sig))


def format_number(x: float) -> str:
    """Shortest round-tripping text; integers without a decimal point, exponent as ``E``."""
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x)).replace("e", "E")


def blade_name(mask: int) -> str:
    indices = [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]
    if all(i <= 9 for i in indices):
        return "e" + "".join(map(str, indices))
    return "e{" + ",".join(map(str, indices)) + "}"


def serialize(a: Multivector) -> str:
    parts = []
    for mask in np.flatnonzero(a.coeffs):
        c = float(a.coeffs[mask])
        mag = abs(c)
        if mask == 0:
            body = format_number(mag)
        elif mag == 1.0:
            body = blade_name(int(mask))
        else:
            num = format_number(mag)
            body = num + ("*" if "E" in num else "") + blade_name(int(mask))
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Fixture:
    sig: Signature
    expr: str
    expected: str
    line: int


def load_fixtures(path):
    """Read ``<sig>;<expr>;<expected>`` lines; blank lines and ``#`` comments are skipped."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split(";")
            if len(fields) != 3:
                raise GAError(f"{path}:{lineno}: expected '<sig>;<expr>;<expected>'")
            sig_text, expr, expected = (f.strip() for f in fields)
            out.append(Fixture(Signature.parse(sig_text), expr, expected, lineno))
    return out
