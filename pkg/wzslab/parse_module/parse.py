"""
Parsers for command-line and API inputs: group specs, weight specs and
sequence literals
"""
import re

from wzslab.config import AUT_CAP, ORDER_CAP, WEIGHT_SPECS
from wzslab.errors import InvalidFactor, ParseError
from wzslab.group_module import make_group, weight_set_from_spec
from wzslab.logger import logger
from wzslab.sequence_module import Sequence

_FACTOR = re.compile(r"^[cC]?(\d+)$")

def parse_group_spec(text, cap=ORDER_CAP):
    """
    Parse a group spec into a FiniteAbelianGroup

    Examples:
        "3"       -> C3
        "2,4"     -> C2+C4
        "C2+C4"   -> C2+C4
        "1" or "" -> trivial group
    """
    raw = (text or "").strip()
    if raw in ("", "1", "C1", "c1"):
        return make_group([], cap=cap)
    factors = []
    column = 1
    for part in re.split(r"[,+x]", raw):
        match = _FACTOR.match(part.strip())
        if match is None:
            raise ParseError(f"bad cyclic factor {part.strip()!r}", text=raw, column=column)
        factors.append(int(match.group(1)))
        column += len(part) + 1
    try:
        G = make_group(factors, cap=cap)
    except InvalidFactor as e:
        raise ParseError(str(e), text=raw)
    logger.debug(f"Group spec {raw!r} -> {G.label()}")
    return G

def parse_weight_spec(G, text, aut_cap=AUT_CAP):
    spec = (text or "").strip().lower()
    if spec not in WEIGHT_SPECS:
        raise ParseError(f"unknown weight set {text!r}, expected one of {', '.join(WEIGHT_SPECS)}", text=text or "")
    return weight_set_from_spec(G, spec, aut_cap=aut_cap)

class _Cursor:
    """Position in a literal, reported 1-based as line and column"""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        before = self.text[:pos]
        line = before.count("\n") + 1
        column = pos - (before.rfind("\n") + 1) + 1
        return line, column

    def fail(self, message, pos=None):
        line, column = self.where(pos)
        raise ParseError(message, text=self.text, line=line, column=column)

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            found = self.peek() or "end of input"
            self.fail(f"expected {char!r}, found {found!r}")
        self.pos += 1

    def integer(self):
        self.skip_space()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        if token in ("", "+", "-"):
            self.fail("expected an integer", start)
        return int(token), start

def parse_sequence(G, text):
    """
    Parse a sequence literal such as [(1)^5,(4)^5] or [(0,1),(1,3)^2]

    Coordinates are reduced modulo the invariant factors of G; the
    exponent defaults to 1.
    """
    cur = _Cursor(text or "")
    cur.expect("[")
    counts = {}
    if cur.peek() == "]":
        cur.pos += 1
    else:
        while True:
            start = cur.pos
            cur.expect("(")
            coords = []
            if cur.peek() != ")":
                while True:
                    value, _ = cur.integer()
                    coords.append(value)
                    if cur.peek() != ",":
                        break
                    cur.pos += 1
            cur.expect(")")
            if len(coords) != G.rank:
                cur.fail(f"element has {len(coords)} coordinates, {G.label()} needs {G.rank}", start)
            exponent = 1
            if cur.peek() == "^":
                cur.pos += 1
                exponent, at = cur.integer()
                if exponent < 0:
                    cur.fail("negative exponent", at)
            g = G.element(coords)
            counts[g] = counts.get(g, 0) + exponent
            if cur.peek() == ",":
                cur.pos += 1
                continue
            cur.expect("]")
            break
    if cur.peek():
        cur.fail(f"unexpected trailing text {cur.peek()!r}")
    return Sequence.from_counts(G, counts)

def parse_discriminant(text):
    try:
        return int(str(text).strip())
    except ValueError:
        raise ParseError(f"discriminant must be an integer, got {text!r}", text=str(text))
