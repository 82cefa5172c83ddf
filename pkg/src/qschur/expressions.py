"""Text grammar for elements and operator chains.

Element terms look like ``(q^-1) t1*t2 e[1,2]``: an optional parenthesised
scalar, an optional Hecke word, an optional embedded tensor.  Operator atoms
are ``R(e1)``, ``R(e*2)``, ``R(t1)``, ``R(t1^-1)``, ``K1``, ``K1^-1`` and
``K1^(1/2)``.  Within a term, factors compose by juxtaposition (or ``*``) and
are evaluated right to left, so ``R(e*1) e[1,1,2]`` applies the derivation to
the embedded tensor; terms are summed with ``+``.  Printing and parsing
round-trip.
"""

from __future__ import annotations

import re

from . import scalars
from .hecke import HeckeElement
from .operators import Derivation, KPower, MulHecke, MulVector, OperatorExpr
from .xtensor import XTensorElement, embed_tensor


class ParseError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<rop>R\()
  | (?P<kop>K(?P<kidx>\d+))
  | (?P<tensor>e\[(?P<tbody>[\d,\s]*)\])
  | (?P<tgen>t(?P<tidx>\d+))
  | (?P<int>\d+)
  | (?P<lpar>\()
  | (?P<sym>[+*^\-\]/])
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if not m:
            raise ParseError(f"bad character {text[i]!r}", i)
        kind = m.lastgroup if m.lastgroup != "kidx" else "kop"
        for name in ("ws", "rop", "kop", "tensor", "tgen", "int", "lpar", "sym"):
            if m.group(name) is not None:
                kind = name
                break
        if kind == "ws":
            i = m.end()
            continue
        if kind == "rop":
            close = text.find(")", m.end())
            if close < 0:
                raise ParseError("unclosed R(...)", i)
            tokens.append(("rop", text[m.end():close].strip(), i))
            i = close + 1
            continue
        if kind == "lpar":
            depth, j = 1, m.end()
            while j < len(text) and depth:
                if text[j] == "(":
                    depth += 1
                elif text[j] == ")":
                    depth -= 1
                j += 1
            if depth:
                raise ParseError("unbalanced parenthesis", i)
            tokens.append(("scalar", text[i + 1:j - 1], i))
            i = j
            continue
        if kind == "kop":
            idx = int(m.group("kidx"))
            j = m.end()
            halfsteps = 2
            if j < len(text) and text[j] == "^":
                halfsteps, j = _parse_k_exponent(text, j + 1)
            tokens.append(("kop", (idx, halfsteps), i))
            i = j
            continue
        if kind == "tensor":
            body = m.group("tbody").strip()
            J = tuple(int(x) for x in body.split(",")) if body else ()
            tokens.append(("tensor", J, i))
            i = m.end()
            continue
        if kind == "tgen":
            idx = int(m.group("tidx"))
            j = m.end()
            inverse = False
            if text[j:j + 3] == "^-1":
                inverse, j = True, j + 3
            tokens.append(("tgen", (idx, inverse), i))
            i = j
            continue
        if kind == "int":
            tokens.append(("int", int(m.group("int")), i))
            i = m.end()
            continue
        tokens.append((m.group("sym"), m.group("sym"), i))
        i = m.end()
    return tokens


def _parse_k_exponent(text, j):
    """Exponent after K<i>^: either an integer or (k/2); returns halfsteps."""
    m = re.match(r"-?\d+", text[j:])
    if m:
        return 2 * int(m.group(0)), j + m.end()
    m = re.match(r"\(\s*(-?\d+)\s*/\s*2\s*\)", text[j:])
    if m:
        return int(m.group(1)), j + m.end()
    m = re.match(r"\(\s*(-?\d+)\s*\)", text[j:])
    if m:
        return 2 * int(m.group(1)), j + m.end()
    raise ParseError("bad exponent on K", j)


_R_INNER_RE = re.compile(r"^(?:e\*(\d+)|e(\d+)|t(\d+)(\^-1)?)$")


def _r_operator(inner, pos):
    m = _R_INNER_RE.match(inner.replace(" ", ""))
    if not m:
        raise ParseError(f"bad operator argument {inner!r}", pos)
    if m.group(1):
        return Derivation(int(m.group(1)))
    if m.group(2):
        return MulVector(int(m.group(2)))
    r = int(m.group(3))
    h = HeckeElement.generator_inverse(r) if m.group(4) else HeckeElement.generator(r)
    return MulHecke(h)


def evaluate(text, n):
    """Parse and evaluate an element-or-operator-chain expression.

    Returns the resulting element in normal form.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    terms = []
    current = []
    for tok in tokens:
        if tok[0] == "+":
            terms.append(current)
            current = []
        elif tok[0] == "*":
            continue
        else:
            current.append(tok)
    terms.append(current)
    total = None
    for term in terms:
        if not term:
            raise ParseError("empty term", 0)
        value = _eval_term(term, n)
        total = value if total is None else total + value
    return total


def _eval_term(term, n):
    value = None
    for kind, payload, pos in reversed(term):
        if kind == "tensor":
            elem = embed_tensor(payload, n) if payload else XTensorElement.one(n)
            for j in payload:
                if not 1 <= j <= n:
                    raise ParseError(f"tensor index {j} out of range 1..{n}", pos)
            value = elem if value is None else elem * value
        elif kind == "tgen":
            idx, inverse = payload
            h = (HeckeElement.generator_inverse(idx) if inverse
                 else HeckeElement.generator(idx))
            elem = XTensorElement.from_hecke(h, n)
            value = elem if value is None else elem * value
        elif kind == "int":
            c = scalars.from_int(payload)
            if value is None:
                value = XTensorElement.one(n).scaled(c)
            else:
                value = value.scaled(c)
        elif kind == "scalar":
            c = scalars.parse_scalar(payload)
            if value is None:
                value = XTensorElement.one(n).scaled(c)
            else:
                value = value.scaled(c)
        elif kind == "rop":
            op = _r_operator(payload, pos)
            if value is None:
                raise ParseError("operator lacks an operand", pos)
            value = op.apply(value)
        elif kind == "kop":
            idx, halfsteps = payload
            if value is None:
                raise ParseError("operator lacks an operand", pos)
            value = KPower(idx, halfsteps).apply(value)
        else:
            raise ParseError(f"unexpected token {payload!r}", pos)
    return value


def parse_element(text, n):
    """Parse an element expression (no operators) into normal form."""
    return evaluate(text, n)


def render_element(elem):
    return str(elem)
