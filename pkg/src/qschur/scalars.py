"""Exact arithmetic in the field Q(v) with v^2 = q, plus q-integer combinatorics.

Every coefficient in this library is a :class:`RationalScalar`: a quotient of
Laurent polynomials in v over Q, kept in a canonical form so that equality of
values is structural equality.  The variable v carries the half-integer powers
of q needed for the K_i^(1/2) operators; q itself is v^2.

Canonical form: numerator and denominator coprime, denominator a genuine
polynomial in v with nonzero constant term normalised to 1.  Any power of v
shared between the two is pushed into the numerator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class SpecializationPoleError(ArithmeticError):
    """Evaluation of a scalar at a zero of its denominator."""


# ---------------------------------------------------------------------------
# Laurent polynomials in v
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial in v with Fraction coefficients.

    Stored as a map exponent -> coefficient with no zero entries; immutable.

    >>> p = LaurentPoly({2: 1, -2: 1, 0: 1})   # q + 1 + q^-1 in terms of v^2
    >>> p * LaurentPoly.one() == p
    True
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, x in coeffs.items():
                x = x if isinstance(x, Fraction) else Fraction(x)
                if x:
                    c[int(k)] = x
        self._c = c
        self._hash = None

    @staticmethod
    def zero():
        return _LP_ZERO

    @staticmethod
    def one():
        return _LP_ONE

    @staticmethod
    def term(exp, coeff=1):
        return LaurentPoly({exp: coeff})

    def items(self):
        return self._c.items()

    def is_zero(self):
        return not self._c

    def is_one(self):
        return self._c == {0: Fraction(1)}

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    def __add__(self, other):
        c = dict(self._c)
        for k, x in other._c.items():
            s = c.get(k, _F0) + x
            if s:
                c[k] = s
            elif k in c:
                del c[k]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c, out._hash = c, None
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k: -x for k, x in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self._c or not other._c:
            return _LP_ZERO
        c = {}
        for k1, x1 in self._c.items():
            for k2, x2 in other._c.items():
                k = k1 + k2
                s = c.get(k, _F0) + x1 * x2
                if s:
                    c[k] = s
                elif k in c:
                    del c[k]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c, out._hash = c, None
        return out

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use RationalScalar")
        acc = _LP_ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def valuation(self):
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def degree(self):
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def coeff_list(self):
        """Ascending dense coefficient list starting at the valuation."""
        lo, hi = self.valuation(), self.degree()
        out = [_F0] * (hi - lo + 1)
        for k, x in self._c.items():
            out[k - lo] = x
        return out

    def shifted(self, k):
        """Multiply by v^k."""
        if k == 0 or not self._c:
            return self
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: x for e, x in self._c.items()}
        out._hash = None
        return out

    def evaluate(self, v0):
        """Exact value at v = v0 (a nonzero Fraction)."""
        v0 = Fraction(v0)
        if v0 == 0 and any(k < 0 for k in self._c):
            raise ZeroDivisionError("negative v-power at v0 = 0")
        return sum((x * v0 ** k for k, x in self._c.items()), _F0)

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._c.items()))!r})"


_F0 = Fraction(0)
_LP_ZERO = LaurentPoly()
_LP_ONE = LaurentPoly({0: 1})


# -- dense polynomial helpers for gcd reduction (ascending Fraction lists) --

def _trim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _pmod(a, b):
    a = a[:]
    db, lead = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        f = a[-1] / lead
        off = len(a) - 1 - db
        for i, c in enumerate(b):
            a[off + i] -= f * c
        _trim(a)
    return a


def _pgcd(a, b):
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _pmod(a, b)
        if b and b[-1] != 1:
            lead = b[-1]
            b = [c / lead for c in b]
    if a and a[-1] != 1:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _pdivexact(a, b):
    a = a[:]
    q = [_F0] * (len(a) - len(b) + 1)
    db, lead = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        f = a[-1] / lead
        off = len(a) - 1 - db
        q[off] = f
        for i, c in enumerate(b):
            a[off + i] -= f * c
        _trim(a)
    if a:
        raise ArithmeticError("inexact polynomial division")
    return q


# ---------------------------------------------------------------------------
# The field Q(v)
# ---------------------------------------------------------------------------

class RationalScalar:
    """Element of Q(v) in canonical form.  Immutable and hashable.

    >>> q_power(1) * q_power(-1) == one()
    True
    >>> (q_power(1) - q_power(-1)).is_zero()
    False
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly({0: num})
        if den is None:
            den = _LP_ONE
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly({0: den})
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        out = cls.__new__(cls)
        out.num, out.den, out._hash = num, den, None
        return out

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalScalar._raw(LaurentPoly({0: x}), _LP_ONE) if x else ZERO
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalScalar._raw(self.num + other.num, _LP_ONE)
        num = self.num * other.den + other.num * self.den
        return RationalScalar._raw(*_canonical(num, self.den * other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalScalar._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalScalar._raw(self.num * other.num, _LP_ONE)
        return RationalScalar._raw(*_canonical(self.num * other.num,
                                                self.den * other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return RationalScalar._raw(*_canonical(self.den, self.num))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- predicates & identity ---------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, v0):
        """Exact Fraction value at v = v0; raises on poles."""
        v0 = Fraction(v0)
        if v0 == 0:
            raise ValueError("v0 must be nonzero")
        d = self.den.evaluate(v0)
        if d == 0:
            raise SpecializationPoleError(f"pole at v = {v0}")
        return self.num.evaluate(v0) / d

    def evaluate_at_q(self, q0):
        """Exact value at q = q0, defined when only integer q-powers occur."""
        return specialize_at_q(self, q0)

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if self.den.is_one():
            return _render_poly(self.num)
        return f"({_render_poly(self.num)})/({_render_poly(self.den)})"

    def __repr__(self):
        return f"<scalar {self}>"


def _canonical(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return _LP_ZERO, _LP_ONE
    if den.is_one():
        return num, den
    va, vb = num.valuation(), den.valuation()
    ncs, dcs = num.coeff_list(), den.coeff_list()
    g = _pgcd(ncs, dcs)
    if len(g) > 1:
        ncs = _pdivexact(ncs, g)
        dcs = _pdivexact(dcs, g)
    c = dcs[0]
    if c != 1:
        ncs = [x / c for x in ncs]
        dcs = [x / c for x in dcs]
    shift = va - vb
    return (LaurentPoly({shift + i: x for i, x in enumerate(ncs) if x}),
            LaurentPoly({i: x for i, x in enumerate(dcs) if x}))


def _render_vpow(k):
    if k % 2 == 0:
        m = k // 2
        if m == 1:
            return "q"
        return f"q^{m}"
    return f"q^({k}/2)"


def _render_poly(p):
    if p.is_zero():
        return "0"
    pieces = []
    for k, c in sorted(p.items(), key=lambda kv: -kv[0]):
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif mag == 1:
            body = _render_vpow(k)
        else:
            body = f"{mag} {_render_vpow(k)}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# constructors / constants
# ---------------------------------------------------------------------------

def zero():
    return ZERO


def one():
    return ONE


def from_int(k):
    return RationalScalar._raw(LaurentPoly({0: k}), _LP_ONE) if k else ZERO


def from_fraction(f):
    f = Fraction(f)
    return RationalScalar._raw(LaurentPoly({0: f}), _LP_ONE) if f else ZERO


@lru_cache(maxsize=None)
def v_power(k):
    """v^k as a scalar (k may be negative)."""
    if k >= 0:
        return RationalScalar._raw(LaurentPoly({k: 1}), _LP_ONE)
    # canonical form keeps negative powers in the numerator
    return RationalScalar._raw(LaurentPoly({k: 1}), _LP_ONE)


def q_power(m):
    """q^m = v^(2m)."""
    return v_power(2 * m)


ZERO = RationalScalar._raw(_LP_ZERO, _LP_ONE)
ONE = RationalScalar._raw(_LP_ONE, _LP_ONE)
Q = q_power(1)
QINV = q_power(-1)
Q_MINUS_QINV = RationalScalar._raw(LaurentPoly({2: 1, -2: -1}), _LP_ONE)


# ---------------------------------------------------------------------------
# q-integers and q-factorials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _q_int_signed(k):
    """[k] = (q^k - q^-k)/(q - q^-1) for any integer k; odd in k."""
    if k == 0:
        return ZERO
    if k < 0:
        return -_q_int_signed(-k)
    return RationalScalar._raw(
        LaurentPoly({2 * (k - 1 - 2 * t): 1 for t in range(k)}), _LP_ONE)


def q_int(k):
    """The q-integer [k] = q^(k-1) + q^(k-3) + ... + q^(-k+1), k >= 0.

    >>> str(q_int(3))
    'q^2 + 1 + q^-2'
    """
    if k < 0:
        raise ValueError("q_int requires k >= 0")
    return _q_int_signed(k)


def q_int_signed(k):
    """[k] extended to all integers by the same formula; odd: [-k] = -[k]."""
    return _q_int_signed(k)


@lru_cache(maxsize=None)
def q_factorial(k):
    """[k]! = [k][k-1]...[1]; [0]! = 1."""
    if k < 0:
        raise ValueError("q_factorial requires k >= 0")
    out = ONE
    for t in range(1, k + 1):
        out = out * _q_int_signed(t)
    return out


def q_falling(l, m):
    """The falling product [l][l-1]...[l-m+1]; empty product for m = 0."""
    if m < 0:
        raise ValueError("q_falling requires m >= 0")
    out = ONE
    for t in range(m):
        out = out * _q_int_signed(l - t)
        if out.is_zero():
            return ZERO
    return out


def multiindex_factorial(J, n):
    """[m_1]!...[m_n]! where m_i is the multiplicity of i in the monotone J."""
    mult = [0] * (n + 1)
    prev = 0
    for j in J:
        if not 1 <= j <= n:
            raise ValueError(f"index {j} out of range 1..{n}")
        if j < prev:
            raise ValueError(f"multi-index {tuple(J)} is not weakly increasing")
        prev = j
        mult[j] += 1
    out = ONE
    for m in mult[1:]:
        if m > 1:
            out = out * q_factorial(m)
    return out


def specialize(s, v0):
    """Exact rational value of s at v = v0 (Fraction); raises on poles."""
    return s.evaluate(v0)


def specialize_at_q(s, q0):
    """Exact rational value at q = q0 for scalars with integer q-powers only."""
    exps = [e for e, _ in s.num.items()] + [e for e, _ in s.den.items()]
    if any(e % 2 for e in exps):
        raise ValueError("scalar involves half-integer powers of q")
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("q0 must be nonzero")
    den = sum((x * q0 ** (k // 2) for k, x in s.den.items()), _F0)
    if den == 0:
        raise SpecializationPoleError(f"pole at q = {q0}")
    num = sum((x * q0 ** (k // 2) for k, x in s.num.items()), _F0)
    return num / den


# ---------------------------------------------------------------------------
# parsing (grammar shared with the element printer: q, q^m, q^(k/2), +-*/^)
# ---------------------------------------------------------------------------

def parse_scalar(text):
    """Parse the textual scalar grammar back into a RationalScalar.

    >>> parse_scalar("q^2 + 1 + q^-2") == q_int(3)
    True
    >>> parse_scalar("(q - q^-1)/(q - q^-1)") == one()
    True
    """
    toks = _tokenize_scalar(text)
    val, pos = _parse_sum(toks, 0)
    if pos != len(toks):
        raise ValueError(f"unexpected token {toks[pos]!r} at {pos} in scalar")
    return val


def _tokenize_scalar(text):
    toks = []
    i, m = 0, len(text)
    while i < m:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < m and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif ch in "+-*/^()":
            toks.append((ch, ch))
            i += 1
        elif ch == "q":
            toks.append(("q", "q"))
            i += 1
        else:
            raise ValueError(f"bad character {ch!r} in scalar text")
    return toks


def _parse_sum(toks, pos):
    val, pos = _parse_product(toks, pos)
    while pos < len(toks) and toks[pos][0] in "+-":
        op = toks[pos][0]
        rhs, pos = _parse_product(toks, pos + 1)
        val = val + rhs if op == "+" else val - rhs
    return val, pos


_ATOM_STARTS = {"int", "q", "("}


def _parse_product(toks, pos):
    val, pos = _parse_signed(toks, pos)
    while pos < len(toks):
        t = toks[pos][0]
        if t in "*/":
            rhs, pos = _parse_signed(toks, pos + 1)
            val = val * rhs if t == "*" else val / rhs
        elif t in _ATOM_STARTS:
            rhs, pos = _parse_signed(toks, pos)
            val = val * rhs
        else:
            break
    return val, pos


def _parse_signed(toks, pos):
    neg = False
    while pos < len(toks) and toks[pos][0] == "-":
        neg = not neg
        pos += 1
    val, pos = _parse_power(toks, pos)
    return (-val if neg else val), pos


def _parse_power(toks, pos):
    val, pos = _parse_atom(toks, pos)
    if pos < len(toks) and toks[pos][0] == "^":
        exp_num, exp_den, pos = _parse_exponent(toks, pos + 1)
        if exp_den == 2:
            if val != q_power(1):
                raise ValueError("half-integer powers only allowed on q")
            val = v_power(exp_num)
        else:
            val = val ** exp_num
    return val, pos


def _parse_exponent(toks, pos):
    if pos < len(toks) and toks[pos][0] == "(":
        neg = False
        pos += 1
        if pos < len(toks) and toks[pos][0] == "-":
            neg, pos = True, pos + 1
        if toks[pos][0] != "int":
            raise ValueError("bad exponent")
        k = toks[pos][1]
        pos += 1
        den = 1
        if pos < len(toks) and toks[pos][0] == "/":
            if toks[pos + 1][0] != "int":
                raise ValueError("bad exponent")
            den = toks[pos + 1][1]
            pos += 2
        if toks[pos][0] != ")":
            raise ValueError("bad exponent")
        return (-k if neg else k), den, pos + 1
    neg = False
    if pos < len(toks) and toks[pos][0] == "-":
        neg, pos = True, pos + 1
    if pos >= len(toks) or toks[pos][0] != "int":
        raise ValueError("bad exponent")
    k = toks[pos][1]
    return (-k if neg else k), 1, pos + 1


def _parse_atom(toks, pos):
    if pos >= len(toks):
        raise ValueError("unexpected end of scalar text")
    t, val = toks[pos]
    if t == "int":
        return from_int(val), pos + 1
    if t == "q":
        return Q, pos + 1
    if t == "(":
        inner, pos = _parse_sum(toks, pos + 1)
        if pos >= len(toks) or toks[pos][0] != ")":
            raise ValueError("unbalanced parentheses in scalar")
        return inner, pos + 1
    raise ValueError(f"unexpected token {val!r} in scalar")
