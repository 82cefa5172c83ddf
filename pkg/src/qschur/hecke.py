"""The Iwahori-Hecke algebra H_infinity(q) of type A in the T_w basis.

Elements are finite linear combinations of basis vectors T_w indexed by
finitely-supported permutations, with coefficients in Q(v).  Products are
computed by expanding a reduced word of the left factor and applying the
generator rule

    T_{s_r} T_w  =  T_{s_r w}                        if length goes up,
    T_{s_r w} + (q - q^-1) T_w                       otherwise,

which encodes the quadratic relation (t_r - q)(t_r + q^-1) = 0.
"""

from __future__ import annotations

from . import scalars
from .permutations import Permutation
from .scalars import RationalScalar, Q_MINUS_QINV

# (r, oneline) -> (s_r * w, lengthened?)
_LEFT_MUL_CACHE = {}


def _left_mul_gen(r, w):
    key = (r, w.oneline)
    hit = _LEFT_MUL_CACHE.get(key)
    if hit is None:
        y = Permutation.s(r) * w
        hit = (y, y.length > w.length)
        _LEFT_MUL_CACHE[key] = hit
    return hit


class HeckeElement:
    """Finite Q(v)-linear combination of T_w basis elements.  Immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, c in terms.items():
                if c:
                    t[w] = c
        self.terms = t

    @classmethod
    def _raw(cls, terms):
        out = cls.__new__(cls)
        out.terms = terms
        return out

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero():
        return _H_ZERO

    @staticmethod
    def one():
        return _H_ONE

    @staticmethod
    def basis(w, coeff=None):
        return HeckeElement._raw({w: scalars.ONE if coeff is None else coeff})

    @staticmethod
    def generator(r):
        """The basis element T_{s_r}."""
        if r < 1:
            raise ValueError("generator index must be >= 1")
        return HeckeElement._raw({Permutation.s(r): scalars.ONE})

    @staticmethod
    def generator_inverse(r):
        """T_{s_r}^-1 = T_{s_r} - (q - q^-1), forced by the quadratic relation."""
        if r < 1:
            raise ValueError("generator index must be >= 1")
        return HeckeElement._raw({Permutation.s(r): scalars.ONE,
                                  Permutation.identity(): -Q_MINUS_QINV})

    # -- linear structure ------------------------------------------------------

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s:
                t[w] = s
            elif w in t:
                del t[w]
        return HeckeElement._raw(t)

    def __neg__(self):
        return HeckeElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        if not c:
            return _H_ZERO
        return HeckeElement._raw({w: x * c for w, x in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- multiplication ----------------------------------------------------------

    def __mul__(self, other):
        out = {}
        for u, cu in self.terms.items():
            cur = other.terms
            for r in reversed(u.reduced_word()):
                nxt = {}
                for x, c in cur.items():
                    y, up = _left_mul_gen(r, x)
                    s = nxt.get(y)
                    s = c if s is None else s + c
                    if s:
                        nxt[y] = s
                    elif y in nxt:
                        del nxt[y]
                    if not up:
                        extra = c * Q_MINUS_QINV
                        s = nxt.get(x)
                        s = extra if s is None else s + extra
                        if s:
                            nxt[x] = s
                        elif x in nxt:
                            del nxt[x]
                cur = nxt
            for w, c in cur.items():
                s = out.get(w)
                s = c * cu if s is None else s + c * cu
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return HeckeElement._raw(out)

    def alpha_shift(self, k):
        """The algebra endomorphism sending each t_r to t_{r+k}."""
        if k < 0:
            raise ValueError("alpha_shift requires k >= 0")
        if k == 0:
            return self
        return HeckeElement._raw({w.shift(k): c for w, c in self.terms.items()})

    # -- rendering -----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(),
                           key=lambda wc: (-wc[0].length, wc[0].oneline)):
            word = "*".join(f"t{r}" for r in w.reduced_word()) or "1"
            if c.is_one():
                parts.append(word)
            elif word == "1":
                parts.append(f"({c})")
            else:
                parts.append(f"({c}) {word}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<hecke {self}>"


_H_ZERO = HeckeElement._raw({})
_H_ONE = HeckeElement._raw({Permutation.identity(): scalars.ONE})


def generator(r):
    return HeckeElement.generator(r)


def generator_inverse(r):
    return HeckeElement.generator_inverse(r)


def multiply(a, b):
    return a * b


def alpha_shift(a, k):
    return a.alpha_shift(k)
