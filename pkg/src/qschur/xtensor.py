"""The extended tensor algebra: a graded mix of H_infinity(q) with tensor powers.

Degree p holds the induced module H_infinity(q) (x)_{H_p(q)} V^{(x)p}.  A basis
pair (w, J) consists of a permutation w that is a minimal representative of its
coset w * S_p (first p values increasing) and a multi-index J of length p with
entries in 1..n.  The balanced tensor product is realised by the rewriting rule

    T_w (x) e_J  ->  T_{w s_r} (x) t_r(e_J)      for any right descent r < p,

where t_r acts on tensor slots (r, r+1) by the three-case exchange rule.  The
rewriting strictly reduces length, so it terminates; the braid relations of the
slot action make it confluent (checked exhaustively by the test suite).

The graded product twists the right factor's Hecke part by the index shift
alpha^k, k the degree of the left factor:

    (sigma (x) v_1..v_k) . (tau (x) w_1..w_l)
        = sigma alpha^k(tau) (x) v_1..v_k w_1..w_l.
"""

from __future__ import annotations

from itertools import product as _itproduct

from . import scalars
from .hecke import HeckeElement
from .permutations import Permutation
from .scalars import Q, Q_MINUS_QINV, RationalScalar


# ---------------------------------------------------------------------------
# the Hecke generator action on plain tensors
# ---------------------------------------------------------------------------

def t_action_term(r, J):
    """Image of the basis tensor e_J under the slot-(r, r+1) generator.

    Returns a list of (multi-index, scalar) pairs:
    e_i e_j -> q e_i e_j (i = j), e_j e_i (i > j), e_j e_i + (q - q^-1) e_i e_j
    (i < j), acting in slots r and r+1.
    """
    i, j = J[r - 1], J[r]
    swapped = J[:r - 1] + (j, i) + J[r + 1:]
    if i == j:
        return [(J, Q)]
    if i > j:
        return [(swapped, scalars.ONE)]
    return [(swapped, scalars.ONE), (J, Q_MINUS_QINV)]


def t_action(r, x, n=None):
    """Linear extension of the slot action to a combination {J: scalar}."""
    out = {}
    for J, c in x.items():
        if not 1 <= r <= len(J) - 1:
            raise ValueError(f"slot {r} out of range for degree {len(J)}")
        for K, d in t_action_term(r, J):
            _acc(out, K, c * d)
    return out


def t_action_inverse(r, x, n=None):
    """Two-sided inverse of t_action(r, .): t^-1 = t - (q - q^-1)."""
    out = t_action(r, x, n)
    for J, c in x.items():
        _acc(out, J, -(c * Q_MINUS_QINV))
    return out


def _acc(d, k, c):
    s = d.get(k)
    s = c if s is None else s + c
    if s:
        d[k] = s
    elif k in d:
        del d[k]


# ---------------------------------------------------------------------------
# normal form
# ---------------------------------------------------------------------------

# (oneline, J, strategy) -> tuple of ((Permutation, J), scalar)
_NORMAL_CACHE = {}


def _normal_pair(w, J, strategy="min"):
    """Normal form of the single pair T_w (x) e_J as ((w', J'), scalar) terms."""
    key = (w.oneline, J, strategy)
    hit = _NORMAL_CACHE.get(key)
    if hit is not None:
        return hit
    p = len(J)
    r = (w.first_descent_below(p) if strategy == "min"
         else w.last_descent_below(p))
    if r is None:
        result = (((w, J), scalars.ONE),)
    else:
        ws = w * Permutation.s(r)
        acc = {}
        for K, c in t_action_term(r, J):
            for (pair, d) in _normal_pair(ws, K, strategy):
                _acc(acc, pair, c * d)
        result = tuple(acc.items())
    _NORMAL_CACHE[key] = result
    return result


class XTensorElement:
    """Element of the extended tensor algebra over V = C^n, in normal form."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        self.dim = dim
        self.terms = dict(terms) if terms else {}

    @classmethod
    def _raw(cls, dim, terms):
        out = cls.__new__(cls)
        out.dim, out.terms = dim, terms
        return out

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(n):
        return XTensorElement._raw(n, {})

    @staticmethod
    def one(n):
        return XTensorElement._raw(n, {(Permutation.identity(), ()): scalars.ONE})

    @staticmethod
    def basis_term(n, w, J, coeff=None):
        """The already-normal basis pair T_w (x) e_J (validated)."""
        J = tuple(J)
        if not w.has_increasing_prefix(len(J)):
            raise ValueError(f"{w} is not a minimal coset representative for p={len(J)}")
        if any(not 1 <= j <= n for j in J):
            raise ValueError(f"multi-index {J} out of range 1..{n}")
        return XTensorElement._raw(n, {(w, J): scalars.ONE if coeff is None else coeff})

    @staticmethod
    def normalize(raw, n, strategy="min"):
        """Normal form of a raw combination {(Permutation, J): scalar}."""
        acc = {}
        for (w, J), c in raw.items():
            if not c:
                continue
            for pair, d in _normal_pair(w, tuple(J), strategy):
                _acc(acc, pair, c * d)
        return XTensorElement._raw(n, acc)

    @staticmethod
    def from_hecke(h, n):
        """H_infinity(q) included as the degree-0 component."""
        return XTensorElement._raw(n, {(w, ()): c for w, c in h.terms.items()})

    # -- linear structure ------------------------------------------------------

    def __add__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return XTensorElement._raw(self.dim, t)

    def __neg__(self):
        return XTensorElement._raw(self.dim,
                                   {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        if not c:
            return XTensorElement._raw(self.dim, {})
        return XTensorElement._raw(self.dim,
                                   {k: x * c for k, x in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, XTensorElement) and self.dim == other.dim
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    # -- grading ----------------------------------------------------------------

    def degrees(self):
        return sorted({len(J) for (_, J) in self.terms})

    def homogeneous_part(self, p):
        return XTensorElement._raw(
            self.dim, {k: c for k, c in self.terms.items() if len(k[1]) == p})

    def is_plain(self):
        """True when every term sits in the identity coset (embedded tensors)."""
        return all(w.is_identity() for (w, _) in self.terms)

    def plain_tensor(self):
        """Extract {J: scalar} if the element is an embedded plain tensor."""
        if not self.is_plain():
            raise ValueError("element leaves the plain-tensor subspace")
        return {J: c for (_, J), c in self.terms.items()}

    # -- the algebra --------------------------------------------------------------

    def __mul__(self, other):
        """Graded product; the right Hecke part is shifted by the left degree."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        raw = {}
        for (w1, J1), c1 in self.terms.items():
            k = len(J1)
            for (w2, J2), c2 in other.terms.items():
                h = HeckeElement.basis(w1) * HeckeElement.basis(w2.shift(k))
                c12 = c1 * c2
                J = J1 + J2
                for x, d in h.terms.items():
                    _acc(raw, (x, J), c12 * d)
        return XTensorElement.normalize(raw, self.dim)

    def left_hecke(self, h):
        """Left action of H_infinity(q): premultiply Hecke parts, renormalise."""
        raw = {}
        for u, cu in h.terms.items():
            hu = HeckeElement.basis(u)
            for (w, J), c in self.terms.items():
                prod = hu * HeckeElement.basis(w)
                cc = cu * c
                for x, d in prod.terms.items():
                    _acc(raw, (x, J), cc * d)
        return XTensorElement.normalize(raw, self.dim)

    # -- rendering -----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, J), c in sorted(
                self.terms.items(),
                key=lambda t: (len(t[0][1]), -t[0][0].length, t[0][0].oneline, t[0][1])):
            word = "*".join(f"t{r}" for r in w.reduced_word())
            ej = "e[" + ",".join(map(str, J)) + "]" if J else ""
            bits = [b for b in (word, ej) if b]
            if not bits:
                bits = ["1"]
            if not c.is_one():
                bits.insert(0, f"({c})")
            parts.append(" ".join(bits))
        return " + ".join(parts)

    def __repr__(self):
        return f"<xtensor dim={self.dim} {self}>"


def embed_tensor(x, n):
    """V^{(x)p} included along the identity coset.  Accepts {J: scalar} or J."""
    if isinstance(x, tuple):
        x = {x: scalars.ONE}
    e = Permutation.identity()
    return XTensorElement._raw(n, {(e, tuple(J)): c for J, c in x.items() if c})


def left_hecke(h, a):
    return a.left_hecke(h)


def product(a, b):
    return a * b


def normalize(raw, n, strategy="min"):
    return XTensorElement.normalize(raw, n, strategy)


def all_multiindices(n, p):
    return list(_itproduct(range(1, n + 1), repeat=p))
