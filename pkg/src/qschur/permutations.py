"""Finitely-supported permutations of {1, 2, 3, ...} with Coxeter combinatorics.

A permutation is stored in trimmed one-line notation: the tuple
(w(1), ..., w(m)) with w(i) = i for all i > m and, unless the tuple is empty,
w(m) != m.  Trimming makes the inclusions S_p < S_{p+1} < ... literal
equalities, so the infinite symmetric group never needs an explicit cutoff.

Composition is functional: (u * w)(i) = u(w(i)).  With this convention the
minimal length representatives of the cosets w * S_p are exactly the
permutations whose first p values increase.

>>> s1, s2 = Permutation.s(1), Permutation.s(2)
>>> (s1 * s2).oneline
(2, 3, 1)
>>> (s1 * s2).length
2
"""

from __future__ import annotations

from itertools import permutations as _itperms


class Permutation:
    __slots__ = ("oneline", "_length", "_word", "_hash")

    def __init__(self, oneline=()):
        ol = list(oneline)
        while ol and ol[-1] == len(ol):
            ol.pop()
        m = len(ol)
        if m and sorted(ol) != list(range(1, m + 1)):
            raise ValueError(f"{tuple(oneline)} is not a permutation of 1..{m}")
        self.oneline = tuple(ol)
        self._length = None
        self._word = None
        self._hash = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def identity():
        return _IDENTITY

    @staticmethod
    def s(r):
        """The adjacent transposition s_r swapping r and r+1."""
        if r < 1:
            raise ValueError("generator index must be >= 1")
        return Permutation(tuple(range(1, r)) + (r + 1, r))

    @staticmethod
    def from_word(word):
        """Product s_{r_1} * s_{r_2} * ... of the letters, left to right."""
        w = _IDENTITY
        for r in word:
            w = w * Permutation.s(r)
        return w

    # -- the group -----------------------------------------------------------

    def __call__(self, i):
        if 1 <= i <= len(self.oneline):
            return self.oneline[i - 1]
        return i

    def __mul__(self, other):
        m = max(len(self.oneline), len(other.oneline))
        return Permutation(tuple(self(other(i)) for i in range(1, m + 1)))

    def inverse(self):
        m = len(self.oneline)
        inv = [0] * m
        for i, v in enumerate(self.oneline, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def is_identity(self):
        return not self.oneline

    @property
    def length(self):
        """Coxeter length = number of inversions.

        >>> Permutation((2, 3, 1)).length
        2
        """
        if self._length is None:
            ol = self.oneline
            self._length = sum(1 for i in range(len(ol))
                               for j in range(i + 1, len(ol)) if ol[i] > ol[j])
        return self._length

    def right_descents(self, bound):
        """{ r < bound : w(r) > w(r+1) }."""
        ol = self.oneline
        top = min(bound - 1, len(ol))
        return {r for r in range(1, top + 1) if self(r) > self(r + 1)}

    def first_descent_below(self, bound):
        ol = self.oneline
        top = min(bound - 1, len(ol))
        for r in range(1, top + 1):
            if ol[r - 1] > self(r + 1):
                return r
        return None

    def last_descent_below(self, bound):
        top = min(bound - 1, len(self.oneline))
        for r in range(top, 0, -1):
            if self(r) > self(r + 1):
                return r
        return None

    def has_increasing_prefix(self, p):
        return all(self(i) < self(i + 1) for i in range(1, p))

    def shift(self, k):
        """The permutation fixing 1..k and acting as w on {k+1, k+2, ...}."""
        if k < 0:
            raise ValueError("shift requires k >= 0")
        if k == 0 or not self.oneline:
            return self
        return Permutation(tuple(range(1, k + 1)) +
                           tuple(v + k for v in self.oneline))

    def coset_decompose(self, p):
        """Split w = w_min * x with x in S_p and length(w) = length(w_min) + length(x).

        w_min is the minimal representative of the coset w * S_p: its first p
        values increase.

        >>> w = Permutation((3, 1, 2))
        >>> wmin, x = w.coset_decompose(2)
        >>> (wmin.oneline, x.oneline)
        ((1, 3, 2), (2, 1))
        """
        if p < 0:
            raise ValueError("coset_decompose requires p >= 0")
        prefix = [self(i) for i in range(1, p + 1)]
        order = sorted(range(p), key=lambda t: prefix[t])
        wmin_prefix = sorted(prefix)
        m = max(p, len(self.oneline))
        wmin = Permutation(tuple(wmin_prefix) +
                           tuple(self(i) for i in range(p + 1, m + 1)))
        rank = [0] * p
        for pos, t in enumerate(order, start=1):
            rank[t] = pos
        x = Permutation(rank)
        return wmin, x

    def reduced_word(self):
        """Deterministic reduced word, built by peeling the rightmost descent.

        >>> Permutation((2, 3, 1)).reduced_word()
        (1, 2)
        """
        if self._word is None:
            word = []
            w = self
            while True:
                r = w.last_descent_below(len(w.oneline) + 1)
                if r is None:
                    break
                word.append(r)
                w = w * Permutation.s(r)
            self._word = tuple(reversed(word))
        return self._word

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.oneline == other.oneline

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.oneline)
        return self._hash

    def __lt__(self, other):
        return (self.length, self.oneline) < (other.length, other.oneline)

    def __repr__(self):
        return f"Permutation({self.oneline!r})"

    def __str__(self):
        return "[" + ",".join(map(str, self.oneline)) + "]" if self.oneline else "[]"


_IDENTITY = Permutation(())


def compose(u, w):
    """Functional composition, (u o w)(i) = u(w(i))."""
    return u * w


def length(w):
    return w.length


def right_descents(w, bound):
    return w.right_descents(bound)


def coset_decompose(w, p):
    return w.coset_decompose(p)


def shift(w, k):
    return w.shift(k)


def symmetric_group(m):
    """All permutations of 1..m (as elements of the infinite group)."""
    for ol in _itperms(range(1, m + 1)):
        yield Permutation(ol)


def minimal_coset_reps(m, p):
    """Permutations of S_m whose first p values increase (reps of w * S_p)."""
    return [w for w in symmetric_group(m) if w.has_increasing_prefix(p)]
