"""Shared brute-force oracles for the test suite.

Everything here is deliberately independent of the library's own algorithms:
permutation facts come from itertools enumeration, and the tensor-decomposition
dimensions come from counting tableaux cell by cell.
"""

from itertools import permutations as itpermutations
from itertools import product as itproduct


def oneline_compose(u, w):
    """Functional composition of 1-based one-line tuples, padded as needed."""
    m = max(len(u), len(w))

    def val(t, i):
        return t[i - 1] if i <= len(t) else i

    return tuple(val(u, val(w, i)) for i in range(1, m + 1))


def oneline_length(u):
    return sum(1 for i in range(len(u)) for j in range(i + 1, len(u))
               if u[i] > u[j])


def all_onelines(m):
    return list(itpermutations(range(1, m + 1)))


def partitions_of(p, max_rows=None):
    """All partitions of p as weakly decreasing tuples."""
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, maxpart), 0, -1):
            rec(rest - part, part, prefix + [part])

    rec(p, p, [])
    if max_rows is not None:
        out = [lam for lam in out if len(lam) <= max_rows]
    return out


def cells(lam):
    return [(r, c) for r, row in enumerate(lam) for c in range(row)]


def count_standard_tableaux(lam):
    """Standard fillings counted by brute force over all orderings."""
    cs = cells(lam)
    p = len(cs)
    count = 0
    for perm in itpermutations(range(1, p + 1)):
        fill = dict(zip(cs, perm))
        ok = True
        for (r, c) in cs:
            if (r, c + 1) in fill and fill[(r, c)] > fill[(r, c + 1)]:
                ok = False
                break
            if (r + 1, c) in fill and fill[(r, c)] > fill[(r + 1, c)]:
                ok = False
                break
        if ok:
            count += 1
    return count


def count_semistandard_tableaux(lam, n):
    """Semistandard fillings with entries <= n, brute force cell by cell."""
    cs = cells(lam)
    count = 0
    for values in itproduct(range(1, n + 1), repeat=len(cs)):
        fill = dict(zip(cs, values))
        ok = True
        for (r, c) in cs:
            if (r, c + 1) in fill and fill[(r, c)] > fill[(r, c + 1)]:
                ok = False
                break
            if (r + 1, c) in fill and fill[(r, c)] >= fill[(r + 1, c)]:
                ok = False
                break
        if ok:
            count += 1
    return count


def schur_weyl_dims(n, p):
    """(commutant-of-Hecke dim, Hecke-image dim) from tableau counting."""
    dim_pi = 0
    dim_rho = 0
    for lam in partitions_of(p, max_rows=n):
        d = count_semistandard_tableaux(lam, n)
        m = count_standard_tableaux(lam)
        dim_pi += d * d
        dim_rho += m * m
    return dim_pi, dim_rho
