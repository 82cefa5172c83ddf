"""Exact sparse linear algebra used by the commutant and membership solves.

Vectors are sparse dicts ``{column: coefficient}``.  The reduction engine is
generic over the coefficient field: anything with +, -, *, / and truthiness
works, so the same code serves gmpy2.mpq (fast path for rational
specialisations) and the symbolic Q(v) scalars (dimension counts over the
rational function field).
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = Fraction


def mpq_of(x):
    """Convert a Fraction (or int) to the fast exact rational type."""
    if isinstance(x, Fraction):
        return _mpq(x.numerator, x.denominator)
    return _mpq(x)


class SpanBasis:
    """Row space in reduced echelon form, built by insertion.

    Rows are kept fully reduced against one another, so membership tests and
    nullspace extraction read straight off the pivot rows.
    """

    def __init__(self):
        self.pivots = {}  # pivot column -> row dict (pivot coefficient 1)

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Residue of vec modulo the current row space (fresh dict)."""
        v = dict(vec)
        for c in [c for c in v if c in self.pivots]:
            coef = v.get(c)
            if not coef:
                v.pop(c, None)
                continue
            row = self.pivots[c]
            for cc, x in row.items():
                s = v.get(cc, 0) - coef * x
                if s:
                    v[cc] = s
                else:
                    v.pop(cc, None)
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Insert vec; returns True when it enlarges the span."""
        r = self.reduce(vec)
        if not r:
            return False
        pc = min(r)
        inv_coeff = r[pc]
        row = {c: x / inv_coeff for c, x in r.items()}
        # keep existing rows reduced against the new pivot
        for opc, orow in self.pivots.items():
            coef = orow.get(pc)
            if coef:
                for cc, x in row.items():
                    s = orow.get(cc, 0) - coef * x
                    if s:
                        orow[cc] = s
                    else:
                        orow.pop(cc, None)
        self.pivots[pc] = row
        return True

    def nullspace(self, ncols):
        """Basis of { x : row . x = 0 for each row }, rows read as constraints."""
        out = []
        for f in range(ncols):
            if f in self.pivots:
                continue
            vec = {f: 1}
            for pc, row in self.pivots.items():
                coef = row.get(f)
                if coef:
                    vec[pc] = -coef
            out.append(vec)
        return out


def span_dimension(vectors):
    basis = SpanBasis()
    for v in vectors:
        basis.add(v)
    return basis.dim


class QMatrix:
    """Sparse square matrix over exact rationals (specialised scalars)."""

    __slots__ = ("size", "rows")

    def __init__(self, size, rows=None):
        self.size = size
        self.rows = rows if rows is not None else {}

    @staticmethod
    def identity(size):
        return QMatrix(size, {i: {i: _mpq(1)} for i in range(size)})

    def entry(self, i, j):
        return self.rows.get(i, {}).get(j, _mpq(0))

    def set_entry(self, i, j, x):
        if x:
            self.rows.setdefault(i, {})[j] = x
        else:
            row = self.rows.get(i)
            if row:
                row.pop(j, None)
                if not row:
                    del self.rows[i]

    def __mul__(self, other):
        out = {}
        orows = other.rows
        for i, arow in self.rows.items():
            crow = {}
            for k, a in arow.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    s = crow.get(j, 0) + a * b
                    if s:
                        crow[j] = s
                    else:
                        crow.pop(j, None)
            if crow:
                out[i] = crow
        return QMatrix(self.size, out)

    def __sub__(self, other):
        out = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            crow = out.setdefault(i, {})
            for j, x in row.items():
                s = crow.get(j, 0) - x
                if s:
                    crow[j] = s
                else:
                    crow.pop(j, None)
            if not crow:
                del out[i]
        return QMatrix(self.size, out)

    def is_zero(self):
        return not self.rows

    def __eq__(self, other):
        return self.size == other.size and (self - other).is_zero()

    def commutes_with(self, other):
        return (self * other - other * self).is_zero()

    def flatten(self):
        """Row-major sparse vector of length size*size."""
        n = self.size
        return {i * n + j: x for i, row in self.rows.items() for j, x in row.items()}

    @staticmethod
    def from_flat(size, vec):
        m = QMatrix(size)
        for idx, x in vec.items():
            m.set_entry(idx // size, idx % size, x)
        return m


def commutator_constraint_rows(mat):
    """Constraint rows (on the flattened unknown X) asserting X M = M X.

    The unknown entry X[a, b] has flat index a*size + b.  For each matrix
    position (i, j) the equation is sum_k X[i,k] M[k,j] - M[i,k] X[k,j] = 0.
    """
    nsz = mat.size
    cols_of = {}  # j -> list of (k, M[k, j]) for the left product
    for k, row in mat.rows.items():
        for j, x in row.items():
            cols_of.setdefault(j, []).append((k, x))
    rows = []
    for i in range(nsz):
        mrow = mat.rows.get(i, {})
        for j in range(nsz):
            row = {}
            for k, x in cols_of.get(j, ()):  # X[i,k] * M[k,j]
                c = i * nsz + k
                s = row.get(c, 0) + x
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
            for k, x in mrow.items():  # - M[i,k] * X[k,j]
                c = k * nsz + j
                s = row.get(c, 0) - x
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
            if row:
                rows.append(row)
    return rows


def commutant_basis(mats, stop_nullity=None):
    """Basis (as QMatrix list) of { X : X M = M X for every M in mats }.

    ``stop_nullity`` is an externally certified lower bound on the nullity
    (e.g. a verified commuting subspace); once the constraint rank reaches
    size^2 - stop_nullity the remaining constraint rows are necessarily
    dependent and are skipped.
    """
    if not mats:
        raise ValueError("commutant of an empty set is everything; pass matrices")
    size = mats[0].size
    ncols = size * size
    stop_rank = None if stop_nullity is None else ncols - stop_nullity
    basis = SpanBasis()
    for m in mats:
        if m.size != size:
            raise ValueError("matrix size mismatch")
        for row in commutator_constraint_rows(m):
            basis.add(row)
            if stop_rank is not None and basis.dim >= stop_rank:
                break
        if stop_rank is not None and basis.dim >= stop_rank:
            break
    return [QMatrix.from_flat(size, v) for v in basis.nullspace(ncols)]


def saturate_algebra(generators, size, max_dim=None):
    """Span of the unital algebra generated by the given matrices.

    Breadth-first closure: seed with the identity, repeatedly left-multiply
    new basis elements by the generators and re-span until the dimension
    stabilises.  Returns (SpanBasis of flattened matrices, list of QMatrix).
    """
    basis = SpanBasis()
    mats = []
    frontier = []

    def admit(m):
        if basis.add(m.flatten()):
            mats.append(m)
            frontier.append(m)
            return True
        return False

    admit(QMatrix.identity(size))
    for g in generators:
        admit(g)
    while frontier:
        if max_dim is not None and basis.dim >= max_dim:
            break
        batch, frontier = frontier, []
        for b in batch:
            for g in generators:
                admit(g * b)
    return basis, mats
