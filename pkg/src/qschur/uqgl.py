"""The quantum enveloping algebra side: generator matrices on tensor powers.

The natural representation pi acts on V^(x)p by leg sums: the raising and
lowering generators place a matrix unit in one tensor slot and dress the
remaining slots with half-weight diagonal factors; the Cartan generators act
as the global half-weight diagonals K_i^(1/2).

All matrices are dense-size n^p but stored sparsely over Q(v); rows and
columns are indexed by multi-indices in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from random import Random

from . import scalars
from .linalg import QMatrix, SpanBasis, mpq_of, saturate_algebra
from .operators import (Compose, Derivation, Identity, KPower, MulVector,
                        OperatorExpr, Scale, Sum, basis_slice, compose,
                        op_sum, operators_agree_on)
from .reports import Stopwatch, failed, passed
from .scalars import (ONE, Q_MINUS_QINV, RationalScalar, q_int, q_power,
                      specialize, v_power)
from .xtensor import XTensorElement, all_multiindices, embed_tensor


@dataclass(frozen=True)
class UqGenerator:
    """One of the presentation generators: kind 'e', 'f', 'k+' or 'k-'."""

    kind: str
    index: int

    def validate(self, n):
        if self.kind in ("e", "f"):
            if not 1 <= self.index <= n - 1:
                raise ValueError(f"{self.kind}_{self.index} out of range for n={n}")
        elif self.kind in ("k+", "k-"):
            if not 1 <= self.index <= n:
                raise ValueError(f"k_{self.index} out of range for n={n}")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")


def generators(n):
    gens = []
    for i in range(1, n + 1):
        gens.append(UqGenerator("k+", i))
        gens.append(UqGenerator("k-", i))
    for i in range(1, n):
        gens.append(UqGenerator("e", i))
        gens.append(UqGenerator("f", i))
    return gens


class EndoMatrix:
    """Sparse n^p x n^p matrix over Q(v); basis = multi-indices, lex order."""

    __slots__ = ("n", "p", "rows")

    def __init__(self, n, p, rows=None):
        self.n = n
        self.p = p
        self.rows = rows if rows is not None else {}

    @property
    def size(self):
        return self.n ** self.p

    def index_of(self, J):
        idx = 0
        for j in J:
            idx = idx * self.n + (j - 1)
        return idx

    def multiindex(self, idx):
        J = []
        for _ in range(self.p):
            J.append(idx % self.n + 1)
            idx //= self.n
        return tuple(reversed(J))

    @staticmethod
    def identity(n, p):
        m = EndoMatrix(n, p)
        for i in range(n ** p):
            m.rows[i] = {i: scalars.ONE}
        return m

    @staticmethod
    def from_action(n, p, image):
        """Build columns from ``image(J) -> {J': scalar}``."""
        m = EndoMatrix(n, p)
        for J in all_multiindices(n, p):
            col = m.index_of(J)
            for K, c in image(J).items():
                if c:
                    m.rows.setdefault(m.index_of(K), {})[col] = c
        return m

    def entry(self, i, j):
        return self.rows.get(i, {}).get(j, scalars.ZERO)

    def set_entry(self, i, j, c):
        if c:
            self.rows.setdefault(i, {})[j] = c
        else:
            row = self.rows.get(i)
            if row:
                row.pop(j, None)
                if not row:
                    del self.rows[i]

    def __mul__(self, other):
        out = {}
        for i, arow in self.rows.items():
            crow = {}
            for k, a in arow.items():
                brow = other.rows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    s = crow.get(j)
                    ab = a * b
                    s = ab if s is None else s + ab
                    if s:
                        crow[j] = s
                    elif j in crow:
                        del crow[j]
            if crow:
                out[i] = crow
        return EndoMatrix(self.n, self.p, out)

    def __add__(self, other):
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, row in other.rows.items():
            crow = out.setdefault(i, {})
            for j, c in row.items():
                s = crow.get(j)
                s = c if s is None else s + c
                if s:
                    crow[j] = s
                elif j in crow:
                    del crow[j]
            if not crow:
                del out[i]
        return EndoMatrix(self.n, self.p, out)

    def __sub__(self, other):
        return self + other.scaled(-scalars.ONE)

    def scaled(self, c):
        if not c:
            return EndoMatrix(self.n, self.p)
        return EndoMatrix(self.n, self.p,
                          {i: {j: x * c for j, x in row.items()}
                           for i, row in self.rows.items()})

    def is_zero(self):
        return not self.rows

    def __eq__(self, other):
        return (isinstance(other, EndoMatrix) and self.n == other.n
                and self.p == other.p and (self - other).is_zero())

    def apply_combo(self, x):
        """Apply to a plain tensor combination {J: scalar}."""
        vec = {}
        for J, c in x.items():
            vec[self.index_of(J)] = c
        out = {}
        for i, row in self.rows.items():
            s = scalars.ZERO
            for j, a in row.items():
                c = vec.get(j)
                if c is not None:
                    s = s + a * c
            if s:
                out[self.multiindex(i)] = s
        return out

    def specialize(self, v0):
        """Exact rational matrix at v = v0."""
        out = QMatrix(self.size)
        for i, row in self.rows.items():
            for j, c in row.items():
                out.set_entry(i, j, mpq_of(specialize(c, v0)))
        return out

    def to_json(self):
        """Row-major dense listing in scalar text form."""
        size = self.size
        return {
            "n": self.n,
            "p": self.p,
            "entries": [[str(self.entry(i, j)) for j in range(size)]
                        for i in range(size)],
        }

    def __repr__(self):
        return f"<EndoMatrix n={self.n} p={self.p} nnz={sum(map(len, self.rows.values()))}>"


# ---------------------------------------------------------------------------
# the representation pi
# ---------------------------------------------------------------------------

def pi_generator(gen, n, p):
    """Matrix of a presentation generator on V^(x)p.

    Raising/lowering generators are leg sums: the matrix unit sits in slot r,
    slots before r carry k_i^(1/2) k_{i+1}^(-1/2) and slots after r carry the
    inverse dressing.  Cartan generators act diagonally by half-weights.
    """
    gen.validate(n)
    if gen.kind in ("k+", "k-"):
        sign = 1 if gen.kind == "k+" else -1
        i = gen.index

        def image(J):
            expo = sign * sum(1 for j in J if j == i)
            return {J: v_power(expo)}

        return EndoMatrix.from_action(n, p, image)

    i = gen.index
    raising = gen.kind == "e"
    src = i + 1 if raising else i
    dst = i if raising else i + 1

    def leg_weight(j):
        return (1 if j == i else 0) - (1 if j == i + 1 else 0)

    def image(J):
        out = {}
        for r in range(len(J)):
            if J[r] != src:
                continue
            expo = (sum(leg_weight(J[s]) for s in range(r))
                    - sum(leg_weight(J[s]) for s in range(r + 1, len(J))))
            K = J[:r] + (dst,) + J[r + 1:]
            c = v_power(expo)
            prev = out.get(K)
            out[K] = c if prev is None else prev + c
        return out

    return EndoMatrix.from_action(n, p, image)


@lru_cache(maxsize=None)
def quantum_matrix_unit(i, j, n, p, middle=None):
    """Matrix of the quantum analogue of the matrix unit E_ij (i != j).

    Built from the raising/lowering generators by the bracket recursion
        X_ik = X_ij X_jk - q X_jk X_ij          (i < j < k)
        X_ki = X_kj X_ji - q^-1 X_ji X_kj,
    splitting by default at the largest intermediate index; ``middle``
    overrides the split point (exploratory, not required to agree).
    """
    if i == j:
        raise ValueError("diagonal handled by l_operator")
    if abs(i - j) == 1:
        kind = "e" if j == i + 1 else "f"
        return pi_generator(UqGenerator(kind, min(i, j)), n, p)
    if i < j:
        m = j - 1 if middle is None else middle
        if not i < m < j:
            raise ValueError(f"bad middle index {m} for ({i},{j})")
        a = quantum_matrix_unit(i, m, n, p)
        b = quantum_matrix_unit(m, j, n, p)
        return a * b - (b * a).scaled(q_power(1))
    m = i - 1 if middle is None else middle
    if not j < m < i:
        raise ValueError(f"bad middle index {m} for ({i},{j})")
    a = quantum_matrix_unit(i, m, n, p)
    b = quantum_matrix_unit(m, j, n, p)
    return a * b - (b * a).scaled(q_power(-1))


def _half_weight_diag(coeffs, n, p):
    """Diagonal matrix J -> v^(sum_i coeffs[i] * multiplicity_i(J) + const)."""
    coeffs = dict(coeffs)
    const = coeffs.pop("const", 0)

    def image(J):
        expo = const + sum(coeffs.get(j, 0) for j in J)
        return {J: v_power(expo)}

    return EndoMatrix.from_action(n, p, image)


def l_operator(i, j, a, n, p):
    """The normalised L-operator matrix.

    Off the diagonal this is the quantum matrix unit with a half-weight
    prefix: for i < j the prefix is a^-1 q^(-(eps_i + eps_j - 1)/2), realised
    as v * K_i^(-1/2) K_j^(-1/2); for i > j it is a q^((eps_i + eps_j - 1)/2).
    On the diagonal: (a q^(eps_i) - a^-1 q^(-eps_i)) / (q - q^-1).
    """
    if not a:
        raise ValueError("L-operator parameter must be nonzero")
    if i == j:
        ainv = a.inverse() if isinstance(a, RationalScalar) else ONE / a
        denom = Q_MINUS_QINV

        def image(J):
            m = sum(1 for x in J if x == i)
            c = (a * q_power(m) - ainv * q_power(-m)) / denom
            return {J: c} if c else {}

        return EndoMatrix.from_action(n, p, image)
    unit = quantum_matrix_unit(i, j, n, p)
    if i < j:
        prefix = _half_weight_diag({i: -1, j: -1, "const": 1}, n, p)
        return (prefix * unit).scaled(ONE / a)
    prefix = _half_weight_diag({i: 1, j: 1, "const": -1}, n, p)
    return (prefix * unit).scaled(a)


# ---------------------------------------------------------------------------
# restriction of algebra operators to the plain-tensor subspace
# ---------------------------------------------------------------------------

class RestrictionError(ValueError):
    """An operator chain left the embedded plain-tensor subspace."""

    def __init__(self, J, element):
        self.multiindex = J
        self.element = element
        super().__init__(
            f"image of e{list(J)} leaves the plain-tensor subspace: {element}")


def restrict_operator(op, n, p):
    """Matrix of a degree-neutral operator chain on embedded tensors.

    Fails with a witness when some image carries a term outside the identity
    coset (or of the wrong degree).
    """
    m = EndoMatrix(n, p)
    for J in all_multiindices(n, p):
        img = op.apply(embed_tensor(J, n))
        for (w, K), c in img.terms.items():
            if not w.is_identity() or len(K) != p:
                raise RestrictionError(J, img)
            m.set_entry(m.index_of(K), m.index_of(J), c)
    return m


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def check_defining_relations(n, p):
    """All defining relations of the presentation, as exact matrix identities.

    Weight factors are carried in half-steps (powers of v): conjugating a
    raising generator by a half-Cartan scales it by v^(delta_ij - delta_{i,j+1}),
    and the commutator of raising and lowering generators is the full-weight
    difference (K_i K_{i+1}^-1 - K_i^-1 K_{i+1})/(q - q^-1).
    """
    if n < 2:
        raise ValueError("presentation checks need n >= 2")
    records = []
    ident = EndoMatrix.identity(n, p)
    kplus = {i: pi_generator(UqGenerator("k+", i), n, p) for i in range(1, n + 1)}
    kminus = {i: pi_generator(UqGenerator("k-", i), n, p) for i in range(1, n + 1)}
    evs = {i: pi_generator(UqGenerator("e", i), n, p) for i in range(1, n)}
    fvs = {i: pi_generator(UqGenerator("f", i), n, p) for i in range(1, n)}

    def record(name, params, ok, lhs=None, rhs=None, ms=0.0):
        if ok:
            records.append(passed(name, params, ms))
        else:
            w = None if lhs is None else f"lhs != rhs (sizes {lhs.size})"
            records.append(failed(name, params, w or "mismatch", ms))

    with Stopwatch() as sw:
        ok = all(kplus[i] * kplus[j] == kplus[j] * kplus[i]
                 for i in range(1, n + 1) for j in range(i + 1, n + 1))
        ok = ok and all(kplus[i] * kminus[i] == ident for i in range(1, n + 1))
    record("uq-cartan", {"n": n, "p": p}, ok, ms=sw.ms)

    for i in range(1, n + 1):
        for j in range(1, n - 1 + 1):
            d = (1 if i == j else 0) - (1 if i == j + 1 else 0)
            with Stopwatch() as sw:
                ok_e = (kplus[i] * evs[j] * kminus[i] == evs[j].scaled(v_power(d)))
                ok_f = (kplus[i] * fvs[j] * kminus[i] == fvs[j].scaled(v_power(-d)))
            record("uq-cartan-raise", {"i": i, "j": j, "n": n, "p": p}, ok_e, ms=sw.ms)
            record("uq-cartan-lower", {"i": i, "j": j, "n": n, "p": p}, ok_f, ms=sw.ms)

    for i in range(1, n):
        for j in range(1, n):
            with Stopwatch() as sw:
                lhs = evs[i] * fvs[j] - fvs[j] * evs[i]
                if i == j:
                    rhs = (kplus[i] * kplus[i] * kminus[i + 1] * kminus[i + 1]
                           - kminus[i] * kminus[i] * kplus[i + 1] * kplus[i + 1]
                           ).scaled(ONE / Q_MINUS_QINV)
                else:
                    rhs = EndoMatrix(n, p)
                ok = lhs == rhs
            record("uq-commutator", {"i": i, "j": j, "n": n, "p": p}, ok, ms=sw.ms)

    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                with Stopwatch() as sw:
                    ok = (evs[i] * evs[j] == evs[j] * evs[i]
                          and fvs[i] * fvs[j] == fvs[j] * fvs[i])
                record("uq-distant", {"i": i, "j": j, "n": n, "p": p}, ok, ms=sw.ms)
            elif abs(i - j) == 1:
                two = q_power(1) + q_power(-1)
                with Stopwatch() as sw:
                    se = (evs[i] * evs[i] * evs[j]
                          - (evs[i] * evs[j] * evs[i]).scaled(two)
                          + evs[j] * evs[i] * evs[i])
                    sf = (fvs[i] * fvs[i] * fvs[j]
                          - (fvs[i] * fvs[j] * fvs[i]).scaled(two)
                          + fvs[j] * fvs[i] * fvs[i])
                    ok = se.is_zero() and sf.is_zero()
                record("uq-serre", {"i": i, "j": j, "n": n, "p": p}, ok, ms=sw.ms)
    return records


def check_l_operator_realization(n, p):
    """mult-then-derive chains realise the L-operators at parameter 1."""
    records = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            params = {"i": i, "j": j, "n": n, "p": p}
            with Stopwatch() as sw:
                try:
                    lhs = restrict_operator(
                        compose(MulVector(i), Derivation(j)), n, p)
                except RestrictionError as exc:
                    records.append(failed("l-operator-realization", params,
                                          str(exc), sw.ms))
                    continue
                rhs = l_operator(i, j, ONE, n, p)
                ok = lhs == rhs
            if ok:
                records.append(passed("l-operator-realization", params, sw.ms))
            else:
                records.append(failed("l-operator-realization", params,
                                      "matrix mismatch", sw.ms))
    return records


def _triple_relation_cases(n):
    """The five mixed-triple relation families with their sign branches."""
    q, qinv, qmq = q_power(1), q_power(-1), Q_MINUS_QINV
    cases = []
    rng3 = range(1, n + 1)
    for i in rng3:
        for j in rng3:
            for k in rng3:
                Ei, Ej, Dk = MulVector(i), MulVector(j), Derivation(k)
                if (i < j and i < k) or (i > j and i > k):
                    cases.append(("triple-outer", (i, j, k),
                                  compose(Ei, Ej, Dk), compose(Ej, Dk, Ei)))
                if j < i < k or j > i > k:
                    sign = qmq if j < i < k else -qmq
                    cases.append(("triple-between", (i, j, k),
                                  compose(Ei, Ej, Dk),
                                  op_sum(compose(Ej, Dk, Ei),
                                         Scale(sign, compose(Ei, Dk, Ej)))))
    for i in rng3:
        for j in rng3:
            if i == j:
                continue
            Ei, Ej, Di, Dj = MulVector(i), MulVector(j), Derivation(i), Derivation(j)
            Ki = KPower(i, 2) if i < j else KPower(i, -2)
            cases.append(("triple-weight", (i, j),
                          compose(Ei, Ej, Di),
                          op_sum(compose(Ej, Di, Ei),
                                 Scale(-scalars.ONE, compose(Ki, Ej)))))
            cases.append(("triple-scalar", (i, j),
                          compose(Ei, Ei, Dj),
                          Scale(q if i < j else qinv, compose(Ei, Dj, Ei))))
    for i in rng3:
        Ei, Di = MulVector(i), Derivation(i)
        cases.append(("triple-diag-a", (i,),
                      compose(Ei, Ei, Di),
                      op_sum(Scale(q, compose(Ei, Di, Ei)),
                             Scale(-scalars.ONE, compose(KPower(i, 2), Ei)))))
        cases.append(("triple-diag-b", (i,),
                      compose(Ei, Ei, Di),
                      op_sum(Scale(qinv, compose(Ei, Di, Ei)),
                             Scale(-scalars.ONE, compose(KPower(i, -2), Ei)))))
    return cases


def check_mixed_triple_relations(n, p_max):
    """The five families mixing two multiplications with one derivation."""
    records = []
    cases = _triple_relation_cases(n)
    for p in range(1, p_max + 1):
        elements = basis_slice(n, p)
        for name, idx, lhs, rhs in cases:
            with Stopwatch() as sw:
                witness = operators_agree_on(lhs, rhs, elements)
            params = {"indices": idx, "p": p, "n": n}
            records.append(passed(name, params, sw.ms) if witness is None
                           else failed(name, params, witness, sw.ms))
    return records


def assert_generic(v0, p, qint_eval=None):
    """Reject specialisations where some [k], k <= p, vanishes.

    ``qint_eval`` overrides the evaluation of [k] (the error path has no
    rational witness, so tests exercise it by injecting a zero).
    """
    if qint_eval is None:
        qint_eval = lambda k: specialize(q_int(k), v0)
    for k in range(1, p + 1):
        if qint_eval(k) == 0:
            raise ValueError(f"degenerate specialisation: [{k}] = 0 at v0 = {v0}")


def pi_image_span(n, p, v0):
    """Saturated span of the generator matrices at v = v0."""
    gens = [pi_generator(g, n, p).specialize(v0) for g in generators(n)]
    size = n ** p
    basis, mats = saturate_algebra(gens, size, max_dim=size * size)
    return basis, mats, gens


def check_chain_membership(n, p_values, k_max, samples, seed, v0):
    """Random mult/derive chains land in the saturated generator span."""
    records = []
    rng = Random(seed)
    for p in p_values:
        assert_generic(v0, p)
        basis, _, _ = pi_image_span(n, p, v0)
        with Stopwatch() as sw:
            bad = None
            done = 0
            while done < samples and bad is None:
                k = rng.randint(0, k_max)
                vecs = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
                covecs = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
                if any(not any(v) for v in vecs + covecs):
                    continue
                parts = []
                for v in reversed(vecs):
                    parts.append(Sum(tuple(
                        Scale(scalars.from_int(c), MulVector(t + 1))
                        for t, c in enumerate(v) if c)))
                for w in covecs:
                    parts.append(Sum(tuple(
                        Scale(scalars.from_int(c), Derivation(t + 1))
                        for t, c in enumerate(w) if c)))
                chain = Compose(tuple(parts)) if parts else Identity()
                try:
                    mat = restrict_operator(chain, n, p)
                except RestrictionError as exc:
                    bad = f"sample {done}: {exc}"
                    break
                if not basis.contains(mat.specialize(v0).flatten()):
                    bad = f"sample {done}: chain matrix outside the generator span (k={k})"
                    break
                done += 1
        params = {"n": n, "p": p, "k_max": k_max, "samples": samples,
                  "seed": seed, "v0": v0}
        records.append(passed("chain-membership", params, sw.ms) if bad is None
                       else failed("chain-membership", params, bad, sw.ms))
    return records
