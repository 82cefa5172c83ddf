"""Double-commutant verification on tensor powers.

The engine is the q-analogue of the Euler operator: the weighted sum over
monotone multi-indices J of multiply-then-derive chains

    sum_J  (1/J!)  R(e_{j_1}) ... R(e_{j_p}) R(e*_{j_p}) ... R(e*_{j_1}),

which acts as the identity on plain degree-p tensors.  Each grouped chain is
diagonal and factors through the q-integer multiplicity operators; the same
diagonals drive the membership argument that pins the commutant of the Hecke
action to the image of the quantum-group action.

The final verification is a direct exact computation at a generic rational
specialisation: commutants via nullspaces of stacked commutator constraints,
images via span saturation, equality by dimension count plus explicit
membership solves in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import scalars
from .linalg import QMatrix, SpanBasis, commutant_basis, saturate_algebra
from .operators import (Compose, Derivation, KPower, MulVector, Scale, Sum,
                        compose, op_sum)
from .reports import Stopwatch, failed, passed
from .scalars import (ONE, Q_MINUS_QINV, multiindex_factorial, q_falling,
                      q_int, q_int_signed, q_power, specialize)
from .uqgl import EndoMatrix, assert_generic, pi_image_span
from .xtensor import XTensorElement, all_multiindices, embed_tensor, t_action_term
from .permutations import symmetric_group


def monotone_indices(n, p):
    """All weakly increasing multi-indices (j_1 <= ... <= j_p) in 1..n."""
    if p == 0:
        yield ()
        return
    def rec(prefix, lo):
        if len(prefix) == p:
            yield tuple(prefix)
            return
        for j in range(lo, n + 1):
            yield from rec(prefix + [j], j)
    yield from rec([], 1)


class MonotoneIndexSet:
    """Iterable over the monotone multi-indices of fixed length."""

    def __init__(self, n, p):
        self.n = n
        self.p = p

    def __iter__(self):
        return monotone_indices(self.n, self.p)

    def __len__(self):
        from math import comb
        return comb(self.n + self.p - 1, self.p)


# ---------------------------------------------------------------------------
# the q-Euler operator and the multiplicity diagonals
# ---------------------------------------------------------------------------

def euler_chain(J, order="definition"):
    """The multiply-then-derive chain attached to one monotone J.

    ``definition`` order derives by j_1 first and multiplies by e_{j_1} last;
    ``variant`` is the reversed layout that appears in the commutant
    argument.  Both are evaluated by the suites.
    """
    J = tuple(J)
    if order == "definition":
        parts = ([MulVector(j) for j in J]
                 + [Derivation(j) for j in reversed(J)])
    elif order == "variant":
        parts = ([MulVector(j) for j in reversed(J)]
                 + [Derivation(j) for j in J])
    else:
        raise ValueError(f"unknown chain order {order!r}")
    return Compose(tuple(parts))


def euler_operator(n, p, order="definition"):
    """sum_J (1/J!) [chain of J] over monotone multi-indices of length p."""
    parts = []
    for J in monotone_indices(n, p):
        coeff = multiindex_factorial(J, n).inverse()
        parts.append(Scale(coeff, euler_chain(J, order)))
    return Sum(tuple(parts))


def euler_apply(x, n, p, order="definition"):
    """Apply the degree-p Euler operator to a plain tensor combination."""
    if isinstance(x, tuple):
        x = {x: scalars.ONE}
    if any(len(J) != p for J in x):
        raise ValueError("tensor degree does not match p")
    return euler_operator(n, p, order).apply(embed_tensor(x, n))


def qint_multiplicity_operator(i, offset):
    """Diagonal operator scaling a term by [multiplicity_i(J) + offset].

    Realised inside the weight-operator algebra as
    (q^offset K_i - q^-offset K_i^-1)/(q - q^-1).
    """
    c = ONE / Q_MINUS_QINV
    return op_sum(Scale(q_power(offset) * c, KPower(i, 2)),
                  Scale(-(q_power(-offset) * c), KPower(i, -2)))


def qint_multiplicity_falling(i, m):
    """Product of the multiplicity diagonals at offsets 0, -1, ..., -m+1."""
    return Compose(tuple(qint_multiplicity_operator(i, -t) for t in range(m)))


def check_euler_identity(n, p_max):
    """The Euler operator is the identity on every plain basis tensor.

    The reversed-chain variant is evaluated as well and its identity-or-not
    status is recorded in the witness of an always-informational record.
    """
    records = []
    for p in range(0, p_max + 1):
        op = euler_operator(n, p)
        with Stopwatch() as sw:
            bad = None
            for J in all_multiindices(n, p):
                x = embed_tensor(J, n)
                out = op.apply(x)
                if out != x:
                    bad = f"e{list(J)} -> {out}"
                    break
        params = {"n": n, "p": p}
        records.append(passed("euler-identity", params, sw.ms) if bad is None
                       else failed("euler-identity", params, bad, sw.ms))

        var = euler_operator(n, p, order="variant")
        with Stopwatch() as sw:
            is_id = all(var.apply(embed_tensor(J, n)) == embed_tensor(J, n)
                        for J in all_multiindices(n, p))
        rec = passed("euler-variant-order", params, sw.ms)
        rec.witness = ("variant chain order also acts as the identity" if is_id
                       else "variant chain order is NOT the identity")
        records.append(rec)
    return records


def check_diagonal_factorization(n, p_max, offsets=range(-2, 3)):
    """Grouped chains factor through the multiplicity diagonals.

    Checks, on every plain basis tensor up to degree p_max:
      - R(e_i)^m R(e*_i)^m equals the falling diagonal of length m;
      - the intertwining rule (diagonal at a) o derive = derive o (diagonal at a-1);
      - the evaluation rule: diagonal at a scales e_I by [multiplicity + a].
    """
    records = []
    for p in range(1, p_max + 1):
        tensors = [embed_tensor(J, n) for J in all_multiindices(n, p)]
        for i in range(1, n + 1):
            for m in range(0, p + 1):
                chain = Compose(tuple([MulVector(i)] * m + [Derivation(i)] * m))
                diag = qint_multiplicity_falling(i, m)
                with Stopwatch() as sw:
                    bad = None
                    for x in tensors:
                        a, b = chain.apply(x), diag.apply(x)
                        if a != b:
                            bad = f"input {x}\n  chain -> {a}\n  diagonal -> {b}"
                            break
                params = {"i": i, "m": m, "p": p, "n": n}
                records.append(passed("power-chain-diagonal", params, sw.ms)
                               if bad is None
                               else failed("power-chain-diagonal", params, bad, sw.ms))
            for a in offsets:
                lhs = compose(qint_multiplicity_operator(i, a), Derivation(i))
                rhs = compose(Derivation(i), qint_multiplicity_operator(i, a - 1))
                with Stopwatch() as sw:
                    bad = None
                    for x in tensors:
                        u, v = lhs.apply(x), rhs.apply(x)
                        if u != v:
                            bad = f"input {x}\n  lhs -> {u}\n  rhs -> {v}"
                            break
                params = {"i": i, "a": a, "p": p, "n": n}
                records.append(passed("diagonal-intertwine", params, sw.ms)
                               if bad is None
                               else failed("diagonal-intertwine", params, bad, sw.ms))
            with Stopwatch() as sw:
                bad = None
                for J in all_multiindices(n, p):
                    x = embed_tensor(J, n)
                    li = sum(1 for j in J if j == i)
                    for a in offsets:
                        expect = x.scaled(q_int_signed(li + a))
                        got = qint_multiplicity_operator(i, a).apply(x)
                        if got != expect:
                            bad = f"e{list(J)} a={a}: got {got}, expected {expect}"
                            break
                    if bad:
                        break
            params = {"i": i, "p": p, "n": n}
            records.append(passed("diagonal-evaluation", params, sw.ms)
                           if bad is None
                           else failed("diagonal-evaluation", params, bad, sw.ms))
    return records


# ---------------------------------------------------------------------------
# the Hecke action as matrices, commutants, and Jimbo duality
# ---------------------------------------------------------------------------

def rho_generator(r, n, p):
    """Matrix of the Hecke generator acting in tensor slots (r, r+1)."""
    if not 1 <= r <= p - 1:
        raise ValueError(f"slot {r} out of range for p={p}")

    def image(J):
        return {K: c for K, c in t_action_term(r, J)}

    return EndoMatrix.from_action(n, p, image)


def rho_basis_matrix(w, n, p):
    """Matrix of the T_w basis element under the slot action."""
    m = EndoMatrix.identity(n, p)
    for r in w.reduced_word():
        m = rho_generator(r, n, p) * m
    return m


def hecke_image(n, p, v0):
    """Span of the specialised T_w action matrices, w in S_p.

    Requires [k] != 0 at v0 for k <= p (semisimple range); the dimension can
    be smaller than p! because the action need not be faithful.
    """
    assert_generic(v0, p)
    basis = SpanBasis()
    mats = []
    for w in symmetric_group(p):
        m = rho_basis_matrix(w, n, p).specialize(v0)
        if basis.add(m.flatten()):
            mats.append(m)
    return basis, mats


def commutant(mats, stop_nullity=None):
    """Exact basis of the joint commutant of the given rational matrices."""
    return commutant_basis(mats, stop_nullity)


@dataclass
class CommutantReport:
    """Outcome of one double-commutant computation."""

    n: int
    p: int
    q0: Fraction
    dims: dict = field(default_factory=dict)
    containments: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def status(self):
        return "pass" if (all(self.containments.values())
                          and self.dims.get("commutant_of_hecke") == self.dims.get("pi_image")
                          and self.dims.get("commutant_of_pi") == self.dims.get("hecke_image")
                          ) else "fail"

    def as_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "q0": str(self.q0),
            "dims": dict(self.dims),
            "equalities": dict(self.containments),
            "status": self.status,
            "witnesses": list(self.witnesses),
        }


def check_double_commutant(n, p, v0, residual_samples=8):
    """Mutual-commutant verification at an exact rational specialisation.

    Shows, by exact linear algebra over Q:
      * every quantum-group generator matrix commutes with every Hecke
        generator matrix (so each image sits inside the other's commutant);
      * dim commutant(Hecke action) equals the saturated quantum-group span
        and each commutant basis element is a member of that span;
      * symmetrically for the commutant of the quantum-group action.
    """
    assert_generic(v0, p)
    report = CommutantReport(n, p, v0 * v0)
    size = n ** p

    rho_gens = [rho_generator(r, n, p).specialize(v0) for r in range(1, p)]
    pi_span, pi_mats, pi_gens = pi_image_span(n, p, v0)
    hk_span, hk_mats = hecke_image(n, p, v0)

    cross = all(g.commutes_with(h) for g in pi_gens for h in rho_gens)
    if not cross:
        report.witnesses.append("a generator pair fails to commute")
    report.containments["pi_image_in_commutant_of_hecke"] = cross
    report.containments["hecke_image_in_commutant_of_pi"] = cross

    dim_pi = pi_span.dim
    dim_hk = hk_span.dim
    report.dims["pi_image"] = dim_pi
    report.dims["hecke_image"] = dim_hk

    # Commutant of the Hecke action.  The verified cross-commutation makes
    # dim_pi a certified lower bound on the nullity, enabling early stop.
    if p >= 2:
        crho = commutant(rho_gens, stop_nullity=dim_pi if cross else None)
    else:
        crho = [QMatrix.from_flat(size, {i: 1}) for i in range(size * size)]
    report.dims["commutant_of_hecke"] = len(crho)

    ok_dir1 = len(crho) == dim_pi
    for m in crho:
        if not pi_span.contains(m.flatten()):
            ok_dir1 = False
            report.witnesses.append("commutant(Hecke) element outside pi image")
            break
    report.containments["commutant_of_hecke_in_pi_image"] = ok_dir1

    cpi = commutant(pi_gens, stop_nullity=dim_hk if cross else None)
    report.dims["commutant_of_pi"] = len(cpi)

    ok_dir2 = len(cpi) == dim_hk
    for m in cpi:
        if not hk_span.contains(m.flatten()):
            ok_dir2 = False
            report.witnesses.append("commutant(pi) element outside Hecke image")
            break
    report.containments["commutant_of_pi_in_hecke_image"] = ok_dir2

    # residual check: returned commutant elements genuinely commute
    for m in crho[:residual_samples]:
        if not all(m.commutes_with(g) for g in rho_gens):
            report.witnesses.append("residual check failed: commutant(Hecke)")
            report.containments["commutant_of_hecke_in_pi_image"] = False
            break
    for m in cpi[:residual_samples]:
        if not all(m.commutes_with(g) for g in pi_gens):
            report.witnesses.append("residual check failed: commutant(pi)")
            report.containments["commutant_of_pi_in_hecke_image"] = False
            break
    return report


def check_duality(n, p_values, v0):
    """CheckRecords for the double-commutant report at each degree."""
    records = []
    for p in p_values:
        with Stopwatch() as sw:
            try:
                rep = check_double_commutant(n, p, v0)
            except ValueError as exc:
                records.append(failed("double-commutant",
                                      {"n": n, "p": p, "v0": v0}, str(exc)))
                continue
        params = {"n": n, "p": p, "v0": v0, **{k: v for k, v in rep.dims.items()}}
        if rep.status == "pass":
            records.append(passed("double-commutant", params, sw.ms))
        else:
            records.append(failed("double-commutant", params,
                                  "; ".join(rep.witnesses) or "dimension mismatch",
                                  sw.ms))
    return records
