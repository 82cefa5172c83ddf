"""Named verification suites dispatched by the CLI.

Each suite function takes a SuiteConfig and returns a list of CheckRecords.
The heavyweight identity suites live next to the operators they exercise;
this module adds the structural suites (scalar field axioms, Hecke relations,
normal-form confluence) and the registry mapping suite ids to runners.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _itproduct
from random import Random

from . import duality, operators, scalars, uqgl
from .hecke import HeckeElement
from .linalg import SpanBasis
from .permutations import Permutation, symmetric_group
from .reports import Stopwatch, failed, passed
from .scalars import (LaurentPoly, RationalScalar, from_fraction, q_int,
                      q_power, specialize)
from .xtensor import XTensorElement, all_multiindices, embed_tensor, t_action


@dataclass
class SuiteConfig:
    suite: str
    n: int = 2
    p_max: int = 2
    q0: Fraction | None = None   # value of q; v0 = sqrt(q0)
    v0: Fraction | None = None
    symbolic: bool = False
    seed: int = 2024
    samples: int = 25


def _random_scalar(rng):
    num = LaurentPoly({rng.randint(-3, 3): rng.randint(-4, 4)
                       for _ in range(rng.randint(1, 3))})
    if rng.random() < 0.3:
        den = LaurentPoly({0: 1, rng.randint(1, 3): rng.randint(-3, 3)})
    else:
        den = LaurentPoly.one()
    return RationalScalar(num, den)


def suite_scalars(cfg):
    rng = Random(cfg.seed)
    records = []
    samples = max(cfg.samples, 200)

    with Stopwatch() as sw:
        bad = None
        for t in range(samples):
            a, b, c = (_random_scalar(rng) for _ in range(3))
            if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                bad = f"associativity failed on sample {t}"
                break
            if a * (b + c) != a * b + a * c:
                bad = f"distributivity failed on sample {t}"
                break
            if a and (a * a.inverse()) != scalars.ONE:
                bad = f"inverse failed on sample {t}"
                break
    records.append(passed("scalar-field-axioms", {"samples": samples,
                                                  "seed": cfg.seed}, sw.ms)
                   if bad is None
                   else failed("scalar-field-axioms", {"samples": samples,
                                                       "seed": cfg.seed}, bad, sw.ms))

    with Stopwatch() as sw:
        bad = None
        for t in range(samples // 2):
            a = _random_scalar(rng)
            again = RationalScalar(a.num, a.den)
            if again != a:
                bad = f"canonical form not idempotent on sample {t}"
                break
    records.append(passed("scalar-canonical-idempotent", {"seed": cfg.seed}, sw.ms)
                   if bad is None
                   else failed("scalar-canonical-idempotent", {"seed": cfg.seed},
                               bad, sw.ms))

    with Stopwatch() as sw:
        ok = all(q_int(k) * scalars.Q_MINUS_QINV == q_power(k) - q_power(-k)
                 for k in range(0, 11))
    records.append(passed("qint-telescoping", {"k_max": 10}, sw.ms) if ok
                   else failed("qint-telescoping", {"k_max": 10}, "mismatch", sw.ms))

    v0 = cfg.v0 if cfg.v0 is not None else Fraction(4, 3)
    with Stopwatch() as sw:
        bad = None
        for t in range(samples // 2):
            a, b, c = (_random_scalar(rng) for _ in range(3))
            try:
                lhs = specialize(a * b + c, v0)
                rhs = specialize(a, v0) * specialize(b, v0) + specialize(c, v0)
            except scalars.SpecializationPoleError:
                continue
            if lhs != rhs:
                bad = f"specialisation is not a ring map on sample {t}"
                break
    records.append(passed("specialize-ring-hom", {"v0": v0, "seed": cfg.seed}, sw.ms)
                   if bad is None
                   else failed("specialize-ring-hom", {"v0": v0, "seed": cfg.seed},
                               bad, sw.ms))
    return records


def suite_hecke(cfg):
    records = []
    one = HeckeElement.one()
    qmq = scalars.Q_MINUS_QINV

    with Stopwatch() as sw:
        ok = True
        for r in range(1, 5):
            t = HeckeElement.generator(r)
            if t * t != one + t.scaled(qmq):
                ok = False
                break
    records.append(passed("hecke-quadratic", {"r_max": 4}, sw.ms) if ok
                   else failed("hecke-quadratic", {"r_max": 4}, f"r={r}", sw.ms))

    with Stopwatch() as sw:
        ok = True
        for r in range(1, 4):
            a, b = HeckeElement.generator(r), HeckeElement.generator(r + 1)
            if a * b * a != b * a * b:
                ok = False
                break
    records.append(passed("hecke-braid", {"r_max": 3}, sw.ms) if ok
                   else failed("hecke-braid", {"r_max": 3}, f"r={r}", sw.ms))

    with Stopwatch() as sw:
        ok = True
        for r in range(1, 5):
            for s in range(r + 2, 5):
                a, b = HeckeElement.generator(r), HeckeElement.generator(s)
                if a * b != b * a:
                    ok = False
    records.append(passed("hecke-commuting", {"r_max": 4}, sw.ms) if ok
                   else failed("hecke-commuting", {"r_max": 4}, "mismatch", sw.ms))

    with Stopwatch() as sw:
        ok = True
        for r in range(1, 5):
            t, ti = HeckeElement.generator(r), HeckeElement.generator_inverse(r)
            if t * ti != one or ti * t != one:
                ok = False
    records.append(passed("hecke-inverse", {"r_max": 4}, sw.ms) if ok
                   else failed("hecke-inverse", {"r_max": 4}, "mismatch", sw.ms))

    p_top = min(4, max(cfg.p_max, 2))
    for p in range(1, p_top + 1):
        with Stopwatch() as sw:
            span = SpanBasis()
            count = 0
            for w in symmetric_group(p):
                elem = HeckeElement.one()
                for r in w.reduced_word():
                    elem = elem * HeckeElement.generator(r)
                vec = {_perm_index(x, p): c for x, c in elem.terms.items()}
                if span.add(vec):
                    count += 1
            import math
            ok = count == math.factorial(p) == span.dim
        records.append(passed("hecke-basis-count", {"p": p, "dim": count}, sw.ms)
                       if ok else
                       failed("hecke-basis-count", {"p": p, "dim": count},
                              f"expected {p}!", sw.ms))

    rng = Random(cfg.seed)
    with Stopwatch() as sw:
        bad = None
        perms4 = list(symmetric_group(4))
        for t in range(min(cfg.samples * 4, 100)):
            a, b, c = (_random_hecke(rng, perms4) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad = f"sample {t}"
                break
            if (a * b).alpha_shift(2) != a.alpha_shift(2) * b.alpha_shift(2):
                bad = f"alpha endomorphism failed on sample {t}"
                break
    records.append(passed("hecke-associativity", {"seed": cfg.seed}, sw.ms)
                   if bad is None
                   else failed("hecke-associativity", {"seed": cfg.seed}, bad, sw.ms))
    return records


_PERM_INDEX_CACHE = {}


def _perm_index(w, p):
    key = (w.oneline, p)
    idx = _PERM_INDEX_CACHE.get(key)
    if idx is None:
        table = {x.oneline: i for i, x in enumerate(symmetric_group(max(p, len(w.oneline))))}
        idx = table[w.oneline]
        _PERM_INDEX_CACHE[key] = idx
    return idx


def _random_hecke(rng, perms):
    return HeckeElement({rng.choice(perms): scalars.from_int(rng.randint(-3, 3))
                         for _ in range(rng.randint(1, 3))})


def suite_xtensor(cfg):
    records = []
    n = 2

    with Stopwatch() as sw:
        bad = None
        for u in symmetric_group(4):
            for p in (2, 3):
                for J in all_multiindices(n, p):
                    raw = {(u, J): scalars.ONE}
                    a = XTensorElement.normalize(raw, n, strategy="min")
                    b = XTensorElement.normalize(raw, n, strategy="max")
                    if a != b:
                        bad = f"u={u} J={J}: min/max strategies disagree"
                        break
                if bad:
                    break
            if bad:
                break
    records.append(passed("normal-form-confluence",
                          {"group": "S4", "p": "2,3", "n": n}, sw.ms)
                   if bad is None
                   else failed("normal-form-confluence",
                               {"group": "S4", "p": "2,3", "n": n}, bad, sw.ms))

    for nn in range(2, max(cfg.n, 2) + 1):
        with Stopwatch() as sw:
            bad = None
            for J in all_multiindices(nn, 3):
                x = {J: scalars.ONE}
                for r in (1, 2):
                    tt = t_action(r, t_action(r, x))
                    expect = _combo_add(
                        t_action(r, _combo_scale(x, scalars.Q_MINUS_QINV)), x)
                    if tt != expect:
                        bad = f"quadratic fails at r={r}, J={J}"
                        break
                lhs = t_action(1, t_action(2, t_action(1, x)))
                rhs = t_action(2, t_action(1, t_action(2, x)))
                if lhs != rhs:
                    bad = f"braid fails at J={J}"
                if bad:
                    break
        records.append(passed("slot-action-relations", {"n": nn, "p": 3}, sw.ms)
                       if bad is None
                       else failed("slot-action-relations", {"n": nn, "p": 3},
                                   bad, sw.ms))

    rng = Random(cfg.seed)
    with Stopwatch() as sw:
        bad = None
        for t in range(min(cfg.samples * 4, 100)):
            a, b, c = (_random_xtensor(rng, n) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad = f"associativity failed on sample {t}"
                break
        if bad is None:
            for t in range(20):
                a, b = _random_xtensor(rng, n), _random_xtensor(rng, n)
                ab = a * b
                if not ab.is_zero():
                    dega = a.degrees()[0] if len(a.degrees()) == 1 else None
                    degb = b.degrees()[0] if len(b.degrees()) == 1 else None
                    if dega is not None and degb is not None:
                        if ab.degrees() != [dega + degb]:
                            bad = f"grading violated on sample {t}"
                            break
    records.append(passed("product-associativity-grading",
                          {"seed": cfg.seed, "n": n}, sw.ms)
                   if bad is None
                   else failed("product-associativity-grading",
                               {"seed": cfg.seed, "n": n}, bad, sw.ms))

    with Stopwatch() as sw:
        bad = None
        for t in range(20):
            h1, h2 = (_random_hecke(rng, list(symmetric_group(3)))
                      for _ in range(2))
            a = _random_xtensor(rng, n)
            if a.left_hecke(h2).left_hecke(h1) != a.left_hecke(h1 * h2):
                bad = f"left action fails on sample {t}"
                break
    records.append(passed("left-hecke-action", {"seed": cfg.seed, "n": n}, sw.ms)
                   if bad is None
                   else failed("left-hecke-action", {"seed": cfg.seed, "n": n},
                               bad, sw.ms))
    return records


def _combo_scale(x, c):
    return {k: v * c for k, v in x.items()}


def _combo_add(x, y):
    out = dict(x)
    for k, v in y.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def _random_xtensor(rng, n, deg_max=2):
    p = rng.randint(0, deg_max)
    raw = {}
    for _ in range(rng.randint(1, 2)):
        perm = list(range(1, p + 3))
        rng.shuffle(perm)
        w = Permutation(perm)
        J = tuple(rng.randint(1, n) for _ in range(p))
        raw[(w, J)] = scalars.from_int(rng.randint(-2, 2))
    return XTensorElement.normalize(raw, n)


def suite_derivations(cfg):
    records = []
    n = max(cfg.n, 2)
    with Stopwatch() as sw:
        direct = operators.raw_derivation(1, (1, 1, 2), n)
        viaprod = operators.raw_derivation_by_products(1, (1, 1, 2), n)
        ok = direct == viaprod
    records.append(passed("derivation-dual-route", {"i": 1, "J": (1, 1, 2)}, sw.ms)
                   if ok else
                   failed("derivation-dual-route", {"i": 1, "J": (1, 1, 2)},
                          f"direct {direct} != products {viaprod}", sw.ms))
    rng = Random(cfg.seed)
    with Stopwatch() as sw:
        bad = None
        for t in range(cfg.samples):
            p = rng.randint(1, max(2, cfg.p_max))
            J = tuple(rng.randint(1, n) for _ in range(p))
            i = rng.randint(1, n)
            if (operators.raw_derivation(i, J, n)
                    != operators.raw_derivation_by_products(i, J, n)):
                bad = f"i={i} J={J}"
                break
    records.append(passed("derivation-dual-route-random",
                          {"seed": cfg.seed, "samples": cfg.samples}, sw.ms)
                   if bad is None
                   else failed("derivation-dual-route-random",
                               {"seed": cfg.seed, "samples": cfg.samples}, bad, sw.ms))
    records.extend(operators.check_derivation_welldefined(
        cfg.n, cfg.p_max, samples=max(cfg.samples, 25), seed=cfg.seed))
    return records


def suite_thm4(cfg):
    return (operators.check_commutation_relations(cfg.n, cfg.p_max)
            + operators.check_weight_commutation(cfg.n, cfg.p_max))


def suite_uq_relations(cfg):
    records = []
    for p in range(1, cfg.p_max + 1):
        records.extend(uqgl.check_defining_relations(cfg.n, p))
    return records


def suite_thm53(cfg):
    records = []
    for p in range(1, cfg.p_max + 1):
        records.extend(uqgl.check_l_operator_realization(cfg.n, p))
    return records


def suite_prop54(cfg):
    return uqgl.check_mixed_triple_relations(cfg.n, cfg.p_max)


def suite_prop55(cfg):
    ps = [p for p in range(2, cfg.p_max + 1)] or [2]
    return uqgl.check_chain_membership(cfg.n, ps, k_max=2,
                                       samples=cfg.samples, seed=cfg.seed,
                                       v0=cfg.v0)


def suite_euler(cfg):
    return duality.check_euler_identity(cfg.n, cfg.p_max)


def suite_phi(cfg):
    return duality.check_diagonal_factorization(cfg.n, cfg.p_max)


def suite_duality(cfg):
    ps = list(range(1, cfg.p_max + 1))
    return duality.check_duality(cfg.n, ps, cfg.v0)


NEEDS_SPECIALIZATION = {"prop5-5", "duality"}

SUITES = {
    "scalars": suite_scalars,
    "hecke": suite_hecke,
    "xtensor": suite_xtensor,
    "derivations": suite_derivations,
    "thm4": suite_thm4,
    "uq-relations": suite_uq_relations,
    "thm5-3": suite_thm53,
    "prop5-4": suite_prop54,
    "prop5-5": suite_prop55,
    "euler": suite_euler,
    "phi": suite_phi,
    "duality": suite_duality,
}


def run_suite(cfg):
    """Records for one suite id, or for every suite when cfg.suite == 'all'."""
    if cfg.suite == "all":
        records = []
        for name, fn in SUITES.items():
            if name in NEEDS_SPECIALIZATION and cfg.v0 is None:
                continue
            records.extend(fn(cfg))
        return records
    fn = SUITES.get(cfg.suite)
    if fn is None:
        raise ValueError(f"unknown suite {cfg.suite!r}")
    if cfg.suite in NEEDS_SPECIALIZATION and cfg.v0 is None:
        raise ValueError(
            f"suite {cfg.suite!r} requires a rational specialisation; "
            "pass --q num/den (a perfect square) instead of --symbolic")
    return fn(cfg)
