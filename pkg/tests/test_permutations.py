"""Coxeter combinatorics against brute-force oracles."""

import doctest

import pytest

import qschur.permutations as pm
from qschur.permutations import Permutation, minimal_coset_reps, symmetric_group

from conftest import all_onelines, oneline_compose, oneline_length


def test_doctests():
    assert doctest.testmod(pm).failed == 0


def test_compose_examples():
    s1, s2 = Permutation.s(1), Permutation.s(2)
    assert (s1 * s1).is_identity()
    assert (s1 * s2).oneline == (2, 3, 1)   # i -> s1(s2(i)) by hand
    w = Permutation((3, 1, 2))
    assert Permutation.identity() * w == w
    assert w * Permutation.identity() == w


def test_compose_matches_oracle():
    for u in all_onelines(4):
        for w in all_onelines(3):
            got = (Permutation(u) * Permutation(w)).oneline
            expect = Permutation(oneline_compose(u, w)).oneline
            assert got == expect


def test_trimming_makes_inclusions_literal():
    assert Permutation((2, 1, 3, 4)) == Permutation((2, 1))
    assert Permutation((1, 2, 3)).is_identity()
    with pytest.raises(ValueError):
        Permutation((2, 2, 1))


def test_length():
    assert Permutation.identity().length == 0
    assert Permutation.s(3).length == 1
    assert Permutation((2, 3, 1)).length == 2
    for u in all_onelines(4):
        assert Permutation(u).length == oneline_length(u)


def test_right_descents():
    assert Permutation.identity().right_descents(10) == set()
    assert Permutation((3, 1, 2)).right_descents(3) == {1}
    assert Permutation((2, 3, 1)).right_descents(2) == set()
    assert Permutation((2, 3, 1)).right_descents(3) == {2}


def test_shift():
    s1 = Permutation.s(1)
    assert s1.shift(1) == Permutation.s(2)
    assert s1.shift(3) == Permutation.s(4)
    w = Permutation((3, 1, 2))
    assert w.shift(0) == w
    # injective monoid action
    for a in range(3):
        for b in range(3):
            assert w.shift(a).shift(b) == w.shift(a + b)


def test_coset_decompose_examples():
    ident = Permutation.identity()
    assert ident.coset_decompose(3) == (ident, ident)
    assert Permutation.s(1).coset_decompose(2) == (ident, Permutation.s(1))


def test_coset_decompose_brute_force():
    # exhaustive over S_4: reconstruction, length additivity, minimality,
    # idempotence on the minimal representative
    for u in all_onelines(4):
        w = Permutation(u)
        for p in (1, 2, 3):
            wmin, x = w.coset_decompose(p)
            assert wmin * x == w
            assert wmin.length + x.length == w.length
            assert wmin.has_increasing_prefix(p)
            assert all(x(i) == i for i in range(p + 1, 6))
            again, rest = wmin.coset_decompose(p)
            assert again == wmin and rest.is_identity()
            # wmin is the unique shortest element in the coset w * S_p
            coset = [w * Permutation(y + tuple(range(p + 1, 5)))
                     for y in all_onelines(p)]
            assert min(c.length for c in coset) == wmin.length


def test_reduced_words():
    for u in all_onelines(4):
        w = Permutation(u)
        word = w.reduced_word()
        assert len(word) == w.length
        assert Permutation.from_word(word) == w
    assert Permutation((2, 3, 1)).reduced_word() == (1, 2)


def test_length_subadditive_with_reduced_concat():
    for u in all_onelines(4):
        for w in all_onelines(4):
            pu, pw = Permutation(u), Permutation(w)
            prod = pu * pw
            assert prod.length <= pu.length + pw.length
            concat_reduced = prod.length == pu.length + pw.length
            assert concat_reduced == (
                Permutation.from_word(pu.reduced_word() + pw.reduced_word())
                == prod and len(pu.reduced_word() + pw.reduced_word()) == prod.length)


def test_minimal_coset_reps_counts():
    assert len(minimal_coset_reps(4, 2)) == 12   # 4!/2!
    assert len(minimal_coset_reps(5, 3)) == 20   # 5!/3!
    assert len(list(symmetric_group(4))) == 24
