"""Tensors, words, the canonical projection, and the symbol map."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lihopf.algebra import H, HBAR, Element, gen_elem, li, log
from lihopf.tensor import (
    Tensor,
    WordSum,
    deconcatenate,
    project_pi,
    project_pi_closed,
    shuffle_words,
    symbol,
    symbol_right,
    u_,
    uv_key,
    v_,
    weight_one_letters,
)

E = gen_elem


# ------------------------------------------------------------------ tensors

def test_tensor_of_and_arithmetic():
    a = E(li((1, 2), (2,)))
    b = E(log(1))
    t = Tensor.of(a + b, b)
    assert t == Tensor.of(a, b) + Tensor.of(b, b)
    assert (t - t).is_zero()
    assert (t * 2).terms == {k: 2 * c for k, c in t.terms.items()}


def test_tensor_slotwise_product():
    a = E(li((1, 2), (1,)))
    one = Element.one(H)
    t1 = Tensor.of(a, one)
    t2 = Tensor.of(one, a)
    assert t1 * t2 == Tensor.of(a, a)


def test_tensor_component_and_profiles():
    a = E(li((1, 2), (2,)))
    b = E(log(1))
    t = Tensor.of(a, b) + Tensor.of(b, b)
    assert t.weight_profiles() == [(1, 1), (2, 1)]
    assert t.component((2, 1)) == Tensor.of(a, b)
    assert t.component((5, 5)).is_zero()


def test_tensor_map_and_expand_slot():
    a = E(li((1, 2), (2,)))
    b = E(log(1))
    t = Tensor.of(a, b)
    doubled = t.map_slot(0, lambda mon: Element.from_monomial(mon, H, 2))
    assert doubled == t * 2
    spliced = t.expand_slot(1, lambda mon: Tensor.of(
        Element.from_monomial(mon, H), Element.one(H)))
    assert spliced == Tensor.of(a, b, Element.one(H))


def test_tensor_contract():
    a = E(li((1, 2), (2,)))
    b = E(log(1))
    assert Tensor.of(a, b).contract(H) == a * b


# -------------------------------------------------------------------- words

def test_letters_of_weight_one():
    assert weight_one_letters(log(3)) == {u_(3): 1}
    assert weight_one_letters(li((2, 5), (1,))) == {v_(2, 4): -1}
    with pytest.raises(ValueError):
        weight_one_letters(li((1, 2), (2,)))


def test_uv_key_orders_u_before_v():
    syms = [v_(1, 2), u_(2), v_(1, 1), u_(1)]
    assert sorted(syms, key=uv_key) == [u_(1), u_(2), v_(1, 1), v_(1, 2)]


def test_shuffle_small():
    a, b, c = u_(1), u_(2), v_(1, 1)
    assert shuffle_words((a,), (b,)) == {(a, b): 1, (b, a): 1}
    got = shuffle_words((a, b), (c,))
    assert got == {(c, a, b): 1, (a, c, b): 1, (a, b, c): 1}


def test_shuffle_is_commutative_and_associative():
    ws = [WordSum({(u_(1), v_(1, 1)): 1}), WordSum({(u_(2),): 1}),
          WordSum({(v_(1, 2), u_(1)): 1})]
    a, b, c = ws
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


def test_shuffle_counts_multiplicities():
    a = u_(1)
    got = shuffle_words((a,), (a, a))
    assert got == {(a, a, a): 3}


def test_deconcatenate():
    w = (u_(1), u_(2))
    assert deconcatenate(w) == [((), w), ((u_(1),), (u_(2),)), (w, ())]


# --------------------------------------------------------------- projection

def test_pi_weight_one_fixed():
    w = WordSum({(u_(1),): 1})
    assert project_pi(w) == w


def test_pi_antisymmetrizes_two_letters():
    a, b = u_(1), v_(1, 1)
    got = project_pi(WordSum({(a, b): 1}))
    assert got == WordSum({(a, b): Fraction(1, 2), (b, a): Fraction(-1, 2)})


def test_pi_matches_closed_form():
    letters = [u_(1), v_(1, 1), u_(2)]
    for ln in range(1, 5):
        for word in itertools.product(letters, repeat=ln):
            assert project_pi(WordSum({word: 1})) == project_pi_closed(word)


def test_pi_is_idempotent():
    for word in [(u_(1), v_(1, 1)), (u_(1), u_(2), v_(1, 2)),
                 (v_(1, 1), v_(2, 2), u_(1), u_(2))]:
        p = project_pi(WordSum({word: 1}))
        assert project_pi(p) == p


def test_pi_kills_shuffle_products():
    pairs = [((u_(1),), (v_(1, 1),)),
             ((u_(1), u_(2)), (v_(1, 1),)),
             ((u_(1), v_(1, 2)), (v_(1, 1), u_(2)))]
    for w1, w2 in pairs:
        prod = WordSum({w1: 1}) * WordSum({w2: 1})
        assert project_pi(prod).is_zero()


# ------------------------------------------------------------------- symbol

def test_symbol_depth1():
    # the bracket of weight n maps to -v_{1,1} u_1^(n-1)
    for n in range(1, 5):
        got = symbol(E(li((1, 2), (n,))))
        assert got == WordSum({(v_(1, 1),) + (u_(1),) * (n - 1): -1}), n


def test_symbol_weight_one_letters():
    assert symbol(E(log(2))) == WordSum({(u_(2),): 1})
    assert symbol(E(li((1, 3), (1,)))) == WordSum({(v_(1, 2),): -1})
    assert symbol(Element.constant(5, H)) == WordSum({(): 5})


def test_symbol_11_golden():
    got = symbol(E(li((1, 2, 3), (1, 1))))
    want = WordSum({(v_(1, 2), v_(2, 2)): 1, (v_(1, 2), v_(1, 1)): -1,
                    (v_(1, 2), u_(1)): 1, (v_(2, 2), v_(1, 1)): 1})
    assert got == want


def test_symbol_21_golden():
    # hand-derived: six tensor terms over the bracket letters, expanded in
    # the u/v basis
    got = symbol(E(li((1, 2, 3), (2, 1))))
    want = WordSum()
    expand = {"w1": {v_(1, 2): Fraction(-1)},
              "w0": {u_(1): Fraction(1), u_(2): Fraction(1)},
              "a1": {v_(2, 2): Fraction(-1)}, "a0": {u_(2): Fraction(1)},
              "b1": {v_(1, 1): Fraction(-1)}, "b0": {u_(1): Fraction(1)}}
    data = [(1, ("w1", "w0", "a1")), (1, ("w1", "a1", "w0")),
            (-1, ("w1", "a1", "a0")), (-1, ("w1", "b1", "b0")),
            (-1, ("w1", "b0", "b0")), (1, ("a1", "b1", "b0"))]
    for c, slots in data:
        acc = {(): Fraction(c)}
        for s in slots:
            nxt = {}
            for word, cc in acc.items():
                for sym, cl in expand[s].items():
                    key = word + (sym,)
                    nxt[key] = nxt.get(key, Fraction(0)) + cc * cl
            acc = nxt
        want = want + WordSum(acc)
    assert got == want


def test_symbol_right_agrees():
    gens = [li((1, 2, 3), (2, 1)), li((1, 2, 3), (1, 2)), li((1, 2), (4,)),
            li((1, 3, 4), (1, 1)), li((1, 2, 3, 4), (1, 1, 1))]
    for g in gens:
        e = E(g)
        assert symbol(e) == symbol_right(e), g


def test_symbol_is_multiplicative():
    pairs = [(E(li((1, 2), (2,))), E(li((2, 3), (1,)))),
             (E(log(1)), E(li((1, 2, 3), (1, 1)))),
             (E(li((1, 2), (1,))), E(li((1, 2), (1,))))]
    for a, b in pairs:
        assert symbol(a * b) == symbol(a) * symbol(b)


def test_symbol_rejects_extended_sort():
    with pytest.raises(ValueError):
        symbol(E(li((1, 2), (2,), inverted=True), HBAR))


def test_symbol_kernel_contains_pi_complement():
    # products of positive-weight elements stay products under the symbol,
    # so the projection kills their symbols
    a = E(li((1, 2), (1,)))
    b = E(log(2))
    assert project_pi(symbol(a * b)).is_zero()
