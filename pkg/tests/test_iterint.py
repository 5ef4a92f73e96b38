"""Iterated-integral symbols: coproduct, variation, splitting, evaluation."""

import itertools
import math
from fractions import Fraction as F

import pytest

from lihopf.algebra import HBAR, Element, expand_log, gen_elem, li, log
from lihopf.coproduct import coproduct_bar
from lihopf.iterint import (
    IElement,
    IGenerator,
    ITensor,
    InvProduct,
    ONE,
    ZERO,
    Zero,
    canonical_symbol,
    gamma,
    gamma_gen,
    i_coproduct,
    i_coproduct_gen,
    is_polylogarithmic,
    phi,
    phi_element,
    phi_morphism_ok,
    subsequence_comultiplicative_ok,
    subsequence_entry,
    subsequence_keys,
)


def ig(start, word, end):
    return IGenerator(start, tuple(word), end)


def one_gen(g):
    return IElement.of(g)


# ---------------------------------------------------------------------------
# points and symbols

def test_point_validation():
    with pytest.raises(ValueError):
        InvProduct(3, 2)
    with pytest.raises(ValueError):
        InvProduct(0, 2)


def test_weight_and_depth():
    g = ig(ZERO, (InvProduct(1, 2), ZERO, InvProduct(2, 2)), ONE)
    assert g.weight == 3
    assert g.depth == 2
    assert g.reversed() == ig(ONE, (InvProduct(2, 2), ZERO, InvProduct(1, 2)), ZERO)


def test_empty_word_is_unit():
    assert IElement.of(ig(ONE, (), InvProduct(1, 1))) == IElement.unit()


def test_element_ring():
    g1 = ig(ZERO, (InvProduct(1, 1),), ONE)
    g2 = ig(ZERO, (InvProduct(2, 2),), ONE)
    a, b = IElement.of(g1), IElement.of(g2)
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b
    assert (a - a).is_zero()
    assert 2 * a == a + a


# ---------------------------------------------------------------------------
# the subsequence coproduct

def test_coproduct_weight_two_has_four_terms():
    # keep any subset of the two interior letters; empty segments drop out
    a1, a2 = InvProduct(1, 2), InvProduct(2, 2)
    g = ig(ZERO, (a1, a2), ONE)
    unit = IElement.unit()
    want = (
        ITensor.of(unit, one_gen(g))
        + ITensor.of(one_gen(ig(ZERO, (a1,), ONE)), one_gen(ig(a1, (a2,), ONE)))
        + ITensor.of(one_gen(ig(ZERO, (a2,), ONE)), one_gen(ig(ZERO, (a1,), a2)))
        + ITensor.of(one_gen(g), unit)
    )
    assert i_coproduct_gen(g) == want


def test_coproduct_counts_zero_letters():
    # a kept zero letter is a genuine subsequence choice: 2^weight terms
    g = ig(ZERO, (InvProduct(1, 1), ZERO), ONE)
    assert len(i_coproduct_gen(g).terms) == 4


def test_coproduct_multiplicative():
    g1 = ig(ZERO, (InvProduct(1, 1),), ONE)
    g2 = ig(ZERO, (InvProduct(2, 2),), ONE)
    e = IElement.of(g1) * IElement.of(g2)
    assert i_coproduct(e) == i_coproduct_gen(g1) * i_coproduct_gen(g2)


# ---------------------------------------------------------------------------
# the subsequence variation matrix

def test_subsequence_keys():
    assert subsequence_keys(3) == [(0, 2), (0, 1, 2)]
    assert subsequence_keys(4) == [(0, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2, 3)]


def test_subsequence_entry_golden():
    # segments of (0,1,3,4,5) cut at (0,3,5): two factors, hand-checked
    a = [ZERO, InvProduct(1, 3), InvProduct(2, 3), ZERO, InvProduct(3, 3), ONE]
    got = subsequence_entry(a, (0, 1, 3, 4, 5), (0, 3, 5))
    want = (one_gen(ig(a[0], (a[1],), a[3]))
            * one_gen(ig(a[3], (a[4],), a[5])))
    assert got == want


def test_subsequence_entry_requires_subsequence():
    a = [ZERO, InvProduct(1, 2), InvProduct(2, 2), ONE]
    assert subsequence_entry(a, (0, 1, 3), (0, 2, 3)).is_zero()


def test_subsequence_diagonal_is_unit():
    a = [ZERO, InvProduct(1, 2), ONE]
    assert subsequence_entry(a, (0, 1, 2), (0, 1, 2)) == IElement.unit()


@pytest.mark.parametrize("points", [
    [ZERO, InvProduct(1, 2), ONE],
    [ZERO, InvProduct(1, 2), InvProduct(2, 2), ONE],
    [ZERO, InvProduct(1, 3), ZERO, InvProduct(3, 3), ONE],
    [InvProduct(1, 2), ZERO, InvProduct(2, 2), ZERO, ONE],
])
def test_subsequence_matrix_comultiplicative(points):
    assert subsequence_comultiplicative_ok(points)


# ---------------------------------------------------------------------------
# the basepoint-splitting map

def test_gamma_two_gap_golden():
    # I(c; 0; 1) splits at either side of the interior zero, hand-checked
    c = InvProduct(1, 1)
    g = ig(c, (ZERO,), ONE)
    want = (one_gen(ig(c, (), ZERO)) * one_gen(ig(ZERO, (ZERO,), ONE))
            + one_gen(ig(c, (ZERO,), ZERO)) * one_gen(ig(ZERO, (), ONE)))
    assert gamma_gen(g) == want


def test_gamma_fixes_canonical_symbols():
    # a symbol already based at 0 only splits trivially
    for idx, wts in [((1, 2), (2,)), ((1, 2, 3), (1, 1))]:
        g = canonical_symbol(idx, wts)
        assert gamma_gen(g) == IElement.of(g)


def test_gamma_drops_degenerate_pieces():
    # every split of I(0; c; 0) hits a piece that starts and ends at 0
    # with letters inside, so the whole symbol is killed -- matching its
    # evaluation, which vanishes
    g = ig(ZERO, (InvProduct(1, 1),), ZERO)
    assert gamma_gen(g).is_zero()
    assert phi(g).is_zero()


def test_gamma_multiplicative():
    g1 = ig(InvProduct(1, 2), (ZERO, InvProduct(2, 2)), ONE)
    g2 = ig(ONE, (ZERO, InvProduct(1, 1)), ZERO)
    e = IElement.of(g1) * IElement.of(g2)
    assert gamma(e) == gamma(IElement.of(g1)) * gamma(IElement.of(g2))


@pytest.mark.parametrize("g", [
    ig(InvProduct(1, 2), (ZERO, InvProduct(2, 2)), ONE),
    ig(InvProduct(1, 3), (InvProduct(2, 3), ZERO), InvProduct(3, 3)),
    ig(ONE, (ZERO, InvProduct(1, 1)), ZERO),
    ig(InvProduct(2, 3), (ZERO, ZERO), ZERO),
    ig(ZERO, (InvProduct(1, 2), ZERO, InvProduct(2, 2)), ONE),
])
def test_phi_after_gamma_is_phi(g):
    assert (phi_element(gamma_gen(g)) - phi(g)).is_zero()


# ---------------------------------------------------------------------------
# membership

def test_membership_examples():
    c12, c2 = InvProduct(1, 2), InvProduct(2, 2)
    assert is_polylogarithmic(ig(ZERO, (c12, ZERO, c2), ONE))
    assert is_polylogarithmic(ig(ONE, (c2, ZERO, c12), ZERO))  # reversed path
    assert is_polylogarithmic(ig(ONE, (ZERO,), c12))  # descending chain
    assert is_polylogarithmic(ig(ZERO, (ZERO, ZERO), ZERO))
    assert is_polylogarithmic(ig(ZERO, (ONE,), ZERO))
    # unit ratio: the same point twice in a row
    assert not is_polylogarithmic(ig(ZERO, (c12, c12), ONE))
    # incommensurable windows: neither contains the other
    assert not is_polylogarithmic(ig(ZERO, (c12, InvProduct(2, 3)), ONE))
    # mixed orientation: descend then ascend
    assert not is_polylogarithmic(ig(ZERO, (c2, c12, ONE), ONE))


def test_phi_rejects_non_polylogarithmic():
    g = ig(ZERO, (InvProduct(1, 2), InvProduct(2, 3)), ONE)
    with pytest.raises(ValueError):
        phi(g)


# ---------------------------------------------------------------------------
# evaluation goldens

def test_phi_zeros_then_endpoint():
    # I(0; 0^n; a) is the n-th power of the endpoint logarithm over n!
    la = expand_log(1, 3, HBAR, inverse=True)
    for n in range(4):
        g = ig(ZERO, (ZERO,) * n, InvProduct(1, 2))
        want = Element.constant(F(1, math.factorial(n)), HBAR)
        for _ in range(n):
            want = want * la
        assert (phi(g) - want).is_zero()


def test_phi_endpoint_one_kills_zeros():
    # log 1 = 0, so only the empty word survives
    assert (phi(ig(ZERO, (), ONE)) - Element.one(HBAR)).is_zero()
    assert phi(ig(ZERO, (ZERO,), ONE)).is_zero()
    assert phi(ig(ZERO, (ZERO, ZERO), ONE)).is_zero()


def test_phi_reversed_pure_zeros():
    # ending at 0 reverses the path and flips one sign per letter
    c = InvProduct(2, 3)
    lc = expand_log(2, 4, HBAR, inverse=True)
    for k in range(4):
        g = ig(c, (ZERO,) * k, ZERO)
        want = Element.constant(F((-1) ** k, math.factorial(k)), HBAR)
        for _ in range(k):
            want = want * lc
        assert (phi(g) - want).is_zero()


def test_phi_between_nonzero_points():
    # I(p; 0; q) is the logarithm of the ratio q/p, hand-checked:
    # here log(1/x2 / (1/x1 x2)) = log x1
    g = ig(InvProduct(1, 2), (ZERO,), InvProduct(2, 2))
    assert (phi(g) - gen_elem(log(1), HBAR)).is_zero()


def test_phi_descending_single_step():
    # I(1; 0; 1/x1) = log(1/x1) = -log x1
    g = ig(ONE, (ZERO,), InvProduct(1, 1))
    assert (phi(g) + gen_elem(log(1), HBAR)).is_zero()


@pytest.mark.parametrize("idx,wts", [
    ((1, 2), (1,)),
    ((1, 2), (3,)),
    ((2, 3), (2,)),
    ((1, 3), (2,)),
    ((1, 2, 3), (1, 1)),
    ((1, 2, 3), (2, 1)),
    ((1, 2, 4), (1, 2)),
    ((1, 2, 3, 4), (1, 1, 1)),
])
def test_phi_canonical_symbols(idx, wts):
    # the canonical path evaluates to the bracket, one sign per window
    g = canonical_symbol(idx, wts)
    want = gen_elem(li(idx, wts), HBAR) * F((-1) ** len(wts))
    assert (phi(g) - want).is_zero()


def test_phi_same_point_round_trip():
    # the empty word is the unit for any endpoints; with letters between
    # equal points the ratio degenerates and the symbol is excluded
    c = InvProduct(1, 2)
    assert (phi(ig(c, (), c)) - Element.one(HBAR)).is_zero()
    assert not is_polylogarithmic(ig(c, (ZERO,), c))
    with pytest.raises(ValueError):
        phi(ig(c, (ZERO,), c))


@pytest.mark.parametrize("n0,ps,wts,top", [
    (2, (1, 2), (1,), 2),
    (3, (1, 2), (1,), 2),
    (2, (1, 2), (2,), 3),
    (2, (1, 2, 3), (1, 1), 3),
    (1, (2, 3), (2,), 4),
    (3, (1, 3), (1,), 3),
])
def test_phi_leading_zeros_closed_form(n0, ps, wts, top):
    # a path based at 0 with n0-1 leading zeros evaluates to a binomial
    # redistribution of the extra weight over the bracket slots, with the
    # endpoint logarithm absorbing the remainder
    d = len(wts)
    pts = [InvProduct(p, top) for p in ps]
    word = [ZERO] * (n0 - 1)
    for r in range(d):
        word.append(pts[r])
        word.extend([ZERO] * (wts[r] - 1))
    g = IGenerator(ZERO, tuple(word), pts[d])

    la = expand_log(ps[d], top + 1, HBAR, inverse=True)
    want = Element.zero(HBAR)
    for splits in itertools.product(range(n0), repeat=d + 1):
        if sum(splits) != n0 - 1:
            continue
        i0, irest = splits[0], splits[1:]
        coeff = F((-1) ** i0, math.factorial(i0))
        for r in range(d):
            coeff *= math.comb(wts[r] + irest[r] - 1, wts[r] - 1)
        term = Element.constant(coeff, HBAR)
        for _ in range(i0):
            term = term * la
        nw = tuple(wts[r] + irest[r] for r in range(d))
        want = want + term * gen_elem(li(tuple(ps), nw), HBAR)
    want = want * F((-1) ** (n0 + d - 1))
    assert (phi(g) - want).is_zero()


def test_phi_multiplicative_on_monomials():
    g1 = canonical_symbol((1, 2), (1,))
    g2 = ig(ONE, (ZERO,), InvProduct(1, 1))
    e = IElement.of(g1) * IElement.of(g2)
    assert (phi_element(e) - phi(g1) * phi(g2)).is_zero()


# ---------------------------------------------------------------------------
# the coproduct morphism

def _sweep(max_index, max_weight, max_depth):
    points = [ZERO, ONE] + [InvProduct(i, j)
                            for i in range(1, max_index + 1)
                            for j in range(i, max_index + 1)]
    for wlen in range(1, max_weight + 1):
        for word in itertools.product(points, repeat=wlen):
            if sum(1 for p in word if not isinstance(p, Zero)) > max_depth:
                continue
            for a0 in points:
                for end in points:
                    g = IGenerator(a0, word, end)
                    if is_polylogarithmic(g):
                        yield g


def test_phi_is_a_coproduct_morphism_small():
    # evaluation intertwines the subsequence and bracket coproducts
    count = 0
    for g in _sweep(max_index=2, max_weight=3, max_depth=2):
        assert phi_morphism_ok(g), g
        count += 1
    assert count == 269


def test_phi_morphism_hand_cases():
    cases = [
        canonical_symbol((1, 2, 3), (2, 1)),
        IGenerator(InvProduct(1, 2), (InvProduct(2, 2),), ONE),
        IGenerator(ZERO, (InvProduct(1, 2), ZERO), InvProduct(2, 2)),
        IGenerator(InvProduct(1, 3), (ZERO, InvProduct(2, 3)), ONE),
        IGenerator(ONE, (ZERO, InvProduct(1, 1), ZERO), ZERO),
    ]
    for g in cases:
        assert phi_morphism_ok(g), g


def test_morphism_spelled_out_weight_two():
    # by hand for I(0; 1/x1, 0; 1): the four subsequence terms evaluate to
    # 1 (x) -L2, -L1 (x) log x1, 0, -L2 (x) 1  matching the bracket coproduct
    g = canonical_symbol((1, 2), (2,))
    lhs = None
    for (lm, rm), c in i_coproduct_gen(g).terms.items():
        from lihopf.tensor import Tensor
        t = Tensor.of(phi_element(IElement({lm: 1})),
                      phi_element(IElement({rm: 1}))) * c
        lhs = t if lhs is None else lhs + t
    assert (lhs - coproduct_bar(phi(g))).is_zero()
