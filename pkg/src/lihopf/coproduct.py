"""Structure maps of the two bracket Hopf algebras.

The coproduct of a bracket is extracted from a generating-series identity:
a bracket with weights (n_1,...,n_d) is the coefficient of
prod_r t_r^(n_r - 1) in its generating function, and the coproduct of the
generating function is an explicit finite sum of products of (i) brackets
whose letters are merged windows, (ii) brackets in inverted letters, and
(iii) exponentials of weight-one letters.  We therefore compute inside a
polynomial ring truncated at per-variable degree n_r - 1 (multiplication
only ever raises degrees, so truncation is exact) and read off one
coefficient at the end.

The inversion map INV is computed the same way from its recursive series
formula; the recursion introduces explicit divisions by t_j, which are
performed only after checking that the numerator vanishes identically at
t_j = 0, and a total-degree bound with one unit of slack per possible
division keeps those divisions exact as well.
"""

from fractions import Fraction

from .algebra import (
    H,
    HBAR,
    LOG,
    Element,
    expand_log,
    gen_elem,
    li,
    monomial_weight,
)
from .series import TruncatedSeries
from .tensor import Tensor, weight_one_letters

# ---------------------------------------------------------------------------
# display letters and window bookkeeping
#
# Internally a bracket is a word of "letters", each letter a window (lo, hi)
# of consecutive variables, possibly inverted.  For a regular bracket the
# display order is the stored order; for an inverted bracket the display
# order runs through the inverses of the stored windows from right to left,
# and the weight displayed at slot r is the stored weight of the mirrored
# slot.  All series below are indexed by display slots.


def _display_letters(g):
    d = g.depth
    p = g.indices
    n = g.weights
    if not g.inverted:
        letters = [((p[r], p[r + 1]), False) for r in range(d)]
        caps = tuple(w - 1 for w in n)
    else:
        letters = [((p[d - 1 - r], p[d - r]), True) for r in range(d)]
        caps = tuple(n[d - 1 - r] - 1 for r in range(d))
    return letters, caps


def _merge(letters, a, b):
    """The product letter of display slots a..b-1 (1-based, a < b)."""
    sub = letters[a - 1:b - 1]
    if not sub[0][1]:
        # regular letters chain left to right
        for (w1, _), (w2, _) in zip(sub, sub[1:]):
            assert w1[1] == w2[0]
        return (sub[0][0][0], sub[-1][0][1]), False
    # inverted letters chain right to left
    for (w1, _), (w2, _) in zip(sub, sub[1:]):
        assert w2[1] == w1[0]
    return (sub[-1][0][0], sub[0][0][1]), True


def _normalize_block(block):
    """Convert a display-ordered bracket [(window, inverse, targ), ...] to
    stored form (indices, targs, inverted).  Returns None if the bracket
    contains a unit letter (such brackets vanish identically)."""
    if not block:
        return (), [], False
    if any(w[0] == w[1] for w, _, _ in block):
        return None
    inv = block[0][1]
    if any(isinv != inv for _, isinv, _ in block):
        raise AssertionError("mixed regular/inverted letters in one bracket")
    seq = list(reversed(block)) if inv else block
    indices = [seq[0][0][0]]
    for w, _, _ in seq:
        if w[0] != indices[-1]:
            raise AssertionError("letters do not chain")
        indices.append(w[1])
    return tuple(indices), [t for _, _, t in seq], inv


def _bracket_series(shape, indices, targs, inverted, sort):
    """The generating series of a bracket whose slot u carries the linear
    form targs[u]: sum over all weights m_u >= 1 of
    [indices]_{m} * prod targs[u]^(m_u - 1), truncated like ``shape``."""
    one = TruncatedSeries.constant(1, shape.nvars, sort,
                                   shape.caps, shape.total_cap)
    if not targs:
        return one
    lfs = [one.linear_form(t) for t in targs]
    out = [TruncatedSeries(shape.nvars, sort, shape.caps, shape.total_cap)]

    def rec(u, weights, acc):
        if u == len(targs):
            out[0] = out[0] + acc * gen_elem(li(indices, weights, inverted), sort)
            return
        cur = acc
        m = 1
        while True:
            rec(u + 1, weights + (m,), cur)
            nxt = cur * lfs[u]
            if not nxt.terms:
                break
            cur = nxt
            m += 1

    rec(0, (), one)
    return out[0]


def _ij_choices(d):
    """All ways to pick 1 <= i_1 <= j_1 < i_2 <= j_2 < ... <= j_k <= d,
    yielded as tuples of (i, j) pairs (including the empty choice)."""
    def rec(lo, acc):
        yield tuple(acc)
        for i in range(lo, d + 1):
            for j in range(i, d + 1):
                acc.append((i, j))
                yield from rec(j + 1, acc)
                acc.pop()
    yield from rec(1, [])


# ---------------------------------------------------------------------------
# the big-algebra coproduct

_BAR_CACHE = {}


def _coproduct_bar_generator(g):
    hit = _BAR_CACHE.get(g._key)
    if hit is not None:
        return hit
    one = Element.one(HBAR)
    if g.kind == LOG:
        e = gen_elem(g, HBAR)
        t = Tensor.of(e, one) + Tensor.of(one, e)
        _BAR_CACHE[g._key] = t
        return t

    letters, caps = _display_letters(g)
    d = len(letters)
    shape = TruncatedSeries(d, HBAR, caps=caps)
    target = caps
    out = Tensor.zero((HBAR, HBAR))

    for pairs in _ij_choices(d):
        # ---- left tensor factor: merged windows at the marked variables
        left_block = []
        for a, (i, j) in enumerate(pairs):
            i_next = pairs[a + 1][0] if a + 1 < len(pairs) else d + 1
            w, inv = _merge(letters, i, i_next)
            left_block.append((w, inv, [(j - 1, 1)]))
        L = _bracket_series(shape, *_normalize_block(left_block), HBAR)

        # ---- right tensor factor: one block per marked slot, plus the
        # unmarked prefix (the boundary block always sits at j_0 = 0, since
        # any other choice puts the unit letter inside a bracket)
        sign = 1
        i1 = pairs[0][0] if pairs else d + 1
        pre = [(letters[r - 1][0], letters[r - 1][1], [(r - 1, 1)])
               for r in range(1, i1)]
        R = _bracket_series(shape, *_normalize_block(pre), HBAR)
        for a, (i, j) in enumerate(pairs):
            i_next = pairs[a + 1][0] if a + 1 < len(pairs) else d + 1
            sign *= (-1) ** (j - i)
            w, inv = _merge(letters, i, i_next)
            R = R * shape.exp_linear(
                expand_log(w[0], w[1], HBAR, inverse=inv), [(j - 1, 1)])
            # letters strictly between i and j, inverted, seen from t_j
            invblock = [(letters[r - 1][0], not letters[r - 1][1],
                         [(j - 1, 1), (r - 1, -1)])
                        for r in range(j - 1, i - 1, -1)]
            nb = _normalize_block(invblock)
            R = R * _bracket_series(shape, *nb, HBAR)
            # letters strictly between j and the next i, regular, from t_j
            regblock = [(letters[r - 1][0], letters[r - 1][1],
                         [(r - 1, 1), (j - 1, -1)])
                        for r in range(j + 1, i_next)]
            R = R * _bracket_series(shape, *_normalize_block(regblock), HBAR)

        for e, ce in L.terms.items():
            f = tuple(t - x for t, x in zip(target, e))
            if any(x < 0 for x in f):
                continue
            cf = R.coefficient(f)
            if cf.is_zero():
                continue
            out = out + Tensor.of(ce, cf) * sign

    _BAR_CACHE[g._key] = out
    return out


def coproduct_bar(e):
    """The coproduct of the extended algebra, on any Element."""
    out = Tensor.zero((HBAR, HBAR))
    unit = Tensor.of(Element.one(HBAR), Element.one(HBAR))
    for mon, c in e.terms.items():
        part = unit
        for g in mon:
            part = part * _coproduct_bar_generator(g)
        out = out + part * c
    return out


# ---------------------------------------------------------------------------
# inversion

_INV_GEN_CACHE = {}
_INV_SERIES_CACHE = {}


def _inv_series(p, vars_, shape):
    """Series form of the inversion of the bracket with stored windows
    (p_0..p_1, ..., p_{m-1}..p_m), where stored slot u is paired with the
    series variable vars_[u]."""
    m = len(p) - 1
    if m == 0:
        return TruncatedSeries.constant(1, shape.nvars, H,
                                        shape.caps, shape.total_cap)
    key = (p, tuple(vars_), shape.nvars, shape.caps, shape.total_cap)
    hit = _INV_SERIES_CACHE.get(key)
    if hit is not None:
        return hit

    zero = TruncatedSeries(shape.nvars, H, shape.caps, shape.total_cap)
    out = zero
    full_log = expand_log(p[0], p[-1], H)

    # leading sum: inverted head of length j times the regular tail
    for j in range(0, m):
        sgn = (-1) ** (m - 1 + j)
        A = _inv_series(p[:j + 1], vars_[:j], shape)
        B = _bracket_series(shape, p[j:], [[(v, 1)] for v in vars_[j:]],
                            False, H)
        out = out + A * B * Fraction(sgn)

    # pole pairs: the two sums over j with 1/t_j prefactors cancel exactly
    # at t_j = 0, so each pair is combined first and divided afterwards
    for j in range(1, m + 1):
        sgn = (-1) ** (m - 1 + j)
        tj = vars_[j - 1]
        A = _inv_series(p[:j], vars_[:j - 1], shape)
        B = _bracket_series(shape, p[j:],
                            [[(v, 1)] for v in vars_[j:]], False, H)
        N = A * B
        images = {v: [(v, 1)] for v in range(shape.nvars)}
        for r in range(j - 1):
            images[vars_[r]] = [(vars_[r], 1), (tj, -1)]
        Ap = A.substitute(images, shape.nvars, shape.caps, shape.total_cap)
        E = shape.exp_linear(full_log, [(tj, 1)])
        Bp = _bracket_series(shape, p[j:],
                             [[(vars_[r], 1), (tj, -1)] for r in range(j, m)],
                             False, H)
        N = N - Ap * E * Bp
        N = N.divide_var(tj)   # raises if the cancellation at t_j=0 failed
        out = out + N * Fraction(sgn)

    _INV_SERIES_CACHE[key] = out
    return out


def inv_generator(g):
    """Inversion of a single generator: fixes regular ones, rewrites an
    inverted bracket as a plain-sort element."""
    if not g.inverted:
        return gen_elem(g, H)
    key = (g.indices, g.weights)
    hit = _INV_GEN_CACHE.get(key)
    if hit is not None:
        return hit
    d = g.depth
    n = g.weights
    # total-degree budget: the extraction degree plus one unit of slack for
    # each division that may occur along a nested chain
    shape = TruncatedSeries(d, H, total_cap=(sum(n) - d) + d)
    S = _inv_series(g.indices, list(range(d)), shape)
    val = S.coefficient(tuple(w - 1 for w in n))
    if (sum(n) - d) % 2:
        # the stored-form extraction pairs each t with a minus sign
        val = -val
    _INV_GEN_CACHE[key] = val
    return val


def _inv_monomial(mon):
    out = Element.one(H)
    for g in mon:
        out = out * inv_generator(g)
    return out


def inv_element(e):
    """Inversion applied to a whole Element (multiplicatively)."""
    out = Element.zero(H)
    for mon, c in e.terms.items():
        out = out + _inv_monomial(mon) * c
    return out


# ---------------------------------------------------------------------------
# the plain-sort coproduct and friends

def coproduct_h(e):
    """Coproduct on the plain sort: the big-algebra coproduct with the
    inversion map applied to every right-hand factor."""
    t = coproduct_bar(e)
    t = t.map_slot(1, _inv_monomial, sort=H)
    t = t.map_slot(0, lambda mon: Element.from_monomial(mon, H), sort=H)
    return t


def coproduct(e):
    """Sort-directed dispatch between the two coproducts."""
    if e.sort == HBAR:
        return coproduct_bar(e)
    return coproduct_h(e)


def reduced_coproduct(e):
    """The coproduct minus its primitive boundary terms."""
    t = coproduct(e)
    one = Element.one(e.sort)
    t = t - Tensor.of(e, one) - Tensor.of(one, e)
    eps = e.constant_term()
    if eps:
        t = t + Tensor.of(one, one) * eps
    return t


def cobracket_rep(e):
    """Representative of the induced cobracket on indecomposables: the
    reduced coproduct itself (weight-homogeneous input of weight >= 2)."""
    parts = e.weight_parts()
    if list(parts) in ([], [0]):
        raise ValueError("cobracket needs positive weight")
    if len(parts) != 1 or min(parts) < 2:
        raise ValueError("cobracket needs homogeneous weight >= 2")
    return reduced_coproduct(e)


# ---------------------------------------------------------------------------
# antipode

_ANTIPODE_CACHE = {}


def _antipode_generator(g, sort):
    key = (g._key, sort)
    hit = _ANTIPODE_CACHE.get(key)
    if hit is not None:
        return hit
    e = gen_elem(g, sort)
    acc = -e
    for (ml, mr), c in reduced_coproduct(e).terms.items():
        acc = acc - (antipode(Element.from_monomial(ml, sort))
                     * Element.from_monomial(mr, sort)) * c
    _ANTIPODE_CACHE[key] = acc
    return acc


def antipode(e):
    """The antipode of the Hopf algebra named by e's sort."""
    out = Element.zero(e.sort)
    for mon, c in e.terms.items():
        piece = Element.constant(c, e.sort)
        for g in mon:
            piece = piece * _antipode_generator(g, e.sort)
        out = out + piece
    return out


# ---------------------------------------------------------------------------
# the weight-lowering derivation
#
# Values are dicts mapping a letter (u_i or v_{i,j}) to the Element
# multiplying its differential.

def _d_accumulate(out, sym, elem):
    cur = out.get(sym)
    cur = elem if cur is None else cur + elem
    if cur.is_zero():
        out.pop(sym, None)
    else:
        out[sym] = cur


def _dlog_window(a, b):
    return [(("u", r), Fraction(1)) for r in range(a, b)]


def _dli1_window(a, b):
    return [(("v", a, b - 1), Fraction(-1))]


def _derive_generator(g):
    if g.inverted:
        raise ValueError("the derivation is defined on regular brackets only")
    out = {}
    if g.kind == LOG:
        _d_accumulate(out, ("u", g.indices[0]), Element.one(H))
        return out
    p = g.indices
    n = g.weights
    d = len(n)
    # lower one weight by differentiating a letter's log
    for k in range(d):
        if n[k] >= 2:
            e = gen_elem(li(p, n[:k] + (n[k] - 1,) + n[k + 1:]), H)
            for sym, c in _dlog_window(p[k], p[k + 1]):
                _d_accumulate(out, sym, e * c)
    # drop a weight-one head letter
    if n[0] == 1:
        e = gen_elem(li(p[1:], n[1:]), H) if d > 1 else Element.one(H)
        for sym, c in _dli1_window(p[0], p[1]):
            _d_accumulate(out, sym, e * c)
    # absorb a weight-one letter into its left neighbour
    for k in range(1, d):
        if n[k] == 1:
            e = gen_elem(li(p[:k] + p[k + 1:], n[:k] + n[k + 1:]), H)
            for sym, c in _dli1_window(p[k], p[k + 1]):
                _d_accumulate(out, sym, e * c)
    # absorb a weight-one letter into its right neighbour (with both the
    # letter's own differentials, and an overall minus sign)
    for k in range(0, d - 1):
        if n[k] == 1:
            e = gen_elem(li(p[:k + 1] + p[k + 2:], n[:k] + n[k + 1:]), H)
            for sym, c in (_dli1_window(p[k], p[k + 1])
                           + _dlog_window(p[k], p[k + 1])):
                _d_accumulate(out, sym, e * (-c))
    return out


def derive(e):
    """The weight-lowering derivation, extended by the Leibniz rule."""
    if e.sort != H:
        raise ValueError("the derivation lives on the plain sort")
    out = {}
    for mon, c in e.terms.items():
        for i, g in enumerate(mon):
            rest = Element.from_monomial(mon[:i] + mon[i + 1:], H, c)
            for sym, elem in _derive_generator(g).items():
                _d_accumulate(out, sym, rest * elem)
    return out


def derive_via_coproduct(e):
    """Dual route for the derivation: project the coproduct onto its
    weight-(n-1, 1) part and differentiate the right factor.  Must agree
    with ``derive`` identically."""
    if e.sort != H:
        raise ValueError("the derivation lives on the plain sort")
    out = {}
    for (ml, mr), c in coproduct(e).terms.items():
        if monomial_weight(mr) != 1:
            continue
        for sym, cl in weight_one_letters(mr[0]).items():
            _d_accumulate(out, sym, Element.from_monomial(ml, H, c * cl))
    return out
