"""Tensor powers of the bracket algebras, and the word algebra underneath
the symbol map.

Tensor: exact n-fold tensors whose slots hold monomials of Elements.
WordSum: Q-combinations of words in the weight-one letters u_i, v_{i,j},
with the shuffle product, deconcatenation, the canonical projection onto
indecomposables, and the symbol map (maximal iterated coproduct).
"""

from fractions import Fraction

from .algebra import (
    H,
    LOG,
    Element,
    _as_fraction,
    monomial_weight,
    mul_monomials,
)


class Tensor:
    """A Q-linear combination of pure tensors of monomials."""

    __slots__ = ("sorts", "terms")

    def __init__(self, sorts, terms=None):
        self.sorts = tuple(sorts)
        self.terms = {}
        if terms:
            for mons, c in terms.items():
                c = _as_fraction(c)
                if c:
                    self.terms[mons] = self.terms.get(mons, Fraction(0)) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @property
    def arity(self):
        return len(self.sorts)

    @staticmethod
    def zero(sorts):
        return Tensor(sorts)

    @staticmethod
    def of(*elements):
        """The pure tensor e_1 (x) ... (x) e_n, expanded multilinearly."""
        sorts = tuple(e.sort for e in elements)
        terms = {(): Fraction(1)}
        for e in elements:
            nxt = {}
            for mons, c in terms.items():
                for mon, c2 in e.terms.items():
                    key = mons + (mon,)
                    nxt[key] = nxt.get(key, Fraction(0)) + c * c2
            terms = nxt
        return Tensor(sorts, terms)

    def __add__(self, other):
        if self.sorts != other.sorts:
            raise ValueError("tensor sort mismatch")
        terms = dict(self.terms)
        for mons, c in other.terms.items():
            terms[mons] = terms.get(mons, Fraction(0)) + c
        return Tensor(self.sorts, terms)

    def __neg__(self):
        return Tensor(self.sorts, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Tensor(self.sorts, {m: c * v for m, v in self.terms.items()})
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.sorts != other.sorts:
            raise ValueError("tensor sort mismatch")
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(mul_monomials(a, b) for a, b in zip(m1, m2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Tensor(self.sorts, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, Tensor) and self.sorts == other.sorts
                and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def weight_profiles(self):
        return sorted({tuple(monomial_weight(m) for m in mons)
                       for mons in self.terms})

    def component(self, profile):
        """The piece whose slots have the given weights."""
        profile = tuple(profile)
        terms = {mons: c for mons, c in self.terms.items()
                 if tuple(monomial_weight(m) for m in mons) == profile}
        return Tensor(self.sorts, terms)

    def map_slot(self, k, fn, sort=None):
        """Apply a linear map (given on monomials, returning Elements) in
        slot k."""
        new_sorts = list(self.sorts)
        if sort is not None:
            new_sorts[k] = sort
        out = Tensor(new_sorts)
        terms = out.terms
        for mons, c in self.terms.items():
            img = fn(mons[k])
            for mon, c2 in img.terms.items():
                key = mons[:k] + (mon,) + mons[k + 1:]
                terms[key] = terms.get(key, Fraction(0)) + c * c2
        out.terms = {m: v for m, v in terms.items() if v}
        return out

    def expand_slot(self, k, fn):
        """Replace slot k via a map from monomials to Tensors (splicing the
        result's slots in place of slot k)."""
        out = None
        for mons, c in self.terms.items():
            img = fn(mons[k])
            if out is None:
                out = Tensor(self.sorts[:k] + img.sorts + self.sorts[k + 1:])
            for mid, c2 in img.terms.items():
                key = mons[:k] + mid + mons[k + 1:]
                out.terms[key] = out.terms.get(key, Fraction(0)) + c * c2
        if out is None:
            raise ValueError("cannot expand a slot of the zero tensor")
        out.terms = {m: v for m, v in out.terms.items() if v}
        return out

    def contract(self, sort):
        """Multiply all slots together into a single Element."""
        terms = {}
        for mons, c in self.terms.items():
            mon = ()
            for m in mons:
                mon = mul_monomials(mon, m)
            terms[mon] = terms.get(mon, Fraction(0)) + c
        return Element(sort, terms)

    def __repr__(self):
        if not self.terms:
            return "<tensor 0>"
        bits = []
        for mons, c in sorted(self.terms.items(),
                              key=lambda mc: tuple(map(str, mc[0]))):
            slot = " (x) ".join("1" if m == () else
                                " ".join(str(g) for g in m) for m in mons)
            bits.append("%s [%s]" % (c, slot))
        return "<tensor %s>" % " + ".join(bits)


# ---------------------------------------------------------------------------
# weight-one letters

def u_(i):
    return ("u", int(i))


def v_(i, j):
    return ("v", int(i), int(j))


def uv_key(sym):
    """Total order on letters: all u_i before all v_{i,j}, each by index."""
    if sym[0] == "u":
        return (0, sym[1], sym[1])
    return (1, sym[1], sym[2])


def weight_one_letters(g):
    """Expand a weight-one generator over the letter basis.

    [x_i]_0 = u_i and [x_{i -> j+1}]_1 = -v_{i,j}.
    """
    if g.kind == LOG:
        return {u_(g.indices[0]): Fraction(1)}
    if g.weight == 1 and not g.inverted:
        a, b = g.indices
        return {v_(a, b - 1): Fraction(-1)}
    raise ValueError("not a regular weight-one generator: %s" % (g,))


class WordSum:
    """A Q-linear combination of words in the letters; * is shuffle."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = _as_fraction(c)
                if c:
                    self.terms[w] = self.terms.get(w, Fraction(0)) + c
            self.terms = {w: c for w, c in self.terms.items() if c}

    @staticmethod
    def unit():
        return WordSum({(): 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return WordSum(terms)

    def __neg__(self):
        return WordSum({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return WordSum({w: c * v for w, v in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                for w, mult in shuffle_words(w1, w2).items():
                    out[w] = out.get(w, Fraction(0)) + c1 * c2 * mult
        return WordSum(out)

    __rmul__ = __mul__

    def append_letter(self, letter):
        return WordSum({w + (letter,): c for w, c in self.terms.items()})

    def prepend_letter(self, letter):
        return WordSum({(letter,) + w: c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, WordSum) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "<words 0>"
        def wstr(w):
            return "|".join("%s%s" % (s[0], ",".join(map(str, s[1:])))
                            for s in w) if w else "1"
        return "<words %s>" % " + ".join(
            "%s %s" % (c, wstr(w)) for w, c in sorted(self.terms.items()))


_SHUFFLE_CACHE = {}


def shuffle_words(w1, w2):
    """All interleavings of w1 and w2 with multiplicity."""
    if not w1:
        return {w2: 1}
    if not w2:
        return {w1: 1}
    key = (w1, w2)
    hit = _SHUFFLE_CACHE.get(key)
    if hit is not None:
        return hit
    out = {}
    for w, m in shuffle_words(w1[1:], w2).items():
        k = (w1[0],) + w
        out[k] = out.get(k, 0) + m
    for w, m in shuffle_words(w1, w2[1:]).items():
        k = (w2[0],) + w
        out[k] = out.get(k, 0) + m
    _SHUFFLE_CACHE[key] = out
    return out


def deconcatenate(word):
    """All ways to cut the word in two, including the empty ends."""
    return [(word[:k], word[k:]) for k in range(len(word) + 1)]


# ---------------------------------------------------------------------------
# projection onto indecomposables

_PI_CACHE = {}


def _pi_word(w):
    n = len(w)
    if n <= 1:
        return WordSum({w: 1})
    hit = _PI_CACHE.get(w)
    if hit is not None:
        return hit
    left = _pi_word(w[:-1]).append_letter(w[-1])
    right = _pi_word(w[1:]).append_letter(w[0])
    out = (left - right) * Fraction(n - 1, n)
    _PI_CACHE[w] = out
    return out


def project_pi(ws):
    """The canonical projection killing all nontrivial shuffle products."""
    out = WordSum()
    for w, c in ws.terms.items():
        out = out + _pi_word(w) * c
    return out


def project_pi_closed(word):
    """Closed form of the projection of a single word (used as an oracle
    against the recursive definition):

        pi(w) = w + sum_i (-1)^i (n-i)/n  reverse(w[:i]) shuffled w[i:]
    """
    n = len(word)
    if n == 0:
        return WordSum()
    out = WordSum({word: 1})
    for i in range(1, n):
        pref = tuple(reversed(word[:i]))
        for w, m in shuffle_words(pref, word[i:]).items():
            out = out + WordSum({w: Fraction((-1) ** i * (n - i) * m, n)})
    return out


# ---------------------------------------------------------------------------
# the symbol map

_SYMBOL_CACHE = {}
_SYMBOL_RIGHT_CACHE = {}


def _letters_of_monomial(mon):
    if len(mon) != 1:
        raise ValueError("weight-one slot is not a single generator")
    return weight_one_letters(mon[0])


def _symbol_monomial(mon):
    hit = _SYMBOL_CACHE.get(mon)
    if hit is not None:
        return hit
    n = monomial_weight(mon)
    if n == 0:
        out = WordSum.unit()
    elif n == 1:
        out = WordSum({(sym,): c for sym, c in _letters_of_monomial(mon).items()})
    else:
        from .coproduct import coproduct as _coproduct
        t = _coproduct(Element.from_monomial(mon, H)).component((1, n - 1))
        out = WordSum()
        for (ml, mr), c in t.terms.items():
            tail = _symbol_monomial(mr)
            for sym, cl in _letters_of_monomial(ml).items():
                out = out + tail.prepend_letter(sym) * (c * cl)
    _SYMBOL_CACHE[mon] = out
    return out


def symbol(e):
    """Maximal iterated coproduct, peeling weight-one pieces off the left."""
    if e.sort != H:
        raise ValueError("the symbol is defined on the plain sort only")
    out = WordSum()
    for mon, c in e.terms.items():
        out = out + _symbol_monomial(mon) * c
    return out


def _symbol_monomial_right(mon):
    hit = _SYMBOL_RIGHT_CACHE.get(mon)
    if hit is not None:
        return hit
    n = monomial_weight(mon)
    if n == 0:
        out = WordSum.unit()
    elif n == 1:
        out = WordSum({(sym,): c for sym, c in _letters_of_monomial(mon).items()})
    else:
        from .coproduct import coproduct as _coproduct
        t = _coproduct(Element.from_monomial(mon, H)).component((n - 1, 1))
        out = WordSum()
        for (ml, mr), c in t.terms.items():
            head = _symbol_monomial_right(ml)
            for sym, cr in _letters_of_monomial(mr).items():
                out = out + head.append_letter(sym) * (c * cr)
    _SYMBOL_RIGHT_CACHE[mon] = out
    return out


def symbol_right(e):
    """Same map, peeling weight-one pieces off the right instead; agrees
    with ``symbol`` by coassociativity and serves as its cross-check."""
    if e.sort != H:
        raise ValueError("the symbol is defined on the plain sort only")
    out = WordSum()
    for mon, c in e.terms.items():
        out = out + _symbol_monomial_right(mon) * c
    return out
