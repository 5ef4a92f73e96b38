"""Polynomials and differential forms in the letter variables.

The letters are u_i (one per variable of the ambient depth) and v_{i,j}
(one per window i..j).  A Poly is an exact polynomial in these commuting
letters; a Form of degree k is a combination of basis k-covectors
d(letter) wedge ... with Poly coefficients.  On top of that sit:

  * the holomorphic one-form attached to a word (the image of the symbol),
  * pullbacks along contraction sequences,
  * the embeddings between weight-at-most-one Elements and linear Polys,
  * a floating-point layer that realizes the letters as actual logarithms
    at random sample points and evaluates forms on tangent vectors there.

All algebra is exact; floats appear only in the sampling layer.
"""

import cmath
import math
import random
from fractions import Fraction

from .algebra import LOG, Element, H, _as_fraction, li, log
from .tensor import WordSum, symbol, u_, uv_key, v_


class Poly:
    """Exact polynomial in the letters; monomials are sorted tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = _as_fraction(c)
                if c:
                    self.terms[mono] = self.terms.get(mono, Fraction(0)) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @staticmethod
    def zero():
        return Poly()

    @staticmethod
    def constant(c):
        return Poly({(): c})

    @staticmethod
    def one():
        return Poly.constant(1)

    @staticmethod
    def variable(sym):
        return Poly({(sym,): 1})

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Poly({m: c * v for m, v in self.terms.items()})
        if isinstance(other, Form):
            return other.scale(self)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2, key=uv_key))
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def substitute(self, images):
        """Replace each letter by a Poly (letters not named stay put)."""
        out = Poly.zero()
        for mono, c in self.terms.items():
            piece = Poly.constant(c)
            for sym in mono:
                piece = piece * images.get(sym, Poly.variable(sym))
            out = out + piece
        return out

    def derivative(self, sym):
        terms = {}
        for mono, c in self.terms.items():
            k = mono.count(sym)
            if not k:
                continue
            rest = list(mono)
            rest.remove(sym)
            m = tuple(rest)
            terms[m] = terms.get(m, Fraction(0)) + c * k
        return Poly(terms)

    def letters(self):
        out = set()
        for mono in self.terms:
            out.update(mono)
        return out

    def evaluate(self, values):
        total = 0j
        for mono, c in self.terms.items():
            acc = complex(c)
            for sym in mono:
                acc *= values[sym]
            total += acc
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        def mstr(m):
            return "*".join("%s%s" % (s[0], ",".join(map(str, s[1:])))
                            for s in m) if m else "1"
        return " + ".join("%s %s" % (c, mstr(m))
                          for m, c in sorted(self.terms.items()))


def _merge_basis(b1, b2):
    """Concatenate two ascending basis tuples; None if a letter repeats,
    else (sign, merged)."""
    merged = list(b1 + b2)
    sign = 1
    # insertion sort, counting swaps
    for i in range(1, len(merged)):
        j = i
        while j > 0 and uv_key(merged[j - 1]) > uv_key(merged[j]):
            merged[j - 1], merged[j] = merged[j], merged[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(merged, merged[1:]):
        if a == b:
            return None
    return sign, tuple(merged)


class Form:
    """Differential form of fixed degree with Poly coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {}
        if terms:
            for basis, p in terms.items():
                if not isinstance(p, Poly):
                    p = Poly.constant(p)
                if p.is_zero():
                    continue
                cur = self.terms.get(basis)
                self.terms[basis] = p if cur is None else cur + p
            self.terms = {b: p for b, p in self.terms.items() if not p.is_zero()}

    @staticmethod
    def zero(degree):
        return Form(degree)

    @staticmethod
    def d_letter(sym):
        return Form(1, {(sym,): Poly.one()})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("form degree mismatch")
        terms = dict(self.terms)
        for b, p in other.terms.items():
            terms[b] = terms.get(b, Poly.zero()) + p
        return Form(self.degree, terms)

    def __neg__(self):
        return Form(self.degree, {b: -p for b, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = Poly.constant(c)
        return Form(self.degree, {b: c * p for b, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, Form) and self.degree == other.degree
                and self.terms == other.terms)

    def wedge(self, other):
        out = Form(self.degree + other.degree)
        terms = out.terms
        for b1, p1 in self.terms.items():
            for b2, p2 in other.terms.items():
                hit = _merge_basis(b1, b2)
                if hit is None:
                    continue
                sign, basis = hit
                p = p1 * p2 * sign
                cur = terms.get(basis)
                terms[basis] = p if cur is None else cur + p
        out.terms = {b: p for b, p in terms.items() if not p.is_zero()}
        return out

    def exterior_d(self):
        out = Form(self.degree + 1)
        terms = out.terms
        for basis, p in self.terms.items():
            for sym in p.letters():
                dp = p.derivative(sym)
                hit = _merge_basis((sym,), basis)
                if hit is None:
                    continue
                sign, nb = hit
                piece = dp * sign
                cur = terms.get(nb)
                terms[nb] = piece if cur is None else cur + piece
        out.terms = {b: q for b, q in terms.items() if not q.is_zero()}
        return out

    def evaluate(self, values, tangents):
        """Evaluate on a point (letter values) and ``degree`` tangents."""
        if len(tangents) != self.degree:
            raise ValueError("need exactly %d tangent vectors" % self.degree)
        import itertools
        total = 0j
        for basis, p in self.terms.items():
            coeff = p.evaluate(values)
            det = 0j
            for perm in itertools.permutations(range(self.degree)):
                sgn = 1
                for i in range(len(perm)):
                    for j in range(i + 1, len(perm)):
                        if perm[i] > perm[j]:
                            sgn = -sgn
                prod = complex(sgn)
                for i, pi in enumerate(perm):
                    prod *= tangents[pi].get(basis[i], 0j)
                det += prod
            total += coeff * det
        return total

    def __repr__(self):
        if not self.terms:
            return "<form 0>"
        def bstr(b):
            return "^".join("d%s%s" % (s[0], ",".join(map(str, s[1:])))
                            for s in b)
        return "<form %s>" % " + ".join(
            "(%s) %s" % (p, bstr(b)) for b, p in sorted(self.terms.items()))


# ---------------------------------------------------------------------------
# the holomorphic one-form of a word

def w_tensor(ws):
    """The canonical one-form of a word sum:

    w(f_1 (x) ... (x) f_n) = (-1)^(n+1)/n! *
        sum_i (-1)^(i-1) binom(n-1, i-1) f_1...df_i...f_n
    """
    if isinstance(ws, tuple):
        ws = WordSum({ws: 1})
    out = Form(1)
    for word, c in ws.terms.items():
        n = len(word)
        if n == 0:
            continue
        pref = Fraction((-1) ** (n + 1), math.factorial(n)) * c
        for i in range(n):
            rest = tuple(sorted(word[:i] + word[i + 1:], key=uv_key))
            coeff = pref * ((-1) ** i) * math.comb(n - 1, i)
            out = out + Form(1, {(word[i],): Poly({rest: coeff})})
    return out


def eta_tensor(ws):
    """eta(f_1 (x) ... (x) f_n) = (-1)^(n+1)/(n-1)! f_2...f_n df_1."""
    if isinstance(ws, tuple):
        ws = WordSum({ws: 1})
    out = Form(1)
    for word, c in ws.terms.items():
        n = len(word)
        if n == 0:
            continue
        rest = tuple(sorted(word[1:], key=uv_key))
        coeff = Fraction((-1) ** (n + 1), math.factorial(n - 1)) * c
        out = out + Form(1, {(word[0],): Poly({rest: coeff})})
    return out


def w_element(e):
    """The one-form of an Element (via its symbol); kills all products."""
    return w_tensor(symbol(e))


# ---------------------------------------------------------------------------
# pullbacks along contraction sequences

def _pullback_images(c):
    """Letter images under the contraction (i_1, ..., i_{m+1})."""
    m = len(c) - 1
    images = {}
    dimages = {}
    for s in range(1, m + 1):
        lo, hi = c[s - 1], c[s]
        images[u_(s)] = sum((Poly.variable(u_(r)) for r in range(lo, hi)),
                            Poly.zero())
        dimages[u_(s)] = sum((Form.d_letter(u_(r)) for r in range(lo, hi)),
                             Form.zero(1))
        for t in range(s, m + 1):
            sym = v_(s, t)
            tgt = v_(c[s - 1], c[t] - 1)
            images[sym] = Poly.variable(tgt)
            dimages[sym] = Form.d_letter(tgt)
    return images, dimages


def pullback_poly(c, p):
    images, _ = _pullback_images(tuple(c))
    return p.substitute(images)


def pullback_form(c, f):
    images, dimages = _pullback_images(tuple(c))
    out = Form(f.degree)
    for basis, p in f.terms.items():
        piece = Form(0, {(): p.substitute(images)})
        for sym in basis:
            piece = piece.wedge(dimages[sym])
        out = out + piece
    return out


# ---------------------------------------------------------------------------
# embeddings between linear Polys and weight-at-most-one Elements

def element_to_poly(e):
    """[x_i]_0 -> u_i and [window]_1 -> -v; defined when every generator
    involved has weight one."""
    out = Poly.zero()
    for mon, c in e.terms.items():
        piece = Poly.constant(c)
        for g in mon:
            if g.kind == LOG:
                piece = piece * Poly.variable(u_(g.indices[0]))
            elif g.weight == 1 and not g.inverted:
                a, b = g.indices
                piece = piece * (-Poly.variable(v_(a, b - 1)))
            else:
                raise ValueError("element is not expressible in the letters:"
                                 " %s" % (g,))
        out = out + piece
    return out


def poly_to_element(p, sort=H):
    out = Element.zero(sort)
    for mono, c in p.terms.items():
        piece = Element.constant(c, sort)
        for sym in mono:
            if sym[0] == "u":
                piece = piece * Element.from_generator(log(sym[1]), sort)
            else:
                piece = piece * (-Element.from_generator(
                    li((sym[1], sym[2] + 1), (1,)), sort))
        out = out + piece
    return out


# ---------------------------------------------------------------------------
# numeric layer: letters as actual logarithms

def all_letters(dim):
    syms = [u_(r) for r in range(1, dim + 1)]
    syms += [v_(i, j) for i in range(1, dim + 1) for j in range(i, dim + 1)]
    return syms


def sample_point(dim, seed=0):
    """Random letter values satisfying exp(sum u) + exp(v) = 1 exactly
    (up to rounding) on every window, away from the singular locus."""
    rng = random.Random(seed)
    while True:
        us = {r: complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
              for r in range(1, dim + 1)}
        values = {u_(r): us[r] for r in us}
        ok = True
        for i in range(1, dim + 1):
            for j in range(i, dim + 1):
                s = sum(us[r] for r in range(i, j + 1))
                arg = 1 - cmath.exp(s)
                if abs(arg) < 1e-6 or abs(cmath.exp(s)) < 1e-6:
                    ok = False
                    break
                values[v_(i, j)] = cmath.log(arg)
            if not ok:
                break
        if ok:
            return values


def point_residual(values, dim):
    """Largest violation of the defining constraints at the point."""
    worst = 0.0
    for i in range(1, dim + 1):
        for j in range(i, dim + 1):
            s = sum(values[u_(r)] for r in range(i, j + 1))
            worst = max(worst, abs(cmath.exp(s) + cmath.exp(values[v_(i, j)]) - 1))
    return worst


def tangent_basis(values, dim):
    """Tangent vectors of the constraint variety: the k-th moves u_k with
    unit speed and drags every v_{i,j} with i <= k <= j along."""
    out = []
    for k in range(1, dim + 1):
        xi = {u_(r): (1 + 0j if r == k else 0j) for r in range(1, dim + 1)}
        for i in range(1, dim + 1):
            for j in range(i, dim + 1):
                if i <= k <= j:
                    s = sum(values[u_(r)] for r in range(i, j + 1))
                    xi[v_(i, j)] = -cmath.exp(s) / cmath.exp(values[v_(i, j)])
                else:
                    xi[v_(i, j)] = 0j
        out.append(xi)
    return out
