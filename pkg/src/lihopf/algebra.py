"""Free commutative algebras of polylogarithm brackets, with exact scalars.

Two sorts share one representation.  Both are spanned by commutative
monomials in bracket generators:

    log generator   [x_i]_0                      weight 1
    nested bracket  [w_1, ..., w_d]_{n_1,...,n_d}  weight n_1+...+n_d

where each letter w_r is a *window*: the product x_{i_r} x_{i_r+1} ... x_{i_{r+1}-1}
of consecutive variables.  The windows of one bracket chain left to right,
so a bracket is determined by a strictly increasing index tuple
(i_1, ..., i_{d+1}) and a weight tuple (n_1, ..., n_d).

The plain sort 'H' allows only the generators above.  The extended sort
'Hbar' adds inverted brackets, displayed with the letters reversed and
inverted:

    [w_d^{-1}, ..., w_1^{-1}]_{n_d,...,n_1}

We store an inverted bracket under the same ascending (indices, weights)
data as its regular mirror plus an ``inverted`` flag; renderers reverse
the lists.  Inverted *log* letters never exist as generators: [w^{-1}]_0
normalizes to -[w]_0, and a window log [x_{i->j}]_0 is eagerly expanded
into sum(  [x_r]_0 for i <= r < j ), so that window additivity holds by
construction.

Scalars are exact rationals (fractions.Fraction) throughout.
"""

from fractions import Fraction

H = "H"
HBAR = "Hbar"

LOG = "log"
LI = "li"


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("scalar must be an int or Fraction, got %r" % (c,))


class Generator:
    """A single bracket generator.  Immutable and totally ordered."""

    __slots__ = ("kind", "indices", "weights", "inverted", "_key")

    def __init__(self, kind, indices, weights=(), inverted=False):
        indices = tuple(int(i) for i in indices)
        weights = tuple(int(n) for n in weights)
        if kind == LOG:
            if len(indices) != 1 or weights or inverted:
                raise ValueError("log generator takes a single index")
            if indices[0] < 1:
                raise ValueError("variable index must be >= 1")
        elif kind == LI:
            if len(indices) < 2 or len(weights) != len(indices) - 1:
                raise ValueError("bracket needs d+1 indices and d weights")
            if any(a >= b for a, b in zip(indices, indices[1:])):
                raise ValueError("indices must be strictly increasing")
            if indices[0] < 1:
                raise ValueError("indices must be positive")
            if any(n < 1 for n in weights):
                raise ValueError("weights must be >= 1")
        else:
            raise ValueError("unknown generator kind %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "inverted", bool(inverted))
        object.__setattr__(self, "_key", (kind, indices, weights, bool(inverted)))

    def __setattr__(self, name, value):
        raise AttributeError("Generator is immutable")

    @property
    def weight(self):
        return 1 if self.kind == LOG else sum(self.weights)

    @property
    def depth(self):
        return 0 if self.kind == LOG else len(self.weights)

    def windows(self):
        """The letter windows (start, stop), in stored (ascending) order."""
        if self.kind == LOG:
            return ((self.indices[0], self.indices[0] + 1),)
        return tuple(zip(self.indices, self.indices[1:]))

    def __eq__(self, other):
        return isinstance(other, Generator) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.kind == LOG:
            return "log(%d)" % self.indices
        args = ",".join(str(i) for i in self.indices)
        if self.inverted:
            # display order of an inverted bracket reverses the weight list
            ns = ",".join(str(n) for n in reversed(self.weights))
            return "ILi[%s](%s)" % (ns, args)
        ns = ",".join(str(n) for n in self.weights)
        return "Li[%s](%s)" % (ns, args)


def log(i):
    return Generator(LOG, (i,))


def li(indices, weights, inverted=False):
    return Generator(LI, tuple(indices), tuple(weights), inverted)


# ---------------------------------------------------------------------------
# monomials: sorted tuples of generators

def mul_monomials(a, b):
    return tuple(sorted(a + b))


def monomial_weight(mon):
    return sum(g.weight for g in mon)


def monomial_str(mon):
    parts = []
    i = 0
    while i < len(mon):
        j = i
        while j < len(mon) and mon[j] == mon[i]:
            j += 1
        parts.append(str(mon[i]) + ("^%d" % (j - i) if j - i > 1 else ""))
        i = j
    return " ".join(parts)


class Element:
    """A finite Q-linear combination of monomials, tagged with its sort.

    Arithmetic requires equal sorts; a constant (scalar multiple of the
    empty monomial) is sort-agnostic and adopts the other operand's sort.
    """

    __slots__ = ("sort", "terms")

    def __init__(self, sort, terms=None):
        if sort not in (H, HBAR):
            raise ValueError("sort must be 'H' or 'Hbar'")
        self.sort = sort
        self.terms = {}
        if terms:
            for mon, c in terms.items():
                c = _as_fraction(c)
                if c:
                    self.terms[mon] = c
        if sort == H:
            for mon in self.terms:
                if any(g.inverted for g in mon):
                    raise ValueError("inverted generator in H-sort element")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(sort=H):
        return Element(sort)

    @staticmethod
    def one(sort=H):
        return Element(sort, {(): Fraction(1)})

    @staticmethod
    def constant(c, sort=H):
        return Element(sort, {(): _as_fraction(c)})

    @staticmethod
    def from_generator(g, sort=None):
        if sort is None:
            sort = HBAR if g.inverted else H
        return Element(sort, {(g,): Fraction(1)})

    @staticmethod
    def from_monomial(mon, sort, coeff=1):
        return Element(sort, {tuple(sorted(mon)): _as_fraction(coeff)})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mon == () for mon in self.terms)

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def weight_parts(self):
        """Split into homogeneous pieces: dict weight -> Element."""
        out = {}
        for mon, c in self.terms.items():
            w = monomial_weight(mon)
            out.setdefault(w, {})[mon] = c
        return {w: Element(self.sort, t) for w, t in sorted(out.items())}

    def weight_part(self, n):
        t = {m: c for m, c in self.terms.items() if monomial_weight(m) == n}
        return Element(self.sort, t)

    def max_weight(self):
        return max((monomial_weight(m) for m in self.terms), default=0)

    def as_sort(self, sort):
        return Element(sort, self.terms)

    # -- arithmetic --------------------------------------------------------

    def _join(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.constant(other, self.sort)
        if not isinstance(other, Element):
            return None, None
        if self.sort == other.sort:
            return self, other
        if self.is_constant():
            return self.as_sort(other.sort), other
        if other.is_constant():
            return self, other.as_sort(self.sort)
        raise ValueError("sort mismatch: %s vs %s" % (self.sort, other.sort))

    def __add__(self, other):
        a, b = self._join(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for mon, c in b.terms.items():
            terms[mon] = terms.get(mon, Fraction(0)) + c
        return Element(a.sort, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.sort, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._join(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Element(self.sort, {m: c * v for m, v in self.terms.items()})
        a, b = self._join(other)
        if a is None:
            return NotImplemented
        terms = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                mon = mul_monomials(m1, m2)
                terms[mon] = terms.get(mon, Fraction(0)) + c1 * c2
        return Element(a.sort, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Element.one(self.sort)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.constant(other, self.sort)
        if not isinstance(other, Element):
            return NotImplemented
        if self.terms != other.terms:
            return False
        return self.sort == other.sort or self.is_constant()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(),
                       key=lambda mc: (monomial_weight(mc[0]), mc[0]))
        out = []
        for mon, c in items:
            mag = abs(c)
            body = monomial_str(mon)
            if mon == ():
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = "%s %s" % (mag, body)
            if not out:
                out.append(piece if c > 0 else "-" + piece)
            else:
                out.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(out)


def gen_elem(g, sort=None):
    return Element.from_generator(g, sort)


def expand_log(i, j, sort=H, inverse=False):
    """[x_{i->j}]_0 as an element: sum of [x_r]_0 over i <= r < j.

    ``inverse=True`` gives [x_{i->j}^{-1}]_0 = -[x_{i->j}]_0.  i == j is the
    empty window (the unit letter 1) whose log is 0.
    """
    if not 1 <= i <= j:
        raise ValueError("need 1 <= i <= j")
    terms = {}
    for r in range(i, j):
        terms[(log(r),)] = Fraction(-1 if inverse else 1)
    return Element(sort, terms)


# ---------------------------------------------------------------------------
# weight vectors (tuples of non-negative ints; () is the zero vector)

ZERO_VECTOR = ()


def vector_norm(v):
    return sum(v)


def vector_dim(v):
    return len(v)


def generator_to_vector(g):
    """Encode a regular bracket as its weight vector.

    [x_{i_1->i_2},...]_{n_1..n_d}  ->  entries n_r at positions i_r
    (1-based), zeros elsewhere, length i_{d+1}-1.  The unit (g=None)
    encodes as the zero vector ().
    """
    if g is None:
        return ZERO_VECTOR
    if g.kind != LI or g.inverted:
        raise ValueError("only regular brackets correspond to weight vectors")
    d = g.depth
    length = g.indices[d] - 1
    v = [0] * length
    for r in range(d):
        v[g.indices[r] - 1] = g.weights[r]
    return tuple(v)


def vector_to_generator(v):
    """Inverse of generator_to_vector; the zero vector maps to None (unit)."""
    v = tuple(v)
    if any(x < 0 for x in v):
        raise ValueError("negative entry in weight vector")
    positions = [p for p, x in enumerate(v) if x]
    if not positions:
        if v != ():
            # an all-zero nonempty tuple does not come from any bracket
            raise ValueError("all-zero vector of positive dim has no generator")
        return None
    indices = tuple(p + 1 for p in positions) + (len(v) + 1,)
    weights = tuple(v[p] for p in positions)
    return li(indices, weights)


def precede_key(v):
    """Sort key realizing the weight-vector order.

    Ascending by total weight, then by dim, then by 'the rightmost entry
    where the two differ is larger' -- encoded by negating the reversed
    tuple so plain lexicographic comparison does the rest.
    """
    return (vector_norm(v), vector_dim(v), tuple(-x for x in reversed(v)))


def precede(a, b):
    """Strict order a < b on weight vectors."""
    return precede_key(tuple(a)) < precede_key(tuple(b))


# ---------------------------------------------------------------------------
# contraction sequences: strictly increasing index tuples (i_1,...,i_{d+1}).
# Such a tuple maps variable slot s of a depth-d world to the window
# [i_s, i_{s+1}) of a deeper world; brackets transform index-wise.

def check_contraction(c):
    c = tuple(int(x) for x in c)
    if len(c) < 2 or c[0] < 1 or any(a >= b for a, b in zip(c, c[1:])):
        raise ValueError("contraction must be strictly increasing, length >= 2")
    return c


def contract(c, depth_n):
    """The window mapping of c into a depth-``depth_n`` world: slot s
    (1-based) goes to the window [i_s, i_{s+1})."""
    c = check_contraction(c)
    if c[-1] > depth_n + 1:
        raise ValueError("contraction out of range for depth %d" % depth_n)
    return tuple((c[s], c[s + 1]) for s in range(len(c) - 1))


def compose(i, j):
    """The contraction acting as 'apply j, then i': selects entries of i."""
    i = check_contraction(i)
    j = check_contraction(j)
    if j[-1] > len(i):
        raise ValueError("inner sequence exceeds outer length")
    return tuple(i[x - 1] for x in j)


def apply_contraction(c, x):
    """Substitute windows for variables in a generator or element.

    Each variable index a becomes c_a, so a window a->b becomes c_a->c_b.
    Log letters may spread into sums (their windows expand); brackets map
    generator-to-generator.
    """
    c = check_contraction(c)

    def on_generator(g):
        if g.kind == LOG:
            a = g.indices[0]
            if a + 1 > len(c):
                raise ValueError("generator outside contraction range")
            return expand_log(c[a - 1], c[a], sort=H)
        if g.indices[-1] > len(c):
            raise ValueError("generator outside contraction range")
        newidx = tuple(c[a - 1] for a in g.indices)
        return Element.from_generator(
            Generator(LI, newidx, g.weights, g.inverted),
            HBAR if g.inverted else H)

    if isinstance(x, Generator):
        return on_generator(x)
    out = Element.zero(x.sort)
    for mon, coeff in x.terms.items():
        piece = Element.constant(coeff, x.sort)
        for g in mon:
            piece = piece * on_generator(g).as_sort(x.sort)
        out = out + piece
    return out
