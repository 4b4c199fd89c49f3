"""Sparse multivariate polynomials over an exact field, with monomial orders.

Monomials are plain exponent tuples; polynomials are immutable wrappers around
a dict {exponent tuple: coefficient}.  Everything is graded: the parser and
the ring constructors reject non-homogeneous input, since every object the
engine manipulates (ideals, module presentations, resolutions) is homogeneous.

Monomial orders provide a sort key rather than a comparison callback, so the
hot loops can use max()/sorted() directly.
"""

from fractions import Fraction

from .fields import QQ


# ---------------------------------------------------------------------------
# monomials (exponent tuples)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(b, a):
    return all(x <= y for x, y in zip(b, a))


def mono_deg(a):
    return sum(a)


def monomials_of_degree(n, d):
    """All exponent tuples of total degree d in n variables (lex-descending
    on the first variable).  d < 0 yields nothing."""
    if d < 0:
        return
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            yield (e,) + rest


# ---------------------------------------------------------------------------
# monomial orders

class MonomialOrder:
    """Base: subclasses define key(mono); bigger key = bigger monomial."""

    name = "?"

    def key(self, mono):
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


class GrevlexOrder(MonomialOrder):
    """Degree reverse lexicographic.  a > b iff deg a > deg b, or degrees tie
    and the last nonzero entry of a-b is negative."""

    name = "grevlex"

    def key(self, mono):
        return (sum(mono),) + tuple(-e for e in reversed(mono))


class LexOrder(MonomialOrder):
    name = "lex"

    def key(self, mono):
        return mono


class EliminationOrder(MonomialOrder):
    """Block order eliminating the first k variables: compares the first
    block by graded-revlex, then the tail block.  Standard tool for computing
    intersections and kernels by tagging with auxiliary variables."""

    def __init__(self, k):
        self.k = k
        self.name = "eliminate(%d)" % k

    def key(self, mono):
        head, tail = mono[: self.k], mono[self.k:]
        return (
            (sum(head),) + tuple(-e for e in reversed(head)),
            (sum(tail),) + tuple(-e for e in reversed(tail)),
        )


GREVLEX = GrevlexOrder()
LEX = LexOrder()


def order_from_name(text):
    text = text.strip()
    if text == "grevlex":
        return GREVLEX
    if text == "lex":
        return LEX
    if text.startswith("eliminate(") and text.endswith(")"):
        return EliminationOrder(int(text[len("eliminate("):-1]))
    raise ValueError("unknown monomial order %r" % text)


def compare_monomials(order, a, b):
    """-1 / 0 / +1 with a <, ==, > b in the given order."""
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# the ring

class PolyRing:
    """k[x_0..x_{n-1}] with a field and a default monomial order.

    Rings are value objects: two rings with the same variables, field and
    order compare equal, and polynomials carry a reference to theirs.
    """

    def __init__(self, names, field=QQ, order=GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names) or not names:
            raise ValueError("variable names must be distinct and nonempty")
        self.names = names
        self.nvars = len(names)
        self.field = field
        self.order = order
        self._name_index = {nm: i for i, nm in enumerate(names)}
        self.zero_mono = (0,) * self.nvars

    def with_order(self, order):
        return PolyRing(self.names, self.field, order)

    def with_field(self, field):
        return PolyRing(self.names, field, self.order)

    # -- constructors ------------------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {self.zero_mono: self.field.one})

    def const(self, c):
        c = self.field(c)
        return Polynomial(self, {self.zero_mono: c} if c else {})

    def var(self, i):
        if isinstance(i, str):
            i = self._name_index[i]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, mono, coeff=1):
        c = self.field(coeff)
        return Polynomial(self, {tuple(mono): c} if c else {})

    def from_terms(self, terms):
        d = {}
        for mono, c in terms:
            if c:
                d[tuple(mono)] = self.field.add(d.get(tuple(mono), self.field.zero), c)
        return Polynomial(self, {m: c for m, c in d.items() if c})

    def parse(self, text):
        """Parse the textual syntax (see _PolyParser).  Raises PolyParseError
        carrying a position when the text is malformed or non-homogeneous."""
        return _PolyParser(self, text).parse()

    # -- misc ---------------------------------------------------------------

    def monomials_of_degree(self, d):
        return monomials_of_degree(self.nvars, d)

    def dim_degree(self, d):
        """dim_k of the degree-d graded piece, i.e. C(d+n-1, n-1)."""
        if d < 0:
            return 0
        from math import comb
        return comb(d + self.nvars - 1, self.nvars - 1)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return "%s[%s] (%s)" % (self.field.name, ",".join(self.names), self.order.name)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable sparse polynomial.  Do not mutate .terms."""

    __slots__ = ("ring", "terms", "_deg")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._deg = None

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    @property
    def degree(self):
        """Degree of a homogeneous polynomial; ValueError if mixed, None if 0."""
        if self._deg is None:
            degs = {sum(m) for m in self.terms}
            if not degs:
                return None
            if len(degs) > 1:
                raise ValueError("polynomial is not homogeneous: %s" % self)
            self._deg = degs.pop()
        return self._deg

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=None)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(out.get(m, f.zero), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(self.ring.field(other))
        other = self._coerce(other)
        f = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c):
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self.terms.items()})

    def mul_monomial(self, mono, coeff=None):
        f = self.ring.field
        if coeff is None:
            coeff = f.one
        if not coeff:
            return self.ring.zero()
        return Polynomial(
            self.ring, {mono_mul(m, mono): f.mul(c, coeff) for m, c in self.terms.items()}
        )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mixed rings: %r vs %r" % (self.ring, other.ring))
            return other
        return self.ring.const(other)

    # -- leading data --------------------------------------------------------

    def lead_monomial(self, order=None):
        order = order or self.ring.order
        return max(self.terms, key=order.key)

    def lead_coeff(self, order=None):
        return self.terms[self.lead_monomial(order)]

    def monic(self, order=None):
        if not self.terms:
            return self
        f = self.ring.field
        lc = self.lead_coeff(order)
        return Polynomial(self.ring, {m: f.div(c, lc) for m, c in self.terms.items()})

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point):
        """Evaluate at a point given as a coordinate list (field elements)."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has %d coordinates, ring has %d variables"
                             % (len(point), self.ring.nvars))
        f = self.ring.field
        pt = [f(c) for c in point]
        total = f.zero
        for m, c in self.terms.items():
            v = c
            for e, x in zip(m, pt):
                for _ in range(e):
                    v = f.mul(v, x)
            total = f.add(total, v)
        return total

    def substitute_zero(self, i):
        """Set variable i to 0 and drop it, landing in a ring with n-1 vars.
        Keeps field and order family (grevlex/lex)."""
        names = self.ring.names[:i] + self.ring.names[i + 1:]
        new_ring = PolyRing(names, self.ring.field, self.ring.order)
        out = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                out[m[:i] + m[i + 1:]] = c
        return Polynomial(new_ring, out), new_ring

    # -- hashing / display ----------------------------------------------------

    def sorted_terms(self, order=None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return self.text()

    def text(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        chunks = []
        for m, c in self.sorted_terms():
            vars_part = "*".join(
                ("%s^%d" % (names[i], e) if e > 1 else names[i])
                for i, e in enumerate(m) if e
            )
            if not vars_part:
                body = str(c)
            elif c == 1:
                body = vars_part
            elif c == -1:
                body = "-" + vars_part
            else:
                body = "%s*%s" % (c, vars_part)
            chunks.append(body)
        out = chunks[0]
        for ch in chunks[1:]:
            out += " - " + ch[1:] if ch.startswith("-") else " + " + ch
        return out


# ---------------------------------------------------------------------------
# parser

class PolyParseError(ValueError):
    """Carries .pos, the character offset into the parsed string."""

    def __init__(self, message, pos):
        super().__init__("%s (at offset %d)" % (message, pos))
        self.pos = pos


class _PolyParser:
    """Recursive-descent parser for the expression syntax:

        poly   := term (('+'|'-') term)*
        term   := factor ('*'? factor)*          juxtaposition multiplies
        factor := rational | var ('^' int)? | '(' poly ')' | '-' factor
        rational := int ('/' int)?

    The result must be homogeneous; a mixed-degree expression is rejected
    here rather than later so session files fail with a position.
    """

    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.pos = 0

    def parse(self):
        p = self._poly()
        self._skip_ws()
        if self.pos != len(self.text):
            raise PolyParseError("unexpected %r" % self.text[self.pos], self.pos)
        if not p.is_homogeneous():
            raise PolyParseError("polynomial is not homogeneous: %r" % self.text.strip(), 0)
        return p

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _poly(self):
        neg = False
        if self._peek() == "-":
            self.pos += 1
            neg = True
        elif self._peek() == "+":
            self.pos += 1
        p = self._term()
        if neg:
            p = -p
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                p = p + self._term()
            elif ch == "-":
                self.pos += 1
                p = p - self._term()
            else:
                return p

    def _term(self):
        p = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                p = p * self._factor()
            elif ch.isalpha() or ch == "(" or ch.isdigit():
                p = p * self._factor()
            else:
                return p

    def _factor(self):
        ch = self._peek()
        if ch == "-":
            self.pos += 1
            return -self._factor()
        if ch == "(":
            self.pos += 1
            p = self._poly()
            if self._peek() != ")":
                raise PolyParseError("expected ')'", self.pos)
            self.pos += 1
            return self._maybe_power(p)
        if ch.isdigit():
            num = self._int()
            if self._peek() == "/":
                self.pos += 1
                den = self._int()
                if den == 0:
                    raise PolyParseError("zero denominator", self.pos)
                return self.ring.const(Fraction(num, den))
            return self._maybe_power(self.ring.const(num))
        if ch.isalpha() or ch == "_":
            name = self._name()
            if name not in self.ring._name_index:
                raise PolyParseError("unknown variable %r" % name, self.pos - len(name))
            return self._maybe_power(self.ring.var(name))
        raise PolyParseError("expected a factor", self.pos)

    def _maybe_power(self, p):
        if self._peek() == "^":
            self.pos += 1
            return p ** self._int()
        return p

    def _int(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolyParseError("expected an integer", self.pos)
        return int(self.text[start:self.pos])

    def _name(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]
