"""Coefficient fields: exact rationals and prime fields.

The whole engine runs over QQ (``fractions.Fraction``) by default.  A prime
field mode exists so randomized consistency checks can cross-validate the
rational arithmetic cheaply; it is never used to produce a final reported
dimension.
"""

from fractions import Fraction


class RationalField:
    """The field QQ, coefficients represented as fractions.Fraction."""

    name = "QQ"
    characteristic = 0

    def __call__(self, a, b=None):
        return Fraction(a) if b is None else Fraction(a, b)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        # Fraction() guard: a or b may be a plain int, and int / int is
        # float division — keep every code path exact.
        return Fraction(a) / b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(1) / a

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """GF(p) with coefficients as plain ints in [0, p).

    p must be an odd prime (2 is excluded: several sign conventions in the
    engine assume -1 != 1).
    """

    characteristic = None  # set per instance

    def __init__(self, p):
        if p < 3 or not _is_prime(p):
            raise ValueError("prime field needs an odd prime, got %r" % (p,))
        self.p = p
        self.characteristic = p
        self.name = "Fp:%d" % p
        self.zero = 0
        self.one = 1

    def __call__(self, a, b=None):
        p = self.p
        if b is None:
            if isinstance(a, Fraction):
                return a.numerator % p * pow(a.denominator % p, p - 2, p) % p
            return int(a) % p
        return int(a) % p * pow(int(b) % p, p - 2, p) % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        return a * pow(b, self.p - 2, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


QQ = RationalField()


def field_from_name(text):
    """Parse a field tag: ``QQ`` or ``Fp:<prime>``."""
    text = text.strip()
    if text in ("QQ", "Q"):
        return QQ
    if text.startswith("Fp:") or text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError("unknown field %r (expected QQ or Fp:<prime>)" % text)
