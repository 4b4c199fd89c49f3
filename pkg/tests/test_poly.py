"""Polynomial ring basics: parsing, arithmetic, orders, degree counts."""

from fractions import Fraction

from sheafcalc import GREVLEX, LEX, PolyParseError, PolyRing, PrimeField, QQ


def test_parse_and_text_round_trip():
    R = PolyRing(("x", "y", "z", "w"))
    for text in ("x^2 - 2*y*z + 1/3*w^2", "x*y*z*w", "0", "3*x", "x - y"):
        p = R.parse(text)
        assert R.parse(p.text()) == p


def test_parse_rejects_inhomogeneous_input():
    R = PolyRing(("x", "y"))
    try:
        R.parse("x + y^2")
        assert False, "expected a parse error"
    except PolyParseError as e:
        assert "homogeneous" in str(e)


def test_parse_error_carries_position():
    R = PolyRing(("x", "y"))
    try:
        R.parse("x + @")
    except PolyParseError as e:
        assert e.pos == 4
    try:
        R.parse("x + q")
    except PolyParseError as e:
        assert e.pos == 4


def test_arithmetic_identities():
    R = PolyRing(("x", "y", "z"))
    x, y, z = R.gens()
    p = x + y
    q = x - y
    assert p * q == x ** 2 - y ** 2
    assert (p ** 3).text() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3"
    assert p - p == R.zero()
    assert (p - p).is_zero()
    assert p * R.zero() == R.zero()
    assert (x + y + z) * R.one() == x + y + z


def test_orders_pick_different_leads():
    q = "x*z^2 + y^3"
    lex = PolyRing(("x", "y", "z"), order=LEX)
    grev = PolyRing(("x", "y", "z"), order=GREVLEX)
    assert max(lex.parse(q).terms, key=lex.order.key) == (1, 0, 2)
    assert max(grev.parse(q).terms, key=grev.order.key) == (0, 3, 0)


def test_degree_counts_match_enumeration():
    R = PolyRing(("x", "y", "z", "w"))
    for d in range(6):
        monos = list(R.monomials_of_degree(d))
        assert len(monos) == R.dim_degree(d)
        assert len(set(monos)) == len(monos)
        assert all(sum(m) == d for m in monos)
    assert R.dim_degree(3) == 20


def test_evaluate_is_exact():
    R = PolyRing(("x", "y", "z", "w"))
    p = R.parse("x^2 - 2*y*z + 1/3*w^2")
    assert p.evaluate((1, 2, 3, 4)) == Fraction(-17, 3)


def test_prime_field_coefficients():
    F5 = PrimeField(5)
    R = PolyRing(("x", "y"), field=F5)
    p = R.parse("3*x + 4*y")
    q = R.parse("2*x + y")
    assert (p + q).text() == "0"
    assert p.evaluate((2, 1)) == 0  # 6 + 4 = 10 = 0 mod 5


def test_prime_field_rejects_bad_characteristic():
    for p in (0, 1, 2, 4, 9):
        try:
            PrimeField(p)
            assert False, p
        except ValueError:
            pass


def test_homogeneous_degree():
    R = PolyRing(("x", "y"))
    assert R.parse("x*y").degree == 2
    assert R.parse("0").is_zero()
    assert R.one().degree == 0
