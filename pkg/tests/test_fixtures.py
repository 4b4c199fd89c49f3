"""The fixture catalog: named modules with pinned numerical invariants.

Loading a fixture recomputes its Hilbert polynomial against the stored one,
so most transcription errors already explode at load time; the tests here
pin the catalog contents and the helper constructions around it.
"""

from sheafcalc import PrimeField, QQ, hilbert_polynomial
from sheafcalc.fixtures import (
    fixture_module,
    fixture_names,
    jumpext_case,
    line_module,
    load_fixture,
    p1_ring,
    p3_ring,
    planar_model,
    plane_module,
    point_on_all,
    skyscraper,
    structure_sheaf,
    tor_line_presentation,
)

EXPECTED = {
    "cotangent",
    "cotangent2",
    "cubic_point_off_line",
    "cubic_point_on_line",
    "doubleline_conic",
    "elliptic_quartic",
    "fat_line_quartic",
    "line_cubic_meet_singular",
    "line_cubic_meet_smooth",
    "nodal_cubic",
    "planar_quartic_pencil",
    "pushforward_quartic",
    "reducible_cubic",
    "smooth_cubic_point",
    "wplus_extension",
}


def test_catalog_is_complete():
    assert set(fixture_names()) == EXPECTED


def test_every_fixture_loads_and_checks_its_hilbert_polynomial():
    for name in fixture_names():
        data = load_fixture(name)
        assert "module" in data and "hp" in data
        hp = hilbert_polynomial(data["module"])
        assert tuple(hp.coeffs) == tuple(data["hp"]), name


def test_unknown_fixture_name():
    try:
        load_fixture("klein_quartic")
        assert False
    except KeyError as e:
        assert "klein_quartic" in str(e)


def test_marked_points_lie_on_their_curves():
    for name in ("line_cubic_meet_smooth", "line_cubic_meet_singular",
                 "doubleline_conic"):
        data = load_fixture(name)
        field = data["module"].ring.field
        assert point_on_all(data["ideal"], data["point"], field), name


def test_jumpext_rejects_points_off_the_curve():
    try:
        jumpext_case("line_cubic_meet_smooth", point=(1, 1, 1, 1))
        assert False
    except ValueError as e:
        assert "not on the curve" in str(e)


def test_elliptic_marked_point_needs_the_right_field():
    # the stored curve has no rational marked point; over GF(5) the point
    # (1, 2, 2, 4) lies on it and the predictor runs
    data = load_fixture("elliptic_quartic")
    assert data.get("point") is None
    got = jumpext_case("elliptic_quartic", point=(1, 2, 2, 4),
                       field=PrimeField(5))
    assert got == {"rank_at_p": 1, "predicted_ext": 1, "computed_ext": 1}


def test_building_blocks():
    R = p3_ring()
    assert hilbert_polynomial(structure_sheaf(R)).degree == 3
    assert hilbert_polynomial(line_module(R)).text() == "m + 1"
    assert hilbert_polynomial(plane_module(R)).degree == 2
    sky = skyscraper(R, (0, 0, 0, 1))
    assert hilbert_polynomial(sky).text() == "1"
    try:
        skyscraper(R, (0, 0, 0, 0))
        assert False, "the zero tuple is not a projective point"
    except ValueError:
        pass


def test_fixture_cache_returns_the_same_object():
    a = fixture_module("reducible_cubic")
    b = fixture_module("reducible_cubic")
    assert a is b
    c = fixture_module("reducible_cubic", field=PrimeField(7))
    assert c is not a and c.ring.field.characteristic == 7


def test_planar_model_drops_one_variable():
    mod = fixture_module("cubic_point_on_line")
    flat = planar_model(mod)
    assert flat.ring.nvars == 3
    assert hilbert_polynomial(flat).text() == hilbert_polynomial(mod).text()


def test_line_restriction_lives_on_the_line():
    mod = fixture_module("cubic_point_on_line")
    restr = tor_line_presentation(mod, 0)
    assert restr.ring.nvars == p1_ring().nvars == 2
    tor1 = tor_line_presentation(mod, 1)
    assert tor1.ring.nvars == 2


def test_prime_field_fixture_matches_rational_shape():
    q = fixture_module("fat_line_quartic")
    p = fixture_module("fat_line_quartic", field=PrimeField(5))
    assert hilbert_polynomial(p).text() == hilbert_polynomial(q).text()
    assert sorted(p.gen_degs) == sorted(q.gen_degs)
