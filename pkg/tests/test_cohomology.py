"""Sheaf cohomology on projective space and the global-Ext stabilizer."""

from math import comb

from sheafcalc import (
    ModulePresentation,
    PolyRing,
    QuotientBasis,
    cohomology_table,
    dual_sheaf,
    hilbert_polynomial,
    omega_module,
    saturate_presentation,
    serre_duality_check,
    sheaf_cohomology,
    sheaf_ext,
    sheaf_ext_dim,
    truncated_ext_dim,
)
from sheafcalc.fixtures import line_module, p3_ring, structure_sheaf

R = p3_ring()


def test_structure_sheaf_cohomology():
    o = structure_sheaf(R)
    for d in range(0, 5):
        assert sheaf_cohomology(o, 0, d) == comb(d + 3, 3)
    assert sheaf_cohomology(o, 0, -1) == 0
    assert sheaf_cohomology(o, 1, 0) == 0
    assert sheaf_cohomology(o, 2, -3) == 0
    assert sheaf_cohomology(o, 3, -4) == 1
    assert sheaf_cohomology(o, 3, -5) == 4  # dual to h^0(O(1))


def test_line_cohomology():
    L = line_module(R)
    for d in range(0, 4):
        assert sheaf_cohomology(L, 0, d) == d + 1
    assert sheaf_cohomology(L, 1, -3) == 2
    assert sheaf_cohomology(L, 1, -1) == 0
    assert sheaf_cohomology(L, 2, -5) == 0  # support is a curve


def test_cohomology_table_is_consistent():
    L = line_module(R, twist=-2)
    table = cohomology_table(L, -3, 3)
    assert table.euler_consistent()
    assert table.h(0, 2) == sheaf_cohomology(L, 0, 2)
    lines = table.text().splitlines()
    assert lines[0].split() == ["d", "-3", "-2", "-1", "0", "1", "2", "3"]
    assert lines[-1].startswith("  chi")
    assert any(row.split()[0] == "h^1" and row.split()[1] == "4"
               for row in lines)


def test_twisted_cotangent_sections():
    # Euler sequence counts: h^0(Omega^1(2)) = 16 - 10 = 6 on P^3
    om = omega_module(R, 1)
    assert sheaf_cohomology(om, 0, 2) == 6
    assert sheaf_cohomology(om, 0, 1) == 0
    assert sheaf_cohomology(om, 1, 0) == 1  # Hodge number h^{1,1}


def test_sheaf_ext_matches_deeper_truncations():
    L = line_module(R)
    o = structure_sheaf(R)
    result = sheaf_ext(L, o, 1)
    assert result.dim == sheaf_ext_dim(L, o, 1)
    last_t = result.history[-1][0]
    assert truncated_ext_dim(L, o, 1, last_t + 1) == result.dim
    assert len(result.history) >= 3


def test_sheaf_ext_settle_window_is_validated():
    L = line_module(R)
    try:
        sheaf_ext(L, L, 0, settle=1)
        assert False, "settle below 2 must be rejected"
    except ValueError:
        pass


def test_hom_of_line_with_itself():
    L = line_module(R)
    assert sheaf_ext_dim(L, L, 0) == 1
    assert sheaf_ext_dim(L, L.twist(1), 0) == 2


def test_serre_duality_rejects_large_supports():
    plane = ModulePresentation.cyclic(R, [R.parse("x")])
    L = line_module(R)
    try:
        serre_duality_check(plane, L, 1)
        assert False, "surface support must be rejected"
    except ValueError:
        pass


def test_dual_of_a_line_twist():
    # the dual of O_L is O_L(-2): Hilbert polynomial m+1 -> m-1
    L = line_module(R)
    dual = dual_sheaf(L)
    assert hilbert_polynomial(dual).text() == "m - 1"
    assert hilbert_polynomial(dual_sheaf(dual)).text() == "m + 1"


def test_saturation_strips_embedded_junk():
    # x*(x,y,z,w) presents the plane with one fake degree-1 generator
    gens = [R.parse(t) for t in ("x^2", "x*y", "x*z", "x*w")]
    thick = ModulePresentation.cyclic(R, gens)
    sat = saturate_presentation(thick)
    plane = ModulePresentation.cyclic(R, [R.parse("x")])
    qb_thick, qb_sat, qb_plane = (QuotientBasis(m) for m in (thick, sat, plane))
    assert qb_thick.dim(1) == 4
    assert qb_sat.dim(1) == qb_plane.dim(1) == 3
    assert hilbert_polynomial(sat).coeffs == hilbert_polynomial(thick).coeffs
    for d in range(2, 6):
        assert qb_sat.dim(d) == qb_thick.dim(d)
