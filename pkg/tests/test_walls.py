"""Wall enumeration for pair stability: exact alphas, filters, reports."""

from fractions import Fraction

from sheafcalc import (
    CurveChiTable,
    PairClass,
    Wall,
    crossing_report,
    section_admissible,
    walls,
)


def test_quartic_pairs_have_one_wall():
    found = walls(4, 1)
    assert len(found) == 1
    w = found[0]
    assert w.alpha == 3
    assert w.sub == PairClass(3, 0, True)
    assert w.quotient == PairClass(1, 1, False)
    assert w.text() == "alpha = 3: (1; d=3, chi=0) + (0; d=1, chi=1)"


def test_no_walls_in_low_degree():
    for d in (1, 2, 3):
        assert walls(d, 1) == []


def test_slope_balances_on_every_wall():
    for w in walls(4, 1, include_inadmissible=True):
        left = Fraction(w.sub.chi + w.alpha, w.sub.d)
        right = Fraction(w.quotient.chi, w.quotient.d)
        assert left == right
        assert w.sub.has_section and not w.quotient.has_section
        assert w.sub.d + w.quotient.d == 4
        assert w.sub.chi + w.quotient.chi == 1


def test_filter_removes_candidates():
    raw = walls(4, 1, include_inadmissible=True)
    kept = walls(4, 1)
    assert len(raw) > len(kept)
    rejected = [w for w in raw if not w.admissible]
    assert rejected and all("[filtered:" in w.text() for w in rejected)


def test_section_admissibility():
    assert section_admissible(PairClass(3, 0, True))
    assert not section_admissible(PairClass(1, -2, True))
    try:
        section_admissible(PairClass(1, 1, False))
        assert False, "filter must reject the sectionless piece"
    except ValueError:
        pass


def test_custom_chi_table_changes_the_answer():
    # forbid chi = 0 cubic supports and the quartic wall disappears
    table = CurveChiTable({1: {1}, 2: {1}, 3: {1}, 4: {1}})
    assert walls(4, 1, table=table) == []


def test_degenerate_inputs_are_rejected():
    try:
        PairClass(0, 1, True)
        assert False
    except ValueError:
        pass
    try:
        walls(0, 1)
        assert False
    except ValueError:
        pass
    try:
        walls(4, 1, chi_range=(3, -3))
        assert False
    except ValueError:
        pass


def test_crossing_report_shapes():
    rep = crossing_report(4, 1)
    assert rep.d == 4 and rep.chi == 1
    assert len(rep.records) == 1
    text = rep.text()
    assert text.splitlines()[0] == "walls for pairs of class 4m+1: 1"
    assert "above:" in text and "below:" in text
    empty = crossing_report(2, 1)
    assert empty.text() == "walls for pairs of class 2m+1: 0"
