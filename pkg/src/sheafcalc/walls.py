"""Numeric wall enumeration for pair stability.

A pair (s, F) — a one-dimensional sheaf F on P^3 with Hilbert polynomial
dm + chi, together with a marked section or not — has alpha-slope
(chi(F) + delta * alpha) / d, where delta is 1 when the pair carries the
section.  A wall is a positive rational alpha where some proper sub-pair
reaches equality of slopes; crossing it flips which extension order is
stable.

Everything here is exact rational arithmetic over a finite search window:
enumerate the (degree, chi) splits, solve the slope equality for alpha,
keep the positive solutions, and filter by a necessary existence condition
on the piece carrying the section (its section must factor through the
structure sheaf of some curve without destabilizing, judged against a small
table of achievable chi(O_C) per degree).  The filter is a necessary
condition only; it already cuts the candidate list to the true wall sets in
low degree, and the raw list stays available behind a flag.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PairClass:
    """Numerical class of a pair piece: degree, Euler characteristic, and
    whether this piece carries the section."""

    d: int
    chi: int
    has_section: bool

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("pair degree must be >= 1, got %d" % self.d)

    def text(self):
        return "(%s; d=%d, chi=%d)" % (
            "1" if self.has_section else "0",
            self.d,
            self.chi,
        )


class CurveChiTable:
    """Achievable chi(O_C) for connected CM curves in P^3, by degree.

    The defaults cover degrees up to four: lines and conics have chi = 1,
    cubics reach {0, 1} (planar / twisted), quartics {-2, 0, 1} (planar of
    genus 3, genus 1, rational) — there is no CM curve of genus 2 in degree
    four.  The table is a plain mapping and can be extended for larger
    searches.
    """

    DEFAULT = {1: {1}, 2: {1}, 3: {0, 1}, 4: {-2, 0, 1}}

    def __init__(self, entries=None):
        src = self.DEFAULT if entries is None else entries
        self._entries = {}
        for e, chis in src.items():
            if e < 1:
                raise ValueError("curve degree must be >= 1, got %d" % e)
            self._entries[int(e)] = frozenset(int(c) for c in chis)

    def __getitem__(self, e):
        try:
            return self._entries[e]
        except KeyError:
            raise KeyError(
                "no chi(O_C) entries for curves of degree %d; extend the table" % e
            ) from None

    def __contains__(self, e):
        return e in self._entries

    def with_entry(self, e, chis):
        """A new table with one degree's chi set replaced/added."""
        entries = {k: set(v) for k, v in self._entries.items()}
        entries[e] = set(chis)
        return CurveChiTable(entries)

    def degrees(self):
        return sorted(self._entries)


def _section_witness(piece, table):
    """(admissible?, reason) for the piece carrying the section."""
    for e in range(1, piece.d + 1):
        for chi2 in sorted(table[e]):
            # the section factors through some O_C with (e, chi2); it must
            # not destabilize: chi2/e <= chi'/d', cleared of denominators
            if chi2 * piece.d <= piece.chi * e:
                return True, "section can factor through a degree-%d curve with chi=%d" % (
                    e,
                    chi2,
                )
    return False, "no curve class in the table fits under slope %d/%d" % (
        piece.chi,
        piece.d,
    )


def section_admissible(piece, table=None):
    """Whether a section-carrying piece passes the structure-sheaf filter.

    True when some degree e <= piece.d and chi'' from the table satisfy
    chi'' * piece.d <= piece.chi * e, i.e. the section can map onto a curve
    of that class without destabilizing the piece.
    """
    if not piece.has_section:
        raise ValueError("admissibility filter applies to the piece with the section")
    return _section_witness(piece, table if table is not None else CurveChiTable())[0]


@dataclass(frozen=True)
class Wall:
    """One wall: the exact alpha and the two-piece decomposition.

    ``sub`` is the piece carrying the section — the destabilizing subobject
    for alpha just above the wall; ``quotient`` is the complementary piece.
    """

    alpha: Fraction
    sub: PairClass
    quotient: PairClass
    admissible: bool
    reason: str

    def text(self):
        return "alpha = %s: %s + %s%s" % (
            self.alpha,
            self.sub.text(),
            self.quotient.text(),
            "" if self.admissible else "  [filtered: %s]" % self.reason,
        )


def _slope(piece, alpha):
    return Fraction(piece.chi + (alpha if piece.has_section else 0), piece.d)


def walls(d, chi, chi_range=None, table=None, include_inadmissible=False):
    """All stability walls for pairs of class dm + chi, canonically sorted.

    Enumerates sub-pieces (d1, chi1) with 1 <= d1 < d and chi1 in the
    closed interval ``chi_range`` (default [chi - 2d, chi + 2d]), places the
    section on either side, and solves the slope equality for alpha.  Only
    exact positive rational solutions are kept; each solution is
    re-substituted into both slopes as a guard.  Mirror descriptions (the
    same wall seen from the sub or the quotient side) collapse into one
    record whose ``sub`` is the section-carrying piece.  By default only
    walls passing the section filter are returned; ``include_inadmissible``
    exposes the full candidate list with filter reasons.
    """
    if d < 1:
        raise ValueError("pair degree must be >= 1, got %d" % d)
    if chi_range is None:
        chi_range = (chi - 2 * d, chi + 2 * d)
    lo, hi = int(chi_range[0]), int(chi_range[1])
    if lo > hi:
        raise ValueError("empty chi range %d..%d" % (lo, hi))
    table = table if table is not None else CurveChiTable()
    found = {}
    for d1 in range(1, d):
        for chi1 in range(lo, hi + 1):
            for sub_has_section in (True, False):
                if sub_has_section:
                    # (chi1 + alpha)/d1 = (chi + alpha)/d
                    alpha = Fraction(d1 * chi - d * chi1, d - d1)
                else:
                    # chi1/d1 = (chi + alpha)/d
                    alpha = Fraction(d * chi1 - d1 * chi, d1)
                if alpha <= 0:
                    continue
                piece = PairClass(d1, chi1, sub_has_section)
                other = PairClass(d - d1, chi - chi1, not sub_has_section)
                if _slope(piece, alpha) != _slope(other, alpha):
                    raise AssertionError(
                        "slope equality failed at alpha=%s for %s / %s"
                        % (alpha, piece.text(), other.text())
                    )
                sec, nosec = (piece, other) if sub_has_section else (other, piece)
                key = (alpha, sec.d, sec.chi)
                if key in found:
                    continue
                ok, why = _section_witness(sec, table)
                found[key] = Wall(alpha, sec, nosec, ok, why)
    out = [w for w in found.values() if w.admissible or include_inadmissible]
    out.sort(key=lambda w: (w.alpha, w.sub.d, w.sub.chi))
    return out


@dataclass(frozen=True)
class CrossingRecord:
    """One wall with its two extension orders (above and below)."""

    wall: Wall
    above: str
    below: str

    def text(self):
        return "%s\n    above: %s\n    below: %s" % (self.wall.text(), self.above, self.below)


@dataclass(frozen=True)
class CrossingReport:
    d: int
    chi: int
    records: tuple

    def text(self):
        head = "walls for pairs of class %dm%+d: %d" % (self.d, self.chi, len(self.records))
        if not self.records:
            return head
        return head + "\n" + "\n".join(r.text() for r in self.records)


def crossing_report(d, chi, chi_range=None, table=None):
    """The admissible walls with both extension orders spelled out.

    Above the wall the section-carrying piece destabilizes as a sub-pair,
    so stable pairs there are extensions with it as quotient; below the
    wall the orders flip.  Both orders are emitted as symbolic records; the
    chi bookkeeping of each order sums back to (d, chi).
    """
    records = []
    for wall in walls(d, chi, chi_range=chi_range, table=table):
        sec, nosec = wall.sub, wall.quotient
        above = "0 -> %s -> (1; d=%d, chi=%d) -> %s -> 0" % (
            nosec.text(),
            d,
            chi,
            sec.text(),
        )
        below = "0 -> %s -> (1; d=%d, chi=%d) -> %s -> 0" % (
            sec.text(),
            d,
            chi,
            nosec.text(),
        )
        records.append(CrossingRecord(wall, above, below))
    return CrossingReport(d, chi, tuple(records))
