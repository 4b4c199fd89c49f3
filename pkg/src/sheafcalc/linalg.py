"""Exact linear algebra over a field, dense and sparse.

Two regimes:

* dense Fraction/field matrices (lists of lists) for the small systems that
  appear in degreewise homology, cocycle solving and point evaluations;

* sparse integer fraction-free elimination for the large multiplication-map
  matrices coming out of truncated Hom complexes, where entries are small
  integers and the matrix has a few hundred to a couple thousand rows.  Rows
  are divided by their content after every update, which keeps the integers
  small in practice.
"""

from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# dense, over an arbitrary field object (fields.QQ-style interface)

def rref(rows, field):
    """Reduced row echelon form.  Returns (new_rows, pivot_cols)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_dense(rows, field):
    return len(rref(rows, field)[1])


def nullspace(rows, field, ncols=None):
    """Basis of the right kernel, one vector (list) per free column."""
    if not rows:
        return [] if not ncols else [
            [field.one if i == j else field.zero for i in range(ncols)]
            for j in range(ncols)
        ]
    ncols = len(rows[0])
    red, pivots = rref(rows, field)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def solve_dense(rows, rhs, field):
    """One solution x of A x = b, or None.  rhs may be a list (one b)."""
    if not rows:
        return None if any(rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    for r in range(len(red)):
        if all(not x for x in red[r][:ncols]) and red[r][ncols]:
            return None
    x = [field.zero] * ncols
    for r, pc in enumerate(pivots):
        if pc < ncols:
            x[pc] = red[r][ncols]
    return x


# ---------------------------------------------------------------------------
# sparse integer rank

def _row_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return 1
    return g or 1


def sparse_int_rank(rows):
    """Exact rank of a sparse integer matrix.

    rows: iterable of dicts {col: int}.  Entries must be ints (convert
    Fractions by clearing denominators per row first; scaling rows does not
    change rank).  Fraction-free elimination with content reduction and
    minimum-degree pivoting.
    """
    active = {}
    col_rows = {}
    for i, r in enumerate(rows):
        rr = {c: int(v) for c, v in r.items() if v}
        if not rr:
            continue
        g = _row_content(rr)
        if g > 1:
            rr = {c: v // g for c, v in rr.items()}
        active[i] = rr
        for c in rr:
            col_rows.setdefault(c, set()).add(i)

    rank = 0
    while active:
        # pivot column: fewest active rows; pivot row: shortest, smallest lead
        pc = min(col_rows, key=lambda c: (len(col_rows[c]), c))
        rows_here = col_rows[pc]
        pr = min(rows_here, key=lambda i: (len(active[i]), abs(active[i][pc]), i))
        prow = active.pop(pr)
        for c in prow:
            s = col_rows.get(c)
            if s is not None:
                s.discard(pr)
                if not s:
                    del col_rows[c]
        pval = prow[pc]
        rank += 1

        victims = list(col_rows.get(pc, ()))
        for vi in victims:
            vrow = active[vi]
            vval = vrow[pc]
            g = gcd(pval, vval)
            a = pval // g
            b = vval // g
            # new = a*vrow - b*prow  (kills column pc)
            for c in vrow:
                if c != pc:
                    vrow[c] = a * vrow[c]
            del vrow[pc]
            col_rows[pc].discard(vi)
            for c, pv in prow.items():
                if c == pc:
                    continue
                nv = vrow.get(c, 0) - b * pv
                if nv:
                    if c not in vrow:
                        col_rows.setdefault(c, set()).add(vi)
                    vrow[c] = nv
                elif c in vrow:
                    del vrow[c]
                    s = col_rows.get(c)
                    if s is not None:
                        s.discard(vi)
                        if not s:
                            del col_rows[c]
            if vrow:
                g = _row_content(vrow)
                if g > 1:
                    for c in vrow:
                        vrow[c] //= g
            else:
                del active[vi]
        if pc in col_rows and not col_rows[pc]:
            del col_rows[pc]
    return rank


def fractions_to_int_rows(rows):
    """Clear denominators row by row: dict-of-Fraction rows → int rows."""
    out = []
    for r in rows:
        lcm = 1
        for v in r.values():
            d = Fraction(v).denominator
            lcm = lcm // gcd(lcm, d) * d
        out.append({c: int(Fraction(v) * lcm) for c, v in r.items()})
    return out


def sparse_rank(rows, field=None):
    """Rank of sparse rows over QQ (dicts of int/Fraction).  For prime
    fields, falls back to dense elimination on the nonzero support."""
    rows = list(rows)
    if field is None or field.characteristic == 0:
        return sparse_int_rank(fractions_to_int_rows(rows))
    cols = sorted({c for r in rows for c in r})
    idx = {c: i for i, c in enumerate(cols)}
    dense = []
    for r in rows:
        row = [field.zero] * len(cols)
        for c, v in r.items():
            row[idx[c]] = field(v)
        dense.append(row)
    return rank_dense(dense, field)
