"""Free resolutions and everything read off from them.

The resolver iterates syzygy computations and cancels unit entries as it
goes (Gaussian cancellation of a split exact summand), so with minimal=True
the output is the minimal graded free resolution and Hilbert's syzygy theorem
bounds its length by the number of variables.

Cancellation lemma used by _prune: if d_k has a unit U at (r, c) then the
complex splits off  S·e_c →U→ S·e_r,  and the quotient complex has

    d_k      ↦  Schur complement  D - w U^{-1} v
    d_{k+1}  ↦  drop row c
    d_{k-1}  ↦  drop column r

with all homology (in particular coker d_1 and exactness) unchanged.
"""

from fractions import Fraction
from math import comb, factorial

from .gradedmod import GradedFreeModule, GradedMatrix, ModulePresentation
from .groebner import (
    ModuleOrder,
    TaggedSpan,
    buchberger,
    syzygy_module,
    vec_degree,
)
from .linalg import sparse_rank


# ---------------------------------------------------------------------------
# minimization

def _find_unit(matrix):
    zero_mono = matrix.ring.zero_mono
    for i, row in enumerate(matrix.entries):
        for j, e in enumerate(row):
            if e.terms and zero_mono in e.terms and len(e.terms) == 1:
                return i, j
    return None


def _schur_cancel(matrix, r, c):
    """Cancel the unit at (r, c): Schur complement, then drop row r, col c."""
    ring = matrix.ring
    U = matrix.entries[r][c]
    rows = []
    for i, row in enumerate(matrix.entries):
        if i == r:
            continue
        new_row = []
        for j, e in enumerate(row):
            if j == c:
                continue
            corr = matrix.entries[i][c] * matrix.entries[r][j]
            if corr.terms:
                uinv = ring.field.inv(U.terms[ring.zero_mono])
                e = e - corr.scale(uinv)
            new_row.append(e)
        rows.append(new_row)
    t = GradedFreeModule(ring, [d for i, d in enumerate(matrix.target.gen_degs) if i != r])
    s = GradedFreeModule(ring, [d for j, d in enumerate(matrix.source.gen_degs) if j != c])
    return GradedMatrix(t, s, rows, check=False)


def _drop_row(matrix, r):
    t = GradedFreeModule(matrix.ring, [d for i, d in enumerate(matrix.target.gen_degs) if i != r])
    rows = [row for i, row in enumerate(matrix.entries) if i != r]
    return GradedMatrix(t, matrix.source, rows, check=False)


def _drop_col(matrix, c):
    s = GradedFreeModule(matrix.ring, [d for j, d in enumerate(matrix.source.gen_degs) if j != c])
    rows = [[e for j, e in enumerate(row) if j != c] for row in matrix.entries]
    return GradedMatrix(matrix.target, s, rows, check=False)


def minimize_presentation(pres):
    """Equivalent presentation with no unit entries (minimal generators
    and relations for the same module up to isomorphism)."""
    m = pres.matrix
    while True:
        hit = _find_unit(m)
        if hit is None:
            break
        m = _schur_cancel(m, *hit)
    # drop zero relation columns
    keep = [j for j in range(m.ncols) if any(m.entries[i][j] for i in range(m.nrows))]
    if len(keep) != m.ncols:
        m = m.submatrix(range(m.nrows), keep)
    return ModulePresentation(m)


# ---------------------------------------------------------------------------
# resolutions

class FreeResolution:
    """Chain  0 ← F_0 ← F_1 ← ... with differentials d_k = diffs[k-1]."""

    def __init__(self, diffs):
        self.diffs = list(diffs)
        if not self.diffs:
            raise ValueError("need at least the presentation differential")
        self.ring = self.diffs[0].ring

    @property
    def length(self):
        """Largest k with F_k ≠ 0."""
        n = len(self.diffs)
        while n > 0 and self.diffs[n - 1].ncols == 0:
            n -= 1
        return n

    def module(self, k):
        if k == 0:
            return self.diffs[0].target
        if k <= len(self.diffs):
            return self.diffs[k - 1].source
        return GradedFreeModule(self.ring, [])

    def differential(self, k):
        """d_k: F_k → F_{k-1} (zero matrix beyond the computed length)."""
        if 1 <= k <= len(self.diffs):
            return self.diffs[k - 1]
        return GradedMatrix.zero(self.module(k - 1), self.module(k))

    def betti(self):
        """{i: {j: β_ij}} counting generators of F_i in degree j."""
        table = {}
        for i in range(self.length + 1):
            row = {}
            for d in self.module(i).gen_degs:
                row[d] = row.get(d, 0) + 1
            if row:
                table[i] = dict(sorted(row.items()))
        return table

    def regularity(self):
        return max(j - i for i, row in self.betti().items() for j in row)

    def verify(self):
        """d_k ∘ d_{k+1} = 0 for all k; raises on failure."""
        for k in range(len(self.diffs) - 1):
            comp = self.diffs[k].compose(self.diffs[k + 1])
            if not comp.is_zero():
                raise AssertionError("complex property fails at step %d" % (k + 1))
        return True

    def betti_text(self):
        """Rows indexed by j - i, columns by homological degree."""
        table = self.betti()
        cols = sorted(table)
        strata = sorted({j - i for i in table for j in table[i]})
        lines = ["      " + "".join("%6d" % i for i in cols)]
        total = {i: sum(table[i].values()) for i in cols}
        lines.append("total:" + "".join("%6d" % total[i] for i in cols))
        for s in strata:
            cells = []
            for i in cols:
                b = table[i].get(s + i, 0)
                cells.append("%6s" % (b if b else "."))
            lines.append("%5d:" % s + "".join(cells))
        return "\n".join(lines)


def resolve(pres, minimal=True, max_steps=None):
    """Free resolution of coker(pres); minimal=True gives the minimal one."""
    if minimal:
        pres = minimize_presentation(pres)
    diffs = [pres.matrix]
    cap = max_steps if max_steps is not None else pres.ring.nvars + 2
    while len(diffs) <= cap:
        last = diffs[-1]
        if last.ncols == 0:
            break
        syz = _matrix_kernel(last)
        if not syz:
            break
        d = GradedMatrix.from_columns(last.source, syz)
        if minimal:
            while True:
                hit = _find_unit(d)
                if hit is None:
                    break
                r, c = hit
                d = _schur_cancel(d, r, c)
                diffs[-1] = _drop_col(diffs[-1], r)
        diffs.append(d)
    else:
        raise RuntimeError("resolution did not terminate within %d steps" % cap)
    return FreeResolution(diffs)


# ---------------------------------------------------------------------------
# degreewise data of a presented module

class QuotientBasis:
    """Degreewise k-bases of M = coker(pres) via standard monomials, plus
    multiplication maps — the bridge from module algebra to linear algebra."""

    def __init__(self, pres):
        self.pres = pres
        self.ring = pres.ring
        free = pres.free_cover()
        self.free = free
        self.gb = buchberger(pres.relations(), free, ModuleOrder(self.ring.order, "POT"))
        self._bases = {}

    def basis(self, d):
        if d not in self._bases:
            self._bases[d] = self.gb.std_monomials(d)
        return self._bases[d]

    def dim(self, d):
        return len(self.basis(d))

    def nf_coords(self, vec, d):
        """Coordinates of the class of vec in the degree-d standard basis."""
        nf = self.gb.nf(vec)
        basis = self.basis(d)
        pos = {t: i for i, t in enumerate(basis)}
        out = [self.ring.field.zero] * len(basis)
        for t, c in nf.items():
            out[pos[t]] = c
        return out

    def mult_matrix(self, f, d):
        """Matrix of  ·f : M_d → M_{d+deg f}  (columns = source basis)."""
        if f.is_zero():
            raise ValueError("multiplication by zero has no well-defined target degree")
        e = f.degree
        src = self.basis(d)
        tgt_dim = self.dim(d + e)
        cols = []
        for (c, m) in src:
            vec = {(c, mm): cc for mm, cc in f.mul_monomial(m).terms.items()}
            cols.append(self.nf_coords(vec, d + e))
        # transpose to rows
        return [[cols[j][i] for j in range(len(src))] for i in range(tgt_dim)]

    def hilbert_values(self, lo, hi):
        return [self.dim(d) for d in range(lo, hi + 1)]


def truncate_at(pres, t):
    """Presentation of M_{≥t} with generators the degree-t standard basis.
    Requires M to be generated in degrees ≤ t."""
    if any(g > t for g in pres.gen_degs):
        raise ValueError("module has generators above degree %d" % t)
    qb = QuotientBasis(pres)
    basis = qb.basis(t)
    ring = pres.ring
    one = ring.field.one
    cols = [{(c, m): one} for (c, m) in basis]
    from .groebner import kernel_into_quotient
    ker = kernel_into_quotient(cols, None, pres)
    f0 = GradedFreeModule(ring, [t] * len(basis))
    return ModulePresentation(GradedMatrix.from_columns(f0, ker))


# ---------------------------------------------------------------------------
# Hilbert polynomial

class HilbertPolynomial:
    """Polynomial in one variable m with rational coefficients."""

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def binomial_shifted(cls, shift, k):
        """C(m + shift, k) as a polynomial in m."""
        if k == 0:
            return cls([1])
        poly = [Fraction(1)]
        for s in range(k):
            # multiply by (m + shift - s)
            root = Fraction(shift - s)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] += c * root
            poly = nxt
        f = factorial(k)
        return cls([c / f for c in poly])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return HilbertPolynomial([x + y for x, y in zip(a, b)])

    def scale(self, c):
        return HilbertPolynomial([Fraction(c) * x for x in self.coeffs])

    def __sub__(self, other):
        return self + other.scale(-1)

    def __call__(self, m):
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * m + c
        return total

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __eq__(self, other):
        return isinstance(other, HilbertPolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return self.text()

    def text(self, var="m"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                body = str(c)
            else:
                mk = var if k == 1 else "%s^%d" % (var, k)
                if c == 1:
                    body = mk
                elif c == -1:
                    body = "-" + mk
                else:
                    body = "%s*%s" % (c, mk)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def hilbert_polynomial(pres_or_res):
    """From the minimal Betti numbers:  P(m) = Σ (-1)^i β_ij C(m-j+n-1, n-1)."""
    res = pres_or_res if isinstance(pres_or_res, FreeResolution) else resolve(pres_or_res)
    n = res.ring.nvars
    out = HilbertPolynomial.zero()
    for i, row in res.betti().items():
        for j, b in row.items():
            term = HilbertPolynomial.binomial_shifted(n - 1 - j, n - 1).scale(b)
            out = out + (term if i % 2 == 0 else term.scale(-1))
    return out


# ---------------------------------------------------------------------------
# Ext and Tor, degree by degree

def _hom_basis(free_mod, qb, d):
    """Basis of Hom(F, N)_d = ⊕_k N(a_k)_d, as (k, index into N-basis)."""
    out = []
    for k, a in enumerate(free_mod.gen_degs):
        out.extend((k, t) for t in range(qb.dim(d + a)))
    return out


def _hom_matrix(diff, qb, d):
    """Matrix of  Hom(F_i, N)_d → Hom(F_{i+1}, N)_d,  φ ↦ φ∘diff,  where
    diff = d_{i+1}: F_{i+1} → F_i.  Sparse rows {col: coeff}."""
    src_free, tgt_free = diff.target, diff.source  # Hom is contravariant
    src_offsets, n = [], 0
    for a in src_free.gen_degs:
        src_offsets.append(n)
        n += qb.dim(d + a)
    tgt_offsets, mrows = [], 0
    for a in tgt_free.gen_degs:
        tgt_offsets.append(mrows)
        mrows += qb.dim(d + a)
    rows = [dict() for _ in range(mrows)]
    for l, a_l in enumerate(tgt_free.gen_degs):
        for k, a_k in enumerate(src_free.gen_degs):
            entry = diff.entries[k][l]
            if entry.is_zero():
                continue
            block = qb.mult_matrix(entry, d + a_k)
            for i, brow in enumerate(block):
                for j, v in enumerate(brow):
                    if v:
                        rows[tgt_offsets[l] + i][src_offsets[k] + j] = v
    return rows, mrows, n


def ext_dims(M, N, i, window):
    """dim_k Ext^i_S(M, N)_d for d in window (an iterable of ints).

    M, N: ModulePresentations.  Uses the minimal free resolution of M and
    Hom(F_•, N) with degreewise exact linear algebra.
    """
    res = resolve(M)
    qb = QuotientBasis(N)
    field = M.ring.field
    out = {}
    for d in window:
        hom_i = sum(qb.dim(d + a) for a in res.module(i).gen_degs)
        rows_i, _, _ = _hom_matrix(res.differential(i + 1), qb, d)
        rank_i = sparse_rank(rows_i, field)
        rank_prev = 0
        if i > 0:
            rows_prev, _, _ = _hom_matrix(res.differential(i), qb, d)
            rank_prev = sparse_rank(rows_prev, field)
        out[d] = hom_i - rank_i - rank_prev
    return out


def _tensor_matrix(diff, qb, d):
    """Matrix of  (F_i ⊗ N)_d → (F_{i-1} ⊗ N)_d  for diff = d_i."""
    src_free, tgt_free = diff.source, diff.target
    src_offsets, n = [], 0
    for a in src_free.gen_degs:
        src_offsets.append(n)
        n += qb.dim(d - a)
    tgt_offsets, mrows = [], 0
    for a in tgt_free.gen_degs:
        tgt_offsets.append(mrows)
        mrows += qb.dim(d - a)
    rows = [dict() for _ in range(mrows)]
    for l, a_l in enumerate(tgt_free.gen_degs):
        for k, a_k in enumerate(src_free.gen_degs):
            entry = diff.entries[l][k]
            if entry.is_zero():
                continue
            block = qb.mult_matrix(entry, d - a_k)
            for i, brow in enumerate(block):
                for j, v in enumerate(brow):
                    if v:
                        rows[tgt_offsets[l] + i][src_offsets[k] + j] = v
    return rows, mrows, n


def tor_dims(M, N, i, window):
    """dim_k Tor_i^S(M, N)_d for d in window."""
    res = resolve(M)
    qb = QuotientBasis(N)
    field = M.ring.field
    out = {}
    for d in window:
        dim_i = sum(qb.dim(d - a) for a in res.module(i).gen_degs)
        rows_in, _, _ = _tensor_matrix(res.differential(i), qb, d) if i > 0 else ([], 0, 0)
        rank_in = sparse_rank(rows_in, field) if i > 0 else 0
        rows_out, _, _ = _tensor_matrix(res.differential(i + 1), qb, d)
        rank_out = sparse_rank(rows_out, field)
        out[d] = dim_i - rank_in - rank_out
    return out


# ---------------------------------------------------------------------------
# Ext into a free module, as a presented module

def ext_presentation_free(M, i, dual_gen_deg):
    """Ext^i_S(M, S(-g))  (g = dual_gen_deg) as a ModulePresentation.

    Dualize the minimal resolution of M into S(-g) and take the middle
    homology ker(d_{i+1}ᵗ)/im(d_iᵗ) of

        Hom(F_{i-1}) --d_iᵗ--> Hom(F_i) --d_{i+1}ᵗ--> Hom(F_{i+1}).

    Generators: a Gröbner-basis generating set of the kernel.  Relations:
    lifts of the image columns plus the syzygies among the kernel generators.
    """
    res = resolve(M)
    dT_next = res.differential(i + 1).transpose_dual(dual_gen_deg)
    dT_prev = res.differential(i).transpose_dual(dual_gen_deg)
    hom_i = res.module(i).dual_into(dual_gen_deg)

    if dT_next.ncols:
        kgens = _matrix_kernel(dT_next)
    else:
        kgens = [
            {(c, M.ring.zero_mono): M.ring.field.one} for c in range(hom_i.rank)
        ]
    if not kgens:
        return ModulePresentation.free(M.ring, [])
    span = TaggedSpan(hom_i, kgens)
    rel_vecs = []
    for col in dT_prev.columns():
        if not col:
            continue
        coords = span.lift(col)
        if coords is None:
            raise AssertionError("image column escapes the kernel; complex is broken")
        vec = {}
        for idx, p in enumerate(coords):
            for m, c in p.terms.items():
                vec[(idx, m)] = c
        if vec:
            rel_vecs.append(vec)
    rel_vecs.extend(s for s in span.syzygy_vectors() if s)
    tag_degs = [vec_degree(g, hom_i.gen_degs) for g in kgens]
    f0 = GradedFreeModule(M.ring, tag_degs)
    pres = ModulePresentation(GradedMatrix.from_columns(f0, rel_vecs))
    return minimize_presentation(pres)


def _matrix_kernel(matrix):
    """Generators of ker(matrix: source → target) as vectors in source.
    An element Σ a_j e_j is in the kernel iff (a_j) is a syzygy of the
    columns, so the tagged span of the columns answers this directly."""
    ts = TaggedSpan(matrix.target, matrix.columns(), tag_degs=matrix.source.gen_degs)
    return [s for s in ts.syzygy_vectors() if s]


def homology_presentation(d_in, d_out):
    """ker(d_out)/im(d_in) as a ModulePresentation, for a complex stretch

        A --d_in--> B --d_out--> C        (d_out ∘ d_in = 0).

    Same recipe as ext_presentation_free: kernel generators by syzygy,
    relations from lifted image columns plus kernel syzygies, minimized.
    """
    mid = d_out.source
    if d_in.target.gen_degs != mid.gen_degs:
        raise ValueError("maps do not share the middle module")
    ring = mid.ring
    if mid.rank == 0:
        return ModulePresentation.free(ring, [])
    if d_out.target.rank == 0 or d_out.is_zero():
        kgens = [{(c, ring.zero_mono): ring.field.one} for c in range(mid.rank)]
    else:
        kgens = _matrix_kernel(d_out)
    if not kgens:
        return ModulePresentation.free(ring, [])
    span = TaggedSpan(mid, kgens)
    rel_vecs = []
    for col in d_in.columns():
        if not col:
            continue
        coords = span.lift(col)
        if coords is None:
            raise AssertionError("image column escapes the kernel; complex is broken")
        vec = {}
        for idx, p in enumerate(coords):
            for m, c in p.terms.items():
                vec[(idx, m)] = c
        if vec:
            rel_vecs.append(vec)
    rel_vecs.extend(s for s in span.syzygy_vectors() if s)
    tag_degs = [vec_degree(g, mid.gen_degs) for g in kgens]
    f0 = GradedFreeModule(ring, tag_degs)
    pres = ModulePresentation(GradedMatrix.from_columns(f0, rel_vecs))
    return minimize_presentation(pres)
