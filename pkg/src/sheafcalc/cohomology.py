"""Sheaf-level invariants on projective space.

A graded module M over S = k[x_0, ..., x_{n-1}] determines a coherent sheaf
on P^{n-1}; everything here turns questions about that sheaf into finite
linear algebra over the coefficient field.  Two routes are used.

Twisted cohomology comes from graded local duality.  For q >= 1,

    h^q(F(d)) = dim Ext^{n-1-q}_S(M, S(-n))_{-d},

and section counts correct dim M_d by the two local-cohomology error terms
of the comparison map M -> Gamma_*(F):

    h^0(F(d)) = dim M_d - dim Ext^n_S(M, S(-n))_{-d}
                        + dim Ext^{n-1}_S(M, S(-n))_{-d}.

No saturation of M is assumed: a presentation whose low-degree pieces are
missing or too fat gives the same answers as its saturation.

Global Ext between sheaves is Ext^i_S(M_{>=t}, N)_0 for t large.  Once t
reaches the regularity of M the truncation has a linear minimal free
resolution, so no Groebner bases are needed for it: the linear strand is
grown degree by degree as a chain of vector-space kernels of Koszul type,
and each Ext dimension is a rank count on the Hom complex in degree zero.
The truncation level is raised until the answer stops moving.

Also here: duals of one-dimensional sheaves, Serre-duality dimension checks,
saturation of a presentation, the twisted cotangent modules Omega^p, and the
Beilinson section table that sorts semistable sheaves with Hilbert
polynomial 4m + 1 into their three types.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .gradedmod import (
    GradedFreeModule,
    GradedMatrix,
    ModulePresentation,
    tensor_presentation,
)
from .groebner import saturate_at_irrelevant
from .homology import (
    HilbertPolynomial,
    QuotientBasis,
    _hom_matrix,
    ext_presentation_free,
    hilbert_polynomial,
    minimize_presentation,
    resolve,
)
from .linalg import nullspace, sparse_rank


class NonStabilizationError(RuntimeError):
    """Truncated Ext dimensions kept moving past the safety floor."""


class SheafCohomology:
    """Cohomology of all twists of the sheaf presented by one module.

    Holds the minimal free resolution of the module and degree-indexed rank
    caches, so a table over a window of twists reuses one resolution.
    """

    def __init__(self, pres):
        self.pres = pres
        self.ring = pres.ring
        self.n = self.ring.nvars
        self._qb = None
        self._res = None
        self._omega = None
        self._ranks = {}
        self._ext = {}

    @property
    def resolution(self):
        if self._res is None:
            self._res = resolve(self.pres)
        return self._res

    def _module_basis(self):
        if self._qb is None:
            self._qb = QuotientBasis(self.pres)
        return self._qb

    def _dualizing_basis(self):
        # S(-n), the graded dualizing twist, as a relation-free quotient.
        if self._omega is None:
            free = ModulePresentation.free(self.ring, [self.n])
            self._omega = QuotientBasis(free)
        return self._omega

    def _delta_rank(self, i, e):
        """Rank of Hom(F_i, S(-n))_e -> Hom(F_{i+1}, S(-n))_e."""
        if i < 0:
            return 0
        key = (i, e)
        val = self._ranks.get(key)
        if val is None:
            res = self.resolution
            if i + 1 > res.length:
                val = 0
            else:
                rows, _, _ = _hom_matrix(
                    res.differential(i + 1), self._dualizing_basis(), e
                )
                val = sparse_rank(rows, self.ring.field)
            self._ranks[key] = val
        return val

    def dual_ext_dim(self, j, e):
        """dim Ext^j_S(M, S(-n)) in internal degree e."""
        key = (j, e)
        val = self._ext.get(key)
        if val is None:
            res = self.resolution
            if j < 0 or j > res.length:
                val = 0
            else:
                omega = self._dualizing_basis()
                total = sum(omega.dim(e + a) for a in res.module(j).gen_degs)
                val = total - self._delta_rank(j, e) - self._delta_rank(j - 1, e)
            self._ext[key] = val
        return val

    def h(self, q, d):
        """dim H^q of the d-th twist of the associated sheaf."""
        if not 0 <= q <= self.n - 1:
            raise ValueError(
                "h^%d is undefined on projective %d-space" % (q, self.n - 1)
            )
        if q >= 1:
            return self.dual_ext_dim(self.n - 1 - q, -d)
        sections = self._module_basis().dim(d)
        return (
            sections
            - self.dual_ext_dim(self.n, -d)
            + self.dual_ext_dim(self.n - 1, -d)
        )


_COH_CACHE = {}


def _cohomology_of(pres):
    key = id(pres)
    hit = _COH_CACHE.get(key)
    if hit is not None and hit.pres is pres:
        return hit
    if len(_COH_CACHE) > 128:
        _COH_CACHE.clear()
    calc = SheafCohomology(pres)
    _COH_CACHE[key] = calc
    return calc


def sheaf_cohomology(pres, q, d):
    """h^q(F(d)) for the sheaf F presented by ``pres``.

    q must lie in 0..n-1 on P^{n-1}.  Repeated calls on the identical
    presentation object share one resolution.
    """
    return _cohomology_of(pres).h(q, d)


@dataclass(frozen=True)
class CohomologyTable:
    """h^q(F(d)) over a window of twists, with the Euler row."""

    lo: int
    hi: int
    rows: tuple  # rows[q][d - lo]
    hp: HilbertPolynomial

    def h(self, q, d):
        if not self.lo <= d <= self.hi:
            raise KeyError("twist %d outside window %d..%d" % (d, self.lo, self.hi))
        return self.rows[q][d - self.lo]

    def euler(self, d):
        return sum((-1) ** q * row[d - self.lo] for q, row in enumerate(self.rows))

    def euler_consistent(self):
        """True when every column's alternating sum equals the Hilbert polynomial."""
        return all(
            self.euler(d) == self.hp(d) for d in range(self.lo, self.hi + 1)
        )

    def text(self):
        twists = list(range(self.lo, self.hi + 1))
        cells = [str(v) for row in self.rows for v in row]
        width = max(len(str(d)) for d in twists + [0])
        width = max([width] + [len(c) for c in cells]) + 2
        lines = ["d".rjust(5) + "".join(str(d).rjust(width) for d in twists)]
        for q in reversed(range(len(self.rows))):
            lines.append(
                ("h^%d" % q).rjust(5)
                + "".join(str(self.rows[q][k]).rjust(width) for k in range(len(twists)))
            )
        lines.append(
            "chi".rjust(5) + "".join(str(self.euler(d)).rjust(width) for d in twists)
        )
        return "\n".join(lines)


def cohomology_table(pres, lo, hi):
    """Tabulate h^q(F(d)) for d in lo..hi and all q."""
    if lo > hi:
        raise ValueError("empty twist window %d..%d" % (lo, hi))
    calc = _cohomology_of(pres)
    rows = tuple(
        tuple(calc.h(q, d) for d in range(lo, hi + 1)) for q in range(calc.n)
    )
    return CohomologyTable(lo, hi, rows, hilbert_polynomial(pres))


def _int_normalized(vec):
    """Scale a dict vector to coprime integers (rank-safe normal form)."""
    items = {k: Fraction(v) for k, v in vec.items() if v}
    if not items:
        return {}
    lcm = 1
    for v in items.values():
        lcm = lcm // gcd(lcm, v.denominator) * v.denominator
    ints = {k: int(v * lcm) for k, v in items.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    return ints


class _StrandExt:
    """Ext^i_S(M_{>=t}, N)_0 for varying truncation level t.

    For t at or above the regularity of M the truncation is generated in
    degree t with a linear minimal resolution F_j = K_j (x) S(-t-j).  The
    K_j are built as nested kernels: K_0 = M_t, K_1 = ker(M_t (x) S_1 ->
    M_{t+1}), and K_{j+1} = ker(K_j (x) S_1 -> K_{j-1} (x) S_2), each vector
    stored by its coordinates in the previous stage.  Applying Hom(-, N) in
    internal degree zero gives finite matrices; the Ext dimension is

        dim K_i (x) N_{t+i}  -  rank(delta_i)  -  rank(delta_{i-1}).

    Kernel vectors are normalized to coprime integers so the rank work stays
    fraction-free.
    """

    def __init__(self, M, N):
        self.M = M
        self.N = N
        self.ring = M.ring
        self.field = self.ring.field
        self.nv = self.ring.nvars
        self.qbM = QuotientBasis(M)
        self.qbN = QuotientBasis(N)
        self.vars = self.ring.gens()
        self._reg = None
        self._mult_cache = {}
        self._chains = {}
        self._delta_ranks = {}
        pairs = []
        for u in range(self.nv):
            for v in range(u, self.nv):
                pairs.append((u, v))
        self._s2 = {uv: m for m, uv in enumerate(pairs)}

    @property
    def min_trunc(self):
        if self._reg is None:
            self._reg = resolve(self.M).regularity()
        return self._reg

    def _mult(self, side, v, d):
        key = (side, v, d)
        mat = self._mult_cache.get(key)
        if mat is None:
            qb = self.qbM if side == "M" else self.qbN
            mat = qb.mult_matrix(self.vars[v], d)
            self._mult_cache[key] = mat
        return mat

    def _strand(self, t, depth):
        """K_0 (a dimension) and K_1..K_depth (integer coordinate vectors)."""
        chain = self._chains.get(t)
        if chain is None:
            chain = [self.qbM.dim(t)]
            self._chains[t] = chain
        while len(chain) <= depth:
            j = len(chain)
            prev_size = chain[0] if j == 1 else len(chain[j - 1])
            if prev_size == 0:
                chain.append([])
                continue
            cols = prev_size * self.nv
            if j == 1:
                dim_above = self.qbM.dim(t + 1)
                rows = [[0] * cols for _ in range(dim_above)]
                for v in range(self.nv):
                    mv = self._mult("M", v, t)
                    for r in range(dim_above):
                        mrow = mv[r]
                        out = rows[r]
                        for b in range(prev_size):
                            if mrow[b]:
                                out[b * self.nv + v] = mrow[b]
            else:
                apex = chain[j - 2] if j == 2 else len(chain[j - 2])
                n_s2 = len(self._s2)
                rows = [[0] * cols for _ in range(apex * n_s2)]
                for a, kappa in enumerate(chain[j - 1]):
                    for (b, u), c in kappa.items():
                        for w in range(self.nv):
                            m = self._s2[(u, w) if u <= w else (w, u)]
                            rows[b * n_s2 + m][a * self.nv + w] += c
            kernel = nullspace(rows, self.field, cols)
            vecs = []
            for k in kernel:
                vec = {}
                for flat, val in enumerate(k):
                    if val:
                        vec[(flat // self.nv, flat % self.nv)] = val
                vecs.append(_int_normalized(vec))
            chain.append(vecs)
        return chain

    def _delta_rank(self, t, j, chain):
        """Rank of Hom(F_j, N)_0 -> Hom(F_{j+1}, N)_0 for the truncation at t."""
        if j < 0:
            return 0
        key = (t, j)
        val = self._delta_ranks.get(key)
        if val is not None:
            return val
        src_size = chain[0] if j == 0 else len(chain[j])
        nxt = chain[j + 1]
        n_here = self.qbN.dim(t + j)
        n_above = self.qbN.dim(t + j + 1)
        if src_size == 0 or not nxt or n_here == 0 or n_above == 0:
            self._delta_ranks[key] = 0
            return 0
        xmaps = [self._mult("N", v, t + j) for v in range(self.nv)]
        rows = []
        for kappa in nxt:
            block = [[0] * (src_size * n_here) for _ in range(n_above)]
            for (alpha, v), c in kappa.items():
                mv = xmaps[v]
                base = alpha * n_here
                for bp in range(n_above):
                    mrow = mv[bp]
                    out = block[bp]
                    for b in range(n_here):
                        x = mrow[b]
                        if x:
                            out[base + b] += c * x
            for bp in range(n_above):
                rows.append({ci: v for ci, v in enumerate(block[bp]) if v})
        val = sparse_rank(rows, self.field)
        self._delta_ranks[key] = val
        return val

    def ext_dim_at(self, i, t):
        chain = self._strand(t, i + 1)
        size = chain[0] if i == 0 else len(chain[i])
        total = size * self.qbN.dim(t + i)
        if total == 0:
            return 0
        return total - self._delta_rank(t, i, chain) - self._delta_rank(t, i - 1, chain)


_EXT_ENGINES = {}


def _engine(M, N):
    key = (id(M), id(N))
    hit = _EXT_ENGINES.get(key)
    if hit is not None and hit.M is M and hit.N is N:
        return hit
    if len(_EXT_ENGINES) > 64:
        _EXT_ENGINES.clear()
    eng = _StrandExt(M, N)
    _EXT_ENGINES[key] = eng
    return eng


def truncated_ext_dim(M, N, i, t):
    """dim Ext^i_S(M_{>=t}, N) in internal degree zero.

    Requires t at or above the regularity of M, where the truncation's
    minimal resolution is linear and the strand construction applies.
    """
    eng = _engine(M, N)
    if t < eng.min_trunc:
        raise ValueError(
            "truncation level %d is below the regularity %d of the module"
            % (t, eng.min_trunc)
        )
    return eng.ext_dim_at(i, t)


@dataclass(frozen=True)
class SheafExtResult:
    """A stabilized global Ext dimension.

    ``e`` records the truncation backing the reported value: the first
    module was replaced by its piece in degrees >= -e, and the two further
    truncation levels above that agreed.  ``history`` lists every
    (truncation level, dimension) pair in the order computed.
    """

    dim: int
    e: int
    history: tuple


def sheaf_ext(M, N, i, settle=3):
    """dim Ext^i of the associated sheaves on P^{n-1}, with its audit trail.

    Computed as Ext^i_S(M_{>=t}, N)_0 with t raised from regularity(M) + 1
    until `settle` consecutive levels agree; the level floor regularity(M) +
    regularity(N) + 8 turns a non-stabilizing run into an error rather than
    a wrong number.  Raising `settle` above the default 3 widens the audit
    window and must not change the answer.
    """
    n = M.ring.nvars
    if not 0 <= i <= n - 1:
        raise ValueError("Ext^%d is undefined on projective %d-space" % (i, n - 1))
    if settle < 2:
        raise ValueError("settle needs at least two agreeing levels")
    if minimize_presentation(M).ngens == 0 or minimize_presentation(N).ngens == 0:
        return SheafExtResult(0, 0, ())
    eng = _engine(M, N)
    reg_m = eng.min_trunc
    reg_n = resolve(N).regularity()
    start = reg_m + 1
    floor = max(start + settle - 1, reg_m + reg_n + 8 + (settle - 3))
    history = []
    for t in range(start, floor + 1):
        history.append((t, eng.ext_dim_at(i, t)))
        if len(history) >= settle:
            tail = [v for _, v in history[-settle:]]
            if len(set(tail)) == 1:
                return SheafExtResult(tail[-1], -(t - settle + 1), tuple(history))
    raise NonStabilizationError(
        "Ext^%d of the truncations did not stabilize by level %d: %s"
        % (i, floor, ", ".join("%d -> %d" % h for h in history))
    )


def sheaf_ext_dim(M, N, i, settle=3):
    """dim Ext^i of the associated sheaves (the stabilized value alone)."""
    return sheaf_ext(M, N, i, settle=settle).dim


def serre_duality_check(A, B, i):
    """True when dim Ext^i(A, B) = dim Ext^{n-1-i}(B, A(-n)) on P^{n-1}.

    Both modules must present sheaves supported in dimension at most one;
    larger supports make both sides expensive and are rejected.
    """
    n = A.ring.nvars
    for pres in (A, B):
        if hilbert_polynomial(pres).degree > 1:
            raise ValueError(
                "duality check restricted to supports of dimension <= 1"
            )
    left = sheaf_ext_dim(A, B, i)
    right = sheaf_ext_dim(B, A.twist(-n), (n - 1) - i)
    return left == right


def dual_sheaf(pres):
    """Presentation of the dual of a sheaf with one-dimensional support.

    The dual of F is Ext^{n-2}(F, omega) with omega = S(-n)~; on the level
    of modules that is the (n-2)-nd Ext into S(-n), delivered as a minimal
    presentation.  A sheaf with Hilbert polynomial dm + c has dual Hilbert
    polynomial dm - c.
    """
    hp = hilbert_polynomial(pres)
    if hp.degree != 1:
        raise ValueError(
            "dual sheaf requires 1-dimensional support; Hilbert polynomial is %s"
            % hp.text()
        )
    n = pres.ring.nvars
    return ext_presentation_free(pres, n - 2, n)


def saturate_presentation(pres):
    """Presentation of M / (0 :_M m^infinity), the same sheaf with the
    finite-length submodule stripped.

    Saturates the relation submodule at the irrelevant maximal ideal and
    minimizes the result.  Section spaces may still differ from sheaf
    sections in low degrees; the cohomology routines do not care.
    """
    free = pres.free_cover()
    gb = saturate_at_irrelevant(free, pres.relations())
    cols = list(gb.elements)
    if not cols:
        return minimize_presentation(ModulePresentation.free(pres.ring, list(free.gen_degs)))
    return minimize_presentation(
        ModulePresentation(GradedMatrix.from_columns(free, cols))
    )


def omega_module(ring, p):
    """The twisted cotangent module: Omega^p on P^{n-1} as a cokernel.

    The Koszul complex on x_0..x_{n-1} is exact away from its augmentation,
    so the p-th cotangent sheaf is presented by one Koszul differential:

        wedge^{p+2} k^n (x) S(-p-2)  ->  wedge^{p+1} k^n (x) S(-p-1).

    Basis elements of wedge^k are increasing index tuples; the differential
    drops one index with its alternating sign.
    """
    n = ring.nvars
    if not 1 <= p <= n - 2:
        raise ValueError("Omega^%d is not available on projective %d-space" % (p, n - 1))
    target_sets = list(combinations(range(n), p + 1))
    source_sets = list(combinations(range(n), p + 2))
    row_of = {s: r for r, s in enumerate(target_sets)}
    target = GradedFreeModule(ring, [p + 1] * len(target_sets))
    source = GradedFreeModule(ring, [p + 2] * len(source_sets))
    zero = ring.const(0)
    entries = [[zero] * len(source_sets) for _ in target_sets]
    for c, subset in enumerate(source_sets):
        for j, idx in enumerate(subset):
            rest = subset[:j] + subset[j + 1 :]
            mono = [0] * n
            mono[idx] = 1
            entries[row_of[rest]][c] = ring.monomial(mono, 1 if j % 2 == 0 else -1)
    return ModulePresentation(GradedMatrix(target, source, entries))


_BEILINSON_TYPES = {(0, 0, 1): "i", (0, 1, 1): "ii", (1, 3, 2): "iii"}


@dataclass(frozen=True)
class BeilinsonTable:
    """Section counts against the twisted cotangent sheaves, plus the
    classification they induce for semistable sheaves with Hilbert
    polynomial 4m + 1."""

    h0_omega2: int  # h^0(F (x) Omega^2(2))
    h0_omega1: int  # h^0(F (x) Omega^1(1))
    h0: int
    h0_minus1: int  # h^0(F(-1))
    h1: int
    type: str  # "i", "ii", "iii", or "unclassified"

    @property
    def signature(self):
        return (self.h0_omega2, self.h0_omega1, self.h0)

    def text(self):
        return (
            "h0(F x Omega^2(2)) = %d\n"
            "h0(F x Omega^1(1)) = %d\n"
            "h0(F)              = %d\n"
            "h0(F(-1))          = %d\n"
            "h1(F)              = %d\n"
            "type               = %s"
            % (
                self.h0_omega2,
                self.h0_omega1,
                self.h0,
                self.h0_minus1,
                self.h1,
                self.type,
            )
        )


def _twisted_sections(pres, cotangent):
    product = saturate_presentation(tensor_presentation(pres, cotangent))
    return sheaf_cohomology(product, 0, 0)


def beilinson_table(pres):
    """Classify a 4m + 1 sheaf on P^3 by its Beilinson section counts.

    The triple (h^0(F (x) Omega^2(2)), h^0(F (x) Omega^1(1)), h^0(F))
    takes the value (0,0,1), (0,1,1) or (1,3,2) on semistable sheaves,
    labelled types i, ii, iii; anything else comes back "unclassified"
    (expected for unstable or impure inputs).  Tensor products are
    saturated before counting sections.
    """
    ring = pres.ring
    if ring.nvars != 4:
        raise ValueError("the Beilinson table is specific to P^3 (four variables)")
    hp = hilbert_polynomial(pres)
    if hp != HilbertPolynomial((1, 4)):
        raise ValueError(
            "Beilinson classification expects Hilbert polynomial 4m + 1; got %s"
            % hp.text()
        )
    h0_omega2 = _twisted_sections(pres, omega_module(ring, 2).twist(2))
    h0_omega1 = _twisted_sections(pres, omega_module(ring, 1).twist(1))
    h0 = sheaf_cohomology(pres, 0, 0)
    h0_minus1 = sheaf_cohomology(pres, 0, -1)
    h1 = sheaf_cohomology(pres, 1, 0)
    signature = (h0_omega2, h0_omega1, h0)
    return BeilinsonTable(
        h0_omega2,
        h0_omega1,
        h0,
        h0_minus1,
        h1,
        _BEILINSON_TYPES.get(signature, "unclassified"),
    )
