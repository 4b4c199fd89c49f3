"""Gröbner bases for graded submodules, and everything built directly on them.

A module element ("vector") is a sparse dict {(component, exponent): coeff}
living in a GradedFreeModule.  The engine is Buchberger's algorithm with the
Gebauer–Möller pair update; the product criterion is applied only in rank one,
where it is actually valid (for honest module components the S-vector of a
"coprime" pair need not reduce to zero).

Kernels, syzygies, colons, saturations, annihilators and intersections are all
the same computation: a tagged block Gröbner basis.  Generators v_1..v_r of a
submodule of F are augmented to (v_i, e_i) in F ⊕ T with a position-over-term
order that makes the F-block dominate.  Basis elements whose F-part survives
give a Gröbner basis of the span together with explicit representations; the
ones whose F-part vanished give a Gröbner basis of the syzygy module.
"""

from .poly import (
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from .gradedmod import GradedFreeModule, GradedMatrix


# ---------------------------------------------------------------------------
# module term orders

class ModuleOrder:
    """POT (position dominates) or TOP (monomial dominates) over a base
    monomial order.  Lower component index = bigger, in both schemes."""

    def __init__(self, mono_order, scheme="POT"):
        if scheme not in ("POT", "TOP"):
            raise ValueError("scheme must be POT or TOP")
        self.mono_order = mono_order
        self.scheme = scheme
        mk = mono_order.key
        if scheme == "POT":
            self.key = lambda t: (-t[0], mk(t[1]))
        else:
            self.key = lambda t: (mk(t[1]), -t[0])
        self.name = "%s(%s)" % (scheme, mono_order.name)

    def __repr__(self):
        return self.name


# ---------------------------------------------------------------------------
# vector helpers

def vec_is_zero(v):
    return not v


def vec_add_scaled(field, v, w, c):
    """v + c*w, fresh dict."""
    out = dict(v)
    for t, a in w.items():
        s = field.add(out.get(t, field.zero), field.mul(a, c))
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def vec_mul_mono(v, mono, coeff, field):
    return {(c, mono_mul(m, mono)): field.mul(a, coeff) for (c, m), a in v.items()}

def vec_scale(v, coeff, field):
    return {t: field.mul(a, coeff) for t, a in v.items()}


def vec_degree(v, gen_degs):
    """Degree of a homogeneous vector (None when zero; raises when mixed)."""
    degs = {sum(m) + gen_degs[c] for (c, m) in v}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError("vector is not homogeneous (degrees %s)" % sorted(degs))
    return degs.pop()


def term_divides(t, s):
    return t[0] == s[0] and mono_divides(t[1], s[1])


def vec_entry_polys(v, rank, ring):
    """Back to a column of polynomials."""
    per = [{} for _ in range(rank)]
    for (c, m), a in v.items():
        per[c][m] = a
    return [Polynomial(ring, d) for d in per]


# ---------------------------------------------------------------------------
# division

def divide(v, basis, key, field, with_quotients=False):
    """Full normal form of v against basis = [(lead_term, lead_coeff, vec)].

    Every term of the remainder is outside the initial module of the basis.
    With quotients: returns (rem, quots) with v = Σ quots[i]·basis[i] + rem,
    quotient i a monomial dict.
    """
    work = dict(v)
    rem = {}
    quots = [dict() for _ in basis] if with_quotients else None
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        hit = -1
        for idx, (lt, lc, g) in enumerate(basis):
            if lt[0] == t[0] and mono_divides(lt[1], t[1]):
                hit = idx
                break
        if hit < 0:
            rem[t] = c
            continue
        lt, lc, g = basis[hit]
        qm = mono_div(t[1], lt[1])
        qc = field.div(c, lc)
        if with_quotients:
            s = field.add(quots[hit].get(qm, field.zero), qc)
            if s:
                quots[hit][qm] = s
            else:
                quots[hit].pop(qm, None)
        for (gc, gm), a in g.items():
            if (gc, gm) == lt:
                continue
            tt = (gc, mono_mul(gm, qm))
            s = field.sub(work.get(tt, field.zero), field.mul(a, qc))
            if s:
                work[tt] = s
            else:
                work.pop(tt, None)
    return (rem, quots) if with_quotients else rem


# ---------------------------------------------------------------------------
# Buchberger with the Gebauer–Möller update

def _gm_update(live, pairs, h, leads, rank_one):
    """Insert index h into the live set, pruning pairs (Gebauer–Möller)."""
    mh = leads[h]

    def lcm_with(i):
        return mono_lcm(mh[1], leads[i][1])

    cand = [i for i in sorted(live) if leads[i][0] == mh[0]]
    kept = []
    while cand:
        g = cand.pop()
        lcm_hg = lcm_with(g)
        coprime = rank_one and mono_mul(mh[1], leads[g][1]) == lcm_hg

        def strictly_better(i):
            return mono_divides(lcm_with(i), lcm_hg)

        if coprime or not (
            any(strictly_better(i) for i in cand)
            or any(strictly_better(i) for i in kept)
        ):
            if not coprime:
                kept.append(g)
    new_pairs = set()
    for g1, g2 in pairs:
        m1, m2 = leads[g1], leads[g2]
        lcm12 = mono_lcm(m1[1], m2[1])
        if (
            not (mh[0] == m1[0] and mono_divides(mh[1], lcm12))
            or mono_lcm(m1[1], mh[1]) == lcm12
            or mono_lcm(mh[1], m2[1]) == lcm12
        ):
            new_pairs.add((g1, g2))
    for g in kept:
        new_pairs.add((min(g, h), max(g, h)))
    new_live = {g for g in live if not term_divides(mh, leads[g])}
    new_live.add(h)
    return new_live, new_pairs


def buchberger(vectors, free, order):
    """Reduced Gröbner basis of the span of homogeneous vectors.

    Returns the unique reduced basis: monic elements, pairwise non-divisible
    leads, tails fully reduced; sorted by ascending lead term.
    """
    field = free.ring.field
    key = order.key
    store = []      # all elements ever kept (immutable)
    leads = []      # lead term of store[i]
    lcs = []        # lead coeff (always one, kept for clarity)
    live = set()
    pairs = set()

    def current_basis():
        return [(leads[i], lcs[i], store[i]) for i in sorted(live)]

    def add(v):
        nonlocal live, pairs
        lt = max(v, key=key)
        lc = v[lt]
        if lc != field.one:
            v = vec_scale(v, field.inv(lc), field)
        idx = len(store)
        store.append(v)
        leads.append(lt)
        lcs.append(field.one)
        live, pairs = _gm_update(live, pairs, idx, leads, free.rank == 1)

    seed = [v for v in vectors if v]
    seed.sort(key=lambda v: (vec_degree(v, free.gen_degs), key(max(v, key=key))))
    for v in seed:
        r = divide(v, current_basis(), key, field)
        if r:
            add(r)

    def pair_degree(p):
        i, j = p
        comp = leads[i][0]
        lcm = mono_lcm(leads[i][1], leads[j][1])
        return sum(lcm) + free.gen_degs[comp]

    while pairs:
        p = min(pairs, key=lambda q: (pair_degree(q), q))
        pairs.discard(p)
        i, j = p
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li[1], lj[1])
        s = vec_add_scaled(
            field,
            vec_mul_mono(store[i], mono_div(lcm, li[1]), field.one, field),
            vec_mul_mono(store[j], mono_div(lcm, lj[1]), field.one, field),
            field.neg(field.one),
        )
        r = divide(s, current_basis(), key, field)
        if r:
            add(r)

    # inter-reduce the minimal basis into the reduced one
    final = [store[i] for i in sorted(live, key=lambda i: key(leads[i]))]
    changed = True
    while changed:
        changed = False
        for i in range(len(final)):
            others = [
                (max(g, key=key), g[max(g, key=key)], g)
                for j, g in enumerate(final)
                if j != i
            ]
            r = divide(final[i], others, key, field)
            if r != final[i]:
                final[i] = r
                changed = True
    final = [v for v in final if v]
    for i, v in enumerate(final):
        lc = v[max(v, key=key)]
        if lc != field.one:
            final[i] = vec_scale(v, field.inv(lc), field)
    final.sort(key=lambda v: key(max(v, key=key)))
    return GroebnerBasis(free, order, final)


class GroebnerBasis:
    """A reduced Gröbner basis of a submodule, with normal-form services."""

    def __init__(self, free, order, elements):
        self.free = free
        self.order = order
        self.elements = elements
        key = order.key
        self._basis = []
        for v in elements:
            lt = max(v, key=key)
            self._basis.append((lt, v[lt], v))

    @property
    def ring(self):
        return self.free.ring

    def leads(self):
        return [b[0] for b in self._basis]

    def nf(self, v):
        return divide(v, self._basis, self.order.key, self.ring.field)

    def nf_with_quotients(self, v):
        return divide(v, self._basis, self.order.key, self.ring.field, with_quotients=True)

    def contains(self, v):
        return not self.nf(v)

    def same_submodule(self, other):
        """Reduced bases are unique per order, so equality is set equality."""
        if self.order.name != other.order.name or self.free.gen_degs != other.free.gen_degs:
            a = all(other.contains(v) for v in self.elements)
            b = all(self.contains(v) for v in other.elements)
            return a and b
        return self.elements == other.elements

    def std_monomials(self, degree):
        """Basis of (F/⟨this⟩)_degree: monomial terms no lead divides."""
        out = []
        for t in self.free.basis_of_degree(degree):
            if not any(term_divides(lt, t) for lt, _, _ in self._basis):
                out.append(t)
        return out

    def quotient_dim(self, degree):
        return len(self.std_monomials(degree))

    def quotient_is_zero_up_to(self, through_degree):
        return all(self.quotient_dim(d) == 0
                   for d in range(min(self.free.gen_degs, default=0), through_degree + 1))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


# ---------------------------------------------------------------------------
# tagged block bases: span + representations + syzygies in one computation

class TaggedSpan:
    """Gröbner data for span(v_1..v_r) ⊂ F with representation tags.

    Provides membership, normal forms, lifts (coordinates over the original
    generators), and a Gröbner basis of the syzygy module of (v_1..v_r).
    """

    def __init__(self, free, vectors, order=None, tag_degs=None):
        ring = free.ring
        field = ring.field
        self.free = free
        self.vectors = list(vectors)
        base = order or ModuleOrder(ring.order, "POT")
        self.order = ModuleOrder(base.mono_order, "POT")

        r0 = free.rank
        if tag_degs is None:
            tag_degs = []
            for v in self.vectors:
                d = vec_degree(v, free.gen_degs)
                tag_degs.append(0 if d is None else d)
        self.tag_degs = list(tag_degs)
        big = GradedFreeModule(ring, list(free.gen_degs) + self.tag_degs)
        zero_mono = ring.zero_mono
        combined = []
        for i, v in enumerate(self.vectors):
            w = dict(v)
            w[(r0 + i, zero_mono)] = field.one
            combined.append(w)
        gb = buchberger(combined, big, self.order)

        span_basis = []      # (lead, lc, F-part, tag-part)
        syz = []
        for w in gb.elements:
            fpart = {t: a for t, a in w.items() if t[0] < r0}
            tpart = {(t[0] - r0, t[1]): a for t, a in w.items() if t[0] >= r0}
            if fpart:
                lt = max(fpart, key=self.order.key)
                span_basis.append((lt, fpart[lt], fpart, tpart))
            else:
                syz.append(tpart)
        self._span = span_basis
        self._syz = syz
        self._field = field
        self._ring = ring

    # -- span services -------------------------------------------------------

    def span_gb_vectors(self):
        return [b[2] for b in self._span]

    def nf(self, v):
        basis = [(lt, lc, f) for lt, lc, f, _ in self._span]
        return divide(v, basis, self.order.key, self._field)

    def contains(self, v):
        return not self.nf(v)

    def lift(self, v):
        """Coordinates (one polynomial per original generator) with
        v = Σ coords[i]·vectors[i]; None when v is not in the span."""
        basis = [(lt, lc, f) for lt, lc, f, _ in self._span]
        rem, quots = divide(v, basis, self.order.key, self._field, with_quotients=True)
        if rem:
            return None
        coords = [self._ring.zero() for _ in self.vectors]
        for q, (_, _, _, tag) in zip(quots, self._span):
            if not q:
                continue
            qp = Polynomial(self._ring, dict(q))
            for (i, m), a in tag.items():
                coords[i] = coords[i] + qp.mul_monomial(m, a)
        return coords

    # -- syzygies -------------------------------------------------------------

    def syzygy_vectors(self):
        """Generators (a Gröbner basis) of {a ∈ ⊕S(-d_i) : Σ a_i v_i = 0}."""
        return [dict(s) for s in self._syz]

    def syzygy_free_module(self):
        return GradedFreeModule(self._ring, self.tag_degs)


# ---------------------------------------------------------------------------
# derived submodule operations

def syzygy_module(free, vectors):
    """(generators, free module of tags) for the syzygies of the vectors."""
    ts = TaggedSpan(free, vectors)
    return ts.syzygy_vectors(), ts.syzygy_free_module()


def kernel_into_quotient(map_cols, source_degs, target_pres):
    """Kernel of the map  ⊕S(-source_degs) → coker(target_pres)  whose
    columns are map_cols (vectors in the free cover of the target).

    Returns generators of the kernel as vectors in ⊕S(-source_degs).
    """
    free0 = target_pres.free_cover()
    rels = target_pres.relations()
    ts = TaggedSpan(free0, list(map_cols) + rels)
    n = len(map_cols)
    out = []
    seen = set()
    for s in ts.syzygy_vectors():
        head = {(c, m): a for (c, m), a in s.items() if c < n}
        if head:
            key = frozenset(head.items())
            if key not in seen:
                seen.add(key)
                out.append(head)
    return out


def submodule_colon(free, kgens, f):
    """(K : f) = {v ∈ F : f·v ∈ K} for a polynomial f."""
    cols = []
    zero = free.ring.zero_mono
    for i in range(free.rank):
        col = {(i, m): c for m, c in f.terms.items()}
        cols.append(col)
    # kernel of F --·f--> F/K
    pres = _pres_from_gens(free, kgens)
    return kernel_into_quotient(cols, None, pres)


def _pres_from_gens(free, gens):
    from .gradedmod import ModulePresentation
    return ModulePresentation(GradedMatrix.from_columns(free, list(gens)))


def submodule_saturate(free, kgens, f, order=None):
    """(K : f^∞) by iterating the colon until it stabilizes."""
    mo = order or ModuleOrder(free.ring.order, "POT")
    cur = buchberger(kgens, free, mo)
    while True:
        nxt_gens = submodule_colon(free, cur.elements, f)
        nxt = buchberger(nxt_gens, free, mo)
        if nxt.same_submodule(cur):
            return cur
        cur = nxt


def submodule_intersect(free, agens, bgens):
    """A ∩ B as kernel of F → F/A ⊕ F/B."""
    ring = free.ring
    double = free.direct_sum(free)
    shift = free.rank
    rels = []
    for v in agens:
        rels.append(dict(v))
    for v in bgens:
        rels.append({(c + shift, m): a for (c, m), a in v.items()})
    cols = []
    zero = ring.zero_mono
    one = ring.field.one
    for i in range(free.rank):
        cols.append({(i, zero): one, (i + shift, zero): one})
    pres = _pres_from_gens(double, rels)
    ker = kernel_into_quotient(cols, None, pres)
    return ker


def saturate_at_irrelevant(free, kgens):
    """K : (x_0,..,x_{n-1})^∞  =  ∩_i (K : x_i^∞)."""
    ring = free.ring
    mo = ModuleOrder(ring.order, "POT")
    pieces = []
    for i in range(ring.nvars):
        sat = submodule_saturate(free, list(kgens), ring.var(i), mo)
        pieces.append(list(sat.elements))
    cur = pieces[0]
    for nxt in pieces[1:]:
        cur = submodule_intersect(free, cur, nxt)
    return buchberger(cur, free, mo)


def annihilator(pres):
    """Ann(M) ⊂ S for M = coker(pres), as a reduced Gröbner basis (ideal
    viewed in the rank-one free module)."""
    ring = pres.ring
    free = pres.free_cover()
    rels = pres.relations()
    line = GradedFreeModule(ring, [0])
    mo = ModuleOrder(ring.order, "POT")
    current = None
    zero = ring.zero_mono
    one = ring.field.one
    for i in range(free.rank):
        # kernel of S → F/K,  1 ↦ e_i
        col = {(i, zero): one}
        ker = kernel_into_quotient([col], None, pres)
        gens = [{(0, m): a for (c, m), a in v.items()} for v in ker]
        # tags carry degree of e_i; re-home into S itself (degree shift is
        # irrelevant for the ideal)
        if current is None:
            current = gens
        else:
            current = submodule_intersect(line, current, gens)
    return buchberger(current or [], line, mo)
