"""Randomized property suites shared by test_properties and test_acceptance.

Each suite runs `cases` independent randomized checks (default 100) over
small rings and low degrees, seeded for reproducibility.  Failures raise
AssertionError with enough context to replay the case.
"""

import random
from math import comb

from sheafcalc import (
    GREVLEX,
    GradedFreeModule,
    ModuleOrder,
    ModulePresentation,
    NonStabilizationError,
    PolyRing,
    QQ,
    QuotientBasis,
    buchberger,
    cohomology_table,
    hilbert_polynomial,
    resolve,
    saturate_presentation,
    sheaf_ext,
    tor_dims,
    truncated_ext_dim,
)
from sheafcalc.poly import Polynomial


def _random_poly(rng, ring, degree, sparsity=3):
    monos = list(ring.monomials_of_degree(degree))
    chosen = rng.sample(monos, min(sparsity, len(monos)))
    terms = {}
    for m in chosen:
        c = rng.randint(-3, 3)
        if c:
            terms[m] = QQ(c)
    return Polynomial(ring, terms)


def _random_ideal(rng, ring, ngens, max_degree):
    gens = []
    for _ in range(ngens):
        p = _random_poly(rng, ring, rng.randint(1, max_degree))
        if not p.is_zero():
            gens.append(p)
    if not gens:
        gens = [ring.parse(ring.names[0])]
    return gens


def _random_quotient(rng, nvars=3, ngens=2, max_degree=2):
    ring = PolyRing(tuple("xyzw"[:nvars]), field=QQ, order=GREVLEX)
    return ModulePresentation.cyclic(ring, _random_ideal(rng, ring, ngens, max_degree))


def _vec_shift(vec, mono, coeff, field):
    return {
        (c, tuple(a + b for a, b in zip(m, mono))): field.mul(coeff, v)
        for (c, m), v in vec.items()
    }


def _vec_sub(a, b, field):
    out = dict(a)
    for k, v in b.items():
        w = field.sub(out.get(k, field.zero), v)
        if w == field.zero:
            out.pop(k, None)
        else:
            out[k] = w
    return out


def suite_buchberger(cases=100, seed=101):
    """Every S-vector of the reduced basis reduces to zero, and the basis
    spans the input (checked via normal forms in both directions)."""
    rng = random.Random(seed)
    for case in range(cases):
        nvars = rng.choice((2, 3))
        ring = PolyRing(tuple("xyzw"[:nvars]), field=QQ, order=GREVLEX)
        rank = rng.choice((1, 1, 2))
        free = GradedFreeModule(ring, [rng.randint(0, 1) for _ in range(rank)])
        vectors = []
        for _ in range(rng.randint(2, 3)):
            comp = rng.randrange(rank)
            p = _random_poly(rng, ring, rng.randint(1, 2))
            if p.is_zero():
                continue
            vectors.append({(comp, m): c for m, c in p.terms.items()})
        if not vectors:
            continue
        order = ModuleOrder(ring.order, "POT")
        gb = buchberger(vectors, free, order)
        key = order.key
        field = ring.field
        basis = [(max(v, key=key), v) for v in gb.elements]
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                (ci, mi), vi = basis[i]
                (cj, mj), vj = basis[j]
                if ci != cj:
                    continue
                lcm = tuple(max(a, b) for a, b in zip(mi, mj))
                si = tuple(a - b for a, b in zip(lcm, mi))
                sj = tuple(a - b for a, b in zip(lcm, mj))
                lead_i = vi[(ci, mi)]
                lead_j = vj[(cj, mj)]
                s = _vec_sub(
                    _vec_shift(vi, si, field.inv(lead_i), field),
                    _vec_shift(vj, sj, field.inv(lead_j), field),
                    field,
                )
                rem = gb.nf(s)
                assert not rem, "case %d: S-vector (%d,%d) does not reduce" % (
                    case, i, j)
        for v in vectors:
            assert gb.contains(v), "case %d: input escapes its own basis" % case


def suite_buchberger_reference(cases=30, seed=102):
    """Ideal bases agree with an independent implementation (sympy)."""
    import sympy

    rng = random.Random(seed)
    for case in range(cases):
        nvars = rng.choice((2, 3))
        names = tuple("xyzw"[:nvars])
        ring = PolyRing(names, field=QQ, order=GREVLEX)
        gens = _random_ideal(rng, ring, rng.randint(2, 3), 2)
        free = GradedFreeModule(ring, [0])
        gb = buchberger(
            [{(0, m): c for m, c in g.terms.items()} for g in gens],
            free,
            ModuleOrder(ring.order, "POT"),
        )
        mine = set()
        for v in gb.elements:
            mine.add(Polynomial(ring, {m: c for (_c, m), c in v.items()}))
        symbols = sympy.symbols(" ".join(names))
        sym_gens = [sympy.sympify(g.text().replace("^", "**"),
                                  dict(zip(names, symbols))) for g in gens]
        reference = sympy.groebner(sym_gens, *symbols, order="grevlex")
        theirs = set()
        for expr in reference.exprs:
            terms = sympy.Poly(expr, *symbols).monic().as_dict()
            theirs.add(Polynomial(ring, {
                tuple(m): QQ(int(c.p), int(c.q)) for m, c in terms.items()}))
        assert mine == theirs, "case %d: basis disagrees with reference" % case


def suite_resolution(cases=100, seed=103):
    """Resolutions compose to zero, are minimal, and stop within nvars steps."""
    rng = random.Random(seed)
    for case in range(cases):
        pres = _random_quotient(rng, nvars=rng.choice((2, 3)),
                                ngens=rng.randint(1, 3))
        res = resolve(pres)
        assert res.length <= pres.ring.nvars, "case %d: resolution too long" % case
        for k in range(1, res.length):
            comp = res.differential(k).compose(res.differential(k + 1))
            assert comp.is_zero(), "case %d: d%d.d%d != 0" % (case, k, k + 1)
        for k in range(1, res.length + 1):
            for row in res.differential(k).entries:
                for entry in row:
                    assert entry.is_zero() or entry.degree >= 1, (
                        "case %d: unit entry in differential %d" % (case, k))


def suite_betti_hilbert(cases=100, seed=104):
    """The Betti table's alternating binomial sum equals the Hilbert
    function in every degree of a small window."""
    rng = random.Random(seed)
    for case in range(cases):
        nvars = rng.choice((2, 3))
        pres = _random_quotient(rng, nvars=nvars, ngens=rng.randint(1, 3))
        betti = resolve(pres).betti()
        qb = QuotientBasis(pres)
        for d in range(0, 5):
            total = 0
            for i, row in betti.items():
                for j, count in row.items():
                    total += (-1) ** i * count * comb(d - j + nvars - 1, nvars - 1) \
                        if d >= j else 0
            assert total == qb.dim(d), (
                "case %d: alternating sum %d != HF %d at degree %d"
                % (case, total, qb.dim(d), d))


def suite_tor_symmetry(cases=100, seed=105):
    """Tor_i(M, N) and Tor_i(N, M) have the same graded dimensions."""
    rng = random.Random(seed)
    for case in range(cases):
        nvars = rng.choice((2, 3))
        M = _random_quotient(rng, nvars=nvars, ngens=rng.randint(1, 2))
        ring = M.ring
        N = ModulePresentation.cyclic(ring, _random_ideal(rng, ring, rng.randint(1, 2), 2))
        i = rng.choice((1, 2))
        window = range(0, 4)
        left = tor_dims(M, N, i, window)
        right = tor_dims(N, M, i, window)
        assert left == right, (
            "case %d: Tor_%d asymmetry %r vs %r" % (case, i, left, right))


def suite_euler(cases=100, seed=106):
    """Alternating sums of cohomology match the Hilbert polynomial at
    every twist of a window (Euler characteristic consistency)."""
    rng = random.Random(seed)
    for case in range(cases):
        pres = _random_quotient(rng, nvars=3, ngens=rng.randint(1, 2))
        table = cohomology_table(pres, -2, 2)
        assert table.euler_consistent(), "case %d: Euler mismatch" % case


def suite_truncation_stability(cases=100, seed=107):
    """A stabilized sheaf Ext dimension persists at deeper truncations.

    Pairs the settle criterion rejects (NonStabilizationError) are skipped:
    the property under test is that acceptance is never a fluke stopping
    point, so at least two thirds of the drawn pairs must be accepted."""
    rng = random.Random(seed)
    accepted = 0
    for case in range(cases):
        M = _random_quotient(rng, nvars=3, ngens=rng.randint(1, 2))
        N = _random_quotient(rng, nvars=3, ngens=1)
        if hilbert_polynomial(M).degree < 0 or hilbert_polynomial(N).degree < 0:
            continue
        i = rng.choice((0, 1))
        try:
            result = sheaf_ext(M, N, i)
        except NonStabilizationError:
            continue
        accepted += 1
        last_t = result.history[-1][0]
        for deeper in (last_t + 1, last_t + 2):
            again = truncated_ext_dim(M, N, i, deeper)
            assert again == result.dim, (
                "case %d: Ext^%d drifts at truncation %d: %d vs %d"
                % (case, i, deeper, again, result.dim))
    assert accepted * 3 >= cases * 2, (
        "only %d of %d pairs stabilized" % (accepted, cases))


def suite_saturation_idempotence(cases=100, seed=108):
    """Saturation is idempotent and preserves the Hilbert polynomial."""
    rng = random.Random(seed)
    for case in range(cases):
        pres = _random_quotient(rng, nvars=rng.choice((2, 3)),
                                ngens=rng.randint(1, 3))
        once = saturate_presentation(pres)
        twice = saturate_presentation(once)
        assert hilbert_polynomial(once).coeffs == hilbert_polynomial(pres).coeffs, (
            "case %d: saturation changed the Hilbert polynomial" % case)
        qa, qb = QuotientBasis(once), QuotientBasis(twice)
        for d in range(0, 6):
            assert qa.dim(d) == qb.dim(d), (
                "case %d: saturation not idempotent at degree %d" % (case, d))


ALL_SUITES = (
    suite_buchberger,
    suite_buchberger_reference,
    suite_resolution,
    suite_betti_hilbert,
    suite_tor_symmetry,
    suite_euler,
    suite_truncation_stability,
    suite_saturation_idempotence,
)
