"""Named geometric fixtures: concrete curves and one-dimensional sheaves.

Every object the test surface talks about lives here, hard-coded once and
self-checked on load (each fixture's Hilbert polynomial is recomputed and
compared to its stated value; several carry extra certificates, e.g. a
Jacobian-rank check at a marked singular point).  The catalog covers:

* quartic space curves of the three standard ideal shapes, each with its
  3x2 second-syzygy matrix and a marked point for the jump predictor;
* a plane cubic with a marked point, in both positions relative to the
  line component, the off-line position built as an extension;
* the quartic sheaf with annihilator (x^2, xy, y^3) given by an explicit
  2x5 presentation;
* a non-planar extension sheaf (a plane-cubic-with-point extended by a
  transversal line's ideal sheaf twist);
* the pushforward of the projective line under a degree-4 map onto a
  3-nodal plane quartic, with the node-count oracle;
* a plane quartic pencil sheaf given by a 2x4 resolution;
* standard modules (structure sheaves of linear subspaces, skyscrapers,
  cotangent syzygy modules) and a smooth plane-cubic suite.

The extension-class lift at the bottom realizes a sheaf extension
0 -> B -> E -> A -> 0 from a chosen cocycle: truncate A beyond both
regularities, resolve, pick a degree-0 cocycle in Hom(F_1, B) that is not a
coboundary, and assemble the mapping cone.  The lift is exact linear
algebra, so the resulting presentation is as explicit as any hand-coded
one.
"""

from fractions import Fraction

from .fields import QQ
from .poly import PolyRing
from .gradedmod import GradedFreeModule, GradedMatrix, ModulePresentation
from .groebner import ModuleOrder, annihilator, buchberger, saturate_at_irrelevant
from .homology import (
    QuotientBasis,
    _hom_matrix,
    hilbert_polynomial,
    homology_presentation,
    minimize_presentation,
    resolve,
    truncate_at,
)
from .linalg import nullspace, sparse_rank
from .cohomology import sheaf_ext_dim


# ---------------------------------------------------------------------------
# rings and standard modules

def p3_ring(field=QQ):
    return PolyRing(["x", "y", "z", "w"], field=field)


def p2_ring(field=QQ):
    return PolyRing(["y", "z", "w"], field=field)


def p1_ring(field=QQ):
    return PolyRing(["z", "w"], field=field)


def structure_sheaf(ring, twist=0):
    """O(twist) as a free presentation."""
    return ModulePresentation.free(ring, [-twist])


def line_module(ring, twist=0):
    """O_L(twist) for the line L = {x = y = 0}."""
    return ModulePresentation.cyclic(
        ring, [ring.var(0), ring.var(1)], gen_deg=-twist
    )


def plane_module(ring, twist=0):
    """O_H(twist) for the plane H = {w = 0}."""
    return ModulePresentation.cyclic(ring, [ring.var(3)], gen_deg=-twist)


def skyscraper(ring, point, gen_deg=0):
    """The structure sheaf of a single reduced point, from its coordinates."""
    field = ring.field
    pt = [field(c) for c in point]
    i0 = next((i for i, c in enumerate(pt) if c != field.zero), None)
    if i0 is None:
        raise ValueError("a projective point needs a nonzero coordinate")
    gens = []
    for j in range(ring.nvars):
        if j == i0:
            continue
        # p_{i0} * x_j - p_j * x_{i0}
        f = ring.var(j).scale(pt[i0]) - ring.var(i0).scale(pt[j])
        gens.append(f)
    return ModulePresentation.cyclic(ring, gens, gen_deg=gen_deg)


def point_on_all(gens, point, field):
    """True when every polynomial in gens vanishes at the point."""
    return all(g.evaluate(point) == field.zero for g in gens)


# ---------------------------------------------------------------------------
# fixture registry

_BUILDERS = {}
_CACHE = {}


def _register(name):
    def deco(fn):
        _BUILDERS[name] = fn
        return fn

    return deco


def fixture_names():
    return sorted(_BUILDERS)


def load_fixture(name, field=QQ):
    """Build (and cache) a fixture: a dict of named objects.

    Every fixture has a "module" entry and an "hp" entry; the stated
    Hilbert polynomial is recomputed on load and a mismatch raises, so a
    transcription error in any hard-coded matrix is caught immediately.
    """
    if name not in _BUILDERS:
        raise KeyError("unknown fixture %r; known: %s" % (name, ", ".join(fixture_names())))
    key = (name, repr(field))
    if key not in _CACHE:
        data = _BUILDERS[name](field)
        hp = hilbert_polynomial(data["module"])
        if tuple(hp.coeffs) != tuple(data["hp"]):
            raise AssertionError(
                "fixture %s: stated Hilbert polynomial %s, computed %s"
                % (name, data["hp"], hp.coeffs)
            )
        _CACHE[key] = data
    return _CACHE[key]


def fixture_module(name, field=QQ):
    return load_fixture(name, field)["module"]


# ---------------------------------------------------------------------------
# quartic space curves with marked points (jump-predictor fixtures)

@_register("elliptic_quartic")
def _elliptic_quartic(field):
    """Intersection of two quadrics; smooth, so the predictor never sees a
    rank drop.  The syzygy matrix is written for the redundant generator
    triple (q1, q2, 0), which keeps one constant entry and makes the rank
    at any curve point equal to 1."""
    ring = p3_ring(field)
    q1 = ring.parse("x^2+y^2+z^2+w^2")
    q2 = ring.parse("x*y+z*w")
    module = ModulePresentation.cyclic(ring, [q1, q2])
    zero = ring.zero()
    delta = GradedMatrix(
        GradedFreeModule(ring, [2, 2, 3]),
        GradedFreeModule(ring, [3, 4]),
        [[zero, -q2], [zero, q1], [ring.one(), zero]],
    )
    return {
        "module": module,
        "ideal": [q1, q2],
        "delta": delta,
        "hp": (0, 4),
    }


def _line_cubic(field, cubic_q1, cubic_q2):
    ring = p3_ring(field)
    q1 = ring.parse(cubic_q1)
    q2 = ring.parse(cubic_q2)
    y, z, x = ring.var(1), ring.var(2), ring.var(0)
    g3 = y * q1 + z * q2
    gens = [x * y, x * z, g3]
    module = ModulePresentation.cyclic(ring, gens)
    zero = ring.zero()
    delta = GradedMatrix(
        GradedFreeModule(ring, [2, 2, 3]),
        GradedFreeModule(ring, [4, 3]),
        [[-q1, z], [-q2, -y], [x, zero]],
    )
    return ring, module, gens, delta, q1, q2


@_register("line_cubic_meet_smooth")
def _line_cubic_meet_smooth(field):
    """Line {y=z=0} union the plane cubic {x = yq1+zq2 = 0}; the marked
    point is on both components but the cubic is smooth there."""
    ring, module, gens, delta, q1, q2 = _line_cubic(field, "w^2", "y^2")
    point = (0, 0, 0, 1)
    if q1.evaluate(point) == ring.field.zero:
        raise AssertionError("marked point should avoid the q1 vanishing locus")
    return {
        "module": module,
        "ideal": gens,
        "delta": delta,
        "point": point,
        "hp": (0, 4),
    }


@_register("line_cubic_meet_singular")
def _line_cubic_meet_singular(field):
    """Same shape with q1 = y^2+zw, q2 = z^2: both vanish at the marked
    point, which is then a singular point of the cubic component lying on
    the line.  The singularity is certified by the Jacobian of the cubic
    component dropping rank at the point."""
    ring, module, gens, delta, q1, q2 = _line_cubic(field, "y^2+z*w", "z^2")
    point = (0, 0, 0, 1)
    field_ = ring.field
    if q1.evaluate(point) != field_.zero or q2.evaluate(point) != field_.zero:
        raise AssertionError("marked point should be a base point of q1, q2")
    # cubic component ideal (x, yq1+zq2): Jacobian rank at the point must be
    # 1 (only the plane direction), i.e. all partials of the cubic vanish
    cubic = gens[2]
    for i in range(4):
        if _partial(cubic, i).evaluate(point) != field_.zero:
            raise AssertionError("cubic component is not singular at the marked point")
    return {
        "module": module,
        "ideal": gens,
        "delta": delta,
        "point": point,
        "hp": (0, 4),
    }


@_register("doubleline_conic")
def _doubleline_conic(field):
    """A double line of genus -2 union a conic: ideal (x^2, xy, xq1+yq2)."""
    ring = p3_ring(field)
    q1 = ring.parse("z^2")
    q2 = ring.parse("z^2-y*w")
    x, y = ring.var(0), ring.var(1)
    g3 = x * q1 + y * q2
    gens = [x * x, x * y, g3]
    module = ModulePresentation.cyclic(ring, gens)
    zero = ring.zero()
    delta = GradedMatrix(
        GradedFreeModule(ring, [2, 2, 3]),
        GradedFreeModule(ring, [4, 3]),
        [[-q1, -y], [-q2, x], [x, zero]],
    )
    point = (0, 0, 0, 1)
    return {
        "module": module,
        "ideal": gens,
        "delta": delta,
        "point": point,
        "hp": (0, 4),
    }


def _partial(poly, i):
    """Formal partial derivative (characteristic-0 fields only in our use)."""
    ring = poly.ring
    out = {}
    for m, c in poly.terms.items():
        if m[i] == 0:
            continue
        mm = m[:i] + (m[i] - 1,) + m[i + 1:]
        cc = ring.field.mul(c, ring.field(m[i]))
        out[mm] = ring.field.add(out.get(mm, ring.field.zero), cc)
    from .poly import Polynomial

    return Polynomial(ring, {m: c for m, c in out.items() if c != ring.field.zero})


def jumpext_case(fixture_name, point=None, field=QQ):
    """Evaluate the jump predictor on a marked curve fixture.

    Ranks the stored second-syzygy matrix at the point (0 -> expect 2,
    1 -> expect 1), then computes dim Ext^1 of the skyscraper into the
    curve's structure sheaf directly and reports both.
    """
    data = load_fixture(fixture_name, field)
    if "delta" not in data:
        raise ValueError("fixture %s has no syzygy matrix for the predictor" % fixture_name)
    p = tuple(point) if point is not None else data.get("point")
    if p is None:
        raise ValueError("fixture %s has no marked point; pass one" % fixture_name)
    f = data["module"].ring.field
    if not point_on_all(data["ideal"], p, f):
        raise ValueError("point %r is not on the curve of fixture %s" % (p, fixture_name))
    vals = data["delta"].evaluate(p)
    rows = [{j: v for j, v in enumerate(row) if v != f.zero} for row in vals]
    rank = sparse_rank([r for r in rows if r], f)
    if rank > 1:
        raise AssertionError("syzygy matrix has rank %d at a curve point" % rank)
    predicted = 2 if rank == 0 else 1
    sky = skyscraper(data["module"].ring, p)
    computed = sheaf_ext_dim(sky, data["module"], 1)
    return {"rank_at_p": rank, "predicted_ext": predicted, "computed_ext": computed}


# ---------------------------------------------------------------------------
# the quartic sheaf with annihilator (x^2, xy, y^3)

@_register("fat_line_quartic")
def _fat_line_quartic(field):
    """Cokernel of the 2x5 matrix phi; generators in degrees 1 and 0.  The
    annihilator is recomputed on load and must be exactly (x^2, xy, y^3)."""
    ring = p3_ring(field)
    z = ring.zero()
    x, y, zz = ring.var(0), ring.var(1), ring.var(2)
    phi = GradedMatrix(
        GradedFreeModule(ring, [1, 0]),
        GradedFreeModule(ring, [2] * 5),
        [
            [x, y, zz, z, z],
            [z, z, y * y, x * y, x * x],
        ],
    )
    module = ModulePresentation(phi)
    ann = annihilator(module)
    expected = buchberger(
        [
            {(0, m): c for m, c in ring.parse(t).terms.items()}
            for t in ("x^2", "x*y", "y^3")
        ],
        GradedFreeModule(ring, [0]),
        ModuleOrder(ring.order, "POT"),
    )
    if not ann.same_submodule(expected):
        raise AssertionError("annihilator is not (x^2, xy, y^3)")
    return {"module": module, "hp": (1, 4)}


# ---------------------------------------------------------------------------
# plane cubic with a marked point (two positions), and the standards

@_register("reducible_cubic")
def _reducible_cubic(field):
    """The plane cubic {x = 0, y(z^2 - yw) = 0}: a line union a conic."""
    ring = p3_ring(field)
    gens = [ring.var(0), ring.var(1) * ring.parse("z^2-y*w")]
    return {
        "module": ModulePresentation.cyclic(ring, gens),
        "ideal": gens,
        "hp": (0, 3),
    }


@_register("nodal_cubic")
def _nodal_cubic(field):
    """The irreducible plane cubic {x = 0, y^3 + yzw + z^3 = 0}."""
    ring = p3_ring(field)
    gens = [ring.var(0), ring.parse("y^3+y*z*w+z^3")]
    return {
        "module": ModulePresentation.cyclic(ring, gens),
        "ideal": gens,
        "hp": (0, 3),
    }


@_register("cubic_point_on_line")
def _cubic_point_on_line(field):
    """O_{C0}(p) for the reducible cubic, p = [0:0:0:1] on the line
    component; presented by the explicit 2x4 matrix gamma, whose full
    second syzygy is the stored 4x2 matrix delta (gamma . delta = 0 is
    checked on load)."""
    ring = p3_ring(field)
    z = ring.zero()
    x, y, zv = ring.var(0), ring.var(1), ring.var(2)
    q2 = ring.parse("z^2-y*w")
    gamma = GradedMatrix(
        GradedFreeModule(ring, [1, 0]),
        GradedFreeModule(ring, [2, 2, 2, 1]),
        [
            [y, zv, x, z],
            [z, q2, z, x],
        ],
    )
    delta = GradedMatrix(
        gamma.source,
        GradedFreeModule(ring, [3, 3]),
        [
            [x, z],
            [z, x],
            [-y, -zv],
            [z, -q2],
        ],
    )
    if not gamma.compose(delta).is_zero():
        raise AssertionError("gamma . delta != 0")
    return {
        "module": ModulePresentation(gamma),
        "gamma": gamma,
        "delta": delta,
        "point": (0, 0, 0, 1),
        "hp": (1, 3),
    }


@_register("cubic_point_off_line")
def _cubic_point_off_line(field):
    """O_{C0}(p') with p' = [0:1:0:0] on the conic component only: the
    unique non-split extension of the skyscraper at p' by O_{C0}.  The
    class space must be one-dimensional (checked), which pins the module
    up to isomorphism."""
    ring = p3_ring(field)
    c0 = fixture_module("reducible_cubic", field)
    point = (0, 1, 0, 0)
    sky = skyscraper(ring, point)
    module, ncls = extension_from_class(sky, c0, want_class_count=1)
    return {"module": module, "point": point, "hp": (1, 3)}


@_register("cotangent")
def _cotangent(field):
    from .cohomology import omega_module

    ring = p3_ring(field)
    mod = omega_module(ring, 1)
    if sorted(mod.gen_degs) != [2] * 6:
        raise AssertionError("first syzygy sheaf should have 6 generators in degree 2")
    return {"module": mod, "hp": tuple(hilbert_polynomial(mod).coeffs)}


@_register("cotangent2")
def _cotangent2(field):
    from .cohomology import omega_module

    ring = p3_ring(field)
    mod = omega_module(ring, 2)
    if sorted(mod.gen_degs) != [3] * 4:
        raise AssertionError("second syzygy sheaf should have 4 generators in degree 3")
    return {"module": mod, "hp": tuple(hilbert_polynomial(mod).coeffs)}


# ---------------------------------------------------------------------------
# non-planar extension sheaf (quartic built over the reducible cubic)

@_register("wplus_extension")
def _wplus_extension(field):
    """Extension of O_{C0}(p') by O_M(-1) for the line M = {z = w = 0},
    which passes through p' = [0:1:0:0] transversally to the cubic's plane.
    Non-planarity is certified on load: the annihilator contains no linear
    form."""
    ring = p3_ring(field)
    a = fixture_module("cubic_point_off_line", field)
    b = ModulePresentation.cyclic(ring, [ring.var(2), ring.var(3)], gen_deg=1)
    module, ncls = extension_from_class(a, b)
    ann = annihilator(module)
    for v in ann.elements:
        d = max(sum(m) for (_, m) in v)
        if d <= 1:
            raise AssertionError("extension sheaf became planar")
    return {"module": module, "class_count": ncls, "hp": (1, 4)}


# ---------------------------------------------------------------------------
# plane quartic pencil sheaf (2x4 resolution, planar type)

@_register("planar_quartic_pencil")
def _planar_quartic_pencil(field):
    """Cokernel of [[x,0,z^3,y],[0,x,w^3+y^3,z]]: a rank-one sheaf with a
    pencil of sections on the smooth plane quartic z^4 - yw^3 - y^4 = 0."""
    ring = p3_ring(field)
    z = ring.zero()
    x, y, zv, w = (ring.var(i) for i in range(4))
    mat = GradedMatrix(
        GradedFreeModule(ring, [0, 0]),
        GradedFreeModule(ring, [1, 1, 3, 1]),
        [
            [x, z, zv ** 3, y],
            [z, x, w ** 3 + y ** 3, zv],
        ],
    )
    return {"module": ModulePresentation(mat), "hp": (1, 4)}


# ---------------------------------------------------------------------------
# pushforward of P^1 onto a 3-nodal plane quartic

# the four degree-4 binary forms (coefficients of s^4, s^3 t, ..., t^4);
# the first acts as zero, so the image lies in the plane {x = 0}
_PUSHFORWARD_FORMS = (
    (0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (0, 1, 0, 1, 0),
    (0, 0, 0, 0, 1),
)


def _binary_mul(vec, form, field):
    """Multiply a binary form (coefficient list) by another."""
    out = [field.zero] * (len(vec) + len(form) - 1)
    for i, a in enumerate(vec):
        if a == field.zero:
            continue
        for j, b in enumerate(form):
            if b:
                out[i + j] = field.add(out[i + j], field.mul(a, field(b)))
    return out


def _row_space_append(rows, vec, field):
    """Reduce vec against the rref rows; append if independent.  Returns
    True when the vector enlarged the span."""
    v = list(vec)
    for pivot_col, row in rows:
        c = v[pivot_col]
        if c != field.zero:
            for k in range(len(v)):
                v[k] = field.sub(v[k], field.mul(c, row[k]))
    for k in range(len(v)):
        if v[k] != field.zero:
            inv = field.inv(v[k])
            v = [field.mul(inv, a) for a in v]
            rows.append((k, v))
            rows.sort(key=lambda t: t[0])
            return True
    return False


@_register("pushforward_quartic")
def _pushforward_quartic(field):
    """The graded module with degree-d part the binary forms of degree 4d,
    with x, y, z, w acting through the four fixed quartic forms.  The
    presentation is computed, not hand-entered: generators are found
    degree by degree (new generators where multiplication does not reach),
    relations as kernels of the evaluation map, and the result is certified
    by its Hilbert function matching 4d+1 well beyond the regularity."""
    ring = p3_ring(field)
    forms = [[field(c) for c in f] for f in _PUSHFORWARD_FORMS]

    def act(vec, var_idx):
        return _binary_mul(vec, _PUSHFORWARD_FORMS[var_idx], field)

    # 1. generators ---------------------------------------------------------
    max_gen_deg = 3
    gens = []  # (degree, coefficient vector in M_degree)
    reached = {}  # degree -> rref rows of the reached subspace
    basis_rows = [(0, [field.one])]
    gens.append((0, [field.one]))
    reached[0] = list(basis_rows)
    for d in range(1, max_gen_deg + 1):
        dim_d = 4 * d + 1
        rows = []
        for _, row in reached[d - 1]:
            for v in range(1, 4):
                _row_space_append(rows, act(row, v), field)
        # fill the gap with new generators (monomial representatives)
        for k in range(dim_d):
            if len(rows) == dim_d:
                break
            unit = [field.zero] * dim_d
            unit[k] = field.one
            if _row_space_append(rows, unit, field):
                gens.append((d, unit))
        reached[d] = rows
        if d >= 2 and any(g[0] == d for g in gens):
            raise AssertionError("pushforward module needs generators above degree 1")

    # 2. relations ----------------------------------------------------------
    gen_degs = [g[0] for g in gens]
    max_rel_deg = 5

    def domain_basis(d):
        """Basis of  ⊕_g S_{d - deg g}  as (gen index, monomial)."""
        out = []
        for gi, gd in enumerate(gens):
            if d - gd[0] >= 0:
                out.extend((gi, m) for m in ring.monomials_of_degree(d - gd[0]))
        return out

    def apply_mono(vec, mono):
        for v, e in enumerate(mono):
            for _ in range(e):
                vec = act(vec, v)
        return vec

    relations = []  # sparse vectors {(gen index, monomial): coeff}
    rel_elems = []  # same, kept per degree for span tracking
    for d in range(1, max_rel_deg + 1):
        basis = domain_basis(d)
        pos = {bm: i for i, bm in enumerate(basis)}
        # kernel of the evaluation map in degree d
        cols = []
        for gi, m in basis:
            cols.append(apply_mono(list(gens[gi][1]), m))
        dim_target = 4 * d + 1
        dense_rows = [
            [cols[j][i] for j in range(len(basis))] for i in range(dim_target)
        ]
        kernel = nullspace(dense_rows, field, ncols=len(basis))
        # span already generated by multiples of known relations
        span = []
        for r in relations:
            for v in range(4):
                var_mono = ring.var(v).lead_monomial()
                shifted = {}
                for (gi, m), c in r.items():
                    mm = tuple(a + b for a, b in zip(m, var_mono))
                    shifted[(gi, mm)] = c
                vec = [field.zero] * len(basis)
                ok = True
                for bm, c in shifted.items():
                    if bm not in pos:
                        ok = False
                        break
                    vec[pos[bm]] = c
                if ok:
                    _row_space_append(span, vec, field)
        new_rels = []
        for kv in kernel:
            if _row_space_append(span, kv, field):
                rel = {
                    basis[i]: c for i, c in enumerate(kv) if c != field.zero
                }
                new_rels.append(rel)
        relations.extend(new_rels)

    # 3. assemble the presentation ------------------------------------------
    target = GradedFreeModule(ring, gen_degs)
    cols = []
    for r in relations:
        col = {}
        for (gi, m), c in r.items():
            col[(gi, m)] = c
        cols.append(col)
    pres = minimize_presentation(
        ModulePresentation(GradedMatrix.from_columns(target, cols))
    )
    # certificate: Hilbert function equals 4d+1 far beyond the window used
    qb = QuotientBasis(pres)
    for d in range(0, 9):
        if qb.dim(d) != 4 * d + 1:
            raise AssertionError("pushforward Hilbert function broken at degree %d" % d)
    return {"module": pres, "hp": (1, 4)}


def pushforward_image_oracle(field=QQ):
    """Certificates for the image curve of the degree-4 map:

    * no conic through the image, and a unique quartic equation F;
    * the saturated Jacobian scheme of F has length 3;
    * its three points are distinct (a multiplication operator on the
      3-dimensional coordinate ring has squarefree characteristic
      polynomial), hence three A_1 points: a 3-nodal rational quartic.

    Returns the dict of computed certificates (used as test oracles).
    """
    ring2 = p2_ring(field)

    def image_kernel(deg):
        monos = list(ring2.monomials_of_degree(deg))
        cols = []
        for m in monos:
            vec = [field.one]
            for v, e in enumerate(m):
                for _ in range(e):
                    vec = _binary_mul(vec, _PUSHFORWARD_FORMS[v + 1], field)
            cols.append(vec)
        rows = [
            [cols[j][i] for j in range(len(monos))] for i in range(4 * deg + 1)
        ]
        ker = nullspace(rows, field, ncols=len(monos))
        polys = []
        for kv in ker:
            terms = {m: c for m, c in zip(monos, kv) if c != field.zero}
            from .poly import Polynomial

            polys.append(Polynomial(ring2, terms))
        return polys

    conics = image_kernel(2)
    quartics = image_kernel(4)
    if conics or len(quartics) != 1:
        raise AssertionError("image is not a quartic curve")
    f = quartics[0]
    jac = [_partial(f, i) for i in range(3)]
    free1 = GradedFreeModule(ring2, [0])
    jgens = [{(0, m): c for m, c in g.terms.items()} for g in jac if not g.is_zero()]
    sat = saturate_at_irrelevant(free1, jgens)
    nodes = ModulePresentation.cyclic(
        ring2, [_vec_poly(ring2, v) for v in sat.elements]
    )
    qb = QuotientBasis(nodes)
    lengths = [qb.dim(d) for d in range(5, 9)]
    if lengths != [3, 3, 3, 3]:
        raise AssertionError("singular scheme length is %r, want 3" % lengths)
    distinct = _points_distinct(qb, ring2)
    return {
        "image_quartic": f,
        "length": 3,
        "distinct": distinct,
        "node_count": 3,
    }


def _vec_poly(ring, vec):
    """A rank-one submodule vector {(0, mono): c} back to a polynomial."""
    from .poly import Polynomial

    return Polynomial(ring, {m: c for (_comp, m), c in vec.items()})


def _points_distinct(qb, ring):
    """Whether the length-3 scheme has three distinct points: look for a
    linear form whose multiplication operator (transported through another
    invertible one) has squarefree characteristic polynomial."""
    d = 6
    candidates = [ring.var(i) for i in range(ring.nvars)]
    candidates.append(ring.parse("+".join(ring.names)))
    candidates.append(ring.parse("y+2*z+5*w" if ring.nvars == 3 else "x+y+z"))
    field = ring.field
    for lam in candidates:
        a_lam = qb.mult_matrix(lam, d)
        inv = _invert3(a_lam, field)
        if inv is None:
            continue
        for ell in candidates:
            if ell is lam:
                continue
            a = _mat_mul(inv, qb.mult_matrix(ell, d), field)
            if _squarefree_charpoly3(a, field):
                return True
    return False


def _invert3(m, field):
    n = len(m)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(m)]
    from .linalg import rref

    red, pivots = rref(aug, field)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def _mat_mul(a, b, field):
    n = len(a)
    return [
        [
            _dotsum(field, (field.mul(a[i][k], b[k][j]) for k in range(n)))
            for j in range(n)
        ]
        for i in range(n)
    ]


def _dotsum(field, it):
    acc = field.zero
    for v in it:
        acc = field.add(acc, v)
    return acc


def _squarefree_charpoly3(a, field):
    """Squarefree test for the characteristic polynomial of a 3x3 matrix,
    via the cubic discriminant (exact arithmetic)."""
    tr = _dotsum(field, (a[i][i] for i in range(3)))
    a2 = _mat_mul(a, a, field)
    tr2 = _dotsum(field, (a2[i][i] for i in range(3)))
    det = field.sub(
        field.add(
            field.mul(a[0][0], field.sub(field.mul(a[1][1], a[2][2]), field.mul(a[1][2], a[2][1]))),
            field.mul(a[0][2], field.sub(field.mul(a[1][0], a[2][1]), field.mul(a[1][1], a[2][0]))),
        ),
        field.mul(a[0][1], field.sub(field.mul(a[1][0], a[2][2]), field.mul(a[1][2], a[2][0]))),
    )
    # char poly x^3 + c2 x^2 + c1 x + c0
    c2 = field.neg(tr)
    c1 = field.mul(field.inv(field(2)), field.sub(field.mul(tr, tr), tr2))
    c0 = field.neg(det)
    # discriminant of x^3 + a x^2 + b x + c
    aa, bb, cc = c2, c1, c0
    t1 = field.mul(field(18), field.mul(aa, field.mul(bb, cc)))
    t2 = field.mul(field(4), field.mul(aa, field.mul(aa, field.mul(aa, cc))))
    t3 = field.mul(field.mul(aa, aa), field.mul(bb, bb))
    t4 = field.mul(field(4), field.mul(bb, field.mul(bb, bb)))
    t5 = field.mul(field(27), field.mul(cc, cc))
    disc = field.sub(field.add(field.sub(t1, t2), t3), field.add(t4, t5))
    return disc != field.zero


# ---------------------------------------------------------------------------
# smooth plane-cubic suite (over the 3-variable ring)

@_register("smooth_cubic_point")
def _smooth_cubic_point(field):
    """O_C(p) for the smooth plane cubic y^3+z^3+w^3 = 0 and the point
    p = [1:-1:0]: the unique non-split extension of the skyscraper by O_C,
    hence a line bundle of degree 1 on a genus-1 curve."""
    ring = p2_ring(field)
    c = ModulePresentation.cyclic(ring, [ring.parse("y^3+z^3+w^3")])
    point = (1, -1, 0)
    sky = skyscraper(ring, point)
    module, ncls = extension_from_class(sky, c, want_class_count=1)
    return {"module": module, "point": point, "hp": (1, 3)}


# ---------------------------------------------------------------------------
# plane and line models

def planar_model(pres, var_index=0):
    """The same module over the plane {x_var = 0}: requires the variable to
    annihilate, then substitutes it away."""
    ring = pres.ring
    v = ring.var(var_index)
    # check v * generators ⊂ relations by normal form
    qb = QuotientBasis(pres)
    for c, gdeg in enumerate(pres.gen_degs):
        vec = {(c, v.lead_monomial()): ring.field.one}
        if any(x != ring.field.zero for x in qb.nf_coords(vec, gdeg + 1)):
            raise ValueError("variable does not annihilate the module")
    return pres.substitute_zero(var_index)


def _matrix_substitute_zero(mat, var_index):
    rows = []
    new_ring = None
    for row in mat.entries:
        r = []
        for e in row:
            q, new_ring = e.substitute_zero(var_index)
            r.append(q)
        rows.append(r)
    t = GradedFreeModule(new_ring, mat.target.gen_degs)
    s = GradedFreeModule(new_ring, mat.source.gen_degs)
    return GradedMatrix(t, s, rows, check=False)


def line_restricted_complex(pres, k):
    """The first k+1 differentials of the minimal resolution, restricted to
    the line {x = y = 0} (variables 0 and 1 set to zero)."""
    res = resolve(pres)
    out = []
    for i in range(1, k + 2):
        m = res.differential(i)
        m = _matrix_substitute_zero(m, 0)
        m = _matrix_substitute_zero(m, 0)
        out.append(m)
    return out


def tor_line_presentation(pres, i):
    """Tor_i(M, O_L) as a module over the line's coordinate ring k[z,w]."""
    ds = line_restricted_complex(pres, i)
    if i == 0:
        return minimize_presentation(ModulePresentation(ds[0]))
    return homology_presentation(ds[i], ds[i - 1])


def line_split_parts(pres):
    """Ext^1 into O_L(-1) (L = {x=y=0}), with its two-part decomposition.

    total:  dim Ext^1 on P^3 of M into O_L(-1);
    part_restriction:  Ext^1 on the line of M|_L into O(-1);
    part_tor:  Hom on the line of Tor_1(M, O_L) into O(-1).
    The parts are computed entirely over k[z,w] and must sum to the total.
    """
    ring = pres.ring
    ol_minus1 = ModulePresentation.cyclic(ring, [ring.var(0), ring.var(1)], gen_deg=1)
    total = sheaf_ext_dim(pres, ol_minus1, 1)
    ring1 = p1_ring(ring.field)
    o_minus1 = ModulePresentation.free(ring1, [1])
    restr = tor_line_presentation(pres, 0)
    tor1 = tor_line_presentation(pres, 1)
    part_restriction = sheaf_ext_dim(restr, o_minus1, 1)
    part_tor = sheaf_ext_dim(tor1, o_minus1, 0)
    return {
        "total": total,
        "part_restriction": part_restriction,
        "part_tor": part_tor,
        "parts_sum": part_restriction + part_tor,
    }


# ---------------------------------------------------------------------------
# extension-class lift

def extension_from_class(a, b, t=None, want_class_count=None):
    """A module presenting a non-split sheaf extension 0 -> B -> E -> A -> 0.

    Algorithm: truncate A at t (default: past both regularities), take its
    minimal resolution F_1 -> F_0 -> A_t, and compute the degree-0 cocycles
    phi in Hom(F_1, B) (phi . d_2 = 0) modulo coboundaries psi . d_1.  A
    cocycle outside the coboundary row space is lifted to a matrix
    F_1 -> G_0 (free cover of B) by sending each standard-monomial
    coordinate to its monomial representative, and the extension is the
    cokernel of the mapping cone

        [ d_1     0   ]
        [ -phi~  R_B  ]  :  F_1 (+) G_1  ->  F_0 (+) G_0.

    The Hilbert polynomial of the result must be the sum of the two inputs'
    (checked), which certifies injectivity of B into the extension for the
    pure one-dimensional inputs we use.  Returns (module, class_count)
    where class_count is the number of independent extension classes seen
    at this truncation; pass want_class_count to assert it.
    """
    ring = a.ring
    field = ring.field
    if t is None:
        t = max(resolve(a).regularity(), resolve(b).regularity()) + 1
    at = truncate_at(a, t)
    res = resolve(at)
    qb = QuotientBasis(b)

    d1 = res.differential(1)
    f1 = d1.source
    n_hom_f1 = sum(qb.dim(g) for g in f1.gen_degs)
    if res.length >= 2:
        rows2, m2, n2 = _hom_matrix(res.differential(2), qb, 0)
        dense = [[row.get(j, field.zero) for j in range(n2)] for row in rows2]
        cocycles = nullspace(dense, field, ncols=n2)
    else:
        cocycles = [
            [field.one if i == j else field.zero for i in range(n_hom_f1)]
            for j in range(n_hom_f1)
        ]
    rows1, m1, n1 = _hom_matrix(d1, qb, 0)
    cob_rows = []
    for j in range(n1):
        col = {i: row[j] for i, row in enumerate(rows1) if j in row}
        if col:
            cob_rows.append(col)
    base_rank = sparse_rank(cob_rows, field)
    chosen = None
    n_classes = sparse_rank(
        cob_rows + [
            {i: c for i, c in enumerate(v) if c != field.zero} for v in cocycles
        ],
        field,
    ) - base_rank
    if want_class_count is not None and n_classes != want_class_count:
        raise AssertionError(
            "extension class space has dimension %d, want %d" % (n_classes, want_class_count)
        )
    for v in cocycles:
        row = {i: c for i, c in enumerate(v) if c != field.zero}
        if not row:
            continue
        if sparse_rank(cob_rows + [row], field) > base_rank:
            chosen = v
            break
    if chosen is None:
        raise ValueError("no non-split extension class at truncation %d" % t)

    # lift the cocycle to phi~ : F_1 -> G_0
    g0 = b.free_cover()
    offsets = []
    n = 0
    for g in f1.gen_degs:
        offsets.append(n)
        n += qb.dim(g)
    phi_cols = []
    for k, g in enumerate(f1.gen_degs):
        vec = {}
        for tix, (comp, mono) in enumerate(qb.basis(g)):
            c = chosen[offsets[k] + tix]
            if c != field.zero:
                vec[(comp, mono)] = field.neg(c)
        phi_cols.append(vec)

    target = d1.target.direct_sum(g0)
    source = f1.direct_sum(b.matrix.source)
    zero = ring.zero()
    nrows_top = d1.target.rank
    rows = []
    for i in range(nrows_top):
        rows.append(list(d1.entries[i]) + [zero] * b.matrix.source.rank)
    for i in range(g0.rank):
        row = []
        for k in range(f1.rank):
            terms = {m: c for (comp, m), c in phi_cols[k].items() if comp == i}
            row.append(ring.from_terms(terms.items()) if terms else zero)
        row.extend(b.matrix.entries[i])
        rows.append(row)
    block = GradedMatrix(target, source, rows)
    module = minimize_presentation(ModulePresentation(block))

    hp_a = hilbert_polynomial(a).coeffs
    hp_b = hilbert_polynomial(b).coeffs
    hp_e = hilbert_polynomial(module).coeffs
    la = max(len(hp_a), len(hp_b), len(hp_e))

    def pad(v):
        return tuple(v) + (0,) * (la - len(v))

    if tuple(pad(hp_e)) != tuple(
        x + y for x, y in zip(pad(hp_a), pad(hp_b))
    ):
        raise AssertionError("extension Hilbert polynomial is not additive")
    return module, n_classes
