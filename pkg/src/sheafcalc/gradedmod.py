"""Graded free modules, homogeneous matrices between them, and presentations.

Conventions used throughout the package:

* A free module is recorded by its tuple of *generator degrees*: the module
  with generator degrees (d_0, ..., d_{r-1}) is  ⊕_i S(-d_i).  An element
  Σ f_i e_i is homogeneous of degree d when deg(f_i) + d_i = d for all i.

* A matrix maps source generators to target columns:  φ(e_j) = Σ_i φ[i][j] e_i,
  so entry (i, j) is homogeneous of degree  source_degs[j] - target_degs[i]
  (or zero).  Composition is ordinary matrix product.

* A presentation is a cokernel  M = coker(φ: F_1 → F_0);  the generators of M
  inherit the degrees of F_0.
"""

from .poly import Polynomial, PolyRing


class GradedFreeModule:
    """⊕ S(-d_i) for the listed generator degrees d_i."""

    __slots__ = ("ring", "gen_degs")

    def __init__(self, ring, gen_degs):
        self.ring = ring
        self.gen_degs = tuple(int(d) for d in gen_degs)

    @property
    def rank(self):
        return len(self.gen_degs)

    def twist(self, n):
        """F(n): every S(-d) becomes S(-d+n), i.e. generator degrees drop by n."""
        return GradedFreeModule(self.ring, [d - n for d in self.gen_degs])

    def direct_sum(self, other):
        return GradedFreeModule(self.ring, self.gen_degs + other.gen_degs)

    def dual_into(self, dual_gen_deg):
        """Hom(F, S(-g)) where g = dual_gen_deg; generator degrees g - d_i."""
        return GradedFreeModule(self.ring, [dual_gen_deg - d for d in self.gen_degs])

    def dim_degree(self, d):
        return sum(self.ring.dim_degree(d - g) for g in self.gen_degs)

    def basis_of_degree(self, d):
        """All (component, monomial) pairs spanning the degree-d piece, in a
        fixed deterministic order (component, then descending monomial)."""
        out = []
        order = self.ring.order
        for i, g in enumerate(self.gen_degs):
            monos = sorted(self.ring.monomials_of_degree(d - g), key=order.key, reverse=True)
            out.extend((i, m) for m in monos)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, GradedFreeModule)
            and self.ring == other.ring
            and self.gen_degs == other.gen_degs
        )

    def __repr__(self):
        if not self.gen_degs:
            return "0"
        parts = {}
        for d in self.gen_degs:
            parts[d] = parts.get(d, 0) + 1
        return " + ".join(
            ("S(%d)" % -d if n == 1 else "S(%d)^%d" % (-d, n))
            for d, n in sorted(parts.items())
        )


class GradedMatrix:
    """Homogeneous matrix φ: source → target between graded free modules."""

    __slots__ = ("ring", "target", "source", "entries")

    def __init__(self, target, source, entries, check=True):
        self.ring = target.ring
        self.target = target
        self.source = source
        self.entries = [list(row) for row in entries]
        if len(self.entries) != target.rank or any(len(r) != source.rank for r in self.entries):
            raise ValueError(
                "matrix shape %dx%d does not match target rank %d, source rank %d"
                % (len(self.entries), len(self.entries[0]) if self.entries else 0,
                   target.rank, source.rank)
            )
        if check:
            self._check_homogeneous()

    def _check_homogeneous(self):
        for i in range(self.target.rank):
            for j in range(self.source.rank):
                f = self.entries[i][j]
                if f.is_zero():
                    continue
                want = self.source.gen_degs[j] - self.target.gen_degs[i]
                if f.degree != want:
                    raise ValueError(
                        "entry (%d,%d) has degree %s, expected %d" % (i, j, f.degree, want)
                    )

    @property
    def nrows(self):
        return self.target.rank

    @property
    def ncols(self):
        return self.source.rank

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_text(cls, ring, rows, target_degs=None, source_degs=None, base_deg=0):
        """Build from a list of rows of strings/polynomials.  When the degree
        tuples are omitted they are inferred from the entries (the first
        target generator gets degree ``base_deg``)."""
        entries = [
            [e if isinstance(e, Polynomial) else ring.parse(str(e)) for e in row]
            for row in rows
        ]
        if target_degs is None or source_degs is None:
            target_degs, source_degs = _infer_degrees(entries, base_deg)
        return cls(
            GradedFreeModule(ring, target_degs),
            GradedFreeModule(ring, source_degs),
            entries,
        )

    @classmethod
    def zero(cls, target, source):
        z = target.ring.zero()
        return cls(target, source, [[z] * source.rank for _ in range(target.rank)], check=False)

    @classmethod
    def identity(cls, module):
        z, one = module.ring.zero(), module.ring.one()
        n = module.rank
        return cls(module, module,
                   [[one if i == j else z for j in range(n)] for i in range(n)], check=False)

    # -- algebra ---------------------------------------------------------------

    def compose(self, other):
        """self ∘ other  (self: B→C, other: A→B, result: A→C)."""
        if other.target.gen_degs != self.source.gen_degs:
            raise ValueError("composition mismatch: %r vs %r" % (self.source, other.target))
        z = self.ring.zero()
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedMatrix(self.target, other.source, rows, check=False)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def transpose_dual(self, dual_gen_deg=0):
        """The induced map Hom(target, S(-g)) → Hom(source, S(-g)): plain
        transpose with dualized degree data."""
        rows = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return GradedMatrix(
            self.source.dual_into(dual_gen_deg),
            self.target.dual_into(dual_gen_deg),
            rows,
        )

    def twist(self, n):
        return GradedMatrix(self.target.twist(n), self.source.twist(n), self.entries, check=False)

    def direct_sum(self, other):
        """Block-diagonal sum."""
        z = self.ring.zero()
        t = self.target.direct_sum(other.target)
        s = self.source.direct_sum(other.source)
        rows = []
        for i in range(self.nrows):
            rows.append(list(self.entries[i]) + [z] * other.ncols)
        for i in range(other.nrows):
            rows.append([z] * self.ncols + list(other.entries[i]))
        return GradedMatrix(t, s, rows, check=False)

    def stack_columns(self, other):
        """[self | other]: same target, concatenated sources."""
        if self.target.gen_degs != other.target.gen_degs:
            raise ValueError("stack_columns requires a common target")
        rows = [list(a) + list(b) for a, b in zip(self.entries, other.entries)]
        return GradedMatrix(self.target, self.source.direct_sum(other.source), rows, check=False)

    def submatrix(self, row_idx, col_idx):
        t = GradedFreeModule(self.ring, [self.target.gen_degs[i] for i in row_idx])
        s = GradedFreeModule(self.ring, [self.source.gen_degs[j] for j in col_idx])
        rows = [[self.entries[i][j] for j in col_idx] for i in row_idx]
        return GradedMatrix(t, s, rows, check=False)

    def scale_entry_free(self):
        return [[e for e in row] for row in self.entries]

    # -- evaluation -------------------------------------------------------------

    def evaluate(self, point):
        """Entrywise evaluation at a point; returns a list-of-lists of field
        elements (for numerical rank at a specific point)."""
        return [[e.evaluate(point) for e in row] for row in self.entries]

    def columns(self):
        """Columns as sparse vectors {(component, monomial): coeff}."""
        cols = []
        for j in range(self.ncols):
            v = {}
            for i in range(self.nrows):
                for m, c in self.entries[i][j].terms.items():
                    v[(i, m)] = c
            cols.append(v)
        return cols

    @classmethod
    def from_columns(cls, target, cols, source_degs=None):
        """Inverse of columns(); source degrees inferred from homogeneity when
        omitted (zero columns get degree 0)."""
        ring = target.ring
        z = ring.zero()
        if source_degs is None:
            source_degs = []
            for v in cols:
                if v:
                    (i, m), _ = next(iter(v.items()))
                    source_degs.append(sum(m) + target.gen_degs[i])
                else:
                    source_degs.append(0)
        entries = [[z] * len(cols) for _ in range(target.rank)]
        for j, v in enumerate(cols):
            per_comp = {}
            for (i, m), c in v.items():
                per_comp.setdefault(i, {})[m] = c
            for i, terms in per_comp.items():
                entries[i][j] = Polynomial(ring, terms)
        return cls(target, GradedFreeModule(ring, list(source_degs)), entries)

    def __repr__(self):
        body = "; ".join(
            "[" + ", ".join(e.text() for e in row) + "]" for row in self.entries
        )
        return "Matrix(%s <- %s: %s)" % (self.target, self.source, body)


def _infer_degrees(entries, base_deg):
    """Propagate homogeneity constraints deg(col_j) - deg(row_i) = deg(e_ij)
    through the bipartite incidence graph.  Rows/columns not connected to row 0
    default to degree base_deg (rows) or base_deg + their first entry degree."""
    nrows = len(entries)
    ncols = len(entries[0]) if entries else 0
    row_deg = [None] * nrows
    col_deg = [None] * ncols
    row_deg[0] = base_deg
    changed = True
    while changed:
        changed = False
        for i in range(nrows):
            for j in range(ncols):
                f = entries[i][j]
                if f.is_zero():
                    continue
                d = f.degree
                if row_deg[i] is not None and col_deg[j] is None:
                    col_deg[j] = row_deg[i] + d
                    changed = True
                elif col_deg[j] is not None and row_deg[i] is None:
                    row_deg[i] = col_deg[j] - d
                    changed = True
    for i in range(nrows):
        if row_deg[i] is None:
            row_deg[i] = base_deg
            # re-propagate for columns hanging off this row
            for j in range(ncols):
                if col_deg[j] is None and not entries[i][j].is_zero():
                    col_deg[j] = base_deg + entries[i][j].degree
    for j in range(ncols):
        if col_deg[j] is None:
            col_deg[j] = base_deg
    return row_deg, col_deg


class ModulePresentation:
    """M = coker(relations: F_1 → F_0), the workhorse value of the package.

    Generators of M are the generators of F_0 (degrees .gen_degs); relations
    are the columns of the matrix.  No minimality or Gröbner property is
    assumed here — algorithms normalize as needed.
    """

    __slots__ = ("ring", "matrix")

    def __init__(self, matrix):
        self.ring = matrix.ring
        self.matrix = matrix

    # -- constructors -----------------------------------------------------------

    @classmethod
    def free(cls, ring, gen_degs):
        f0 = GradedFreeModule(ring, gen_degs)
        return cls(GradedMatrix.zero(f0, GradedFreeModule(ring, [])))

    @classmethod
    def cyclic(cls, ring, gens, gen_deg=0):
        """S(-gen_deg)/⟨gens⟩ presented by a single row."""
        gens = [g if isinstance(g, Polynomial) else ring.parse(str(g)) for g in gens]
        f0 = GradedFreeModule(ring, [gen_deg])
        src = GradedFreeModule(ring, [gen_deg + g.degree for g in gens])
        return cls(GradedMatrix(f0, src, [list(gens)]))

    @classmethod
    def from_relations(cls, ring, gen_degs, rel_vectors):
        f0 = GradedFreeModule(ring, gen_degs)
        return cls(GradedMatrix.from_columns(f0, rel_vectors))

    # -- basic data ---------------------------------------------------------------

    @property
    def gen_degs(self):
        return self.matrix.target.gen_degs

    @property
    def ngens(self):
        return self.matrix.target.rank

    @property
    def nrels(self):
        return self.matrix.source.rank

    def relations(self):
        return self.matrix.columns()

    def free_cover(self):
        return self.matrix.target

    # -- operations ------------------------------------------------------------------

    def twist(self, n):
        return ModulePresentation(self.matrix.twist(n))

    def direct_sum(self, other):
        return ModulePresentation(self.matrix.direct_sum(other.matrix))

    def substitute_zero(self, var_index):
        """Image of the presentation in the quotient ring with one variable
        set to zero (a presentation of M/(x_i)M over the smaller ring)."""
        new_ring = None
        rows = []
        for row in self.matrix.entries:
            new_row = []
            for e in row:
                q, new_ring = e.substitute_zero(var_index)
                new_row.append(q)
            rows.append(new_row)
        t = GradedFreeModule(new_ring, self.matrix.target.gen_degs)
        s = GradedFreeModule(new_ring, self.matrix.source.gen_degs)
        cols_keep = [j for j in range(s.rank)
                     if any(rows[i][j] for i in range(t.rank))]
        m = GradedMatrix(t, s, rows, check=False).submatrix(range(t.rank), cols_keep)
        return ModulePresentation(m)

    def __repr__(self):
        return "coker(%r <- %r)" % (self.matrix.target, self.matrix.source)


def tensor_presentation(A, B):
    """A ⊗_S B as a presentation: generators g_i ⊗ h_j in degree a_i + b_j,
    relations (rel ⊗ h_j) for every relation of A and (g_i ⊗ rel) for every
    relation of B."""
    ring = A.ring
    if B.ring != ring:
        raise ValueError("tensor factors over different rings")
    na, nb = A.ngens, B.ngens
    degs = [a + b for a in A.gen_degs for b in B.gen_degs]
    f0 = GradedFreeModule(ring, degs)

    def slot(i, j):
        return i * nb + j

    cols = []
    for r in A.relations():
        for j in range(nb):
            cols.append({(slot(i, j), m): c for (i, m), c in r.items()})
    for i in range(na):
        for r in B.relations():
            cols.append({(slot(i, j), m): c for (j, m), c in r.items()})
    return ModulePresentation(GradedMatrix.from_columns(f0, cols, source_degs=None))
