"""Session files: a small text format declaring a ring and named objects.

A session file declares one ring, then ideals, matrices, modules, and fixture
references by name, plus optional command lines for the CLI to run.  Example:

    ring x, y, z, w order grevlex

    ideal I = x*y, x*z, y*w^2 + z*y^2
    module C = quotient I

    matrix D target 2,2,3 = [
        [0, -z^2],
        [0, y^2 + z*w],
        [1, 0],
    ]
    module M = coker D

    hilb C

Exactly one ring per file; every name is defined before use; every error
carries the 1-based line and column where it occurred.
"""

from .fields import QQ, PrimeField
from .poly import GREVLEX, LEX, PolyParseError, PolyRing
from .gradedmod import GradedFreeModule, GradedMatrix, ModulePresentation
from . import fixtures as fx


COMMAND_VERBS = (
    "gb", "res", "hilb", "cohom", "ext", "sheafext", "tor", "dual",
    "beilinson", "walls",
)


class SessionError(ValueError):
    """A session-file problem, located at a 1-based (line, col)."""

    def __init__(self, message, line, col):
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.line = line
        self.col = col


class SessionFile:
    """Parsed session: the ring, named objects in order, command lines.

    ``objects`` maps name -> ("ideal", [Polynomial]) | ("matrix", GradedMatrix)
    | ("module", ModulePresentation).  ``commands`` is a list of
    (verb, [args], line) tuples, validated but not executed.
    """

    def __init__(self, ring, objects, commands):
        self.ring = ring
        self.objects = objects
        self.commands = commands

    def kind(self, name):
        return self.objects[name][0]

    def __getitem__(self, name):
        return self.objects[name][1]

    def module(self, name):
        """The named object as a module presentation (ideals become their
        cyclic quotient, matrices their cokernel)."""
        kind, obj = self.objects[name]
        if kind == "module":
            return obj
        if kind == "matrix":
            return ModulePresentation(obj)
        return ModulePresentation.cyclic(self.ring, obj)

    def names(self):
        return list(self.objects)


def _line_col(text, offset):
    line = text.count("\n", 0, offset) + 1
    last = text.rfind("\n", 0, offset)
    return line, offset - last


class _Parser:
    def __init__(self, text, field=None, order=None):
        self.text = text
        self.ring = None
        self.field = field if field is not None else QQ
        self.order = order if order is not None else GREVLEX
        self.field_fixed = field is not None
        self.order_fixed = order is not None
        self.objects = {}
        self.commands = []

    def fail(self, message, offset):
        line, col = _line_col(self.text, offset)
        raise SessionError(message, line, col)

    # -- statement splitting ----------------------------------------------

    def statements(self):
        """Split into logical statements: physical lines, joined while any
        bracket stays open.  Yields (offset_of_first_char, statement_text)."""
        text = self.text
        pos = 0
        length = len(text)
        while pos < length:
            end = text.find("\n", pos)
            if end < 0:
                end = length
            depth = 0
            cursor = pos
            while True:
                chunk = text[cursor:end]
                for ch in chunk:
                    if ch == "[":
                        depth += 1
                    elif ch == "]":
                        depth -= 1
                if depth <= 0 or end >= length:
                    break
                cursor = end + 1
                end = text.find("\n", cursor)
                if end < 0:
                    end = length
            statement = text[pos:end]
            stripped = statement.strip()
            if stripped and not stripped.startswith("#"):
                first = pos + len(statement) - len(statement.lstrip())
                yield first, self._strip_comments(statement)
            pos = end + 1

    @staticmethod
    def _strip_comments(statement):
        out = []
        for piece in statement.split("\n"):
            hash_at = piece.find("#")
            out.append(piece if hash_at < 0 else piece[:hash_at])
        return "\n".join(out)

    # -- top level ----------------------------------------------------------

    def parse(self):
        for offset, statement in self.statements():
            head = statement.split(None, 1)[0]
            if head == "ring":
                self._ring_line(offset, statement)
            elif head in ("ideal", "matrix", "module", "fixture"):
                if self.ring is None:
                    self.fail("the ring must be declared first", offset)
                getattr(self, "_" + head + "_line")(offset, statement)
            elif head in COMMAND_VERBS:
                self._command_line(offset, statement)
            else:
                self.fail("unrecognized statement %r" % head, offset)
        if self.ring is None:
            self.fail("session file declares no ring", 0)
        return SessionFile(self.ring, self.objects, self.commands)

    def _register(self, name, kind, obj, offset):
        if not name.isidentifier():
            self.fail("bad object name %r" % name, offset)
        if name in self.objects:
            self.fail("duplicate definition of %r" % name, offset)
        self.objects[name] = (kind, obj)

    # -- ring ---------------------------------------------------------------

    def _ring_line(self, offset, statement):
        if self.ring is not None:
            self.fail("a session file has a single ring", offset)
        body = statement.split(None, 1)[1] if " " in statement.strip() else ""
        for key, extract in (("order", self._set_order), ("field", self._set_field)):
            at = body.find(key)
            if at >= 0:
                value = body[at + len(key):].split()
                if not value:
                    self.fail("missing value after %r" % key, offset + at)
                extract(value[0], offset + at)
                body = body[:at] + " ".join(value[1:])
        names = [n.strip() for n in body.split(",") if n.strip()]
        if not names:
            self.fail("ring declares no variables", offset)
        for n in names:
            if not n.isidentifier():
                self.fail("bad variable name %r" % n, offset)
        if len(set(names)) != len(names):
            self.fail("repeated variable name", offset)
        self.ring = PolyRing(tuple(names), field=self.field, order=self.order)

    def _set_order(self, token, offset):
        if token == "grevlex":
            order = GREVLEX
        elif token == "lex":
            order = LEX
        else:
            self.fail("unknown order %r (grevlex or lex)" % token, offset)
        if not self.order_fixed:
            self.order = order

    def _set_field(self, token, offset):
        if token == "QQ":
            field = QQ
        elif token.startswith("Fp:"):
            try:
                field = PrimeField(int(token[3:]))
            except ValueError as exc:
                self.fail(str(exc), offset)
        else:
            self.fail("unknown field %r (QQ or Fp:<p>)" % token, offset)
        if not self.field_fixed:
            self.field = field

    # -- polynomials with located errors -------------------------------------

    def _poly_at(self, offset, chunk):
        try:
            return self.ring.parse(chunk)
        except PolyParseError as exc:
            line, col = _line_col(self.text, offset + exc.pos)
            raise SessionError(str(exc), line, col)

    @staticmethod
    def _split_top(body, seps=","):
        """Split on separators at bracket depth 0, keeping piece offsets."""
        pieces = []
        depth = 0
        start = 0
        for i, ch in enumerate(body):
            if ch in "[(":
                depth += 1
            elif ch in "])":
                depth -= 1
            elif ch in seps and depth == 0:
                pieces.append((start, body[start:i]))
                start = i + 1
        pieces.append((start, body[start:]))
        return pieces

    def _eq_split(self, offset, statement):
        at = statement.find("=")
        if at < 0:
            self.fail("expected '='", offset)
        return statement[:at], offset + at + 1, statement[at + 1:]

    # -- ideal ----------------------------------------------------------------

    def _ideal_line(self, offset, statement):
        head, body_off, body = self._eq_split(offset, statement)
        words = head.split()
        if len(words) != 2:
            self.fail("expected 'ideal NAME = ...'", offset)
        gens = []
        for piece_off, piece in self._split_top(body):
            if piece.strip():
                gens.append(self._poly_at(body_off + piece_off, piece))
        if not gens:
            self.fail("ideal needs at least one generator", offset)
        self._register(words[1], "ideal", gens, offset)

    # -- matrix ----------------------------------------------------------------

    def _matrix_line(self, offset, statement):
        head, body_off, body = self._eq_split(offset, statement)
        words = head.split()
        if len(words) < 2:
            self.fail("expected 'matrix NAME [target ...] [source ...] = ...'", offset)
        name = words[1]
        target_degs, source_degs = None, None
        rest = words[2:]
        while rest:
            key = rest[0]
            if key not in ("target", "source") or len(rest) < 2:
                self.fail("expected 'target d1,d2,...' or 'source d1,...'", offset)
            try:
                degs = [int(v) for v in rest[1].split(",") if v.strip()]
            except ValueError:
                self.fail("bad degree list after %r" % key, offset)
            if key == "target":
                target_degs = degs
            else:
                source_degs = degs
            rest = rest[2:]

        stripped = body.strip()
        if not stripped.startswith("[") or not stripped.endswith("]"):
            self.fail("matrix body must be [...] rows", body_off)
        inner_off = body_off + body.find("[") + 1
        inner = stripped[1:-1]
        rows = []
        if inner.strip():
            for row_off, row_text in self._split_top(inner):
                row_stripped = row_text.strip()
                if not row_stripped:
                    continue
                if not row_stripped.startswith("[") or not row_stripped.endswith("]"):
                    self.fail("each matrix row must be [...]", inner_off + row_off)
                cell_off = inner_off + row_off + row_text.find("[") + 1
                cells = []
                for at, cell in self._split_top(row_stripped[1:-1]):
                    if cell.strip():
                        cells.append(self._poly_at(cell_off + at, cell))
                rows.append(cells)
        if rows and len({len(r) for r in rows}) != 1:
            self.fail("rows have unequal lengths", body_off)

        if not rows:
            if target_degs is None:
                self.fail("an empty matrix needs explicit target degrees", offset)
            target = GradedFreeModule(self.ring, target_degs)
            matrix = GradedMatrix.zero(target, GradedFreeModule(self.ring, source_degs or []))
        else:
            try:
                if target_degs is not None and source_degs is None:
                    source_degs = self._infer_across(rows, target_degs, rows=False)
                elif source_degs is not None and target_degs is None:
                    target_degs = self._infer_across(rows, source_degs, rows=True)
                if target_degs is None:
                    matrix = GradedMatrix.from_text(self.ring, rows)
                else:
                    matrix = GradedMatrix(
                        GradedFreeModule(self.ring, target_degs),
                        GradedFreeModule(self.ring, source_degs),
                        rows,
                    )
            except ValueError as exc:
                self.fail(str(exc), body_off)
        self._register(name, "matrix", matrix, offset)

    @staticmethod
    def _infer_across(entries, known_degs, rows):
        """Source degrees from target degrees (rows=False) or the reverse,
        reading the first nonzero entry of each column (resp. row)."""
        nrows, ncols = len(entries), len(entries[0])
        out = []
        for a in range(ncols if not rows else nrows):
            deg = None
            for b in range(nrows if not rows else ncols):
                entry = entries[b][a] if not rows else entries[a][b]
                if not entry.is_zero():
                    deg = (known_degs[b] + entry.degree) if not rows else (
                        known_degs[b] - entry.degree)
                    break
            if deg is None:
                raise ValueError(
                    "%s %d is zero; give explicit %s degrees"
                    % ("column" if not rows else "row", a,
                       "source" if not rows else "target")
                )
            out.append(deg)
        return out

    # -- module ----------------------------------------------------------------

    def _module_line(self, offset, statement):
        head, body_off, body = self._eq_split(offset, statement)
        words = head.split()
        if len(words) != 2:
            self.fail("expected 'module NAME = ...'", offset)
        parts = body.split()
        if not parts:
            self.fail("empty module definition", body_off)
        form = parts[0]
        if form == "coker":
            if len(parts) != 2:
                self.fail("expected 'coker MATRIXNAME'", body_off)
            obj = self._lookup(parts[1], "matrix", body_off)
            module = ModulePresentation(obj)
        elif form == "quotient":
            gen_deg = 0
            if len(parts) == 4 and parts[2] == "gen_deg":
                try:
                    gen_deg = int(parts[3])
                except ValueError:
                    self.fail("bad gen_deg value %r" % parts[3], body_off)
            elif len(parts) != 2:
                self.fail("expected 'quotient IDEALNAME [gen_deg d]'", body_off)
            obj = self._lookup(parts[1], "ideal", body_off)
            module = ModulePresentation.cyclic(self.ring, obj, gen_deg=gen_deg)
        else:
            self.fail("module forms are 'coker M' and 'quotient I'", body_off)
        self._register(words[1], "module", module, offset)

    def _lookup(self, name, kind, offset):
        if name not in self.objects:
            self.fail("unknown identifier %r" % name, offset)
        found_kind, obj = self.objects[name]
        if found_kind != kind:
            self.fail("%r is a %s, expected a %s" % (name, found_kind, kind), offset)
        return obj

    # -- fixture ----------------------------------------------------------------

    def _fixture_line(self, offset, statement):
        head, body_off, body = self._eq_split(offset, statement)
        words = head.split()
        if len(words) != 2:
            self.fail("expected 'fixture NAME = catalog_name'", offset)
        catalog_name = body.strip()
        if catalog_name not in fx.fixture_names():
            self.fail(
                "unknown fixture %r (catalog: %s)"
                % (catalog_name, ", ".join(fx.fixture_names())),
                body_off,
            )
        module = fx.fixture_module(catalog_name, self.ring.field)
        if module.ring.names != self.ring.names:
            self.fail(
                "fixture ring %r does not match the session ring %r"
                % (module.ring.names, self.ring.names),
                offset,
            )
        self._register(words[1], "module", module, offset)

    # -- commands ----------------------------------------------------------------

    def _command_line(self, offset, statement):
        words = statement.split()
        verb, args = words[0], words[1:]
        if verb != "walls":
            if not args:
                self.fail("command %r needs an object name" % verb, offset)
            if args[0] not in self.objects:
                self.fail("unknown identifier %r" % args[0], offset)
        line, _ = _line_col(self.text, offset)
        self.commands.append((verb, args, line))


def parse_session(text, field=None, order=None):
    """Parse session-file text into a SessionFile; raise SessionError with a
    1-based line and column on any problem.  ``field`` and ``order``, when
    given, override whatever the ring line declares (the CLI's flags)."""
    return _Parser(text, field=field, order=order).parse()


def load_session(path, field=None, order=None):
    with open(path) as handle:
        return parse_session(handle.read(), field=field, order=order)
