"""Claim-by-claim verification: a catalog of numeric regression claims and a
runner that executes them against the engine.

A Claim names an operation, its arguments (fixtures and standard sheaves by
reference), and the expected value.  run_scenario executes a list of claims in
order and produces a Report whose entries carry both the expected and the
computed value verbatim, so a failure is diagnosable from the report alone.
The shipped catalog (data/claims.json) is the executable record of every
headline number this package reproduces; `paper_suite` runs it.

All comparisons are exact — integers, strings, and integer tables — never
approximate.
"""

import json
import time
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from importlib import resources

from ._version import __version__
from .fields import QQ, PrimeField
from .groebner import annihilator, buchberger, ModuleOrder
from .gradedmod import GradedFreeModule, ModulePresentation
from .homology import (
    QuotientBasis,
    hilbert_polynomial,
    resolve,
)
from .cohomology import (
    beilinson_table,
    dual_sheaf,
    saturate_presentation,
    serre_duality_check,
    sheaf_cohomology,
    sheaf_ext,
    sheaf_ext_dim,
)
from . import fixtures as fx
from .walls import walls

SCHEMA = "sheafcalc-report/1"


# ---------------------------------------------------------------------------
# claims and reports


@dataclass(frozen=True)
class Claim:
    """One verifiable statement: an operation, arguments, expected value.

    ``citation`` is free descriptive text (what the claim asserts, in words);
    it is carried into reports so output is self-documenting.  ``requires_prime``
    restricts a claim to runs over one specific prime field; ``prime_ok``
    marks whether the claim is meaningful under a prime-field cross-check run;
    ``slow`` tags the handful of claims that take tens of seconds.
    """

    id: str
    op: str
    args: dict
    expected: object
    citation: str = ""
    requires_prime: int = 0
    prime_ok: bool = True
    slow: bool = False

    def to_dict(self):
        out = {
            "id": self.id,
            "op": self.op,
            "args": self.args,
            "expected": self.expected,
            "citation": self.citation,
        }
        if self.requires_prime:
            out["requires_prime"] = self.requires_prime
        if not self.prime_ok:
            out["prime_ok"] = False
        if self.slow:
            out["slow"] = True
        return out

    @classmethod
    def from_dict(cls, d):
        return cls(
            id=d["id"],
            op=d["op"],
            args=d["args"],
            expected=d["expected"],
            citation=d.get("citation", ""),
            requires_prime=d.get("requires_prime", 0),
            prime_ok=d.get("prime_ok", True),
            slow=d.get("slow", False),
        )


@dataclass(frozen=True)
class ClaimResult:
    id: str
    status: str                 # "pass" | "fail" | "skipped"
    expected: object
    computed: object
    seconds: float
    citation: str = ""
    note: str = ""

    def to_dict(self):
        return {
            "id": self.id,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "seconds": self.seconds,
            "citation": self.citation,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            id=d["id"],
            status=d["status"],
            expected=d["expected"],
            computed=d["computed"],
            seconds=d["seconds"],
            citation=d.get("citation", ""),
            note=d.get("note", ""),
        )


@dataclass(frozen=True)
class Report:
    """Consolidated run result; serializes losslessly to and from JSON."""

    results: tuple
    field_name: str = "QQ"
    widen: int = 0
    version: str = __version__
    schema: str = SCHEMA

    @property
    def passed(self):
        return sum(1 for r in self.results if r.status == "pass")

    @property
    def failed(self):
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def skipped(self):
        return sum(1 for r in self.results if r.status == "skipped")

    @property
    def ok(self):
        return self.failed == 0

    def to_dict(self):
        return {
            "schema": self.schema,
            "version": self.version,
            "field": self.field_name,
            "widen": self.widen,
            "claims": [r.to_dict() for r in self.results],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            results=tuple(ClaimResult.from_dict(r) for r in d["claims"]),
            field_name=d["field"],
            widen=d["widen"],
            version=d["version"],
            schema=d["schema"],
        )

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def text(self):
        lines = []
        for r in self.results:
            if r.status == "pass":
                lines.append("PASS  %-28s %s" % (r.id, _brief(r.computed)))
            elif r.status == "skipped":
                lines.append("SKIP  %-28s %s" % (r.id, r.note))
            else:
                lines.append(
                    "FAIL  %-28s expected %r, computed %r"
                    % (r.id, r.expected, r.computed)
                )
        lines.append(
            "%d passed, %d failed, %d skipped"
            % (self.passed, self.failed, self.skipped)
        )
        return "\n".join(lines)


def _brief(value):
    s = json.dumps(value, sort_keys=True) if not isinstance(value, str) else value
    return s if len(s) <= 60 else s[:57] + "..."


# ---------------------------------------------------------------------------
# object references
#
# Claim arguments name modules by small JSON references:
#   {"fixture": NAME}                       a catalog fixture's module
#   {"planar_model": NAME, "drop_var": i}   the fixture pushed into its plane
#   {"line": [i, j]}                        O_L for the line {x_i = x_j = 0}
#   {"skyscraper_at": [a,b,c,d]}            a point's structure sheaf
#   {"structure": true}                     the ambient structure sheaf
# Any reference accepts "twist": k for the twisted version.


def resolve_module(ref, field=QQ):
    if not isinstance(ref, dict):
        raise ValueError("module reference must be an object, got %r" % (ref,))
    if "fixture" in ref:
        mod = fx.fixture_module(ref["fixture"], field)
    elif "planar_model" in ref:
        base = fx.fixture_module(ref["planar_model"], field)
        mod = fx.planar_model(base, ref.get("drop_var", 0))
    elif "line" in ref:
        ring = fx.p3_ring(field)
        cut = [ring.gens()[i] for i in ref["line"]]
        mod = ModulePresentation.cyclic(ring, cut, gen_deg=0)
    elif "skyscraper_at" in ref:
        mod = fx.skyscraper(fx.p3_ring(field), tuple(ref["skyscraper_at"]))
    elif "structure" in ref:
        mod = ModulePresentation.free(fx.p3_ring(field), [0])
    else:
        raise ValueError("unrecognized module reference %r" % (ref,))
    twist = ref.get("twist", 0)
    return mod.twist(twist) if twist else mod


# ---------------------------------------------------------------------------
# operations


def _line_model_hf(d, line_twists, skyscraper_degs):
    """dim at degree d of (+) O_L(t) (+) skyscrapers, L a line in P^3."""
    total = 0
    for t in line_twists:
        total += max(d + t + 1, 0)
    for s in skyscraper_degs:
        total += 1 if d >= s else 0
    return total


def _window(args, ctx):
    """The declared window plus the context widening.  Ops verify over the
    widened range but report only the declared range, so a widened run must
    reproduce the unwidened report exactly."""
    lo, hi = args["window"]
    return lo, hi + ctx.widen, hi


class _Context:
    def __init__(self, field, widen):
        self.field = field
        self.widen = widen
        self.settle = 3 + widen


def _op_hilbert_polynomial(args, ctx):
    return hilbert_polynomial(resolve_module(args["module"], ctx.field)).text()


def _op_dual_hilbert_polynomial(args, ctx):
    mod = resolve_module(args["module"], ctx.field)
    return hilbert_polynomial(dual_sheaf(mod)).text()


def _op_betti(args, ctx):
    table = resolve(resolve_module(args["module"], ctx.field)).betti()
    return {
        str(i): {str(j): n for j, n in sorted(row.items())}
        for i, row in sorted(table.items())
    }


def _op_regularity(args, ctx):
    return resolve(resolve_module(args["module"], ctx.field)).regularity()


def _op_generator_degrees(args, ctx):
    return sorted(resolve_module(args["module"], ctx.field).gen_degs)


def _op_hilbert_values(args, ctx):
    qb = QuotientBasis(resolve_module(args["module"], ctx.field))
    lo, hi, report_hi = _window(args, ctx)
    values = [qb.dim(d) for d in range(lo, hi + 1)]
    return values[: report_hi - lo + 1]


def _op_annihilator_equals(args, ctx):
    mod = resolve_module(args["module"], ctx.field)
    ring = mod.ring
    stated = [ring.parse(t) for t in args["ideal"]]
    free1 = GradedFreeModule(ring, [0])
    stated_vecs = [{(0, m): c for m, c in g.terms.items()} for g in stated]
    gb = buchberger(stated_vecs, free1, ModuleOrder(ring.order, "POT"))
    return annihilator(mod).same_submodule(gb)


def _op_cohomology(args, ctx):
    mod = resolve_module(args["module"], ctx.field)
    return sheaf_cohomology(mod, args["q"], args["d"])


def _op_sheaf_ext(args, ctx):
    M = resolve_module(args["M"], ctx.field)
    N = resolve_module(args["N"], ctx.field)
    return sheaf_ext_dim(M, N, args["i"], settle=ctx.settle)


def _op_jumpext(args, ctx):
    point = tuple(args["point"]) if "point" in args else None
    return fx.jumpext_case(args["fixture"], point=point, field=ctx.field)


def _op_serre_pairing(args, ctx):
    data = fx.load_fixture(args["fixture"], ctx.field)
    sky = fx.skyscraper(data["module"].ring, data["point"])
    return serre_duality_check(sky, data["module"], args["i"])


def _op_line_split(args, ctx):
    return fx.line_split_parts(fx.fixture_module(args["fixture"], ctx.field))


def _op_tor_line_hf(args, ctx):
    mod = fx.fixture_module(args["fixture"], ctx.field)
    pres = fx.tor_line_presentation(mod, args["i"])
    if args.get("saturate"):
        pres = saturate_presentation(pres)
    qb = QuotientBasis(pres)
    lo, hi, report_hi = _window(args, ctx)
    module_hf = [qb.dim(d) for d in range(lo, hi + 1)]
    model_hf = [
        _line_model_hf(d, args.get("line_twists", []), args.get("skyscraper_degs", []))
        for d in range(lo, hi + 1)
    ]
    keep = report_hi - lo + 1
    return {
        "module_hf": module_hf[:keep],
        "model_hf": model_hf[:keep],
        "equal": module_hf == model_hf,
    }


def _op_beilinson(args, ctx):
    bt = beilinson_table(fx.fixture_module(args["fixture"], ctx.field))
    return {
        "signature": list(bt.signature),
        "type": bt.type,
        "h0_minus1": bt.h0_minus1,
        "h1": bt.h1,
    }


def _op_sections_profile(args, ctx):
    mod = fx.fixture_module(args["fixture"], ctx.field)
    ann = annihilator(mod)
    min_deg = min(sum(mono) for v in ann.elements for (_c, mono) in v)
    return {
        "h0": sheaf_cohomology(mod, 0, 0),
        "h0_minus1": sheaf_cohomology(mod, 0, -1),
        "h1": sheaf_cohomology(mod, 1, 0),
        "linear_annihilator": min_deg == 1,
    }


def _op_base_change_ext(args, ctx):
    mod = fx.fixture_module(args["fixture"], ctx.field)
    planar = fx.planar_model(mod, args.get("drop_var", 0))
    ext1_h = sheaf_ext_dim(planar, planar, 1, settle=ctx.settle)
    hom_tw = sheaf_ext_dim(planar, planar.twist(1), 0, settle=ctx.settle)
    ext2_h = sheaf_ext_dim(planar, planar, 2, settle=ctx.settle)
    ext1_p3 = sheaf_ext_dim(mod, mod, 1, settle=ctx.settle)
    return {
        "ext1_h": ext1_h,
        "hom_tw": hom_tw,
        "ext2_h": ext2_h,
        "ext1_p3": ext1_p3,
        "additive": ext2_h == 0 and ext1_p3 == ext1_h + hom_tw,
    }


def _op_pushforward_nodes(args, ctx):
    cert = fx.pushforward_image_oracle(ctx.field)
    return {
        "image_quartic": cert["image_quartic"].text(),
        "length": cert["length"],
        "distinct": cert["distinct"],
        "node_count": cert["node_count"],
    }


def _op_walls(args, ctx):
    found = walls(args["d"], args["chi"])
    return [w.text() for w in found]


_OPS = {
    "hilbert_polynomial": _op_hilbert_polynomial,
    "dual_hilbert_polynomial": _op_dual_hilbert_polynomial,
    "betti": _op_betti,
    "regularity": _op_regularity,
    "generator_degrees": _op_generator_degrees,
    "hilbert_values": _op_hilbert_values,
    "annihilator_equals": _op_annihilator_equals,
    "cohomology": _op_cohomology,
    "sheaf_ext": _op_sheaf_ext,
    "jumpext": _op_jumpext,
    "serre_pairing": _op_serre_pairing,
    "line_split": _op_line_split,
    "tor_line_hf": _op_tor_line_hf,
    "beilinson": _op_beilinson,
    "sections_profile": _op_sections_profile,
    "base_change_ext": _op_base_change_ext,
    "pushforward_nodes": _op_pushforward_nodes,
    "walls": _op_walls,
}


def operation_names():
    return sorted(_OPS)


# ---------------------------------------------------------------------------
# runner


def _canon(value):
    """Normalize a computed value to its JSON image (tuples become lists)."""
    if isinstance(value, dict):
        return {str(k): _canon(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canon(v) for v in value]
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return int(value)
    return value


def run_claim(claim, field=QQ, widen=0):
    """Execute one claim; never raises for a wrong value, only for a bad op."""
    if claim.op not in _OPS:
        raise ValueError("unknown operation %r in claim %r" % (claim.op, claim.id))
    prime = getattr(field, "characteristic", 0)
    if claim.requires_prime and prime != claim.requires_prime:
        return ClaimResult(
            claim.id, "skipped", claim.expected, None, 0.0, claim.citation,
            "needs --field Fp:%d" % claim.requires_prime,
        )
    if prime and not claim.prime_ok:
        return ClaimResult(
            claim.id, "skipped", claim.expected, None, 0.0, claim.citation,
            "not meaningful over a prime field",
        )
    ctx = _Context(field, widen)
    start = time.perf_counter()
    try:
        computed = _canon(_OPS[claim.op](claim.args, ctx))
        note = ""
    except Exception as exc:                      # a crash is a failed claim
        computed = "error: %s" % exc
        note = type(exc).__name__
    seconds = time.perf_counter() - start
    status = "pass" if computed == claim.expected else "fail"
    return ClaimResult(
        claim.id, status, claim.expected, computed, seconds, claim.citation, note
    )


def run_scenario(claims, field=QQ, widen=0):
    """Run claims in their given order and consolidate the report."""
    seen = set()
    for c in claims:
        if c.id in seen:
            raise ValueError("duplicate claim id %r" % c.id)
        seen.add(c.id)
    results = tuple(run_claim(c, field=field, widen=widen) for c in claims)
    return Report(results=results, field_name=field.name, widen=widen)


# ---------------------------------------------------------------------------
# the shipped catalog


def load_claims(path=None):
    """Claims from a JSON file; the packaged catalog when no path is given."""
    if path is None:
        text = resources.files(__package__).joinpath("data/claims.json").read_text()
    else:
        with open(path) as handle:
            text = handle.read()
    doc = json.loads(text)
    claims = [Claim.from_dict(d) for d in doc["claims"]]
    ids = [c.id for c in claims]
    if len(set(ids)) != len(ids):
        raise ValueError("claim catalog has duplicate ids")
    return claims


def paper_suite(field=QQ, widen=0, skip_slow=False):
    """Run the shipped claim catalog.

    ``field`` may be QQ or a PrimeField for a modular cross-check run (claims
    that are not meaningful there are reported as skipped).  ``widen`` grows
    every verification window; the results must not change.  ``skip_slow``
    drops the few tens-of-seconds claims, for quick regression runs.
    """
    claims = load_claims()
    if skip_slow:
        claims = [c for c in claims if not c.slow]
    return run_scenario(claims, field=field, widen=widen)
