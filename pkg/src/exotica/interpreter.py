"""Executor for construction scripts, with JSON/text verification reports.

Statements run in order.  Assertion comparison failures never halt the run;
budget-limited triviality checks that exhaust their budget record Unknown
status (never Pass).  Any runtime error (bad types, unknown operation) aborts
the script with the source location and maps to exit code 3.

Exit codes: 0 all pass, 1 any fail, 2 no fail but some unknown, 3 error.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import constructions, dsl
from .coset import DEFAULT_BUDGET, is_trivial
from .deduction import DeductionReport, Fact, deduce
from .fourmanifolds import (
    FiberSumDescription,
    InvariantRecord,
    adjunction_genus,
    blow_up,
    connected_sum,
    fiber_sum,
    freedman_type,
    hyperbolic_blowup_lattice,
    projective_blowup_lattice,
    record,
    standard,
    usher_minimality,
)
from .presentations import (
    BoundaryData,
    GluingMap,
    Presentation,
    abelianize,
    glue_fiber_sum,
    quotient,
    tietze_eliminate,
)
from .surfaces import lefschetz_pi1
from .textform import parse_word
from .words import Word


class ScriptError(RuntimeError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{line}:{col}: {message}" if line else message)
        self.line = line
        self.col = col


class _UnknownType:
    """Budget-limited checks that certify nothing evaluate to this."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"


UNKNOWN = _UnknownType()


@dataclass
class ExecConfig:
    budget: int = DEFAULT_BUDGET
    parallel_asserts: bool = False


@dataclass
class AssertionResult:
    index: int
    text: str
    status: str  # "pass" | "fail" | "unknown"
    detail: str
    citation: str | None
    elapsed_ms: float


@dataclass
class VerificationReport:
    script: str
    assertions: list[AssertionResult] = field(default_factory=list)
    error: str | None = None

    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "unknown": 0}
        for a in self.assertions:
            counts[a.status] += 1
        return counts

    def exit_code(self) -> int:
        if self.error is not None:
            return 3
        counts = self.summary()
        if counts["fail"]:
            return 1
        if counts["unknown"]:
            return 2
        return 0

    def to_dict(self, stable: bool = False) -> dict:
        out: dict = {
            "script": self.script,
            "assertions": [
                {
                    "index": a.index,
                    "text": a.text,
                    "status": a.status,
                    "detail": a.detail,
                    "citation": a.citation,
                    "elapsed_ms": 0.0 if stable else a.elapsed_ms,
                }
                for a in self.assertions
            ],
            "summary": self.summary(),
        }
        if self.error is not None:
            out["error"] = self.error
        if not stable:
            out["generated_at"] = datetime.now(timezone.utc).isoformat()
        return out

    def to_json(self, stable: bool = False) -> str:
        return json.dumps(self.to_dict(stable), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"script: {self.script}"]
        for a in self.assertions:
            mark = {"pass": "ok", "fail": "FAIL", "unknown": "unknown"}[a.status]
            line = f"  [{mark:>7}] {a.text}"
            if a.detail:
                line += f"  -- {a.detail}"
            if a.citation:
                line += f"  ({a.citation})"
            lines.append(line)
        if self.error is not None:
            lines.append(f"error: {self.error}")
        counts = self.summary()
        lines.append(
            f"summary: {counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['unknown']} unknown"
        )
        return "\n".join(lines) + "\n"


# -- value adaptation ------------------------------------------------------------


def _as_presentation(value, where: str) -> Presentation:
    if isinstance(value, BoundaryData):
        return value.presentation
    if isinstance(value, Presentation):
        return value
    raise TypeError(f"{where}: expected a presentation, got {type(value).__name__}")


def _as_word(value, presentation: Presentation, where: str) -> Word:
    if isinstance(value, Word):
        w = value
    elif isinstance(value, str):
        w = parse_word(value)
    else:
        raise TypeError(f"{where}: expected a word, got {type(value).__name__}")
    unknown = w.symbols() - set(presentation.generators)
    if unknown:
        raise ValueError(f"{where}: unknown generators {sorted(unknown)}")
    return w


def _as_record(value, where: str) -> InvariantRecord:
    if not isinstance(value, InvariantRecord):
        raise TypeError(f"{where}: expected an invariant record, got {type(value).__name__}")
    return value


class _Context:
    def __init__(self, config: ExecConfig):
        self.config = config
        self.budget = config.budget
        self._enumeration_cache: dict = {}

    def triviality(self, presentation: Presentation, budget: int | None = None):
        key = (presentation.generators, tuple(r.letters for r in presentation.relators),
               budget or self.budget)
        if key not in self._enumeration_cache:
            self._enumeration_cache[key] = is_trivial(presentation, key[2])
        return self._enumeration_cache[key]


def _builtin_trivial(ctx: _Context, g, budget: int | None = None):
    result = ctx.triviality(_as_presentation(g, "trivial"), budget)
    if result.status == "trivial":
        return True
    if result.status == "finite":
        return False
    return UNKNOWN


def _builtin_order(ctx: _Context, g, budget: int | None = None):
    result = ctx.triviality(_as_presentation(g, "order"), budget)
    return UNKNOWN if result.status == "unknown" else result.order


def _builtin_with_pi1(ctx: _Context, rec, g):
    rec = _as_record(rec, "with_pi1")
    result = ctx.triviality(_as_presentation(g, "with_pi1"))
    if result.status != "trivial":
        raise ValueError(
            f"with_pi1: group not certified trivial (status {result.status}); "
            "raise the budget or fix the presentation"
        )
    return rec.simply_connected()


def _builtin_invariants(ctx: _Context, **fields):
    flags = fields.pop("flags", ())
    parity = fields.pop("parity", "unknown")
    allowed = {"e", "sigma", "b1", "c1sq", "chi_h"}
    unknown = set(fields) - allowed
    if unknown:
        raise ValueError(f"invariants: unknown keys {sorted(unknown)}")
    return record("invariants", parity=parity, flags=flags, autonamed=True, **fields)


def _builtin_usher_description(
    ctx: _Context, manifold, sphere, bundle, other=None, other_minimal=None
):
    name = manifold.name if isinstance(manifold, InvariantRecord) else str(manifold)
    return FiberSumDescription(
        name, bool(sphere), bool(bundle), other,
        None if other_minimal is None else bool(other_minimal),
    )


def _builtin_deduce(ctx: _Context, *items):
    for item in items:
        if not isinstance(item, (InvariantRecord, FiberSumDescription, Fact)):
            raise TypeError(f"deduce: cannot use {type(item).__name__}")
    return deduce(items)


def _builtin_concludes(ctx: _Context, report, fact_text):
    if not isinstance(report, DeductionReport):
        raise TypeError("concludes: first argument must be a deduction report")
    return report.concludes(str(fact_text))


def _builtin_van_kampen(ctx: _Context, a, b, glue, kill_meridians=True):
    if not isinstance(a, BoundaryData) or not isinstance(b, BoundaryData):
        raise TypeError("van_kampen: first two arguments must carry boundary data")
    if not isinstance(glue, GluingMap):
        raise TypeError("van_kampen: third argument must be a gluing")
    return glue_fiber_sum(a, b, glue, bool(kill_meridians))


def _builtin_quotient(ctx: _Context, g, *words):
    p = _as_presentation(g, "quotient")
    return quotient(p, tuple(_as_word(w, p, "quotient") for w in words))


def _builtin_tietze(ctx: _Context, g, gen, defining):
    p = _as_presentation(g, "tietze_eliminate")
    return tietze_eliminate(p, str(gen), _as_word(defining, p, "tietze_eliminate"))


def _builtin_lefschetz(ctx: _Context, genus, cycles):
    if isinstance(cycles, (list, tuple)):
        words = [w if isinstance(w, Word) else parse_word(str(w)) for w in cycles]
    else:
        raise TypeError("lefschetz_pi1: cycles must be a list of words")
    return lefschetz_pi1(int(genus), words)


BUILTINS = {
    # group pipeline
    "abelianize": lambda ctx, g: abelianize(_as_presentation(g, "abelianize")),
    "trivial": _builtin_trivial,
    "order": _builtin_order,
    "quotient": _builtin_quotient,
    "tietze_eliminate": _builtin_tietze,
    "van_kampen": _builtin_van_kampen,
    "lefschetz_pi1": _builtin_lefschetz,
    "knot": lambda ctx, name: constructions.knot(str(name)),
    "zero_surgery": lambda ctx, k: constructions.zero_surgery(k),
    "cross_circle": lambda ctx, g: constructions.cross_circle(
        _as_presentation(g, "cross_circle")
    ),
    "bundled": lambda ctx, name: constructions.bundled(str(name)),
    # invariant pipeline
    "invariants": _builtin_invariants,
    "standard": lambda ctx, name: standard(str(name)),
    "blow_up": lambda ctx, a, n: blow_up(_as_record(a, "blow_up"), int(n)),
    "connected_sum": lambda ctx, a, b: connected_sum(
        _as_record(a, "connected_sum"), _as_record(b, "connected_sum")
    ),
    "fiber_sum": lambda ctx, a, b, g: fiber_sum(
        _as_record(a, "fiber_sum"), _as_record(b, "fiber_sum"), int(g)
    ),
    "freedman_type": lambda ctx, a: freedman_type(_as_record(a, "freedman_type")),
    "with_b1": lambda ctx, a, n: _as_record(a, "with_b1").with_b1(int(n)),
    "with_parity": lambda ctx, a, p: _as_record(a, "with_parity").with_parity(str(p)),
    "with_flag": lambda ctx, a, *fs: _as_record(a, "with_flag").with_flags(*fs),
    "with_pi1": _builtin_with_pi1,
    "e": lambda ctx, a: _as_record(a, "e").e,
    "sigma": lambda ctx, a: _as_record(a, "sigma").sigma,
    "b1": lambda ctx, a: _as_record(a, "b1").b1,
    "c1sq": lambda ctx, a: _as_record(a, "c1sq").c1sq,
    "chi_h": lambda ctx, a: _as_record(a, "chi_h").chi_h,
    "b2plus": lambda ctx, a: _as_record(a, "b2plus").b2_plus,
    "b2minus": lambda ctx, a: _as_record(a, "b2minus").b2_minus,
    "parity": lambda ctx, a: _as_record(a, "parity").parity.value,
    # lattices
    "blowup_lattice": lambda ctx, u, s, n: hyperbolic_blowup_lattice(str(u), str(s), int(n)),
    "projective_lattice": lambda ctx, n: projective_blowup_lattice(int(n)),
    "pairing": lambda ctx, lat, x, y: lat.pairing(x, y),
    "square": lambda ctx, lat, x: lat.square(x),
    "adjunction_genus": lambda ctx, lat, c, k: adjunction_genus(lat, c, k),
    # deduction
    "usher_description": _builtin_usher_description,
    "usher_minimality": lambda ctx, case: usher_minimality(case),
    "deduce": _builtin_deduce,
    "concludes": _builtin_concludes,
    "fact": lambda ctx, predicate, *names: Fact(str(predicate), tuple(map(str, names))),
}


# -- evaluation -------------------------------------------------------------------


def _lookup(env: dict, name: str, node) -> object:
    if name in env:
        return env[name]
    try:
        return constructions.bundled(name)
    except ValueError:
        raise ScriptError(f"undefined name {name!r}", node.line, node.col)


def _evaluate(node, env: dict, ctx: _Context):
    if isinstance(node, dsl.IntLit):
        return node.value
    if isinstance(node, dsl.StrLit):
        return node.value
    if isinstance(node, dsl.BoolLit):
        return node.value
    if isinstance(node, dsl.NameRef):
        return _lookup(env, node.name, node)
    if isinstance(node, dsl.ListLit):
        return tuple(_evaluate(i, env, ctx) for i in node.items)
    if isinstance(node, dsl.PresentationLit):
        return node.value
    if isinstance(node, dsl.GlueLit):
        return node.value
    if isinstance(node, dsl.RecordLit):
        fields = {}
        for key, expr in node.entries:
            value = _evaluate(expr, env, ctx)
            fields[key] = value
        try:
            return _builtin_invariants(ctx, **fields)
        except (ValueError, TypeError) as exc:
            raise ScriptError(str(exc), node.line, node.col)
    if isinstance(node, dsl.Call):
        fn = BUILTINS.get(node.func)
        if fn is None:
            raise ScriptError(f"unknown operation {node.func!r}", node.line, node.col)
        args = [_evaluate(a, env, ctx) for a in node.args]
        try:
            return fn(ctx, *args)
        except ScriptError:
            raise
        except Exception as exc:
            raise ScriptError(f"{node.func}: {exc}", node.line, node.col)
    raise ScriptError(f"cannot evaluate {type(node).__name__}", getattr(node, "line", 0), 0)


def _values_equal(actual, expected) -> bool:
    if isinstance(expected, str) and not isinstance(actual, str):
        return str(actual) == expected
    if isinstance(actual, str) and not isinstance(expected, str):
        return actual == str(expected)
    return actual == expected


def _run_assert(st: dsl.Assert, env: dict, ctx: _Context) -> tuple[str, str]:
    if st.budget is not None and st.budget != ctx.budget:
        sub = _Context(ctx.config)
        sub.budget = st.budget
        sub._enumeration_cache = ctx._enumeration_cache  # keys carry the budget
        ctx = sub
    actual = _evaluate(st.expr, env, ctx)
    if st.expected is None:
        if actual is UNKNOWN:
            return "unknown", "budget exhausted: no conclusion"
        if isinstance(actual, bool):
            return ("pass", "") if actual else ("fail", "assertion is false")
        raise ScriptError(
            f"assertion value must be true/false/unknown, got {type(actual).__name__}",
            st.line, st.col,
        )
    expected = _evaluate(st.expected, env, ctx)
    if actual is UNKNOWN or expected is UNKNOWN:
        return "unknown", "budget exhausted: no conclusion"
    if _values_equal(actual, expected):
        return "pass", ""
    return "fail", f"expected {expected!r}, actual {actual!r}"


def execute(script: dsl.Script, config: ExecConfig | None = None) -> VerificationReport:
    """Run a parsed script and collect the verification report."""
    config = config or ExecConfig()
    ctx = _Context(config)
    env: dict = {}
    report = VerificationReport(script=script.source_name)
    pending: list[tuple[int, dsl.Assert]] = []
    index = 0

    try:
        for st in script.statements:
            if isinstance(st, dsl.Let):
                value = _evaluate(st.expr, env, ctx)
                if isinstance(value, InvariantRecord) and value.autonamed:
                    value = value.with_name(st.name)
                env[st.name] = value
            elif isinstance(st, dsl.Assert):
                pending.append((index, st))
                index += 1
                if not config.parallel_asserts:
                    i, stmt = pending.pop()
                    start = time.perf_counter()
                    status, detail = _run_assert(stmt, env, ctx)
                    elapsed = (time.perf_counter() - start) * 1000.0
                    report.assertions.append(
                        AssertionResult(i, stmt.text, status, detail, stmt.cite,
                                        round(elapsed, 3))
                    )
        if config.parallel_asserts and pending:
            # all lets have run; asserts only read earlier bindings, so they
            # are independent and safe to evaluate concurrently
            def job(item):
                i, stmt = item
                start = time.perf_counter()
                status, detail = _run_assert(stmt, env, ctx)
                elapsed = (time.perf_counter() - start) * 1000.0
                return AssertionResult(i, stmt.text, status, detail, stmt.cite,
                                       round(elapsed, 3))

            with ThreadPoolExecutor() as pool:
                report.assertions.extend(pool.map(job, pending))
            report.assertions.sort(key=lambda a: a.index)
    except ScriptError as exc:
        report.error = str(exc)
    except Exception as exc:  # pragma: no cover - defensive
        report.error = f"internal error: {exc}"
    return report


def run_file(path, config: ExecConfig | None = None) -> VerificationReport:
    from pathlib import Path

    text = Path(path).read_text(encoding="utf-8")
    try:
        script = dsl.parse(text, source_name=Path(path).stem)
    except dsl.ParseError as exc:
        report = VerificationReport(script=Path(path).stem)
        report.error = f"parse error: {exc}"
        return report
    return execute(script, config)
