"""Forward-chaining deduction over named manifolds.

The gauge-theoretic inputs are axioms, not computations: each rule records
the classical result it invokes, the premises it consumed, and its conclusion,
so a report is a checkable chain of citations.  Chaining is monotone and
deterministic (facts are sorted canonically before rules run); contradictory
facts raise instead of producing a report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .fourmanifolds import (
    FiberSumDescription,
    Flag,
    InvariantRecord,
    Minimality,
    Parity,
    usher_minimality,
)


class ContradictionError(ValueError):
    pass


@dataclass(frozen=True)
class Fact:
    predicate: str
    subjects: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.predicate}({', '.join(self.subjects)})"


@dataclass(frozen=True)
class DeductionStep:
    rule: str
    premises: tuple[str, ...]
    conclusion: str
    citation: str


_OPPOSITES = [
    ("sw_trivial", "sw_nontrivial"),
    ("minimal", "not_minimal"),
]

_FLAG_PREDICATES = {
    Flag.SYMPLECTIC: "symplectic",
    Flag.SIMPLY_CONNECTED: "simply_connected",
    Flag.MINIMAL: "minimal",
    Flag.IRREDUCIBLE: "irreducible",
    Flag.SW_NONTRIVIAL: "sw_nontrivial",
    Flag.SW_TRIVIAL: "sw_trivial",
    Flag.STANDARD: "standard",
}


@dataclass
class DeductionReport:
    facts: list[Fact]
    steps: list[DeductionStep] = field(default_factory=list)

    def conclusions(self) -> list[str]:
        return [step.conclusion for step in self.steps]

    def concludes(self, fact_text: str) -> bool:
        return fact_text in self.conclusions()

    def render(self) -> str:
        lines = []
        for step in self.steps:
            premises = "; ".join(step.premises)
            lines.append(f"[{step.rule}] {premises}  =>  {step.conclusion}  ({step.citation})")
        return "\n".join(lines)


class _State:
    def __init__(self) -> None:
        self.records: dict[str, InvariantRecord] = {}
        self.descriptions: dict[str, FiberSumDescription] = {}
        self.facts: set[Fact] = set()
        self.report: DeductionReport | None = None

    def holds(self, predicate: str, *subjects: str) -> bool:
        return Fact(predicate, subjects) in self.facts

    def add(self, fact: Fact) -> bool:
        if fact in self.facts:
            return False
        for a, b in _OPPOSITES:
            other = b if fact.predicate == a else a if fact.predicate == b else None
            if other is not None and Fact(other, fact.subjects) in self.facts:
                raise ContradictionError(f"{fact} contradicts {Fact(other, fact.subjects)}")
        self.facts.add(fact)
        return True


def _seed(state: _State, items: Iterable) -> list[Fact]:
    seeded: list[Fact] = []
    for item in items:
        if isinstance(item, InvariantRecord):
            if item.name in state.records and state.records[item.name] != item:
                raise ValueError(f"two distinct records named {item.name!r}")
            state.records[item.name] = item
            for flag, predicate in _FLAG_PREDICATES.items():
                if flag in item.flags:
                    seeded.append(Fact(predicate, (item.name,)))
        elif isinstance(item, FiberSumDescription):
            state.descriptions[item.manifold] = item
        elif isinstance(item, Fact):
            seeded.append(item)
        else:
            raise TypeError(f"cannot deduce from {type(item).__name__}")
    seeded.sort(key=lambda f: (f.predicate, f.subjects))
    for fact in seeded:
        state.add(fact)
    return seeded


def _names(state: _State) -> list[str]:
    return sorted(state.records)


def _rule_taubes(state: _State):
    for name in _names(state):
        rec = state.records[name]
        if state.holds("symplectic", name) and rec.b1 is not None and rec.b2_plus > 1:
            yield (
                (f"symplectic({name})", f"b2+({name}) = {rec.b2_plus} > 1"),
                Fact("sw_nontrivial", (name,)),
                "Taubes: a symplectic manifold with b2+ > 1 has SW(+-K) = +-1",
            )


def _rule_sum_vanishing(state: _State):
    for name in _names(state):
        rec = state.records[name]
        if not state.holds("standard", name) or rec.sum_decomposition is None:
            continue
        p, q = rec.sum_decomposition
        if p >= 2:
            yield (
                (f"standard({name})", f"{name} = {p}CP2 # {q}CP2bar with {p} >= 2"),
                Fact("sw_trivial", (name,)),
                "connected-sum vanishing of the Seiberg-Witten invariant "
                "(both pieces have b2+ > 0)",
            )


def _rule_freedman(state: _State):
    names = _names(state)
    for a in names:
        for b in names:
            if a == b:
                continue
            if state.holds("standard", a) and not state.holds("standard", b):
                continue  # canonical direction: non-standard manifold first
            ra, rb = state.records[a], state.records[b]
            if not (state.holds("simply_connected", a) and state.holds("simply_connected", b)):
                continue
            if ra.parity == Parity.UNKNOWN or ra.parity != rb.parity:
                continue
            if ra.b1 is None or rb.b1 is None:
                continue
            if (ra.b2_plus, ra.b2_minus) != (rb.b2_plus, rb.b2_minus):
                continue
            yield (
                (
                    f"simply_connected({a})",
                    f"simply_connected({b})",
                    f"(b2+, b2-, parity) = ({ra.b2_plus}, {ra.b2_minus}, {ra.parity.value}) for both",
                ),
                Fact("homeomorphic", (a, b)),
                "Freedman: simply connected closed 4-manifolds are classified "
                "by their intersection forms",
            )


def _rule_sw_distinguishes(state: _State):
    for a in _names(state):
        for b in _names(state):
            if a != b and state.holds("sw_nontrivial", a) and state.holds("sw_trivial", b):
                yield (
                    (f"sw_nontrivial({a})", f"sw_trivial({b})"),
                    Fact("not_diffeomorphic", (a, b)),
                    "the Seiberg-Witten invariant is a diffeomorphism invariant",
                )


def _rule_usher(state: _State):
    for name in sorted(state.descriptions):
        if name not in state.records:
            continue
        case = state.descriptions[name]
        verdict: Minimality = usher_minimality(case)
        if verdict.verdict == "Minimal":
            yield (
                (
                    f"fiber sum description of {name}: no (-1)-sphere in a summand "
                    "complement, no S2-bundle summand with the fiber a section (case iii)",
                ),
                Fact("minimal", (name,)),
                "Usher: minimality of symplectic sums, case (iii)",
            )
        elif verdict.verdict == "NotMinimal":
            yield (
                (f"fiber sum description of {name}: a summand complement contains "
                 "a (-1)-sphere disjoint from the fiber (case i)",),
                Fact("not_minimal", (name,)),
                "Usher: minimality of symplectic sums, case (i)",
            )
        else:  # conditionally minimal: resolved by the other summand, if known
            other = verdict.depends_on
            if case.other_summand_minimal is True:
                yield (
                    (f"fiber sum description of {name}: S2-bundle summand with the "
                     f"fiber a section (case ii)", f"minimal({other}) declared"),
                    Fact("minimal", (name,)),
                    "Usher: minimality of symplectic sums, case (ii)",
                )
            elif case.other_summand_minimal is False:
                yield (
                    (f"fiber sum description of {name}: case (ii)",
                     f"not_minimal({other}) declared"),
                    Fact("not_minimal", (name,)),
                    "Usher: minimality of symplectic sums, case (ii)",
                )


def _rule_irreducible(state: _State):
    for name in _names(state):
        rec = state.records[name]
        if not (
            state.holds("minimal", name)
            and state.holds("symplectic", name)
            and state.holds("simply_connected", name)
            and rec.b1 is not None
        ):
            continue
        if rec.b2_plus > 1:
            citation = "minimality implies irreducibility for simply connected symplectic 4-manifolds with b2+ > 1"
        elif rec.b2_plus == 1:
            citation = "minimality implies irreducibility for simply connected symplectic 4-manifolds with b2+ = 1"
        else:
            continue
        yield (
            (f"minimal({name})", f"symplectic({name})", f"simply_connected({name})"),
            Fact("irreducible", (name,)),
            citation,
        )


def _rule_irreducible_vs_sum(state: _State):
    for a in _names(state):
        if not state.holds("irreducible", a):
            continue
        for b in _names(state):
            if a == b or not state.holds("standard", b):
                continue
            decomposition = state.records[b].sum_decomposition
            if decomposition is None:
                continue
            p, q = decomposition
            if p >= 1 and q >= 1:
                from .fourmanifolds import format_sum_name

                yield (
                    (f"irreducible({a})",
                     f"{b} is a nontrivial smooth connected sum ({format_sum_name(p, q)})"),
                    Fact("not_diffeomorphic", (a, b)),
                    "an irreducible manifold is not a nontrivial connected sum",
                )


def _rule_psc(state: _State):
    for name in _names(state):
        rec = state.records[name]
        if rec.b1 is None or rec.b2_plus != 1 or not state.holds("minimal", name):
            continue
        citation = (
            "for minimal symplectic 4-manifolds with b2+ = 1, positive scalar "
            "curvature is equivalent to being rational or ruled"
        )
        if state.holds("psc", name):
            yield (
                (f"psc({name})", f"minimal({name})", f"b2+({name}) = 1"),
                Fact("rational_or_ruled", (name,)),
                citation,
            )
        if state.holds("rational_or_ruled", name):
            yield (
                (f"rational_or_ruled({name})", f"minimal({name})", f"b2+({name}) = 1"),
                Fact("psc", (name,)),
                citation,
            )


def _rule_exotic(state: _State):
    for a in _names(state):
        for b in _names(state):
            if a == b:
                continue
            if state.holds("homeomorphic", a, b) and state.holds("not_diffeomorphic", a, b):
                yield (
                    (f"homeomorphic({a}, {b})", f"not_diffeomorphic({a}, {b})"),
                    Fact("exotic", (a, b)),
                    "an exotic copy: homeomorphic but not diffeomorphic",
                )


_RULES = [
    ("R1", _rule_taubes),
    ("R2", _rule_sum_vanishing),
    ("R3", _rule_freedman),
    ("R4", _rule_sw_distinguishes),
    ("R5", _rule_usher),
    ("R6", _rule_irreducible),
    ("R7", _rule_irreducible_vs_sum),
    ("R8", _rule_psc),
    ("R9", _rule_exotic),
]


def deduce(items: Sequence) -> DeductionReport:
    """Forward-chain the rule set over records, fiber-sum descriptions and
    plain facts; returns the ordered step report."""
    state = _State()
    _seed(state, items)
    report = DeductionReport(facts=sorted(state.facts, key=str))
    changed = True
    while changed:
        changed = False
        for rule_name, rule in _RULES:
            for premises, fact, citation in rule(state):
                if state.add(fact):
                    report.steps.append(DeductionStep(rule_name, premises, str(fact), citation))
                    changed = True
    return report
