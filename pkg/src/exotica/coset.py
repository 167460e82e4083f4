"""Certified coset enumeration for finitely presented groups.

HLT-style relator scanning: cosets are defined at the first undefined table
entry encountered, coincidences are processed incrementally through a
union-find with a merge queue, and the budget bounds the total number of
cosets ever defined.  A completed table is a permutation representation and is
audited (every entry filled, mutually inverse entries consistent, every
relator closing at every coset, subgroup generators fixing coset 0) before it
is reported; enumeration that runs out of budget reports exhaustion and
certifies nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .presentations import Presentation
from .words import Word

DEFAULT_BUDGET = 200_000


class CertificateError(RuntimeError):
    """A completed table failed its audit (internal invariant violation)."""


class _Exhausted(Exception):
    pass


@dataclass(frozen=True)
class CosetTable:
    """Result of an enumeration.

    When complete, ``table[c][2*i]`` is the coset reached from ``c`` by
    generator i and ``table[c][2*i + 1]`` the one reached by its inverse;
    coset 0 is the subgroup coset and numbering follows the first-encountered
    (scan) order.  When exhausted, the table is withheld: no conclusion.
    """

    generators: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    status: str  # "complete" | "exhausted"
    cosets_defined: int
    budget: int

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def index(self) -> int | None:
        return len(self.table) if self.complete else None

    def _column(self, sym: str, sign: int) -> int:
        i = self.generators.index(sym)
        return 2 * i if sign == 1 else 2 * i + 1

    def act(self, coset: int, sym: str, sign: int = 1) -> int:
        return self.table[coset][self._column(sym, sign)]

    def trace(self, coset: int, word: Word) -> int:
        for sym, sign in word:
            coset = self.act(coset, sym, sign)
        return coset

    def audit(self, presentation: Presentation, subgroup_gens: Sequence[Word] = ()) -> None:
        """Raise CertificateError unless this table certifies its index."""
        if not self.complete:
            raise CertificateError("only complete tables certify anything")
        n = len(self.table)
        width = 2 * len(self.generators)
        for row in self.table:
            if len(row) != width or any(not (0 <= e < n) for e in row):
                raise CertificateError("table entry out of range or missing")
        for c in range(n):
            for x in range(width):
                if self.table[self.table[c][x]][x ^ 1] != c:
                    raise CertificateError("mutually inverse entries inconsistent")
        for rel in presentation.relators:
            for c in range(n):
                if self.trace(c, rel) != c:
                    raise CertificateError("relator does not close at every coset")
        for w in subgroup_gens:
            if self.trace(0, w) != 0:
                raise CertificateError("subgroup generator does not fix coset 0")


def coset_enumerate(
    presentation: Presentation,
    subgroup_gens: Sequence[Word] = (),
    budget: int = DEFAULT_BUDGET,
) -> CosetTable:
    """Enumerate cosets of the subgroup generated by the given words."""
    if budget <= 0:
        raise ValueError("budget must be at least 1")
    for w in subgroup_gens:
        unknown = w.symbols() - set(presentation.generators)
        if unknown:
            raise ValueError(f"subgroup word uses unknown generators {sorted(unknown)}")

    gens = presentation.generators
    ncols = 2 * len(gens)
    col = {}
    for i, g in enumerate(gens):
        col[(g, 1)] = 2 * i
        col[(g, -1)] = 2 * i + 1
    rel_words = [tuple(col[lt] for lt in r) for r in presentation.relators]
    sub_words = [tuple(col[lt] for lt in w) for w in subgroup_gens]

    table: list[list[int | None]] = [[None] * ncols]
    parent = [0]
    defined = 1
    queue: list[int] = []

    def rep(k: int) -> int:
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def define(alpha: int, x: int) -> None:
        nonlocal defined
        if defined >= budget:
            raise _Exhausted
        nu = len(table)
        table.append([None] * ncols)
        parent.append(nu)
        defined += 1
        table[alpha][x] = nu
        table[nu][x ^ 1] = alpha

    def merge(k: int, lam: int) -> None:
        phi, psi = rep(k), rep(lam)
        if phi != psi:
            mu, nu = (phi, psi) if phi < psi else (psi, phi)
            parent[nu] = mu
            queue.append(nu)

    def coincidence(alpha: int, beta: int) -> None:
        merge(alpha, beta)
        at = 0
        while at < len(queue):
            gamma = queue[at]
            at += 1
            row = table[gamma]
            for x in range(ncols):
                delta = row[x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                existing = table[mu][x]
                if existing is not None:
                    merge(nu, existing)
                else:
                    back = table[nu][x ^ 1]
                    if back is not None:
                        merge(mu, back)
                    else:
                        table[mu][x] = nu
                        table[nu][x ^ 1] = mu
        queue.clear()

    def scan_and_fill(alpha: int, word: tuple[int, ...]) -> None:
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][word[i]]
                if nxt is None:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                nxt = table[b][word[j] ^ 1]
                if nxt is None:
                    break
                b = nxt
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    try:
        for w in sub_words:
            scan_and_fill(0, w)
        alpha = 0
        while alpha < len(table):
            if parent[alpha] != alpha:
                alpha += 1
                continue
            for w in rel_words:
                scan_and_fill(alpha, w)
                if parent[alpha] != alpha:
                    break
            if parent[alpha] == alpha:
                for x in range(ncols):
                    if table[alpha][x] is None:
                        define(alpha, x)
            alpha += 1
    except _Exhausted:
        return CosetTable(gens, (), "exhausted", defined, budget)

    live = [a for a in range(len(table)) if parent[a] == a]
    compact = {a: i for i, a in enumerate(live)}
    rows = [[compact[rep(table[a][x])] for x in range(ncols)] for a in live]

    # renumber in first-encountered scan order (row by row, column by column)
    order: list[int] = [0]
    number = {0: 0}
    at = 0
    while at < len(order):
        c = order[at]
        at += 1
        for x in range(ncols):
            d = rows[c][x]
            if d not in number:
                number[d] = len(order)
                order.append(d)
    final = tuple(
        tuple(number[rows[c][x]] for x in range(ncols)) for c in order
    )

    result = CosetTable(gens, final, "complete", defined, budget)
    result.audit(presentation, subgroup_gens)
    return result


@dataclass(frozen=True)
class TrivialityResult:
    """Outcome of a certified triviality check: never a claim without a
    complete, audited table."""

    status: str  # "trivial" | "finite" | "unknown"
    order: int | None = None
    table: CosetTable | None = field(default=None, compare=False, repr=False)

    def __str__(self) -> str:
        if self.status == "finite":
            return f"Finite({self.order})"
        return self.status.capitalize()


def is_trivial(presentation: Presentation, budget: int = DEFAULT_BUDGET) -> TrivialityResult:
    table = coset_enumerate(presentation, (), budget)
    if not table.complete:
        return TrivialityResult("unknown")
    n = table.index
    if n == 1:
        return TrivialityResult("trivial", 1, table)
    return TrivialityResult("finite", n, table)


def group_order(presentation: Presentation, budget: int = DEFAULT_BUDGET) -> int | None:
    """Order of the presented group if enumeration completes, else None."""
    table = coset_enumerate(presentation, (), budget)
    return table.index
