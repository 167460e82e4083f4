"""Characteristic-number bookkeeping for closed oriented 4-manifolds.

Records carry (e, sigma, b1, c1sq, chi_h, parity, flags) and stay consistent
with the almost-complex identities chi_h = (e + sigma)/4 and
c1sq = 3 sigma + 2 e whenever those values are present.  Cut-and-paste
operations (blowup, connected sum, generalized fiber sum) update them; the
first Betti number of a fiber sum is *not* arithmetic and stays pending until
it is asserted from a fundamental-group computation.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from typing import Iterable

import numpy as np


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"
    UNKNOWN = "unknown"


class Flag(enum.Enum):
    SIMPLY_CONNECTED = "simply_connected"
    SYMPLECTIC = "symplectic"
    MINIMAL = "minimal"
    IRREDUCIBLE = "irreducible"
    SW_NONTRIVIAL = "sw_nontrivial"
    SW_TRIVIAL = "sw_trivial"
    STANDARD = "standard"


def _coerce_flags(flags: Iterable[Flag | str]) -> frozenset[Flag]:
    out = set()
    for f in flags:
        out.add(f if isinstance(f, Flag) else Flag(str(f).lower()))
    return frozenset(out)


class PendingBettiError(ValueError):
    """b1 has not been supplied yet (fiber sums leave it pending)."""


@dataclass(frozen=True)
class InvariantRecord:
    name: str
    e: int
    sigma: int
    b1: int | None = None
    c1sq: int | None = None
    chi_h: int | None = None
    parity: Parity = Parity.UNKNOWN
    flags: frozenset[Flag] = frozenset()
    # (p, q) when the manifold is known to be p CP2 # q CP2bar
    sum_decomposition: tuple[int, int] | None = None
    autonamed: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "flags", _coerce_flags(self.flags))
        if self.chi_h is not None and 4 * self.chi_h != self.e + self.sigma:
            raise ValueError(
                f"{self.name}: chi_h = {self.chi_h} but (e + sigma)/4 = "
                f"({self.e} + {self.sigma})/4"
            )
        if self.c1sq is not None and self.c1sq != 3 * self.sigma + 2 * self.e:
            raise ValueError(
                f"{self.name}: c1sq = {self.c1sq} but 3*sigma + 2*e = "
                f"{3 * self.sigma + 2 * self.e}"
            )
        if Flag.SIMPLY_CONNECTED in self.flags:
            if self.b1 is None:
                raise ValueError(f"{self.name}: simply connected requires b1 = 0, got pending")
            if self.b1 != 0:
                raise ValueError(f"{self.name}: simply connected requires b1 = 0, got {self.b1}")
        if (
            Flag.SIMPLY_CONNECTED in self.flags
            and Flag.SYMPLECTIC in self.flags
            and (self.e + self.sigma) % 4 != 0
        ):
            raise ValueError(f"{self.name}: e + sigma must be divisible by 4")
        if self.b1 is not None:
            if self.b1 < 0:
                raise ValueError("b1 must be nonnegative")
            if self.b2 < 0 or (self.b2 + self.sigma) % 2 != 0:
                raise ValueError(f"{self.name}: inconsistent Betti data")
            if self.b2_plus < 0 or self.b2_minus < 0:
                raise ValueError(f"{self.name}: |sigma| exceeds b2")

    # -- derived Betti numbers ----------------------------------------------

    def _need_b1(self) -> int:
        if self.b1 is None:
            raise PendingBettiError(
                f"{self.name}: b1 is pending; assert it from a fundamental-group computation"
            )
        return self.b1

    @property
    def b2(self) -> int:
        return self.e - 2 + 2 * self._need_b1()

    @property
    def b2_plus(self) -> int:
        return (self.b2 + self.sigma) // 2

    @property
    def b2_minus(self) -> int:
        return self.b2_plus - self.sigma

    def has(self, flag: Flag | str) -> bool:
        return (flag if isinstance(flag, Flag) else Flag(str(flag).lower())) in self.flags

    # -- declaration helpers ---------------------------------------------------

    def with_name(self, name: str) -> "InvariantRecord":
        return replace(self, name=name, autonamed=False)

    def with_b1(self, b1: int) -> "InvariantRecord":
        return replace(self, b1=b1)

    def with_parity(self, parity: Parity | str) -> "InvariantRecord":
        if not isinstance(parity, Parity):
            parity = Parity(str(parity).lower())
        return replace(self, parity=parity)

    def with_flags(self, *flags: Flag | str) -> "InvariantRecord":
        return replace(self, flags=self.flags | _coerce_flags(flags))

    def simply_connected(self) -> "InvariantRecord":
        return replace(self, b1=0, flags=self.flags | {Flag.SIMPLY_CONNECTED})


def _autofill(e: int, sigma: int) -> tuple[int | None, int | None]:
    """(c1sq, chi_h) from the almost-complex identities when integral."""
    if (e + sigma) % 4 == 0:
        return 3 * sigma + 2 * e, (e + sigma) // 4
    return None, None


def record(
    name: str,
    *,
    e: int | None = None,
    sigma: int,
    b1: int | None = None,
    c1sq: int | None = None,
    chi_h: int | None = None,
    parity: Parity | str = Parity.UNKNOWN,
    flags: Iterable[Flag | str] = (),
    autonamed: bool = False,
) -> InvariantRecord:
    """Build a record, deriving e from chi_h when omitted."""
    if e is None:
        if chi_h is None:
            raise ValueError("need e, or chi_h and sigma to derive it")
        e = 4 * chi_h - sigma
    if c1sq is None and chi_h is None:
        c1sq, chi_h = _autofill(e, sigma)
    elif c1sq is None:
        c1sq = 3 * sigma + 2 * e
    elif chi_h is None and (e + sigma) % 4 == 0:
        chi_h = (e + sigma) // 4
    if not isinstance(parity, Parity):
        parity = Parity(str(parity).lower())
    return InvariantRecord(
        name, e, sigma, b1, c1sq, chi_h, parity, _coerce_flags(flags), None, autonamed
    )


# -- standard catalog ---------------------------------------------------------

_SUM_PART = re.compile(r"^(\d*)CP2(bar)?$")


def parse_sum_name(name: str) -> tuple[int, int] | None:
    """Read `p CP2 # q CP2bar` (either part optional); None if not of that shape."""
    if name.strip() == "S4":
        return (0, 0)
    p = q = 0
    for part in name.split("#"):
        m = _SUM_PART.match(part.strip())
        if not m:
            return None
        count = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            q += count
        else:
            p += count
    return (p, q)


def format_sum_name(p: int, q: int) -> str:
    if p == 0 and q == 0:
        return "S4"
    parts = []
    if p:
        parts.append("CP2" if p == 1 else f"{p}CP2")
    if q:
        parts.append("CP2bar" if q == 1 else f"{q}CP2bar")
    return " # ".join(parts)


_BASIC = {
    "CP2": dict(e=3, sigma=1, b1=0, parity=Parity.ODD,
                flags=(Flag.STANDARD, Flag.SIMPLY_CONNECTED), decomposition=(1, 0)),
    "CP2bar": dict(e=3, sigma=-1, b1=0, parity=Parity.ODD,
                   flags=(Flag.STANDARD, Flag.SIMPLY_CONNECTED), decomposition=(0, 1)),
    "S2xS2": dict(e=4, sigma=0, b1=0, parity=Parity.EVEN,
                  flags=(Flag.STANDARD, Flag.SIMPLY_CONNECTED, Flag.SYMPLECTIC),
                  decomposition=None),
    "T2xS2": dict(e=0, sigma=0, b1=2, parity=Parity.EVEN,
                  flags=(Flag.STANDARD, Flag.SYMPLECTIC), decomposition=None),
    "S4": dict(e=2, sigma=0, b1=0, parity=Parity.EVEN,
               flags=(Flag.STANDARD, Flag.SIMPLY_CONNECTED), decomposition=(0, 0)),
}


def standard(name: str) -> InvariantRecord:
    """Catalog of reference manifolds, including p CP2 # q CP2bar sums."""
    key = name.strip()
    if key in _BASIC:
        info = _BASIC[key]
        c1sq, chi_h = _autofill(info["e"], info["sigma"])
        return InvariantRecord(
            key, info["e"], info["sigma"], info["b1"], c1sq, chi_h,
            info["parity"], frozenset(info["flags"]), info["decomposition"],
        )
    decomposition = parse_sum_name(key)
    if decomposition is None:
        raise ValueError(f"unknown standard manifold {name!r}")
    p, q = decomposition
    result = standard("S4")
    for _ in range(p):
        result = connected_sum(result, standard("CP2"))
    for _ in range(q):
        result = connected_sum(result, standard("CP2bar"))
    return replace(result, name=format_sum_name(p, q), autonamed=False)


# -- cut-and-paste arithmetic ---------------------------------------------------


def blow_up(a: InvariantRecord, n: int) -> InvariantRecord:
    """Connected sum with n reversed projective planes."""
    if n < 0:
        raise ValueError("blowup count must be nonnegative")
    if n == 0:
        return a
    keep = a.flags & {Flag.SIMPLY_CONNECTED, Flag.SYMPLECTIC, Flag.STANDARD}
    decomposition = None
    if a.sum_decomposition is not None:
        decomposition = (a.sum_decomposition[0], a.sum_decomposition[1] + n)
    return InvariantRecord(
        name=f"blow_up({a.name}, {n})",
        e=a.e + n,
        sigma=a.sigma - n,
        b1=a.b1,
        c1sq=None if a.c1sq is None else a.c1sq - n,
        chi_h=a.chi_h,
        parity=Parity.ODD,
        flags=keep,
        sum_decomposition=decomposition,
        autonamed=True,
    )


def connected_sum(a: InvariantRecord, b: InvariantRecord) -> InvariantRecord:
    e = a.e + b.e - 2
    sigma = a.sigma + b.sigma
    b1 = None if a.b1 is None or b.b1 is None else a.b1 + b.b1
    if a.parity == Parity.ODD or b.parity == Parity.ODD:
        parity = Parity.ODD
    elif a.parity == Parity.EVEN and b.parity == Parity.EVEN:
        parity = Parity.EVEN
    else:
        parity = Parity.UNKNOWN
    flags = set()
    if a.has(Flag.STANDARD) and b.has(Flag.STANDARD):
        flags.add(Flag.STANDARD)
    if a.has(Flag.SIMPLY_CONNECTED) and b.has(Flag.SIMPLY_CONNECTED):
        flags.add(Flag.SIMPLY_CONNECTED)
    decomposition = None
    if a.sum_decomposition is not None and b.sum_decomposition is not None:
        decomposition = (
            a.sum_decomposition[0] + b.sum_decomposition[0],
            a.sum_decomposition[1] + b.sum_decomposition[1],
        )
    c1sq, chi_h = _autofill(e, sigma)
    return InvariantRecord(
        f"connected_sum({a.name}, {b.name})", e, sigma, b1, c1sq, chi_h,
        parity, frozenset(flags), decomposition, autonamed=True,
    )


def fiber_sum(a: InvariantRecord, b: InvariantRecord, genus: int) -> InvariantRecord:
    """Generalized fiber sum along genus-g surfaces of square zero.

    e adds with a -2*e(surface) correction, sigma adds, c1sq gains 8(g-1) and
    chi_h gains (g-1); b1 is left pending and the parity unknown, both to be
    declared from the group pipeline.  Symplectic persists (a symplectic sum
    of symplectic pieces is symplectic); minimality does not (that is the
    minimality decision procedure's job).
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    e = a.e + b.e - 2 * (2 - 2 * genus)
    sigma = a.sigma + b.sigma
    c1sq = None
    if a.c1sq is not None and b.c1sq is not None:
        c1sq = a.c1sq + b.c1sq + 8 * (genus - 1)
    chi_h = None
    if a.chi_h is not None and b.chi_h is not None:
        chi_h = a.chi_h + b.chi_h + (genus - 1)
    flags = set()
    if a.has(Flag.SYMPLECTIC) and b.has(Flag.SYMPLECTIC):
        flags.add(Flag.SYMPLECTIC)
    return InvariantRecord(
        f"fiber_sum({a.name}, {b.name}; g={genus})", e, sigma, None, c1sq, chi_h,
        Parity.UNKNOWN, frozenset(flags), None, autonamed=True,
    )


def freedman_type(a: InvariantRecord) -> str:
    """Homeomorphism type of a simply connected manifold with odd form."""
    if not a.has(Flag.SIMPLY_CONNECTED):
        raise ValueError(f"{a.name}: not known to be simply connected")
    if a.parity == Parity.UNKNOWN:
        raise ValueError(f"{a.name}: intersection form parity not declared")
    p, q = a.b2_plus, a.b2_minus
    if p == 0 and q == 0:
        return "S4"
    if a.parity == Parity.EVEN:
        raise ValueError(f"{a.name}: even intersection forms are out of scope")
    return format_sum_name(p, q)


# -- intersection lattices ---------------------------------------------------

_CLASS_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*)")


@dataclass(frozen=True)
class IntersectionLattice:
    """An integral lattice with a chosen basis and symmetric Gram matrix."""

    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.basis)
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError("Gram matrix dimensions must match the basis")
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    def parse_class(self, text: str) -> tuple[int, ...]:
        """Linear combination such as `2U + E1 - E2`."""
        index = {sym: i for i, sym in enumerate(self.basis)}
        vec = [0] * len(self.basis)
        rest = text.strip()
        if not rest:
            raise ValueError("empty class expression")
        pos = 0
        while pos < len(rest):
            m = _CLASS_TERM.match(rest, pos)
            if not m:
                raise ValueError(f"cannot parse class expression at {rest[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            sym = m.group(3)
            if sym not in index:
                raise ValueError(f"unknown class symbol {sym!r}")
            vec[index[sym]] += sign * coeff
            pos = m.end()
            while pos < len(rest) and rest[pos].isspace():
                pos += 1
        return tuple(vec)

    def _vector(self, c) -> np.ndarray:
        if isinstance(c, str):
            c = self.parse_class(c)
        v = np.asarray(c, dtype=np.int64)
        if v.shape != (len(self.basis),):
            raise ValueError(f"class vector must have length {len(self.basis)}")
        return v

    def pairing(self, x, y) -> int:
        gx = np.asarray(self.gram, dtype=np.int64)
        return int(self._vector(x) @ gx @ self._vector(y))

    def square(self, x) -> int:
        return self.pairing(x, x)


def pairing(lattice: IntersectionLattice, x, y) -> int:
    return lattice.pairing(x, y)


def hyperbolic_blowup_lattice(u: str = "U", s: str = "S", n: int = 4) -> IntersectionLattice:
    """<u, s> hyperbolic summand plus n exceptional (-1)-classes E1..En."""
    basis = (u, s) + tuple(f"E{i}" for i in range(1, n + 1))
    size = n + 2
    gram = [[0] * size for _ in range(size)]
    gram[0][1] = gram[1][0] = 1
    for i in range(2, size):
        gram[i][i] = -1
    return IntersectionLattice(basis, tuple(tuple(row) for row in gram))


def projective_blowup_lattice(n: int) -> IntersectionLattice:
    """<H> with H^2 = 1 plus n exceptional (-1)-classes."""
    basis = ("H",) + tuple(f"E{i}" for i in range(1, n + 1))
    gram = [[0] * (n + 1) for _ in range(n + 1)]
    gram[0][0] = 1
    for i in range(1, n + 1):
        gram[i][i] = -1
    return IntersectionLattice(basis, tuple(tuple(row) for row in gram))


def adjunction_genus(lattice: IntersectionLattice, c, k) -> int:
    """1 + (K.C + C.C)/2 for a complex or symplectic curve class."""
    total = lattice.pairing(k, c) + lattice.square(c)
    if total % 2 != 0:
        raise ValueError("K.C + C.C is odd: inconsistent class data")
    return 1 + total // 2


# -- minimality of symplectic fiber sums ---------------------------------------


@dataclass(frozen=True)
class FiberSumDescription:
    """Declared hypotheses about a symplectic fiber sum, for the minimality
    decision: a (-1)-sphere in a summand complement disjoint from the fiber
    (case i), or an S2-bundle summand in which the fiber is a section
    (case ii), or neither (case iii)."""

    manifold: str
    sphere_in_complement: bool
    s2_bundle_with_fiber_section: bool
    other_summand: str | None = None
    other_summand_minimal: bool | None = None


@dataclass(frozen=True)
class Minimality:
    verdict: str  # "Minimal" | "NotMinimal" | "ConditionallyMinimal"
    depends_on: str | None = None

    def __str__(self) -> str:
        if self.verdict == "ConditionallyMinimal" and self.depends_on:
            return f"ConditionallyMinimal({self.depends_on})"
        return self.verdict


def usher_minimality(case: FiberSumDescription) -> Minimality:
    """Minimality of a symplectic fiber sum from the declared hypotheses."""
    if case.sphere_in_complement and case.s2_bundle_with_fiber_section:
        raise ValueError("contradictory declarations: cases (i) and (ii) both claimed")
    if case.sphere_in_complement:
        return Minimality("NotMinimal")
    if case.s2_bundle_with_fiber_section:
        if case.other_summand is None:
            raise ValueError("case (ii) needs the other summand named")
        return Minimality("ConditionallyMinimal", case.other_summand)
    return Minimality("Minimal")
