"""Finite group presentations and the operations the pipeline needs.

A presentation stores an ordered generator list and a list of freely reduced
relators (a relation r = s is stored as the relator r * s^-1).  Normalization
drops trivial and duplicate relators and checks that every symbol appearing in
a relator is declared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .snf import in_row_space, smith_normal_form
from .words import Word


@dataclass(frozen=True)
class AbelianGroupDescription:
    """A finitely generated abelian group: Z^free_rank + sum of Z/d cyclic parts."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d <= 1:
                raise ValueError("torsion entries must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion entries must form a divisibility chain")

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    meta: Mapping[str, str] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator symbols")
        declared = set(gens)
        seen: set[tuple] = set()
        kept: list[Word] = []
        for rel in self.relators:
            unknown = rel.symbols() - declared
            if unknown:
                raise ValueError(f"relator uses undeclared generators {sorted(unknown)}")
            if rel.is_identity() or rel.letters in seen:
                continue
            seen.add(rel.letters)
            kept.append(rel)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(kept))

    def word(self, letters: Iterable[tuple[str, int]]) -> Word:
        w = Word(tuple(letters))
        unknown = w.symbols() - set(self.generators)
        if unknown:
            raise ValueError(f"unknown generator symbols {sorted(unknown)}")
        return w

    def exponent_matrix(self) -> list[list[int]]:
        """Rows: relators; columns: generators."""
        return [list(r.exponent_vector(self.generators)) for r in self.relators]

    def __repr__(self) -> str:
        from .textform import format_presentation

        return f"Presentation({format_presentation(self)!r})"


def abelianize(p: Presentation) -> AbelianGroupDescription:
    """First homology of the presented group, by Smith normal form."""
    form = smith_normal_form(p.exponent_matrix())
    return AbelianGroupDescription(
        free_rank=len(p.generators) - form.rank,
        torsion=tuple(d for d in form.invariant_factors if d > 1),
    )


def quotient(p: Presentation, extra: Sequence[Word]) -> Presentation:
    """Add relators (normalizing as usual)."""
    for w in extra:
        unknown = w.symbols() - set(p.generators)
        if unknown:
            raise ValueError(f"unknown generator symbols {sorted(unknown)}")
    return Presentation(p.generators, p.relators + tuple(extra))


def _cyclic_forms(w: Word) -> set[tuple]:
    """All cyclic rotations of w and of its inverse, as letter tuples."""
    forms: set[tuple] = set()
    for u in (w, w.inverse()):
        letters = u.letters
        for i in range(max(1, len(letters))):
            rotated = Word(letters[i:] + letters[:i])
            forms.add(rotated.letters)
    return forms


def tietze_eliminate(p: Presentation, gen: str, defining: Word) -> Presentation:
    """Remove a generator that some relator expresses as ``defining``.

    Requires a relator equivalent (up to cyclic rotation and inversion) to
    gen * defining^-1, with ``defining`` not involving ``gen``.  Every other
    occurrence of the generator is substituted away; the abelianization is
    unchanged.
    """
    if gen not in p.generators:
        raise ValueError(f"unknown generator {gen!r}")
    if gen in defining.symbols():
        raise ValueError("defining word must not involve the eliminated generator")
    target = Word.gen(gen) * defining.inverse()
    forms = _cyclic_forms(target)
    hit = next((i for i, r in enumerate(p.relators) if r.letters in forms), None)
    if hit is None:
        raise ValueError(f"no relator defines {gen!r} as the given word")
    rest = [r.substitute(gen, defining) for i, r in enumerate(p.relators) if i != hit]
    gens = tuple(g for g in p.generators if g != gen)
    return Presentation(gens, tuple(rest))


@dataclass(frozen=True)
class BoundaryData:
    """A group presentation together with peripheral data of an embedded
    genus-g surface: images of the 2g surface generators, and the meridian of
    its normal circle."""

    presentation: Presentation
    surface_images: tuple[Word, ...]
    meridian: Word
    meta: Mapping[str, str] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        declared = set(self.presentation.generators)
        for w in (*self.surface_images, self.meridian):
            unknown = w.symbols() - declared
            if unknown:
                raise ValueError(f"boundary word uses undeclared generators {sorted(unknown)}")

    @property
    def genus(self) -> int:
        if len(self.surface_images) % 2 != 0:
            raise ValueError("surface generator count must be even")
        return len(self.surface_images) // 2


@dataclass(frozen=True)
class GluingMap:
    """Word-level data of a boundary identification: ordered (source word,
    target word) pairs for the surface generators, plus the meridian image
    (the identity word when the meridian dies)."""

    assignments: tuple[tuple[Word, Word], ...]
    meridian_image: Word = Word.identity()
    meta: Mapping[str, str] = field(default_factory=dict, compare=False, repr=False)


def _rename_on_collision(taken: set[str], symbols: Sequence[str]) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for sym in symbols:
        if sym not in taken:
            taken.add(sym)
            continue
        k = 2
        while f"{sym}_{k}" in taken:
            k += 1
        mapping[sym] = f"{sym}_{k}"
        taken.add(f"{sym}_{k}")
    return mapping


def van_kampen_fiber_sum(
    a: BoundaryData,
    b: BoundaryData,
    matching: Sequence[tuple[int, int]],
    kill_meridians: bool = True,
) -> Presentation:
    """Fundamental group of a fiber sum glued along the two surfaces.

    Generators: disjoint union (the second factor's symbols are renamed on
    collision).  Relators: both relator sets, one identification relator
    image_a[i] * image_b[j]^-1 per matched pair, and (if kill_meridians) both
    meridian words.
    """
    if a.genus != b.genus:
        raise ValueError(f"genus mismatch: {a.genus} vs {b.genus}")
    n = len(a.surface_images)
    if sorted(i for i, _ in matching) != list(range(n)) or sorted(
        j for _, j in matching
    ) != list(range(n)):
        raise ValueError("matching must be a bijection on surface generators")

    taken = set(a.presentation.generators)
    mapping = _rename_on_collision(taken, b.presentation.generators)
    b_gens = tuple(mapping.get(g, g) for g in b.presentation.generators)
    b_rels = tuple(r.rename(mapping) for r in b.presentation.relators)
    b_images = tuple(w.rename(mapping) for w in b.surface_images)
    b_meridian = b.meridian.rename(mapping)

    relators = list(a.presentation.relators) + list(b_rels)
    for i, j in matching:
        relators.append(a.surface_images[i] * b_images[j].inverse())
    if kill_meridians:
        relators.append(a.meridian)
        relators.append(b_meridian)
    return Presentation(a.presentation.generators + b_gens, tuple(relators))


def matching_from_gluing(a: BoundaryData, b: BoundaryData, glue: GluingMap) -> list[tuple[int, int]]:
    """Turn word-level gluing assignments into index pairs for the fiber sum."""
    pairs: list[tuple[int, int]] = []
    for src, dst in glue.assignments:
        try:
            i = a.surface_images.index(src)
        except ValueError:
            raise ValueError(f"gluing source {src!r} is not a surface image of the first factor")
        try:
            j = b.surface_images.index(dst)
        except ValueError:
            raise ValueError(f"gluing target {dst!r} is not a surface image of the second factor")
        pairs.append((i, j))
    return pairs


def glue_fiber_sum(
    a: BoundaryData, b: BoundaryData, glue: GluingMap, kill_meridians: bool = True
) -> Presentation:
    return van_kampen_fiber_sum(a, b, matching_from_gluing(a, b, glue), kill_meridians)


def longitude_is_nullhomologous(p: Presentation, longitude: Word) -> bool:
    """Does the word die in the abelianization of the presented group?"""
    vec = longitude.exponent_vector(p.generators)
    return in_row_space(p.exponent_matrix(), vec)
