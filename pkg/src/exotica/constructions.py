"""Bundled construction data: knot groups, surgery presentations, the glued
complements, and the two boundary identifications.

Everything here is loaded from the text files in ``exotica/data`` (the shared
grammar), validated on load, and cached.  Names are stable API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Mapping

from .presentations import (
    Presentation,
    abelianize,
    longitude_is_nullhomologous,
    quotient,
)
from .textform import (
    parse_boundary,
    parse_gluing,
    parse_presentation,
    parse_sections,
    parse_word,
    parse_word_list,
)
from .words import Word, commutator


@dataclass(frozen=True)
class KnotRecord:
    name: str
    group: Presentation
    meridian: Word
    longitude: Word
    fibered_genus: int
    meta: Mapping[str, str] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        declared = set(self.group.generators)
        for w in (self.meridian, self.longitude):
            unknown = w.symbols() - declared
            if unknown:
                raise ValueError(f"peripheral word uses unknown generators {sorted(unknown)}")
        if not longitude_is_nullhomologous(self.group, self.longitude):
            raise ValueError(f"{self.name}: longitude is not nullhomologous")
        h1 = abelianize(self.group)
        if h1.free_rank != 1 or h1.torsion:
            raise ValueError(f"{self.name}: knot group must abelianize to Z, got {h1}")


def _read_data(filename: str) -> tuple[str, dict[str, str]]:
    """File payload plus its `cite:`/`note:` metadata lines."""
    text = resources.files("exotica.data").joinpath(filename).read_text(encoding="utf-8")
    meta: dict[str, str] = {}
    payload: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if stripped.startswith("cite:"):
            meta["cite"] = stripped[len("cite:"):].strip()
        elif stripped.startswith("note:"):
            meta["note"] = stripped[len("note:"):].strip()
        else:
            payload.append(line)
    return "\n".join(payload), meta


def _with_meta(obj, meta):
    object.__setattr__(obj, "meta", meta)
    return obj


@lru_cache(maxsize=None)
def knot(name: str) -> KnotRecord:
    """Genus-one fibered knots: 'trefoil' or 'figure8'."""
    if name not in ("trefoil", "figure8"):
        raise ValueError(f"unknown knot {name!r}")
    payload, meta = _read_data(f"{name}.knot")
    sections = parse_sections(payload)
    group = parse_presentation(f"gens: {sections['gens']}; rels: {sections['rels']};")
    return KnotRecord(
        name=name,
        group=group,
        meridian=parse_word(sections["meridian"]),
        longitude=parse_word(sections["longitude"]),
        fibered_genus=int(sections["genus"]),
        meta=meta,
    )


def zero_surgery(k: KnotRecord) -> Presentation:
    """Fundamental group of 0-framed surgery: kill the longitude."""
    return quotient(k.group, (k.longitude,))


def cross_circle(p: Presentation) -> Presentation:
    """Group of (manifold) x circle: adjoin a central generator."""
    sym = "x"
    i = 0
    while sym in p.generators:
        i += 1
        sym = f"x{i}"
    extra = tuple(commutator(Word.gen(sym), Word.gen(g)) for g in p.generators)
    return Presentation(p.generators + (sym,), p.relators + extra)


_BUNDLED_FILES = {
    "C_B": ("C_B.pres", "presentation"),
    "C_F": ("C_F.pres", "presentation"),
    "Y_K": ("Y_K.bdy", "boundary"),
    "X_K_complement": ("X_K_complement.bdy", "boundary"),
    "Z_complement": ("Z_complement.bdy", "boundary"),
    "psi": ("psi.glue", "gluing"),
    "phi": ("phi.glue", "gluing"),
    "matsumoto_curves": ("matsumoto_curves.words", "words"),
}


def bundled_names() -> tuple[str, ...]:
    return tuple(_BUNDLED_FILES)


@lru_cache(maxsize=None)
def bundled(name: str):
    """Load a bundled item by stable name; see bundled_names()."""
    if name not in _BUNDLED_FILES:
        raise ValueError(f"unknown bundled item {name!r} (have {', '.join(_BUNDLED_FILES)})")
    filename, kind = _BUNDLED_FILES[name]
    payload, meta = _read_data(filename)
    if kind == "presentation":
        return _with_meta(parse_presentation(payload), meta)
    if kind == "boundary":
        return _with_meta(parse_boundary(payload), meta)
    if kind == "gluing":
        return _with_meta(parse_gluing(payload), meta)
    return parse_word_list(payload)


@lru_cache(maxsize=None)
def trefoil_torus_presentation() -> Presentation:
    """The one-relator u^2 = v^3 form of the trefoil group."""
    payload, meta = _read_data("trefoil_torus.pres")
    return _with_meta(parse_presentation(payload), meta)
