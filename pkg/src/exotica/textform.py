"""Shared text form for words, presentations, boundary data and gluings.

Words: `*`-separated syllables, exponents as ^n, the identity as `1`, e.g.
`a*b*a*b^-1*a^-1*b^-1`.  Presentations: `gens: a, b; rels: w1, w2;`.
Parsing is whitespace-tolerant; serialization is canonical (these two are
mutually inverse on canonical text).
"""

from __future__ import annotations

import re

from .presentations import BoundaryData, GluingMap, Presentation
from .words import Word

_SYMBOL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_SYLLABLE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(-?\d+))?\s*$")


class TextFormError(ValueError):
    pass


def _check_symbol(sym: str) -> str:
    if not _SYMBOL.match(sym):
        raise TextFormError(f"invalid generator symbol {sym!r}")
    return sym


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return Word.identity()
    letters: list[tuple[str, int]] = []
    for chunk in text.split("*"):
        m = _SYLLABLE.match(chunk)
        if not m:
            raise TextFormError(f"cannot parse word syllable {chunk.strip()!r}")
        sym, exp_text = m.group(1), m.group(2)
        exp = int(exp_text) if exp_text is not None else 1
        if exp == 0:
            continue
        sign = 1 if exp > 0 else -1
        letters.extend([(sym, sign)] * abs(exp))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    if w.is_identity():
        return "1"
    parts = []
    for sym, exp in w.syllables():
        parts.append(sym if exp == 1 else f"{sym}^{exp}")
    return "*".join(parts)


def _split_csv(text: str) -> list[str]:
    items = [piece.strip() for piece in text.split(",")]
    return [piece for piece in items if piece]


def parse_sections(text: str) -> dict[str, str]:
    """Split `key: value; key: value;` text into a dict (order-checked later)."""
    out: dict[str, str] = {}
    for clause in text.split(";"):
        clause = clause.strip()
        if not clause:
            continue
        if ":" not in clause:
            raise TextFormError(f"expected `key: value` clause, got {clause!r}")
        key, value = clause.split(":", 1)
        key = key.strip()
        if key in out:
            raise TextFormError(f"duplicate section {key!r}")
        out[key] = value.strip()
    return out


def parse_presentation(text: str) -> Presentation:
    sections = parse_sections(text)
    unknown = set(sections) - {"gens", "rels"}
    if unknown:
        raise TextFormError(f"unknown presentation sections {sorted(unknown)}")
    if "gens" not in sections:
        raise TextFormError("presentation text must declare `gens:`")
    gens = tuple(_check_symbol(s) for s in _split_csv(sections["gens"]))
    rels = tuple(parse_word(w) for w in _split_csv(sections.get("rels", "")))
    return Presentation(gens, rels)


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(r) for r in p.relators)
    return f"gens: {gens}; rels: {rels};"


def parse_boundary(text: str) -> BoundaryData:
    sections = parse_sections(text)
    unknown = set(sections) - {"gens", "rels", "surface", "meridian"}
    if unknown:
        raise TextFormError(f"unknown boundary sections {sorted(unknown)}")
    for required in ("gens", "surface", "meridian"):
        if required not in sections:
            raise TextFormError(f"boundary text must declare `{required}:`")
    pres = parse_presentation(
        f"gens: {sections['gens']}; rels: {sections.get('rels', '')};"
    )
    surface = tuple(parse_word(w) for w in _split_csv(sections["surface"]))
    meridian = parse_word(sections["meridian"])
    return BoundaryData(pres, surface, meridian)


def format_boundary(b: BoundaryData) -> str:
    surface = ", ".join(format_word(w) for w in b.surface_images)
    return (
        f"{format_presentation(b.presentation)} "
        f"surface: {surface}; meridian: {format_word(b.meridian)};"
    )


def parse_gluing(text: str) -> GluingMap:
    """`w -> w', w -> w'; meridian -> w;` (the meridian clause is optional)."""
    assignments: list[tuple[Word, Word]] = []
    meridian = Word.identity()
    saw_meridian = False
    for clause in text.split(";"):
        clause = clause.strip()
        if not clause:
            continue
        for item in _split_csv(clause):
            if "->" not in item:
                raise TextFormError(f"expected `word -> word`, got {item!r}")
            lhs, rhs = item.split("->", 1)
            if lhs.strip() == "meridian":
                if saw_meridian:
                    raise TextFormError("duplicate meridian clause")
                meridian = parse_word(rhs)
                saw_meridian = True
            else:
                assignments.append((parse_word(lhs), parse_word(rhs)))
    return GluingMap(tuple(assignments), meridian)


def format_gluing(g: GluingMap) -> str:
    pairs = ", ".join(
        f"{format_word(src)} -> {format_word(dst)}" for src, dst in g.assignments
    )
    return f"{pairs}; meridian -> {format_word(g.meridian_image)};"


def parse_word_list(text: str) -> tuple[Word, ...]:
    return tuple(parse_word(w) for w in _split_csv(text))
