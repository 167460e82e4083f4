"""Genus-g surface homology, Dehn-twist transvections, and the fundamental
group of a Lefschetz fibration's total space.

The intersection pairing on the standard basis (a1, b1, ..., ag, bg) is the
block-diagonal symplectic form with <a_i, b_i> = 1.  A twist along a class c
acts on homology by x -> x + <x, c> c; a product of twists written
left-to-right applies the rightmost twist first (function composition), the
convention under which the genus-2 monodromy relation below squares to the
identity exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .presentations import Presentation, quotient
from .words import Word, commutator

HomologyClass = tuple[int, ...]


@dataclass(frozen=True)
class SurfaceHomology:
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be at least 1")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    @property
    def basis(self) -> tuple[str, ...]:
        return tuple(
            sym for i in range(1, self.genus + 1) for sym in (f"a{i}", f"b{i}")
        )

    def pairing_matrix(self) -> np.ndarray:
        j = np.zeros((self.rank, self.rank), dtype=np.int64)
        for i in range(self.genus):
            j[2 * i, 2 * i + 1] = 1
            j[2 * i + 1, 2 * i] = -1
        return j

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        self._check(x)
        self._check(y)
        return int(np.asarray(x) @ self.pairing_matrix() @ np.asarray(y))

    def _check(self, c: Sequence[int]) -> None:
        if len(c) != self.rank:
            raise ValueError(f"class must have length {self.rank}, got {len(c)}")


def class_of_word(w: Word, surface: SurfaceHomology) -> HomologyClass:
    """Exponent-sum vector of a word in the surface generators."""
    return w.exponent_vector(surface.basis)


def transvection(c: Sequence[int], surface: SurfaceHomology) -> np.ndarray:
    """Homology action of the twist along c: x -> x + <x, c> c."""
    surface._check(c)
    j = surface.pairing_matrix()
    v = np.asarray(c, dtype=np.int64).reshape(-1, 1)
    # x + (x^T J c) c  ==  (I - c c^T J) x  since J is skew
    return np.eye(surface.rank, dtype=np.int64) - v @ v.T @ j


def compose(curves: Sequence[Sequence[int]], surface: SurfaceHomology) -> np.ndarray:
    """Product of the twists, rightmost applied first."""
    m = np.eye(surface.rank, dtype=np.int64)
    for c in curves:
        m = m @ transvection(c, surface)
    return m


def preserves_pairing(m: np.ndarray, surface: SurfaceHomology) -> bool:
    j = surface.pairing_matrix()
    return bool(np.array_equal(m.T @ j @ m, j))


def surface_relator(genus: int) -> Word:
    """Product of commutators [a1,b1]...[ag,bg]."""
    w = Word.identity()
    for i in range(1, genus + 1):
        w = w * commutator(Word.gen(f"a{i}"), Word.gen(f"b{i}"))
    return w


def surface_group(genus: int) -> Presentation:
    basis = SurfaceHomology(genus).basis
    return Presentation(basis, (surface_relator(genus),))


def lefschetz_pi1(genus: int, cycles: Sequence[Word]) -> Presentation:
    """Fundamental group of the total space of a genus-g Lefschetz fibration
    over the sphere: the surface group modulo its vanishing cycles."""
    return quotient(surface_group(genus), tuple(cycles))
