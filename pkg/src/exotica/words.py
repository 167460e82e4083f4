"""Freely reduced words in a free group.

A word is a sequence of letters (symbol, sign) with sign +1 or -1.  Words are
always kept freely reduced: no letter is ever adjacent to its inverse.  The
empty word is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Letter = tuple[str, int]


def _reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for sym, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        if stack and stack[-1][0] == sym and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((sym, sign))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; construction reduces its input."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _reduce_letters(self.letters))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity() -> "Word":
        return Word(())

    @staticmethod
    def gen(sym: str, exponent: int = 1) -> "Word":
        if exponent >= 0:
            return Word(((sym, 1),) * exponent)
        return Word(((sym, -1),) * (-exponent))

    # -- group operations ---------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((sym, -sign) for sym, sign in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = Word.identity()
        for _ in range(n):
            result = result * self
        return result

    def conjugate(self, by: "Word") -> "Word":
        """by * self * by^-1."""
        return by * self * by.inverse()

    # -- queries -------------------------------------------------------------

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def symbols(self) -> set[str]:
        return {sym for sym, _ in self.letters}

    def exponent_sum(self, sym: str) -> int:
        return sum(sign for s, sign in self.letters if s == sym)

    def exponent_vector(self, generators: Sequence[str]) -> tuple[int, ...]:
        """Image in the free abelianization, as a coefficient vector."""
        index = {g: i for i, g in enumerate(generators)}
        vec = [0] * len(generators)
        for sym, sign in self.letters:
            if sym not in index:
                raise ValueError(f"unknown generator {sym!r}")
            vec[index[sym]] += sign
        return tuple(vec)

    def syllables(self) -> list[tuple[str, int]]:
        """Maximal runs, as (symbol, exponent) with exponent != 0."""
        runs: list[tuple[str, int]] = []
        for sym, sign in self.letters:
            if runs and runs[-1][0] == sym:
                runs[-1] = (sym, runs[-1][1] + sign)
            else:
                runs.append((sym, sign))
        return runs

    def rename(self, mapping: dict[str, str]) -> "Word":
        return Word(tuple((mapping.get(sym, sym), sign) for sym, sign in self.letters))

    def substitute(self, sym: str, replacement: "Word") -> "Word":
        """Replace every occurrence of sym by the given word (inverses flip it)."""
        out: list[Letter] = []
        inv = replacement.inverse()
        for s, sign in self.letters:
            if s == sym:
                out.extend(replacement.letters if sign == 1 else inv.letters)
            else:
                out.append((s, sign))
        return Word(tuple(out))

    def __repr__(self) -> str:
        from .textform import format_word

        return f"Word({format_word(self)!r})"


def reduce(letters: Iterable[Letter]) -> Word:
    """Freely reduce a raw letter sequence."""
    return Word(tuple(letters))


def commutator(g: Word, h: Word) -> Word:
    """[g, h] = g h g^-1 h^-1."""
    return g * h * g.inverse() * h.inverse()


def relation(lhs: Word, rhs: Word) -> Word:
    """The relator of the relation lhs = rhs, namely lhs * rhs^-1."""
    return lhs * rhs.inverse()


def chain_relators(*members: Word) -> list[Word]:
    """Relators for a chained equality r1 = r2 = ... = 1, one per member."""
    return list(members)
