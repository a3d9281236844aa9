"""Positive braid words over a Coxeter system."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .coxeter import CoxElement, CoxeterSystem, cox_reduced_word, cox_w0
from .errors import SystemMismatch

__all__ = [
    "BraidWord", "braid_of_element", "full_twist", "braid_concat",
    "parse_letters", "all_words",
]


@dataclass(frozen=True)
class BraidWord:
    system: CoxeterSystem
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        bad = [x for x in self.letters if x not in self.system.generators]
        if bad:
            raise ValueError(f"letters {bad} are not generators of {self.system}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return braid_concat(self, other)

    def power(self, k: int) -> BraidWord:
        return BraidWord(self.system, self.letters * k)

    def __str__(self):
        return " ".join(map(str, self.letters)) or "e"


def braid_of_element(w: CoxElement) -> BraidWord:
    """The lift sigma_w, spelled with the canonical reduced word of ``w``."""
    return BraidWord(w.system, cox_reduced_word(w))


def full_twist(system: CoxeterSystem) -> BraidWord:
    half = braid_of_element(cox_w0(system))
    return half * half


def braid_concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.system != b.system:
        raise SystemMismatch(f"{a.system} vs {b.system}")
    return BraidWord(a.system, a.letters + b.letters)


def parse_letters(text: str) -> tuple[int, ...]:
    """Parse ``"1,2 1"`` style input into a tuple of 1-based letters."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    return tuple(int(t) for t in tokens)


def all_words(system: CoxeterSystem, max_len: int):
    """Every positive word of length <= max_len, shortest first."""
    for k in range(max_len + 1):
        for letters in product(system.generators, repeat=k):
            yield BraidWord(system, letters)
