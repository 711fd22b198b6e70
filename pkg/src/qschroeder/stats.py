"""
Linear orders on {E, D, N}, descent sets and the major index.

For a word of length l, position i (1 <= i <= l-1) is a descent when
w_i > w_{i+1} in the chosen order, and maj is the sum of the descents.
Some sources print the descent range as 1..n-1; the range here is always the
word length minus one.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable

from .paths import PathFamily, enumerate_family
from .qpoly import QPoly


class InvalidOrder(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class StepOrder:
    """A linear order on the steps, given smallest first."""

    letters: tuple[str, str, str]

    def __post_init__(self):
        if sorted(self.letters) != ["D", "E", "N"]:
            raise InvalidOrder(f"not an ordering of E, D, N: {self.letters}")

    @classmethod
    def parse(cls, text: str) -> StepOrder:
        """Accept exactly ``X<Y<Z`` with {X, Y, Z} = {E, D, N}."""
        parts = text.split("<")
        if len(parts) != 3 or any(len(p) != 1 for p in parts):
            raise InvalidOrder(f"expected X<Y<Z, got {text!r}")
        return cls(tuple(parts))

    def rank(self, letter: str) -> int:
        return self.letters.index(letter)

    @property
    def ranks(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.letters)}

    @property
    def e_below_n(self) -> bool:
        """True for the E<N class, False for the E>N class."""
        return self.rank("E") < self.rank("N")

    @property
    def bijection_case(self) -> int:
        """
        1 for the rotations of E<D<N (E<D<N, N<E<D, D<N<E); 2 for the
        rotations of E<N<D (E<N<D, D<E<N, N<D<E).
        """
        i = self.letters.index("E")
        rotated = self.letters[i:] + self.letters[:i]
        return 1 if rotated == ("E", "D", "N") else 2

    def __str__(self):
        return "<".join(self.letters)


ALL_ORDERS: tuple[StepOrder, ...] = tuple(
    StepOrder(p) for p in itertools.permutations("EDN")
)


def descent_set(w: str, order: StepOrder) -> frozenset[int]:
    r = order.ranks
    return frozenset(i + 1 for i in range(len(w) - 1) if r[w[i]] > r[w[i + 1]])


def maj(w: str, order: StepOrder) -> int:
    r = order.ranks
    return sum(i + 1 for i in range(len(w) - 1) if r[w[i]] > r[w[i + 1]])


def maj_distribution(family: PathFamily, order: StepOrder) -> QPoly:
    """Sum of q^maj(W) over the family; the zero polynomial if it is empty."""
    return maj_polynomial(enumerate_family(family), order)


def maj_polynomial(words: Iterable[str], order: StepOrder) -> QPoly:
    counts: dict[int, int] = {}
    for w in words:
        k = maj(w, order)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return QPoly()
    return QPoly(counts.get(i, 0) for i in range(max(counts) + 1))
