"""
Lattice words over the step alphabet {E, D, N}.

A word is a plain ``str`` such as ``"NENNEE"``; positions are 1-indexed when
reported (w_1 ... w_l). E=(1,0), D=(1,1), N=(0,1).

Families:

- ``Del(m, n, l)``: all words with l steps ending at (m, n).
- ``Sch(n, l)``: members of Del(n, n, l) never rising above y = x.
- ``BDel(n, l)``: members of Del(n, n, l) that do rise above y = x ("bad").

Enumeration is lazy and lexicographic in the fixed letter order E < D < N.
"""
from __future__ import annotations

import dataclasses
import enum
import re
from typing import Iterator

LETTERS = "EDN"


class Step(str, enum.Enum):
    E = "E"
    D = "D"
    N = "N"

    @property
    def displacement(self) -> tuple[int, int]:
        return _DISPLACEMENT[self.value]


_DISPLACEMENT = {"E": (1, 0), "D": (1, 1), "N": (0, 1)}


class InvalidCharacter(ValueError):
    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"invalid step {char!r} at position {position}")


class InvalidFamily(ValueError):
    pass


class NotASquarePath(ValueError):
    pass


_CANON = str.maketrans("EDN", "012")


def canonical_key(w: str) -> tuple[int, str]:
    """Sort key matching the enumeration order (length, then E < D < N)."""
    return len(w), w.translate(_CANON)


def parse_word(text: str) -> str:
    """
    Validate a word over E/D/N and return it.

    >>> parse_word("NXE")
    Traceback (most recent call last):
    ...
    qschroeder.paths.InvalidCharacter: invalid step 'X' at position 2
    """
    for i, ch in enumerate(text, start=1):
        if ch not in _DISPLACEMENT:
            raise InvalidCharacter(ch, i)
    return text


def endpoint(w: str) -> tuple[int, int]:
    d = w.count("D")
    return w.count("E") + d, w.count("N") + d


def depth_profile(w: str) -> list[int]:
    """Running #N - #E over each prefix w_1..w_i (the empty prefix is omitted)."""
    out = []
    depth = 0
    for ch in w:
        if ch == "N":
            depth += 1
        elif ch == "E":
            depth -= 1
        out.append(depth)
    return out


def is_schroeder(w: str, n: int) -> bool:
    return endpoint(w) == (n, n) and all(d <= 0 for d in depth_profile(w))


def is_bad(w: str, n: int) -> bool:
    if endpoint(w) != (n, n):
        raise NotASquarePath(f"{w!r} does not end at ({n}, {n})")
    return any(d >= 1 for d in depth_profile(w))


@dataclasses.dataclass(frozen=True)
class PathFamily:
    """One of Del(m,n,l), Sch(n,l) or BDel(n,l) (bad paths in Del(n,n,l))."""

    kind: str
    m: int
    n: int
    l: int

    def __post_init__(self):
        if self.kind not in ("del", "sch", "bdel"):
            raise InvalidFamily(f"unknown family kind {self.kind!r}")
        if self.kind != "del" and self.m != self.n:
            raise InvalidFamily(f"{self.kind} family must be square")

    @classmethod
    def delannoy(cls, m: int, n: int, l: int) -> PathFamily:
        return cls("del", m, n, l)

    @classmethod
    def schroeder(cls, n: int, l: int) -> PathFamily:
        return cls("sch", n, n, l)

    @classmethod
    def bad(cls, n: int, l: int) -> PathFamily:
        return cls("bdel", n, n, l)

    def step_counts(self) -> tuple[int, int, int]:
        """(#E, #D, #N) forced on every member."""
        return self.l - self.n, self.m + self.n - self.l, self.l - self.m

    def validate(self) -> None:
        if min(self.m, self.n, self.l) < 0 or min(self.step_counts()) < 0:
            raise InvalidFamily(f"{self} has negative step counts")

    def __str__(self):
        if self.kind == "del":
            return f"del:{self.m},{self.n},{self.l}"
        return f"{self.kind}:{self.n},{self.l}"


_FAMILY_RE = re.compile(r"^(del|sch|bdel):(-?\d+(?:,-?\d+)*)$")


def parse_family(text: str) -> PathFamily:
    """Parse ``del:m,n,l``, ``sch:n,l`` or ``bdel:n,l`` and validate bounds."""
    match = _FAMILY_RE.match(text.strip())
    if not match:
        raise InvalidFamily(f"malformed family designator {text!r}")
    kind = match.group(1)
    args = [int(x) for x in match.group(2).split(",")]
    want = 3 if kind == "del" else 2
    if len(args) != want:
        raise InvalidFamily(f"{kind} takes {want} parameters, got {len(args)}")
    if kind == "del":
        fam = PathFamily.delannoy(*args)
    elif kind == "sch":
        fam = PathFamily.schroeder(*args)
    else:
        fam = PathFamily.bad(*args)
    fam.validate()
    return fam


def delannoy_words(m: int, n: int, l: int) -> Iterator[str]:
    """All words in Del(m,n,l), lexicographic; nothing if the counts are impossible."""
    ne, nd, nn = l - n, m + n - l, l - m
    if min(m, n, l, ne, nd, nn) < 0:
        return
    yield from _words(ne, nd, nn, floor=None)


def schroeder_words(n: int, l: int) -> Iterator[str]:
    """All words in Sch(n,l), lexicographic; depth is pruned at 0 while building."""
    ne, nd, nn = l - n, 2 * n - l, l - n
    if min(n, l, ne, nd) < 0:
        return
    yield from _words(ne, nd, nn, floor=0)


def bad_words(n: int, l: int) -> Iterator[str]:
    for w in delannoy_words(n, n, l):
        if any(d >= 1 for d in depth_profile(w)):
            yield w


def _words(ne: int, nd: int, nn: int, floor: int | None) -> Iterator[str]:
    # Lexicographic multiset permutations in E < D < N order. With floor set,
    # N is only placed while the running depth stays <= floor.
    length = ne + nd + nn
    buf = [""] * length
    remaining = {"E": ne, "D": nd, "N": nn}

    def rec(pos: int, depth: int) -> Iterator[str]:
        if pos == length:
            yield "".join(buf)
            return
        for ch in LETTERS:
            if remaining[ch] == 0:
                continue
            step = 1 if ch == "N" else -1 if ch == "E" else 0
            if floor is not None and depth + step > floor:
                continue
            remaining[ch] -= 1
            buf[pos] = ch
            yield from rec(pos + 1, depth + step)
            remaining[ch] += 1

    yield from rec(0, 0)


def enumerate_family(family: PathFamily) -> Iterator[str]:
    """
    Lazily yield every member of ``family`` once, in canonical order.

    Raises InvalidFamily when the parameters force a negative step count.
    Families that are in range but empty (e.g. BDel(n, n)) yield nothing.
    """
    family.validate()
    if family.kind == "del":
        return delannoy_words(family.m, family.n, family.l)
    if family.kind == "sch":
        return schroeder_words(family.n, family.l)
    return bad_words(family.n, family.l)
