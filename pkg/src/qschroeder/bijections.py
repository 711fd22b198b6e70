"""
The bijection phi from bad paths in Del(n,n,l) onto Del(n+1,n-1,l), its
inverse, and the older map psi, which is not injective.

phi locates a pivot step w_k and the maximal run of D steps around it,
W_1 = w_{k-r} .. w_{k+s}. Then:

- case 1 orders (E<D<N, N<E<D, D<N<E): the pivot N becomes E;
- case 2 orders (E<N<D, D<E<N, N<D<E): W_1 = D^r N D^s is rewritten as
  D^(r-1) E D^(s+1) when r >= 1, or as D^s E when r == 0.

Under every order, maj(w) - maj(phi(w)) is 1 if E<N and 0 if E>N.
"""
from __future__ import annotations

import dataclasses
from collections import defaultdict

from .paths import (
    InvalidFamily,
    bad_words,
    canonical_key,
    depth_profile,
    endpoint,
)
from .stats import StepOrder


class EmptyWord(ValueError):
    pass


class NotABadPath(ValueError):
    pass


class WrongEndpoint(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class BlockDecomposition:
    k: int
    r: int
    s: int

    @property
    def block_span(self) -> tuple[int, int]:
        return self.k - self.r, self.k + self.s


def first_deepest(w: str) -> int:
    """1-based index of the first step reaching the maximum depth."""
    if not w:
        raise EmptyWord("first_deepest of the empty word")
    prof = depth_profile(w)
    return prof.index(max(prof)) + 1


def last_deepest_predecessor(w: str) -> int:
    """
    Return k such that k-1 is the last index in 0..l reaching the maximum depth,
    counting the empty prefix w_0 at depth 0.

    >>> last_deepest_predecessor("EENNNE")
    6
    """
    prof = [0] + depth_profile(w)
    top = max(prof)
    last = max(i for i, d in enumerate(prof) if d == top)
    return last + 1


def block_around(w: str, k: int) -> BlockDecomposition:
    if not 1 <= k <= len(w):
        raise IndexError(f"position {k} outside 1..{len(w)}")
    r = 0
    while k - r - 2 >= 0 and w[k - r - 2] == "D":
        r += 1
    s = 0
    while k + s < len(w) and w[k + s] == "D":
        s += 1
    return BlockDecomposition(k, r, s)


def _check_bad(w: str) -> int:
    x, y = endpoint(w)
    if x != y or not any(d >= 1 for d in depth_profile(w)):
        raise NotABadPath(f"{w!r} is not a bad path ending on the diagonal")
    return x


def _splice(w: str, blk: BlockDecomposition, middle: str) -> str:
    lo, hi = blk.block_span
    return w[: lo - 1] + middle + w[hi:]


def _case2_forward(w: str, blk: BlockDecomposition) -> str:
    if blk.r >= 1:
        return _splice(w, blk, "D" * (blk.r - 1) + "E" + "D" * (blk.s + 1))
    return _splice(w, blk, "D" * blk.s + "E")


def _case2_inverse(w: str, blk: BlockDecomposition) -> str:
    if blk.s >= 1:
        return _splice(w, blk, "D" * (blk.r + 1) + "N" + "D" * (blk.s - 1))
    return _splice(w, blk, "N" + "D" * blk.r)


def phi_trace(w: str, order: StepOrder) -> tuple[str, BlockDecomposition]:
    """phi(w) together with the block decomposition around its pivot."""
    _check_bad(w)
    k = first_deepest(w)
    blk = block_around(w, k)
    if order.bijection_case == 1:
        return w[: k - 1] + "E" + w[k:], blk
    return _case2_forward(w, blk), blk


def phi(w: str, order: StepOrder) -> str:
    return phi_trace(w, order)[0]


def phi_inverse_trace(w: str, order: StepOrder) -> tuple[str, BlockDecomposition]:
    x, y = endpoint(w)
    if x - y != 2 or y < 0:
        raise WrongEndpoint(f"{w!r} ends at ({x}, {y}), expected (n+1, n-1)")
    k = last_deepest_predecessor(w)
    blk = block_around(w, k)
    if order.bijection_case == 1:
        return w[: k - 1] + "N" + w[k:], blk
    return _case2_inverse(w, blk), blk


def phi_inverse(w: str, order: StepOrder) -> str:
    return phi_inverse_trace(w, order)[0]


def psi(w: str) -> str:
    """
    Replace the last N of the run that first crosses above y = x by E.

    >>> psi("NENNEE"), psi("EENNNE")
    ('EENNEE', 'EENNEE')
    """
    _check_bad(w)
    prof = depth_profile(w)
    i = next(i for i, d in enumerate(prof) if d >= 1)
    j = i
    while j + 1 < len(w) and w[j + 1] == "N":
        j += 1
    return w[:j] + "E" + w[j + 1 :]


def psi_collisions(n: int, l: int) -> list[tuple[str, list[str]]]:
    """
    Groups of two or more bad paths in Del(n,n,l) with a shared psi image,
    as (image, preimages), both in canonical enumeration order.
    """
    if min(n, l) < 0 or not n <= l <= 2 * n:
        raise InvalidFamily(f"Del({n},{n},{l}) has negative step counts")
    groups: dict[str, list[str]] = defaultdict(list)
    for w in bad_words(n, l):
        groups[psi(w)].append(w)
    return sorted(
        ((img, pre) for img, pre in groups.items() if len(pre) > 1),
        key=lambda g: canonical_key(g[0]),
    )
