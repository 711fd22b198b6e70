"""
Exact polynomials in a single indeterminate q with integer coefficients.

Coefficients are stored densely as Python ints (arbitrary precision), index i
holding the coefficient of q^i. Trailing zeros are stripped, so the zero
polynomial has an empty coefficient tuple.

>>> q_binomial(4, 2)
QPoly(1 + q + 2*q^2 + q^3 + q^4)
>>> exact_div(q_binomial(6, 3), q_int(4)).to_text()
'1 + q^2 + q^3 + q^4 + q^6'
"""
from __future__ import annotations

import functools
import json
from typing import Iterable, Sequence


class NonExactDivision(ArithmeticError):
    """Long division left a nonzero remainder."""


class DivisionByZero(ZeroDivisionError):
    pass


class PartsMismatch(ValueError):
    pass


class QPoly:
    """An immutable polynomial in q, kept in canonical form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> QPoly:
        if power < 0:
            raise ValueError(f"negative power {power}")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __floordiv__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return exact_div(self, other)

    def __repr__(self):
        return f"QPoly({self.to_text()})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        """Sparse human form with ascending powers, e.g. ``1 + q^2 + 2*q^3``."""
        if not self.coeffs:
            return "0"
        out = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                term = str(mag)
            else:
                var = "q" if power == 1 else f"q^{power}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(term if c > 0 else f"-{term}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {term}")
        return " ".join(out)

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings (index = power)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: str | Sequence[str]) -> QPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data)


ZERO = QPoly()
ONE = QPoly([1])


def add(a: QPoly, b: QPoly) -> QPoly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] += c
    return QPoly(out)


def mul(a: QPoly, b: QPoly) -> QPoly:
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return ZERO
    out = [0] * (len(x) + len(y) - 1)
    for i, c in enumerate(x):
        if c == 0:
            continue
        for j, d in enumerate(y):
            out[i + j] += c * d
    return QPoly(out)


def exact_div(a: QPoly, b: QPoly) -> QPoly:
    """
    Return c with b*c == a, raising NonExactDivision if b does not divide a.

    The remainder of the long division is checked to be identically zero
    before returning.
    """
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    nq = len(rem) - db
    if nq <= 0:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    quot = [0] * nq
    for i in range(nq - 1, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        if c % lead:
            raise NonExactDivision(f"{a} is not divisible by {b}")
        t = c // lead
        quot[i] = t
        for j, d in enumerate(b.coeffs):
            rem[i + j] -= t * d
    if any(rem):
        raise NonExactDivision(f"{a} is not divisible by {b}")
    return QPoly(quot)


def q_int(n: int) -> QPoly:
    """[n] = 1 + q + ... + q^(n-1); [0] is the zero polynomial."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return QPoly([1] * n)


@functools.lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return mul(q_factorial(n - 1), q_int(n))


@functools.lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPoly:
    """
    Gaussian binomial coefficient [a choose b]_q; zero when b is out of range.

    >>> q_binomial(3, 5)
    QPoly(0)
    """
    if a < 0:
        raise ValueError(f"q_binomial needs a >= 0, got {a}")
    if b < 0 or b > a:
        return ZERO
    return exact_div(q_factorial(a), mul(q_factorial(b), q_factorial(a - b)))


def q_multinomial(total: int, parts: Sequence[int]) -> QPoly:
    if any(p < 0 for p in parts) or total < 0:
        raise PartsMismatch(f"negative entries in {total}, {list(parts)}")
    if sum(parts) != total:
        raise PartsMismatch(f"parts {list(parts)} do not sum to {total}")
    denom = ONE
    for p in parts:
        denom = mul(denom, q_factorial(p))
    return exact_div(q_factorial(total), denom)


def eval_at_one(p: QPoly) -> int:
    return sum(p.coeffs)
