"""
Closed forms for the maj distributions over Delannoy, bad and Schroeder paths.

Out-of-range parameters give the zero polynomial (the empty sum). Of the order,
only its class (E<N or E>N) is used.
"""
from __future__ import annotations

from . import qpoly
from .qpoly import QPoly, ZERO, q_binomial, q_int, q_multinomial
from .stats import StepOrder


def mdel_closed(m: int, n: int, l: int) -> QPoly:
    """MacMahon's q-multinomial [l; l-m, l-n, m+n-l], the same for every order."""
    if min(m, n) < 0 or not max(m, n) <= l <= m + n:
        return ZERO
    return q_multinomial(l, [l - m, l - n, m + n - l])


def mbdel_closed(n: int, l: int, order: StepOrder) -> QPoly:
    base = mdel_closed(n + 1, n - 1, l)
    if order.e_below_n:
        return qpoly.mul(QPoly.monomial(1), base)
    return base


def msch_closed(n: int, l: int, order: StepOrder) -> QPoly:
    """
    [2(l-n) choose l-n] [l choose 2n-l] / [l-n+1], times q^(l-n) when E>N.

    The division is applied to the full product. It must be exact and
    raises NonExactDivision otherwise.
    """
    if n < 0 or not n <= l <= 2 * n:
        return ZERO
    a = l - n
    prod = qpoly.mul(q_binomial(2 * a, a), q_binomial(l, 2 * n - l))
    result = qpoly.exact_div(prod, q_int(a + 1))
    if not order.e_below_n:
        result = qpoly.mul(QPoly.monomial(a), result)
    return result
