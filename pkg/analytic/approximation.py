from fractions import Fraction
from math import ceil, floor, gcd
from typing import Tuple, Union

import numpy as np

from core.errors import DomainError

Real = Union[int, float, Fraction, str]


def as_fraction(theta: Real) -> Fraction:
    """Exact rational value of ``theta``; strings may be ``j/M`` or decimals."""
    if isinstance(theta, Fraction):
        return theta
    if isinstance(theta, str):
        try:
            return Fraction(theta.strip())
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"theta must be j/M or a decimal, got {theta!r}.")
    return Fraction(theta)


def diophantine_approx(theta: Real, Q: int) -> Tuple[int, int]:
    """Reduced a/q with 1 <= q <= Q and |theta - a/q| <= 1/(qQ).

    Walks the continued-fraction convergents of theta and keeps the last one with
    denominator at most Q.
    """
    if Q < 1:
        raise DomainError(f"Q must be at least 1, got {Q}.")
    value = as_fraction(theta)
    p_prev, q_prev = 1, 0
    p, q = floor(value), 1
    rest = value - p
    while rest:
        value = 1 / rest
        digit = floor(value)
        p_next, q_next = digit * p + p_prev, digit * q + q_prev
        if q_next > Q:
            break
        p_prev, q_prev, p, q = p, q, p_next, q_next
        rest = value - digit
    return p, q


def major_arc_membership(theta: Real, q: int, Q: int) -> bool:
    """True iff some a coprime to q has |theta - a/q| <= 1/(qQ)."""
    if not 1 <= q <= Q:
        raise DomainError(f"need 1 <= q <= Q, got q={q}, Q={Q}.")
    value = as_fraction(theta)
    nearest = round(value * q)
    radius = Fraction(1, q * Q)
    for a in (nearest - 1, nearest, nearest + 1):
        if gcd(a, q) == 1 and abs(value - Fraction(a, q)) <= radius:
            return True
    return False


def major_arc_mask(M: int, q: int, Q: int) -> np.ndarray:
    """Boolean mask of the grid points j/M, 0 <= j < M, lying in the major arc of q.

    Membership is the integer test |jq - aM| * Q <= M, so no point is decided in floating point.
    """
    if M < 1:
        raise DomainError(f"M must be at least 1, got {M}.")
    if not 1 <= q <= Q:
        raise DomainError(f"need 1 <= q <= Q, got q={q}, Q={Q}.")
    mask = np.zeros(M, dtype=bool)
    for a in range(q + 1):
        if gcd(a, q) != 1:
            continue
        lo = max(0, ceil(Fraction(a * M * Q - M, q * Q)))
        hi = min(M - 1, floor(Fraction(a * M * Q + M, q * Q)))
        if lo <= hi:
            mask[lo : hi + 1] = True
    return mask
