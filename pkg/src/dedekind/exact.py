"""Exact integer and rational arithmetic underpinning every sum value.

Rationals are ``fractions.Fraction`` throughout: always in lowest terms,
denominator positive, zero stored uniquely as 0/1.  ``Rat`` is an alias so
the rest of the package can spell the value type by its role.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


class NotCoprime(ValueError):
    """Arguments share a factor where coprimality is required."""


class ZeroDenominator(ValueError):
    """A rational was requested with denominator zero."""


def egcd(x: int, y: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, u, v) with g = gcd(|x|, |y|) >= 0 and u*x + v*y = g.

    The iteration runs on |x|, |y| and the input signs are folded back into
    u and v afterwards, so the output is canonical: the standard algorithm
    yields the Bezout pair with minimal |u| among valid answers.
    """
    old_r, r = abs(x), abs(y)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    u = -old_s if x < 0 else old_s
    v = -old_t if y < 0 else old_t
    return old_r, u, v


def mod_inverse(x: int, m: int) -> int:
    """The unique r in [0, m) with x*r = 1 (mod m); mod_inverse(x, 1) == 0."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if math.gcd(x, m) != 1:
        raise NotCoprime(f"{x} is not invertible mod {m}")
    return pow(x, -1, m)


def rat_normalize(num: int, den: int) -> Rat:
    """num/den reduced to lowest terms with positive denominator."""
    if den == 0:
        raise ZeroDenominator(f"{num}/0 is not a rational")
    return Fraction(num, den)
