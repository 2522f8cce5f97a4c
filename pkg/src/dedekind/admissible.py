"""Moduli t admitting a square root of -1, with constructive witnesses.

Such t are exactly t = m or t = 2m where every prime divisor of m is
1 mod 4 (m = 1 included).  Roots are built per prime by Tonelli-Shanks,
lifted to prime powers by Hensel's lemma, and combined by CRT, rather than
scanned for; the brute-force scan stays on the test side as the oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .exact import mod_inverse
from .identities import Theorem1Instance


class NotAdmissible(ValueError):
    """-1 is not a square modulo this t."""


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, primes ascending; 1 -> [].

    Desk-scale routine: fine up to ~10**12, no ambitions beyond that.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out: list[tuple[int, int]] = []
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        out.append((2, e))
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 2
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class AdmissibleWitness:
    """Certificate that x^2 = -1 (mod t) is solvable.

    Carries the factorization, the odd part m (t = m or t = 2m), whether
    the factor 2 is present, and the complete ascending set of roots.
    """

    t: int
    factorization: tuple[tuple[int, int], ...]
    m: int
    doubled: bool
    roots: tuple[int, ...]

    def __post_init__(self) -> None:
        prod = 1
        for p, e in self.factorization:
            prod *= p**e
        if prod != self.t:
            raise ValueError(f"factorization does not multiply back to {self.t}")
        if self.m * (2 if self.doubled else 1) != self.t:
            raise ValueError(f"m = {self.m} is not the odd part of {self.t}")
        for x in self.roots:
            if not 0 <= x < self.t or (x * x + 1) % self.t:
                raise ValueError(f"{x} is not a root of x^2 + 1 mod {self.t}")


def is_admissible(t: int) -> tuple[bool, AdmissibleWitness | None]:
    """Whether some x satisfies x^2 = -1 (mod t), with a witness on success.

    Criterion: at most one factor of 2 and every odd prime divisor 1 mod 4.
    The witness's root set is complete, hence nonempty exactly on success.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    fac = factorize(t)
    for p, e in fac:
        if p == 2:
            if e > 1:
                return False, None
        elif p % 4 != 1:
            return False, None
    witness = AdmissibleWitness(
        t=t,
        factorization=tuple(fac),
        m=t // 2 if t % 2 == 0 else t,
        doubled=t % 2 == 0,
        roots=_roots_from_factorization(t, fac),
    )
    return True, witness


def sqrt_minus_one(t: int) -> tuple[int, ...]:
    """All x in [0, t) with x^2 = -1 (mod t), ascending.

    One root per odd prime comes from Tonelli-Shanks, is lifted to the
    prime power by Hensel's lemma, and the sign choices are combined by
    CRT; a factor of 2 contributes the fixed root 1.  That yields
    2^(number of odd primes) roots for t > 2, and by convention (0,) for
    t = 1 and (1,) for t = 2.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    fac = factorize(t)
    for p, e in fac:
        if (p == 2 and e > 1) or (p != 2 and p % 4 != 1):
            raise NotAdmissible(f"no x with x^2 = -1 exists mod {t}")
    return _roots_from_factorization(t, fac)


def _roots_from_factorization(t: int, fac: list[tuple[int, int]]) -> tuple[int, ...]:
    if t == 1:
        return (0,)
    combos: list[tuple[int, int]] = [(0, 1)]  # accumulated (residue, modulus)
    for p, e in fac:
        pe = p**e
        if p == 2:
            branch = (1,)
        else:
            r = _hensel_lift(_sqrt_minus_one_mod_prime(p), p, e)
            branch = (r, pe - r)
        combos = [(_crt(x, mod, y, pe), mod * pe) for x, mod in combos for y in branch]
    return tuple(sorted(x for x, _ in combos))


def _tonelli_shanks(n: int, p: int) -> int:
    """A square root of n modulo an odd prime p; ValueError if none exists.

    The non-residue seeding the 2-Sylow walk is found by scanning 2, 3, 4,
    ... upward (the least non-residue is always prime, so this meets the
    same witness a primes-only scan would), keeping the output
    deterministic.
    """
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        raise ValueError(f"{n} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(n, (q + 1) // 2, p)
    t = pow(n, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def _sqrt_minus_one_mod_prime(p: int) -> int:
    """The smaller of the two roots of x^2 = -1 mod a prime p = 1 (mod 4)."""
    x = _tonelli_shanks(p - 1, p)
    return min(x, p - x)


def _hensel_lift(r: int, p: int, e: int) -> int:
    """Lift a root of x^2 + 1 = 0 from mod p to mod p^e (p odd, so 2r is a unit)."""
    pe = p
    for _ in range(e - 1):
        step = pe
        pe *= p
        f = (r * r + 1) % pe
        y = -(f // step) * mod_inverse(2 * r, p) % p
        r = (r + y * step) % pe
    return r


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    """The residue mod m1*m2 matching r1 mod m1 and r2 mod m2 (coprime moduli)."""
    return (r1 + (r2 - r1) * mod_inverse(m1, m2) % m2 * m1) % (m1 * m2)


def enumerate_theorem1_instances(
    t_max: int, b_max: int, multipliers: int = 1
) -> Iterator[Theorem1Instance]:
    """Every valid instance with t <= t_max, b <= b_max, ordered by (t, a, b).

    For each root x of x^2 = -1 (mod t), a runs over the first
    ``multipliers`` natural numbers congruent to x mod t; the default keeps
    just the least one.  Sum values depend on a itself, not only on a mod
    t, so widening the bound produces genuinely new instances.
    """
    if t_max < 1 or b_max < 1 or multipliers < 1:
        raise ValueError("bounds must be >= 1")
    for t in range(1, t_max + 1):
        admissible, witness = is_admissible(t)
        if not admissible:
            continue
        a_values = sorted(
            a for x in witness.roots for a in _naturals_in_class(x, t, multipliers)
        )
        for a in a_values:
            for b in range(1, b_max + 1):
                if math.gcd(a, b) == 1 and math.gcd(b, t) == 1:
                    yield Theorem1Instance.from_triple(t, a, b)


def _naturals_in_class(x: int, t: int, count: int) -> list[int]:
    first = x if x >= 1 else x + t
    return [first + i * t for i in range(count)]
