"""Residual evaluators for the reciprocity identities.

Each evaluator returns LHS - RHS as an exact rational; a zero residual
certifies the identity on that instance, and a nonzero one carries the
magnitude of the violation.  The ``*_sides`` variants expose the two sides
separately for reporting.  First arguments of every Dedekind sum are
reduced to least nonnegative residues before evaluation; the sums are
periodic, so this only fixes representatives.

Instance types validate their hypotheses eagerly at construction, so a
failure there means "preconditions violated" while a nonzero residual
would mean "identity falsified".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .core import SumArgs, normalized_sum
from .exact import NotCoprime, Rat, egcd, mod_inverse


class NotOdd(ValueError):
    """An argument that must be odd is even."""


class InvalidInstance(ValueError):
    """Instance fields violate a hypothesis of the identity."""


class NoBranchApplies(ValueError):
    """b falls in none of the congruence classes the case split covers."""


class EqualFractions(ValueError):
    """a/b = c/d, but the three-term relation needs distinct fractions."""


class PreconditionViolated(ValueError):
    """A classical-fact precondition failed."""


def _S(a: int, b: int) -> Rat:
    """Normalized sum with the first argument reduced into [0, b)."""
    return normalized_sum(SumArgs(a % b, b))


def _check_natural_coprime(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"arguments must be natural numbers, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")


# ---------------------------------------------------------------------------
# classical reciprocity


def reciprocity_sides(a: int, b: int) -> tuple[Rat, Rat]:
    """S(a,b) + S(b,a) versus (a^2 + b^2 + 1)/(ab) - 3."""
    _check_natural_coprime(a, b)
    lhs = _S(a, b) + _S(b, a)
    rhs = Fraction(a * a + b * b + 1, a * b) - 3
    return lhs, rhs


def reciprocity_residual(a: int, b: int) -> Rat:
    lhs, rhs = reciprocity_sides(a, b)
    return lhs - rhs


# ---------------------------------------------------------------------------
# the twisted law for odd coprime pairs (Du-Zhang)


def du_zhang_sides(a: int, b: int) -> tuple[Rat, Rat]:
    """S(2a*,b) + S(2b*,a) versus (a^2 + b^2 + 4)/(2ab) - 3, a and b odd."""
    _check_natural_coprime(a, b)
    if a % 2 == 0 or b % 2 == 0:
        raise NotOdd(f"a and b must both be odd, got ({a}, {b})")
    lhs = _S(2 * mod_inverse(a, b), b) + _S(2 * mod_inverse(b, a), a)
    rhs = Fraction(a * a + b * b + 4, 2 * a * b) - 3
    return lhs, rhs


def du_zhang_residual(a: int, b: int) -> Rat:
    lhs, rhs = du_zhang_sides(a, b)
    return lhs - rhs


# ---------------------------------------------------------------------------
# the parametrized family: S(ta*,b) + S(tb*,a) = (a^2+b^2+t^2)/(tab) - 3 + S(ab,t)


@dataclass(frozen=True)
class Theorem1Instance:
    """Validated triple (t, a, b) with its derived inverses.

    Hypotheses: a, b, t natural, gcd(a, b) = gcd(b, t) = 1 and
    a^2 + 1 = 0 (mod t) (which already forces gcd(ab, t) = 1).
    a_star inverts a mod b, b_star inverts b mod a, both canonical
    least nonnegative residues.
    """

    t: int
    a: int
    b: int
    a_star: int
    b_star: int

    def __post_init__(self) -> None:
        t, a, b = self.t, self.a, self.b
        if t < 1 or a < 1 or b < 1:
            raise InvalidInstance(f"t, a, b must be natural numbers, got ({t}, {a}, {b})")
        if math.gcd(a, b) != 1:
            raise InvalidInstance(f"gcd(a, b) = gcd({a}, {b}) != 1")
        if math.gcd(b, t) != 1:
            raise InvalidInstance(f"gcd(b, t) = gcd({b}, {t}) != 1")
        if (a * a + 1) % t:
            raise InvalidInstance(f"a^2 + 1 = {a * a + 1} is not divisible by t = {t}")
        if not 0 <= self.a_star < b or (a * self.a_star - 1) % b:
            raise InvalidInstance(f"a_star = {self.a_star} does not invert a = {a} mod b = {b}")
        if not 0 <= self.b_star < a or (b * self.b_star - 1) % a:
            raise InvalidInstance(f"b_star = {self.b_star} does not invert b = {b} mod a = {a}")

    @classmethod
    def from_triple(cls, t: int, a: int, b: int) -> "Theorem1Instance":
        """Derive both inverses and validate every hypothesis."""
        if a < 1 or b < 1:
            raise InvalidInstance(f"a, b must be natural numbers, got ({a}, {b})")
        if math.gcd(a, b) != 1:
            raise InvalidInstance(f"gcd(a, b) = gcd({a}, {b}) != 1")
        return cls(t, a, b, mod_inverse(a, b), mod_inverse(b, a))


def theorem1_sides(inst: Theorem1Instance) -> tuple[Rat, Rat]:
    t, a, b = inst.t, inst.a, inst.b
    lhs = _S(t * inst.a_star, b) + _S(t * inst.b_star, a)
    rhs = Fraction(a * a + b * b + t * t, t * a * b) - 3 + _S(a * b, t)
    return lhs, rhs


def theorem1_residual(inst: Theorem1Instance) -> Rat:
    lhs, rhs = theorem1_sides(inst)
    return lhs - rhs


# ---------------------------------------------------------------------------
# closed-form corollary branches, split on b mod t


class Cor2Branch(Enum):
    """Which congruence class of b mod t selected the closed form."""

    PM1 = "B_PM1"
    PLUS_A = "B_PLUS_A"
    MINUS_A = "B_MINUS_A"


def corollary2_sides(inst: Theorem1Instance) -> tuple[Cor2Branch, Rat, Rat]:
    """Branch label plus both sides of the applicable closed form.

    b = +-1 (mod t) drops the S(ab, t) term entirely; b = +-a (mod t)
    replaces it by the closed form of S(1, t).  When the classes coincide
    (in particular whenever t divides 2) the +-1 branch wins.
    """
    t, a, b = inst.t, inst.a, inst.b
    base = Fraction(a * a + b * b + t * t, t * a * b)
    if (b - 1) % t == 0 or (b + 1) % t == 0:
        branch, rhs = Cor2Branch.PM1, base - 3
    elif (b - a) % t == 0:
        branch, rhs = Cor2Branch.PLUS_A, base - t - Fraction(2, t)
    elif (b + a) % t == 0:
        branch, rhs = Cor2Branch.MINUS_A, base + t + Fraction(2, t) - 6
    else:
        raise NoBranchApplies(f"b = {b} is neither +-1 nor +-{a} mod {t}")
    lhs = _S(t * inst.a_star, b) + _S(t * inst.b_star, a)
    return branch, lhs, rhs


def corollary2_residual(inst: Theorem1Instance) -> tuple[Cor2Branch, Rat]:
    branch, lhs, rhs = corollary2_sides(inst)
    return branch, lhs - rhs


# ---------------------------------------------------------------------------
# three-term relation


@dataclass(frozen=True)
class ThreeTermWitness:
    """Fractions a/b != c/d plus the derived data of the three-term relation.

    q = ad - bc, eps = sign(q), (j, k) is a Bezout pair with -cj + dk = 1,
    and r = aj - bk.  A different Bezout pair shifts r by a multiple of q,
    which the relation cannot see; gcd(r, q) = 1 holds automatically.
    """

    a: int
    b: int
    c: int
    d: int
    q: int
    eps: int
    j: int
    k: int
    r: int

    def __post_init__(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        if b < 1 or d < 1:
            raise InvalidInstance(f"b, d must be natural numbers, got ({b}, {d})")
        if math.gcd(a, b) != 1:
            raise InvalidInstance(f"gcd(a, b) = gcd({a}, {b}) != 1")
        if math.gcd(c, d) != 1:
            raise InvalidInstance(f"gcd(c, d) = gcd({c}, {d}) != 1")
        if a * d == b * c:
            raise EqualFractions(f"{a}/{b} and {c}/{d} are the same fraction")
        if self.q != a * d - b * c:
            raise InvalidInstance(f"q = {self.q} != a*d - b*c = {a * d - b * c}")
        if self.eps != (1 if self.q > 0 else -1):
            raise InvalidInstance(f"eps = {self.eps} is not the sign of q = {self.q}")
        if -c * self.j + d * self.k != 1:
            raise InvalidInstance(f"(j, k) = ({self.j}, {self.k}) is not a Bezout pair for (c, d)")
        if self.r != a * self.j - b * self.k:
            raise InvalidInstance(f"r = {self.r} != a*j - b*k = {a * self.j - b * self.k}")
        if abs(self.q) > 1 and math.gcd(self.r, self.q) != 1:
            raise InvalidInstance(f"gcd(r, q) = gcd({self.r}, {self.q}) != 1")

    @classmethod
    def from_fractions(cls, a: int, b: int, c: int, d: int, bezout_shift: int = 0) -> "ThreeTermWitness":
        """Derive q, eps, (j, k), r from the two fractions.

        bezout_shift = n replaces the canonical pair by (j + nd, k + nc),
        moving r to r + nq; useful for exercising the relation's
        invariance under the Bezout choice.
        """
        if b < 1 or d < 1:
            raise InvalidInstance(f"b, d must be natural numbers, got ({b}, {d})")
        if math.gcd(a, b) != 1:
            raise InvalidInstance(f"gcd(a, b) = gcd({a}, {b}) != 1")
        if math.gcd(c, d) != 1:
            raise InvalidInstance(f"gcd(c, d) = gcd({c}, {d}) != 1")
        q = a * d - b * c
        if q == 0:
            raise EqualFractions(f"{a}/{b} and {c}/{d} are the same fraction")
        _, u, v = egcd(d, c)  # u*d + v*c = 1
        j = -v + bezout_shift * d
        k = u + bezout_shift * c
        return cls(a, b, c, d, q, 1 if q > 0 else -1, j, k, a * j - b * k)


def three_term_sides(w: ThreeTermWitness) -> tuple[Rat, Rat]:
    """S(a,b) versus S(c,d) + eps S(r,|q|) + (b^2 + d^2 + q^2)/(bdq) - 3 eps."""
    lhs = _S(w.a, w.b)
    rhs = (
        _S(w.c, w.d)
        + w.eps * _S(w.r, abs(w.q))
        + Fraction(w.b * w.b + w.d * w.d + w.q * w.q, w.b * w.d * w.q)
        - 3 * w.eps
    )
    return lhs, rhs


def three_term_residual(w: ThreeTermWitness) -> Rat:
    lhs, rhs = three_term_sides(w)
    return lhs - rhs


# ---------------------------------------------------------------------------
# expansion of S(a, c) for the composite modulus c = b(a^2+1)/t


@dataclass(frozen=True)
class CofactorInstance:
    """(a, b, t) with t | a^2 + 1, plus c = b(a^2+1)/t and two inverses of t.

    t is inverted against two different moduli (b and a); both residues are
    carried explicitly since they rarely coincide.
    """

    a: int
    b: int
    t: int
    c: int
    t_star_mod_b: int
    t_star_mod_a: int

    def __post_init__(self) -> None:
        a, b, t = self.a, self.b, self.t
        if a < 1 or b < 1 or t < 1:
            raise InvalidInstance(f"a, b, t must be natural numbers, got ({a}, {b}, {t})")
        if math.gcd(a, b) != 1:
            raise InvalidInstance(f"gcd(a, b) = gcd({a}, {b}) != 1")
        if math.gcd(b, t) != 1:
            raise InvalidInstance(f"gcd(b, t) = gcd({b}, {t}) != 1")
        if (a * a + 1) % t:
            raise InvalidInstance(f"a^2 + 1 = {a * a + 1} is not divisible by t = {t}")
        if self.c != b * (a * a + 1) // t:
            raise InvalidInstance(f"c = {self.c} != b(a^2+1)/t = {b * (a * a + 1) // t}")
        if math.gcd(a, self.c) != 1:
            raise InvalidInstance(f"gcd(a, c) = gcd({a}, {self.c}) != 1")
        if not 0 <= self.t_star_mod_b < b or (t * self.t_star_mod_b - 1) % b:
            raise InvalidInstance(f"t_star_mod_b = {self.t_star_mod_b} does not invert t mod b")
        if not 0 <= self.t_star_mod_a < a or (t * self.t_star_mod_a - 1) % a:
            raise InvalidInstance(f"t_star_mod_a = {self.t_star_mod_a} does not invert t mod a")

    @classmethod
    def from_triple(cls, a: int, b: int, t: int) -> "CofactorInstance":
        """Derive c and both inverses of t, validating every hypothesis."""
        if a < 1 or b < 1 or t < 1:
            raise InvalidInstance(f"a, b, t must be natural numbers, got ({a}, {b}, {t})")
        if (a * a + 1) % t:
            raise InvalidInstance(f"a^2 + 1 = {a * a + 1} is not divisible by t = {t}")
        if math.gcd(b, t) != 1:
            raise InvalidInstance(f"gcd(b, t) = gcd({b}, {t}) != 1")
        c = b * (a * a + 1) // t
        return cls(a, b, t, c, mod_inverse(t, b), mod_inverse(t, a))


def cofactor_expansion_sides(inst: CofactorInstance) -> tuple[Rat, Rat]:
    """S(a,c) versus (b^2-1)a/(tb) - S(ab,t) + S(at*,b), c = b(a^2+1)/t."""
    a, b, t = inst.a, inst.b, inst.t
    lhs = _S(a, inst.c)
    rhs = Fraction((b * b - 1) * a, t * b) - _S(a * b, t) + _S(a * inst.t_star_mod_b, b)
    return lhs, rhs


def cofactor_expansion_residual(inst: CofactorInstance) -> Rat:
    lhs, rhs = cofactor_expansion_sides(inst)
    return lhs - rhs


def enumerate_cofactor_instances(t_max: int, a_max: int, b_max: int) -> Iterator[CofactorInstance]:
    """All valid (a, b, t) within the bounds, in lexicographic (t, a, b) order."""
    if t_max < 1 or a_max < 1 or b_max < 1:
        raise ValueError("bounds must be >= 1")
    for t in range(1, t_max + 1):
        for a in range(1, a_max + 1):
            if (a * a + 1) % t:
                continue
            for b in range(1, b_max + 1):
                if math.gcd(a, b) == 1 and math.gcd(b, t) == 1:
                    yield CofactorInstance.from_triple(a, b, t)


# ---------------------------------------------------------------------------
# classical single-sum facts


class FactKind(Enum):
    INVERSE = "INVERSE"  # S(a*, b) = S(a, b)
    NEGATION = "NEGATION"  # S(-a, b) = -S(a, b)
    VANISH = "VANISH"  # S(a, b) = 0 when a^2 = -1 (mod b)
    ONE_FORMULA = "ONE_FORMULA"  # S(1, b) = b + 2/b - 3


def classical_fact_sides(kind: FactKind, a: int, b: int) -> tuple[Rat, Rat]:
    """Both sides of the selected fact; for ONE_FORMULA only b is used."""
    if b < 1:
        raise PreconditionViolated(f"b must be a natural number, got {b}")
    if math.gcd(a, b) != 1:
        raise PreconditionViolated(f"gcd({a}, {b}) != 1")
    if kind is FactKind.INVERSE:
        return _S(mod_inverse(a, b), b), _S(a, b)
    if kind is FactKind.NEGATION:
        return _S(-a, b), -_S(a, b)
    if kind is FactKind.VANISH:
        if (a * a + 1) % b:
            raise PreconditionViolated(f"a^2 + 1 = {a * a + 1} is not divisible by b = {b}")
        return _S(a, b), Fraction(0)
    if kind is FactKind.ONE_FORMULA:
        return _S(1, b), b + Fraction(2, b) - 3
    raise ValueError(f"unknown fact kind: {kind!r}")


def classical_fact_residual(kind: FactKind, a: int, b: int) -> Rat:
    lhs, rhs = classical_fact_sides(kind, a, b)
    return lhs - rhs
