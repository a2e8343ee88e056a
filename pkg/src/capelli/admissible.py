"""Admissible primes and the exponent sets on which condition C holds automatically.

A prime ``p`` is *(a, b)-inadmissible* when some unit ``u`` makes both ``u*a``
and ``u*b`` p-th powers. Writing ``a = u_a * prod(p_i^alpha_i)`` with
``e(a) = gcd(alpha_i)`` (0 for a unit) and ``e(a, b) = gcd(e(a), e(b))``:

    p is (a, b)-inadmissible  <=>  p | e(a, b)  and  u_a^-1 * u_b in U^p.

When ``a`` and ``b`` are both units, ``e(a, b) = 0`` and every prime divides
it, so only the unit clause remains. Then all but finitely many primes are
inadmissible, and :class:`AdmissibleSpec` records the finite complement.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import arith
from .criteria import infer_ring
from .errors import DomainError, UnitCoefficientsError
from .rings import Ring, _check_prime


class Shape(enum.Enum):
    ODD_ONLY = "odd-only"
    ODD_AND_TWICE_ODD = "odd-and-twice-odd"
    ALL = "all"


def _nonzero(R: Ring, *xs) -> None:
    if any(R.is_zero(x) for x in xs):
        raise DomainError("a and b must be nonzero")


def exponent_pair(a, b, ring: Ring | None = None) -> int:
    """``e(a, b)``: 0 when both are units, else ``gcd(e(a), e(b))``."""
    R = ring or infer_ring(a, b)
    a, b = R.coerce(a), R.coerce(b)
    _nonzero(R, a, b)
    return math.gcd(R.exponent(a), R.exponent(b))


def _unit_ratio(R: Ring, a, b):
    ua = R.canonical_factor(a).unit
    ub = R.canonical_factor(b).unit
    return R.mul(R.inverse(ua), ub)


def is_inadmissible_prime(a, b, p: int, ring: Ring | None = None) -> bool:
    R = ring or infer_ring(a, b)
    a, b = R.coerce(a), R.coerce(b)
    _check_prime(p)
    e = exponent_pair(a, b, R)
    if e % p:
        return False
    return _unit_ratio(R, a, b) in R.unit_pth_powers(p)


def unit_coefficients(a, b, ring: Ring | None = None) -> bool:
    """Whether ``a`` and ``b`` are both units, the case with no finite prime bound."""
    R = ring or infer_ring(a, b)
    a, b = R.coerce(a), R.coerce(b)
    _nonzero(R, a, b)
    return R.is_unit(a) and R.is_unit(b)


@dataclass(frozen=True)
class AdmissibleSpec:
    """The set of ``n >= 2`` for which ``C(m, a, b, n)`` holds, described finitely.

    ``n = 2^s * q`` (``q`` odd) belongs to the set when ``s`` fits the shape
    and no prime of ``q`` is (a, b)-inadmissible.

    For ``e > 0`` the inadmissible primes are listed directly. For ``e == 0``
    (both units) they are cofinite: ``inadmissible_primes`` and
    ``excluded_odd_primes`` are ``None`` and ``admissible_odd_primes`` lists
    the exceptions.
    """

    ring: Ring
    m: int
    a: object
    b: object
    e: int
    shape: Shape
    inadmissible_primes: tuple[int, ...] | None
    excluded_odd_primes: tuple[int, ...] | None
    admissible_odd_primes: tuple[int, ...] | None = None

    @property
    def units_only(self) -> bool:
        return self.e == 0

    def excludes(self, p: int) -> bool:
        """Whether the odd prime ``p`` is (a, b)-inadmissible."""
        if self.units_only:
            return p not in self.admissible_odd_primes
        return p in self.excluded_odd_primes


def admissible_spec(m: int, a, b, ring: Ring | None = None) -> AdmissibleSpec:
    R = ring or infer_ring(a, b)
    a, b = R.coerce(a), R.coerce(b)
    _nonzero(R, a, b)
    if m < 1:
        raise DomainError("m must be positive")
    e = exponent_pair(a, b, R)
    sb = b if m % 2 == 0 else R.neg(b)
    if is_inadmissible_prime(a, sb, 2, R):
        shape = Shape.ODD_ONLY
    elif is_inadmissible_prime(a, b, 2, R):
        shape = Shape.ODD_AND_TWICE_ODD
    else:
        shape = Shape.ALL
    if e:
        bad = tuple(p for p in arith.prime_divisors(e) if is_inadmissible_prime(a, b, p, R))
        return AdmissibleSpec(R, m, a, b, e, shape, bad, tuple(p for p in bad if p != 2))
    # U^p = U whenever p does not divide #U, so only those primes can be admissible.
    good = tuple(
        p for p in arith.prime_divisors(len(R.units())) if p != 2 and not is_inadmissible_prime(a, b, p, R)
    )
    return AdmissibleSpec(R, m, a, b, e, shape, None, None, good)


def membership(n: int, spec: AdmissibleSpec) -> bool:
    if n < 2:
        raise DomainError("n must be at least 2")
    s = (n & -n).bit_length() - 1
    q = n >> s
    if spec.shape is Shape.ODD_ONLY and s > 0:
        return False
    if spec.shape is Shape.ODD_AND_TWICE_ODD and s > 1:
        return False
    return q == 1 or not any(spec.excludes(p) for p in arith.prime_divisors(q))


def corollary_5_1_bound(m: int, a, b, ring: Ring | None = None) -> list[int]:
    """Primes ``p`` at which both ``C(m, a, b, p)`` and ``C(m, b, a, p)`` fail.

    For every other prime ``p`` and irreducible ``f`` with these coefficients,
    ``f(X^p)`` is irreducible. Raises :class:`UnitCoefficientsError` when
    ``a`` and ``b`` are both units.
    """
    R = ring or infer_ring(a, b)
    if unit_coefficients(a, b, R):
        raise UnitCoefficientsError("a and b are both units; the set of bad primes need not be finite")
    a, b = R.coerce(a), R.coerce(b)
    if m < 1:
        raise DomainError("m must be positive")
    sign = R.one if m % 2 == 0 else R.neg(R.one)
    sa, sb = R.mul(sign, a), R.mul(sign, b)
    e = exponent_pair(a, b, R)
    return [
        p
        for p in arith.prime_divisors(e)
        if is_inadmissible_prime(a, sb, p, R) and is_inadmissible_prime(b, sa, p, R)
    ]


__all__ = [
    "AdmissibleSpec",
    "Shape",
    "admissible_spec",
    "corollary_5_1_bound",
    "exponent_pair",
    "is_inadmissible_prime",
    "membership",
    "unit_coefficients",
]
