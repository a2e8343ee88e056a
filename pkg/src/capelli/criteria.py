"""Sufficient conditions for the irreducibility of ``f(X^n)``.

The central object is the condition ``C(m, a, b, n)`` on the degree ``m``,
leading coefficient ``a`` and constant term ``b`` of ``f``:

* for every prime ``p | n`` and unit ``u``: ``u*a`` is not a p-th power,
  or ``(-1)^m * u * b`` is not a p-th power;
* and, when ``4 | n``, for every unit ``u``: ``u*a`` is not a square or
  ``u*b`` is not a square.

If ``f`` is irreducible and ``C(m, a, b, n)`` or ``C(m, b, a, n)`` holds,
then ``f(X^n)`` is irreducible. The test is one-sided: when both fail the
criterion says nothing.

Only :func:`theorem_1_1_check` (with ``verify_input_irreducible``) and
:func:`resolve_with_oracle` consult the factorization oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import prod

from . import arith
from .errors import DomainError, OracleBudgetExceeded, PreconditionError
from .poly import Polynomial, inflate
from .rings import GAUSSIAN, INTEGERS, GaussInt, Ring


class Status(enum.Enum):
    IRREDUCIBLE_BY_CRITERION = "irreducible-by-criterion"
    CRITERION_SILENT = "criterion-silent"
    REDUCIBLE_BY_ORACLE = "reducible-by-oracle"
    IRREDUCIBLE_BY_ORACLE = "irreducible-by-oracle"
    ORACLE_BUDGET_EXCEEDED = "oracle-budget-exceeded"


class Direction(enum.Enum):
    DIRECT = "direct"  # C(m, a, b, n)
    DUAL = "dual"  # C(m, b, a, n)


@dataclass(frozen=True)
class Branch:
    """Which part of the condition a row (or witness) belongs to.

    ``Branch(p)`` is the prime branch for the prime ``p``; ``Branch(2, four=True)``
    is the extra branch used when ``4 | n``.
    """

    p: int
    four: bool = False

    def __str__(self):
        return "four" if self.four else f"p={self.p}"


@dataclass(frozen=True)
class ConditionRow:
    branch: Branch
    u: object
    A_holds: bool  # u*a is not a p-th power
    B_holds: bool  # (-1)^m*u*b (prime branch) or u*b (four branch) is not a p-th power

    @property
    def holds(self) -> bool:
        return self.A_holds or self.B_holds


@dataclass(frozen=True)
class ConditionTrace:
    ring: Ring
    m: int
    a: object
    b: object
    n: int
    rows: tuple[ConditionRow, ...]

    @property
    def verdict(self) -> bool:
        return all(r.holds for r in self.rows)


@dataclass(frozen=True)
class Verdict:
    status: Status
    direction: Direction | None = None
    trace: ConditionTrace | None = None
    traces: tuple[ConditionTrace, ...] = ()
    certificate: object = None

    def __post_init__(self):
        if self.status is Status.IRREDUCIBLE_BY_CRITERION:
            if self.direction is None or self.trace is None or not self.trace.verdict:
                raise DomainError("irreducible-by-criterion needs a succeeding trace")


def infer_ring(*xs) -> Ring:
    return GAUSSIAN if any(isinstance(x, GaussInt) for x in xs) else INTEGERS


def condition_C(m: int, a, b, n: int, ring: Ring | None = None) -> ConditionTrace:
    """Evaluate ``C(m, a, b, n)`` row by row.

    Rows come out ordered by branch (primes ascending, then the 4-branch)
    and, within a branch, by the ring's unit order.
    """
    R = ring or infer_ring(a, b)
    a, b = R.coerce(a), R.coerce(b)
    if n < 2:
        raise DomainError("condition C needs n >= 2")
    if m < 1:
        raise DomainError("condition C needs m >= 1")
    if R.is_zero(a) or R.is_zero(b):
        raise DomainError("condition C needs nonzero a and b")
    sign = R.one if m % 2 == 0 else R.neg(R.one)
    rows = []
    for p in arith.prime_divisors(n):
        for u in R.units():
            A = R.is_pth_power(R.mul(u, a), p) is None
            B = R.is_pth_power(R.mul(sign, R.mul(u, b)), p) is None
            rows.append(ConditionRow(Branch(p), u, A, B))
    if n % 4 == 0:
        for u in R.units():
            A = R.is_pth_power(R.mul(u, a), 2) is None
            B = R.is_pth_power(R.mul(u, b), 2) is None
            rows.append(ConditionRow(Branch(2, four=True), u, A, B))
    return ConditionTrace(R, m, a, b, n, tuple(rows))


def _check_input(f: Polynomial) -> None:
    if f.is_zero() or f.degree < 1:
        raise DomainError("f must have positive degree")
    if f.ring.is_zero(f.coeffs[0]):
        raise PreconditionError("f(0) = 0; divide out the power of X first")


def theorem_1_1_check(
    f: Polynomial,
    n: int,
    verify_input_irreducible: bool = False,
    max_work: int | None = None,
) -> Verdict:
    """Try ``C(m, a, b, n)``, then the dual ``C(m, b, a, n)``.

    Returns ``IRREDUCIBLE_BY_CRITERION`` with the succeeding direction, or
    ``CRITERION_SILENT``. Never claims reducibility.
    With ``verify_input_irreducible`` the oracle first confirms that ``f``
    itself is irreducible; otherwise that is trusted.
    """
    _check_input(f)
    if n < 2:
        raise DomainError("n must be at least 2")
    if verify_input_irreducible:
        from .oracle import DEFAULT_MAX_WORK, is_irreducible

        if not is_irreducible(f, max_work or DEFAULT_MAX_WORK):
            raise PreconditionError(f"{f} is reducible")
    R, m = f.ring, f.degree
    a, b = f.lc, f.coeffs[0]
    direct = condition_C(m, a, b, n, R)
    if direct.verdict:
        return Verdict(Status.IRREDUCIBLE_BY_CRITERION, Direction.DIRECT, direct, (direct,))
    dual = condition_C(m, b, a, n, R)
    if dual.verdict:
        return Verdict(Status.IRREDUCIBLE_BY_CRITERION, Direction.DUAL, dual, (direct, dual))
    return Verdict(Status.CRITERION_SILENT, traces=(direct, dual))


def resolve_with_oracle(verdict: Verdict, f: Polynomial, n: int, max_work: int | None = None) -> Verdict:
    """Settle a silent verdict by factoring ``f(X^n)``; other verdicts pass through."""
    if verdict.status is not Status.CRITERION_SILENT:
        return verdict
    from .oracle import DEFAULT_MAX_WORK, factor

    try:
        F = factor(inflate(f, n), max_work or DEFAULT_MAX_WORK)
    except OracleBudgetExceeded:
        return replace(verdict, status=Status.ORACLE_BUDGET_EXCEEDED)
    if F.is_irreducible:
        return replace(verdict, status=Status.IRREDUCIBLE_BY_ORACLE)
    return replace(verdict, status=Status.REDUCIBLE_BY_ORACLE, certificate=F)


# -- X^n - a over the fraction field ------------------------------------------------


@dataclass(frozen=True)
class CapelliCertificate:
    """``a = c^t`` (case ``"i"``) or ``a = -4*c^4`` (case ``"ii"``), ``c = c_num / c_den``."""

    case: str
    t: int
    c_num: object
    c_den: object


def _lowest_terms(R: Ring, num, den):
    g = R.gcd(num, den)
    num, den = R.exquo(num, g), R.exquo(den, g)
    # Put the unit on the numerator so the denominator is canonical.
    den_c, u = R.canonical_associate(den)
    return R.mul(num, R.inverse(u)), den_c


def _fraction_root(R: Ring, num, den, t: int):
    """``(r, s)`` with ``(r/s)^t = num/den`` for a prime ``t``, or ``None``."""
    num, den = _lowest_terms(R, num, den)
    # num/den = c^t in lowest terms forces num = k*r^t and den = k*s^t for one unit k.
    for k in R.units():
        kinv = R.inverse(k)
        r = R.is_pth_power(R.mul(num, kinv), t)
        if r is None:
            continue
        s = R.is_pth_power(R.mul(den, kinv), t)
        if s is not None:
            return r, s
    return None


def capelli2_reducible(a_num, a_den, n: int, ring: Ring | None = None) -> CapelliCertificate | None:
    """Decide reducibility of ``X^n - a`` over the fraction field, ``a = a_num / a_den``.

    Returns a certificate when reducible and ``None`` when irreducible.
    Case (i) is searched over the prime divisors of ``n`` only, which
    suffices because ``c^(rs) = (c^r)^s``.
    """
    R = ring or infer_ring(a_num, a_den)
    a_num, a_den = R.coerce(a_num), R.coerce(a_den)
    if n < 2:
        raise DomainError("n must be at least 2")
    if R.is_zero(a_num) or R.is_zero(a_den):
        raise DomainError("a must be a nonzero fraction")
    for t in arith.prime_divisors(n):
        root = _fraction_root(R, a_num, a_den, t)
        if root is not None:
            return CapelliCertificate("i", t, *root)
    if n % 4 == 0:
        # -4*c^4 = a  <=>  c^4 = -a/4: take a square root, then a square root of +-it.
        num, den = R.neg(a_num), R.mul(R.from_int(4), a_den)
        sq = _fraction_root(R, num, den, 2)
        if sq is not None:
            r, s = sq
            for sign in (R.one, R.neg(R.one)):
                c = _fraction_root(R, R.mul(sign, r), s, 2)
                if c is not None:
                    return CapelliCertificate("ii", 4, *c)
    return None


# -- exponent reduction ---------------------------------------------------------------


def squarefree_part(n: int) -> int:
    """Product of the distinct primes dividing ``n``."""
    if n < 1:
        raise DomainError("squarefree_part needs n >= 1")
    return prod(arith.prime_divisors(n)) if n > 1 else 1


def corollary_4_5_reduction(n: int) -> list[int]:
    """Exponents ``t`` (primes dividing ``n``, then 4 if ``4 | n``) that decide ``f(X^n)``.

    For irreducible ``f``, ``f(X^n)`` is reducible iff some ``f(X^t)`` is.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    out = arith.prime_divisors(n)
    if n % 4 == 0:
        out.append(4)
    return out


__all__ = [
    "Branch",
    "CapelliCertificate",
    "ConditionRow",
    "ConditionTrace",
    "Direction",
    "Status",
    "Verdict",
    "capelli2_reducible",
    "condition_C",
    "corollary_4_5_reduction",
    "resolve_with_oracle",
    "squarefree_part",
    "theorem_1_1_check",
]
