"""Explicit certificates of reducibility for ``f(X^n)``, plus cyclotomic helpers.

Let ``f`` be irreducible of degree ``m`` with leading coefficient ``a``. If
``f(X^p)`` is reducible for a prime ``p``, it has an irreducible factor ``P``
of degree ``m``. Split ``P(X) = sum_j X^j S_j(X^p)`` and let ``C`` be the
``p x p`` circulant with first row ``c_j = X^j S_j(X^p)``. Then

    (-1)^(m(p-1)) * u * f(X^p) = det C = P(X) * P*(X),     u = lc(P)^p / a,

with ``u`` a unit. When ``4 | n`` and ``f(X^4)`` is reducible although
``f(X^2)`` is not, the same holds for ``g = f(X^2)`` with ``p = 2``:

    u * f(X^4) = det [[S_0(X^2), X S_1(X^2)], [X S_1(X^2), S_0(X^2)]].

``det C`` is also ``prod_j P(w^j X)`` over the p-th roots of unity ``w^j``,
which gives an independent check through resultants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import arith
from .criteria import Branch, _check_input, corollary_4_5_reduction
from .errors import DomainError, ExactDivisionError, InternalError, PreconditionError
from .oracle import DEFAULT_MAX_WORK, factor, is_irreducible
from .poly import PolyDomain, Polynomial, det, det_expand, exquo, inflate, sj_decompose, sj_recompose
from .rings import INTEGERS, Kind, Ring, _check_prime

_EXPAND_LIMIT = 5  # Leibniz expansion up to 5x5, Bareiss beyond


@dataclass(frozen=True)
class WitnessDecomposition:
    branch: Branch
    u: object
    S: tuple[Polynomial, ...]
    P: Polynomial
    Pstar: Polynomial

    @property
    def p(self) -> int:
        return self.branch.p

    @property
    def equation(self) -> str:
        return "eq-2" if self.branch.four else "eq-1"


def circulant_det(c: list[Polynomial], expand: bool | None = None) -> Polynomial:
    """Determinant of the circulant whose row ``r``, column ``k`` entry is ``c[(k - r) % p]``.

    ``expand`` forces Leibniz expansion (True) or Bareiss elimination (False);
    by default small sizes are expanded.
    """
    p = len(c)
    _check_prime(p)
    R = c[0].ring
    if any(x.ring != R for x in c):
        raise DomainError("circulant entries must share a ring")
    M = [[c[(k - r) % p] for k in range(p)] for r in range(p)]
    K = PolyDomain(R)
    if expand is None:
        expand = p <= _EXPAND_LIMIT
    return det_expand(M, K) if expand else det(M, K)


def theorem_4_3_rhs(S: list[Polynomial], branch: Branch | None = None) -> Polynomial:
    """``det C`` for the circulant with entries ``X^j S_j(X^p)``, ``p = len(S)``."""
    p = len(S)
    if branch is not None and branch.p != p:
        raise DomainError(f"branch {branch} needs {branch.p} polynomials, got {p}")
    return circulant_det([inflate(s, p).shift(j) for j, s in enumerate(S)])


def build_pstar(P: Polynomial, p: int) -> Polynomial:
    """The cofactor ``P*`` with ``P * P* = det C``; equals ``P(-X)`` for ``p = 2``."""
    if P.is_zero():
        raise DomainError("P must be nonzero")
    D = theorem_4_3_rhs(sj_decompose(P, p))
    try:
        return exquo(D, P)
    except ExactDivisionError as exc:
        raise InternalError(f"P = {P} does not divide its circulant determinant") from exc


def _sign(R: Ring, k: int):
    return R.one if k % 2 == 0 else R.neg(R.one)


def _branch_parts(f: Polynomial, branch: Branch) -> tuple[Polynomial, int]:
    """The polynomial the branch works on (``f`` or ``f(X^2)``) and its sign exponent."""
    if branch.four:
        return inflate(f, 2), 0
    return f, f.degree * (branch.p - 1)


def extract_witness(
    f: Polynomial, n: int, max_work: int = DEFAULT_MAX_WORK, verify_input: bool = True
) -> WitnessDecomposition | None:
    """Find a witness that ``f(X^n)`` is reducible, or ``None`` if it is irreducible.

    Tries ``t`` = each prime dividing ``n`` (ascending), then 4, factoring
    ``f(X^t)`` with the oracle. The first reducible ``t`` yields the witness.
    Raises :class:`OracleBudgetExceeded` if the oracle gives up.
    """
    _check_input(f)
    if verify_input and not is_irreducible(f, max_work):
        raise PreconditionError(f"{f} is reducible")
    R = f.ring
    for t in corollary_4_5_reduction(n):
        branch = Branch(2, four=True) if t == 4 else Branch(t)
        p = branch.p
        g, sign_exp = _branch_parts(f, branch)
        F = factor(inflate(f, t), max_work)
        if F.is_irreducible:
            continue
        cands = [h for h, _ in F.factors if h.degree == g.degree]
        if not cands:
            raise InternalError(f"no factor of degree {g.degree} in {F}")
        P = cands[0]
        try:
            u = R.exquo(R.pow(P.lc, p), f.lc)
        except ExactDivisionError as exc:
            raise InternalError(f"lc(P)^{p} / a is not in the ring for P = {P}") from exc
        if not R.is_unit(u):
            raise InternalError(f"lc(P)^{p} / a = {R.format(u)} is not a unit")
        S = tuple(sj_decompose(P, p))
        Pstar = build_pstar(P, p)
        if theorem_4_3_rhs(list(S)) != inflate(g, p).scale(R.mul(_sign(R, sign_exp), u)):
            raise InternalError(f"determinant identity fails for P = {P}")
        return WitnessDecomposition(branch, u, S, P, Pstar)
    return None


def verify_witness(f: Polynomial, n: int, w: WitnessDecomposition) -> bool:
    """Check a witness from scratch; returns False on any mismatch.

    Verified: ``u`` is a unit, ``u*a`` is a p-th power, the branch fits ``n``,
    ``P = sum X^j S_j(X^p)``, ``det C = P * P*``, the degrees, and finally
    ``u f(X^n) = s * P(X^(n/t)) * P*(X^(n/t))`` with ``t = p`` (sign
    ``s = (-1)^(m(p-1))``) or ``t = 4`` (``s = 1``).
    """
    try:
        R, m, p = f.ring, f.degree, w.branch.p
        if len(w.S) != p or any(s.ring != R for s in w.S) or w.P.ring != R or w.Pstar.ring != R:
            return False
        if not R.is_unit(w.u) or R.is_pth_power(R.mul(w.u, f.lc), p) is None:
            return False
        t = 4 if w.branch.four else p
        if w.branch.four and p != 2:
            return False
        if not arith.is_prime(p) or n % t:
            return False
        if w.P != sj_recompose(list(w.S), p):
            return False
        if theorem_4_3_rhs(list(w.S)) != w.P * w.Pstar:
            return False
        i = 2 if w.branch.four else 1
        if w.P.degree != i * m or w.Pstar.degree != i * m * (p - 1):
            return False
        sign_exp = 0 if w.branch.four else m * (p - 1)
        lhs = inflate(f, n).scale(w.u)
        rhs = (inflate(w.P, n // t) * inflate(w.Pstar, n // t)).scale(_sign(R, sign_exp))
        return lhs == rhs
    except (DomainError, ExactDivisionError):
        return False


def corollary_4_6_check(f: Polynomial, s: int = 1) -> bool:
    """In characteristic ``p``: is some unit multiple of ``f`` a polynomial in p-th powers?

    For irreducible ``f`` this decides whether ``f(X^(p^s))`` is reducible.
    Over a prime field every element is a p-th power, so the answer is True.
    """
    R = f.ring
    if R.characteristic == 0:
        raise DomainError("needs a ring of positive characteristic")
    if s < 1:
        raise DomainError("s must be positive")
    if f.is_zero() or f.degree < 1:
        raise DomainError("f must have positive degree")
    p = R.characteristic
    return any(all(R.is_pth_power(R.mul(u, c), p) is not None for c in f.coeffs) for u in R.units())


# -- cyclotomic polynomials -----------------------------------------------------------------


@dataclass(frozen=True)
class CyclotomicRecord:
    n: int
    phi_n: Polynomial
    euler_phi: int


@lru_cache(maxsize=256)
def _cyclotomic(R: Ring, n: int) -> Polynomial:
    out = Polynomial(R, [-1] + [0] * (n - 1) + [1])
    for d in arith.divisors(n)[:-1]:
        out = exquo(out, _cyclotomic(R, d))
    return out


def cyclotomic(n: int, ring: Ring = INTEGERS) -> CyclotomicRecord:
    """``Phi_n`` over ``ring`` by exact division of ``X^n - 1``."""
    if n < 1:
        raise DomainError("n must be positive")
    chi = ring.characteristic
    if chi and n % chi == 0:
        raise DomainError(f"characteristic {chi} divides n = {n}")
    return CyclotomicRecord(n, _cyclotomic(ring, n), arith.euler_phi(n))


def cyclotomic_factor_count(n: int, q: int) -> tuple[int, int]:
    """``(d, phi(n)/d)`` with ``d`` the order of ``q`` mod ``n``: the factor shape of ``Phi_n`` over ``F_q``."""
    _check_prime(q)
    if n < 1:
        raise DomainError("n must be positive")
    d = arith.multiplicative_order(q, n)
    return d, arith.euler_phi(n) // d


def theorem_4_4_remark_applies(m: int, p: int) -> bool:
    """The degree half of the sufficient condition for ``P*`` to be irreducible."""
    if m < 1:
        raise DomainError("m must be positive")
    return math.gcd(m, p - 1) == 1


def phi_p_irreducible(p: int, ring: Ring) -> bool:
    """Whether ``Phi_p`` is irreducible over the fraction field of ``ring``.

    Over Q this is classical. Over Q(i) it still holds for prime ``p``:
    Q(i) and Q(zeta_p) meet only in Q, as 2 is the only prime ramified in
    Q(i) and ``p`` the only one in Q(zeta_p) (``p = 2`` is linear anyway).
    """
    _check_prime(p)
    if ring.kind is Kind.PRIME_FIELD:
        q = ring.modulus
        if q == p:
            return p == 2  # Phi_p = (X - 1)^(p-1) mod p
        return cyclotomic_factor_count(p, q)[1] == 1
    return True


@dataclass(frozen=True)
class PstarAssessment:
    remark: str  # "irreducible-by-remark" or "undetermined-by-remark"
    oracle_irreducible: bool | None


def assess_pstar(w: WitnessDecomposition, ring: Ring, max_work: int = DEFAULT_MAX_WORK) -> PstarAssessment:
    """Apply the sufficient condition for ``P*`` to be irreducible; when silent, ask the oracle."""
    if theorem_4_4_remark_applies(w.P.degree, w.p) and phi_p_irreducible(w.p, ring):
        return PstarAssessment("irreducible-by-remark", None)
    return PstarAssessment("undetermined-by-remark", is_irreducible(w.Pstar, max_work))


__all__ = [
    "CyclotomicRecord",
    "PstarAssessment",
    "WitnessDecomposition",
    "assess_pstar",
    "build_pstar",
    "circulant_det",
    "corollary_4_6_check",
    "cyclotomic",
    "cyclotomic_factor_count",
    "extract_witness",
    "phi_p_irreducible",
    "theorem_4_3_rhs",
    "theorem_4_4_remark_applies",
    "verify_witness",
]
