"""Brute-force factorization oracles.

These exist to check the criteria from the outside, so they share
nothing with :mod:`capelli.criteria` beyond basic polynomial arithmetic.

* Over a prime field: trial division by every monic polynomial of degree
  up to half the degree, in increasing order.
* Over Z and Z[i]: Kronecker's method. Evaluation nodes follow the fixed
  schedule ``0, 1, -1, 2, -2, ...``; a candidate factor of degree ``d`` is
  determined by its values at the first ``d + 1`` nodes, and those values
  range over the divisors of ``f`` at the nodes. Candidates are built in
  Newton form one node at a time; since the divided differences of a
  polynomial with integral coefficients at integer nodes are integral, a
  branch is dropped as soon as a divided difference fails to be.
  The top divided difference is the leading coefficient, which must
  divide ``lc(f)``. Over Z the degrees searched are first cut down by the
  factor-degree patterns of ``f`` modulo a few small primes.

Enumeration order is fixed (nodes in schedule order, divisors ascending,
units in ring order), so results are reproducible. Work limits raise
:class:`~capelli.errors.OracleBudgetExceeded` instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import arith
from .errors import DomainError, InternalError, OracleBudgetExceeded
from .poly import Polynomial, divides, exquo, primitive_part
from .rings import Kind, Ring

DEFAULT_MAX_WORK = 2_000_000
_EXTRA_NODES = 3


@dataclass(frozen=True)
class PolyFactorization:
    """``f = unit * prod(g**e for g, e in factors)``.

    Over Z and Z[i] ``unit`` carries the content of ``f`` too, so it is
    a unit only when ``f`` is primitive.
    """

    ring: Ring
    unit: object
    factors: tuple[tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        out = Polynomial(self.ring, [self.unit])
        for g, e in self.factors:
            out = out * g**e
        return out

    @property
    def is_irreducible(self) -> bool:
        return (
            len(self.factors) == 1
            and self.factors[0][1] == 1
            and self.ring.is_unit(self.unit)
        )

    @property
    def degrees(self) -> list[int]:
        return [g.degree for g, e in self.factors for _ in range(e)]


class _Work:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise OracleBudgetExceeded(f"oracle budget of {self.limit} steps exceeded")


def schedule() -> Iterator[int]:
    """Evaluation nodes ``0, 1, -1, 2, -2, ...``."""
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def normalize(g: Polynomial) -> Polynomial:
    """Canonical representative of ``g`` up to units.

    Positive leading coefficient over Z, canonical-associate leading
    coefficient over Z[i], monic over a field.
    """
    R = g.ring
    _, u = R.canonical_associate(g.lc)
    return g.scale(R.inverse(u)) if u != R.one else g


# -- prime fields -----------------------------------------------------------


def _fq_divmod_monic(a: list[int], g: tuple[int, ...], q: int) -> tuple[list[int], list[int]]:
    a = list(a)
    dg = len(g) - 1
    if len(a) - 1 < dg:
        return [], a
    quo = [0] * (len(a) - dg)
    for k in range(len(a) - 1, dg - 1, -1):
        c = a[k] % q
        if c:
            quo[k - dg] = c
            for j in range(dg):
                a[k - dg + j] = (a[k - dg + j] - c * g[j]) % q
            a[k] = 0
    rem = a[:dg]
    while rem and rem[-1] % q == 0:
        rem.pop()
    return quo, rem


def factor_prime_field(f: Polynomial, max_work: int = DEFAULT_MAX_WORK) -> PolyFactorization:
    """Complete factorization over F_q by exhaustive trial division."""
    R = f.ring
    if R.kind is not Kind.PRIME_FIELD:
        raise DomainError("factor_prime_field needs a prime-field polynomial")
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    q = R.modulus
    m = f.degree
    if q ** (-(-m // 2)) > max_work:
        raise OracleBudgetExceeded(f"{q}^{-(-m // 2)} trial divisors exceed budget {max_work}")
    lc = f.lc
    rem = list(normalize(f).coeffs)
    factors: list[tuple[Polynomial, int]] = []
    d = 1
    while 2 * d <= len(rem) - 1:
        for tail in product(range(q), repeat=d):
            g = tuple(tail) + (1,)
            e = 0
            while 2 * d <= len(rem) - 1 or len(rem) - 1 == d:
                quo, r = _fq_divmod_monic(rem, g, q)
                if r:
                    break
                rem, e = quo, e + 1
            if e:
                factors.append((Polynomial(R, g), e))
            if 2 * d > len(rem) - 1:
                break
        d += 1
    if len(rem) > 1:
        last = Polynomial(R, rem)
        for i, (g, e) in enumerate(factors):
            if g == last:
                factors[i] = (g, e + 1)
                break
        else:
            factors.append((last, 1))
    factors.sort(key=lambda t: t[0].sort_key())
    return PolyFactorization(R, lc, tuple(factors))


# -- degree sieve over Z --------------------------------------------------------
#
# A factor of degree d over Z reduces to a product of irreducible factors
# mod q whose degrees sum to d, for every prime q not dividing lc(f) with
# f squarefree mod q. Intersecting the achievable sums over a few primes
# bounds the degrees Kronecker has to search, often down to nothing.

_SIEVE_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67)
_SIEVE_GOOD = 5


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fq_mod(a: list[int], g: list[int], q: int) -> list[int]:
    # g monic
    a = [c % q for c in a]
    dg = len(g) - 1
    for k in range(len(a) - 1, dg - 1, -1):
        c = a[k]
        if c:
            for j in range(dg):
                a[k - dg + j] = (a[k - dg + j] - c * g[j]) % q
            a[k] = 0
    return _trim(a[:dg])


def _fq_monic(a: list[int], q: int) -> list[int]:
    inv = pow(a[-1], -1, q)
    return [c * inv % q for c in a]


def _fq_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = _trim([c % q for c in a]), _trim([c % q for c in b])
    while b:
        b = _fq_monic(b, q)
        a, b = b, _fq_mod(a, b, q)
    return _fq_monic(a, q) if a else a


def _fq_mulmod(a: list[int], b: list[int], g: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fq_mod(out, g, q)


def _fq_powmod(a: list[int], e: int, g: list[int], q: int) -> list[int]:
    out, a = [1], _fq_mod(a, g, q)
    while e:
        if e & 1:
            out = _fq_mulmod(out, a, g, q)
        a = _fq_mulmod(a, a, g, q)
        e >>= 1
    return out


def _fq_degree_pattern(f: list[int], q: int) -> list[int] | None:
    """Degrees of the irreducible factors of monic ``f`` mod ``q``, or ``None`` if not squarefree."""
    deriv = [k * c for k, c in enumerate(f)][1:]
    if len(_fq_gcd(f, deriv, q)) != 1:
        return None
    degs: list[int] = []
    h, xp, d = f, [0, 1], 0
    while len(h) - 1 >= 2 * (d + 1):
        d += 1
        xp = _fq_powmod(xp, q, h, q)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] -= 1
        g = _fq_gcd(h, diff, q)
        if len(g) > 1:
            degs += [d] * ((len(g) - 1) // d)
            h = _fq_divmod_monic(h, tuple(g), q)[0]
            xp = _fq_mod(xp, h, q)
    if len(h) > 1:
        degs.append(len(h) - 1)
    return degs


def _subset_sums(degs: list[int]) -> set[int]:
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def possible_factor_degrees(f: Polynomial) -> set[int]:
    """Degrees a factor of the primitive integer polynomial ``f`` could have.

    Always contains ``0`` and ``deg f``; an empty middle proves irreducibility.
    """
    m = f.degree
    allowed = set(range(m + 1))
    good = 0
    for q in _SIEVE_PRIMES:
        if f.lc % q == 0:
            continue
        pattern = _fq_degree_pattern(_fq_monic([c % q for c in f.coeffs], q), q)
        if pattern is None:
            continue
        allowed &= _subset_sums(pattern)
        good += 1
        if good == _SIEVE_GOOD or allowed == {0, m}:
            break
    return allowed


# -- Kronecker over Z and Z[i] ------------------------------------------------


class _RootFound(Exception):
    def __init__(self, x: int):
        self.x = x


class _Kronecker:
    # Node values whose factorization needs more Pollard-rho steps than this
    # are skipped in favour of the next node of the schedule.
    VALUE_STEPS = 300_000

    def __init__(self, f: Polynomial, work: _Work):
        self.f = f
        self.R = f.ring
        self.work = work
        self.nodes: list[int] = []
        self.values: list = []
        self._cands: dict[int, list] = {}
        self._gen = schedule()
        self.root = None
        top = (len(f.coeffs) - 1) // 2
        if self.R.kind is Kind.INTEGERS and top >= 1:
            self.allowed = possible_factor_degrees(f)
            top = max(d for d in self.allowed if d <= top)
        else:
            self.allowed = None
        self.top = top
        try:
            for _ in range(len(f.coeffs) // 2 + 1 + _EXTRA_NODES):
                self._push()
        except _RootFound as r:
            self.root = r.x

    def _push(self) -> None:
        x = next(self._gen)
        v = self.f(x)
        if self.R.is_zero(v):
            raise _RootFound(x)
        self.nodes.append(x)
        self.values.append(v)

    def candidates(self, k: int) -> list:
        # Node 0 fixes the unit ambiguity: only canonical divisors there.
        while k not in self._cands:
            R = self.R
            try:
                divs = _divisors(R, self.values[k], self.VALUE_STEPS)
            except OracleBudgetExceeded:
                if k == 0:
                    raise
                self.work.tick(1000)
                del self.nodes[k], self.values[k]
                self._push()
                continue
            self.work.tick(len(divs))
            if k == 0:
                self._cands[k] = divs
            else:
                self._cands[k] = [R.mul(u, d) for d in divs for u in R.units()]
        return self._cands[k]

    def find_factor(self) -> Polynomial | None:
        """Some factor of degree between 1 and ``deg(f) // 2``, or ``None`` if ``f`` is irreducible."""
        R = self.R
        try:
            if self.root is None:
                return self._search()
        except _RootFound as r:
            self.root = r.x
        return Polynomial(R, [R.neg(R.from_int(self.root)), 1])

    def _search(self) -> Polynomial | None:
        # One depth-first pass over node values; at depth k the Newton
        # prefix is a candidate factor of degree exactly k.
        R, f = self.R, self.f
        top = self.top
        if top < 1:
            return None
        lc_f = f.lc
        is_int = R.kind is Kind.INTEGERS
        newton = [None] * (top + 1)
        work = self.work

        def descend(k: int, prev_diag: list):
            cands = self.candidates(k)
            work.tick(len(cands))
            nodes = self.nodes
            dens = [nodes[k] - nodes[k - j] for j in range(1, k + 1)]
            for y in cands:
                diag = [y]
                if is_int:
                    for j in range(k):
                        num = diag[j] - prev_diag[j]
                        if num % dens[j]:
                            break
                        diag.append(num // dens[j])
                    if len(diag) <= k:
                        continue
                else:
                    for j in range(k):
                        t = R.div_by_int(diag[j] - prev_diag[j], dens[j])
                        if t is None:
                            break
                        diag.append(t)
                    if len(diag) <= k:
                        continue
                newton[k] = lead = diag[k]
                if k and lead and (self.allowed is None or k in self.allowed) and R.divides(lead, lc_f):
                    g = self._check(k, newton)
                    if g is not None:
                        return g
                if k < top:
                    g = descend(k + 1, diag)
                    if g is not None:
                        return g
            return None

        return descend(0, [])

    def _check(self, d: int, newton: list) -> Polynomial | None:
        R, nodes = self.R, self.nodes
        g = Polynomial(R, [newton[d]])
        for k in range(d - 1, -1, -1):
            g = g * Polynomial(R, [R.neg(R.from_int(nodes[k])), 1]) + newton[k]
        for x, v in zip(nodes[d + 1 :], self.values[d + 1 :]):
            gx = g(x)
            if R.is_zero(gx) or not R.divides(gx, v):
                return None
        return g if divides(g, self.f) else None


def _divisors(R: Ring, v, max_steps: int) -> list:
    if R.kind is Kind.INTEGERS:
        return arith.divisors(v, max_steps)
    arith.factorint(R.norm(v), max_steps)
    return R.divisors(v)


def _split_irreducible(g: Polynomial, work: _Work, out: list[Polynomial]) -> None:
    # g is primitive and normalized; appends its irreducible factors to out.
    stack = [g]
    while stack:
        h = stack.pop()
        if len(h.coeffs) <= 2:
            out.append(h)
            continue
        d = _Kronecker(h, work).find_factor()
        if d is None:
            out.append(h)
            continue
        d = normalize(d)
        stack += [normalize(exquo(h, d)), d]


def _factor_kronecker(f: Polynomial, max_work: int) -> PolyFactorization:
    R = f.ring
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    _, g = primitive_part(f)
    irreducibles: list[Polynomial] = []
    if len(g.coeffs) > 1:
        _split_irreducible(normalize(g), _Work(max_work), irreducibles)
    counts: dict[Polynomial, int] = {}
    for h in irreducibles:
        counts[h] = counts.get(h, 0) + 1
    factors = sorted(counts.items(), key=lambda t: t[0].sort_key())
    prod = Polynomial(R, [1])
    for h, e in factors:
        prod = prod * h**e
    unit = R.exquo(f.lc, prod.lc)
    out = PolyFactorization(R, unit, tuple(factors))
    if out.expand() != f:
        raise InternalError(f"factorization of {f} does not multiply back")
    return out


def factor_integers(f: Polynomial, max_work: int = DEFAULT_MAX_WORK) -> PolyFactorization:
    """Factor ``f`` over Z: content times irreducible primitive factors."""
    if f.ring.kind is not Kind.INTEGERS:
        raise DomainError("factor_integers needs an integer polynomial")
    return _factor_kronecker(f, max_work)


def factor_gaussian(f: Polynomial, max_work: int = DEFAULT_MAX_WORK) -> PolyFactorization:
    """Factor ``f`` over Z[i] with Gaussian divisor enumeration."""
    if f.ring.kind is not Kind.GAUSSIAN:
        raise DomainError("factor_gaussian needs a Gaussian-integer polynomial")
    return _factor_kronecker(f, max_work)


def factor(f: Polynomial, max_work: int = DEFAULT_MAX_WORK) -> PolyFactorization:
    """Dispatch on the coefficient ring."""
    if f.ring.kind is Kind.PRIME_FIELD:
        return factor_prime_field(f, max_work)
    return _factor_kronecker(f, max_work)


def is_irreducible(f: Polynomial, max_work: int = DEFAULT_MAX_WORK) -> bool:
    """Irreducibility in R[X]: primitive (for Z, Z[i]) and without proper factors.

    Stops at the first factor found, so reducible inputs are usually cheap.
    """
    if f.is_zero() or f.degree < 1:
        raise DomainError("is_irreducible needs a polynomial of positive degree")
    R = f.ring
    if R.kind is Kind.PRIME_FIELD:
        if f.degree == 1:
            return True
        return factor_prime_field(f, max_work).is_irreducible
    c, g = primitive_part(f)
    if c != R.one:
        return False
    if g.degree == 1:
        return True
    return _Kronecker(normalize(g), _Work(max_work)).find_factor() is None
