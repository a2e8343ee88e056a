"""Rational integer helpers: primality, factorization, roots, totients.

Everything here works on Python ints and is exact.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

from .errors import DomainError, OracleBudgetExceeded

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % d for d in range(2, math.isqrt(p) + 1))]
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_LIMIT = 10_000


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random, max_steps: int) -> int:
    # Returns a nontrivial factor of the odd composite n.
    steps = 0
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            steps += r
            if steps > max_steps:
                raise OracleBudgetExceeded(f"could not factor {n} within {max_steps} steps")
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@lru_cache(maxsize=4096)
def _factor_cached(n: int, max_steps: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in range(2, _TRIAL_LIMIT):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_brent(m, rng, max_steps)
        stack += [d, m // d]
    return tuple(sorted(out.items()))


def factorint(n: int, max_steps: int = 2_000_000) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``, ascending.

    Trial division handles everything below 10^8; larger cofactors go to
    Pollard-Brent, which raises :class:`OracleBudgetExceeded` after
    ``max_steps`` iterations.
    """
    n = abs(n)
    if n == 0:
        raise DomainError("cannot factor 0")
    return dict(_factor_cached(n, max_steps))


def prime_divisors(n: int) -> list[int]:
    return list(factorint(n))


def divisors(n: int, max_steps: int = 2_000_000) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order."""
    fac = factorint(n, max_steps)
    out = [1]
    for p, e in fac.items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def integer_nthroot(x: int, k: int) -> tuple[int, bool]:
    """Floor of the real k-th root of ``x >= 0`` and whether it is exact."""
    if x < 0 or k < 1:
        raise DomainError("integer_nthroot needs x >= 0 and k >= 1")
    if x < 2:
        return x, True
    if k == 1:
        return x, True
    if k == 2:
        r = math.isqrt(x)
        return r, r * r == x
    # Newton iteration from an overestimate.
    r = 1 << -(-x.bit_length() // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    return r, r**k == x


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError("euler_phi needs n >= 1")
    out = n
    for p in factorint(n):
        out = out // p * (p - 1)
    return out


def multiplicative_order(q: int, n: int) -> int:
    """Least d >= 1 with q^d = 1 (mod n)."""
    if math.gcd(q, n) != 1:
        raise DomainError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    order = euler_phi(n)
    for p in factorint(order):
        while order % p == 0 and pow(q, order // p, n) == 1:
            order //= p
    return order


def two_squares(p: int) -> tuple[int, int]:
    """``(a, b)`` with ``a > b > 0`` and ``a^2 + b^2 = p`` for a prime ``p = 1 (mod 4)``."""
    if p % 4 != 1:
        raise DomainError(f"{p} is not 1 mod 4")
    # A square root of -1 mod p, then the Euclidean descent of Hermite-Serret.
    for c in range(2, p):
        t = pow(c, (p - 1) // 4, p)
        if t * t % p == p - 1:
            break
    a, b = p, t
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    c = math.isqrt(p - b * b)
    return max(b, c), min(b, c)

