"""Exact coefficient rings: the integers, the Gaussian integers and prime fields.

A ring object is the arithmetic context; elements are plain values
(``int`` for the integers and for residues mod q, :class:`GaussInt` for
the Gaussian integers). Every ring exposes the same small interface:

* arithmetic: ``add``, ``sub``, ``mul``, ``neg``, ``pow``, ``exquo``
* units: ``units``, ``is_unit``, ``inverse``, ``unit_pth_powers``
* factorization: ``canonical_associate``, ``canonical_factor``, ``exponent``
* ``is_pth_power`` and a text grammar via ``parse``/``format``.

Canonical associates: positive integers in Z; in Z[i] the unique associate
with ``re > 0`` and ``-re < im <= re`` (so ``1+i``, ``2+i`` and ``2-i``
are all canonical). Prime factors are sorted by norm, then by real part,
then by descending imaginary part.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator

from . import arith
from .errors import DomainError, ExactDivisionError, ParseError


class Kind(enum.Enum):
    INTEGERS = "z"
    GAUSSIAN = "zi"
    PRIME_FIELD = "fq"


@dataclass(frozen=True, slots=True)
class GaussInt:
    """A Gaussian integer ``re + im*i``."""

    re: int
    im: int = 0

    @staticmethod
    def of(x: "GaussInt | int") -> "GaussInt":
        return x if isinstance(x, GaussInt) else GaussInt(x, 0)

    def __add__(self, other):
        o = GaussInt.of(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussInt.of(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussInt.of(other) - self

    def __mul__(self, other):
        o = GaussInt.of(other)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power of a Gaussian integer")
        out, base = GaussInt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self):
        return GAUSSIAN.format(self)


I = GaussInt(0, 1)


@dataclass(frozen=True)
class PrimeFactorization:
    """``unit * prod(prime**e for prime, e in factors)``."""

    ring: "Ring"
    unit: object
    factors: tuple[tuple[object, int], ...]

    def expand(self):
        R = self.ring
        out = self.unit
        for p, e in self.factors:
            out = R.mul(out, R.pow(p, e))
        return out


class Ring:
    """Common interface; see the module docstring."""

    kind: Kind
    modulus: int | None = None
    characteristic: int = 0

    zero: object
    one: object

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.kind, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def name(self) -> str:
        return self.kind.value if self.modulus is None else f"fq{self.modulus}"

    # -- arithmetic --------------------------------------------------------

    def coerce(self, x):
        raise NotImplementedError

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def pow(self, x, k: int):
        return x**k

    def is_zero(self, x) -> bool:
        return not x

    def from_int(self, k: int):
        return self.coerce(k)

    def exquo(self, x, y):
        """Exact quotient ``x / y``; raises :class:`ExactDivisionError` if ``y`` does not divide ``x``."""
        raise NotImplementedError

    def divides(self, y, x) -> bool:
        """Whether ``y | x``."""
        if self.is_zero(y):
            return self.is_zero(x)
        try:
            self.exquo(x, y)
        except ExactDivisionError:
            return False
        return True

    def div_by_int(self, x, k: int):
        """``x / k`` for a nonzero rational integer ``k``, or ``None`` if inexact."""
        raise NotImplementedError

    # -- units -------------------------------------------------------------

    def units(self) -> list:
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        return x in self.units()

    def inverse(self, u):
        if not self.is_unit(u):
            raise DomainError(f"{self.format(u)} is not a unit")
        return self.exquo(self.one, u)

    def unit_pth_powers(self, p: int) -> list:
        """The subgroup ``U^p``, listed in the order of :meth:`units`."""
        _check_prime(p)
        powers = {self.pow(u, p) for u in self.units()}
        return [u for u in self.units() if u in powers]

    # -- factorization -----------------------------------------------------

    def norm(self, x) -> int:
        raise NotImplementedError

    def canonical_associate(self, x):
        """``(c, u)`` with ``x = u * c``, ``u`` a unit and ``c`` canonical."""
        raise NotImplementedError

    def canonical_factor(self, x) -> PrimeFactorization:
        raise NotImplementedError

    def exponent(self, x) -> int:
        """gcd of the prime exponents of ``x``; 0 for units."""
        fac = self.canonical_factor(x)
        return reduce(math.gcd, (e for _, e in fac.factors), 0)

    def is_pth_power(self, x, p: int):
        """A p-th root of ``x`` if ``x`` is a p-th power in the ring, else ``None``."""
        _check_prime(p)
        if self.is_zero(x):
            return self.zero
        fac = self.canonical_factor(x)
        if any(e % p for _, e in fac.factors):
            return None
        for v in self.units():
            if self.pow(v, p) == fac.unit:
                root = v
                for q, e in fac.factors:
                    root = self.mul(root, self.pow(q, e // p))
                return root
        return None

    def gcd(self, x, y):
        """Canonical gcd; ``gcd(0, 0) = 0``."""
        raise NotImplementedError

    def divisors(self, x) -> list:
        """Canonical-associate divisors of a nonzero ``x``, sorted by :meth:`sort_key`."""
        fac = self.canonical_factor(x)
        out = [self.one]
        for p, e in fac.factors:
            pk = [self.pow(p, k) for k in range(e + 1)]
            out = [self.mul(d, q) for d in out for q in pk]
        return sorted((self.canonical_associate(d)[0] for d in out), key=self.sort_key)

    def sort_key(self, x):
        raise NotImplementedError

    def lex_key(self, x):
        """Key used to order polynomials coefficient by coefficient."""
        return self.sort_key(x)

    def elements(self, max_norm: int) -> Iterator:
        """Every element of norm at most ``max_norm`` (all residues for a field)."""
        raise NotImplementedError

    # -- text ----------------------------------------------------------------

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        from .poly import parse_poly

        f = parse_poly(text, self)
        if len(f.coeffs) > 1:
            raise ParseError("expected a constant, found a polynomial", text, 0)
        return f.coeffs[0] if f.coeffs else self.zero

    def __repr__(self):
        return f"<ring {self.name}>"


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not arith.is_prime(p):
        raise DomainError(f"{p!r} is not a prime")


class Integers(Ring):
    kind = Kind.INTEGERS
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, GaussInt):
            if x.im:
                raise DomainError(f"{x} is not a rational integer")
            return x.re
        if not isinstance(x, int):
            raise DomainError(f"{x!r} is not an integer")
        return x

    def exquo(self, x, y):
        if y == 0:
            raise ExactDivisionError("division by zero")
        q, r = divmod(x, y)
        if r:
            raise ExactDivisionError(f"{y} does not divide {x}")
        return q

    def div_by_int(self, x, k):
        q, r = divmod(x, k)
        return None if r else q

    def units(self):
        return [1, -1]

    def is_unit(self, x):
        return x in (1, -1)

    def norm(self, x):
        return abs(x)

    def canonical_associate(self, x):
        return (-x, -1) if x < 0 else (x, 1)

    def canonical_factor(self, x):
        if x == 0:
            raise DomainError("canonical_factor of zero")
        return PrimeFactorization(self, 1 if x > 0 else -1, tuple(arith.factorint(x).items()))

    def is_pth_power(self, x, p):
        _check_prime(p)
        if x < 0 and p == 2:
            return None
        r, exact = arith.integer_nthroot(abs(x), p)
        if not exact:
            return None
        return -r if x < 0 else r

    def gcd(self, x, y):
        return math.gcd(x, y)

    def divisors(self, x):
        return arith.divisors(x)

    def sort_key(self, x):
        return (abs(x), x < 0)

    def lex_key(self, x):
        return x

    def elements(self, max_norm):
        yield 0
        for k in range(1, max_norm + 1):
            yield k
            yield -k


class GaussianIntegers(Ring):
    kind = Kind.GAUSSIAN
    zero = GaussInt(0)
    one = GaussInt(1)

    _UNITS = (GaussInt(1), GaussInt(-1), GaussInt(0, 1), GaussInt(0, -1))

    def coerce(self, x):
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return GaussInt(x)
        raise DomainError(f"{x!r} is not a Gaussian integer")

    def exquo(self, x, y):
        x, y = self.coerce(x), self.coerce(y)
        n = y.norm()
        if n == 0:
            raise ExactDivisionError("division by zero")
        t = x * y.conjugate()
        if t.re % n or t.im % n:
            raise ExactDivisionError(f"{y} does not divide {x}")
        return GaussInt(t.re // n, t.im // n)

    def div_by_int(self, x, k):
        if x.re % k or x.im % k:
            return None
        return GaussInt(x.re // k, x.im // k)

    def units(self):
        return list(self._UNITS)

    def is_unit(self, x):
        return self.coerce(x).norm() == 1

    def inverse(self, u):
        u = self.coerce(u)
        if u.norm() != 1:
            raise DomainError(f"{u} is not a unit")
        return u.conjugate()

    def norm(self, x):
        return x.norm()

    def canonical_associate(self, x):
        x = self.coerce(x)
        if not x:
            return x, self.one
        for u in self._UNITS:
            c = x * u.conjugate()
            if c.re > 0 and -c.re < c.im <= c.re:
                return c, u
        raise AssertionError("unreachable")

    def _split(self, p: int) -> list[GaussInt]:
        # Canonical Gaussian primes above the rational prime p.
        if p == 2:
            return [GaussInt(1, 1)]
        if p % 4 == 3:
            return [GaussInt(p)]
        a, b = arith.two_squares(p)
        return [GaussInt(a, b), GaussInt(a, -b)]

    def canonical_factor(self, x):
        x = self.coerce(x)
        if not x:
            raise DomainError("canonical_factor of zero")
        rest = x
        factors = []
        for p in arith.factorint(x.norm()):
            for q in self._split(p):
                e = 0
                while True:
                    try:
                        nxt = self.exquo(rest, q)
                    except ExactDivisionError:
                        break
                    rest, e = nxt, e + 1
                if e:
                    factors.append((q, e))
        if rest.norm() != 1:
            raise AssertionError(f"leftover {rest} factoring {x}")
        factors.sort(key=lambda t: self.sort_key(t[0]))
        return PrimeFactorization(self, rest, tuple(factors))

    def gcd(self, x, y):
        while y:
            n = y.norm()
            t = x * y.conjugate()
            q = GaussInt(_round_div(t.re, n), _round_div(t.im, n))
            x, y = y, x - q * y
        return self.canonical_associate(x)[0]

    def sort_key(self, x):
        return (x.norm(), x.re, -x.im)

    def lex_key(self, x):
        return (x.re, x.im)

    def elements(self, max_norm):
        r = math.isqrt(max_norm)
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if a * a + b * b <= max_norm:
                    yield GaussInt(a, b)

    def format(self, x):
        a, b = x.re, x.im
        if b == 0:
            return str(a)
        im = {1: "i", -1: "-i"}.get(b, f"{b}*i")
        if a == 0:
            return im
        return f"{a}{im}" if b < 0 else f"{a}+{im}"


def _round_div(a: int, n: int) -> int:
    return (2 * a + n) // (2 * n)


class PrimeField(Ring):
    kind = Kind.PRIME_FIELD
    zero = 0
    one = 1

    def __init__(self, q: int):
        if not arith.is_prime(q):
            raise DomainError(f"field size {q} is not a prime")
        self.modulus = q
        self.characteristic = q

    def coerce(self, x):
        if isinstance(x, GaussInt):
            if x.im:
                raise DomainError(f"{x} is not a residue")
            x = x.re
        if not isinstance(x, int):
            raise DomainError(f"{x!r} is not an integer residue")
        return x % self.modulus

    def add(self, x, y):
        return (x + y) % self.modulus

    def sub(self, x, y):
        return (x - y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def mul(self, x, y):
        return x * y % self.modulus

    def pow(self, x, k):
        return pow(x, k, self.modulus)

    def exquo(self, x, y):
        if y % self.modulus == 0:
            raise ExactDivisionError("division by zero")
        return x * pow(y, -1, self.modulus) % self.modulus

    def div_by_int(self, x, k):
        if k % self.modulus == 0:
            return None
        return self.exquo(x, k % self.modulus)

    def units(self):
        return list(range(1, self.modulus))

    def is_unit(self, x):
        return x % self.modulus != 0

    def norm(self, x):
        return 0 if x == 0 else 1

    def canonical_associate(self, x):
        return (0, 1) if x == 0 else (1, x)

    def canonical_factor(self, x):
        if x % self.modulus == 0:
            raise DomainError("canonical_factor of zero")
        return PrimeFactorization(self, x, ())

    def is_pth_power(self, x, p):
        _check_prime(p)
        q = self.modulus
        if x == 0 or q == 2:
            return x
        g = math.gcd(p, q - 1)
        if pow(x, (q - 1) // g, q) != 1:
            return None
        if g == 1:
            return pow(x, pow(p, -1, q - 1), q)
        # g = p here; a root exists, find it by search.
        return next(r for r in range(1, q) if pow(r, p, q) == x)

    def unit_pth_powers(self, p):
        _check_prime(p)
        q = self.modulus
        g = math.gcd(p, q - 1)
        return [u for u in range(1, q) if pow(u, (q - 1) // g, q) == 1]

    def gcd(self, x, y):
        return 1 if (x or y) else 0

    def divisors(self, x):
        return [1]

    def sort_key(self, x):
        return x

    def elements(self, max_norm=None):
        return iter(range(self.modulus))

    def __repr__(self):
        return f"<ring F_{self.modulus}>"


INTEGERS = Integers()
GAUSSIAN = GaussianIntegers()


def prime_field(q: int) -> PrimeField:
    return PrimeField(q)


def ring_from_name(name: str, q: int | None = None) -> Ring:
    """``"z"``, ``"zi"`` or ``"fq"`` (with ``q``) to a ring object."""
    name = name.lower()
    if name == "z":
        return INTEGERS
    if name == "zi":
        return GAUSSIAN
    if name == "fq":
        if q is None:
            raise DomainError("ring fq needs a modulus q")
        return PrimeField(q)
    raise DomainError(f"unknown ring {name!r}")


def units(ring: Ring) -> list:
    return ring.units()


def canonical_factor(ring: Ring, x) -> PrimeFactorization:
    return ring.canonical_factor(ring.coerce(x))


def is_pth_power(ring: Ring, x, p: int):
    return ring.is_pth_power(ring.coerce(x), p)


def unit_pth_powers(ring: Ring, p: int) -> list:
    return ring.unit_pth_powers(p)


def exponent(ring: Ring, x) -> int:
    return ring.exponent(ring.coerce(x))
