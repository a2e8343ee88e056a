"""Dense univariate polynomials over a :class:`~capelli.rings.Ring`.

Coefficients are stored in ascending degree order with the zero
polynomial represented by the empty tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from itertools import permutations
from typing import Sequence

from .errors import DomainError, ExactDivisionError, ParseError, RingMismatchError
from .rings import INTEGERS, GaussInt, Kind, Ring


@dataclass(frozen=True, eq=False)
class Polynomial:
    ring: Ring
    coeffs: tuple

    def __init__(self, ring: Ring, coeffs: Sequence = ()):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, ring: Ring, k: int, c=1) -> "Polynomial":
        return cls(ring, [0] * k + [c])

    @classmethod
    def constant(cls, ring: Ring, c) -> "Polynomial":
        return cls(ring, [c])

    @classmethod
    def x(cls, ring: Ring) -> "Polynomial":
        return cls(ring, [0, 1])

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise DomainError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.zero

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def sort_key(self):
        return (len(self.coeffs), tuple(self.ring.lex_key(c) for c in self.coeffs))

    # -- arithmetic ----------------------------------------------------------

    def _other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        return Polynomial(self.ring, [other])

    def __add__(self, other):
        o = self._other(other)
        R = self.ring
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(R, [R.add(x, b[k]) if k < len(b) else x for k, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        R = self.ring
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial(R)
        out = [R.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if R.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = R.add(out[i + j], R.mul(x, y))
        return Polynomial(R, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative polynomial power")
        out, base = Polynomial(self.ring, [1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        R = self.ring
        return Polynomial(R, [R.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``X**k``."""
        if not self.coeffs:
            return self
        return Polynomial(self.ring, [self.ring.zero] * k + list(self.coeffs))

    def __call__(self, x):
        return evaluate(self, x)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({self.ring.name}, {format_poly(self)!r})"


# -- division ------------------------------------------------------------------


def divmod_poly(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Long division; every step needs ``lc(g)`` to divide the running leading coefficient.

    Over a field this is ordinary division with remainder. Over Z and Z[i]
    it raises :class:`ExactDivisionError` as soon as a quotient coefficient
    would leave the ring.
    """
    R = f.ring
    if g.is_zero():
        raise ExactDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lc = g.coeffs[-1]
    if len(rem) - 1 < dg:
        return Polynomial(R), f
    quo = [R.zero] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if R.is_zero(c):
            continue
        q = R.exquo(c, lc)
        quo[k - dg] = q
        for j, gc in enumerate(g.coeffs):
            rem[k - dg + j] = R.sub(rem[k - dg + j], R.mul(q, gc))
    return Polynomial(R, quo), Polynomial(R, rem[:dg])


def exquo(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient ``f / g``; raises :class:`ExactDivisionError` otherwise."""
    q, r = divmod_poly(f, g)
    if not r.is_zero():
        raise ExactDivisionError("nonzero remainder")
    return q


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        exquo(f, g)
    except ExactDivisionError:
        return False
    return True


# -- structural operations -------------------------------------------------------


def evaluate(f: Polynomial, x):
    R = f.ring
    x = R.coerce(x)
    out = R.zero
    for c in reversed(f.coeffs):
        out = R.add(R.mul(out, x), c)
    return out


def content(f: Polynomial):
    """Canonical gcd of the coefficients; 1 exactly when ``f`` is primitive."""
    if f.is_zero():
        raise DomainError("content of the zero polynomial")
    R = f.ring
    if R.kind is Kind.PRIME_FIELD:
        return R.one
    return reduce(R.gcd, f.coeffs, R.zero)


def primitive_part(f: Polynomial) -> tuple[object, Polynomial]:
    """``(c, g)`` with ``f = c * g`` and ``g`` primitive; ``c`` is canonical."""
    c = content(f)
    R = f.ring
    return c, Polynomial(R, [R.exquo(x, c) for x in f.coeffs])


def is_primitive(f: Polynomial) -> bool:
    return content(f) == f.ring.one


def inflate(f: Polynomial, n: int) -> Polynomial:
    """``f(X**n)``."""
    if n < 1:
        raise DomainError("inflate needs n >= 1")
    R = f.ring
    out = [R.zero] * (n * (len(f.coeffs) - 1) + 1) if f.coeffs else []
    for k, c in enumerate(f.coeffs):
        out[n * k] = c
    return Polynomial(R, out)


def deflate(f: Polynomial, n: int) -> Polynomial | None:
    """``g`` with ``g(X**n) = f``, or ``None`` when some exponent of ``f`` is not a multiple of ``n``."""
    if n < 1:
        raise DomainError("deflate needs n >= 1")
    R = f.ring
    if any(not R.is_zero(c) for k, c in enumerate(f.coeffs) if k % n):
        return None
    return Polynomial(R, f.coeffs[::n])


def reciprocal(f: Polynomial) -> Polynomial:
    """``X**m * f(1/X)``; requires ``f(0) != 0`` so the degree is kept."""
    if f.is_zero() or f.ring.is_zero(f.coeffs[0]):
        raise DomainError("reciprocal needs f(0) != 0")
    return Polynomial(f.ring, f.coeffs[::-1])


def scale_variable(f: Polynomial, c) -> Polynomial:
    """``f(c*X)``."""
    R = f.ring
    out, ck = [], R.one
    for a in f.coeffs:
        out.append(R.mul(a, ck))
        ck = R.mul(ck, c)
    return Polynomial(R, out)


def sj_decompose(P: Polynomial, p: int) -> list[Polynomial]:
    """``[S_0, ..., S_{p-1}]`` with ``P(X) = sum_j X**j * S_j(X**p)``."""
    if P.is_zero():
        raise DomainError("sj_decompose of the zero polynomial")
    if p < 1:
        raise DomainError("p must be positive")
    return [Polynomial(P.ring, P.coeffs[j::p]) for j in range(p)]


def sj_recompose(S: Sequence[Polynomial], p: int | None = None) -> Polynomial:
    """Inverse of :func:`sj_decompose`."""
    p = len(S) if p is None else p
    R = S[0].ring
    out = Polynomial(R)
    for j, s in enumerate(S):
        out = out + inflate(s, p).shift(j)
    return out


# -- determinants and resultants -----------------------------------------------------


class PolyDomain:
    """Adapter giving polynomials over ``base`` the ring interface used by :func:`det`."""

    def __init__(self, base: Ring):
        self.base = base
        self.zero = Polynomial(base)
        self.one = Polynomial(base, [1])

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def is_zero(self, x):
        return x.is_zero()

    def exquo(self, x, y):
        return exquo(x, y)


def det(matrix: Sequence[Sequence], K) -> object:
    """Determinant by fraction-free (Bareiss) elimination over the domain ``K``.

    ``K`` is a :class:`Ring` or a :class:`PolyDomain`; only ``zero``, ``one``,
    ``sub``, ``mul``, ``neg``, ``is_zero`` and ``exquo`` are used.
    """
    M = [list(row) for row in matrix]
    n = len(M)
    if any(len(row) != n for row in M):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return K.one
    sign = False
    prev = K.one
    for k in range(n - 1):
        if K.is_zero(M[k][k]):
            for r in range(k + 1, n):
                if not K.is_zero(M[r][k]):
                    M[k], M[r] = M[r], M[k]
                    sign = not sign
                    break
            else:
                return K.zero
        piv = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                row_i[j] = K.exquo(K.sub(K.mul(row_i[j], piv), K.mul(mik, row_k[j])), prev)
        prev = piv
    out = M[n - 1][n - 1]
    return K.neg(out) if sign else out


def det_expand(matrix: Sequence[Sequence], K) -> object:
    """Leibniz expansion; used for small sizes and as a cross-check of :func:`det`."""
    n = len(matrix)
    total = K.zero
    for perm in permutations(range(n)):
        term = K.one
        for i, j in enumerate(perm):
            term = K.mul(term, matrix[i][j])
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        total = K.sub(total, term) if inversions % 2 else K.add(total, term)
    return total


def sylvester_matrix(f: Sequence, g: Sequence, zero) -> list[list]:
    """Sylvester matrix of two coefficient lists given in ascending order."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fd, gd = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: Polynomial, g: Polynomial):
    """``Res(f, g) = lc(f)**deg(g) * prod(g(r) for roots r of f)``."""
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError("resultant operands in different rings")
    R = f.ring
    return det(sylvester_matrix(f.coeffs, g.coeffs, R.zero), R)


def product_over_roots(L: Polynomial, P: Polynomial) -> Polynomial:
    """``prod_j P(l_j * X)`` over the roots ``l_j`` of the monic polynomial ``L``.

    Computed as ``Res_Y(L(Y), P(X*Y))`` over ``R[X]``, so no roots are needed.
    """
    R = L.ring
    if L.is_zero() or len(L.coeffs) < 2 or L.lc != R.one:
        raise DomainError("L must be monic of positive degree")
    if R.is_zero(L.coeffs[0]):
        raise DomainError("L must have L(0) != 0")
    if P.is_zero():
        raise DomainError("P must be nonzero")
    K = PolyDomain(R)
    Lc = [Polynomial(R, [c]) for c in L.coeffs]
    Gc = [Polynomial.monomial(R, k, a) for k, a in enumerate(P.coeffs)]
    return det(sylvester_matrix(Lc, Gc, K.zero), K)


# -- text -------------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xX])|([iI])|(\*\*|[-+*^()]))")


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
            start = m.start(m.lastindex)
            if m.group(1):
                self.tokens.append(("num", m.group(1), start))
            elif m.group(2):
                self.tokens.append(("x", "x", start))
            elif m.group(3):
                if ring.kind is not Kind.GAUSSIAN:
                    raise ParseError("'i' is only allowed over zi", text, start)
                self.tokens.append(("i", "i", start))
            else:
                op = "^" if m.group(4) == "**" else m.group(4)
                self.tokens.append(("op", op, start))
            pos = m.end()
        self.k = 0

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def fail(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.fail("empty input")
        out = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        out = self.term()
        if sign < 0:
            out = -out
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self):
        out = self.power()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                out = out * self.power()
            elif tok[0] in ("num", "x", "i") or tok[:2] == ("op", "("):
                out = out * self.power()  # implicit product such as 2x
            else:
                return out

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.k -= 1
                self.fail("exponent must be a nonnegative integer")
            base = base ** int(tok[1])
        return base

    def atom(self):
        R = self.ring
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return Polynomial(R, [int(val)])
        if kind == "x":
            self.take()
            return Polynomial.x(R)
        if kind == "i":
            self.take()
            return Polynomial(R, [GaussInt(0, 1)])
        if (kind, val) in (("op", "-"), ("op", "+")):
            self.take()
            inner = self.power()
            return -inner if val == "-" else inner
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("expected a number, 'x' or '('")


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` such as ``"x^3-x^2-2*x-1"`` or ``"(1+2*i)*x^2 - 8*i"``."""
    return _Parser(text, ring).parse()


def _coeff_text(R: Ring, c) -> tuple[str, str]:
    # (sign, magnitude text) with the magnitude wrapped when it is a sum.
    if R.kind is Kind.GAUSSIAN and c.re and c.im:
        if c.re < 0:
            return "-", "(" + R.format(-c) + ")"
        return "+", "(" + R.format(c) + ")"
    s = R.format(c)
    if s.startswith("-"):
        return "-", s[1:]
    return "+", s


def format_poly(f: Polynomial) -> str:
    R = f.ring
    if f.is_zero():
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if R.is_zero(c):
            continue
        sign, mag = _coeff_text(R, c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f"{sign}{body}"
    return out


def poly(text: str, ring: Ring = INTEGERS) -> Polynomial:
    """Shorthand for :func:`parse_poly` defaulting to the integers."""
    return parse_poly(text, ring)


__all__ = [
    "Polynomial",
    "content",
    "deflate",
    "det",
    "det_expand",
    "divides",
    "divmod_poly",
    "evaluate",
    "exquo",
    "format_poly",
    "inflate",
    "is_primitive",
    "parse_poly",
    "poly",
    "primitive_part",
    "product_over_roots",
    "reciprocal",
    "resultant",
    "scale_variable",
    "sj_decompose",
    "sj_recompose",
]
