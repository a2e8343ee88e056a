import itertools

import pytest

from capelli.errors import OracleBudgetExceeded
from capelli.oracle import is_irreducible
from capelli.poly import Polynomial, content, inflate
from capelli.rings import INTEGERS

SWEEP_NS = (2, 3, 4, 5, 6, 8, 9, 12)

# criterion number -> (passed, detail), filled in by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


class CachedOracle:
    """Irreducibility of f(X^n) over Z, shared across the session.

    f(X^n) and g(X^n) are irreducible together when g is -f, the reciprocal
    of f, or (for odd n) f(-X), so those share one entry. ``None`` marks an
    instance that ran out of budget.
    """

    def __init__(self, max_work=20_000_000):
        self.max_work = max_work
        self._cache = {}
        self.over_budget = set()

    @staticmethod
    def _key(f, n):
        cs = list(f.coeffs)
        cands = []
        for h in (cs, cs[::-1]):
            for s in (1, -1):
                cands.append(tuple(s * c for c in h))
                if n % 2:
                    cands.append(tuple(s * c * (-1) ** k for k, c in enumerate(h)))
        return min(cands), n

    def inflated_irreducible(self, f, n):
        k = self._key(f, n)
        if k not in self._cache:
            try:
                self._cache[k] = is_irreducible(inflate(f, n), self.max_work)
            except OracleBudgetExceeded:
                self._cache[k] = None
                self.over_budget.add((str(f), n))
        return self._cache[k]


def _build_corpus():
    out = []
    for deg in (2, 3):
        for cs in itertools.product(range(-3, 4), repeat=deg + 1):
            if cs[0] and cs[-1]:
                f = Polynomial(INTEGERS, cs)
                if content(f) == 1 and is_irreducible(f):
                    out.append(f)
    return out


@pytest.fixture(scope="session")
def corpus():
    """Primitive irreducible f of degree 2 or 3, coefficients in [-3, 3], f(0) != 0."""
    return _build_corpus()


@pytest.fixture(scope="session")
def oracle():
    return CachedOracle()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 13):
        ok, detail = ACCEPTANCE.get(k, (False, "not run or errored"))
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
