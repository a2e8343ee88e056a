"""The pair (1, 8i) over Z[i].

8i = -(1+i)^6, so both coefficients become squares and cubes after
multiplying by a suitable unit: 2 and 3 are inadmissible. Every n prime
to 6 is admissible, so f(X^n) stays irreducible for any irreducible
f = X^m + ... + 8i and any such n.
"""

from capelli import GAUSSIAN, GaussInt, admissible_spec, factor_gaussian, membership, poly

eight_i = GaussInt(0, 8)
pf = GAUSSIAN.canonical_factor(eight_i)
print("8i =", GAUSSIAN.format(pf.unit), "*", " * ".join(f"({GAUSSIAN.format(q)})^{e}" for q, e in pf.factors))
for p in (2, 3):
    for u in GAUSSIAN.units():
        r = GAUSSIAN.is_pth_power(GAUSSIAN.mul(u, eight_i), p)
        if r is not None:
            print(f"  p={p}: {GAUSSIAN.format(u)} * 8i = ({GAUSSIAN.format(r)})^{p}")
            break

spec = admissible_spec(3, 1, eight_i)
print(f"\ninadmissible primes {spec.inadmissible_primes}, shape {spec.shape.value}")
print("admissible n <= 30:", [n for n in range(2, 31) if membership(n, spec)])

# The smallest case: X - 8i is irreducible, X^2 - 8i is not.
print("\nX^2 - 8i =", " * ".join(f"({g})" for g, _ in factor_gaussian(poly("x^2-8*i", GAUSSIAN)).factors))
