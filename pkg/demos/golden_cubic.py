"""Walk through f = X^3 - X^2 - 2X - 1 and its square inflation.

f is irreducible, yet f(X^2) splits into two cubics. The criterion has
nothing to say here (both coefficients are units), the oracle finds the
split, and the witness explains it as a 2x2 circulant determinant.
"""

from capelli import extract_witness, factor_integers, inflate, is_irreducible, poly, theorem_1_1_check

f = poly("x^3-x^2-2*x-1")
print(f"f = {f}, irreducible: {is_irreducible(f)}")

v = theorem_1_1_check(f, 2)
print(f"criterion on f(X^2): {v.status.value}")
for row in v.traces[0].rows:
    print(f"  {row.branch} u={row.u}: A={row.A_holds} B={row.B_holds}")

g = inflate(f, 2)
print(f"\nf(X^2) = {g}")
for h, e in factor_integers(g).factors:
    print(f"  factor {h}" + (f" ^{e}" if e > 1 else ""))

w = extract_witness(f, 2)
print(f"\nwitness: branch {w.branch}, u = {w.u}")
for j, s in enumerate(w.S):
    print(f"  S{j} = {s}")
print(f"  P  = {w.P}")
print(f"  P* = {w.Pstar}")
s0, s1 = (inflate(s, 2) for s in w.S)
print(f"\nS0(X^2)^2 - X^2 S1(X^2)^2 = {s0 ** 2 - poly('x^2') * s1 ** 2}")
print(f"(-1)^3 f(X^2)            = {-g}")
print(f"P * P*                   = {w.P * w.Pstar}")
