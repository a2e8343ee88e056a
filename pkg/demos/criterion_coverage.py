"""How often does the elementary criterion settle f(X^n)?

Sweeps small irreducible quadratics over Z and tallies, per n, how many
are settled by the criterion, how many it leaves open, and how the
oracle resolves the open ones. Every criterion claim is cross-checked.
"""

import itertools
from collections import Counter

from capelli import INTEGERS, Polynomial, Status, content, is_irreducible, resolve_with_oracle, theorem_1_1_check

quadratics = [
    f
    for cs in itertools.product(range(-4, 5), repeat=3)
    if cs[0] and cs[2]
    for f in [Polynomial(INTEGERS, cs)]
    if content(f) == 1 and is_irreducible(f)
]
print(f"{len(quadratics)} irreducible primitive quadratics, coefficients in [-4, 4]\n")
print(f"{'n':>3} {'criterion':>10} {'open':>6} {'open->irr':>10} {'open->red':>10}")
for n in (2, 3, 4, 6, 8):
    tally = Counter()
    for f in quadratics:
        v = theorem_1_1_check(f, n)
        if v.status is Status.IRREDUCIBLE_BY_CRITERION:
            tally["criterion"] += 1
            continue
        r = resolve_with_oracle(v, f, n)
        tally[r.status.value] += 1
    print(
        f"{n:>3} {tally['criterion']:>10} {len(quadratics) - tally['criterion']:>6} "
        f"{tally['irreducible-by-oracle']:>10} {tally['reducible-by-oracle']:>10}"
    )
