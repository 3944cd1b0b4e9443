"""The glued relation is in the Q(A)-span of the bounded ideal generators but not the Laurent span.

Run: python3 demos/04_counterexample.py
"""

from __future__ import annotations

from skeinslide.coeff import A, principal_membership
from skeinslide.expr import parse_expr
from skeinslide.relmod import generator_matrix, ideal_generators, span_membership, z_span_decision
from skeinslide.surface import load_scenario, rho_star

s = load_scenario("h2h1")
target = rho_star(s, parse_expr("(A^4 - 1)*(e2e1 - e2e3 + e1e2 - e3e2)", 4))
print("target:", s.format(target))

gens = ideal_generators(s, kmax=4)
for g in gens:
    print(f"  generator from {g.source}: top {s.format(g.top)} with coefficient {g.top_coefficient}")

m = generator_matrix(s, gens, extra=[target])
cert = span_membership(target, m)
print("\nover Q(A):", cert.format())
print("rows independent:", m.independent, "-> the certificate above is the only one")
print("over Z[A, 1/A]:", z_span_decision(target, m).verdict)

# the one-variable reason: A^4 - 1 is not a Laurent multiple of A^8 - 1
print("\n(A^4 - 1) / (A^8 - 1) Laurent?", principal_membership(A**4 - 1, A**8 - 1) is not None)
