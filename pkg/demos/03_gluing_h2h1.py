"""Glue TL_4 diagrams into the four-punctured disc of the h2h1 scenario.

Run: python3 demos/03_gluing_h2h1.py
"""

from __future__ import annotations

from skeinslide.expr import parse_expr
from skeinslide.surface import load_scenario, rho_star
from skeinslide.tl import enumerate_basis, TLElement

s = load_scenario("h2h1")
print(s.name, "-", s.description)
print(f"box with k={s.k}; left of midline {sorted(s.left_labels)}, right {sorted(s.right_labels)}\n")

for d in enumerate_basis(4, 4):
    v = rho_star(s, TLElement.of(d))
    print(f"  {str(d):<8} t={d.through_degree}  ->  {s.format(v)}")

final = parse_expr("(A^4 - 1)*(e2e1 - e2e3 + e1e2 - e3e2)", 4)
print("\nglued final relation:", s.format(rho_star(s, final)))
