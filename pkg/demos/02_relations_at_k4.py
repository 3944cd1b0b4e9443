"""From slide elements to relations in TL_4, and the reduction of their difference.

Run: python3 demos/02_relations_at_k4.py
"""

from __future__ import annotations

from skeinslide.expr import parse_expr
from skeinslide.relmod import RelationMatrix, span_membership
from skeinslide.sliding import LOWER_POS, UPPER_POS, relation_vector, slide_relation
from skeinslide.tl import identity

lower = slide_relation(identity(4), LOWER_POS).vector
upper = slide_relation(identity(4), UPPER_POS).vector
print("Id4 - lower slide:\n ", lower)
print("Id4 - upper slide:\n ", upper)

diff = lower - upper
print("\ndifference:\n ", diff)

# relations coming from the two-strand diagrams
words = [(1,), (3,), (1, 2), (2, 1), (1, 2, 3), (3, 2, 1)]
rows = [relation_vector(4, w) for w in words]
final = parse_expr("(A^4 - 1)*(e2e1 - e2e3 + e1e2 - e3e2)", 4)
m = RelationMatrix.from_vectors(rows, names=["r[" + "".join(f"e{i}" for i in w) + "]" for w in words], extra=[diff, final])

# diff - final lies in the span with Laurent coefficients (so the two are equivalent)
cert = span_membership(diff - final, m)
print("\ndifference - final relation as a combination of two-point rows:")
print(" ", cert.format())
print("  Laurent:", cert.all_laurent, " verified:", cert.verify())
