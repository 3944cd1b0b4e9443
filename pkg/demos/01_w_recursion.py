"""Build the lower-arc slide element w(Id_k) for small k and look at it.

Run: python3 demos/01_w_recursion.py
"""

from __future__ import annotations

from skeinslide.coeff import A
from skeinslide.sliding import phi, LOWER_POS, w_id
from skeinslide.tl import flip_sigma

for k in (2, 3, 4):
    w = w_id(k)
    print(f"w(Id{k}) has {len(w.terms)} basis terms:")
    print(f"  {w}\n")

# sliding the whole bundle over the lower arc multiplies by A^6
assert phi(LOWER_POS, 4) == w_id(4).scale(A**6)

# the upper-arc element is taken to be the top/bottom flip
print("sigma(w(Id3)) =", flip_sigma(w_id(3)))
