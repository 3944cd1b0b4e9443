"""Do level-k slides follow from the top slide and lower levels?  Compare spans at k = 4.

Run: python3 demos/05_conjecture_evidence.py [k]
"""

from __future__ import annotations

import sys

from skeinslide.relmod import conjecture_evidence
from skeinslide.surface import load_scenario

k = int(sys.argv[1]) if len(sys.argv) > 1 else 4
rep = conjecture_evidence(k, [load_scenario(f"h1h1-k{k}")])
for lv in rep.levels:
    where = "inside the TL box" if lv.level == "tl" else f"glued into {lv.scenario}"
    print(f"{where}: {lv.rows_all} relations vs {lv.rows_reduced}")
    for ring, cmp in lv.reports.items():
        print(f"  {ring}: {cmp.verdict}  {cmp.summary()}")
for n in rep.notes:
    print("note:", n)
