"""Run the whole verification pipeline over the default parameter grid.

Per point: lattice points vs. enumeration, h* consistency and dilation
counts, family construction and pi-balance, all-pairs S-pair reduction,
squarefree leads, completeness at degree <= 3, unimodular facets, and the
regularity certificate.
"""

import time

from wpsimplex.pipeline import default_grid, evaluate_point

FLAGS = (
    "latticePointsOK",
    "hstarOK",
    "gbConstructed",
    "buchbergerPass",
    "squarefree",
    "injectivityPass",
    "triangulationUnimodular",
    "regularCertified",
)

t0 = time.perf_counter()
print(f"{'point':>8}  " + "  ".join(f"{f[:7]:>7}" for f in FLAGS) + "   ms")
all_ok = True
for r1, x1 in default_grid():
    result = evaluate_point(r1, x1)
    all_ok &= result["pass"]
    marks = "  ".join(
        f"{'ok' if result['flags'][f] else 'FAIL':>7}" for f in FLAGS
    )
    total_ms = sum(result["timings"].values())
    print(f"({r1}, {x1})   {marks}  {total_ms:>4}")

print(f"\noverall pass: {all_ok} "
      f"({time.perf_counter() - t0:.1f}s for {len(default_grid())} points)")
