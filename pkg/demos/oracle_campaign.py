"""
Cellular model against the order complex
========================================

Random grids with forbidden boxes; for each one compare the homology of the
small cellular complex with the homology of the full order complex.
"""

import random

from cubehom.ingest import generate_grid_complex, load_fixture, random_grid_spec
from cubehom.pipeline import oracle

rng = random.Random(1)
for _ in range(8):
    spec = random_grid_spec(rng, max_extents=(3, 3), max_forbidden=3)
    cset, source, target = generate_grid_complex(spec)
    result = oracle(cset, source, target)
    summary = "; ".join(line for rep, _, _ in result.strata.values() for line in rep.trimmed().lines())
    print(spec.extents, list(spec.forbidden), "match" if result.match else "MISMATCH", summary)

# a loop needs a length bound; every length contributes its own stratum
cset, u, _ = load_fixture("circle")
result = oracle(cset, u, u, max_length=6)
print("directed circle:", {n: str(rep) for n, (rep, _, _) in result.strata.items()})
