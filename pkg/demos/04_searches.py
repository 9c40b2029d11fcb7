"""
Bounded searches on the genus-two models
========================================

Nothing here is a proof: the scan stops at a height bound.  The Hilbert
quartic x^4 +/- y^4 = +/- z^2 is scanned over Gaussian pairs.
"""

from cyclotors.rings import RingTag
from cyclotors.verification import bounded_search

for model, tag in [("he1", RingTag.GAUSSIAN), ("he1", RingTag.OMEGA), ("he2", RingTag.OMEGA)]:
    res = bounded_search(model, 20, tag)
    hits = ", ".join(f"t={h.t[0]}" for h in res.hits)
    print(f"{model} over {tag.value}: {res.scanned} values of t, hits {hits}; nondegenerate {len(res.nondegenerate())}")

res = bounded_search("HILBERT", 20)
print(f"Hilbert quartic: {len(res.hits)} solutions, all trivial: {not res.nondegenerate()}")
