"""
The inverse polynomials and their identities
============================================

The inverse polynomial of (x, w) is the ordinary polynomial of the
complemented pair (w0 w, w0 x).  Three ways to cross-check it: the
alternating inversion identity, reconstruction by an interval sum
when the interval is simple enough, and flattening away inactive
positions.
"""

import random

from klpoly import (
    KLCache,
    check_inversion_identity,
    active_positions,
    family_pair,
    flatten_pair,
    format_perm,
    inverse_kl,
    inverse_kl_from_interval_sum,
    kl_polynomial,
    random_comparable_pair,
)

cache = KLCache()

# The first nontrivial inverse value lives at the x-pair (2, 2).
bottom, top = family_pair("x", 2, 2)
print("inverse_kl(x_22, w_22) =", inverse_kl(bottom, top, cache))

# Summing (-1)^(l(z)+l(w)) P(z, w) Q(z, x) over the interval must give
# a delta function.  One pair checked by hand, then a seeded batch.
print("identity at (e, 4231):", check_inversion_identity((1, 2, 3, 4), (4, 2, 3, 1), cache))
rng = random.Random(12)
verdicts = [
    check_inversion_identity(*random_comparable_pair(5, rng), cache)
    for _ in range(25)
]
print("identity on 25 sampled S_5 pairs:", all(verdicts))

# When every element strictly between x and w has polynomial 1 against
# the top, the inverse polynomial is an alternating sum over the open
# interval plus a boundary term.  The x-pair intervals qualify.
bottom, top = family_pair("x", 2, 3)
print("direct:        ", inverse_kl(bottom, top, cache))
print("interval sum:  ", inverse_kl_from_interval_sum(bottom, top, cache))

# Positions where x and w agree and the rank difference vanishes are
# dead weight.  Flattening removes them without changing the answer.
x = (1, 3, 2, 4, 6, 5)
w = (1, 6, 2, 4, 5, 3)
print("active positions of the pair:", active_positions(x, w))
xf, wf = flatten_pair(x, w)
print("flattened pair:", format_perm(xf), "and", format_perm(wf))
print("same polynomial both ways:",
      kl_polynomial(x, w, cache) == kl_polynomial(xf, wf, cache))
