"""
Two families with known answers
===============================

Two parametric families of pairs whose polynomials are known in closed
form for every k and m.  The x-family produces a geometric sum whose
height is min(k-1, m-1); the y-family always produces 1 + q no matter
how large the parameters grow.
"""

from klpoly import (
    KLCache,
    closed_form_inverse,
    closed_form_regular,
    family_pair,
    format_perm,
    kl_polynomial,
    make_family,
    parse_family_spec,
)

cache = KLCache()

# Members are written kind:k,m.  The x and w kinds form one pair, y
# and v the other.
for spec_text in ("x:2,3", "w:2,3", "y:2,3", "v:2,3"):
    spec = parse_family_spec(spec_text)
    print(f"{spec_text:7s} -> {format_perm(make_family(spec))}")

# The x-pair at (k, m) = (2, 3): a geometric sum of height
# min(k-1, m-1) = 1.
bottom, top = family_pair("x", 2, 3)
print("kl(x_23, w_23) =", kl_polynomial(bottom, top, cache))
print("closed form    =", closed_form_regular("x", 2, 3))

# Raising both parameters raises the height of the sum.
bottom, top = family_pair("x", 3, 3)
print("kl(x_33, w_33) =", kl_polynomial(bottom, top, cache))

# The y-pair is stubborn: 1 + q at every parameter choice.
for k, m in ((1, 1), (2, 2), (1, 4)):
    bottom, top = family_pair("y", k, m)
    print(f"kl(y_{k}{m}, v_{k}{m}) =", kl_polynomial(bottom, top, cache))

# The inverse closed forms tell a different story.  For the x-pair the
# coefficients are products of binomials, so the linear coefficient
# along the diagonal k = m grows like (k-1)^2.
for k in (2, 3, 4):
    print(f"inverse closed form at x:{k},{k} ->", closed_form_inverse("x", k, k))

# For the y-pair the inverse polynomial stays linear but its slope
# keeps track of both parameters: 1 + (k+m-1) q.
for k, m in ((1, 1), (2, 3), (4, 4)):
    print(f"inverse closed form at y:{k},{m} ->", closed_form_inverse("y", k, m))
