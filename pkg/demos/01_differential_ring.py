#!/usr/bin/env python3
"""Walk through the exact differential ring.

Shows the generator rules of the derivation D, the weight grading and
isobaric decomposition, the split D = D' + H, and the Rankin bracket
with its weight bookkeeping.  Everything here is exact rational
arithmetic; nothing is floating point.
"""

from fractions import Fraction

from triring import (
    apply_D,
    apply_variant,
    derived_constants,
    isobaric_components,
    poly_from_text,
    quadratic_form,
    rankin_bracket,
    validate,
    weight,
)
from triring.ring import AFFINE_VARS, Poly

LINE = "-" * 72

p = validate(Fraction(1, 5), Fraction(1, 4), Fraction(1, 2))
d = derived_constants(p)
print(f"triple (alpha, beta, gamma) = ({p.label()})")
print(f"derived constants: a={d.a}  b={d.b}  c={d.c}  w={d.w}  ram={d.ram}")
print(LINE)

print("generator rules of D:")
for name in AFFINE_VARS:
    image = apply_D(Poly.var(AFFINE_VARS, name), p)
    print(f"  D {name:3} = {image.to_text()}")
print("the shared quadratic form is")
print(f"  L = {quadratic_form(p).to_text()}")
print(LINE)

print("the three differences satisfy a first-order factorization:")
for a, b in (("y0", "y1"), ("y0", "y2"), ("y1", "y2")):
    diff = poly_from_text(f"{a} - {b}")
    image = apply_D(diff, p)
    quo, rem = image.divmod_single(diff)
    print(f"  D({a}-{b}) = ({a}-{b}) * ({quo.to_text()})   remainder {rem.to_text()}")
print(LINE)

P = poly_from_text("y0^2 + tau y1 + q")
print(f"isobaric decomposition of {P.to_text()}:")
for w, comp in isobaric_components(P):
    print(f"  weight {w}: {comp.to_text()}")
print(LINE)

print("D splits into a y-part D' and a tau/q-part H:")
Q = poly_from_text("tau^2 y0 - 3 q y2^2")
dp = apply_variant(Q, "Dprime", p)
h = apply_variant(Q, "Honly", p)
print(f"  Q        = {Q.to_text()}")
print(f"  D'(Q)    = {dp.to_text()}")
print(f"  H(Q)     = {h.to_text()}")
print(f"  sum == D(Q): {dp + h == apply_D(Q, p)}")
print(LINE)

U = poly_from_text("y1 - y2")
V = poly_from_text("y0")
br = rankin_bracket(U, V, p)
print("the Rankin bracket raises weight by one:")
print(f"  [{U.to_text()}, {V.to_text()}] = {br.to_text()}")
print(f"  weights: {weight(U)} and {weight(V)} -> {weight(br)}")
print(f"  antisymmetry: [V, U] == -[U, V]: {rankin_bracket(V, U, p) == -br}")
