#!/usr/bin/env python3
"""Stable-ideal certificates and the universal element.

Certifies the four distinguished principal ideals as derivation-stable
with explicit cofactors, shows how an unstable generator fails, runs
the substitution/resultant computation behind the case analysis, and
exhibits the universal element kappa that lies in every one of the
stable ideals (with its homogeneous counterpart).
"""

from fractions import Fraction

from triring import (
    apply_D,
    certify_case_one,
    derived_constants,
    eta,
    kappa,
    membership,
    principal_stability,
    ramanujan_l,
    validate,
)
from triring.derivation import dehomogenize
from triring.ideals import stable_principal_ideals, stable_principal_lifts
from triring.ring import AFFINE_VARS, Poly

LINE = "-" * 72

p = validate(Fraction(1, 5), Fraction(1, 4), Fraction(1, 2))
print(f"triple ({p.label()})")
print(LINE)

print("principal stability certificates:")
for name, gen in stable_principal_ideals().items():
    cert = principal_stability(gen, p)
    cof = cert.cofactors[0][0]
    print(f"  ({name}): {cert.verdict}, cofactor {cof.to_text()}")
bad = Poly.var(AFFINE_VARS, "y0")
cert = principal_stability(bad, p)
idx, n, escaped = cert.witness
print(f"  (y0): {cert.verdict}; D^{n}(y0) = {escaped.to_text()} leaves the ideal")
print(LINE)

kap = kappa()
print(f"universal element: {kap.to_text()}")
print("memberships in the four stable ideals:")
for name, gen in stable_principal_ideals().items():
    res = membership(kap, [gen])
    print(f"  kappa in ({name}): {res.member}, cofactor {res.cofactors[0].to_text()}")
d = derived_constants(p)
expected = (Poly.const(AFFINE_VARS, d.w)
            + 2 * sum((Poly.var(AFFINE_VARS, v) for v in ("y0", "y1", "y2")),
                      Poly.zero(AFFINE_VARS))) * kap
print(f"D(kappa) == (w + 2(y0+y1+y2)) kappa: {apply_D(kap, p) == expected}")
print(LINE)

l = ramanujan_l()
print(f"homogeneous counterpart: {l.to_text()}")
print(f"dehomogenized (X0 -> 1) it equals -kappa: {dehomogenize(l) == -kap}")
for name, gen in stable_principal_lifts().items():
    print(f"  l in ({name}): {membership(l, [gen]).member}")
print(LINE)

print("case-one computation (substitute y0 -> 0, derive, take resultants):")
report = certify_case_one(p)
print(f"  H  = {report.H.to_text()}")
print(f"  K  = {report.K.to_text()}")
print(f"  eta = {report.eta_value} (= (a+b)(a+c)(b+c)(ab+bc+ac))")
for name, ok in report.checks.items():
    print(f"  {name}: {'ok' if ok else 'FAILED'}")
