"""The star algebra of slice-regular power series: products, conjugates,
inverses, the evaluation twist, and the splitting / representation pair that
moves between quaternionic data and two complex series.

Run:  python demos/02_star_algebra.py
"""

import numpy as np

from ffq import (E1, E2, E3, QPowerSeries, Quaternion, SliceFrame,
                 cullen_derivative, eval_q, extend_from_slice,
                 regular_conjugate, split, star_inverse, star_product,
                 symmetrization)

rng = np.random.default_rng(1)
rand_q = lambda s=1.0: Quaternion(*(s * rng.standard_normal(4)))

f = QPowerSeries([1, E1])
print("f       =", f)
print("f^c     =", regular_conjugate(f))
print("f * f^c =", symmetrization(f), " (real coefficients: 1 + q^2)")

print("\n== star product is the coefficient convolution ==")
g = QPowerSeries([E2, 1, E3])
print("f * g =", star_product(f, g))
print("g * f =", star_product(g, f), " (different: coefficients don't commute)")

print("\n== evaluation twist ==")
# pointwise, f*g(q) is NOT f(q)g(q); the second factor is evaluated at a
# conjugated point
q = rand_q(0.2)
fq = eval_q(f, q)
lhs = eval_q(star_product(f, g), q)
rhs = fq * eval_q(g, fq.inverse() * q * fq)
print("f*g(q)                      =", lhs)
print("f(q) g(f(q)^-1 q f(q))      =", rhs)
print("difference                  =", (lhs - rhs).norm())

print("\n== star inverse ==")
finv = star_inverse(f, 8)
print("f^-* (degree 8) coefficients:", [c.components for c in finv.coeffs[:4]], "...")
prod = star_product(f, finv)
print("f * f^-* =", [round(c.w, 12) for c in prod.coeffs[:9]])

print("\n== derivative rule for the inverse ==")
lhs = cullen_derivative(finv)
rhs = -1.0 * star_product(star_product(finv, cullen_derivative(f)), finv)
worst = max((a - b).norm() for a, b in zip(lhs.coeffs[:8], rhs.coeffs[:8]))
print("(f^-*)' vs -f^-* * f' * f^-*  coefficient gap:", worst)

print("\n== splitting and extension ==")
frame = SliceFrame(E1, E2)
h = QPowerSeries([rand_q() for _ in range(4)])
pair = split(h, frame)
print("f1 coefficients:", [complex(round(c.real, 6), round(c.imag, 6))
                           for c in pair.f1.coeffs])
print("f2 coefficients:", [complex(round(c.real, 6), round(c.imag, 6))
                           for c in pair.f2.coeffs])
q = rand_q(0.25)
print("extension reproduces h off the slice:",
      (extend_from_slice(pair, q) - eval_q(h, q)).norm())
