"""Quaternionic module norms by slice splitting: the splitting identity, the
coefficient-series formula, frame (in)dependence and the 8x comparison
bound, and the quaternionic reproducing identities.

Run:  python demos/06_quaternionic_norms.py
"""

import numpy as np

from ffq import (E1, E2, E3, FFParams, INF, QPowerSeries, Quaternion,
                 SliceFrame, STANDARD_FRAME, coefficient_integrals, ff_eval_q,
                 q_reproduce, qdirichlet_inner_product, qdirichlet_norm,
                 qdirichlet_norm_series, random_frame, slice_norm_compare)

rng = np.random.default_rng(6)
rand_q = lambda s=1.0: Quaternion(*(s * rng.standard_normal(4)))

f = QPowerSeries([rand_q() for _ in range(5)])
p = FFParams(alpha=0.7, sigma=0.4, k=2)
frame = STANDARD_FRAME

print("== the slice derivative, two ways ==")
z = 0.3 + 0.25j
va = ff_eval_q(f, p, frame, z, method="split")
vb = ff_eval_q(f, p, frame, z, method="direct")
print("split components route:", va)
print("direct slice formula:  ", vb)
print("difference:            ", (va - vb).norm())

print("\n== the squared norm splits exactly ==")
v = qdirichlet_norm(f, p, frame)
print("norm^2       =", v.norm_sq)
print("split parts  =", v.split_parts)
print("sum of parts =", sum(v.split_parts))

print("\n== series formula against splitting quadrature ==")
ci = coefficient_integrals(p, f.degree)
s = qdirichlet_norm_series(f, p, frame, ci)
print(f"series {s.norm_sq:.12f}   quadrature {v.norm_sq:.12f}   "
      f"rel diff {abs(s.norm_sq - v.norm_sq) / v.norm_sq:.2e}")

print("\n== inner product: conjugate on the first slot, right-linear ==")
g = QPowerSeries([rand_q() for _ in range(3)])
ip = qdirichlet_inner_product(f, g, p, frame)
print("<f, g> =", ip)
a = Quaternion(0.5, -1.0, 0.25, 2.0)
lhs = qdirichlet_inner_product(f, g * a, p, frame)
print("<f, g a> - <f, g> a =", (lhs - ip * a).norm())

print("\n== slices see the same norm on power-series data ==")
# the coefficient integrals are real (the slit disk is symmetric under
# conjugation), so the slice enters the norm only through terms that vanish;
# the 8x bound is satisfied with room to spare
ratios = [slice_norm_compare(QPowerSeries([rand_q() for _ in range(4)]),
                             p, random_frame(rng), random_frame(rng), ci=ci)
          for _ in range(50)]
print(f"50 random polynomials, random frame pairs: ratios in "
      f"[{min(ratios):.12f}, {max(ratios):.12f}]  (bound: 8)")

print("\n== quaternionic reproducing identities by slice reduction ==")
p1 = FFParams(alpha=1.0, sigma=0.5, k=1)
q_point = Quaternion(0.3, 0.0, 0.2, 0.0)  # lives on the slice of e2
res = q_reproduce(QPowerSeries([0, 0, 1]), p1, frame, q_point)
print("f = q^2 at 0.3 + 0.2 e2: residuals", res)
res = q_reproduce(f, p1, frame, Quaternion(0.5))
print("any f at the base point 1/2: identity-2 residual", res.identity2)
