"""Quaternionic slice derivative, the Dirichlet-type right-module norm via
slice splitting, its coefficient-series form, the 8x slice-comparison bound
and the quaternionic reproducing identities.

The primary computation path splits a slice-regular series into two complex
component series on the chosen slice and reuses the complex engine; the
squared norm is exactly the sum of the two complex squared norms.  The
direct slice formula (intrinsic star factors reducing to pointwise scalars
on the slice) is kept as an independent cross-check.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BranchError, DomainError, FFQError
from .ff_complex import (BASE_POINT, bergman_kernel, dirichlet_norm_closed_k1,
                         dirichlet_norm_quad, dirichlet_norm_series,
                         ff_eval_c, reproduction_rhs_1, reproduction_rhs_2,
                         _assemble_series_norm, _require_sigma_interior)
from .holo_series import fractal_measure_deriv_c, in_slit_disk
from .quadrature import DEFAULT_SPEC, integrate_disk
from .quaternion import (ONE, Quaternion, as_quaternion, embed_complex,
                         frame_coords, frame_embed, slice_decompose)
from .slice_regular import cullen_derivative, eval_q, split


def ff_eval_q(f, p, frame, z, method="split", f_beta=None):
    """Slice derivative of f at the point z of the slice plane C(frame.i).

    method="split" applies the complex operator to both split components;
    method="direct" evaluates (1-s) f + s * (d/dq e_k(q**a))^(-*) * f'
    at the quaternion point, where the intrinsic star factor reduces to a
    pointwise complex scalar on the slice.  The two agree to rounding.

    beta < 1 needs the slice-regular power supplied as f_beta (splitting
    does not commute with fractional powers) and forces the direct path.
    """
    z = complex(z)
    if not in_slit_disk(z):
        raise BranchError(f"{z} is not in the slit slice disk")
    if p.beta != 1.0:
        if f_beta is None:
            raise DomainError("beta < 1 requires the slice-regular power f_beta")
        method = "direct"
    if method == "split":
        pair = split(f, frame)
        return frame_embed(
            ff_eval_c(pair.f1, p, z), ff_eval_c(pair.f2, p, z), frame
        )
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    qz = embed_complex(z, frame.i)
    value = eval_q(f, qz) * (1.0 - p.sigma)
    if p.sigma != 0.0:
        g = f if p.beta == 1.0 else f_beta
        fp = eval_q(cullen_derivative(g), qz)
        scale = p.sigma / fractal_measure_deriv_c(z, p.alpha, p.k)
        value = value + embed_complex(scale, frame.i) * fp
    return value


@dataclass(frozen=True)
class QDirichletValue:
    """Squared module norm with its two split-component contributions."""

    norm_sq: float
    split_parts: tuple
    frame: object
    method: str


def _require_linear(p):
    if p.beta != 1.0:
        raise DomainError("module norms are defined on the linear (beta = 1) space")


def qdirichlet_norm(f, p, frame, spec=None, method="quad"):
    """Squared norm as the sum of the split components' complex norms."""
    _require_linear(p)
    pair = split(f, frame)
    if method == "quad":
        n1 = dirichlet_norm_quad(pair.f1, p, spec)
        n2 = dirichlet_norm_quad(pair.f2, p, spec)
    elif method == "closed-k1":
        n1 = dirichlet_norm_closed_k1(pair.f1, p)
        n2 = dirichlet_norm_closed_k1(pair.f2, p)
    else:
        raise ValueError(f"unknown method {method!r}")
    return QDirichletValue(
        n1.norm_sq + n2.norm_sq, (n1.norm_sq, n2.norm_sq), frame, method
    )


def qdirichlet_inner_product(f, g, p, frame, spec=None):
    """Quaternion-valued product alpha conj(f(1/2)) g(1/2) + int conj(Df) Dg.

    The conjugate sits on the first factor, making the form right-linear in
    g.  With Df = D1 + D2 j and Dg = G1 + G2 j the integrand reduces to
    (conj(D1) G1 + D2 conj(G2)) + (conj(D1) G2 - D2 conj(G1)) j.
    """
    _require_linear(p)
    spec = spec or DEFAULT_SPEC
    pf = split(f, frame)
    pg = split(g, frame)

    def integrand(zeta):
        d1 = ff_eval_c(pf.f1, p, zeta)
        d2 = ff_eval_c(pf.f2, p, zeta)
        g1 = ff_eval_c(pg.f1, p, zeta)
        g2 = ff_eval_c(pg.f2, p, zeta)
        return np.stack([np.conj(d1) * g1 + d2 * np.conj(g2),
                         np.conj(d1) * g2 - d2 * np.conj(g1)])

    field = integrate_disk(integrand, spec).value
    base = Quaternion(BASE_POINT)
    point = (eval_q(f, base).conjugate() * eval_q(g, base)) * p.alpha
    return point + frame_embed(field[0], field[1], frame)


def qdirichlet_norm_series(f, p, frame, ci):
    """Series form of the squared norm, assembled quaternionically.

    The slice projection (w - i w i)/2 extracts the C(i) component of each
    coefficient product, which is what the sum of the two complex series
    norms produces; split_parts records those complex norms, and the
    quaternionic assembly must match their sum to rounding.
    """
    _require_linear(p)
    if ci.params.alpha != p.alpha or ci.params.k != p.k:
        raise DomainError("coefficient table was computed for different (alpha, k)")
    a = f.coeffs
    deg = len(a) - 1
    s = p.sigma
    point = p.alpha * eval_q(f, Quaternion(BASE_POINT)).norm_sq()
    bergman = (1.0 - s) ** 2 * np.pi * sum(
        c.norm_sq() / (n + 1.0) for n, c in enumerate(a)
    )
    A, B = ci.alpha_mn, ci.beta_mn
    if deg > ci.N:
        from .errors import DegreeMismatch

        raise DegreeMismatch(f"series degree {deg} exceeds table degree {ci.N}")
    quad_form = 0j
    for n in range(deg):
        for m in range(deg):
            w = a[n + 1] * a[m + 1].conjugate()
            quad_form += (n + 1) * (m + 1) * frame_coords(w, frame)[0] * A[m, n]
    sig_term = (s / p.alpha) ** 2 * quad_form.real
    cross = 0.0
    for m in range(deg):
        for n in range(deg + 1):
            w = a[m + 1] * a[n].conjugate()
            cross += 2.0 * (m + 1) * (frame_coords(w, frame)[0] * B[m, n]).real
    cross *= (1.0 - s) * s / p.alpha
    norm_sq = point + bergman + sig_term + cross
    pair = split(f, frame)
    parts = (
        _assemble_series_norm(pair.f1, p, A, B, "series").norm_sq,
        _assemble_series_norm(pair.f2, p, A, B, "series").norm_sq,
    )
    return QDirichletValue(norm_sq, parts, frame, "series")


SLICE_BOUND = 8.0
_BOUND_SLACK = 1e-9


def slice_norm_compare(f, p, frame_i, frame_j, spec=None, ci=None):
    """Ratio of the squared norms over the two slices; never exceeds 8.

    Passing a coefficient table switches both norms to the series form
    (the table is slice-independent).  Raises if the bound is violated,
    which would signal a genuine defect.
    """
    if ci is not None:
        ref = qdirichlet_norm_series(f, p, frame_i, ci).norm_sq
        other = qdirichlet_norm_series(f, p, frame_j, ci).norm_sq
    else:
        ref = qdirichlet_norm(f, p, frame_i, spec).norm_sq
        other = qdirichlet_norm(f, p, frame_j, spec).norm_sq
    if ref == 0.0:
        raise ZeroDivisionError("reference slice norm vanishes (f = 0)")
    ratio = other / ref
    if ratio > SLICE_BOUND + _BOUND_SLACK:
        raise FFQError(f"slice-comparison bound violated: ratio = {ratio}")
    return ratio


class QReproduceResult(NamedTuple):
    identity1: float
    identity2: float


def q_reproduce(f, p, frame, q, spec=None):
    """Residuals of both quaternionic reproducing identities at q.

    Verified by slice reduction: the complex right-hand sides are evaluated
    for the split components at the two slice points x +- y i and recombined
    to q with the representation formula, then compared with f(q).
    """
    _require_sigma_interior(p)
    spec = spec or DEFAULT_SPEC
    q = as_quaternion(q)
    sp = slice_decompose(q)
    z = complex(sp.x, sp.y)
    if not in_slit_disk(z):
        raise DomainError(f"{q!r} is not in the slit unit ball")
    pair = split(f, frame)
    target = eval_q(f, q)
    ii = sp.axis * frame.i

    def recombine(rhs):
        vals = {}
        for w in {z, z.conjugate()}:
            vals[w] = frame_embed(rhs(pair.f1, w), rhs(pair.f2, w), frame)
        return ((ONE + ii) * vals[z.conjugate()] + (ONE - ii) * vals[z]) * 0.5

    rec1 = recombine(lambda comp, w: reproduction_rhs_1(comp, p, w, spec))
    rec2 = recombine(lambda comp, w: reproduction_rhs_2(comp, p, w, spec))
    return QReproduceResult((rec1 - target).norm(), (rec2 - target).norm())


def slice_bergman_kernel(q, zeta, frame):
    """Disk Bergman kernel read on the slice C(frame.i) and extended by the
    representation formula; q anywhere in the ball, zeta on the slice."""
    sp = slice_decompose(q)
    zp = complex(sp.x, sp.y)
    vp = embed_complex(bergman_kernel(zp, zeta), frame.i)
    vm = embed_complex(bergman_kernel(zp.conjugate(), zeta), frame.i)
    ii = sp.axis * frame.i
    return ((ONE + ii) * vm + (ONE - ii) * vp) * 0.5
