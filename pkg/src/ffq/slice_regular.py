"""Slice-regular power series on the unit ball: the star algebra, Cullen
derivative, splitting into complex component series and the representation
formula that rebuilds values on the whole ball from one slice.

Coefficients sit on the right: f(q) = sum q^n a_n. All operations are pure.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IntrinsicError, INF
from .holo_series import CPowerSeries
from .quaternion import (ONE, Quaternion, SliceFrame, as_quaternion,
                         embed_complex, frame_coords, frame_embed,
                         slice_decompose, truncated_exp)


class QPowerSeries:
    """Polynomial sum q^n a_n with quaternion right coefficients a_0..a_N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", tuple(as_quaternion(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPowerSeries is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, q):
        return eval_q(self, q)

    def derivative(self):
        return cullen_derivative(self)

    def __add__(self, other):
        if isinstance(other, QPowerSeries):
            n = max(len(self.coeffs), len(other.coeffs))
            a = list(self.coeffs) + [Quaternion()] * (n - len(self.coeffs))
            b = list(other.coeffs) + [Quaternion()] * (n - len(other.coeffs))
            return QPowerSeries([p + q for p, q in zip(a, b)])
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, QPowerSeries):
            return self + (-other)
        return NotImplemented

    def __neg__(self):
        return QPowerSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        # right scalar multiple f*a: coefficients a_n * a
        if isinstance(other, (Quaternion, int, float)):
            a = as_quaternion(other)
            return QPowerSeries([c * a for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return QPowerSeries([c * other for c in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, QPowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"QPowerSeries({list(self.coeffs)!r})"

    def to_arrays(self):
        """JSON form: list of [w, x, y, z] component arrays."""
        return [list(c.components) for c in self.coeffs]

    @classmethod
    def from_arrays(cls, arrays):
        return cls([Quaternion(*a) for a in arrays])

    def max_imag_coefficient(self):
        """Largest imaginary component over all coefficients (0 when empty)."""
        if not self.coeffs:
            return 0.0
        return max(max(abs(c.x), abs(c.y), abs(c.z)) for c in self.coeffs)


def _horner(f, q):
    # right-coefficient Horner: a_0 + q*(a_1 + q*(a_2 + ...))
    if not f.coeffs:
        return Quaternion()
    acc = f.coeffs[-1]
    for a in f.coeffs[-2::-1]:
        acc = q * acc + a
    return acc


def eval_q(f, q, check_domain=True):
    """Evaluate the series at a quaternion of the open unit ball."""
    q = as_quaternion(q)
    if check_domain and q.norm() >= 1.0:
        raise DomainError(f"|q| = {q.norm()} is outside the open unit ball")
    return _horner(f, q)


def cullen_derivative(f):
    """Slice derivative: maps q^n a_n to n q^(n-1) a_n."""
    return QPowerSeries([c * n for n, c in enumerate(f.coeffs)][1:])


def star_product(f, g):
    """Cauchy convolution product; coefficient order a_k * b_{n-k} preserved."""
    if not f.coeffs or not g.coeffs:
        return QPowerSeries([])
    out = [Quaternion() for _ in range(len(f.coeffs) + len(g.coeffs) - 1)]
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + a * b
    return QPowerSeries(out)


def regular_conjugate(f):
    """Coefficientwise quaternion conjugate."""
    return QPowerSeries([c.conjugate() for c in f.coeffs])


def symmetrization(f):
    """f star its regular conjugate; the result has real coefficients."""
    return star_product(f, regular_conjugate(f))


_STAR_INVERSE_FLOOR = 1e-12


def star_inverse(f, degree):
    """Star-algebra inverse as a formal series truncated at the given degree.

    Computed as the reciprocal of the real-coefficient symmetrization star
    the regular conjugate; star_product(f, result) is 1 up to O(q^(degree+1)).
    """
    if not f.coeffs or f.coeffs[0].norm() < _STAR_INVERSE_FLOOR:
        raise DomainError("constant term too small for a star inverse")
    fs = symmetrization(f)
    s = np.zeros(degree + 1)
    for n, c in enumerate(fs.coeffs[: degree + 1]):
        s[n] = c.w
    r = np.zeros(degree + 1)
    r[0] = 1.0 / s[0]
    for n in range(1, degree + 1):
        r[n] = -np.dot(s[1 : n + 1], r[n - 1 :: -1]) / s[0]
    recip = QPowerSeries(r)
    out = star_product(recip, regular_conjugate(f))
    return QPowerSeries(out.coeffs[: degree + 1])


@dataclass(frozen=True)
class SplitPair:
    """Component series of f on a slice: f = f1 + f2*j with f1, f2 in C(i).

    Both components live in the abstract complex plane {1, i} so they plug
    straight into the complex operators.
    """

    f1: CPowerSeries
    f2: CPowerSeries
    frame: SliceFrame


def split(f, frame):
    """Decompose every coefficient as a_n = a_n^1 + a_n^2 * j over the frame."""
    c1 = []
    c2 = []
    for a in f.coeffs:
        u, v = frame_coords(a, frame)
        c1.append(u)
        c2.append(v)
    return SplitPair(CPowerSeries(c1 or [0]), CPowerSeries(c2 or [0]), frame)


def join(pair):
    """Reassemble the quaternionic series from its split components."""
    n = max(len(pair.f1.coeffs), len(pair.f2.coeffs))
    c1 = np.zeros(n, dtype=complex)
    c2 = np.zeros(n, dtype=complex)
    c1[: len(pair.f1.coeffs)] = pair.f1.coeffs
    c2[: len(pair.f2.coeffs)] = pair.f2.coeffs
    return QPowerSeries([frame_embed(a, b, pair.frame) for a, b in zip(c1, c2)])


def _slice_value(pair, z):
    # value f1(z) + f2(z)*j as a quaternion, z a python complex
    return frame_embed(pair.f1(z), pair.f2(z), pair.frame)


def extend_from_slice(pair, q):
    """Extension from slice data to the whole ball.

    For q = x + y*I the value is the usual two-point average
    (1 + I*i) f(x - y i)/2 + (1 - I*i) f(x + y i)/2 of the slice function
    f = f1 + f2*j; on the slice itself this restricts to f exactly, and at
    real points both halves coincide.
    """
    sp = slice_decompose(q)
    zp = complex(sp.x, sp.y)
    zm = zp.conjugate()
    wp = _slice_value(pair, zp)
    wm = _slice_value(pair, zm)
    ii = sp.axis * pair.frame.i
    return ((ONE + ii) * wm + (ONE - ii) * wp) * 0.5


def representation_formula(f_on_slice, frame, x, y, target_axis):
    """Value of f at x + y*target_axis from its values on the slice C(frame.i).

    f_on_slice evaluates f at quaternion points of the frame's slice plane.
    """
    i = frame.i
    fp = f_on_slice(embed_complex(complex(x, y), i))
    fm = f_on_slice(embed_complex(complex(x, -y), i))
    ti = as_quaternion(target_axis) * i
    return ((ONE - ti) * fp + (ONE + ti) * fm) * 0.5


_INTRINSIC_TOL = 1e-12


def is_intrinsic(f, tol=_INTRINSIC_TOL):
    """True when all coefficients are real to within tol."""
    return f.max_imag_coefficient() <= tol


def intrinsic_exp(f, q):
    """exp(f(q)) for an intrinsic (real-coefficient) series.

    The value f(q) stays in the slice plane of q, so the exponential is the
    scalar one there.  Polynomials are entire, so q is not restricted to the
    ball here.
    """
    if not is_intrinsic(f):
        raise IntrinsicError("series coefficients are not real")
    return truncated_exp(_horner(f, as_quaternion(q)), INF)
