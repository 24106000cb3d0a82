"""Finite complex power series on the unit disk, and branch-cut-aware scalar
functions on the slit disk (the open unit disk minus the real segment (-1, 0]).

Series are plain polynomials: every formula computed downstream is evaluated
on polynomial data, so tails are out of scope and degrees stay explicit.
Evaluation is numpy-vectorised; scalars in give scalars out.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BranchError, DomainError, INF, check_order


class CPowerSeries:
    """Polynomial sum a_n z^n held as a complex coefficient vector a_0..a_N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if arr.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        object.__setattr__(self, "coeffs", arr)
        arr.setflags(write=False)

    def __setattr__(self, name, value):
        raise AttributeError("CPowerSeries is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, z):
        scalar = np.isscalar(z) or getattr(z, "ndim", 1) == 0
        zz = np.asarray(z, dtype=complex)
        if len(self.coeffs) == 0:
            out = np.zeros_like(zz)
        else:
            out = np.full_like(zz, self.coeffs[-1])
            for a in self.coeffs[-2::-1]:
                out = out * zz + a
        return complex(out) if scalar else out

    def derivative(self):
        if len(self.coeffs) <= 1:
            return CPowerSeries([])
        n = np.arange(1, len(self.coeffs))
        return CPowerSeries(n * self.coeffs[1:])

    def antiderivative(self, c0=0.0):
        if len(self.coeffs) == 0:
            return CPowerSeries([c0])
        n = np.arange(1, len(self.coeffs) + 1)
        return CPowerSeries(np.concatenate(([complex(c0)], self.coeffs / n)))

    def conjugate_coefficients(self):
        return CPowerSeries(np.conj(self.coeffs))

    def _binary(self, other, op):
        if isinstance(other, CPowerSeries):
            n = max(len(self.coeffs), len(other.coeffs), 1)
            a = np.zeros(n, dtype=complex)
            b = np.zeros(n, dtype=complex)
            a[: len(self.coeffs)] = self.coeffs
            b[: len(other.coeffs)] = other.coeffs
            return CPowerSeries(op(a, b))
        return NotImplemented

    def __add__(self, other):
        return self._binary(other, np.add)

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __neg__(self):
        return CPowerSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, CPowerSeries):
            if len(self.coeffs) == 0 or len(other.coeffs) == 0:
                return CPowerSeries([])
            return CPowerSeries(np.convolve(self.coeffs, other.coeffs))
        if isinstance(other, (int, float, complex)):
            return CPowerSeries(self.coeffs * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CPowerSeries):
            return (len(self.coeffs) == len(other.coeffs)
                    and bool(np.all(self.coeffs == other.coeffs)))
        return NotImplemented

    def __repr__(self):
        return f"CPowerSeries({list(self.coeffs)!r})"

    def to_pairs(self):
        """JSON form: list of [re, im] pairs."""
        return [[float(a.real), float(a.imag)] for a in self.coeffs]

    @classmethod
    def from_pairs(cls, pairs):
        return cls([complex(p[0], p[1]) for p in pairs])


def evaluate(f, z):
    """Horner evaluation of a CPowerSeries at z (scalar or array)."""
    return f(z)


def derivative(f):
    """Coefficient map a_n -> n*a_n with the degree shifted down one."""
    return f.derivative()


def in_slit_disk(z):
    """True where |z| < 1 and z is not on the removed segment (-1, 0].

    The segment check is exact: points with zero imaginary part and real part
    in (-1, 0] are rejected, positive reals accepted.
    """
    zz = np.asarray(z, dtype=complex)
    on_cut = (zz.imag == 0.0) & (zz.real > -1.0) & (zz.real <= 0.0)
    ok = (np.abs(zz) < 1.0) & ~on_cut
    return bool(ok) if ok.ndim == 0 else ok


@dataclass(frozen=True)
class SlitDiskPoint:
    z: complex
    valid: bool

    @classmethod
    def of(cls, z):
        z = complex(z)
        return cls(z, in_slit_disk(z))


def principal_power_c(z, alpha):
    """Principal-branch power z**alpha with Arg z in (-pi, pi].

    Points on the negative real axis use Arg = +pi regardless of the sign of
    the (zero) imaginary part; z = 0 raises BranchError.
    """
    scalar = np.isscalar(z) or getattr(z, "ndim", 1) == 0
    zz = np.asarray(z, dtype=complex)
    if np.any(zz == 0):
        raise BranchError("0**alpha is undefined on the principal branch")
    ang = np.angle(zz)
    neg_axis = (zz.imag == 0.0) & (zz.real < 0.0)
    if np.any(neg_axis):
        ang = np.where(neg_axis, np.pi, ang)
    out = np.exp(alpha * (np.log(np.abs(zz)) + 1j * ang))
    return complex(out) if scalar else out


def truncated_exp_c(w, k):
    """Exponential sum of order k, sum_{n<=k} w^n/n!, elementwise over w.

    Preserves the input dtype (real in, real out), since the real-line
    operators feed it real arguments.
    """
    k = check_order(k)
    ww = np.asarray(w)
    if k == INF:
        out = np.exp(ww)
    else:
        out = np.ones_like(ww)
        term = np.ones_like(ww)
        for n in range(1, k + 1):
            term = term * ww / n
            out = out + term
    if np.isscalar(w) or getattr(w, "ndim", 1) == 0:
        return out[()]
    return out


def fractal_measure_c(z, alpha, k):
    """The slit-disk fractal function e_k(z**alpha), principal branch."""
    if not np.all(in_slit_disk(z)):
        raise BranchError("argument outside the slit unit disk")
    return truncated_exp_c(principal_power_c(z, alpha), k)


def fractal_measure_deriv_c(z, alpha, k):
    """d/dz of e_k(z**alpha), i.e. alpha * z**(alpha-1) * e_{k-1}(z**alpha)."""
    k = check_order(k)
    if k == 0:
        raise DomainError("order-0 fractal measure is constant; no usable derivative")
    km1 = INF if k == INF else k - 1
    if not np.all(in_slit_disk(z)):
        raise BranchError("argument outside the slit unit disk")
    zz = np.asarray(z, dtype=complex) if not np.isscalar(z) else z
    w = principal_power_c(zz, alpha)
    # z**(alpha-1) = z**alpha / z on the principal branch (same logarithm)
    return alpha * w / zz * truncated_exp_c(w, km1)


NONVANISHING_FLOOR = 1e-8


def nonvanishing_check(alpha, k, grid=(400, 400), floor=NONVANISHING_FLOOR):
    """Screen the standing hypothesis that e_{k-1}(z**alpha) has no zeros.

    k = 1 (constant 1) and k = inf (exponential) are nonvanishing without
    scanning.  Other orders are screened on a dense polar grid of the open
    slit disk against a conservative floor.
    """
    k = check_order(k)
    if k == 0:
        raise DomainError("k = 0 has identically zero e_{k-1}")
    if k == 1 or k == INF:
        return True
    nr, nt = grid
    r = (np.arange(nr) + 0.5) / nr
    t = -np.pi + (np.arange(nt) + 0.5) * (2.0 * np.pi / nt)
    zz = r[:, None] * np.exp(1j * t[None, :])
    vals = truncated_exp_c(principal_power_c(zz, alpha), k - 1)
    return bool(np.min(np.abs(vals)) > floor)
