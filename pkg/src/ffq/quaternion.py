"""Quaternion arithmetic and the slice (polar) structure of the quaternion algebra.

A quaternion is w + x*e1 + y*e2 + z*e3 with e1*e2 = e3, e2*e3 = e1, e3*e1 = e2.
Every value here is immutable and every operation pure, so everything is safe
to share across threads.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BranchError, DomainError, FrameError, INF, check_order


class Quaternion:
    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        object.__setattr__(self, "w", float(w))
        object.__setattr__(self, "x", float(x))
        object.__setattr__(self, "y", float(y))
        object.__setattr__(self, "z", float(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @property
    def components(self):
        return (self.w, self.x, self.y, self.z)

    @property
    def real(self):
        return self.w

    @property
    def vector(self):
        return (self.x, self.y, self.z)

    def vector_norm(self):
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self):
        return math.sqrt(self.norm_sq())

    __abs__ = norm

    def inverse(self):
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise DomainError("zero quaternion has no inverse")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def axis(self):
        """Unit imaginary direction of the vector part; e1 for real points."""
        v = self.vector_norm()
        if v == 0.0:
            return E1
        return Quaternion(0.0, self.x / v, self.y / v, self.z / v)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # real scalars commute with every quaternion
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.components == other.components
        if isinstance(other, (int, float)):
            return self.components == (float(other), 0.0, 0.0, 0.0)
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


ZERO = Quaternion()
ONE = Quaternion(1.0)
E1 = Quaternion(0.0, 1.0)
E2 = Quaternion(0.0, 0.0, 1.0)
E3 = Quaternion(0.0, 0.0, 0.0, 1.0)


def as_quaternion(value):
    """Coerce a real number or Quaternion to a Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(value)
    raise TypeError(f"cannot interpret {value!r} as a quaternion")


def mul(a, b):
    """Hamilton product of two quaternions."""
    return as_quaternion(a) * as_quaternion(b)


def inverse(q):
    """Multiplicative inverse conj(q)/|q|^2; raises DomainError at zero."""
    return as_quaternion(q).inverse()


def dot4(a, b):
    """Euclidean inner product of two quaternions viewed as 4-vectors."""
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z


class SlicePolar(NamedTuple):
    """Polar slice data of a quaternion: q = x + y*axis = mod * exp(axis*arg)."""

    x: float
    y: float
    axis: Quaternion
    arg: float
    mod: float


def slice_decompose(q):
    """Split q into real part, imaginary magnitude (>= 0) and its slice axis.

    Real points carry the conventional axis e1 (any axis is consistent since
    y = 0 multiplies it).  The argument lands in (-pi, pi]; with y >= 0 it is
    in fact in [0, pi].
    """
    q = as_quaternion(q)
    y = q.vector_norm()
    axis = E1 if y == 0.0 else Quaternion(0.0, q.x / y, q.y / y, q.z / y)
    return SlicePolar(q.w, y, axis, math.atan2(y, q.w), math.hypot(q.w, y))


def embed_complex(c, axis):
    """Place the complex number c into the slice plane spanned by 1 and axis."""
    c = complex(c)
    return Quaternion(c.real, axis.x * c.imag, axis.y * c.imag, axis.z * c.imag)


def principal_power(q, beta):
    """Principal-branch power q**beta computed inside the slice plane of q.

    Undefined (BranchError) at 0 and on the closed negative real axis, where
    the principal logarithm has no slice to live in.
    """
    sp = slice_decompose(q)
    if sp.mod == 0.0:
        raise BranchError("0**beta is not defined on the principal branch")
    if sp.y == 0.0 and sp.x < 0.0:
        raise BranchError("principal power undefined on the negative real axis")
    r = sp.mod ** beta
    ang = beta * sp.arg
    return embed_complex(complex(r * math.cos(ang), r * math.sin(ang)), sp.axis)


def truncated_exp(q, k):
    """Exponential sum of order k: sum_{n<=k} q^n/n!; k=inf is the full exp.

    The infinite order reduces to scalar exp/cos/sin on the slice of q, so it
    carries no truncation error.
    """
    q = as_quaternion(q)
    k = check_order(k)
    if k == INF:
        sp = slice_decompose(q)
        ew = math.exp(sp.x)
        return embed_complex(complex(ew * math.cos(sp.y), ew * math.sin(sp.y)), sp.axis)
    total = ONE
    term = ONE
    for n in range(1, k + 1):
        term = term * q * (1.0 / n)
        total = total + term
    return total


_FRAME_TOL = 1e-9


@dataclass(frozen=True)
class SliceFrame:
    """Ordered orthonormal pair (i, j) of imaginary units.

    C(i) is the slice plane and {1, j} the splitting basis; i*j completes
    {1, i, j, i*j} to an orthonormal basis of the quaternions.
    """

    i: Quaternion
    j: Quaternion

    def __post_init__(self):
        for name, u in (("i", self.i), ("j", self.j)):
            if abs(u.w) > _FRAME_TOL or abs(u.norm() - 1.0) > _FRAME_TOL:
                raise FrameError(f"frame axis {name} is not a unit imaginary quaternion")
        if abs(dot4(self.i, self.j)) > _FRAME_TOL:
            raise FrameError("frame axes are not orthogonal")

    @property
    def ij(self):
        return self.i * self.j

    def basis(self):
        return (ONE, self.i, self.j, self.ij)


STANDARD_FRAME = SliceFrame(E1, E2)


def random_unit_imaginary(rng):
    """Uniform random point of the imaginary unit sphere."""
    while True:
        v = rng.standard_normal(3)
        n = math.sqrt(float(v @ v))
        if n > 1e-12:
            return Quaternion(0.0, v[0] / n, v[1] / n, v[2] / n)


def random_frame(rng):
    """Random orthonormal slice frame (i, j)."""
    i = random_unit_imaginary(rng)
    while True:
        v = random_unit_imaginary(rng)
        d = dot4(i, v)
        u = Quaternion(0.0, v.x - d * i.x, v.y - d * i.y, v.z - d * i.z)
        n = u.norm()
        if n > 1e-6:
            return SliceFrame(i, u / n)


def frame_coords(q, frame):
    """Coordinates (c1, c2) of q in the frame: q = c1 + c2*j with c1, c2 in C(i)."""
    q = as_quaternion(q)
    b = frame.basis()
    return (
        complex(dot4(q, b[0]), dot4(q, b[1])),
        complex(dot4(q, b[2]), dot4(q, b[3])),
    )


def frame_embed(c1, c2, frame):
    """Inverse of frame_coords: assemble c1 + c2*j as a quaternion."""
    return embed_complex(c1, frame.i) + embed_complex(c2, frame.i) * frame.j
