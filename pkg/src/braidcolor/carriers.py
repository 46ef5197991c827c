"""Carrier spaces for the algebraic structures.

Finite carriers are index sets 0..order-1.  Continuous carriers cover the
real vector spaces used by the closed-form solutions, the cylinder (a unit
circle crossed with a plane, stored as a unit complex number paired with a
complex number), and the unit sphere used by the reflection quandle.

Equality on continuous carriers always means componentwise distance within
a tolerance, with circle components measured as |w1 - w2| on unit complex
representatives.
"""

from __future__ import annotations

import numpy as np

from .errors import FormatError

# half-width of the box that coordinate samples are drawn from
SAMPLE_BOX = 10.0


class FiniteCarrier:
    """Elements are the integers 0..order-1."""

    kind = "finite"

    def __init__(self, order: int):
        if not isinstance(order, int) or order < 1:
            raise FormatError(f"carrier order must be a positive integer, got {order!r}")
        self.order = order

    def elements(self):
        return range(self.order)

    def sample(self, rng) -> int:
        return int(rng.integers(self.order))

    def distance(self, p, q) -> float:
        return 0.0 if int(p) == int(q) else 1.0

    def to_json(self, p):
        return int(p)

    def __repr__(self):
        return f"FiniteCarrier(order={self.order})"


class VectorCarrier:
    """Points of a real coordinate space, held as float arrays."""

    kind = "continuous"

    def __init__(self, dim: int):
        if not isinstance(dim, int) or dim < 1:
            raise FormatError(f"vector carrier dimension must be positive, got {dim!r}")
        self.dim = dim

    def sample(self, rng):
        return rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, self.dim)

    def distance(self, p, q) -> float:
        return float(np.max(np.abs(np.asarray(p, dtype=float) - np.asarray(q, dtype=float))))

    def perturb(self, p, delta):
        return np.asarray(p, dtype=float) + np.asarray(delta, dtype=float)

    def chart_diff(self, p, q):
        return np.asarray(q, dtype=float) - np.asarray(p, dtype=float)

    def to_json(self, p):
        return [float(v) for v in np.asarray(p, dtype=float)]

    def __repr__(self):
        return f"VectorCarrier(dim={self.dim})"


class TorusCarrier:
    """Points of circle-cross-plane as arrays [w, alpha] of complex numbers.

    w always sits on the unit circle; construction through point() divides
    by the modulus so that long chains of operations cannot drift off it.
    The chart used for numeric work is (angle, Re alpha, Im alpha).
    """

    kind = "continuous"
    dim = 3

    @staticmethod
    def point(w, alpha):
        w = complex(w)
        r = abs(w)
        if r == 0.0:
            raise FormatError("circle component must be nonzero")
        return np.array([w / r, complex(alpha)], dtype=complex)

    def sample(self, rng):
        theta = rng.uniform(0.0, 2.0 * np.pi)
        x, y = rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, 2)
        return self.point(np.exp(1j * theta), complex(x, y))

    def distance(self, p, q) -> float:
        return float(max(abs(p[0] - q[0]), abs(p[1] - q[1])))

    def perturb(self, p, delta):
        d = np.asarray(delta, dtype=float)
        return self.point(p[0] * np.exp(1j * d[0]), p[1] + complex(d[1], d[2]))

    def chart_diff(self, p, q):
        dtheta = np.angle(q[0] * np.conj(p[0]))
        da = q[1] - p[1]
        return np.array([dtheta, da.real, da.imag], dtype=float)

    def to_json(self, p):
        return [float(p[0].real), float(p[0].imag), float(p[1].real), float(p[1].imag)]

    def __repr__(self):
        return "TorusCarrier()"


class SphereCarrier:
    """Unit vectors in a real coordinate space, for the reflection quandle."""

    kind = "continuous"

    def __init__(self, dim: int):
        if not isinstance(dim, int) or dim < 1:
            raise FormatError(f"sphere dimension must be positive, got {dim!r}")
        self.dim = dim  # dimension of the sphere itself

    def sample(self, rng):
        while True:
            v = rng.normal(size=self.dim + 1)
            r = np.linalg.norm(v)
            if r > 1e-6:
                return v / r

    def distance(self, p, q) -> float:
        return float(np.max(np.abs(np.asarray(p) - np.asarray(q))))

    def to_json(self, p):
        return [float(v) for v in np.asarray(p, dtype=float)]

    def __repr__(self):
        return f"SphereCarrier(dim={self.dim})"
