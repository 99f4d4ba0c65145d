"""Supershape curve and surface evaluators.

The polar radius formula generalises superellipses to arbitrary (rational)
rotational symmetry.  The exact polygon polar form is kept as ground truth;
the limit-exponent construction is only ever treated as an approximation to
it and validated as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import cos, gcd, pi, sin

__all__ = [
    "GielisParams",
    "RgcLayerProfile",
    "gielis_radius",
    "regular_polygon_radius",
    "matsuura_polygon",
    "rgc_layer_counts",
    "gielis_surface_point",
    "gielis_volumetric_radius",
]


@dataclass(frozen=True)
class GielisParams:
    """Parameters of the polar radius formula.

    ``m`` is the angular symmetry and may be rational p/q (q > 1 closes the
    curve only after q turns).  ``sign`` picks the +/- between the cosine
    and sine terms; the minus branch can make the radicand vanish, which is
    reported as a domain error at evaluation time.
    """

    A: float = 1.0
    B: float = 1.0
    m: Fraction = Fraction(4)
    n1: float = 2.0
    n2: float = 2.0
    n3: float = 2.0
    sign: int = 1

    def __post_init__(self):
        if self.A <= 0 or self.B <= 0:
            raise ValueError("semi-axes A, B must be positive")
        if self.n1 == 0:
            raise ValueError("exponent n1 must be nonzero")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "m", Fraction(self.m))
        if self.m < 0:
            raise ValueError("symmetry m must be >= 0")

    @property
    def period(self) -> float:
        """Fundamental angular period (2*q*pi for symmetry p/q)."""
        return 2.0 * pi * self.m.denominator if self.m else 2.0 * pi


def gielis_radius(theta: float, params: GielisParams) -> float:
    """Polar radius rho(theta) of the supershape curve."""
    arg = float(params.m) / 4.0 * theta
    c = abs(cos(arg) / params.A) ** params.n2
    s = abs(sin(arg) / params.B) ** params.n3
    base = c + s if params.sign == 1 else c - s
    if base <= 0.0 or not math.isfinite(base):
        raise ValueError(f"radius undefined at theta={theta!r}: radicand {base!r}")
    rho = base ** (-1.0 / params.n1)
    if not math.isfinite(rho):
        raise ValueError(f"radius diverged at theta={theta!r}")
    return rho


def regular_polygon_radius(theta: float, m: int) -> float:
    """Exact polar radius of the regular m-gon, circumradius 1, vertex at 0."""
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    step = 2.0 * pi / m
    local = theta % step
    return cos(pi / m) / cos(local - pi / m)


def matsuura_polygon(m: int) -> GielisParams:
    """Supershape parameters approximating the regular m-gon.

    Uses unit semi-axes, n2 = n3 = 1 and n1 = (m/4)^2; the approximation is
    within 1% of the exact polygon radius for m >= 5 and within 0.5% for
    m >= 11.
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    return GielisParams(A=1.0, B=1.0, m=Fraction(m), n1=(m / 4.0) ** 2, n2=1.0, n3=1.0)


@dataclass(frozen=True)
class RgcLayerProfile:
    """Cumulative-layer shape counts for a self-intersecting p/q curve.

    Layer a (0-based, from the innermost out) contains a*p + 1 separate
    shapes; the outermost layer index is q - 1.
    """

    p: int
    q: int
    layer_shape_counts: tuple[int, ...]


def rgc_layer_counts(p: int, q: int) -> RgcLayerProfile:
    """Shape counts per cumulative layer of the p/q curve."""
    if p < 3:
        raise ValueError(f"p must be >= 3, got {p}")
    if not 1 <= q < p:
        raise ValueError(f"q must satisfy 1 <= q < p, got {q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got {p}/{q}")
    return RgcLayerProfile(p=p, q=q, layer_shape_counts=tuple(a * p + 1 for a in range(q)))


def gielis_surface_point(
    theta: float,
    phi: float,
    rho1: GielisParams,
    rho2: GielisParams,
) -> tuple[float, float, float]:
    """Point of the parametric surface spanned by two perpendicular curves.

    With both radii identically 1 the image is the unit sphere.
    """
    r1 = gielis_radius(theta, rho1)
    r2 = gielis_radius(phi, rho2)
    return (
        r1 * cos(theta) * r2 * cos(phi),
        r1 * sin(theta) * r2 * cos(phi),
        r2 * sin(phi),
    )


def gielis_volumetric_radius(
    theta: float,
    phi: float,
    m1: float = 0.0,
    m2: float = 0.0,
    a: float = 1.0,
    b: float = 1.0,
    c: float = 1.0,
    n1: float = 2.0,
    n2: float = 2.0,
    n3: float = 2.0,
    n4: float = 2.0,
    scale: float = 1.0,
) -> float:
    """Single-radius volumetric variant r(theta, phi).

    Same contract shape as the curve evaluator: one positive radius per
    direction, domain errors on a vanishing radicand.  All exponents 2 with
    unit semi-axes gives the unit sphere.
    """
    st = sin(m1 * theta / 4.0)
    ct = cos(m1 * theta / 4.0)
    base = (
        abs(st * cos(m2 * phi / 4.0) / a) ** n2
        + abs(st * sin(m2 * phi / 4.0) / b) ** n3
        + abs(ct / c) ** n4
    )
    if base <= 0.0 or not math.isfinite(base):
        raise ValueError(f"radius undefined at ({theta!r}, {phi!r})")
    return scale * base ** (-1.0 / n1)
