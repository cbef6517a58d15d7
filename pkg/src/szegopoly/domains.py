"""Ellipse and ellipsoid domain descriptors.

An Ellipsoid in R^n is the sublevel set {x : (x-c)^T Q (x-c) < 1} of a
symmetric positive definite rational matrix Q; its defining polynomial
r(x) = (x-c)^T Q (x-c) - 1 has degree exactly 2, is negative at the center
and zero on the boundary.  Positive definiteness is certified exactly via
leading principal minors.

An Ellipse is the planar axis-aligned special case with semi-axes a, b and
center (h, k), kept as its own type because the Szego machinery wants the
defining polynomial in z/zbar form and its Wirtinger derivatives.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import det_exact
from .polynomials import PolyRealN, PolyZZbar, xy_to_zzbar
from .rational import GaussianRational


def _frac(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            "domain parameters must be exact rationals (int, Fraction or string)"
        )
    return Fraction(value)


@dataclass(frozen=True)
class Ellipsoid:
    """Positive definite quadric domain in R^n."""

    dim: int
    Q: tuple[tuple[Fraction, ...], ...]
    center: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be positive")
        Q = tuple(tuple(_frac(v) for v in row) for row in self.Q)
        center = tuple(_frac(v) for v in self.center)
        if len(Q) != n or any(len(row) != n for row in Q):
            raise ValueError(f"Q must be a {n}x{n} matrix")
        if len(center) != n:
            raise ValueError(f"center must have {n} coordinates")
        for i in range(n):
            for j in range(i):
                if Q[i][j] != Q[j][i]:
                    raise ValueError("Q must be symmetric")
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "center", center)
        for k in range(1, n + 1):
            minor = [
                [GaussianRational(Q[i][j]) for j in range(k)] for i in range(k)
            ]
            d = det_exact(minor)
            if d.re <= 0:
                raise ValueError(
                    f"Q is not positive definite (leading {k}x{k} minor = {d.re})"
                )

    def defining_poly(self) -> PolyRealN:
        """r(x) = (x - center)^T Q (x - center) - 1, of degree exactly 2."""
        n = self.dim
        shifted = [
            PolyRealN.variable(n, i) - PolyRealN.constant(n, self.center[i])
            for i in range(n)
        ]
        r = PolyRealN.constant(n, -1)
        for i in range(n):
            for j in range(n):
                if self.Q[i][j]:
                    r = r + shifted[i] * shifted[j] * self.Q[i][j]
        return r

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "Q": [str(v) for row in self.Q for v in row],
            "center": [str(v) for v in self.center],
        }

    @staticmethod
    def from_json_dict(obj: dict) -> "Ellipsoid":
        if {"a", "b"} <= obj.keys():
            ellipse = Ellipse(
                a=Fraction(obj["a"]),
                b=Fraction(obj["b"]),
                h=Fraction(obj.get("h", 0)),
                k=Fraction(obj.get("k", 0)),
            )
            return ellipse.to_ellipsoid()
        dim = int(obj["dim"])
        flat = [Fraction(v) for v in obj["Q"]]
        if len(flat) != dim * dim:
            raise ValueError(
                f"Q has {len(flat)} entries, expected {dim * dim} (row-major)"
            )
        Q = tuple(tuple(flat[i * dim + j] for j in range(dim)) for i in range(dim))
        center = tuple(Fraction(v) for v in obj["center"])
        return Ellipsoid(dim=dim, Q=Q, center=center)

    @staticmethod
    def from_json(text: str) -> "Ellipsoid":
        return Ellipsoid.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class Ellipse:
    """Axis-aligned planar ellipse with rational semi-axes and center."""

    a: Fraction
    b: Fraction
    h: Fraction = Fraction(0)
    k: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "h", "k"):
            object.__setattr__(self, name, _frac(getattr(self, name)))
        if self.a <= 0 or self.b <= 0:
            raise ValueError("semi-axes must be positive")

    @staticmethod
    def from_string(text: str) -> "Ellipse":
        """Parse 'a,b[,h,k]' with rational entries, e.g. '2,1,0,0' or '3/2,1'."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) not in (2, 4):
            raise ValueError(
                f"expected 'a,b' or 'a,b,h,k', got {len(parts)} fields"
            )
        try:
            values = [Fraction(p) for p in parts]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad ellipse parameter in {text!r}: {exc}") from exc
        if len(parts) == 2:
            values += [Fraction(0), Fraction(0)]
        return Ellipse(*values)

    def is_disc(self) -> bool:
        return self.a == self.b

    def to_ellipsoid(self) -> Ellipsoid:
        return Ellipsoid(
            dim=2,
            Q=(
                (Fraction(1) / (self.a * self.a), Fraction(0)),
                (Fraction(0), Fraction(1) / (self.b * self.b)),
            ),
            center=(self.h, self.k),
        )

    def defining_poly_xy(self) -> PolyRealN:
        """(x-h)^2/a^2 + (y-k)^2/b^2 - 1 as a real polynomial."""
        return self.to_ellipsoid().defining_poly()

    def defining_poly_zzbar(self) -> PolyZZbar:
        """The defining polynomial rewritten exactly in z, zbar."""
        return xy_to_zzbar(self.defining_poly_xy())

    def d_r(self) -> PolyZZbar:
        """Holomorphic derivative of the defining polynomial (degree 1)."""
        return self.defining_poly_zzbar().d_dz()

    def dbar_r(self) -> PolyZZbar:
        """Antiholomorphic derivative of the defining polynomial (degree 1)."""
        return self.defining_poly_zzbar().d_dzbar()

    def center_zzbar(self) -> GaussianRational:
        return GaussianRational(self.h, self.k)

    def to_json_dict(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "h": str(self.h),
            "k": str(self.k),
        }
