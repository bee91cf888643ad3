"""Complex polynomials, rational maps, Blaschke products, Poincare distance.

Polynomial coefficients are stored in ascending degree order with exact
trailing zeros trimmed.  All operations are pure; every value is immutable
in practice (arrays are never mutated after construction).

Conventions fixed here and relied on everywhere else:

* the Blaschke factor is ``m_a(t) = (a - t) / (1 - conj(a) t)``, so
  ``m_0(t) = -t`` and ``m_a(0) = a``;
* a rational map's degree is ``max(deg num, deg den)`` after reduction;
* rational maps are normalised to a monic denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstantPolynomial,
    PointOnBoundary,
    PoleOnClosedDisc,
    ZeroDenominator,
)

_TRIM_REL = 1e-12       # relative magnitude below which leading coefficients are junk
_PAIR_TOL = 1e-9        # num/den common-root pairing tolerance (relative)


def unit_circle(n: int, radius: float = 1.0, offset: float = 0.0) -> np.ndarray:
    """``n`` equispaced points on the circle of the given radius."""
    theta = 2.0 * np.pi * np.arange(n) / n + offset
    return radius * np.exp(1j * theta)


class Poly:
    """Complex polynomial, coefficients ascending, trailing zeros trimmed."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        if isinstance(coeffs, Poly):
            self.c = coeffs.c
            return
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
        nz = np.nonzero(c)[0]
        self.c = np.array(c[: nz[-1] + 1]) if nz.size else np.zeros(1, dtype=complex)

    # -- basic queries

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.c) == 1 and self.c[0] == 0

    @property
    def lead(self) -> complex:
        return complex(self.c[-1])

    def __call__(self, lam):
        return np.polyval(self.c[::-1], lam)

    def __repr__(self):
        return f"Poly({self.c.tolist()})"

    # -- arithmetic

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        n = max(len(self.c), len(other.c))
        out = np.zeros(n, dtype=complex)
        out[: len(self.c)] += self.c
        out[: len(other.c)] += other.c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self.c)

    def __sub__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly([0])
            return Poly(np.convolve(self.c, other.c))
        return Poly(self.c * complex(other))

    __rmul__ = __mul__

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(t)) by Horner recursion."""
        inner = Poly(inner)
        acc = Poly([self.c[-1]])
        for k in range(len(self.c) - 2, -1, -1):
            acc = acc * inner + Poly([self.c[k]])
        return acc

    def derivative(self) -> "Poly":
        if self.degree == 0:
            return Poly([0])
        return Poly(self.c[1:] * np.arange(1, len(self.c)))

    def trim(self, rel_tol: float = _TRIM_REL) -> "Poly":
        """Drop leading coefficients that are negligible relative to the rest."""
        scale = np.max(np.abs(self.c))
        if scale == 0.0:
            return Poly([0])
        c = self.c.copy()
        k = len(c) - 1
        while k > 0 and abs(c[k]) <= rel_tol * scale:
            k -= 1
        return Poly(c[: k + 1])

    def allclose(self, other: "Poly", tol: float = 1e-12) -> bool:
        a, b = self.c, Poly(other).c
        n = max(len(a), len(b))
        pa = np.zeros(n, complex)
        pb = np.zeros(n, complex)
        pa[: len(a)] = a
        pb[: len(b)] = b
        scale = max(1.0, float(np.max(np.abs(pa))), float(np.max(np.abs(pb))))
        return bool(np.max(np.abs(pa - pb)) <= tol * scale)

    # -- roots

    def roots(self, polish: bool = True) -> np.ndarray:
        """All roots with multiplicity; one Newton step per root when possible."""
        if self.degree < 1:
            raise ConstantPolynomial("constant polynomial has no roots")
        r = np.roots(self.c[::-1])
        if polish and r.size:
            dp = self.derivative()
            val = self(r)
            der = dp(r)
            ok = np.abs(der) > 1e-14 * (1.0 + np.abs(val))
            r = np.where(ok, r - val / np.where(ok, der, 1.0), r)
        return r

    @staticmethod
    def from_roots(roots, lead: complex = 1.0) -> "Poly":
        c = np.array([complex(lead)])
        for z in roots:
            c = np.convolve(c, np.array([-z, 1.0], dtype=complex))
        return Poly(c)


def poly_roots(p: Poly) -> np.ndarray:
    """Roots of a nonconstant polynomial (companion matrix plus one polish step)."""
    return Poly(p).roots()


def _deflate(c: np.ndarray, z: complex) -> np.ndarray:
    """Divide the ascending-coefficient polynomial by (t - z), dropping the remainder."""
    n = len(c)
    out = np.zeros(n - 1, dtype=complex)
    b = c[n - 1]
    for k in range(n - 2, -1, -1):
        out[k] = b
        b = c[k] + z * b
    return out


class RationalMap:
    """Quotient of two complex polynomials, denominator normalised monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly(num)
        den = Poly(den)
        if den.is_zero:
            raise ZeroDenominator("denominator is identically zero")
        scale = den.lead
        self.num = Poly(num.c / scale)
        self.den = Poly(den.c / scale)

    @classmethod
    def coordinate(cls) -> "RationalMap":
        """The identity map t -> t."""
        return cls([0, 1])

    @classmethod
    def const(cls, value: complex) -> "RationalMap":
        return cls([complex(value)])

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __call__(self, lam):
        return self.num(lam) / self.den(lam)

    def __repr__(self):
        return f"RationalMap({self.num.c.tolist()}, {self.den.c.tolist()})"

    # -- arithmetic (exact on coefficients, no implicit reduction)

    @staticmethod
    def _coerce(x) -> "RationalMap":
        if isinstance(x, RationalMap):
            return x
        if isinstance(x, Poly):
            return RationalMap(x)
        return RationalMap([complex(x)])

    def __add__(self, other):
        o = self._coerce(other)
        return RationalMap(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalMap(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalMap(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero:
            raise ZeroDenominator("division by the zero map")
        return RationalMap(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """self(inner(t)) as an exact rational map."""
        inner = self._coerce(inner)

        def poly_of(p: Poly) -> RationalMap:
            acc = RationalMap([p.c[-1]])
            for k in range(len(p.c) - 2, -1, -1):
                acc = acc * inner + RationalMap([p.c[k]])
            return acc

        return (poly_of(self.num) / poly_of(self.den)).reduced()

    # -- reduction and analyticity checks

    def reduced(self, pair_tol: float = _PAIR_TOL) -> "RationalMap":
        """Cancel common roots of num and den paired within tolerance.

        Idempotent: when nothing cancels and no junk coefficient is trimmed
        the map is returned unchanged.
        """
        num = self.num.trim()
        den = self.den.trim()
        trimmed = (num.degree != self.num.degree) or (den.degree != self.den.degree)
        if num.is_zero:
            return RationalMap([0]) if (trimmed or self.den.degree > 0) else self
        if num.degree == 0 or den.degree == 0:
            if trimmed:
                return RationalMap(num, den)
            return self
        rn = list(num.roots())
        rd = list(den.roots())
        used = set()
        pairs = []  # (num_root, den_root) cancelled together
        for z in rd:
            best, bj = None, -1
            for j, w in enumerate(rn):
                if j in used:
                    continue
                d = abs(z - w)
                if best is None or d < best:
                    best, bj = d, j
            if bj >= 0 and best <= pair_tol * max(1.0, abs(z)):
                used.add(bj)
                pairs.append((rn[bj], z))
        if not pairs and not trimmed:
            return self
        nc, dc = num.c, den.c
        for wn, wd in pairs:
            nc = _deflate(nc, wn)
            dc = _deflate(dc, wd)
        return RationalMap(nc, dc)

    def poles(self) -> np.ndarray:
        if self.den.degree < 1:
            return np.zeros(0, dtype=complex)
        return self.den.roots()

    def analytic_on_closed_disc(self, slack: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.poles()) > 1.0 + slack))

    def require_analytic(self, slack: float = 1e-12) -> "RationalMap":
        if not self.analytic_on_closed_disc(slack):
            raise PoleOnClosedDisc("denominator vanishes on the closed unit disc")
        return self

    def allclose(self, other: "RationalMap", tol: float = 1e-12) -> bool:
        o = self._coerce(other)
        return self.num.allclose(o.num, tol) and self.den.allclose(o.den, tol)


def rational_reduce(r: RationalMap) -> RationalMap:
    """Cancel paired common roots; degree becomes max(deg num, deg den)."""
    return r.reduced()


@dataclass(frozen=True)
class MoebiusMap:
    """Disc automorphism ``t -> omega * (alpha - t) / (1 - conj(alpha) t)``.

    With ``omega == 1`` this is the Blaschke factor ``m_alpha``;
    ``MoebiusMap.identity()`` gives the identity map of the disc.
    """

    alpha: complex = 0j
    omega: complex = 1.0 + 0j

    def __post_init__(self):
        if abs(self.alpha) >= 1.0:
            raise PointOnBoundary("Moebius parameter must lie in the open disc")
        if abs(abs(self.omega) - 1.0) > 1e-14:
            raise ValueError("rotation factor must be unimodular")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(alpha=0j, omega=-1.0 + 0j)

    def __call__(self, lam):
        return self.omega * (self.alpha - lam) / (1.0 - np.conj(self.alpha) * lam)

    def inverse(self) -> "MoebiusMap":
        # solving omega*(a - t)/(1 - conj(a) t) = s for t gives the same form
        # with parameters (omega*a, 1/omega); |omega| = 1 keeps it admissible
        w = complex(self.omega)
        return MoebiusMap(alpha=complex(self.alpha) * w, omega=1.0 / w)

    def as_rational(self) -> RationalMap:
        a = complex(self.alpha)
        return RationalMap([self.omega * a, -self.omega], [1.0, -np.conj(a)])

    def as_blaschke(self) -> "BlaschkeProduct":
        return BlaschkeProduct(unimodular=self.omega, zeros=(self.alpha,))


@dataclass(frozen=True)
class BlaschkeProduct:
    """Unimodular constant times a finite product of Blaschke factors."""

    unimodular: complex = 1.0 + 0j
    zeros: tuple = ()

    def __post_init__(self):
        if abs(abs(self.unimodular) - 1.0) > 1e-14:
            raise ValueError("constant must be unimodular")
        object.__setattr__(self, "zeros", tuple(complex(z) for z in self.zeros))
        if any(abs(z) >= 1.0 for z in self.zeros):
            raise ValueError("Blaschke zeros must lie in the open disc")

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        out = np.full(lam.shape, self.unimodular, dtype=complex)
        for z in self.zeros:
            out = out * (z - lam) / (1.0 - np.conj(z) * lam)
        return out if out.shape else complex(out)

    def __mul__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return blaschke_mul(self, other)

    def as_rational(self) -> RationalMap:
        num = Poly([self.unimodular])
        den = Poly([1.0])
        for z in self.zeros:
            num = num * Poly([z, -1.0])
            den = den * Poly([1.0, -np.conj(z)])
        return RationalMap(num, den)


def blaschke_eval(b: BlaschkeProduct, lam) -> complex:
    return b(lam)


def blaschke_mul(b1: BlaschkeProduct, b2: BlaschkeProduct) -> BlaschkeProduct:
    """Degrees add, zero multisets merge, constants multiply."""
    return BlaschkeProduct(
        unimodular=b1.unimodular * b2.unimodular,
        zeros=b1.zeros + b2.zeros,
    )


def is_inner(r: RationalMap, tol: float = 1e-9, samples: int = 512) -> bool:
    """Whether |r| == 1 on the unit circle, up to tol, at equispaced samples."""
    r.require_analytic()
    vals = r(unit_circle(samples))
    return bool(np.max(np.abs(np.abs(vals) - 1.0)) <= tol)


def poincare_distance(lam1: complex, lam2: complex) -> float:
    """Hyperbolic distance 0.5*log((1+d)/(1-d)) with the pseudo-hyperbolic d."""
    if abs(lam1) >= 1.0 or abs(lam2) >= 1.0:
        raise PointOnBoundary("Poincare distance needs interior points")
    d = abs((lam1 - lam2) / (1.0 - np.conj(lam1) * lam2))
    return float(math.atanh(d))
