"""Domain predicates for the disc, polydisc, ball, 2x2 Cartan domains,
the symmetrised bidisc and the tetrablock, plus the structural maps
between them and the royal varieties.

A point is a flat complex vector (matrices row-major).  Membership is
phrased through a *defect*: the value of the defining gauge/inequality,
normalised so that ``defect < 1`` means open membership.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotOnCartanBoundary, UnsupportedDomain
from .matrix2 import as_matrix, svd2

_BALANCED = ("disc", "polydisc", "ball", "cartan1", "cartan2", "cartan3")
_KINDS = _BALANCED + ("symbidisc", "tetrablock")
_SYM_TOL = 1e-12


@dataclass(frozen=True)
class DomainId:
    """Tag for one of the supported domains; ``n`` only for polydisc/ball."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise UnsupportedDomain(f"unknown domain kind {self.kind!r}")
        if self.kind in ("polydisc", "ball"):
            if self.n is None or self.n < 1:
                raise UnsupportedDomain(f"{self.kind} needs a dimension n >= 1")
        elif self.n is not None:
            raise UnsupportedDomain(f"{self.kind} takes no dimension parameter")

    @property
    def ambient_dim(self) -> int:
        if self.kind == "disc":
            return 1
        if self.kind in ("polydisc", "ball"):
            return int(self.n)
        if self.kind in ("cartan1", "cartan2", "cartan3"):
            return 4
        if self.kind == "symbidisc":
            return 2
        return 3  # tetrablock

    @property
    def balanced(self) -> bool:
        return self.kind in _BALANCED

    def __str__(self):
        if self.n is not None:
            return f"{self.kind}:{self.n}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "DomainId":
        text = text.strip().lower()
        if ":" in text:
            kind, _, num = text.partition(":")
            return cls(kind, int(num))
        return cls(text)


DISC = DomainId("disc")
CARTAN1 = DomainId("cartan1")
CARTAN2 = DomainId("cartan2")
CARTAN3 = DomainId("cartan3")
SYMBIDISC = DomainId("symbidisc")
TETRABLOCK = DomainId("tetrablock")


def polydisc(n: int) -> DomainId:
    return DomainId("polydisc", n)


def ball(n: int) -> DomainId:
    return DomainId("ball", n)


def _as_point(d: DomainId, x) -> np.ndarray:
    p = np.atleast_1d(np.asarray(x, dtype=complex)).ravel()
    if len(p) != d.ambient_dim:
        raise DimensionMismatch(
            f"{d} expects {d.ambient_dim} coordinates, got {len(p)}"
        )
    return p


def membership_defect(d: DomainId, x) -> float:
    """Value of the defining inequality; < 1 iff the point is interior.

    For the balanced tags this is the Minkowski gauge except on the ball
    and the symmetrised bidisc / tetrablock, whose defining expressions
    are the squared norm and the mixed boundary functionals.
    """
    p = _as_point(d, x)
    if d.kind == "disc":
        return float(abs(p[0]))
    if d.kind == "polydisc":
        return float(np.max(np.abs(p)))
    if d.kind == "ball":
        return float(np.sum(np.abs(p) ** 2))
    if d.kind in ("cartan1", "cartan2", "cartan3"):
        return svd2(p.reshape(2, 2))[0]
    if d.kind == "symbidisc":
        s, q = p[0], p[1]
        return float(abs(s - np.conj(s) * q) + abs(q) ** 2)
    x1, x2, x3 = p
    return float(
        abs(x1 - np.conj(x2) * x3) + abs(x2 - np.conj(x1) * x3) + abs(x3) ** 2
    )


def _symmetry_ok(d: DomainId, p: np.ndarray, tol: float = _SYM_TOL) -> bool:
    if d.kind == "cartan2":
        m = p.reshape(2, 2)
        return bool(np.max(np.abs(m - m.T)) <= tol)
    if d.kind == "cartan3":
        m = p.reshape(2, 2)
        return bool(np.max(np.abs(m + m.T)) <= tol)
    return True


def contains(d: DomainId, x, mode: str = "open", tol: float = 1e-12) -> bool:
    """Open (strict) or closed (within tol) membership."""
    p = _as_point(d, x)
    if not _symmetry_ok(d, p):
        return False
    defect = membership_defect(d, p)
    if mode == "open":
        return defect < 1.0
    if mode == "closed":
        return defect <= 1.0 + tol
    raise ValueError(f"mode must be 'open' or 'closed', got {mode!r}")


def gauge(d: DomainId, x) -> float:
    """Closed-form Minkowski functional of a balanced tag."""
    if not d.balanced:
        raise UnsupportedDomain(f"{d} is not a supported balanced domain")
    p = _as_point(d, x)
    if d.kind == "ball":
        return float(np.sqrt(np.sum(np.abs(p) ** 2)))
    return membership_defect(d, p)  # disc, polydisc, cartan: already a gauge


def minkowski(d: DomainId, x, tol: float = 1e-9) -> float:
    """Minkowski functional by bisection along the ray through x.

    Refused for the symmetrised bidisc and the tetrablock, which are not
    balanced (radial bisection would silently assume star-shapedness).
    """
    if not d.balanced:
        raise UnsupportedDomain(f"Minkowski functional undefined for {d}")
    p = _as_point(d, x)
    if np.max(np.abs(p)) == 0.0:
        return 0.0
    # for the symmetric/antisymmetric matrix tags measure along the ray in
    # the full matrix ball: scaling preserves (anti)symmetry anyway
    probe = DomainId("cartan1") if d.kind in ("cartan2", "cartan3") else d

    def inside(t: float) -> bool:
        return membership_defect(probe, p / t) < 1.0

    hi = 1.0
    while not inside(hi):
        hi *= 2.0
        if hi > 1e18:
            raise UnsupportedDomain("ray never enters the domain")
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


# --- structural maps ---------------------------------------------------------


def pi_map(z) -> np.ndarray:
    """(z11, z22, det z): maps the 2x2 matrix ball onto the tetrablock."""
    m = as_matrix(z)
    return np.array(
        [m[0, 0], m[1, 1], m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]], dtype=complex
    )


def iota(s: complex, p: complex) -> np.ndarray:
    """Embed the symmetrised bidisc in the tetrablock: (s/2, s/2, p)."""
    s = complex(s)
    return np.array([s / 2.0, s / 2.0, complex(p)], dtype=complex)


def p_map(x) -> tuple[complex, complex]:
    """(x1 + x2, x3): left inverse of iota."""
    p = _as_point(TETRABLOCK, x)
    return complex(p[0] + p[1]), complex(p[2])


def royal_defect(which: str, x) -> float:
    """Distance-like defect from the royal variety; exactly 0 on it.

    ``sigma``: |s^2 - 4p| on 2-space; ``t``: |x1 x2 - x3| on 3-space.
    """
    which = which.lower()
    if which == "sigma":
        p = _as_point(SYMBIDISC, x)
        return float(abs(p[0] ** 2 - 4.0 * p[1]))
    if which == "t":
        p = _as_point(TETRABLOCK, x)
        return float(abs(p[0] * p[1] - p[2]))
    raise ValueError("which must be 'sigma' or 't'")


def tetrablock_boundary_test(x, tol: float = 1e-10) -> bool:
    """For x on the boundary of the matrix ball: pi(x) hits the tetrablock
    boundary iff the off-diagonal moduli agree."""
    m = as_matrix(x)
    s1 = svd2(m)[0]
    if abs(s1 - 1.0) > 1e-10:
        raise NotOnCartanBoundary(f"largest singular value {s1} is not 1")
    return bool(abs(abs(m[0, 1]) - abs(m[1, 0])) <= tol)


def shilov_test(d: DomainId, x, tol: float = 1e-10) -> bool:
    """Shilov-boundary membership for the symmetrised bidisc, the 2x2
    matrix ball (the unitary group) and the tetrablock (pi of a unitary).
    """
    if d.kind == "symbidisc":
        p = _as_point(d, x)
        s, q = p[0], p[1]
        return bool(
            abs(abs(q) - 1.0) <= tol
            and abs(s - np.conj(s) * q) <= tol
            and abs(s) <= 2.0 + tol
        )
    if d.kind == "cartan1":
        m = _as_point(d, x).reshape(2, 2)
        return bool(np.max(np.abs(m @ m.conj().T - np.eye(2))) <= tol)
    if d.kind == "tetrablock":
        p = _as_point(d, x)
        x1, x2, x3 = p
        # pi of a unitary u has x2 = conj(x1) x3, |x3| = 1, |x1| <= 1; the
        # off-diagonal entries are then recoverable from unitarity
        return bool(
            abs(abs(x3) - 1.0) <= tol
            and abs(x2 - np.conj(x1) * x3) <= tol
            and abs(x1) <= 1.0 + tol
        )
    raise UnsupportedDomain(f"no Shilov test for {d}")
