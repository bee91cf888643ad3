"""Automorphism groups of the 2x2 matrix balls, the tetrablock and the
symmetrised bidisc.

The matrix-ball generators are the linear maps ``x -> U x U^T`` and the
involutive Moebius-type maps

    Phi_a(x) = (1 - a a*)^{-1/2} (x - a) (1 - a* x)^{-1} (1 - a* a)^{1/2}

with ``Phi_a(a) = 0``, ``Phi_a(0) = -a`` and inverse ``Phi_{-a}``.
Chains of these steps are stored symbolically and applied pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DenominatorVanishes,
    ParameterNotContractive,
    ParameterInvalid,
)
from .matrix2 import as_matrix, inv2, is_unitary, psd_sqrt2, svd2
from .rational import MoebiusMap

_I2 = np.eye(2, dtype=complex)


def phi_a_apply(a, x) -> np.ndarray:
    """Apply Phi_a to x; both strict contractions (x may sit on the boundary)."""
    a = as_matrix(a)
    x = as_matrix(x)
    if svd2(a)[0] >= 1.0:
        raise ParameterNotContractive("automorphism parameter must have norm < 1")
    left = inv2(psd_sqrt2(_I2 - a @ a.conj().T))
    right = psd_sqrt2(_I2 - a.conj().T @ a)
    resolvent = inv2(_I2 - a.conj().T @ x)
    return left @ (x - a) @ resolvent @ right


@dataclass(frozen=True)
class PhiStep:
    """Moebius-type step with a contractive parameter."""

    a: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", as_matrix(self.a))
        if svd2(self.a)[0] >= 1.0:
            raise ParameterNotContractive("step parameter must have norm < 1")

    def __call__(self, x):
        return phi_a_apply(self.a, x)


@dataclass(frozen=True)
class LUStep:
    """Linear step x -> U x U^T with U unitary."""

    u: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "u", as_matrix(self.u))
        if not is_unitary(self.u):
            raise ParameterInvalid("linear step needs a unitary matrix")

    def __call__(self, x):
        x = as_matrix(x)
        return self.u @ x @ self.u.T


@dataclass(frozen=True)
class AutR2:
    """Ordered chain of matrix-ball automorphism steps, applied left to right."""

    steps: tuple = ()

    def __post_init__(self):
        for s in self.steps:
            if not isinstance(s, (PhiStep, LUStep)):
                raise ParameterInvalid("chain steps must be PhiStep or LUStep")
        object.__setattr__(self, "steps", tuple(self.steps))

    def preserves_symmetric(self) -> bool:
        """True when every Phi parameter is symmetric (chain maps the
        symmetric ball to itself)."""
        for s in self.steps:
            if isinstance(s, PhiStep):
                if np.max(np.abs(s.a - s.a.T)) > 1e-12:
                    return False
        return True

    def __call__(self, x):
        return aut_chain_apply(self, x)


def aut_chain_apply(chain: AutR2, x) -> np.ndarray:
    out = as_matrix(x)
    for step in chain.steps:
        out = step(out)
    return out


@dataclass(frozen=True)
class AutE:
    """Tetrablock automorphism: the rational part with parameters (a, b),
    then the torus action (omega x1, eta x2, omega eta x3), then an
    optional coordinate swap (x1, x2, x3) -> (x2, x1, x3)."""

    a: complex = 0j
    b: complex = 0j
    omega: complex = 1.0 + 0j
    eta: complex = 1.0 + 0j
    swap: bool = False

    def __post_init__(self):
        if abs(self.a) >= 1.0 or abs(self.b) >= 1.0:
            raise ParameterNotContractive("tetrablock parameters must be in the disc")
        if abs(abs(self.omega) - 1.0) > 1e-12 or abs(abs(self.eta) - 1.0) > 1e-12:
            raise ParameterInvalid("torus factors must be unimodular")

    def __call__(self, x):
        return aut_e_apply(self, x)


def aut_e_apply(psi: AutE, x) -> np.ndarray:
    """Apply a tetrablock automorphism to a point of the closed tetrablock."""
    p = np.atleast_1d(np.asarray(x, dtype=complex)).ravel()
    if len(p) != 3:
        raise ValueError("tetrablock points have 3 coordinates")
    x1, x2, x3 = p
    a, b = complex(psi.a), complex(psi.b)
    ca, cb = np.conj(a), np.conj(b)
    den = 1.0 - ca * x1 - cb * x2 + ca * cb * x3
    if abs(den) < 1e-13:
        raise DenominatorVanishes("automorphism denominator vanished")
    y1 = (x1 - a - cb * x3 + a * cb * x2) / den
    y2 = (x2 - b - ca * x3 + ca * b * x1) / den
    y3 = (x3 - a * x2 - b * x1 + a * b) / den
    y1, y2, y3 = psi.omega * y1, psi.eta * y2, psi.omega * psi.eta * y3
    if psi.swap:
        y1, y2 = y2, y1
    return np.array([y1, y2, y3], dtype=complex)


def aut_g2_apply(m: MoebiusMap, x) -> tuple[complex, complex]:
    """Automorphism of the symmetrised bidisc induced by a disc automorphism.

    For nu = omega * m_alpha acting on the unordered root pair of
    z^2 - s z + p, the symmetric functions transform rationally:

        s' = omega (2a - (1+|a|^2) s + 2 conj(a) p) / (1 - conj(a) s + conj(a)^2 p)
        p' = omega^2 (a^2 - a s + p) / (1 - conj(a) s + conj(a)^2 p)

    which avoids any branch choice on the discriminant.
    """
    p = np.atleast_1d(np.asarray(x, dtype=complex)).ravel()
    if len(p) != 2:
        raise ValueError("symmetrised bidisc points have 2 coordinates")
    s, q = complex(p[0]), complex(p[1])
    a = complex(m.alpha)
    w = complex(m.omega)
    ca = np.conj(a)
    den = 1.0 - ca * s + ca * ca * q
    if abs(den) < 1e-13:
        raise DenominatorVanishes("automorphism denominator vanished")
    s_new = w * (2.0 * a - (1.0 + abs(a) ** 2) * s + 2.0 * ca * q) / den
    p_new = w * w * (a * a - a * s + q) / den
    return complex(s_new), complex(p_new)
