"""Analytic discs: vectors of rational maps into a target domain.

A ``Disc`` validates on construction that every component is analytic on
the closed unit disc and that sampled interior points actually land in the
target (open target by default; constructions into a closed matrix ball
pass ``closed=True``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .domains import DomainId, contains, membership_defect
from .errors import DimensionMismatch, PoleOnClosedDisc, XDiscError
from .rational import RationalMap, unit_circle

_SAMPLE_RADII = (0.2, 0.45, 0.7, 0.95)
_SAMPLES_PER_RADIUS = 16


class MembershipViolation(XDiscError):
    """Sampled disc value escaped the target domain."""


@dataclass(frozen=True)
class Disc:
    """An analytic disc given by rational components and a target tag."""

    components: tuple
    target: DomainId
    closed: bool = False
    meta: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, RationalMap) else RationalMap(c)
            for c in self.components
        )
        object.__setattr__(self, "components", comps)
        if len(comps) != self.target.ambient_dim:
            raise DimensionMismatch(
                f"{self.target} needs {self.target.ambient_dim} components, "
                f"got {len(comps)}"
            )
        for c in comps:
            if not c.analytic_on_closed_disc():
                raise PoleOnClosedDisc("disc component has a pole on the closed disc")
        self._validate_membership()

    def _validate_membership(self):
        tol = 1e-9 if self.closed else 1e-12
        for radius in _SAMPLE_RADII:
            pts = unit_circle(_SAMPLES_PER_RADIUS, radius=radius, offset=0.37)
            vals = self(pts)
            if self.target.kind == "cartan2":
                if np.max(np.abs(vals[1] - vals[2])) > 1e-10:
                    raise MembershipViolation("matrix disc is not symmetric")
            if self.target.kind == "cartan3":
                skew = max(
                    float(np.max(np.abs(vals[0]))),
                    float(np.max(np.abs(vals[3]))),
                    float(np.max(np.abs(vals[1] + vals[2]))),
                )
                if skew > 1e-10:
                    raise MembershipViolation("matrix disc is not antisymmetric")
            for k in range(pts.size):
                defect = membership_defect(self.target, vals[:, k])
                if defect > 1.0 + tol:
                    raise MembershipViolation(
                        f"value at {pts[k]:.3f} has defect {defect:.6f} "
                        f"outside {self.target}"
                    )

    def __call__(self, lam) -> np.ndarray:
        """Evaluate all components; shape (dim,) for scalars, (dim, n) for arrays."""
        lam = np.asarray(lam, dtype=complex)
        vals = [c(lam) for c in self.components]
        return np.array(vals, dtype=complex)

    @property
    def degree(self) -> int:
        return max(c.reduced().degree for c in self.components)

    def reduced(self) -> "Disc":
        return Disc(
            tuple(c.reduced() for c in self.components),
            self.target,
            closed=self.closed,
            meta=dict(self.meta),
        )

    def matrix_at(self, lam) -> np.ndarray:
        """Disc value(s) reshaped 2x2 for the Cartan targets."""
        if self.target.ambient_dim != 4:
            raise DimensionMismatch("matrix view needs a 2x2 matrix target")
        v = self(lam)
        return v.reshape(2, 2) if v.ndim == 1 else v.reshape(2, 2, -1)

    def precompose(self, inner: RationalMap) -> "Disc":
        """The disc t -> f(inner(t)) for an inner self-map of the disc."""
        return Disc(
            tuple(c.compose(inner) for c in self.components),
            self.target,
            closed=self.closed,
            meta=dict(self.meta),
        )

    def with_meta(self, **extra) -> "Disc":
        meta = dict(self.meta)
        meta.update(extra)
        return Disc(self.components, self.target, closed=self.closed, meta=meta)


def matrix_disc(entries, closed: bool = False, meta: Mapping | None = None,
                symmetric_target: bool = True) -> Disc:
    """Build a Cartan-target disc from a 2x2 nest of rational maps."""
    e = [entries[0][0], entries[0][1], entries[1][0], entries[1][1]]
    kind = "cartan2" if symmetric_target else "cartan1"
    return Disc(tuple(e), DomainId(kind), closed=closed, meta=dict(meta or {}))
