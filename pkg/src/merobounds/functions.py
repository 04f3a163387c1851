"""Disk functions carried through their z/f power series.

A function f, holomorphic on the unit disk except possibly for one simple
pole at p in (0, 1) and normalized by f(0) = 0, f'(0) = 1, is stored as the
truncated Taylor series of z/f(z).  That series is analytic on the whole
disk, starts with constant term 1, and encodes the pole as a zero at p.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .errors import BadParameter, PoleMismatch
from .series import DEFAULT_ORDER, TruncatedSeries

#: Sentinel for functions with no pole (analytic on the whole disk).
NO_POLE = None

#: Absolute tolerance for "the declared pole is a root of z/f".
POLE_RESIDUAL_TOL = 1e-8


def mu(p: float) -> float:
    """Pole-dependent criterion constant ((1 - p) / (1 + p))**2.

    Strictly decreasing in p, with values in (0, 1) for p in (0, 1).
    """
    if not 0.0 < p < 1.0:
        raise BadParameter(f"pole location {p!r} outside (0, 1)")
    return ((1.0 - p) / (1.0 + p)) ** 2


class ClassKind(str, Enum):
    """Function classes for which sharp bounds are implemented."""

    SIGMA_P = "SIGMA_P"            # univalent, one simple pole at p
    U_P_LAMBDA = "U_P_LAMBDA"      # pole at p, residual functional below lambda * mu
    S = "S"                        # analytic univalent, no pole
    CO_P = "CO_P"                  # concave univalent with pole at p
    SIGMA_STAR_P = "SIGMA_STAR_P"  # starlike w.r.t. an omitted value w0


_POLE_KINDS = {ClassKind.SIGMA_P, ClassKind.U_P_LAMBDA, ClassKind.CO_P, ClassKind.SIGMA_STAR_P}


@dataclass(frozen=True)
class ClassSpec:
    """A function class together with its parameters.

    ``lam`` is present exactly for U_P_LAMBDA (0 < lam <= 1), ``w0`` exactly
    for SIGMA_STAR_P, where it must lie in [-p/(1-p)**2, -p/(1+p)**2].
    """

    kind: ClassKind
    p: Optional[float] = None
    lam: Optional[float] = None
    w0: Optional[float] = None

    def __post_init__(self):
        kind = ClassKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in _POLE_KINDS:
            if self.p is None:
                raise BadParameter(f"class {kind.value} needs a pole location")
            if not 0.0 < self.p < 1.0:
                raise BadParameter(f"pole location {self.p!r} outside (0, 1)")
        elif self.p is not None:
            raise BadParameter("class S admits no pole parameter")
        if kind is ClassKind.U_P_LAMBDA:
            if self.lam is None:
                raise BadParameter("class U_P_LAMBDA needs lambda")
            if not 0.0 < self.lam <= 1.0:
                raise BadParameter(f"lambda {self.lam!r} outside (0, 1]")
        elif self.lam is not None:
            raise BadParameter(f"class {kind.value} admits no lambda parameter")
        if kind is ClassKind.SIGMA_STAR_P:
            if self.w0 is None:
                raise BadParameter("class SIGMA_STAR_P needs the omitted value w0")
            lo = -self.p / (1.0 - self.p) ** 2
            hi = -self.p / (1.0 + self.p) ** 2
            if not lo <= self.w0 <= hi:
                raise BadParameter(f"w0 {self.w0!r} outside [{lo!r}, {hi!r}]")
        elif self.w0 is not None:
            raise BadParameter(f"class {kind.value} admits no w0 parameter")


@dataclass(frozen=True)
class PoleFunction:
    """A normalized disk function represented by its z/f series.

    Attributes:
        inv_series: truncated series of z/f with constant term exactly 1.
        pole: location of the simple pole in (0, 1), or NO_POLE.
    """

    inv_series: TruncatedSeries
    pole: Optional[float] = NO_POLE

    def __post_init__(self):
        if self.inv_series[0] != 1.0 + 0.0j:
            raise BadParameter("z/f series must start with constant term 1")
        if self.pole is not None:
            if not 0.0 < self.pole < 1.0:
                raise BadParameter(f"pole location {self.pole!r} outside (0, 1)")
            residual = abs(self.inv_series.evaluate(self.pole))
            if residual > POLE_RESIDUAL_TOL:
                raise PoleMismatch(
                    f"z/f evaluates to modulus {residual:.3e} at the declared pole "
                    f"{self.pole!r} (tolerance {POLE_RESIDUAL_TOL:g})"
                )

    @property
    def order(self) -> int:
        return self.inv_series.order


def _padded(head: Sequence[complex], order: int) -> TruncatedSeries:
    out = np.zeros(order + 1, dtype=np.complex128)
    out[: len(head)] = head
    return TruncatedSeries(out)


def build_kp(p: float, order: int = DEFAULT_ORDER) -> PoleFunction:
    """Extremal univalent function with pole p: z/f = 1 - (1/p + p) z + z**2.

    Maps the disk onto the complement of a straight slit and attains the
    sharp coefficient and Dirichlet-growth bounds for the pole class.
    """
    if not 0.0 < p < 1.0:
        raise BadParameter(f"pole location {p!r} outside (0, 1)")
    if order < 2:
        raise BadParameter("order must be at least 2 to hold the z/f polynomial")
    return PoleFunction(_padded([1.0, -(1.0 / p + p), 1.0], order), pole=p)


def build_fp(p: float, lam: float, order: int = DEFAULT_ORDER) -> PoleFunction:
    """Extremal member of the residual-functional class:
    z/f = 1 - (1/p + lam*mu*p) z + lam*mu z**2."""
    if not 0.0 < p < 1.0:
        raise BadParameter(f"pole location {p!r} outside (0, 1)")
    if not 0.0 < lam <= 1.0:
        raise BadParameter(f"lambda {lam!r} outside (0, 1]")
    if order < 2:
        raise BadParameter("order must be at least 2 to hold the z/f polynomial")
    m = lam * mu(p)
    return PoleFunction(_padded([1.0, -(1.0 / p + m * p), m], order), pole=p)


def build_koebe_rotation(theta: float, order: int = DEFAULT_ORDER) -> PoleFunction:
    """Rotated Koebe map z/(1 - e^{i theta} z)**2, which has no pole.

    Its z/f series is the exact polynomial 1 - 2 e^{i theta} z + e^{2 i theta} z**2.
    """
    if not math.isfinite(theta):
        raise BadParameter("rotation angle must be finite")
    if order < 2:
        raise BadParameter("order must be at least 2 to hold the z/f polynomial")
    w = cmath.exp(1j * theta)
    return PoleFunction(_padded([1.0, -2.0 * w, w * w], order), pole=NO_POLE)


def from_inverse_coefficients(b: Sequence[complex], pole: Optional[float] = NO_POLE) -> PoleFunction:
    """Build a function from the z/f coefficients b1..bN (b0 = 1 implicit)."""
    coeffs = np.empty(len(b) + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    coeffs[1:] = b
    return PoleFunction(TruncatedSeries(coeffs), pole=pole)


def f_over_z_series(f: PoleFunction, order: Optional[int] = None) -> TruncatedSeries:
    """Taylor series of f/z, the reciprocal of the stored z/f series.

    Entry n is the Taylor coefficient a_{n+1} of f itself (entry 0 is 1).
    The requested order may not exceed the stored order: coefficients the
    representation does not determine are never invented.
    """
    if order is None:
        order = f.inv_series.order
    if order > f.inv_series.order:
        raise BadParameter(
            f"order {order} exceeds the stored truncation order {f.inv_series.order}"
        )
    return f.inv_series.truncate(order).reciprocal()


# ---- CSV row form ----------------------------------------------------------
#
# One function per row: p (empty when there is no pole), order N, then the
# 2N real numbers Re b1, Im b1, ..., Re bN, Im bN.

def to_csv_row(f: PoleFunction) -> list[str]:
    row = ["" if f.pole is None else repr(f.pole), str(f.order)]
    for c in f.inv_series.coefficients[1:]:
        row.append(repr(float(c.real)))
        row.append(repr(float(c.imag)))
    return row


def from_csv_row(fields: Sequence[str]) -> PoleFunction:
    if len(fields) < 2:
        raise BadParameter("function row needs at least a pole field and an order field")
    try:
        pole = None if fields[0].strip() == "" else float(fields[0])
        order = int(fields[1])
        values = [float(x) for x in fields[2:]]
    except ValueError as exc:
        raise BadParameter(f"unparseable function row: {exc}") from exc
    if order < 1 or len(values) != 2 * order:
        raise BadParameter(
            f"function row declares order {order} but carries {len(values)} coefficient fields"
        )
    b = [complex(values[2 * k], values[2 * k + 1]) for k in range(order)]
    return from_inverse_coefficients(b, pole=pole)
