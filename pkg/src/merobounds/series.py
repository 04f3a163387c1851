"""Truncated complex power series arithmetic on the unit disk.

A series is a finite coefficient vector ``c[0..N]`` standing for
``sum_n c[n] z**n``.  Nothing past the truncation order is ever invented:
binary operations shorten to the smaller order of their operands rather
than zero-padding the shorter one.
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from .errors import BadParameter, BadRadius, NearZeroConstantTerm, OrderUnderflow

#: Truncation order used by the canonical constructors.
DEFAULT_ORDER = 64

#: Smallest constant-term modulus for which a reciprocal is attempted.
RECIPROCAL_FLOOR = 1e-9

ComplexLike = Union[complex, float, int]


class TruncatedSeries:
    """Immutable truncated power series with complex coefficients.

    Args:
        coefficients: iterable of at least one finite complex number,
            index n holding the coefficient of ``z**n``.

    Raises:
        BadParameter: on an empty vector or any non-finite entry.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[ComplexLike]):
        arr = np.array(list(coefficients), dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise BadParameter("a series needs a one-dimensional, non-empty coefficient vector")
        if not np.all(np.isfinite(arr)):
            raise BadParameter("series coefficients must be finite")
        arr.setflags(write=False)
        self._coeffs = arr

    # ---- basic introspection -------------------------------------------

    @property
    def coefficients(self) -> np.ndarray:
        """Read-only coefficient vector of length ``order + 1``."""
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> complex:
        return complex(self._coeffs[n])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._coeffs, other._coeffs))

    __hash__ = None  # mutable-looking value semantics; not hashable

    def __repr__(self) -> str:
        head = ", ".join(repr(complex(c)) for c in self._coeffs[:4])
        tail = ", ..." if self.order > 3 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    # ---- arithmetic -----------------------------------------------------

    def multiply(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated to the smaller operand order."""
        order = min(self.order, other.order)
        prod = np.convolve(self._coeffs, other._coeffs)[: order + 1]
        return TruncatedSeries(prod)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.multiply(other)

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse to the same truncation order.

        Uses the standard recurrence r[0] = 1/c[0] and
        ``r[n] = -(1/c[0]) * sum_{k=1..n} c[k] r[n-k]``.

        Raises:
            NearZeroConstantTerm: if ``|c[0]| < RECIPROCAL_FLOOR``.
        """
        c = self._coeffs
        if abs(c[0]) < RECIPROCAL_FLOOR:
            raise NearZeroConstantTerm(
                f"constant term {c[0]!r} has modulus below {RECIPROCAL_FLOOR:g}"
            )
        lead = 1.0 / c[0]
        out = np.zeros_like(c)
        out[0] = lead
        for n in range(1, len(c)):
            out[n] = -lead * np.dot(c[1 : n + 1], out[n - 1 :: -1])
        return TruncatedSeries(out)

    def differentiate(self, times: int = 1) -> "TruncatedSeries":
        """Term-by-term derivative, dropping ``times`` orders.

        Raises:
            OrderUnderflow: if ``times`` exceeds the truncation order.
            BadParameter: if ``times`` is negative.
        """
        if times < 0:
            raise BadParameter("cannot differentiate a negative number of times")
        if times > self.order:
            raise OrderUnderflow(
                f"{times} derivatives requested but the series has order {self.order}"
            )
        c = self._coeffs
        for _ in range(times):
            c = c[1:] * np.arange(1, len(c), dtype=np.float64)
        return TruncatedSeries(c)

    def antiderivative(self) -> "TruncatedSeries":
        """Term-by-term antiderivative with zero constant term."""
        out = np.zeros(len(self._coeffs) + 1, dtype=np.complex128)
        out[1:] = self._coeffs / np.arange(1, len(self._coeffs) + 1, dtype=np.float64)
        return TruncatedSeries(out)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop every coefficient past ``order`` (which must not exceed the
        current order: unknown tail coefficients are never fabricated)."""
        if not 0 <= order <= self.order:
            raise BadParameter(f"cannot truncate order-{self.order} series to order {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    # ---- evaluation and coefficient functionals -------------------------

    def evaluate(self, z):
        """Horner evaluation at a complex point or ndarray of points."""
        pts = np.asarray(z, dtype=np.complex128)
        acc = np.full(pts.shape, self._coeffs[-1])
        for c in self._coeffs[-2::-1]:
            acc = acc * pts + c
        if np.ndim(z) == 0:
            return complex(acc)
        return acc

    def weighted_coefficient_sum(self, t: float, r: float, start_index: int = 0) -> float:
        """``sum_{n >= start_index} n**t |c[n]|**2 r**(2n)``.

        The n = 0 term is taken to be ``|c[0]|**2`` when t = 0 and zero for
        any other t (the only finite reading of ``0**t`` for t < 0, and the
        standard convention for t > 0).

        Raises:
            BadRadius: if r is outside (0, 1].
            BadParameter: if ``start_index`` is outside [0, order].
        """
        if not 0.0 < r <= 1.0:
            raise BadRadius(f"radius {r!r} outside (0, 1]")
        if not 0 <= start_index <= self.order:
            raise BadParameter(
                f"start index {start_index} outside [0, {self.order}]"
            )
        n = np.arange(start_index, self.order + 1, dtype=np.float64)
        if t == 0:
            weights = np.ones_like(n)
        else:
            weights = np.empty_like(n)
            nonzero = n > 0
            weights[nonzero] = n[nonzero] ** t
            weights[~nonzero] = 0.0
        mags = np.abs(self._coeffs[start_index:]) ** 2
        return float(np.sum(weights * mags * r ** (2.0 * n)))
