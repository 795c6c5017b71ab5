"""Truncated power series in ``x`` with f-polynomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from chords.errors import ChordError
from symbolic.polynomial import (
    FPolynomial,
    FRing,
    poly_from_json,
    poly_to_json,
    poly_to_str,
    scale,
    substitute,
)


@dataclass(frozen=True)
class XSeries:
    """``a_0 + a_1 x + ... + a_N x^N + O(x^{N+1})``."""

    order: int
    coeffs: Tuple[FPolynomial, ...] = ()

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ChordError(f"series order must be >= 0, got {self.order}")
        padded = list(self.coeffs)[: self.order + 1]
        padded += [FRing.zero] * (self.order + 1 - len(padded))
        object.__setattr__(self, "coeffs", tuple(padded))

    @classmethod
    def zero(cls, order: int) -> "XSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "XSeries":
        return cls(order, (FRing.one,))

    @classmethod
    def x(cls, order: int) -> "XSeries":
        return cls.monomial(order, 1, FRing.one)

    @classmethod
    def monomial(cls, order: int, power: int, coeff: FPolynomial) -> "XSeries":
        coeffs = [FRing.zero] * (order + 1)
        if power <= order:
            coeffs[power] = coeff
        return cls(order, tuple(coeffs))

    @classmethod
    def from_dict(cls, order: int, coeffs: Mapping[int, FPolynomial]) -> "XSeries":
        out = [FRing.zero] * (order + 1)
        for power, c in coeffs.items():
            if 0 <= power <= order:
                out[power] = out[power] + c
        return cls(order, tuple(out))

    def coefficient(self, power: int) -> FPolynomial:
        if power < 0 or power > self.order:
            raise ChordError(f"x^{power} is outside the truncation order {self.order}")
        return self.coeffs[power]

    def lowest_power(self) -> Optional[int]:
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def is_zero(self) -> bool:
        return self.lowest_power() is None

    def truncate(self, order: int) -> "XSeries":
        return XSeries(min(order, self.order), self.coeffs)

    def _align(self, other: "XSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "XSeries") -> "XSeries":
        n = self._align(other)
        return XSeries(n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "XSeries") -> "XSeries":
        n = self._align(other)
        return XSeries(n, tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> "XSeries":
        return XSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "XSeries") -> "XSeries":
        n = self._align(other)
        out = [FRing.zero] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return XSeries(n, tuple(out))

    def scale(self, value) -> "XSeries":
        """Multiply by a rational or by an f-polynomial."""
        if isinstance(value, (int, Fraction)):
            return XSeries(self.order, tuple(scale(c, value) for c in self.coeffs))
        return XSeries(self.order, tuple(c * value for c in self.coeffs))

    def theta(self) -> "XSeries":
        """``(2x d/dx - 1)``: the ``x^n`` coefficient gets the factor ``2n - 1``."""
        return XSeries(self.order, tuple(scale(c, 2 * n - 1) for n, c in enumerate(self.coeffs)))

    def substitute(self, values: Mapping[int, object]) -> List[Fraction]:
        return [substitute(c, values) for c in self.coeffs]

    def evaluate(self, values: Mapping[int, object], x0) -> Fraction:
        x0 = Fraction(x0)
        return sum((a * x0 ** n for n, a in enumerate(self.substitute(values))), Fraction(0))

    def nonzero_terms(self) -> Iterable[Tuple[int, FPolynomial]]:
        return ((n, c) for n, c in enumerate(self.coeffs) if c)

    def to_json(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "coeffs": {str(n): poly_to_json(c) for n, c in self.nonzero_terms()},
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "XSeries":
        order = int(data["order"])
        coeffs = {int(n): poly_from_json(items) for n, items in dict(data["coeffs"]).items()}
        return cls.from_dict(order, coeffs)

    def __str__(self) -> str:
        parts = [f"[x^{n}] {poly_to_str(c)}" for n, c in self.nonzero_terms()]
        return "\n".join(parts) if parts else "0"


@dataclass
class GreenFunction:
    """``G(x, L) = 1 - sum_k gamma_k(x) L^k``, truncated at ``x^order``."""

    order: int
    gammas: Dict[int, XSeries] = field(default_factory=dict)

    def gamma(self, k: int) -> XSeries:
        if k not in self.gammas:
            raise ChordError(f"gamma_{k} is not available (have {sorted(self.gammas)})")
        return self.gammas[k]

    def evaluate(self, values: Mapping[int, object], x0, L0) -> Fraction:
        L0 = Fraction(L0)
        total = Fraction(1)
        if L0 == 0:
            return total
        for k, series in sorted(self.gammas.items()):
            total -= series.evaluate(values, x0) * L0 ** k
        return total

    def to_json(self) -> Dict[str, object]:
        return {"order": self.order, "gamma": {str(k): s.to_json() for k, s in sorted(self.gammas.items())}}
