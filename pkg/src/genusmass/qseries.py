"""Exact truncated q-expansions and the index operators U_p, V_p, T_p."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .arith import is_prime, kronecker

__all__ = ["QSeries", "qseries", "apply_U", "apply_V", "apply_T"]


@dataclass(frozen=True)
class QSeries:
    """Coefficients 0..precision of a q-expansion, exact rationals throughout.

    disc is the discriminant whose Kronecker character the T_p operator uses;
    arithmetic between series of different precision truncates to the shorter.
    """

    disc: int
    coeffs: tuple[Fraction, ...]

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _check_compatible(self, other: "QSeries") -> None:
        if self.disc != other.disc:
            raise ValueError(f"mixed discriminants {self.disc} and {other.disc}")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check_compatible(other)
        n = min(self.precision, other.precision)
        return QSeries(self.disc, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check_compatible(other)
        n = min(self.precision, other.precision)
        return QSeries(self.disc, tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> "QSeries":
        return QSeries(self.disc, tuple(-c for c in self.coeffs))

    def scale(self, r) -> "QSeries":
        r = Fraction(r)
        return QSeries(self.disc, tuple(r * c for c in self.coeffs))

    def truncate(self, n: int) -> "QSeries":
        if n >= self.precision:
            return self
        return QSeries(self.disc, self.coeffs[: n + 1])

    def is_zero(self, lo: int = 0, hi: Optional[int] = None) -> bool:
        hi = self.precision if hi is None else hi
        return all(self.coeffs[i] == 0 for i in range(lo, hi + 1))

    def first_mismatch(self, other: "QSeries", lo: int = 0, hi: Optional[int] = None):
        """First (n, self[n], other[n]) with differing coefficients, or None.

        hi defaults to the smaller precision; never compares beyond it.
        """
        self._check_compatible(other)
        limit = min(self.precision, other.precision)
        hi = limit if hi is None else min(hi, limit)
        for n in range(lo, hi + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n, self.coeffs[n], other.coeffs[n]
        return None

    def agrees_with(self, other: "QSeries", lo: int = 0, hi: Optional[int] = None) -> bool:
        return self.first_mismatch(other, lo, hi) is None

    def to_dict(self) -> dict:
        return {
            "disc": self.disc,
            "precision": self.precision,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "QSeries":
        coeffs = tuple(Fraction(num, den) for num, den in data["coeffs"])
        series = cls(int(data["disc"]), coeffs)
        if series.precision != int(data["precision"]):
            raise ValueError("precision field disagrees with coefficient count")
        return series

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_dict(json.loads(text))


def qseries(disc: int, values: Iterable) -> QSeries:
    """Build a QSeries from any iterable of ints/Fractions."""
    return QSeries(disc, tuple(Fraction(v) for v in values))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"operator index {p} is not prime")


def apply_U(f: QSeries, p: int) -> QSeries:
    """Index extraction: coefficient n of the output is coefficient p*n of f.

    Precision drops to floor(N/p).  The constant term is carried through
    unchanged; the operator identities are only ever compared on n >= 1.
    """
    _check_prime(p)
    n = f.precision // p
    return QSeries(f.disc, (f.coeffs[0],) + tuple(f.coeffs[p * k] for k in range(1, n + 1)))


def apply_V(f: QSeries, p: int) -> QSeries:
    """Index dilation: coefficient p*n of the output is coefficient n of f."""
    _check_prime(p)
    out = [Fraction(0)] * (f.precision + 1)
    out[0] = f.coeffs[0]
    for k in range(1, f.precision // p + 1):
        out[p * k] = f.coeffs[k]
    return QSeries(f.disc, tuple(out))


def apply_T(f: QSeries, p: int) -> QSeries:
    """Weight-one Hecke operator U_p + (disc|p) V_p, truncated to floor(N/p)."""
    chi = kronecker(f.disc, p)
    out = apply_U(f, p)
    if chi:
        out = out + apply_V(f, p).scale(chi)
    return out.truncate(f.precision // p)
