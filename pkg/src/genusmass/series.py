"""Builders for the concrete q-series: theta series, genus averages, twisted sums,
divisor-sum Eisenstein series, and the character-weighted combination per genus."""

from __future__ import annotations

import io
from fractions import Fraction
from functools import lru_cache

from .arith import is_fundamental, is_fundamental_discriminant, kronecker
from .class_group import ClassGroup, build_class_group
from .forms import automorph_count, representation_counts
from .genus import GenusCharacter, build_genus_characters
from .qseries import QSeries, qseries

__all__ = [
    "theta_series",
    "class_average",
    "genus_eisenstein",
    "twisted_sum",
    "eisenstein_series",
    "l_zero",
    "eisenstein_for_genus",
    "series_csv",
]


@lru_cache(maxsize=None)
def _theta_coeffs(delta: int, h: int, n_max: int) -> tuple[int, ...]:
    group = build_class_group(delta)
    return tuple(representation_counts(group.classes[h], n_max))


def theta_series(group: ClassGroup, h: int, n_max: int) -> QSeries:
    """Theta series of the class h: coefficient n is r(Q_h, n); constant term 1."""
    return qseries(group.delta, _theta_coeffs(group.delta, h, n_max))


def class_average(group: ClassGroup, n_max: int) -> QSeries:
    """(1/w) * sum of all theta series; constant term h/w."""
    total = theta_series(group, 0, n_max)
    for h in range(1, group.h):
        total = total + theta_series(group, h, n_max)
    return total.scale(Fraction(1, group.w))


def genus_eisenstein(group: ClassGroup, genus_id: int, n_max: int) -> QSeries:
    """Average of the theta series over one genus: (1/|H^2|) sum over h in g."""
    members = group.genus_members(genus_id)
    total = theta_series(group, members[0], n_max)
    for h in members[1:]:
        total = total + theta_series(group, h, n_max)
    return total.scale(Fraction(1, len(members)))


def twisted_sum(group: ClassGroup, chi: GenusCharacter, n_max: int) -> QSeries:
    """(1/w) * sum over classes of chi(h) * theta_h.

    Computed both class-by-class and genus-by-genus; the two groupings must
    agree exactly.
    """
    w = group.w
    by_class = qseries(group.delta, [0] * (n_max + 1))
    for h in range(group.h):
        sign = chi.value(group.genus_of[h])
        term = theta_series(group, h, n_max)
        by_class = by_class + (term if sign == 1 else -term)
    by_class = by_class.scale(Fraction(1, w))

    by_genus = qseries(group.delta, [0] * (n_max + 1))
    for g in group.genus_ids:
        term = genus_eisenstein(group, g, n_max).scale(chi.value(g))
        by_genus = by_genus + term
    by_genus = by_genus.scale(Fraction(len(group.squares), w))

    assert by_class == by_genus, "class-wise and genus-wise twisted sums disagree"
    return by_class


@lru_cache(maxsize=None)
def l_zero(delta: int) -> Fraction:
    """L(0) for the Kronecker character of delta, as the exact rational 2h/w."""
    group = build_class_group(delta)
    return Fraction(2 * group.h, automorph_count(delta))


@lru_cache(maxsize=None)
def _eisenstein_coeffs(d: int, big_d: int, n_max: int) -> tuple[Fraction, ...]:
    delta = d * big_d
    kd = [kronecker(d, m) for m in range(n_max + 1)]
    kD = [kronecker(big_d, m) for m in range(n_max + 1)]
    coeffs = [Fraction(0)] * (n_max + 1)
    for t in range(1, n_max + 1):
        if kD[t] == 0:
            continue
        for n in range(t, n_max + 1, t):
            coeffs[n] += kd[n // t] * kD[t]
    if d == 1:
        coeffs[0] = l_zero(delta) / 2
    return tuple(coeffs)


def eisenstein_series(d: int, big_d: int, n_max: int) -> QSeries:
    """Weight-one Eisenstein series of the pair (d, D): divisor-sum coefficients
    sum over t | n of (d | n/t)(D | t), with constant term L(0)/2 when d = 1."""
    if d < 1 or big_d >= 0:
        raise ValueError(f"need d > 0 > D, got ({d}, {big_d})")
    if not is_fundamental_discriminant(d) or not is_fundamental(d * big_d):
        raise ValueError(f"({d}, {big_d}) is not a discriminant factorization")
    return QSeries(d * big_d, _eisenstein_coeffs(d, big_d, n_max))


def eisenstein_for_genus(group: ClassGroup, genus_id: int, n_max: int) -> QSeries:
    """(w/h) * sum over characters of chi(g) * E_{d,D}: the mass-formula series."""
    total = qseries(group.delta, [0] * (n_max + 1))
    for chi in build_genus_characters(group):
        term = eisenstein_series(chi.d, chi.D, n_max).scale(chi.value(genus_id))
        total = total + term
    return total.scale(Fraction(group.w, group.h))


def series_csv(series: QSeries) -> str:
    """CSV dump of one series, one row per coefficient."""
    buf = io.StringIO()
    buf.write("n,numerator,denominator\n")
    for n, c in enumerate(series.coeffs):
        buf.write(f"{n},{c.numerator},{c.denominator}\n")
    return buf.getvalue()
