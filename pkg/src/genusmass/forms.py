"""Positive-definite integral binary quadratic forms: reduction, enumeration, counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import is_fundamental

__all__ = [
    "QuadForm",
    "reduce_form",
    "reduce_with_matrix",
    "reduced_forms",
    "representation_count",
    "representation_counts",
    "automorph_count",
]


@dataclass(frozen=True, order=True)
class QuadForm:
    """An integral form a*x^2 + b*x*y + c*y^2, positive definite and primitive."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0:
            raise ValueError(f"leading coefficient must be positive: ({self.a},{self.b},{self.c})")
        if self.discriminant() >= 0:
            raise ValueError(f"form is not positive definite: ({self.a},{self.b},{self.c})")
        if math.gcd(self.a, math.gcd(self.b, self.c)) != 1:
            raise ValueError(f"form is not primitive: ({self.a},{self.b},{self.c})")

    def __repr__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"

    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __call__(self, x: int, y: int) -> int:
        return self.evaluate(x, y)

    def opposite(self) -> "QuadForm":
        """[a,-b,c]; its class is the group inverse of the class of self."""
        return QuadForm(self.a, -self.b, self.c)

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return -a < b <= a <= c and (b >= 0 or a < c)


def reduce_with_matrix(q: QuadForm) -> tuple[QuadForm, tuple[int, int, int, int]]:
    """Gauss reduction; returns (reduced form, M) with M = (m11, m12, m21, m22).

    M is in SL2(Z) and q(m11*x + m12*y, m21*x + m22*y) equals the reduced form.
    """
    a, b, c = q.a, q.b, q.c
    m11, m12, m21, m22 = 1, 0, 0, 1
    while True:
        # shift x -> x + r*y to bring b into (-a, a]
        r = (a - b) // (2 * a)
        if r:
            b, c = b + 2 * r * a, a * r * r + b * r + c
            m12, m22 = m12 + r * m11, m22 + r * m21
        if a > c or (a == c and b < 0):
            # (x, y) -> (-y, x)
            a, b, c = c, -b, a
            m11, m12 = m12, -m11
            m21, m22 = m22, -m21
        else:
            return QuadForm(a, b, c), (m11, m12, m21, m22)


def reduce_form(q: QuadForm) -> QuadForm:
    """The unique reduced form SL2(Z)-equivalent to q."""
    return reduce_with_matrix(q)[0]


@lru_cache(maxsize=None)
def reduced_forms(delta: int) -> tuple[QuadForm, ...]:
    """One reduced representative per form class of fundamental discriminant delta.

    Enumerates 0 < a <= sqrt(|delta|/3), -a < b <= a with b = delta (mod 2)
    and integral c = (b^2 - delta)/(4a) >= a, dropping b < 0 on the a = c
    boundary.  Lexicographically sorted.
    """
    if not is_fundamental(delta):
        raise ValueError(f"{delta} is not a negative fundamental discriminant")
    out = []
    for a in range(1, math.isqrt(-delta // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - delta) % 2:
                continue
            num = b * b - delta
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            out.append(QuadForm(a, b, c))
    return tuple(sorted(out))


def representation_count(q: QuadForm, n: int) -> int:
    """#{(x, y) in Z^2 : q(x, y) = n}.

    Scans the x-range |x| <= sqrt(4cn/|disc|) forced by positive definiteness
    and solves the residual quadratic in y exactly.
    """
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    if n == 0:
        return 1
    a, b, c = q.a, q.b, q.c
    abs_disc = 4 * a * c - b * b
    count = 0
    two_c = 2 * c
    for x in range(-math.isqrt(4 * c * n // abs_disc), math.isqrt(4 * c * n // abs_disc) + 1):
        s2 = 4 * c * n - abs_disc * x * x
        if s2 < 0:
            continue
        s = math.isqrt(s2)
        if s * s != s2:
            continue
        if (-b * x + s) % two_c == 0:
            count += 1
        if s and (-b * x - s) % two_c == 0:
            count += 1
    return count


def representation_counts(q: QuadForm, n_max: int) -> list[int]:
    """Vector [r(q, 0), ..., r(q, n_max)] by one sweep over the ellipse q <= n_max."""
    if n_max < 0:
        raise ValueError(f"expected n_max >= 0, got {n_max}")
    a, b, c = q.a, q.b, q.c
    abs_disc = 4 * a * c - b * b
    counts = [0] * (n_max + 1)
    two_c = 2 * c
    xmax = math.isqrt(4 * c * n_max // abs_disc)
    for x in range(-xmax, xmax + 1):
        s2 = 4 * c * n_max - abs_disc * x * x
        if s2 < 0:
            continue
        s = math.isqrt(s2)
        ylo = -((b * x + s) // two_c)
        yhi = (-b * x + s) // two_c
        for y in range(ylo, yhi + 1):
            counts[a * x * x + b * x * y + c * y * y] += 1
    return counts


def automorph_count(delta: int) -> int:
    """Unit count w of the order of discriminant delta: 6, 4, or 2."""
    if not is_fundamental(delta):
        raise ValueError(f"{delta} is not a negative fundamental discriminant")
    if delta == -3:
        return 6
    if delta == -4:
        return 4
    return 2
