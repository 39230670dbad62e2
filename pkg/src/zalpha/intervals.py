"""Exact interval arithmetic over rationals.

Real quantities are carried as closed intervals [lo, hi] with Fraction
endpoints; complex quantities as axis-aligned rectangles.  All operations
are outward-correct by construction (no rounding happens unless `round`
is called explicitly), so an interval produced here is a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import dyadic_ceil, dyadic_floor, sqrt_lower, sqrt_upper

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Iv:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> Iv:
        f = Fraction(x)
        return Iv(f, f)

    @staticmethod
    def ball(center, radius) -> Iv:
        c, r = Fraction(center), Fraction(radius)
        return Iv(c - r, c + r)

    def __add__(self, other: Iv) -> Iv:
        return Iv(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: Iv) -> Iv:
        return Iv(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> Iv:
        return Iv(-self.hi, -self.lo)

    def __mul__(self, other: Iv) -> Iv:
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Iv(min(cands), max(cands))

    def scale(self, k: Fraction) -> Iv:
        if k >= 0:
            return Iv(self.lo * k, self.hi * k)
        return Iv(self.hi * k, self.lo * k)

    def shift(self, k: Fraction) -> Iv:
        return Iv(self.lo + k, self.hi + k)

    def square(self) -> Iv:
        if self.lo >= 0:
            return Iv(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Iv(self.hi * self.hi, self.lo * self.lo)
        m = max(-self.lo, self.hi)
        return Iv(_ZERO, m * m)

    def abs(self) -> Iv:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return Iv(-self.hi, -self.lo)
        return Iv(_ZERO, max(-self.lo, self.hi))

    def sqrt(self) -> Iv:
        """Enclosure of sqrt over a nonnegative interval."""
        return Iv(sqrt_lower(max(self.lo, _ZERO)), sqrt_upper(self.hi))

    def sign(self) -> int:
        """+1 / -1 when certified, 0 when the interval touches zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def contains(self, x) -> bool:
        f = Fraction(x)
        return self.lo <= f <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def rad(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def round(self, prec: int) -> Iv:
        """Outward rounding onto the 2^-prec dyadic grid (caps bit growth)."""
        return Iv(dyadic_floor(self.lo, prec), dyadic_ceil(self.hi, prec))


@dataclass(frozen=True)
class Cx:
    re: Iv
    im: Iv

    @staticmethod
    def point(re, im=0) -> Cx:
        return Cx(Iv.point(re), Iv.point(im))

    @staticmethod
    def from_disc(re_center, im_center, radius) -> Cx:
        return Cx(Iv.ball(re_center, radius), Iv.ball(im_center, radius))

    def __add__(self, other: Cx) -> Cx:
        return Cx(self.re + other.re, self.im + other.im)

    def __sub__(self, other: Cx) -> Cx:
        return Cx(self.re - other.re, self.im - other.im)

    def __neg__(self) -> Cx:
        return Cx(-self.re, -self.im)

    def __mul__(self, other: Cx) -> Cx:
        return Cx(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> Cx:
        return Cx(self.re, -self.im)

    def shift(self, k: Fraction) -> Cx:
        return Cx(self.re.shift(k), self.im)

    def abs2(self) -> Iv:
        """Enclosure of |z|^2."""
        return self.re.square() + self.im.square()

    def abs_upper(self) -> Fraction:
        return sqrt_upper(self.abs2().hi)

    def abs_lower(self) -> Fraction:
        return sqrt_lower(self.abs2().lo)

    def round(self, prec: int) -> Cx:
        return Cx(self.re.round(prec), self.im.round(prec))

    @property
    def max_width(self) -> Fraction:
        return max(self.re.width, self.im.width)
