"""Closed rational intervals with certified ``log`` and ``sqrt`` enclosures.

Endpoints are Fractions. Transcendental enclosures are rounded outward to a
dyadic grid so that denominators stay small while refining.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import isqrt

from .qlinalg import to_rat

__all__ = ["Interval", "DEFAULT_WIDTH", "default_width", "log_interval", "sqrt_interval"]

DEFAULT_WIDTH = Fraction(1, 2 ** 16)


def default_width() -> Fraction:
    """Default enclosure width; ``LIE5_PRECISION`` (a rational string) overrides it."""
    raw = os.environ.get("LIE5_PRECISION")
    if not raw:
        return DEFAULT_WIDTH
    w = Fraction(raw.strip())
    if w <= 0:
        raise ValueError("LIE5_PRECISION must be a positive rational")
    return w


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = to_rat(lo)
        hi = lo if hi is None else to_rat(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        x = to_rat(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def _coerce(self, other) -> "Interval":
        return other if isinstance(other, Interval) else Interval(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._coerce(other)
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.contains_zero():
            raise ZeroDivisionError("interval divisor contains zero")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    def __eq__(self, other):
        return isinstance(other, Interval) and (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"


def _floor_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction((x.numerator << bits) // x.denominator, 1 << bits)


def _ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(-((-x.numerator << bits) // x.denominator), 1 << bits)


def _atanh_enclosure(y: Fraction, eps: Fraction) -> tuple[Fraction, Fraction]:
    """Enclose atanh(y) for |y| <= 1/3 with error below eps."""
    ay = abs(y)
    if ay == 0:
        return Fraction(0), Fraction(0)
    y2 = y * y
    term = y
    total = Fraction(0)
    k = 0
    while True:
        total += term / (2 * k + 1)
        k += 1
        term *= y2
        # remaining terms are bounded by |term| / ((2k+1)(1 - y^2))
        tail = abs(term) / ((2 * k + 1) * (1 - y2))
        if tail < eps:
            break
    if y > 0:
        return total, total + tail
    return total - tail, total


def _log_enclosure(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    if x <= 0:
        raise ValueError("log of a non-positive number")
    eps = Fraction(1, 1 << (bits + 4))
    # x = 2^k * m with 2/3 <= m < 4/3 so that |(m-1)/(m+1)| <= 1/7
    k = x.numerator.bit_length() - x.denominator.bit_length()
    m = x / Fraction(2) ** k
    while m >= Fraction(4, 3):
        m /= 2
        k += 1
    while m < Fraction(2, 3):
        m *= 2
        k -= 1
    lo_m, hi_m = _atanh_enclosure((m - 1) / (m + 1), eps)
    lo_m, hi_m = 2 * lo_m, 2 * hi_m
    if k:
        eps2 = eps / (abs(k) + 1)
        lo2, hi2 = _atanh_enclosure(Fraction(1, 3), eps2)
        lo2, hi2 = 2 * lo2, 2 * hi2
        if k > 0:
            lo_m, hi_m = lo_m + k * lo2, hi_m + k * hi2
        else:
            lo_m, hi_m = lo_m + k * hi2, hi_m + k * lo2
    return _floor_dyadic(lo_m, bits), _ceil_dyadic(hi_m, bits)


def log_interval(iv: Interval, bits: int = 40) -> Interval:
    """Certified enclosure of ``log`` over a positive interval.

    The result is wider than the exact image by at most about ``2^-bits``
    on each side.
    """
    if iv.lo <= 0:
        raise ValueError("log of an interval that is not strictly positive")
    lo, _ = _log_enclosure(iv.lo, bits)
    _, hi = _log_enclosure(iv.hi, bits)
    return Interval(lo, hi)


def _sqrt_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    if x < 0:
        raise ValueError("sqrt of a negative number")
    scale = 1 << (2 * bits)
    n = x.numerator * scale // x.denominator
    r = isqrt(n)
    lo = Fraction(r, 1 << bits)
    hi = lo if lo * lo == x else Fraction(r + 1, 1 << bits)
    return lo, hi


def sqrt_interval(iv: Interval, bits: int = 40) -> Interval:
    if iv.lo < 0:
        raise ValueError("sqrt of an interval with negative part")
    lo, _ = _sqrt_bounds(iv.lo, bits)
    _, hi = _sqrt_bounds(iv.hi, bits)
    return Interval(lo, hi)
