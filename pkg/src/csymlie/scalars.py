"""Exact scalars: rationals and Gaussian rationals.

Plain rationals are ``fractions.Fraction``.  Complexified computations use
:class:`GaussianRational`, a pair of Fractions (real and imaginary part).
Every operation is exact; nothing in this package ever rounds.

Serialization format: a rational renders as ``"p/q"`` (``"p"`` when q == 1),
a Gaussian rational with nonzero imaginary part as ``"p/q+r/s i"`` (the sign
of the imaginary part replaces the ``+``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction


class GaussianRational:
    """Element of Q(i) with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re + Fraction(im) * 0, re.im
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


I = GaussianRational(0, 1)

Scalar = Union[Fraction, int, GaussianRational]


def is_zero(x: Scalar) -> bool:
    return not x


def to_gaussian(x: Scalar) -> GaussianRational:
    """Lift a scalar into Q(i)."""
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def real_part(x: Scalar) -> Fraction:
    if isinstance(x, GaussianRational):
        return x.re
    return Fraction(x)


def imag_part(x: Scalar) -> Fraction:
    if isinstance(x, GaussianRational):
        return x.im
    return Fraction(0)


def format_scalar(x: Scalar) -> str:
    """Render a scalar in the textual wire format."""
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return _format_fraction(x.re)
        sign = "+" if x.im >= 0 else "-"
        return f"{_format_fraction(x.re)}{sign}{_format_fraction(abs(x.im))} i"
    return _format_fraction(Fraction(x))


def _format_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


_GAUSSIAN_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)\s*i\s*$"
)
_PURE_IM_RE = re.compile(r"^\s*(?P<im>[+-]?\d+(?:/\d+)?)\s*i\s*$")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"`` or ``"p/q+r/s i"`` back into an exact scalar."""
    m = _GAUSSIAN_RE.match(text)
    if m:
        im = Fraction(m.group("im"))
        if m.group("sign") == "-":
            im = -im
        return GaussianRational(Fraction(m.group("re")), im)
    m = _PURE_IM_RE.match(text)
    if m:
        return GaussianRational(0, Fraction(m.group("im")))
    try:
        return Fraction(text.strip())
    except ValueError:
        raise ValueError(f"not a scalar: {text!r}") from None
