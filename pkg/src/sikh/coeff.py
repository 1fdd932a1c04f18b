"""Exact coefficient rings: the integers, the rationals and the field with two elements.

Scalars are plain Python values (``int`` for ZZ and F2, ``Fraction`` for QQ), so
they are immutable and can be passed freely between processes.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]

_INT_RE = re.compile(r"[+-]?\d+")
_RAT_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


class NotAUnitError(ArithmeticError):
    """Raised when inverting a ring element that has no inverse."""


class Ring:
    """Base class for the three supported coefficient rings."""

    name = ""
    is_field = False

    def __repr__(self):
        return f"<Ring {self.name}>"

    def __reduce__(self):
        return (get_ring, (self.name,))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x) -> Scalar:
        raise NotImplementedError

    def add(self, a, b):
        return self(a + b)

    def sub(self, a, b):
        return self(a - b)

    def neg(self, a):
        return self(-a)

    def mul(self, a, b):
        return self(a * b)

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, a) -> str:
        return str(self(a))


class _F2(Ring):
    name = "f2"
    is_field = True

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator % 2 == 0:
                raise ValueError(f"{x} has no image in F2")
            x = x.numerator
        return int(x) & 1

    def is_unit(self, a):
        return self(a) == 1

    def inv(self, a):
        if self(a) != 1:
            raise NotAUnitError("0 is not invertible in F2")
        return 1

    def parse(self, text):
        text = text.strip()
        if text not in ("0", "1"):
            raise ValueError(f"not an F2 scalar: {text!r} (expected '0' or '1')")
        return int(text)


class _ZZ(Ring):
    name = "z"

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise NotAUnitError(f"{a} is not a unit in Z")
        return a

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.fullmatch(text):
            raise ValueError(f"not an integer: {text!r}")
        return int(text)


class _QQ(Ring):
    name = "q"
    is_field = True

    def __call__(self, x):
        return Fraction(x)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnitError("0 is not invertible in Q")
        return 1 / Fraction(a)

    def parse(self, text):
        text = text.strip()
        m = _RAT_RE.fullmatch(text)
        if not m:
            raise ValueError(f"not a rational: {text!r} (expected 'p' or 'p/q')")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)

    def format(self, a):
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


F2 = _F2()
ZZ = _ZZ()
QQ = _QQ()

_RINGS = {
    "f2": F2, "gf2": F2, "z2": F2,
    "z": ZZ, "zz": ZZ, "int": ZZ, "integers": ZZ,
    "q": QQ, "qq": QQ, "rationals": QQ,
}


def get_ring(name) -> Ring:
    """Look up a ring by name (``f2``, ``z`` or ``q``); ring objects pass through."""
    if isinstance(name, Ring):
        return name
    try:
        return _RINGS[str(name).lower()]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; choose one of f2, z, q") from None


def parse_lambda(text: str, ring: Ring) -> Scalar:
    """Parse the deformation parameter as an element of ``ring``."""
    return ring.parse(text)
