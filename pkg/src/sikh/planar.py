"""Circles on a disk with ``n`` punctures.

An embedded circle is determined up to isotopy by the set of punctures it
encloses, and an orientation of it by its winding sense.  Labels of
non-contractible circles are encoded as ``+1`` (counter-clockwise) and ``-1``
(clockwise) throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence, Tuple

WindingVector = Tuple[int, ...]


class Orientation(IntEnum):
    CCW = 1
    CW = -1

    def reversed(self) -> "Orientation":
        return Orientation(-self.value)


@dataclass(frozen=True)
class Surface:
    punctures: int = 0

    def __post_init__(self):
        if self.punctures < 0:
            raise ValueError("puncture count must be non-negative")

    def zero(self) -> WindingVector:
        return (0,) * self.punctures


@dataclass(frozen=True, order=True)
class CircleClass:
    """Isotopy class of an embedded circle: the punctures it encloses (0-based)."""

    support: frozenset = frozenset()

    @property
    def contractible(self) -> bool:
        return not self.support

    def indicator(self, n: int) -> WindingVector:
        return tuple(1 if i in self.support else 0 for i in range(n))


class NotIsotopicError(ValueError):
    pass


class WindingError(ValueError):
    pass


def oriented_class(c: CircleClass, o: Orientation, n: int) -> WindingVector:
    """Homology class of ``c`` traversed in sense ``o``, as a vector in Z^n."""
    s = int(o)
    return tuple(s if i in c.support else 0 for i in range(n))


def canonical_identify(c1: CircleClass, c2: CircleClass) -> dict:
    """Correspondence of orientations induced by an isotopy from ``c1`` to ``c2``.

    Planar isotopies keep the rotation sense, so the map is the identity on
    labels; it only exists when the two circles are isotopic and essential.
    """
    if c1.support != c2.support:
        raise NotIsotopicError(
            f"circles enclosing {sorted(c1.support)} and {sorted(c2.support)} are not isotopic")
    if not c1.support:
        raise NotIsotopicError("contractible circles carry no orientation labels")
    return {Orientation.CCW: Orientation.CCW, Orientation.CW: Orientation.CW}


def classify_winding(winding: Sequence[int]) -> Tuple[CircleClass, int]:
    """Split the winding vector of an oriented embedded circle into class and sense.

    Returns ``(circle_class, sense)`` with sense ``+1`` for counter-clockwise,
    ``-1`` for clockwise and ``0`` for contractible circles.  Raises
    ``WindingError`` when the vector cannot belong to an embedded circle.
    """
    nonzero = {x for x in winding if x != 0}
    if not nonzero:
        return CircleClass(), 0
    if nonzero == {1}:
        sense = 1
    elif nonzero == {-1}:
        sense = -1
    else:
        raise WindingError(f"winding vector {tuple(winding)} is not that of an embedded circle")
    return CircleClass(frozenset(i for i, x in enumerate(winding) if x)), sense


def is_embedded_winding(winding: Sequence[int]) -> bool:
    try:
        classify_winding(winding)
    except WindingError:
        return False
    return True


def outer_of_three(a: CircleClass, b: CircleClass, c: CircleClass):
    """Index (0, 1, 2) of the circle whose support is the disjoint union of the other two.

    For three disjoint essential circles bounding a pair of pants in the plane,
    this is the boundary component with the pants on its inside.  Returns None
    if no such circle exists.
    """
    circles = (a.support, b.support, c.support)
    for i in range(3):
        x, y = (circles[j] for j in range(3) if j != i)
        if not (x & y) and circles[i] == x | y:
            return i
    return None
