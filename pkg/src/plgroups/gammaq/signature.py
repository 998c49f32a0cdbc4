"""Orbit-class signatures of circularly ordered tuples."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DuplicatePoint, NotInRing, OutOfRange
from ..exact import in_ring, residue
from ..thompson import OrbitClass


def point_class(x, e: int) -> OrbitClass:
    x = Fraction(x)
    if not in_ring(x, e):
        raise NotInRing(f"{x} is not in Z[1/{e}]")
    r = residue(x, e)
    return OrbitClass(r if r else e - 1, e)


def tuple_signature(points, e: int) -> tuple[OrbitClass, ...]:
    """Classes of the points in circular order, rotated to the least sequence."""
    pts = sorted(Fraction(p) for p in points)
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("points must be distinct")
    if any(not 0 <= p < 1 for p in pts):
        raise OutOfRange("points must lie in [0, 1)")
    classes = [point_class(p, e) for p in pts]
    if not classes:
        return ()
    idx = [c.index for c in classes]
    rots = [idx[i:] + idx[:i] for i in range(len(idx))]
    best = min(range(len(rots)), key=lambda i: rots[i])
    return tuple(classes[best:] + classes[:best])
