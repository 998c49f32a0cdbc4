"""Exact piecewise-linear homeomorphisms.

Three carriers share one representation, the breakpoint graph
``((x_0, y_0), ..., (x_m, y_m))`` with strictly increasing coordinates:

* :class:`IntervalPL` -- an increasing PL bijection ``[x_0, x_m] -> [y_0, y_m]``;
* :class:`CompactPL` -- the special case ``[0, 1] -> [0, 1]``;
* :class:`PeriodicPL` -- a map of the line commuting with ``t -> t + 1``,
  stored on ``[0, 1]`` (``x_0 = 0``, ``x_m = 1``, ``y_m = y_0 + 1``).

All actions are right actions: ``compose(f, g)`` applies ``f`` first, so
``evaluate(compose(f, g), x) == evaluate(g, evaluate(f, x))``.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, InvalidMap, ParseError, SideUndefined
from .exact import format_rational, parse_rational

Point = tuple[Fraction, Fraction]

LEFT = "left"
RIGHT = "right"


def _merge_collinear(points: Sequence[Point]) -> tuple[Point, ...]:
    out: list[Point] = []
    for p in points:
        if out and p[0] == out[-1][0]:
            if p[1] != out[-1][1]:
                raise InvalidMap(f"two values at x={p[0]}")
            continue
        while len(out) >= 2:
            (x0, y0), (x1, y1) = out[-2], out[-1]
            if (y1 - y0) * (p[0] - x1) == (p[1] - y1) * (x1 - x0):
                out.pop()
            else:
                break
        out.append(p)
    return tuple(out)


def _check_increasing(points: Sequence[Point]) -> None:
    if len(points) < 2:
        raise InvalidMap("need at least two graph points")
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if not (x1 > x0 and y1 > y0):
            raise InvalidMap("breakpoints must be strictly increasing in both coordinates")


def _as_points(points: Iterable) -> list[Point]:
    return [(Fraction(x), Fraction(y)) for x, y in points]


class IntervalPL:
    """Increasing PL bijection between two closed intervals."""

    __slots__ = ("points", "_xs", "_ys", "_hash")
    kind = "interval"

    def __init__(self, points: Iterable):
        pts = _as_points(points)
        _check_increasing(pts)
        self._validate(pts)
        self.points: tuple[Point, ...] = _merge_collinear(pts)
        self._xs = [p[0] for p in self.points]
        self._ys = [p[1] for p in self.points]
        self._hash = None

    def _validate(self, pts: list[Point]) -> None:
        pass

    # -- basic data --------------------------------------------------
    @property
    def xs(self) -> list[Fraction]:
        return self._xs

    @property
    def ys(self) -> list[Fraction]:
        return self._ys

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self._xs[0], self._xs[-1]

    @property
    def image(self) -> tuple[Fraction, Fraction]:
        return self._ys[0], self._ys[-1]

    def breakpoints(self) -> list[Fraction]:
        """Interior points where the two one-sided slopes differ."""
        return self._xs[1:-1]

    def slopes(self) -> list[Fraction]:
        p = self.points
        return [(p[i + 1][1] - p[i][1]) / (p[i + 1][0] - p[i][0]) for i in range(len(p) - 1)]

    def segments(self) -> list[tuple[Point, Point]]:
        return list(zip(self.points, self.points[1:]))

    def __eq__(self, other):
        return type(self) is type(other) and self.points == other.points

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.points))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self.points)
        return f"{type(self).__name__}([{body}])"

    # -- evaluation --------------------------------------------------
    def __call__(self, x) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        xs, ys = self._xs, self._ys
        if x < xs[0] or x > xs[-1]:
            raise DomainError(f"{x} outside [{xs[0]}, {xs[-1]}]")
        i = bisect_right(xs, x) - 1
        if i == len(xs) - 1:
            return ys[-1]
        return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i])

    def evaluate_inverse(self, y) -> Fraction:
        y = Fraction(y)
        xs, ys = self._xs, self._ys
        if y < ys[0] or y > ys[-1]:
            raise DomainError(f"{y} outside image [{ys[0]}, {ys[-1]}]")
        i = bisect_right(ys, y) - 1
        if i == len(ys) - 1:
            return xs[-1]
        return xs[i] + (xs[i + 1] - xs[i]) * (y - ys[i]) / (ys[i + 1] - ys[i])

    def one_sided_slope(self, x, side: str) -> Fraction:
        x = Fraction(x)
        xs, ys = self._xs, self._ys
        if x < xs[0] or x > xs[-1]:
            raise DomainError(f"{x} outside domain")
        if side == LEFT:
            if x == xs[0]:
                raise SideUndefined(f"left slope undefined at {x}")
            i = bisect_left(xs, x) - 1
        elif side == RIGHT:
            if x == xs[-1]:
                raise SideUndefined(f"right slope undefined at {x}")
            i = bisect_right(xs, x) - 1
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])

    # -- algebra -----------------------------------------------------
    def inverse(self):
        return IntervalPL([(y, x) for x, y in self.points])

    def then(self, other: "IntervalPL") -> "IntervalPL":
        """Apply ``self`` then ``other``; the image of self must lie in other's domain."""
        lo, hi = other.domain
        a, b = self.image
        if a < lo or b > hi:
            raise DomainError("image not contained in the domain of the second map")
        cands = set(self._xs)
        for bx in other.xs:
            if a <= bx <= b:
                cands.add(self.evaluate_inverse(bx))
        xs = sorted(cands)
        return IntervalPL([(x, other.evaluate(self.evaluate(x))) for x in xs])

    def restrict(self, a, b) -> "IntervalPL":
        a, b = Fraction(a), Fraction(b)
        lo, hi = self.domain
        if not (lo <= a < b <= hi):
            raise DomainError(f"[{a}, {b}] not inside the domain")
        xs = [a] + [x for x in self._xs if a < x < b] + [b]
        return IntervalPL([(x, self.evaluate(x)) for x in xs])


class CompactPL(IntervalPL):
    """Orientation preserving PL homeomorphism of ``[0, 1]``."""

    __slots__ = ()
    kind = "compact"

    def _validate(self, pts):
        if pts[0] != (0, 0) or pts[-1] != (1, 1):
            raise InvalidMap("compact maps must fix 0 and 1")

    @classmethod
    def identity(cls) -> "CompactPL":
        return cls([(0, 0), (1, 1)])

    def is_identity(self) -> bool:
        return len(self.points) == 2

    def inverse(self) -> "CompactPL":
        return CompactPL([(y, x) for x, y in self.points])

    def then(self, other: "CompactPL") -> "CompactPL":
        cands = set(self._xs)
        cands.update(self.evaluate_inverse(b) for b in other.xs)
        return CompactPL([(x, other.evaluate(self.evaluate(x))) for x in sorted(cands)])


class PeriodicPL:
    """PL homeomorphism of the line commuting with ``t -> t + 1``.

    The graph is stored on ``[0, 1]``; ``0`` is always kept as a sample even
    when it is not a breakpoint.
    """

    __slots__ = ("points", "_xs", "_ys", "_hash")
    kind = "periodic"

    def __init__(self, points: Iterable):
        pts = _as_points(points)
        _check_increasing(pts)
        if pts[0][0] != 0 or pts[-1][0] != 1:
            raise InvalidMap("periodic maps are stored on [0, 1]")
        if pts[-1][1] != pts[0][1] + 1:
            raise InvalidMap("periodic maps need y_m = y_0 + 1")
        self.points: tuple[Point, ...] = _merge_collinear(pts)
        self._xs = [p[0] for p in self.points]
        self._ys = [p[1] for p in self.points]
        self._hash = None

    @classmethod
    def identity(cls) -> "PeriodicPL":
        return cls([(0, 0), (1, 1)])

    @classmethod
    def translation(cls, c) -> "PeriodicPL":
        c = Fraction(c)
        return cls([(0, c), (1, 1 + c)])

    @classmethod
    def from_function(cls, func, candidates: Iterable) -> "PeriodicPL":
        """Sample ``func`` at ``candidates`` (plus 0 and 1) reduced into [0, 1]."""
        cands = {Fraction(0), Fraction(1)}
        for c in candidates:
            c = Fraction(c)
            cands.add(c - math.floor(c))
        return cls([(x, func(x)) for x in sorted(cands)])

    @property
    def xs(self) -> list[Fraction]:
        return self._xs

    @property
    def ys(self) -> list[Fraction]:
        return self._ys

    def is_identity(self) -> bool:
        return self.points == ((0, 0), (1, 1))

    def breakpoints(self) -> list[Fraction]:
        """Breakpoints in ``[0, 1)``; 0 is included only if the slopes differ there."""
        s = self.slopes()
        out = [x for x in self._xs[1:-1]]
        if s[0] != s[-1]:
            out.insert(0, Fraction(0))
        return out

    def slopes(self) -> list[Fraction]:
        p = self.points
        return [(p[i + 1][1] - p[i][1]) / (p[i + 1][0] - p[i][0]) for i in range(len(p) - 1)]

    def segments(self) -> list[tuple[Point, Point]]:
        return list(zip(self.points, self.points[1:]))

    def __eq__(self, other):
        return type(self) is type(other) and self.points == other.points

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("PeriodicPL", self.points))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self.points)
        return f"PeriodicPL([{body}])"

    def __call__(self, x) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        k = math.floor(x)
        t = x - k
        xs, ys = self._xs, self._ys
        i = bisect_right(xs, t) - 1
        return ys[i] + (ys[i + 1] - ys[i]) * (t - xs[i]) / (xs[i + 1] - xs[i]) + k

    def evaluate_inverse(self, y) -> Fraction:
        y = Fraction(y)
        xs, ys = self._xs, self._ys
        k = math.floor(y - ys[0])
        t = y - k
        i = bisect_right(ys, t) - 1
        return xs[i] + (xs[i + 1] - xs[i]) * (t - ys[i]) / (ys[i + 1] - ys[i]) + k

    def one_sided_slope(self, x, side: str) -> Fraction:
        x = Fraction(x)
        t = x - math.floor(x)
        xs, ys = self._xs, self._ys
        if side == LEFT:
            if t == 0:
                t = Fraction(1)
            i = bisect_left(xs, t) - 1
        elif side == RIGHT:
            i = bisect_right(xs, t) - 1
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])

    def inverse(self) -> "PeriodicPL":
        return PeriodicPL.from_function(self.evaluate_inverse, self._ys)

    def then(self, other: "PeriodicPL") -> "PeriodicPL":
        lo = self._ys[0]
        cands = list(self._xs)
        for b in other.xs:
            # translates of b inside [lo, lo + 1]
            k0 = math.ceil(lo - b)
            for k in (k0, k0 + 1):
                if lo <= b + k <= lo + 1:
                    cands.append(self.evaluate_inverse(b + k))
        return PeriodicPL.from_function(lambda x: other.evaluate(self.evaluate(x)), cands)

    def power(self, k: int) -> "PeriodicPL":
        return power(self, k)


AnyPL = IntervalPL | PeriodicPL


# ----------------------------------------------------------------------
# module-level operations


def evaluate(f, x) -> Fraction:
    return f.evaluate(x)


def compose(f, g):
    """The map ``x -> (x.f).g``."""
    if type(f) is not type(g):
        raise TypeError(f"cannot compose {type(f).__name__} with {type(g).__name__}")
    return f.then(g)


def invert(f):
    return f.inverse()


def power(f, k: int):
    if k < 0:
        return power(f.inverse(), -k)
    result = type(f).identity()
    base = f
    while k:
        if k & 1:
            result = result.then(base)
        k >>= 1
        if k:
            base = base.then(base)
    return result


def one_sided_slope(f, x, side: str) -> Fraction:
    return f.one_sided_slope(x, side)


def equals(f, g) -> bool:
    return f == g


def commutator(a, b):
    """``[a, b] = a^-1 b^-1 a b``."""
    return a.inverse().then(b.inverse()).then(a).then(b)


def conjugate(a, b):
    """``a^b = b^-1 a b``."""
    return b.inverse().then(a).then(b)


# ----------------------------------------------------------------------
# supports


@dataclass(frozen=True)
class SupportSet:
    """Open set where a map moves points.

    For periodic maps the intervals describe one period and the set is
    ``union(intervals) + Z``; an interval containing an integer is listed with
    a negative left end.  ``whole`` marks a periodic map with no fixed point.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]
    periodic: bool
    whole: bool = False

    def is_empty(self) -> bool:
        return not self.intervals and not self.whole

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        if self.whole:
            return True
        for a, b in self.intervals:
            if self.periodic:
                t = a + ((x - a) - math.floor(x - a))
                if a < t < b:
                    return True
            elif a < x < b:
                return True
        return False

    def total_length(self) -> Fraction:
        if self.whole:
            return Fraction(1)
        return sum((b - a for a, b in self.intervals), Fraction(0))

    def hull(self) -> tuple[Fraction, Fraction] | None:
        """Smallest closed interval containing one period's worth of support.

        For periodic maps this is the complement of the largest fixed gap, so
        the result may have length up to (but excluding) 1 only when the map
        is stably supported.
        """
        if self.is_empty():
            return None
        if self.whole:
            return None
        if not self.periodic:
            return self.intervals[0][0], self.intervals[-1][1]
        ivs = sorted(self.intervals)
        best_gap, best_k = None, 0
        for k in range(len(ivs)):
            if k + 1 < len(ivs):
                gap = ivs[k + 1][0] - ivs[k][1]
            else:
                gap = ivs[0][0] + 1 - ivs[k][1]
            if best_gap is None or gap > best_gap:
                best_gap, best_k = gap, k
        if best_k + 1 == len(ivs):
            return ivs[0][0], ivs[-1][1]
        return ivs[best_k + 1][0], ivs[best_k][1] + 1


def _fixed_components(points: Sequence[Point]) -> list[tuple[Fraction, Fraction]]:
    """Closed components of ``{x : f(x) = x}`` on the stored graph."""
    comps: list[tuple[Fraction, Fraction]] = []

    def add(a, b):
        if comps and a <= comps[-1][1]:
            comps[-1] = (comps[-1][0], max(b, comps[-1][1]))
        else:
            comps.append((a, b))

    for (xa, ya), (xb, yb) in zip(points, points[1:]):
        da, db = ya - xa, yb - xb
        if da == 0 and db == 0:
            add(xa, xb)
        elif da == 0:
            add(xa, xa)
        elif db == 0:
            add(xb, xb)
        elif (da < 0) != (db < 0):
            z = xa - da * (xb - xa) / (db - da)
            add(z, z)
    return comps


def support(f) -> SupportSet:
    """Exact maximal open set where ``f`` moves points."""
    comps = _fixed_components(f.points)
    if isinstance(f, PeriodicPL):
        if not comps:
            return SupportSet((), True, whole=True)
        gaps = []
        for (a0, b0), (a1, b1) in zip(comps, comps[1:]):
            if a1 > b0:
                gaps.append((b0, a1))
        first, last = comps[0][0], comps[-1][1]
        if last == 1 and first == 0:
            pass
        else:
            # wrap-around gap through the integer point
            lo = last - 1
            gaps.insert(0, (lo, first))
        gaps = [g for g in gaps if g[1] > g[0]]
        return SupportSet(tuple(gaps), True)
    lo, hi = f.domain
    gaps = []
    prev = lo
    for a, b in comps:
        if a > prev:
            gaps.append((prev, a))
        prev = max(prev, b)
    if prev < hi:
        gaps.append((prev, hi))
    return SupportSet(tuple(gaps), False)


def _points_in(f, a: Fraction, b: Fraction) -> list[Fraction]:
    """Breakpoints of f (and their integer translates for periodic f) inside (a, b)."""
    out = []
    if isinstance(f, PeriodicPL):
        for x in f.xs[:-1]:
            for k in range(math.floor(a - x), math.ceil(b - x) + 1):
                if a < x + k < b:
                    out.append(x + k)
    else:
        out = [x for x in f.xs if a < x < b]
    return out


def agree_on(f, g, interval) -> bool:
    """True iff ``f`` and ``g`` coincide on the closed interval (on ``I + Z`` when periodic)."""
    a, b = (Fraction(v) for v in interval)
    if a > b:
        raise DomainError("empty interval")
    pts = {a, b, *_points_in(f, a, b), *_points_in(g, a, b)}
    return all(f.evaluate(x) == g.evaluate(x) for x in pts)


# ----------------------------------------------------------------------
# text serialization


def dumps(f, n: int) -> str:
    """Block format: ``plmap kind=<kind> n=<n>`` then ``<x> <y>`` lines."""
    lines = [f"plmap kind={f.kind} n={n}"]
    lines += [f"{format_rational(x)} {format_rational(y)}" for x, y in f.points]
    return "\n".join(lines) + "\n"


_KINDS = {"compact": CompactPL, "periodic": PeriodicPL, "interval": IntervalPL}


def _parse_header(line: str) -> tuple[str, int]:
    parts = line.split()
    if not parts or parts[0] != "plmap":
        raise ParseError(f"expected plmap header, got {line!r}")
    opts = dict(p.split("=", 1) for p in parts[1:] if "=" in p)
    kind = opts.get("kind")
    if kind not in _KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    try:
        n = int(opts.get("n", "0"))
    except ValueError as exc:
        raise ParseError(f"bad n in {line!r}") from exc
    return kind, n


def loads_all(text: str) -> list[tuple[AnyPL, int]]:
    """Parse every plmap block in ``text``."""
    blocks: list[tuple[str, int, list[Point]]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("plmap"):
            kind, n = _parse_header(line)
            blocks.append((kind, n, []))
            continue
        if not blocks:
            raise ParseError("data before plmap header")
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected '<x> <y>', got {line!r}")
        blocks[-1][2].append((parse_rational(fields[0]), parse_rational(fields[1])))
    return [(_KINDS[kind](pts), n) for kind, n, pts in blocks]


def loads(text: str) -> tuple[AnyPL, int]:
    blocks = loads_all(text)
    if len(blocks) != 1:
        raise ParseError(f"expected one plmap block, found {len(blocks)}")
    return blocks[0]
