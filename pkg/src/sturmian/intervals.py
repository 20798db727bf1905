"""Interval geometry on the circle: cylinders, gaps, and endpoint formulas.

All endpoints live in an exact quadratic field.  Cylinders are computed
by intersecting the per-position preimage arcs; the running intersection
may legitimately wrap around 0 ~ 1 while being built, but a delivered
interval never wraps (an error is raised if that expectation fails).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arithmetic import GOLDEN_ALPHA, TAU, AlphaSpec, Exact, QuadNumber
from .errors import NotAdmissible, WrapsCircle
from .words import Window, Word

_ZERO = QuadNumber(0)
_ONE = QuadNumber(1)


def _as_quad(x: Exact) -> QuadNumber:
    return x if isinstance(x, QuadNumber) else QuadNumber.from_fraction(x)


@dataclass(frozen=True)
class ExactInterval:
    """A half-open interval [lo, hi) inside [0, 1]."""

    lo: QuadNumber
    hi: QuadNumber

    def __post_init__(self) -> None:
        if not (_ZERO <= self.lo < self.hi <= _ONE):
            raise ValueError(f"not a subinterval of the circle: {self!r}")

    @property
    def width(self) -> QuadNumber:
        return self.hi - self.lo

    def contains(self, x: Exact) -> bool:
        x = _as_quad(x)
        return self.lo <= x and x < self.hi

    def midpoint(self) -> QuadNumber:
        return (self.lo + self.hi) / 2

    def to_dict(self, places: int = 12) -> dict:
        return {
            "lo": {"expr": self.lo.expr(), "decimal": self.lo.decimal(places)},
            "hi": {"expr": self.hi.expr(), "decimal": self.hi.decimal(places)},
            "width": {"expr": self.width.expr(), "decimal": self.width.decimal(places)},
        }

    def __repr__(self) -> str:
        return f"[{self.lo.decimal(6)}, {self.hi.decimal(6)})"


class _Arc:
    """A nonempty circular arc [start, start + width) mod 1, width in (0, 1]."""

    __slots__ = ("start", "width")

    def __init__(self, start: QuadNumber, width: QuadNumber) -> None:
        self.start = start.frac()
        self.width = width

    def pieces(self) -> list[tuple[QuadNumber, QuadNumber]]:
        """The arc as one or two non-wrapping [lo, hi) pieces."""
        end = self.start + self.width
        if end <= _ONE:
            return [(self.start, end)]
        return [(self.start, _ONE), (_ZERO, end - 1)]

    def intersect(self, other: "_Arc") -> "_Arc":
        """Intersection, which must again be a single (possibly wrapping) arc."""
        hits: list[tuple[QuadNumber, QuadNumber]] = []
        for lo1, hi1 in self.pieces():
            for lo2, hi2 in other.pieces():
                lo = lo1 if lo1 >= lo2 else lo2
                hi = hi1 if hi1 <= hi2 else hi2
                if lo < hi:
                    hits.append((lo, hi))
        if not hits:
            raise NotAdmissible("empty cylinder")
        hits.sort(key=lambda t: t[0].approx_fraction(40))
        if len(hits) == 1:
            lo, hi = hits[0]
            return _Arc(lo, hi - lo)
        if len(hits) == 2 and hits[1][1] == _ONE and hits[0][0] == _ZERO:
            # wrapped arc: [hits[1][0], 1) followed by [0, hits[0][1])
            lo, hi = hits[1][0], hits[0][1]
            return _Arc(lo, (_ONE - lo) + hi)
        raise WrapsCircle(f"intersection is not a single arc: {hits}")

    def to_interval(self) -> ExactInterval:
        end = self.start + self.width
        if end > _ONE:
            raise WrapsCircle("cylinder wraps around 0")
        return ExactInterval(self.start, end)


def _constraint_arc(alpha_value: QuadNumber, i: int, letter: int) -> _Arc:
    """The set of theta with the given letter at position i."""
    if letter == 1:
        # theta in [1 - (i+1)*alpha, 1 - i*alpha) mod 1
        return _Arc(_ONE - alpha_value * (i + 1), alpha_value)
    return _Arc(-(alpha_value * i), _ONE - alpha_value)


def _require_quadratic(alpha: AlphaSpec) -> QuadNumber:
    q = alpha.to_quadratic()
    if q is None:
        raise ValueError("interval geometry needs an exact (quadratic) rotation number")
    return q


def cylinder_of_window(w: Window, alpha: AlphaSpec) -> _Arc:
    """The arc of theta whose orbit letters match the window."""
    a = _require_quadratic(alpha)
    arc: _Arc | None = None
    for i in range(w.start, w.stop + 1):
        c = _constraint_arc(a, i, w.letter_at(i))
        arc = c if arc is None else arc.intersect(c)
    assert arc is not None
    return arc


def cylinder_of_word(w: Word, alpha: AlphaSpec) -> ExactInterval:
    """The theta-interval of {v : v(0..|w|-1) = w}; raises NotAdmissible if empty."""
    if len(w) == 0:
        raise ValueError("cylinder of the empty word is the whole circle")
    return cylinder_of_window(Window(0, w), alpha).to_interval()


# ---------------------------------------------------------------------------
# three-distance statistics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GapStatistics:
    """Sorted gaps cut by the points -j*alpha mod 1, j = 0..n."""

    n: int
    gaps: tuple[ExactInterval, ...]  # in circle order
    distinct: tuple[tuple[QuadNumber, int], ...]  # (width, multiplicity), widest first
    lo_keys: tuple[Fraction, ...] = ()  # rational keys of gap left endpoints, for bisection

    @property
    def widths(self) -> tuple[QuadNumber, ...]:
        return tuple(g.width for g in self.gaps)

    def to_dict(self, places: int = 12) -> dict:
        return {
            "n": self.n,
            "gap_count": len(self.gaps),
            "distinct": [
                {"width": {"expr": w.expr(), "decimal": w.decimal(places)}, "multiplicity": m}
                for w, m in self.distinct
            ],
            "gaps": [g.to_dict(places) for g in self.gaps],
        }


def three_distance(alpha: AlphaSpec, n: int) -> GapStatistics:
    """Gap statistics of {-j*alpha mod 1 : j = 0..n}; at most three widths occur."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = _require_quadratic(alpha)
    pts = [(-(a * j)).frac() for j in range(n + 1)]
    pts.sort(key=lambda x: x.approx_fraction(40))
    for u, v in zip(pts, pts[1:]):
        if not u < v:
            raise ArithmeticError("orbit points collide; rotation number is rational?")
    gaps = [ExactInterval(u, v) for u, v in zip(pts, pts[1:])]
    gaps.append(ExactInterval(pts[-1], _ONE))
    counts: dict[QuadNumber, int] = {}
    for g in gaps:
        counts[g.width] = counts.get(g.width, 0) + 1
    distinct = tuple(
        sorted(counts.items(), key=lambda kv: kv[0].approx_fraction(40), reverse=True)
    )
    lo_keys = tuple(g.lo.approx_fraction(40) for g in gaps)
    return GapStatistics(n, tuple(gaps), distinct, lo_keys)


def gap_containing(stats: GapStatistics, x: Exact) -> ExactInterval:
    """The unique gap containing x (bisection, verified exactly)."""
    import bisect

    xq = _as_quad(x).frac()
    i = bisect.bisect_right(stats.lo_keys, xq.approx_fraction(40)) - 1
    for cand in (i, i - 1, i + 1):
        if 0 <= cand < len(stats.gaps) and stats.gaps[cand].contains(xq):
            return stats.gaps[cand]
    for g in stats.gaps:  # exact fallback; reached only if keys were too coarse
        if g.contains(xq):
            return g
    raise ArithmeticError(f"{xq!r} not located in any gap")


# ---------------------------------------------------------------------------
# exhausting-word intervals (golden rotation)
# ---------------------------------------------------------------------------


def exhausting_word_interval(n: int) -> ExactInterval:
    """For the golden rotation: the cylinder of the word whose last letter
    sits at the exhaustion index; it hugs one endpoint of the circle."""
    if n < 2:
        raise ValueError("n must be >= 2")
    alpha = AlphaSpec.golden()
    k, _ = alpha.level_for(n)
    width = (TAU ** (k + 1)).inverse()
    if k % 2 == 0:
        return ExactInterval(_ONE - width, _ONE)
    return ExactInterval(_ZERO, width)
