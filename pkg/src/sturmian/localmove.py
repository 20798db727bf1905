"""Adjacent-letter exchanges and hull-membership witnesses.

Exchanging two unequal adjacent letters of a hull element leaves the
hull except at the special orbit boundary; leaving the hull is certified
by exhibiting a factor through the exchange site that is not admissible.
The search is a semi-decision bounded by a cap: witness lengths form an
upward-closed set, so the shortest witness is found by doubling plus
bisection on the length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arithmetic import AlphaSpec
from .errors import EqualLetters, OutOfRange, RadiusTooSmall
from .factors import exhausting_point
from .partition import Block, PartitionView, partition_window
from .words import HullPoint, Window, Word, v0_prefix, window


def exchange(w: Window, i: int) -> Window:
    """Swap the letters at sites i and i+1 (they must differ)."""
    if i < w.start or i + 1 > w.stop:
        raise OutOfRange(f"sites {i}, {i + 1} not inside [{w.start}, {w.stop}]")
    a, b = w.letter_at(i), w.letter_at(i + 1)
    if a == b:
        raise EqualLetters(f"letters at {i} and {i + 1} are both {a}")
    pos = i - w.start
    letters = w.word.letters
    swapped = letters[:pos] + letters[pos + 1] + letters[pos] + letters[pos + 2 :]
    return Window(w.start, Word(swapped))


def is_admissible(alpha: AlphaSpec, w: Word) -> bool:
    """Whether w occurs in the base sequence; decided by scanning the
    prefix up to the exhaustion index for |w|."""
    if len(w) < 1:
        raise ValueError("word must be nonempty")
    horizon = exhausting_point(alpha, max(len(w), 2))
    return w.letters in v0_prefix(alpha, horizon).letters


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of the inadmissible-factor search after an exchange."""

    found: bool
    site: int
    cap: int
    factor: Optional[Word] = None
    start: Optional[int] = None  # absolute index of the witness factor

    @property
    def length(self) -> Optional[int]:
        return None if self.factor is None else len(self.factor)

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "site": self.site,
            "cap": self.cap,
            "factor": self.factor.letters if self.factor else None,
            "start": self.start,
            "length": self.length,
        }


def witness_in_window(
    w: Window, alpha: AlphaSpec, site: int, cap: int
) -> WitnessReport:
    """Shortest inadmissible factor of length <= cap containing `site`.

    Existence of a witness is monotone in the length (any extension of an
    inadmissible factor is inadmissible), so the minimal length is located
    by doubling followed by bisection.
    """
    if cap < 2:
        raise ValueError("cap must be >= 2")
    text = w.word.letters
    base = v0_prefix(alpha, exhausting_point(alpha, max(cap, 2))).letters
    horizons = {}

    def admissible(fac: str) -> bool:
        n = len(fac)
        if n not in horizons:
            horizons[n] = exhausting_point(alpha, max(n, 2))
        return fac in base[: horizons[n]]

    def witness_at(length: int) -> Optional[int]:
        """Absolute start of some inadmissible factor of this exact length."""
        for s in range(site - length + 1, site + 1):
            if s < w.start or s + length - 1 > w.stop:
                continue
            if not admissible(text[s - w.start : s - w.start + length]):
                return s
        return None

    # doubling phase
    length = 2
    hit = witness_at(length)
    while hit is None and length < cap:
        length = min(length * 2, cap)
        hit = witness_at(length)
    if hit is None:
        return WitnessReport(False, site, cap)
    # bisection for the minimal length with a witness
    lo, hi = max(2, length // 2 + 1), length
    best_len, best_start = length, hit
    while lo < hi:
        mid = (lo + hi) // 2
        h = witness_at(mid)
        if h is not None:
            best_len, best_start = mid, h
            hi = mid
        else:
            lo = mid + 1
    h = witness_at(lo)
    if h is not None and lo <= best_len:
        best_len, best_start = lo, h
    fac = Word(text[best_start - w.start : best_start - w.start + best_len])
    return WitnessReport(True, site, cap, fac, best_start)


def break_witness(
    point: HullPoint, alpha: AlphaSpec, i: int, cap: int
) -> WitnessReport:
    """Exchange the letters at i, i+1 of the hull element and search the
    result for a factor (containing site i) that leaves the admissible set.

    Returns found=False when no witness exists within the cap; for points
    off the orbit of 0 a witness is guaranteed to exist at some length,
    but the cap keeps this an honest semi-decision.
    """
    w = window(point, alpha, i - cap, i + cap + 1)
    exchanged = exchange(w, i)
    return witness_in_window(exchanged, alpha, i, cap)


# ---------------------------------------------------------------------------
# block exchange (the coarse version of the letter exchange)
# ---------------------------------------------------------------------------


def exchange_blocks(view: PartitionView, alpha: AlphaSpec, index: int) -> Window:
    """Swap the block at `index` with its successor (labels must differ)
    and return the letters of the modified coverage."""
    if not 0 <= index < len(view.blocks) - 1:
        raise OutOfRange(f"no adjacent block pair at index {index}")
    b1, b2 = view.blocks[index], view.blocks[index + 1]
    if b1.label == b2.label:
        raise EqualLetters(f"blocks at index {index} have equal labels s_{b1.label}")
    new_blocks = list(view.blocks)
    new_blocks[index] = Block(b2.label, b1.start)
    new_blocks[index + 1] = Block(b1.label, b1.start + alpha.q(b2.label))
    swapped = PartitionView(view.level, tuple(new_blocks), view.left_margin, view.right_margin)
    return swapped.expand(alpha)


# ---------------------------------------------------------------------------
# partition forms at an exchange site
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormReport:
    level: int
    site: int
    form: str  # "a", "b" or "neither"
    detail: str

    def to_dict(self) -> dict:
        return {"level": self.level, "site": self.site, "form": self.form, "detail": self.detail}


def lemma52_form(
    point: HullPoint,
    alpha: AlphaSpec,
    m: int,
    level: int,
    radius: Optional[int] = None,
) -> FormReport:
    """Tag the partition configuration at the boundary m | m+1.

    Form (a): the block ending at m is s_n preceded by s_{n-1}; form (b):
    it is s_{n-1} preceded by s_n; both with an s_n starting at m+1.  A
    hull element that stays in the hull after the exchange at (m-1, m)
    shows these forms alternating across consecutive levels.
    """
    if radius is None:
        radius = max(4 * alpha.q(level + 1), 64) + abs(m)
    view = partition_window(point, alpha, level, radius)
    n = level
    ends = {b.end(alpha): b for b in view.blocks}
    starts = {b.start: b for b in view.blocks}
    if m not in ends or (m + 1) not in starts:
        if view.block_containing(m, alpha) is None or view.block_containing(m + 1, alpha) is None:
            raise RadiusTooSmall(f"sites {m}, {m + 1} not covered at level {level}")
        return FormReport(level, m, "neither", "no block boundary at the site")
    left = ends[m]
    right = starts[m + 1]
    prev = ends.get(left.start - 1)
    if right.label != n or prev is None:
        return FormReport(level, m, "neither", f"right block s_{right.label}, no left context")
    if left.label == n and prev.label == n - 1:
        return FormReport(level, m, "a", f"s_{n - 1} s_{n} | s_{n}")
    if left.label == n - 1 and prev.label == n:
        return FormReport(level, m, "b", f"s_{n} s_{n - 1} | s_{n}")
    return FormReport(
        level, m, "neither", f"s_{prev.label} s_{left.label} | s_{right.label}"
    )
