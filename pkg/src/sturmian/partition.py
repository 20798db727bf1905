"""The unique two-word partition of hull elements and its level lift.

At level n a hull element tiles uniquely by the words s_{n-1} and s_n.
Views are computed bottom-up from letters: the level-1 tiling is forced
(every 1 terminates an s_1 block), and each lift groups maximal runs of
s_n blocks with the following s_{n-1} into s_{n+1} blocks.  A finite
window generally cuts blocks at both ends; the cut material is reported
as explicit trimmed margins, never as blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arithmetic import AlphaSpec
from .errors import MalformedPartition, RadiusTooSmall
from .words import HullPoint, Window, Word, build_sn, window


@dataclass(frozen=True)
class Block:
    """One tile: the word s_{label} starting at an absolute index."""

    label: int
    start: int

    def length(self, alpha: AlphaSpec) -> int:
        return alpha.q(self.label)

    def end(self, alpha: AlphaSpec) -> int:
        return self.start + self.length(alpha) - 1


@dataclass(frozen=True)
class PartitionView:
    """Blocks of the (level-1, level)-partition over a window, plus margins."""

    level: int
    blocks: tuple[Block, ...]
    left_margin: Optional[tuple[int, int]] = None
    right_margin: Optional[tuple[int, int]] = None

    @property
    def labels(self) -> tuple[int, int]:
        return (self.level - 1, self.level)

    def coverage(self, alpha: AlphaSpec) -> tuple[int, int]:
        if not self.blocks:
            raise RadiusTooSmall("view has no complete blocks")
        return self.blocks[0].start, self.blocks[-1].end(alpha)

    def block_containing(self, i: int, alpha: AlphaSpec) -> Optional[Block]:
        for b in self.blocks:
            if b.start <= i <= b.end(alpha):
                return b
        return None

    def expand(self, alpha: AlphaSpec) -> Window:
        """Concatenate the block words back into letters over the coverage."""
        lo, hi = self.coverage(alpha)
        parts = []
        expected = lo
        for b in self.blocks:
            if b.start != expected:
                raise MalformedPartition(f"gap before block at {b.start}")
            parts.append(build_sn(alpha, b.label).letters)
            expected = b.start + alpha.q(b.label)
        return Window(lo, Word("".join(parts)))

    def to_dict(self, alpha: AlphaSpec) -> dict:
        return {
            "level": self.level,
            "blocks": [
                {"label": f"s{b.label}", "start": b.start, "length": b.length(alpha)}
                for b in self.blocks
            ],
            "left_margin": list(self.left_margin) if self.left_margin else None,
            "right_margin": list(self.right_margin) if self.right_margin else None,
        }


def _merge_margin(old: Optional[tuple[int, int]], new: Optional[tuple[int, int]]) -> Optional[tuple[int, int]]:
    if old is None:
        return new
    if new is None:
        return old
    return (min(old[0], new[0]), max(old[1], new[1]))


def _level1_view(w: Window, alpha: AlphaSpec) -> PartitionView:
    """The forced (0, 1)-tiling: each 1 ends an s_1 = 0^(a_1 - 1) 1 block."""
    a1 = alpha.coefficient(1)
    lo, hi = w.start, w.stop
    ones = [i for i in range(lo, hi + 1) if w.letter_at(i) == 1]
    if not ones:
        raise RadiusTooSmall("no complete block fits in the window")
    blocks: list[Block] = []
    left_margin = None
    j0 = ones[0]
    if j0 - lo < a1 - 1:
        # a cut s_1 at the left edge; everything through its final 1 is margin
        left_margin = (lo, j0)
        zero_scan_from = j0 + 1
    else:
        blocks.append(Block(1, j0 - a1 + 1))
        for z in range(lo, j0 - a1 + 1):
            blocks.append(Block(0, z))
        zero_scan_from = j0 + 1
    prev_one = j0
    for j in ones[1:]:
        gap = j - prev_one - 1
        if gap not in (a1 - 1, a1):
            raise MalformedPartition(f"gap of {gap} zeros between letter-1 sites {prev_one} and {j}")
        if gap == a1:
            blocks.append(Block(0, prev_one + 1))
        blocks.append(Block(1, j - a1 + 1))
        prev_one = j
    right_margin = None
    trailing = hi - prev_one
    if trailing > a1:
        raise MalformedPartition(f"{trailing} trailing zeros after letter-1 site {prev_one}")
    if trailing == a1:
        # the gap is maximal, so its first zero is a genuine s_0 block
        blocks.append(Block(0, prev_one + 1))
        if a1 > 1:
            right_margin = (prev_one + 2, hi)
    elif trailing > 0:
        right_margin = (prev_one + 1, hi)
    blocks.sort(key=lambda b: b.start)
    return PartitionView(1, tuple(blocks), left_margin, right_margin)


def lift(p: PartitionView, alpha: AlphaSpec) -> PartitionView:
    """Regroup a level-n view into the level-(n+1) view.

    Each maximal run of s_n blocks ends at an s_{n-1}; the trailing a_{n+1}
    copies plus that s_{n-1} form one s_{n+1}, and a leading extra copy
    (run length a_{n+1} + 1) survives as an s_n block.  Ambiguous material
    at either edge moves into the margins.
    """
    n = p.level
    a = alpha.coefficient(n + 1)
    out: list[Block] = []
    run: list[Block] = []
    left_margin = p.left_margin
    right_margin = p.right_margin
    seen_separator = False
    for b in p.blocks:
        if b.label == n:
            run.append(b)
        elif b.label == n - 1:
            r = len(run)
            if r == a:
                out.append(Block(n + 1, run[0].start))
            elif r == a + 1:
                out.append(Block(n, run[0].start))
                out.append(Block(n + 1, run[1].start))
            elif not seen_separator:
                # cut super-block at the left edge
                start = run[0].start if run else b.start
                left_margin = _merge_margin(left_margin, (start, b.end(alpha)))
            else:
                raise MalformedPartition(
                    f"run of {r} s_{n} blocks before s_{n - 1} at {b.start}; expected {a} or {a + 1}"
                )
            seen_separator = True
            run = []
        else:
            raise MalformedPartition(f"unexpected label s_{b.label} in a level-{n} view")
    if run:
        r = len(run)
        if r == a + 1:
            out.append(Block(n, run[0].start))
            tail_from = run[1].start
        elif r <= a:
            tail_from = run[0].start
        else:
            raise MalformedPartition(f"trailing run of {r} s_{n} blocks; expected at most {a + 1}")
        last_covered = run[-1].end(alpha)
        if tail_from <= last_covered:
            right_margin = _merge_margin(right_margin, (tail_from, last_covered))
    if not out:
        raise RadiusTooSmall(f"no complete level-{n + 1} block closes in the window")
    return PartitionView(n + 1, tuple(out), left_margin, right_margin)


def partition_window(
    point: HullPoint, alpha: AlphaSpec, level: int, radius: int
) -> PartitionView:
    """The (level-1, level)-partition of the hull element around index 0."""
    if level < 1:
        raise ValueError("level must be >= 1")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    w = window(point, alpha, -radius, radius)
    return partition_of_window(w, alpha, level)


def partition_of_window(w: Window, alpha: AlphaSpec, level: int) -> PartitionView:
    """The (level-1, level)-partition of an explicit letter window."""
    view = _level1_view(w, alpha)
    for _ in range(level - 1):
        view = lift(view, alpha)
    return view


@dataclass(frozen=True)
class IsolationReport:
    """Outcome of the run-structure checks on a partition view."""

    level: int
    adjacent_separators: tuple[int, ...]
    bad_runs: tuple[tuple[int, int], ...]  # (start, length) of offending runs
    interior_run_lengths: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.adjacent_separators and not self.bad_runs

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "ok": self.ok,
            "adjacent_separators": list(self.adjacent_separators),
            "bad_runs": [list(t) for t in self.bad_runs],
            "interior_run_lengths": list(self.interior_run_lengths),
        }


def verify_isolation(p: PartitionView, alpha: AlphaSpec) -> IsolationReport:
    """Check that s_{n-1} blocks are isolated and interior s_n runs have
    length a_{n+1} or a_{n+1} + 1."""
    n = p.level
    a = alpha.coefficient(n + 1)
    adjacent: list[int] = []
    bad_runs: list[tuple[int, int]] = []
    interior: list[int] = []
    run_start: Optional[int] = None
    run_len = 0
    prev_label: Optional[int] = None
    seen_separator = False
    for b in p.blocks:
        if b.label == n - 1:
            if prev_label == n - 1:
                adjacent.append(b.start)
            if seen_separator:
                interior.append(run_len)
                if run_len not in (a, a + 1):
                    bad_runs.append((run_start if run_start is not None else b.start, run_len))
            seen_separator = True
            run_start, run_len = None, 0
        else:
            if run_len == 0:
                run_start = b.start
            run_len += 1
        prev_label = b.label
    return IsolationReport(n, tuple(adjacent), tuple(bad_runs), tuple(interior))
