"""The embedding coding of hull elements and its inverse machinery.

A hull element is coded by the sequence of operations by which the block
covering site 0 grows: R appends the shorter word on the right (level
n -> n+1), L absorbs the block from the left (level n -> n+2).  For the
golden rotation the full coding, its inverse reconstruction, the exact
theta-interval of a coding prefix, the theta series, the Zeckendorf
closed forms for shifted sequences, and the fixed point are implemented.
For other rotation numbers the coding is exposed through the partition
lift with per-operation copy indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arithmetic import GOLDEN_ALPHA, TAU, AlphaSpec, QuadNumber, letter_decision
from .errors import EmptyOpSeq, RadiusTooSmall, TokenizationFailure
from .intervals import ExactInterval
from .partition import lift as lift_view
from .partition import _level1_view
from .words import HullPoint, Window, Word, build_sn, window

_ONE = QuadNumber(1)
_INV_TAU = GOLDEN_ALPHA  # 1/tau


@dataclass(frozen=True)
class OpSeq:
    """A finite prefix of the operation coding, over the letters R and L.

    ``copies`` carries the general-rotation annotation: for each R, which
    copy of s_n inside s_{n+1} the block occupies (None for L entries and
    for codings of the golden rotation, where the copy index is always 1).
    """

    ops: str
    copies: Optional[tuple[Optional[int], ...]] = None

    def __post_init__(self) -> None:
        if self.ops.strip("RL"):
            raise ValueError(f"operations must be over R/L: {self.ops!r}")
        if self.copies is not None and len(self.copies) != len(self.ops):
            raise ValueError("annotation length mismatch")

    @classmethod
    def parse(cls, text: str) -> "OpSeq":
        return cls(text.strip().upper())

    def __len__(self) -> int:
        return len(self.ops)

    def __str__(self) -> str:
        return self.ops

    def __iter__(self):
        return iter(self.ops)

    def counts(self) -> tuple[int, int]:
        """(number of R, number of L)."""
        r = self.ops.count("R")
        return r, len(self.ops) - r

    def prefix(self, k: int) -> "OpSeq":
        return OpSeq(self.ops[:k], self.copies[:k] if self.copies else None)

    def as_bits(self) -> Word:
        """R/L identified with 1/0."""
        return Word(self.ops.replace("R", "1").replace("L", "0"))

    def require_nonempty(self) -> None:
        if not self.ops:
            raise EmptyOpSeq("operation sequence is empty")


def _require_golden(alpha: AlphaSpec) -> None:
    if not alpha.is_golden():
        raise ValueError("this operation is defined for the golden rotation number only")


# ---------------------------------------------------------------------------
# forward coding
# ---------------------------------------------------------------------------


def _phi_prefix_golden(point: HullPoint, alpha: AlphaSpec, k: int) -> OpSeq:
    """Exact coding from O(1) letter queries per operation.

    State: the block covering 0 is s_n at [c, c + q_n - 1] in the
    (n-1, n)-partition.  The two letters following the forced common
    continuation distinguish R from L; their parity-dependent reading is
    fixed by which of s_{n-1} s_n / s_n s_{n-1} ends the continuation.
    """
    ops = []
    if point.letter(alpha, 0) == 1:
        ops.append("R")
        c, n = 0, 1
    else:
        ops.append("L")
        c, n = -1, 2
    while len(ops) < k:
        d = c + alpha.q(n) + alpha.q(n + 1) - 2
        x = point.letter(alpha, d)
        r_case = (x == 1) if n % 2 == 0 else (x == 0)
        if r_case:
            ops.append("R")
            n += 1
        else:
            ops.append("L")
            c -= alpha.q(n + 1)
            n += 2
    return OpSeq("".join(ops))


@dataclass(frozen=True)
class GrowthEvent:
    """One step of the general-rotation embedding: the covering block grows."""

    op: str  # "R" or "L"
    level: int  # the n of s_n that grew
    copy: Optional[int]  # for R: which copy of s_n inside s_{n+1} (1-based)


def phi_events(
    point: HullPoint, alpha: AlphaSpec, count: int, max_radius: int = 1 << 20
) -> tuple[int, list[GrowthEvent]]:
    """Initial covering label at level (0,1) plus the first growth events.

    Works for any rotation number by lifting partitions of a widening
    window and tracking the block containing site 0.
    """
    radius = 64
    while True:
        try:
            return _phi_events_at_radius(point, alpha, count, radius)
        except RadiusTooSmall:
            radius *= 4
            if radius > max_radius:
                raise


def _phi_events_at_radius(
    point: HullPoint, alpha: AlphaSpec, count: int, radius: int
) -> tuple[int, list[GrowthEvent]]:
    w = window(point, alpha, -radius, radius)
    view = _level1_view(w, alpha)
    cur = view.block_containing(0, alpha)
    if cur is None:
        raise RadiusTooSmall("site 0 not covered by a complete block")
    init_label = cur.label
    events: list[GrowthEvent] = []
    while len(events) < count:
        view = lift_view(view, alpha)
        new = view.block_containing(0, alpha)
        if new is None:
            raise RadiusTooSmall("site 0 fell into a margin; widen the window")
        if new.label == cur.label + 1:
            copy = (cur.start - new.start) // alpha.q(cur.label) + 1
            events.append(GrowthEvent("R", cur.label, copy))
        elif new.label == cur.label + 2:
            events.append(GrowthEvent("L", cur.label, None))
        elif new.label != cur.label or new.start != cur.start:
            raise RadiusTooSmall("covering block changed inconsistently")
        cur = new
    return init_label, events


def phi_prefix(point: HullPoint, alpha: AlphaSpec, k: int) -> OpSeq:
    """The first k operations of the embedding coding of the hull element.

    Golden rotation: the plain R/L coding, computed exactly to any depth.
    Other rotation numbers: the coding with copy-index annotations,
    computed by partition lifting over a widening window.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if alpha.is_golden():
        return _phi_prefix_golden(point, alpha, k)
    init_label, events = phi_events(point, alpha, k)
    ops: list[str] = []
    copies: list[Optional[int]] = []
    if init_label == 1:
        ops.append("R")
        copies.append(None)
    for ev in events:
        if len(ops) >= k:
            break
        ops.append(ev.op)
        copies.append(ev.copy)
    return OpSeq("".join(ops), tuple(copies))


# ---------------------------------------------------------------------------
# reconstruction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TailClassification:
    """What an all-R continuation of the coding would force.

    An eventually-R coding determines letters only down to the block
    start; the two admissible left completions differ by a swap of two
    letters.  ``completions`` are those two hull elements (shift m).
    """

    trailing_r: int
    shift_m: int
    completions: tuple[HullPoint, HullPoint]


@dataclass(frozen=True)
class Reconstruction:
    """Letters forced by a coding prefix for the golden rotation.

    The block covering 0 is s_{level} at [block_start, block_start +
    q_level - 1]; forced letters extend through the palindromic prefix of
    the following level and equal the base sequence shifted to the block:
    letter(i) = v_0(i - block_start + 1) on [lo, hi].
    """

    opseq: OpSeq
    level: int
    block_start: int
    lo: int
    hi: int
    tail: TailClassification

    def letter(self, i: int) -> int:
        if not self.lo <= i <= self.hi:
            raise IndexError(f"{i} outside determined range [{self.lo}, {self.hi}]")
        alpha = AlphaSpec.golden()
        return letter_decision(alpha, 0, i - self.block_start + 1)

    def letters(self, lo: int, hi: int) -> Window:
        """The forced letters on [lo, hi] (must lie inside the determined range)."""
        if lo < self.lo or hi > self.hi:
            raise IndexError(
                f"[{lo}, {hi}] outside determined range [{self.lo}, {self.hi}]"
            )
        alpha = AlphaSpec.golden()
        shift = 1 - self.block_start
        w = window(HullPoint.regular(0), alpha, lo + shift, hi + shift)
        return Window(lo, w.word)

    def window(self, limit: int = 100_000) -> Window:
        """All forced letters; refuses to materialize more than `limit` of them."""
        size = self.hi - self.lo + 1
        if size > limit:
            raise ValueError(f"{size} determined letters exceed limit {limit}")
        return self.letters(self.lo, self.hi)


def reconstruct(ops: OpSeq, alpha: AlphaSpec | None = None) -> Reconstruction:
    """Rebuild the letters forced by a coding prefix (golden rotation)."""
    alpha = alpha or AlphaSpec.golden()
    _require_golden(alpha)
    ops.require_nonempty()
    if ops.ops[0] == "R":
        c, n = 0, 1
    else:
        c, n = -1, 2
    for op in ops.ops[1:]:
        if op == "R":
            n += 1
        else:
            c -= alpha.q(n + 1)
            n += 2
    lo, hi = c, c + alpha.q(n) + alpha.q(n + 1) - 3
    m = 1 - c
    trailing = len(ops.ops) - len(ops.ops.rstrip("R"))
    tail = TailClassification(
        trailing_r=trailing,
        shift_m=m,
        completions=(
            HullPoint.regular((GOLDEN_ALPHA * m).frac()),
            HullPoint.prime(-m),
        ),
    )
    return Reconstruction(ops, n, c, lo, hi, tail)


# ---------------------------------------------------------------------------
# the theta side
# ---------------------------------------------------------------------------


def theta_from_opseq(ops: OpSeq) -> ExactInterval:
    """The exact theta-interval of all hull points whose coding starts with ops.

    Each operation splits the current interval in ratio tau : 1, the
    longer part (R) adjacent to the most recent division point.
    """
    ops.require_nonempty()
    lo, hi = QuadNumber(0), _ONE
    anchor_hi = True  # the previous division point is the interval's hi end
    for op in ops.ops:
        cut = hi - (hi - lo) * _INV_TAU if anchor_hi else lo + (hi - lo) * _INV_TAU
        if op == "R":
            if anchor_hi:
                lo = cut
            else:
                hi = cut
            anchor_hi = not anchor_hi
        else:
            if anchor_hi:
                hi = cut
            else:
                lo = cut
    return ExactInterval(lo, hi)


@dataclass(frozen=True)
class ThetaSeries:
    """Partial sums of the alternating tau-power series attached to a coding."""

    partials: tuple[QuadNumber, ...]  # S_0 .. S_{len(ops)}
    value: QuadNumber  # the last partial sum

    def reduced(self, m: int) -> QuadNumber:
        return self.partials[m].frac()


def theta_series(ops: OpSeq) -> ThetaSeries:
    """Partial sums S_m = sum_{n=0}^{m} d_n of the series locating theta.

    d_0 = 1 and d_m = (-1)^(a+1) * tau^-(a + 1 + 2b) where a and b count
    R and L among the first m-1 operations.  S_m mod 1 lies in the
    theta-interval of the first m-1 operations, and S_m converges to the
    theta of the full coding.
    """
    ops.require_nonempty()
    partials = [_ONE]
    s = _ONE
    a = b = 0
    for m in range(1, len(ops.ops) + 1):
        # counts over the first m-1 operations
        if m >= 2:
            if ops.ops[m - 2] == "R":
                a += 1
            else:
                b += 1
        term = (TAU ** (a + 1 + 2 * b)).inverse()
        if (a + 1) % 2 == 1:
            term = -term
        s = s + term
        partials.append(s)
    return ThetaSeries(tuple(partials), s)


# ---------------------------------------------------------------------------
# Zeckendorf closed forms
# ---------------------------------------------------------------------------


def zeckendorf(m: int) -> tuple[int, ...]:
    """Indices k_1 < k_2 < ... with m = F_{k_1} + ... (F_1 = 1, F_2 = 2),
    consecutive indices differing by at least 2."""
    if m < 1:
        raise ValueError("m must be >= 1")
    fibs = [1, 2]
    while fibs[-1] < m:
        fibs.append(fibs[-1] + fibs[-2])
    out = []
    r = m
    for idx in range(len(fibs) - 1, -1, -1):
        if fibs[idx] <= r:
            out.append(idx + 1)
            r -= fibs[idx]
    out.sort()
    assert r == 0 and all(b - a >= 2 for a, b in zip(out, out[1:]))
    return tuple(out)


def phi_shift_formula(m: int, length: int) -> OpSeq:
    """The closed-form coding of the base sequence shifted left by m.

    The Zeckendorf indices of m fix a prefix (R then (k_1-1)/2 L's for odd
    k_1, else k_1/2 L's), then R-runs of length l_2 - 1, l_j - 2 separated
    by single L's, then R forever.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if length < 1:
        raise ValueError("length must be >= 1")
    ks = zeckendorf(m)
    k1 = ks[0]
    ops: list[str] = []
    if k1 % 2 == 1:
        ops.append("R")
        ops.extend("L" * ((k1 - 1) // 2))
    else:
        ops.extend("L" * (k1 // 2))
    for j in range(1, len(ks)):
        gap = ks[j] - ks[j - 1]
        ops.extend("R" * (gap - 1 if j == 1 else gap - 2))
        ops.append("L")
    while len(ops) < length:
        ops.append("R")
    return OpSeq("".join(ops[:length]))


# ---------------------------------------------------------------------------
# the fixed point
# ---------------------------------------------------------------------------


def _letters_of_prefix(ops: OpSeq, count: int) -> str:
    """Letters v(0..count-1) forced by the coding (golden rotation)."""
    rec = reconstruct(ops)
    if rec.hi < count - 1:
        raise ValueError("coding prefix too short to force that many letters")
    return rec.letters(0, count - 1).word.letters


def fixed_point_prefix(length: int, max_iterations: int = 50) -> OpSeq:
    """The unique coding fixed by reconstruction under R=1, L=0, v(n) = O_{n+1}.

    Iterates the consistency map (read the forced letters back as
    operations) from the all-L coding until the prefix stabilizes.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    ops = "L" * length
    for _ in range(max_iterations):
        letters = _letters_of_prefix(OpSeq(ops), length)
        new = letters.replace("1", "R").replace("0", "L")
        if new == ops:
            return OpSeq(ops)
        ops = new
    raise ArithmeticError(f"fixed point did not stabilize within {max_iterations} iterations")


@dataclass(frozen=True)
class RecursionState:
    """One step of the fixed-point recursion u_{n+1} = u_n v_n."""

    step: int
    u: Word
    v_indices: tuple[int, ...]  # v_n as a product of s-words, by index
    k: int  # suffix index of the rightmost s-word in v_n


def _tokenize_rl(bits: str) -> list[str]:
    """Split an R/L word (1 = R, 0 = L) into R and RL tokens."""
    toks = []
    i = 0
    while i < len(bits):
        if bits[i] != "1":
            raise TokenizationFailure(f"unexpected L at position {i}: an LL pair or leading L")
        if i + 1 < len(bits) and bits[i + 1] == "0":
            toks.append("RL")
            i += 2
        else:
            toks.append("R")
            i += 1
    return toks


def fixed_point_recursion(steps: int, max_word_length: int = 10_000_000) -> list[RecursionState]:
    """States (u_n, v_n, k(n)) for n = 1..steps of the fixed-point recursion.

    v_{n+1} tokenizes v_n into R and RL, maps tokens to index shifts +1
    and +3, and applies the cumulative shifts to s_{k(n)}.  Word lengths
    explode beyond a few steps; the materialized u_n is capped.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    alpha = AlphaSpec.golden()
    u = build_sn(alpha, 0)
    v: tuple[int, ...] = (1,)
    k = 1
    states: list[RecursionState] = []
    for step in range(1, steps + 1):
        grown = sum(alpha.q(idx) for idx in v)
        if len(u) + grown > max_word_length:
            raise ValueError(
                f"u_{step} would have {len(u) + grown} letters; raise max_word_length to force"
            )
        word_v = "".join(build_sn(alpha, idx).letters for idx in v)
        u = u + word_v
        toks = _tokenize_rl(word_v)
        idx = k
        new_v = []
        for t in toks:
            idx += 1 if t == "R" else 3
            new_v.append(idx)
        v = tuple(new_v)
        k = idx
        states.append(RecursionState(step, u, v, k))
    return states
