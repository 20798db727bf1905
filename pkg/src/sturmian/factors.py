"""Admissible words: enumeration, exhaustion indices, occurrence classes,
and exact versus empirical frequencies.

Length-n factors split into three classes by frequency; the class of a
word equals the width of its theta-cylinder, which is the gap of the
three-distance partition containing the orbit point of any occurrence.
That width-based constructor is total (occurrence counts alone tie in
the boundary cases) and the occurrence-count signatures and appearance
order predicted for each class are checked against it by the test suite.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arithmetic import GOLDEN_ALPHA, TAU, AlphaSpec, QuadNumber
from .intervals import GapStatistics, three_distance
from .words import Word, build_sn, palindrome_part, v0_prefix


def exhausting_point(alpha: AlphaSpec, n: int) -> int:
    """The least N with every length-n factor present in v_0(1..N).

    Closed form: with q_k <= n <= q_{k+1} - 1 and j = n - q_k, the value
    is q_{k+1} + q_k - 1 + j.  The brute-force first-occurrence scan is
    kept as a test oracle.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    k, j = alpha.level_for(n)
    return alpha.q(k + 1) + alpha.q(k) - 1 + j


def factor_set(alpha: AlphaSpec, n: int) -> set[Word]:
    """All length-n factors, read from the minimal sufficient prefix."""
    if n < 1:
        raise ValueError("n must be >= 1")
    horizon = exhausting_point(alpha, max(n, 2))
    text = v0_prefix(alpha, horizon).letters
    return {Word(text[i : i + n]) for i in range(horizon - n + 1)}


def right_special(alpha: AlphaSpec, n: int) -> Word:
    """The unique length-n factor extendable by both letters: the reversed
    length-n prefix of the palindromic part pi_k for any high enough k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = 1
    while alpha.q(k) - 2 < n:
        k += 1
    pi, _ = palindrome_part(alpha, k)
    return Word(pi.letters[:n][::-1])


def g_point(alpha: AlphaSpec, n: int) -> int:
    """The least N by which both one-letter extensions of the right special
    factor of length n-1 have occurred in v_0(1..N)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    t = right_special(alpha, n - 1).letters
    horizon = exhausting_point(alpha, n)
    text = v0_prefix(alpha, horizon).letters
    ends = []
    for c in "01":
        i = text.find(t + c)
        if i < 0:
            raise ArithmeticError(f"extension {t + c} not found by the exhaustion index")
        ends.append(i + n)  # 1-based index of the last letter
    return max(ends)


def empirical_frequency(alpha: AlphaSpec, w: Word, N: int) -> Fraction:
    """Overlapping occurrence count of w in v_0(1..N), divided by N."""
    if N < len(w):
        raise ValueError("N must be at least the word length")
    text = v0_prefix(alpha, N).letters
    count = 0
    i = text.find(w.letters)
    while i != -1:
        count += 1
        i = text.find(w.letters, i + 1)
    return Fraction(count, N)


# ---------------------------------------------------------------------------
# frequencies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BetaValue:
    """beta_k = [1, a_{k+2}, a_{k+3}, ...], exact when the stream is
    eventually periodic, otherwise a certified rational enclosure."""

    k: int
    exact: Optional[QuadNumber]
    enclosure: Optional[tuple[Fraction, Fraction]]

    def approx(self) -> Fraction:
        if self.exact is not None:
            return self.exact.approx_fraction(40)
        assert self.enclosure is not None
        return (self.enclosure[0] + self.enclosure[1]) / 2


def beta_value(alpha: AlphaSpec, k: int, tolerance: Fraction = Fraction(1, 10**13)) -> BetaValue:
    """beta_k for the coefficient tail starting at a_{k+2}."""
    tail = _tail_alpha(alpha, k + 1)
    exact = tail.to_quadratic()
    if exact is not None:
        return BetaValue(k, (1 + exact).inverse(), None)
    m = 1
    while True:
        lo, hi = tail._bracket(m)
        blo, bhi = 1 / (1 + hi), 1 / (1 + lo)
        if bhi - blo <= tolerance:
            return BetaValue(k, None, (blo, bhi))
        m += 1


def _tail_alpha(alpha: AlphaSpec, drop: int) -> AlphaSpec:
    """The rotation number with the first `drop` coefficients removed."""
    if alpha._source is not None and alpha._source.factory is None:
        src = alpha._source
        pre, per = list(src.prefix), list(src.period)
        if drop <= len(pre):
            pre = pre[drop:]
        else:
            extra = (drop - len(pre)) % len(per)
            pre, per = [], per[extra:] + per[:extra]
        if not per:
            raise ValueError("stream too short")
        return AlphaSpec.from_cf(prefix=pre, period=per)
    if alpha.is_quadratic or alpha.to_quadratic() is not None:
        x = alpha.to_quadratic()
        assert x is not None
        for i in range(1, drop + 1):
            x = x.inverse() - alpha.coefficient(i)
        return AlphaSpec.quadratic(x)

    def factory(a=alpha, d=drop):
        i = d + 1
        while True:
            yield a.coefficient(i)
            i += 1

    return AlphaSpec.from_cf_callable(lambda: factory())


@dataclass(frozen=True)
class ClassFrequencies:
    """Exact per-class frequencies for length-n factors."""

    n: int
    k: int
    case: str  # "i" or "ii"
    l: Optional[int]
    beta: BetaValue
    r_a: Optional[QuadNumber]
    r_b: Optional[QuadNumber]
    r_c: Optional[QuadNumber]
    # rational enclosures when beta itself is only enclosed
    enclosures: Optional[dict[str, tuple[Fraction, Fraction]]] = None

    def exact(self) -> tuple[QuadNumber, QuadNumber, QuadNumber]:
        if self.r_a is None or self.r_b is None or self.r_c is None:
            raise ValueError("frequencies available only as enclosures for this backend")
        return self.r_a, self.r_b, self.r_c

    def to_dict(self, places: int = 12) -> dict:
        def fmt(x):
            return None if x is None else {"expr": x.expr(), "decimal": x.decimal(places)}

        return {
            "n": self.n,
            "k": self.k,
            "case": self.case,
            "l": self.l,
            "A": fmt(self.r_a),
            "B": fmt(self.r_b),
            "C": fmt(self.r_c),
        }


def _case_split(alpha: AlphaSpec, n: int) -> tuple[int, int, str, Optional[int], int]:
    """(k, j, case, l, multiplicity base) for the length decomposition."""
    k, j = alpha.level_for(n)
    qk, qkm1 = alpha.q(k), alpha.q(k - 1)
    if n <= qk + qkm1 - 1:
        return k, j, "i", None, alpha.coefficient(k + 1)
    l = (n - qkm1) // qk
    j2 = n - l * qk - qkm1
    return k, j2, "ii", l, alpha.coefficient(k + 1)


def frequencies(alpha: AlphaSpec, n: int) -> ClassFrequencies:
    """The exact class frequencies, via beta_k over the common denominator
    beta_k q_{k+1} + (1 - beta_k) q_k."""
    if n < 2:
        raise ValueError("n must be >= 2")
    k, j, case, l, a_next = _case_split(alpha, n)
    beta = beta_value(alpha, k)
    qk, qk1 = alpha.q(k), alpha.q(k + 1)
    mult = a_next if case == "i" else a_next - (l or 0)
    if beta.exact is not None:
        b = beta.exact
        den = b * qk1 + (QuadNumber(1) - b) * qk
        r_a = (b * (mult + 1) + (QuadNumber(1) - b)) / den
        r_b = (b * mult + (QuadNumber(1) - b)) / den
        r_c = b / den
        return ClassFrequencies(n, k, case, l, beta, r_a, r_b, r_c)
    assert beta.enclosure is not None
    blo, bhi = beta.enclosure

    def env(m: int) -> tuple[Fraction, Fraction]:
        vals = []
        for b in (blo, bhi):
            den = b * qk1 + (1 - b) * qk
            vals.append((b * m + (1 - b)) / den)
        return min(vals), max(vals)

    encl = {
        "A": env(mult + 1),
        "B": env(mult),
        "C": (blo / (bhi * qk1 + (1 - bhi) * qk), bhi / (blo * qk1 + (1 - blo) * qk)),
    }
    return ClassFrequencies(n, k, case, l, beta, None, None, None, encl)


def golden_class_frequencies(k: int) -> tuple[QuadNumber, QuadNumber, QuadNumber]:
    """The golden-rotation values 1/tau^(k-1), 1/tau^k, 1/tau^(k+1)."""
    return (
        (TAU ** (k - 1)).inverse(),
        (TAU ** k).inverse(),
        (TAU ** (k + 1)).inverse(),
    )


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WordOccurrences:
    """Occurrence starts of one factor, with self-overlap and gap metadata."""

    word: Word
    cls: str
    first_start: int
    starts_before_f: tuple[int, ...]
    starts_horizon: tuple[int, ...]
    overlaps: tuple[int, ...]  # n - D for consecutive start distances D < n
    distances: tuple[int, ...]  # D - n for D >= n

    def count_before_f(self) -> int:
        return len(self.starts_before_f)


@dataclass(frozen=True)
class FactorClassification:
    """The three-class decomposition of the length-n factors."""

    n: int
    k: int
    j: int
    case: str  # "i" (includes the golden case) or "ii"
    l: Optional[int]
    classes: dict[str, tuple[Word, ...]]  # words ordered by first occurrence
    frequencies: ClassFrequencies
    occurrences: tuple[WordOccurrences, ...]
    f_n: int
    label_sequence: str  # class label of the word starting at 1, 2, ..., f - n + 1

    def sizes(self) -> tuple[int, int, int]:
        return len(self.classes["A"]), len(self.classes["B"]), len(self.classes["C"])

    def class_of(self, w: Word) -> str:
        for cls, words in self.classes.items():
            if w in words:
                return cls
        raise KeyError(f"{w} is not a length-{self.n} factor")

    def to_dict(self, places: int = 12) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "j": self.j,
            "case": self.case,
            "l": self.l,
            "f": self.f_n,
            "sizes": list(self.sizes()),
            "classes": {c: [w.letters for w in ws] for c, ws in self.classes.items()},
            "frequencies": self.frequencies.to_dict(places),
            "label_sequence": self.label_sequence,
            "occurrences": [
                {
                    "word": o.word.letters,
                    "class": o.cls,
                    "starts_before_f": list(o.starts_before_f),
                    "overlaps": list(o.overlaps),
                    "distances": list(o.distances),
                }
                for o in self.occurrences
            ],
        }


def classify(alpha: AlphaSpec, n: int, metadata_horizon: Optional[int] = None) -> FactorClassification:
    """Split the length-n factors into classes A, B, C by exact frequency.

    The frequency of a factor equals the width of the three-distance gap
    containing the orbit point of any of its occurrences; ranking the at
    most three widths (widest = A) classifies every word, with a two-width
    statistics meaning class A is empty.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    k, j, case, l, _ = _case_split(alpha, n)
    f = exhausting_point(alpha, n)
    qk1 = alpha.q(k + 1)
    starts_total = f - n + 1
    assert starts_total == qk1
    if metadata_horizon is None:
        metadata_horizon = 3 * (alpha.q(k + 1) + alpha.q(k)) + 6 * n + 50
    text = v0_prefix(alpha, max(f, metadata_horizon)).letters
    stats = three_distance(alpha, n)
    widths = [w for w, _ in stats.distinct]
    if len(widths) == 3:
        width_class = {widths[0]: "A", widths[1]: "B", widths[2]: "C"}
    elif len(widths) == 2:
        width_class = {widths[0]: "B", widths[1]: "C"}
    else:
        raise ArithmeticError(f"unexpected gap structure at n={n}: {len(widths)} widths")
    a_val = alpha.to_quadratic()
    assert a_val is not None
    # class of each distinct word, by the gap containing the orbit point of
    # its first occurrence start
    first_start: dict[str, int] = {}
    for t in range(1, starts_total + 1):
        w = text[t - 1 : t - 1 + n]
        if w not in first_start:
            first_start[w] = t
    gap_lo_keys = list(stats.lo_keys)
    word_class: dict[str, str] = {}
    for w, t in first_start.items():
        x = (a_val * t).frac()
        i = bisect.bisect_right(gap_lo_keys, x.approx_fraction(40)) - 1
        gap = None
        for cand in (i, i - 1, i + 1):
            if 0 <= cand < len(stats.gaps) and stats.gaps[cand].contains(x):
                gap = stats.gaps[cand]
                break
        if gap is None:
            raise ArithmeticError(f"orbit point of start {t} not located")
        word_class[w] = width_class[gap.width]
    label_sequence = "".join(
        word_class[text[t - 1 : t - 1 + n]] for t in range(1, starts_total + 1)
    )
    classes: dict[str, list[Word]] = {"A": [], "B": [], "C": []}
    for w, t in sorted(first_start.items(), key=lambda kv: kv[1]):
        classes[word_class[w]].append(Word(w))
    occurrences = []
    limit = len(text) - n
    for w, t in sorted(first_start.items(), key=lambda kv: kv[1]):
        starts = []
        i = text.find(w)
        while i != -1 and i <= limit:
            starts.append(i + 1)
            i = text.find(w, i + 1)
        before_f = tuple(s for s in starts if s <= starts_total)
        dists = [b - a for a, b in zip(starts, starts[1:])]
        overlaps = tuple(sorted({n - d for d in dists if d < n}))
        gaps = tuple(sorted({d - n for d in dists if d >= n}))
        occurrences.append(
            WordOccurrences(Word(w), word_class[w], t, before_f, tuple(starts), overlaps, gaps)
        )
    return FactorClassification(
        n=n,
        k=k,
        j=j,
        case=case,
        l=l,
        classes={c: tuple(ws) for c, ws in classes.items()},
        frequencies=frequencies(alpha, n),
        occurrences=tuple(occurrences),
        f_n=f,
        label_sequence=label_sequence,
    )


def expected_sizes(alpha: AlphaSpec, n: int) -> tuple[int, int, int]:
    """Predicted class sizes from the length decomposition."""
    k, j, case, l, _ = _case_split(alpha, n)
    qk, qkm1 = alpha.q(k), alpha.q(k - 1)
    if case == "i":
        return qkm1 - 1 - j, qk - qkm1 + 1 + j, j + 1
    assert l is not None
    return qk - 1 - j, j + 1, (l - 1) * qk + qkm1 + 1 + j


def expected_label_sequence(alpha: AlphaSpec, n: int) -> str:
    """Predicted appearance pattern (A-run B-run repeated, then A-run C-run)."""
    k, j, case, l, a_next = _case_split(alpha, n)
    qk, qkm1, qk1 = alpha.q(k), alpha.q(k - 1), alpha.q(k + 1)
    if case == "i":
        la, lb, rep = qkm1 - 1 - j, qk - qkm1 + 1 + j, a_next
    else:
        assert l is not None
        la, lb, rep = qk - 1 - j, j + 1, a_next - l
    body = ("A" * la + "B" * lb) * rep + "A" * la
    return body + "C" * (qk1 - len(body))


def expected_count_signature(alpha: AlphaSpec, n: int) -> tuple[int, int, int]:
    """Predicted occurrence counts before the exhaustion index, per class."""
    _, _, case, l, a_next = _case_split(alpha, n)
    if case == "i":
        return a_next + 1, a_next, 1
    assert l is not None
    return a_next - l + 1, a_next - l, 1
