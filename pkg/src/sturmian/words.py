"""Canonical words, hull points, and letter windows.

Words are finite binary sequences stored as strings over ``01``; the
display alphabet A/B (A = 1, B = 0) is available for output.  Hull points
come in two flavours: generic orbit points with the right-closed
indicator, and the countable family of primed points using the
left-closed one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .arithmetic import AlphaSpec, Exact, QuadNumber, letter_decision
from .errors import OutOfRange, TooShort

_AB = str.maketrans("10", "AB")
_BA = str.maketrans("AB", "10")


@dataclass(frozen=True)
class Word:
    """An immutable finite word over {0, 1}."""

    letters: str = ""

    def __post_init__(self) -> None:
        if self.letters.strip("01"):
            raise ValueError(f"word must be over 0/1: {self.letters!r}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Accepts either 0/1 or A/B spellings."""
        return cls(text.translate(_BA))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return (int(ch) for ch in self.letters)

    def __getitem__(self, i) -> "Word | int":
        if isinstance(i, slice):
            return Word(self.letters[i])
        return int(self.letters[i])

    def __add__(self, other: "Word | str") -> "Word":
        return Word(self.letters + (other.letters if isinstance(other, Word) else other))

    def __contains__(self, other: "Word | str") -> bool:
        return (other.letters if isinstance(other, Word) else other) in self.letters

    def mirror(self) -> "Word":
        return Word(self.letters[::-1])

    def display(self, alphabet: str = "01") -> str:
        if alphabet == "01":
            return self.letters
        if alphabet == "AB":
            return self.letters.translate(_AB)
        raise ValueError("alphabet must be '01' or 'AB'")

    def __str__(self) -> str:
        return self.letters

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"


def mirror(w: Word) -> Word:
    """The reversed word."""
    return w.mirror()


@dataclass(frozen=True)
class HullPoint:
    """A point of the hull: Regular(theta) or Prime(m) = the primed point shifted by m."""

    kind: str
    theta: Union[QuadNumber, Fraction, None] = None
    m: int = 0

    @classmethod
    def regular(cls, theta: Exact) -> "HullPoint":
        if isinstance(theta, (int, Fraction)):
            theta = Fraction(theta)
            theta -= theta.__floor__()
        elif isinstance(theta, QuadNumber):
            theta = theta.frac()
        else:
            raise TypeError(f"unsupported theta type {type(theta)!r}")
        return cls(kind="regular", theta=theta)

    @classmethod
    def prime(cls, m: int = 0) -> "HullPoint":
        return cls(kind="prime", m=m)

    @classmethod
    def parse(cls, text: str) -> "HullPoint":
        """Accepts 'prime:m', a rational like '1/2', or 'quad:a,b,c,d'."""
        text = text.strip()
        if text.startswith("prime"):
            _, _, rest = text.partition(":")
            return cls.prime(int(rest) if rest else 0)
        if text.startswith("quad:"):
            a, b, c, d = (int(t) for t in text[5:].split(","))
            return cls.regular(QuadNumber(a, b, c, d))
        return cls.regular(Fraction(text))

    def letter(self, alpha: AlphaSpec, i: int, budget: int = 500) -> int:
        if self.kind == "regular":
            assert self.theta is not None
            return letter_decision(alpha, self.theta, i, side="right", budget=budget)
        return letter_decision(alpha, 0, i - self.m, side="left", budget=budget)

    def describe(self) -> str:
        if self.kind == "regular":
            t = self.theta
            return t.expr() if isinstance(t, QuadNumber) else str(t)
        return f"prime:{self.m}"


@dataclass(frozen=True)
class Window:
    """A word anchored at an absolute start index."""

    start: int
    word: Word

    @property
    def stop(self) -> int:
        """Inclusive end index."""
        return self.start + len(self.word) - 1

    def __len__(self) -> int:
        return len(self.word)

    def letter_at(self, i: int) -> int:
        if not self.start <= i <= self.stop:
            raise OutOfRange(f"index {i} outside [{self.start}, {self.stop}]")
        return int(self.word.letters[i - self.start])

    def sub(self, lo: int, hi: int) -> "Window":
        if not (self.start <= lo and hi <= self.stop and lo <= hi):
            raise OutOfRange(f"[{lo}, {hi}] outside [{self.start}, {self.stop}]")
        return Window(lo, Word(self.word.letters[lo - self.start : hi - self.start + 1]))

    def __repr__(self) -> str:
        return f"Window({self.start}..{self.stop}: {self.word.letters})"


# ---------------------------------------------------------------------------
# canonical words
# ---------------------------------------------------------------------------


def build_sn(alpha: AlphaSpec, n: int) -> Word:
    """The canonical word s_n: s_-1 = 1, s_0 = 0, s_{k+1} = s_k^{a_{k+1}} s_{k-1}."""
    if n < -1:
        raise ValueError("n must be >= -1")
    if n == -1:
        return Word("1")
    if n == 0:
        return Word("0")
    cur, prev = "0" * (alpha.coefficient(1) - 1) + "1", "0"  # s_1, s_0
    for k in range(2, n + 1):
        cur, prev = cur * alpha.coefficient(k) + prev, cur
    return Word(cur)


def v0_prefix(alpha: AlphaSpec, length: int) -> Word:
    """The word v_0(1..length), built from the s_n recursion (no arithmetic)."""
    prev, cur = "0", "0" * (alpha.coefficient(1) - 1) + "1"
    k = 1
    while len(cur) < length:
        k += 1
        cur, prev = cur * alpha.coefficient(k) + prev, cur
    return Word(cur[:length])


def palindrome_part(alpha: AlphaSpec, n: int) -> tuple[Word, Word]:
    """(pi_n, suffix): s_n = pi_n + suffix with suffix (10) for even n, (01) for odd.

    pi_n is defined operationally as s_n with its final two letters
    removed; that it reads the same both ways is a checked property, not
    an assumption of the construction.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = build_sn(alpha, n)
    if len(s) < 2:
        raise TooShort(f"s_{n} has length {len(s)} < 2")
    pi, suffix = Word(s.letters[:-2]), Word(s.letters[-2:])
    expected = "10" if n % 2 == 0 else "01"
    if suffix.letters != expected:
        raise AssertionError(f"s_{n} ends with {suffix} instead of {expected}")
    return pi, suffix


def window(point: HullPoint, alpha: AlphaSpec, lo: int, hi: int, budget: int = 500) -> Window:
    """Letters of the hull element on [lo, hi], via exact letter decisions."""
    if lo > hi:
        raise ValueError("lo must be <= hi")
    if alpha.is_quadratic:
        return _window_quadratic(point, alpha, lo, hi)
    letters = "".join(str(point.letter(alpha, i, budget=budget)) for i in range(lo, hi + 1))
    return Window(lo, Word(letters))


def _window_quadratic(point: HullPoint, alpha: AlphaSpec, lo: int, hi: int) -> Window:
    """Incremental evaluation: one field addition and one comparison per letter."""
    a = alpha.value
    one = QuadNumber(1)
    if point.kind == "regular":
        theta = point.theta
        if isinstance(theta, (int, Fraction)):
            theta = QuadNumber.from_fraction(theta)
        shift = 0
        left_closed = False
    else:
        theta = QuadNumber(0)
        shift = -point.m
        left_closed = True
    out = []
    r = (a * (lo + shift) + theta).frac()
    for _ in range(lo, hi + 1):
        if left_closed and r.sign() == 0:
            # representative taken in (0, 1]: the point 0 counts as 1
            out.append("1")
            r = a  # next r = frac(0 + alpha) = alpha
            continue
        t = r + a
        s = (t - one).sign()
        if left_closed:
            bit = "1" if s > 0 else "0"
        else:
            bit = "1" if s >= 0 else "0"
        out.append(bit)
        r = t - one if s >= 0 else t
    return Window(lo, Word("".join(out)))
