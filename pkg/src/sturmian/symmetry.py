"""Mirror-symmetric hull elements and the symmetric word machinery.

The palindromic prefixes pi_n split symmetrically around a center letter
whose identity cycles with n mod 3; the halves h_n obey a three-step
recursion and their right limits are the flanks of the three symmetric
hull elements.  A four-letter substitution generates the right half of
the doubly-symmetric element.  Golden rotation throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arithmetic import GOLDEN_ALPHA, AlphaSpec, QuadNumber
from .errors import SplitFailure
from .words import HullPoint, Window, Word, palindrome_part, window

_PRIME_SWAP = str.maketrans("ABab", "abAB")
_PROJECT = str.maketrans("ABab", "10" * 2)


@dataclass(frozen=True)
class PrimedWord:
    """A word over A, B, A', B' (primes stored as lowercase)."""

    letters: str

    def __post_init__(self) -> None:
        if self.letters.strip("ABab"):
            raise ValueError(f"primed word must be over A/B/a/b: {self.letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "PrimedWord") -> "PrimedWord":
        return PrimedWord(self.letters + other.letters)

    def bar(self) -> "PrimedWord":
        """Mirror and exchange primed with unprimed letters (an involution)."""
        return PrimedWord(self.letters[::-1].translate(_PRIME_SWAP))

    def project(self) -> Word:
        """Drop the primes: A, A' -> 1 and B, B' -> 0."""
        return Word(self.letters.translate(_PROJECT))

    def display(self) -> str:
        return "".join(ch if ch.isupper() else ch.upper() + "'" for ch in self.letters)

    def __repr__(self) -> str:
        return f"PrimedWord({self.display()})"


# ---------------------------------------------------------------------------
# symmetric halves of the palindromic prefixes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HDecomposition:
    """pi_n = mirror(h) + center + h, with the center empty when |pi_n| is even."""

    n: int
    h: Word
    center: Optional[str]  # "A", "B", or None
    family: int  # n mod 3

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "h": self.h.letters,
            "center": self.center,
            "family": self.family,
        }


def h_word(n: int) -> HDecomposition:
    """The symmetric split of pi_n (golden rotation, n >= 3).

    Families by n mod 3: center letter A (1) for n = 3k, B (0) for
    n = 3k + 1, and an even split with no center for n = 3k + 2.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    alpha = AlphaSpec.golden()
    pi, _ = palindrome_part(alpha, n)
    length = len(pi)
    if length % 2 == 0:
        h = Word(pi.letters[length // 2 :])
        center = None
        if pi.letters != h.mirror().letters + h.letters:
            raise SplitFailure(f"pi_{n} admits no even symmetric split")
    else:
        h = Word(pi.letters[(length + 1) // 2 :])
        center_bit = pi.letters[length // 2]
        center = "A" if center_bit == "1" else "B"
        if pi.letters != h.mirror().letters + center_bit + h.letters:
            raise SplitFailure(f"pi_{n} admits no centered symmetric split")
    expected_center = {0: "A", 1: "B", 2: None}[n % 3]
    if center != expected_center:
        raise SplitFailure(f"pi_{n} has center {center}, expected {expected_center}")
    return HDecomposition(n, h, center, n % 3)


def h_word_by_recursion(n: int) -> Word:
    """h_n from h_{n+3} = h_n (BA) pi_{n+1} (odd n; AB for even) — the
    independent route used to cross-check the direct split."""
    if n < 3:
        raise ValueError("n must be >= 3")
    alpha = AlphaSpec.golden()
    if n in (3, 4, 5):
        return h_word(n).h
    prev = h_word_by_recursion(n - 3)
    sep = "01" if (n - 3) % 2 == 1 else "10"  # (BA) after odd, (AB) after even
    pi, _ = palindrome_part(alpha, n - 2)
    return Word(prev.letters + sep + pi.letters)


# ---------------------------------------------------------------------------
# the three symmetric hull elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricPoint:
    """A mirror-symmetric hull element with its axis location.

    axis_site is the center letter's site for the singly-symmetric
    elements; the doubly-symmetric one reflects between sites -1 and 0.
    """

    which: str  # "AA", "A" or "B"
    theta: QuadNumber
    point: HullPoint
    axis_site: Optional[int]  # None for AA (axis between -1 and 0)
    center_letter: Optional[str]

    def flank(self, radius: int) -> Window:
        alpha = AlphaSpec.golden()
        if self.axis_site is None:
            return window(self.point, alpha, -radius, radius - 1)
        return window(self.point, alpha, self.axis_site - radius, self.axis_site + radius)

    def is_mirror_symmetric(self, radius: int) -> bool:
        w = self.flank(radius)
        return w.word.letters == w.word.letters[::-1]

    def to_dict(self, places: int = 12) -> dict:
        return {
            "which": self.which,
            "theta": {"expr": self.theta.expr(), "decimal": self.theta.decimal(places)},
            "axis_site": self.axis_site,
            "center_letter": self.center_letter,
        }


def symmetric_point(which: str) -> SymmetricPoint:
    """The symmetric element: AA at theta = 1/2 (axis between -1 and 0),
    A at theta = alpha/2 (center letter 1 at site -1), and B at
    theta = 1/2 - 3 alpha/2 (center letter 0 at site +1)."""
    alpha_val = GOLDEN_ALPHA
    if which == "AA":
        theta = QuadNumber(1, 0, 2, 1)
        axis: Optional[int] = None
        center = None
    elif which == "A":
        theta = (alpha_val / 2).frac()
        axis = -1
        center = "A"
    elif which == "B":
        theta = (QuadNumber(1, 0, 2, 1) - alpha_val * QuadNumber(3, 0, 2, 1)).frac()
        axis = 1
        center = "B"
    else:
        raise ValueError("which must be 'AA', 'A' or 'B'")
    return SymmetricPoint(which, theta, HullPoint.regular(theta), axis, center)


# ---------------------------------------------------------------------------
# the substitution generating the right half of the AA element
# ---------------------------------------------------------------------------

_SIGMA = {"A": "Ab", "a": "Ba", "B": "A", "b": "a"}


def sigma_apply(w: PrimedWord) -> PrimedWord:
    """One application of A -> AB', A' -> BA', B -> A, B' -> A'."""
    return PrimedWord("".join(_SIGMA[ch] for ch in w.letters))


def sigma_fixed_point(length: int) -> PrimedWord:
    """Iterate the substitution from A until at least `length` letters stabilize."""
    if length < 1:
        raise ValueError("length must be >= 1")
    w = PrimedWord("A")
    while len(w) < length:
        nxt = sigma_apply(w)
        if not nxt.letters.startswith(w.letters):
            raise ArithmeticError("substitution lost prefix stability")
        w = nxt
    return PrimedWord(w.letters[:length])


def t_recursion(n: int) -> PrimedWord:
    """t_0 = B, t_1 = A, t_{m+1} = t_m bar(t_{m-1})."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prev, cur = PrimedWord("B"), PrimedWord("A")
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur + prev.bar()
    return cur


# ---------------------------------------------------------------------------
# the identity battery relating t', h, and pi
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    lhs: str
    rhs: str


@dataclass(frozen=True)
class Lemma42Report:
    n: int
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "lhs": c.lhs, "rhs": c.rhs}
                for c in self.checks
            ],
        }


def lemma42_check(n: int) -> Lemma42Report:
    """Verify the three projection identities tying t'_{3n+2..3n+4} to the
    symmetric halves (odd n as stated; letters exchanged for even n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha = AlphaSpec.golden()
    ab, ba = ("10", "01") if n % 2 == 1 else ("01", "10")
    h32 = h_word(3 * n + 2).h.letters
    h35 = h_word(3 * n + 5).h.letters
    pi31, _ = palindrome_part(alpha, 3 * n + 1)
    tp = {m: t_recursion(m).project().letters for m in (3 * n + 2, 3 * n + 3, 3 * n + 4)}
    checks = []
    rhs1 = h32 + ba + h32[::-1]
    checks.append(IdentityCheck("t'_{3n+2}", tp[3 * n + 2] == rhs1, tp[3 * n + 2], rhs1))
    rhs2 = h32 + ba + pi31.letters + ab + h32[::-1]
    checks.append(IdentityCheck("t'_{3n+3}", tp[3 * n + 3] == rhs2, tp[3 * n + 3], rhs2))
    rhs3a = h32 + ba + h35[::-1]
    rhs3b = h35 + ab + h32[::-1]
    checks.append(
        IdentityCheck(
            "t'_{3n+4}",
            tp[3 * n + 4] == rhs3a and tp[3 * n + 4] == rhs3b,
            tp[3 * n + 4],
            rhs3a,
        )
    )
    return Lemma42Report(n, tuple(checks))
