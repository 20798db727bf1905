"""Exact arithmetic for rotation numbers and circle points.

Two backends drive every letter decision in the package:

* quadratic irrationals ``(a + b*sqrt(d))/c`` with fully exact field
  arithmetic and decidable comparisons;
* arbitrary continued-fraction coefficient streams, compared through
  certified convergent brackets that are refined until the sign of the
  needed difference is beyond doubt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence, Union

from .errors import MixedField, StreamTooShort, UndecidedAtBudget

Rational = Union[int, Fraction]
Exact = Union[int, Fraction, "QuadNumber"]


def _square_free(d: int) -> tuple[int, int]:
    """Decompose d = s*s*m with m square-free; returns (s, m)."""
    s, m, n = 1, 1, d
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            s *= f ** (e // 2)
            if e % 2:
                m *= f
        f += 1 if f == 2 else 2
    return s, m * n


class QuadNumber:
    """An element (a + b*sqrt(d))/c of a real quadratic field.

    Invariants after construction: c > 0, gcd(a, b, c) = 1, d square-free;
    rationals are canonicalized to b = 0, d = 1.  Values are immutable and
    hashable, and all comparisons are exact.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int = 0, c: int = 1, d: int = 1) -> None:
        if c == 0:
            raise ZeroDivisionError("denominator c must be nonzero")
        if d <= 0 and b != 0:
            raise ValueError("radicand d must be positive")
        if c < 0:
            a, b, c = -a, -b, -c
        if b != 0:
            s, m = _square_free(d)
            b, d = b * s, m
            if d == 1:
                a, b = a + b, 0
        if b == 0:
            d = 1
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("QuadNumber is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_fraction(cls, x: Rational) -> "QuadNumber":
        fr = Fraction(x)
        return cls(fr.numerator, 0, fr.denominator, 1)

    @classmethod
    def sqrt_of(cls, d: int) -> "QuadNumber":
        return cls(0, 1, 1, d)

    # -- predicates ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.a, self.c)

    # -- coercion ------------------------------------------------------

    def _coerce(self, other: Exact) -> "QuadNumber":
        if isinstance(other, QuadNumber):
            if other.b != 0 and self.b != 0 and other.d != self.d:
                raise MixedField(f"radicands differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNumber.from_fraction(other)
        return NotImplemented  # type: ignore[return-value]

    def _field_d(self, other: "QuadNumber") -> int:
        return self.d if self.b != 0 else other.d

    # -- ring operations ------------------------------------------------

    def __add__(self, other: Exact) -> "QuadNumber":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._field_d(o)
        return QuadNumber(
            self.a * o.c + o.a * self.c,
            self.b * o.c + o.b * self.c,
            self.c * o.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadNumber":
        return QuadNumber(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other: Exact) -> "QuadNumber":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Exact) -> "QuadNumber":
        return (-self) + other

    def __mul__(self, other: Exact) -> "QuadNumber":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._field_d(o)
        return QuadNumber(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            self.c * o.c,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadNumber":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return QuadNumber(self.c * self.a, -self.c * self.b, norm, self.d)

    def __truediv__(self, other: Exact) -> "QuadNumber":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Exact) -> "QuadNumber":
        return self.inverse() * other

    def __pow__(self, n: int) -> "QuadNumber":
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadNumber(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "QuadNumber":
        return QuadNumber(self.a, -self.b, self.c, self.d)

    # -- order ----------------------------------------------------------

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs, rhs = a * a, b * b * d
        if lhs == rhs:  # would make sqrt(d) rational
            raise ArithmeticError(f"inconsistent state: {self!r}")
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def _cmp(self, other: Exact) -> int:
        return (self - other).sign()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (QuadNumber, int, Fraction)):
            return NotImplemented
        try:
            return self._cmp(other) == 0
        except MixedField:
            return False

    def __lt__(self, other: Exact) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Exact) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Exact) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Exact) -> bool:
        return self._cmp(other) >= 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.d))

    # -- floor / fractional part ----------------------------------------

    def floor(self) -> int:
        a, b, c, d = self.a, self.b, self.c, self.d
        if b == 0:
            return a // c
        s = math.isqrt(b * b * d)
        t = a + (s if b > 0 else -s - 1)  # floor(a + b*sqrt(d)), strict: irrational
        n = t // c
        while self._cmp(n + 1) >= 0:
            n += 1
        while self._cmp(n) < 0:
            n -= 1
        return n

    def frac(self) -> "QuadNumber":
        return self - self.floor()

    # -- approximation ----------------------------------------------------

    def approx_fraction(self, digits: int = 30) -> Fraction:
        """A rational within 10**-digits of the exact value."""
        scale = 10 ** digits
        if self.b == 0:
            return Fraction(self.a, self.c)
        s = math.isqrt(self.b * self.b * self.d * scale * scale)
        if self.b < 0:
            s = -s
        return Fraction(self.a * scale + s, self.c * scale)

    def __float__(self) -> float:
        return float(self.approx_fraction(30))

    def decimal(self, places: int = 12) -> str:
        fr = self.approx_fraction(places + 3)
        neg = fr < 0
        fr = -fr if neg else fr
        scaled = (fr.numerator * 10 ** places) // fr.denominator
        ip, fp = divmod(scaled, 10 ** places)
        return f"{'-' if neg else ''}{ip}.{fp:0{places}d}"

    # -- display -----------------------------------------------------------

    def expr(self) -> str:
        if self.b == 0:
            return f"{self.a}/{self.c}" if self.c != 1 else str(self.a)
        core = f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d})"
        return f"({core})/{self.c}" if self.c != 1 else f"({core})"

    def __repr__(self) -> str:
        return f"QuadNumber({self.expr()} ~ {self.decimal(6)})"


#: tau = (1 + sqrt 5)/2, the golden ratio.
TAU = QuadNumber(1, 1, 2, 5)
#: 1/tau = tau - 1 = [1, 1, 1, ...], the golden rotation number.
GOLDEN_ALPHA = QuadNumber(-1, 1, 2, 5)
ONE_HALF = QuadNumber(1, 0, 2, 1)


def exact_compare(x: Exact, y: Exact) -> int:
    """Exact trichotomy: -1, 0 or +1.  Raises MixedField on incompatible radicands."""
    if not isinstance(x, QuadNumber):
        x = QuadNumber.from_fraction(x)
    return x._cmp(y)


# ---------------------------------------------------------------------------
# continued fractions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergentRow:
    n: int
    a: int | None
    p: int
    q: int


@dataclass(frozen=True)
class ConvergentTable:
    """Rows (n, a_n, p_n, q_n) for n = -1 .. N with the standard seeds."""

    rows: tuple[ConvergentRow, ...]

    def q(self, n: int) -> int:
        return self.rows[n + 1].q

    def p(self, n: int) -> int:
        return self.rows[n + 1].p

    def a(self, n: int) -> int:
        a = self.rows[n + 1].a
        assert a is not None
        return a

    def __len__(self) -> int:
        return len(self.rows)


class _CFSource:
    """Cached access to a stream a_1, a_2, ... of positive integers."""

    def __init__(
        self,
        prefix: Sequence[int] = (),
        period: Sequence[int] = (),
        factory: Callable[[], Iterator[int]] | None = None,
    ) -> None:
        self.prefix = tuple(int(a) for a in prefix)
        self.period = tuple(int(a) for a in period)
        self.factory = factory
        if factory is None and not self.period and not self.prefix:
            raise ValueError("empty coefficient description")
        if any(a < 1 for a in self.prefix + self.period):
            raise ValueError("continued fraction coefficients must be >= 1")
        self._cache: list[int] = []
        self._iter: Iterator[int] | None = None

    def coefficient(self, i: int) -> int:
        """a_i, 1-based."""
        if i < 1:
            raise IndexError("coefficient indices start at 1")
        if self.factory is None:
            if i <= len(self.prefix):
                return self.prefix[i - 1]
            if not self.period:
                raise StreamTooShort(f"stream has only {len(self.prefix)} terms")
            return self.period[(i - 1 - len(self.prefix)) % len(self.period)]
        while len(self._cache) < i:
            if self._iter is None:
                self._iter = self.factory()
                self._cache = []
            try:
                self._cache.append(int(next(self._iter)))
            except StopIteration:
                raise StreamTooShort(
                    f"stream exhausted after {len(self._cache)} terms"
                ) from None
            if self._cache[-1] < 1:
                raise ValueError("continued fraction coefficients must be >= 1")
        return self._cache[i - 1]

    @property
    def is_periodic(self) -> bool:
        return self.factory is None and bool(self.period)


def _periodic_value(prefix: Sequence[int], period: Sequence[int]) -> QuadNumber:
    """Exact value of [prefix..., (period...)^infinity] in (0, 1)."""
    # Moebius matrix of z -> 1/(c + z) is [[0, 1], [1, c]]; compose over the period.
    p00, p01, p10, p11 = 1, 0, 0, 1
    for c in period:
        p00, p01, p10, p11 = p01, p00 + c * p01, p11, p10 + c * p11
    # y = (p00*y + p01) / (p10*y + p11)
    disc = (p11 - p00) ** 2 + 4 * p10 * p01
    y = QuadNumber(p00 - p11, 1, 2 * p10, disc)
    for c in reversed(tuple(prefix)):
        y = (y + c).inverse()
    return y


class AlphaSpec:
    """An irrational rotation number in (0, 1).

    Backends: an exact quadratic irrational, or a continued-fraction
    coefficient stream (eventually periodic or given by a generator
    factory).  Quadratic backends answer every comparison exactly; stream
    backends refine convergent brackets until the comparison is certain.
    """

    def __init__(
        self,
        quad: QuadNumber | None = None,
        source: _CFSource | None = None,
        description: str = "",
    ) -> None:
        if (quad is None) == (source is None):
            raise ValueError("exactly one backend required")
        if quad is not None:
            if quad.is_rational:
                raise ValueError("rotation number must be irrational")
            if not (QuadNumber(0) < quad < QuadNumber(1)):
                raise ValueError("rotation number must lie in (0, 1)")
        self._quad = quad
        self._source = source
        self.description = description or (quad.expr() if quad else "cf-stream")
        self._coeffs: list[int] = []  # cached a_1, a_2, ...
        self._cf_state: QuadNumber | None = None  # remainder for quadratic expansion
        self._pq: list[tuple[int, int]] = [(1, 0), (0, 1)]  # (p, q) for n = -1, 0

    # -- constructors ---------------------------------------------------

    @classmethod
    def golden(cls) -> "AlphaSpec":
        return cls(quad=GOLDEN_ALPHA, description="golden")

    @classmethod
    def quadratic(cls, value: QuadNumber) -> "AlphaSpec":
        return cls(quad=value)

    @classmethod
    def from_cf(cls, prefix: Sequence[int] = (), period: Sequence[int] = ()) -> "AlphaSpec":
        if not period:
            raise ValueError("a bare finite prefix is rational; give a period")
        src = _CFSource(prefix=prefix, period=period)
        desc = "cf:" + ",".join(map(str, prefix)) + "(" + ",".join(map(str, period)) + ")"
        return cls(source=src, description=desc)

    @classmethod
    def from_cf_callable(cls, factory: Callable[[], Iterator[int]]) -> "AlphaSpec":
        return cls(source=_CFSource(factory=factory), description="cf:<generator>")

    @classmethod
    def parse(cls, text: str) -> "AlphaSpec":
        """Parse 'golden', 'quad:a,b,c,d' or 'cf:a1,a2,...(p1,p2,...)'."""
        text = text.strip()
        if text == "golden":
            return cls.golden()
        if text.startswith("quad:"):
            parts = [int(t) for t in text[5:].split(",")]
            if len(parts) != 4:
                raise ValueError("quad spec needs four integers a,b,c,d")
            return cls.quadratic(QuadNumber(*parts))
        if text.startswith("cf:"):
            body = text[3:]
            period: tuple[int, ...] = ()
            if "(" in body:
                head, _, tail = body.partition("(")
                if not tail.endswith(")"):
                    raise ValueError("unterminated period in cf spec")
                period = tuple(int(t) for t in tail[:-1].split(",") if t)
                body = head
            prefix = tuple(int(t) for t in body.split(",") if t)
            return cls.from_cf(prefix=prefix, period=period)
        raise ValueError(f"cannot parse rotation number spec {text!r}")

    # -- backend views ----------------------------------------------------

    @property
    def is_quadratic(self) -> bool:
        return self._quad is not None

    @property
    def value(self) -> QuadNumber:
        if self._quad is None:
            raise ValueError("stream-backed rotation number has no exact value")
        return self._quad

    def to_quadratic(self) -> QuadNumber | None:
        """Exact value when available (quadratic or eventually-periodic stream)."""
        if self._quad is not None:
            return self._quad
        assert self._source is not None
        if self._source.is_periodic:
            return _periodic_value(self._source.prefix, self._source.period)
        return None

    def is_golden(self) -> bool:
        q = self.to_quadratic()
        return q is not None and q == GOLDEN_ALPHA

    # -- continued fraction of the value ----------------------------------

    def coefficient(self, i: int) -> int:
        """a_i of the expansion [a_1, a_2, ...], 1-based."""
        if i < 1:
            raise IndexError("coefficient indices start at 1")
        if self._source is not None:
            return self._source.coefficient(i)
        while len(self._coeffs) < i:
            x = self._cf_state if self._cf_state is not None else self._quad
            assert x is not None
            inv = x.inverse()
            a = inv.floor()
            self._coeffs.append(a)
            self._cf_state = inv - a
        return self._coeffs[i - 1]

    def _extend_pq(self, n: int) -> None:
        while len(self._pq) < n + 2:
            k = len(self._pq) - 1  # computing (p_k, q_k)
            a = self.coefficient(k)
            p1, q1 = self._pq[-1]
            p0, q0 = self._pq[-2]
            self._pq.append((a * p1 + p0, a * q1 + q0))

    def convergent(self, n: int) -> tuple[int, int]:
        """(p_n, q_n) with seeds (1, 0) at n = -1 and (0, 1) at n = 0."""
        if n < -1:
            raise IndexError("convergent index starts at -1")
        self._extend_pq(n)
        return self._pq[n + 1]

    def q(self, n: int) -> int:
        return self.convergent(n)[1]

    def level_for(self, n: int) -> tuple[int, int]:
        """k and j with q_k <= n <= q_{k+1} - 1 and j = n - q_k (needs n >= 1)."""
        if n < 1:
            raise ValueError("needs n >= 1")
        k = 0
        while not (self.q(k) <= n <= self.q(k + 1) - 1):
            k += 1
        return k, n - self.q(k)

    # -- certified comparisons ---------------------------------------------

    def _bracket(self, m: int) -> tuple[Fraction, Fraction]:
        """An interval around the value from convergents m, m+1 (m >= 1)."""
        p1, q1 = self.convergent(m)
        p2, q2 = self.convergent(m + 1)
        lo, hi = Fraction(p1, q1), Fraction(p2, q2)
        return (lo, hi) if lo < hi else (hi, lo)

    def compare_linear(self, k: int, r: Rational, budget: int = 500) -> int:
        """Certified sign of k*alpha - r (k integer, r rational).

        Zero is reported only when k = 0; otherwise the difference is
        irrational and refinement terminates.
        """
        r = Fraction(r)
        if k == 0:
            return (r < 0) - (r > 0)
        if self._quad is not None:
            return (self._quad * k - r).sign()
        m = 1
        for _ in range(budget):
            lo, hi = self._bracket(m)
            vlo, vhi = (k * lo - r, k * hi - r) if k > 0 else (k * hi - r, k * lo - r)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            m += 1
        raise UndecidedAtBudget(f"sign of {k}*alpha - {r} undecided after {budget} refinements")

    def floor_linear(self, k: int, t: Rational, budget: int = 500) -> int:
        """floor(k*alpha + t) for rational t, certified."""
        t = Fraction(t)
        if k == 0:
            return math.floor(t)
        m = 1
        for _ in range(budget):
            lo, hi = self._bracket(m)
            vlo, vhi = (k * lo + t, k * hi + t) if k > 0 else (k * hi + t, k * lo + t)
            flo, fhi = math.floor(vlo), math.floor(vhi)
            if flo == fhi:
                return flo
            m += 1
        raise UndecidedAtBudget(f"floor({k}*alpha + {t}) undecided after {budget} refinements")

    def approx_float(self) -> float:
        q = self.to_quadratic()
        if q is not None:
            return float(q)
        lo, hi = self._bracket(25)
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        return f"AlphaSpec({self.description})"


def cf_convergents(alpha: AlphaSpec, n: int) -> ConvergentTable:
    """The table of rows (-1 .. n) of the convergent recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rows = [ConvergentRow(-1, None, 1, 0), ConvergentRow(0, None, 0, 1)]
    for k in range(1, n + 1):
        a = alpha.coefficient(k)
        p, q = alpha.convergent(k)
        rows.append(ConvergentRow(k, a, p, q))
    return ConvergentTable(tuple(rows))


# ---------------------------------------------------------------------------
# letter decisions
# ---------------------------------------------------------------------------


def letter_decision(
    alpha: AlphaSpec,
    theta: Exact,
    n: int,
    side: str = "right",
    budget: int = 500,
) -> int:
    """The indicator letter of n*alpha + theta against the arc of length alpha.

    side='right' uses the right-closed arc [1-alpha, 1) with the mod-1
    representative in [0, 1); side='left' uses (1-alpha, 1] with the
    representative in (0, 1], so a fractional part of exactly 0 counts as 1.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    if alpha.is_quadratic:
        a = alpha.value
        if isinstance(theta, (int, Fraction)):
            theta = QuadNumber.from_fraction(theta)
        x = a * n + theta
        f = x.frac()
        if f.sign() == 0:
            return 1 if side == "left" else (1 if a >= 1 else 0)
        # f >= 1 - alpha  <=>  f + alpha >= 1;  strict for the left-closed arc
        s = (f + a - 1).sign()
        return 1 if (s > 0 or (s == 0 and side == "right")) else 0
    if not isinstance(theta, (int, Fraction)):
        raise TypeError("stream-backed alpha needs a rational theta")
    theta = Fraction(theta)
    fl = alpha.floor_linear(n, theta, budget=budget)
    if n == 0 and theta == fl:  # fractional part exactly zero
        return 1 if side == "left" else 0
    # frac >= 1 - alpha  <=>  (n+1)*alpha >= fl + 1 - theta
    s = alpha.compare_linear(n + 1, fl + 1 - theta, budget=budget)
    return 1 if (s > 0 or (s == 0 and side == "right")) else 0
