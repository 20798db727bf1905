"""The measure on the circle induced by random embedding operations.

Drawing R with probability p and L with probability q = 1 - p pushes the
product measure through the coding-interval tree: the cylinder of a
depth-n coding has width tau^-(k + 2l) and mass p^k q^l.  At p = 1/tau
the measure is Lebesgue (mass = width symbolically); in part of the
regime it carries a singular component, diagnosed here numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .arithmetic import GOLDEN_ALPHA, TAU, Exact, QuadNumber
from .embedding import OpSeq, theta_from_opseq
from .errors import DegenerateExponent, EmptyOpSeq
from .intervals import ExactInterval

_ONE = QuadNumber(1)
_INV_TAU = GOLDEN_ALPHA

MassLike = Union[Fraction, QuadNumber]


def _fmt(x: MassLike, places: int = 12) -> dict:
    if isinstance(x, QuadNumber):
        return {"expr": x.expr(), "decimal": x.decimal(places)}
    return {"expr": f"{x.numerator}/{x.denominator}", "decimal": f"{float(x):.{places}f}"}


@dataclass(frozen=True)
class MeasureParams:
    """The single-operation law: P(R) = p, P(L) = 1 - p, exact."""

    p: MassLike

    def __post_init__(self) -> None:
        if not (0 < self.p < 1):
            raise ValueError("p must lie in (0, 1)")

    @classmethod
    def parse(cls, text: str) -> "MeasureParams":
        """Accepts '1/tau', a fraction like '9/20', or a decimal like '0.45'."""
        text = text.strip()
        if text in ("1/tau", "lebesgue"):
            return cls(GOLDEN_ALPHA)
        return cls(Fraction(text))

    @property
    def q(self) -> MassLike:
        return 1 - self.p if isinstance(self.p, Fraction) else _ONE - self.p

    @property
    def is_lebesgue(self) -> bool:
        if isinstance(self.p, QuadNumber):
            return self.p == GOLDEN_ALPHA
        return False

    def mass(self, k: int, l: int) -> MassLike:
        return self.p ** k * self.q ** l

    def describe(self) -> str:
        return "1/tau" if self.is_lebesgue else str(self.p)


@dataclass(frozen=True)
class WeightedInterval:
    """A coding cylinder together with its measure."""

    interval: ExactInterval
    mass: MassLike
    k: int
    l: int

    @property
    def depth(self) -> int:
        return self.k + self.l

    def to_dict(self, places: int = 12) -> dict:
        return {
            "interval": self.interval.to_dict(places),
            "mass": _fmt(self.mass, places),
            "k": self.k,
            "l": self.l,
            "depth": self.depth,
        }


def cylinder_mass(ops: OpSeq, params: MeasureParams) -> WeightedInterval:
    """The theta-interval of the coding prefix with its mass p^#R q^#L."""
    ops.require_nonempty()
    k, l = ops.counts()
    return WeightedInterval(theta_from_opseq(ops), params.mass(k, l), k, l)


def density_ratio(ops: OpSeq, params: MeasureParams) -> MassLike:
    """mass / width, exactly: p^k q^l tau^(k + 2l)."""
    ops.require_nonempty()
    k, l = ops.counts()
    return params.mass(k, l) * TAU ** (k + 2 * l)


def density_ratio_closed_form(ops: OpSeq, params: MeasureParams) -> MassLike:
    """The same ratio via (p tau)^n ((1-p) tau / p)^l; an independent route."""
    ops.require_nonempty()
    k, l = ops.counts()
    n = k + l
    x = params.p * TAU
    return x ** n * (params.q * TAU / params.p) ** l


# ---------------------------------------------------------------------------
# distribution function
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CdfEnclosure:
    lo: MassLike
    hi: MassLike
    refinements: int

    def to_dict(self, places: int = 12) -> dict:
        return {"lo": _fmt(self.lo, places), "hi": _fmt(self.hi, places), "refinements": self.refinements}


@dataclass(frozen=True)
class _Node:
    lo: QuadNumber
    hi: QuadNumber
    anchor_hi: bool
    mass: MassLike

    def children(self, params: MeasureParams) -> tuple["_Node", "_Node"]:
        cut = (
            self.hi - (self.hi - self.lo) * _INV_TAU
            if self.anchor_hi
            else self.lo + (self.hi - self.lo) * _INV_TAU
        )
        if self.anchor_hi:
            r_child = _Node(cut, self.hi, False, self.mass * params.p)
            l_child = _Node(self.lo, cut, True, self.mass * params.q)
        else:
            r_child = _Node(self.lo, cut, True, self.mass * params.p)
            l_child = _Node(cut, self.hi, False, self.mass * params.q)
        return r_child, l_child


def cdf(x: Exact, params: MeasureParams, eps: Fraction = Fraction(1, 10**9)) -> CdfEnclosure:
    """An enclosure of the measure of [0, x), tightened below width eps.

    Sums the masses of maximal cylinders entirely left of x and refines
    the single straddling cylinder; absence of atoms makes the straddled
    mass shrink to zero.
    """
    if isinstance(x, (int, Fraction)):
        x = QuadNumber.from_fraction(x)
    if x < QuadNumber(0) or x > _ONE:
        raise ValueError("x must lie in [0, 1]")
    zero: MassLike = Fraction(0) if isinstance(params.p, Fraction) else QuadNumber(0)
    total = zero
    node = _Node(QuadNumber(0), _ONE, True, params.mass(0, 0))
    steps = 0
    while True:
        if node.hi <= x:
            return CdfEnclosure(total + node.mass, total + node.mass, steps)
        if node.lo >= x:
            return CdfEnclosure(total, total, steps)
        if node.mass < eps:
            return CdfEnclosure(total, total + node.mass, steps)
        r_child, l_child = node.children(params)
        steps += 1
        first, second = (l_child, r_child) if l_child.lo <= r_child.lo else (r_child, l_child)
        if first.hi <= x:
            total = total + first.mass
            node = second
        else:
            node = first


# ---------------------------------------------------------------------------
# singularity exponent
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentResult:
    alpha_exp: float
    x: float
    residual: float
    in_regime: bool  # 1/tau^2 < p < 1/2, where the exponent exceeds 1

    def to_dict(self) -> dict:
        return {
            "alpha_exp": self.alpha_exp,
            "x": self.x,
            "residual": self.residual,
            "in_regime": self.in_regime,
        }


def singularity_exponent(params: MeasureParams) -> ExponentResult:
    """The exponent defined by (tau/x)(tau - x) = x^-alpha with x = p*tau.

    Raises DegenerateExponent at p = 1/tau, where the density ratio is
    identically 1 and no exponent is defined.
    """
    if params.is_lebesgue or params.p == GOLDEN_ALPHA:
        raise DegenerateExponent("p = 1/tau makes the ratio identically 1")
    tau = float(TAU)
    p = float(params.p) if isinstance(params.p, Fraction) else float(params.p)
    x = p * tau
    lhs = (tau / x) * (tau - x)
    alpha_exp = -math.log(lhs) / math.log(x)
    residual = abs(lhs - x ** (-alpha_exp))
    inv_tau_sq = float((TAU ** 2).inverse())
    in_regime = inv_tau_sq < p < 0.5
    return ExponentResult(alpha_exp, x, residual, in_regime)


# ---------------------------------------------------------------------------
# Monte-Carlo local dimension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class McStatistics:
    depth: int
    trials: int
    seed: int
    mean_local_dimension: float
    std_local_dimension: float
    ci95_half_width: float
    mean_l_fraction: float
    fraction_exceeding: Optional[float]  # share of samples with l_n > n / alpha_exp

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "trials": self.trials,
            "seed": self.seed,
            "mean_local_dimension": self.mean_local_dimension,
            "std_local_dimension": self.std_local_dimension,
            "ci95_half_width": self.ci95_half_width,
            "mean_l_fraction": self.mean_l_fraction,
            "fraction_exceeding": self.fraction_exceeding,
        }


def mc_local_dimension(
    params: MeasureParams, depth: int, trials: int, seed: int
) -> McStatistics:
    """Sample codings from the product law and report log-mass / log-width.

    Only the operation counts enter the statistic; codings are sampled
    letter by letter so the draw is exactly the product measure and the
    run is reproducible from the seed.
    """
    if depth < 1 or trials < 1:
        raise ValueError("depth and trials must be >= 1")
    rng = np.random.default_rng(seed)
    p = float(params.p) if isinstance(params.p, Fraction) else float(params.p)
    # rows of R/L draws; True = R
    draws = rng.random((trials, depth)) < p
    k = draws.sum(axis=1)
    l = depth - k
    log_tau = math.log(float(TAU))
    log_p, log_q = math.log(p), math.log(1 - p)
    log_mass = k * log_p + l * log_q
    log_width = -(k + 2 * l) * log_tau
    dims = log_mass / log_width
    mean = float(dims.mean())
    std = float(dims.std(ddof=1)) if trials > 1 else 0.0
    ci = 1.96 * std / math.sqrt(trials)
    try:
        a_exp = singularity_exponent(params).alpha_exp
        frac: Optional[float] = float((l > depth / a_exp).mean())
    except DegenerateExponent:
        frac = None
    return McStatistics(
        depth=depth,
        trials=trials,
        seed=seed,
        mean_local_dimension=mean,
        std_local_dimension=std,
        ci95_half_width=ci,
        mean_l_fraction=float(l.mean()) / depth,
        fraction_exceeding=frac,
    )
