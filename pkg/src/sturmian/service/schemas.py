"""Request and response models for the HTTP service and the CLI client.

Every numeric quantity is reported as an exact field expression together
with a decimal approximation of stated precision.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

DEFAULT_PLACES = 12


class ExactValue(BaseModel):
    expr: str
    decimal: str
    places: int = DEFAULT_PLACES


class IntervalValue(BaseModel):
    lo: ExactValue
    hi: ExactValue
    width: ExactValue


class PointSpec(BaseModel):
    """A hull point: an exact theta or a primed shift."""

    theta: Optional[str] = Field(None, description="rational '1/2' or 'quad:a,b,c,d'")
    prime: Optional[int] = Field(None, description="m for the primed point shifted by m")

    @model_validator(mode="after")
    def _one_of(self) -> "PointSpec":
        if (self.theta is None) == (self.prime is None):
            raise ValueError("give exactly one of theta or prime")
        return self


# -- word -------------------------------------------------------------------


class WordRequest(BaseModel):
    alpha: str = "golden"
    n: Optional[int] = Field(None, description="index of the canonical word s_n")
    point: Optional[PointSpec] = None
    lo: Optional[int] = None
    hi: Optional[int] = None
    display: Literal["01", "AB"] = "01"

    @model_validator(mode="after")
    def _mode(self) -> "WordRequest":
        if (self.n is None) == (self.point is None):
            raise ValueError("give either n (canonical word) or point with lo/hi (window)")
        if self.point is not None and (self.lo is None or self.hi is None):
            raise ValueError("window mode needs lo and hi")
        return self


class WordResponse(BaseModel):
    alpha: str
    kind: Literal["canonical", "window"]
    n: Optional[int] = None
    start: Optional[int] = None
    letters: str
    length: int
    palindromic_prefix: Optional[str] = None
    suffix: Optional[str] = None


# -- partition ----------------------------------------------------------------


class PartitionRequest(BaseModel):
    alpha: str = "golden"
    point: PointSpec
    level: int = Field(ge=1)
    radius: int = Field(ge=1)


class BlockModel(BaseModel):
    label: str
    start: int
    length: int


class IsolationModel(BaseModel):
    ok: bool
    adjacent_separators: list[int]
    bad_runs: list[list[int]]
    interior_run_lengths: list[int]


class PartitionResponse(BaseModel):
    alpha: str
    level: int
    blocks: list[BlockModel]
    left_margin: Optional[list[int]]
    right_margin: Optional[list[int]]
    isolation: IsolationModel


# -- embed --------------------------------------------------------------------


class EmbedRequest(BaseModel):
    alpha: str = "golden"
    point: PointSpec
    length: int = Field(ge=1, le=10_000)


class EmbedResponse(BaseModel):
    alpha: str
    ops: str
    copies: Optional[list[Optional[int]]] = None


# -- invert -------------------------------------------------------------------


class InvertRequest(BaseModel):
    ops: str
    lo: Optional[int] = None
    hi: Optional[int] = None
    letter_limit: int = Field(2000, ge=1)


class TailModel(BaseModel):
    trailing_r: int
    shift_m: int
    completions: list[str]


class InvertResponse(BaseModel):
    ops: str
    level: int
    block_start: str  # may exceed JSON-safe integers; serialized as decimal string
    determined_lo: str
    determined_hi: str
    window_start: Optional[int] = None
    letters: Optional[str] = None
    tail: TailModel


# -- theta --------------------------------------------------------------------


class ThetaRequest(BaseModel):
    ops: str
    include_partials: bool = False


class ThetaResponse(BaseModel):
    ops: str
    interval: IntervalValue
    midpoint: ExactValue
    series_value: ExactValue
    series_value_mod1: ExactValue
    partials: Optional[list[ExactValue]] = None


# -- classify -----------------------------------------------------------------


class ClassifyRequest(BaseModel):
    alpha: str = "golden"
    n: int = Field(ge=2)
    include_occurrences: bool = True


class OccurrenceModel(BaseModel):
    word: str
    cls: str
    starts_before_f: list[int]
    overlaps: list[int]
    distances: list[int]


class FrequencyModel(BaseModel):
    A: Optional[ExactValue]
    B: Optional[ExactValue]
    C: Optional[ExactValue]


class ClassifyResponse(BaseModel):
    alpha: str
    n: int
    k: int
    j: int
    case: str
    l: Optional[int]
    f: int
    sizes: list[int]
    classes: dict[str, list[str]]
    frequencies: FrequencyModel
    label_sequence: str
    occurrences: Optional[list[OccurrenceModel]] = None


# -- exhaust ------------------------------------------------------------------


class ExhaustRequest(BaseModel):
    alpha: str = "golden"
    n: int = Field(ge=2)


class ExhaustResponse(BaseModel):
    alpha: str
    n: int
    f: int
    g: int


# -- gaps ---------------------------------------------------------------------


class GapsRequest(BaseModel):
    alpha: str = "golden"
    n: int = Field(ge=1)
    include_gaps: bool = False


class DistinctGap(BaseModel):
    width: ExactValue
    multiplicity: int


class GapsResponse(BaseModel):
    alpha: str
    n: int
    gap_count: int
    distinct: list[DistinctGap]
    gaps: Optional[list[IntervalValue]] = None


# -- measure ------------------------------------------------------------------


class MeasureRequest(BaseModel):
    p: str = Field(description="'1/tau' or an exact rational such as '9/20' or '0.45'")
    action: Literal["cylinder", "cdf", "exponent", "mc"]
    ops: Optional[str] = None
    x: Optional[str] = None
    eps: str = "1e-9"
    depth: int = Field(1000, ge=1)
    trials: int = Field(10_000, ge=1)
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _consistent(self) -> "MeasureRequest":
        if self.action == "cylinder" and not self.ops:
            raise ValueError("action 'cylinder' needs ops")
        if self.action == "cdf" and self.x is None:
            raise ValueError("action 'cdf' needs x")
        if self.action == "mc" and self.seed is None:
            raise ValueError("action 'mc' needs a seed for reproducibility")
        return self


class CylinderPart(BaseModel):
    interval: IntervalValue
    mass: ExactValue
    k: int
    l: int
    density_ratio: ExactValue


class CdfPart(BaseModel):
    lo: ExactValue
    hi: ExactValue
    refinements: int


class ExponentPart(BaseModel):
    alpha_exp: float
    x: float
    residual: float
    in_regime: bool


class McPart(BaseModel):
    depth: int
    trials: int
    seed: int
    mean_local_dimension: float
    std_local_dimension: float
    ci95_half_width: float
    mean_l_fraction: float
    fraction_exceeding: Optional[float]


class MeasureResponse(BaseModel):
    p: str
    action: str
    cylinder: Optional[CylinderPart] = None
    cdf: Optional[CdfPart] = None
    exponent: Optional[ExponentPart] = None
    mc: Optional[McPart] = None


# -- symmetry -----------------------------------------------------------------


class SymmetryRequest(BaseModel):
    action: Literal["point", "h", "sigma", "lemma42"]
    which: Optional[Literal["AA", "A", "B"]] = None
    n: Optional[int] = None
    length: Optional[int] = None
    radius: int = Field(20, ge=1)

    @model_validator(mode="after")
    def _consistent(self) -> "SymmetryRequest":
        if self.action == "point" and self.which is None:
            raise ValueError("action 'point' needs which in AA/A/B")
        if self.action in ("h", "lemma42") and self.n is None:
            raise ValueError(f"action '{self.action}' needs n")
        if self.action == "sigma" and self.length is None:
            raise ValueError("action 'sigma' needs length")
        return self


class SymmetryPointPart(BaseModel):
    which: str
    theta: ExactValue
    axis_site: Optional[int]
    center_letter: Optional[str]
    flank: str
    mirror_symmetric: bool


class HPart(BaseModel):
    n: int
    h: str
    center: Optional[str]
    family: int
    recursion_agrees: bool


class SigmaPart(BaseModel):
    length: int
    primed: str
    projection: str


class IdentityModel(BaseModel):
    name: str
    passed: bool
    lhs: str
    rhs: str


class Lemma42Part(BaseModel):
    n: int
    ok: bool
    checks: list[IdentityModel]


class SymmetryResponse(BaseModel):
    action: str
    point: Optional[SymmetryPointPart] = None
    h: Optional[HPart] = None
    sigma: Optional[SigmaPart] = None
    lemma42: Optional[Lemma42Part] = None


# -- localmove ----------------------------------------------------------------


class LocalMoveRequest(BaseModel):
    alpha: str = "golden"
    action: Literal["witness", "exchange", "form"]
    point: PointSpec
    site: int = 0
    cap: int = Field(10_000, ge=2)
    level: Optional[int] = None
    radius: int = Field(30, ge=1)

    @model_validator(mode="after")
    def _consistent(self) -> "LocalMoveRequest":
        if self.action == "form" and self.level is None:
            raise ValueError("action 'form' needs level")
        return self


class WitnessPart(BaseModel):
    found: bool
    site: int
    cap: int
    factor: Optional[str]
    start: Optional[int]
    length: Optional[int]


class ExchangePart(BaseModel):
    site: int
    window_start: int
    before: str
    after: str


class FormPart(BaseModel):
    level: int
    site: int
    form: str
    detail: str


class LocalMoveResponse(BaseModel):
    alpha: str
    action: str
    witness: Optional[WitnessPart] = None
    exchange: Optional[ExchangePart] = None
    form: Optional[FormPart] = None


# -- verify -------------------------------------------------------------------


class VerifyRequest(BaseModel):
    only: Optional[list[str]] = None


class CheckModel(BaseModel):
    criterion: int
    name: str
    passed: bool
    detail: str
    seconds: float


class VerifyResponse(BaseModel):
    ok: bool
    results: list[CheckModel]


SCHEMA_MODELS = {
    "word": (WordRequest, WordResponse),
    "partition": (PartitionRequest, PartitionResponse),
    "embed": (EmbedRequest, EmbedResponse),
    "invert": (InvertRequest, InvertResponse),
    "theta": (ThetaRequest, ThetaResponse),
    "classify": (ClassifyRequest, ClassifyResponse),
    "exhaust": (ExhaustRequest, ExhaustResponse),
    "gaps": (GapsRequest, GapsResponse),
    "measure": (MeasureRequest, MeasureResponse),
    "symmetry": (SymmetryRequest, SymmetryResponse),
    "localmove": (LocalMoveRequest, LocalMoveResponse),
    "verify": (VerifyRequest, VerifyResponse),
}


def json_schemas() -> dict:
    """The shipped JSON schemas, one request/response pair per endpoint."""
    return {
        name: {
            "request": req.model_json_schema(),
            "response": resp.model_json_schema(),
        }
        for name, (req, resp) in SCHEMA_MODELS.items()
    }
