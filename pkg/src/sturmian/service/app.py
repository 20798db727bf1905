"""The HTTP service: one endpoint per operation, plus the verify battery.

Handlers are plain functions from request model to response model; the
CLI calls them in-process and the FastAPI app exposes them over HTTP.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import verification
from ..arithmetic import AlphaSpec, QuadNumber
from ..embedding import OpSeq, phi_prefix, reconstruct, theta_from_opseq, theta_series
from ..errors import SturmianError
from ..factors import classify, exhausting_point, g_point
from ..intervals import ExactInterval, three_distance
from ..localmove import break_witness, exchange, lemma52_form
from ..measure import (
    MeasureParams,
    cdf,
    cylinder_mass,
    density_ratio,
    mc_local_dimension,
    singularity_exponent,
)
from ..partition import partition_window, verify_isolation
from ..symmetry import h_word, h_word_by_recursion, lemma42_check, sigma_fixed_point, symmetric_point
from ..words import HullPoint, build_sn, palindrome_part, window
from .schemas import (
    DEFAULT_PLACES,
    BlockModel,
    CdfPart,
    CheckModel,
    ClassifyRequest,
    ClassifyResponse,
    CylinderPart,
    DistinctGap,
    EmbedRequest,
    EmbedResponse,
    ExactValue,
    ExchangePart,
    ExhaustRequest,
    ExhaustResponse,
    ExponentPart,
    FormPart,
    FrequencyModel,
    GapsRequest,
    GapsResponse,
    HPart,
    IdentityModel,
    IntervalValue,
    InvertRequest,
    InvertResponse,
    IsolationModel,
    Lemma42Part,
    LocalMoveRequest,
    LocalMoveResponse,
    McPart,
    MeasureRequest,
    MeasureResponse,
    OccurrenceModel,
    PartitionRequest,
    PartitionResponse,
    PointSpec,
    SigmaPart,
    SymmetryPointPart,
    SymmetryRequest,
    SymmetryResponse,
    TailModel,
    ThetaRequest,
    ThetaResponse,
    VerifyRequest,
    VerifyResponse,
    WitnessPart,
    WordRequest,
    WordResponse,
)


def _exact(x, places: int = DEFAULT_PLACES) -> ExactValue:
    if isinstance(x, QuadNumber):
        return ExactValue(expr=x.expr(), decimal=x.decimal(places), places=places)
    fr = Fraction(x)
    dec = f"{fr.numerator * 10 ** places // fr.denominator}"
    whole, frac_part = dec[: -places] or "0", dec[-places:].rjust(places, "0")
    return ExactValue(expr=f"{fr.numerator}/{fr.denominator}", decimal=f"{whole}.{frac_part}", places=places)


def _interval(iv: ExactInterval, places: int = DEFAULT_PLACES) -> IntervalValue:
    return IntervalValue(lo=_exact(iv.lo, places), hi=_exact(iv.hi, places), width=_exact(iv.width, places))


def _point(spec: PointSpec) -> HullPoint:
    if spec.prime is not None:
        return HullPoint.prime(spec.prime)
    assert spec.theta is not None
    return HullPoint.parse(spec.theta)


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------


def handle_word(req: WordRequest) -> WordResponse:
    alpha = AlphaSpec.parse(req.alpha)
    if req.n is not None:
        w = build_sn(alpha, req.n)
        pi = suffix = None
        if req.n >= 1 and len(w) >= 2:
            p, s = palindrome_part(alpha, req.n)
            pi, suffix = p.display(req.display), s.display(req.display)
        return WordResponse(
            alpha=req.alpha,
            kind="canonical",
            n=req.n,
            letters=w.display(req.display),
            length=len(w),
            palindromic_prefix=pi,
            suffix=suffix,
        )
    assert req.point is not None and req.lo is not None and req.hi is not None
    win = window(_point(req.point), alpha, req.lo, req.hi)
    return WordResponse(
        alpha=req.alpha,
        kind="window",
        start=win.start,
        letters=win.word.display(req.display),
        length=len(win),
    )


def handle_partition(req: PartitionRequest) -> PartitionResponse:
    alpha = AlphaSpec.parse(req.alpha)
    view = partition_window(_point(req.point), alpha, req.level, req.radius)
    iso = verify_isolation(view, alpha)
    return PartitionResponse(
        alpha=req.alpha,
        level=view.level,
        blocks=[
            BlockModel(label=f"s{b.label}", start=b.start, length=b.length(alpha))
            for b in view.blocks
        ],
        left_margin=list(view.left_margin) if view.left_margin else None,
        right_margin=list(view.right_margin) if view.right_margin else None,
        isolation=IsolationModel(
            ok=iso.ok,
            adjacent_separators=list(iso.adjacent_separators),
            bad_runs=[list(t) for t in iso.bad_runs],
            interior_run_lengths=list(iso.interior_run_lengths),
        ),
    )


def handle_embed(req: EmbedRequest) -> EmbedResponse:
    alpha = AlphaSpec.parse(req.alpha)
    ops = phi_prefix(_point(req.point), alpha, req.length)
    return EmbedResponse(
        alpha=req.alpha,
        ops=ops.ops,
        copies=list(ops.copies) if ops.copies is not None else None,
    )


def handle_invert(req: InvertRequest) -> InvertResponse:
    rec = reconstruct(OpSeq.parse(req.ops))
    lo = rec.lo if req.lo is None else max(req.lo, rec.lo)
    hi = rec.hi if req.hi is None else min(req.hi, rec.hi)
    letters = None
    start = None
    if hi - lo + 1 > req.letter_limit:
        lo, hi = -(req.letter_limit // 2), req.letter_limit - req.letter_limit // 2 - 1
        lo, hi = max(lo, rec.lo), min(hi, rec.hi)
    if lo <= hi:
        win = rec.letters(lo, hi)
        letters, start = win.word.letters, win.start
    return InvertResponse(
        ops=rec.opseq.ops,
        level=rec.level,
        block_start=str(rec.block_start),
        determined_lo=str(rec.lo),
        determined_hi=str(rec.hi),
        window_start=start,
        letters=letters,
        tail=TailModel(
            trailing_r=rec.tail.trailing_r,
            shift_m=rec.tail.shift_m,
            completions=[p.describe() for p in rec.tail.completions],
        ),
    )


def handle_theta(req: ThetaRequest) -> ThetaResponse:
    ops = OpSeq.parse(req.ops)
    interval = theta_from_opseq(ops)
    series = theta_series(ops)
    partials = None
    if req.include_partials:
        partials = [_exact(s) for s in series.partials]
    return ThetaResponse(
        ops=ops.ops,
        interval=_interval(interval),
        midpoint=_exact(interval.midpoint()),
        series_value=_exact(series.value),
        series_value_mod1=_exact(series.value.frac()),
        partials=partials,
    )


def handle_classify(req: ClassifyRequest) -> ClassifyResponse:
    alpha = AlphaSpec.parse(req.alpha)
    c = classify(alpha, req.n)
    fr = c.frequencies

    def f(x):
        return None if x is None else _exact(x)

    occ = None
    if req.include_occurrences:
        occ = [
            OccurrenceModel(
                word=o.word.letters,
                cls=o.cls,
                starts_before_f=list(o.starts_before_f),
                overlaps=list(o.overlaps),
                distances=list(o.distances),
            )
            for o in c.occurrences
        ]
    return ClassifyResponse(
        alpha=req.alpha,
        n=c.n,
        k=c.k,
        j=c.j,
        case=c.case,
        l=c.l,
        f=c.f_n,
        sizes=list(c.sizes()),
        classes={cls: [w.letters for w in ws] for cls, ws in c.classes.items()},
        frequencies=FrequencyModel(A=f(fr.r_a), B=f(fr.r_b), C=f(fr.r_c)),
        label_sequence=c.label_sequence,
        occurrences=occ,
    )


def handle_exhaust(req: ExhaustRequest) -> ExhaustResponse:
    alpha = AlphaSpec.parse(req.alpha)
    return ExhaustResponse(
        alpha=req.alpha,
        n=req.n,
        f=exhausting_point(alpha, req.n),
        g=g_point(alpha, req.n),
    )


def handle_gaps(req: GapsRequest) -> GapsResponse:
    alpha = AlphaSpec.parse(req.alpha)
    stats = three_distance(alpha, req.n)
    return GapsResponse(
        alpha=req.alpha,
        n=req.n,
        gap_count=len(stats.gaps),
        distinct=[DistinctGap(width=_exact(w), multiplicity=m) for w, m in stats.distinct],
        gaps=[_interval(g) for g in stats.gaps] if req.include_gaps else None,
    )


def handle_measure(req: MeasureRequest) -> MeasureResponse:
    params = MeasureParams.parse(req.p)
    resp = MeasureResponse(p=params.describe(), action=req.action)
    if req.action == "cylinder":
        assert req.ops is not None
        ops = OpSeq.parse(req.ops)
        wi = cylinder_mass(ops, params)
        return resp.model_copy(
            update={
                "cylinder": CylinderPart(
                    interval=_interval(wi.interval),
                    mass=_exact(wi.mass),
                    k=wi.k,
                    l=wi.l,
                    density_ratio=_exact(density_ratio(ops, params)),
                )
            }
        )
    if req.action == "cdf":
        assert req.x is not None
        x = HullPoint.parse(req.x).theta
        enclosure = cdf(x, params, eps=Fraction(req.eps))
        return resp.model_copy(
            update={
                "cdf": CdfPart(
                    lo=_exact(enclosure.lo),
                    hi=_exact(enclosure.hi),
                    refinements=enclosure.refinements,
                )
            }
        )
    if req.action == "exponent":
        res = singularity_exponent(params)
        return resp.model_copy(update={"exponent": ExponentPart(**res.to_dict())})
    assert req.seed is not None
    stats = mc_local_dimension(params, depth=req.depth, trials=req.trials, seed=req.seed)
    return resp.model_copy(update={"mc": McPart(**stats.to_dict())})


def handle_symmetry(req: SymmetryRequest) -> SymmetryResponse:
    resp = SymmetryResponse(action=req.action)
    if req.action == "point":
        assert req.which is not None
        sp = symmetric_point(req.which)
        return resp.model_copy(
            update={
                "point": SymmetryPointPart(
                    which=sp.which,
                    theta=_exact(sp.theta),
                    axis_site=sp.axis_site,
                    center_letter=sp.center_letter,
                    flank=sp.flank(req.radius).word.letters,
                    mirror_symmetric=sp.is_mirror_symmetric(req.radius),
                )
            }
        )
    if req.action == "h":
        assert req.n is not None
        dec = h_word(req.n)
        agrees = h_word_by_recursion(req.n).letters == dec.h.letters
        return resp.model_copy(
            update={
                "h": HPart(
                    n=dec.n, h=dec.h.letters, center=dec.center, family=dec.family,
                    recursion_agrees=agrees,
                )
            }
        )
    if req.action == "sigma":
        assert req.length is not None
        pw = sigma_fixed_point(req.length)
        return resp.model_copy(
            update={
                "sigma": SigmaPart(
                    length=req.length, primed=pw.display(), projection=pw.project().letters
                )
            }
        )
    assert req.n is not None
    rep = lemma42_check(req.n)
    return resp.model_copy(
        update={
            "lemma42": Lemma42Part(
                n=rep.n,
                ok=rep.ok,
                checks=[
                    IdentityModel(name=c.name, passed=c.passed, lhs=c.lhs, rhs=c.rhs)
                    for c in rep.checks
                ],
            )
        }
    )


def handle_localmove(req: LocalMoveRequest) -> LocalMoveResponse:
    alpha = AlphaSpec.parse(req.alpha)
    point = _point(req.point)
    resp = LocalMoveResponse(alpha=req.alpha, action=req.action)
    if req.action == "witness":
        rep = break_witness(point, alpha, req.site, req.cap)
        return resp.model_copy(
            update={
                "witness": WitnessPart(
                    found=rep.found,
                    site=rep.site,
                    cap=rep.cap,
                    factor=rep.factor.letters if rep.factor else None,
                    start=rep.start,
                    length=rep.length,
                )
            }
        )
    if req.action == "exchange":
        win = window(point, alpha, req.site - req.radius, req.site + req.radius + 1)
        after = exchange(win, req.site)
        return resp.model_copy(
            update={
                "exchange": ExchangePart(
                    site=req.site,
                    window_start=win.start,
                    before=win.word.letters,
                    after=after.word.letters,
                )
            }
        )
    assert req.level is not None
    rep = lemma52_form(point, alpha, req.site, req.level)
    return resp.model_copy(update={"form": FormPart(**rep.to_dict())})


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    results = verification.run_checks(req.only)
    return VerifyResponse(
        ok=all(r.passed for r in results),
        results=[CheckModel(**r.to_dict()) for r in results],
    )


HANDLERS = {
    "word": (handle_word, WordRequest, WordResponse),
    "partition": (handle_partition, PartitionRequest, PartitionResponse),
    "embed": (handle_embed, EmbedRequest, EmbedResponse),
    "invert": (handle_invert, InvertRequest, InvertResponse),
    "theta": (handle_theta, ThetaRequest, ThetaResponse),
    "classify": (handle_classify, ClassifyRequest, ClassifyResponse),
    "exhaust": (handle_exhaust, ExhaustRequest, ExhaustResponse),
    "gaps": (handle_gaps, GapsRequest, GapsResponse),
    "measure": (handle_measure, MeasureRequest, MeasureResponse),
    "symmetry": (handle_symmetry, SymmetryRequest, SymmetryResponse),
    "localmove": (handle_localmove, LocalMoveRequest, LocalMoveResponse),
    "verify": (handle_verify, VerifyRequest, VerifyResponse),
}


def create_app() -> FastAPI:
    app = FastAPI(
        title="sturmian",
        description="Exact combinatorics of circle-map (Sturmian) sequences",
        version="0.1.0",
    )

    def _register(name, handler, req_model, resp_model):
        def endpoint(request: req_model) -> resp_model:  # type: ignore[valid-type]
            try:
                return handler(request)
            except (SturmianError, ValueError) as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc

        endpoint.__name__ = f"{name}_endpoint"
        app.post(f"/{name}", response_model=resp_model)(endpoint)

    for name, (handler, req_model, resp_model) in HANDLERS.items():
        _register(name, handler, req_model, resp_model)

    @app.get("/")
    def index() -> dict:
        return {
            "service": "sturmian",
            "endpoints": [f"/{name}" for name in HANDLERS],
        }

    return app


app = create_app()
