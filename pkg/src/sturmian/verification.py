"""The acceptance battery: every headline claim with its independent check.

Each criterion pairs closed forms with a brute-force or cross-module
oracle and reports one pass/fail result.  The full battery is what the
``verify`` command and the acceptance test module run; it is deliberately
self-contained so that a single failure pinpoints the claim that broke.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .arithmetic import GOLDEN_ALPHA, TAU, AlphaSpec, QuadNumber
from .embedding import (
    OpSeq,
    fixed_point_prefix,
    fixed_point_recursion,
    phi_prefix,
    phi_shift_formula,
    reconstruct,
    theta_from_opseq,
    theta_series,
)
from .errors import DegenerateExponent, RadiusTooSmall
from .factors import (
    classify,
    empirical_frequency,
    exhausting_point,
    expected_count_signature,
    expected_label_sequence,
    expected_sizes,
    factor_set,
    frequencies,
    g_point,
    golden_class_frequencies,
    right_special,
)
from .intervals import cylinder_of_word, exhausting_word_interval, three_distance
from .localmove import break_witness, exchange, is_admissible, lemma52_form
from .measure import MeasureParams, cdf, cylinder_mass, density_ratio, density_ratio_closed_form, mc_local_dimension, singularity_exponent
from .partition import partition_of_window, partition_window, verify_isolation
from .symmetry import h_word, h_word_by_recursion, lemma42_check, sigma_fixed_point, symmetric_point, t_recursion
from .words import HullPoint, Window, Word, build_sn, palindrome_part, v0_prefix, window

_ZERO = QuadNumber(0)
_ONE = QuadNumber(1)

ALPHAS = {
    "golden": AlphaSpec.golden,
    "sqrt2m1": lambda: AlphaSpec.from_cf(period=(2,)),
    "alt12": lambda: AlphaSpec.from_cf(period=(1, 2)),
    "a311": lambda: AlphaSpec.from_cf(prefix=(3,), period=(1,)),
}


def _quad_alpha(name: str) -> AlphaSpec:
    """The quadratic-backend twin of a named rotation number."""
    spec = ALPHAS[name]()
    q = spec.to_quadratic()
    assert q is not None
    return AlphaSpec.quadratic(q)


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.criterion:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _fail(msgs: list[str], text: str) -> None:
    msgs.append(text)


# ---------------------------------------------------------------------------
# 1. word generation
# ---------------------------------------------------------------------------


def check_words() -> tuple[bool, str]:
    msgs: list[str] = []
    golden = AlphaSpec.golden()
    expected = {1: "1", 2: "10", 3: "101", 4: "10110"}
    for n, want in expected.items():
        got = build_sn(golden, n).letters
        if got != want:
            _fail(msgs, f"s_{n} = {got}, want {want}")
    for name in ("golden", "sqrt2m1", "alt12"):
        alpha = ALPHAS[name]()
        checked = 0
        for n in range(31):
            if alpha.q(n) > 2_000_000:
                break  # materializing longer words is pointless; lengths are structural
            if len(build_sn(alpha, n)) != alpha.q(n):
                _fail(msgs, f"{name}: |s_{n}| != q_{n}")
            checked = n
        if checked < 10:
            _fail(msgs, f"{name}: too few length checks ({checked})")
    for name in ("golden", "sqrt2m1", "alt12"):
        alpha = _quad_alpha(name)
        nmax = 24
        while alpha.q(nmax) > 100_000:
            nmax -= 1
        qmax = alpha.q(nmax)
        right = window(HullPoint.regular(0), alpha, 1, qmax).word.letters
        for n in range(1, nmax + 1):
            if build_sn(alpha, n).letters != right[: alpha.q(n)]:
                _fail(msgs, f"{name}: s_{n} != v0(1..q_{n})")
        even_max = nmax if nmax % 2 == 0 else nmax - 1
        left = window(HullPoint.regular(0), alpha, -alpha.q(even_max) + 1, 0).word.letters
        for n in range(2, even_max + 1, 2):
            if build_sn(alpha, n).letters != left[len(left) - alpha.q(n):]:
                _fail(msgs, f"{name}: s_{n} != v0(-q_{n}+1..0)")
    return not msgs, "; ".join(msgs) or "s_1..s_4, lengths, and both window limits agree"


# ---------------------------------------------------------------------------
# 2. partitions
# ---------------------------------------------------------------------------


def _tilings_with_margins(text: str, tiles: tuple[str, str]) -> list[tuple]:
    """All ways to read `text` as suffix-of-tile + full tiles + prefix-of-tile."""
    t0, t1 = tiles
    out = []
    suffixes = {""} | {t[i:] for t in tiles for i in range(1, len(t))}
    for suf in suffixes:
        if not text.startswith(suf):
            continue
        stack = [(len(suf), ())]
        while stack:
            pos, acc = stack.pop()
            if pos == len(text):
                out.append((suf, acc, ""))
                continue
            rest = len(text) - pos
            for t in (t0, t1):
                if text.startswith(t, pos):
                    stack.append((pos + len(t), acc + ((t, pos),)))
                elif rest < len(t) and t.startswith(text[pos:]):
                    out.append((suf, acc, text[pos:]))
    return out


def check_partition() -> tuple[bool, str]:
    from .partition import _level1_view, lift

    msgs: list[str] = []
    rng = random.Random(20260809)
    for name in ("golden", "sqrt2m1", "alt12"):
        alpha = _quad_alpha(name)
        for _ in range(10):
            theta = Fraction(rng.randrange(1, 999999), 999999)
            w = window(HullPoint.regular(theta), alpha, -5000, 5000)
            view = _level1_view(w, alpha)
            for level in range(1, 16):
                rep_iso = verify_isolation(view, alpha)
                if not rep_iso.ok:
                    _fail(msgs, f"{name} theta={theta} level {level}: isolation violated")
                expanded = view.expand(alpha)
                lo, hi = view.coverage(alpha)
                if expanded.word.letters != w.word.letters[lo + 5000 : hi + 5001]:
                    _fail(msgs, f"{name} theta={theta} level {level}: expansion mismatch")
                if level == 15 or alpha.q(level + 1) > 2500:
                    break
                try:
                    view = lift(view, alpha)
                except RadiusTooSmall:
                    break
    # exhaustive-tiling oracle on short windows at levels <= 4
    for name in ("golden", "sqrt2m1", "alt12"):
        alpha = _quad_alpha(name)
        base = v0_prefix(alpha, 200).letters
        for level in range(1, 5):
            tiles = (build_sn(alpha, level - 1).letters, build_sn(alpha, level).letters)
            if len(tiles[1]) > 30:
                break
            for length in (20, 41, 60):
                for start in (1, 7):
                    text = base[start - 1 : start - 1 + length]
                    w = Window(start, Word(text))
                    try:
                        view = partition_of_window(w, alpha, level)
                    except RadiusTooSmall:
                        continue
                    oracle = _tilings_with_margins(text, tiles)
                    computed = tuple(
                        (build_sn(alpha, b.label).letters, b.start - start)
                        for b in view.blocks
                    )
                    if not oracle:
                        _fail(msgs, f"{name} level {level} len {length}: oracle found no tiling at all")
                        continue
                    cov_lo = view.blocks[0].start - start
                    cov_hi = view.blocks[-1].end(alpha) - start
                    for _, acc, _ in oracle:
                        inside = tuple(
                            (t, p) for (t, p) in acc if cov_lo <= p and p + len(t) - 1 <= cov_hi
                        )
                        if inside != computed:
                            _fail(msgs, f"{name} level {level} len {length}: a tiling disagrees on the margin-free core")
                            break
                    full = [o for o in oracle if o[0] == "" and o[2] == ""]
                    if view.left_margin is None and view.right_margin is None:
                        if len(full) != 1:
                            _fail(msgs, f"{name} level {level} len {length}: {len(full)} exact tilings")
                        elif full[0][1] != computed:
                            _fail(msgs, f"{name} level {level} len {length}: oracle exact tiling differs")
    return not msgs, "; ".join(msgs[:4]) or "isolation, expansion, and tiling oracle agree"


# ---------------------------------------------------------------------------
# 3. embedding values and round trip
# ---------------------------------------------------------------------------


def check_embedding_values() -> tuple[bool, str]:
    msgs: list[str] = []
    alpha = AlphaSpec.golden()
    if phi_prefix(HullPoint.regular(0), alpha, 20).ops != "L" * 20:
        _fail(msgs, "coding of the base point is not all L")
    if phi_prefix(HullPoint.prime(0), alpha, 20).ops != "R" + "L" * 19:
        _fail(msgs, "coding of the primed point is not R L^19")
    if phi_prefix(HullPoint.regular(Fraction(1, 2)), alpha, 5).ops != "RRLRL":
        _fail(msgs, "coding of theta=1/2 does not start R,R,L,R,L")
    rng = random.Random(3)
    for _ in range(200):
        ops = OpSeq("".join(rng.choice("RL") for _ in range(20)))
        interval = theta_from_opseq(ops)
        mid = interval.midpoint()
        back = phi_prefix(HullPoint.regular(mid), alpha, 20)
        if back.ops != ops.ops:
            _fail(msgs, f"round trip failed for {ops.ops}")
            break
        k, l = ops.counts()
        if interval.width != (TAU ** (k + 2 * l)).inverse():
            _fail(msgs, f"width law failed for {ops.ops}")
            break
        rec = reconstruct(ops)
        lo = max(rec.lo, -40)
        hi = min(rec.hi, 40)
        forced = rec.letters(lo, hi).word.letters
        seen = window(HullPoint.regular(mid), alpha, lo, hi).word.letters
        if forced != seen:
            _fail(msgs, f"reconstruction letters disagree for {ops.ops}")
            break
    return not msgs, "; ".join(msgs) or "pinned codings, 200 round trips, width law, reconstruction"


# ---------------------------------------------------------------------------
# 4. fixed point
# ---------------------------------------------------------------------------


def check_fixed_point() -> tuple[bool, str]:
    msgs: list[str] = []
    if fixed_point_prefix(9).ops != "LRRLRLRRL":
        _fail(msgs, "fixed point prefix of length 9 wrong")
    states = fixed_point_recursion(4)
    if states[1].v_indices != (5,) or states[1].k != 5:
        _fail(msgs, "second recursion state is not (s_5, 5)")
    if states[2].v_indices != (8, 9, 12, 15, 16) or states[2].k != 16:
        _fail(msgs, "third recursion state wrong")
    if states[2].u.letters != "011010110101":
        _fail(msgs, "u_3 wrong")
    f100 = fixed_point_prefix(100)
    rec = reconstruct(f100)
    letters = rec.letters(0, 99).word.letters
    if letters.replace("1", "R").replace("0", "L") != f100.ops:
        _fail(msgs, "self-consistency of the length-100 prefix fails")
    alpha = AlphaSpec.golden()
    mid = theta_from_opseq(f100).midpoint()
    if phi_prefix(HullPoint.regular(mid), alpha, 100).ops != f100.ops:
        _fail(msgs, "coding of the fixed-point interval midpoint differs")
    if states[3].u.letters[:100] != f100.as_bits().letters:
        _fail(msgs, "u_4 prefix does not match the fixed point")
    return not msgs, "; ".join(msgs) or "prefix, recursion states, and self-consistency agree"


# ---------------------------------------------------------------------------
# 5. theta series
# ---------------------------------------------------------------------------


def check_theta_series() -> tuple[bool, str]:
    msgs: list[str] = []
    rng = random.Random(5)
    for _ in range(100):
        ops = OpSeq("".join(rng.choice("RL") for _ in range(25)))
        series = theta_series(ops)
        for m in range(1, len(ops) + 1):
            interval = theta_from_opseq(ops.prefix(m - 1)) if m >= 2 else None
            s = series.partials[m].frac()
            if interval is not None and not interval.contains(s):
                _fail(msgs, f"partial sum {m} escapes its interval for {ops.ops}")
                break
        else:
            continue
        break
    for _ in range(30):
        ops = OpSeq("".join(rng.choice("RL") for _ in range(40)))
        series = theta_series(ops)
        interval = theta_from_opseq(ops.prefix(39))
        diff = series.partials[40].frac() - interval.midpoint()
        if abs(Fraction(diff.approx_fraction(20))) > Fraction(1, 10**9):
            _fail(msgs, f"depth-40 sum further than 1e-9 from the midpoint for {ops.ops}")
            break
    # exact limits: all-L sums to 0, all-R sums to 1/tau
    inv = GOLDEN_ALPHA
    geo_l = (TAU ** 3).inverse() / (_ONE - (TAU ** 2).inverse())
    if _ONE - inv - geo_l != _ZERO:
        _fail(msgs, "all-L series limit is not exactly 0")
    geo_r = (TAU ** 2).inverse() / (_ONE + inv)
    if _ONE - inv + geo_r != inv:
        _fail(msgs, "all-R series limit is not exactly 1/tau")
    return not msgs, "; ".join(msgs) or "containment, midpoint agreement, and exact limits hold"


# ---------------------------------------------------------------------------
# 6. exhaustion index
# ---------------------------------------------------------------------------


def _brute_exhaustion(alpha: AlphaSpec, nmax: int) -> dict[int, int]:
    horizon = exhausting_point(alpha, nmax) + nmax + 5
    text = v0_prefix(alpha, horizon).letters.encode()
    out = {}
    for n in range(2, nmax + 1):
        seen = set()
        for e in range(n, len(text) + 1):
            seen.add(text[e - n : e])
            if len(seen) == n + 1:
                out[n] = e
                break
        else:
            raise AssertionError(f"prefix too short at n={n}")
    return out


def check_exhaustion() -> tuple[bool, str]:
    msgs: list[str] = []
    golden = AlphaSpec.golden()
    for n, want in ((2, 4), (3, 7), (4, 8)):
        if exhausting_point(golden, n) != want:
            _fail(msgs, f"f({n}) != {want}")
    for name, nmax in (("golden", 300), ("alt12", 200), ("a311", 200)):
        alpha = ALPHAS[name]()
        brute = _brute_exhaustion(alpha, nmax)
        for n in range(2, nmax + 1):
            if exhausting_point(alpha, n) != brute[n]:
                _fail(msgs, f"{name}: f({n}) closed form {exhausting_point(alpha, n)} != scan {brute[n]}")
                break
        text = v0_prefix(alpha, exhausting_point(alpha, 201) + 2).letters
        for n in range(1, 201):
            if text[exhausting_point(alpha, n + 1) - 1] != text[n - 1]:
                _fail(msgs, f"{name}: v0(f(n+1)) != v0(n) at n={n}")
                break
        for k in range(2, 11):
            if alpha.q(k) < 2 or alpha.q(k) > nmax:
                continue
            if g_point(alpha, alpha.q(k)) != alpha.q(k + 1) + alpha.q(k) - 1:
                _fail(msgs, f"{name}: g(q_{k}) wrong")
    return not msgs, "; ".join(msgs) or "closed form equals the scan; shift identity holds"


# ---------------------------------------------------------------------------
# 7. factor counts and classification
# ---------------------------------------------------------------------------


def check_classification() -> tuple[bool, str]:
    msgs: list[str] = []
    for name, nmax in (("golden", 500), ("sqrt2m1", 300), ("alt12", 300)):
        alpha = ALPHAS[name]()
        horizon = exhausting_point(alpha, nmax)
        text = v0_prefix(alpha, horizon).letters.encode()
        for n in range(1, nmax + 1):
            h = exhausting_point(alpha, max(n, 2))
            count = len({text[i : i + n] for i in range(h - n + 1)})
            if count != n + 1:
                _fail(msgs, f"{name}: |P_{n}| = {count} != {n + 1}")
                break
    golden = _quad_alpha("golden")
    for n in range(2, 201):
        c = classify(golden, n, metadata_horizon=1)
        if c.sizes() != expected_sizes(golden, n):
            _fail(msgs, f"golden: class sizes at n={n}: {c.sizes()} != {expected_sizes(golden, n)}")
            break
    for n in range(2, 61):
        c = classify(golden, n)
        wa, wb, wc = expected_count_signature(golden, n)
        for occ in c.occurrences:
            want = {"A": wa, "B": wb, "C": wc}[occ.cls]
            if occ.count_before_f() != want:
                _fail(msgs, f"golden n={n}: {occ.word} in {occ.cls} occurs {occ.count_before_f()} times, want {want}")
        if c.label_sequence != expected_label_sequence(golden, n):
            _fail(msgs, f"golden n={n}: appearance order differs")
            break
    for name in ("sqrt2m1", "alt12"):
        alpha = _quad_alpha(name)
        for n in range(2, 121):
            c = classify(alpha, n, metadata_horizon=1)
            if c.sizes() != expected_sizes(alpha, n):
                _fail(msgs, f"{name}: sizes at n={n}")
                break
            if c.label_sequence != expected_label_sequence(alpha, n):
                _fail(msgs, f"{name}: order at n={n}")
                break
            wa, wb, wc = expected_count_signature(alpha, n)
            counts = {"A": wa, "B": wb, "C": wc}
            for occ in c.occurrences:
                if occ.count_before_f() != counts[occ.cls]:
                    _fail(msgs, f"{name} n={n}: count signature")
                    break
    return not msgs, "; ".join(msgs[:4]) or "counts, sizes, signatures, and appearance order match"


# ---------------------------------------------------------------------------
# 8. frequencies
# ---------------------------------------------------------------------------


def check_frequencies() -> tuple[bool, str]:
    msgs: list[str] = []
    for name in ("golden", "sqrt2m1"):
        alpha = _quad_alpha(name)
        for n in range(2, 201):
            sizes = expected_sizes(alpha, n)
            fr = frequencies(alpha, n)
            ra, rb, rc = fr.exact()
            total = ra * sizes[0] + rb * sizes[1] + rc * sizes[2]
            if total != _ONE:
                _fail(msgs, f"{name} n={n}: total frequency {total!r} != 1")
                break
    golden = _quad_alpha("golden")
    for k in range(2, 31):
        n = golden.q(k)  # any n with this k works; use n = q_k
        fr = frequencies(golden, n)
        if fr.exact() != golden_class_frequencies(k):
            _fail(msgs, f"beta formula does not collapse to tau powers at k={k}")
            break
    N = 10 ** 6
    text = v0_prefix(golden, N + 31).letters
    tol = Fraction(1, 10 ** 4)
    for n in range(2, 31):
        c = classify(golden, n, metadata_horizon=1)
        ra, rb, rc = (x.approx_fraction(30) for x in c.frequencies.exact())
        exact = {"A": ra, "B": rb, "C": rc}
        counts: dict[str, int] = {}
        for i in range(N):
            w = text[i : i + n]
            counts[w] = counts.get(w, 0) + 1
        for cls, words in c.classes.items():
            for w in words:
                emp = Fraction(counts.get(w.letters, 0), N)
                if abs(emp - exact[cls]) > tol:
                    _fail(msgs, f"golden n={n} {w}: |empirical - exact| > 1e-4")
    return not msgs, "; ".join(msgs[:4]) or "total = 1 symbolically; collapse; empirical within 1e-4"


# ---------------------------------------------------------------------------
# 9. three-distance
# ---------------------------------------------------------------------------


def _incremental_gap_counts(alpha: AlphaSpec, nmax: int):
    """Yield (n, {width: multiplicity}) for n = 1..nmax, one insertion per step."""
    import bisect

    a = alpha.value
    keys = [Fraction(0)]
    exact = [QuadNumber(0)]
    gaps: dict[QuadNumber, int] = {_ONE: 1}

    def _bump(w: QuadNumber, delta: int) -> None:
        c = gaps.get(w, 0) + delta
        if c:
            gaps[w] = c
        else:
            del gaps[w]

    for j in range(1, nmax + 1):
        x = (-(a * j)).frac()
        key = x.approx_fraction(40)
        i = bisect.bisect_left(keys, key)
        lo = exact[i - 1]  # i >= 1 since 0 is the minimum and x > 0
        hi = exact[i] if i < len(exact) else _ONE
        _bump(hi - lo, -1)
        _bump(x - lo, +1)
        _bump(hi - x, +1)
        keys.insert(i, key)
        exact.insert(i, x)
        yield j, gaps


def check_three_distance() -> tuple[bool, str]:
    msgs: list[str] = []
    golden = _quad_alpha("golden")
    for name in ("golden", "sqrt2m1", "alt12"):
        alpha = _quad_alpha(name)
        for n, gaps in _incremental_gap_counts(alpha, 500):
            if len(gaps) > 3:
                _fail(msgs, f"{name}: {len(gaps)} gap widths at n={n}")
                break
            if sum(gaps.values()) != n + 1:
                _fail(msgs, f"{name}: gap count != n+1 at n={n}")
                break
            if name == "golden" and 2 <= n <= 200:
                k, _ = alpha.level_for(n)
                ra, rb, rc = golden_class_frequencies(k)
                sa, sb, sc = expected_sizes(alpha, n)
                want = {w: m for w, m in ((ra, sa), (rb, sb), (rc, sc)) if m > 0}
                if gaps != want:
                    _fail(msgs, f"golden n={n}: gap widths/multiplicities differ from class data")
                    break
        # the sort-based route must agree with the incremental one
        for n in (2, 7, 50):
            stats = three_distance(alpha, n)
            counts = {w: m for w, m in stats.distinct}
            inc = None
            for m, gaps in _incremental_gap_counts(alpha, n):
                inc = dict(gaps)
            if counts != inc:
                _fail(msgs, f"{name}: sorted and incremental gap statistics differ at n={n}")
    for n in range(2, 31):
        c = classify(golden, n, metadata_horizon=1)
        ra, rb, rc = c.frequencies.exact()
        freq = {"A": ra, "B": rb, "C": rc}
        for cls, words in c.classes.items():
            for w in words:
                if cylinder_of_word(w, golden).width != freq[cls]:
                    _fail(msgs, f"cylinder width != frequency for {w} at n={n}")
    # exhausting-word intervals
    for n in range(2, 31):
        k, _ = golden.level_for(n)
        f = exhausting_point(golden, n)
        text = v0_prefix(golden, f).letters
        w_n = Word(text[f - n : f])
        if cylinder_of_word(w_n, golden) != exhausting_word_interval(n):
            _fail(msgs, f"exhausting word interval mismatch at n={n}")
    return not msgs, "; ".join(msgs[:4]) or "gap structure, multiplicities, widths, and endpoint intervals agree"


# ---------------------------------------------------------------------------
# 10. measure
# ---------------------------------------------------------------------------


def check_measure() -> tuple[bool, str]:
    msgs: list[str] = []
    lebesgue = MeasureParams(GOLDEN_ALPHA)
    # walk the full depth-12 tree: masses equal widths and each depth sums to 1
    from .measure import _Node

    level = [_Node(_ZERO, _ONE, True, QuadNumber(1))]
    for depth in range(1, 13):
        nxt = []
        for node in level:
            r, l = node.children(lebesgue)
            nxt.extend((r, l))
        level = nxt
        total_mass = QuadNumber(0)
        total_width = QuadNumber(0)
        for node in level:
            width = node.hi - node.lo
            if node.mass != width:
                _fail(msgs, f"mass != width at depth {depth}")
                break
            total_mass = total_mass + node.mass
            total_width = total_width + width
        if total_mass != _ONE or total_width != _ONE:
            _fail(msgs, f"depth {depth}: masses or widths do not sum to 1")
            break
    try:
        singularity_exponent(lebesgue)
        _fail(msgs, "exponent did not degenerate at p = 1/tau")
    except DegenerateExponent:
        pass
    inv_tau_sq = float((TAU ** 2).inverse())
    grid = [Fraction(39, 100), Fraction(2, 5), Fraction(42, 100), Fraction(9, 20), Fraction(47, 100), Fraction(49, 100)]
    for p in grid:
        if not inv_tau_sq < float(p) < 0.5:
            continue
        res = singularity_exponent(MeasureParams(p))
        if res.residual > 1e-12:
            _fail(msgs, f"defining-equation residual {res.residual} at p={p}")
        if res.alpha_exp <= 1:
            _fail(msgs, f"exponent {res.alpha_exp} <= 1 at p={p}")
    mc1 = mc_local_dimension(lebesgue, depth=1000, trials=10_000, seed=42)
    if abs(mc1.mean_local_dimension - 1.0) > 0.02:
        _fail(msgs, f"Lebesgue local dimension {mc1.mean_local_dimension}")
    mc2 = mc_local_dimension(MeasureParams(Fraction(9, 20)), depth=1000, trials=10_000, seed=42)
    closed_form = 0.9225876073582661  # (p ln p + q ln q) / (-(p + 2q) ln tau) at p = 0.45
    if abs(mc2.mean_local_dimension - closed_form) > 0.02:
        _fail(msgs, f"p=0.45 local dimension {mc2.mean_local_dimension} vs {closed_form}")
    return not msgs, "; ".join(msgs[:4]) or "Lebesgue identity, exponent grid, and MC diagnostics agree"


# ---------------------------------------------------------------------------
# 11. symmetry
# ---------------------------------------------------------------------------


def check_symmetry() -> tuple[bool, str]:
    msgs: list[str] = []
    alpha = AlphaSpec.golden()
    for n, want in ((4, "1"), (5, "101"), (6, "01101")):
        if h_word(n).h.letters != want:
            _fail(msgs, f"h_{n} direct split != {want}")
        if h_word_by_recursion(n).letters != want:
            _fail(msgs, f"h_{n} recursion != {want}")
    for n in range(3, 19):
        if h_word(n).h.letters != h_word_by_recursion(n).letters:
            _fail(msgs, f"h_{n}: split and recursion disagree")
    for n in range(2, 16):
        ab, ba = ("10", "01") if n % 2 == 1 else ("01", "10")
        pi3, _ = palindrome_part(alpha, n + 3)
        pi1, _ = palindrome_part(alpha, n + 1)
        pi0, _ = palindrome_part(alpha, n)
        if pi3.letters != pi1.letters + ab + pi0.letters + ba + pi1.letters:
            _fail(msgs, f"palindrome recursion fails at n={n}")
    for which, theta in (("AA", QuadNumber(1, 0, 2, 1)), ("A", QuadNumber(-1, 1, 4, 5)), ("B", QuadNumber(9, -3, 4, 5))):
        sp = symmetric_point(which)
        if sp.theta != theta:
            _fail(msgs, f"theta_{which} != expected value")
        if not sp.is_mirror_symmetric(50):
            _fail(msgs, f"{which} window not mirror symmetric to radius 50")
    h_aa = window(HullPoint.regular(QuadNumber(1, 0, 2, 1)), alpha, 0, 199).word.letters
    if sigma_fixed_point(200).project().letters != h_aa:
        _fail(msgs, "substitution fixed point does not match the AA right half")
    for m in range(1, 13):
        t = t_recursion(m + 1)
        if sigma_fixed_point(len(t)).letters != t.letters:
            _fail(msgs, f"sigma iterate and t-recursion diverge at m={m}")
            break
    for n in (1, 3, 5):
        rep = lemma42_check(n)
        if not rep.ok:
            _fail(msgs, f"identity battery fails at n={n}")
    return not msgs, "; ".join(msgs[:4]) or "splits, recursions, mirror windows, substitution, identities"


# ---------------------------------------------------------------------------
# 12. local moves
# ---------------------------------------------------------------------------


def check_localmove() -> tuple[bool, str]:
    msgs: list[str] = []
    alpha = AlphaSpec.golden()
    v0 = window(HullPoint.regular(0), alpha, -100, 100)
    vp = window(HullPoint.prime(0), alpha, -100, 100)
    if exchange(v0, -1).word.letters != vp.word.letters:
        _fail(msgs, "exchanging the base point at (-1, 0) does not give the primed point")
    if exchange(exchange(v0, -1), -1).word.letters != v0.word.letters:
        _fail(msgs, "exchange is not an involution")
    rng = random.Random(12)
    found = 0
    for _ in range(20):
        theta = Fraction(rng.randrange(1, 10 ** 6), 10 ** 6)
        point = HullPoint.regular(theta)
        w = window(point, alpha, -60, 61)
        sites = [i for i in range(-50, 50) if w.letter_at(i) != w.letter_at(i + 1)]
        site = rng.choice(sites)
        rep = break_witness(point, alpha, site, 10_000)
        if not rep.found:
            _fail(msgs, f"no witness for theta={theta} site={site} within cap")
            continue
        found += 1
        assert rep.factor is not None
        if is_admissible(alpha, rep.factor):
            _fail(msgs, f"witness for theta={theta} is actually admissible")
        if not (rep.start <= site <= rep.start + len(rep.factor) - 1):
            _fail(msgs, f"witness for theta={theta} does not contain the site")
    forms = [lemma52_form(HullPoint.regular(0), alpha, 0, lv).form for lv in range(1, 9)]
    if forms != ["b", "a"] * 4:
        _fail(msgs, f"partition forms at the base exchange do not alternate: {forms}")
    if break_witness(HullPoint.regular(0), alpha, -1, 2000).found:
        _fail(msgs, "found a witness for the exchange that stays in the hull")
    return not msgs, "; ".join(msgs[:4]) or f"exchange identities, {found}/20 witnesses, form alternation"


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


CHECKS: tuple[tuple[int, str, Callable[[], tuple[bool, str]]], ...] = (
    (1, "word-generation", check_words),
    (2, "partition", check_partition),
    (3, "embedding-values", check_embedding_values),
    (4, "fixed-point", check_fixed_point),
    (5, "theta-series", check_theta_series),
    (6, "exhaustion-index", check_exhaustion),
    (7, "factor-classification", check_classification),
    (8, "frequencies", check_frequencies),
    (9, "three-distance", check_three_distance),
    (10, "measure", check_measure),
    (11, "symmetry", check_symmetry),
    (12, "local-move", check_localmove),
)


def run_checks(names: Optional[list[str]] = None) -> list[CheckResult]:
    results = []
    for criterion, name, fn in CHECKS:
        if names and name not in names:
            continue
        t0 = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(criterion, name, passed, detail, time.perf_counter() - t0))
    return results
