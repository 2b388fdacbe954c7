"""Reproducible experiment drivers over the exact arc algebra.

Each driver returns an :class:`ExperimentReport`: echoed parameters, rows
of exact rationals (with a 12-significant-digit decimal rendering beside
each), and named boolean verdicts.  Verdicts are genuine checks that are
expected to pass; classifications that are not pass/fail (such as the
series verdict of the totient-series classifier) are reported as
parameters instead, so a "convergent" outcome never reads as a failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .approx import Constant, DeltaSequence, Power, TailUnionSpec, tail_union
from .circle import CirclePoint, RationalLike, as_fraction, format_fraction
from .numtheory import All, IndexPredicate, totient_range

DECIMAL_DIGITS = 12


def decimal_string(q: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Faithful rounding of an exact rational to `digits` significant digits.

    Half-even rounding; the exact value is always carried alongside in
    reports, so this rendering is presentation only.
    """
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return str(d)


@dataclass(frozen=True)
class ReportRow:
    label: str
    exact: Fraction

    @property
    def decimal(self) -> str:
        return decimal_string(self.exact)


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool


@dataclass
class ExperimentReport:
    experiment: str
    params: dict[str, object] = field(default_factory=dict)
    rows: list[ReportRow] = field(default_factory=list)
    verdicts: list[Verdict] = field(default_factory=list)

    def all_pass(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def row(self, label: str) -> ReportRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_json_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "params": self.params,
            "rows": [
                {"label": r.label, "exact": format_fraction(r.exact), "decimal": r.decimal}
                for r in self.rows
            ],
            "verdicts": [{"name": v.name, "pass": v.passed} for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_csv(self) -> str:
        def field(value: object) -> str:
            text = str(value)
            if any(ch in text for ch in ',"\n'):
                text = '"' + text.replace('"', '""') + '"'
            return text

        lines = ["kind,label,value,decimal"]
        for key, value in self.params.items():
            lines.append(f"param,{field(key)},{field(value)},")
        for r in self.rows:
            lines.append(f"row,{r.label},{format_fraction(r.exact)},{r.decimal}")
        for v in self.verdicts:
            lines.append(f"verdict,{v.name},{'pass' if v.passed else 'FAIL'},")
        return "\n".join(lines) + "\n"

    def render_text(self) -> str:
        width = max((len(r.label) for r in self.rows), default=8)
        lines = [f"experiment: {self.experiment}"]
        lines += [f"  {k} = {v}" for k, v in self.params.items()]
        for r in self.rows:
            lines.append(f"  {r.label.ljust(width)}  {format_fraction(r.exact)}  ≈ {r.decimal}")
        for v in self.verdicts:
            lines.append(f"  [{'pass' if v.passed else 'FAIL'}] {v.name}")
        return "\n".join(lines)


# -- drivers --------------------------------------------------------------------


def gallagher_experiment(
    delta: DeltaSequence, n_min_schedule: Sequence[int], n_max: int
) -> ExperimentReport:
    """Tail-union measures along a schedule of truncation starts.

    For each N in the schedule, reports the exact measure of the tail
    union over [N, n_max] together with its subadditive upper bound
    sum of 2*totient(n)*max(delta_n, 0).  Verdicts: measures are monotone
    non-increasing in N, and each measure is at most its bound.
    """
    schedule = list(n_min_schedule)
    if not schedule:
        raise ValueError("schedule must be nonempty")
    if any(a >= b for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    if schedule[0] < 1 or schedule[-1] > n_max:
        raise ValueError(f"schedule must lie within [1, {n_max}]")

    phi = totient_range(n_max)
    report = ExperimentReport(
        "gallagher",
        params={"delta": str(delta), "n_min_schedule": schedule, "n_max": n_max},
    )
    measures = []
    for n_min in schedule:
        w = tail_union(TailUnionSpec(n_min, n_max, All(), delta))
        bound = sum(
            (2 * phi[n] * max(delta.eval_at(n), Fraction(0)) for n in range(n_min, n_max + 1)),
            Fraction(0),
        )
        report.rows.append(ReportRow(f"measure[n_min={n_min}]", w.measure))
        report.rows.append(ReportRow(f"upper_bound[n_min={n_min}]", bound))
        report.verdicts.append(Verdict(f"measure_le_bound[n_min={n_min}]", w.measure <= bound))
        measures.append(w.measure)
    report.verdicts.append(
        Verdict(
            "measures_nonincreasing",
            all(a >= b for a, b in zip(measures, measures[1:])),
        )
    )
    return report


def cassels_experiment(
    delta: DeltaSequence,
    m: RationalLike,
    pred: IndexPredicate,
    n_min: int,
    n_max: int,
) -> ExperimentReport:
    """Compare the tail union with radii delta_n against radii m*delta_n.

    Reports both measures and the measure of the symmetric difference.
    Verdict: exact containment of the smaller-radius union in the larger
    (both directions when m == 1, where the symmetric difference is 0).
    """
    scale = as_fraction(m)
    if scale <= 0:
        raise ValueError(f"scaling factor must be positive, got {scale}")
    w1 = tail_union(TailUnionSpec(n_min, n_max, pred, delta))
    wm = tail_union(TailUnionSpec(n_min, n_max, pred, delta.scale(scale)))
    report = ExperimentReport(
        "cassels",
        params={
            "delta": str(delta),
            "m": format_fraction(scale),
            "pred": str(pred),
            "n_min": n_min,
            "n_max": n_max,
        },
    )
    report.rows.append(ReportRow("measure[m=1]", w1.measure))
    report.rows.append(ReportRow(f"measure[m={format_fraction(scale)}]", wm.measure))
    report.rows.append(ReportRow("symm_diff_measure", w1.symm_diff_measure(wm)))
    if scale >= 1:
        report.verdicts.append(Verdict("base_subset_scaled", w1 <= wm))
    if scale <= 1:
        report.verdicts.append(Verdict("scaled_subset_base", wm <= w1))
    if scale == 1:
        report.verdicts.append(Verdict("symm_diff_zero", w1.symm_diff_measure(wm) == 0))
    return report


def _doubling_schedule(cap: int) -> list[int]:
    ms = []
    m = 2
    while m <= cap:
        ms.append(m)
        m *= 2
    return ms or [cap]


def duffin_schaeffer_classify(delta: DeltaSequence, partial_sum_cap: int) -> ExperimentReport:
    """Partial sums of totient(n)*max(delta_n, 0) plus an analytic series verdict.

    Partial sums are reported at a doubling schedule of cutoffs up to the
    cap.  For closed-form sequences the series is classified exactly:
    a positive power law c/n**a diverges iff a <= 2 (predicted class
    "full"), converges otherwise (predicted class "null"); a positive
    constant diverges; a non-positive constant gives the zero series,
    which converges.  Tabulated sequences are left "undetermined" — no
    almost-everywhere claim is made from finite data.
    """
    if partial_sum_cap < 1:
        raise ValueError(f"partial-sum cap must be >= 1, got {partial_sum_cap}")
    cutoffs = _doubling_schedule(partial_sum_cap)
    phi = totient_range(cutoffs[-1])
    report = ExperimentReport(
        "duffin-schaeffer",
        params={"delta": str(delta), "partial_sum_cap": partial_sum_cap},
    )

    total = Fraction(0)
    n = 1
    sums = []
    for cutoff in cutoffs:
        while n <= cutoff:
            total += phi[n] * max(delta.eval_at(n), Fraction(0))
            n += 1
        report.rows.append(ReportRow(f"partial_sum[n_max={cutoff}]", total))
        sums.append(total)
    report.verdicts.append(
        Verdict("partial_sums_nondecreasing", all(a <= b for a, b in zip(sums, sums[1:])))
    )

    divergent: bool | None
    if isinstance(delta, Power):
        divergent = delta.exponent <= 2
    elif isinstance(delta, Constant):
        # a non-positive constant gives the identically-zero series
        divergent = delta.value > 0
    else:
        divergent = None
    if divergent is None:
        report.params["series"] = "undetermined"
        report.params["predicted_class"] = "undetermined"
    else:
        report.params["series"] = "divergent" if divergent else "convergent"
        report.params["predicted_class"] = "full" if divergent else "null"
    return report


def membership_witnesses(x: CirclePoint, delta: DeltaSequence, n_max: int) -> list[int]:
    """Indices n <= n_max whose order-n points come within open distance delta_n of x."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return [n for n in range(1, n_max + 1) if x.dist_to_order(n) < delta.eval_at(n)]
