"""Build report models from engine results."""

from typing import List, Optional, Sequence

from ..algebra.words import render_word
from ..counting.series import SeriesFit, render_coefficients, render_rational_function
from ..quadratic.certificate import CertificateResult
from ..rewrite.system import RewriteSystem
from .reports import (
    AmbiguityRecordModel, CellDims, CellReport, CertificateReport, CompletionLogReport, SeriesReport,
)


def _sep(generators) -> str:
    return "" if all(len(g.label) == 1 for g in generators) else "*"


def completion_log(system: RewriteSystem, presentation_name: str,
                   families: Sequence[str] = ()) -> CompletionLogReport:
    gens = system.generators
    sep = _sep(gens)

    def word(w) -> str:
        return render_word(w, gens, sep)

    records = [
        AmbiguityRecordModel(
            word=word(r.ambiguity.overlap_word),
            kind=r.ambiguity.kind,
            left=word(r.ambiguity.left),
            right=word(r.ambiguity.right),
            offset=r.ambiguity.offset,
            degree=r.ambiguity.degree,
            status=r.status,
            new_lhs=word(r.new_lhs) if r.new_lhs is not None else None,
        )
        for r in system.records
    ]
    lhs = [word(rule.lhs) for rule in sorted(system.rules, key=lambda r: system.order.key(r.lhs))]
    return CompletionLogReport(
        presentation=presentation_name,
        order=system.order.render(gens),
        cap=system.degree_cap or 0,
        field=system.field.descriptor(),
        rule_count=len(system.rules),
        lhs=lhs,
        records=records,
        unresolved=sorted({word(a.overlap_word) for a in system.unresolved}),
        families=list(families),
    )


def series_report(source: str, patterns: List[str], counts: List[int],
                  fit: Optional[SeriesFit], error: Optional[str] = None) -> SeriesReport:
    if fit is None:
        return SeriesReport(source=source, patterns=patterns, counts=counts,
                            verified_through=len(counts) - 1, error=error)
    return SeriesReport(
        source=source,
        patterns=patterns,
        counts=counts,
        recurrence=render_coefficients(fit.recurrence),
        offset=fit.offset,
        numerator=render_coefficients(fit.numerator),
        denominator=render_coefficients(fit.denominator),
        rational_function=render_rational_function(fit),
        verified_through=fit.verified_through,
    )


def certificate_report(result: CertificateResult, field: str) -> CertificateReport:
    cells = [
        CellReport(
            n=c.n, a=c.a, weight=list(c.weight) if c.weight is not None else None,
            dims=CellDims(X=c.x, Y=c.y, Z=c.z, median_left=c.median_left, median_right=c.median_right),
            passed=c.passed,
        )
        for c in result.cells
    ]
    return CertificateReport(
        presentation=result.presentation,
        field=field,
        mode=result.mode,
        n_max=result.n_max,
        cells=cells,
        primal_dims=result.primal_dims,
        dual_dims=result.dual_dims,
        convolution=result.convolution,
        passed=result.passed,
        statement=result.summary(),
    )
