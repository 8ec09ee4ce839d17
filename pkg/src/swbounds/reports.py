"""Deterministic text and CSV rendering of analysis results.

Text reports round to 6 decimal places for readability; CSV output carries
full-precision values (repr) so downstream tools and round-trip tests lose
nothing. Identical inputs always render to identical bytes.
"""

from __future__ import annotations

from typing import Sequence

from .bounds import BoundReport, ComparisonReport
from .grouping import CorrelationGraph
from .oracle import IndependenceCheck, MarkovCheck, OracleReport
from .partitions import Partition
from .region import AdmissibilityResult, RegionInequality, TwoNodeBoundary
from .sources import JointSource


def bits(value: float) -> str:
    return f"{value:.6f}"


def cell(value: float) -> str:
    return repr(float(value))


def region_text(
    source: JointSource,
    inequalities: Sequence[RegionInequality],
    joint: float,
    rates: Sequence[float] | None = None,
    verdict: AdmissibilityResult | None = None,
) -> str:
    sizes = ",".join(str(s) for s in source.alphabet_sizes)
    lines = [
        f"slepian-wolf rate region: {source.n_vars} sources, alphabet sizes {sizes}",
        f"joint entropy: {bits(joint)} bits/symbol",
        f"inequalities ({len(inequalities)}):",
    ]
    width = max(len(ineq.label()) for ineq in inequalities)
    for ineq in inequalities:
        line = f"  {ineq.label():<{width}} >= {bits(ineq.lower_bound)}"
        if rates is not None:
            total = sum(rates[i - 1] for i in ineq.subset)
            line += f"   rate sum {bits(total)}   slack {bits(total - ineq.lower_bound)}"
        lines.append(line)
    if rates is not None and verdict is not None:
        vector = ", ".join(bits(r) for r in rates)
        lines.append(f"rates ({vector}): {'ADMISSIBLE' if verdict.admissible else 'NOT ADMISSIBLE'}")
        for ineq in verdict.violations:
            lines.append(f"  violated: {ineq.label()} >= {bits(ineq.lower_bound)}")
    return "\n".join(lines) + "\n"


def region_csv(
    inequalities: Sequence[RegionInequality],
    rates: Sequence[float] | None = None,
) -> str:
    if rates is None:
        lines = ["subset,lower_bound_bits"]
        lines += [f"{ineq.label()},{cell(ineq.lower_bound)}" for ineq in inequalities]
    else:
        lines = ["subset,lower_bound_bits,rate_sum_bits,slack_bits"]
        for ineq in inequalities:
            total = sum(rates[i - 1] for i in ineq.subset)
            lines.append(
                f"{ineq.label()},{cell(ineq.lower_bound)},{cell(total)},{cell(total - ineq.lower_bound)}"
            )
    return "\n".join(lines) + "\n"


def boundary_csv(boundary: TwoNodeBoundary) -> str:
    lines = ["kind,r1_bits,r2_bits"]
    lines.append(f"corner_a,{cell(boundary.corner_a[0])},{cell(boundary.corner_a[1])}")
    lines.append(f"corner_b,{cell(boundary.corner_b[0])},{cell(boundary.corner_b[1])}")
    lines.append(f"sum_rate_line,{cell(boundary.sum_rate)},{cell(boundary.sum_rate)}")
    lines.append(f"asymptote_r1,{cell(boundary.r1_asymptote)},")
    lines.append(f"asymptote_r2,,{cell(boundary.r2_asymptote)}")
    return "\n".join(lines) + "\n"


def bound_text(report: BoundReport) -> str:
    joint = report.total - report.penalty
    lines = [
        f"bound report: {report.config_name}",
        f"ordering: {','.join(str(i) for i in report.ordering)}",
        "terms:",
    ]
    width = max(len(label) for label, _ in report.terms)
    for label, value in report.terms:
        lines.append(f"  {label:<{width}}  {bits(value)}")
    if report.group_subtotals is not None:
        subtotal = ", ".join(bits(s) for s in report.group_subtotals)
        lines.append(f"group subtotals: {subtotal}")
    lines.append(f"total: {bits(report.total)} bits/symbol")
    lines.append(f"joint entropy: {bits(joint)} bits/symbol")
    lines.append(
        f"penalty: {bits(report.penalty)} bits/symbol ({report.penalty_pct:.2f}% of joint entropy)"
    )
    return "\n".join(lines) + "\n"


def bounds_csv(reports: Sequence[BoundReport]) -> str:
    lines = ["config,total_bits,penalty_bits,penalty_pct"]
    lines += [
        f"{rep.config_name},{cell(rep.total)},{cell(rep.penalty)},{cell(rep.penalty_pct)}"
        for rep in reports
    ]
    return "\n".join(lines) + "\n"


def comparison_csv(report: ComparisonReport) -> str:
    lines = ["config,total_bits,penalty_bits,penalty_pct"]
    lines += [
        f"{row.config_name},{cell(row.total)},{cell(row.penalty)},{cell(row.penalty_pct)}"
        for row in report.rows
    ]
    return "\n".join(lines) + "\n"


def comparison_text(report: ComparisonReport) -> str:
    lines = [
        f"joint entropy: {bits(report.joint_entropy)} bits/symbol",
        "bounds, cheapest first:",
    ]
    width = max(len(row.config_name) for row in report.rows)
    for row in report.rows:
        lines.append(
            f"  {row.config_name:<{width}}  total {bits(row.total)}"
            f"  penalty {bits(row.penalty)} ({row.penalty_pct:.2f}%)"
        )
    return "\n".join(lines) + "\n"


def graph_csv(graph: CorrelationGraph) -> str:
    n = graph.n
    lines = ["node," + ",".join(str(j) for j in range(1, n + 1))]
    for i in range(n):
        row = ",".join(cell(graph.matrix[i, j]) for j in range(n))
        lines.append(f"{i + 1},{row}")
    return "\n".join(lines) + "\n"


def verification_text(
    seed: int,
    agreement: Sequence[OracleReport],
    agreement_tol: float,
    markov: MarkovCheck,
    markov_ordering: Sequence[int],
    markov_tol: float,
    independence: IndependenceCheck,
    partition: Partition,
    independence_tol: float,
) -> str:
    worst = max((rep.abs_diff for rep in agreement), default=0.0)
    agreement_ok = worst <= agreement_tol
    groups = " ".join("{" + ",".join(str(i) for i in g) + "}" for g in partition.groups)
    ordering = ",".join(str(i) for i in markov_ordering)
    lines = [
        f"verification report (seed {seed})",
        (
            f"oracle agreement: {len(agreement)} queries, max deviation {worst:.6e}"
            f" (tolerance {agreement_tol:.0e}): {'PASS' if agreement_ok else 'FAIL'}"
        ),
        (
            f"markov property (ordering {ordering}): max deviation "
            f"{markov.max_deviation:.6e} (tolerance {markov_tol:.0e}): "
            f"{'PASS' if markov.ok else 'FAIL'}"
        ),
        (
            f"group independence (partition {groups}): deviation "
            f"{independence.deviation:.6e} (tolerance {independence_tol:.0e}): "
            f"{'PASS' if independence.ok else 'FAIL'}"
        ),
        f"overall: {'PASS' if agreement_ok and markov.ok and independence.ok else 'FAIL'}",
    ]
    return "\n".join(lines) + "\n"
