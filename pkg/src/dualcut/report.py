"""Run reports: everything one approximation run produced, JSON-serializable.

A report carries the selection, the per-iteration records, the dual
certificate with its lower bounds, and enough redundancy (histogram,
identities, instance digest) that `verify_run` can re-check a run from the
report plus the original instance text alone. Ratios are kept as exact
fractions; no guarantee is ever checked in floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .certificates import (
    SSC,
    TWOECS,
    Cut,
    DualCertificate,
    lower_bounds,
    verify_certificate,
)
from .instances import (
    DPAInstance,
    EdgeSolution,
    PowerSolution,
    SSCInstance,
    StarSolution,
    TwoECSInstance,
    check_feasible,
    dpa_to_ssc,
)
from .io import instance_digest


@dataclass(frozen=True)
class Bounds:
    """Lower bounds on the optimum plus their convex combination."""

    dual_objective: int
    n_bound: int
    best: int
    convex_bound: Fraction


@dataclass(frozen=True)
class IterationRecord:
    """One contraction step: what was selected and which cuts it certified.

    `selected` and cut sides use original ids. `kind` is "cycle" for edge
    runs, "perfect" for bidirected star runs, and "big-one-cut"/"two-cuts"
    for general star runs."""

    index: int
    kind: str
    selected: tuple[int, ...]
    cuts: tuple[Cut, ...]


@dataclass(frozen=True)
class RunReport:
    problem: str
    n: int
    k: int
    cost: int
    selection_kind: str
    selected: tuple[int, ...]
    histogram: dict[int, int]
    iterations: tuple[IterationRecord, ...]
    certificate: DualCertificate
    bounds: Bounds
    ratio_vs_best: Fraction
    advisor_fallbacks: int
    instance_digest: str
    selected_stars: tuple[int, ...] | None = None


BIG_ONE_CUT = "big-one-cut"
TWO_CUTS = "two-cuts"


def convex_bound_for(problem: str, n: int, k: int, dual_objective: int) -> Fraction:
    """Blend of the two lower bounds matching each guarantee's tight mix."""
    if problem in ("2ecs", "dpa"):
        return Fraction(2, 3) * n + Fraction(1, 3) * dual_objective
    return Fraction(3, 4) * (n - 1) + Fraction(1, 4) * dual_objective


def build_report(
    *,
    problem: str,
    cert_instance,
    digest_instance,
    n: int,
    iterations: tuple[IterationRecord, ...],
    selected: tuple[int, ...],
    selection_kind: str,
    certificate: DualCertificate,
    advisor_fallbacks: int,
    selected_stars: tuple[int, ...] | None = None,
) -> RunReport:
    """Assemble a report and assert every identity the run must satisfy."""
    k = len(iterations)
    histogram: dict[int, int] = {}
    for rec in iterations:
        histogram[len(rec.selected)] = histogram.get(len(rec.selected), 0) + 1
    cost = len(selected)
    assert sum(i * a for i, a in histogram.items()) == cost
    assert sum((i - 1) * a for i, a in histogram.items()) == n - 1
    assert cost == n + k - 1

    feasible, objective, violations = verify_certificate(cert_instance, certificate)
    assert feasible, f"certificate violations: {violations}"
    bounds_raw = lower_bounds(cert_instance, certificate)
    assert bounds_raw.dual_objective == objective
    bounds = Bounds(
        dual_objective=objective,
        n_bound=bounds_raw.n_bound,
        best=bounds_raw.best,
        convex_bound=convex_bound_for(problem, n, k, objective),
    )
    if problem in ("2ecs", "dpa"):
        assert 2 * cost < 3 * max(n, objective) or n <= 1
    else:
        assert 5 * cost <= 6 * (n - 1) + 2 * objective
    ratio = Fraction(cost, bounds.best) if bounds.best > 0 else Fraction(1)
    return RunReport(
        problem=problem,
        n=n,
        k=k,
        cost=cost,
        selection_kind=selection_kind,
        selected=tuple(sorted(selected)),
        histogram=histogram,
        iterations=iterations,
        certificate=certificate,
        bounds=bounds,
        ratio_vs_best=ratio,
        advisor_fallbacks=advisor_fallbacks,
        instance_digest=instance_digest(digest_instance),
        selected_stars=(
            tuple(sorted(selected_stars)) if selected_stars is not None else None
        ),
    )


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _fraction_from(s: str) -> Fraction:
    return Fraction(s)


def report_to_dict(report: RunReport) -> dict:
    return {
        "problem": report.problem,
        "n": report.n,
        "k": report.k,
        "cost": report.cost,
        "selection_kind": report.selection_kind,
        "selected": list(report.selected),
        "selected_stars": (
            list(report.selected_stars)
            if report.selected_stars is not None
            else None
        ),
        "histogram": {str(i): a for i, a in sorted(report.histogram.items())},
        "iterations": [
            {
                "index": rec.index,
                "kind": rec.kind,
                "selected": list(rec.selected),
                "cuts": [sorted(c.side) for c in rec.cuts],
            }
            for rec in report.iterations
        ],
        "certificate": {
            "problem": report.certificate.problem,
            "cuts": [sorted(c.side) for c in report.certificate.cuts],
        },
        "bounds": {
            "dual_objective": report.bounds.dual_objective,
            "n_bound": report.bounds.n_bound,
            "best": report.bounds.best,
            "convex_bound": _fraction_str(report.bounds.convex_bound),
        },
        "ratio_vs_best": _fraction_str(report.ratio_vs_best),
        "advisor_fallbacks": report.advisor_fallbacks,
        "instance_digest": report.instance_digest,
    }


def report_to_json(report: RunReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def report_from_dict(data: dict) -> RunReport:
    iterations = tuple(
        IterationRecord(
            index=rec["index"],
            kind=rec["kind"],
            selected=tuple(rec["selected"]),
            cuts=tuple(Cut(frozenset(side)) for side in rec["cuts"]),
        )
        for rec in data["iterations"]
    )
    cert = DualCertificate(
        data["certificate"]["problem"],
        tuple(Cut(frozenset(side)) for side in data["certificate"]["cuts"]),
    )
    b = data["bounds"]
    bounds = Bounds(
        dual_objective=b["dual_objective"],
        n_bound=b["n_bound"],
        best=b["best"],
        convex_bound=_fraction_from(b["convex_bound"]),
    )
    selected_stars = data.get("selected_stars")
    return RunReport(
        problem=data["problem"],
        n=data["n"],
        k=data["k"],
        cost=data["cost"],
        selection_kind=data["selection_kind"],
        selected=tuple(data["selected"]),
        histogram={int(i): a for i, a in data["histogram"].items()},
        iterations=iterations,
        certificate=cert,
        bounds=bounds,
        ratio_vs_best=_fraction_from(data["ratio_vs_best"]),
        advisor_fallbacks=data["advisor_fallbacks"],
        instance_digest=data["instance_digest"],
        selected_stars=(
            tuple(selected_stars) if selected_stars is not None else None
        ),
    )


def report_from_json(text: str) -> RunReport:
    return report_from_dict(json.loads(text))


def verify_run(kind: str, instance, report: RunReport) -> list[str]:
    """Re-check a report against its instance; returns found problems."""
    problems: list[str] = []

    def need(ok: bool, msg: str) -> None:
        if not ok:
            problems.append(msg)

    need(
        report.instance_digest == instance_digest(instance),
        "instance digest does not match the report",
    )
    compatible = {"2ecs": {"2ecs"}, "ssc": {"ssc", "mscs"}, "dpa": {"dpa", "ssc", "mscs"}}
    need(
        kind in compatible.get(report.problem, set()),
        f"a {report.problem} report cannot belong to a {kind} instance",
    )

    # Rebuild the solution and pick the instance the certificate refers to.
    cert_instance = instance
    solution = None
    if report.problem == "2ecs":
        if isinstance(instance, TwoECSInstance):
            solution = EdgeSolution(frozenset(report.selected))
        else:
            need(False, "edge report paired with a non-edge instance")
    elif report.problem == "dpa" and isinstance(instance, DPAInstance):
        solution = PowerSolution(frozenset(report.selected))
        cert_instance, vmap = dpa_to_ssc(instance)
        if report.selected_stars is None:
            need(False, "power report is missing its star selection")
        else:
            mapped = {vmap[v] for v in report.selected if v in vmap}
            need(
                len(mapped) == len(report.selected)
                and mapped == set(report.selected_stars),
                "power selection and star selection disagree",
            )
    elif report.problem in ("ssc", "dpa"):
        if isinstance(instance, SSCInstance):
            solution = StarSolution(frozenset(report.selected))
        else:
            need(False, "star report paired with a non-star instance")
    else:
        need(False, f"unknown problem tag {report.problem!r}")

    if solution is not None:
        try:
            need(check_feasible(instance, solution), "selection is not feasible")
        except ValueError as exc:
            need(False, f"selection invalid: {exc}")
    need(len(report.selected) == report.cost, "cost differs from selection size")

    expected_problem = TWOECS if report.problem == "2ecs" else SSC
    if report.certificate.problem != expected_problem:
        need(False, "certificate problem tag mismatch")
    else:
        # A tampered report may carry cuts the instance cannot even express;
        # that must surface as a finding, not an exception.
        try:
            feasible, objective, violations = verify_certificate(
                cert_instance, report.certificate
            )
        except (TypeError, ValueError) as exc:
            need(False, f"certificate check failed: {exc}")
        else:
            need(feasible, f"certificate infeasible: {violations[:3]}")
            need(
                objective == report.bounds.dual_objective,
                "dual objective differs from certificate",
            )

    n, k, cost = report.n, report.k, report.cost
    if isinstance(cert_instance, (SSCInstance, TwoECSInstance)):
        real_n = (
            cert_instance.vertex_count
            if isinstance(cert_instance, SSCInstance)
            else cert_instance.graph.vertex_count
        )
        need(n == real_n, "vertex count differs from instance")
    need(k == len(report.iterations), "iteration count differs from k")

    hist: dict[int, int] = {}
    for rec in report.iterations:
        hist[len(rec.selected)] = hist.get(len(rec.selected), 0) + 1
    need(hist == report.histogram, "histogram differs from iteration records")
    need(
        sum((i - 1) * a for i, a in hist.items()) == n - 1,
        "contraction identity sum (i-1)*A_i = n-1 fails",
    )
    need(sum(i * a for i, a in hist.items()) == cost, "histogram cost identity fails")
    need(cost == n + k - 1, "cost identity n+k-1 fails")

    from_iters: list[frozenset[int]] = []
    picked: set[int] = set()
    for rec in report.iterations:
        picked.update(rec.selected)
        from_iters.extend(c.side for c in rec.cuts)
        if report.problem == "2ecs":
            need(len(rec.cuts) == 1, f"iteration {rec.index}: expected one cut")
        elif report.problem == "dpa":
            need(len(rec.cuts) == 2, f"iteration {rec.index}: expected two cuts")
        else:
            need(len(rec.cuts) in (1, 2), f"iteration {rec.index}: bad cut count")
            if rec.kind == TWO_CUTS:
                need(len(rec.cuts) == 2, f"iteration {rec.index}: two-cuts needs 2")
    need(
        sorted(from_iters, key=sorted) ==
        sorted((c.side for c in report.certificate.cuts), key=sorted),
        "certificate cuts differ from iteration cuts",
    )
    expected_selected = (
        set(report.selected_stars or ())
        if report.selection_kind == "power"
        else set(report.selected)
    )
    need(picked == expected_selected, "iteration selections do not add up")

    D = report.bounds.dual_objective
    if report.problem in ("2ecs", "dpa"):
        need(n <= 1 or 2 * cost < 3 * max(n, D), "guarantee 2*cost < 3*max(n, D) fails")
    else:
        need(5 * cost <= 6 * (n - 1) + 2 * D, "guarantee 5*cost <= 6(n-1)+2D fails")

    need(
        report.bounds.n_bound == (n if n >= 2 else 0),
        "vertex-count bound is wrong",
    )
    need(
        report.bounds.best == max(report.bounds.n_bound, D),
        "best bound is not the max of the two",
    )
    need(
        report.bounds.convex_bound
        == convex_bound_for(report.problem, n, k, D),
        "convex bound formula mismatch",
    )
    expected_ratio = (
        Fraction(cost, report.bounds.best)
        if report.bounds.best > 0
        else Fraction(1)
    )
    need(report.ratio_vs_best == expected_ratio, "ratio differs from cost/best")
    return problems
