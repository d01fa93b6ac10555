"""Integer dual certificates: families of vertex cuts with unit multipliers.

A certificate is feasible when no star (resp. no edge) crosses two of its
cuts; its objective is then a lower bound on the optimum by weak duality.
Cuts are always expressed over ORIGINAL vertex ids and re-checked against the
original instance only — never against algorithm internals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .instances import SSCInstance, TwoECSInstance

SSC = "ssc"
TWOECS = "2ecs"


@dataclass(frozen=True)
class Cut:
    """A nonempty proper subset of the vertices."""

    side: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "side", frozenset(self.side))
        if not self.side:
            raise ValueError("cut side must be nonempty")


@dataclass(frozen=True)
class DualCertificate:
    problem: str  # SSC or TWOECS
    cuts: tuple[Cut, ...]

    def __post_init__(self) -> None:
        if self.problem not in (SSC, TWOECS):
            raise ValueError(f"unknown problem kind {self.problem!r}")
        object.__setattr__(self, "cuts", tuple(self.cuts))


class LowerBounds(NamedTuple):
    dual_objective: int
    n_bound: int
    best: int


def _check_cut(side: frozenset[int], n: int) -> None:
    for v in side:
        if not (1 <= v <= n):
            raise ValueError(f"cut vertex {v} out of range 1..{n}")
    if len(side) >= n:
        raise ValueError("cut side must be a proper subset of the vertices")


def crossing_stars(s: SSCInstance, cut: Cut) -> frozenset[int]:
    """Stars with source inside the cut and at least one sink outside."""
    _check_cut(cut.side, s.vertex_count)
    side = cut.side
    return frozenset(
        st.id
        for st in s.stars
        if st.source in side and any(t not in side for t in st.sinks)
    )


def crossing_edges(t: TwoECSInstance, cut: Cut) -> frozenset[int]:
    """Edge ids with exactly one endpoint inside the cut."""
    _check_cut(cut.side, t.graph.vertex_count)
    side = cut.side
    return frozenset(
        eid
        for eid, (u, v) in enumerate(t.graph.edges)
        if (u in side) != (v in side)
    )


def verify_certificate(
    instance, cert: DualCertificate
) -> tuple[bool, int, list[tuple[int, tuple[int, ...]]]]:
    """Check dual feasibility against the original instance.

    Returns (feasible, objective, violations); each violation is
    (star id or edge id, indices of the cuts it crosses). Feasible means no
    item crosses more than one cut. Objective: number of cuts for star
    instances, twice the number of cuts for edge instances.
    """
    if isinstance(instance, SSCInstance):
        if cert.problem != SSC:
            raise ValueError(f"certificate kind {cert.problem!r} does not match instance")
        crossers = [crossing_stars(instance, cut) for cut in cert.cuts]
        objective = len(cert.cuts)
    elif isinstance(instance, TwoECSInstance):
        if cert.problem != TWOECS:
            raise ValueError(f"certificate kind {cert.problem!r} does not match instance")
        crossers = [crossing_edges(instance, cut) for cut in cert.cuts]
        objective = 2 * len(cert.cuts)
    else:
        raise TypeError(f"cannot verify certificate against {type(instance).__name__}")
    hit: dict[int, list[int]] = {}
    for ci, ids in enumerate(crossers):
        for item in ids:
            hit.setdefault(item, []).append(ci)
    violations = [
        (item, tuple(cut_indices))
        for item, cut_indices in sorted(hit.items())
        if len(cut_indices) >= 2
    ]
    return (not violations, objective, violations)


def lower_bounds(instance, cert: DualCertificate) -> LowerBounds:
    """Combine the certificate's dual objective with the vertex-count bound.

    The vertex-count bound holds because (with >= 2 vertices) every vertex
    needs an out-arc from a selected star (star instances) or two incident
    edges (edge instances). A 1-vertex instance needs nothing, so its bound
    is 0.
    """
    feasible, objective, violations = verify_certificate(instance, cert)
    if not feasible:
        raise ValueError(f"certificate is infeasible: {violations}")
    if isinstance(instance, SSCInstance):
        n = instance.vertex_count
    else:
        n = instance.graph.vertex_count
    n_bound = n if n >= 2 else 0
    return LowerBounds(objective, n_bound, max(objective, n_bound))
