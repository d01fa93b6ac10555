"""Problem instances (SSC, MSCS, DPA, 2ECS), transformations, feasibility checks.

Star ids and edge ids are 0-based list positions; vertex ids are 1-based.
Instances validate their own feasibility on construction (strong connectivity
or 2-edge-connectivity of the underlying graph), so algorithms may assume it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import (
    Digraph,
    Multigraph,
    is_strongly_connected,
    is_two_edge_connected,
)


class InfeasibleInstanceError(Exception):
    """The instance admits no feasible solution (connectivity fails)."""


@dataclass(frozen=True)
class Star:
    """A set of arcs sharing a source vertex, stored as source + sink set."""

    id: int
    source: int
    sinks: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sinks", frozenset(self.sinks))
        if not self.sinks:
            raise ValueError(f"star {self.id}: empty sink set")
        if self.source in self.sinks:
            raise ValueError(f"star {self.id}: source {self.source} among sinks")

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((self.source, t) for t in sorted(self.sinks))


class SSCInstance:
    """Star strong connectivity: pick fewest stars whose arcs span strong
    connectivity over all vertices."""

    __slots__ = ("vertex_count", "stars", "_digraph")

    def __init__(self, vertex_count: int, stars: Sequence[Star]):
        if vertex_count < 1:
            raise ValueError("vertex_count must be >= 1")
        for i, st in enumerate(stars):
            if st.id != i:
                raise ValueError(f"star at position {i} has id {st.id}")
            if not (1 <= st.source <= vertex_count):
                raise ValueError(f"star {i}: source {st.source} out of range")
            for t in st.sinks:
                if not (1 <= t <= vertex_count):
                    raise ValueError(f"star {i}: sink {t} out of range")
        self.vertex_count = vertex_count
        self.stars: tuple[Star, ...] = tuple(stars)
        arcs = [a for st in self.stars for a in st.arcs()]
        g = Digraph(vertex_count, arcs)
        if not is_strongly_connected(g):
            raise InfeasibleInstanceError(
                "union of all stars is not strongly connected"
            )
        self._digraph = g

    def digraph(self) -> Digraph:
        """Digraph over the union of all stars' arcs (duplicates merged)."""
        return self._digraph

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SSCInstance(n={self.vertex_count}, stars={len(self.stars)})"


class DPAInstance:
    """Dual power assignment: undirected edges with cost in {0,1}; choose the
    fewest high-power vertices so the induced digraph is strongly connected."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges: Sequence[tuple[int, int, int]]):
        if vertex_count < 1:
            raise ValueError("vertex_count must be >= 1")
        seen: set[frozenset[int]] = set()
        for u, v, c in edges:
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop edge at vertex {u}")
            if c not in (0, 1):
                raise ValueError(f"edge ({u},{v}): cost must be 0 or 1, got {c}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int, int], ...] = tuple(
            (u, v, c) for u, v, c in edges
        )
        full = dpa_induced_graph(self, frozenset(range(1, vertex_count + 1)))
        if not is_strongly_connected(full):
            raise InfeasibleInstanceError(
                "even with every vertex at high power the graph is not "
                "strongly connected"
            )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DPAInstance(n={self.vertex_count}, m={len(self.edges)})"


class TwoECSInstance:
    """Minimum 2-edge-connected spanning subgraph over a multigraph."""

    __slots__ = ("graph",)

    def __init__(self, graph: Multigraph):
        if not is_two_edge_connected(graph):
            raise InfeasibleInstanceError("input multigraph is not 2-edge-connected")
        self.graph = graph

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        g = self.graph
        return f"TwoECSInstance(n={g.vertex_count}, m={len(g.edges)})"


@dataclass(frozen=True)
class StarSolution:
    selected: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "selected", frozenset(self.selected))

    @property
    def cost(self) -> int:
        return len(self.selected)


@dataclass(frozen=True)
class EdgeSolution:
    selected: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "selected", frozenset(self.selected))

    @property
    def cost(self) -> int:
        return len(self.selected)


@dataclass(frozen=True)
class PowerSolution:
    """Set of vertices assigned high power; everyone else stays low."""

    selected: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "selected", frozenset(self.selected))

    @property
    def cost(self) -> int:
        return len(self.selected)


def dpa_induced_graph(d: DPAInstance, high: Iterable[int]) -> Digraph:
    """Digraph a power assignment induces: arc u->v iff the edge exists and
    is free or u transmits at high power."""
    high_set = set(high)
    arcs: list[tuple[int, int]] = []
    for u, v, c in d.edges:
        if c == 0 or u in high_set:
            arcs.append((u, v))
        if c == 0 or v in high_set:
            arcs.append((v, u))
    return Digraph(d.vertex_count, arcs)


def dpa_to_ssc(d: DPAInstance) -> tuple[SSCInstance, dict[int, int]]:
    """Reduce DPA to SSC: one SSC vertex per zero-cost component, one star per
    original vertex with component-crossing edges.

    Returns (instance, mapping) where mapping sends each original vertex that
    received a star to that star's id. Solutions convert through the mapping
    with cost preserved exactly.
    """
    n = d.vertex_count
    zero = Digraph(
        n,
        [a for u, v, c in d.edges if c == 0 for a in ((u, v), (v, u))],
    )
    comp = _scc_labels(zero)
    comp_count = max(comp.values())
    stars: list[Star] = []
    mapping: dict[int, int] = {}
    for v in range(1, n + 1):
        targets: set[int] = set()
        for a, b, _c in d.edges:
            if a == v and comp[b] != comp[v]:
                targets.add(comp[b])
            elif b == v and comp[a] != comp[v]:
                targets.add(comp[a])
        if targets:
            mapping[v] = len(stars)
            stars.append(Star(len(stars), comp[v], frozenset(targets)))
    try:
        inst = SSCInstance(comp_count, stars)
    except InfeasibleInstanceError:
        raise InfeasibleInstanceError(
            "power assignment instance is infeasible: component graph is not "
            "strongly connected"
        ) from None
    return inst, mapping


def _scc_labels(g: Digraph) -> dict[int, int]:
    """Strongly connected component labels, dense 1.. in order of smallest member."""
    n = g.vertex_count
    order: list[int] = []
    seen = bytearray(n + 1)
    for root in range(1, n + 1):
        if seen[root]:
            continue
        # Iterative post-order DFS.
        stack: list[tuple[int, int]] = [(root, 0)]
        seen[root] = 1
        while stack:
            v, idx = stack[-1]
            nbrs = g.out_neighbors(v)
            while idx < len(nbrs) and seen[nbrs[idx]]:
                idx += 1
            if idx < len(nbrs):
                stack[-1] = (v, idx + 1)
                w = nbrs[idx]
                seen[w] = 1
                stack.append((w, 0))
            else:
                stack.pop()
                order.append(v)
    label = [0] * (n + 1)
    next_label = 0
    for v in reversed(order):
        if label[v]:
            continue
        next_label += 1
        stack2 = [v]
        label[v] = next_label
        while stack2:
            x = stack2.pop()
            for w in g.in_neighbors(x):
                if not label[w]:
                    label[w] = next_label
                    stack2.append(w)
    # Renumber so component ids follow each component's smallest vertex.
    first_seen: dict[int, int] = {}
    for v in range(1, n + 1):
        first_seen.setdefault(label[v], len(first_seen) + 1)
    return {v: first_seen[label[v]] for v in range(1, n + 1)}


def ssc_to_dpa(s: SSCInstance) -> DPAInstance:
    """Reduce a bidirected SSC instance to DPA: one vertex per star, free
    cycle edges within same-source groups, unit edges per reverse arc pair."""
    g = s.digraph()
    if not g.is_bidirected():
        raise ValueError("ssc_to_dpa requires a bidirected instance")
    edges: list[tuple[int, int, int]] = []
    by_source: dict[int, list[Star]] = {}
    for st in s.stars:
        by_source.setdefault(st.source, []).append(st)
    for source in sorted(by_source):
        group = sorted(by_source[source], key=lambda st: st.id)
        if len(group) >= 2:
            # A 2-cycle over 2 vertices would need a parallel pair; one free
            # edge suffices for the same connectivity.
            for a, b in zip(group, group[1:]):
                edges.append((a.id + 1, b.id + 1, 0))
            if len(group) > 2:
                edges.append((group[-1].id + 1, group[0].id + 1, 0))
    for f1, f2 in combinations(s.stars, 2):
        if f1.source == f2.source:
            continue
        if f2.source in f1.sinks and f1.source in f2.sinks:
            edges.append((f1.id + 1, f2.id + 1, 1))
    return DPAInstance(len(s.stars), edges)


def mscs_to_ssc(g: Digraph) -> SSCInstance:
    """View a digraph as SSC with one singleton star per arc, in arc order."""
    stars = [
        Star(i, u, frozenset({v})) for i, (u, v) in enumerate(g.arcs)
    ]
    return SSCInstance(g.vertex_count, stars)


def check_feasible(instance, solution) -> bool:
    """Direct connectivity test of a solution against its instance."""
    if isinstance(instance, SSCInstance) and isinstance(solution, StarSolution):
        for sid in solution.selected:
            if not (0 <= sid < len(instance.stars)):
                raise ValueError(f"unknown star id {sid}")
        arcs = [
            a
            for sid in solution.selected
            for a in instance.stars[sid].arcs()
        ]
        return is_strongly_connected(Digraph(instance.vertex_count, arcs))
    if isinstance(instance, TwoECSInstance) and isinstance(solution, EdgeSolution):
        g = instance.graph
        for eid in solution.selected:
            if not (0 <= eid < len(g.edges)):
                raise ValueError(f"unknown edge id {eid}")
        sub = Multigraph(
            g.vertex_count,
            [g.edges[eid] for eid in sorted(solution.selected)],
        )
        return is_two_edge_connected(sub)
    if isinstance(instance, DPAInstance) and isinstance(solution, PowerSolution):
        for v in solution.selected:
            if not (1 <= v <= instance.vertex_count):
                raise ValueError(f"unknown vertex id {v}")
        return is_strongly_connected(dpa_induced_graph(instance, solution.selected))
    raise TypeError(
        f"unsupported instance/solution pair: "
        f"{type(instance).__name__}/{type(solution).__name__}"
    )


def check_cut_feasible(
    s: SSCInstance, solution: StarSolution, exhaustive_limit: int = 12
) -> bool:
    """Cut-covering semantics: every nonempty proper vertex subset must have a
    selected star with source inside and a sink outside. Exhaustive over all
    2^n - 2 cuts, so only for small instances."""
    n = s.vertex_count
    if n > exhaustive_limit:
        raise ValueError(
            f"vertex count {n} exceeds exhaustive limit {exhaustive_limit}"
        )
    for sid in solution.selected:
        if not (0 <= sid < len(s.stars)):
            raise ValueError(f"unknown star id {sid}")
    chosen = [s.stars[sid] for sid in sorted(solution.selected)]
    for bits in range(1, (1 << n) - 1):
        side = {v for v in range(1, n + 1) if bits >> (v - 1) & 1}
        if not any(
            st.source in side and any(t not in side for t in st.sinks)
            for st in chosen
        ):
            return False
    return True
