"""Instance generators: tight families with recorded advice and optimum
witnesses, plus seeded random instances for stress testing.

The tight families drive their own approximation run through a PlannedAdvisor
(route expressed over original ids) and ship the recorded index script as the
advice payload, so a plain ScriptedAdvisor replay reproduces the worst case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .advisor import PlannedAdvisor
from .dpa import approx_dpa
from .graphs import Multigraph
from .instances import (
    DPAInstance,
    SSCInstance,
    Star,
    StarSolution,
    TwoECSInstance,
)
from .oracles import certify_exact_by_bound
from .ssc import approx_ssc


@dataclass(frozen=True)
class ExpectedCosts:
    alg_cost: int
    opt_cost: int


@dataclass(frozen=True)
class GeneratedInstance:
    instance: object
    advice: Optional[tuple[int, ...]] = None
    expected: Optional[ExpectedCosts] = None
    opt_witness: Optional[frozenset[int]] = None


def _arc_stars(vertex_count: int, arcs) -> SSCInstance:
    """One singleton star per arc, ids following arc list order."""
    stars = [Star(i, u, frozenset({v})) for i, (u, v) in enumerate(arcs)]
    return SSCInstance(vertex_count, stars)


def gen_dpa_tight(k: int) -> GeneratedInstance:
    """Bidirected family with approximation cost 3k+3 against optimum 2k+3.

    Two cycles sharing a vertex path plus two chords: n = 2k+3 vertices and
    3k+5 edges. Every edge becomes a pair of opposite singleton stars (edge i
    -> star ids 2i and 2i+1), so the same instance feeds both the power
    algorithm and the general star algorithm; one recorded script drives both
    to the same worst-case run.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    # Outer cycle 1 -> 3 -> 4 -> ... -> k+3 -> 2 -> 1, inner zig-zag cycle
    # through the l-vertices, and chords (1, k+3), (2, k+2).
    edges: list[tuple[int, int]] = [(1, 3)]
    edges += [(j, j + 1) for j in range(3, k + 3)]
    edges += [(k + 3, 2), (2, 1)]
    for i in range(1, k + 1):
        edges += [(2 + i, k + 3 + i), (k + 3 + i, 3 + i)]
    edges += [(1, k + 3), (2, k + 2)]
    assert len(edges) == 3 * k + 5
    n = 2 * k + 3
    arcs = [a for u, v in edges for a in ((u, v), (v, u))]
    instance = _arc_stars(n, arcs)

    plan = [("initial-arc", "arc", (k + 3, 2))]
    plan += [("extend", "vertex", t) for t in range(k + 2, 2, -1)]
    plan += [("extend", "vertex", 1)]
    advisor = PlannedAdvisor(plan)
    report = approx_dpa(instance, advisor)
    assert advisor.position == len(plan), "route not fully consumed"
    assert len(advisor.recorded) == len(plan), "route hit a silent choice"
    assert report.cost == 3 * k + 3

    # Spanning cycle 1 -> u_1 -> l_1 -> u_2 -> ... -> u_{k+1} -> 2 -> 1 as
    # forward stars: optimal because n vertices always need n stars.
    witness_ids = {0, 2 * (k + 1), 2 * (k + 2)}
    witness_ids |= {2 * i for i in range(k + 3, 3 * k + 3)}
    witness = StarSolution(frozenset(witness_ids))
    assert certify_exact_by_bound(instance, witness)
    return GeneratedInstance(
        instance,
        tuple(advisor.recorded),
        ExpectedCosts(3 * k + 3, 2 * k + 3),
        witness.selected,
    )


def gen_ssc_tight(k: int) -> GeneratedInstance:
    """Nested-gadget family with approximation cost 8k+2 against optimum 5k+2.

    Level 1 is an 11-arc digraph on 7 vertices; each further level splices a
    5-vertex gadget into the previous level's designated 2-cycle (rewriting
    that pair of arcs in place and appending 9 new ones). n = 5k+2 and the
    arc count is 9k+2; every arc is its own singleton star.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    arcs: list[tuple[int, int]] = [
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1),
        (6, 5), (5, 3), (3, 1), (1, 6),
    ]
    n = 7
    levels = [(1, 2, 3, 4, 5, 6)]
    for _ in range(2, k + 1):
        x, y = levels[-1][4:]
        b2, c2, d2, x2, y2 = n + 1, n + 2, n + 3, n + 4, n + 5
        a2 = x
        arcs[arcs.index((x, y))] = (y2, y)
        arcs[arcs.index((y, x))] = (y, y2)
        arcs += [
            (a2, b2), (b2, c2), (c2, d2), (d2, x2), (x2, y2),
            (y2, x2), (x2, c2), (c2, a2), (a2, y2),
        ]
        levels.append((a2, b2, c2, d2, x2, y2))
        n += 5
    assert len(arcs) == 9 * k + 2 and n == 5 * k + 2
    instance = _arc_stars(n, arcs)

    # Route: peel the innermost gadget first, one gadget per 5 choices, then
    # close out the base level with its 2-cycle start.
    plan: list[tuple[str, str, object]] = []
    for j in range(k, 0, -1):
        a, b, c, d, x, y = levels[j - 1]
        plan += [
            ("initial-arc", "arc", (c, a)),
            ("extend", "vertex", y),
            ("extend", "vertex", x),
            ("initial-arc", "arc", (c, d)),
            ("initial-arc", "arc", (a, b)),
        ]
    plan.append(("initial-arc", "arc", (6, 7)))
    advisor = PlannedAdvisor(plan)
    report = approx_ssc(instance, advisor)
    assert advisor.position == len(plan), "route not fully consumed"
    assert len(advisor.recorded) == len(plan), "route hit a silent choice"
    assert report.cost == 8 * k + 2

    # Spanning cycle: base 7-cycle arcs, detouring through each gadget via
    # its first five appended arcs (the level rewire keeps ids 0..6 valid).
    witness_ids = set(range(7))
    for j in range(2, k + 1):
        witness_ids |= set(range(9 * j - 7, 9 * j - 2))
    witness = StarSolution(frozenset(witness_ids))
    assert certify_exact_by_bound(instance, witness)
    return GeneratedInstance(
        instance,
        tuple(advisor.recorded),
        ExpectedCosts(8 * k + 2, 5 * k + 2),
        witness.selected,
    )


def gen_random_ssc(
    n: int,
    extra_arc_factor: float = 1.0,
    max_star_fan: int = 3,
    seed: int = 0,
) -> GeneratedInstance:
    """Random strongly connected star instance: shuffled spanning cycle plus
    extra arcs, each vertex's out-arcs grouped into stars of bounded fan."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if max_star_fan < 1:
        raise ValueError("max_star_fan must be >= 1")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    arc_list = [(order[i], order[(i + 1) % n]) for i in range(n)]
    present = set(arc_list)
    for _ in range(int(round(extra_arc_factor * n))):
        for _attempt in range(20):
            u = rng.randrange(1, n + 1)
            v = rng.randrange(1, n + 1)
            if u != v and (u, v) not in present:
                present.add((u, v))
                arc_list.append((u, v))
                break
    return GeneratedInstance(_group_into_stars(n, arc_list, max_star_fan, rng))


def gen_random_bidirected(
    n: int,
    extra_edge_factor: float = 0.8,
    max_star_fan: int = 3,
    seed: int = 0,
) -> GeneratedInstance:
    """Random bidirected star instance (every arc paired with its reverse)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if max_star_fan < 1:
        raise ValueError("max_star_fan must be >= 1")
    rng = random.Random(seed)
    edges = _random_edge_set(n, int(round(extra_edge_factor * n)), rng)
    arc_list = [a for u, v in edges for a in ((u, v), (v, u))]
    return GeneratedInstance(_group_into_stars(n, arc_list, max_star_fan, rng))


def gen_random_2ecs(
    n: int, extra_edge_factor: float = 0.7, seed: int = 0
) -> GeneratedInstance:
    """Random 2-edge-connected multigraph: spanning cycle plus extra edges;
    parallel edges are allowed (for n = 2 the cycle itself is a parallel pair)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    for _ in range(int(round(extra_edge_factor * n))):
        u = rng.randrange(1, n + 1)
        v = rng.randrange(1, n + 1)
        while v == u:
            v = rng.randrange(1, n + 1)
        edges.append((u, v))
    return GeneratedInstance(TwoECSInstance(Multigraph(n, edges)))


def gen_random_dpa(
    n: int, zero_cost_prob: float = 0.4, seed: int = 0, max_edges: int = 12
) -> GeneratedInstance:
    """Random connected power-assignment instance: spanning cycle (deduped,
    so n = 2 yields a single edge) plus random extra pairs, costs 0/1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pairs: set[frozenset[int]] = set()
    edges: list[tuple[int, int, int]] = []

    def add(u: int, v: int) -> None:
        pairs.add(frozenset((u, v)))
        cost = 0 if rng.random() < zero_cost_prob else 1
        edges.append((u, v, cost))

    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        if frozenset((u, v)) not in pairs:
            add(u, v)
    for u, v in combinations(range(1, n + 1), 2):
        if len(edges) >= max_edges:
            break
        if frozenset((u, v)) not in pairs and rng.random() < 0.25:
            add(u, v)
    return GeneratedInstance(DPAInstance(n, edges))


def _random_edge_set(n: int, extra: int, rng: random.Random) -> list[tuple[int, int]]:
    """Spanning cycle plus `extra` distinct undirected edges (no parallels)."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pairs: set[frozenset[int]] = set()
    edges: list[tuple[int, int]] = []
    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        if frozenset((u, v)) not in pairs:
            pairs.add(frozenset((u, v)))
            edges.append((u, v))
    for _ in range(extra):
        for _attempt in range(20):
            u = rng.randrange(1, n + 1)
            v = rng.randrange(1, n + 1)
            if u != v and frozenset((u, v)) not in pairs:
                pairs.add(frozenset((u, v)))
                edges.append((u, v))
                break
    return edges


def _group_into_stars(
    n: int, arc_list: list[tuple[int, int]], max_star_fan: int, rng: random.Random
) -> SSCInstance:
    """Chunk each vertex's out-arcs (shuffled) into stars of bounded fan."""
    by_source: dict[int, list[int]] = {}
    for u, v in arc_list:
        by_source.setdefault(u, []).append(v)
    stars: list[Star] = []
    for u in sorted(by_source):
        sinks = by_source[u]
        rng.shuffle(sinks)
        for i in range(0, len(sinks), max_star_fan):
            chunk = sinks[i : i + max_star_fan]
            stars.append(Star(len(stars), u, frozenset(chunk)))
    return SSCInstance(n, stars)
