"""Degree-preserving growth: grow a graph one vertex at a time by pinching.

A growth step removes a matching of size delta/2 and attaches a new vertex
to all of its endpoints, so existing degrees never change and the newcomer
has degree delta. Which matching gets removed is a policy choice; three
built-ins are provided and a callable can be passed instead.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import InfeasibleDeltaError, ValidationError
from .graphs import Edge, Graph, Matching, max_matching, pinch

__all__ = [
    "MATCHING_POLICIES",
    "DpStepRecord",
    "GrowthTrace",
    "feasible_deltas",
    "dp_step",
    "grow",
]

MATCHING_POLICIES = ("random", "first", "max-degree")

MatchingPolicy = Union[str, Callable[[Graph, int, random.Random], Matching]]


def feasible_deltas(g: Graph) -> set[int]:
    """Degrees a new vertex can take in this graph: even values up to twice
    the matching number."""
    nu = max_matching(g).size
    return set(range(2, 2 * nu + 1, 2))


def _relabelled_max_matching(g: Graph, rng: random.Random) -> list[Edge]:
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    relabelled = Graph(
        g.vertex_count, frozenset((perm[u], perm[v]) for u, v in g.edges)
    )
    inverse = [0] * g.vertex_count
    for old, new in enumerate(perm):
        inverse[new] = old
    back = [
        (inverse[u], inverse[v]) if inverse[u] < inverse[v] else (inverse[v], inverse[u])
        for u, v in max_matching(relabelled).edges
    ]
    return sorted(back)


def _select_matching(g: Graph, size: int, policy: MatchingPolicy, rng: random.Random) -> Optional[Matching]:
    """A matching of exactly ``size`` edges per policy, or None if infeasible."""
    if callable(policy):
        m = policy(g, size, rng)
        return m if m is not None and m.size == size else None
    if policy == "random":
        # randomize the vertex labels seen by the exact matcher, then keep a
        # random subset of the matching it finds
        edges = _relabelled_max_matching(g, rng)
        if len(edges) < size:
            return None
        return Matching(frozenset(rng.sample(edges, size)), g.vertex_count)
    if policy == "first":
        full = max_matching(g)
        if full.size < size:
            return None
        return Matching(frozenset(sorted(full.edges)[:size]), g.vertex_count)
    if policy == "max-degree":
        deg = g.degrees()

        def weight(e: Edge) -> tuple[int, Edge]:
            return (-(deg[e[0]] + deg[e[1]]), e)

        matched: set[int] = set()
        greedy = []
        for u, v in sorted(g.edges, key=weight):
            if u not in matched and v not in matched:
                greedy.append((u, v))
                matched.add(u)
                matched.add(v)
        pool = greedy if len(greedy) >= size else sorted(max_matching(g).edges)
        if len(pool) < size:
            return None
        pool = sorted(pool, key=weight)[:size]
        return Matching(frozenset(pool), g.vertex_count)
    raise ValidationError(f"unknown matching policy {policy!r}; known: {', '.join(MATCHING_POLICIES)}")


@dataclass(frozen=True)
class DpStepRecord:
    step_index: int
    delta: int
    removed_matching: tuple[Edge, ...]
    new_vertex: int
    resulting_degree_sequence: tuple[int, ...]

    @property
    def resulting_vertex_count(self) -> int:
        return len(self.resulting_degree_sequence)

    @property
    def resulting_edge_count(self) -> int:
        return sum(self.resulting_degree_sequence) // 2


def dp_step(
    g: Graph,
    delta: int,
    policy: MatchingPolicy = "random",
    rng_seed: int = 0,
    *,
    step_index: int = 0,
) -> tuple[Graph, DpStepRecord]:
    """One growth step: remove a matching of size delta/2, pinch it onto a
    new vertex. Raises listing the feasible degrees when delta cannot be
    realized in this graph."""
    if delta < 2 or delta % 2:
        raise ValidationError(f"delta={delta} must be a positive even integer")
    rng = random.Random(rng_seed)
    m = _select_matching(g, delta // 2, policy, rng)
    if m is None:
        raise InfeasibleDeltaError(
            f"delta={delta} is not feasible here", feasible=feasible_deltas(g)
        )
    grown = pinch(g, m)
    record = DpStepRecord(
        step_index=step_index,
        delta=delta,
        removed_matching=tuple(sorted(m.edges)),
        new_vertex=g.vertex_count,
        resulting_degree_sequence=grown.degree_sequence().degrees,
    )
    return grown, record


@dataclass(frozen=True)
class GrowthTrace:
    """Ordered log of growth steps from a seed graph."""

    seed_vertex_count: int
    seed_edge_count: int
    seed_degree_sequence: tuple[int, ...]
    requested_steps: int
    steps: tuple[DpStepRecord, ...]
    final_graph: Graph

    @property
    def halted_early(self) -> bool:
        return len(self.steps) < self.requested_steps

    def to_csv(self) -> str:
        lines = ["step_index,delta,new_vertex,n,m"]
        for s in self.steps:
            lines.append(
                f"{s.step_index},{s.delta},{s.new_vertex},"
                f"{s.resulting_vertex_count},{s.resulting_edge_count}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "seed": {
                "n": self.seed_vertex_count,
                "m": self.seed_edge_count,
                "degree_sequence": list(self.seed_degree_sequence),
            },
            "steps": [
                {
                    "step_index": s.step_index,
                    "delta": s.delta,
                    "removed_matching": [list(e) for e in s.removed_matching],
                    "new_vertex": s.new_vertex,
                    "resulting_degree_sequence": list(s.resulting_degree_sequence),
                }
                for s in self.steps
            ],
        }
        return json.dumps(payload)


def _parse_delta_policy(policy: str) -> tuple[str, Optional[int]]:
    if policy in ("random", "max"):
        return policy, None
    if policy.startswith("fixed:"):
        try:
            value = int(policy.split(":", 1)[1])
        except ValueError:
            raise ValidationError(f"bad fixed delta in policy {policy!r}") from None
        if value < 2 or value % 2:
            raise ValidationError(f"fixed delta must be a positive even integer, got {value}")
        return "fixed", value
    raise ValidationError(f"unknown delta policy {policy!r}; expected fixed:<delta>, random or max")


def grow(
    g0: Graph,
    steps: int,
    delta_policy: str = "max",
    rng_seed: int = 0,
    matching_policy: MatchingPolicy = "random",
) -> GrowthTrace:
    """Iterate growth steps from a seed graph.

    ``delta_policy`` is one of ``fixed:<delta>``, ``random`` (uniform over
    the currently feasible degrees) or ``max``. Runs halt early, with a
    truncated trace, when no feasible degree remains; that is an outcome,
    not an error. Fully reproducible from (seed graph, policies, seed).
    """
    if steps < 0:
        raise ValidationError(f"steps={steps} must be non-negative")
    kind, fixed_value = _parse_delta_policy(delta_policy)
    rng = random.Random(rng_seed)
    g = g0
    records: list[DpStepRecord] = []
    for idx in range(steps):
        nu = max_matching(g).size
        if kind == "fixed":
            delta = fixed_value if fixed_value <= 2 * nu else None
        elif kind == "max":
            delta = 2 * nu if nu > 0 else None
        else:
            delta = rng.choice(range(2, 2 * nu + 1, 2)) if nu > 0 else None
        if delta is None:
            break
        step_seed = rng.randrange(2**32)
        g, record = dp_step(
            g, delta, matching_policy, step_seed, step_index=idx
        )
        records.append(record)
    return GrowthTrace(
        seed_vertex_count=g0.vertex_count,
        seed_edge_count=g0.m,
        seed_degree_sequence=g0.degree_sequence().degrees,
        requested_steps=steps,
        steps=tuple(records),
        final_graph=g,
    )
