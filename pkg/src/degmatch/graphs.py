"""Labelled simple graphs and matching machinery.

Graphs are immutable: a vertex count plus a frozenset of normalized edges
(u, v) with u < v. Matchings carry their host vertex count so covered and
uncovered vertex sets are well defined.

Edge-list text format: one edge per line as two whitespace-separated
0-based integers; lines starting with ``#`` are ignored; the first
non-comment line may be ``n <vertex_count>`` to declare isolated vertices.
"""

from __future__ import annotations

import random
import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceededError, InternalConsistencyError, ValidationError
from .sequences import DegreeSequence, make_sequence

__all__ = [
    "Edge",
    "Graph",
    "Matching",
    "max_matching",
    "max_matching_exhaustive",
    "greedy_maximal_matching",
    "min_maximal_matching",
    "pinch",
    "delete_vertex",
    "hh_swap",
    "verify_matching",
]

Edge = tuple[int, int]

EXHAUSTIVE_MATCHING_CAP = 10
MIN_MAXIMAL_CAP = 16


def _normalize_edges(edges: Iterable[Sequence[int]], n: int) -> frozenset[Edge]:
    out = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"edge ({u}, {v}) out of range for {n} vertices")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValidationError("vertex_count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.edges, self.vertex_count))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise ValidationError(f"vertex {v} out of range")
        return sum(1 for e in self.edges if v in e)

    @property
    def max_degree(self) -> int:
        degs = self.degrees()
        return max(degs) if degs else 0

    def degree_sequence(self) -> DegreeSequence:
        return make_sequence(self.degrees())

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        return adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.vertex_count:
            raise ValidationError(f"vertex {v} out of range")
        return tuple(sorted(u if w == v else w for (u, w) in self.edges if v in (u, w)))

    def is_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on the given vertices, relabelled densely in sorted order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[u], index[v]) for (u, v) in self.edges if u in index and v in index]
        return Graph(len(verts), frozenset(edges))

    def to_edge_list_text(self) -> str:
        lines = [f"n {self.vertex_count}"]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_edge_list_text(text: str) -> "Graph":
        declared = None
        pairs: list[Edge] = []
        saw_data = False
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if not saw_data and parts[0] == "n":
                if len(parts) != 2:
                    raise ValidationError(f"malformed vertex-count line: {line!r}")
                declared = int(parts[1])
                saw_data = True
                continue
            saw_data = True
            if len(parts) != 2:
                raise ValidationError(f"malformed edge line: {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValidationError(f"malformed edge line: {line!r}") from None
            pairs.append((u, v))
        if declared is None:
            declared = 1 + max((max(e) for e in pairs), default=-1)
        return Graph(declared, frozenset(pairs))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    edges: frozenset[Edge] = frozenset()
    host_vertex_count: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "edges", _normalize_edges(self.edges, self.host_vertex_count)
        )
        seen: set[int] = set()
        for u, v in sorted(self.edges):
            if u in seen or v in seen:
                raise ValidationError(f"matching edges are not vertex-disjoint at ({u}, {v})")
            seen.add(u)
            seen.add(v)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def matched_vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    @property
    def unmatched_vertices(self) -> frozenset[int]:
        return frozenset(range(self.host_vertex_count)) - self.matched_vertices


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching, exact on every simple graph.

    Augmenting-path search with blossom contraction; deterministic because
    vertices and adjacency are visited in index order.
    """
    n = g.vertex_count
    adj = g.adjacency()
    match = [-1] * n
    # greedy warm start, deterministic
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    p = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def try_augment(root: int) -> bool:
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            try_augment(v)
    edges = frozenset((v, match[v]) for v in range(n) if match[v] > v)
    return Matching(edges=edges, host_vertex_count=n)


def max_matching_exhaustive(g: Graph, cap: int = EXHAUSTIVE_MATCHING_CAP) -> Matching:
    """Naive exhaustive maximum matching; the independent oracle for tests.

    Branches on the lowest-indexed free vertex: leave it unmatched or pair
    it with each free later-indexed neighbor.
    """
    n = g.vertex_count
    if n > cap:
        raise CapExceededError(f"n={n} exceeds exhaustive matching cap {cap}")
    adj = g.adjacency()
    best: list[Edge] = []
    chosen: list[Edge] = []
    status = [False] * n  # matched flag

    def rec(v: int) -> None:
        nonlocal best
        while v < n and status[v]:
            v += 1
        if v >= n:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        free = sum(1 for i in range(v, n) if not status[i])
        if len(chosen) + free // 2 <= len(best):
            return
        # v stays unmatched
        rec(v + 1)
        # v matched to a later free neighbor
        status[v] = True
        for u in adj[v]:
            if u > v and not status[u]:
                status[u] = True
                chosen.append((v, u))
                rec(v + 1)
                chosen.pop()
                status[u] = False
        status[v] = False

    rec(0)
    return Matching(frozenset(best), n)


def greedy_maximal_matching(g: Graph, rng_seed: int = 0) -> Matching:
    """Randomized greedy maximal matching, reproducible from the seed."""
    rng = random.Random(rng_seed)
    edges = sorted(g.edges)
    rng.shuffle(edges)
    matched: set[int] = set()
    chosen = []
    for u, v in edges:
        if u not in matched and v not in matched:
            chosen.append((u, v))
            matched.add(u)
            matched.add(v)
    return Matching(frozenset(chosen), g.vertex_count)


def min_maximal_matching(g: Graph, cap: int = MIN_MAXIMAL_CAP) -> Matching:
    """Smallest maximal matching, by exhaustive branching.

    At the lowest-indexed vertex u that still has a free neighbor, every
    maximal matching either pairs u with one of those neighbors or leaves
    u unmatched forever; both branches are explored with a best-size bound.
    """
    n = g.vertex_count
    if n > cap:
        raise CapExceededError(f"instance too large for exact minimum maximal matching (n={n} > {cap})")
    adj = g.adjacency()
    edges_sorted = sorted(g.edges)
    seed = greedy_maximal_matching(g, 0)
    best_edges = sorted(seed.edges)
    best_size = len(best_edges)
    status = [0] * n  # 0 free, 1 matched, 2 never matched
    chosen: list[Edge] = []

    def leaf_is_maximal() -> bool:
        return all(status[u] == 1 or status[v] == 1 for u, v in edges_sorted)

    def rec() -> None:
        nonlocal best_edges, best_size
        if len(chosen) >= best_size:
            return
        u = -1
        for i in range(n):
            if status[i] == 0 and any(status[j] == 0 for j in adj[i]):
                u = i
                break
        if u == -1:
            if leaf_is_maximal() and len(chosen) < best_size:
                best_size = len(chosen)
                best_edges = sorted(chosen)
            return
        status[u] = 1
        for y in adj[u]:
            if status[y] == 0:
                status[y] = 1
                chosen.append((u, y) if u < y else (y, u))
                rec()
                chosen.pop()
                status[y] = 0
        status[u] = 0
        if all(status[j] != 2 for j in adj[u]):
            status[u] = 2
            rec()
            status[u] = 0

    rec()
    return Matching(frozenset(best_edges), n)


def pinch(g: Graph, m: Matching) -> Graph:
    """Replace a matching by a new vertex adjacent to all its endpoints.

    The old vertices keep their degrees; the new vertex (id = old count)
    gets degree 2|M|.
    """
    if m.host_vertex_count != g.vertex_count:
        raise ValidationError(
            f"matching host size {m.host_vertex_count} does not match graph size {g.vertex_count}"
        )
    if not m.edges <= g.edges:
        raise ValidationError("matching is not a sub-matching of the graph")
    if not m.edges:
        warnings.warn("pinching an empty matching only adds an isolated vertex", stacklevel=2)
    v_new = g.vertex_count
    new_edges = set(g.edges) - set(m.edges)
    for u in m.matched_vertices:
        new_edges.add((u, v_new))
    return Graph(g.vertex_count + 1, frozenset(new_edges))


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove a vertex and its edges; remaining ids are re-packed densely.

    Returns the new graph and the old-id -> new-id mapping.
    """
    if not 0 <= v < g.vertex_count:
        raise ValidationError(f"vertex {v} out of range")
    mapping = {old: (old if old < v else old - 1) for old in range(g.vertex_count) if old != v}
    edges = [(mapping[a], mapping[b]) for (a, b) in g.edges if v not in (a, b)]
    return Graph(g.vertex_count - 1, frozenset(edges)), mapping


def hh_swap(g: Graph, u: int, v_i: int, v_j: int) -> Graph:
    """Exchange one neighbor of u for a higher-degree non-neighbor.

    Requires u ~ v_i, u !~ v_j and deg(v_j) >= deg(v_i). A two-edge
    exchange then moves u's edge from v_i to v_j while preserving every
    vertex degree and leaving the rest of u's neighborhood unchanged.
    """
    if len({u, v_i, v_j}) != 3:
        raise ValidationError("u, v_i, v_j must be three distinct vertices")
    for x in (u, v_i, v_j):
        if not 0 <= x < g.vertex_count:
            raise ValidationError(f"vertex {x} out of range")
    if not g.is_edge(u, v_i):
        raise ValidationError(f"u={u} must be adjacent to v_i={v_i}")
    if g.is_edge(u, v_j):
        raise ValidationError(f"u={u} must not be adjacent to v_j={v_j}")
    deg = g.degrees()
    if deg[v_j] < deg[v_i]:
        raise ValidationError(
            f"deg(v_j)={deg[v_j]} must be at least deg(v_i)={deg[v_i]}"
        )
    ni = set(g.neighbors(v_i))
    w = next(
        (x for x in g.neighbors(v_j) if x not in ni and x not in (u, v_i)),
        None,
    )
    if w is None:
        # counting shows such a vertex always exists under the preconditions
        raise InternalConsistencyError("no exchange partner found despite valid preconditions")
    edges = set(g.edges)
    edges.discard((u, v_i) if u < v_i else (v_i, u))
    edges.discard((w, v_j) if w < v_j else (v_j, w))
    edges.add((u, v_j) if u < v_j else (v_j, u))
    edges.add((w, v_i) if w < v_i else (v_i, w))
    return Graph(g.vertex_count, frozenset(edges))


def verify_matching(g: Graph, m: Matching, require_maximal: bool = False) -> bool:
    """Check containment, disjointness, and (optionally) maximality."""
    if m.host_vertex_count != g.vertex_count:
        return False
    if not m.edges <= g.edges:
        return False
    seen: set[int] = set()
    for u, v in m.edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    if require_maximal:
        for u, v in g.edges:
            if u not in seen and v not in seen:
                return False
    return True
