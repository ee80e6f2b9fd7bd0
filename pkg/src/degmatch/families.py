"""Deterministic generators for the graph families used as fixtures."""

from __future__ import annotations

from .errors import ValidationError
from .graphs import Graph

__all__ = [
    "half_graph",
    "windmill",
    "cycle",
    "path",
    "complete_bipartite",
    "disjoint_cliques",
    "disjoint_triangles",
    "regular_circulant",
    "make_family",
    "FAMILY_KINDS",
]


def half_graph(n: int) -> Graph:
    """Vertices 1..n (stored 0-based); edge ij iff i,j <= n/2 or i + n/2 <= j."""
    if n < 2 or n % 2:
        raise ValidationError(f"half graph needs an even n >= 2, got {n}")
    half = n // 2
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i <= half and j <= half) or (i + half <= j):
                edges.append((i - 1, j - 1))
    return Graph(n, frozenset(edges))


def windmill(t: int, l: int) -> Graph:
    """t cliques on l vertices sharing one central vertex (id 0)."""
    if t < 1:
        raise ValidationError(f"windmill needs t >= 1 blades, got {t}")
    if l < 2:
        raise ValidationError(f"windmill needs clique size l >= 2, got {l}")
    n = t * (l - 1) + 1
    edges = []
    for b in range(t):
        blade = [0] + [1 + b * (l - 1) + i for i in range(l - 1)]
        for a in range(len(blade)):
            for c in range(a + 1, len(blade)):
                edges.append((blade[a], blade[c]))
    return Graph(n, frozenset(edges))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValidationError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValidationError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValidationError(f"complete bipartite needs both sides >= 1, got {a}, {b}")
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def disjoint_cliques(count: int, size: int) -> Graph:
    if count < 1 or size < 1:
        raise ValidationError(f"need count >= 1 and size >= 1, got {count}, {size}")
    edges = []
    for c in range(count):
        base = c * size
        for i in range(size):
            for j in range(i + 1, size):
                edges.append((base + i, base + j))
    return Graph(count * size, frozenset(edges))


def disjoint_triangles(count: int) -> Graph:
    return disjoint_cliques(count, 3)


def regular_circulant(n: int, r: int) -> Graph:
    """r-regular circulant: i joined to i +- 1 .. i +- r//2 (mod n), plus the
    antipode when r is odd (which forces n even)."""
    if n < 1 or r < 0 or r >= n:
        raise ValidationError(f"need 0 <= r < n, got n={n}, r={r}")
    if (n * r) % 2:
        raise ValidationError(f"n*r must be even, got n={n}, r={r}")
    edges = set()
    for i in range(n):
        for off in range(1, r // 2 + 1):
            j = (i + off) % n
            edges.add((i, j) if i < j else (j, i))
        if r % 2:
            j = (i + n // 2) % n
            edges.add((i, j) if i < j else (j, i))
    return Graph(n, frozenset(edges))


FAMILY_KINDS = (
    "half-graph",
    "windmill",
    "cycle",
    "path",
    "complete-bipartite",
    "disjoint-triangles",
    "disjoint-cliques",
    "regular-circulant",
)


def make_family(kind: str, **params: int) -> Graph:
    """Dispatch by family name; hyphens and underscores are interchangeable."""
    key = kind.replace("_", "-").lower()

    def need(*names: str) -> list[int]:
        missing = [name for name in names if params.get(name) is None]
        if missing:
            raise ValidationError(f"family {key!r} needs parameters: {', '.join(missing)}")
        return [params[name] for name in names]

    if key == "half-graph":
        return half_graph(*need("n"))
    if key == "windmill":
        return windmill(*need("t", "l"))
    if key == "cycle":
        return cycle(*need("n"))
    if key == "path":
        return path(*need("n"))
    if key == "complete-bipartite":
        return complete_bipartite(*need("a", "b"))
    if key == "disjoint-triangles":
        return disjoint_triangles(*need("k"))
    if key == "disjoint-cliques":
        return disjoint_cliques(*need("k", "l"))
    if key == "regular-circulant":
        return regular_circulant(*need("n", "r"))
    raise ValidationError(f"unknown family kind {kind!r}; known: {', '.join(FAMILY_KINDS)}")
