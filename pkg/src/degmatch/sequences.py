"""Degree sequences and the sequence-level primitives everything else builds on.

Sequences are kept arranged (sorted non-increasing), i.e. the usual
convention d_1 >= d_2 >= ... >= d_n. Operations that take a *position*
take it 1-based to match that notation; plain Python indexing on
``degrees`` stays 0-based.

Text format: comma-separated decimal integers with optional whitespace,
e.g. ``"3,2,2,1"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ValidationError

__all__ = [
    "DegreeSequence",
    "SupportSet",
    "make_sequence",
    "parse_sequence",
    "t_d",
    "left_shift_leq",
    "reduce_top",
    "augment",
]


@dataclass(frozen=True)
class DegreeSequence:
    """An arranged sequence of non-negative vertex degrees.

    Instances are immutable and hashable. Build with :func:`make_sequence`
    when the input order is arbitrary; direct construction insists the
    entries already be arranged.
    """

    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        degs = tuple(self.degrees)
        object.__setattr__(self, "degrees", degs)
        for i, x in enumerate(degs):
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"degree at position {i} is not an integer: {x!r}")
            if x < 0:
                raise ValidationError(f"negative degree at position {i}: {x}")
        if any(degs[i] < degs[i + 1] for i in range(len(degs) - 1)):
            raise ValidationError("degrees must be non-increasing; use make_sequence to sort")

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    @property
    def max_degree(self) -> int:
        return self.degrees[0] if self.degrees else 0

    @property
    def edge_count_if_graphic(self) -> int:
        """degree_sum / 2; defined only when the degree sum is even."""
        s = self.degree_sum
        if s % 2:
            raise ValidationError(f"degree sum {s} is odd, edge count undefined")
        return s // 2

    @property
    def has_zeros(self) -> bool:
        return bool(self.degrees) and self.degrees[-1] == 0

    def strip_zeros(self) -> tuple["DegreeSequence", bool]:
        """Drop trailing zero entries; return (stripped sequence, whether any were dropped)."""
        k = len(self.degrees)
        while k and self.degrees[k - 1] == 0:
            k -= 1
        if k == len(self.degrees):
            return self, False
        return DegreeSequence(self.degrees[:k]), True

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self) -> str:
        return f"({self.to_text()})"


def make_sequence(values: Iterable[int]) -> DegreeSequence:
    """Arrange arbitrary degree values into a :class:`DegreeSequence`.

    Raises ValidationError naming the offending input position on a
    negative or non-integer entry.
    """
    vals = list(values)
    for i, x in enumerate(vals):
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValidationError(f"degree at position {i} is not an integer: {x!r}")
        if x < 0:
            raise ValidationError(f"negative degree at position {i}: {x}")
    return DegreeSequence(tuple(sorted(vals, reverse=True)))


def parse_sequence(text: str) -> DegreeSequence:
    """Parse the comma-separated text format, e.g. ``"3, 2,2,1"``."""
    stripped = text.strip()
    if not stripped:
        return DegreeSequence()
    parts = [p.strip() for p in stripped.split(",")]
    values = []
    for i, p in enumerate(parts):
        try:
            values.append(int(p))
        except ValueError:
            raise ValidationError(f"entry {i} is not an integer: {p!r}") from None
    return make_sequence(values)


@dataclass(frozen=True)
class SupportSet:
    """A strictly increasing set of 1-based positions."""

    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        for i, x in enumerate(idx):
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise ValidationError(f"support index at position {i} must be a positive integer: {x!r}")
        if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
            raise ValidationError("support indices must be strictly increasing")

    @classmethod
    def of(cls, indices: Iterable[int]) -> "SupportSet":
        return cls(tuple(sorted(set(indices))))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)


def left_shift_leq(a: SupportSet, b: SupportSet) -> bool:
    """True iff ``a`` can be obtained from ``b`` by shifting positions left.

    Positionwise comparison of equal-size index sets: |a| == |b| and
    a[j] <= b[j] for every j. Size mismatch compares as False.
    """
    if len(a) != len(b):
        return False
    return all(x <= y for x, y in zip(a.indices, b.indices))


def t_d(d: DegreeSequence, delta: int) -> int:
    """Count entries equal to d_delta after position delta, minus those at or before it.

    ``delta`` is 1-based; the result may be negative.
    """
    if not 1 <= delta <= d.n:
        raise ValidationError(f"delta={delta} out of range [1, {d.n}]")
    value = d.degrees[delta - 1]
    after = sum(1 for i in range(delta, d.n) if d.degrees[i] == value)
    upto = sum(1 for i in range(delta) if d.degrees[i] == value)
    return after - upto


def reduce_top(d: DegreeSequence, delta: int) -> list[int]:
    """Subtract 1 from the first ``delta`` entries, returning the raw list.

    The result is possibly no longer arranged; callers re-arrange when they
    need to. ``delta`` may be 0 (identity copy).
    """
    if delta < 0:
        raise ValidationError(f"delta={delta} must be non-negative")
    if delta > d.n:
        raise ValidationError(f"delta={delta} exceeds sequence length n={d.n}")
    if delta >= 1 and d.degrees[delta - 1] < 1:
        pos = next(i for i in range(delta) if d.degrees[i] < 1)
        raise ValidationError(f"sequence entry would go negative at position {pos}")
    out = list(d.degrees)
    for i in range(delta):
        out[i] -= 1
    return out


def augment(d: DegreeSequence, delta: int) -> DegreeSequence:
    """Append a new degree ``delta`` and re-arrange."""
    if delta < 1:
        raise ValidationError(f"delta={delta} must be at least 1")
    if delta > d.n:
        raise ValidationError(f"delta={delta} exceeds n={d.n}")
    return make_sequence(list(d.degrees) + [delta])
