"""Partitions with dominance order, (r,k)-admissibility, and staircases.

Trailing zeros are significant: a partition carries its ambient part count,
since expansions in 2n variables need 2n-part indexing.
"""

from __future__ import annotations

from typing import Iterator, Sequence


class Partition:
    """Weakly decreasing sequence of non-negative integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ValueError(f"{parts} is not weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError(f"{parts} has negative parts")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def padded(self, length: int) -> "Partition":
        if length < len(self.parts):
            raise ValueError("cannot pad to a shorter length")
        return Partition(self.parts + (0,) * (length - len(self.parts)))

    def stripped(self) -> "Partition":
        """Drop trailing zeros."""
        parts = self.parts
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return Partition(parts)

    @property
    def nonzero_count(self) -> int:
        return sum(1 for p in self.parts if p)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @staticmethod
    def from_json(data: Sequence[int]) -> "Partition":
        return Partition(data)


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff every prefix sum of a is <= the matching prefix sum of b."""
    n = max(len(a), len(b))
    pa = pb = 0
    for i in range(n):
        pa += a[i] if i < len(a) else 0
        pb += b[i] if i < len(b) else 0
        if pa > pb:
            return False
    return True


def dominance_lt(a: Partition, b: Partition) -> bool:
    """Strict dominance: a <= b and a != b as padded sequences."""
    n = max(len(a), len(b))
    return dominance_leq(a, b) and a.padded(n).parts != b.padded(n).parts


def staircase(n: int, ell: int) -> Partition:
    """Y_{n,l} = (l(n-1), l(n-1), ..., l, l, 0, 0) with 2n parts."""
    if n < 1 or ell < 1:
        raise ValueError("staircase requires n >= 1 and ell >= 1")
    parts = []
    for step in range(n - 1, -1, -1):
        parts.extend([ell * step, ell * step])
    return Partition(parts)


def is_admissible(p: Partition, r: int, k: int) -> bool:
    """(r,k)-admissibility: parts[i] - parts[i+k] >= r for all valid i."""
    if r < 1 or k < 1:
        raise ValueError("admissibility requires r >= 1 and k >= 1")
    parts = p.parts
    return all(parts[i] - parts[i + k] >= r for i in range(len(parts) - k))


def partitions_of(d: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of d with at most max_parts parts, in ascending
    lexicographic order (which refines dominance: mu < lambda in dominance
    implies mu appears first)."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if max_parts is None:
        max_parts = d
    if max_parts < 1 and d > 0:
        return []
    out: list[tuple[int, ...]] = []

    def build(remaining: int, max_part: int, prefix: list[int]):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) >= max_parts:
            return
        top = min(max_part, remaining)
        for part in range(top, 0, -1):
            prefix.append(part)
            build(remaining - part, part, prefix)
            prefix.pop()

    build(d, d, [])
    out.sort()
    return [Partition(p) for p in out]
