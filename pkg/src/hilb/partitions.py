"""Integer partitions and the box combinatorics of Young diagrams.

A partition of n indexes a torus-fixed point of the Hilbert scheme of n
points on the plane; its diagram is the quotient basis of the matching
monomial ideal. Everything downstream (tangent weights, staircase
generators, incidence counts) is driven by the combinatorics here.

Conventions, fixed once and used everywhere:
  * parts are weakly decreasing positive integers; the empty partition
    is allowed and stands for the empty subscheme;
  * boxes are 0-based (row, col) in English orientation, present iff
    col < parts[row];
  * arm = boxes strictly right of the box in its row,
    leg = boxes strictly below it in its column.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class Box(NamedTuple):
    """A cell of a Young diagram, 0-based."""

    row: int
    col: int


class Partition:
    """Weakly decreasing tuple of positive parts, with cached size."""

    __slots__ = ("parts", "size")

    def __init__(self, parts: Iterable[int] = ()):
        pts = tuple(int(p) for p in parts)
        for i, p in enumerate(pts):
            if p <= 0:
                raise ValueError(f"parts must be positive integers, got {p}")
            if i > 0 and pts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {pts}")
        self.parts = pts
        self.size = sum(pts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def box_in(self, box) -> bool:
        r, c = box
        return 0 <= r < len(self.parts) and 0 <= c < self.parts[r]

    def boxes(self) -> Iterator[Box]:
        """All boxes, row-major."""
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield Box(r, c)

    def arm(self, box) -> int:
        """Boxes strictly to the right of `box` in its row."""
        if not self.box_in(box):
            raise ValueError(f"box not in partition: {tuple(box)} not in {self}")
        r, c = box
        return self.parts[r] - c - 1

    def leg(self, box) -> int:
        """Boxes strictly below `box` in its column."""
        if not self.box_in(box):
            raise ValueError(f"box not in partition: {tuple(box)} not in {self}")
        r, c = box
        return sum(1 for rr in range(r + 1, len(self.parts)) if self.parts[rr] > c)

    def conjugate(self) -> "Partition":
        """Transpose the diagram."""
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p > c) for c in range(self.parts[0])
        )

    def distinct_part_count(self) -> int:
        return len(set(self.parts))

    def contains(self, other: "Partition") -> bool:
        """Diagram containment, box by box."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def covers(self) -> list["Partition"]:
        """Partitions of size+1 whose diagram adds one box, by ascending row.

        There is one per addable corner; the count is always the number
        of distinct part values plus one (the new-row slot).
        """
        out = []
        n_rows = len(self.parts)
        for r in range(n_rows + 1):
            cur = self.parts[r] if r < n_rows else 0
            if r > 0 and self.parts[r - 1] == cur:
                continue
            grown = list(self.parts)
            if r < n_rows:
                grown[r] += 1
            else:
                grown.append(1)
            out.append(Partition(grown))
        return out

    def cocovers(self) -> list["Partition"]:
        """Partitions of size-1 whose diagram removes one box, by ascending row.

        One per removable corner; the count equals the number of
        distinct part values.
        """
        if not self.parts:
            raise ValueError("no cocovers: the empty partition has no removable box")
        out = []
        n_rows = len(self.parts)
        for r in range(n_rows):
            below = self.parts[r + 1] if r + 1 < n_rows else 0
            if self.parts[r] == below:
                continue
            shrunk = list(self.parts)
            shrunk[r] -= 1
            if shrunk[r] == 0:
                shrunk.pop()
            out.append(Partition(shrunk))
        return out


def as_partition(lam) -> Partition:
    """Coerce a Partition or an iterable of parts to a Partition."""
    return lam if isinstance(lam, Partition) else Partition(lam)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, in descending lexicographic order.

    enumerate_partitions(3) gives (3), (2,1), (1,1,1).
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    return [Partition(p) for p in _descending_lex(n, n)]


def _descending_lex(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_lex(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def pentagonal_partition_count(n: int) -> int:
    """Partition count p(n) by Euler's pentagonal-number recurrence.

    Deliberately shares no code with enumerate_partitions so the two can
    cross-check each other.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * pentagonal_partition_count(n - g)
        h = k * (3 * k + 1) // 2
        if h <= n:
            total += sign * pentagonal_partition_count(n - h)
        k += 1
    return total
