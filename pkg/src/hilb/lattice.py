"""Intersection lattices, blow-ups, and the Nakajima constants.

Blowing up n points adds n pairwise-orthogonal classes of self-pairing
-1, so the sum E of all exceptional classes has E.E = -n on any base.
That single integral drives the recurrence

    c_1 = 1,        c_{n+1} / (n+1) = c_n * (E.E) / n^2 = -c_n / n,

whose steps are carried out in exact rationals with the integrality of
every c_n asserted, and whose values the closed form (-1)^(n-1) n must
reproduce. The degree n+1 comes from the generically finite projection
of the one-point locus upstairs, the 1/n^2 from pairing against the
n-fold fiber class on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ConsistencyError


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinate vector in a fixed lattice basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coords) != len(other.coords):
            raise ValueError("cannot add classes of different rank")
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coords))


@dataclass(frozen=True)
class IntersectionLattice:
    """Free abelian group with a symmetric integer pairing and named basis."""

    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "labels", tuple(self.labels))
        r = len(self.labels)
        if len(gram) != r or any(len(row) != r for row in gram):
            raise ValueError(f"gram matrix must be {r} x {r}")
        for i in range(r):
            for j in range(r):
                if gram[i][j] != gram[j][i]:
                    raise ValueError(f"gram matrix not symmetric at ({i}, {j})")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def cls(self, label: str) -> DivisorClass:
        """Basis class by name."""
        if label not in self.labels:
            raise ValueError(f"no basis class named {label!r}")
        i = self.labels.index(label)
        return DivisorClass(tuple(1 if j == i else 0 for j in range(self.rank)))

    def pair(self, d1: DivisorClass, d2: DivisorClass) -> int:
        if len(d1.coords) != self.rank or len(d2.coords) != self.rank:
            raise ValueError(
                f"coordinate length mismatch: lattice rank {self.rank}, "
                f"classes of length {len(d1.coords)} and {len(d2.coords)}"
            )
        return sum(
            d1.coords[i] * self.gram[i][j] * d2.coords[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )


def p2_lattice() -> IntersectionLattice:
    """Rank-one lattice of the projective plane: H with H.H = 1."""
    return IntersectionLattice(((1,),), ("H",))


def rank_zero_lattice() -> IntersectionLattice:
    """The empty base, for purely exceptional computations."""
    return IntersectionLattice((), ())


def pair(L: IntersectionLattice, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number of two classes in L."""
    return L.pair(d1, d2)


def blow_up(L: IntersectionLattice, k: int) -> IntersectionLattice:
    """Adjoin k exceptional classes: self-pairing -1, orthogonal to everything.

    Old classes keep their pairings; labels continue any existing E-series.
    """
    if k < 0:
        raise ValueError(f"cannot blow up a negative number of points: {k}")
    r = L.rank
    start = sum(1 for lbl in L.labels if lbl.startswith("E")) + 1
    labels = L.labels + tuple(f"E{start + i}" for i in range(k))
    gram = [[0] * (r + k) for _ in range(r + k)]
    for i in range(r):
        for j in range(r):
            gram[i][j] = L.gram[i][j]
    for i in range(k):
        gram[r + i][r + i] = -1
    return IntersectionLattice(tuple(tuple(row) for row in gram), labels)


def exceptional_total_square(n: int, base: Optional[IntersectionLattice] = None) -> int:
    """Self-intersection of the sum of all n exceptional classes: always -n.

    Computed through the lattice pairing, never short-circuited, so the
    orthogonality bookkeeping is exercised on every call.
    """
    if n < 1:
        raise ValueError(f"need at least one exceptional class, got {n}")
    if base is None:
        base = rank_zero_lattice()
    blown = blow_up(base, n)
    r = base.rank
    total = DivisorClass(tuple(0 if i < r else 1 for i in range(blown.rank)))
    return blown.pair(total, total)


def hilbert_scheme_dim(n: int) -> int:
    """Dimension 2n of the Hilbert scheme of n surface points."""
    return 2 * n


def one_point_locus_dim(n: int) -> int:
    """Dimension n+1 of the locus of subschemes supported at a single point."""
    return n + 1


def punctual_locus_dim(n: int) -> int:
    """Dimension n-1 of the subschemes supported at one fixed point."""
    return n - 1


def nakajima_closed_form(n: int) -> int:
    """The n-th Nakajima constant, (-1)^(n-1) n."""
    if n < 1:
        raise ValueError(f"constants are indexed from 1, got {n}")
    return (-1) ** (n - 1) * n


@dataclass(frozen=True)
class NakajimaSequence:
    """Constants c_1..c_N with the sign/size invariants enforced on build."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty sequence")
        if self.values[0] != 1:
            raise ConsistencyError(f"c_1 must be 1, got {self.values[0]}")
        for idx, c in enumerate(self.values, start=1):
            if abs(c) != idx:
                raise ConsistencyError(f"|c_{idx}| must be {idx}, got {c}")
            if idx >= 2 and c * self.values[idx - 2] >= 0:
                raise ConsistencyError(f"signs must alternate at c_{idx}")

    def __len__(self) -> int:
        return len(self.values)

    def value(self, n: int) -> int:
        """c_n, 1-indexed."""
        if not 1 <= n <= len(self.values):
            raise ValueError(f"index out of range: {n}")
        return self.values[n - 1]


def nakajima_recurrence(
    N: int, base: Optional[IntersectionLattice] = None
) -> NakajimaSequence:
    """Constants c_1..c_N by the exceptional-class recurrence.

    Each step divides by n before scaling by n+1 and pulls its -n factor
    from exceptional_total_square on an honest blown-up lattice; any
    non-integral step raises ConsistencyError.
    """
    if N < 1:
        raise ValueError(f"need at least one constant, got {N}")
    if base is None:
        base = rank_zero_lattice()
    values = [1]
    for n in range(1, N):
        if one_point_locus_dim(n) + punctual_locus_dim(n) != hilbert_scheme_dim(n):
            raise ConsistencyError(
                f"dimension bookkeeping broke at n={n}: "
                f"{one_point_locus_dim(n)} + {punctual_locus_dim(n)} != {2 * n}"
            )
        e2 = exceptional_total_square(n, base)
        step = Fraction(values[-1], n) * Fraction(e2, n) * (n + 1)
        if step.denominator != 1:
            raise ConsistencyError(f"non-integral constant at n={n + 1}: {step}")
        values.append(int(step))
    return NakajimaSequence(tuple(values))
