"""Nested pairs, projection fibers, and strata dimension bounds.

The incidence variety of nested subschemes of lengths (n, n+1) projects
to both Hilbert schemes. Over a fixed point its fibers are projective
spaces whose dimensions are read off the staircase: generator count
minus one downstairs, socle count minus one upstairs. Counting fixed
points three ways gives the Euler cross-check.

Stratifying by the local generator count i, the dimension of each
stratum obeys bound(i, n) <= 2n + 4 - 2i. The table type below carries
such bounds and the propagation step pushes them from size n to n+1:
a stratum needing i generators upstairs can only sit over strata
needing i-1, i, or i+1 downstairs, the downstairs fiber adds j-1, and
the upstairs fiber subtracts i-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import ConsistencyError
from .monomial import generator_count, socle_count, strata_index
from .partitions import Partition, as_partition, enumerate_partitions


@dataclass(frozen=True)
class NestedPair:
    """Partitions (lower, upper) with the upper diagram one box larger."""

    lower: Partition
    upper: Partition

    def __post_init__(self):
        if self.upper.size != self.lower.size + 1 or not self.upper.contains(
            self.lower
        ):
            raise ValueError(
                f"not nested with one extra box: {self.lower} -> {self.upper}"
            )


def nested_pairs(n: int) -> list[NestedPair]:
    """Fixed points of the nested Hilbert scheme of lengths (n, n+1)."""
    if n < 0:
        raise ValueError(f"negative length: {n}")
    return [
        NestedPair(lam, mu)
        for lam in enumerate_partitions(n)
        for mu in lam.covers()
    ]


def phi_fiber_dim(lam, at_support: bool = True) -> int:
    """Dimension of the fiber over the smaller subscheme plus a point.

    The fiber is the projectivized space of local ideal generators, so
    generator count minus one at the support point and zero elsewhere.
    """
    if not at_support:
        return 0
    return generator_count(lam) - 1


def gamma_fiber_dim(mu) -> int:
    """Dimension of the fiber over the larger subscheme: socle count minus one."""
    mu = as_partition(mu)
    s = socle_count(mu)
    g = generator_count(mu)
    if s - 1 != g - 2:
        raise ConsistencyError(
            f"socle/generator mismatch at {mu}: socle {s}, generators {g}"
        )
    return s - 1


def local_generator_count(lam) -> int:
    """Generator count at the support point; 1 for the empty subscheme.

    The empty subscheme has the unit ideal, locally principal everywhere,
    which is exactly the off-support stratum index.
    """
    lam = as_partition(lam)
    return strata_index(lam, bool(lam.parts))


def euler_incidence(n: int) -> int:
    """Fixed-point count of the nested scheme, verified three ways.

    Pairs, summed generator counts at size n, and summed socle counts at
    size n+1 must agree; disagreement raises ConsistencyError.
    """
    pair_count = len(nested_pairs(n))
    gen_sum = sum(local_generator_count(lam) for lam in enumerate_partitions(n))
    socle_sum = sum(socle_count(mu) for mu in enumerate_partitions(n + 1))
    if not pair_count == gen_sum == socle_sum:
        raise ConsistencyError(
            f"incidence count mismatch at n={n}: pairs {pair_count}, "
            f"generator sum {gen_sum}, socle sum {socle_sum}"
        )
    return pair_count


@dataclass(frozen=True)
class StrataBoundTable:
    """Dimension bounds for the loci needing i local generators, fixed size n.

    Absent indices are genuinely empty strata (no propagation source),
    never encoded as 0 or a sentinel number. Propagated bounds may be
    vacuous for strata that happen to be empty; that is harmless, the
    bound still holds.
    """

    n: int
    bounds: Mapping[int, int]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"table size must be at least 1, got {self.n}")
        for i, b in self.bounds.items():
            if i < 1 or not isinstance(i, int):
                raise ValueError(f"malformed table: bad index {i}")
            if not isinstance(b, int) or b < 0:
                raise ValueError(f"malformed table: bad bound {b} at i={i}")
        if self.bounds.get(1) != 2 * self.n + 2:
            raise ValueError(
                f"malformed table: principal stratum must carry bound "
                f"{2 * self.n + 2} at size {self.n}"
            )

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n + 2

    @property
    def max_index(self) -> int:
        return max(self.bounds)

    def bound(self, i: int) -> Optional[int]:
        """Bound at index i, or None for an empty stratum."""
        if i < 1:
            raise ValueError(f"stratum index must be at least 1, got {i}")
        return self.bounds.get(i)


def strata_base() -> StrataBoundTable:
    """Exact dimensions at size 1: the product surface and its diagonal."""
    return StrataBoundTable(1, {1: 4, 2: 2})


def strata_propagate(t: StrataBoundTable) -> StrataBoundTable:
    """Push bounds from size n to size n+1 through the nested scheme.

    bound(i, n+1) = max over nonempty j in {i-1, i, i+1} of
    bound(j, n) + (j - 1), minus (i - 2); the principal stratum is pinned
    to the full ambient dimension 2(n+1) + 2.
    """
    if not isinstance(t, StrataBoundTable):
        raise ValueError(f"malformed table: {t!r}")
    n = t.n
    new = {1: 2 * (n + 1) + 2}
    for i in range(2, t.max_index + 2):
        sources = [
            t.bound(j) + (j - 1)
            for j in (i - 1, i, i + 1)
            if j >= 1 and t.bound(j) is not None
        ]
        if sources:
            new[i] = max(sources) - (i - 2)
    return StrataBoundTable(n + 1, new)


def strata_table(n: int) -> StrataBoundTable:
    """Table at size n, propagated up from the exact size-1 base case."""
    if n < 1:
        raise ValueError(f"table size must be at least 1, got {n}")
    t = strata_base()
    for _ in range(n - 1):
        t = strata_propagate(t)
    return t


@dataclass(frozen=True)
class StratumCodim:
    """Codimension audit for one stratum index."""

    index: int
    bound: Optional[int]
    codim: Optional[int]
    margin: Optional[int]  # codim - (2i - 2); non-negative when satisfied
    vacuous: bool
    satisfied: bool


@dataclass(frozen=True)
class CodimHypothesesReport:
    """Blow-up criterion audit: codim >= i for i >= 2 and >= i+1 for i >= 3.

    Both follow from the stronger inequality codim >= 2i - 2, which is
    what the margin records. Empty strata are reported vacuous.
    """

    n: int
    entries: tuple[StratumCodim, ...]

    @property
    def all_satisfied(self) -> bool:
        return all(e.satisfied for e in self.entries)


def check_codim_hypotheses(t: StrataBoundTable) -> CodimHypothesesReport:
    """Audit codimensions of every non-principal stratum of a table."""
    entries = []
    for i in range(2, t.max_index + 2):
        b = t.bound(i)
        if b is None:
            entries.append(StratumCodim(i, None, None, None, True, True))
            continue
        codim = t.ambient_dim - b
        margin = codim - (2 * i - 2)
        need = i if i == 2 else i + 1
        entries.append(
            StratumCodim(i, b, codim, margin, False, margin >= 0 and codim >= need)
        )
    return CodimHypothesesReport(t.n, tuple(entries))
