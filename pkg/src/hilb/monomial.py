"""Monomial-ideal realization of a partition.

Dictionary: box (r, c) of the diagram is the monomial x^c y^r of the
quotient basis; the ideal holds every monomial outside the diagram. The
minimal generators sit at the inner corners of the staircase, the socle
at the outer (removable) corners, and consecutive generators are tied by
one bidiagonal column of first syzygies.

All arithmetic is exponent arithmetic on integers; no polynomial algebra
package is involved, so the maximal-minor check is exact by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .partitions import Partition, as_partition


class Monomial(NamedTuple):
    xexp: int
    yexp: int

    def __str__(self) -> str:
        if self.xexp == 0 and self.yexp == 0:
            return "1"
        out = ""
        if self.xexp:
            out += "x" if self.xexp == 1 else f"x^{self.xexp}"
        if self.yexp:
            out += "y" if self.yexp == 1 else f"y^{self.yexp}"
        return out


class Term(NamedTuple):
    """A monomial with an integer sign, for syzygy-matrix entries and minors."""

    coeff: int
    monomial: Monomial

    def times(self, other: "Term") -> "Term":
        return Term(
            self.coeff * other.coeff,
            Monomial(
                self.monomial.xexp + other.monomial.xexp,
                self.monomial.yexp + other.monomial.yexp,
            ),
        )

    def __str__(self) -> str:
        body = str(self.monomial)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return f"-{body}"
        return f"{self.coeff}*{body}"


@dataclass(frozen=True)
class StaircaseIdeal:
    """Monomial ideal of a partition: shape plus minimal generators.

    Generators are sorted by xexp ascending (so yexp strictly descending).
    """

    shape: Partition
    generators: tuple[Monomial, ...]

    def contains(self, m: Monomial) -> bool:
        """Membership: the monomial lies outside the diagram."""
        parts = self.shape.parts
        if m.yexp >= len(parts):
            return True
        return m.xexp >= parts[m.yexp]

    def quotient_basis(self) -> list[Monomial]:
        """Monomials inside the diagram, row-major."""
        return [Monomial(b.col, b.row) for b in self.shape.boxes()]

    def socle(self) -> list[Monomial]:
        """Quotient monomials killed by both x and y."""
        out = []
        for m in self.quotient_basis():
            if self.contains(Monomial(m.xexp + 1, m.yexp)) and self.contains(
                Monomial(m.xexp, m.yexp + 1)
            ):
                out.append(m)
        return out


def staircase(lam) -> StaircaseIdeal:
    """Minimal monomial generators of the ideal cutting out the diagram.

    The empty partition gives the unit ideal, generated by 1.
    """
    lam = as_partition(lam)
    parts = lam.parts
    if not parts:
        return StaircaseIdeal(lam, (Monomial(0, 0),))
    gens = [Monomial(parts[0], 0)]
    for b in range(1, len(parts)):
        if parts[b] < parts[b - 1]:
            gens.append(Monomial(parts[b], b))
    gens.append(Monomial(0, len(parts)))
    gens.sort(key=lambda m: m.xexp)
    return StaircaseIdeal(lam, tuple(gens))


def generator_count(lam) -> int:
    """Minimal number of generators of the ideal at its support point."""
    lam = as_partition(lam)
    if not lam:
        raise ValueError(
            "ideal is the unit ideal at a point off support; use strata_index"
        )
    return len(staircase(lam).generators)


def socle_count(lam) -> int:
    """Dimension of the socle of the quotient (always generator_count - 1)."""
    lam = as_partition(lam)
    if not lam:
        raise ValueError("socle undefined for the empty partition")
    return len(staircase(lam).socle())


@dataclass(frozen=True)
class HilbertBurchMatrix:
    """Bidiagonal g x (g-1) matrix of first syzygies of a staircase ideal.

    Rows run over the generators in xexp-descending order; column j ties
    generators j and j+1, with a y-power at (j, j) and minus an x-power
    at (j+1, j). Deleting row i and taking the determinant recovers
    generator i up to sign.
    """

    generators: tuple[Monomial, ...]
    entries: tuple[tuple[Optional[Term], ...], ...]

    @property
    def rows(self) -> int:
        return len(self.generators)

    @property
    def cols(self) -> int:
        return len(self.generators) - 1

    def minor(self, i: int) -> Term:
        """Determinant after deleting row i, as a signed monomial.

        Deleting row i leaves a block-triangular matrix, so the value is
        the product of the diagonal entries above the cut and the
        subdiagonal entries below it.
        """
        if not 0 <= i < self.rows:
            raise ValueError(f"row index out of range: {i}")
        out = Term(1, Monomial(0, 0))
        for j in range(i):
            out = out.times(self.entries[j][j])
        for j in range(i, self.cols):
            out = out.times(self.entries[j + 1][j])
        return out

    def maximal_minors(self) -> tuple[Term, ...]:
        return tuple(self.minor(i) for i in range(self.rows))

    def matches_generators(self) -> bool:
        """Every maximal minor equals its row's generator up to sign."""
        return all(
            t.monomial == g and t.coeff in (1, -1)
            for t, g in zip(self.maximal_minors(), self.generators)
        )

    def __str__(self) -> str:
        cells = [
            [str(self.entries[r][c]) if self.entries[r][c] else "0" for c in range(self.cols)]
            for r in range(self.rows)
        ]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in cells)


def hilbert_burch(lam) -> HilbertBurchMatrix:
    """Syzygy matrix between consecutive staircase generators."""
    lam = as_partition(lam)
    if not lam:
        raise ValueError("no syzygy matrix for the unit ideal (empty partition)")
    gens = tuple(sorted(staircase(lam).generators, key=lambda m: -m.xexp))
    g = len(gens)
    grid: list[list[Optional[Term]]] = [[None] * (g - 1) for _ in range(g)]
    for j in range(g - 1):
        # lcm of neighbours j, j+1 is x^{a_j} y^{b_{j+1}}
        grid[j][j] = Term(1, Monomial(0, gens[j + 1].yexp - gens[j].yexp))
        grid[j + 1][j] = Term(-1, Monomial(gens[j].xexp - gens[j + 1].xexp, 0))
    return HilbertBurchMatrix(gens, tuple(tuple(row) for row in grid))


def strata_index(lam, at_support: bool) -> int:
    """Local minimal-generator count of the ideal at a chosen point.

    Off the support every ideal sheaf is locally principal, so the index
    is 1; at the support point of a punctual subscheme it is the
    staircase generator count.
    """
    lam = as_partition(lam)
    if not at_support:
        return 1
    if not lam:
        raise ValueError("empty subscheme has no support point")
    return generator_count(lam)
