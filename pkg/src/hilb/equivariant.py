"""Torus-fixed-point tangent weights and attracting-cell dimensions.

A fixed point of the Hilbert scheme of n points on a 2-torus chart is a
partition of n. Its tangent space splits into 2n one-dimensional
characters; pairing each against a generic one-parameter subgroup and
counting negative pairings gives the attracting-cell dimension, and
summing q^(2 dim) over fixed points gives the Poincare polynomial.

Weight convention for a box with arm a and leg l, in chart coordinates
with characters (u, v):

    (a+1) u - l v        and        -a u + (l+1) v.

The convention is pinned by tests rather than by fiat: conjugating the
partition while swapping u and v must preserve the weight multiset, the
affine Poincare polynomial must match the partition-length closed form,
and the small-n projective values must come out right.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .partitions import Partition, as_partition, enumerate_partitions

logger = logging.getLogger(__name__)


class CharVector(NamedTuple):
    """An integer character of the 2-torus."""

    a: int
    b: int


class NonGenericError(ValueError):
    """A one-parameter subgroup paired to zero against a tangent weight."""


def tangent_weights(lam, u: CharVector, v: CharVector) -> list[CharVector]:
    """The 2|lam| tangent characters at the fixed point of a chart.

    u and v are the characters of the two chart coordinates and must be
    linearly independent over the rationals.
    """
    lam = as_partition(lam)
    u, v = CharVector(*u), CharVector(*v)
    if u.a * v.b - u.b * v.a == 0:
        raise ValueError(f"degenerate chart: characters {u} and {v} are dependent")
    out = []
    for box in lam.boxes():
        a = lam.arm(box)
        l = lam.leg(box)
        out.append(CharVector((a + 1) * u.a - l * v.a, (a + 1) * u.b - l * v.b))
        out.append(CharVector(-a * u.a + (l + 1) * v.a, -a * u.b + (l + 1) * v.b))
    return out


def cell_dimension(weights: Iterable[CharVector], rho: CharVector) -> int:
    """Number of weights pairing negatively against rho.

    A zero pairing means rho sits on a wall of the chamber structure and
    the attracting cell is not defined there.
    """
    rho = CharVector(*rho)
    dim = 0
    for w in weights:
        p = rho.a * w.a + rho.b * w.b
        if p == 0:
            raise NonGenericError(
                f"non-generic one-parameter subgroup: rho={tuple(rho)} "
                f"pairs to zero with weight {tuple(w)}"
            )
        if p < 0:
            dim += 1
    return dim


class PoincarePoly:
    """Even-degree polynomial in q with non-negative integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict[int, int]] = None):
        clean: dict[int, int] = {}
        for d, c in (coeffs or {}).items():
            if d < 0 or d % 2:
                raise ValueError(f"degrees must be even and non-negative, got {d}")
            if c < 0:
                raise ValueError(f"coefficients must be non-negative, got {c}")
            if c:
                clean[d] = c
        self.coeffs = clean

    @classmethod
    def from_cell_dims(cls, dims: Iterable[int]) -> "PoincarePoly":
        coeffs: dict[int, int] = {}
        for d in dims:
            coeffs[2 * d] = coeffs.get(2 * d, 0) + 1
        return cls(coeffs)

    def coefficient(self, degree: int) -> int:
        return self.coeffs.get(degree, 0)

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def evaluate(self, x: int = 1) -> int:
        return sum(c * x**d for d, c in self.coeffs.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PoincarePoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"PoincarePoly({self.coeffs!r})"

    def __str__(self) -> str:
        return format_poly(self.coeffs, "q")


def format_poly(coeffs: dict[int, int], var: str) -> str:
    """Render {degree: coeff} as '1 + 2q^2 + q^4', ascending degrees."""
    terms = []
    for d in sorted(coeffs):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(f"{var}^{d}")
        else:
            terms.append(f"{c}{var}^{d}")
    return " + ".join(terms) if terms else "0"


# Chart characters of the standard torus action: affine plane, then the
# three coordinate charts of the projective plane.
AFFINE_CHART: tuple[CharVector, CharVector] = (CharVector(1, 0), CharVector(0, 1))
P2_CHART_WEIGHTS: tuple[tuple[CharVector, CharVector], ...] = (
    (CharVector(1, 0), CharVector(0, 1)),
    (CharVector(-1, 0), CharVector(-1, 1)),
    (CharVector(0, -1), CharVector(1, -1)),
)


def default_rho(n: int) -> CharVector:
    """First candidate subgroup, steep enough to clear every wall up to n."""
    return CharVector(1, 2 * n * n + 1)


def generic_rho(weight_lists: list[list[CharVector]], n: int) -> CharVector:
    """Deterministic search (1, K), (1, K+1), ... for a wall-free subgroup."""
    k = 2 * n * n + 1
    while True:
        rho = CharVector(1, k)
        if all(
            rho.a * w.a + rho.b * w.b != 0 for ws in weight_lists for w in ws
        ):
            return rho
        logger.warning(
            "rho=(1,%d) hit a wall at n=%d, retrying with (1,%d)", k, n, k + 1
        )
        k += 1


def poincare_affine(n: int, rho: Optional[CharVector] = None) -> PoincarePoly:
    """Poincare polynomial of the Hilbert scheme of n points on the plane.

    With rho omitted a verified-generic subgroup is chosen automatically;
    an explicit non-generic rho raises NonGenericError.
    """
    if n < 0:
        raise ValueError(f"negative length: {n}")
    u, v = AFFINE_CHART
    wlists = [tangent_weights(lam, u, v) for lam in enumerate_partitions(n)]
    if rho is None:
        rho = generic_rho(wlists, n)
    return PoincarePoly.from_cell_dims(cell_dimension(ws, rho) for ws in wlists)


@dataclass(frozen=True)
class ChartTuple:
    """A fixed point of the Hilbert scheme of the projective plane.

    One partition per coordinate chart, sizes summing to n, each chart
    carrying its own pair of coordinate characters.
    """

    partitions: tuple[Partition, Partition, Partition]
    chart_weights: tuple[tuple[CharVector, CharVector], ...] = field(
        default=P2_CHART_WEIGHTS
    )

    @property
    def total(self) -> int:
        return sum(p.size for p in self.partitions)

    def weights(self) -> list[CharVector]:
        out: list[CharVector] = []
        for lam, (u, v) in zip(self.partitions, self.chart_weights):
            out.extend(tangent_weights(lam, u, v))
        return out


def fixed_points_p2(n: int) -> list[ChartTuple]:
    """All torus-fixed points of the Hilbert scheme of n points on P^2.

    Triples of partitions with sizes summing to n, sizes enumerated in
    descending order chart by chart.
    """
    if n < 0:
        raise ValueError(f"negative length: {n}")
    out = []
    for a in range(n, -1, -1):
        for b in range(n - a, -1, -1):
            c = n - a - b
            for la in enumerate_partitions(a):
                for lb in enumerate_partitions(b):
                    for lc in enumerate_partitions(c):
                        out.append(ChartTuple((la, lb, lc)))
    return out


def poincare_p2(n: int, rho: Optional[CharVector] = None) -> PoincarePoly:
    """Poincare polynomial of the Hilbert scheme of n points on P^2."""
    pts = fixed_points_p2(n)
    wlists = [pt.weights() for pt in pts]
    if rho is None:
        rho = generic_rho(wlists, n)
    return PoincarePoly.from_cell_dims(cell_dimension(ws, rho) for ws in wlists)


def punctual_cell_dims(n: int) -> list[int]:
    """Cell dimensions of the punctual locus (all length n at one point).

    One cell per partition, of dimension n minus the largest part;
    returned sorted ascending. The largest value, n - 1, is the
    dimension of the whole punctual locus, and the cell count is p(n).
    """
    if n < 1:
        raise ValueError("punctual locus undefined for n = 0")
    return sorted(n - lam.parts[0] for lam in enumerate_partitions(n))


def poincare_punctual(n: int) -> PoincarePoly:
    """Poincare polynomial of the punctual locus at a fixed point."""
    return PoincarePoly.from_cell_dims(punctual_cell_dims(n))
