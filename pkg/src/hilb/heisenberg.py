"""Goettsche-type generating series and the Heisenberg Fock model.

The bigraded Betti series of all Hilbert schemes of points on a surface
with even cohomology (b0, 0, b2, 0, b4) is the product over levels
m >= 1 and even degrees d of (1 - t^m u^(2m-2+d))^(-b_d). The same
series is the character of a free commutative algebra with one creation
generator a_{-m}(gamma) of bidegree (m, 2m-2+deg gamma) per level and
cohomology class.

The two series are computed by deliberately different routes so their
coefficient-wise equality is a real cross-check:
  * goettsche_series expands each Betti-indexed factor with
    negative-binomial coefficients;
  * fock_character multiplies one plain geometric series per creation
    generator and never touches a binomial.

Annihilation operators act as derivations with

    [a_m(alpha), a_{-k}(beta)] = delta_{mk} * c_m * <alpha, beta> * id,

where c_m is the m-th Nakajima constant, imported from the intersection
calculus rather than re-derived; commutator_check verifies the relation
on spanning probe states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .equivariant import format_poly
from .lattice import nakajima_closed_form


class SurfaceModel:
    """Even-cohomology surface: Betti numbers plus the intersection pairing.

    The basis holds one class "1" in degree 0, b2 named classes in degree
    2, and one class "pt" in degree 4. The pairing couples "1" with "pt"
    with value 1 and degree-2 classes through a symmetric integer block;
    complementary-degree blocks are the only nonzero ones.
    """

    __slots__ = ("betti", "basis", "_pairing")

    def __init__(
        self,
        betti: tuple[int, int, int, int, int],
        h2_pairing: Optional[tuple[tuple[int, ...], ...]] = None,
        h2_labels: Optional[tuple[str, ...]] = None,
    ):
        betti = tuple(int(b) for b in betti)
        if len(betti) != 5:
            raise ValueError(f"need five Betti numbers, got {betti}")
        b0, b1, b2, b3, b4 = betti
        if b0 != 1 or b4 != 1:
            raise ValueError(f"a connected surface needs b0 = b4 = 1, got {betti}")
        if b1 != b3:
            raise ValueError(f"Betti numbers must be symmetric, got {betti}")
        if b1 != 0:
            raise ValueError("odd cohomology unsupported")
        if any(b < 0 for b in betti):
            raise ValueError(f"Betti numbers must be non-negative, got {betti}")
        if h2_labels is None:
            h2_labels = tuple(f"e{i + 1}" for i in range(b2))
        h2_labels = tuple(h2_labels)
        if len(h2_labels) != b2 or len(set(h2_labels)) != b2:
            raise ValueError(f"need {b2} distinct degree-2 labels")
        if {"1", "pt"} & set(h2_labels):
            raise ValueError('labels "1" and "pt" are reserved')
        if h2_pairing is None:
            h2_pairing = tuple(
                tuple(1 if i == j else 0 for j in range(b2)) for i in range(b2)
            )
        h2_pairing = tuple(tuple(int(x) for x in row) for row in h2_pairing)
        if len(h2_pairing) != b2 or any(len(r) != b2 for r in h2_pairing):
            raise ValueError(f"degree-2 pairing must be {b2} x {b2}")
        for i in range(b2):
            for j in range(b2):
                if h2_pairing[i][j] != h2_pairing[j][i]:
                    raise ValueError("degree-2 pairing must be symmetric")

        self.betti = betti
        self.basis = (("1", 0),) + tuple((lbl, 2) for lbl in h2_labels) + (("pt", 4),)
        pairing = {("1", "pt"): 1, ("pt", "1"): 1}
        for i, a in enumerate(h2_labels):
            for j, b in enumerate(h2_labels):
                if h2_pairing[i][j]:
                    pairing[(a, b)] = h2_pairing[i][j]
        self._pairing = pairing

    def labels(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.basis)

    def degree(self, label: str) -> int:
        for name, d in self.basis:
            if name == label:
                return d
        raise ValueError(f"no cohomology class named {label!r}")

    def pair(self, a: str, b: str) -> int:
        self.degree(a)
        self.degree(b)
        return self._pairing.get((a, b), 0)

    def euler_characteristic(self) -> int:
        return sum(self.betti)

    def __repr__(self) -> str:
        return f"SurfaceModel(betti={self.betti})"


def p2_surface() -> SurfaceModel:
    """The projective plane: Betti numbers (1, 0, 1, 0, 1), h.h = 1."""
    return SurfaceModel((1, 0, 1, 0, 1), ((1,),), ("h",))


def k3_surface() -> SurfaceModel:
    """A K3-shaped model: Betti numbers (1, 0, 22, 0, 1), diagonal pairing."""
    return SurfaceModel((1, 0, 22, 0, 1))


class GradedSeries:
    """Truncated bigraded series: integer coefficients on (t-degree, u-degree).

    Truncation is in the t-degree; u-degrees are even and bounded by 4n
    at t-degree n, which the constructor enforces.
    """

    __slots__ = ("truncation", "coeffs")

    def __init__(self, truncation: int, coeffs: Optional[dict] = None):
        if truncation < 0:
            raise ValueError(f"truncation must be non-negative, got {truncation}")
        clean: dict[tuple[int, int], int] = {}
        for (n, m), c in (coeffs or {}).items():
            if not 0 <= n <= truncation:
                raise ValueError(f"t-degree out of range: {n}")
            if m < 0 or m % 2 or m > 4 * n:
                raise ValueError(f"bad u-degree {m} at t-degree {n}")
            if c:
                clean[(n, m)] = c
        self.truncation = truncation
        self.coeffs = clean

    @classmethod
    def one(cls, truncation: int) -> "GradedSeries":
        return cls(truncation, {(0, 0): 1})

    def coefficient(self, n: int, m: int) -> int:
        return self.coeffs.get((n, m), 0)

    def t_slice(self, n: int) -> dict[int, int]:
        """Coefficients of t^n as a {u-degree: coefficient} map."""
        if not 0 <= n <= self.truncation:
            raise ValueError(f"t-degree out of range: {n}")
        return {m: c for (nn, m), c in self.coeffs.items() if nn == n}

    def u_one(self, n: int) -> int:
        """Specialize u = 1 in the t^n slice (an Euler characteristic)."""
        return sum(self.t_slice(n).values())

    def slice_str(self, n: int, var: str = "u") -> str:
        return format_poly(self.t_slice(n), var)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GradedSeries)
            and self.truncation == other.truncation
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"GradedSeries(truncation={self.truncation}, terms={len(self.coeffs)})"

    def _times_geometric(self, dt: int, du: int) -> "GradedSeries":
        """Multiply by 1/(1 - t^dt u^du) as a truncated geometric series."""
        out = dict(self.coeffs)
        for (n, m), c in self.coeffs.items():
            j = 1
            while n + j * dt <= self.truncation:
                key = (n + j * dt, m + j * du)
                out[key] = out.get(key, 0) + c
                j += 1
        return GradedSeries(self.truncation, out)

    def _times_negative_binomial(self, dt: int, du: int, b: int) -> "GradedSeries":
        """Multiply by 1/(1 - t^dt u^du)^b via negative-binomial coefficients."""
        out: dict[tuple[int, int], int] = {}
        for (n, m), c in self.coeffs.items():
            j = 0
            while n + j * dt <= self.truncation:
                key = (n + j * dt, m + j * du)
                out[key] = out.get(key, 0) + c * math.comb(b - 1 + j, j)
                j += 1
        return GradedSeries(self.truncation, out)


def goettsche_series(surface: SurfaceModel, truncation: int) -> GradedSeries:
    """Bigraded Betti series of all Hilbert schemes of points on the surface.

    Product over levels m and even degrees d of
    (1 - t^m u^(2m-2+d))^(-b_d), truncated in t.
    """
    series = GradedSeries.one(truncation)
    for m in range(1, truncation + 1):
        for d in (0, 2, 4):
            b = surface.betti[d]
            if b:
                series = series._times_negative_binomial(m, 2 * m - 2 + d, b)
    return series


def fock_character(surface: SurfaceModel, truncation: int) -> GradedSeries:
    """Bigraded character of the free algebra on the creation generators.

    One plain geometric factor per generator a_{-m}(gamma); must agree
    with goettsche_series coefficient by coefficient.
    """
    series = GradedSeries.one(truncation)
    for m in range(1, truncation + 1):
        for _, d in surface.basis:
            series = series._times_geometric(m, 2 * m - 2 + d)
    return series


# A Fock monomial is a sorted tuple of (level, class-label) factors; the
# empty tuple is the vacuum.
FockMonomial = tuple[tuple[int, str], ...]


class FockState:
    """Integer linear combination of commuting creation monomials."""

    __slots__ = ("surface", "terms")

    def __init__(self, surface: SurfaceModel, terms: Optional[dict] = None):
        clean: dict[FockMonomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(mono))
            for level, label in mono:
                if level < 1:
                    raise ValueError(f"creation level must be at least 1: {level}")
                surface.degree(label)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.surface = surface
        self.terms = {m: c for m, c in clean.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def bidegree(self, mono: FockMonomial) -> tuple[int, int]:
        t = sum(level for level, _ in mono)
        u = sum(2 * level - 2 + self.surface.degree(label) for level, label in mono)
        return (t, u)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FockState)
            and self.surface is other.surface
            and self.terms == other.terms
        )

    def __add__(self, other: "FockState") -> "FockState":
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = merged.get(mono, 0) + c
        return FockState(self.surface, merged)

    def __sub__(self, other: "FockState") -> "FockState":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "FockState":
        return FockState(self.surface, {m: k * c for m, c in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "FockState(0)"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            body = (
                "*".join(f"a[-{lv}]({lb})" for lv, lb in mono) if mono else "vac"
            )
            bits.append(f"{c}*{body}")
        return "FockState(" + " + ".join(bits) + ")"


def vacuum(surface: SurfaceModel) -> FockState:
    """The empty monomial with coefficient 1."""
    return FockState(surface, {(): 1})


def create(state: FockState, m: int, gamma: str) -> FockState:
    """Multiply by the creation generator a_{-m}(gamma)."""
    if m < 1:
        raise ValueError(f"creation level must be at least 1: {m}")
    state.surface.degree(gamma)
    return FockState(
        state.surface,
        {
            tuple(sorted(mono + ((m, gamma),))): c
            for mono, c in state.terms.items()
        },
    )


def annihilate(state: FockState, m: int, alpha: str) -> FockState:
    """Apply a_m(alpha) as a derivation; kills the vacuum.

    Each matching factor a_{-m}(beta) is removed once, contributing its
    multiplicity times c_m <alpha, beta>.
    """
    if m < 1:
        raise ValueError(f"annihilation level must be at least 1: {m}")
    surface = state.surface
    surface.degree(alpha)
    cm = nakajima_closed_form(m)
    out: dict[FockMonomial, int] = {}
    for mono, c in state.terms.items():
        seen = set()
        for pos, (level, beta) in enumerate(mono):
            if level != m or (level, beta) in seen:
                continue
            seen.add((level, beta))
            ip = surface.pair(alpha, beta)
            if ip == 0:
                continue
            mult = mono.count((level, beta))
            reduced = mono[:pos] + mono[pos + 1 :]
            out[reduced] = out.get(reduced, 0) + c * mult * cm * ip
    return FockState(surface, out)


def basis_monomials(surface: SurfaceModel, max_t: int) -> list[FockMonomial]:
    """All creation monomials of t-weight at most max_t, deterministic order."""
    gens = [
        (m, name) for m in range(1, max_t + 1) for name, _ in surface.basis
    ]
    out: list[FockMonomial] = []

    def rec(i: int, budget: int, acc: list):
        if i == len(gens):
            out.append(tuple(acc))
            return
        level = gens[i][0]
        copies = 0
        while copies * level <= budget:
            rec(i + 1, budget - copies * level, acc + [gens[i]] * copies)
            copies += 1

    rec(0, max_t, [])
    return [tuple(sorted(mono)) for mono in out]


@dataclass(frozen=True)
class CommutatorReport:
    """Result of probing [a_m(alpha), a_{-k}(beta)] against its scalar."""

    m: int
    k: int
    alpha: str
    beta: str
    scalar: int
    probes_checked: int
    failures: tuple[int, ...]  # indices into the probe list

    @property
    def passed(self) -> bool:
        return not self.failures


def commutator_check(
    surface: SurfaceModel,
    m: int,
    k: int,
    alpha: str,
    beta: str,
    probes: Optional[Iterable[FockState]] = None,
) -> CommutatorReport:
    """Verify the commutation relation on probe states.

    Expected action: delta_{mk} * c_m * <alpha, beta> * identity. Default
    probes span every monomial through t-weight 6.
    """
    if probes is None:
        probes = [
            FockState(surface, {mono: 1})
            for mono in basis_monomials(surface, 6)
        ]
    probes = list(probes)
    scalar = nakajima_closed_form(m) * surface.pair(alpha, beta) if m == k else 0
    failures = []
    for idx, probe in enumerate(probes):
        lhs = annihilate(create(probe, k, beta), m, alpha) - create(
            annihilate(probe, m, alpha), k, beta
        )
        if lhs != scalar * probe:
            failures.append(idx)
    return CommutatorReport(m, k, alpha, beta, scalar, len(probes), tuple(failures))
