"""Self-contained invariant suite behind `hilb verify`.

Every check recomputes its expected values from scratch, through closed
forms, classical recurrences, or brute enumeration, so a failure points
at the library rather than at the checker. Checks scale with nmax but
cap themselves where exhaustive enumeration stops being desk-scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .equivariant import (
    AFFINE_CHART,
    CharVector,
    cell_dimension,
    fixed_points_p2,
    poincare_affine,
    poincare_p2,
    poincare_punctual,
    punctual_cell_dims,
    tangent_weights,
)
from .heisenberg import (
    FockState,
    SurfaceModel,
    basis_monomials,
    commutator_check,
    fock_character,
    goettsche_series,
    k3_surface,
    p2_surface,
)
from .incidence import (
    check_codim_hypotheses,
    euler_incidence,
    nested_pairs,
    strata_propagate,
    strata_table,
)
from .lattice import (
    IntersectionLattice,
    exceptional_total_square,
    hilbert_scheme_dim,
    nakajima_closed_form,
    nakajima_recurrence,
    one_point_locus_dim,
    p2_lattice,
    punctual_locus_dim,
    rank_zero_lattice,
)
from .monomial import generator_count, hilbert_burch, socle_count, staircase
from .partitions import enumerate_partitions, pentagonal_partition_count


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    passed: bool
    detail: str


def _sigma(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def _colored_partition_counts(colors: int, tmax: int) -> list[int]:
    # Independent Euler route: n*a_n = colors * sum sigma(k) a_{n-k}.
    out = [1]
    for n in range(1, tmax + 1):
        out.append(
            sum(colors * _sigma(k) * out[n - k] for k in range(1, n + 1)) // n
        )
    return out


def check_partition_counts(nmax: int) -> CheckResult:
    """Enumeration length vs the pentagonal-number recurrence."""
    top = min(nmax, 30)
    for n in range(top + 1):
        got = len(enumerate_partitions(n))
        want = pentagonal_partition_count(n)
        if got != want:
            return CheckResult(
                "partition-counts", f"n<={top}", False, f"p({n}): {got} != {want}"
            )
    return CheckResult("partition-counts", f"n<={top}", True, "enumeration matches recurrence")


def check_conjugate_involution(nmax: int) -> CheckResult:
    top = min(nmax, 20)
    for n in range(top + 1):
        for lam in enumerate_partitions(n):
            if lam.conjugate().conjugate() != lam:
                return CheckResult(
                    "conjugate-involution", f"n<={top}", False, f"failed at {lam}"
                )
    return CheckResult("conjugate-involution", f"n<={top}", True, "transpose is an involution")


def check_cover_duality(nmax: int) -> CheckResult:
    """covers/cocovers adjunction plus the distinct-part count formulas."""
    top = min(nmax, 20)
    for n in range(top + 1):
        for lam in enumerate_partitions(n):
            ups = lam.covers()
            if len(ups) != lam.distinct_part_count() + 1:
                return CheckResult("cover-duality", f"n<={top}", False, f"cover count at {lam}")
            for mu in ups:
                if lam not in mu.cocovers():
                    return CheckResult(
                        "cover-duality", f"n<={top}", False, f"{lam} missing under {mu}"
                    )
            if lam:
                downs = lam.cocovers()
                if len(downs) != lam.distinct_part_count():
                    return CheckResult(
                        "cover-duality", f"n<={top}", False, f"cocover count at {lam}"
                    )
                for nu in downs:
                    if lam not in nu.covers():
                        return CheckResult(
                            "cover-duality", f"n<={top}", False, f"{lam} missing over {nu}"
                        )
    return CheckResult("cover-duality", f"n<={top}", True, "adjunction and counts hold")


def check_generator_socle(nmax: int) -> CheckResult:
    """Generator count = socle count + 1 = distinct parts + 1, both routes."""
    top = min(nmax, 25)
    total = 0
    for n in range(1, top + 1):
        for lam in enumerate_partitions(n):
            g = generator_count(lam)
            s = socle_count(lam)
            d = lam.distinct_part_count()
            gc = generator_count(lam.conjugate())
            if not (g == s + 1 == d + 1 and gc == g):
                return CheckResult(
                    "generator-socle", f"n<={top}", False,
                    f"{lam}: generators {g}, socle {s}, distinct {d}, conjugate {gc}",
                )
            total += 1
    return CheckResult("generator-socle", f"n<={top}", True, f"{total} partitions checked")


def check_hilbert_burch(nmax: int) -> CheckResult:
    """Maximal minors reproduce the staircase generators up to sign."""
    top = min(nmax, 15)
    total = 0
    for n in range(1, top + 1):
        for lam in enumerate_partitions(n):
            m = hilbert_burch(lam)
            gens = set(staircase(lam).generators)
            minors = {t.monomial for t in m.maximal_minors()}
            if not m.matches_generators() or minors != gens:
                return CheckResult("hilbert-burch", f"n<={top}", False, f"failed at {lam}")
            total += 1
    return CheckResult("hilbert-burch", f"n<={top}", True, f"{total} matrices checked")


def check_jump_bound(nmax: int) -> CheckResult:
    """Generator count moves by at most one along nested pairs."""
    top = min(nmax, 20)
    pairs = 0
    for n in range(1, top + 1):
        for pr in nested_pairs(n):
            if abs(generator_count(pr.upper) - generator_count(pr.lower)) > 1:
                return CheckResult(
                    "jump-bound", f"n<={top}", False, f"{pr.lower} -> {pr.upper}"
                )
            pairs += 1
    return CheckResult("jump-bound", f"n<={top}", True, f"{pairs} nested pairs checked")


def check_tangent_weights(nmax: int) -> CheckResult:
    """2n weights per point; multiset symmetric under conjugate + chart swap."""
    top = min(nmax, 10)
    u, v = AFFINE_CHART
    for n in range(top + 1):
        for lam in enumerate_partitions(n):
            ws = tangent_weights(lam, u, v)
            if len(ws) != 2 * n:
                return CheckResult("tangent-weights", f"n<={top}", False, f"count at {lam}")
            swapped = tangent_weights(lam.conjugate(), v, u)
            if sorted(ws) != sorted(swapped):
                return CheckResult(
                    "tangent-weights", f"n<={top}", False, f"conjugate multiset at {lam}"
                )
    return CheckResult("tangent-weights", f"n<={top}", True, "counts and symmetry hold")


def check_affine_closed_form(nmax: int) -> CheckResult:
    """Cell-count polynomial vs the partition-length closed form."""
    top = min(nmax, 12)
    for n in range(top + 1):
        want: dict[int, int] = {}
        for lam in enumerate_partitions(n):
            d = 2 * (n - len(lam))
            want[d] = want.get(d, 0) + 1
        if poincare_affine(n).coeffs != want:
            return CheckResult("affine-closed-form", f"n<={top}", False, f"slice n={n}")
    return CheckResult("affine-closed-form", f"n<={top}", True, "matches length statistic")


def check_chamber_independence(nmax: int) -> CheckResult:
    """Same Poincare polynomials across three unrelated generic subgroups."""
    top_a = min(nmax, 12)
    top_p = min(nmax, 8)
    for n in range(top_a + 1):
        rhos = (CharVector(1, n + 2), CharVector(n + 2, 1), CharVector(2, 2 * n + 3))
        base = poincare_affine(n, rhos[0])
        for rho in rhos[1:]:
            if poincare_affine(n, rho) != base:
                return CheckResult(
                    "chamber-independence", f"affine n<={top_a}, p2 n<={top_p}",
                    False, f"affine n={n} rho={tuple(rho)}",
                )
    for n in range(top_p + 1):
        rhos = (CharVector(1, 2 * n * n + 3), CharVector(2 * n * n + 3, 1),
                CharVector(2, 4 * n * n + 7))
        base = poincare_p2(n, rhos[0])
        for rho in rhos[1:]:
            if poincare_p2(n, rho) != base:
                return CheckResult(
                    "chamber-independence", f"affine n<={top_a}, p2 n<={top_p}",
                    False, f"p2 n={n} rho={tuple(rho)}",
                )
    return CheckResult(
        "chamber-independence", f"affine n<={top_a}, p2 n<={top_p}", True,
        "polynomials agree in all chambers tried",
    )


def check_punctual(nmax: int) -> CheckResult:
    """Punctual cells: count p(n), top dimension n-1, conjugation-stable."""
    top = min(nmax, 25)
    for n in range(1, top + 1):
        dims = punctual_cell_dims(n)
        if len(dims) != pentagonal_partition_count(n):
            return CheckResult("punctual-cells", f"n<={top}", False, f"count at n={n}")
        if max(dims) != punctual_locus_dim(n):
            return CheckResult("punctual-cells", f"n<={top}", False, f"top dim at n={n}")
        if poincare_punctual(n).evaluate(1) != len(dims):
            return CheckResult("punctual-cells", f"n<={top}", False, f"Euler at n={n}")
    return CheckResult("punctual-cells", f"n<={top}", True, "count, top dim, Euler all match")


def check_euler_incidence(nmax: int) -> CheckResult:
    top = min(nmax, 20)
    for n in range(top + 1):
        euler_incidence(n)  # raises ConsistencyError on mismatch
    return CheckResult(
        "euler-incidence", f"n<={top}", True, "pairs = generator sum = socle sum"
    )


def check_strata_bounds(nmax: int) -> CheckResult:
    """Propagated bounds never exceed 2n + 4 - 2i; codim hypotheses hold."""
    top = max(nmax, 40)
    t = strata_table(1)
    for n in range(1, top + 1):
        for i, b in t.bounds.items():
            if i >= 2 and b > 2 * n + 4 - 2 * i:
                return CheckResult(
                    "strata-bounds", f"n<={top}", False, f"bound({i},{n})={b} too big"
                )
        if not check_codim_hypotheses(t).all_satisfied:
            return CheckResult("strata-bounds", f"n<={top}", False, f"codim fails at n={n}")
        if n < top:
            t = strata_propagate(t)
    return CheckResult("strata-bounds", f"n<={top}", True, "bounds and codims verified")


def check_exceptional_square(nmax: int) -> CheckResult:
    """E.E = -n over three different bases."""
    top = min(max(nmax, 50), 50)
    bases = (
        rank_zero_lattice(),
        p2_lattice(),
        IntersectionLattice(((2, 3), (3, -4)), ("A", "B")),
    )
    for base in bases:
        for n in range(1, top + 1):
            got = exceptional_total_square(n, base)
            if got != -n:
                return CheckResult(
                    "exceptional-square", f"n<={top}", False,
                    f"base rank {base.rank}, n={n}: {got}",
                )
    return CheckResult("exceptional-square", f"n<={top}", True, "three bases, all -n")


def check_nakajima(nmax: int) -> CheckResult:
    """Recurrence equals closed form; dimension bookkeeping is complementary."""
    top = max(nmax, 200)
    seq = nakajima_recurrence(top)
    for n in range(1, top + 1):
        if seq.value(n) != nakajima_closed_form(n):
            return CheckResult("nakajima", f"n<={top}", False, f"mismatch at n={n}")
        if one_point_locus_dim(n) + punctual_locus_dim(n) != hilbert_scheme_dim(n):
            return CheckResult("nakajima", f"n<={top}", False, f"dims at n={n}")
    return CheckResult("nakajima", f"n<={top}", True, "recurrence matches closed form")


def check_goettsche_vs_fixed_points(nmax: int) -> CheckResult:
    """Series slices equal projective-plane fixed-point Poincare polynomials."""
    top = min(nmax, 6)
    series = goettsche_series(p2_surface(), top)
    for n in range(top + 1):
        if series.t_slice(n) != poincare_p2(n).coeffs:
            return CheckResult("goettsche-vs-fixed-points", f"n<={top}", False, f"slice {n}")
        if series.u_one(n) != len(fixed_points_p2(n)):
            return CheckResult("goettsche-vs-fixed-points", f"n<={top}", False, f"Euler {n}")
    return CheckResult(
        "goettsche-vs-fixed-points", f"n<={top}", True, "slices and Euler counts agree"
    )


def check_fock_character(nmax: int) -> CheckResult:
    """Per-generator character equals the Betti-indexed product, two models."""
    top = min(nmax, 8)
    for surface in (p2_surface(), k3_surface()):
        if fock_character(surface, top) != goettsche_series(surface, top):
            return CheckResult(
                "fock-character", f"t<={top}", False, f"betti {surface.betti}"
            )
        colored = _colored_partition_counts(surface.euler_characteristic(), top)
        series = goettsche_series(surface, top)
        for n in range(top + 1):
            if series.u_one(n) != colored[n]:
                return CheckResult(
                    "fock-character", f"t<={top}", False,
                    f"u=1 slice {n} of betti {surface.betti}",
                )
    return CheckResult("fock-character", f"t<={top}", True, "both models, both routes")


def check_commutators(nmax: int) -> CheckResult:
    """Heisenberg relation on spanning probes, plus an off-diagonal pairing."""
    mk = min(nmax, 5)
    depth = min(nmax, 6)
    surface = p2_surface()
    probes = [
        FockState(surface, {mono: 1}) for mono in basis_monomials(surface, depth)
    ]
    labels = surface.labels()
    for m in range(1, mk + 1):
        for k in range(1, mk + 1):
            for alpha in labels:
                for beta in labels:
                    rep = commutator_check(surface, m, k, alpha, beta, probes)
                    if not rep.passed:
                        return CheckResult(
                            "commutators", f"m,k<={mk}", False,
                            f"[a_{m}({alpha}), a_-{k}({beta})]",
                        )
    skew = SurfaceModel((1, 0, 2, 0, 1), ((0, 1), (1, 0)), ("f1", "f2"))
    probes2 = [
        FockState(skew, {mono: 1}) for mono in basis_monomials(skew, min(depth, 4))
    ]
    for m in range(1, min(mk, 3) + 1):
        for alpha in skew.labels():
            for beta in skew.labels():
                rep = commutator_check(skew, m, m, alpha, beta, probes2)
                if not rep.passed:
                    return CheckResult(
                        "commutators", f"m,k<={mk}", False,
                        f"skew model [a_{m}({alpha}), a_-{m}({beta})]",
                    )
    return CheckResult(
        "commutators", f"m,k<={mk}", True,
        f"{len(probes)} probes on the plane model, {len(probes2)} on the skew model",
    )


ALL_CHECKS: tuple[tuple[str, Callable[[int], CheckResult]], ...] = (
    ("partition-counts", check_partition_counts),
    ("conjugate-involution", check_conjugate_involution),
    ("cover-duality", check_cover_duality),
    ("generator-socle", check_generator_socle),
    ("hilbert-burch", check_hilbert_burch),
    ("jump-bound", check_jump_bound),
    ("tangent-weights", check_tangent_weights),
    ("affine-closed-form", check_affine_closed_form),
    ("chamber-independence", check_chamber_independence),
    ("punctual-cells", check_punctual),
    ("euler-incidence", check_euler_incidence),
    ("strata-bounds", check_strata_bounds),
    ("exceptional-square", check_exceptional_square),
    ("nakajima", check_nakajima),
    ("goettsche-vs-fixed-points", check_goettsche_vs_fixed_points),
    ("fock-character", check_fock_character),
    ("commutators", check_commutators),
)


def run_checks(nmax: int, names: Optional[list[str]] = None) -> list[CheckResult]:
    """Run the suite (or a named subset) scaled by nmax."""
    if nmax < 1:
        raise ValueError(f"nmax must be at least 1, got {nmax}")
    selected = names if names is not None else [n for n, _ in ALL_CHECKS]
    table = dict(ALL_CHECKS)
    unknown = [n for n in selected if n not in table]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [table[n](nmax) for n in selected]
