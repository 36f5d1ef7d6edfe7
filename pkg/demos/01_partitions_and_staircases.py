"""Partitions, staircase ideals, and their determinantal matrices.

A length-n subscheme of the plane fixed by the torus (x, y) -> (tx, uy)
is cut out by a monomial ideal, and monomial ideals with n-dimensional
quotient are exactly the Young diagrams with n boxes. This script walks
that dictionary end to end for a few small shapes.

Run:  python3 demos/01_partitions_and_staircases.py
"""

from hilb import (
    Partition,
    enumerate_partitions,
    generator_count,
    hilbert_burch,
    pentagonal_partition_count,
    socle_count,
    staircase,
)

print("=== All torus-fixed length-4 subschemes of the affine plane ===")
for lam in enumerate_partitions(4):
    ideal = staircase(lam)
    gens = ", ".join(str(m) for m in ideal.generators)
    print(f"  {str(lam):12} ideal = ({gens})")

print()
print("Counting fixed points is counting partitions; an independent")
print("recurrence (alternating sums over generalized pentagonal numbers)")
print("confirms the enumeration:")
for n in (5, 10, 25):
    print(
        f"  n={n:3}: enumerated {len(enumerate_partitions(n)):5}, "
        f"recurrence says {pentagonal_partition_count(n):5}"
    )

print()
print("=== Anatomy of one staircase: (5,3,3,1) ===")
lam = Partition((5, 3, 3, 1))
ideal = staircase(lam)
print(f"shape {lam}, quotient dimension {lam.size}")
print(f"minimal generators : {', '.join(str(m) for m in ideal.generators)}")
print(f"socle monomials    : {', '.join(str(m) for m in ideal.socle())}")
print(
    f"counts: {generator_count(lam)} generators = "
    f"{socle_count(lam)} socle elements + 1 "
    f"(and {lam.distinct_part_count()} distinct part values)"
)

print()
print("=== The syzygy matrix recovers the generators as minors ===")
for parts in ((1,), (2, 1), (5, 3, 3, 1)):
    lam = Partition(parts)
    mat = hilbert_burch(lam)
    print(f"shape {lam}:")
    print("\n".join("  " + line for line in str(mat).splitlines()))
    minors = ", ".join(str(t) for t in mat.maximal_minors())
    print(f"  maximal minors: {minors}")
    print(f"  match generators up to sign: {mat.matches_generators()}")
    print()

print("=== Growing a subscheme one point at a time ===")
lam = Partition((2, 1))
print(f"partitions directly above {lam} (one more box):")
for mu in lam.covers():
    jump = generator_count(mu) - generator_count(lam)
    print(f"  {str(mu):10} generator count {generator_count(mu)} (jump {jump:+d})")
print("the generator count never moves by more than one box's worth.")
