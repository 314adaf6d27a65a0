#!/usr/bin/env python3
"""Narrative tour: the OEIS sequences this library generates.

Prints the first terms of each registered linear sequence, the two
triangles, and a sample b-file, and shows the cross-identities that tie
the sequences back to the graph counts.
"""

from gstir.formulas import myc_star_stirling3, myc_star_stirling_2n
from gstir.sequences import (KNOWN_IDS, bfile_text, sequence_values,
                             triangle_row)

print("Registered ids:", ", ".join(KNOWN_IDS), "\n")

for seq_id, what in [
        ("A000051", "2^n + 1: 3-block partitions of Mycielskian stars"),
        ("A096376", "2n^2 + n + 2: the 2n-block quadratic, shifted"),
        ("A384980", "4-block partitions of K(n,n)"),
        ("A384981", "5-block partitions of K(n,n)"),
        ("A384988", "one third of the 5-block partitions of K(n,n,n)")]:
    try:
        vals = sequence_values(seq_id, 0, 9)
    except Exception:
        vals = sequence_values(seq_id, 1, 10)
    print(f"{seq_id}  {what}")
    print("   ", ", ".join(str(v) for _, v in vals), "\n")

print("A385432: triangle of k-block partitions of K(n,n,n), k = 3..3n")
for n in range(1, 5):
    print(f"    n={n}:", triangle_row("A385432", n).entries)
print()

print("A385437: triangle of k-block partitions of KM(n), k = 2..2n")
for n in range(1, 5):
    print(f"    n={n}:", triangle_row("A385437", n).entries)
print()

print("Cross-identities (checked exactly):")
for n in range(2, 7):
    a = sequence_values("A000051", n, n)[0][1]
    assert a == myc_star_stirling3(n)
print("  A000051(n) == 3-block count of Myc(St(n)) for n >= 2")
for n in range(1, 7):
    a = sequence_values("A096376", n, n)[0][1]
    assert a == myc_star_stirling_2n(n + 1)
print("  A096376(n) == 2m-block count of Myc(St(m)) at m = n+1")

print("\nOEIS b-file for A384980 (first 10 terms):")
print(bfile_text(sequence_values("A384980", 1, 10)), end="")
