#!/usr/bin/env python3
"""Narrative tour: closed forms vs brute-force enumeration.

Builds each graph family, computes its proper-partition profile two
ways, and prints them side by side. Everything is exact integers.
"""

from gstir import graphs, oracle
from gstir.exact import bell
from gstir.formulas import (MultipartiteSpec, km_bell, km_stirling,
                            multipartite_bell, multipartite_stirling,
                            myc_star_bell)

print("=== Complete multipartite graphs ===")
print("Every block of a proper partition lives inside one partite set,")
print("so the Bell number factorizes: B(K(n1..nl)) = prod bell(ni).\n")
for sizes in [(2, 2), (3, 3), (1, 2, 3), (2, 2, 2)]:
    g = graphs.complete_multipartite(sizes)
    spec = MultipartiteSpec(sizes)
    prof = oracle.stirling_profile(g)
    print(f"{g.name}: oracle bell = {prof.bell}, "
          f"product formula = {multipartite_bell(spec)}, "
          f"bell factors = {[bell(s) for s in sizes]}")
    formula_profile = {k: multipartite_stirling(spec, k)
                       for k in range(1, g.order + 1)
                       if multipartite_stirling(spec, k)}
    assert formula_profile == prof.counts
print()

print("=== K(n,n) minus a perfect matching ===")
print("Condition on how many matched pairs {u_i, v_i} become blocks.\n")
for n in range(1, 5):
    g = graphs.bipartite_minus_matching(n)
    prof = oracle.stirling_profile(g)
    print(f"KM({n}): profile {prof.counts}")
    print(f"        formula row {[km_stirling(n, k) for k in range(1, 2 * n + 1)]}"
          f"  bell {km_bell(n)}")
    assert prof.bell == km_bell(n)
print()

print("=== Mycielskians of stars ===")
print("The star center's only non-neighbors are its copy and the apex,")
print("which drives a three-case analysis for the Bell number.\n")
for n in range(2, 6):
    g = graphs.mycielskian(graphs.star(n))
    prof = oracle.stirling_profile(g)
    print(f"Myc(St({n})): {g.order} vertices, bell = {prof.bell}, "
          f"formula = {myc_star_bell(n)}, "
          f"3-block count = {prof[3]} (= 2^{n}+1)")
    assert prof.bell == myc_star_bell(n)

print("\nAll closed forms confirmed by enumeration.")
