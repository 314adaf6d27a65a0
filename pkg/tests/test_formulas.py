import pytest

from gstir import graphs, oracle
from gstir.exact import bell
from gstir.formulas import (MultipartiteSpec, OutOfDomain, km_bell,
                            km_stirling, knn_stirling4, knn_stirling5,
                            knnn_stirling5, multipartite_bell,
                            multipartite_stirling, myc_star_bell,
                            myc_star_stirling3, myc_star_stirling_2n)


def size_multisets(total_max):
    out = []

    def rec(prefix, smallest, budget):
        for s in range(smallest, budget + 1):
            t = prefix + (s,)
            out.append(t)
            rec(t, s, budget - s)

    rec((), 1, total_max)
    return out


def test_multipartite_stirling_examples():
    assert multipartite_stirling(MultipartiteSpec((2, 2)), 3) == 2
    assert multipartite_stirling(MultipartiteSpec((3, 3, 3)), 4) == 9
    assert multipartite_stirling(MultipartiteSpec((2, 2)), 1) == 0
    assert multipartite_stirling(MultipartiteSpec((2, 2)), 5) == 0


def test_multipartite_bell_examples():
    assert multipartite_bell(MultipartiteSpec((2, 2))) == 4
    assert multipartite_bell(MultipartiteSpec((1, 2, 3))) == 10
    assert multipartite_bell(MultipartiteSpec((3, 3))) == 25


def test_multipartite_vs_oracle():
    for sizes in size_multisets(9):
        spec = MultipartiteSpec(sizes)
        g = graphs.complete_multipartite(sizes)
        prof = oracle.stirling_profile(g)
        for k in range(1, g.order + 1):
            assert multipartite_stirling(spec, k) == prof[k], (sizes, k)
        total = sum(multipartite_stirling(spec, k)
                    for k in range(1, g.order + 1))
        assert total == multipartite_bell(spec) == prof.bell


def test_knn_closed_forms_vs_stirling_sum():
    for n in range(1, 13):
        spec = MultipartiteSpec((n, n))
        assert knn_stirling4(n) == multipartite_stirling(spec, 4)
        assert knn_stirling5(n) == multipartite_stirling(spec, 5)
        spec3 = MultipartiteSpec((n, n, n))
        assert knnn_stirling5(n) == multipartite_stirling(spec3, 5)


def test_knn_examples():
    assert knn_stirling4(1) == 0
    assert knn_stirling4(3) == 11
    assert knn_stirling4(8) == 18061
    assert knn_stirling5(1) == 0
    assert knn_stirling5(3) == 6
    assert knn_stirling5(4) == 86
    assert knnn_stirling5(1) == 0
    assert knnn_stirling5(2) == 3
    assert knnn_stirling5(3) == 30
    with pytest.raises(OutOfDomain):
        knn_stirling4(0)


def test_km_stirling_examples():
    assert km_stirling(3, 3) == 10
    assert km_stirling(5, 3) == 35
    assert km_stirling(1, 1) == 1
    assert km_stirling(2, 0) == 0


def test_km_vs_oracle():
    for n in range(1, 5):
        g = graphs.bipartite_minus_matching(n)
        prof = oracle.stirling_profile(g)
        for k in range(1, 2 * n + 1):
            assert km_stirling(n, k) == prof[k], (n, k)
        assert sum(km_stirling(n, k) for k in range(2 * n + 1)) == km_bell(n)
        assert km_bell(n) == prof.bell


def test_km_bell_values():
    # the oracle sides with the formula, not the published table (7 vs 11,
    # 41 vs 106): see docs/errata.md
    assert km_bell(1) == 2
    assert km_bell(2) == 7
    assert km_bell(3) == 41


def test_myc_star_bell_examples():
    assert myc_star_bell(2) == 11   # 2*3 + 5
    assert myc_star_bell(3) == 106  # 2*27 + 52
    assert myc_star_bell(4) == 1695  # 2*409 + 877; published table says 1573


def test_myc_star_bell_vs_oracle():
    for n in range(1, 6):
        g = graphs.mycielskian(graphs.star(n))
        assert myc_star_bell(n) == oracle.bell_of(g), n


def test_myc_star_stirling3():
    assert myc_star_stirling3(3) == 9
    assert myc_star_stirling3(5) == 33
    with pytest.raises(OutOfDomain):
        myc_star_stirling3(1)
    # the n=1 exclusion is real: the oracle count is 1, not 2^1+1
    prof = oracle.stirling_profile(graphs.mycielskian(graphs.star(1)))
    assert prof[3] == 1
    for n in range(2, 6):
        prof = oracle.stirling_profile(graphs.mycielskian(graphs.star(n)))
        assert myc_star_stirling3(n) == prof[3]


def test_myc_star_stirling_2n():
    assert myc_star_stirling_2n(2) == 5
    assert myc_star_stirling_2n(7) == 80
    assert myc_star_stirling_2n(1) == 2
    for n in range(1, 6):
        g = graphs.mycielskian(graphs.star(n))
        prof = oracle.stirling_profile(g)
        assert myc_star_stirling_2n(n) == prof[2 * n] \
            == oracle.nonadjacent_pair_count(g)


def test_bell_sum_consistency():
    # sanity: multipartite bell for K(n,n,n) is bell(n)^3
    for n in range(1, 7):
        assert multipartite_bell(MultipartiteSpec((n, n, n))) == bell(n) ** 3
