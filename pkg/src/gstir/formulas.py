"""Closed forms for proper-partition counts of the constructed families.

Each function computes its count in pure integer arithmetic; where the
published form uses fractions, the expression has been rearranged so the
single division is provably exact and is checked at runtime. Formulas
that also admit a Stirling-sum form compute both and assert agreement,
so a bad rearrangement can never return silently.

The brute-force oracle is the arbiter for all of these; the verify
harness (see gstir.verify) compares them systematically.
"""

from dataclasses import dataclass
from typing import Tuple

from .exact import bell, binomial, exact_div, stirling2


class OutOfDomain(ValueError):
    """A formula was evaluated outside its proven domain."""


@dataclass(frozen=True)
class MultipartiteSpec:
    """Block sizes n_1..n_l of a complete multipartite graph."""

    sizes: Tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) < 1 or any(s < 1 for s in self.sizes):
            raise ValueError("each block size must be >= 1")


def multipartite_stirling(spec: MultipartiteSpec, k: int) -> int:
    """Proper k-partitions of K(n_1..n_l).

    Every block of a proper partition lives inside one partite set, so
    the count is the sum over compositions (j_1..j_l) of k with j_i >= 1
    of the product of S2(n_i, j_i). Zero when k < l or k > sum(n_i).
    """
    sizes = spec.sizes
    ell = len(sizes)
    total_n = sum(sizes)
    if k < ell or k > total_n:
        return 0

    def rec(i, remaining):
        if i == ell - 1:
            return stirling2(sizes[i], remaining)
        left = ell - 1 - i  # later parts need >= 1 each
        acc = 0
        for j in range(1, min(sizes[i], remaining - left) + 1):
            s = stirling2(sizes[i], j)
            if s:
                acc += s * rec(i + 1, remaining - j)
        return acc

    return rec(0, k)


def multipartite_bell(spec: MultipartiteSpec) -> int:
    """Total proper partitions of K(n_1..n_l): the product of bell(n_i)."""
    out = 1
    for s in spec.sizes:
        out *= bell(s)
    return out


def knn_stirling4(n: int) -> int:
    """Proper 4-partitions of K_{n,n}: 2 - 2^(n+1) + 3^(n-1) + 4^(n-1)."""
    if n < 1:
        raise OutOfDomain("n >= 1")
    return 2 - 2 ** (n + 1) + 3 ** (n - 1) + 4 ** (n - 1)


def knn_stirling5(n: int) -> int:
    """Proper 5-partitions of K_{n,n}.

    Published with thirds; rearranged to
    (3*6^(n-1) - 5*4^(n-1) - 6*3^(n-1) + 6*2^n - 4) / 3 with the
    division checked exact. Cross-checked against the Stirling sum.
    """
    if n < 1:
        raise OutOfDomain("n >= 1")
    val = exact_div(
        3 * 6 ** (n - 1) - 5 * 4 ** (n - 1) - 6 * 3 ** (n - 1)
        + 6 * 2 ** n - 4, 3)
    alt = sum(stirling2(n, j) * stirling2(n, 5 - j) for j in range(1, 5))
    assert val == alt, (n, val, alt)
    return val


def knnn_stirling5(n: int) -> int:
    """Proper 5-partitions of K_{n,n,n}.

    (18 - 18*2^n + 2*3^n + 3*4^n) / 4, checked exact, and asserted equal
    to 3*S2(n,2)^2 + 3*S2(n,3).
    """
    if n < 1:
        raise OutOfDomain("n >= 1")
    val = exact_div(18 - 18 * 2 ** n + 2 * 3 ** n + 3 * 4 ** n, 4)
    alt = 3 * stirling2(n, 2) ** 2 + 3 * stirling2(n, 3)
    assert val == alt, (n, val, alt)
    return val


def km_stirling(n: int, k: int) -> int:
    """Proper k-partitions of K_{n,n} minus a perfect matching.

    Condition on the set of matched pairs {u_i, v_i} used as blocks:
    sum over s of C(n,s) * sum_j S2(s,j) * S2(s, k-n+s-j), the inner sum
    empty when k-n+s < 0.
    """
    if n < 1:
        raise OutOfDomain("n >= 1")
    if k < 0:
        return 0
    total = 0
    for s in range(n + 1):
        rem = k - n + s
        if rem < 0:
            continue
        inner = sum(stirling2(s, j) * stirling2(s, rem - j)
                    for j in range(rem + 1))
        total += binomial(n, s) * inner
    return total


def km_bell(n: int) -> int:
    """Total proper partitions of K_{n,n} minus a matching.

    sum_{k=0..n} C(n,k) * bell(k)^2. Note: disagrees with some published
    tabulations for n >= 2; the oracle sides with this formula (see
    docs/errata.md).
    """
    if n < 1:
        raise OutOfDomain("n >= 1")
    return sum(binomial(n, k) * bell(k) ** 2 for k in range(n + 1))


def myc_star_bell(n: int) -> int:
    """Total proper partitions of the Mycielskian of the n-vertex star.

    Case analysis on the block containing the star center c (whose only
    non-neighbors are the center copy c' and the apex u): with m = n-1,
    2 * sum_k C(m,k) bell(2m-k)  +  sum_{i,j} C(m,i) C(m,j) bell(2m-i-j).
    """
    if n < 1:
        raise OutOfDomain("n >= 1")
    m = n - 1
    paired = sum(binomial(m, k) * bell(2 * m - k) for k in range(m + 1))
    singleton = sum(binomial(m, i) * binomial(m, j) * bell(2 * m - i - j)
                    for i in range(m + 1) for j in range(m + 1))
    return 2 * paired + singleton


def myc_star_stirling3(n: int) -> int:
    """Proper 3-partitions of the Mycielskian of the n-vertex star: 2^n + 1.

    Valid only for n >= 2: the star needs at least one leaf for the
    three case-analysis parts to be nonempty (at n=1 the true count is 1,
    established by the oracle).
    """
    if n < 2:
        raise OutOfDomain("n >= 2")
    return 2 ** n + 1


def myc_star_stirling_2n(n: int) -> int:
    """Proper 2n-partitions of the Mycielskian of the n-vertex star.

    Exactly one block has size 2 and it must be a non-adjacent pair:
    C(2n+1, 2) - (4(n-1) + 1) = 2n^2 - 3n + 3.
    """
    if n < 1:
        raise OutOfDomain("n >= 1")
    return 2 * n * n - 3 * n + 3
