"""Ground-truth enumeration of proper vertex partitions.

A proper partition puts no two adjacent vertices in the same block. The
profile of a graph is the vector counting proper partitions with exactly
k blocks, for k = 1..n; its total is the graph's Bell number.

The search assigns vertices one at a time in restricted-growth order:
vertex i may join an existing block (if the block holds none of its
neighbors) or open the next fresh block. Every unordered partition is
visited exactly once, so no symmetry factor is ever divided out.
Vertices are processed in descending-degree order (ties by index) for
fail-fast pruning; block membership is a bitset, so the independence
test per candidate block is one AND.

The search tree can be split at a fixed depth into independent prefix
subtasks and farmed out to worker processes. Per-k subtotals are summed,
so the profile is bit-identical for any worker count.
"""

import multiprocessing
from dataclasses import dataclass, field
from typing import Dict, List

from .graphs import Graph


class TooLarge(ValueError):
    """The request exceeds the enumeration guard rail."""


DEFAULT_HARD_CAP = 24  # vertices; B(G) grows faster than exponentially


@dataclass
class CountProfile:
    """Proper-partition counts of one graph, indexed by block count."""

    graph_order: int
    counts: Dict[int, int] = field(default_factory=dict)

    @property
    def bell(self) -> int:
        if self.graph_order == 0:
            return 1  # the empty partition
        return sum(self.counts.values())

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    def min_blocks(self) -> int:
        """Smallest k with a nonzero count: the chromatic number."""
        return min(k for k, v in self.counts.items() if v)


@dataclass
class Polynomial:
    """Exact polynomial with a basis tag.

    coefficients[k] multiplies x^k in the power basis, or the falling
    factorial x(x-1)...(x-k+1) in the falling-factorial basis. Power
    basis coefficients may be negative (chromatic polynomials are
    alternating); falling-basis ones never are here.
    """

    basis: str  # "power" | "falling"
    coefficients: List[int]

    def evaluate(self, x: int) -> int:
        if self.basis == "power":
            acc = 0
            for c in reversed(self.coefficients):
                acc = acc * x + c
            return acc
        acc = 0
        for k, c in enumerate(self.coefficients):
            term = c
            for i in range(k):
                term *= x - i
            acc += term
        return acc

    def to_power_basis(self) -> "Polynomial":
        if self.basis == "power":
            return self
        out = [0] * max(len(self.coefficients), 1)
        ff = [1]  # coefficients of x^(falling 0) = 1
        for k, c in enumerate(self.coefficients):
            if c:
                for i, a in enumerate(ff):
                    out[i] += c * a
            # ff *= (x - k) for the next round
            ff = [0] + ff
            for i in range(len(ff) - 1):
                ff[i] -= k * ff[i + 1]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return Polynomial("power", out)


def _search(idx: int, n: int, adj, blocks: List[int], counts: List[int]):
    if idx == n:
        counts[len(blocks)] += 1
        return
    a = adj[idx]
    bit = 1 << idx
    for b in range(len(blocks)):
        occ = blocks[b]
        if not occ & a:
            blocks[b] = occ | bit
            _search(idx + 1, n, adj, blocks, counts)
            blocks[b] = occ
    blocks.append(bit)
    _search(idx + 1, n, adj, blocks, counts)
    blocks.pop()


def _prefixes(depth: int, n: int, adj):
    """All proper block assignments of the first `depth` vertices."""
    out = []

    def rec(idx, blocks):
        if idx == depth:
            out.append(tuple(blocks))
            return
        a = adj[idx]
        bit = 1 << idx
        for b in range(len(blocks)):
            if not blocks[b] & a:
                blocks[b] |= bit
                rec(idx + 1, blocks)
                blocks[b] &= ~bit
        blocks.append(bit)
        rec(idx + 1, blocks)
        blocks.pop()

    rec(0, [])
    return out


def _run_prefix(args):
    adj, n, prefix, depth = args
    counts = [0] * (n + 2)
    _search(depth, n, adj, list(prefix), counts)
    return counts


def _ordered_adjacency(g: Graph):
    """Neighbor bitsets relabeled into descending-degree search order."""
    n = g.order
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    adj = []
    for v in order:
        m = g.neighbors_bitset(v)
        b = 0
        while m:
            w = (m & -m).bit_length() - 1
            b |= 1 << pos[w]
            m &= m - 1
        adj.append(b)
    return tuple(adj)


def stirling_profile(g: Graph, jobs: int = 1, split_depth: int = 6,
                     hard_cap: int = DEFAULT_HARD_CAP,
                     force: bool = False) -> CountProfile:
    """Full proper-partition profile of g by exhaustive search.

    Practical above ~18 vertices only for sparse graphs; refuses more
    than `hard_cap` vertices unless force=True. The result does not
    depend on jobs or split_depth.
    """
    n = g.order
    if n > hard_cap and not force:
        raise TooLarge(
            f"{n} vertices exceeds the cap of {hard_cap}; pass force=True "
            "if you really mean it")
    if n == 0:
        return CountProfile(0, {})
    adj = _ordered_adjacency(g)
    depth = min(split_depth, n)
    if jobs <= 1:
        counts = [0] * (n + 2)
        _search(0, n, adj, [], counts)
    else:
        tasks = [(adj, n, p, depth) for p in _prefixes(depth, n, adj)]
        counts = [0] * (n + 2)
        with multiprocessing.Pool(jobs) as pool:
            for sub in pool.imap_unordered(_run_prefix, tasks, chunksize=8):
                for k, v in enumerate(sub):
                    counts[k] += v
    return CountProfile(n, {k: counts[k] for k in range(1, n + 1)
                            if counts[k]})


def bell_of(g: Graph, **kwargs) -> int:
    """Graphical Bell number: total proper partitions over all k."""
    return stirling_profile(g, **kwargs).bell


def partition_polynomial(g: Graph, **kwargs) -> Polynomial:
    """Generating polynomial of the profile: coefficient of x^k is counts[k]."""
    prof = stirling_profile(g, **kwargs)
    coeffs = [0] * (g.order + 1)
    for k, v in prof.counts.items():
        coeffs[k] = v
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return Polynomial("power", coeffs)


def chromatic_polynomial(g: Graph, **kwargs) -> Polynomial:
    """Proper-coloring polynomial via the falling-factorial transform.

    The falling-basis coefficients are exactly the profile counts;
    returned expanded into the power basis (signed coefficients).
    """
    prof = stirling_profile(g, **kwargs)
    coeffs = [0] * (g.order + 1)
    for k, v in prof.counts.items():
        coeffs[k] = v
    return Polynomial("falling", coeffs).to_power_basis()


def proper_coloring_count(g: Graph, q: int, node_limit: int = 10**8) -> int:
    """Proper colorings with q labeled colors, by direct enumeration.

    Independent of the profile machinery: used to cross-check the
    chromatic transform.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    n = g.order
    if n == 0:
        return 1
    if q == 0:
        return 0
    if q ** n > node_limit:
        raise TooLarge(f"{q}^{n} colorings is past the enumeration limit")
    adj = _ordered_adjacency(g)
    color_of = [0] * n

    def rec(idx):
        if idx == n:
            return 1
        total = 0
        a = adj[idx]
        for c in range(q):
            ok = True
            m = a & ((1 << idx) - 1)  # already-colored neighbors
            while m:
                w = (m & -m).bit_length() - 1
                if color_of[w] == c:
                    ok = False
                    break
                m &= m - 1
            if ok:
                color_of[idx] = c
                total += rec(idx + 1)
        return total

    return rec(0)


def nonadjacent_pair_count(g: Graph) -> int:
    """C(n,2) minus the edge count: proper partitions into n-1 blocks."""
    n = g.order
    return n * (n - 1) // 2 - g.edge_count
