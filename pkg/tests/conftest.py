"""Shared helpers: an independent brute-force partition enumerator.

The library's own oracle uses degree-ordered backtracking with bitset
pruning; the enumerator here walks restricted-growth strings in plain
vertex order with no pruning and no shared code, so the two sides can
check each other.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def all_set_partitions(n):
    """Every partition of {0..n-1} as a list of blocks (lists of ints)."""
    if n == 0:
        yield []
        return

    def rec(i, blocks):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def proper_partition_counts(g):
    """{k: count} of proper partitions of g, the slow way."""
    counts = {}
    for blocks in all_set_partitions(g.order):
        ok = True
        for b in blocks:
            for i in range(len(b)):
                for j in range(i + 1, len(b)):
                    if g.has_edge(b[i], b[j]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            counts[len(blocks)] = counts.get(len(blocks), 0) + 1
    return counts
