"""OEIS-aligned sequence and triangle generators, plus emitters.

Linear sequences are keyed by their OEIS A-number and produce
(index, value) pairs from their documented offset. Two ids are
triangles read by rows. Emitters write b-file, JSON, and CSV forms;
values are always decimal strings, never scientific notation.
"""

import io
import json
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .exact import stirling2
from .formulas import (MultipartiteSpec, OutOfDomain, km_stirling,
                       knn_stirling4, knn_stirling5, multipartite_stirling)


class NotALinearSequence(ValueError):
    """A triangle id was passed where a linear sequence is required."""


class NotATriangle(ValueError):
    """A linear-sequence id was passed where a triangle is required."""


class NonMonotoneIndex(ValueError):
    """b-file indices must be strictly increasing."""


# id -> (offset, generator) for linear sequences
_LINEAR = {
    "A000051": (0, lambda n: 2 ** n + 1),
    "A096376": (1, lambda n: 2 * n * n + n + 2),
    "A384980": (1, knn_stirling4),
    "A384981": (1, knn_stirling5),
    "A384988": (1, lambda n: stirling2(n, 2) ** 2 + stirling2(n, 3)),
}

_TRIANGLES = ("A385432", "A385437")

KNOWN_IDS = tuple(sorted(_LINEAR)) + _TRIANGLES


@dataclass
class TriangleRow:
    n: int
    k_min: int
    k_max: int
    entries: List[int]


def sequence_offset(seq_id: str) -> int:
    if seq_id in _TRIANGLES:
        raise NotALinearSequence(seq_id)
    if seq_id not in _LINEAR:
        raise KeyError(f"unknown sequence id {seq_id!r}")
    return _LINEAR[seq_id][0]


def sequence_values(seq_id: str, start: int, stop: int) -> List[Tuple[int, int]]:
    """Terms a(start)..a(stop) inclusive as (index, value) pairs."""
    offset = sequence_offset(seq_id)
    if start > stop:
        raise ValueError("start must be <= stop")
    if start < offset:
        raise OutOfDomain(f"{seq_id} starts at index {offset}")
    gen = _LINEAR[seq_id][1]
    return [(n, gen(n)) for n in range(start, stop + 1)]


def triangle_row(seq_id: str, n: int) -> TriangleRow:
    """Row n of a triangle id.

    A385432: proper k-partition counts of K(n,n,n), k = 3..3n.
    A385437: proper k-partition counts of K_{n,n} minus a matching,
    k = 2..2n.
    """
    if seq_id in _LINEAR:
        raise NotATriangle(seq_id)
    if seq_id not in _TRIANGLES:
        raise KeyError(f"unknown sequence id {seq_id!r}")
    if n < 1:
        raise OutOfDomain("rows start at n = 1")
    if seq_id == "A385432":
        spec = MultipartiteSpec((n, n, n))
        k_min, k_max = 3, 3 * n
        entries = [multipartite_stirling(spec, k)
                   for k in range(k_min, k_max + 1)]
    else:
        k_min, k_max = 2, 2 * n
        entries = [km_stirling(n, k) for k in range(k_min, k_max + 1)]
    return TriangleRow(n, k_min, k_max, entries)


def write_bfile(values: Iterable[Tuple[int, int]], sink) -> None:
    """OEIS b-file: one "<index> <value>\\n" line per term, no header."""
    last = None
    for idx, val in values:
        if last is not None and idx <= last:
            raise NonMonotoneIndex(f"index {idx} after {last}")
        last = idx
        sink.write(f"{idx} {val}\n")


def bfile_text(values: Iterable[Tuple[int, int]]) -> str:
    buf = io.StringIO()
    write_bfile(values, buf)
    return buf.getvalue()


def sequence_json(seq_id: str, values: List[Tuple[int, int]]) -> str:
    offset = sequence_offset(seq_id)
    return json.dumps({"id": seq_id, "offset": offset,
                       "terms": [str(v) for _, v in values]})


def triangle_json(seq_id: str, rows: List[TriangleRow]) -> str:
    return json.dumps({
        "id": seq_id,
        "rows": [{"n": r.n, "k_min": r.k_min,
                  "entries": [str(v) for v in r.entries]} for r in rows],
    })


def sequence_csv(values: List[Tuple[int, int]]) -> str:
    return "".join(f"{i},{v}\n" for i, v in values)


def triangle_csv(rows: List[TriangleRow]) -> str:
    out = []
    for r in rows:
        for k, v in zip(range(r.k_min, r.k_max + 1), r.entries):
            out.append(f"{r.n},{k},{v}\n")
    return "".join(out)
