"""Simple undirected graphs and the constructions used by the counting code.

Adjacency is stored as one Python-int bitset per vertex, so "does any
member of block B touch vertex v" is a single AND. Vertices are always
labelled 0..n-1 with a documented canonical order per constructor:

* complete multipartite: blocks listed consecutively, in the given order
* bipartite minus matching: u_0..u_{n-1} then v_0..v_{n-1}
* Mycielskian: originals first (same order), then copies, apex last

Graphs are immutable after construction and safe to share across workers.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


class InvalidSize(ValueError):
    """A constructor was given a size outside its domain."""


class NotATree(ValueError):
    """A parent array does not encode a single rooted tree."""


class ParseError(ValueError):
    """Graph-spec text failed to parse; carries the byte offset."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"parse error at offset {offset}: {message}")
        self.offset = offset
        self.message = message


class Graph:
    """Finite simple undirected graph on vertices 0..n-1."""

    __slots__ = ("order", "_adj", "labels", "name")

    def __init__(self, order: int, edges: Sequence[Tuple[int, int]],
                 labels: Optional[List[Optional[str]]] = None,
                 name: str = ""):
        if order < 0:
            raise InvalidSize("order must be nonnegative")
        adj = [0] * order
        for a, b in edges:
            if not (0 <= a < order and 0 <= b < order):
                raise ValueError(f"edge ({a},{b}) out of range")
            if a == b:
                raise ValueError(f"self-loop at {a}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self.order = order
        self._adj = adj
        self.labels = labels if labels is not None else [None] * order
        self.name = name

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self._adj[a] >> b & 1)

    def neighbors_bitset(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def edges(self):
        for a in range(self.order):
            m = self._adj[a] >> (a + 1) << (a + 1)
            while m:
                b = (m & -m).bit_length() - 1
                yield (a, b)
                m &= m - 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex i renamed perm[i]."""
        edges = [(perm[a], perm[b]) for a, b in self.edges()]
        labels = [None] * self.order
        for i, lab in enumerate(self.labels):
            labels[perm[i]] = lab
        return Graph(self.order, edges, labels, self.name)

    def __repr__(self):
        tag = self.name or "graph"
        return f"<{tag}: {self.order} vertices, {self.edge_count} edges>"


def edgeless(n: int) -> Graph:
    if n < 0:
        raise InvalidSize("edgeless graph needs n >= 0")
    return Graph(n, [], name=f"E({n})")


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSize("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P({n})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSize("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, edges, name=f"C({n})")


def star(n: int) -> Graph:
    """Star on n vertices: vertex 0 is the center, 1..n-1 are leaves."""
    if n < 1:
        raise InvalidSize("star needs n >= 1")
    labels = ["center"] + ["leaf"] * (n - 1)
    return Graph(n, [(0, i) for i in range(1, n)], labels, name=f"St({n})")


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """K(n_1, ..., n_l): independent blocks with all cross-block edges."""
    if len(sizes) < 1 or any(s < 1 for s in sizes):
        raise InvalidSize("each block size must be >= 1")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for a in range(starts[i], starts[i + 1]):
                for b in range(starts[j], starts[j + 1]):
                    edges.append((a, b))
    labels = []
    for i, s in enumerate(sizes):
        labels.extend([f"block{i}"] * s)
    name = "K(" + ",".join(map(str, sizes)) + ")"
    return Graph(n, edges, labels, name=name)


def bipartite_minus_matching(n: int) -> Graph:
    """K_{n,n} minus a perfect matching: u_i ~ v_j iff i != j."""
    if n < 1:
        raise InvalidSize("needs n >= 1")
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    labels = ["u"] * n + ["v"] * n
    return Graph(2 * n, edges, labels, name=f"KM({n})")


def mycielskian(g: Graph) -> Graph:
    """Mycielskian of g: originals, copies inheriting neighborhoods, apex.

    For input (n vertices, m edges) the output has 2n+1 vertices and
    3m+n edges; chromatic number rises by one, triangle-freeness is kept.
    """
    n = g.order
    apex = 2 * n
    edges = list(g.edges())
    for v in range(n):
        m = g.neighbors_bitset(v)
        while m:
            w = (m & -m).bit_length() - 1
            edges.append((n + v, w))  # copy of v keeps v's neighbors
            m &= m - 1
        edges.append((apex, n + v))
    labels = list(g.labels) + ["copy"] * n + ["apex"]
    return Graph(2 * n + 1, edges, labels, name=f"Myc({g.name or '?'})")


def complement(g: Graph) -> Graph:
    n = g.order
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)
             if not g.has_edge(a, b)]
    return Graph(n, edges, list(g.labels), name=f"Comp({g.name or '?'})")


def tree_from_parents(parents: Sequence[int]) -> Graph:
    """Tree from a parent array; entry -1 marks the single root.

    parents[i] is the parent of vertex i. Rejects multiple roots,
    out-of-range parents, and cycles.
    """
    n = len(parents)
    if n < 1:
        raise NotATree("empty parent list")
    roots = [i for i, p in enumerate(parents) if p == -1]
    if len(roots) != 1:
        raise NotATree(f"expected exactly one root, found {len(roots)}")
    edges = []
    for i, p in enumerate(parents):
        if p == -1:
            continue
        if not 0 <= p < n:
            raise NotATree(f"parent {p} of vertex {i} out of range")
        edges.append((i, p))
    # Walking to the root must terminate for every vertex.
    for i in range(n):
        seen = set()
        v = i
        while parents[v] != -1:
            if v in seen:
                raise NotATree(f"cycle through vertex {v}")
            seen.add(v)
            v = parents[v]
    name = "Tree(" + ",".join(map(str, parents)) + ")"
    return Graph(n, edges, name=name)


# ---------------------------------------------------------------------------
# Graph-spec grammar
#
#   spec := "E(" INT ")" | "P(" INT ")" | "C(" INT ")" | "St(" INT ")"
#         | "K(" INT ("," INT)* ")" | "KM(" INT ")"
#         | "Myc(" spec ")" | "Comp(" spec ")" | "Tree(" INT ("," INT)* ")"
#
# Tree takes a parent list with -1 as the root sentinel. No whitespace
# is significant (none is allowed).
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Edgeless:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class Multipartite:
    sizes: Tuple[int, ...]


@dataclass(frozen=True)
class BipartiteMinusMatching:
    n: int


@dataclass(frozen=True)
class Mycielskian:
    inner: "GraphSpec"


@dataclass(frozen=True)
class Complement:
    inner: "GraphSpec"


@dataclass(frozen=True)
class Tree:
    parents: Tuple[int, ...]


GraphSpec = object  # union of the dataclasses above


class _Parser:
    # Longest keywords first so "St" wins over a hypothetical "S".
    _HEADS = ("Tree", "Comp", "Myc", "St", "KM", "K", "E", "P", "C")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message):
        raise ParseError(self.pos, message)

    def expect(self, token):
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def integer(self, signed=False):
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            self.fail("expected integer")
        return int(self.text[start:self.pos])

    def int_list(self, signed=False):
        vals = [self.integer(signed)]
        while self.pos < len(self.text) and self.text[self.pos] == ",":
            self.pos += 1
            vals.append(self.integer(signed))
        return vals

    def spec(self):
        for head in self._HEADS:
            if self.text.startswith(head + "(", self.pos):
                self.pos += len(head) + 1
                node = self._body(head)
                self.expect(")")
                return node
        self.fail("expected one of E( P( C( St( K( KM( Myc( Comp( Tree(")

    def _body(self, head):
        if head == "E":
            return Edgeless(self.integer())
        if head == "P":
            return Path(self.integer())
        if head == "C":
            return Cycle(self.integer())
        if head == "St":
            return Star(self.integer())
        if head == "K":
            return Multipartite(tuple(self.int_list()))
        if head == "KM":
            return BipartiteMinusMatching(self.integer())
        if head == "Myc":
            return Mycielskian(self.spec())
        if head == "Comp":
            return Complement(self.spec())
        if head == "Tree":
            return Tree(tuple(self.int_list(signed=True)))
        raise AssertionError(head)


def parse_graph_spec(text: str):
    """Parse a graph-spec string into its AST; errors carry byte offsets."""
    p = _Parser(text)
    node = p.spec()
    if p.pos != len(text):
        p.fail("trailing input")
    return node


def render_graph_spec(spec) -> str:
    """Canonical text for a GraphSpec; inverse of parse_graph_spec."""
    if isinstance(spec, Edgeless):
        return f"E({spec.n})"
    if isinstance(spec, Path):
        return f"P({spec.n})"
    if isinstance(spec, Cycle):
        return f"C({spec.n})"
    if isinstance(spec, Star):
        return f"St({spec.n})"
    if isinstance(spec, Multipartite):
        return "K(" + ",".join(map(str, spec.sizes)) + ")"
    if isinstance(spec, BipartiteMinusMatching):
        return f"KM({spec.n})"
    if isinstance(spec, Mycielskian):
        return f"Myc({render_graph_spec(spec.inner)})"
    if isinstance(spec, Complement):
        return f"Comp({render_graph_spec(spec.inner)})"
    if isinstance(spec, Tree):
        return "Tree(" + ",".join(map(str, spec.parents)) + ")"
    raise TypeError(f"not a GraphSpec: {spec!r}")


def realize(spec) -> Graph:
    """Build the concrete graph a GraphSpec describes."""
    if isinstance(spec, Edgeless):
        return edgeless(spec.n)
    if isinstance(spec, Path):
        return path(spec.n)
    if isinstance(spec, Cycle):
        return cycle(spec.n)
    if isinstance(spec, Star):
        return star(spec.n)
    if isinstance(spec, Multipartite):
        return complete_multipartite(spec.sizes)
    if isinstance(spec, BipartiteMinusMatching):
        return bipartite_minus_matching(spec.n)
    if isinstance(spec, Mycielskian):
        return mycielskian(realize(spec.inner))
    if isinstance(spec, Complement):
        return complement(realize(spec.inner))
    if isinstance(spec, Tree):
        return tree_from_parents(list(spec.parents))
    raise TypeError(f"not a GraphSpec: {spec!r}")
