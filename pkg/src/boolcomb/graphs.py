"""Immutable labeled graphs with boolean combination operators.

Vertices are the dense integers 0..n-1.  Adjacency is stored as one
bit-packed row per vertex (a Python int), so union/intersection/XOR of
graphs are word-parallel row operations.  Graphs are values: every
operation returns a fresh graph, and instances are hashable, which the
verification harness relies on for memoization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .boolfn import BooleanFunction
from .errors import (
    ArityMismatch,
    DuplicateVertex,
    EmptyInput,
    MismatchedVertexCount,
    OutOfRangeVertex,
    SizeLimitExceeded,
)

MAX_VERTICES = 1 << 16
ISO_DEFAULT_LIMIT = 12


@dataclass(frozen=True)
class Graph:
    """A simple graph: symmetric adjacency, empty diagonal."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeLimitExceeded(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise OutOfRangeVertex(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.n):
            row = self.rows[u]
            while row:
                v = (row & -row).bit_length() - 1
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                row &= row - 1

    # -- constructors --------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(0 for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << u) for u in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_multipartite(cls, sizes: Sequence[int]) -> "Graph":
        n = sum(sizes)
        rows = [0] * n
        start = 0
        full = (1 << n) - 1
        for size in sizes:
            part = ((1 << size) - 1) << start
            for u in range(start, start + size):
                rows[u] = full & ~part
            start += size
        return cls(n, tuple(rows))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Inverse of :meth:`edge_mask`; pairs (u, v), u < v, in lexicographic order."""
        rows = [0] * n
        idx = 0
        for u in range(n):
            for v in range(u + 1, n):
                if (mask >> idx) & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                idx += 1
        return cls(n, tuple(rows))

    # -- queries --------------------------------------------------------------

    def adj(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise OutOfRangeVertex(f"pair ({u}, {v}) outside 0..{self.n - 1}")
        return bool((self.rows[u] >> v) & 1)

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                yield (u, v)
                row &= row - 1

    def edge_mask(self) -> int:
        """Pack the upper triangle (u < v, lexicographic) into an int."""
        mask = 0
        idx = 0
        for u in range(self.n):
            row = self.rows[u]
            for v in range(u + 1, self.n):
                if (row >> v) & 1:
                    mask |= 1 << idx
                idx += 1
        return mask

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(_bits(comp))
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the permutation v -> perm[v]."""
        rows = [0] * self.n
        for u in range(self.n):
            r = 0
            for v in _bits(self.rows[u]):
                r |= 1 << perm[v]
            rows[perm[u]] = r
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class Partition:
    """A partition of {0..n-1}; blocks are sorted by minimum element."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen = 0
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            for v in block:
                if not 0 <= v < self.n:
                    raise OutOfRangeVertex(f"vertex {v} outside 0..{self.n - 1}")
                if (seen >> v) & 1:
                    raise DuplicateVertex(f"vertex {v} in two blocks")
                seen |= 1 << v
        if seen != (1 << self.n) - 1:
            raise ValueError("blocks do not cover the ground set")
        mins = [min(b) for b in self.blocks]
        if mins != sorted(mins):
            raise ValueError("blocks not sorted by minimum element")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        normalized = sorted((frozenset(b) for b in blocks), key=lambda b: min(b) if b else -1)
        return cls(n, tuple(normalized))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, tuple(frozenset([v]) for v in range(n)))

    def block_of(self, v: int) -> frozenset[int]:
        for block in self.blocks:
            if v in block:
                return block
        raise OutOfRangeVertex(f"vertex {v} outside 0..{self.n - 1}")

    def equivalence_graph(self) -> Graph:
        """The graph whose maximal cliques are this partition's blocks."""
        rows = [0] * self.n
        for block in self.blocks:
            mask = 0
            for v in block:
                mask |= 1 << v
            for v in block:
                rows[v] = mask ^ (1 << v)
        return Graph(self.n, tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- boolean combination operators ---------------------------------------------


def _require_same_n(graphs: Sequence[Graph]) -> int:
    if not graphs:
        raise EmptyInput("need at least one graph")
    n = graphs[0].n
    for g in graphs[1:]:
        if g.n != n:
            raise MismatchedVertexCount(f"vertex counts differ: {n} vs {g.n}")
    return n


def combine(op: str, graphs: Sequence[Graph]) -> Graph:
    """Entrywise OR / AND / parity of the inputs' adjacencies."""
    n = _require_same_n(graphs)
    if op == "union":
        rows = [0] * n
        for g in graphs:
            for u in range(n):
                rows[u] |= g.rows[u]
    elif op == "intersect":
        rows = list(graphs[0].rows)
        for g in graphs[1:]:
            for u in range(n):
                rows[u] &= g.rows[u]
    elif op == "xor":
        rows = [0] * n
        for g in graphs:
            for u in range(n):
                rows[u] ^= g.rows[u]
    else:
        raise ValueError(f"unknown operator {op!r}")
    return Graph(n, tuple(rows))


def apply_boolean(f: BooleanFunction, graphs: Sequence[Graph], n: Optional[int] = None) -> Graph:
    """The graph whose pairwise adjacency is f of the inputs' adjacencies.

    For arity 0 there are no input graphs, so the vertex count must be
    passed explicitly.
    """
    if len(graphs) != f.arity:
        raise ArityMismatch(f"function arity {f.arity} but {len(graphs)} graphs")
    if f.arity == 0:
        if n is None:
            raise EmptyInput("arity-0 function needs an explicit vertex count")
        return Graph.complete(n) if f.value_at(0) else Graph.empty(n)
    m = _require_same_n(graphs)
    if n is not None and n != m:
        raise MismatchedVertexCount(f"explicit n={n} but graphs have {m} vertices")
    full = (1 << m) - 1
    rows = [0] * m
    if (1 << f.arity) <= 2 * m:
        # row-parallel evaluation: OR of minterm slabs, word ops per row
        true_points = [i for i in range(1 << f.arity) if f.value_at(i)]
        for u in range(m):
            acc = 0
            for point in true_points:
                term = full
                for j, g in enumerate(graphs):
                    r = g.rows[u]
                    term &= r if (point >> j) & 1 else full ^ r
                    if not term:
                        break
                acc |= term
            rows[u] = acc & ~(1 << u)
    else:
        # high arity: evaluate pair by pair instead of minterm by minterm
        for u in range(m):
            for v in range(u + 1, m):
                index = 0
                for j, g in enumerate(graphs):
                    if (g.rows[u] >> v) & 1:
                        index |= 1 << j
                if f.value_at(index):
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
    return Graph(m, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << u) for u, row in enumerate(g.rows)))


def subgraph_complement(g: Graph, subset: Iterable[int]) -> Graph:
    """Flip all edges inside `subset`; equals XOR with the clique on it."""
    mask = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise OutOfRangeVertex(f"vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    rows = list(g.rows)
    for v in _bits(mask):
        rows[v] ^= mask ^ (1 << v)
    return Graph(g.n, tuple(rows))


def partition_complement(g: Graph, p: Partition) -> Graph:
    """Flip the edges inside every block; XOR with the block equivalence graph."""
    if p.n != g.n:
        raise MismatchedVertexCount(f"partition over {p.n} elements, graph has {g.n}")
    return combine("xor", [g, p.equivalence_graph()])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    seen = set()
    for v in vertices:
        if not 0 <= v < g.n:
            raise OutOfRangeVertex(f"vertex {v} outside 0..{g.n - 1}")
        if v in seen:
            raise DuplicateVertex(f"vertex {v} repeated")
        seen.add(v)
    k = len(vertices)
    rows = [0] * k
    for i, u in enumerate(vertices):
        row = g.rows[u]
        for j, v in enumerate(vertices):
            if (row >> v) & 1:
                rows[i] |= 1 << j
    return Graph(k, tuple(rows))


# -- isomorphism -----------------------------------------------------------------


def _refine_colors(g: Graph) -> list[int]:
    """Iterated degree refinement (1-WL); returns stable vertex colors."""
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new = [palette[sig] for sig in signatures]
        if new == colors:
            break
        colors = new
    return colors


def is_isomorphic(g: Graph, h: Graph, limit: int = ISO_DEFAULT_LIMIT) -> bool:
    """Exact isomorphism test for small graphs (default cap n = 12).

    Quick invariant rejections (order, size, degrees, refined colors)
    followed by a refinement-guided backtracking search for an explicit
    adjacency-preserving bijection.
    """
    if g.n > limit or h.n > limit:
        raise SizeLimitExceeded(f"isomorphism capped at n = {limit}")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    gc = _refine_colors(g)
    hc = _refine_colors(h)
    if sorted(gc) != sorted(hc):
        return False

    by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        by_color.setdefault(hc[v], []).append(v)
    order = sorted(range(g.n), key=lambda v: (len(by_color[gc[v]]), gc[v], v))

    mapping = [-1] * g.n
    used = [False] * h.n

    def backtrack(i: int) -> bool:
        if i == g.n:
            return True
        u = order[i]
        for w in by_color[gc[u]]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                p = order[j]
                if g.adj(u, p) != h.adj(w, mapping[p]):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                used[w] = False
                mapping[u] = -1
        return False

    return backtrack(0)
