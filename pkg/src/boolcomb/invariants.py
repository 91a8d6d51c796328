"""Exact computation of the graph parameters the theorems quantify over.

All solvers are exact and deterministic; each has a hard size cap chosen
for desk-scale inputs and raises SizeLimitExceeded beyond it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .errors import BudgetExceeded, MismatchedVertexCount, SizeLimitExceeded
from .graphs import Graph, Partition, _bits, complement, induced_subgraph

CLIQUE_LIMIT = 64
CHROMATIC_LIMIT = 32
BICLIQUE_LIMIT = 16
CHAIN_LIMIT = 12
VC_LIMIT = 14
PERFECT_LIMIT = 14


@dataclass(frozen=True)
class ParamReport:
    """Flat bundle of every parameter, for the `params` CLI subcommand."""

    omega: int
    alpha: int
    chi: int
    max_degree: int
    degeneracy: int
    biclique: int
    chain: int
    strong_chain: int
    twin_number: int
    perfect: bool

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)


# -- clique / independence ---------------------------------------------------


def maximum_clique(g: Graph) -> list[int]:
    """A maximum clique, by branch and bound on bit-packed candidate sets.

    Greedy-coloring upper bounds prune the search (Tomita-style).
    """
    if g.n > CLIQUE_LIMIT:
        raise SizeLimitExceeded(f"clique solver capped at n = {CLIQUE_LIMIT}")
    if g.n == 0:
        return []
    rows = g.rows
    best: list[int] = []

    def color_sort(cand: int) -> list[tuple[int, int]]:
        # greedy coloring of the candidate subgraph; returns (vertex, color)
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                rest ^= low
                avail = (avail ^ low) & ~rows[v]
        return order

    def expand(current: list[int], cand: int):
        nonlocal best
        order = color_sort(cand)
        for v, color in reversed(order):
            if len(current) + color <= len(best):
                return
            current.append(v)
            nxt = cand & rows[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def maximum_independent_set(g: Graph) -> list[int]:
    return maximum_clique(complement(g))


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


# -- degeneracy / degree -------------------------------------------------------


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def degeneracy(g: Graph) -> int:
    """Repeated minimum-degree peeling."""
    alive = (1 << g.n) - 1
    degs = [g.degree(v) for v in range(g.n)]
    best = 0
    for _ in range(g.n):
        v = min((w for w in range(g.n) if (alive >> w) & 1), key=lambda w: degs[w])
        best = max(best, degs[v])
        alive &= ~(1 << v)
        for w in _bits(g.rows[v] & alive):
            degs[w] -= 1
    return best


# -- chromatic number -----------------------------------------------------------


def _greedy_coloring_bound(g: Graph) -> int:
    # DSATUR greedy; upper bound used to seed the exact search
    n = g.n
    colors = [0] * n  # 0 = uncolored
    sat: list[set[int]] = [set() for _ in range(n)]
    used = 0
    for _ in range(n):
        v = max(
            (w for w in range(n) if not colors[w]),
            key=lambda w: (len(sat[w]), g.degree(w), -w),
        )
        c = 1
        while c in sat[v]:
            c += 1
        colors[v] = c
        used = max(used, c)
        for w in g.neighbors(v):
            sat[w].add(c)
    return used


def chromatic_number(g: Graph, max_nodes: Optional[int] = None) -> int:
    """Exact chromatic number by DSATUR-style branch and bound.

    Ties in the saturation order break toward the lowest vertex index,
    so the search is deterministic.  `max_nodes` caps the number of
    search-tree nodes; the solver raises BudgetExceeded past the cap.
    """
    n = g.n
    if n > CHROMATIC_LIMIT:
        raise SizeLimitExceeded(f"chromatic solver capped at n = {CHROMATIC_LIMIT}")
    if n == 0:
        return 0
    lower = clique_number(g)
    upper = _greedy_coloring_bound(g)
    if lower == upper:
        return lower

    rows = g.rows
    best = upper
    colors = [0] * n
    nodes = 0

    clique = maximum_clique(g)
    for i, v in enumerate(clique):
        colors[v] = i + 1

    def admissible(v: int) -> set[int]:
        return {colors[w] for w in _bits(rows[v]) if colors[w]}

    def pick() -> int:
        # highest saturation, then highest degree, then lowest index
        cand = -1
        key = (-1, -1, 0)
        for v in range(n):
            if colors[v]:
                continue
            k = (len(admissible(v)), rows[v].bit_count(), -v)
            if k > key:
                key = k
                cand = v
        return cand

    def solve(colored: int, used: int):
        nonlocal best, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceeded(f"chromatic search exceeded {max_nodes} nodes")
        if used >= best:
            return
        if colored == n:
            best = used
            return
        v = pick()
        taken = admissible(v)
        for c in range(1, min(used + 1, best - 1) + 1):
            if c in taken:
                continue
            colors[v] = c
            solve(colored + 1, max(used, c))
            colors[v] = 0

    solve(len(clique), len(clique))
    return best


# -- biclique number --------------------------------------------------------------


def biclique_number(g: Graph) -> int:
    """Largest k with disjoint k-sets A, B where A is complete to B.

    Edges inside A and inside B are unconstrained.  Subset DP over the
    common neighborhoods of all 2^n vertex subsets.
    """
    if g.n > BICLIQUE_LIMIT:
        raise SizeLimitExceeded(f"biclique solver capped at n = {BICLIQUE_LIMIT}")
    n = g.n
    if n == 0:
        return 0
    common = [0] * (1 << n)
    common[0] = (1 << n) - 1
    best = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        common[mask] = common[mask ^ low] & g.rows[v]
        size_b = (common[mask] & ~mask).bit_count()
        best = max(best, min(mask.bit_count(), size_b))
    return best


# -- chain numbers -----------------------------------------------------------------


def _chain_search(g: Graph, strong: bool) -> int:
    """Longest half-graph embedding (a_i ~ b_j iff i <= j; strong drops the diagonal)."""
    n = g.n
    if n > CHAIN_LIMIT:
        raise SizeLimitExceeded(f"chain solver capped at n = {CHAIN_LIMIT}")
    rows = g.rows
    best = 0
    a_seq: list[int] = []
    b_seq: list[int] = []

    def extend(used: int):
        nonlocal best
        best = max(best, len(a_seq))
        if len(a_seq) + (n - used.bit_count()) // 2 <= best:
            return
        for a in range(n):
            if (used >> a) & 1:
                continue
            # a must be adjacent to no earlier b (i > j side)
            ok = all(not (rows[a] >> b) & 1 for b in b_seq)
            if not ok:
                continue
            for b in range(n):
                if b == a or (used >> b) & 1:
                    continue
                # every earlier a_i must see the new b (i < j side)
                if any(not (rows[x] >> b) & 1 for x in a_seq):
                    continue
                if not strong and not (rows[a] >> b) & 1:
                    continue
                a_seq.append(a)
                b_seq.append(b)
                extend(used | (1 << a) | (1 << b))
                a_seq.pop()
                b_seq.pop()

    extend(0)
    return best


def chain_number(g: Graph) -> int:
    """Maximum order of an embedded half-graph; 0 when no pair exists."""
    return _chain_search(g, strong=False)


def strong_chain_number(g: Graph) -> int:
    return _chain_search(g, strong=True)


# -- twins --------------------------------------------------------------------------


def twin_classes(g: Graph) -> Partition:
    """Partition into maximal classes of pairwise twins.

    Two vertices are twins when N(a) \\ {b} = N(b) \\ {a}.  Non-adjacent
    twins share a row; adjacent twins share a closed row.  Grouping by
    both keys and merging gives the classes in near-linear time.
    """
    n = g.n
    if n == 0:
        return Partition(0, ())
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v in range(n):
        open_key = g.rows[v]
        closed_key = g.rows[v] | (1 << v)
        if open_key in open_groups:
            union(open_groups[open_key], v)
        else:
            open_groups[open_key] = v
        if closed_key in closed_groups:
            union(closed_groups[closed_key], v)
        else:
            closed_groups[closed_key] = v

    blocks: dict[int, set[int]] = {}
    for v in range(n):
        blocks.setdefault(find(v), set()).add(v)
    return Partition.from_blocks(n, blocks.values())


def twin_number(g: Graph) -> int:
    return len(twin_classes(g).blocks)


# -- neighborhood set system ----------------------------------------------------------


def neighborhood_complexity(g: Graph, m: int) -> int:
    """Shatter function of the neighborhood set system at argument m."""
    from itertools import combinations

    if m > g.n:
        raise SizeLimitExceeded(f"m = {m} exceeds vertex count {g.n}")
    best = 0
    for subset in combinations(range(g.n), m):
        mask = 0
        for v in subset:
            mask |= 1 << v
        traces = {g.rows[v] & mask for v in range(g.n)}
        best = max(best, len(traces))
    return best


def vc_dimension(g: Graph) -> int:
    """VC dimension of the neighborhood set system (exhaustive shattering test)."""
    from itertools import combinations

    if g.n > VC_LIMIT:
        raise SizeLimitExceeded(f"VC solver capped at n = {VC_LIMIT}")
    n = g.n
    upper = 0
    while (1 << (upper + 1)) <= n:
        upper += 1
    for d in range(min(upper, n), 0, -1):
        for subset in combinations(range(n), d):
            mask = 0
            for v in subset:
                mask |= 1 << v
            traces = {g.rows[v] & mask for v in range(n)}
            if len(traces) == 1 << d:
                return d
    return 0


# -- perfectness ---------------------------------------------------------------------


def find_odd_hole(g: Graph) -> Optional[list[int]]:
    """An induced odd cycle of length >= 5, or None.

    DFS over induced paths rooted at the cycle's minimum vertex; a
    candidate adjacent to the root closes a cycle, any other candidate
    extends the path.
    """
    n = g.n
    rows = g.rows
    full = (1 << n) - 1
    for s in range(n - 4):
        above = full >> (s + 1) << (s + 1)
        stack: list[tuple[list[int], int]] = []
        for a in _bits(rows[s] & above):
            stack.append(([s, a], above & ~(1 << a)))
        while stack:
            path, allowed = stack.pop()
            last = path[-1]
            cand = rows[last] & allowed
            closers = cand & rows[s]
            if len(path) + 1 >= 5 and (len(path) + 1) % 2 == 1:
                if closers:
                    v = (closers & -closers).bit_length() - 1
                    return path + [v]
            for v in _bits(cand & ~rows[s]):
                stack.append((path + [v], allowed & ~rows[last] & ~(1 << v)))
    return None


def find_odd_hole_or_antihole(g: Graph) -> Optional[tuple[str, list[int]]]:
    if g.n > PERFECT_LIMIT:
        raise SizeLimitExceeded(f"perfectness check capped at n = {PERFECT_LIMIT}")
    hole = find_odd_hole(g)
    if hole is not None:
        return ("hole", hole)
    antihole = find_odd_hole(complement(g))
    if antihole is not None:
        return ("antihole", antihole)
    return None


def is_perfect(g: Graph) -> bool:
    """Perfect iff no odd hole and no odd antihole."""
    return find_odd_hole_or_antihole(g) is None


def is_perfect_by_coloring(g: Graph) -> bool:
    """Slow cross-validation oracle: chi(H) = omega(H) on every induced subgraph.

    Only sensible for n <= 9; used to validate the structural check.
    """
    from itertools import combinations

    if g.n > 9:
        raise SizeLimitExceeded("coloring-based perfectness oracle capped at n = 9")
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            h = induced_subgraph(g, subset)
            if chromatic_number(h) != clique_number(h):
                return False
    return True


# -- Erdos-Hajnal extraction ------------------------------------------------------------


def common_homogeneous_set(graphs: Sequence[Graph]) -> list[int]:
    """A vertex set on which every input graph is complete or empty.

    Nested extraction: repeatedly restrict to a maximum homogeneous set
    of the next graph, taking the larger of max clique / max
    independent set (ties to clique).
    """
    if not graphs:
        raise MismatchedVertexCount("need at least one graph")
    n = graphs[0].n
    for g in graphs[1:]:
        if g.n != n:
            raise MismatchedVertexCount("graphs must share a vertex set")
    current = list(range(n))
    for g in graphs:
        sub = induced_subgraph(g, current)
        cl = maximum_clique(sub)
        ind = maximum_independent_set(sub)
        chosen = cl if len(cl) >= len(ind) else ind
        current = [current[i] for i in chosen]
    return sorted(current)


def is_homogeneous(g: Graph, vertices: Sequence[int]) -> bool:
    sub = induced_subgraph(g, vertices)
    k = sub.n
    return sub.edge_count in (0, k * (k - 1) // 2)


# -- the full report ----------------------------------------------------------------------


def compute_params(g: Graph) -> ParamReport:
    return ParamReport(
        omega=clique_number(g),
        alpha=independence_number(g),
        chi=chromatic_number(g),
        max_degree=max_degree(g),
        degeneracy=degeneracy(g),
        biclique=biclique_number(g),
        chain=chain_number(g),
        strong_chain=strong_chain_number(g),
        twin_number=twin_number(g),
        perfect=is_perfect(g),
    )
