"""Constructive decompositions with recombination certificates.

Every operation returns a Decomposition whose boolean function applied
to its parts reproduces the target exactly; a failed certificate is a
hard error, never a silent flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .boolfn import MAX_ARITY, BooleanFunction, anf
from .classes import (
    CLASS_C,
    CLASS_L,
    COMPLETE,
    EMPTY,
    EQUIVALENCE,
    MATCHING,
    ClassTag,
    is_member,
)
from .errors import (
    BudgetExceeded,
    CertificationError,
    NoBigTwinClass,
    NotEquivalenceGraph,
    NotIntersectionClosed,
)
from .graphs import Graph, Partition, apply_boolean, combine, complement
from .invariants import max_degree, twin_classes

DEFAULT_BUDGET = MAX_ARITY


@dataclass(frozen=True)
class Decomposition:
    """A certified witness: apply_boolean(f, parts) equals the target."""

    target: Graph
    f: BooleanFunction
    parts: tuple[tuple[Graph, ClassTag], ...]
    certified: bool

    def part_graphs(self) -> list[Graph]:
        return [g for g, _ in self.parts]

    def to_json_dict(self) -> dict:
        from .gformats import graph_to_graph6

        return {
            "f": self.f.to_text(),
            "alpha": 0,
            "parts": [[graph_to_graph6(g), tag.to_text()] for g, tag in self.parts],
            "certified": self.certified,
        }


def _certify(target: Graph, f: BooleanFunction, parts: Sequence[tuple[Graph, ClassTag]]) -> Decomposition:
    rebuilt = apply_boolean(f, [g for g, _ in parts], n=target.n)
    if rebuilt.rows != target.rows:
        raise CertificationError("decomposition does not recombine to its target")
    for g, tag in parts:
        if not is_member(tag, g):
            raise CertificationError(f"part is not a member of class {tag.to_text()!r}")
    return Decomposition(target, f, tuple(parts), certified=True)


# -- edge coloring -----------------------------------------------------------------


def _greedy_edge_coloring(g: Graph) -> dict[tuple[int, int], int]:
    """First-fit proper edge coloring; at most 2*Delta - 1 colors."""
    used = [0] * g.n
    colors: dict[tuple[int, int], int] = {}
    for u, v in sorted(g.edges()):
        taken = used[u] | used[v]
        c = 0
        while (taken >> c) & 1:
            c += 1
        colors[(u, v)] = c
        used[u] |= 1 << c
        used[v] |= 1 << c
    return colors


def _misra_gries_edge_coloring(g: Graph) -> dict[tuple[int, int], int]:
    """Proper edge coloring with at most Delta + 1 colors (fan recoloring)."""
    n = g.n
    delta = max_degree(g)
    num_colors = delta + 1
    colors: dict[tuple[int, int], int] = {}
    used = [0] * n

    def key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    def color_of(u: int, v: int) -> Optional[int]:
        return colors.get(key(u, v))

    def is_free(v: int, c: int) -> bool:
        return not (used[v] >> c) & 1

    def lowest_free(v: int) -> int:
        c = 0
        while not is_free(v, c):
            c += 1
        if c >= num_colors:
            raise AssertionError("ran out of colors")
        return c

    def assign(u: int, v: int, c: Optional[int]):
        k = key(u, v)
        old = colors.pop(k, None)
        if old is not None:
            used[u] &= ~(1 << old)
            used[v] &= ~(1 << old)
        if c is not None:
            colors[k] = c
            used[u] |= 1 << c
            used[v] |= 1 << c

    def invert_cd_path(start: int, c: int, d: int):
        # maximal path from `start` alternating d, c, d, ...; swap its colors
        path = []
        cur = start
        want = d
        while True:
            step = None
            for w in g.neighbors(cur):
                if color_of(cur, w) == want:
                    step = w
                    break
            if step is None:
                break
            path.append((cur, step, want))
            cur = step
            want = c if want == d else d
        for x, y, _ in path:
            assign(x, y, None)
        for x, y, col in path:
            assign(x, y, c if col == d else d)

    def prefix_is_fan(u: int, fan: list[int], j: int) -> bool:
        for i in range(1, j + 1):
            ci = color_of(u, fan[i])
            if ci is None or not is_free(fan[i - 1], ci):
                return False
        return True

    for u, v in sorted(g.edges()):
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        while True:
            grown = False
            for w in g.neighbors(u):
                if w in in_fan:
                    continue
                cw = color_of(u, w)
                if cw is not None and is_free(fan[-1], cw):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
            if not grown:
                break
        c = lowest_free(u)
        d = lowest_free(fan[-1])
        if not is_free(u, d):
            invert_cd_path(u, c, d)
        w_index = None
        for j in range(len(fan)):
            if is_free(fan[j], d) and prefix_is_fan(u, fan, j):
                w_index = j
                break
        if w_index is None:
            raise AssertionError("fan recoloring failed to expose a free color")
        shifted = [color_of(u, fan[i + 1]) for i in range(w_index)]
        for i in range(1, w_index + 1):
            assign(u, fan[i], None)
        for i in range(w_index):
            assign(u, fan[i], shifted[i])
        assign(u, fan[w_index], d)

    return colors


def edge_coloring_matchings(g: Graph, method: str = "misra_gries") -> list[Graph]:
    """Partition the edge set into matchings; Delta + 1 of them at most
    for the default method, 2*Delta - 1 for the greedy debug fallback.

    A final pass merges color classes whose covered vertex sets are
    disjoint, which often recovers the optimal count on small graphs
    (2 for even cycles, 3 for K_4) and never hurts the bound.
    """
    if method == "misra_gries":
        colors = _misra_gries_edge_coloring(g)
    elif method == "greedy":
        colors = _greedy_edge_coloring(g)
    else:
        raise ValueError(f"unknown edge coloring method {method!r}")
    by_color: dict[int, list[tuple[int, int]]] = {}
    for edge, c in colors.items():
        by_color.setdefault(c, []).append(edge)
    merged_edges: list[list[tuple[int, int]]] = []
    merged_masks: list[int] = []
    for c in sorted(by_color):
        edges = by_color[c]
        mask = 0
        for u, v in edges:
            mask |= (1 << u) | (1 << v)
        for i, m in enumerate(merged_masks):
            if m & mask == 0:
                merged_edges[i].extend(edges)
                merged_masks[i] |= mask
                break
        else:
            merged_edges.append(list(edges))
            merged_masks.append(mask)
    return [Graph.from_edges(g.n, edges) for edges in merged_edges]


def vizing_matchings(g: Graph, method: str = "misra_gries") -> Decomposition:
    """Express g (or its complement) as a union of at most Delta + 1 matchings.

    The complement branch triggers when the complement is strictly
    sparser in maximum degree; its boolean function negates the OR.
    """
    co = complement(g)
    if max_degree(g) <= max_degree(co):
        base, negate = g, False
    else:
        base, negate = co, True
    matchings = edge_coloring_matchings(base, method=method)
    if not matchings:
        matchings = [Graph.empty(g.n)]
    s = len(matchings)
    f = BooleanFunction.or_(s)
    if negate:
        f = f.negate()
    parts = [(m, MATCHING) for m in matchings]
    return _certify(g, f, parts)


# -- twin-class decomposition ----------------------------------------------------------


def twin_decomposition(g: Graph, budget: int = DEFAULT_BUDGET) -> Decomposition:
    """Rebuild g from clique-plus-isolated-vertices graphs over its twin classes.

    One union part per complete pair of classes, one XOR part per class
    whose internal adjacency still disagrees; at most C(t,2) + t parts
    for twin number t.
    """
    tc = twin_classes(g)
    t = len(tc.blocks)
    if comb(t, 2) + t > budget:
        raise BudgetExceeded(f"twin number {t} needs up to {comb(t, 2) + t} parts (> budget {budget})")
    n = g.n
    blocks = [sorted(b) for b in tc.blocks]
    masks = []
    for b in blocks:
        m = 0
        for v in b:
            m |= 1 << v
        masks.append(m)

    union_parts: list[Graph] = []
    for i in range(t):
        for j in range(i + 1, t):
            a, b = blocks[i][0], blocks[j][0]
            if g.adj(a, b):
                rows = [0] * n
                m = masks[i] | masks[j]
                for v in blocks[i] + blocks[j]:
                    rows[v] = m ^ (1 << v)
                union_parts.append(Graph(n, tuple(rows)))

    base = combine("union", union_parts) if union_parts else Graph.empty(n)
    xor_parts: list[Graph] = []
    for i in range(t):
        b = blocks[i]
        if len(b) < 2:
            continue
        a0, a1 = b[0], b[1]
        if g.adj(a0, a1) != base.adj(a0, a1):
            rows = [0] * n
            for v in b:
                rows[v] = masks[i] ^ (1 << v)
            xor_parts.append(Graph(n, tuple(rows)))

    ju = len(union_parts)
    jx = len(xor_parts)
    arity = ju + jx
    union_mask = (1 << ju) - 1
    values = []
    for i in range(1 << arity):
        or_bit = 1 if i & union_mask else 0
        parity = ((i >> ju).bit_count()) & 1
        values.append(or_bit ^ parity)
    f = BooleanFunction.from_values(arity, values)
    parts = [(p, CLASS_C) for p in union_parts + xor_parts]
    return _certify(g, f, parts)


# -- clique + isolated-vertex decomposition ------------------------------------------------


def _clique_minus(n: int, isolated: Sequence[int]) -> Graph:
    """Clique on all vertices except `isolated`, which stay isolated."""
    iso_mask = 0
    for v in isolated:
        iso_mask |= 1 << v
    full = (1 << n) - 1
    clique_mask = full ^ iso_mask
    rows = [0] * n
    for v in range(n):
        if not (iso_mask >> v) & 1:
            rows[v] = clique_mask ^ (1 << v)
    return Graph(n, tuple(rows))


def class_L_decomposition(g: Graph, budget: int = DEFAULT_BUDGET) -> Decomposition:
    """Rebuild g from at most p graphs 'clique plus one isolated vertex',
    where p counts the vertices outside the largest twin class."""
    tc = twin_classes(g)
    n = g.n
    big = max(tc.blocks, key=len)
    outside = sorted(set(range(n)) - set(big))
    p = len(outside)
    if p > budget:
        raise NoBigTwinClass(f"largest twin class leaves {p} vertices (> budget {budget})")

    q = sorted(big)
    q_is_clique = len(q) >= 2 and g.adj(q[0], q[1]) or len(q) < 2
    # vertices outside Q are complete or anticomplete to Q (twin class)
    rep = q[0]
    p1_bits = 0
    p2_bits = 0
    for idx, a in enumerate(outside):
        if g.adj(a, rep):
            p2_bits |= 1 << idx
        else:
            p1_bits |= 1 << idx

    base_graphs = [_clique_minus(n, [a]) for a in outside]
    all_bits = (1 << p) - 1

    def evaluate(bits: int, e1: list[int], e2: list[int], clique_branch: bool) -> int:
        and_p1 = (bits & p1_bits) == p1_bits
        and_p2 = (bits & p2_bits) == p2_bits
        value = 1 if (and_p1 and not and_p2) else 0
        if clique_branch and (bits & all_bits) == all_bits:
            value = 1
        for pair in e1:
            if bits & pair == 0:
                value = 1
        for pair in e2:
            if bits & pair == 0:
                value = 0
        return value

    # G'' agrees with g outside P; list the corrections needed inside P
    prelim = BooleanFunction.from_values(
        p, [evaluate(i, [], [], q_is_clique) for i in range(1 << p)]
    )
    rebuilt = apply_boolean(prelim, base_graphs, n=n)
    e1: list[int] = []
    e2: list[int] = []
    for i in range(p):
        for j in range(i + 1, p):
            a, b = outside[i], outside[j]
            pair = (1 << i) | (1 << j)
            if g.adj(a, b) and not rebuilt.adj(a, b):
                e1.append(pair)
            elif rebuilt.adj(a, b) and not g.adj(a, b):
                e2.append(pair)

    f = BooleanFunction.from_values(
        p, [evaluate(i, e1, e2, q_is_clique) for i in range(1 << p)]
    )
    parts = [(h, CLASS_L) for h in base_graphs]
    return _certify(g, f, parts)


# -- XOR normal form over an intersection-closed class --------------------------------------


_CLOSED_WITH_COMPLETE = ("equiv", "C", "complete")
_CLOSED_WITHOUT_COMPLETE = ("d1", "ek", "empty")


def _closure_kinds(tag) -> tuple[tuple[str, ...], bool]:
    """(accepted kinds, class contains all complete graphs)."""
    kinds = tuple(sorted({t.kind for t in tag})) if isinstance(tag, (tuple, frozenset, set, list)) else (tag.kind,)
    if all(k in _CLOSED_WITH_COMPLETE for k in kinds):
        return kinds, True
    if all(k in _CLOSED_WITHOUT_COMPLETE for k in kinds):
        return kinds, False
    if set(kinds) == {"C", "d1"}:
        return kinds, True
    raise NotIntersectionClosed(f"class {kinds!r} is not known to be intersection-closed")


def xor_normal_form(
    f: BooleanFunction,
    graphs: Sequence[Graph],
    tag: ClassTag | Sequence[ClassTag],
) -> tuple[int, list[Graph]]:
    """Rewrite f(graphs) as a parity of class members, or its complement.

    Parts are the intersections over the nonempty ANF monomials of f.
    The empty monomial contributes the complete graph: emitted as a part
    when the class contains complete graphs, absorbed into the returned
    alpha bit otherwise.
    """
    tags = list(tag) if isinstance(tag, (tuple, frozenset, set, list)) else [tag]
    _, has_complete = _closure_kinds(tuple(tags))

    def member_ok(h: Graph) -> bool:
        return any(is_member(t, h) for t in tags)

    for h in graphs:
        if not member_ok(h):
            raise CertificationError("input graph is not a member of the stated class")

    form = anf(f)
    n = graphs[0].n if graphs else 0
    alpha = 0
    parts: list[Graph] = []
    for mono in sorted(form.monomials, key=lambda m: (len(m), sorted(m))):
        if not mono:
            if has_complete:
                parts.append(Graph.complete(n))
            else:
                alpha = 1
            continue
        chosen = [graphs[i - 1] for i in sorted(mono)]
        parts.append(combine("intersect", chosen))

    target = apply_boolean(f, list(graphs), n=n)
    rebuilt = combine("xor", parts) if parts else Graph.empty(n)
    if alpha:
        rebuilt = complement(rebuilt)
    if rebuilt.rows != target.rows:
        raise CertificationError("xor normal form does not recombine to f(graphs)")
    for h in parts:
        if not (member_ok(h) or is_member(COMPLETE, h)):
            raise CertificationError("xor normal form produced a part outside the class")
    return alpha, parts


# -- partition complementation sequences ------------------------------------------------------


def partition_complementation_sequence(parts: Sequence[Graph]) -> list[Partition]:
    """The block partitions of the parts, in order; folding
    partition_complement over them from the empty graph yields their XOR."""
    out = []
    for g in parts:
        if not is_member(EQUIVALENCE, g):
            raise NotEquivalenceGraph("every part must be an equivalence graph")
        out.append(Partition.from_blocks(g.n, g.components()))
    return out
