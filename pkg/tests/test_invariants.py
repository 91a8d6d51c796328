import itertools
import json
import random
from math import comb

import pytest

from boolcomb.errors import SizeLimitExceeded
from boolcomb.graphs import Graph, complement, induced_subgraph
from boolcomb.invariants import (
    biclique_number,
    chain_number,
    chromatic_number,
    clique_number,
    common_homogeneous_set,
    compute_params,
    degeneracy,
    find_odd_hole_or_antihole,
    independence_number,
    is_homogeneous,
    is_perfect,
    is_perfect_by_coloring,
    max_degree,
    maximum_clique,
    neighborhood_complexity,
    strong_chain_number,
    twin_classes,
    twin_number,
    vc_dimension,
)

from conftest import random_graph


# -- independent oracles -------------------------------------------------------


def brute_clique_number(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.adj(u, v) for u, v in itertools.combinations(sub, 2)):
                return r
    return best


def brute_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if set(assignment) != set(range(min(k, g.n))):
                continue
            if all(assignment[u] != assignment[v] for u, v in g.edges()):
                return k
    raise AssertionError


def brute_biclique_number(g: Graph) -> int:
    best = 0
    verts = range(g.n)
    for ra in range(1, g.n // 2 + 1):
        for a_set in itertools.combinations(verts, ra):
            rest = [v for v in verts if v not in a_set]
            for b_set in itertools.combinations(rest, ra):
                if all(g.adj(a, b) for a in a_set for b in b_set):
                    best = max(best, ra)
                    break
    return best


class TestCliqueIndependence:
    def test_examples(self):
        assert clique_number(Graph.complete(5)) == 5
        assert independence_number(Graph.complete(5)) == 1
        assert clique_number(Graph.cycle(5)) == 2
        assert independence_number(Graph.cycle(5)) == 2

    def test_against_brute_force(self, rng):
        for _ in range(40):
            g = random_graph(rng.randint(0, 8), rng.random(), rng)
            assert clique_number(g) == brute_clique_number(g)

    def test_clique_is_valid(self, rng):
        g = random_graph(12, 0.6, rng)
        cl = maximum_clique(g)
        assert all(g.adj(u, v) for u, v in itertools.combinations(cl, 2))

    def test_size_cap(self):
        with pytest.raises(SizeLimitExceeded):
            clique_number(Graph.empty(65))


class TestChromatic:
    def test_examples(self):
        assert chromatic_number(Graph.empty(6)) == 1
        assert chromatic_number(Graph.cycle(5)) == 3
        assert chromatic_number(Graph.complete_multipartite([3, 3])) == 2

    def test_against_brute_force(self, rng):
        for _ in range(30):
            g = random_graph(rng.randint(1, 7), rng.random(), rng)
            assert chromatic_number(g) == brute_chromatic_number(g)

    def test_sandwich_bounds(self, rng):
        for _ in range(30):
            g = random_graph(rng.randint(1, 12), rng.random(), rng)
            chi = chromatic_number(g)
            assert clique_number(g) <= chi <= max_degree(g) + 1
            assert independence_number(g) * chi >= g.n


class TestDegreeLike:
    def test_degeneracy_examples(self):
        assert degeneracy(Graph.complete(4)) == 3
        tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
        assert degeneracy(tree) == 1
        assert degeneracy(Graph.cycle(6)) == 2
        assert degeneracy(Graph.empty(3)) == 0

    def test_degeneracy_at_most_max_degree(self, rng):
        for _ in range(20):
            g = random_graph(rng.randint(1, 10), rng.random(), rng)
            assert degeneracy(g) <= max_degree(g)


class TestBiclique:
    def test_examples(self):
        assert biclique_number(Graph.complete_multipartite([3, 3])) == 3
        assert biclique_number(Graph.empty(5)) == 0
        assert biclique_number(Graph.cycle(5)) == 1

    def test_against_brute_force(self, rng):
        for _ in range(25):
            g = random_graph(rng.randint(0, 7), rng.random(), rng)
            assert biclique_number(g) == brute_biclique_number(g)

    def test_size_cap(self):
        with pytest.raises(SizeLimitExceeded):
            biclique_number(Graph.empty(17))


def half_graph(k: int) -> Graph:
    # a_i ~ b_j iff i <= j, on vertices a_0..a_{k-1}, b_0..b_{k-1}
    edges = [(i, k + j) for i in range(k) for j in range(k) if i <= j]
    return Graph.from_edges(2 * k, edges)


class TestChainNumbers:
    def test_half_graph_value(self):
        assert chain_number(half_graph(3)) == 3

    def test_empty_graph_convention(self):
        assert chain_number(Graph.empty(6)) == 0
        assert strong_chain_number(Graph.empty(1)) == 0

    def test_sandwich_on_random_graphs(self, rng):
        for _ in range(40):
            g = random_graph(rng.randint(2, 8), rng.random(), rng)
            ch = chain_number(g)
            sch = strong_chain_number(g)
            assert sch // 2 <= ch <= sch

    def test_k33_minus_matching(self):
        g = Graph.from_edges(6, [
            (i, 3 + j) for i in range(3) for j in range(3) if i != j
        ])
        ch = chain_number(g)
        sch = strong_chain_number(g)
        assert sch // 2 <= ch <= sch

    def test_size_cap(self):
        with pytest.raises(SizeLimitExceeded):
            chain_number(Graph.empty(13))


def brute_chain_numbers(g: Graph) -> tuple[int, int]:
    """Oracle: try every pair of disjoint ordered tuples."""
    best_ch = 0
    best_sch = 0
    verts = list(range(g.n))
    for k in range(g.n // 2, 0, -1):
        for a_seq in itertools.permutations(verts, k):
            rest = [v for v in verts if v not in a_seq]
            for b_seq in itertools.permutations(rest, k):
                ch_ok = all(
                    g.adj(a_seq[i], b_seq[j]) == (i <= j)
                    for i in range(k)
                    for j in range(k)
                )
                sch_ok = all(
                    g.adj(a_seq[i], b_seq[j]) == (i < j)
                    for i in range(k)
                    for j in range(k)
                    if i != j
                )
                if ch_ok:
                    best_ch = max(best_ch, k)
                if sch_ok:
                    best_sch = max(best_sch, k)
            if best_ch >= k and best_sch >= k:
                break
        if best_ch >= k and best_sch >= k:
            break
    return best_ch, best_sch


class TestChainOracle:
    def test_matches_brute_force(self, rng):
        for _ in range(30):
            g = random_graph(rng.randint(2, 6), rng.random(), rng)
            ch, sch = brute_chain_numbers(g)
            assert chain_number(g) == ch
            assert strong_chain_number(g) == sch


class TestTwins:
    def test_examples(self):
        assert twin_number(Graph.complete(6)) == 1
        assert twin_number(Graph.complete_multipartite([2, 3])) == 2
        assert twin_number(Graph.cycle(5)) == 5

    def test_c5_has_no_twins_exhaustively(self):
        g = Graph.cycle(5)
        for a, b in itertools.combinations(range(5), 2):
            mask = ~((1 << a) | (1 << b))
            assert g.rows[a] & mask != g.rows[b] & mask

    def test_classes_are_maximal(self, rng):
        for _ in range(25):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            p = twin_classes(g)
            # within a class: pairwise twins
            for block in p.blocks:
                for a, b in itertools.combinations(sorted(block), 2):
                    mask = ~((1 << a) | (1 << b))
                    assert g.rows[a] & mask == g.rows[b] & mask
            # merging any two classes breaks the twin predicate
            for b1, b2 in itertools.combinations(p.blocks, 2):
                merged_ok = all(
                    g.rows[a] & ~((1 << a) | (1 << b)) == g.rows[b] & ~((1 << a) | (1 << b))
                    for a in b1
                    for b in b2
                )
                assert not merged_ok


class TestNeighborhoodComplexity:
    def test_single_vertex_traces(self, rng):
        for _ in range(10):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            assert neighborhood_complexity(g, 1) <= 2

    def test_vc_examples(self):
        assert vc_dimension(Graph.empty(5)) == 0
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert vc_dimension(star) == 1

    def test_star_vc_by_exhaustive_shattering(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        # no 2-subset is shattered: check all traces directly
        for a, b in itertools.combinations(range(4), 2):
            mask = (1 << a) | (1 << b)
            traces = {star.rows[v] & mask for v in range(4)}
            assert len(traces) < 4

    def test_sauer_shelah(self, rng):
        for _ in range(15):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            d = vc_dimension(g)
            for m in range(1, min(g.n, 5) + 1):
                bound = sum(comb(m, i) for i in range(d + 1))
                assert neighborhood_complexity(g, m) <= bound


class TestVcOracle:
    def test_matches_set_based_definition(self, rng):
        for _ in range(25):
            g = random_graph(rng.randint(1, 8), rng.random(), rng)
            neighborhoods = [frozenset(g.neighbors(v)) for v in range(g.n)]
            best = 0
            for r in range(g.n + 1):
                for subset in itertools.combinations(range(g.n), r):
                    traces = {N & frozenset(subset) for N in neighborhoods}
                    if len(traces) == 1 << r:
                        best = max(best, r)
            assert vc_dimension(g) == best


class TestChromaticBudget:
    def test_budget_exceeded(self):
        from boolcomb.errors import BudgetExceeded

        with pytest.raises(BudgetExceeded):
            chromatic_number(Graph.cycle(5), max_nodes=0)

    def test_budget_large_enough_succeeds(self):
        assert chromatic_number(Graph.cycle(5), max_nodes=10_000) == 3


class TestPerfectness:
    def test_c5_imperfect_with_witness(self):
        kind, cycle = find_odd_hole_or_antihole(Graph.cycle(5))
        assert kind == "hole"
        assert len(cycle) == 5

    def test_bipartite_perfect(self, rng):
        for _ in range(10):
            n1, n2 = rng.randint(1, 4), rng.randint(1, 4)
            g = Graph.from_edges(
                n1 + n2,
                [(u, n1 + v) for u in range(n1) for v in range(n2) if rng.random() < 0.6],
            )
            assert is_perfect(g)

    def test_complement_c7_imperfect_via_antihole(self):
        kind, cycle = find_odd_hole_or_antihole(complement(Graph.cycle(7)))
        assert kind == "antihole"
        assert len(cycle) == 7

    def test_witness_is_an_induced_odd_cycle(self, rng):
        found = 0
        while found < 10:
            g = random_graph(rng.randint(5, 9), rng.random(), rng)
            witness = find_odd_hole_or_antihole(g)
            if witness is None:
                continue
            kind, cycle = witness
            found += 1
            h = g if kind == "hole" else complement(g)
            sub = induced_subgraph(h, cycle)
            assert len(cycle) % 2 == 1 and len(cycle) >= 5
            assert sub.edge_count == len(cycle)
            assert all(sub.degree(v) == 2 for v in range(sub.n))

    def test_agrees_with_coloring_oracle_exhaustive_n5(self):
        for mask in range(1 << 10):
            g = Graph.from_edge_mask(5, mask)
            assert is_perfect(g) == is_perfect_by_coloring(g)

    def test_agrees_with_coloring_oracle_sampled_to_n8(self, rng):
        for _ in range(40):
            g = random_graph(rng.randint(6, 8), rng.random(), rng)
            assert is_perfect(g) == is_perfect_by_coloring(g)


class TestCommonHomogeneousSet:
    def test_single_graph_base_case(self, rng):
        for _ in range(10):
            g = random_graph(rng.randint(1, 10), rng.random(), rng)
            s = common_homogeneous_set([g])
            assert len(s) == max(clique_number(g), independence_number(g))
            assert is_homogeneous(g, s)

    def test_complete_and_empty(self):
        s = common_homogeneous_set([Graph.complete(6), Graph.empty(6)])
        assert s == list(range(6))

    def test_c5_pair(self, rng):
        c5 = Graph.cycle(5)
        perm = list(range(5))
        rng.shuffle(perm)
        graphs = [c5, c5.relabel(perm)]
        s = common_homogeneous_set(graphs)
        assert len(s) >= 2
        assert all(is_homogeneous(g, s) for g in graphs)


class TestParamReport:
    def test_k5_report(self):
        report = compute_params(Graph.complete(5))
        data = json.loads(report.to_json())
        assert data["omega"] == 5 and data["chi"] == 5 and data["alpha"] == 1
        assert data["perfect"] is True
        assert data["twin_number"] == 1

    def test_report_internal_invariants(self, rng):
        for _ in range(10):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            r = compute_params(g)
            assert r.omega <= r.chi <= r.max_degree + 1
            assert r.strong_chain // 2 <= r.chain <= r.strong_chain
            if r.perfect:
                assert r.chi == r.omega
