"""The H(n,k) extremal family, coloring-bound experiments, and the
fixed catalogue of finite theorem checks.

Each catalogue entry runs a deterministic desk-scale verification of
one structural claim and reports a TheoremCheck; a failing check always
carries a machine-reverifiable counterexample.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Optional

from .boolfn import BooleanFunction, enumerate_functions
from .booldim import exists_representation, restricted_dimension
from .classes import (
    EQUIVALENCE,
    ClassTag,
    at_most_edges,
    enumerate_members,
    equivalence_members,
    random_member,
    random_split_with_parts,
)
from .errors import (
    BudgetExceeded,
    SizeLimitExceeded,
    UnknownTheorem,
    UnsupportedExpression,
)
from .gformats import graph_to_graph6
from .graphs import Graph, apply_boolean, combine, complement
from .invariants import (
    chain_number,
    chromatic_number,
    clique_number,
    common_homogeneous_set,
    find_odd_hole,
    independence_number,
    is_homogeneous,
    is_perfect,
    neighborhood_complexity,
    strong_chain_number,
)

DEFAULT_SEED = 1729
HNK_VERTEX_LIMIT = 4096
HNK_CHI_NODE_BUDGET = 200_000


# -- the H(n,k) family ---------------------------------------------------------------


def hnk(n: int, k: int) -> Graph:
    """Graph on [n]^k tuples; adjacent iff they agree on an odd number
    of coordinates."""
    if n**k > HNK_VERTEX_LIMIT:
        raise SizeLimitExceeded(f"{n}^{k} vertices exceed the cap of {HNK_VERTEX_LIMIT}")
    tuples = list(product(range(n), repeat=k))
    size = len(tuples)
    edges = []
    for i in range(size):
        for j in range(i + 1, size):
            agreements = sum(1 for a, b in zip(tuples[i], tuples[j]) if a == b)
            if agreements % 2 == 1:
                edges.append((i, j))
    return Graph.from_edges(size, edges)


def hnk_as_xor(n: int, k: int) -> list[Graph]:
    """The k coordinate equivalence graphs whose XOR is hnk(n, k)."""
    if n**k > HNK_VERTEX_LIMIT:
        raise SizeLimitExceeded(f"{n}^{k} vertices exceed the cap of {HNK_VERTEX_LIMIT}")
    tuples = list(product(range(n), repeat=k))
    size = len(tuples)
    graphs = []
    for coord in range(k):
        edges = [
            (i, j)
            for i in range(size)
            for j in range(i + 1, size)
            if tuples[i][coord] == tuples[j][coord]
        ]
        graphs.append(Graph.from_edges(size, edges))
    return graphs


@dataclass(frozen=True)
class HnkReport:
    n: int
    k: int
    omega: int
    alpha: int
    chi: int
    omega_bound: float
    alpha_bound: float
    chi_lower: int
    chi_is_exact: bool

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)


def hnk_report(n: int, k: int, chi_node_budget: int = HNK_CHI_NODE_BUDGET) -> HnkReport:
    """Exact clique/independence numbers against the analytic bounds.

    The chromatic number is exact when the branch-and-bound finishes
    within its node budget; otherwise the report falls back to the
    counting lower bound ceil(n^k / alpha).
    """
    g = hnk(n, k)
    omega = clique_number(g)
    alpha = independence_number(g)
    if k % 2 == 0:
        omega_bound = float(n * k)
        alpha_bound = (2 * math.e * n) ** (k / 2)
    else:
        omega_bound = (2 * math.e * n) ** ((k - 1) / 2)
        alpha_bound = float(n * k)
    chi_lower = -(-(n**k) // alpha)
    try:
        chi = chromatic_number(g, max_nodes=chi_node_budget)
        chi_is_exact = True
    except (BudgetExceeded, SizeLimitExceeded):
        chi = chi_lower
        chi_is_exact = False
    return HnkReport(
        n=n,
        k=k,
        omega=omega,
        alpha=alpha,
        chi=chi,
        omega_bound=omega_bound,
        alpha_bound=alpha_bound,
        chi_lower=chi_lower,
        chi_is_exact=chi_is_exact,
    )


# -- theorem checks ----------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    scope: str
    passed: bool
    seed: int
    counterexample: Optional[dict] = None
    info: Optional[dict] = None

    def to_json_dict(self) -> dict:
        out = {"id": self.id, "scope": self.scope, "passed": self.passed, "seed": self.seed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.info is not None:
            out["info"] = self.info
        return out


# -- chi-binding experiments ----------------------------------------------------------------


@dataclass(frozen=True)
class ClassExpr:
    """A t-fold union or intersection of one sampled class."""

    op: str
    arity: int
    tag: ClassTag

    def __post_init__(self):
        if self.op not in ("union", "intersect"):
            raise UnsupportedExpression(f"unsupported operator {self.op!r}")
        if self.arity < 1:
            raise UnsupportedExpression("arity must be positive")

    def describe(self) -> str:
        return f"{self.arity}-{self.op} of {self.tag.to_text()}"


def _binding_fn(binding: str, arity: int) -> tuple[str, Callable[[int], float]]:
    if binding == "product":
        return (f"omega^{arity}", lambda w: float(w**arity))
    kind, _, raw = binding.partition(":")
    try:
        value = int(raw)
    except ValueError:
        raise UnsupportedExpression(f"cannot parse binding {binding!r}")
    if kind == "linear":
        return (f"{value}*omega", lambda w: float(value * w))
    if kind == "power":
        return (f"omega^{value}", lambda w: float(w**value))
    raise UnsupportedExpression(f"unknown binding {binding!r}")


def verify_chi_binding(
    expr: ClassExpr,
    binding: str,
    samples: int,
    n: int,
    seed: int = DEFAULT_SEED,
) -> TheoremCheck:
    """Sample combinations and assert chi <= binding(omega) on each."""
    label, bound = _binding_fn(binding, expr.arity)
    counterexample = None
    for s in range(samples):
        parts = [
            random_member(expr.tag, n, seed + 7919 * s + j) for j in range(expr.arity)
        ]
        g = combine(expr.op, parts)
        omega = clique_number(g)
        chi = chromatic_number(g)
        if chi > bound(omega):
            counterexample = {
                "parts": [graph_to_graph6(p) for p in parts],
                "omega": omega,
                "chi": chi,
                "bound": bound(omega),
            }
            break
    return TheoremCheck(
        id=f"chi-binding:{expr.describe()}:{binding}",
        scope=f"{samples} samples at n={n}, asserting chi <= {label}",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


# -- catalogue helpers ------------------------------------------------------------------------


def _random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _perfect_cache_check(mask: int, n: int, cache: dict[int, bool]) -> bool:
    got = cache.get(mask)
    if got is None:
        got = is_perfect(Graph.from_edge_mask(n, mask))
        cache[mask] = got
    return got


def _check_perfect_2fn_equiv(seed: int) -> TheoremCheck:
    n = 6
    masks = [g.edge_mask() for g, _ in equivalence_members(n)]
    full = (1 << (n * (n - 1) // 2)) - 1
    cache: dict[int, bool] = {}
    counterexample = None
    for a in masks:
        na = full ^ a
        for b in masks:
            nb = full ^ b
            regions = (na & nb, a & nb, na & b, a & b)
            for table in range(16):
                out = 0
                if table & 1:
                    out |= regions[0]
                if table & 2:
                    out |= regions[1]
                if table & 4:
                    out |= regions[2]
                if table & 8:
                    out |= regions[3]
                if not _perfect_cache_check(out, n, cache):
                    g1 = Graph.from_edge_mask(n, a)
                    g2 = Graph.from_edge_mask(n, b)
                    counterexample = {
                        "f": BooleanFunction(2, table).to_text(),
                        "h1": graph_to_graph6(g1),
                        "h2": graph_to_graph6(g2),
                        "result": graph_to_graph6(Graph.from_edge_mask(n, out)),
                    }
                    break
            if counterexample:
                break
        if counterexample:
            break
    return TheoremCheck(
        id="perfect-2fn-equiv",
        scope=f"all {len(masks)}^2 ordered pairs of labeled equivalence graphs on "
        f"{n} vertices x 16 binary functions (hereditarily covers n < {n})",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _intersection_unreachable(target: Graph, members: list[Graph]) -> Optional[dict]:
    """None if no pair of members intersects to the target, else a witness."""
    tmask = target.edge_mask()
    masks = [m.edge_mask() for m in members]
    for i, j in combinations_with_replacement(range(len(members)), 2):
        if masks[i] & masks[j] == tmask:
            return {
                "h1": graph_to_graph6(members[i]),
                "h2": graph_to_graph6(members[j]),
            }
    return None


def _check_forbidden_multipartite(seed: int) -> TheoremCheck:
    counterexample = None
    # K_3 + O_1 on 4 labeled vertices
    target4 = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])
    members4 = [complement(g) for g, _ in equivalence_members(4)]
    witness = _intersection_unreachable(target4, members4)
    if witness is not None:
        counterexample = {"target": "K3+O1", **witness}
    # 3K_2 on 6 labeled vertices
    if counterexample is None:
        target6 = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
        members6 = [complement(g) for g, _ in equivalence_members(6)]
        witness = _intersection_unreachable(target6, members6)
        if witness is not None:
            counterexample = {"target": "3K2", **witness}
    return TheoremCheck(
        id="forbidden-multipartite",
        scope="exhaustive search over all complete-multipartite pairs on 4 (for K3+O1) "
        "and 6 (for 3K2) labeled vertices",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_c5_not_2fn_equiv(seed: int) -> TheoremCheck:
    witness = exists_representation(Graph.cycle(5), EQUIVALENCE, 2)
    counterexample = witness.to_json_dict() if witness is not None else None
    return TheoremCheck(
        id="c5-not-2fn-equiv",
        scope="exhaustive search over all multisets of 2 labeled equivalence graphs "
        "on 5 vertices and all binary functions",
        passed=witness is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_speed_bound(seed: int) -> TheoremCheck:
    counterexample = None
    for n in range(1, 6):
        masks = [g.edge_mask() for g, _ in equivalence_members(n)]
        xors = {a ^ b for a in masks for b in masks}
        lhs = math.log2(len(xors))
        rhs = 2 * math.log2(len(masks)) + 4
        if lhs > rhs:
            counterexample = {"n": n, "count_Y": len(xors), "count_X": len(masks)}
            break
    return TheoremCheck(
        id="speed-bound",
        scope="exhaustive counts of 2-XORs of labeled equivalence graphs for n <= 5, "
        "asserting log2|Y^n| <= 2*log2|X^n| + 4",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_chain_sandwich(seed: int, samples: int = 300) -> TheoremCheck:
    rng = random.Random(seed)
    counterexample = None
    for _ in range(samples):
        n = rng.randint(2, 10)
        g = _random_graph(n, rng.uniform(0.1, 0.9), rng)
        ch = chain_number(g)
        sch = strong_chain_number(g)
        if not (sch // 2 <= ch <= sch):
            counterexample = {"graph": graph_to_graph6(g), "ch": ch, "sch": sch}
            break
    return TheoremCheck(
        id="chain-sandwich",
        scope=f"{samples} seeded random graphs with n <= 10, "
        "asserting floor(sch/2) <= ch <= sch",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_nbhd_product(seed: int, pairs: int = 25, n: int = 10) -> TheoremCheck:
    rng = random.Random(seed)
    counterexample = None
    for s in range(pairs):
        h1 = random_member(EQUIVALENCE, n, seed + 31 * s)
        h2 = random_member(EQUIVALENCE, n, seed + 31 * s + 17)
        nu1 = [neighborhood_complexity(h1, m) for m in range(1, 5)]
        nu2 = [neighborhood_complexity(h2, m) for m in range(1, 5)]
        for f in enumerate_functions(2):
            g = apply_boolean(f, [h1, h2])
            for m in range(1, 5):
                nu_g = neighborhood_complexity(g, m)
                class_bound = (m + 1) ** 2
                if nu_g > nu1[m - 1] * nu2[m - 1] or nu_g > class_bound:
                    counterexample = {
                        "f": f.to_text(),
                        "h1": graph_to_graph6(h1),
                        "h2": graph_to_graph6(h2),
                        "m": m,
                        "nu": nu_g,
                    }
                    break
            if counterexample:
                break
        if counterexample:
            break
    return TheoremCheck(
        id="nbhd-product",
        scope=f"{pairs} seeded equivalence-graph pairs at n={n}, all 16 binary "
        "functions, m <= 4: nu_G(m) <= nu_H1(m)*nu_H2(m) and <= (m+1)^2",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_eh_extraction(seed: int, per_r: int = 8, n: int = 18) -> TheoremCheck:
    counterexample = None
    for r in range(1, 4):
        for s in range(per_r):
            graphs = [
                random_member(EQUIVALENCE, n, seed + 97 * r + 13 * s + j)
                for j in range(r)
            ]
            final = common_homogeneous_set(graphs)
            if not all(is_homogeneous(g, final) for g in graphs):
                counterexample = {
                    "graphs": [graph_to_graph6(g) for g in graphs],
                    "set": final,
                    "reason": "not homogeneous",
                }
                break
            # observed per-step exponents along the nested extraction
            sizes = [n]
            for i in range(1, r + 1):
                sizes.append(len(common_homogeneous_set(graphs[:i])))
            deltas = [
                math.log(sizes[i]) / math.log(sizes[i - 1])
                for i in range(1, r + 1)
                if sizes[i - 1] > 1 and sizes[i] > 0
            ]
            delta = min(deltas) if deltas else 1.0
            if len(final) < n ** (delta**r) - 1e-9:
                counterexample = {
                    "graphs": [graph_to_graph6(g) for g in graphs],
                    "set": final,
                    "delta": delta,
                    "reason": "size below n^(delta^r)",
                }
                break
        if counterexample:
            break
    return TheoremCheck(
        id="eh-extraction",
        scope=f"{per_r} seeded samples for each r in 1..3 at n={n}: the nested "
        "extraction returns a common homogeneous set of size >= n^(delta^r)",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_e1_characterization(seed: int) -> TheoremCheck:
    t = 4  # 2-functions of E_1 land in E_4 or its complement class
    counterexample = None
    for n in range(2, 7):
        members = list(enumerate_members(at_most_edges(1), n))
        npairs = n * (n - 1) // 2
        for h1 in members:
            for h2 in members:
                for f in enumerate_functions(2):
                    g = apply_boolean(f, [h1, h2])
                    if g.edge_count > t and npairs - g.edge_count > t:
                        counterexample = {
                            "n": n,
                            "f": f.to_text(),
                            "h1": graph_to_graph6(h1),
                            "h2": graph_to_graph6(h2),
                        }
                        break
                if counterexample:
                    break
            if counterexample:
                break
        if counterexample:
            break
    return TheoremCheck(
        id="e1-characterization",
        scope="all 2-functions of single-edge-or-empty graphs for n <= 6 have "
        f"at most {t} edges or at most {t} non-edges (exhaustive)",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_empty_characterization(seed: int) -> TheoremCheck:
    counterexample = None
    for n in range(1, 7):
        empty = Graph.empty(n)
        npairs = n * (n - 1) // 2
        for k in range(0, 4):
            for f in enumerate_functions(k):
                g = apply_boolean(f, [empty] * k, n=n)
                if g.edge_count not in (0, npairs):
                    counterexample = {"n": n, "f": f.to_text()}
                    break
            if counterexample:
                break
        if counterexample:
            break
    return TheoremCheck(
        id="empty-characterization",
        scope="every function (arity <= 3) of empty graphs is complete or empty, "
        "exhaustive for n <= 6",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def split_intersection_color_classes(
    g1: Graph, clique1: frozenset[int], g2: Graph, clique2: frozenset[int]
) -> dict[tuple[int, int], Graph]:
    """Partition the edges of g1 AND g2 by their clique-membership vector."""
    h = combine("intersect", [g1, g2])
    buckets: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in h.edges():
        b = (
            1 if (u in clique1 and v in clique1) else 0,
            1 if (u in clique2 and v in clique2) else 0,
        )
        buckets.setdefault(b, []).append((u, v))
    return {b: Graph.from_edges(h.n, edges) for b, edges in buckets.items()}


def meyniel_split_sample_ok(
    g1: Graph, clique1: frozenset[int], g2: Graph, clique2: frozenset[int]
) -> bool:
    """Every color-class subgraph with a 0-coordinate is odd-hole-free."""
    for b, sub in split_intersection_color_classes(g1, clique1, g2, clique2).items():
        if b != (1, 1) and find_odd_hole(sub) is not None:
            return False
    return True


def _check_meyniel_split(seed: int, samples: int = 60, n: int = 10) -> TheoremCheck:
    rng = random.Random(seed)
    counterexample = None
    for _ in range(samples):
        g1, q1 = random_split_with_parts(n, rng)
        g2, q2 = random_split_with_parts(n, rng)
        if not meyniel_split_sample_ok(g1, q1, g2, q2):
            counterexample = {
                "g1": graph_to_graph6(g1),
                "clique1": sorted(q1),
                "g2": graph_to_graph6(g2),
                "clique2": sorted(q2),
            }
            break
    return TheoremCheck(
        id="meyniel-split",
        scope=f"{samples} seeded 2-intersections of random split graphs at n={n}: "
        "color classes with a 0-coordinate are odd-hole-free",
        passed=counterexample is None,
        seed=seed,
        counterexample=counterexample,
    )


def _check_c5_3xor_exploratory(seed: int) -> TheoremCheck:
    witness = restricted_dimension(Graph.cycle(5), EQUIVALENCE, "xor", 3)
    info = {
        "question": "is C_5 a 3-XOR of equivalence graphs?",
        "found": witness is not None,
    }
    if witness is not None:
        info["witness"] = witness.to_json_dict()
    return TheoremCheck(
        id="c5-3xor-equiv-exploratory",
        scope="informational search, never asserted: exhaustive XOR triples of "
        "labeled equivalence graphs on 5 vertices",
        passed=True,
        seed=seed,
        info=info,
    )


_CATALOGUE: dict[str, Callable[[int], TheoremCheck]] = {
    "perfect-2fn-equiv": _check_perfect_2fn_equiv,
    "forbidden-multipartite": _check_forbidden_multipartite,
    "c5-not-2fn-equiv": _check_c5_not_2fn_equiv,
    "speed-bound": _check_speed_bound,
    "chain-sandwich": _check_chain_sandwich,
    "nbhd-product": _check_nbhd_product,
    "eh-extraction": _check_eh_extraction,
    "e1-characterization": _check_e1_characterization,
    "empty-characterization": _check_empty_characterization,
    "meyniel-split": _check_meyniel_split,
    "c5-3xor-equiv-exploratory": _check_c5_3xor_exploratory,
}

THEOREM_IDS = tuple(_CATALOGUE)


def verify_theorem(theorem_id: str, seed: int = DEFAULT_SEED) -> TheoremCheck:
    try:
        runner = _CATALOGUE[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"no catalogue entry {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    return runner(seed)


def verify_all(seed: int = DEFAULT_SEED) -> list[TheoremCheck]:
    return [verify_theorem(tid, seed) for tid in THEOREM_IDS]
