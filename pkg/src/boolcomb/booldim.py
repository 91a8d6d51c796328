"""Brute-force boolean dimension: the least k such that a target graph
is a boolean combination of k members of a reference class.

The search runs over unordered part multisets (the function absorbs
permutations) and decides feasibility per tuple by a single-valuedness
test: the mapping from observed adjacency patterns to required target
bits must be a function.  Unobserved patterns default to 0, so no loop
over all 2^(2^k) functions is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional

from .boolfn import BooleanFunction
from .classes import ClassTag, enumerate_members
from .errors import BudgetExceeded, CertificationError
from .gformats import graph_to_graph6
from .graphs import Graph, apply_boolean

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class DimWitness:
    """A certified representation: apply_boolean(f, parts) = target."""

    k: int
    f: BooleanFunction
    parts: tuple[Graph, ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "f": self.f.to_text(),
            "parts": [graph_to_graph6(g) for g in self.parts],
        }


def _sorted_members(tag: ClassTag, n: int) -> list[Graph]:
    # canonical order kills permutation symmetry in the multiset search
    return sorted(enumerate_members(tag, n), key=graph_to_graph6)


def _verify(target: Graph, f: BooleanFunction, parts: tuple[Graph, ...]) -> DimWitness:
    if apply_boolean(f, list(parts), n=target.n).rows != target.rows:
        raise CertificationError("witness does not recombine to the target")
    return DimWitness(f.arity, f, parts)


def exists_representation(
    g: Graph,
    tag: ClassTag,
    k: int,
    budget: int = DEFAULT_BUDGET,
) -> Optional[DimWitness]:
    """A witness that g is a function of k class members, or None.

    The None answer is exhaustive over all multisets of k labeled
    members on V(g) and all boolean functions of arity k.
    """
    n = g.n
    members = _sorted_members(tag, n)
    if len(members) ** k > budget:
        raise BudgetExceeded(
            f"{len(members)}^{k} candidate tuples exceed the budget of {budget}"
        )
    npairs = n * (n - 1) // 2
    full = (1 << npairs) - 1
    target = g.edge_mask()
    masks = [h.edge_mask() for h in members]

    for combo in combinations_with_replacement(range(len(members)), k):
        ms = [masks[i] for i in combo]
        table = 0
        feasible = True
        for pattern in range(1 << k):
            region = full
            for j in range(k):
                region &= ms[j] if (pattern >> j) & 1 else full ^ ms[j]
            hit = region & target
            if hit == 0:
                continue
            if hit == region:
                table |= 1 << pattern
            else:
                feasible = False
                break
        if feasible:
            f = BooleanFunction(k, table)
            parts = tuple(members[i] for i in combo)
            return _verify(g, f, parts)
    return None


def boolean_dimension(
    g: Graph,
    tag: ClassTag,
    k_max: int,
    budget: int = DEFAULT_BUDGET,
) -> Optional[DimWitness]:
    """Smallest-arity witness with k <= k_max, or None if none exists.

    Arity-0 functions are excluded; constant targets appear at k = 1
    with a constant function.
    """
    for k in range(1, k_max + 1):
        witness = exists_representation(g, tag, k, budget=budget)
        if witness is not None:
            return witness
    return None


def restricted_dimension(
    g: Graph,
    tag: ClassTag,
    mode: str,
    k_max: int,
    budget: int = DEFAULT_BUDGET,
) -> Optional[DimWitness]:
    """Dimension with f fixed to a fold: cover number (union),
    intersection dimension (intersect), or XOR dimension (xor)."""
    if mode not in ("union", "intersect", "xor"):
        raise ValueError(f"unknown mode {mode!r}")
    n = g.n
    members = _sorted_members(tag, n)
    target = g.edge_mask()
    npairs = n * (n - 1) // 2
    full = (1 << npairs) - 1
    pool = list(range(len(members)))
    masks = [h.edge_mask() for h in members]
    if mode == "union":
        pool = [i for i in pool if masks[i] & ~target == 0]
    elif mode == "intersect":
        pool = [i for i in pool if target & ~masks[i] == 0]

    for k in range(1, k_max + 1):
        if len(pool) ** k > budget:
            raise BudgetExceeded(
                f"{len(pool)}^{k} candidate tuples exceed the budget of {budget}"
            )
        for combo in combinations_with_replacement(pool, k):
            if mode == "union":
                acc = 0
                for i in combo:
                    acc |= masks[i]
            elif mode == "intersect":
                acc = full
                for i in combo:
                    acc &= masks[i]
            else:
                acc = 0
                for i in combo:
                    acc ^= masks[i]
            if acc == target:
                fold = {
                    "union": BooleanFunction.or_,
                    "intersect": BooleanFunction.and_,
                    "xor": BooleanFunction.xor_,
                }[mode](k)
                parts = tuple(members[i] for i in combo)
                return _verify(g, fold, parts)
    return None
