"""Perfect-matching enumeration and the matching-expansion route.

Two independent algorithms compute the weighted matching polynomial: a
memoized recursive vertex elimination (the workhorse) and a plain exhaustive
enumeration of all perfect matchings (no memo, also used to list matchings).
They must agree bit-exactly on every family graph.  Strips additionally
admit a transfer recurrence along the tiles, used as a third cross-check.

Graphs here stay small (at most ~4n+6 vertices), so exact enumeration wins
over anything asymptotically clever.
"""

from __future__ import annotations

from .errors import BijectionError
from .laurent import LaurentPolynomial
from .rootsys import RootVector
from .tilegraphs import MatchingEdge, MatchingGraph, graph_for_root, realize


def matching_polynomial(graph: MatchingGraph) -> LaurentPolynomial:
    """Sum over perfect matchings of the product of edge weights.

    Recursive elimination of the lowest uncovered vertex, memoized on the
    set of uncovered vertices; graphs with no perfect matching (in
    particular any odd-vertex graph) yield the zero polynomial.
    """
    nvars = graph.nvars
    order = {v: i for i, v in enumerate(sorted(graph.vertices))}
    m = len(order)
    adjacency: list[list[tuple[int, LaurentPolynomial]]] = [[] for _ in range(m)]
    for edge in graph.edges:
        iu, iv = order[edge.u], order[edge.v]
        adjacency[iu].append((iv, edge.weight))
        adjacency[iv].append((iu, edge.weight))
    one = LaurentPolynomial.one(nvars)
    zero = LaurentPolynomial.zero(nvars)
    memo: dict[int, LaurentPolynomial] = {}

    def eliminate(uncovered: int) -> LaurentPolynomial:
        if uncovered == 0:
            return one
        cached = memo.get(uncovered)
        if cached is not None:
            return cached
        v = (uncovered & -uncovered).bit_length() - 1
        total = zero
        rest = uncovered & ~(1 << v)
        for w, weight in adjacency[v]:
            if rest & (1 << w):
                total = total + weight * eliminate(rest & ~(1 << w))
        memo[uncovered] = total
        return total

    return eliminate((1 << m) - 1)


def perfect_matchings(graph: MatchingGraph) -> tuple[tuple[MatchingEdge, ...], ...]:
    """Every perfect matching, as a tuple of edges; deterministic order."""
    order = {v: i for i, v in enumerate(sorted(graph.vertices))}
    m = len(order)
    incident: list[list[tuple[int, MatchingEdge]]] = [[] for _ in range(m)]
    for edge in sorted(graph.edges, key=lambda e: e.key()):
        iu, iv = order[edge.u], order[edge.v]
        incident[iu].append((iv, edge))
        incident[iv].append((iu, edge))
    out: list[tuple[MatchingEdge, ...]] = []
    chosen: list[MatchingEdge] = []

    def extend(uncovered: int) -> None:
        if uncovered == 0:
            out.append(tuple(chosen))
            return
        v = (uncovered & -uncovered).bit_length() - 1
        rest = uncovered & ~(1 << v)
        for w, edge in incident[v]:
            if rest & (1 << w):
                chosen.append(edge)
                extend(rest & ~(1 << w))
                chosen.pop()

    extend((1 << m) - 1)
    return tuple(out)


def matching_polynomial_by_enumeration(graph: MatchingGraph) -> LaurentPolynomial:
    """Independent route: list all perfect matchings and sum their weights."""
    total = LaurentPolynomial.zero(graph.nvars)
    for matching in perfect_matchings(graph):
        weight = LaurentPolynomial.one(graph.nvars)
        for edge in matching:
            weight = weight * edge.weight
        total = total + weight
    return total


def strip_transfer_polynomial(
    pairs: list[tuple[LaurentPolynomial, LaurentPolynomial]], nvars: int
) -> LaurentPolynomial:
    """Transfer recurrence along a strip: p_k = p_{k-1} + N_k*S_k*p_{k-2}."""
    prev2 = LaurentPolynomial.one(nvars)
    prev1 = LaurentPolynomial.one(nvars)
    for north, south in pairs:
        prev2, prev1 = prev1, prev1 + north * south * prev2
    return prev1


def cluster_expansion(family: str, rank: int, root: RootVector) -> LaurentPolynomial:
    """P(G_root) divided exactly by the monomial x^root (the matching route)."""
    graph = graph_for_root(family, rank, root)
    polynomial = matching_polynomial(realize(graph))
    if polynomial.is_zero:
        raise BijectionError(f"graph for root {root} has no perfect matching")
    shift = LaurentPolynomial.monomial(1, tuple(-e for e in root))
    return polynomial * shift
