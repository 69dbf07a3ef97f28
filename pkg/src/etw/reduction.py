"""Balanced-bisection hardness gadget: blow a graph up with a universal
independent set so that deciding edge-treewidth against the derived
threshold answers the original bisection question, plus an exact
bisection solver and an end-to-end verifier for tiny instances."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import SizeLimitError
from .multigraph import Multigraph, boundary_size
from .widths import DEFAULT_EXACT_LIMIT, CostKind, cost_profile, width_exact


@dataclass(frozen=True)
class BisectionInstance:
    graph: Multigraph
    k: int


@dataclass(frozen=True)
class EtwInstance:
    graph: Multigraph
    threshold: int
    core_size: int  # vertices 0..core_size-1 are the original graph


def reduce_bisection_to_etw(inst: BisectionInstance) -> EtwInstance:
    """Append an independent set of n^2 fresh vertices joined to every
    original vertex; the width threshold becomes n^3/2 + k.

    Only even n is accepted: the construction's bipartition sides have
    size exactly n/2 and the threshold n^3/2 must be integral.
    """
    g, k = inst.graph, inst.k
    n = g.n
    if n < 2 or n % 2:
        raise ValueError(f"reduction needs an even vertex count >= 2, got {n}")
    if k < 0:
        raise ValueError("threshold k must be non-negative")
    edges = [(u, v, m) for (u, v), m in g.edge_items()]
    for q in range(n, n + n * n):
        for v in range(n):
            edges.append((v, q, 1))
    h = Multigraph(n + n * n, edges)
    return EtwInstance(graph=h, threshold=n**3 // 2 + k, core_size=n)


@dataclass(frozen=True)
class BisectionResult:
    value: int
    side1: tuple[int, ...]
    side2: tuple[int, ...]


def min_bisection_exact(g: Multigraph, size_limit: int = 20) -> BisectionResult:
    """Minimum crossing edge copies over all bipartitions whose sides
    differ in size by at most one; the witness is the lexicographically
    first optimal side."""
    n = g.n
    if n > size_limit:
        raise SizeLimitError(f"exact bisection needs n <= {size_limit}, got {n}")
    if n == 0:
        return BisectionResult(0, (), ())
    half = n // 2
    verts = list(g.vertices())
    best = None
    best_side = None
    for side in itertools.combinations(verts, half):
        if n % 2 == 0 and 0 not in side:
            continue  # complement yields the same cut; pin vertex 0
        val = boundary_size(g, side)
        if best is None or val < best:
            best, best_side = val, side
    side1 = tuple(best_side)
    side2 = tuple(v for v in verts if v not in best_side)
    return BisectionResult(best, side1, side2)


@dataclass(frozen=True)
class ReductionVerdict:
    bisection_value: int
    bisection_yes: bool
    etw_value: int
    threshold: int
    etw_yes: bool
    agree: bool
    # profile max of the explicit side1 . Q . side2 layout, when the
    # bisection side is a yes-instance
    witness_profile_max: int | None
    witness_ok: bool | None


def verify_reduction(inst: BisectionInstance, exact_limit: int = DEFAULT_EXACT_LIMIT) -> ReductionVerdict:
    """Decide both sides exactly and compare.

    The exact width of the blown-up graph costs 2^(n + n^2) table
    entries, so cores are capped at four vertices; the forward witness
    layout (side1, then the independent set, then side2) is evaluated
    whenever the bisection side holds.
    """
    n = inst.graph.n
    if n not in (2, 4):
        raise SizeLimitError(f"verification is limited to cores of 2 or 4 vertices, got {n}")
    if inst.k > n * n // 2:
        raise ValueError(f"verification requires k <= n^2/2 = {n * n // 2}, got {inst.k}")
    etw_inst = reduce_bisection_to_etw(inst)
    bis = min_bisection_exact(inst.graph)
    bis_yes = bis.value <= inst.k
    cert = width_exact(etw_inst.graph, CostKind.EC, exact_limit=exact_limit)
    etw_yes = cert.value <= etw_inst.threshold
    witness_max = None
    witness_ok = None
    if bis_yes:
        q = tuple(range(n, n + n * n))
        layout = bis.side1 + q + bis.side2
        witness_max = max(cost_profile(etw_inst.graph, layout, CostKind.EC))
        witness_ok = witness_max <= etw_inst.threshold
    return ReductionVerdict(
        bisection_value=bis.value,
        bisection_yes=bis_yes,
        etw_value=cert.value,
        threshold=etw_inst.threshold,
        etw_yes=etw_yes,
        agree=bis_yes == etw_yes,
        witness_profile_max=witness_max,
        witness_ok=witness_ok,
    )
