"""The four layout cost functions and the exact width engine.

A layout is a permutation of the vertices; at position i with suffix set
S_i = {x_i, ..., x_n} the cost is

    v  : |N(S_i)|            vc : |N(C(S_i, x_i))|
    e  : |E(S_i)|            ec : |E(C(S_i, x_i))|

where C(S, x) is the component of x in the induced subgraph on S and
edge counts include multiplicity.  Minimizing the profile maximum over
all layouts yields pathwidth, treewidth, cutwidth and edge-treewidth
respectively.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import _dpcore
from .errors import SizeLimitError
from .multigraph import Multigraph, boundary_size, neighborhood

DEFAULT_EXACT_LIMIT = 22


class CostKind(enum.Enum):
    V = "v"
    VC = "vc"
    E = "e"
    EC = "ec"

    @property
    def component_based(self) -> bool:
        return self in (CostKind.VC, CostKind.EC)

    @property
    def counts_edges(self) -> bool:
        return self in (CostKind.E, CostKind.EC)


_KIND_CODE = {
    CostKind.V: _dpcore.KIND_V,
    CostKind.VC: _dpcore.KIND_VC,
    CostKind.E: _dpcore.KIND_E,
    CostKind.EC: _dpcore.KIND_EC,
}

# width parameter name -> cost kind inducing it
PARAM_KINDS = {
    "pw": CostKind.V,
    "tw": CostKind.VC,
    "cw": CostKind.E,
    "etw": CostKind.EC,
}


@dataclass(frozen=True)
class WidthCertificate:
    value: int
    witness: tuple[int, ...]
    kind: CostKind
    rooted_at: int | None = None


def check_layout(g: Multigraph, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(g.vertices()):
        raise ValueError("layout is not a permutation of the vertex set")
    return order


def position_cost(g: Multigraph, suffix: frozenset | set, first: int, kind: CostKind) -> int:
    """Cost of one layout position given its suffix set and first vertex."""
    if kind.component_based:
        ref = g.component_of(first, within=frozenset(suffix))
    else:
        ref = suffix
    if kind.counts_edges:
        return boundary_size(g, ref)
    return len(neighborhood(g, ref))


def cost_profile(g: Multigraph, layout: Sequence[int], kind: CostKind) -> tuple[int, ...]:
    """The per-position cost sequence of a layout."""
    order = check_layout(g, layout)
    suffix = set(order)
    out = []
    for x in order:
        out.append(position_cost(g, suffix, x, kind))
        suffix.remove(x)
    return tuple(out)


def _greedy_layout(g: Multigraph, kind: CostKind, root: int | None) -> tuple[int, ...]:
    """Append the cheapest next vertex, lowest id on ties."""
    remaining = set(g.vertices())
    order = []
    if root is not None:
        order.append(root)
        remaining.discard(root)
    while remaining:
        suffix = frozenset(remaining)
        best = min(sorted(remaining), key=lambda x: position_cost(g, suffix, x, kind))
        order.append(best)
        remaining.remove(best)
    return tuple(order)


def _layout_from_table(g, F, kind, root):
    """Greedy walk of the DP table; ties resolved toward the lowest vertex."""
    order: list[int] = []
    remaining = set(g.vertices())
    if root is not None:
        order.append(root)
        remaining.remove(root)
    while remaining:
        suffix = frozenset(remaining)
        best_v, best_key = None, None
        for x in sorted(remaining):
            mask = 0
            for y in remaining:
                if y != x:
                    mask |= 1 << y
            key = max(position_cost(g, suffix, x, kind), int(F[mask]))
            if best_key is None or key < best_key:
                best_v, best_key = x, key
        order.append(best_v)
        remaining.remove(best_v)
    return tuple(order)


def _solve_table(g: Multigraph, kind: CostKind):
    adj, mult = _dpcore.graph_arrays(g)
    return _dpcore.solve_table(g.n, adj, mult, _KIND_CODE[kind])


def _branch_and_bound(g: Multigraph, kind: CostKind, root: int | None) -> tuple[int, tuple[int, ...]]:
    """Exact search seeded by the greedy bound.

    A state is the set of unplaced vertices plus the running profile max;
    since every position cost depends only on the suffix set and its
    first vertex, a state revisited with an equal-or-larger running max
    is dominated and pruned.
    """
    seed = _greedy_layout(g, kind, root)
    best_val = max(cost_profile(g, seed, kind), default=0)
    best_layout = seed
    full = frozenset(g.vertices())
    visited: dict[frozenset, int] = {}

    def descend(remaining: frozenset, running: int, prefix: list[int]):
        nonlocal best_val, best_layout
        if running >= best_val:
            return
        if not remaining:
            best_val = running
            best_layout = tuple(prefix)
            return
        seen = visited.get(remaining)
        if seen is not None and seen <= running:
            return
        visited[remaining] = running
        ranked = sorted(
            remaining,
            key=lambda x: (position_cost(g, remaining, x, kind), x),
        )
        for x in ranked:
            c = position_cost(g, remaining, x, kind)
            prefix.append(x)
            descend(remaining - {x}, max(running, c), prefix)
            prefix.pop()

    if root is None:
        descend(full, 0, [])
    else:
        c = position_cost(g, full, root, kind)
        descend(full - {root}, c, [root])
    return best_val, best_layout


def width_exact(
    g: Multigraph,
    kind: CostKind,
    root: int | None = None,
    mode: str = "dp",
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> WidthCertificate:
    """Exact width (modes ``dp`` and ``branch_and_bound``) or a greedy
    upper bound (mode ``greedy_upper``), each with a witnessing layout.

    A root pins the first vertex of the layout.  The empty-profile
    maximum is 0, so the empty graph has every width 0.
    """
    if mode not in ("dp", "branch_and_bound", "greedy_upper"):
        raise ValueError(f"unknown mode {mode!r}")
    if root is not None and not (0 <= root < g.n):
        raise ValueError(f"root {root} is not a vertex")
    if g.n == 0:
        return WidthCertificate(0, (), kind, root)
    if mode == "greedy_upper":
        witness = _greedy_layout(g, kind, root)
        value = max(cost_profile(g, witness, kind))
        return WidthCertificate(value, witness, kind, root)
    if g.n > exact_limit:
        raise SizeLimitError(
            f"exact width needs n <= {exact_limit}, got n = {g.n}"
        )
    if mode == "branch_and_bound":
        value, witness = _branch_and_bound(g, kind, root)
    else:
        F = _solve_table(g, kind)
        full_mask = (1 << g.n) - 1
        if root is None:
            value = int(F[full_mask])
        else:
            first = position_cost(g, frozenset(g.vertices()), root, kind)
            value = max(first, int(F[full_mask ^ (1 << root)]))
        witness = _layout_from_table(g, F, kind, root)
    achieved = max(cost_profile(g, witness, kind))
    if achieved != value:
        raise AssertionError(
            f"witness profile max {achieved} does not match value {value}"
        )
    return WidthCertificate(value, witness, kind, root)
