"""Atomic graph rewrites, multigraph isomorphism via canonical codes, and
the breadth-first containment oracles for the four relations.

Each relation is decided in the literal two-phase order of its
definition: first every subgraph (vertex and edge-copy deletions), then
the closure under the relation's own second-phase operation
(dissolution, contraction, lifting, or degree-(2,2) contraction).
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Union

from .errors import BudgetExceeded, SizeLimitError, StepError
from .multigraph import Multigraph

DEFAULT_ISO_LIMIT = 10
DEFAULT_BFS_BUDGET = 2_000_000


# -- rewrite steps -------------------------------------------------------


@dataclass(frozen=True)
class DeleteVertex:
    v: int


@dataclass(frozen=True)
class DeleteEdgeCopy:
    u: int
    v: int


@dataclass(frozen=True)
class Dissolve:
    """Remove a vertex of vertex- and edge-degree two, joining its two
    neighbors (multiplicity grows if the pair already exists)."""

    v: int


@dataclass(frozen=True)
class Contract:
    """Identify the endpoints of an edge; copies of the contracted pair
    vanish, multiplicities toward common neighbors add up."""

    u: int
    v: int


@dataclass(frozen=True)
class WtpContract:
    """Contract an edge whose endpoints both have vertex-degree two and
    edge-degree two."""

    u: int
    v: int


@dataclass(frozen=True)
class Lift:
    """Replace one copy each of {x, y} and {x, z} (y != z) by one copy
    of {y, z}."""

    x: int
    y: int
    z: int


RewriteStep = Union[DeleteVertex, DeleteEdgeCopy, Dissolve, Contract, WtpContract, Lift]


class Relation(enum.Enum):
    MINOR = "mn"
    TOPOLOGICAL_MINOR = "tp"
    IMMERSION = "im"
    WEAK_TOPOLOGICAL_MINOR = "wtp"


def _renumber(n: int, removed: set, merged_into: dict, mult: dict) -> Multigraph:
    keep = [x for x in range(n) if x not in removed]
    new_id = {x: i for i, x in enumerate(keep)}
    edges = []
    for (u, v), m in mult.items():
        nu, nv = new_id[merged_into.get(u, u)], new_id[merged_into.get(v, v)]
        if nu != nv:
            edges.append((nu, nv, m))
    return Multigraph(len(keep), edges)


def _contract(g: Multigraph, u: int, v: int) -> Multigraph:
    keep = min(u, v)
    drop = max(u, v)
    mult: dict[tuple[int, int], int] = {}
    for (a, b), m in g.edge_items():
        a2 = keep if a == drop else a
        b2 = keep if b == drop else b
        if a2 == b2:
            continue  # copies of the contracted pair vanish (loop-free)
        key = (a2, b2) if a2 < b2 else (b2, a2)
        mult[key] = mult.get(key, 0) + m
    return _renumber(g.n, {drop}, {}, mult)


def apply_step(g: Multigraph, step: RewriteStep) -> Multigraph:
    """Apply one rewrite, checking its precondition; vertices are
    renumbered densely in the result."""
    if isinstance(step, DeleteVertex):
        v = step.v
        if not (0 <= v < g.n):
            raise StepError(f"delete-vertex: {v} is not a vertex")
        mult = {p: m for p, m in g.edge_items() if v not in p}
        return _renumber(g.n, {v}, {}, mult)
    if isinstance(step, DeleteEdgeCopy):
        u, v = min(step.u, step.v), max(step.u, step.v)
        m = g.multiplicity(u, v)
        if m == 0:
            raise StepError(f"delete-edge: no edge ({u},{v})")
        mult = dict(g.edge_items())
        if m == 1:
            del mult[(u, v)]
        else:
            mult[(u, v)] = m - 1
        return _renumber(g.n, set(), {}, mult)
    if isinstance(step, Dissolve):
        v = step.v
        if not (0 <= v < g.n):
            raise StepError(f"dissolve: {v} is not a vertex")
        if g.vdeg(v) != 2 or g.edeg(v) != 2:
            raise StepError(
                f"dissolve: vertex {v} has (vdeg, edeg) = ({g.vdeg(v)}, {g.edeg(v)}), needs (2, 2)"
            )
        a, b = g.neighbors(v)
        mult = {p: m for p, m in g.edge_items() if v not in p}
        key = (a, b)
        mult[key] = mult.get(key, 0) + 1
        return _renumber(g.n, {v}, {}, mult)
    if isinstance(step, Contract):
        u, v = step.u, step.v
        if not g.has_edge(u, v):
            raise StepError(f"contract: no edge ({u},{v})")
        return _contract(g, u, v)
    if isinstance(step, WtpContract):
        u, v = step.u, step.v
        if not g.has_edge(u, v):
            raise StepError(f"wtp-contract: no edge ({u},{v})")
        for x in (u, v):
            if g.vdeg(x) != 2 or g.edeg(x) != 2:
                raise StepError(
                    f"wtp-contract: endpoint {x} has (vdeg, edeg) = "
                    f"({g.vdeg(x)}, {g.edeg(x)}), needs (2, 2)"
                )
        return _contract(g, u, v)
    if isinstance(step, Lift):
        x, y, z = step.x, step.y, step.z
        if y == z:
            raise StepError("lift: the two incident edges must differ in endpoint")
        if not g.has_edge(x, y) or not g.has_edge(x, z):
            raise StepError(f"lift: needs edges ({x},{y}) and ({x},{z})")
        mult = dict(g.edge_items())

        def dec(a, b):
            key = (a, b) if a < b else (b, a)
            if mult[key] == 1:
                del mult[key]
            else:
                mult[key] -= 1

        dec(x, y)
        dec(x, z)
        key = (y, z) if y < z else (z, y)
        mult[key] = mult.get(key, 0) + 1
        return _renumber(g.n, set(), {}, mult)
    raise TypeError(f"unknown rewrite step {step!r}")


def deletion_steps(g: Multigraph) -> list[RewriteStep]:
    steps: list[RewriteStep] = [DeleteVertex(v) for v in g.vertices()]
    steps += [DeleteEdgeCopy(u, v) for (u, v) in g.pairs()]
    return steps


def second_phase_steps(g: Multigraph, relation: Relation) -> list[RewriteStep]:
    if relation is Relation.TOPOLOGICAL_MINOR:
        return [Dissolve(v) for v in g.vertices() if g.vdeg(v) == 2 and g.edeg(v) == 2]
    if relation is Relation.MINOR:
        return [Contract(u, v) for (u, v) in g.pairs()]
    if relation is Relation.WEAK_TOPOLOGICAL_MINOR:
        return [
            WtpContract(u, v)
            for (u, v) in g.pairs()
            if g.vdeg(u) == 2 and g.edeg(u) == 2 and g.vdeg(v) == 2 and g.edeg(v) == 2
        ]
    if relation is Relation.IMMERSION:
        out = []
        for x in g.vertices():
            nb = g.neighbors(x)
            for y, z in itertools.combinations(nb, 2):
                out.append(Lift(x, y, z))
        return out
    raise TypeError(f"unknown relation {relation!r}")


def legal_steps(g: Multigraph, relation: Relation) -> list[RewriteStep]:
    """Deletions plus the relation's second-phase steps, all applicable."""
    return deletion_steps(g) + second_phase_steps(g, relation)


# -- canonical codes -----------------------------------------------------


def _vertex_profiles(g: Multigraph) -> list:
    """Isomorphism-invariant vertex keys: own degrees refined once by the
    multiset of (neighbor degrees, multiplicity)."""
    base = [(g.edeg(v), g.vdeg(v)) for v in g.vertices()]
    refined = []
    for v in g.vertices():
        around = sorted((base[u], g.multiplicity(v, u)) for u in g.neighbors(v))
        refined.append((base[v], tuple(around)))
    return refined


def canonical_code(g: Multigraph, iso_limit: int = DEFAULT_ISO_LIMIT) -> bytes:
    """Minimal upper-triangle multiplicity encoding over all relabelings.

    Vertices are pre-partitioned by degree profile; only orderings
    grouping equal profiles together are enumerated, with lexicographic
    prefix pruning.  Equal codes hold exactly for isomorphic graphs.
    """
    if g.n > iso_limit:
        raise SizeLimitError(f"canonical code needs n <= {iso_limit}, got {g.n}")
    n = g.n
    if n == 0:
        return b"0;"
    profiles = _vertex_profiles(g)
    groups: dict = {}
    for v in g.vertices():
        groups.setdefault(profiles[v], []).append(v)
    # profile classes in a fixed invariant order define the position blocks
    classes = [groups[k] for k in sorted(groups)]
    best: list[int] | None = None

    def rows_for(order: list[int]) -> list[int]:
        row = []
        last = order[-1]
        for u in order[:-1]:
            row.append(g.multiplicity(u, last))
        return row

    def backtrack(order: list[int], prefix: list[int], pending: list[list[int]]):
        nonlocal best
        if best is not None:
            # prefix pruning against the best complete code
            blen = len(prefix)
            if best[:blen] < prefix:
                return
        if not pending:
            if best is None or prefix < best:
                best = list(prefix)
            return
        head = pending[0]
        rest = pending[1:]
        for i, v in enumerate(head):
            remaining = head[:i] + head[i + 1 :]
            order.append(v)
            row = rows_for(order)
            nxt = rest if not remaining else [remaining] + rest
            backtrack(order, prefix + row, nxt)
            order.pop()

    backtrack([], [], [c[:] for c in classes])
    body = ",".join(str(x) for x in best)
    return f"{n};{body}".encode()


def isomorphic(g: Multigraph, h: Multigraph, iso_limit: int = DEFAULT_ISO_LIMIT) -> bool:
    if g.n != h.n or g.num_edge_copies() != h.num_edge_copies():
        return False
    return canonical_code(g, iso_limit) == canonical_code(h, iso_limit)


# -- weak subdivision ----------------------------------------------------


def weak_subdivision(g: Multigraph) -> Multigraph:
    """Subdivide once every edge copy whose endpoints both have
    edge-degree at least three; fresh vertices are appended after the
    existing ids, in sorted pair order."""
    edeg = [g.edeg(v) for v in g.vertices()]
    edges = []
    nxt = g.n
    for (u, v), m in g.edge_items():
        if edeg[u] >= 3 and edeg[v] >= 3:
            for _ in range(m):
                edges.append((u, nxt, 1))
                edges.append((nxt, v, 1))
                nxt += 1
        else:
            edges.append((u, v, m))
    return Multigraph(nxt, edges)


# -- containment oracle --------------------------------------------------


def contains(
    h: Multigraph,
    g: Multigraph,
    relation: Relation,
    bfs_budget: int = DEFAULT_BFS_BUDGET,
    iso_limit: int = DEFAULT_ISO_LIMIT,
) -> bool:
    """Decide H <= G under the relation by breadth-first closure over
    canonical codes: phase 1 explores deletions, phase 2 the relation's
    second-phase operation.  States dropping below H's vertex or
    edge-copy count are pruned (both phases only shrink those counts).

    Raises BudgetExceeded (indeterminate) when the state budget or the
    isomorphism size limit is hit, never returning a false negative.
    """
    if h.n > g.n or h.num_edge_copies() > g.num_edge_copies():
        return False
    if g.n > iso_limit:
        raise BudgetExceeded(
            f"host graph exceeds the isomorphism limit ({g.n} > {iso_limit})"
        )
    target = canonical_code(h, iso_limit)
    nh, mh = h.n, h.num_edge_copies()
    states = 0

    def viable(x: Multigraph) -> bool:
        return x.n >= nh and x.num_edge_copies() >= mh

    # phase 1: subgraph closure
    start_code = canonical_code(g, iso_limit)
    if start_code == target:
        return True
    phase1: list[tuple[Multigraph, bytes]] = [(g, start_code)]
    seen1 = {start_code}
    queue = deque([g])
    while queue:
        x = queue.popleft()
        for step in deletion_steps(x):
            y = apply_step(x, step)
            if not viable(y):
                continue
            code = canonical_code(y, iso_limit)
            if code in seen1:
                continue
            if code == target:
                return True
            seen1.add(code)
            states += 1
            if states > bfs_budget:
                raise BudgetExceeded(f"containment search exceeded {bfs_budget} states")
            phase1.append((y, code))
            queue.append(y)

    # phase 2: closure under the relation's second operation
    seen2 = set(code for _, code in phase1)
    queue2 = deque(phase1)
    while queue2:
        x, _ = queue2.popleft()
        for step in second_phase_steps(x, relation):
            y = apply_step(x, step)
            if not viable(y):
                continue
            code = canonical_code(y, iso_limit)
            if code in seen2:
                continue
            if code == target:
                return True
            seen2.add(code)
            states += 1
            if states > bfs_budget:
                raise BudgetExceeded(f"containment search exceeded {bfs_budget} states")
            queue2.append((y, code))
    return False
