"""Named graph family generators, the fixed obstruction sets for widths
one and two, the one-step minimality check, and the layered containment
parameter over the default five-family antichain."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import BudgetExceeded
from .multigraph import Multigraph
from .rewrites import (
    DEFAULT_BFS_BUDGET,
    DEFAULT_ISO_LIMIT,
    Relation,
    apply_step,
    contains,
    legal_steps,
    weak_subdivision,
)
from .widths import DEFAULT_EXACT_LIMIT, CostKind, width_exact


# -- elementary families -------------------------------------------------


def path(i: int) -> Multigraph:
    """Path on i vertices."""
    _need(i >= 1, "path", i)
    return Multigraph(i, [(k, k + 1) for k in range(i - 1)])


def cycle(i: int) -> Multigraph:
    """Cycle on i vertices; C2 is the doubled pair."""
    _need(i >= 2, "cycle", i)
    if i == 2:
        return Multigraph(2, [(0, 1, 2)])
    return Multigraph(i, [(k, (k + 1) % i) for k in range(i)])


def star(i: int) -> Multigraph:
    """K_{1,i}: center 0 with i leaves."""
    _need(i >= 1, "star", i)
    return Multigraph(i + 1, [(0, k) for k in range(1, i + 1)])


def binary_tree(i: int) -> Multigraph:
    """Complete binary tree of height i (2^(i+1) - 1 vertices)."""
    _need(i >= 0, "binary-tree", i)
    n = (1 << (i + 1)) - 1
    return Multigraph(n, [((k - 1) // 2, k) for k in range(1, n)])


def theta(i: int) -> Multigraph:
    """Two poles joined by i parallel edges."""
    _need(i >= 1, "theta", i)
    return Multigraph(2, [(0, 1, i)])


def fan(i: int) -> Multigraph:
    """Path on i vertices plus a universal vertex (vertex i)."""
    _need(i >= 1, "fan", i)
    edges = [(k, k + 1) for k in range(i - 1)]
    edges += [(k, i) for k in range(i)]
    return Multigraph(i + 1, edges)


def tilde_fan(i: int) -> Multigraph:
    """Fan with every edge between two vertices of vertex-degree exactly
    three subdivided once."""
    _need(i >= 1, "tilde-fan", i)
    g = fan(i)
    deg = [g.vdeg(v) for v in g.vertices()]
    edges = []
    nxt = g.n
    for (u, v), m in g.edge_items():
        if deg[u] == 3 and deg[v] == 3:
            for _ in range(m):
                edges.append((u, nxt, 1))
                edges.append((nxt, v, 1))
                nxt += 1
        else:
            edges.append((u, v, m))
    return Multigraph(nxt, edges)


def grid(i: int) -> Multigraph:
    """The (i x i)-grid."""
    _need(i >= 1, "grid", i)
    return _grid(i, i)


def _grid(k: int, r: int) -> Multigraph:
    def vid(x, y):
        return (x - 1) * r + (y - 1)

    edges = []
    for x in range(1, k + 1):
        for y in range(1, r + 1):
            if x + 1 <= k:
                edges.append((vid(x, y), vid(x + 1, y)))
            if y + 1 <= r:
                edges.append((vid(x, y), vid(x, y + 1)))
    return Multigraph(k * r, edges)


def wall(r: int) -> Multigraph:
    """The r-wall: a (2r x r)-grid with the vertical edges at odd x+y
    removed and degree-one vertices pruned."""
    _need(r >= 2, "wall", r)
    verts = [(x, y) for x in range(1, 2 * r + 1) for y in range(1, r + 1)]
    edges = set()
    for (x, y) in verts:
        if x + 1 <= 2 * r:
            edges.add(((x, y), (x + 1, y)))
        if y + 1 <= r and (x + y) % 2 == 0:
            edges.add(((x, y), (x, y + 1)))
    alive = set(verts)
    while True:
        deg = {v: 0 for v in alive}
        for (a, b) in edges:
            if a in alive and b in alive:
                deg[a] += 1
                deg[b] += 1
        drop = {v for v in alive if deg[v] <= 1}
        if not drop:
            break
        alive -= drop
    order = sorted(alive, key=lambda p: (p[1], p[0]))
    idx = {p: i for i, p in enumerate(order)}
    return Multigraph(
        len(order),
        [(idx[a], idx[b]) for (a, b) in sorted(edges) if a in alive and b in alive],
    )


def dot_theta(i: int) -> Multigraph:
    return weak_subdivision(theta(i))


def dot_fan(i: int) -> Multigraph:
    return weak_subdivision(fan(i))


def dot_wall(r: int) -> Multigraph:
    return weak_subdivision(wall(r))


def z2(j: int) -> Multigraph:
    """Two poles joined by three internally disjoint paths, j-1 of length
    two and 4-j of length one."""
    _need(1 <= j <= 4, "z2", j)
    edges = []
    nxt = 2
    for p in range(3):
        if p < j - 1:
            edges.append((0, nxt, 1))
            edges.append((nxt, 1, 1))
            nxt += 1
        else:
            edges.append((0, 1, 1))
    return Multigraph(nxt, edges)


def z3(n: int) -> Multigraph:
    """The n-cycle with every edge duplicated once."""
    _need(n >= 2, "z3", n)
    if n == 2:
        return Multigraph(2, [(0, 1, 4)])
    return Multigraph(n, [(k, (k + 1) % n, 2) for k in range(n)])


def g_tight(index: int) -> Multigraph:
    """Index 3+i: two adjacent centers each rooting a complete (i+1)-ary
    tree of depth i, a hub adjacent to all leaves, every pair at
    multiplicity i+2.  The tree has diameter 2i+1 and internal
    vertex-degree i+2."""
    _need(index >= 4, "g-tight", index)
    i = index - 3
    mult = i + 2
    fanout = i + 1
    pairs = [(0, 1)]
    level = [(0,), (1,)]
    nodes = [[0], [1]]
    nxt = 2
    for _depth in range(i):
        new_nodes = [[], []]
        for side in (0, 1):
            for parent in nodes[side]:
                for _ in range(fanout):
                    pairs.append((parent, nxt))
                    new_nodes[side].append(nxt)
                    nxt += 1
        nodes = new_nodes
    hub = nxt
    nxt += 1
    for side in (0, 1):
        for leaf in nodes[side]:
            pairs.append((leaf, hub))
    return Multigraph(nxt, [(u, v, mult) for (u, v) in pairs])


def theta_bouquet(i: int) -> Multigraph:
    """One triple edge to a shared center per edge of the i-wall."""
    _need(i >= 2, "theta-bouquet", i)
    k = len(wall(i).pairs())
    return Multigraph(k + 1, [(0, j, 3) for j in range(1, k + 1)])


def _need(ok: bool, family: str, i: int) -> None:
    if not ok:
        raise ValueError(f"index {i} out of range for family {family!r}")


FAMILIES: dict[str, Callable[[int], Multigraph]] = {
    "cycle": cycle,
    "path": path,
    "star": star,
    "binary-tree": binary_tree,
    "grid": grid,
    "wall": wall,
    "dot-wall": dot_wall,
    "theta": theta,
    "dot-theta": dot_theta,
    "fan": fan,
    "tilde-fan": tilde_fan,
    "dot-fan": dot_fan,
    "z2": z2,
    "z3": z3,
    "g-tight": g_tight,
    "theta-bouquet": theta_bouquet,
}


def generate(family: str, i: int) -> Multigraph:
    """Deterministically labeled member i of a named family."""
    try:
        gen = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return gen(i)


# -- non-closure witness pairs -------------------------------------------


def nonclosure_immersion_pair() -> tuple[Multigraph, Multigraph]:
    """(host, contained): the contained graph is an immersion of the host
    yet has strictly larger edge-treewidth (3 vs 4).

    Host: apex over three path vertices whose two path edges are doubled;
    lifting one doubled pair at the middle vertex yields K4.
    """
    host = Multigraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 2), (2, 3, 2)])
    k4 = Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    return host, k4


def nonclosure_topminor_pair() -> tuple[Multigraph, Multigraph]:
    """(host, contained): the contained graph is a topological minor of
    the host yet has strictly larger edge-treewidth (6 vs 8).

    Host: a six-cycle with a center triple-joined to alternating rim
    vertices; dissolving the other three rim vertices leaves a triangle
    with the triple-joined center.
    """
    host = Multigraph(
        7,
        [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (0, 5, 1),
         (1, 6, 3), (3, 6, 3), (5, 6, 3)],
    )
    contained = Multigraph(
        4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 3), (1, 3, 3), (2, 3, 3)]
    )
    return host, contained


# -- obstruction machinery -----------------------------------------------


def fixed_obstruction_set(k: int) -> tuple[Multigraph, ...]:
    """The finite obstruction sets: {C2} at width one, the four z2 graphs
    at width two.  The set at width three is infinite, so k=3 is refused."""
    if k == 1:
        return (cycle(2),)
    if k == 2:
        return tuple(z2(j) for j in (1, 2, 3, 4))
    if k == 3:
        raise ValueError("the obstruction set at width 3 is infinite")
    raise ValueError(f"no fixed obstruction set for k={k}")


def minimality_check(h: Multigraph, k: int, exact_limit: int = DEFAULT_EXACT_LIMIT) -> bool:
    """True iff h is a minimal obstruction at threshold k: its width
    exceeds k while every single reduction step drops to k or below (one
    step suffices because the width never grows along reductions)."""
    if width_exact(h, CostKind.EC, exact_limit=exact_limit).value <= k:
        return False
    for step in legal_steps(h, Relation.WEAK_TOPOLOGICAL_MINOR):
        reduced = apply_step(h, step)
        if width_exact(reduced, CostKind.EC, exact_limit=exact_limit).value > k:
            return False
    return True


# -- layered universal obstructions ----------------------------------------


@dataclass(frozen=True)
class AntichainSpec:
    """Ordered parameterized families; layer i holds each family's member
    of index 3+i."""

    members: tuple[tuple[str, Callable[[int], Multigraph]], ...]

    def layer(self, i: int) -> list[tuple[str, Multigraph]]:
        return [(name, gen(3 + i)) for name, gen in self.members]


DEFAULT_ANTICHAIN = AntichainSpec(
    members=(
        ("theta", theta),
        ("dot-theta", dot_theta),
        ("tilde-fan", tilde_fan),
        ("dot-fan", dot_fan),
        ("dot-wall", dot_wall),
    )
)


def universal_p(
    g: Multigraph,
    max_layer: int,
    spec: AntichainSpec = DEFAULT_ANTICHAIN,
    bfs_budget: int = DEFAULT_BFS_BUDGET,
    iso_limit: int = DEFAULT_ISO_LIMIT,
) -> int:
    """Largest layer index whose members reach into g under the weak
    topological minor relation; 0 when none does.  Layers are scanned
    from the top; an indeterminate containment that could still change
    the answer raises BudgetExceeded."""
    if max_layer < 0:
        raise ValueError("max_layer must be non-negative")
    for i in range(max_layer, -1, -1):
        pending_error = None
        for _name, member in spec.layer(i):
            if member.n > g.n or member.num_edge_copies() > g.num_edge_copies():
                continue
            try:
                if contains(member, g, Relation.WEAK_TOPOLOGICAL_MINOR,
                            bfs_budget=bfs_budget, iso_limit=iso_limit):
                    return i
            except BudgetExceeded as exc:
                pending_error = exc
        if pending_error is not None:
            raise pending_error
    return 0
