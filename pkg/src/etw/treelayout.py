"""Tree-layouts: rooted trees with an injective vertex placement where
every edge joins ancestor-related nodes, their v/e cost functions, and
the constructive conversions to and from linear layouts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .blocks import Block, block_decomposition
from .errors import GraphFormatError
from .multigraph import Multigraph, boundary_size, neighborhood
from .widths import CostKind, check_layout, width_exact


@dataclass(frozen=True)
class TreeLayout:
    """Rooted tree (integer nodes, parent map) plus placement of graph
    vertices onto nodes.  Nodes without a placed vertex are allowed."""

    root: int
    parent: dict  # node -> parent node, root absent
    placement: dict  # graph vertex -> node

    def nodes(self) -> list[int]:
        out = {self.root}
        out.update(self.parent)
        out.update(self.parent.values())
        return sorted(out)

    def children(self) -> dict:
        ch: dict[int, list[int]] = {u: [] for u in self.nodes()}
        for node, par in sorted(self.parent.items()):
            ch[par].append(node)
        return ch

    def check_tree(self) -> None:
        """Structural sanity: one root, acyclic parent chains."""
        if self.root in self.parent:
            raise ValueError("root must not have a parent")
        nodes = set(self.nodes())
        for node, par in self.parent.items():
            if par not in nodes:
                raise ValueError(f"parent {par} of node {node} unknown")
        for node in self.parent:
            seen = set()
            cur = node
            while cur != self.root:
                if cur in seen:
                    raise ValueError(f"parent cycle through node {node}")
                seen.add(cur)
                if cur not in self.parent:
                    raise ValueError(f"node {cur} is disconnected from the root")
                cur = self.parent[cur]


@dataclass(frozen=True)
class TreeLayoutVerdict:
    valid: bool
    missing_vertices: tuple[int, ...] = ()
    duplicate_nodes: tuple[int, ...] = ()
    incomparable_edges: tuple[tuple[int, int], ...] = ()


def _depths_and_ancestry(t: TreeLayout):
    depth = {t.root: 0}
    order = [t.root]
    ch = t.children()
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for c in ch[u]:
            depth[c] = depth[u] + 1
            order.append(c)

    def is_ancestor(a: int, b: int) -> bool:
        # a ancestor of b (possibly equal)
        while depth[b] > depth[a]:
            b = t.parent[b]
        return a == b

    return depth, is_ancestor


def validate_tree_layout(g: Multigraph, t: TreeLayout) -> TreeLayoutVerdict:
    """Check injectivity, totality, and that every edge's endpoints map to
    comparable nodes; violations list the offending edges."""
    t.check_tree()
    nodes = set(t.nodes())
    missing = tuple(v for v in g.vertices() if v not in t.placement)
    for v, node in t.placement.items():
        if node not in nodes:
            raise ValueError(f"vertex {v} placed on unknown node {node}")
    used: dict[int, int] = {}
    dupes = set()
    for v in sorted(t.placement):
        node = t.placement[v]
        if node in used:
            dupes.add(node)
        used[node] = v
    bad_edges = []
    if not missing and not dupes:
        _, is_ancestor = _depths_and_ancestry(t)
        for (u, v) in g.pairs():
            a, b = t.placement[u], t.placement[v]
            if not (is_ancestor(a, b) or is_ancestor(b, a)):
                bad_edges.append((u, v))
    return TreeLayoutVerdict(
        valid=not missing and not dupes and not bad_edges,
        missing_vertices=missing,
        duplicate_nodes=tuple(sorted(dupes)),
        incomparable_edges=tuple(bad_edges),
    )


@dataclass(frozen=True)
class TreeCostProfile:
    per_node: dict
    max_value: int


def tree_cost_profile(g: Multigraph, t: TreeLayout, kind: str) -> TreeCostProfile:
    """Per-node cost: for node u with X(u) = vertices placed in u's subtree,
    kind 'v' counts |N(X(u))| and kind 'e' counts |E(X(u))| with
    multiplicity.  The maximum over nodes is the tree-layout's width."""
    if kind not in ("v", "e"):
        raise ValueError("kind must be 'v' or 'e'")
    verdict = validate_tree_layout(g, t)
    if not verdict.valid:
        raise ValueError(f"invalid tree-layout: {verdict}")
    ch = t.children()
    placed_at: dict[int, int] = {node: v for v, node in t.placement.items()}
    # post-order accumulation of subtree vertex sets
    sub: dict[int, set] = {}
    order = []
    stack = [t.root]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(ch[u])
    for u in reversed(order):
        s = set()
        if u in placed_at:
            s.add(placed_at[u])
        for c in ch[u]:
            s |= sub[c]
        sub[u] = s
    per_node = {}
    for u in t.nodes():
        if kind == "e":
            per_node[u] = boundary_size(g, sub[u])
        else:
            per_node[u] = len(neighborhood(g, sub[u]))
    return TreeCostProfile(per_node=per_node, max_value=max(per_node.values(), default=0))


class _Builder:
    """Mutable scratch state for assembling a TreeLayout."""

    def __init__(self):
        self.parent: dict[int, int] = {}
        self.placement: dict[int, int] = {}
        self.next_node = 0

    def new_node(self, parent: int | None) -> int:
        node = self.next_node
        self.next_node += 1
        if parent is not None:
            self.parent[node] = parent
        return node

    def grow_chains(self, g: Multigraph, members: frozenset, pos: dict, parent_node: int):
        """Hang the recursive component chains of ``members`` below
        ``parent_node``: each component contributes its earliest vertex as a
        child node, recursing on the rest of the component."""
        comps = []
        left = set(members)
        while left:
            v = min(left, key=lambda x: pos[x])
            comp = g.component_of(v, within=frozenset(left))
            comps.append((pos[v], v, comp))
            left -= comp
        for _, head, comp in sorted(comps):
            node = self.new_node(parent_node)
            self.placement[head] = node
            rest = comp - {head}
            if rest:
                self.grow_chains(g, frozenset(rest), pos, node)


def layout_to_tree_layout(g: Multigraph, layout: Sequence[int]) -> TreeLayout:
    """Recursive conversion of a layout into a tree-layout.

    The root node carries no vertex; below it, every component hangs from
    its layout-earliest vertex, recursing on the remainder.  The resulting
    e-cost maximum never exceeds the layout's ec profile maximum.
    """
    order = check_layout(g, layout)
    pos = {v: i for i, v in enumerate(order)}
    b = _Builder()
    root = b.new_node(None)
    if g.n:
        b.grow_chains(g, frozenset(g.vertices()), pos, root)
    return TreeLayout(root=root, parent=b.parent, placement=b.placement)


def tree_layout_to_layout(g: Multigraph, t: TreeLayout) -> tuple[int, ...]:
    """Depth-first linearization; children are visited in ascending order
    of the smallest placed vertex in their subtree.  The resulting ec
    profile maximum never exceeds the tree-layout's e-cost maximum."""
    verdict = validate_tree_layout(g, t)
    if not verdict.valid:
        raise ValueError(f"invalid tree-layout: {verdict}")
    ch = t.children()
    placed_at = {node: v for v, node in t.placement.items()}
    INF = float("inf")

    def min_placed(u: int):
        best = placed_at.get(u, INF)
        for c in ch[u]:
            best = min(best, min_placed(c))
        return best

    order: list[int] = []

    def dfs(u: int):
        if u in placed_at:
            order.append(placed_at[u])
        for c in sorted(ch[u], key=lambda c: (min_placed(c), c)):
            dfs(c)

    dfs(t.root)
    return tuple(order)


def _cycle_walk_layout(block: Multigraph, root: int) -> tuple[int, ...]:
    """Walk a cycle block around from the root (2-cycles included)."""
    order = [root]
    prev, cur = None, root
    while len(order) < block.n:
        nxt = min(u for u in block.neighbors(cur) if u != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def _is_cycle(block: Multigraph) -> bool:
    if block.n == 2:
        return block.num_edge_copies() == 2
    return block.n >= 3 and all(block.vdeg(v) == 2 for v in block.vertices()) and all(
        m == 1 for _, m in block.edge_items()
    )


def exact_rooted_solver(block: Multigraph, root: int) -> tuple[int, ...]:
    """Optimal ec layout of a block starting at the given vertex."""
    return width_exact(block, CostKind.EC, root=root).witness


def block_tree_layout(g: Multigraph, rooted_solver: Callable[[Multigraph, int], Sequence[int]] = exact_rooted_solver) -> TreeLayout:
    """Compose per-block rooted layouts along the block tree.

    The block tree is rooted at a leaf block; each block contributes the
    recursive component chains of its rooted layout below the node of its
    entry cut vertex, so the resulting e-cost maximum is bounded by the
    largest per-block rooted ec cost.  Cycle and bridge blocks use the
    closed-walk layout directly instead of calling the solver.
    """
    if not g.is_connected():
        raise ValueError("block tree layout needs a connected graph")
    b = _Builder()
    if g.n == 0:
        root = b.new_node(None)
        return TreeLayout(root=root, parent={}, placement={})
    dec = block_decomposition(g)
    if not dec.blocks:
        # single vertex
        root = b.new_node(None)
        b.placement[0] = root
        return TreeLayout(root=root, parent=b.parent, placement=b.placement)

    blocks_of_vertex: dict[int, list[int]] = {}
    for idx, blk in enumerate(dec.blocks):
        for v in blk.vertex_map:
            blocks_of_vertex.setdefault(v, []).append(idx)

    def solve(blk: Block, entry_parent_vertex: int) -> list[int]:
        local_root = blk.vertex_map.index(entry_parent_vertex)
        if blk.is_bridge:
            local = [local_root, 1 - local_root]
        elif _is_cycle(blk.graph):
            local = list(_cycle_walk_layout(blk.graph, local_root))
        else:
            local = list(rooted_solver(blk.graph, local_root))
            if local[0] != local_root or sorted(local) != list(blk.graph.vertices()):
                raise ValueError("rooted solver returned an invalid block layout")
        return [blk.vertex_map[i] for i in local]

    leaf_blocks = [i for i, blk in enumerate(dec.blocks)
                   if sum(v in dec.cut_vertices for v in blk.vertex_map) <= 1]
    root_block = min(leaf_blocks)
    entry = min(dec.blocks[root_block].vertex_map)

    root_node = b.new_node(None)
    b.placement[entry] = root_node
    node_of = {entry: root_node}
    queue = [(root_block, entry)]
    done = {root_block}
    while queue:
        bi, x = queue.pop(0)
        blk = dec.blocks[bi]
        order = solve(blk, x)
        rest = frozenset(order[1:])
        pos = {v: i for i, v in enumerate(order)}
        if rest:
            b.grow_chains(_restrict(g, blk), rest, pos, node_of[x])
            for v in rest:
                node_of[v] = b.placement[v]
        for v in blk.vertex_map:
            if v in dec.cut_vertices:
                for nb in blocks_of_vertex[v]:
                    if nb not in done:
                        done.add(nb)
                        queue.append((nb, v))
    return TreeLayout(root=root_node, parent=b.parent, placement=b.placement)


def _restrict(g: Multigraph, blk: Block) -> Multigraph:
    """The block as a parent-id graph (connectivity queries during growth)."""
    pairs = []
    for (lu, lv), m in blk.graph.edge_items():
        pairs.append((blk.vertex_map[lu], blk.vertex_map[lv], m))
    return Multigraph(g.n, pairs)


# -- tree-layout text format --------------------------------------------


def serialize_tree_layout(t: TreeLayout) -> bytes:
    lines = [f"r {t.root}"]
    lines += [f"p {node} {par}" for node, par in sorted(t.parent.items())]
    lines += [f"m {v} {node}" for v, node in sorted(t.placement.items())]
    return "\n".join(lines).encode()


def parse_tree_layout(data: bytes | str) -> TreeLayout:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    root = None
    parent: dict[int, int] = {}
    placement: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            args = [int(x) for x in fields[1:]]
        except ValueError:
            raise GraphFormatError(f"bad integer in {line!r}", lineno) from None
        if fields[0] == "r" and len(args) == 1:
            if root is not None:
                raise GraphFormatError("duplicate root line", lineno)
            root = args[0]
        elif fields[0] == "p" and len(args) == 2:
            if args[0] in parent:
                raise GraphFormatError(f"duplicate parent for node {args[0]}", lineno)
            parent[args[0]] = args[1]
        elif fields[0] == "m" and len(args) == 2:
            if args[0] in placement:
                raise GraphFormatError(f"duplicate placement for vertex {args[0]}", lineno)
            placement[args[0]] = args[1]
        else:
            raise GraphFormatError(f"unknown directive {line!r}", lineno)
    if root is None:
        raise GraphFormatError("missing 'r <node>' line")
    t = TreeLayout(root=root, parent=parent, placement=placement)
    t.check_tree()
    return t
