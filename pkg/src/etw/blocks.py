"""Block decomposition: bridges, maximal 2-connected subgraphs, cut
vertices and the bipartite block tree."""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import Multigraph


@dataclass(frozen=True)
class Block:
    """One block as its own dense multigraph plus the map back to parent ids.

    A block is a bridge only when it is a single pair of multiplicity 1;
    a doubled pair is a 2-cycle and counts as 2-connected.
    """

    graph: Multigraph
    vertex_map: tuple[int, ...]
    is_bridge: bool


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset
    # bipartite tree edges between ("block", index) and ("cut", vertex) nodes
    tree_edges: tuple[tuple[tuple[str, int], tuple[str, int]], ...]


def _block_edge_groups(g: Multigraph) -> list[list[tuple[int, int]]]:
    """Partition distinct pairs into blocks (Hopcroft-Tarjan, iterative).

    Vertex 2-connectivity ignores multiplicity, so the sweep runs on the
    underlying simple graph; multiplicities rejoin the groups later.
    """
    groups: list[list[tuple[int, int]]] = []
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    for start in g.vertices():
        if start in disc or not g.neighbors(start):
            continue
        disc[start] = low[start] = len(disc)
        edge_stack: list[tuple[int, int]] = []
        stack = [(start, start, iter(g.neighbors(start)))]
        while stack:
            parent, v, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    if disc[w] < disc[v]:
                        low[v] = min(low[v], disc[w])
                        edge_stack.append((v, w))
                    continue
                disc[w] = low[w] = len(disc)
                edge_stack.append((v, w))
                stack.append((v, w, iter(g.neighbors(w))))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if stack:
                _, u, _ = stack[-1]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    group = []
                    while edge_stack:
                        e = edge_stack.pop()
                        group.append(e)
                        if e == (u, v):
                            break
                    groups.append(group)
    return groups


def block_decomposition(g: Multigraph) -> BlockDecomposition:
    """Blocks, cut vertices and the block tree.

    Blocks partition the edge copies; isolated vertices belong to no
    block.  Cut vertices are exactly the vertices lying in two or more
    blocks.  In the block tree a block node is adjacent to the cut-vertex
    nodes of the cut vertices it contains.
    """
    norm = []
    for group in _block_edge_groups(g):
        pairs = sorted({(min(u, v), max(u, v)) for (u, v) in group})
        norm.append(pairs)
    norm.sort()
    blocks = []
    membership: dict[int, list[int]] = {}
    for idx, pairs in enumerate(norm):
        verts = sorted({x for p in pairs for x in p})
        local = {x: i for i, x in enumerate(verts)}
        edges = [(local[u], local[v], g.multiplicity(u, v)) for (u, v) in pairs]
        bg = Multigraph(len(verts), edges)
        is_bridge = len(pairs) == 1 and g.multiplicity(*pairs[0]) == 1
        blocks.append(Block(graph=bg, vertex_map=tuple(verts), is_bridge=is_bridge))
        for x in verts:
            membership.setdefault(x, []).append(idx)
    cut = frozenset(v for v, bs in membership.items() if len(bs) >= 2)
    tree_edges = []
    for idx, blk in enumerate(blocks):
        for v in blk.vertex_map:
            if v in cut:
                tree_edges.append((("block", idx), ("cut", v)))
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=cut,
        tree_edges=tuple(tree_edges),
    )


def is_biconnected(g: Multigraph) -> bool:
    """Connected, at least two vertices, and free of cut vertices."""
    if g.n < 2 or not g.is_connected():
        return False
    dec = block_decomposition(g)
    return len(dec.blocks) == 1 and len(dec.blocks[0].vertex_map) == g.n


def _is_cycle_block(b: Block) -> bool:
    bg = b.graph
    if bg.n == 2:
        return bg.num_edge_copies() == 2
    return (
        bg.n >= 3
        and all(m == 1 for _, m in bg.edge_items())
        and all(bg.vdeg(v) == 2 for v in bg.vertices())
    )


def is_cactus(g: Multigraph) -> bool:
    """Every block is a bridge or a cycle (a doubled pair counts as C2)."""
    dec = block_decomposition(g)
    return all(b.is_bridge or _is_cycle_block(b) for b in dec.blocks)
