"""Shared test utilities: independent oracles (kept deliberately separate
from the package's own code paths) and seeded random graph generators."""

from __future__ import annotations

import itertools

import numpy as np
from numba import njit

from etw.multigraph import Multigraph


def mk(n, edges):
    return Multigraph(n, edges)


# -- independent layout-cost oracle (pure python, from the definitions) --


def oracle_position_cost(g: Multigraph, suffix: set, first: int, kind: str) -> int:
    # component of `first` inside the induced subgraph on `suffix`
    comp = {first}
    stack = [first]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in suffix and y not in comp:
                comp.add(y)
                stack.append(y)
    ref = comp if kind in ("vc", "ec") else set(suffix)
    if kind in ("e", "ec"):
        total = 0
        for (u, v), m in g.edge_items():
            if (u in ref) != (v in ref):
                total += m
        return total
    seen = set()
    for v in ref:
        for u in g.neighbors(v):
            if u not in ref:
                seen.add(u)
    return len(seen)


def oracle_profile(g: Multigraph, order, kind: str):
    suffix = set(order)
    out = []
    for x in order:
        out.append(oracle_position_cost(g, suffix, x, kind))
        suffix.remove(x)
    return tuple(out)


def oracle_width(g: Multigraph, kind: str, root=None) -> int:
    """Minimum profile maximum over all n! layouts (n <= 8)."""
    if g.n == 0:
        return 0
    best = None
    verts = list(g.vertices())
    for perm in itertools.permutations(verts):
        if root is not None and perm[0] != root:
            continue
        val = max(oracle_profile(g, perm, kind))
        if best is None or val < best:
            best = val
    return best


# -- jitted mass oracle for the exhaustive class sweep -------------------

_KIND_CODE = {"v": 0, "vc": 1, "e": 2, "ec": 3}


@njit(cache=True)
def _perm_sweep(n, perms, mult, kind):
    """Min over the given layouts of the max per-position cost; the cost
    evaluation here re-derives everything from the multiplicity matrix."""
    best = np.int64(1) << 62
    nperm = perms.shape[0]
    for p in range(nperm):
        worst = np.int64(0)
        suffix = (np.int64(1) << n) - 1
        for i in range(n):
            x = perms[p, i]
            if kind == 1 or kind == 3:
                comp = np.int64(1) << x
                changed = True
                while changed:
                    changed = False
                    for v in range(n):
                        if (suffix >> v) & 1 and not (comp >> v) & 1:
                            hit = False
                            for u in range(n):
                                if (comp >> u) & 1 and mult[v, u] > 0:
                                    hit = True
                                    break
                            if hit:
                                comp |= np.int64(1) << v
                                changed = True
                ref = comp
            else:
                ref = suffix
            cost = np.int64(0)
            if kind == 2 or kind == 3:
                for v in range(n):
                    if (ref >> v) & 1:
                        for u in range(n):
                            if not (ref >> u) & 1:
                                cost += mult[v, u]
            else:
                for u in range(n):
                    if not (ref >> u) & 1:
                        for v in range(n):
                            if (ref >> v) & 1 and mult[v, u] > 0:
                                cost += 1
                                break
            if cost > worst:
                worst = cost
            if worst >= best:
                break
            suffix &= ~(np.int64(1) << x)
        if worst < best:
            best = worst
    return best


_PERM_CACHE: dict = {}


def oracle_width_fast(g: Multigraph, kind: str) -> int:
    """Numba-backed factorial brute force, independent of the DP kernel."""
    n = g.n
    if n == 0:
        return 0
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = np.array(
            list(itertools.permutations(range(n))), dtype=np.int64
        )
    mult = np.zeros((n, n), dtype=np.int64)
    for (u, v), m in g.edge_items():
        mult[u, v] = m
        mult[v, u] = m
    return int(_perm_sweep(n, _PERM_CACHE[n], mult, _KIND_CODE[kind]))


# -- block oracle ---------------------------------------------------------


def oracle_blocks(g: Multigraph):
    """Edge-copy partition into blocks: copies of one pair always share a
    block when parallel (a 2-cycle), and two pairs share a block when some
    simple cycle passes through both.  Returns (sorted pair groups,
    bridge pair set)."""
    pairs = list(g.pairs())
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    # simple cycles by DFS over vertex paths from the smallest vertex
    def cycles_through():
        out = []
        verts = list(g.vertices())
        for start in verts:
            stack = [(start, [start])]
            while stack:
                v, path = stack.pop()
                for u in g.neighbors(v):
                    if u == start and len(path) >= 3 and path[1] < path[-1]:
                        out.append(path[:])
                    elif u > start and u not in path:
                        stack.append((u, path + [u]))
        return out

    for cyc in cycles_through():
        edges = [tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))]
        for e in edges[1:]:
            union(edges[0], e)
    groups: dict = {}
    for p in pairs:
        groups.setdefault(find(p), []).append(p)
    out = sorted(sorted(v) for v in groups.values())
    bridges = {
        grp[0]
        for grp in out
        if len(grp) == 1 and g.multiplicity(*grp[0]) == 1
    }
    return out, bridges


# -- bisection oracle -----------------------------------------------------


def oracle_min_bisection(g: Multigraph) -> int:
    """Sweep every subset mask, keeping the near-balanced ones."""
    n = g.n
    if n == 0:
        return 0
    best = None
    for mask in range(1 << n):
        side = [v for v in range(n) if (mask >> v) & 1]
        if abs(len(side) - (n - len(side))) > 1:
            continue
        s = set(side)
        val = 0
        for (u, v), m in g.edge_items():
            if (u in s) != (v in s):
                val += m
        if best is None or val < best:
            best = val
    return best


# -- random generators ------------------------------------------------------


def random_multigraph(rng, n, max_mult=2, p=0.45):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.randint(1, max_mult)))
    return Multigraph(n, edges)


def random_connected_multigraph(rng, n, max_mult=2, extra=None):
    """Random spanning tree plus extra random pairs."""
    if n == 0:
        return Multigraph(0)
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v, rng.randint(1, max_mult)))
    if extra is None:
        extra = rng.randint(0, max(1, n))
    for _ in range(extra):
        u, v = rng.sample(range(n), 2) if n >= 2 else (0, 0)
        if u != v:
            edges.append((min(u, v), max(u, v), rng.randint(1, max_mult)))
    return Multigraph(n, edges)


def random_tree(rng, n):
    return random_connected_multigraph(rng, n, max_mult=1, extra=0)


def random_cactus(rng, n):
    """Grow by attaching bridges and cycles at existing vertices."""
    size = 1
    edges = []
    while size < n:
        anchor = rng.randrange(size)
        room = n - size
        if room >= 2 and rng.random() < 0.6:
            length = rng.randint(2, min(room + 1, 6))  # cycle on `length` vertices
            ids = [anchor] + [size + i for i in range(length - 1)]
            size += length - 1
            if length == 2:
                edges.append((ids[0], ids[1], 2))
            else:
                for i in range(length):
                    a, b = ids[i], ids[(i + 1) % length]
                    edges.append((min(a, b), max(a, b), 1))
        else:
            edges.append((anchor, size, 1))
            size += 1
    return Multigraph(size, edges)


def random_biconnected(rng, n, max_mult=3):
    """Cycle plus random ears/chords, then doubled pairs; n >= 3."""
    edges = {(u, (u + 1) % n): 1 for u in range(n)}
    canon = {}
    for (u, v), m in edges.items():
        canon[(min(u, v), max(u, v))] = m
    for _ in range(rng.randint(1, n)):
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        canon[key] = min(max_mult, canon.get(key, 0) + rng.randint(1, max_mult))
    return Multigraph(n, [(u, v, m) for (u, v), m in canon.items()])


# -- isomorphism-class enumeration (orbit sweep) ---------------------------


def simple_connected_classes(n):
    """Connected simple graphs on n labeled vertices, one per class."""
    allpairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    reps = []
    for bits in range(1 << len(allpairs)):
        pairs = frozenset(p for i, p in enumerate(allpairs) if (bits >> i) & 1)
        if pairs in seen:
            continue
        if not _pairs_connected(n, pairs):
            continue
        for perm in perms:
            img = frozenset(
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                for (u, v) in pairs
            )
            seen.add(img)
        reps.append(sorted(pairs))
    return reps


def _pairs_connected(n, pairs):
    if n <= 1:
        return True
    adj = {v: set() for v in range(n)}
    for (u, v) in pairs:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def connected_multigraph_classes(n, max_mult=2):
    """One representative per isomorphism class of connected multigraphs
    on n vertices with per-pair multiplicities in 1..max_mult."""
    perms = list(itertools.permutations(range(n)))
    out = []
    for pairs in simple_connected_classes(n):
        m = len(pairs)
        ps = frozenset(map(tuple, pairs))
        auts = []
        for perm in perms:
            img = frozenset(
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                for (u, v) in pairs
            )
            if img == ps:
                auts.append(perm)
        index_of = {tuple(p): i for i, p in enumerate(pairs)}
        seen = set()
        for assign in itertools.product(range(1, max_mult + 1), repeat=m):
            if assign in seen:
                continue
            out.append(Multigraph(n, [(u, v, w) for (u, v), w in zip(pairs, assign)]))
            for perm in auts:
                img = [0] * m
                for (u, v), w in zip(pairs, assign):
                    a, b = perm[u], perm[v]
                    img[index_of[(min(a, b), max(a, b))]] = w
                seen.add(tuple(img))
    return out
