"""Jitted subset dynamic program behind the exact width engine.

For a cost function that depends only on the current suffix set S (and,
for the component-based kinds, on the component of the vertex removed
first), the optimal layout value satisfies

    F(S) = max(cost(S), min over v in S of F(S - v))      S connected
    F(S) = max(F(C), F(S - C))                            C = component of S

with F({}) = 0.  F is computed bottom-up over all 2^n subsets encoded as
bitmasks; boundary sizes and neighbor unions are maintained incrementally
from each mask's lowest bit.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# cost kind codes shared with widths.py
KIND_V = 0
KIND_VC = 1
KIND_E = 2
KIND_EC = 3


@njit(cache=True)
def solve_table(n, adj, mult, kind):
    """Return the F table over all vertex-subset masks.

    adj[v] is the neighbor bitmask of v; mult is the n*n multiplicity
    matrix.  The overall exact width is F[(1 << n) - 1].
    """
    size = 1 << n
    full = size - 1
    F = np.zeros(size, dtype=np.int64)
    cut = np.zeros(size, dtype=np.int64)
    nbm = np.zeros(size, dtype=np.int64)
    wdeg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        s = 0
        for u in range(n):
            s += mult[v, u]
        wdeg[v] = s
    component_based = kind == KIND_VC or kind == KIND_EC
    for m in range(1, size):
        low = 0
        while not (m >> low) & 1:
            low += 1
        m0 = m & (m - 1)
        s = 0
        for u in range(n):
            if (m0 >> u) & 1:
                s += mult[low, u]
        cut[m] = cut[m0] + wdeg[low] - 2 * s
        nbm[m] = nbm[m0] | adj[low]

        if component_based:
            comp = np.int64(1) << low
            frontier = comp
            while frontier:
                nxt = np.int64(0)
                for v in range(n):
                    if (frontier >> v) & 1:
                        nxt |= adj[v]
                frontier = nxt & m & ~comp
                comp |= frontier
            if comp != m:
                a = F[comp]
                b = F[m ^ comp]
                F[m] = a if a > b else b
                continue
        if kind == KIND_E or kind == KIND_EC:
            cost_m = cut[m]
        else:
            cost_m = 0
            t = nbm[m] & ~m & full
            while t:
                t &= t - 1
                cost_m += 1
        best = np.int64(1) << 62
        mm = m
        while mm:
            b = mm & (-mm)
            sub = m ^ b
            if F[sub] < best:
                best = F[sub]
            mm &= mm - 1
        F[m] = cost_m if cost_m > best else best
    return F


def graph_arrays(g):
    """Adjacency bitmask vector and multiplicity matrix for the kernel."""
    n = g.n
    mult = np.zeros((n, n), dtype=np.int64)
    for (u, v), m in g.edge_items():
        mult[u, v] = m
        mult[v, u] = m
    adj = np.zeros(n, dtype=np.int64)
    for v in range(n):
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << u
        adj[v] = mask
    return adj, mult
