"""Loop-free undirected multigraph: the data model plus serialization and
the set-based primitives (neighborhoods, boundary edges, components) that
every other module builds on.

Vertices are dense integers 0..n-1.  Edges are unordered pairs with a
positive multiplicity; pairs with multiplicity 0 are simply absent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import GraphFormatError


class Multigraph:
    """Immutable loop-free multigraph.

    ``edges`` may be a mapping ``{(u, v): mult}`` or an iterable of
    ``(u, v)`` / ``(u, v, mult)`` items; multiplicities of repeated pairs
    accumulate.  Endpoints must be distinct and lie in ``[0, n)``.
    """

    __slots__ = ("n", "_mult", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable | Mapping = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        mult: dict[tuple[int, int], int] = {}
        if isinstance(edges, Mapping):
            items = [(u, v, m) for (u, v), m in edges.items()]
        else:
            items = [e if len(e) == 3 else (e[0], e[1], 1) for e in edges]
        for u, v, m in items:
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if m <= 0:
                raise ValueError(f"non-positive multiplicity {m} on ({u},{v})")
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + m
        self.n = n
        self._mult = dict(sorted(mult.items()))
        adj: list[list[int]] = [[] for _ in range(n)]
        for (u, v) in self._mult:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._hash = hash((n, tuple(self._mult.items())))

    # -- basic queries -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Distinct edge pairs (u, v) with u < v, sorted."""
        return tuple(self._mult)

    def edge_items(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Sorted ((u, v), multiplicity) items."""
        return tuple(self._mult.items())

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._mult.get((u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def vdeg(self, v: int) -> int:
        """Number of distinct neighbors."""
        return len(self._adj[v])

    def edeg(self, v: int) -> int:
        """Number of incident edge copies (multiplicity counted)."""
        return sum(self.multiplicity(v, u) for u in self._adj[v])

    def num_edge_copies(self) -> int:
        return sum(self._mult.values())

    # -- structure -----------------------------------------------------

    def component_of(self, v: int, within: frozenset | set | None = None) -> frozenset:
        """Vertex set of the component of ``v`` in the subgraph induced by
        ``within`` (defaults to all vertices)."""
        if within is not None and v not in within:
            raise ValueError(f"vertex {v} not in the given subset")
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in seen and (within is None or y in within):
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def components(self) -> tuple[frozenset, ...]:
        """Connected components, ordered by smallest vertex."""
        out = []
        left = set(self.vertices())
        while left:
            v = min(left)
            comp = self.component_of(v)
            out.append(comp)
            left -= comp
        return tuple(out)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_of(0)) == self.n

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={dict(self._mult)!r})"


# -- set-based primitives ----------------------------------------------


def neighborhood(g: Multigraph, members: Iterable[int]) -> frozenset:
    """N_G(S): vertices outside S adjacent to S."""
    s = set(members)
    out = set()
    for v in s:
        for u in g.neighbors(v):
            if u not in s:
                out.add(u)
    return frozenset(out)


def boundary_edges(g: Multigraph, members: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """E_G(S) as an explicit multiset: each boundary pair repeated per copy."""
    s = set(members)
    out = []
    for (u, v), m in g.edge_items():
        if (u in s) != (v in s):
            out.extend([(u, v)] * m)
    return tuple(out)


def boundary_size(g: Multigraph, members: Iterable[int]) -> int:
    """|E_G(S)| counting multiplicities."""
    s = set(members)
    total = 0
    for (u, v), m in g.edge_items():
        if (u in s) != (v in s):
            total += m
    return total


@dataclass(frozen=True)
class CutQuantities:
    neighbors: frozenset
    boundary: tuple[tuple[int, int], ...]
    component: frozenset


def cut_quantities(g: Multigraph, members: Iterable[int], v: int) -> CutQuantities:
    """N_G(S), E_G(S) and C_G(S, v) for a vertex subset S containing v."""
    s = set(members)
    if not s <= set(g.vertices()):
        raise ValueError("subset contains vertices outside the graph")
    if v not in s:
        raise ValueError(f"vertex {v} must belong to the subset")
    return CutQuantities(
        neighbors=neighborhood(g, s),
        boundary=boundary_edges(g, s),
        component=g.component_of(v, within=frozenset(s)),
    )


# -- metrics -----------------------------------------------------------


@dataclass(frozen=True)
class GraphMetrics:
    vdeg: tuple[int, ...]
    edeg: tuple[int, ...]
    max_vdeg: int
    max_edeg: int
    components: tuple[tuple[int, ...], ...]
    diameters: tuple[int, ...]


def graph_metrics(g: Multigraph) -> GraphMetrics:
    """Per-vertex degrees, their maxima, and the diameter of each component.

    Distances ignore multiplicity (the underlying simple graph); a
    single-vertex component has diameter 0.  An empty graph has no
    components, hence no diameters, and both maxima are 0 by convention.
    """
    vdeg = tuple(g.vdeg(v) for v in g.vertices())
    edeg = tuple(g.edeg(v) for v in g.vertices())
    comps = g.components()
    diameters = []
    for comp in comps:
        ecc = 0
        for src in comp:
            dist = {src: 0}
            queue = deque([src])
            while queue:
                x = queue.popleft()
                for y in g.neighbors(x):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            ecc = max(ecc, max(dist.values()))
        diameters.append(ecc)
    return GraphMetrics(
        vdeg=vdeg,
        edeg=edeg,
        max_vdeg=max(vdeg, default=0),
        max_edeg=max(edeg, default=0),
        components=tuple(tuple(sorted(c)) for c in comps),
        diameters=tuple(diameters),
    )


# -- serialization -----------------------------------------------------


def parse_graph(data: bytes | str) -> Multigraph:
    """Parse the native line format.

    Lines: optional ``#`` comments, exactly one ``n <count>`` header, then
    ``e <u> <v> <mult>`` lines.  Repeated pairs accumulate; endpoint order
    within a line does not matter.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"not valid UTF-8: {exc}") from None
    else:
        text = data
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(fields) != 2:
                raise GraphFormatError("header must be 'n <count>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {fields[1]!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(fields) != 4:
                raise GraphFormatError("edge line must be 'e <u> <v> <mult>'", lineno)
            try:
                u, v, m = int(fields[1]), int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError(f"bad integer in {line!r}", lineno) from None
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in ({u},{v})", lineno)
            if m <= 0:
                raise GraphFormatError(f"non-positive multiplicity {m}", lineno)
            edges.append((u, v, m))
        else:
            raise GraphFormatError(f"unknown directive {fields[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return Multigraph(n, edges)


def serialize_graph(g: Multigraph, fmt: str = "native") -> bytes:
    """Serialize to ``native`` (round-trips through parse_graph) or ``dot``
    (one edge statement per copy)."""
    if fmt == "native":
        lines = [f"n {g.n}"]
        lines += [f"e {u} {v} {m}" for (u, v), m in g.edge_items()]
        return "\n".join(lines).encode()
    if fmt == "dot":
        lines = ["graph g {"]
        lines += [f"  {v};" for v in g.vertices()]
        for (u, v), m in g.edge_items():
            lines += [f"  {u} -- {v};"] * m
        lines.append("}")
        return "\n".join(lines).encode()
    raise ValueError(f"unknown format {fmt!r}")
