"""Edge-colored multigraph model and elementary structure queries.

Vertices are positive integers; freshly built graphs use exactly 1..n.
Induced subgraphs keep the original vertex ids and edge ids, so anything
computed on a subgraph (orderings, walks, separators) stays meaningful in
the host graph. Colors are dense integers 1..c; two-colored material uses
1 = blue, 2 = red.

A walk alternates vertices and edge ids and is properly colored (PC) when
consecutive edges differ in color; a closed walk additionally needs its
last and first edge colors to differ.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import GraphError, InvalidWalkError, ParseError


class ParallelEdgeWarning(UserWarning):
    """Same-colored parallel edges are legal but usually unintended."""


class Edge(NamedTuple):
    u: int
    v: int
    color: int
    eid: int

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u

    def joins(self, a: int, b: int) -> bool:
        return {self.u, self.v} == {a, b}


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Immutable multigraph with colored edges and stable ids."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    c: int

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices) or list(self.vertices) != sorted(vset):
            raise GraphError("vertex tuple must be strictly increasing")
        if any(v < 1 for v in self.vertices):
            raise GraphError("vertex ids must be positive")
        if self.c < 1:
            raise GraphError("color count must be at least 1")
        seen_ids = set()
        inc: dict[int, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if e.u == e.v:
                raise GraphError(f"loop at vertex {e.u} rejected")
            if e.u not in vset or e.v not in vset:
                raise GraphError(f"edge {e.eid} touches unknown vertex")
            if not 1 <= e.color <= self.c:
                raise GraphError(f"edge {e.eid} has color {e.color} outside 1..{self.c}")
            if e.eid in seen_ids:
                raise GraphError(f"duplicate edge id {e.eid}")
            seen_ids.add(e.eid)
            inc[e.u].append(e)
            inc[e.v].append(e)
        object.__setattr__(self, "_inc", {v: tuple(es) for v, es in inc.items()})
        object.__setattr__(self, "_by_id", {e.eid: e for e in self.edges})

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[Edge, ...]:
        try:
            return self._inc[v]
        except KeyError:
            raise GraphError(f"vertex {v} not in graph") from None

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"edge id {eid} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def colors_at(self, v: int) -> frozenset[int]:
        return frozenset(e.color for e in self.incident(v))

    def has_edge_between(self, a: int, b: int) -> bool:
        return any(e.other(a) == b for e in self.incident(a))

    def induced(self, keep: Iterable[int]) -> "EdgeColoredGraph":
        kset = set(keep) & set(self.vertices)
        edges = tuple(e for e in self.edges if e.u in kset and e.v in kset)
        return EdgeColoredGraph(tuple(sorted(kset)), edges, self.c)

    def without_vertices(self, drop: Iterable[int]) -> "EdgeColoredGraph":
        return self.induced(set(self.vertices) - set(drop))

    def without_edges(self, eids: Iterable[int]) -> "EdgeColoredGraph":
        gone = set(eids)
        return EdgeColoredGraph(
            self.vertices, tuple(e for e in self.edges if e.eid not in gone), self.c
        )


def build_graph(
    n: int, colored_edges: Iterable[tuple[int, int, int]], c: int | None = None
) -> EdgeColoredGraph:
    """Build a graph on vertices 1..n from (u, v, color) triples.

    Edge ids are assigned in input order starting at 0. Loops and
    out-of-range endpoints or colors are rejected; same-colored parallel
    edges are accepted with a warning.
    """
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    triples = list(colored_edges)
    for u, v, color in triples:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u},{v}) outside vertex range 1..{n}")
    if c is None:
        c = max((color for _, _, color in triples), default=1)
    edges = tuple(Edge(u, v, color, i) for i, (u, v, color) in enumerate(triples))
    seen: set[tuple[int, int, int]] = set()
    dupes = 0
    for e in edges:
        key = (min(e.u, e.v), max(e.u, e.v), e.color)
        if key in seen:
            dupes += 1
        seen.add(key)
    if dupes:
        warnings.warn(
            f"{dupes} same-colored parallel edge(s); they never create new "
            "properly colored structures",
            ParallelEdgeWarning,
            stacklevel=2,
        )
    return EdgeColoredGraph(tuple(range(1, n + 1)), edges, c)


# ---------------------------------------------------------------------------
# structure queries


def connected_components(
    G: EdgeColoredGraph, restrict: Iterable[int] | None = None
) -> list[list[int]]:
    """Components of the induced subgraph, each sorted, ordered by minimum."""
    alive = set(G.vertices) if restrict is None else set(restrict) & set(G.vertices)
    comps: list[list[int]] = []
    unseen = set(alive)
    for start in sorted(alive):
        if start not in unseen:
            continue
        comp = [start]
        unseen.discard(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for e in G.incident(v):
                w = e.other(v)
                if w in unseen:
                    unseen.discard(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda comp: comp[0])
    return comps


def _blocks(
    G: EdgeColoredGraph,
    alive_vertices: set[int],
    alive_edges: set[int] | None = None,
) -> list[list[int]]:
    """Biconnected blocks (lists of edge ids) of the restricted subgraph.

    Parallel edges are distinct, so a parallel pair forms a two-edge block
    and is never a bridge; a bridge is exactly a one-edge block.
    """
    inc: dict[int, list[Edge]] = {}
    for v in alive_vertices:
        inc[v] = [
            e
            for e in G.incident(v)
            if e.other(v) in alive_vertices
            and (alive_edges is None or e.eid in alive_edges)
        ]
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    clock = 0
    estack: list[Edge] = []
    blocks: list[list[int]] = []
    for root in sorted(alive_vertices):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        work: list[tuple[int, int, Iterator[Edge]]] = [(root, -1, iter(inc[root]))]
        while work:
            v, parent_eid, it = work[-1]
            e = next(it, None)
            if e is None:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        blk = []
                        while True:
                            popped = estack.pop()
                            blk.append(popped.eid)
                            if popped.eid == parent_eid:
                                break
                        blocks.append(blk)
                continue
            if e.eid == parent_eid:
                continue
            w = e.other(v)
            if w not in disc:
                disc[w] = low[w] = clock
                clock += 1
                estack.append(e)
                work.append((w, e.eid, iter(inc[w])))
            elif disc[w] < disc[v]:
                estack.append(e)
                low[v] = min(low[v], disc[w])
    return blocks


def bridges(
    G: EdgeColoredGraph, restrict: Iterable[int] | None = None
) -> frozenset[int]:
    """Edge ids whose removal disconnects their endpoints (in the subgraph)."""
    alive = set(G.vertices) if restrict is None else set(restrict) & set(G.vertices)
    return frozenset(blk[0] for blk in _blocks(G, alive) if len(blk) == 1)


def monochromatic_vertices(
    G: EdgeColoredGraph, restrict: Iterable[int] | None = None
) -> frozenset[int]:
    """Vertices incident to at most one color in the induced subgraph.

    Isolated vertices count as monochromatic.
    """
    alive = set(G.vertices) if restrict is None else set(restrict) & set(G.vertices)
    out = []
    for v in alive:
        colors = {e.color for e in G.incident(v) if e.other(v) in alive}
        if len(colors) <= 1:
            out.append(v)
    return frozenset(out)


# ---------------------------------------------------------------------------
# walks


@dataclass(frozen=True)
class Walk:
    """Alternating vertex/edge-id sequence; len(vertices) == len(edges) + 1."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...] = field(default=())

    @property
    def closed(self) -> bool:
        return len(self.edges) > 0 and self.vertices[0] == self.vertices[-1]

    def is_trail(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def is_path(self) -> bool:
        return not self.closed and len(set(self.vertices)) == len(self.vertices)

    def is_cycle(self) -> bool:
        interior = self.vertices[:-1]
        return (
            self.closed
            and len(self.edges) >= 2
            and self.is_trail()
            and len(set(interior)) == len(interior)
        )

    def reverse(self) -> "Walk":
        return Walk(tuple(reversed(self.vertices)), tuple(reversed(self.edges)))

    def rotate(self, k: int) -> "Walk":
        if not self.closed:
            raise InvalidWalkError("only closed walks rotate")
        k %= len(self.edges)
        interior = self.vertices[:-1]
        verts = interior[k:] + interior[:k]
        return Walk(verts + (verts[0],), self.edges[k:] + self.edges[:k])

    def validate_in(self, G: EdgeColoredGraph) -> None:
        if len(self.vertices) != len(self.edges) + 1 or not self.vertices:
            raise InvalidWalkError("walk needs k+1 vertices for k edges")
        vset = set(G.vertices)
        if any(v not in vset for v in self.vertices):
            raise InvalidWalkError("walk leaves the vertex set")
        for i, eid in enumerate(self.edges):
            e = G.edge(eid)
            if not e.joins(self.vertices[i], self.vertices[i + 1]):
                raise InvalidWalkError(
                    f"edge {eid} does not join {self.vertices[i]} and {self.vertices[i + 1]}"
                )


def is_pc_walk(G: EdgeColoredGraph, walk: Walk) -> bool:
    """True when consecutive edge colors differ (wrapping around if closed)."""
    walk.validate_in(G)
    colors = [G.edge(eid).color for eid in walk.edges]
    for a, b in zip(colors, colors[1:]):
        if a == b:
            return False
    if walk.closed and colors[-1] == colors[0]:
        return False
    return True


# ---------------------------------------------------------------------------
# text format
#
#   # comment
#   p ecg <n> <m> <c>
#   e <u> <v> <color>


def parse_graph(text: str) -> EdgeColoredGraph:
    header: tuple[int, int, int] | None = None
    triples: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 5 or parts[1] != "ecg":
                raise ParseError("header must be 'p ecg <n> <m> <c>'", lineno)
            try:
                header = (int(parts[2]), int(parts[3]), int(parts[4]))
            except ValueError:
                raise ParseError("header fields must be integers", lineno) from None
        elif parts[0] == "e":
            if header is None:
                raise ParseError("edge before header", lineno)
            if len(parts) != 4:
                raise ParseError("edge line must be 'e <u> <v> <color>'", lineno)
            try:
                u, v, color = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("edge fields must be integers", lineno) from None
            triples.append((u, v, color))
        else:
            raise ParseError(f"unknown record '{parts[0]}'", lineno)
    if header is None:
        raise ParseError("missing 'p ecg' header")
    n, m, c = header
    if len(triples) != m:
        raise ParseError(f"header announces {m} edges, found {len(triples)}")
    try:
        return build_graph(n, triples, c=c)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def serialize_graph(G: EdgeColoredGraph) -> str:
    """Inverse of parse_graph; vertices must be exactly 1..n."""
    if G.vertices != tuple(range(1, G.n + 1)):
        raise GraphError("only graphs with contiguous vertex ids serialize")
    lines = [f"p ecg {G.n} {G.m} {G.c}"]
    for e in G.edges:
        lines.append(f"e {e.u} {e.v} {e.color}")
    return "\n".join(lines) + "\n"
