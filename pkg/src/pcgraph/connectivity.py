"""Properly colored x-y paths: minimum separators and maximum packings.

On level-4 graphs the two optima coincide and both are computable in
polynomial time: strip internal monochromatic vertices, recover a
level-5 ordering of what remains, orient every edge forward, and run
unit-vertex-capacity max flow. Each validation step of that chain can
only fail on inputs that are not level-4, and failures are reported
with a diagnostic so callers can fall back to the exact search
(menger_gap), which works on any graph but is exponential.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .acyclicity import recognize_type5
from .core import EdgeColoredGraph, Walk, is_pc_walk, connected_components, monochromatic_vertices
from .errors import (
    CapacityError,
    GraphError,
    InfeasibleSeparatorError,
    InvariantViolation,
    NotTypeFourError,
    UnsupportedTransformError,
)

BRUTE_DEFAULT_BOUND = 12


@dataclass(frozen=True)
class SeparatorPackingResult:
    """Joint answer for one terminal pair.

    s counts a minimum separator, t a maximum packing; separator holds
    vertex ids (separator_kind "vertex") or edge ids ("edge"). paths are
    properly colored x-y walks, pairwise disjoint in the kind's sense.
    method records which engine produced the numbers.
    """

    s: int
    t: int
    separator: tuple[int, ...]
    paths: tuple[Walk, ...]
    menger_equal: bool
    method: str
    separator_kind: str = "vertex"


def _check_terminals(G: EdgeColoredGraph, x: int, y: int) -> None:
    known = set(G.vertices)
    if x not in known or y not in known:
        raise GraphError(f"terminal {x if x not in known else y} not in graph")
    if x == y:
        raise GraphError("terminals must differ")


def strip_internal_monochromatic(
    G: EdgeColoredGraph, x: int, y: int
) -> EdgeColoredGraph:
    """Drop non-terminal vertices that see at most one color, repeatedly.

    Interior vertices of a properly colored path see two colors, so no
    x-y path and no minimum separator is disturbed.
    """
    _check_terminals(G, x, y)
    alive = set(G.vertices)
    while True:
        mono = monochromatic_vertices(G, restrict=alive) - {x, y}
        if not mono:
            return G.induced(alive)
        alive -= mono


# ---------------------------------------------------------------------------
# flow network with unit vertex capacities

_SOURCE = 0
_SINK = 1


class _FlowNet:
    def __init__(self) -> None:
        self.adj: dict[int, list[int]] = {}
        self.arcs: list[list] = []  # [to, cap, flow, tag]

    def add(self, u: int, v: int, cap: int, tag) -> None:
        self.adj.setdefault(u, []).append(len(self.arcs))
        self.arcs.append([v, cap, 0, tag])
        self.adj.setdefault(v, []).append(len(self.arcs))
        self.arcs.append([u, 0, 0, None])

    def augment(self) -> int:
        parent: dict[int, int] = {_SOURCE: -1}
        q = deque([_SOURCE])
        while q and _SINK not in parent:
            u = q.popleft()
            for ai in self.adj.get(u, ()):
                to, cap, flow, _ = self.arcs[ai]
                if to not in parent and cap - flow > 0:
                    parent[to] = ai
                    q.append(to)
        if _SINK not in parent:
            return 0
        push = None
        node = _SINK
        while node != _SOURCE:
            ai = parent[node]
            slack = self.arcs[ai][1] - self.arcs[ai][2]
            push = slack if push is None else min(push, slack)
            node = self.arcs[ai ^ 1][0]
        node = _SINK
        while node != _SOURCE:
            ai = parent[node]
            self.arcs[ai][2] += push
            self.arcs[ai ^ 1][2] -= push
            node = self.arcs[ai ^ 1][0]
        return push

    def reachable_in_residual(self) -> set[int]:
        seen = {_SOURCE}
        q = deque([_SOURCE])
        while q:
            u = q.popleft()
            for ai in self.adj.get(u, ()):
                to, cap, flow, _ = self.arcs[ai]
                if to not in seen and cap - flow > 0:
                    seen.add(to)
                    q.append(to)
        return seen


def _node_in(v: int) -> int:
    return 2 * v


def _node_out(v: int) -> int:
    return 2 * v + 1


def solve_type4(G: EdgeColoredGraph, x: int, y: int) -> SeparatorPackingResult:
    """Exact s = t on level-4 graphs via orientation plus max flow.

    Raises NotTypeFourError (with the failed validation step) when the
    input graph demonstrates it is not level-4; never on one that is.
    """
    _check_terminals(G, x, y)
    if G.has_edge_between(x, y):
        raise InfeasibleSeparatorError(
            "terminals are adjacent; no vertex set separates them"
        )
    H = strip_internal_monochromatic(G, x, y)
    comps = connected_components(H)
    homeless = [c for c in comps if x not in c and y not in c]
    if homeless:
        raise NotTypeFourError(
            f"component {homeless[0]} has no terminal yet survives stripping, "
            "so it carries a properly colored closed walk"
        )
    if len(comps) == 2:
        if any(len(c) > 1 for c in comps):
            raise NotTypeFourError(
                "terminals sit in different components that did not strip "
                "down to the terminals alone"
            )
        return SeparatorPackingResult(
            s=0, t=0, separator=(), paths=(), menger_equal=True, method="flow"
        )
    mono = monochromatic_vertices(H)
    if mono != {x, y}:
        raise NotTypeFourError(
            f"after stripping, the monochromatic vertices are {sorted(mono)} "
            f"instead of exactly the terminals"
        )
    ordering = recognize_type5(H)
    if ordering is None:
        raise NotTypeFourError("stripped graph admits no level-5 ordering")
    if ordering[0] == y:
        ordering = tuple(reversed(ordering))
    if ordering[0] != x or ordering[-1] != y:
        raise InvariantViolation("level-5 ordering does not start and end at the terminals")

    pos = {v: i for i, v in enumerate(ordering)}
    net = _FlowNet()
    inf = H.n + 1
    node_of = {}
    for v in H.vertices:
        if v == x:
            node_of[v] = (_SOURCE, _SOURCE)
        elif v == y:
            node_of[v] = (_SINK, _SINK)
        else:
            node_of[v] = (_node_in(v), _node_out(v))
            net.add(_node_in(v), _node_out(v), 1, ("split", v))
    for e in sorted(H.edges, key=lambda e: e.eid):
        tail, head = (e.u, e.v) if pos[e.u] < pos[e.v] else (e.v, e.u)
        net.add(node_of[tail][1], node_of[head][0], inf, e.eid)

    flow = 0
    while True:
        pushed = net.augment()
        if pushed == 0:
            break
        flow += pushed

    reach = net.reachable_in_residual()
    separator = tuple(
        sorted(
            v
            for v in H.vertices
            if v not in (x, y)
            and _node_in(v) in reach
            and _node_out(v) not in reach
        )
    )
    if len(separator) != flow:
        raise InvariantViolation(
            f"cut of size {len(separator)} does not match flow value {flow}"
        )

    paths = []
    for _ in range(flow):
        verts = [x]
        eids: list[int] = []
        node = _SOURCE
        while node != _SINK:
            for ai in net.adj[node]:
                to, _cap, fl, tag = net.arcs[ai]
                if fl > 0 and tag is not None:
                    net.arcs[ai][2] -= 1
                    node = to
                    if not isinstance(tag, tuple):
                        eids.append(tag)
                        verts.append(y if node == _SINK else node // 2)
                    break
            else:
                raise InvariantViolation("flow decomposition ran out of arcs")
        walk = Walk(vertices=tuple(verts), edges=tuple(eids))
        if not (is_pc_walk(G, walk) and walk.is_path()):
            raise InvariantViolation("flow path is not a properly colored path")
        paths.append(walk)

    return SeparatorPackingResult(
        s=flow,
        t=flow,
        separator=separator,
        paths=tuple(paths),
        menger_equal=True,
        method="flow",
    )


# ---------------------------------------------------------------------------
# exact references for arbitrary graphs


def menger_gap(
    G: EdgeColoredGraph, x: int, y: int, bound: int = BRUTE_DEFAULT_BOUND
) -> SeparatorPackingResult:
    """Exhaustive minimum separator and maximum packing; the two need
    not agree outside level 4, which is the point of the name."""
    from . import oracle

    _check_terminals(G, x, y)
    if G.has_edge_between(x, y):
        raise InfeasibleSeparatorError(
            "terminals are adjacent; no vertex set separates them"
        )
    if G.n > bound:
        raise CapacityError(f"exhaustive search bounded at {bound} vertices")
    s, separator = oracle.brute_min_separator(G, x, y)
    t, paths = oracle.brute_max_packing(G, x, y)
    return SeparatorPackingResult(
        s=s,
        t=t,
        separator=separator,
        paths=paths,
        menger_equal=(s == t),
        method="brute",
    )


def edge_disjoint_variant(
    G: EdgeColoredGraph, x: int, y: int, bound: int = BRUTE_DEFAULT_BOUND
) -> SeparatorPackingResult:
    """Edge-deletion separators against edge-disjoint path packings,
    exhaustively. Terminal adjacency is fine here: an edge cut may
    simply contain the terminal edge."""
    from . import oracle

    _check_terminals(G, x, y)
    if G.c != 2:
        raise UnsupportedTransformError(
            "the edge variant is defined for two-colored graphs"
        )
    if G.n > bound:
        raise CapacityError(f"exhaustive search bounded at {bound} vertices")
    s, cut = oracle.brute_min_edge_separator(G, x, y)
    t, paths = oracle.brute_max_edge_packing(G, x, y)
    return SeparatorPackingResult(
        s=s,
        t=t,
        separator=cut,
        paths=paths,
        menger_equal=(s == t),
        method="brute",
        separator_kind="edge",
    )
