"""Properly colored closed walks, closed trails, and cycles.

Decisions run on deletion fixpoints (fast, polynomial); certificates
come from explicit searches that are restricted to the fixpoint since
every witness lives inside it. Certificate searches are exponential in
the worst case and get capped, in which case the decision still stands
and the result is flagged.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .acyclicity import _eliminate_type1, recognize_type1, trail_deletion_fixpoint
from .core import EdgeColoredGraph, Walk, is_pc_walk, monochromatic_vertices
from .errors import InvariantViolation

CYCLE_SEARCH_DEFAULT_BOUND = 12
TRAIL_SEARCH_DEFAULT_BOUND = 16


@dataclass(frozen=True)
class TransitionDigraph:
    """State digraph over directed edge arrivals.

    Node i is nodes[i] = (eid, head): the walk just crossed that edge
    into head. Each edge contributes two nodes, in edge-id order, the
    stored u endpoint first. An arc leads to every continuation along a
    differently colored edge. Directed cycles correspond exactly to
    properly colored closed walks.
    """

    nodes: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def arc_count(self) -> int:
        return sum(len(a) for a in self.adj)


def transition_digraph(G: EdgeColoredGraph) -> TransitionDigraph:
    nodes = []
    index: dict[tuple[int, int], int] = {}
    for e in G.edges:
        for head in (e.u, e.v):
            index[(e.eid, head)] = len(nodes)
            nodes.append((e.eid, head))
    adj = []
    for eid, head in nodes:
        color = G.edge(eid).color
        adj.append(
            tuple(
                index[(f.eid, f.other(head))]
                for f in sorted(G.incident(head), key=lambda f: f.eid)
                if f.color != color
            )
        )
    return TransitionDigraph(nodes=tuple(nodes), adj=tuple(adj))


@dataclass(frozen=True)
class DetectionResult:
    found: bool
    certificate: Walk | None = None
    certificate_capped: bool = False


def _checked(G: EdgeColoredGraph, walk: Walk, what: str) -> Walk:
    if not (is_pc_walk(G, walk) and walk.closed):
        raise InvariantViolation(f"constructed {what} certificate fails re-check")
    return walk


# ---------------------------------------------------------------------------
# closed walks


def _mono_fixpoint_alive(G: EdgeColoredGraph) -> set[int]:
    alive = set(G.vertices)
    while alive:
        mono = monochromatic_vertices(G, restrict=alive)
        if not mono:
            break
        alive -= mono
    return alive


def _shortest_transition_cycle(G: EdgeColoredGraph, td: TransitionDigraph) -> Walk:
    best: tuple[int, int, int] | None = None  # (length, start node, last node)
    parents: dict[int, list[int]] = {}
    for s in range(len(td.nodes)):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        local: tuple[int, int] | None = None
        while q:
            u = q.popleft()
            if best is not None and dist[u] + 1 >= best[0]:
                continue
            for w in td.adj[u]:
                if w == s:
                    if local is None or dist[u] + 1 < local[0]:
                        local = (dist[u] + 1, u)
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
        if local is not None and (best is None or local[0] < best[0]):
            best = (local[0], s, local[1])
            parents[s] = []
            u = local[1]
            while u != -1:
                parents[s].append(u)
                u = parent[u]
            parents[s].reverse()
    if best is None:
        raise InvariantViolation("deletion fixpoint nonempty but state digraph acyclic")
    node_seq = parents[best[1]]
    eids = [td.nodes[i][0] for i in node_seq]
    heads = [td.nodes[i][1] for i in node_seq]
    first = G.edge(eids[0])
    return Walk(vertices=(first.other(heads[0]), *heads), edges=tuple(eids))


def has_pc_closed_walk(
    G: EdgeColoredGraph, want_certificate: bool = True
) -> DetectionResult:
    """Decision by deleting monochromatic vertices to a fixpoint;
    certificate as a shortest cycle of the transition digraph."""
    found = bool(_mono_fixpoint_alive(G))
    if not found or not want_certificate:
        return DetectionResult(found=found)
    walk = _shortest_transition_cycle(G, transition_digraph(G))
    return DetectionResult(found=True, certificate=_checked(G, walk, "closed walk"))


# ---------------------------------------------------------------------------
# closed trails


def _shortest_pc_closed_trail(G: EdgeColoredGraph, alive_e: set[int]) -> Walk | None:
    """State search over (vertex, last color, used edge set), one run per
    candidate minimum edge id in the trail."""
    order = sorted(alive_e)
    pos = {eid: i for i, eid in enumerate(order)}
    best: tuple[int, list[int]] | None = None
    for e0_id in order:
        e0 = G.edge(e0_id)
        allowed = {eid for eid in alive_e if eid >= e0_id}
        start_state = (e0.v, e0.color, 1 << pos[e0_id])
        parent: dict[tuple, tuple] = {start_state: (None, e0_id)}
        q = deque([start_state])
        while q:
            state = q.popleft()
            v, last, used = state
            depth = bin(used).count("1")
            if best is not None and depth + 1 >= best[0]:
                continue
            for f in sorted(G.incident(v), key=lambda f: f.eid):
                if f.eid not in allowed or used & (1 << pos[f.eid]):
                    continue
                if f.color == last:
                    continue
                w = f.other(v)
                if w == e0.u and f.color != e0.color:
                    length = depth + 1
                    if best is None or length < best[0]:
                        chain = [f.eid]
                        st = state
                        while st is not None:
                            prev, eid = parent[st]
                            chain.append(eid)
                            st = prev
                        chain.reverse()
                        best = (length, chain)
                    continue
                nxt = (w, f.color, used | (1 << pos[f.eid]))
                if nxt not in parent:
                    parent[nxt] = (state, f.eid)
                    q.append(nxt)
    if best is None:
        return None
    eids = best[1]
    verts = [G.edge(eids[0]).u]
    for eid in eids:
        verts.append(G.edge(eid).other(verts[-1]))
    return Walk(vertices=tuple(verts), edges=tuple(eids))


def has_pc_closed_trail(
    G: EdgeColoredGraph,
    want_certificate: bool = True,
    search_bound: int = TRAIL_SEARCH_DEFAULT_BOUND,
) -> DetectionResult:
    """Decision by the bridge-and-monochromatic deletion fixpoint; any
    witness trail survives into the fixpoint, so the certificate search
    runs there and is capped by the surviving edge count."""
    alive_v, alive_e = trail_deletion_fixpoint(G)
    found = bool(alive_v)
    if not found or not want_certificate:
        return DetectionResult(found=found)
    if len(alive_e) > search_bound:
        return DetectionResult(found=True, certificate_capped=True)
    walk = _shortest_pc_closed_trail(G, alive_e)
    if walk is None:
        raise InvariantViolation("trail fixpoint nonempty but trail search found none")
    if not walk.is_trail():
        raise InvariantViolation("trail certificate repeats an edge")
    return DetectionResult(found=True, certificate=_checked(G, walk, "closed trail"))


# ---------------------------------------------------------------------------
# cycles


def _shortest_pc_cycle(G: EdgeColoredGraph, core: set[int]) -> Walk | None:
    """Per start vertex s (the cycle minimum), walk only vertices > s,
    tracked as (vertex, last color, visited set)."""
    order = sorted(core)
    pos = {v: i for i, v in enumerate(order)}
    best: tuple[int, int, list[int]] | None = None
    for s in order:
        for e0 in sorted(G.incident(s), key=lambda e: e.eid):
            w0 = e0.other(s)
            if w0 <= s or w0 not in core:
                continue
            start_state = (w0, e0.color, 1 << pos[w0])
            parent: dict[tuple, tuple] = {start_state: (None, e0.eid)}
            q = deque([start_state])
            while q:
                state = q.popleft()
                v, last, visited = state
                depth = bin(visited).count("1")
                if best is not None and depth + 1 >= best[0]:
                    continue
                for f in sorted(G.incident(v), key=lambda f: f.eid):
                    if f.color == last:
                        continue
                    w = f.other(v)
                    if w == s:
                        if f.eid != e0.eid and f.color != e0.color:
                            length = depth + 1
                            if best is None or length < best[0]:
                                chain = [f.eid]
                                st = state
                                while st is not None:
                                    prev, eid = parent[st]
                                    chain.append(eid)
                                    st = prev
                                chain.reverse()
                                best = (length, s, chain)
                        continue
                    if w not in core or w < s or visited & (1 << pos[w]):
                        continue
                    nxt = (w, f.color, visited | (1 << pos[w]))
                    if nxt not in parent:
                        parent[nxt] = (state, f.eid)
                        q.append(nxt)
    if best is None:
        return None
    _, s, eids = best
    verts = [s]
    for eid in eids:
        verts.append(G.edge(eid).other(verts[-1]))
    return Walk(vertices=tuple(verts), edges=tuple(eids))


def has_pc_cycle(
    G: EdgeColoredGraph,
    want_certificate: bool = True,
    search_bound: int = CYCLE_SEARCH_DEFAULT_BOUND,
) -> DetectionResult:
    """Decision: the level-1 peel gets stuck exactly when a properly
    colored cycle exists, and every such cycle survives the peel. The
    certificate search runs on the stuck remainder, capped by its size."""
    _, core = _eliminate_type1(G)
    found = bool(core)
    if not found or not want_certificate:
        return DetectionResult(found=found)
    if len(core) > search_bound:
        return DetectionResult(found=True, certificate_capped=True)
    walk = _shortest_pc_cycle(G, core)
    if walk is None:
        raise InvariantViolation("level-1 peel stuck but cycle search found none")
    if not walk.is_cycle():
        raise InvariantViolation("cycle certificate is not a cycle")
    return DetectionResult(found=True, certificate=_checked(G, walk, "cycle"))
