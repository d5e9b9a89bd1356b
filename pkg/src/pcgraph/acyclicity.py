"""Recognition of the five ordering-based acyclicity levels.

Each level k admits a vertex ordering constraining the colors of edges
that run forward (to later vertices) and, for k >= 4, backward:

  1  edges from v to each component of the later vertices share a color
  2  like 3, but only edges that are not bridges of the tail subgraph count
  3  forward edges share one color
  4  forward edges share one color and backward edges share one color
  5  like 4, and the two colors differ whenever both sides have edges

Level k+1 implies level k. verify_ordering checks a claimed ordering
clause by clause; the recognize_* functions search for one.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .core import (
    EdgeColoredGraph,
    Walk,
    _blocks,
    connected_components,
    monochromatic_vertices,
)
from .errors import CapacityError, GraphError, InvalidWalkError, InvariantViolation

TYPE4_DEFAULT_BOUND = 24
_TYPE4_NUMPY_CUTOVER = 17


def _check_permutation(G: EdgeColoredGraph, ordering) -> tuple[int, ...]:
    ordering = tuple(ordering)
    if sorted(ordering) != list(G.vertices):
        raise GraphError("ordering is not a permutation of the vertex set")
    return ordering


def verify_ordering(G: EdgeColoredGraph, ordering, type_k: int) -> bool:
    """Check the level-k clause at every position of the ordering."""
    if type_k not in (1, 2, 3, 4, 5):
        raise GraphError(f"no acyclicity level {type_k}")
    ordering = _check_permutation(G, ordering)
    n = len(ordering)
    for i, v in enumerate(ordering):
        after = set(ordering[i + 1 :])
        before = set(ordering[:i])
        forward = [e for e in G.incident(v) if e.other(v) in after]
        if type_k == 1:
            comp_of = {}
            for ci, comp in enumerate(connected_components(G, restrict=after)):
                for w in comp:
                    comp_of[w] = ci
            per_comp: dict[int, set[int]] = {}
            for e in forward:
                per_comp.setdefault(comp_of[e.other(v)], set()).add(e.color)
            if any(len(colors) > 1 for colors in per_comp.values()):
                return False
        elif type_k == 2:
            from .core import bridges

            tail_bridges = bridges(G, restrict=after | {v})
            colors = {e.color for e in forward if e.eid not in tail_bridges}
            if len(colors) > 1:
                return False
        else:
            if len({e.color for e in forward}) > 1:
                return False
            if type_k >= 4:
                back_colors = {e.color for e in G.incident(v) if e.other(v) in before}
                if len(back_colors) > 1:
                    return False
                if (
                    type_k == 5
                    and forward
                    and back_colors
                    and {forward[0].color} == back_colors
                ):
                    return False
    return True


# ---------------------------------------------------------------------------
# level 1: peel vertices whose edges are monochromatic per block


def _block_eligible(G: EdgeColoredGraph, alive: set[int]) -> set[int]:
    """Vertices whose incident edges, within each block of the alive
    subgraph, use a single color.

    Equivalent to: every component of (alive - z) sees one color from z.
    Two blocks at z cannot attach to the same component of alive - z, or
    they would merge into one block.
    """
    colors_per_block_vertex: dict[tuple[int, int], set[int]] = {}
    bad: set[int] = set()
    for bi, blk in enumerate(_blocks(G, alive)):
        for eid in blk:
            e = G.edge(eid)
            for v in (e.u, e.v):
                key = (bi, v)
                seen = colors_per_block_vertex.setdefault(key, set())
                seen.add(e.color)
                if len(seen) > 1:
                    bad.add(v)
    return alive - bad


def _eliminate_type1(G: EdgeColoredGraph) -> tuple[list[int], set[int]]:
    """Greedy peel; returns (emitted prefix, stuck remainder).

    Remainder is empty exactly when the graph has a level-1 ordering. A
    vertex monochromatic in the remainder is always eligible, which lets
    most rounds skip the block computation.
    """
    alive = set(G.vertices)
    out: list[int] = []
    while alive:
        mono = monochromatic_vertices(G, restrict=alive)
        pick = None
        if mono and min(mono) == min(alive):
            pick = min(alive)
        else:
            eligible = _block_eligible(G, alive)
            if eligible:
                pick = min(eligible)
        if pick is None:
            break
        out.append(pick)
        alive.discard(pick)
    return out, alive


def recognize_type1(G: EdgeColoredGraph) -> tuple[int, ...] | None:
    ordering, remainder = _eliminate_type1(G)
    return None if remainder else tuple(ordering)


# ---------------------------------------------------------------------------
# level 2: delete bridges and monochromatic vertices to a fixpoint


def trail_deletion_fixpoint(G: EdgeColoredGraph) -> tuple[set[int], set[int]]:
    """Repeatedly drop bridge edges and monochromatic vertices.

    Returns the surviving (vertices, edge ids). The survivors are empty
    exactly when the graph has no properly colored closed trail, and any
    such trail lives entirely inside the survivors.
    """
    alive_v = set(G.vertices)
    alive_e = {e.eid for e in G.edges}
    while True:
        cut = {blk[0] for blk in _blocks(G, alive_v, alive_e) if len(blk) == 1}
        alive_e -= cut
        mono = set()
        for v in alive_v:
            colors = {
                e.color
                for e in G.incident(v)
                if e.eid in alive_e and e.other(v) in alive_v
            }
            if len(colors) <= 1:
                mono.add(v)
        alive_e -= {
            e.eid for v in mono for e in G.incident(v) if e.eid in alive_e
        }
        alive_v -= mono
        if not cut and not mono:
            return alive_v, alive_e


def recognize_type2(G: EdgeColoredGraph) -> tuple[int, ...] | None:
    survivors, _ = trail_deletion_fixpoint(G)
    if survivors:
        return None
    # Certificate: greedily emit the smallest vertex whose non-bridge
    # edges in the current induced remainder share a color.
    alive = set(G.vertices)
    out: list[int] = []
    while alive:
        cut = {blk[0] for blk in _blocks(G, alive) if len(blk) == 1}
        pick = None
        for v in sorted(alive):
            colors = {
                e.color
                for e in G.incident(v)
                if e.other(v) in alive and e.eid not in cut
            }
            if len(colors) <= 1:
                pick = v
                break
        if pick is None:
            raise InvariantViolation(
                "deletion fixpoint is empty but the greedy level-2 peel stuck"
            )
        out.append(pick)
        alive.discard(pick)
    ordering = tuple(out)
    if not verify_ordering(G, ordering, 2):
        raise InvariantViolation("greedy level-2 ordering failed re-verification")
    return ordering


# ---------------------------------------------------------------------------
# level 3: peel monochromatic vertices


def recognize_type3(G: EdgeColoredGraph) -> tuple[int, ...] | None:
    alive = set(G.vertices)
    out: list[int] = []
    while alive:
        mono = monochromatic_vertices(G, restrict=alive)
        if not mono:
            return None
        pick = min(mono)
        out.append(pick)
        alive.discard(pick)
    return tuple(out)


# ---------------------------------------------------------------------------
# level 4: subset dynamic program


def _color_bit_masks(G: EdgeColoredGraph) -> tuple[dict[int, int], list[list[int]]]:
    """Bit index per vertex and, per vertex, neighbor masks by color."""
    bit = {v: i for i, v in enumerate(G.vertices)}
    masks: dict[int, dict[int, int]] = {v: {} for v in G.vertices}
    for e in G.edges:
        masks[e.u][e.color] = masks[e.u].get(e.color, 0) | (1 << bit[e.v])
        masks[e.v][e.color] = masks[e.v].get(e.color, 0) | (1 << bit[e.u])
    per_vertex = [list(masks[v].values()) for v in G.vertices]
    return bit, per_vertex

def _extend_ok(vmasks: list[int], prefix: int, comp: int) -> bool:
    """May a vertex with these color masks sit right after prefix?"""
    back = fwd = 0
    for m in vmasks:
        if m & prefix:
            back += 1
            if back > 1:
                return False
        if m & comp:
            fwd += 1
            if fwd > 1:
                return False
    return True


def _type4_dp_python(n: int, per_vertex: list[list[int]]) -> bytearray:
    full = (1 << n) - 1
    dp = bytearray(1 << n)
    dp[0] = 1
    frontier = [0]
    for _ in range(n):
        nxt = []
        for s in frontier:
            rest = full & ~s
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                t = s | low
                if not dp[t] and _extend_ok(per_vertex[v], s, full & ~t):
                    dp[t] = 1
                    nxt.append(t)
        frontier = nxt
    return dp


def _type4_dp_numpy(n: int, per_vertex: list[list[int]]) -> bytearray:
    import numpy as np

    full = (1 << n) - 1
    dp = bytearray(1 << n)
    dp[0] = 1
    frontier = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        if frontier.size == 0:
            break
        collected = []
        for v in range(n):
            bit = 1 << v
            sel = frontier[(frontier & bit) == 0]
            if sel.size == 0:
                continue
            comp = full & ~(sel | bit)
            back = np.zeros(sel.shape, dtype=np.int16)
            fwd = np.zeros(sel.shape, dtype=np.int16)
            for m in per_vertex[v]:
                back += (sel & m) != 0
                fwd += (comp & m) != 0
            ok = (back <= 1) & (fwd <= 1)
            if ok.any():
                collected.append(sel[ok] | bit)
        if not collected:
            break
        nxt = np.unique(np.concatenate(collected))
        fresh = [int(t) for t in nxt if not dp[t]]
        for t in fresh:
            dp[t] = 1
        frontier = np.asarray(fresh, dtype=np.int64)
    return dp


def recognize_type4(
    G: EdgeColoredGraph, bound: int = TYPE4_DEFAULT_BOUND, engine: str = "auto"
) -> tuple[int, ...] | None:
    """Subset DP over prefix sets; exponential, hence the vertex bound."""
    n = G.n
    if n > bound:
        raise CapacityError(
            f"level-4 search needs 2^{n} subset states, over the bound of {bound} vertices"
        )
    if n == 0:
        return ()
    if engine == "auto":
        engine = "numpy" if n >= _TYPE4_NUMPY_CUTOVER else "python"
    if engine not in ("python", "numpy"):
        raise GraphError(f"unknown level-4 engine '{engine}'")
    _, per_vertex = _color_bit_masks(G)
    dp = (_type4_dp_python if engine == "python" else _type4_dp_numpy)(n, per_vertex)
    full = (1 << n) - 1
    if not dp[full]:
        return None
    # Rebuild from the full set backward, smallest vertex index first.
    rev: list[int] = []
    s = full
    while s:
        rest = s
        while True:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            prev = s & ~low
            if dp[prev] and _extend_ok(per_vertex[v], prev, full & ~s):
                rev.append(v)
                s = prev
                break
            if not rest:
                raise InvariantViolation("level-4 table has no backward step")
    verts = G.vertices
    return tuple(verts[i] for i in reversed(rev))


# ---------------------------------------------------------------------------
# level 5: forced orientation from a seed vertex


@dataclass(frozen=True)
class Orientation:
    """Total edge orientation with per-vertex (in, out) colors."""

    arcs: Mapping[int, tuple[int, int]]  # edge id -> (tail, head)
    marks: Mapping[int, tuple[int | None, int | None]]  # vertex -> (in, out)


@dataclass(frozen=True)
class Conflict:
    """First orientation clash found, with the two offending edges."""

    vertex: int
    kind: str  # two-in-differ | two-out-differ | in-out-same
    edges: tuple[int, int]


@dataclass(frozen=True)
class PrecheckFailure:
    """A vertex sees three or more colors; no level-5 ordering exists."""

    vertex: int
    colors: frozenset[int]


def procedure1_orient(
    G: EdgeColoredGraph, x: int, first_color_out: int
) -> Orientation | Conflict | PrecheckFailure:
    """Propagate a forced orientation outward from x.

    Edges of first_color_out leave x, edges of x's other color enter it;
    every reached vertex forces its own edges the same way. Returns the
    completed Orientation, or the first Conflict met in breadth-first
    order (edges scanned by id), or a PrecheckFailure when some vertex
    sees three or more colors.
    """
    if x not in set(G.vertices):
        raise GraphError(f"start vertex {x} not in graph")
    if len(connected_components(G)) > 1:
        raise GraphError("orientation procedure needs a connected graph")
    for v in G.vertices:
        colors = G.colors_at(v)
        if len(colors) > 2:
            return PrecheckFailure(v, colors)

    colors_x = G.colors_at(x)
    in_rest = colors_x - {first_color_out}
    if len(in_rest) > 1:
        raise GraphError(
            f"color {first_color_out} leaves both of {sorted(colors_x)} pointing into {x}"
        )
    marks: dict[int, list[int | None]] = {x: [next(iter(in_rest), None), first_color_out if first_color_out in colors_x else None]}
    first_in: dict[int, int] = {}
    first_out: dict[int, int] = {}
    arcs: dict[int, tuple[int, int]] = {}
    queue = deque([x])

    def realize(eid: int, color: int, tail: int, head: int) -> Conflict | None:
        if tail in first_out and G.edge(first_out[tail]).color != color:
            return Conflict(tail, "two-out-differ", (first_out[tail], eid))
        if tail in first_in and G.edge(first_in[tail]).color == color:
            return Conflict(tail, "in-out-same", (first_in[tail], eid))
        if head in first_in and G.edge(first_in[head]).color != color:
            return Conflict(head, "two-in-differ", (first_in[head], eid))
        if head in first_out and G.edge(first_out[head]).color == color:
            return Conflict(head, "in-out-same", (first_out[head], eid))
        arcs[eid] = (tail, head)
        first_out.setdefault(tail, eid)
        first_in.setdefault(head, eid)
        for vertex, came_in in ((head, True), (tail, False)):
            if vertex not in marks:
                others = G.colors_at(vertex) - {color}
                other = next(iter(others), None)
                marks[vertex] = [color, other] if came_in else [other, color]
                queue.append(vertex)
        return None

    while queue:
        v = queue.popleft()
        in_c, out_c = marks[v]
        for e in sorted(G.incident(v), key=lambda e: e.eid):
            if e.eid in arcs:
                continue
            w = e.other(v)
            if e.color == out_c:
                clash = realize(e.eid, e.color, v, w)
            elif e.color == in_c:
                clash = realize(e.eid, e.color, w, v)
            else:
                raise InvariantViolation(
                    f"edge {e.eid} color {e.color} matches neither mark at {v}"
                )
            if clash is not None:
                return clash
    return Orientation(
        arcs=dict(arcs), marks={v: (m[0], m[1]) for v, m in marks.items()}
    )


def _topological_order(vertices: list[int], arcs) -> list[int] | None:
    """Kahn's algorithm, smallest vertex id first; None on a cycle."""
    indeg = {v: 0 for v in vertices}
    out: dict[int, list[int]] = {v: [] for v in vertices}
    for tail, head in arcs:
        indeg[head] += 1
        out[tail].append(head)
    heap = [v for v in vertices if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == len(vertices) else None


def recognize_type5(G: EdgeColoredGraph) -> tuple[int, ...] | None:
    """Per component: orient from the smallest vertex, then sort the
    resulting digraph topologically. Isolated vertices go last."""
    ordering: list[int] = []
    isolated: list[int] = []
    for comp in connected_components(G):
        if len(comp) == 1:
            isolated.append(comp[0])
            continue
        sub = G.induced(comp)
        x = comp[0]
        result = procedure1_orient(sub, x, min(sub.colors_at(x)))
        if not isinstance(result, Orientation):
            return None
        topo = _topological_order(comp, result.arcs.values())
        if topo is None:
            return None
        ordering.extend(topo)
    ordering.extend(sorted(isolated))
    return tuple(ordering)


def count_cycle_monochromatic(G: EdgeColoredGraph, cycle: Walk) -> int:
    """Vertices of the cycle whose two cycle edges share a color."""
    cycle.validate_in(G)
    if not cycle.is_cycle():
        raise InvalidWalkError("count requires a cycle")
    colors = [G.edge(eid).color for eid in cycle.edges]
    k = len(colors)
    return sum(1 for i in range(k) if colors[i - 1] == colors[i])


# ---------------------------------------------------------------------------
# the combined classifier


@dataclass(frozen=True)
class ClassifyResult:
    """Highest satisfied level with per-level verdicts and witnesses.

    level is None when the level-4 search was skipped for capacity and
    the answer genuinely hangs on it (levels 1..3 hold, 5 fails).
    A None verdict marks that undecided level.
    """

    level: int | None
    verdicts: Mapping[int, bool | None]
    orderings: Mapping[int, tuple[int, ...]] = field(default_factory=dict)
    type4_skipped: bool = False


def classify(
    G: EdgeColoredGraph, type4_bound: int = TYPE4_DEFAULT_BOUND
) -> ClassifyResult:
    verdicts: dict[int, bool | None] = {}
    orderings: dict[int, tuple[int, ...]] = {}
    recognizers = {1: recognize_type1, 2: recognize_type2, 3: recognize_type3}
    level = 0
    for k in (1, 2, 3):
        found = recognizers[k](G)
        verdicts[k] = found is not None
        if found is None:
            for rest in range(k + 1, 6):
                verdicts[rest] = False
            return ClassifyResult(level=k - 1, verdicts=verdicts, orderings=orderings)
        orderings[k] = found
        level = k

    skipped = G.n > type4_bound
    if not skipped:
        found4 = recognize_type4(G, bound=type4_bound)
        verdicts[4] = found4 is not None
        if found4 is None:
            verdicts[5] = False
            return ClassifyResult(level=3, verdicts=verdicts, orderings=orderings)
        orderings[4] = found4
        level = 4

    found5 = recognize_type5(G)
    verdicts[5] = found5 is not None
    if found5 is not None:
        orderings[5] = found5
        if skipped:
            # A level-5 ordering is a level-4 ordering, bound or not.
            verdicts[4] = True
            orderings[4] = found5
        level = 5
    elif skipped:
        verdicts[4] = None
        return ClassifyResult(
            level=None, verdicts=verdicts, orderings=orderings, type4_skipped=True
        )
    return ClassifyResult(
        level=level, verdicts=verdicts, orderings=orderings, type4_skipped=skipped
    )
