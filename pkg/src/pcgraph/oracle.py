"""Exhaustive reference implementations and instance generators.

Everything here trades time for obviousness: permutation scans, subset
scans, and explicit path enumeration, each behind a hard size bound.
None of it shares search logic with the fast algorithms; the only
common ground is the definitional checker verify_ordering and the
shared graph type. Tests compare the two sides on small inputs.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

from .acyclicity import recognize_type5, verify_ordering
from .core import EdgeColoredGraph, Walk, build_graph, is_pc_walk
from .errors import CapacityError, GraphError, InfeasibleSeparatorError
from .reductions import BetweennessInstance, Digraph, PlainGraph, RbpmInstance

RECOGNIZE_BOUND = 8
SEPARATOR_BOUND = 12
DELETION_BOUND = 10


# ---------------------------------------------------------------------------
# path and cycle enumeration


def enumerate_pc_paths(G: EdgeColoredGraph, x: int, y: int) -> tuple[Walk, ...]:
    """All properly colored simple x-y paths, in depth-first edge-id
    order. Exponentially many in the worst case; callers bound sizes."""
    known = set(G.vertices)
    if x not in known or y not in known or x == y:
        raise GraphError("enumeration needs two distinct vertices in the graph")
    out: list[Walk] = []

    def go(v, last, visited, verts, eids):
        for e in sorted(G.incident(v), key=lambda e: e.eid):
            if last is not None and e.color == last:
                continue
            w = e.other(v)
            if w == y:
                out.append(Walk(vertices=(*verts, y), edges=(*eids, e.eid)))
            elif w not in visited:
                go(w, e.color, visited | {w}, (*verts, w), (*eids, e.eid))

    go(x, None, {x}, (x,), ())
    return tuple(out)


def pc_path_exists(
    G: EdgeColoredGraph,
    x: int,
    y: int,
    banned_vertices=(),
    banned_edges=(),
) -> bool:
    """Depth-first existence check used to re-verify separators."""
    banned_v = set(banned_vertices)
    banned_e = set(banned_edges)
    if x in banned_v or y in banned_v:
        raise GraphError("terminals cannot be banned")
    stack = [(x, None, frozenset({x}))]
    seen = set()
    while stack:
        v, last, visited = stack.pop()
        for e in sorted(G.incident(v), key=lambda e: e.eid, reverse=True):
            if e.eid in banned_e or (last is not None and e.color == last):
                continue
            w = e.other(v)
            if w == y:
                return True
            if w in banned_v or w in visited:
                continue
            state = (w, e.color, visited | {w})
            if state not in seen:
                seen.add(state)
                stack.append(state)
    return False


def enumerate_cycles(G: EdgeColoredGraph) -> Iterator[Walk]:
    """Every cycle exactly once up to rotation and reflection, anchored
    at its smallest vertex; two parallel edges count as a cycle."""
    for s in G.vertices:
        by_neighbor: dict[int, list[int]] = {}
        for e in sorted(G.incident(s), key=lambda e: e.eid):
            w = e.other(s)
            if w > s:
                by_neighbor.setdefault(w, []).append(e.eid)
        for w in sorted(by_neighbor):
            eids = by_neighbor[w]
            for a, b in combinations(eids, 2):
                yield Walk(vertices=(s, w, s), edges=(a, b))

        def grow(verts, eids, visited):
            v = verts[-1]
            for e in sorted(G.incident(v), key=lambda e: e.eid):
                w = e.other(v)
                if w == s:
                    if len(verts) >= 3 and verts[1] < verts[-1]:
                        yield Walk(vertices=(*verts, s), edges=(*eids, e.eid))
                elif w > s and w not in visited:
                    yield from grow((*verts, w), (*eids, e.eid), visited | {w})

        yield from grow((s,), (), frozenset())


# ---------------------------------------------------------------------------
# ground-truth structure detectors


def brute_has_pc_cycle(G: EdgeColoredGraph) -> bool:
    return any(is_pc_walk(G, c) for c in enumerate_cycles(G))


def brute_has_pc_closed_trail(G: EdgeColoredGraph) -> bool:
    eids = sorted(e.eid for e in G.edges)
    pos = {eid: i for i, eid in enumerate(eids)}
    for e0_id in eids:
        e0 = G.edge(e0_id)
        start = (e0.v, e0.color, 1 << pos[e0_id])
        seen = {start}
        stack = [start]
        while stack:
            v, last, used = stack.pop()
            for f in G.incident(v):
                if f.eid < e0_id or used & (1 << pos[f.eid]) or f.color == last:
                    continue
                w = f.other(v)
                if w == e0.u and f.color != e0.color:
                    return True
                state = (w, f.color, used | (1 << pos[f.eid]))
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return False


def brute_has_pc_closed_walk(G: EdgeColoredGraph) -> bool:
    """Cycle detection in the arrival-state digraph over (vertex, color
    just used); independent of the deletion-based decision."""
    adj: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for e in G.edges:
        for v, w in ((e.u, e.v), (e.v, e.u)):
            for arrival in G.colors_at(v):
                if arrival != e.color:
                    adj.setdefault((v, arrival), set()).add((w, e.color))
    color = dict.fromkeys(adj, 0)  # 0 fresh, 1 on stack, 2 done
    for root in sorted(adj):
        if color[root]:
            continue
        stack = [(root, iter(sorted(adj[root])))]
        color[root] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt not in adj:
                    continue
                if color[nxt] == 1:
                    return True
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(sorted(adj[nxt]))))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                stack.pop()
    return False


def brute_level5_by_cycle_parity(G: EdgeColoredGraph) -> bool:
    """The cycle-side characterization of level 5: no vertex sees three
    colors, and every cycle has a positive even number of vertices
    whose two cycle edges share a color."""
    from .acyclicity import count_cycle_monochromatic

    if any(len(G.colors_at(v)) > 2 for v in G.vertices):
        return False
    for cyc in enumerate_cycles(G):
        k = count_cycle_monochromatic(G, cyc)
        if k == 0 or k % 2 == 1:
            return False
    return True


def is_bipartite(G: EdgeColoredGraph) -> bool:
    side: dict[int, int] = {}
    for root in G.vertices:
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for e in G.incident(v):
                w = e.other(v)
                if w not in side:
                    side[w] = side[v] ^ 1
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# exhaustive counterparts of the fast algorithms


def brute_recognize(G: EdgeColoredGraph, type_k: int) -> tuple[int, ...] | None:
    """First permutation in lexicographic order passing verify_ordering."""
    if G.n > RECOGNIZE_BOUND:
        raise CapacityError(
            f"permutation scan bounded at {RECOGNIZE_BOUND} vertices"
        )
    for perm in permutations(G.vertices):
        if verify_ordering(G, perm, type_k):
            return perm
    return None


def _internal_sets(paths) -> list[frozenset[int]]:
    return [frozenset(p.vertices[1:-1]) for p in paths]


def brute_min_separator(
    G: EdgeColoredGraph, x: int, y: int
) -> tuple[int, tuple[int, ...]]:
    """Smallest vertex set (then lexicographically first) meeting every
    properly colored x-y path."""
    if G.n > SEPARATOR_BOUND:
        raise CapacityError(f"subset scan bounded at {SEPARATOR_BOUND} vertices")
    if G.has_edge_between(x, y):
        raise InfeasibleSeparatorError("terminals are adjacent")
    hit_sets = _internal_sets(enumerate_pc_paths(G, x, y))
    internal = sorted(set(G.vertices) - {x, y})
    for k in range(len(internal) + 1):
        for S in combinations(internal, k):
            chosen = set(S)
            if all(h & chosen for h in hit_sets):
                return k, tuple(S)
    raise GraphError("some path avoids every internal vertex")


def brute_max_packing(
    G: EdgeColoredGraph, x: int, y: int, mode: str = "internal"
) -> tuple[int, tuple[Walk, ...]]:
    """Largest family of properly colored x-y paths, disjoint on
    internal vertices (mode "internal") or on edges (mode "edges").
    Branch and bound over the full path enumeration, preferring
    earlier paths, so the first maximum found is deterministic."""
    if G.n > SEPARATOR_BOUND:
        raise CapacityError(f"path scan bounded at {SEPARATOR_BOUND} vertices")
    paths = enumerate_pc_paths(G, x, y)
    if mode == "internal":
        footprint = _internal_sets(paths)
    elif mode == "edges":
        footprint = [frozenset(p.edges) for p in paths]
    else:
        raise GraphError(f"unknown packing mode '{mode}'")
    best: list[int] = []

    def bb(i: int, chosen: list[int], used: frozenset[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if i == len(paths) or len(chosen) + len(paths) - i <= len(best):
            return
        if not (footprint[i] & used):
            bb(i + 1, chosen + [i], used | footprint[i])
        bb(i + 1, chosen, used)

    bb(0, [], frozenset())
    return len(best), tuple(paths[i] for i in best)


def brute_min_edge_separator(
    G: EdgeColoredGraph, x: int, y: int
) -> tuple[int, tuple[int, ...]]:
    """Smallest edge set whose removal kills every properly colored
    x-y path. A terminal edge is fair game here."""
    if G.n > SEPARATOR_BOUND:
        raise CapacityError(f"subset scan bounded at {SEPARATOR_BOUND} vertices")
    hit_sets = [frozenset(p.edges) for p in enumerate_pc_paths(G, x, y)]
    eids = sorted(e.eid for e in G.edges)
    for k in range(len(eids) + 1):
        for S in combinations(eids, k):
            chosen = set(S)
            if all(h & chosen for h in hit_sets):
                return k, tuple(S)
    raise GraphError("unreachable: the full edge set separates everything")


def brute_max_edge_packing(
    G: EdgeColoredGraph, x: int, y: int
) -> tuple[int, tuple[Walk, ...]]:
    return brute_max_packing(G, x, y, mode="edges")


def brute_min_deletion_to_type5(
    G: EdgeColoredGraph,
) -> tuple[int, tuple[int, ...]]:
    """Smallest vertex set whose removal leaves a level-5 graph."""
    if G.n > DELETION_BOUND:
        raise CapacityError(f"subset scan bounded at {DELETION_BOUND} vertices")
    verts = G.vertices
    for k in range(len(verts) + 1):
        for S in combinations(verts, k):
            if recognize_type5(G.without_vertices(S)) is not None:
                return k, tuple(S)
    raise GraphError("unreachable: the empty graph has level 5")


# ---------------------------------------------------------------------------
# exhaustive answers for the source problems of the reductions


def brute_min_vertex_cover(H: PlainGraph) -> tuple[int, tuple[int, ...]]:
    verts = range(1, H.n + 1)
    for k in range(H.n + 1):
        for S in combinations(verts, k):
            chosen = set(S)
            if all(u in chosen or v in chosen for u, v in H.edges):
                return k, tuple(S)
    raise GraphError("unreachable")


def _digraph_acyclic(n: int, arcs, removed: set[int]) -> bool:
    indeg = {v: 0 for v in range(1, n + 1) if v not in removed}
    out: dict[int, list[int]] = {v: [] for v in indeg}
    for u, v in arcs:
        if u in indeg and v in indeg:
            out[u].append(v)
            indeg[v] += 1
    queue = [v for v in indeg if indeg[v] == 0]
    done = 0
    while queue:
        v = queue.pop()
        done += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return done == len(indeg)


def brute_min_fvs(D: Digraph) -> tuple[int, tuple[int, ...]]:
    verts = range(1, D.n + 1)
    for k in range(D.n + 1):
        for S in combinations(verts, k):
            if _digraph_acyclic(D.n, D.arcs, set(S)):
                return k, tuple(S)
    raise GraphError("unreachable")


def _plain_bipartite(n: int, edges, removed: set[int]) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1) if v not in removed}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].append(v)
            adj[v].append(u)
    side: dict[int, int] = {}
    for root in adj:
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in side:
                    side[w] = side[v] ^ 1
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def brute_min_odd_cycle_transversal(H: PlainGraph) -> tuple[int, tuple[int, ...]]:
    verts = range(1, H.n + 1)
    for k in range(H.n + 1):
        for S in combinations(verts, k):
            if _plain_bipartite(H.n, H.edges, set(S)):
                return k, tuple(S)
    raise GraphError("unreachable")


def brute_betweenness(inst: BetweennessInstance) -> tuple[int, ...] | None:
    """First permutation placing each middle element between the other
    two, in either direction."""
    for perm in permutations(range(1, inst.n + 1)):
        pos = {v: i for i, v in enumerate(perm)}
        if all(
            pos[x] < pos[y] < pos[z] or pos[z] < pos[y] < pos[x]
            for x, y, z in inst.triples
        ):
            return perm
    return None


def brute_restricted_matching(inst: RbpmInstance) -> tuple[int, ...] | None:
    """A perfect matching using instance edges, at most one per pair;
    returned as edge indices, or None."""
    index = {e: i for i, e in enumerate(inst.edges)}
    pair_of = {}
    for p, (a, b) in enumerate(inst.pairs):
        pair_of[a] = p
        pair_of[b] = p
    for sigma in permutations(range(1, inst.k + 1)):
        eidx = []
        ok = True
        for i, j in enumerate(sigma, start=1):
            idx = index.get((i, j))
            if idx is None:
                ok = False
                break
            eidx.append(idx)
        if not ok:
            continue
        used_pairs = [pair_of[i] for i in eidx if i in pair_of]
        if len(used_pairs) == len(set(used_pairs)):
            return tuple(eidx)
    return None


# ---------------------------------------------------------------------------
# instance generators


def iter_connected_two_colored(n_max: int = 5, n_min: int = 1) -> Iterator[EdgeColoredGraph]:
    """Every connected simple graph on 1..n labeled vertices, every
    two-coloring of its edges. 55,895 graphs through n_max = 5."""
    for n in range(n_min, n_max + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for bits in range(1 << len(pairs)):
            subset = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
            for u, v in subset:
                adj[u].append(v)
                adj[v].append(u)
            seen = {1}
            stack = [1]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != n:
                continue
            m = len(subset)
            for colors in range(1 << m):
                yield build_graph(
                    n,
                    [
                        (u, v, 1 + (colors >> i & 1))
                        for i, (u, v) in enumerate(subset)
                    ],
                    c=2,
                )


def random_multigraph(rng, n_max: int = 7, m_max: int = 12, c_max: int = 3) -> EdgeColoredGraph:
    """Parallel edges allowed; exact same-colored duplicates are skipped
    so the build never warns."""
    n = rng.randint(1, n_max)
    c = rng.randint(1, c_max)
    edges = []
    seen = set()
    if n >= 2:
        for _ in range(rng.randint(0, m_max)):
            u = rng.randint(1, n)
            v = rng.randint(1, n)
            if u == v:
                continue
            color = rng.randint(1, c)
            key = (min(u, v), max(u, v), color)
            if key in seen:
                continue
            seen.add(key)
            edges.append((u, v, color))
    return build_graph(n, edges, c=c)


def random_type4_instance(rng, n_max: int = 10, c_max: int = 3):
    """A graph that is level 4 by construction, with terminals.

    Draw an ordering and per-vertex forward and backward colors, then
    keep only edges both endpoints agree on. The ordering witnesses
    level 4; the terminals are its endpoints, never adjacent.
    Returns (graph, x, y).
    """
    n = rng.randint(4, n_max)
    c = rng.randint(2, c_max)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    fwd = {v: rng.randint(1, c) for v in perm}
    bwd = {v: rng.randint(1, c) for v in perm}
    p = rng.uniform(0.25, 0.9)
    x, y = perm[0], perm[-1]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            u, v = perm[i], perm[j]
            if {u, v} == {x, y}:
                continue
            if fwd[u] == bwd[v] and rng.random() < p:
                edges.append((u, v, fwd[u]))
    return build_graph(n, edges, c=c), x, y


def random_betweenness_instance(rng, n_max: int = 5, t_max: int = 4) -> BetweennessInstance:
    n = rng.randint(3, n_max)
    want = rng.randint(1, t_max)
    universe = [
        (x, y, z)
        for x in range(1, n + 1)
        for y in range(1, n + 1)
        for z in range(1, n + 1)
        if len({x, y, z}) == 3
    ]
    rng.shuffle(universe)
    return BetweennessInstance(n=n, triples=tuple(sorted(universe[:want])))


def random_rbpm_instance(rng, k_max: int = 4, image_cap: int = 12) -> RbpmInstance:
    """Sizes keep the packing image inside the exhaustive-search bound;
    pairs may share endpoints so normalization gets exercised."""
    k = rng.randint(1, k_max)
    edges = [
        (i, j)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
        if rng.random() < 0.55
    ]
    max_pairs = max(0, (image_cap - (2 * k + 2)) // 2)
    idx = list(range(len(edges)))
    rng.shuffle(idx)
    pairs = []
    at = 0
    while at + 1 < len(idx) and len(pairs) < max_pairs:
        if rng.random() < 0.6:
            pairs.append(tuple(sorted((idx[at], idx[at + 1]))))
            at += 2
        else:
            at += 1
    return RbpmInstance(k=k, edges=tuple(edges), pairs=tuple(pairs))
