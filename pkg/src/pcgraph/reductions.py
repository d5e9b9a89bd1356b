"""Instance transforms into edge-colored graphs.

Every generator returns (graph, meta) where meta is a JSON-ready dict
naming the terminals and the vertex correspondence, so answers can be
mapped back. Vertex numbering is pinned: original ids come first,
gadget vertices are appended in construction order. Blue is color 1,
red is color 2 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import EdgeColoredGraph, build_graph
from .errors import GraphError, ParseError, UnsupportedTransformError

BLUE = 1
RED = 2


# ---------------------------------------------------------------------------
# instance types


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on vertices 1..n with distinct arcs."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"arc ({u},{v}) leaves 1..{self.n}")
            if u == v:
                raise GraphError(f"loop arc at {u}")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc ({u},{v})")
            seen.add((u, v))


@dataclass(frozen=True)
class PlainGraph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge ({u},{v}) leaves 1..{self.n}")
            if u == v:
                raise GraphError(f"loop edge at {u}")
            if (min(u, v), max(u, v)) in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add((min(u, v), max(u, v)))


@dataclass(frozen=True)
class BetweennessInstance:
    """Ordered triples (x, y, z) asking that y land between x and z."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for t in self.triples:
            if len(set(t)) != 3:
                raise GraphError(f"triple {t} repeats an element")
            if any(not 1 <= e <= self.n for e in t):
                raise GraphError(f"triple {t} leaves 1..{self.n}")
            if t in seen:
                raise GraphError(f"duplicate triple {t}")
            seen.add(t)


@dataclass(frozen=True)
class RbpmInstance:
    """Perfect matching in a balanced bipartite graph, restricted so
    that at most one edge is used from each listed pair.

    edges are (i, j) with u_i on the left, v_j on the right, both
    1-based. pairs hold 0-based indices into edges.
    """

    k: int
    edges: tuple[tuple[int, int], ...]
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for i, j in self.edges:
            if not (1 <= i <= self.k and 1 <= j <= self.k):
                raise GraphError(f"edge ({i},{j}) leaves 1..{self.k}")
            if (i, j) in seen:
                raise GraphError(f"duplicate edge ({i},{j})")
            seen.add((i, j))
        used = set()
        for a, b in self.pairs:
            if a == b:
                raise GraphError("pair must name two different edges")
            for idx in (a, b):
                if not 0 <= idx < len(self.edges):
                    raise GraphError(f"pair index {idx} out of range")
                if idx in used:
                    raise GraphError(f"edge {idx} appears in two pairs")
                used.add(idx)


# ---------------------------------------------------------------------------
# generators


def digraph_to_2ecg(D: Digraph) -> tuple[EdgeColoredGraph, dict]:
    """Subdivide every arc: blue into the midpoint, red out of it.

    Directed cycles of D correspond to properly colored cycles; D is
    acyclic exactly when the image has level 1 (and then level 3).
    """
    edges = []
    arc_meta = []
    for i, (u, v) in enumerate(D.arcs):
        w = D.n + 1 + i
        edges.append((u, w, BLUE))
        edges.append((w, v, RED))
        arc_meta.append({"tail": u, "head": v, "midpoint": w})
    G = build_graph(D.n + len(D.arcs), edges, c=2)
    return G, {"kind": "digraph", "original_vertices": D.n, "arcs": arc_meta}


def betweenness_to_type4(inst: BetweennessInstance) -> tuple[EdgeColoredGraph, dict]:
    """Hardness gadget: one 4-vertex widget per triple, wired so a
    level-4 ordering exists exactly when the instance is satisfiable."""
    edges = []
    gadgets = []
    n = inst.n
    for g, (x, y, z) in enumerate(inst.triples):
        a_xy = n + 4 * g + 1
        b_xy = n + 4 * g + 2
        b_zy = n + 4 * g + 3
        a_zy = n + 4 * g + 4
        edges.append((x, a_xy, BLUE))
        edges.append((b_xy, b_zy, BLUE))
        edges.append((z, a_zy, BLUE))
        edges.append((y, b_xy, BLUE))
        edges.append((y, b_zy, BLUE))
        edges.append((a_xy, b_xy, RED))
        edges.append((b_zy, a_zy, RED))
        gadgets.append(
            {"triple": [x, y, z], "a_xy": a_xy, "b_xy": b_xy, "b_zy": b_zy, "a_zy": a_zy}
        )
    G = build_graph(n + 4 * len(inst.triples), edges, c=2)
    return G, {"kind": "betweenness", "elements": n, "gadgets": gadgets}


def vertex_cover_to_separator(H: PlainGraph) -> tuple[EdgeColoredGraph, dict]:
    """Red copy of H plus blue terminals x, y joined to every vertex.

    Properly colored x-y paths are exactly x-u-v-y over red edges uv, so
    minimum separators are minimum vertex covers of H.
    """
    x = H.n + 1
    y = H.n + 2
    edges = [(u, v, RED) for u, v in H.edges]
    edges += [(x, u, BLUE) for u in range(1, H.n + 1)]
    edges += [(u, y, BLUE) for u in range(1, H.n + 1)]
    G = build_graph(H.n + 2, edges, c=2)
    return G, {"kind": "vertex-cover", "x": x, "y": y, "elements": H.n}


def rbpm_to_packing(
    inst: RbpmInstance, auto_normalize: bool = True
) -> tuple[EdgeColoredGraph, dict]:
    """Restricted matchings become maximum path packings.

    Left vertex u_i keeps id i, right vertex v_j becomes k+j; x joins
    the left side in blue, the right side joins y in blue. An unpaired
    edge is a direct red edge; a pair becomes a two-vertex gadget whose
    crossing makes the two member edges exclude each other.

    Pairs whose edges share an endpoint are redundant (no matching uses
    both anyway); they are split into singletons when auto_normalize is
    set and rejected otherwise.
    """
    k = inst.k
    kept_pairs = []
    normalized = []
    for a, b in inst.pairs:
        ia, ja = inst.edges[a]
        ib, jb = inst.edges[b]
        if ia == ib or ja == jb:
            if not auto_normalize:
                raise UnsupportedTransformError(
                    f"pair ({a},{b}) shares an endpoint; normalize it first"
                )
            normalized.append([a, b])
        else:
            kept_pairs.append((a, b))

    x = 2 * k + 1
    y = 2 * k + 2
    edges = [(x, i, BLUE) for i in range(1, k + 1)]
    edges += [(k + j, y, BLUE) for j in range(1, k + 1)]
    paired = {idx for pair in kept_pairs for idx in pair}
    for idx, (i, j) in enumerate(inst.edges):
        if idx not in paired:
            edges.append((i, k + j, RED))
    pair_meta = []
    for p, (a, b) in enumerate(kept_pairs):
        i1, j1 = inst.edges[a]
        i2, j2 = inst.edges[b]
        p_id = 2 * k + 2 + 2 * p + 1
        q_id = 2 * k + 2 + 2 * p + 2
        edges.append((i1, p_id, RED))
        edges.append((k + j2, p_id, RED))
        edges.append((i2, q_id, RED))
        edges.append((k + j1, q_id, RED))
        edges.append((p_id, q_id, BLUE))
        pair_meta.append({"edges": [a, b], "p": p_id, "q": q_id})
    G = build_graph(2 * k + 2 + 2 * len(kept_pairs), edges, c=2)
    meta = {
        "kind": "rbpm",
        "x": x,
        "y": y,
        "k": k,
        "right_offset": k,
        "pairs": pair_meta,
        "normalized_pairs": normalized,
    }
    return G, meta


def extend(
    G: EdgeColoredGraph, sizes: int | Sequence[int] | Mapping[int, int]
) -> tuple[EdgeColoredGraph, dict]:
    """Blow each vertex up into an independent set of copies; every edge is
    copied between all copy pairs with its color kept.

    sizes may be one integer for all vertices, a sequence aligned with
    the sorted vertex list, or a mapping. All-ones reproduces the input.
    """
    verts = G.vertices
    if isinstance(sizes, int):
        per = {v: sizes for v in verts}
    elif isinstance(sizes, Mapping):
        per = dict(sizes)
    else:
        if len(sizes) != len(verts):
            raise GraphError(f"expected {len(verts)} sizes, got {len(sizes)}")
        per = dict(zip(verts, sizes))
    if set(per) != set(verts):
        raise GraphError("sizes must cover exactly the vertex set")
    if any(s < 1 for s in per.values()):
        raise GraphError("every vertex needs at least one copy")

    base = {}
    nxt = 1
    for v in verts:
        base[v] = nxt
        nxt += per[v]
    edges = []
    for e in G.edges:
        for i in range(per[e.u]):
            for j in range(per[e.v]):
                edges.append((base[e.u] + i, base[e.v] + j, e.color))
    H = build_graph(nxt - 1, edges, c=G.c)
    copies = {v: list(range(base[v], base[v] + per[v])) for v in verts}
    return H, {"kind": "extend", "copies": copies}


def type5_deletion_reduction(instance, mode: str) -> tuple[EdgeColoredGraph, dict]:
    """Two sources of hardness for minimum deletion to level 5.

    mode "fvs": digraph D becomes a red perfect matching v..n+v with a
    blue edge (n+u, v) per arc; deleting vertices to reach level 5
    matches deleting a feedback vertex set (up to picking either end of
    a matching edge).

    mode "bipartization": a plain graph read as all-blue; level 5 under
    two colors is bipartite plus level 1, and a monochromatic graph is
    level 1 already, so deletion to level 5 is deletion to bipartite.
    """
    if mode == "fvs":
        if not isinstance(instance, Digraph):
            raise GraphError("fvs mode expects a Digraph")
        n = instance.n
        edges = [(v, n + v, RED) for v in range(1, n + 1)]
        edges += [(n + u, v, BLUE) for u, v in instance.arcs]
        G = build_graph(2 * n, edges, c=2)
        meta = {
            "kind": "type5-deletion",
            "mode": "fvs",
            "inner": {v: v for v in range(1, n + 1)},
            "outer": {v: n + v for v in range(1, n + 1)},
        }
        return G, meta
    if mode == "bipartization":
        if not isinstance(instance, PlainGraph):
            raise GraphError("bipartization mode expects a PlainGraph")
        edges = [(u, v, BLUE) for u, v in instance.edges]
        G = build_graph(instance.n, edges, c=2)
        return G, {"kind": "type5-deletion", "mode": "bipartization"}
    raise UnsupportedTransformError(f"unknown deletion mode '{mode}'")


def vertex_split_edge_transform(
    G: EdgeColoredGraph, keep: Sequence[int] = ()
) -> tuple[EdgeColoredGraph, dict]:
    """Split each vertex into a red-side, middle, and blue-side copy
    joined by a blue then a red tail edge; red edges reattach to red
    sides, blue edges to blue sides.

    Vertices listed in keep stay unsplit and keep their incident edges
    on themselves. Requires two colors and contiguous vertex ids.
    """
    if G.c != 2:
        raise UnsupportedTransformError("the split transform needs exactly two colors")
    if G.vertices != tuple(range(1, G.n + 1)):
        raise GraphError("the split transform needs vertices numbered 1..n")
    keep_set = set(keep)
    unknown = keep_set - set(G.vertices)
    if unknown:
        raise GraphError(f"keep lists unknown vertices {sorted(unknown)}")

    kept: dict[int, int] = {}
    split: dict[int, dict[str, int]] = {}
    nxt = 1
    for v in G.vertices:
        if v in keep_set:
            kept[v] = nxt
            nxt += 1
        else:
            split[v] = {"red": nxt, "mid": nxt + 1, "blue": nxt + 2}
            nxt += 3

    def side(v: int, color: int) -> int:
        if v in kept:
            return kept[v]
        return split[v]["red"] if color == RED else split[v]["blue"]

    edges = [(side(e.u, e.color), side(e.v, e.color), e.color) for e in G.edges]
    for v in G.vertices:
        if v in split:
            edges.append((split[v]["red"], split[v]["mid"], BLUE))
            edges.append((split[v]["mid"], split[v]["blue"], RED))
    H = build_graph(nxt - 1, edges, c=2)
    return H, {"kind": "vertex-split", "kept": kept, "split": split}


# ---------------------------------------------------------------------------
# instance file parsing


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(fields: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {' '.join(fields)}", lineno) from exc


def _parse_bodied(text: str, kind: str, header_len: int, body_tags: Sequence[str]):
    """Common shape: one 'p <kind> ...' header, then tagged body lines."""
    header = None
    body: list[tuple[int, str, list[int]]] = []
    for lineno, fields in _records(text):
        if fields[0] == "p":
            if header is not None:
                raise ParseError("second header line", lineno)
            if len(fields) != 2 + header_len or fields[1] != kind:
                raise ParseError(f"expected 'p {kind}' header with {header_len} counts", lineno)
            header = _ints(fields[2:], lineno)
        elif fields[0] in body_tags:
            if header is None:
                raise ParseError("body line before header", lineno)
            body.append((lineno, fields[0], _ints(fields[1:], lineno)))
        else:
            raise ParseError(f"unknown record '{fields[0]}'", lineno)
    if header is None:
        raise ParseError(f"missing 'p {kind}' header")
    return header, body


def parse_digraph(text: str) -> Digraph:
    (n, m), body = _parse_bodied(text, "dig", 2, ("a",))
    arcs = []
    for lineno, _, nums in body:
        if len(nums) != 2:
            raise ParseError("arc line needs two endpoints", lineno)
        arcs.append((nums[0], nums[1]))
    if len(arcs) != m:
        raise ParseError(f"header promised {m} arcs, found {len(arcs)}")
    try:
        return Digraph(n=n, arcs=tuple(arcs))
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def parse_plain_graph(text: str) -> PlainGraph:
    (n, m), body = _parse_bodied(text, "graph", 2, ("e",))
    edges = []
    for lineno, _, nums in body:
        if len(nums) != 2:
            raise ParseError("edge line needs two endpoints", lineno)
        edges.append((nums[0], nums[1]))
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}")
    try:
        return PlainGraph(n=n, edges=tuple(edges))
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def parse_betweenness(text: str) -> BetweennessInstance:
    (n, t), body = _parse_bodied(text, "btw", 2, ("t",))
    triples = []
    for lineno, _, nums in body:
        if len(nums) != 3:
            raise ParseError("triple line needs three elements", lineno)
        triples.append((nums[0], nums[1], nums[2]))
    if len(triples) != t:
        raise ParseError(f"header promised {t} triples, found {len(triples)}")
    try:
        return BetweennessInstance(n=n, triples=tuple(triples))
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def parse_rbpm(text: str) -> RbpmInstance:
    (k, m, s), body = _parse_bodied(text, "rbpm", 3, ("e", "s"))
    edges = []
    pairs = []
    for lineno, tag, nums in body:
        if len(nums) != 2:
            raise ParseError(f"'{tag}' line needs two numbers", lineno)
        if tag == "e":
            if pairs:
                raise ParseError("edge line after pair lines", lineno)
            edges.append((nums[0], nums[1]))
        else:
            a, b = nums
            if not (1 <= a <= len(edges) and 1 <= b <= len(edges)):
                raise ParseError(f"pair indices must be within 1..{len(edges)}", lineno)
            pairs.append((a - 1, b - 1))
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}")
    if len(pairs) != s:
        raise ParseError(f"header promised {s} pairs, found {len(pairs)}")
    try:
        return RbpmInstance(k=k, edges=tuple(edges), pairs=tuple(pairs))
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
