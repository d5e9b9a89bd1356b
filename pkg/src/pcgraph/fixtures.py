"""Small named graphs with frozen expected levels.

Each fixture pins one boundary of the level hierarchy (or a terminal
pair with known separator/packing numbers). write_corpus dumps them as
text files plus a manifest for the CLI and the acceptance tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import EdgeColoredGraph, build_graph, serialize_graph
from .reductions import (
    BetweennessInstance,
    RbpmInstance,
    betweenness_to_type4,
    rbpm_to_packing,
)


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: EdgeColoredGraph
    level: int
    description: str
    terminals: tuple[int, int] | None = None


def _build() -> dict[str, Fixture]:
    fixtures: list[Fixture] = []

    fixtures.append(
        Fixture(
            name="k3k3",
            graph=build_graph(
                5,
                [(1, 2, 2), (1, 3, 1), (2, 3, 1), (4, 5, 1), (4, 3, 2), (5, 3, 2)],
                c=2,
            ),
            level=1,
            description=(
                "two triangles sharing vertex 3, each two-colored so no cycle "
                "is properly colored, yet the union carries a closed trail"
            ),
        )
    )

    fixtures.append(
        Fixture(
            name="ab-trail",
            graph=build_graph(
                6,
                [
                    (1, 4, 1),
                    (2, 5, 1),
                    (3, 6, 1),
                    (1, 2, 2),
                    (4, 2, 2),
                    (3, 5, 2),
                    (6, 5, 2),
                ],
                c=2,
            ),
            level=2,
            description=(
                "bridge edge 2-5 splits two triangles; a closed walk crosses "
                "it twice but no closed trail survives"
            ),
        )
    )

    fixtures.append(
        Fixture(
            name="triangle-2b1r",
            graph=build_graph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 2)], c=2),
            level=3,
            description="a triangle with one recolored edge; forward-monochromatic "
            "orders exist but no backward side stays clean",
        )
    )

    fixtures.append(
        Fixture(
            name="allblue-k3",
            graph=build_graph(3, [(1, 2, 1), (1, 3, 1), (2, 3, 1)], c=1),
            level=4,
            description="a monochromatic triangle; level 5 needs the forward and "
            "backward colors to differ, which one color cannot do",
        )
    )

    fixtures.append(
        Fixture(
            name="path-br",
            graph=build_graph(3, [(1, 2, 1), (2, 3, 2)], c=2),
            level=5,
            description="a two-edge path with distinct colors, the smallest "
            "graph hitting the top level with an edge of each color",
        )
    )

    fixtures.append(
        Fixture(
            name="c4-alt",
            graph=build_graph(4, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 1, 2)], c=2),
            level=0,
            description="the alternating 4-cycle is itself properly colored, "
            "so not even level 1 holds",
        )
    )

    gadget, _ = betweenness_to_type4(BetweennessInstance(n=3, triples=((1, 2, 3),)))
    fixtures.append(
        Fixture(
            name="fig1-gadget",
            graph=gadget,
            level=4,
            description="the single-triple ordering gadget; satisfiable, hence "
            "level 4, but a monochromatic triangle blocks level 5",
        )
    )

    fragment, meta = rbpm_to_packing(
        RbpmInstance(k=2, edges=((1, 1), (2, 2)), pairs=((0, 1),))
    )
    fixtures.append(
        Fixture(
            name="fig2-fragment",
            graph=fragment,
            level=3,
            terminals=(meta["x"], meta["y"]),
            description="a one-pair matching gadget between terminals; the "
            "crossing wiring kills every level-4 ordering",
        )
    )

    fixtures.append(
        Fixture(
            name="fig3",
            graph=build_graph(
                8,
                [
                    (2, 3, 1),
                    (4, 5, 1),
                    (6, 7, 1),
                    (1, 2, 2),
                    (1, 3, 2),
                    (1, 5, 2),
                    (2, 6, 2),
                    (3, 4, 2),
                    (4, 6, 2),
                    (5, 8, 2),
                    (7, 8, 2),
                ],
                c=2,
            ),
            level=3,
            terminals=(1, 8),
            description="level 3 with terminals 1 and 8 where the minimum "
            "separator (2) exceeds the maximum packing (1)",
        )
    )

    return {f.name: f for f in fixtures}


_FIXTURES = _build()


def fixture_names() -> tuple[str, ...]:
    return tuple(_FIXTURES)


def fixture(name: str) -> Fixture:
    try:
        return _FIXTURES[name]
    except KeyError:
        raise KeyError(f"no fixture named '{name}'") from None


def write_corpus(outdir) -> Path:
    """Write every fixture as NAME.ecg plus manifest.json; returns the
    manifest path."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    entries = []
    for f in _FIXTURES.values():
        body = f"# {f.name}: {f.description}\n# expected level: {f.level}\n"
        body += serialize_graph(f.graph)
        path = outdir / f"{f.name}.ecg"
        path.write_text(body)
        entry = {
            "name": f.name,
            "file": f"{f.name}.ecg",
            "level": f.level,
            "n": f.graph.n,
            "m": f.graph.m,
            "c": f.graph.c,
            "description": f.description,
        }
        if f.terminals is not None:
            entry["terminals"] = list(f.terminals)
        entries.append(entry)
    manifest = outdir / "manifest.json"
    manifest.write_text(json.dumps({"fixtures": entries}, indent=2) + "\n")
    return manifest
