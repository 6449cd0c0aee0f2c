"""Flows with a single sink on the 2-sphere, modeled by their separatrix trees.

A structurally stable gradient-like flow on the sphere with exactly one
sink is classified, up to topological equivalence, by the embedded graph
whose vertices are the sources and whose edges are the stable manifolds of
the saddles. With one sink that graph can have no cycle (a cycle would
bound two regions, each needing its own sink) and is connected, so it is a
tree; and because a tree embedded in the sphere has a single complementary
face, sphere embeddings and plane embeddings classify identically. The
classification problem therefore reduces to the plane-tree catalog, and
everything here is purely combinatorial: no vector fields are integrated.

Index arithmetic pins the counts: sources - saddles + sinks equals the
Euler characteristic 2 of the sphere, so a flow with k saddles has k + 1
sources.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canonical import PlaneTree, canonical_plane, _tree_from
from .enumeration import count_plane, enumerate_plane_center
from .errors import Disconnected, HasCycle
from .trees import EquivalenceMode


@dataclass(frozen=True)
class MorseFlow:
    """Invariant data of a one-sink flow: fixed-point counts plus the
    separatrix tree. ORIENTED mode is equivalence under orientation-
    preserving sphere homeomorphisms; MIRROR also allows reversing ones."""

    sources: int
    saddles: int
    sinks: int
    separatrices: PlaneTree

    def __post_init__(self) -> None:
        if self.sinks != 1:
            raise ValueError(f"one-sink flows only, got {self.sinks} sinks")
        if self.sources - self.saddles + self.sinks != 2:
            raise ValueError(
                f"index sum {self.sources} - {self.saddles} + {self.sinks} != 2"
            )
        if self.separatrices.vertex_count != self.sources:
            raise ValueError("separatrix tree must have one vertex per source")
        if self.separatrices.edge_count != self.saddles:
            raise ValueError("separatrix tree must have one edge per saddle")


def flow_from_tree(tree: PlaneTree) -> MorseFlow:
    """The flow whose separatrix tree is the given class: one source per
    vertex, one saddle per edge, one sink in the single complementary face."""
    return MorseFlow(
        sources=tree.vertex_count,
        saddles=tree.edge_count,
        sinks=1,
        separatrices=tree,
    )


def validate_flow_graph(
    vertices: int,
    edges: Sequence[tuple[int, int]],
    rotations: Sequence[Sequence[int]] | None = None,
    mode: EquivalenceMode = EquivalenceMode.ORIENTED,
) -> MorseFlow:
    """Accept a candidate separatrix multigraph iff it is a tree.

    `rotations`, when given, lists each vertex's neighbors in cyclic order
    and fixes the plane embedding; otherwise neighbors are taken in
    ascending index order. Raises HasCycle for any cycle (self-loops and
    parallel edges included), Disconnected for multiple components, and
    ValueError for ill-formed input.
    """
    if vertices < 1:
        raise ValueError(f"need at least one vertex, got {vertices}")
    parent = list(range(vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    neighbors: list[list[int]] = [[] for _ in range(vertices)]
    for a, b in edges:
        if not (0 <= a < vertices and 0 <= b < vertices):
            raise ValueError(f"edge ({a}, {b}) mentions an unknown vertex")
        ra, rb = find(a), find(b)
        if ra == rb:
            raise HasCycle(f"edge ({a}, {b}) closes a cycle")
        parent[ra] = rb
        neighbors[a].append(b)
        neighbors[b].append(a)
    if len({find(v) for v in range(vertices)}) > 1:
        raise Disconnected(f"{vertices} vertices but only {len(edges)} tree edges")

    if rotations is None:
        adj = [sorted(nbrs) for nbrs in neighbors]
    else:
        if len(rotations) != vertices:
            raise ValueError("rotations must list every vertex")
        adj = [list(order) for order in rotations]
        for v in range(vertices):
            if sorted(adj[v]) != sorted(neighbors[v]):
                raise ValueError(f"rotation at vertex {v} does not match its edges")

    rooted = _tree_from(adj, 0, 0)
    return flow_from_tree(canonical_plane(rooted, mode))


def count_flows(
    saddles: int,
    mode: EquivalenceMode = EquivalenceMode.ORIENTED,
    *,
    limit: int | None = None,
) -> int:
    """Topological-equivalence classes of one-sink flows with that many
    saddles; equals the plane-tree count on saddles + 1 vertices."""
    if saddles < 0:
        raise ValueError(f"saddle count must be non-negative, got {saddles}")
    return count_plane(saddles + 1, mode, limit=limit)


def enumerate_flows(
    saddles: int,
    mode: EquivalenceMode = EquivalenceMode.ORIENTED,
    *,
    limit: int | None = None,
) -> list[MorseFlow]:
    """All flow classes with the given saddle count, in catalog order."""
    if saddles < 0:
        raise ValueError(f"saddle count must be non-negative, got {saddles}")
    return [
        flow_from_tree(tree)
        for tree in enumerate_plane_center(saddles + 1, mode, limit=limit)
    ]


def flow_record(flow: MorseFlow) -> str:
    """One-line report format for a single flow class."""
    return (
        f"sources={flow.sources} saddles={flow.saddles} "
        f"sinks={flow.sinks} tree={flow.separatrices.serialize()}"
    )
