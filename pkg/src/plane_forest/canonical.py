"""Tree centers and canonical codes for unrooted plane trees.

Re-rooting a plane tree at its center (unique after leaf stripping up to
the one-or-two-vertex ambiguity) turns "same embedded tree" into a string
equality. The canonical code of a class is the lexicographically least
rooted code over every admissible re-rooting:

* unicentral trees: root at the center, minimize over the rotations of the
  center's cyclic child order;
* bicentral trees: minimize over both endpoints of the central edge and
  all rotations of each endpoint's cyclic order.

In MIRROR mode the minimum additionally ranges over the reflected tree.
The result is always the code of an actual rooted representative, so it
decodes back to a tree with the right vertex count and cannot collide
across centrality kinds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import LimitExceeded, MalformedCode
from .trees import EquivalenceMode, RootedPlaneTree, decode

#: Full re-rooting sweeps are quadratic-ish; keep the oracle at desk scale.
REROOT_ORACLE_MAX_VERTICES = 12


class Centrality(Enum):
    UNICENTRAL = "U"
    BICENTRAL = "B"


@dataclass(frozen=True)
class CenterResult:
    """Center vertex id(s) within a rooted representative, plus the radius.

    Vertex ids are preorder indices of the rooted tree handed to
    :func:`center` (the root is 0). Two centers are always adjacent.
    """

    centers: tuple[int, ...]
    radius: int


@dataclass(frozen=True)
class PlaneTree:
    """Canonical representative of an embedded tree up to plane isomorphism.

    Equality is componentwise on (canon, mode, centrality); the serialized
    form `U:<code>` / `B:<code>` is the dedup key used by every catalog.
    """

    canon: str
    mode: EquivalenceMode
    centrality: Centrality

    @property
    def edge_count(self) -> int:
        return len(self.canon) // 2

    @property
    def vertex_count(self) -> int:
        return self.edge_count + 1

    def serialize(self) -> str:
        return f"{self.centrality.value}:{self.canon}"

    @classmethod
    def parse(cls, line: str, mode: EquivalenceMode) -> "PlaneTree":
        """Read a `U:<code>` / `B:<code>` line back; the mode tag lives at
        file level, so it is supplied by the caller."""
        prefix, sep, code = line.partition(":")
        if not sep or prefix not in ("U", "B"):
            raise MalformedCode(f"expected 'U:<code>' or 'B:<code>', got {line!r}")
        tree = decode(code)  # raises MalformedCode on bad input
        expected = "U" if len(_strip_centers(rotation_system(tree))) == 1 else "B"
        if prefix != expected:
            raise MalformedCode(f"centrality tag {prefix!r} contradicts the code {code!r}")
        return cls(canon=code, mode=mode, centrality=Centrality(prefix))


def rotation_system(tree: RootedPlaneTree) -> list[list[int]]:
    """Adjacency lists in planar cyclic order, vertices numbered in preorder.

    For every non-root vertex the parent comes first, then the children in
    their stored order; for the root the cyclic order is just the child
    order read cyclically.
    """
    adj: list[list[int]] = []

    def build(node: RootedPlaneTree, parent: int) -> int:
        vid = len(adj)
        adj.append([parent] if parent >= 0 else [])
        for child in node.children:
            child_id = build(child, vid)
            adj[vid].append(child_id)
        return vid

    build(tree, -1)
    return adj


def _strip_centers(adj: list[list[int]]) -> list[int]:
    # peel leaves layer by layer until one or two vertices remain
    n = len(adj)
    if n <= 2:
        return list(range(n))
    degree = [len(nbrs) for nbrs in adj]
    removed = [False] * n
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        for v in layer:
            removed[v] = True
        remaining -= len(layer)
        nxt: list[int] = []
        for v in layer:
            for w in adj[v]:
                if not removed[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(n) if not removed[v]]


def _eccentricity(adj: list[list[int]], start: int) -> int:
    dist = {start: 0}
    frontier = [start]
    depth = 0
    while frontier:
        depth = dist[frontier[0]]
        nxt: list[int] = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return depth


def center(tree: RootedPlaneTree) -> CenterResult:
    """Standard tree center(s) by iterated leaf removal, with the radius.

    Single vertices and single edges are their own centers. The radius is
    the eccentricity of a center, i.e. the minimum eccentricity over all
    vertices.
    """
    adj = rotation_system(tree)
    centers = sorted(_strip_centers(adj))
    return CenterResult(centers=tuple(centers), radius=_eccentricity(adj, centers[0]))


def _reflected(adj: list[list[int]]) -> list[list[int]]:
    # reversing every cyclic order is exactly a planar mirror
    return [list(reversed(nbrs)) for nbrs in adj]


def _code_from(adj: list[list[int]], root: int, start: int) -> str:
    parts: list[str] = []

    def walk(v: int, parent: int) -> None:
        nbrs = adj[v]
        k = nbrs.index(parent)
        for w in nbrs[k + 1 :] + nbrs[:k]:
            parts.append("(")
            walk(w, v)
            parts.append(")")

    for w in adj[root][start:] + adj[root][:start]:
        parts.append("(")
        walk(w, root)
        parts.append(")")
    return "".join(parts)


def _tree_from(adj: list[list[int]], root: int, start: int) -> RootedPlaneTree:
    def build(v: int, parent: int) -> RootedPlaneTree:
        nbrs = adj[v]
        k = nbrs.index(parent)
        return RootedPlaneTree(tuple(build(w, v) for w in nbrs[k + 1 :] + nbrs[:k]))

    order = adj[root][start:] + adj[root][:start]
    return RootedPlaneTree(tuple(build(w, root) for w in order))


def rooted_representatives(tree: RootedPlaneTree) -> Iterator[RootedPlaneTree]:
    """Every re-rooting of the underlying embedded tree: each vertex as the
    root, each rotation of its cyclic order as the child order."""
    adj = rotation_system(tree)
    for v in range(len(adj)):
        for s in range(max(len(adj[v]), 1)):
            yield _tree_from(adj, v, s)


def canonical_plane(
    tree: RootedPlaneTree, mode: EquivalenceMode = EquivalenceMode.ORIENTED
) -> PlaneTree:
    """Canonical form of the embedded tree underlying any rooted representative.

    The defining property: every re-rooting and rotation of the same
    embedded tree maps to an identical PlaneTree, and (in MIRROR mode)
    so does its reflection.
    """
    adj = rotation_system(tree)
    centers = _strip_centers(adj)
    systems = [adj]
    if mode is EquivalenceMode.MIRROR:
        systems.append(_reflected(adj))
    best: str | None = None
    for system in systems:
        for c in centers:
            for s in range(max(len(system[c]), 1)):
                code = _code_from(system, c, s)
                if best is None or code < best:
                    best = code
    assert best is not None
    centrality = Centrality.UNICENTRAL if len(centers) == 1 else Centrality.BICENTRAL
    return PlaneTree(canon=best, mode=mode, centrality=centrality)


def is_isomorphic(
    a: RootedPlaneTree,
    b: RootedPlaneTree,
    mode: EquivalenceMode = EquivalenceMode.ORIENTED,
) -> bool:
    """True iff a and b are the same tree of the plane (forgetting roots)."""
    return canonical_plane(a, mode) == canonical_plane(b, mode)


def rerooting_oracle_canon(
    tree: RootedPlaneTree, mode: EquivalenceMode = EquivalenceMode.ORIENTED
) -> str:
    """Independent canonical code: minimum over ALL vertices and rotations.

    Slower than canonical_plane and rooted anywhere rather than at the
    center, so the strings differ; the induced partition into classes must
    be identical, which the test suite checks exhaustively.
    """
    if tree.vertex_count > REROOT_ORACLE_MAX_VERTICES:
        raise LimitExceeded(
            f"{tree.vertex_count} vertices exceeds the re-rooting oracle cap "
            f"of {REROOT_ORACLE_MAX_VERTICES}"
        )
    adj = rotation_system(tree)
    systems = [adj]
    if mode is EquivalenceMode.MIRROR:
        systems.append(_reflected(adj))
    best: str | None = None
    for system in systems:
        for v in range(len(system)):
            for s in range(max(len(system[v]), 1)):
                code = _code_from(system, v, s)
                if best is None or code < best:
                    best = code
    assert best is not None
    return best
