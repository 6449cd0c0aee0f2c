"""Exhaustive plane-tree enumeration by gluing branches onto a center.

Every tree of the plane with n >= 3 vertices is either unicentral (one
center vertex whose branches are rooted plane trees, at least two of them
of maximal height) or bicentral (a central edge joining two rooted halves
of equal height). Generating exactly one branch arrangement per rotation
class (necklace filter) and one half pair per swap class therefore yields
every isomorphism class exactly once; in MIRROR mode the filters also
quotient by reflection (bracelet filter with recursively reflected parts).

A second, slower route (`enumerate_plane_oracle`) canonicalizes every
rooted tree of the right size and dedups. The two routes must agree
byte-for-byte, which is the strongest consistency check in the package.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .canonical import Centrality, PlaneTree, canonical_plane, rotation_system, _strip_centers
from .errors import LimitExceeded
from .trees import (
    EquivalenceMode,
    RootedPlaneTree,
    count_rooted,
    decode,
    encode,
    iter_dyck_codes,
    reflect,
)

#: Center-method ceiling; raise explicitly for bigger runs.
DEFAULT_MAX_VERTICES = 12

#: The brute-force route touches Catalan(v-1) trees; keep it at desk scale.
ORACLE_MAX_VERTICES = 10


@dataclass(frozen=True)
class CenterGluingSpec:
    """A recipe for one glued tree: branches around a center vertex
    (UNICENTRAL, k >= 2 parts) or two halves joined by an edge (BICENTRAL).

    Construction is validated: the part heights must actually make the
    glued vertex (or edge) the center of the assembled tree.
    """

    kind: Centrality
    parts: tuple[RootedPlaneTree, ...]
    target_vertices: int

    def __post_init__(self) -> None:
        heights = [p.height for p in self.parts]
        if self.kind is Centrality.UNICENTRAL:
            if len(self.parts) < 2:
                raise ValueError("a unicentral gluing needs at least two branches")
            if sum(p.vertex_count for p in self.parts) != self.target_vertices - 1:
                raise ValueError("branch vertex counts must sum to target_vertices - 1")
            if heights.count(max(heights)) < 2:
                raise ValueError("at least two branches must attain the maximum height")
        else:
            if len(self.parts) != 2:
                raise ValueError("a bicentral gluing needs exactly two halves")
            if sum(p.vertex_count for p in self.parts) != self.target_vertices:
                raise ValueError("half vertex counts must sum to target_vertices")
            if heights[0] != heights[1]:
                raise ValueError("the two halves must have equal height")


def assemble(spec: CenterGluingSpec) -> RootedPlaneTree:
    """Build the glued tree, rooted at the center (or at the first half's
    endpoint of the central edge)."""
    if spec.kind is Centrality.UNICENTRAL:
        return RootedPlaneTree(spec.parts)
    first, second = spec.parts
    return RootedPlaneTree(tuple(first.children) + (RootedPlaneTree(second.children),))


class _PoolEntry(NamedTuple):
    tree: RootedPlaneTree
    code: str
    height: int
    mirror_code: str


@lru_cache(maxsize=None)
def _pool(vertices: int) -> tuple[_PoolEntry, ...]:
    # rooted plane trees with this many vertices, in code order
    entries = []
    for code in iter_dyck_codes(vertices - 1):
        tree = decode(code)
        entries.append(_PoolEntry(tree, code, tree.height, encode(reflect(tree))))
    return tuple(entries)


def _min_rotation(seq: tuple[str, ...]) -> tuple[str, ...]:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def _compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    # ordered tuples of k positive integers summing to total
    for cuts in itertools.combinations(range(1, total), k - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def _unicentral_specs(vertices: int, mode: EquivalenceMode) -> Iterator[CenterGluingSpec]:
    budget = vertices - 1
    for k in range(2, budget + 1):
        for sizes in _compositions(budget, k):
            for combo in itertools.product(*(_pool(s) for s in sizes)):
                heights = [e.height for e in combo]
                if heights.count(max(heights)) < 2:
                    continue
                codes = tuple(e.code for e in combo)
                if codes != _min_rotation(codes):
                    continue
                if mode is EquivalenceMode.MIRROR:
                    mirrored = tuple(e.mirror_code for e in reversed(combo))
                    if _min_rotation(mirrored) < codes:
                        continue
                yield CenterGluingSpec(
                    Centrality.UNICENTRAL, tuple(e.tree for e in combo), vertices
                )


def _bicentral_specs(vertices: int, mode: EquivalenceMode) -> Iterator[CenterGluingSpec]:
    for n1 in range(1, vertices // 2 + 1):
        n2 = vertices - n1
        if n1 == n2:
            # pools are code-sorted, so these pairs come out with a <= b
            pairs: Iterator[tuple[_PoolEntry, _PoolEntry]] = (
                itertools.combinations_with_replacement(_pool(n1), 2)
            )
        else:
            pairs = itertools.product(_pool(n1), _pool(n2))
        for a, b in pairs:
            if a.height != b.height:
                continue
            if mode is EquivalenceMode.MIRROR:
                original = tuple(sorted((a.code, b.code)))
                reflected = tuple(sorted((a.mirror_code, b.mirror_code)))
                if reflected < original:
                    continue
            yield CenterGluingSpec(Centrality.BICENTRAL, (a.tree, b.tree), vertices)


def _check_glued_center(spec: CenterGluingSpec, tree: RootedPlaneTree) -> None:
    # the glued vertex/edge must come back as the computed center
    centers = set(_strip_centers(rotation_system(tree)))
    if spec.kind is Centrality.UNICENTRAL:
        expected = {0}
    else:
        expected = {0, spec.parts[0].vertex_count}
    assert centers == expected, f"glued at {expected}, center found at {centers}"


def enumerate_plane_center(
    vertices: int,
    mode: EquivalenceMode = EquivalenceMode.ORIENTED,
    *,
    limit: int | None = None,
) -> list[PlaneTree]:
    """Every plane-tree class with the given vertex count, exactly once,
    sorted by serialized canonical form.

    Raises LimitExceeded above the cap (default 12) and ValueError for a
    non-positive vertex count.
    """
    if vertices < 1:
        raise ValueError(f"vertex count must be positive, got {vertices}")
    cap = DEFAULT_MAX_VERTICES if limit is None else limit
    if vertices > cap:
        raise LimitExceeded(f"{vertices} vertices exceeds the enumeration cap of {cap}")
    if vertices == 1:
        return [canonical_plane(RootedPlaneTree(), mode)]
    if vertices == 2:
        return [canonical_plane(decode("()"), mode)]

    results: list[PlaneTree] = []
    for spec in itertools.chain(
        _unicentral_specs(vertices, mode), _bicentral_specs(vertices, mode)
    ):
        tree = assemble(spec)
        _check_glued_center(spec, tree)
        results.append(canonical_plane(tree, mode))
    results.sort(key=PlaneTree.serialize)
    # the necklace/pair filters must already be duplicate-free
    assert all(x != y for x, y in zip(results, results[1:])), "gluing emitted a duplicate"
    return results


def enumerate_plane_oracle(
    vertices: int,
    mode: EquivalenceMode = EquivalenceMode.ORIENTED,
    *,
    limit: int | None = None,
) -> list[PlaneTree]:
    """Brute-force route: canonicalize all Catalan(vertices-1) rooted trees
    and dedup. Verification-grade, capped at 10 vertices by default."""
    if vertices < 1:
        raise ValueError(f"vertex count must be positive, got {vertices}")
    cap = ORACLE_MAX_VERTICES if limit is None else limit
    if vertices > cap:
        raise LimitExceeded(f"{vertices} vertices exceeds the oracle cap of {cap}")
    classes = {canonical_plane(decode(code), mode) for code in iter_dyck_codes(vertices - 1)}
    return sorted(classes, key=PlaneTree.serialize)


def count_plane(
    vertices: int,
    mode: EquivalenceMode = EquivalenceMode.ORIENTED,
    *,
    limit: int | None = None,
) -> int:
    """Number of plane-tree classes with the given vertex count."""
    return len(enumerate_plane_center(vertices, mode, limit=limit))


# Counts asserted by the hand enumeration that this package audits. The
# reconcile report compares them against computed values; mismatches are
# reported, never "corrected".
CLAIMED_ROOTED = {0: 1, 1: 1, 2: 2, 3: 5, 4: 14, 5: 51}
CLAIMED_PLANE = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 14, 8: 26}
CLAIMED_FLOWS = {1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 14, 7: 26}


@dataclass(frozen=True)
class ReconcileRow:
    kind: str  # "rooted" (by edges), "plane" (by vertices), "flows" (by saddles)
    parameter: int
    claimed: int
    computed_oriented: int
    computed_mirror: int

    @property
    def matches(self) -> bool:
        return self.claimed in (self.computed_oriented, self.computed_mirror)


@dataclass(frozen=True)
class ReconcileReport:
    rows: tuple[ReconcileRow, ...]

    @property
    def mismatches(self) -> tuple[ReconcileRow, ...]:
        return tuple(row for row in self.rows if not row.matches)

    def to_text(self) -> str:
        lines = ["kind    param  claimed  oriented  mirror  verdict"]
        for row in self.rows:
            verdict = "match" if row.matches else "MISMATCH"
            lines.append(
                f"{row.kind:<7} {row.parameter:>5}  {row.claimed:>7}  "
                f"{row.computed_oriented:>8}  {row.computed_mirror:>6}  {verdict}"
            )
        return "\n".join(lines)


def reconcile_counts() -> ReconcileReport:
    """Claimed hand-tally counts vs computed counts, one row per claim.

    Rooted counts do not depend on the mode, so both computed columns
    repeat the Catalan value there.
    """
    rows: list[ReconcileRow] = []
    for edges, claimed in sorted(CLAIMED_ROOTED.items()):
        exact = count_rooted(edges)
        rows.append(ReconcileRow("rooted", edges, claimed, exact, exact))
    plane_counts = {
        mode: {v: count_plane(v, mode) for v in sorted(CLAIMED_PLANE)}
        for mode in EquivalenceMode
    }
    for v, claimed in sorted(CLAIMED_PLANE.items()):
        rows.append(
            ReconcileRow(
                "plane",
                v,
                claimed,
                plane_counts[EquivalenceMode.ORIENTED][v],
                plane_counts[EquivalenceMode.MIRROR][v],
            )
        )
    for saddles, claimed in sorted(CLAIMED_FLOWS.items()):
        rows.append(
            ReconcileRow(
                "flows",
                saddles,
                claimed,
                plane_counts[EquivalenceMode.ORIENTED][saddles + 1],
                plane_counts[EquivalenceMode.MIRROR][saddles + 1],
            )
        )
    return ReconcileReport(tuple(rows))


def catalog_text(vertices: int, mode: EquivalenceMode, classes: Sequence[PlaneTree]) -> str:
    """Plain-text catalog: one header line, then one serialized class per line."""
    lines = [f"# plane-trees v={vertices} mode={mode.value} count={len(classes)}"]
    lines.extend(p.serialize() for p in classes)
    return "\n".join(lines) + "\n"


def catalog_json(vertices: int, mode: EquivalenceMode, classes: Sequence[PlaneTree]) -> str:
    """Machine-readable catalog with fields vertices, mode, count, codes."""
    doc = {
        "vertices": vertices,
        "mode": mode.value,
        "count": len(classes),
        "codes": [p.serialize() for p in classes],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
