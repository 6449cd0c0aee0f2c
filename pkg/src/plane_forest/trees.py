"""Rooted plane trees and their balanced-parenthesis codes.

A rooted plane tree is an ordered tree: the children of every vertex carry
a linear (left-to-right) order. Trees with n edges are in bijection with
balanced parenthesis strings of length 2n, one matched pair per edge, and
that string is the storage, hashing and ordering format used everywhere in
this package.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator

from .errors import LimitExceeded, MalformedCode

#: Default ceiling for exhaustive rooted enumeration (Catalan(16) ~ 35M).
DEFAULT_MAX_EDGES = 16

#: Environment variable overriding the enumeration cap.
MAX_EDGES_ENV = "PLANE_FOREST_MAX_EDGES"


class EquivalenceMode(Enum):
    """Which plane isomorphisms are allowed when comparing embedded trees.

    ORIENTED admits rotations of the cyclic vertex orders only; MIRROR
    additionally admits a global reflection. Every MIRROR class is a union
    of one or two ORIENTED classes.
    """

    ORIENTED = "oriented"
    MIRROR = "mirror"


@dataclass(frozen=True)
class RootedPlaneTree:
    """An immutable ordered tree; a bare instance is the single-vertex tree."""

    children: tuple["RootedPlaneTree", ...] = ()

    @cached_property
    def edge_count(self) -> int:
        return sum(1 + c.edge_count for c in self.children)

    @cached_property
    def vertex_count(self) -> int:
        return self.edge_count + 1

    @cached_property
    def height(self) -> int:
        """Longest root-to-leaf distance in edges; 0 for a single vertex."""
        if not self.children:
            return 0
        return 1 + max(c.height for c in self.children)

    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:
        return f"RootedPlaneTree({encode(self)!r})"


def encode(tree: RootedPlaneTree) -> str:
    """Balanced-parenthesis code: "(" + encode(child) + ")" per child, in order."""
    parts: list[str] = []

    def walk(node: RootedPlaneTree) -> None:
        for child in node.children:
            parts.append("(")
            walk(child)
            parts.append(")")

    walk(tree)
    return "".join(parts)


def decode(code: str) -> RootedPlaneTree:
    """Inverse of :func:`encode`.

    Raises MalformedCode on foreign characters or unbalanced input; the
    empty string decodes to the single-vertex tree.
    """
    stack: list[list[RootedPlaneTree]] = [[]]
    for i, ch in enumerate(code):
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if len(stack) == 1:
                raise MalformedCode(f"unmatched ')' at position {i}: {code!r}")
            children = stack.pop()
            stack[-1].append(RootedPlaneTree(tuple(children)))
        else:
            raise MalformedCode(f"foreign character {ch!r} at position {i}: {code!r}")
    if len(stack) != 1:
        raise MalformedCode(f"{len(stack) - 1} unclosed '(' in {code!r}")
    return RootedPlaneTree(tuple(stack[0]))


def reflect(tree: RootedPlaneTree) -> RootedPlaneTree:
    """Mirror image: reverse the child order at every vertex, recursively.

    A planar reflection flips all cyclic orders at once, so reversing only
    at the root would not model it.
    """
    return RootedPlaneTree(tuple(reflect(c) for c in reversed(tree.children)))


def max_rooted_edges() -> int:
    """Enumeration cap; PLANE_FOREST_MAX_EDGES overrides the default of 16."""
    raw = os.environ.get(MAX_EDGES_ENV)
    if raw is None:
        return DEFAULT_MAX_EDGES
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_EDGES_ENV} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ValueError(f"{MAX_EDGES_ENV} must be non-negative, got {value}")
    return value


def iter_dyck_codes(edges: int) -> Iterator[str]:
    """All balanced strings with `edges` pairs, in lexicographic order.

    Streams with flat memory; '(' sorts before ')', so the fully nested
    code comes first and "()()..." last.
    """
    buf: list[str] = []

    def extend(opens_left: int, balance: int) -> Iterator[str]:
        if opens_left == 0 and balance == 0:
            yield "".join(buf)
            return
        if opens_left > 0:
            buf.append("(")
            yield from extend(opens_left - 1, balance + 1)
            buf.pop()
        if balance > 0:
            buf.append(")")
            yield from extend(opens_left, balance - 1)
            buf.pop()

    yield from extend(edges, 0)


def rooted_codes(edges: int, *, limit: int | None = None) -> Iterator[str]:
    """Cap-checked variant of :func:`iter_dyck_codes`.

    Raises LimitExceeded beyond the cap (default from
    :func:`max_rooted_edges`) and ValueError for negative input; both are
    raised at call time, before the stream starts.
    """
    if edges < 0:
        raise ValueError(f"edge count must be non-negative, got {edges}")
    cap = max_rooted_edges() if limit is None else limit
    if edges > cap:
        raise LimitExceeded(f"{edges} edges exceeds the enumeration cap of {cap}")
    return iter_dyck_codes(edges)


def enumerate_rooted(edges: int, *, limit: int | None = None) -> Iterator[RootedPlaneTree]:
    """Every rooted plane tree with the given edge count, exactly once.

    Emitted in lexicographic order of the parenthesis code; the number of
    trees is Catalan(edges). Cap handling as in :func:`rooted_codes`.
    """
    return (decode(code) for code in rooted_codes(edges, limit=limit))


def count_rooted(edges: int) -> int:
    """Catalan(edges) = C(2n, n) / (n + 1), in exact integer arithmetic."""
    if edges < 0:
        raise ValueError(f"edge count must be non-negative, got {edges}")
    return math.comb(2 * edges, edges) // (edges + 1)
