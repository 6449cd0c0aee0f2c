"""Shared strategies and random generators for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from plane_forest import RootedPlaneTree


def tree_strategy(max_leaves: int = 24) -> st.SearchStrategy[RootedPlaneTree]:
    return st.recursive(
        st.just(RootedPlaneTree()),
        lambda inner: st.lists(inner, min_size=1, max_size=4).map(
            lambda kids: RootedPlaneTree(tuple(kids))
        ),
        max_leaves=max_leaves,
    )


def random_tree(rng: random.Random, vertices: int) -> RootedPlaneTree:
    """Uniformly scruffy ordered tree: attach each new leaf at a random
    position under a random existing vertex."""
    children: list[list[int]] = [[]]
    for _ in range(vertices - 1):
        parent = rng.randrange(len(children))
        children.append([])
        slot = rng.randint(0, len(children[parent]))
        children[parent].insert(slot, len(children) - 1)

    def build(i: int) -> RootedPlaneTree:
        return RootedPlaneTree(tuple(build(c) for c in children[i]))

    return build(0)


def random_tree_edges(
    rng: random.Random, vertices: int
) -> list[tuple[int, int]]:
    """Edge list of a random labeled tree on the given vertices."""
    edges = [(i, rng.randrange(i)) for i in range(1, vertices)]
    rng.shuffle(edges)
    return edges


def random_cyclic_multigraph(
    rng: random.Random, max_vertices: int = 9
) -> tuple[int, list[tuple[int, int]]]:
    """A multigraph with edges >= vertices; always contains a cycle."""
    vertices = rng.randint(1, max_vertices)
    edge_count = rng.randint(vertices, vertices + 4)
    edges = [
        (rng.randrange(vertices), rng.randrange(vertices)) for _ in range(edge_count)
    ]
    return vertices, edges
