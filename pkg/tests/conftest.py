"""Shared fixtures and independent brute-force oracles.

The oracles evaluate definitions directly with index loops and never touch
the bit-fold fast paths they are used to check.
"""

from itertools import combinations

import pytest

from qsets.core import ElementSet, QuantumSet


def qcomp_by_definition(qset: QuantumSet, members: set[int]) -> set[int]:
    """Directly evaluate: all elements q-distinct from every member."""
    return {y for y in range(qset.n)
            if all(qset.orth(y, z) for z in members)}


def closure_by_definition(qset: QuantumSet, members: set[int]) -> set[int]:
    return qcomp_by_definition(qset, qcomp_by_definition(qset, members))


def all_subsets(n: int):
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            yield set(combo)


def closed_sets_by_definition(qset: QuantumSet) -> set[frozenset]:
    return {frozenset(s) for s in all_subsets(qset.n)
            if closure_by_definition(qset, s) == s}


def as_set(ds: ElementSet) -> set[int]:
    return set(ds.indices())


def all_quantum_sets(n: int):
    """Every q-distinctness relation on n labelled elements."""
    pairs = list(combinations(range(n), 2))
    for picks in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if picks >> i & 1]
        yield QuantumSet.from_index_pairs(n, chosen)


@pytest.fixture
def four_cycle() -> QuantumSet:
    return QuantumSet.cycle(4)


@pytest.fixture
def five_cycle() -> QuantumSet:
    return QuantumSet.cycle(5)


@pytest.fixture
def mo2_graph() -> QuantumSet:
    return QuantumSet.from_pairs(["a", "a'", "b", "b'"], [("a", "a'"), ("b", "b'")])


@pytest.fixture
def classical3() -> QuantumSet:
    return QuantumSet.classical(["x", "y", "z"])


@pytest.fixture
def edgeless3() -> QuantumSet:
    return QuantumSet.from_pairs(["a", "b", "c"], [])
