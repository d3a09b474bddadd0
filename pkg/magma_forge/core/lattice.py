"""Finite lattices given by an order matrix, and maximal-antichain lattices of posets."""
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

from magma_forge import caps
from magma_forge.errors import NotALattice
from magma_forge.utils.helpers import logger


def _bound_table(leq, upper):
    size = len(leq)
    rel = leq if upper else leq.T
    table = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(i, size):
            bounds = np.nonzero(rel[i] & rel[j])[0]
            best = [b for b in bounds if rel[b, bounds].all()]
            if len(best) != 1:
                kind = "join" if upper else "meet"
                raise NotALattice(f"elements {i} and {j} have no unique {kind}")
            table[i, j] = table[j, i] = best[0]
    return table


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    elements: tuple
    leq: np.ndarray  # leq[i, j] iff elements[i] <= elements[j]

    def __post_init__(self):
        leq = np.asarray(self.leq, dtype=bool)
        leq.flags.writeable = False
        object.__setattr__(self, "leq", leq)
        if not leq.diagonal().all():
            raise NotALattice("order is not reflexive")
        if (leq & leq.T & ~np.eye(len(leq), dtype=bool)).any():
            raise NotALattice("order is not antisymmetric")
        composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        if (composed & ~leq).any():
            raise NotALattice("order is not transitive")

    @classmethod
    def from_order(cls, elements, less_equal):
        elements = tuple(elements)
        leq = np.array([[less_equal(x, y) for y in elements] for x in elements], dtype=bool)
        return cls(elements, leq)

    def __len__(self):
        return len(self.elements)

    @cached_property
    def join(self):
        return _bound_table(self.leq, upper=True)

    @cached_property
    def meet(self):
        return _bound_table(self.leq, upper=False)

    @property
    def bottom(self):
        return self.elements[int(np.nonzero(self.leq.all(axis=1))[0][0])]

    @property
    def top(self):
        return self.elements[int(np.nonzero(self.leq.all(axis=0))[0][0])]

    def order_graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from((int(i), int(j)) for i, j in np.argwhere(self.leq) if i != j)
        return graph


def is_distributive(L):
    size = len(L)
    caps.check("distributivity triples", size ** 3)
    join, meet = L.join, L.meet
    # x ∧ (y ∨ z) against (x ∧ y) ∨ (x ∧ z), indexed [x, y, z]
    left = meet[np.arange(size)[:, None, None], join[None, :, :]]
    right = join[meet[:, :, None], meet[:, None, :]]
    return bool(np.array_equal(left, right))


def lattice_isomorphic(L1, L2):
    if len(L1) != len(L2) or int(L1.leq.sum()) != int(L2.leq.sum()):
        return False
    return nx.is_isomorphic(L1.order_graph(), L2.order_graph())


def maximal_antichains(elements, less_equal):
    """Maximal antichains as maximal cliques of the incomparability graph."""
    elements = list(elements)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(elements)))
    for i, x in enumerate(elements):
        for j in range(i + 1, len(elements)):
            y = elements[j]
            if not less_equal(x, y) and not less_equal(y, x):
                graph.add_edge(i, j)
    cliques = [tuple(sorted(c)) for c in nx.find_cliques(graph)]
    return [tuple(elements[i] for i in c) for c in sorted(cliques)]


def antichain_lattice(elements, less_equal):
    """L(P): maximal antichains, A <= B when every member of A lies below some member of B."""
    antichains = maximal_antichains(elements, less_equal)

    def below(A, B):
        return all(any(less_equal(u, v) for v in B) for u in A)

    L = FiniteLattice.from_order(antichains, below)
    logger.info(f"Antichain lattice of a {len(elements)}-element poset has {len(L)} elements")
    return L
