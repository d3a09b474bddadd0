"""Finite n-ary magmas stored as flat operation tables.

A tuple (a_1, ..., a_n) sits at index sum a_i * m^(n-i), so a_1 is the
outermost coordinate and ``table.reshape((m,) * n)`` is the Cayley cube.
"""
from dataclasses import dataclass
from functools import lru_cache, cached_property
from math import comb
from typing import NamedTuple

import numpy as np

from magma_forge import caps
from magma_forge.core.ksets import ksets_up_to
from magma_forge.errors import (
    ArityMismatch,
    EntryOutOfRange,
    LengthMismatch,
    NotClosed,
    NotEssentiallyPolyadic,
    NotPermutation,
)
from magma_forge.utils.helpers import logger


def _frozen(array):
    array = np.ascontiguousarray(array, dtype=np.int64)
    array.flags.writeable = False
    return array


@lru_cache(maxsize=16)
def tuple_array(m, n):
    """Every tuple of A^n as a row, in table order."""
    return _frozen(np.indices((m,) * n).reshape(n, -1).T)


class SetIndex(NamedTuple):
    distinct: np.ndarray  # number of distinct components per tuple
    set_id: np.ndarray    # component set of each tuple, as a position in ``sets``
    first: np.ndarray     # first tuple (in table order) of each component set
    sets: tuple           # component sets as sorted tuples


@lru_cache(maxsize=16)
def component_sets(m, n):
    rows = np.sort(tuple_array(m, n), axis=1)
    if n > 1:
        dup = np.zeros(rows.shape, dtype=bool)
        dup[:, 1:] = rows[:, 1:] == rows[:, :-1]
        rows = np.sort(np.where(dup, m, rows), axis=1)
    distinct = (rows < m).sum(axis=1)
    uniq, first, inverse = np.unique(rows, axis=0, return_index=True, return_inverse=True)
    sets = tuple(tuple(int(v) for v in row if v < m) for row in uniq)
    return SetIndex(_frozen(distinct), _frozen(inverse.reshape(-1)), _frozen(first), sets)


@dataclass(frozen=True, eq=False)
class FiniteMagma:
    order: int
    arity: int
    table: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen(self.table))

    @property
    def size(self):
        return self.order ** self.arity

    @cached_property
    def cube(self):
        return self.table.reshape((self.order,) * self.arity)

    def index_of(self, args):
        index = 0
        for a in args:
            index = index * self.order + a
        return index

    def apply(self, *args):
        if len(args) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(args)}")
        return int(self.table[self.index_of(args)])

    def __eq__(self, other):
        return (
            isinstance(other, FiniteMagma)
            and self.order == other.order
            and self.arity == other.arity
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.order, self.arity, self.table.tobytes()))

    def __repr__(self):
        return f"FiniteMagma(order={self.order}, arity={self.arity})"


def make_magma(m, n, table, cap=None):
    if m < 1 or n < 1:
        raise LengthMismatch(f"order and arity must be positive, got m={m}, n={n}")
    caps.check("magma table", m ** n, cap)
    entries = np.asarray(list(table) if not isinstance(table, np.ndarray) else table, dtype=np.int64).reshape(-1)
    if entries.size != m ** n:
        raise LengthMismatch(f"table has {entries.size} entries, expected {m}^{n}={m ** n}")
    bad = np.nonzero((entries < 0) | (entries >= m))[0]
    if bad.size:
        raise EntryOutOfRange(f"entry {int(entries[bad[0]])} at index {int(bad[0])} is outside 0..{m - 1}")
    return FiniteMagma(m, n, entries)


@dataclass(frozen=True)
class PropertyReport:
    conservative: bool
    essentially_polyadic: bool
    fair: bool
    strongly_fair: bool
    nondegenerate: bool
    per_k_counts: tuple  # per_k_counts[k-1][a] = |f^-1(a) ∩ A_k|

    @property
    def preimage_sizes(self):
        return tuple(sum(col) for col in zip(*self.per_k_counts))

    @property
    def prps(self):
        return self.essentially_polyadic and self.strongly_fair and self.nondegenerate

    @property
    def rps(self):
        return self.conservative and self.prps

    @property
    def all_true(self):
        return self.rps and self.fair

    def flags(self):
        return {
            "conservative": self.conservative,
            "essentially_polyadic": self.essentially_polyadic,
            "fair": self.fair,
            "strongly_fair": self.strongly_fair,
            "nondegenerate": self.nondegenerate,
        }


def classify(A):
    m, n = A.order, A.arity
    out = A.table
    tuples = tuple_array(m, n)
    index = component_sets(m, n)
    conservative = bool((tuples == out[:, None]).any(axis=1).all())
    essentially_polyadic = bool(np.array_equal(out[index.first][index.set_id], out))
    counts = np.zeros((n, m), dtype=np.int64)
    np.add.at(counts, (index.distinct - 1, out), 1)
    totals = counts.sum(axis=0)
    fair = bool((totals == totals[0]).all())
    strongly_fair = bool((counts == counts[:, :1]).all())
    return PropertyReport(
        conservative=conservative,
        essentially_polyadic=essentially_polyadic,
        fair=fair,
        strongly_fair=strongly_fair,
        nondegenerate=m > n,
        per_k_counts=tuple(tuple(int(c) for c in row) for row in counts),
    )


@lru_cache(maxsize=16)
def _pointing_positions(m, n):
    return {kset: i for i, kset in enumerate(ksets_up_to(m, n))}


@dataclass(frozen=True)
class Pointing:
    """g on P_{<=n}(A); ``winners`` follows ksets_up_to(order, arity)."""

    order: int
    arity: int
    winners: tuple

    def __post_init__(self):
        expected = sum(comb(self.order, k) for k in range(1, self.arity + 1))
        if len(self.winners) != expected:
            raise LengthMismatch(f"pointing has {len(self.winners)} values, expected {expected}")
        if any(not 0 <= w < self.order for w in self.winners):
            raise EntryOutOfRange("pointing value outside the universe")

    @classmethod
    def from_mapping(cls, m, n, mapping):
        positions = _pointing_positions(m, n)
        winners = [None] * len(positions)
        for kset, w in mapping.items():
            key = tuple(sorted(kset))
            if key not in positions:
                raise LengthMismatch(f"{key} is not a k-set of order {m} with k <= {n}")
            winners[positions[key]] = int(w)
        missing = [k for k, i in positions.items() if winners[i] is None]
        if missing:
            raise LengthMismatch(f"pointing is missing {len(missing)} k-sets, first {missing[0]}")
        return cls(m, n, tuple(winners))

    def __getitem__(self, kset):
        return self.winners[_pointing_positions(self.order, self.arity)[tuple(kset)]]

    def items(self):
        return zip(ksets_up_to(self.order, self.arity), self.winners)

    def as_dict(self):
        return dict(self.items())

    @property
    def conservative(self):
        return all(w in kset for kset, w in self.items())


def extract_pointing(A):
    m, n = A.order, A.arity
    index = component_sets(m, n)
    out = A.table
    reference = out[index.first][index.set_id]
    conflicts = np.nonzero(reference != out)[0]
    if conflicts.size:
        t = int(conflicts[0])
        s = int(index.first[index.set_id[t]])
        tuples = tuple_array(m, n)
        witness = (tuple(int(v) for v in tuples[s]), tuple(int(v) for v in tuples[t]))
        raise NotEssentiallyPolyadic("tuples with equal component sets have different outputs", witness)
    by_set = {kset: int(out[f]) for kset, f in zip(index.sets, index.first)}
    return Pointing.from_mapping(m, n, by_set)


def from_pointing(p, cap=None):
    m, n = p.order, p.arity
    caps.check("magma table", m ** n, cap)
    index = component_sets(m, n)
    by_set = np.array([p[kset] for kset in index.sets], dtype=np.int64)
    return FiniteMagma(m, n, by_set[index.set_id])


def direct_product(A, B, cap=None):
    if A.arity != B.arity:
        raise ArityMismatch(f"arities differ: {A.arity} vs {B.arity}")
    n, ma, mb = A.arity, A.order, B.order
    m = ma * mb
    caps.check("product table", m ** n, cap)
    pairs = tuple_array(m, n)
    xs, ys = pairs // mb, pairs % mb
    weights_a = ma ** np.arange(n - 1, -1, -1)
    weights_b = mb ** np.arange(n - 1, -1, -1)
    out = A.table[xs @ weights_a] * mb + B.table[ys @ weights_b]
    return FiniteMagma(m, n, out)


def is_subuniverse(A, S):
    elements = sorted(set(S))
    outs = A.cube[np.ix_(*[elements] * A.arity)]
    return bool(np.isin(outs, elements).all())


def restrict(A, S):
    """Subalgebra on S, re-indexed 0..|S|-1; returns (magma, elements)."""
    elements = sorted(set(int(s) for s in S))
    if not elements:
        raise NotClosed("empty subset")
    n = A.arity
    outs = A.cube[np.ix_(*[elements] * n)]
    inside = np.isin(outs, elements)
    if not inside.all():
        bad = np.argwhere(~inside)[0]
        witness = tuple(elements[i] for i in bad)
        raise NotClosed("subset is not closed under the operation", witness)
    relabel_map = np.full(A.order, -1, dtype=np.int64)
    relabel_map[elements] = np.arange(len(elements))
    return FiniteMagma(len(elements), n, relabel_map[outs].reshape(-1)), tuple(elements)


def _check_permutation(sigma, m):
    sigma = np.asarray(sigma, dtype=np.int64)
    if sigma.shape != (m,) or sorted(sigma.tolist()) != list(range(m)):
        raise NotPermutation(f"{list(sigma)} is not a permutation of 0..{m - 1}")
    return sigma


def permute_outputs(A, sigma):
    sigma = _check_permutation(sigma, A.order)
    return FiniteMagma(A.order, A.arity, sigma[A.table])


def relabel(A, phi):
    """The copy of A transported along the bijection phi."""
    phi = _check_permutation(phi, A.order)
    cube = np.empty_like(A.cube)
    cube[np.ix_(*[phi] * A.arity)] = phi[A.cube]
    return FiniteMagma(A.order, A.arity, cube.reshape(-1))


def derived_binary(A):
    m, n = A.order, A.arity
    if n < 2:
        raise ArityMismatch("the derived binary term needs arity at least 2")
    if n == 2:
        return A
    tail = sum(m ** j for j in range(n - 1))
    xs, ys = np.divmod(np.arange(m * m), m)
    return FiniteMagma(m, 2, A.table[xs * m ** (n - 1) + ys * tail])


def invariant_vectors(A):
    """Per element, its preimage count in each stratum A_k."""
    counts = classify(A).per_k_counts
    return [tuple(row[a] for row in counts) for a in range(A.order)]


def isomorphisms(A, B):
    """Yield every bijection phi with phi(f_A(x)) = f_B(phi x)."""
    if A.order != B.order or A.arity != B.arity:
        return
    m, n = A.order, A.arity
    inv_a, inv_b = invariant_vectors(A), invariant_vectors(B)
    if sorted(inv_a) != sorted(inv_b):
        return
    candidates = [[b for b in range(m) if inv_b[b] == inv_a[a]] for a in range(m)]
    order = sorted(range(m), key=lambda a: (len(candidates[a]), a))
    phi = np.full(m, -1, dtype=np.int64)
    phi_inv = np.full(m, -1, dtype=np.int64)
    cube_a, cube_b = A.cube, B.cube

    def consistent(depth):
        dom = order[: depth + 1]
        img = phi[dom]
        out_a = cube_a[np.ix_(*[dom] * n)]
        out_b = cube_b[np.ix_(*[img] * n)]
        mapped = phi[out_a]
        known = mapped >= 0
        if not np.array_equal(mapped[known], out_b[known]):
            return False
        # an unassigned output may not land on an image already taken
        return bool((phi_inv[out_b[~known]] < 0).all())

    def extend(depth):
        if depth == m:
            yield tuple(int(x) for x in phi)
            return
        a = order[depth]
        for b in candidates[a]:
            if phi_inv[b] >= 0:
                continue
            phi[a], phi_inv[b] = b, a
            if consistent(depth):
                yield from extend(depth + 1)
            phi[a], phi_inv[b] = -1, -1

    yield from extend(0)


def isomorphic(A, B):
    if A.arity != B.arity:
        raise ArityMismatch(f"arities differ: {A.arity} vs {B.arity}")
    found = next(isomorphisms(A, B), None)
    logger.info(f"Isomorphism search on order {A.order}: {'found' if found else 'none'}")
    return found
