"""Permutations of {1..N} and the row/column subgroups of a block grid.

Positions 1..m*n are read as an n x m grid filled row by row: row k holds
positions {m*k+1, ..., m*k+m} and column v holds {v, v+m, ..., v+(n-1)m}.
The row subgroup permutes positions inside each row, the column subgroup
inside each column.  Enumeration order is lexicographic on image vectors
throughout, so logs are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

DEFAULT_ENUMERATION_BOUND = 9


class EnumerationTooLarge(ValueError):
    """A symmetric-group scale enumeration would exceed the size bound."""


def permutation_parity(images):
    """Parity (+1 or -1) of a 0-based image tuple, by cycle decomposition."""
    size = len(images)
    seen = bytearray(size)
    parity = 1
    for i in range(size):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = 1
            j = images[j]
            length += 1
        if not length & 1:
            parity = -parity
    return parity


class Perm:
    """A permutation of {1..N} stored as its image vector."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def _unchecked(cls, images):
        perm = object.__new__(cls)
        perm.images = tuple(images)
        return perm

    @classmethod
    def identity(cls, size):
        return cls._unchecked(range(1, size + 1))

    @classmethod
    def transposition(cls, size, a, b):
        images = list(range(1, size + 1))
        images[a - 1], images[b - 1] = b, a
        return cls._unchecked(images)

    def __len__(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        # (self * other)(i) = self(other(i))
        if not isinstance(other, Perm):
            return NotImplemented
        return Perm._unchecked(self.images[j - 1] for j in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j - 1] = i + 1
        return Perm._unchecked(inv)

    @property
    def sign(self):
        return permutation_parity(tuple(x - 1 for x in self.images))

    def act(self, values):
        """Move the value at position i to position self(i), i.e.
        result[j] = values[inverse(j)]; composes as (a*b).act == a.act(b.act)."""
        values = tuple(values)
        if len(values) != len(self.images):
            raise ValueError("length mismatch")
        out = [None] * len(values)
        for i, j in enumerate(self.images):
            out[j - 1] = values[i]
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({list(self.images)})"


@dataclass(frozen=True)
class BlockStructure:
    """Row blocks and column blocks of the n x m position grid."""

    m: int
    n: int

    @property
    def rows(self):
        return tuple(frozenset(range(self.m * k + 1, self.m * (k + 1) + 1))
                     for k in range(self.n))

    @property
    def cols(self):
        return tuple(frozenset(range(v, self.m * self.n + 1, self.m))
                     for v in range(1, self.m + 1))


def symmetric_group(size, bound=DEFAULT_ENUMERATION_BOUND):
    """All of S_size, lexicographic on image vectors."""
    if size > bound:
        raise EnumerationTooLarge(f"S_{size} exceeds the enumeration bound {bound}")
    for images in itertools.permutations(range(1, size + 1)):
        yield Perm._unchecked(images)


def _coordinate_subgroup(blocks, total):
    choices = [list(itertools.permutations(b)) for b in blocks]
    for combo in itertools.product(*choices):
        images = [0] * total
        for positions, permuted in zip(blocks, combo):
            for pos, img in zip(positions, permuted):
                images[pos - 1] = img
        yield Perm._unchecked(images)


def row_subgroup(m, n):
    """Direct product of the symmetric groups on the row blocks; (m!)^n
    elements, each stabilizing every row block setwise."""
    rows = [tuple(range(m * k + 1, m * (k + 1) + 1)) for k in range(n)]
    return _coordinate_subgroup(rows, m * n)


def column_subgroup(m, n):
    """Direct product of the symmetric groups on the column blocks; (n!)^m
    elements."""
    cols = [tuple(range(v, m * n + 1, m)) for v in range(1, m + 1)]
    return _coordinate_subgroup(cols, m * n)


def is_column_row_product(perm, blocks):
    """Does perm factor as (column element) * (row element)?  Criterion: no
    two positions of one row block may land in the same column block."""
    m, n = blocks.m, blocks.n
    for k in range(n):
        hit = [False] * m
        for pos in range(m * k + 1, m * (k + 1) + 1):
            col = (perm(pos) - 1) % m
            if hit[col]:
                return False
            hit[col] = True
    return True


def column_row_products(blocks):
    """The set {c * r : c in the column subgroup, r in the row subgroup},
    built by explicit products; oracle for is_column_row_product."""
    cols = list(column_subgroup(blocks.m, blocks.n))
    rows = list(row_subgroup(blocks.m, blocks.n))
    return {c * r for c in cols for r in rows}


def row_coset_reps(m, n, bound=DEFAULT_ENUMERATION_BOUND):
    """One representative per left coset of the row subgroup in S_(m*n).

    A coset is determined by the image set of each row block; the canonical
    representative sorts each block's images ascending, which is the
    lexicographically least element of the coset.
    """
    total = m * n
    if total > bound:
        raise EnumerationTooLarge(f"S_{total} exceeds the enumeration bound {bound}")

    def assign(remaining, row):
        if row == n:
            yield []
            return
        for chosen in itertools.combinations(remaining, m):
            taken = set(chosen)
            rest = tuple(x for x in remaining if x not in taken)
            for tail in assign(rest, row + 1):
                yield list(chosen) + tail

    for flat in assign(tuple(range(1, total + 1)), 0):
        yield Perm._unchecked(flat)
