"""Union-find in four implementation variants behind one interface.

The variants form a difficulty ladder: a flat label table whose union must
rescan everything, then a parent forest refined first with union by rank
and finally with path compression.  ``op_counter`` counts elementary table
operations (reads and writes of the label/parent/rank tables), so the
linear-vs-logarithmic contrast between variants is observable without
wall-clock timing.
"""

from __future__ import annotations

ARRAY_LABEL = "array-label"
FOREST_NAIVE = "forest-naive"
FOREST_RANK = "forest-rank"
FOREST_RANK_PC = "forest-rank-pathcompress"

VARIANTS = (ARRAY_LABEL, FOREST_NAIVE, FOREST_RANK, FOREST_RANK_PC)


class DisjointSet:
    """Partition of {0..n-1} under union/find.

    Internal tables are exposed on purpose (``label`` for the array
    variant, ``parent``/``rank`` for the forest ones): trace tests inspect
    them directly, e.g. to observe path compression.
    """

    def __init__(self, n: int, variant: str = FOREST_RANK_PC):
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.variant = variant
        self.n = n
        self.num_classes = n
        self.op_counter = 0
        if variant == ARRAY_LABEL:
            self.label = list(range(n))
        else:
            self.parent = list(range(n))
            if variant in (FOREST_RANK, FOREST_RANK_PC):
                self.rank = [0] * n

    def _check(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise ValueError(f"element {x} out of range")

    def find(self, x: int) -> int:
        self._check(x)
        if self.variant == ARRAY_LABEL:
            self.op_counter += 1
            return self.label[x]
        root = x
        while self.parent[root] != root:
            self.op_counter += 1
            root = self.parent[root]
        self.op_counter += 1  # the read that saw parent[root] == root
        if self.variant == FOREST_RANK_PC:
            while self.parent[x] != root:
                self.op_counter += 2  # read the hop, rewrite it
                self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; True iff two classes were merged."""
        self._check(x)
        self._check(y)
        if self.variant == ARRAY_LABEL:
            self.op_counter += 2
            lx, ly = self.label[x], self.label[y]
            if lx == ly:
                return False
            # the whole table is scanned to relabel y's class
            for i in range(self.n):
                self.op_counter += 1
                if self.label[i] == ly:
                    self.label[i] = lx
                    self.op_counter += 1
            self.num_classes -= 1
            return True

        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.variant in (FOREST_RANK, FOREST_RANK_PC):
            if self.rank[rx] < self.rank[ry]:
                rx, ry = ry, rx
            self.parent[ry] = rx
            self.op_counter += 1
            if self.rank[rx] == self.rank[ry]:
                # ties attach y's root under x's root and bump the rank
                self.rank[rx] += 1
                self.op_counter += 1
        else:
            self.parent[ry] = rx
            self.op_counter += 1
        self.num_classes -= 1
        return True

    def classes(self) -> frozenset[frozenset[int]]:
        """Current partition as a set of sets (for equivalence checks)."""
        by_root: dict[int, list[int]] = {}
        for x in range(self.n):
            by_root.setdefault(self.find(x), []).append(x)
        return frozenset(frozenset(members) for members in by_root.values())


def make(n: int, variant: str = FOREST_RANK_PC) -> DisjointSet:
    return DisjointSet(n, variant)
