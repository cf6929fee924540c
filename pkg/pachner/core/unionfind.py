"""Union-find with a parity bit per element and undo support.

Each element carries a parity relative to its root, which lets one structure
track both "same class" and "same orientation within the class". Union by
rank without path compression keeps every merge reversible, so backtracking
searches can take a :meth:`ParityUnionFind.mark` and later
:meth:`ParityUnionFind.rollback` to it.
"""

from __future__ import annotations


class ParityUnionFind:
    """Disjoint sets over ``range(size)`` with relative parities."""

    def __init__(self, size: int):
        """Start with every element in its own class at parity 0."""
        self.parent = list(range(size))
        self.parity = [0] * size
        self.rank = [0] * size
        self.components = size
        self._history: list[tuple[int, int, int]] = []

    def find(self, x: int) -> tuple[int, int]:
        """Return ``(root, parity of x relative to root)``."""
        parity = 0
        parent = self.parent
        while parent[x] != x:
            parity ^= self.parity[x]
            x = parent[x]
        return x, parity

    def union(self, a: int, b: int, parity: int = 0) -> bool:
        """Declare ``a`` and ``b`` related with the given relative parity.

        Returns:
            False if ``a`` and ``b`` already share a class with the opposite
            relative parity (the structure is left untouched), else True.

        """
        root_a, parity_a = self.find(a)
        root_b, parity_b = self.find(b)
        if root_a == root_b:
            return (parity_a ^ parity_b) == parity
        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.parity[root_b] = parity_a ^ parity_b ^ parity
        bumped = int(self.rank[root_a] == self.rank[root_b])
        self.rank[root_a] += bumped
        self.components -= 1
        self._history.append((root_b, root_a, bumped))
        return True

    def mark(self) -> int:
        """Checkpoint to pass to :meth:`rollback`."""
        return len(self._history)

    def rollback(self, mark: int) -> None:
        """Undo every successful union made since ``mark``."""
        history = self._history
        while len(history) > mark:
            child, root, bumped = history.pop()
            self.parent[child] = child
            self.parity[child] = 0
            self.rank[root] -= bumped
            self.components += 1

    def classes(self) -> list[list[int]]:
        """Members grouped by class, classes ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x)[0], []).append(x)
        return sorted(groups.values(), key=lambda members: members[0])
