"""Growable union-find over node ids."""


class UnionFind:
    """Union by rank with path compression; tracks the component count."""

    def __init__(self, size: int = 0):
        """Start with ``size`` singleton components."""
        self.parent = list(range(size))
        self.rank = [0] * size
        self.components = size

    def __len__(self) -> int:
        """Number of elements."""
        return len(self.parent)

    def add(self) -> int:
        """Append a new singleton and return its id."""
        node = len(self.parent)
        self.parent.append(node)
        self.rank.append(0)
        self.components += 1
        return node

    def find(self, x: int) -> int:
        """Root of ``x``'s component."""
        root = x
        while root != self.parent[root]:
            root = self.parent[root]
        # compress path taken so every element points at the root
        while x != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the components of ``a`` and ``b``; True if they were distinct."""
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        if self.rank[root_a] == self.rank[root_b]:
            self.rank[root_a] += 1
        self.components -= 1
        return True
