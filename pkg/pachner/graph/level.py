"""Working subgraph of the restricted Pachner graph."""

from collections.abc import Iterable

from pachner.graph.unionfind import UnionFind


class LevelGraph:
    """Nodes keyed by signature, with levels and connectivity.

    Node ids are handed out in order of first discovery. Arcs are not stored;
    only their effect on connectivity is kept.
    """

    def __init__(self, n: int, level_nodes: Iterable[str]):
        """Seed the graph with every node of level ``n``, in sorted order."""
        self.n = n
        self.ell = n
        self.sig_to_node: dict[str, int] = {}
        self.node_sig: list[str] = []
        self.node_level: list[int] = []
        self.uf = UnionFind()
        for sig in sorted(set(level_nodes)):
            self.add_node(sig, n)

    def __len__(self) -> int:
        """Number of nodes."""
        return len(self.node_sig)

    def __contains__(self, sig: object) -> bool:
        """Whether ``sig`` is a node."""
        return sig in self.sig_to_node

    @property
    def components(self) -> int:
        """Number of connected components, the ``c`` of the analyses."""
        return self.uf.components

    def add_node(self, sig: str, level: int) -> int:
        """Id of ``sig``, creating the node at ``level`` if new."""
        node = self.sig_to_node.get(sig)
        if node is None:
            node = self.uf.add()
            self.sig_to_node[sig] = node
            self.node_sig.append(sig)
            self.node_level.append(level)
            self.ell = max(self.ell, level)
        return node

    def add_arc(self, source: str, target: str) -> None:
        """Join two existing nodes."""
        self.uf.union(self.sig_to_node[source], self.sig_to_node[target])

    def nodes_at(self, level: int) -> list[str]:
        """Signatures at ``level`` in id order."""
        pairs = zip(self.node_sig, self.node_level, strict=True)
        return [sig for sig, lvl in pairs if lvl == level]

