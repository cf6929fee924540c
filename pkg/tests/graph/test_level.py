from pachner.graph import LevelGraph, UnionFind


def test_union_find_grows():
    uf = UnionFind(2)
    assert uf.add() == 2
    assert len(uf) == 3
    assert uf.components == 3
    assert uf.union(0, 2)
    assert not uf.union(2, 0)
    assert uf.find(0) == uf.find(2)
    assert uf.components == 2


def test_path_compression():
    uf = UnionFind(6)
    for a, b in [(0, 1), (2, 3), (0, 2), (4, 5), (0, 4)]:
        uf.union(a, b)
    root = uf.find(5)
    assert all(uf.find(x) == root for x in range(6))
    assert all(uf.parent[x] == root for x in range(6))


def test_level_graph_seeding_and_arcs():
    graph = LevelGraph(3, ["c", "a", "b", "a"])
    assert len(graph) == 3
    assert graph.components == 3
    assert graph.nodes_at(3) == ["a", "b", "c"]
    assert graph.sig_to_node["a"] == 0

    node = graph.add_node("x", 4)
    assert graph.add_node("x", 4) == node
    assert graph.ell == 4
    graph.add_arc("a", "x")
    graph.add_arc("b", "x")
    assert graph.components == 2
    assert "x" in graph
    assert "y" not in graph
    assert graph.nodes_at(4) == ["x"]
