import pytest

from holograph import (
    Graph,
    complete,
    cycle,
    edge_rooted_tree,
    gen,
    multi,
    path,
    star,
    tree,
)


def test_cycle():
    g = cycle(6)
    assert g.vertex_count == 6 and g.edge_count == 6
    assert all(g.degree(v) == 2 for v in range(6))
    assert g.neighbors(0) == (1, 5)
    with pytest.raises(ValueError):
        cycle(2)


def test_star():
    g = star(5)
    assert g.degree(0) == 5
    assert sorted(g.neighbors(0)) == [1, 2, 3, 4, 5]
    assert all(g.degree(v) == 1 for v in range(1, 6))


def test_multi_complete():
    g = multi(complete(4), 3)
    assert g.vertex_count == 4
    assert g.edge_count == 18
    assert g.edge_count > 3 * g.vertex_count
    assert g.neighbors(0) == (1, 1, 1, 2, 2, 2, 3, 3, 3)
    assert g.degree(0) == 9


def test_tree_shape():
    t = tree(3, 2)
    assert t.vertex_count == 10  # 1 + 3 + 6
    assert t.degree(t.root) == 3
    assert t.boundary == frozenset(range(4, 10))
    assert all(t.degree(v) == 1 for v in t.boundary)
    interior = [v for v in range(t.vertex_count) if v not in t.boundary]
    assert all(t.degree(v) == 3 for v in interior)
    assert t.children(0) == (1, 2, 3)
    assert t.parent[4] == 1 and t.depth[4] == 2


@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_tree_vertex_count_formula(d, r):
    t = tree(d, r)
    expected = 1 + d * ((d - 1) ** r - 1) // (d - 2)
    assert t.vertex_count == expected


def test_edge_rooted_tree():
    t = edge_rooted_tree(3, 2)
    # inner endpoint 0 (full degree 3), anchor 1 (boundary), 2 + 4 descendants
    assert t.vertex_count == 8
    assert t.degree(0) == 3 and t.degree(1) == 1
    assert 1 in t.boundary
    assert t.boundary == frozenset({1, 4, 5, 6, 7})
    assert all(t.degree(v) == 1 for v in t.boundary)


def test_generated_graphs_validate():
    for g in (cycle(6), path(3), star(5), complete(4), multi(complete(4), 3)):
        g.validate()
    tree(3, 3).graph.validate()
    edge_rooted_tree(3, 3).graph.validate()


def test_edge_list_round_trip():
    g = multi(complete(4), 2)
    again = Graph.from_edge_list(g.serialize())
    assert again == g
    assert again.serialize() == g.serialize()


def test_edge_list_parsing():
    g = Graph.from_edge_list("# a triangle\n0 1\n1 2\n2 0\n")
    assert g.vertex_count == 3 and g.edge_count == 3
    g2 = Graph.from_edge_list("0 1\n0 1\n")
    assert g2.degree(0) == 2 and g2.degree(1) == 2
    with pytest.raises(ValueError):
        Graph.from_edge_list("0 0\n")
    with pytest.raises(ValueError):
        Graph.from_edge_list("0 x\n")
    with pytest.raises(ValueError):
        Graph.from_edge_list("-1 2\n")
    with pytest.raises(ValueError):
        Graph.from_edge_list("0 1 2\n")


def test_neighbors_out_of_range():
    g = cycle(3)
    with pytest.raises(IndexError):
        g.neighbors(3)
    with pytest.raises(IndexError):
        g.degree(-1)


def test_gen_specs():
    assert gen("cycle:6") == cycle(6)
    assert gen("multi:complete:4:3") == multi(complete(4), 3)
    t = gen("tree:3:2")
    assert t.vertex_count == 10
    with pytest.raises(ValueError):
        gen("cycle")
    with pytest.raises(ValueError):
        gen("blob:3")
    with pytest.raises(ValueError):
        gen("tree:3")
