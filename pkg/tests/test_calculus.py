import random

import pytest

from holograph import (
    GraphFunction,
    cycle,
    enumerate_functions,
    is_harmonic,
    is_holomorphic,
    laplacian,
    local_condition,
    local_increments,
    multi,
    path,
    ring_make,
    star,
    tree,
)
from conftest import random_function, random_multigraph


def test_laplacian_cycle_witness():
    Z3 = ring_make("Z:3")
    g = cycle(6)
    f = GraphFunction(Z3, (0, 1, 2, 0, 1, 2))
    assert laplacian(g, f).values == (0,) * 6
    assert is_harmonic(g, f)
    assert not f.is_constant()


def test_laplacian_path():
    F5 = ring_make("Fp:5")
    g = path(3)
    f = GraphFunction(F5, (0, 1, 2))
    assert laplacian(g, f).values == (1, 0, 4)


def test_laplacian_constant_vanishes():
    F7 = ring_make("Fp:7")
    for g in (cycle(5), star(4), multi(cycle(3), 2)):
        f = GraphFunction.constant(F7, g.vertex_count, 3)
        assert laplacian(g, f).values == (0,) * g.vertex_count
        assert is_holomorphic(g, f)


def test_function_length_checked():
    F5 = ring_make("Fp:5")
    with pytest.raises(ValueError):
        laplacian(cycle(4), GraphFunction(F5, (0, 1, 2)))


def test_local_increments_star():
    F5 = ring_make("Fp:5")
    g = star(3)
    f = GraphFunction(F5, (1, 1, 2, 3))
    inc = local_increments(g, f, 0)
    assert inc.increments == (0, 1, 2)
    assert inc.center == 0


def test_local_increments_parallel_edges():
    F5 = ring_make("Fp:5")
    g = multi(path(2), 2)
    f = GraphFunction(F5, (0, 1))
    assert local_increments(g, f, 0).increments == (1, 1)


def test_local_condition_examples():
    Z9 = ring_make("Z:9")
    F5 = ring_make("Fp:5")
    from holograph import IncrementVector

    assert local_condition(IncrementVector(Z9, 0, (0, 3, 6)))
    assert not local_condition(IncrementVector(Z9, 0, (1, 3, 5)))
    assert local_condition(IncrementVector(F5, 0, (0, 0, 0)))


def test_holomorphic_examples():
    F5 = ring_make("Fp:5")
    g = cycle(6)
    nonconstant = GraphFunction(F5, (0, 1, 2, 3, 4, 0))
    assert not is_holomorphic(g, nonconstant)
    assert is_holomorphic(g, GraphFunction.constant(F5, 6, 2))


def test_truncated_tree_checks_skip_boundary():
    F5 = ring_make("Fp:5")
    t = tree(3, 1)
    # only the root is checked; boundary values are unconstrained pointwise
    f = GraphFunction(F5, (0, 0, 1, 4))
    assert is_harmonic(t, f)
    assert not is_harmonic(t.graph, f)


def test_laplacian_linearity_random():
    rng = random.Random(7)
    rings = [ring_make(s) for s in ("Fp:5", "Fq:3^2", "Z:9")]
    for _ in range(60):
        g = random_multigraph(rng)
        ring = rng.choice(rings)
        f = random_function(rng, ring, g.vertex_count)
        h = random_function(rng, ring, g.vertex_count)
        c = rng.choice(list(ring.elements()))
        assert laplacian(g, f.plus(h)).values == laplacian(g, f).plus(laplacian(g, h)).values
        assert laplacian(g, f.scaled(c)).values == laplacian(g, f).scaled(c).values


def test_harmonic_set_is_module():
    Z3 = ring_make("Z:3")
    g = cycle(6)
    funcs = list(enumerate_functions(g, Z3, "harmonic"))
    assert len(funcs) == 9
    for f in funcs:
        for h in funcs:
            assert is_harmonic(g, f.plus(h))
        for c in Z3.elements():
            assert is_harmonic(g, f.scaled(c))


def test_keystone_equivalence_random():
    rng = random.Random(123)
    rings = [ring_make(s) for s in ("Fp:3", "Fp:5", "Fp:7", "Fq:3^2")]
    for _ in range(300):
        g = random_multigraph(rng)
        ring = rng.choice(rings)
        f = random_function(rng, ring, g.vertex_count)
        via_laplacian = is_holomorphic(g, f)
        via_local = all(
            local_condition(local_increments(g, f, v)) for v in range(g.vertex_count)
        )
        assert via_laplacian == via_local


def test_function_text_round_trip():
    F9 = ring_make("Fq:3^2")
    f = GraphFunction(F9, ((0, 0), (2, 1), (1, 2)))
    again = GraphFunction.from_text(F9, 3, f.to_text())
    assert again == f
    with pytest.raises(ValueError):
        GraphFunction.from_text(F9, 3, "0 0,0\n1 1,1\n")  # missing vertex 2
    with pytest.raises(ValueError):
        GraphFunction.from_text(F9, 2, "0 0,0\n0 1,1\n1 0,0\n")  # duplicate
