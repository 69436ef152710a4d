import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holograph import (
    BranchTable,
    DeadEndError,
    DynamicsConfig,
    EisensteinRing,
    compare_corollary10,
    count_functions,
    count_local_restriction,
    dp_neighborhood_count,
    eisenstein_branches,
    is_holomorphic,
    ring_make,
    root_branches,
    sample_complex_tr3,
    sample_holomorphic_tree,
    tree,
)

INTS = st.integers(min_value=-10**6, max_value=10**6)


def test_branch_table_z9():
    Z9 = ring_make("Z:9")
    bt = BranchTable(Z9, 2)
    assert bt.branches(0) == ((0, 0), (3, 6), (6, 3))
    assert bt.count(3) == 3 and bt.count(6) == 3
    assert bt.count(1) == 0
    assert bt.branches(3) == ((0, 3), (3, 0), (6, 6))
    filtered = BranchTable(Z9, 2, exclude_constant=True)
    assert filtered.branches(0) == ((3, 6), (6, 3))
    assert filtered.branches(3) == ((0, 3), (3, 0))  # drops (6, 6), the all-equal branch


def test_root_branches_z9():
    Z9 = ring_make("Z:9")
    roots = root_branches(Z9, 3)
    assert len(roots) == 9
    types = sorted(set(tuple(sorted(t)) for t in roots))
    assert types == [(0, 0, 0), (0, 3, 6), (3, 3, 3), (6, 6, 6)]
    filtered = root_branches(Z9, 3, exclude_constant=True)
    assert sorted(set(tuple(sorted(t)) for t in filtered)) == [(0, 3, 6)]


@pytest.mark.parametrize("spec", ["Fp:3", "Fq:3^2"])
def test_char3_rigidity(spec):
    field = ring_make(spec)
    bt = BranchTable(field, 2)
    for t in field.elements():
        branches = bt.branches(t)
        assert len(branches) == 1
        two_t = field.add(t, t)
        assert branches[0] == (two_t, two_t)


def test_sampler_deterministic_and_sound():
    Z9 = ring_make("Z:9")
    cfg = DynamicsConfig(ring=Z9, degree=3, radius=4, seed=42)
    t1, f1 = sample_holomorphic_tree(cfg)
    t2, f2 = sample_holomorphic_tree(cfg)
    assert f1 == f2
    assert t1.graph.serialize() == t2.graph.serialize()
    assert f1.to_text() == f2.to_text()
    assert is_holomorphic(t1, f1)
    _, g1 = sample_holomorphic_tree(DynamicsConfig(ring=Z9, degree=3, radius=4, seed=43))
    assert any(g1.values[v] != f1.values[v] for v in range(t1.vertex_count))


@pytest.mark.parametrize("spec,degree", [("Fp:7", 5), ("Z:7", 6), ("Z:9", 3)])
def test_sampler_soundness_many_seeds(spec, degree):
    ring = ring_make(spec)
    for seed in range(100):
        cfg = DynamicsConfig(ring=ring, degree=degree, radius=3, seed=seed)
        t, f = sample_holomorphic_tree(cfg)
        assert is_holomorphic(t, f)


def test_sampler_filtered_z9_sound():
    Z9 = ring_make("Z:9")
    for seed in range(20):
        cfg = DynamicsConfig(ring=Z9, degree=3, radius=4, seed=seed,
                             exclude_constant_branches=True)
        t, f = sample_holomorphic_tree(cfg)
        assert is_holomorphic(t, f)
        # every vertex uses increments from {0, 3, 6} and never all-equal
        for v in range(t.vertex_count):
            if v in t.boundary:
                continue
            incs = [Z9.sub(f.values[w], f.values[v]) for w in t.neighbors(v)]
            assert set(incs) <= {0, 3, 6}
            assert len(set(incs)) > 1


def test_filtered_z3_dead_ends():
    # with constant-increment branches excluded nothing survives over Z_3,
    # so the dynamics cannot even leave the root
    Z3 = ring_make("Z:3")
    cfg = DynamicsConfig(ring=Z3, degree=3, radius=2, seed=0,
                         exclude_constant_branches=True)
    with pytest.raises(DeadEndError):
        sample_holomorphic_tree(cfg)
    # unfiltered, the constant-increment branch yields nonconstant functions
    t, f = sample_holomorphic_tree(DynamicsConfig(ring=Z3, degree=3, radius=3, seed=5,
                                                  root_value=0))
    assert is_holomorphic(t, f)


def test_dead_end_reports_vertex_and_increment():
    Z3 = ring_make("Z:3")
    cfg = DynamicsConfig(ring=Z3, degree=3, radius=2, seed=0,
                         exclude_constant_branches=True)
    with pytest.raises(DeadEndError) as exc:
        sample_holomorphic_tree(cfg)
    assert exc.value.vertex == 0


def test_first_neighbor_values():
    F9 = ring_make("Fq:3^2")
    s = F9.zero()
    x = (1, 2)
    fixed = tuple(F9.add(s, x) for _ in range(3))
    a = sample_holomorphic_tree(DynamicsConfig(ring=F9, degree=3, radius=3, seed=1,
                                               root_value=s, first_neighbor_values=fixed))
    b = sample_holomorphic_tree(DynamicsConfig(ring=F9, degree=3, radius=3, seed=99,
                                               root_value=s, first_neighbor_values=fixed))
    assert a[1] == b[1]  # rigidity: seed has nothing left to choose
    with pytest.raises(ValueError):
        sample_holomorphic_tree(DynamicsConfig(
            ring=F9, degree=3, radius=2, seed=1, root_value=s,
            first_neighbor_values=((1, 0), (0, 0), (0, 0))))


def test_config_validation():
    Z9 = ring_make("Z:9")
    with pytest.raises(ValueError):
        DynamicsConfig(ring=Z9, degree=1, radius=2, seed=0)
    with pytest.raises(ValueError):
        DynamicsConfig(ring=Z9, degree=3, radius=0, seed=0)
    with pytest.raises(ValueError):
        sample_holomorphic_tree(DynamicsConfig(ring=Z9, degree=3, radius=2, seed=0,
                                               root_value=11))


def test_eisenstein_branches_fixed_points():
    E = EisensteinRing()
    assert eisenstein_branches((0, 0)) == (((0, 0), (0, 0)),)
    pairs = eisenstein_branches((1, 0))
    assert pairs == (((0, -1), (1, 1)), ((1, 1), (0, -1)))
    w_pairs = eisenstein_branches((0, 1))
    assert ((1, 1), (-1, 0)) in w_pairs


@given(a=INTS, b=INTS)
@settings(max_examples=100, deadline=None)
def test_eisenstein_branch_identities(a, b):
    E = EisensteinRing()
    t = (a, b)
    for x1, x2 in eisenstein_branches(t):
        assert E.add(x1, x2) == t
        assert E.add(E.square(x1), E.square(x2)) == E.neg(E.square(t))


def test_sample_complex_tr3():
    alpha, beta = (0, 0), (1, 0)
    t1, f1 = sample_complex_tr3(7, 3, alpha, beta)
    t2, f2 = sample_complex_tr3(7, 3, alpha, beta)
    assert f1 == f2
    assert is_holomorphic(t1, f1)
    assert not f1.is_constant()
    assert f1.values[0] == alpha and f1.values[1] == beta
    _, f3 = sample_complex_tr3(8, 3, alpha, beta)
    assert f3 != f1
    with pytest.raises(ValueError):
        sample_complex_tr3(7, 3, alpha, alpha)


def test_complex_increments_are_unit_multiples():
    E = EisensteinRing()
    t, f = sample_complex_tr3(3, 3, (0, 0), (1, 0))
    for v in range(t.vertex_count):
        if v in t.boundary:
            continue
        for w in t.neighbors(v):
            inc = E.sub(f.values[w], f.values[v])
            assert E.norm(inc) == 1  # unit multiple of beta - alpha = 1


@pytest.mark.parametrize("spec,degree,radius", [("Fp:3", 3, 2), ("Fp:3", 3, 3),
                                                ("Fp:5", 3, 2), ("Z:9", 3, 2)])
def test_dp_matches_direct_enumeration(spec, degree, radius):
    ring = ring_make(spec)
    got = dp_neighborhood_count(ring, degree, radius)
    t = tree(degree, radius)
    direct = count_functions(t, ring, "holomorphic", pins={0: ring.zero()}, budget=None)
    assert got == direct


def test_dp_radius_one_matches_local_restriction():
    F7 = ring_make("Fp:7")
    assert dp_neighborhood_count(F7, 5, 1) == count_local_restriction(5, F7).observed


def test_compare_corollary10_report():
    F5 = ring_make("Fp:5")
    rep = compare_corollary10(F5, 3, 2)
    ctx = rep.context
    assert {"formula_plus", "formula_minus", "eta_hypothesis",
            "agrees_plus", "agrees_minus"} <= set(ctx)
    assert rep.observed == dp_neighborhood_count(F5, 3, 2)
    again = compare_corollary10(F5, 3, 2)
    assert rep.to_dict() == again.to_dict()
    # radius 1 reduces to the local-restriction bracket
    rep1 = compare_corollary10(F5, 3, 1)
    assert rep1.observed == count_local_restriction(3, F5).observed
    assert rep1.context["agrees_plus"] or rep1.context["agrees_minus"]
