"""Smoke tests for the divgen python module."""

import math

import pytest

import divgen as dg


def test_version():
    assert dg.__version__


def test_sequential_generator_counts_and_distances():
    seed = dg.BinaryVector.zeros(8)
    c = dg.sequential_generator(seed)
    assert len(c) == 2 * (1 + int(math.log2(8)))
    assert c[0] == seed
    assert c[1] == seed.complemented()
    for i in range(2, len(c)):
        dists = [dg.distance(c[i], c[j]) for j in range(i)]
        assert min(dists) == 4.0


def test_first_generator_count_ballpark():
    c = dg.first_generator(dg.BinaryVector.zeros(50), h_max=10)
    assert 100 <= len(c) <= 120
    assert c.provenance.generator == "first"
    assert c.csv().startswith("index,x_1")


def test_stride_permutation_golden():
    p = dg.Permutation.identity(18)
    p5 = dg.stride_permutation(p, 5)
    assert p5.order == [5, 10, 15, 4, 9, 14, 3, 8, 13, 18, 2, 7, 12, 17, 1, 6, 11, 16]
    full = dg.generate_perm(p)
    assert all(not dg.validate(q) for q in full.members)


def test_opposites():
    unit = dg.BoundedInterval(0.0, 1.0, 0.2, 0.2)
    assert dg.obl_opposite(0.5, unit) == pytest.approx(0.5)
    assert dg.dbl_bounds(unit) == (pytest.approx(0.2), pytest.approx(0.8))
    assert dg.dbl_opposite(0.9, unit) == pytest.approx(0.2)
    assert dg.dbl_opposite(1.0, unit, integral=True) == 0.0

    col = dg.SortedColumn([2.0, 3.0, 9.0], 0.0, 10.0)
    assert dg.maxmin_opposite_component(col) == pytest.approx(6.0)


def test_lift_complement_is_dbl_opposite():
    iv = dg.BoundedInterval(0.0, 10.0, 0.2, 0.2)
    seed = dg.BoundedVector.uniform_bounds([1.0, 9.0, 7.0], iv)
    y = dg.binarize_seed(seed)
    assert y.bits == [0, 1, 1]
    binary = dg.BinaryCollection()
    binary.members = [y.complemented()]
    lifted = dg.lift_collection(seed, binary, rule="r1")
    assert lifted[0] == seed
    assert lifted[1].values == dg.dbl_opposite_vector(seed).values


def test_projection():
    anchor = dg.BinaryVector([1, 0, 0, 1, 1])
    obj = dg.build_coefficients(anchor)
    cs = dg.ConstraintSystem.gub([[1, 2, 3], [4, 5]])
    projected = dg.project_gub(obj, cs)
    assert projected.bits == [1, 0, 0, 1, 0]
    assert cs.satisfied_by(projected)
    assert dg.evaluate_proximity(obj, projected) == 2.0

    card = dg.project_cardinality(dg.build_coefficients(dg.BinaryVector([1, 1, 0, 0, 0])), 3, 5)
    assert card.bits == [1, 1, 1, 0, 0]


def test_diversity_extraction():
    rng = dg.Rng(7)
    pop = dg.BinaryCollection()
    pop.members = [dg.BinaryVector.random(16, rng) for _ in range(64)]
    sub = dg.extract_diverse_subset(pop, 8)
    assert len(sub) == 8
    r = dg.report(sub, pop[0])
    assert r.min_pairwise >= dg.report(pop, pop[0]).min_pairwise


def test_validation_reports():
    issues = dg.validate(dg.Permutation([1, 1, 3]))
    assert issues and "bijection" in issues[0]
    assert dg.validate(dg.BinaryVector([0, 1])) == []


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        dg.obl_opposite(2.0, dg.BoundedInterval(0.0, 1.0))
    with pytest.raises(ValueError):
        dg.first_generator(dg.BinaryVector.zeros(4), h_max=9)
