import json
import random
from fractions import Fraction

import pytest

from problem_factory import random_problem
from swcohom.reduction import (
    MissVerdict,
    PiecewisePolynomialMap,
    PolynomialMap,
    ReductionProblem,
    builtin_compact,
    choose_reduction_subspace,
    halton_ball,
    proper_not_bounded_demo,
    reduce_and_degree,
    stability_check,
    verify_miss_condition,
)
from swcohom.linalg import vec_dot, vec_sub

F = Fraction


def identity_problem(dim, compact, radius):
    rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
    return ReductionProblem(dim, dim, rows, compact, radius)


def in_span(basis, v):
    from swcohom.reduction import _prepared_basis, _project

    b = _prepared_basis(basis)
    resid = vec_sub([F(x) for x in v], _project(b, v))
    return vec_dot(resid, resid) == 0


# -- problem type -------------------------------------------------------


def test_problem_validation():
    zero2 = builtin_compact("zero", 2)
    with pytest.raises(ValueError):
        ReductionProblem(5, 2, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]], zero2, 1)
    with pytest.raises(ValueError):
        ReductionProblem(2, 2, [[1, 0]], zero2, 1)
    with pytest.raises(ValueError):
        ReductionProblem(2, 2, [[1, 0], [0, 1]], zero2, 0)


def test_piecewise_totality_enforced():
    inside = PolynomialMap(2, [[], []])
    capped = PiecewisePolynomialMap([(F(1), inside)])
    with pytest.raises(ValueError):
        ReductionProblem(2, 2, [[1, 0], [0, 1]], capped, 10)


def test_json_roundtrip_builtin():
    p = identity_problem(
        2, builtin_compact("constant", 2, {"vector": [F(1, 2), F(-3)]}), 4
    )
    blob = json.dumps(p.to_json())
    q = ReductionProblem.from_json(json.loads(blob))
    x = [F(1, 3), F(-2, 5)]
    assert q.f(x) == p.f(x)
    assert q.bound_radius == p.bound_radius


def test_json_roundtrip_piecewise():
    rng = random.Random(2)
    p, _ = random_problem(rng, 2)
    q = ReductionProblem.from_json(json.loads(json.dumps(p.to_json())))
    for x in halton_ball(2, p.bound_radius, 12):
        assert q.f(x) == p.f(x)


# -- sampling ----------------------------------------------------------


def test_halton_deterministic_and_in_ball():
    a = halton_ball(3, 2, 40)
    b = halton_ball(3, 2, 40)
    assert a == b
    assert all(vec_dot(p, p) <= 4 for p in a)
    assert len({tuple(p) for p in a}) == 40


# -- subspace choice ------------------------------------------------------


def test_choose_constant_compact():
    v0 = [F(1, 2), F(1, 3)]
    p = identity_problem(2, builtin_compact("constant", 2, {"vector": v0}), 4)
    V = choose_reduction_subspace(p)
    assert len(V) == 1
    assert in_span(V, v0)


def test_choose_linear_invertible_zero_compact():
    p = identity_problem(3, builtin_compact("zero", 3), 2)
    assert choose_reduction_subspace(p) == []


def test_choose_includes_cokernel_complement():
    # l kills the second coordinate: im(l) = span(e1), so V must carry e2
    p = ReductionProblem(
        2, 2, [[1, 0], [0, 0]], builtin_compact("constant", 2, {"vector": [0, 1]}), 4
    )
    V = choose_reduction_subspace(p)
    assert in_span(V, [0, 1])


def test_choose_epsilon_range():
    p = identity_problem(2, builtin_compact("zero", 2), 2)
    with pytest.raises(ValueError):
        choose_reduction_subspace(p, epsilon=F(1, 3))
    with pytest.raises(ValueError):
        choose_reduction_subspace(p, epsilon=0)


# -- miss condition ----------------------------------------------------------


def test_miss_margin_linear_case():
    p = identity_problem(2, builtin_compact("zero", 2), 2)
    verdict = verify_miss_condition(p, [])
    assert isinstance(verdict, MissVerdict)
    assert verdict.ok


def test_miss_detects_too_small_subspace():
    # f(x) = x + e1 with V = {0}: f(0) = e1 lies on S(V-perp) exactly
    p = identity_problem(
        2, builtin_compact("constant", 2, {"vector": [1, 0]}), 4
    )
    verdict = verify_miss_condition(p, [])
    assert not verdict.ok


def test_miss_ok_on_chosen_subspace_quadratic():
    rng = random.Random(5)
    for _ in range(4):
        p, _ = random_problem(rng, 2)
        V = choose_reduction_subspace(p)
        assert verify_miss_condition(p, V).ok


# -- degree anchors ------------------------------------------------------------


def test_translation_degree_one():
    p = identity_problem(
        2, builtin_compact("constant", 2, {"vector": [F(1, 2), F(1, 3)]}), 4
    )
    r = reduce_and_degree(p, choose_reduction_subspace(p))
    assert r.degree == 1
    assert r.reduced_dim == 1


def test_z_squared_minus_one_degree_two():
    p = ReductionProblem(
        2, 2, [[0, 0], [0, 0]],
        builtin_compact("complex_square_minus_one", 2), F(3, 2),
    )
    r = reduce_and_degree(p, choose_reduction_subspace(p))
    assert r.degree == 2
    assert r.reduced_dim == 2


def test_minus_identity_degree():
    p = ReductionProblem(
        3, 3, [[-1, 0, 0], [0, -1, 0], [0, 0, -1]],
        builtin_compact("zero", 3), 2,
    )
    r = reduce_and_degree(p, choose_reduction_subspace(p))
    assert r.degree == -1
    assert r.reduced_dim == 0


def test_degree_invariant_across_subspaces():
    # diag(1,1,-1): full degree -1 whatever admissible V is used
    p = ReductionProblem(
        3, 3, [[1, 0, 0], [0, 1, 0], [0, 0, -1]], builtin_compact("zero", 3), 2
    )
    subspaces = [
        [],
        [[1, 0, 0]],
        [[0, 0, 1]],
        [[1, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    ]
    assert {reduce_and_degree(p, V).degree for V in subspaces} == {-1}


def test_index_must_vanish():
    p = ReductionProblem(3, 2, [[1, 0, 0], [0, 1, 0]],
                         builtin_compact("zero", 2), 2)
    with pytest.raises(ValueError):
        reduce_and_degree(p, [[1, 0]])


def test_reduced_dimension_capped():
    p = ReductionProblem(
        4, 4, [[0] * 4 for _ in range(4)],
        builtin_compact("constant", 4, {"vector": [3, 0, 0, 0]}), 1,
    )
    full = [[int(i == j) for j in range(4)] for i in range(4)]
    with pytest.raises(ValueError):
        reduce_and_degree(p, full)


def test_inadmissible_subspace_rejected():
    p = identity_problem(
        2, builtin_compact("constant", 2, {"vector": [1, 0]}), 4
    )
    with pytest.raises(ValueError):
        reduce_and_degree(p, [])


# -- stability -------------------------------------------------------------------


def test_stability_requires_containment():
    p = identity_problem(2, builtin_compact("zero", 2), 2)
    with pytest.raises(ValueError):
        stability_check(p, [[1, 0]], [[0, 1]])


def test_stability_on_random_problems():
    rng = random.Random(31)
    for dim in (2, 3):
        for _ in range(5):
            p, expected = random_problem(rng, dim)
            V = choose_reduction_subspace(p)
            full = [[int(i == j) for j in range(dim)] for i in range(dim)]
            verdict = stability_check(p, V, full)
            assert verdict.equal
            assert verdict.degree_large == expected


def test_epsilon_recorded():
    p = identity_problem(2, builtin_compact("zero", 2), 2)
    r = reduce_and_degree(p, [], epsilon=F(1, 8))
    assert r.epsilon == F(1, 8)


# -- the properness demo ------------------------------------------------------------


def test_proper_demo_literal_pushes_outward():
    rep = proper_not_bounded_demo(6)
    assert rep.literal_spike_norms == (3, 5, 7, 9, 11)
    assert rep.literal_unit_ball_hits == ()
    assert not rep.literal_found_unbounded


def test_proper_demo_corrected_variant_unbounded():
    rep = proper_not_bounded_demo(8)
    assert rep.corrected_found_unbounded
    assert len(rep.corrected_preimage_norms) == 7
    # preimage points march outward while their values stay in the ball
    assert all(v < 1 for v in rep.corrected_value_norms)
    norms = rep.corrected_preimage_norms
    assert all(a < b for a, b in zip(norms, norms[1:]))
    assert norms[-1] > 6


def test_proper_demo_rejects_small_n():
    with pytest.raises(ValueError):
        proper_not_bounded_demo(2)
