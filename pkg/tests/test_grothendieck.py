from __future__ import annotations

import json
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perilab import superalg
from perilab.grothendieck import (
    CalibrationError,
    GrothendieckError,
    GrothVector,
    TableGap,
    ThetaTable,
    cache_path,
    discover_theta_table,
    load_or_discover,
    moves_of,
    tensor_by_V,
    theta_apply,
    theta_sum,
    theta_word,
    verify_tl_relations,
    weights_up_to,
)
from perilab.partitions import Weight

W = Weight.of


@pytest.fixture(scope="module")
def table():
    return discover_theta_table(5, 1)


def test_vector_normalizes():
    v = GrothVector(((W([-1]), 2), (W([-1]), -2), (W([-2]), 1)), 2)
    assert v.as_dict() == {W([-2]): 1}
    assert GrothVector.from_json(json.loads(json.dumps(v.to_json()))) == v


def test_vector_admissibility():
    with pytest.raises(GrothendieckError):
        GrothVector(((W([-2]), 1),), 1)


def test_finite_rank_terms_are_stabilized():
    v = GrothVector(((Weight.of([-1, 0], 2), 1),), 1)
    assert v.as_dict() == {W([-1]): 1}


@pytest.mark.parametrize("lam, k, expected", [
    ([], 1, {(-1,): 1}),
    ([-1], 2, {(): 1, (-2,): 1, (-1, -1): 1}),
    ([-1, -1], 3, {(-1,): 1, (-2, -1): 1, (-1, -1, -1): 1}),
])
def test_tensor_by_v(lam, k, expected):
    out = tensor_by_V(GrothVector.basis(W(lam)), k)
    assert out.level == k
    assert {w.entries: c for w, c in out.terms} == expected


def test_tensor_by_v_level_check():
    with pytest.raises(GrothendieckError):
        tensor_by_V(GrothVector.basis(W([-2])), 2)


@given(st.lists(st.integers(1, 3), max_size=3))
def test_moves_change_one_ball(cols):
    from perilab.partitions import Partition, weight_of_partition
    lam = weight_of_partition(Partition(tuple(sorted(cols, reverse=True))))
    for m in moves_of(lam):
        assert abs(m.end - m.start) == 1
        assert abs(m.target.size - lam.size) == 1


def test_calibrated_rule_shape(table):
    assert table.radius == 0
    assert len(table.rules) == 2
    assert ThetaTable.from_json(table.to_json()).same_rules(table)


def test_unknown_context_is_a_gap(table):
    gap = ThetaTable(table.n, 1, (), 0, 0)
    with pytest.raises(TableGap):
        theta_apply(0, GrothVector.basis(W([])), gap)


def test_calibration_needs_stable_rank():
    with pytest.raises(CalibrationError):
        discover_theta_table(4, 1)


def test_theta_zero_on_trivial(table):
    zero = GrothVector.basis(W([]))
    hits = {j for j in range(-4, 5) if theta_apply(j, zero, table)}
    assert hits == {0}


@pytest.mark.parametrize("lam", weights_up_to(3), ids=str)
def test_theta_sum_is_tensor_by_v(table, lam):
    v = GrothVector.basis(lam)
    assert theta_sum(v, table).same_class(tensor_by_V(v))


def test_tl_relations(table):
    report = verify_tl_relations(table, (-4, 4), 2)
    assert report.passed, report.failures[:3]
    assert report.checked > 0


def test_word_order_is_operator_product(table):
    v = GrothVector.basis(W([]))
    assert theta_word([1, 0], v, table) == theta_apply(1, theta_apply(0, v, table), table)


def test_table_predicts_spectrum_at_other_rank(table):
    # the rule calibrated at n = 5 must reproduce the Casimir spectrum at n = 6
    n = 6
    for lam in weights_up_to(1):
        d = superalg.build_truncated_standard(n, lam)
        want = Counter()
        for m in moves_of(lam):
            mu = superalg.build_truncated_standard(n, m.target)
            want[table.eigenvalue(m)] += mu.dim
        assert superalg.theta_eigen_decomp(n, d) == dict(want)


def test_cache_round_trip(tmp_path, table):
    t1 = load_or_discover(5, 1, tmp_path)
    path = cache_path(tmp_path, 5, 1, None)
    assert path.exists()
    t2 = load_or_discover(5, 1, tmp_path)
    assert t1.same_rules(t2) and t1.same_rules(table)
