from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perilab.partitions import (
    INF,
    ZERO,
    Partition,
    Weight,
    WeightDiagram,
    WeightError,
    _dual_by_reflection,
    _dual_by_transpose,
    box_moves,
    cosocle_witness,
    diagram_to_weight,
    dual_weight,
    exterior_sym2_schur,
    is_k_admissible,
    is_quasisymmetric,
    kostka,
    lr_coeff,
    lr_memo_preload,
    lr_memo_snapshot,
    partition_of_weight,
    partitions_of,
    schur_expand,
    socle_multiplicity,
    truncate,
    weight_of_partition,
    weight_size,
    weight_to_diagram,
)

partitions_st = st.lists(st.integers(1, 5), max_size=5).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))
weights_st = partitions_st.map(weight_of_partition)


# ---------------------------------------------------------------- weights

def test_zero_weight_strips_trailing_zeros():
    assert Weight.of([-2, 0, 0]) == Weight.of([-2])
    assert Weight.of([]) == ZERO
    assert ZERO.size == 0


@pytest.mark.parametrize("entries, rank", [
    ([0, -1], INF),      # decreasing
    ([-1, 1], INF),      # positive entry in infinite rank
    ([-1], 2),           # wrong length
    ([], 0),             # bad rank
])
def test_weight_rejects(entries, rank):
    with pytest.raises(WeightError):
        Weight.of(entries, rank)


def test_finite_rank_allows_positive_entries():
    lam = Weight.of([-1, 0, 2], 3)
    assert lam[3] == 2 and lam.size == -1


def test_one_based_indexing():
    lam = Weight.of([-3, -1])
    assert (lam[1], lam[2], lam[3], lam[100]) == (-3, -1, 0, 0)
    with pytest.raises(IndexError):
        lam[0]
    with pytest.raises(IndexError):
        Weight.of([-1, 0], 2)[3]


@pytest.mark.parametrize("entries, k, ok", [
    ([], 0, True), ([-1], 0, False), ([-2, -1], 3, True), ([-2, -1], 2, False)])
def test_admissible(entries, k, ok):
    assert is_k_admissible(Weight.of(entries), k) is ok


def test_truncate_pads_with_zeros():
    assert truncate(Weight.of([-2, -1]), 4) == Weight.of([-2, -1, 0, 0], 4)
    with pytest.raises(WeightError):
        truncate(Weight.of([-1, -1, -1]), 2)
    with pytest.raises(WeightError):
        truncate(Weight.of([0, 0], 2), 3)


def test_diagram_positions():
    d = weight_to_diagram(Weight.of([-2, -1]))
    assert d.balls == (-2, 0) and d.tail == 2
    assert d.occupancy(-3, 3) == (0, 1, 0, 1, 0, 1, 1)
    fin = weight_to_diagram(Weight.of([-1, 0, 3], 3))
    assert fin == WeightDiagram((-1, 1, 5), None)


@given(weights_st)
def test_diagram_round_trip(lam):
    assert diagram_to_weight(weight_to_diagram(lam)) == lam
    n = len(lam.entries) + 1
    t = truncate(lam, n)
    assert diagram_to_weight(weight_to_diagram(t)) == t


def test_bad_diagrams():
    with pytest.raises(WeightError):
        WeightDiagram((1, 1))
    with pytest.raises(WeightError):
        WeightDiagram((0, 3), tail=3)
    with pytest.raises(WeightError):
        diagram_to_weight(WeightDiagram((-5,), tail=3))


@given(weights_st)
def test_json_round_trips(lam):
    assert Weight.from_json(lam.to_json()) == lam
    d = weight_to_diagram(lam)
    assert WeightDiagram.from_json(d.to_json()) == d


# ---------------------------------------------------------------- partitions

@pytest.mark.parametrize("k, count", [(0, 1), (1, 1), (4, 5), (6, 11), (10, 42)])
def test_partition_counts(k, count):
    assert sum(1 for _ in partitions_of(k)) == count


def test_partitions_reverse_lex():
    assert [p.rows for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]


@given(partitions_st)
def test_conjugate_involution(p):
    assert p.conjugate().conjugate() == p
    assert p.conjugate().size == p.size
    assert p.conjugate().durfee() == p.durfee()


@given(weights_st)
def test_weight_partition_bijection(lam):
    p = partition_of_weight(lam)
    assert p.size == weight_size(lam)
    assert weight_of_partition(p) == lam


# ---------------------------------------------------------------- duality

@pytest.mark.parametrize("lam, dual", [
    ([], []), ([-1], [-1]), ([-2], [-1, -1]), ([-1, -1], [-2]),
    ([-3, -1], [-2, -1, -1]), ([-2, -2, -1], [-3, -2])])
def test_dual_examples(lam, dual):
    assert dual_weight(Weight.of(lam)) == Weight.of(dual)


@settings(max_examples=200)
@given(weights_st)
def test_dual_two_ways(lam):
    a, b = _dual_by_transpose(lam), _dual_by_reflection(lam)
    assert a == b
    assert dual_weight(a) == lam
    assert a.size == lam.size


def test_dual_reads_finite_rank_stably():
    assert dual_weight(Weight.of([-2, 0, 0], 3)) == Weight.of([-1, -1])


# ---------------------------------------------------------------- box moves

def test_box_moves_zero():
    minus, plus = box_moves(ZERO)
    assert minus == [Weight.of([-1])] and plus == []


def test_box_moves_example():
    minus, plus = box_moves(Weight.of([-1, -1]))
    assert minus == [Weight.of([-2, -1]), Weight.of([-1, -1, -1])]
    assert plus == [Weight.of([-1])]


def test_box_moves_filtered_by_k():
    minus, plus = box_moves(Weight.of([-1, -1]), k=2)
    assert minus == [] and plus == [Weight.of([-1])]


@given(weights_st)
def test_box_moves_add_or_remove_one_box(lam):
    minus, plus = box_moves(lam)
    assert all(mu.size == lam.size + 1 for mu in minus)
    assert all(mu.size == lam.size - 1 for mu in plus)
    p = partition_of_weight(lam)
    # a weight move adds a box to one column: same as a corner in the conjugate
    assert len(minus) == sum(1 for q in partitions_of(p.size + 1) if q.contains(p))
    assert len(plus) == sum(1 for q in partitions_of(p.size - 1) if p.contains(q)) if p.size else not plus


def test_box_moves_finite_rank():
    minus, plus = box_moves(Weight.of([-1, 0], 2))
    assert minus == [Weight.of([-2, 0], 2), Weight.of([-1, -1], 2)]
    assert plus == [Weight.of([0, 0], 2), Weight.of([-1, 1], 2)]


# ---------------------------------------------------------------- QSym

@pytest.mark.parametrize("rows, qs", [
    ((), True), ((2,), True), ((1, 1), False), ((3, 1), True),
    ((2, 2), False), ((3, 3), True), ((4, 1, 1), True), ((3, 2, 1), False),
    ((4, 2, 1, 1), False), ((3, 3, 1, 1), False), ((4, 4, 4), True)])
def test_quasisymmetric_examples(rows, qs):
    assert is_quasisymmetric(Partition(rows)) is qs


def test_qsym_count_matches_sym2_generating_function():
    # QSym partitions of 2k are counted by strict partitions of k
    def strict(k):
        return sum(1 for p in partitions_of(k) if len(set(p.rows)) == len(p.rows))
    for k in range(0, 8):
        assert sum(1 for g in partitions_of(2 * k) if is_quasisymmetric(g)) == strict(k)
    assert not any(is_quasisymmetric(g) for g in partitions_of(7))


@pytest.mark.parametrize("k, m", [(1, 2), (2, 3), (2, 4), (3, 3)])
def test_plethysm_support(k, m):
    exp = exterior_sym2_schur(k, m)
    want = {g for g in partitions_of(2 * k) if len(g) <= m and is_quasisymmetric(g)}
    assert set(exp) == want
    assert set(exp.values()) <= {1}


# ---------------------------------------------------------------- Kostka and LR

@pytest.mark.parametrize("shape, content, value", [
    ((2, 1), (1, 1, 1), 2), ((3,), (1, 2), 1), ((2, 2), (1, 1, 1, 1), 2),
    ((3, 2), (2, 2, 1), 2), ((2, 1), (3,), 0), ((3, 2, 1), (1,) * 6, 16)])
def test_kostka(shape, content, value):
    assert kostka(shape, content) == value


def _schur_monomials(p: Partition, m: int) -> dict[tuple, int]:
    out = {}
    for e in itertools.product(range(p.size + 1), repeat=m):
        if sum(e) == p.size:
            kk = kostka(p.rows, tuple(x for x in e if x))
            if kk:
                out[e] = kk
    return out


def _lr_by_multiplication(gamma: Partition, beta: Partition, m: int) -> dict[Partition, int]:
    a, b = _schur_monomials(gamma, m), _schur_monomials(beta, m)
    prod: dict[tuple, int] = {}
    for e, x in a.items():
        for f, y in b.items():
            g = tuple(i + j for i, j in zip(e, f))
            if all(s >= t for s, t in zip(g, g[1:])):
                prod[g] = prod.get(g, 0) + x * y
    if not prod:
        prod[(0,) * m] = 1
    return schur_expand(prod, m)


@pytest.mark.parametrize("gamma, beta", [
    ((1,), (1,)), ((2, 1), (1,)), ((2, 1), (2, 1)), ((2,), (1, 1)),
    ((3, 1), (2,)), ((2, 2), (1, 1)), ((1, 1), (1, 1, 1))])
def test_lr_against_schur_multiplication(gamma, beta):
    g, b = Partition(gamma), Partition(beta)
    m = len(gamma) + len(beta)
    expected = _lr_by_multiplication(g, b, m)
    for zeta in partitions_of(g.size + b.size):
        if len(zeta) <= m:
            assert lr_coeff(g, b, zeta) == expected.get(zeta, 0), zeta


@settings(max_examples=60, deadline=None)
@given(partitions_st.filter(lambda p: p.size <= 4), partitions_st.filter(lambda p: p.size <= 3))
def test_lr_symmetric_and_conjugation(gamma, beta):
    for zeta in partitions_of(gamma.size + beta.size):
        c = lr_coeff(gamma, beta, zeta)
        assert c == lr_coeff(beta, gamma, zeta)
        assert c == lr_coeff(gamma.conjugate(), beta.conjugate(), zeta.conjugate())


def test_lr_memo_round_trip():
    lr_coeff(Partition.of(2, 1), Partition.of(1), Partition.of(2, 2))
    snap = lr_memo_snapshot()
    assert snap
    lr_memo_preload(snap)
    assert lr_memo_snapshot() == snap


def test_socle_and_witness():
    zeta, k = cosocle_witness(Partition.of(1))
    assert (zeta, k) == (Partition.of(3), 2)
    assert socle_multiplicity(zeta, Partition.of(1), k) == 1
    assert socle_multiplicity(zeta, Partition.of(1), k + 1) == 0
    assert cosocle_witness(Partition(())) == (Partition(()), 0)
