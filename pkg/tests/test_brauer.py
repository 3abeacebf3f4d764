from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perilab import linalg
from perilab.brauer import (
    BrauerError,
    BrauerHom,
    MarkedDiagram,
    brauer_basis,
    brauer_compose,
    brauer_tensor,
    cap,
    crossing,
    cup,
    identity_diagram,
    realize,
)
from perilab.superalg import (
    equivariant_functionals,
    identity_matrix,
    is_equivariant,
    natural_space,
    super_kron,
    tensor_power_rep,
)

B = BrauerHom.of


def _double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@pytest.mark.parametrize("r, s", [(0, 0), (2, 0), (1, 1), (2, 2), (3, 1), (4, 2), (3, 3)])
def test_basis_size(r, s):
    assert len(brauer_basis(r, s)) == _double_factorial(r + s - 1)
    assert brauer_basis(r, s + 1) == []


def test_parities():
    assert cap().parity == 1 and cup().parity == 1
    assert identity_diagram(3).parity == 0 and crossing().parity == 0
    assert [d.parity for d in brauer_basis(2, 2)] == [0, 0, 0]
    assert {d.parity for d in brauer_basis(3, 1)} == {1}


def test_not_a_matching():
    with pytest.raises(BrauerError):
        MarkedDiagram(2, 0, ((("b", 0), ("b", 0)),))
    with pytest.raises(BrauerError):
        MarkedDiagram(1, 1, ((("b", 0), ("t", 0)),), coeff=2)


def test_hom_rejects_mixed_shapes():
    with pytest.raises(BrauerError):
        BrauerHom(2, 0, 1, ((identity_diagram(2), 1),))


def test_loop_is_zero():
    assert brauer_compose(B(cap()), B(cup())).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_loop_value_matches_superdimension(n):
    m = realize(cap(), n) @ realize(cup(), n)
    assert m.is_zero()
    assert natural_space(n).sdim == 0


def test_zigzag_is_identity():
    one = B(identity_diagram(1))
    left = brauer_compose(brauer_tensor(one, B(cap())), brauer_tensor(B(cup()), one))
    assert left == one


def test_cap_absorbs_crossing():
    # the form is symmetric
    assert brauer_compose(B(cap()), B(crossing())) == B(cap())


def test_crossing_squares_to_identity():
    assert brauer_compose(B(crossing()), B(crossing())) == B(identity_diagram(2))


def test_hom_algebra():
    f = B(cap())
    assert (f + (-f)).is_zero()
    assert BrauerHom.from_json(f.to_json()) == f
    assert BrauerHom.from_json(cap().to_json()) == f


@pytest.mark.parametrize("n", [1, 2])
def test_realize_identity(n):
    assert realize(identity_diagram(2), n) == identity_matrix(natural_space(n).tensor(natural_space(n)))


diagrams = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.randoms(use_true_random=False))


@settings(max_examples=60, deadline=None)
@given(diagrams)
def test_realization_is_a_functor(data):
    r, s, u, rng = data
    s += (r + s) % 2
    u += (s + u) % 2
    f = rng.choice(brauer_basis(r, s))
    g = rng.choice(brauer_basis(s, u))
    for n in (1, 2):
        lhs = realize(brauer_compose(B(g), B(f)), n)
        assert lhs == realize(g, n) @ realize(f, n)


@settings(max_examples=40, deadline=None)
@given(diagrams)
def test_realization_is_monoidal(data):
    r, s, u, rng = data
    s += (r + s) % 2
    f = rng.choice(brauer_basis(r, s))
    g = rng.choice(brauer_basis(u, u))
    lhs = realize(brauer_tensor(B(f), B(g)), 2)
    assert lhs == super_kron(realize(f, 2), realize(g, 2))


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("r, s", [(0, 2), (2, 0), (1, 1), (2, 2), (3, 1)])
def test_realized_diagrams_are_equivariant(n, r, s):
    src, dst = tensor_power_rep(n, r), tensor_power_rep(n, s)
    for d in brauer_basis(r, s):
        assert is_equivariant(realize(d, n), src, dst)


@pytest.mark.parametrize("n, k", [(1, 2), (2, 2), (2, 4)])
def test_diagrams_span_invariant_functionals(n, k):
    fun = [realize(d, n).rows().get(0, {}) for d in brauer_basis(k, 0)]
    ev, od = equivariant_functionals(tensor_power_rep(n, k))
    span = linalg.Echelon(ev + od)
    assert all(span.contains(f) for f in fun)
    assert linalg.rank(fun) == len(ev) + len(od)


def test_random_words_of_generators_associate():
    rng = random.Random(3)
    for _ in range(30):
        fs = [rng.choice(brauer_basis(2, 2)) for _ in range(3)]
        a, b, c = map(B, fs)
        assert brauer_compose(brauer_compose(a, b), c) == brauer_compose(a, brauer_compose(b, c))
