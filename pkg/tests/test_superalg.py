from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perilab.partitions import Weight
from perilab.superalg import (
    CASIMIR_SCALE,
    GradedSpace,
    SuperAlgebraError,
    SuperMatrix,
    adjoint_rep,
    build_truncated_standard,
    casimir_matrix,
    check_bracket_compatibility,
    ds_apply,
    dual_rep,
    find_isomorphism,
    generalized_eigenspace_dim,
    hom_dim,
    identity_matrix,
    is_equivariant,
    make_ds_x,
    matrix_from_json,
    matrix_to_json,
    natural_rep,
    pn_basis,
    pn_coordinates,
    preserves_form,
    rep_from_json,
    rep_to_json,
    super_bracket,
    super_kron,
    tensor_power_rep,
    tensor_rep,
    theta_eigen_decomp,
    trivial_rep,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pn_dimension(n):
    basis = pn_basis(n)
    assert len(basis) == 2 * n * n
    assert sum(e.parity for e in basis) == n * n  # B and C pieces together
    assert all(preserves_form(e.matrix, n) for e in basis)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bracket_closes(n):
    basis = pn_basis(n)
    for x in basis:
        for y in basis:
            z = super_bracket(x.matrix, y.matrix)
            assert preserves_form(z, n)
            coords = pn_coordinates(n, z)
            rebuilt = None
            for e in basis:
                c = coords.get(e.label, 0)
                if c:
                    t = e.matrix.scaled(c)
                    rebuilt = t if rebuilt is None else rebuilt + t
            assert (z.is_zero() and rebuilt is None) or rebuilt == z


def test_non_member_rejected():
    g = natural_rep(2).space
    x = SuperMatrix(g, g, 0, {0: {0: Fraction(1)}})  # E_11 alone breaks the form
    assert not preserves_form(x, 2)
    with pytest.raises(SuperAlgebraError):
        pn_coordinates(2, x)


@pytest.mark.parametrize("rep", [
    trivial_rep(2), natural_rep(2), tensor_power_rep(2, 2),
    dual_rep(natural_rep(2)), adjoint_rep(2)], ids=["triv", "V", "VV", "V*", "adj"])
def test_representations_respect_bracket(rep):
    assert check_bracket_compatibility(rep)


def test_super_kron_sign():
    # odd (x) odd picks up a sign when the second factor passes an odd vector
    v = natural_rep(1).space
    odd = SuperMatrix(v, v, 1, {1: {0: Fraction(1)}})
    k = super_kron(odd, odd)
    assert k.parity == 0
    assert k.entry(0, 3) == -1


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=3), st.lists(st.integers(0, 1), min_size=1, max_size=3))
def test_graded_tensor_dims(p, q):
    a, b = GradedSpace(tuple(p)), GradedSpace(tuple(q))
    t = a.tensor(b)
    assert t.sdim == a.sdim * b.sdim
    assert t.dim == a.dim * b.dim


# ---------------------------------------------------------------- invariants

@pytest.mark.parametrize("n, k, dim", [
    (1, 0, 1), (1, 1, 0), (1, 2, 1), (1, 3, 0),
    (2, 2, 1), (2, 3, 0), (2, 4, 3),
    (3, 2, 1), (3, 3, 0)])
def test_hom_dim(n, k, dim):
    assert hom_dim(n, k) == dim


def test_intertwiner_for_dual():
    # the odd form identifies V with the parity-shifted dual
    iso = find_isomorphism(natural_rep(2), natural_rep(2))
    assert iso is not None and is_equivariant(iso, natural_rep(2), natural_rep(2))


# ---------------------------------------------------------------- DS

@pytest.mark.parametrize("n", [3, 4])
def test_ds_of_natural(n):
    d = ds_apply(make_ds_x(n), natural_rep(n))
    assert d.space.dims == (n - 2, n - 2)
    iso = find_isomorphism(natural_rep(n - 2), d)
    assert iso is not None
    assert is_equivariant(iso, natural_rep(n - 2), d)


def test_ds_of_adjoint():
    d = ds_apply(make_ds_x(3), adjoint_rep(3))
    assert d.dim == 2 and d.space.sdim == adjoint_rep(3).space.sdim
    assert check_bracket_compatibility(d)


def test_ds_needs_square_zero():
    nat = natural_rep(3)
    even = identity_matrix(nat.space)
    with pytest.raises(SuperAlgebraError):
        ds_apply(even, nat)
    with pytest.raises(SuperAlgebraError):
        make_ds_x(2)


# ---------------------------------------------------------------- standards

@pytest.mark.parametrize("n", [2, 3, 4])
def test_small_standards(n):
    triv = build_truncated_standard(n, Weight.of([]))
    assert triv.space.dims == (1, 0)
    v = build_truncated_standard(n, Weight.of([-1]))
    assert v.space.dims == (n, n)
    assert find_isomorphism(natural_rep(n), v) is not None
    assert v.parity_shift == 1


def test_standard_is_subrepresentation():
    d = build_truncated_standard(3, Weight.of([-1, -1]))
    assert check_bracket_compatibility(d)


def test_standard_bad_weight():
    with pytest.raises(SuperAlgebraError):
        build_truncated_standard(2, Weight.of([-1, -1, -1]))


# ---------------------------------------------------------------- Casimir

@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("make", [trivial_rep, natural_rep], ids=["triv", "V"])
def test_casimir_is_equivariant(n, make):
    m = make(n)
    om = casimir_matrix(n, m)
    vm = tensor_rep(natural_rep(n), m)
    assert is_equivariant(om, vm, vm)
    assert CASIMIR_SCALE == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_casimir_on_trivial_is_zero_eigen(n):
    assert theta_eigen_decomp(n, trivial_rep(n)) == {0: 2 * n}


@pytest.mark.parametrize("n", [2, 3])
def test_casimir_spectrum_on_natural(n):
    spectrum = theta_eigen_decomp(n, natural_rep(n))
    assert sum(spectrum.values()) == (2 * n) ** 2
    assert all(isinstance(j, int) for j in spectrum)
    om = casimir_matrix(n, natural_rep(n))
    assert sum(generalized_eigenspace_dim(om, j) for j in spectrum) == (2 * n) ** 2


# ---------------------------------------------------------------- JSON

def test_json_round_trip():
    rep = adjoint_rep(2)
    back = rep_from_json(rep_to_json(rep))
    assert back.space == rep.space and back.actions == rep.actions
    m = casimir_matrix(2, natural_rep(2))
    assert matrix_from_json(matrix_to_json(m)) == m
