"""Duflo-Serganova reduction and the tensor Casimir."""

from __future__ import annotations

from perilab.partitions import Weight
from perilab.superalg import (
    adjoint_rep,
    build_truncated_standard,
    ds_apply,
    find_isomorphism,
    make_ds_x,
    natural_rep,
    theta_eigen_decomp,
    trivial_rep,
)


def main() -> None:
    for n in (3, 4):
        x = make_ds_x(n)
        dv = ds_apply(x, natural_rep(n))
        da = ds_apply(x, adjoint_rep(n))
        iso = find_isomorphism(natural_rep(n - 2), dv) is not None
        print(f"n={n}: DS(V) dims {dv.space.dims}, isomorphic to V_{n - 2}: {iso};"
              f" DS(adjoint) has dimension {da.dim}")

    print("\ngeneralized eigenvalues of the Casimir on V (x) M")
    for n in (2, 3, 4):
        for name, m in (("trivial", trivial_rep(n)), ("V", natural_rep(n)),
                        ("Delta(-1)", build_truncated_standard(n, Weight.of([-1])))):
            print(f"  n={n} {name:>10}: {theta_eigen_decomp(n, m)}")


if __name__ == "__main__":
    main()
