"""Marked Brauer diagrams realized on tensor powers of the natural module."""

from __future__ import annotations

from perilab import linalg
from perilab.brauer import (
    BrauerHom,
    brauer_basis,
    brauer_compose,
    brauer_tensor,
    cap,
    crossing,
    cup,
    identity_diagram,
    realize,
)
from perilab.superalg import equivariant_functionals, hom_dim, tensor_power_rep


def main() -> None:
    B = BrauerHom.of
    one = B(identity_diagram(1))
    zigzag = brauer_compose(brauer_tensor(one, B(cap())), brauer_tensor(B(cup()), one))
    print("zigzag == identity:       ", zigzag == one)
    print("cap after cup (a loop):   ", "zero" if brauer_compose(B(cap()), B(cup())).is_zero() else "nonzero")
    print("cap after crossing == cap:", brauer_compose(B(cap()), B(crossing())) == B(cap()))

    print("\n n  k  hom_dim  rank of realized caps")
    for n in (1, 2, 3):
        for k in (2, 4):
            fun = [realize(d, n).rows().get(0, {}) for d in brauer_basis(k, 0)]
            ev, od = equivariant_functionals(tensor_power_rep(n, k))
            print(f"{n:>2} {k:>2} {hom_dim(n, k):>8} {linalg.rank(fun):>22}")


if __name__ == "__main__":
    main()
