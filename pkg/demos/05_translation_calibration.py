"""Calibrate the translation functors and watch them satisfy the TL relations.

The calibration reads off the Casimir spectrum of V (x) Delta(lambda) for
every |lambda| <= 2 at a stable rank and records which ball move lands in
which eigenvalue.  Takes a few seconds.
"""

from __future__ import annotations

import sys

from perilab.grothendieck import (
    GrothVector,
    load_or_discover,
    tensor_by_V,
    theta_apply,
    theta_sum,
    verify_tl_relations,
    weights_up_to,
)
from perilab.partitions import Weight


def main(cache_dir: str | None = None) -> None:
    table = load_or_discover(7, 2, cache_dir)
    print(f"radius {table.radius}, {table.observations} observed moves")
    for rule in table.rules:
        print(f"  {rule.before} -> {rule.after}: eigenvalue = start + {rule.eigen}")

    v = GrothVector.basis(Weight.of([-1, -1]))
    for j in range(-2, 3):
        out = theta_apply(j, v, table)
        print(f"theta_{j}[(-1,-1)] =", " + ".join(f"{c}[{w}]" for w, c in out.terms) or "0")

    report = verify_tl_relations(table, (-5, 5), 3)
    print(f"\nTL relations on |lambda| <= 3: {report.checked} checks, passed={report.passed}")
    ok = all(theta_sum(GrothVector.basis(lam), table).same_class(tensor_by_V(GrothVector.basis(lam)))
             for lam in weights_up_to(3))
    print("sum of theta_j equals tensoring with V:", ok)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
