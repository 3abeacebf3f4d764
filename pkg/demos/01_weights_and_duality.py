"""Weights, weight diagrams and the two ways of computing a dual weight."""

from __future__ import annotations

from perilab.partitions import (
    Weight,
    _dual_by_reflection,
    _dual_by_transpose,
    box_moves,
    partition_of_weight,
    weight_to_diagram,
)


def show_line(lam: Weight, lo: int = -5, hi: int = 5) -> str:
    d = weight_to_diagram(lam)
    return "".join("o" if x in d else "." for x in range(lo, hi + 1))


def main() -> None:
    for entries in ([], [-1], [-2], [-1, -1], [-3, -1]):
        lam = Weight.of(entries)
        dual = _dual_by_transpose(lam)
        assert dual == _dual_by_reflection(lam)
        print(f"{str(lam):>10}  {show_line(lam)}   dual {str(dual):>10}  {show_line(dual)}"
              f"   young {partition_of_weight(lam).rows}")

    # one box more or one box less
    lam = Weight.of([-2, -1])
    minus, plus = box_moves(lam)
    print(f"\nmoves from {lam}:")
    print("  add a box:   ", ", ".join(map(str, minus)))
    print("  remove a box:", ", ".join(map(str, plus)))


if __name__ == "__main__":
    main()
