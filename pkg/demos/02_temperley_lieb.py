"""Planar matchings at loop value zero, reduced words and staircase square roots."""

from __future__ import annotations

from perilab.tl import reduced_words, square_root_pair, staircase, tl_equal, tl_eval_word


def main() -> None:
    print("theta_0 theta_1 theta_0 == theta_0:", tl_equal([0, 1, 0], [0]))
    print("theta_0 theta_0 is zero:          ", tl_eval_word([0, 0]).is_zero)
    print("theta_0 theta_2 == theta_2 theta_0:", tl_equal([0, 2], [2, 0]))

    words = [w for w in reduced_words(range(0, 4), 6) if w]
    print(f"\n{len(words)} nonempty reduced words over theta_0..theta_3 up to length 6")
    print("largest and smallest letters appear once in each:",
          all(w.count(max(w)) == 1 == w.count(min(w)) for w in words))

    for s in (1, 2, 3):
        i = staircase(s)
        j, jp = square_root_pair(s)
        ok = tl_eval_word(j + i) == tl_eval_word(j) and tl_eval_word(jp + j) == tl_eval_word(i)
        print(f"\ns={s}  I={list(i)}\n     J={list(j)}  J'={list(jp)}  identities hold: {ok}")


if __name__ == "__main__":
    main()
