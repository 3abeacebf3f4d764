"""Temperley-Lieb monoid with zero at loop value 0.

Elements are planar matchings between a bottom and a top row of integer
columns, equal to the identity outside a finite window, or the zero
element.  ``theta_k`` puts a cap and a cup on columns ``k-1, k``.

Words are read as operator products: ``(i, j, k)`` evaluates to
``theta_i theta_j theta_k``, so the rightmost letter acts first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

End = tuple  # ("b", i) or ("t", i)


class TLError(ValueError):
    pass


@dataclass(frozen=True)
class TLElement:
    """A planar matching (``pairs`` sorted, window minimal) or zero."""

    pairs: tuple[tuple[End, End], ...] = ()
    window: tuple[int, int] | None = None
    zero: bool = False

    @property
    def is_zero(self) -> bool:
        return self.zero

    @property
    def is_identity(self) -> bool:
        return not self.zero and self.window is None

    def partner_map(self, lo: int, hi: int) -> dict[End, End]:
        """Matching restricted to columns ``lo..hi`` (which must cover the window)."""
        m: dict[End, End] = {}
        for a, b in self.pairs:
            m[a] = b
            m[b] = a
        for i in range(lo, hi + 1):
            if ("b", i) not in m:
                m[("b", i)] = ("t", i)
                m[("t", i)] = ("b", i)
        return m

    def to_json(self) -> dict:
        if self.zero:
            return {"zero": True}
        return {"pairs": [[list(a), list(b)] for a, b in self.pairs],
                "window": None if self.window is None else list(self.window)}

    @classmethod
    def from_json(cls, data: dict) -> TLElement:
        if data.get("zero"):
            return ZERO
        w = data.get("window")
        if w is None:
            return IDENTITY
        m = {}
        for a, b in data["pairs"]:
            a, b = (a[0], int(a[1])), (b[0], int(b[1]))
            m[a], m[b] = b, a
        return _canonical(m, int(w[0]), int(w[1]))


ZERO = TLElement(zero=True)
IDENTITY = TLElement()


def _order(e: End) -> tuple:
    return (0 if e[0] == "b" else 1, e[1])


def _is_planar(m: dict[End, End], lo: int, hi: int) -> bool:
    # walk the boundary: bottom left to right, then top right to left
    pos = {("b", i): i - lo for i in range(lo, hi + 1)}
    width = hi - lo + 1
    pos.update({("t", i): 2 * width - 1 - (i - lo) for i in range(lo, hi + 1)})
    chords = {tuple(sorted((pos[a], pos[b]))) for a, b in m.items()}
    stack: list[int] = []
    partner = {}
    for x, y in chords:
        partner[x], partner[y] = y, x
    for p in range(2 * width):
        q = partner[p]
        if q > p:
            stack.append(q)
        else:
            if not stack or stack.pop() != p:
                return False
    return True


def _canonical(m: dict[End, End], lo: int, hi: int) -> TLElement:
    if set(m) != {(r, i) for r in "bt" for i in range(lo, hi + 1)}:
        raise TLError("matching does not cover the window")
    if any(m[m[e]] != e or m[e] == e for e in m):
        raise TLError("not a perfect matching")
    if not _is_planar(m, lo, hi):
        raise TLError("matching is not planar")
    while lo <= hi and m[("b", lo)] == ("t", lo):
        lo += 1
    while lo <= hi and m[("b", hi)] == ("t", hi):
        hi -= 1
    if lo > hi:
        return IDENTITY
    pairs = set()
    for e, f in m.items():
        if lo <= e[1] <= hi and lo <= f[1] <= hi:
            pairs.add(tuple(sorted((e, f), key=_order)))
    return TLElement(tuple(sorted(pairs, key=lambda p: (_order(p[0]), _order(p[1])))), (lo, hi))


def tl_generator(k: int) -> TLElement:
    m = {("b", k - 1): ("b", k), ("b", k): ("b", k - 1),
         ("t", k - 1): ("t", k), ("t", k): ("t", k - 1)}
    return _canonical(m, k - 1, k)


def tl_compose(a: TLElement, b: TLElement) -> TLElement:
    """The product ``a b``: stack ``b`` below ``a``; any closed loop gives zero."""
    if a.zero or b.zero:
        return ZERO
    if a.window is None:
        return b
    if b.window is None:
        return a
    lo = min(a.window[0], b.window[0])
    hi = max(a.window[1], b.window[1])
    ma, mb = a.partner_map(lo, hi), b.partner_map(lo, hi)
    result: dict[End, End] = {}
    seen_middle: set[int] = set()

    def walk(start: End) -> End:
        # external ends: ("b", i) is b's bottom, ("t", i) is a's top
        layer = "lower" if start[0] == "b" else "upper"
        cur = start
        while True:
            nxt = (mb if layer == "lower" else ma)[cur]
            if layer == "lower" and nxt[0] == "t":
                seen_middle.add(nxt[1])
                cur, layer = ("b", nxt[1]), "upper"
            elif layer == "upper" and nxt[0] == "b":
                seen_middle.add(nxt[1])
                cur, layer = ("t", nxt[1]), "lower"
            else:
                return nxt

    for r in "bt":
        for i in range(lo, hi + 1):
            e = (r, i)
            if e not in result:
                f = walk(e)
                result[e], result[f] = f, e
    if len(seen_middle) < hi - lo + 1:
        return ZERO  # some middle point lies on a closed loop
    return _canonical(result, lo, hi)


def tl_eval_word(word: Iterable[int]) -> TLElement:
    out = IDENTITY
    for k in reversed(list(word)):
        out = tl_compose(tl_generator(k), out)
    return out


def tl_equal(left: Sequence[int], right: Sequence[int]) -> bool:
    return tl_eval_word(left) == tl_eval_word(right)


# ---------------------------------------------------------------- lengths

def generators_for(window: tuple[int, int]) -> list[int]:
    """Generators whose columns fit inside ``window``."""
    lo, hi = window
    return list(range(lo + 1, hi + 1))


def bfs_lengths(gens: Sequence[int], max_len: int) -> dict[TLElement, int]:
    """Distance from the identity of every element reachable with ``gens``."""
    dist = {IDENTITY: 0}
    frontier = [IDENTITY]
    for d in range(1, max_len + 1):
        nxt = []
        for x in frontier:
            for k in gens:
                y = tl_compose(x, tl_generator(k))
                if not y.zero and y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            break
    return dist


def tl_length(x: TLElement, bound: int) -> int | None:
    """Length of a shortest word for ``x`` (generators inside its window), or None."""
    if x.zero:
        return None
    if x.window is None:
        return 0
    target = x
    gens = generators_for(x.window)
    seen = {IDENTITY}
    frontier = [IDENTITY]
    for d in range(1, bound + 1):
        nxt = []
        for y in frontier:
            for k in gens:
                z = tl_compose(y, tl_generator(k))
                if z == target:
                    return d
                if not z.zero and z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return None


class ZeroWord(TLError):
    """The word evaluates to the zero element."""


def tl_is_reduced(word: Sequence[int], strict: bool = False) -> bool:
    """True iff the word is nonzero and no shorter word gives the same element.

    A zero-valued word is not reduced; with ``strict`` it raises
    :class:`ZeroWord` instead of returning False.
    """
    x = tl_eval_word(word)
    if x.zero:
        if strict:
            raise ZeroWord(f"{list(word)} evaluates to zero")
        return False
    if not word:
        return True
    shortest = tl_length(x, len(word))
    return shortest == len(word)


def reduced_words(gens: Sequence[int], max_len: int) -> Iterator[tuple[int, ...]]:
    """Every reduced word of length ``<= max_len`` over ``gens``."""
    dist = bfs_lengths(gens, max_len)

    def rec(word: tuple[int, ...], x: TLElement) -> Iterator[tuple[int, ...]]:
        yield word
        if len(word) == max_len:
            return
        for k in gens:
            y = tl_compose(x, tl_generator(k))
            if not y.zero and dist.get(y) == len(word) + 1:
                yield from rec(word + (k,), y)

    yield from rec((), IDENTITY)


# ---------------------------------------------------------------- canonical words

def staircase(s: int) -> tuple[int, ...]:
    """Blocks ``(u, u-1, ..., u-s)`` for ``u = 1..s``; length ``s(s+1)``."""
    if s < 1:
        raise TLError("s must be positive")
    return tuple(x for u in range(1, s + 1) for x in range(u, u - s - 1, -1))


def _sqrt_candidates(s: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    j = tuple(x for t in range(s) for x in range(s - 1 - 2 * t, s - t))
    jp = tuple(x for u in range(1, s + 1) for x in range(u, -s + 2 * u - 1, -1))
    return j, jp


def _is_sqrt_pair(s: int, j: Sequence[int], jp: Sequence[int]) -> bool:
    i = staircase(s)
    tj = tl_eval_word(j)
    return (not tj.zero and tl_eval_word(tuple(j) + i) == tj
            and tl_eval_word(tuple(jp) + tuple(j)) == tl_eval_word(i))


def square_root_pair(s: int, search_bound: int = 8) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Words ``J, J'`` with ``theta_J theta_I = theta_J`` and ``theta_J' theta_J = theta_I``,
    where ``I = staircase(s)``."""
    j, jp = _sqrt_candidates(s)
    if _is_sqrt_pair(s, j, jp):
        return j, jp
    return _search_sqrt_pair(s, search_bound)


def _search_sqrt_pair(s: int, bound: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    i = staircase(s)
    ti = tl_eval_word(i)
    gens = generators_for((min(i) - 1 - s, max(i) + s))
    words: dict[TLElement, tuple[int, ...]] = {IDENTITY: ()}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        w = words[x]
        if len(w) >= bound:
            continue
        for k in gens:
            y = tl_compose(x, tl_generator(k))
            if not y.zero and y not in words:
                words[y] = w + (k,)
                queue.append(y)
    for x, j in sorted(words.items(), key=lambda kv: (len(kv[1]), kv[1])):
        if tl_compose(x, ti) != x:
            continue
        for y, jp in sorted(words.items(), key=lambda kv: (len(kv[1]), kv[1])):
            if tl_compose(y, x) == ti:
                return j, jp
    raise TLError(f"no square-root pair found for s={s} within length {bound}")
