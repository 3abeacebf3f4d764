"""The marked Brauer category: signed matchings with loop value zero.

A diagram from ``r`` to ``s`` is a perfect matching of bottom points
``("b", 0..r-1)`` and top points ``("t", 0..s-1)``.  Caps (bottom-bottom
pairs) stand for the odd form and cups (top-top pairs) for its odd inverse,
so the parity of a diagram is the number of caps plus cups mod 2.

Signs are pinned by the realization on ``V_n^{(x)r}``.  A basis diagram
is realized by Koszul-permuting its inputs into (caps by left end, then
through strands), contracting the caps, prepending one copy of the cup
tensor per cup, and Koszul-permuting onto the top positions.  Composition
and tensor signs are then read off a single nonzero matrix entry at
``n = 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .superalg import GradedSpace, SuperMatrix, TRIVIAL_SPACE

End = tuple  # ("b", i) or ("t", j)


class BrauerError(ValueError):
    pass


def _end_key(e: End) -> tuple:
    return (0 if e[0] == "b" else 1, e[1])


def _canon_pairs(pairs: Iterable[tuple[End, End]]) -> tuple[tuple[End, End], ...]:
    out = [tuple(sorted(((a[0], int(a[1])), (b[0], int(b[1]))), key=_end_key)) for a, b in pairs]
    return tuple(sorted(out, key=lambda p: (_end_key(p[0]), _end_key(p[1]))))


@dataclass(frozen=True)
class MarkedDiagram:
    r: int
    s: int
    pairs: tuple[tuple[End, End], ...]
    coeff: int = 1

    def __post_init__(self):
        pairs = _canon_pairs(self.pairs)
        ends = [e for p in pairs for e in p]
        want = {("b", i) for i in range(self.r)} | {("t", j) for j in range(self.s)}
        if len(ends) != len(set(ends)) or set(ends) != want:
            raise BrauerError("pairs must form a perfect matching of the r + s points")
        if self.coeff not in (1, -1):
            raise BrauerError("coefficient must be +1 or -1")
        object.__setattr__(self, "pairs", pairs)

    @property
    def caps(self) -> list[tuple[int, int]]:
        return [(a[1], b[1]) for a, b in self.pairs if a[0] == b[0] == "b"]

    @property
    def cups(self) -> list[tuple[int, int]]:
        return [(a[1], b[1]) for a, b in self.pairs if a[0] == b[0] == "t"]

    @property
    def through(self) -> list[tuple[int, int]]:
        """(bottom, top) pairs sorted by bottom position."""
        return [(a[1], b[1]) for a, b in self.pairs if a[0] == "b" and b[0] == "t"]

    @property
    def parity(self) -> int:
        return (len(self.caps) + len(self.cups)) % 2

    def unsigned(self) -> MarkedDiagram:
        return MarkedDiagram(self.r, self.s, self.pairs, 1)

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "pairs": [[list(a), list(b)] for a, b in self.pairs],
                "coeff": self.coeff, "parity": self.parity}

    @classmethod
    def from_json(cls, data: dict) -> MarkedDiagram:
        d = cls(int(data["r"]), int(data["s"]),
                tuple((tuple(a), tuple(b)) for a, b in data["pairs"]), int(data.get("coeff", 1)))
        if "parity" in data and int(data["parity"]) != d.parity:
            raise BrauerError("declared parity does not match the matching")
        return d


@dataclass(frozen=True)
class BrauerHom:
    """Integer combination of unsigned basis diagrams, all ``r -> s`` of one parity."""

    r: int
    s: int
    parity: int
    terms: tuple[tuple[MarkedDiagram, int], ...] = ()

    def __post_init__(self):
        acc: dict[MarkedDiagram, int] = {}
        for d, c in self.terms:
            if (d.r, d.s) != (self.r, self.s):
                raise BrauerError("diagram shape does not match the hom")
            if d.parity != self.parity:
                raise BrauerError("diagram parity does not match the hom")
            acc[d.unsigned()] = acc.get(d.unsigned(), 0) + c * d.coeff
        terms = tuple(sorted(((d, c) for d, c in acc.items() if c), key=lambda t: t[0].pairs))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, d: MarkedDiagram) -> BrauerHom:
        return cls(d.r, d.s, d.parity, ((d, 1),))

    @classmethod
    def zero(cls, r: int, s: int, parity: int) -> BrauerHom:
        return cls(r, s, parity, ())

    def is_zero(self) -> bool:
        return not self.terms

    def __neg__(self) -> BrauerHom:
        return BrauerHom(self.r, self.s, self.parity, tuple((d, -c) for d, c in self.terms))

    def __add__(self, other: BrauerHom) -> BrauerHom:
        return BrauerHom(self.r, self.s, self.parity, self.terms + other.terms)

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "parity": self.parity,
                "terms": [{"diagram": d.to_json(), "coeff": c} for d, c in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> BrauerHom:
        if "terms" not in data:
            return cls.of(MarkedDiagram.from_json(data))
        terms = tuple((MarkedDiagram.from_json(t["diagram"]), int(t["coeff"])) for t in data["terms"])
        return cls(int(data["r"]), int(data["s"]), int(data["parity"]), terms)


# ---------------------------------------------------------------- basis

def _matchings(points: Sequence[End]) -> Iterator[list[tuple[End, End]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for m in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def brauer_basis(r: int, s: int) -> list[MarkedDiagram]:
    if (r + s) % 2:
        return []
    pts = [("b", i) for i in range(r)] + [("t", j) for j in range(s)]
    return [MarkedDiagram(r, s, tuple(m)) for m in _matchings(pts)]


def identity_diagram(r: int) -> MarkedDiagram:
    return MarkedDiagram(r, r, tuple((("b", i), ("t", i)) for i in range(r)))


def cap() -> MarkedDiagram:
    return MarkedDiagram(2, 0, ((("b", 0), ("b", 1)),))


def cup() -> MarkedDiagram:
    return MarkedDiagram(0, 2, ((("t", 0), ("t", 1)),))


def crossing() -> MarkedDiagram:
    return MarkedDiagram(2, 2, ((("b", 0), ("t", 1)), (("b", 1), ("t", 0))))


# ---------------------------------------------------------------- realization

def _koszul_sign(parities: Sequence[int], order: Sequence[int]) -> int:
    """Sign of moving items into ``order`` (a list of original positions)."""
    sign = 1
    for x in range(len(order)):
        for y in range(x + 1, len(order)):
            if order[x] > order[y] and parities[order[x]] and parities[order[y]]:
                sign = -sign
    return sign


def apply_diagram(d: MarkedDiagram, n: int, inp: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Image of the basis tensor ``inp`` (indices into V_n's basis) under ``d``."""
    par = [int(i >= n) for i in inp]
    caps = sorted(d.caps)
    through = d.through
    order = [p for c in caps for p in c] + [b for b, _ in through]
    sign = d.coeff * _koszul_sign(par, order)
    for a, b in caps:
        if abs(inp[a] - inp[b]) != n:
            return {}
    mid = [inp[b] for b, _ in through]
    cups = sorted(d.cups)
    # slot order of the produced sequence, by top position
    slots = [p for c in cups for p in c] + [t for _, t in through]
    out: dict[tuple[int, ...], int] = {}
    for choice in itertools.product(*[[(i, o) for i in range(n) for o in (0, 1)] for _ in cups]):
        seq = []
        s = sign
        for i, o in choice:
            # cup tensor: e_i (x) f_i - f_i (x) e_i
            seq += [i, n + i] if o == 0 else [n + i, i]
            s = -s if o else s
        seq += mid
        seq_par = [int(v >= n) for v in seq]
        # move item k of seq to top position slots[k]
        target_order = sorted(range(len(seq)), key=lambda k: slots[k])
        s *= _koszul_sign(seq_par, target_order)
        res = [0] * d.s
        for k, v in enumerate(seq):
            res[slots[k]] = v
        key = tuple(res)
        out[key] = out.get(key, 0) + s
    return {k: v for k, v in out.items() if v}


def _tensor_index(t: Sequence[int], n: int) -> int:
    idx = 0
    for v in t:
        idx = idx * 2 * n + v
    return idx


def tensor_space(n: int, k: int) -> GradedSpace:
    if k == 0:
        return TRIVIAL_SPACE
    return GradedSpace(tuple(sum(int(v >= n) for v in t) % 2
                             for t in itertools.product(range(2 * n), repeat=k)))


def realize(f: BrauerHom | MarkedDiagram, n: int) -> SuperMatrix:
    """Matrix of ``f`` from ``V_n^{(x)r}`` to ``V_n^{(x)s}``."""
    if isinstance(f, MarkedDiagram):
        f = BrauerHom.of(f)
    if n < 1:
        raise BrauerError("n must be positive")
    src, tgt = tensor_space(n, f.r), tensor_space(n, f.s)
    cols: dict[int, dict[int, int]] = {}
    for inp in itertools.product(range(2 * n), repeat=f.r):
        col: dict[int, int] = {}
        for d, c in f.terms:
            for out, x in apply_diagram(d, n, inp).items():
                i = _tensor_index(out, n)
                v = col.get(i, 0) + c * x
                if v:
                    col[i] = v
                else:
                    col.pop(i, None)
        if col:
            cols[_tensor_index(inp, n)] = col
    return SuperMatrix(src, tgt, f.parity, cols)


# ---------------------------------------------------------------- composition

def _probe_input(d: MarkedDiagram) -> tuple[int, ...]:
    """An n = 1 input on which ``d`` is nonzero: caps get (e, f), strands get e."""
    inp = [0] * d.r
    for a, b in d.caps:
        inp[a], inp[b] = 0, 1
    return tuple(inp)


def _stack(g: MarkedDiagram, f: MarkedDiagram) -> MarkedDiagram | None:
    """Unsigned diagram of ``g o f``, or None if a closed loop appears."""
    mf: dict[End, End] = {}
    mg: dict[End, End] = {}
    for a, b in f.pairs:
        mf[a], mf[b] = b, a
    for a, b in g.pairs:
        mg[a], mg[b] = b, a
    visited: set[int] = set()

    def walk(start: End, layer: str) -> End:
        cur = start
        while True:
            nxt = (mf if layer == "f" else mg)[cur]
            if layer == "f" and nxt[0] == "t":
                visited.add(nxt[1])
                cur, layer = ("b", nxt[1]), "g"
            elif layer == "g" and nxt[0] == "b":
                visited.add(nxt[1])
                cur, layer = ("t", nxt[1]), "f"
            else:
                return nxt

    result: dict[End, End] = {}
    for e, layer in [(("b", i), "f") for i in range(f.r)] + [(("t", j), "g") for j in range(g.s)]:
        if e in result:
            continue
        o = walk(e, layer)
        result[e], result[o] = o, e
    if len(visited) < f.s:
        return None
    pairs = {tuple(sorted((a, b), key=_end_key)) for a, b in result.items()}
    return MarkedDiagram(f.r, g.s, tuple(pairs))


def _compose_diagrams(g: MarkedDiagram, f: MarkedDiagram) -> tuple[MarkedDiagram, int] | None:
    h = _stack(g, f)
    if h is None:
        return None
    inp = _probe_input(h)
    ref = apply_diagram(h, 1, inp)
    mid = apply_diagram(f, 1, inp)
    got: dict[tuple, int] = {}
    for t, x in mid.items():
        for u, y in apply_diagram(g, 1, t).items():
            got[u] = got.get(u, 0) + x * y
    key = next(iter(sorted(ref)))
    sign = got.get(key, 0) * ref[key]
    if sign not in (1, -1):
        raise AssertionError(f"composition sign probe failed for {g} o {f}")
    return h, sign


def brauer_compose(g: BrauerHom, f: BrauerHom) -> BrauerHom:
    """``g o f`` (``f`` applied first)."""
    if isinstance(g, MarkedDiagram):
        g = BrauerHom.of(g)
    if isinstance(f, MarkedDiagram):
        f = BrauerHom.of(f)
    if f.s != g.r:
        raise BrauerError(f"cannot compose {g.r}->{g.s} after {f.r}->{f.s}")
    terms = []
    for dg, cg in g.terms:
        for df, cf in f.terms:
            res = _compose_diagrams(dg, df)
            if res is not None:
                h, sign = res
                terms.append((h, cg * cf * sign))
    return BrauerHom(f.r, g.s, (f.parity + g.parity) % 2, tuple(terms))


def _juxtapose(f: MarkedDiagram, g: MarkedDiagram) -> MarkedDiagram:
    def shift(e: End) -> End:
        return (e[0], e[1] + (f.r if e[0] == "b" else f.s))
    pairs = list(f.pairs) + [(shift(a), shift(b)) for a, b in g.pairs]
    return MarkedDiagram(f.r + g.r, f.s + g.s, tuple(pairs))


def _tensor_diagrams(f: MarkedDiagram, g: MarkedDiagram) -> tuple[MarkedDiagram, int]:
    h = _juxtapose(f, g)
    inp = _probe_input(h)
    x, y = inp[:f.r], inp[f.r:]
    ref = apply_diagram(h, 1, inp)
    koszul = -1 if g.parity and sum(x) % 2 else 1
    got: dict[tuple, int] = {}
    for a, u in apply_diagram(f, 1, x).items():
        for b, v in apply_diagram(g, 1, y).items():
            got[a + b] = got.get(a + b, 0) + koszul * u * v
    key = next(iter(sorted(ref)))
    sign = got.get(key, 0) * ref[key]
    if sign not in (1, -1):
        raise AssertionError("tensor sign probe failed")
    return h, sign


def brauer_tensor(f: BrauerHom, g: BrauerHom) -> BrauerHom:
    """``f (x) g`` with ``(f (x) g)(x (x) y) = (-1)^{p(g)p(x)} f(x) (x) g(y)``."""
    if isinstance(f, MarkedDiagram):
        f = BrauerHom.of(f)
    if isinstance(g, MarkedDiagram):
        g = BrauerHom.of(g)
    terms = []
    for df, cf in f.terms:
        for dg, cg in g.terms:
            h, sign = _tensor_diagrams(df, dg)
            terms.append((h, cf * cg * sign))
    return BrauerHom(f.r + g.r, f.s + g.s, (f.parity + g.parity) % 2, tuple(terms))
