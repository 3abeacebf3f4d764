"""Weights, weight diagrams, Young diagrams and Littlewood-Richardson data.

A weight is a nondecreasing integer sequence.  Rank-``n`` weights store
exactly ``n`` entries; infinite-rank weights are finitely supported, so they
store their entries with trailing zeros stripped.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

Rank = Union[int, str]
INF = "inf"


class WeightError(ValueError):
    pass


# ---------------------------------------------------------------- weights

@dataclass(frozen=True, order=True)
class Weight:
    entries: tuple[int, ...]
    rank: Rank = INF

    def __post_init__(self):
        ent = tuple(int(x) for x in self.entries)
        if any(a > b for a, b in zip(ent, ent[1:])):
            raise WeightError(f"entries must be nondecreasing: {list(ent)}")
        if self.rank == INF:
            while ent and ent[-1] == 0:
                ent = ent[:-1]
            if ent and ent[-1] > 0:
                raise WeightError("an infinite-rank weight cannot have positive entries")
        else:
            if not isinstance(self.rank, int) or self.rank < 1:
                raise WeightError(f"bad rank {self.rank!r}")
            if len(ent) != self.rank:
                raise WeightError(f"rank {self.rank} weight needs {self.rank} entries")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def of(cls, entries: Sequence[int], rank: Rank = INF) -> Weight:
        return cls(tuple(entries), rank)

    @property
    def size(self) -> int:
        return weight_size(self)

    def __getitem__(self, i: int) -> int:
        """1-based entry lookup with implied zeros for infinite rank."""
        if i < 1:
            raise IndexError(i)
        if i <= len(self.entries):
            return self.entries[i - 1]
        if self.rank == INF:
            return 0
        raise IndexError(i)

    def truncate(self, n: int) -> Weight:
        return truncate(self, n)

    def stable(self) -> Weight:
        """The infinite-rank weight with the same entries (needs entries <= 0)."""
        return Weight(self.entries, INF)

    def to_json(self) -> dict:
        return {"rank": self.rank, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, data) -> Weight:
        if isinstance(data, list):
            return cls(tuple(data), INF)
        return cls(tuple(data["entries"]), data.get("rank", INF))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries or (0,))) + ")" + ("" if self.rank == INF else f"_{self.rank}")


ZERO = Weight((), INF)


def weight_size(lam: Weight) -> int:
    return -sum(lam.entries)


def is_k_admissible(lam: Weight, k: int) -> bool:
    return all(x <= 0 for x in lam.entries) and weight_size(lam) <= k


def truncate(lam: Weight, n: int) -> Weight:
    if lam.rank != INF:
        raise WeightError("truncate expects an infinite-rank weight")
    if len(lam.entries) > n:
        raise WeightError(f"{lam} has more than {n} nonzero entries")
    return Weight(lam.entries + (0,) * (n - len(lam.entries)), n)


# ---------------------------------------------------------------- diagrams

@dataclass(frozen=True)
class WeightDiagram:
    """Ball positions ``lambda_i + (i-1)``.

    For infinite rank, ``tail`` is the threshold from which every position
    holds a ball and ``balls`` lists the balls below it.
    """

    balls: tuple[int, ...]
    tail: int | None = None

    def __post_init__(self):
        b = tuple(int(x) for x in self.balls)
        if any(x >= y for x, y in zip(b, b[1:])):
            raise WeightError("ball positions must be strictly increasing")
        if self.tail is not None and b and b[-1] >= self.tail:
            raise WeightError("explicit balls must lie below the tail threshold")
        object.__setattr__(self, "balls", b)

    def __contains__(self, x: int) -> bool:
        if self.tail is not None and x >= self.tail:
            return True
        return x in self.balls

    def occupancy(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(int(x in self) for x in range(lo, hi + 1))

    def to_json(self) -> dict:
        return {"balls": list(self.balls), "tail": self.tail}

    @classmethod
    def from_json(cls, data: dict) -> WeightDiagram:
        return cls(tuple(data["balls"]), data.get("tail"))


def weight_to_diagram(lam: Weight) -> WeightDiagram:
    balls = tuple(x + i for i, x in enumerate(lam.entries))
    if lam.rank == INF:
        return WeightDiagram(balls, len(lam.entries))
    return WeightDiagram(balls, None)


def diagram_to_weight(d: WeightDiagram, rank: Rank | None = None) -> Weight:
    ent = tuple(b - i for i, b in enumerate(d.balls))
    if d.tail is None:
        if rank not in (None, len(ent)):
            raise WeightError(f"diagram has {len(ent)} balls, expected {rank}")
        if not ent:
            raise WeightError("a finite diagram needs at least one ball")
        return Weight(ent, len(ent))
    if rank not in (None, INF):
        raise WeightError("infinite diagram cannot give a finite-rank weight")
    if d.tail != len(ent):
        raise WeightError("tail threshold does not match a finitely supported weight")
    return Weight(ent, INF)


# ---------------------------------------------------------------- partitions

@dataclass(frozen=True, order=True)
class Partition:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        r = tuple(int(x) for x in self.rows)
        while r and r[-1] == 0:
            r = r[:-1]
        if any(x <= 0 for x in r) or any(a < b for a, b in zip(r, r[1:])):
            raise WeightError(f"not a partition: {list(self.rows)}")
        object.__setattr__(self, "rows", r)

    @classmethod
    def of(cls, *rows: int) -> Partition:
        return cls(tuple(rows))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> int:
        """1-based row length, zero past the end."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def conjugate(self) -> Partition:
        if not self.rows:
            return self
        return Partition(tuple(sum(1 for r in self.rows if r >= j)
                               for j in range(1, self.rows[0] + 1)))

    def durfee(self) -> int:
        return sum(1 for i, r in enumerate(self.rows, 1) if r >= i)

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.rows, other.rows))

    def to_json(self) -> dict:
        return {"rows": list(self.rows)}

    @classmethod
    def from_json(cls, data) -> Partition:
        if isinstance(data, list):
            return cls(tuple(data))
        return cls(tuple(data["rows"]))


EMPTY = Partition(())


def partition_of_weight(lam: Weight) -> Partition:
    """Young diagram whose columns have lengths ``-lambda_1, -lambda_2, ...``."""
    if any(x > 0 for x in lam.entries):
        raise WeightError("weight has positive entries")
    return Partition(tuple(sorted((-x for x in lam.entries if x), reverse=True))).conjugate()


def weight_of_partition(p: Partition, rank: Rank = INF) -> Weight:
    cols = p.conjugate().rows
    ent = tuple(-c for c in cols)
    if rank != INF:
        if len(ent) > rank:
            raise WeightError(f"{p} does not fit in rank {rank}")
        ent = ent + (0,) * (rank - len(ent))
    return Weight(ent, rank)


def partitions_of(k: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``k`` in reverse lexicographic order."""
    def rec(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest
    for rows in rec(k, k if max_part is None else max_part):
        yield Partition(rows)


# ---------------------------------------------------------------- duality

def _dual_by_transpose(lam: Weight) -> Weight:
    depth = -lam.entries[0] if lam.entries else 0
    return Weight(tuple(-sum(1 for x in lam.entries if x <= -j) for j in range(1, depth + 1)), INF)


def _dual_by_reflection(lam: Weight) -> Weight:
    d = weight_to_diagram(lam)
    lo = min(d.balls, default=0) - 1
    hi = d.tail + 1
    # x is a ball of the reflected diagram iff -1-x is empty in d
    lo_r, hi_r = -1 - hi, -1 - lo
    balls = tuple(x for x in range(lo_r, hi_r + 1) if (-1 - x) not in d)
    # everything above hi_r is a ball, everything below lo_r is empty
    tail = hi_r + 1
    while tail - 1 in balls:
        tail -= 1
    below = tuple(b for b in balls if b < tail)
    return diagram_to_weight(WeightDiagram(below, tail))


def dual_weight(lam: Weight) -> Weight:
    """``lambda^vee``, computed by Young transpose and by diagram reflection.

    Finite-rank inputs are read in infinite rank.
    """
    if any(x > 0 for x in lam.entries):
        raise WeightError("dual_weight needs entries <= 0")
    stable = lam.stable() if lam.rank != INF else lam
    a = _dual_by_transpose(stable)
    b = _dual_by_reflection(stable)
    if a != b:
        raise AssertionError(f"duality implementations disagree on {lam}: {a} vs {b}")
    return a


# ---------------------------------------------------------------- box moves

def box_moves(lam: Weight, k: int | None = None) -> tuple[list[Weight], list[Weight]]:
    """Weights ``lambda - eps_i`` (one box added) and ``lambda + eps_i`` (one removed).

    With ``k`` given, both lists are filtered to k-admissible weights.
    """
    m = len(lam.entries)
    span = range(1, m + 2) if lam.rank == INF else range(1, lam.rank + 1)
    minus, plus = [], []
    for i in span:
        for delta, out in ((-1, minus), (1, plus)):
            ent = [lam[j] for j in range(1, max(i, m) + 1)]
            ent[i - 1] += delta
            try:
                mu = Weight(tuple(ent), lam.rank)
            except WeightError:
                continue
            if mu not in out:
                out.append(mu)
    if k is not None:
        minus = [mu for mu in minus if is_k_admissible(mu, k)]
        plus = [mu for mu in plus if is_k_admissible(mu, k)]
    return minus, plus


# ---------------------------------------------------------------- QSym and LR

def is_quasisymmetric(gamma: Partition) -> bool:
    """``gamma^vee_i = gamma_i - 1`` along the diagonal (Frobenius hooks (a|a-1))."""
    conj = gamma.conjugate()
    return all(conj.row(i) == gamma.row(i) - 1 for i in range(1, gamma.durfee() + 1))


_LR_MEMO: dict[tuple, int] = {}
_LR_LOCK = threading.Lock()


def lr_memo_snapshot() -> dict[tuple, int]:
    """Copy of every LR coefficient computed so far, keyed by (zeta, gamma, beta)."""
    with _LR_LOCK:
        return dict(_LR_MEMO)


def lr_memo_preload(entries: dict[tuple, int]) -> None:
    with _LR_LOCK:
        for key, v in entries.items():
            _LR_MEMO.setdefault(tuple(tuple(x) for x in key), int(v))


def _lr(zeta: tuple, gamma: tuple, beta: tuple) -> int:
    key = (zeta, gamma, beta)
    hit = _LR_MEMO.get(key)
    if hit is None:
        hit = _lr_count(zeta, gamma, beta)
        with _LR_LOCK:
            _LR_MEMO[key] = hit
    return hit


def _lr_count(zeta: tuple, gamma: tuple, beta: tuple) -> int:
    cells = []  # reading order: rows top to bottom, each right to left
    for r, length in enumerate(zeta):
        start = gamma[r] if r < len(gamma) else 0
        for c in range(length - 1, start - 1, -1):
            cells.append((r, c))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(beta) + 1)
    total = 0

    def rec(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        hi = filling.get((r, c + 1), len(beta))
        lo = filling.get((r - 1, c), 0) + 1
        for v in range(lo, hi + 1):
            if counts[v] >= beta[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1

    rec(0)
    return total


def lr_coeff(gamma: Partition, beta: Partition, zeta: Partition) -> int:
    """Littlewood-Richardson coefficient ``N^zeta_{gamma beta}`` by tableau count."""
    if gamma.size + beta.size != zeta.size or not zeta.contains(gamma):
        return 0
    if not beta.rows:
        return 1
    return _lr(zeta.rows, gamma.rows, beta.rows)


def socle_multiplicity(zeta: Partition, beta: Partition, k: int) -> int:
    if k < 0 or k != zeta.size - beta.size:
        return 0
    return sum(lr_coeff(g, beta, zeta) for g in partitions_of(k) if is_quasisymmetric(g))


def cosocle_witness(beta: Partition) -> tuple[Partition, int]:
    b = beta.size
    if b == 0:
        return EMPTY, 0
    delta = [b + 1] * b
    zeta = Partition(tuple(delta[i] + beta.row(i + 1) for i in range(b)))
    return zeta, b * (b + 1)


# ---------------------------------------------------------------- plethysm oracle

@lru_cache(maxsize=None)
def kostka(shape: tuple, content: tuple) -> int:
    """Number of semistandard tableaux of ``shape`` with ``content`` (any composition)."""
    content = tuple(x for x in content)
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1
    last = content[-1]
    rest = content[:-1]
    total = 0
    # remove a horizontal strip of size `last` holding the largest letter
    def strips(i: int, remaining: int, cur: list[int]) -> Iterator[tuple]:
        if i == len(shape):
            if remaining == 0:
                yield tuple(x for x in cur if x)
            return
        below = shape[i + 1] if i + 1 < len(shape) else 0
        for take in range(0, min(remaining, shape[i] - below) + 1):
            cur.append(shape[i] - take)
            yield from strips(i + 1, remaining - take, cur)
            cur.pop()
    for inner in strips(0, last, []):
        total += kostka(inner, rest)
    return total


def exterior_sym2_character(k: int, m: int) -> dict[tuple, int]:
    """Dominant-monomial coefficients of ``Lambda^k(S^2 C^m)`` by enumeration."""
    monos = []
    for i in range(m):
        for j in range(i, m):
            e = [0] * m
            e[i] += 1
            e[j] += 1
            monos.append(tuple(e))
    out: dict[tuple, int] = {}
    for subset in itertools.combinations(monos, k):
        e = tuple(sum(col) for col in zip(*subset)) if subset else (0,) * m
        if all(a >= b for a, b in zip(e, e[1:])):
            out[e] = out.get(e, 0) + 1
    return out


def schur_expand(char: dict[tuple, int], m: int) -> dict[Partition, int]:
    """Peel Schur polynomials in ``m`` variables off a homogeneous symmetric
    character given by its coefficients on dominant monomials."""
    degree = {sum(e) for e in char}
    if len(degree) > 1:
        raise ValueError("character is not homogeneous")
    d = degree.pop() if degree else 0
    doms = [p.rows + (0,) * (m - len(p)) for p in partitions_of(d) if len(p) <= m]
    c = {e: char.get(e, 0) for e in doms}
    result: dict[Partition, int] = {}
    for top in doms:  # reverse lex, so each term is maximal among the rest
        coeff = c[top]
        if not coeff:
            continue
        shape = tuple(x for x in top if x)
        result[Partition(shape)] = coeff
        for e in doms:
            kk = kostka(shape, tuple(x for x in e if x))
            if kk:
                c[e] -= coeff * kk
    return result


def exterior_sym2_schur(k: int, m: int) -> dict[Partition, int]:
    return schur_expand(exterior_sym2_character(k, m), m)
