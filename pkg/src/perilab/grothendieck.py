"""Reduced Grothendieck group on truncated standard classes.

Classes ``[Delta(lambda)]`` are indexed by infinite-rank weights; parity
shifts are ignored, so coefficients are plain integers.  Translation
operators ``theta_j`` come from a table calibrated against exact Casimir
spectra rather than from a hard-coded rule.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from . import superalg
from .partitions import INF, Weight, box_moves, is_k_admissible, partitions_of, weight_of_partition, weight_to_diagram


class GrothendieckError(ValueError):
    pass


class TableGap(GrothendieckError):
    """A local configuration that the calibrated table never observed."""


class CalibrationError(GrothendieckError):
    pass


# ---------------------------------------------------------------- vectors

@dataclass(frozen=True)
class GrothVector:
    """Integer combination of standard classes at level ``k``."""

    terms: tuple[tuple[Weight, int], ...]
    level: int

    def __post_init__(self):
        acc: dict[Weight, int] = {}
        for lam, c in self.terms:
            if lam.rank != INF:
                lam = lam.stable()
            acc[lam] = acc.get(lam, 0) + int(c)
        terms = tuple(sorted(((w, c) for w, c in acc.items() if c), key=_weight_key))
        for lam, _ in terms:
            if not is_k_admissible(lam, self.level):
                raise GrothendieckError(f"{lam} is not {self.level}-admissible")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def basis(cls, lam: Weight, level: int | None = None) -> GrothVector:
        return cls(((lam, 1),), lam.size if level is None else level)

    @classmethod
    def from_dict(cls, d: Mapping[Weight, int], level: int) -> GrothVector:
        return cls(tuple(d.items()), level)

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: GrothVector) -> GrothVector:
        return GrothVector(self.terms + other.terms, max(self.level, other.level))

    def same_class(self, other: GrothVector) -> bool:
        """Equality of classes, ignoring the level tag."""
        return self.terms == other.terms

    def to_json(self) -> dict:
        return {"level": self.level,
                "terms": [{"weight": w.to_json(), "coeff": c} for w, c in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> GrothVector:
        return cls(tuple((Weight.from_json(t["weight"]), t["coeff"]) for t in data["terms"]),
                   int(data["level"]))


def _weight_key(item):
    w = item[0]
    return (w.size, w.entries)


def tensor_by_V(v: GrothVector, k: int | None = None) -> GrothVector:
    """``[Delta(lambda) (x) V] = sum [Delta(mu)]`` over k-admissible box moves.

    ``k`` is the level of the result (default ``v.level + 1``).
    """
    k = v.level + 1 if k is None else k
    out: dict[Weight, int] = {}
    for lam, c in v.terms:
        if lam.size > k - 1:
            raise GrothendieckError(f"|{lam}| = {lam.size} exceeds k - 1 = {k - 1}")
        minus, plus = box_moves(lam, k)
        for mu in minus + plus:
            out[mu] = out.get(mu, 0) + c
    return GrothVector.from_dict(out, k)


# ---------------------------------------------------------------- moves

@dataclass(frozen=True)
class Move:
    source: Weight
    target: Weight
    start: int  # ball position before
    end: int  # ball position after


def moves_of(lam: Weight) -> list[Move]:
    """All one-ball moves (box added or removed) from ``lam`` in infinite rank."""
    minus, plus = box_moves(lam)
    d0 = weight_to_diagram(lam)
    out = []
    for mu in minus + plus:
        d1 = weight_to_diagram(mu)
        lo = min(d0.balls + d1.balls + (0,)) - 1
        hi = max(d0.tail, d1.tail) + 1
        changed = [x for x in range(lo, hi + 1) if (x in d0) != (x in d1)]
        a = next(x for x in changed if x in d0)
        b = next(x for x in changed if x in d1)
        out.append(Move(lam, mu, a, b))
    return out


def _context(lam: Weight, move: Move, radius: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lo = min(move.start, move.end) - radius
    hi = max(move.start, move.end) + radius
    return (weight_to_diagram(move.source).occupancy(lo, hi),
            weight_to_diagram(move.target).occupancy(lo, hi))


# ---------------------------------------------------------------- theta table

@dataclass(frozen=True, order=True)
class ThetaRule:
    before: tuple[int, ...]
    after: tuple[int, ...]
    eigen: int  # eigenvalue minus the starting ball position

    def to_json(self) -> dict:
        return {"before": list(self.before), "after": list(self.after), "eigen": self.eigen}


@dataclass(frozen=True)
class ThetaTable:
    """Local occupancy pattern around a move -> eigenvalue offset.

    A pattern covers positions ``[min(start, end) - radius, max(start, end) + radius]``
    before and after the move; the eigenvalue of the move is ``start + eigen``.
    """

    n: int
    radius: int
    rules: tuple[ThetaRule, ...]
    max_size: int = 0
    observations: int = 0

    def lookup(self, ctx: tuple[tuple[int, ...], tuple[int, ...]]) -> int | None:
        for r in self.rules:
            if (r.before, r.after) == ctx:
                return r.eigen
        return None

    def eigenvalue(self, move: Move) -> int:
        off = self.lookup(_context(move.source, move, self.radius))
        if off is None:
            raise TableGap(f"no rule for the move {move.source} -> {move.target} "
                           f"(radius {self.radius})")
        return move.start + off

    def same_rules(self, other: ThetaTable) -> bool:
        return self.radius == other.radius and set(self.rules) == set(other.rules)

    def to_json(self) -> dict:
        return {"n": self.n, "radius": self.radius, "max_size": self.max_size,
                "observations": self.observations,
                "rules": [r.to_json() for r in self.rules]}

    @classmethod
    def from_json(cls, data: dict) -> ThetaTable:
        rules = tuple(ThetaRule(tuple(r["before"]), tuple(r["after"]), int(r["eigen"]))
                      for r in data["rules"])
        return cls(int(data["n"]), int(data["radius"]), rules,
                   int(data.get("max_size", 0)), int(data.get("observations", 0)))


def weights_up_to(max_size: int) -> list[Weight]:
    return [weight_of_partition(p) for s in range(max_size + 1) for p in partitions_of(s)]


def _character(rep: superalg.SuperRep) -> Counter:
    ws = rep.weights()
    if ws is None:
        raise CalibrationError("Cartan does not act diagonally on the computed module")
    return Counter(ws)


def observe_moves(n: int, lam: Weight, standards: dict | None = None) -> dict[Move, int]:
    """Eigenvalue of every move from ``lam``, read off the Casimir on V_n (x) Delta_n(lam).

    Each generalized eigenspace's character must split uniquely as a sum of
    characters of ``Delta_n(mu)`` over the moves ``mu``.
    """
    standards = {} if standards is None else standards

    def delta(mu: Weight) -> superalg.SuperRep:
        if mu not in standards:
            standards[mu] = superalg.build_truncated_standard(n, mu)
        return standards[mu]

    spectrum = superalg.casimir_spectrum_by_weight(n, delta(lam))
    chi: dict[int, Counter] = {}
    for w, d in spectrum.items():
        for j, m in d.items():
            chi.setdefault(j, Counter())[w] += m
    moves = moves_of(lam)
    chars = [_character(delta(m.target)) for m in moves]
    eig = sorted(chi)
    found = []
    for assign in itertools.product(eig, repeat=len(moves)):
        if all(sum((chars[t] for t, a in enumerate(assign) if a == j), Counter()) == chi[j]
               for j in eig):
            found.append(assign)
    if len(found) != 1:
        raise CalibrationError(f"{len(found)} ways to split the spectrum of V (x) Delta({lam}) "
                               f"at n={n}")
    return dict(zip(moves, found[0]))


def discover_theta_table(n: int, max_size: int, radius: int | None = None) -> ThetaTable:
    """Calibrate the move -> eigenvalue rule on all weights with ``|lambda| <= max_size``.

    Tries radius 0, 1, 2 (unless ``radius`` is forced) and keeps the smallest
    one for which every observed context has a single eigenvalue offset.
    """
    if n <= 2 * max_size + 2:
        raise CalibrationError(f"n = {n} is outside the stable range for max_size {max_size}")
    standards: dict = {}
    obs: list[tuple[Move, int]] = []
    for lam in weights_up_to(max_size):
        obs.extend(observe_moves(n, lam, standards).items())
    radii = [radius] if radius is not None else [0, 1, 2]
    conflict = None
    for r in radii:
        rules: dict[tuple, int] = {}
        conflict = None
        for move, j in obs:
            key = _context(move.source, move, r)
            off = j - move.start
            if rules.setdefault(key, off) != off:
                conflict = (move, j, rules[key])
                break
        if conflict is None:
            table = tuple(sorted(ThetaRule(b, a, e) for (b, a), e in rules.items()))
            return ThetaTable(n, r, table, max_size, len(obs))
    move, j, prev = conflict
    raise CalibrationError(f"inconsistent observation: {move.source} -> {move.target} has "
                           f"eigenvalue {j}, but the same context gave offset {prev}")


# ---------------------------------------------------------------- theta operators

def theta_apply(j: int, v: GrothVector, table: ThetaTable) -> GrothVector:
    """``theta_j`` on a class: keep the moves whose calibrated eigenvalue is ``j``."""
    out: dict[Weight, int] = {}
    for lam, c in v.terms:
        for m in moves_of(lam):
            if table.eigenvalue(m) == j:
                out[m.target] = out.get(m.target, 0) + c
    return GrothVector.from_dict(out, v.level + 1)


def theta_word(word: Iterable[int], v: GrothVector, table: ThetaTable) -> GrothVector:
    """Apply ``theta_{w[0]} ... theta_{w[-1]}`` (rightmost first)."""
    for j in reversed(list(word)):
        v = theta_apply(j, v, table)
    return v


def theta_sum(v: GrothVector, table: ThetaTable) -> GrothVector:
    """``sum_j theta_j v`` over every eigenvalue that occurs."""
    out: dict[Weight, int] = {}
    for lam, c in v.terms:
        for m in moves_of(lam):
            table.eigenvalue(m)
            out[m.target] = out.get(m.target, 0) + c
    return GrothVector.from_dict(out, v.level + 1)


@dataclass
class TLReport:
    passed: bool
    checked: int
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"passed": self.passed, "checked": self.checked, "failures": self.failures}


def verify_tl_relations(table: ThetaTable, window: tuple[int, int] = (-5, 5),
                        max_size: int = 3) -> TLReport:
    """Check the three TL relations on every ``|lambda| <= max_size`` and index pair in the window."""
    lo, hi = window
    idx = range(lo, hi + 1)
    checked = 0
    failures = []

    def record(rel: str, lam: Weight, lhs: GrothVector, rhs: GrothVector | None) -> None:
        nonlocal checked
        checked += 1
        ok = (not lhs) if rhs is None else lhs.same_class(rhs)
        if not ok:
            failures.append({"relation": rel, "weight": lam.to_json(),
                             "lhs": lhs.to_json(), "rhs": None if rhs is None else rhs.to_json()})

    for lam in weights_up_to(max_size):
        v = GrothVector.basis(lam)
        single = {j: theta_apply(j, v, table) for j in idx}
        for j in idx:
            record(f"theta_{j}^2 = 0", lam, theta_apply(j, single[j], table), None)
            for i in (j - 1, j + 1):
                if lo <= i <= hi:
                    lhs = theta_word([j, i, j], v, table)
                    record(f"theta_{j} theta_{i} theta_{j} = theta_{j}", lam, lhs, single[j])
            for i in idx:
                if i > j + 1:
                    record(f"theta_{j} theta_{i} = theta_{i} theta_{j}", lam,
                           theta_apply(j, single[i], table), theta_apply(i, single[j], table))
    return TLReport(not failures, checked, failures)


# ---------------------------------------------------------------- cache

def cache_path(cache_dir: str | os.PathLike, n: int, max_size: int, radius: int | None) -> Path:
    key = json.dumps({"n": n, "max_size": max_size, "radius": radius, "v": 1}, sort_keys=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    return Path(cache_dir) / f"theta-{digest}.json"


def load_or_discover(n: int, max_size: int, cache_dir: str | os.PathLike | None = None,
                     radius: int | None = None) -> ThetaTable:
    """Calibrated table, read from or written to a content-addressed cache file."""
    if cache_dir is None:
        return discover_theta_table(n, max_size, radius)
    path = cache_path(cache_dir, n, max_size, radius)
    if path.exists():
        return ThetaTable.from_json(json.loads(path.read_text()))
    table = discover_theta_table(n, max_size, radius)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(table.to_json(), sort_keys=True))
    tmp.replace(path)
    return table
