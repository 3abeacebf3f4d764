"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``{index: value}`` with int or Fraction values and no
stored zeros.  Elimination is fraction-free: working vectors are kept
primitive (integer entries with gcd 1), so intermediate growth stays small for
the 0/±1 matrices that come out of tensor-power representations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

Vector = dict


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def primitive(v: Mapping[int, int | Fraction]) -> Vector:
    """Scale ``v`` to an integer vector with coprime entries and positive lead."""
    if not v:
        return {}
    den = 1
    for x in v.values():
        if isinstance(x, Fraction):
            den = _lcm(den, x.denominator)
    w = {i: int(x * den) for i, x in v.items() if x}
    g = 0
    for x in w.values():
        g = gcd(g, x)
    lead = w[min(w)]
    if lead < 0:
        g = -g
    return {i: x // g for i, x in w.items()}


def axpy(a, x: Mapping, b, y: Mapping) -> Vector:
    """Return ``a*x + b*y`` as a sparse vector."""
    out = {i: a * v for i, v in x.items()} if a != 1 else dict(x)
    for i, v in y.items():
        s = out.get(i, 0) + b * v
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def scale(a, x: Mapping) -> Vector:
    if not a:
        return {}
    return {i: a * v for i, v in x.items()}


class Echelon:
    """Incrementally grown echelon basis of a subspace of Q^N.

    Each stored vector is primitive and has a distinct leading (smallest)
    index.  Membership tests only need this triangular shape; call
    :meth:`rref` for coordinates.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.pivots: dict[int, Vector] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Mapping) -> Vector:
        """Remainder of ``v`` modulo the span, up to a nonzero scalar."""
        w = primitive(v)
        pivots = self.pivots
        while w:
            lead = min(w)
            p = pivots.get(lead)
            if p is None:
                # eliminate any later pivots too, so the remainder is canonical
                # enough for dimension counting; leading index is what matters
                return w
            a, b = p[lead], w[lead]
            g = gcd(a, b)
            w = primitive(axpy(a // g, w, -(b // g), p))
        return w

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def add(self, v: Mapping) -> bool:
        """Add ``v``; return True if it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        self.pivots[min(w)] = w
        return True

    def rref(self) -> list[tuple[int, dict[int, Fraction]]]:
        """Reduced row echelon form as ``[(pivot, vector)]`` sorted by pivot.

        Each vector has a 1 at its pivot and 0 at every other pivot.
        """
        order = sorted(self.pivots, reverse=True)
        done: dict[int, Vector] = {}
        for piv in order:
            w = dict(self.pivots[piv])
            for q in sorted(w):
                if q != piv and q in done and q in w:
                    w = axpy(1, w, -w[q], done[q])
            lead = w[piv]
            done[piv] = {i: Fraction(x, lead) if not isinstance(x, Fraction) else x / lead
                         for i, x in w.items()}
        return [(p, done[p]) for p in sorted(done)]


class Basis:
    """A subspace with a fixed RREF basis and fast coordinate extraction."""

    def __init__(self, vectors: Iterable[Mapping]):
        ech = vectors if isinstance(vectors, Echelon) else Echelon(vectors)
        rows = ech.rref()
        self.pivots = [p for p, _ in rows]
        self.vectors = [v for _, v in rows]
        self._pos = {p: k for k, p in enumerate(self.pivots)}

    def __len__(self) -> int:
        return len(self.vectors)

    def coordinates(self, v: Mapping, check: bool = True) -> Vector:
        """Coordinates of ``v`` (assumed to lie in the span)."""
        c = {self._pos[i]: x for i, x in v.items() if i in self._pos}
        if check:
            r = dict(v)
            for k, x in c.items():
                r = axpy(1, r, -x, self.vectors[k])
            if r:
                raise ValueError("vector is not in the span")
        return c

    def combine(self, c: Mapping) -> Vector:
        out: Vector = {}
        for k, x in c.items():
            out = axpy(1, out, x, self.vectors[k])
        return out


def rank(rows: Iterable[Mapping]) -> int:
    return Echelon(rows).dim


def nullspace(rows: Iterable[Mapping], columns: Sequence[int]) -> list[Vector]:
    """Basis of ``{x supported on columns : r.x = 0 for every row r}``.

    Returned vectors are primitive integer vectors in RREF-dual order (one per
    free column, with a 1-scaled entry there), so the output is deterministic.
    """
    colset = set(columns)
    pos = {c: k for k, c in enumerate(sorted(colset))}
    ech = Echelon()
    for r in rows:
        rr = {pos[i]: x for i, x in r.items() if i in colset and x}
        if rr:
            ech.add(rr)
            if ech.dim == len(pos):
                return []
    red = ech.rref()
    pivots = {p for p, _ in red}
    cols = sorted(colset)
    basis = []
    for f in range(len(cols)):
        if f in pivots:
            continue
        x = {f: Fraction(1)}
        for p, v in red:
            a = v.get(f)
            if a:
                x[p] = -a
        basis.append(primitive({cols[i]: val for i, val in x.items()}))
    return basis


# ---------------------------------------------------------------- dense helpers

def dense_identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def charpoly(mat: Sequence[Sequence]) -> list[Fraction]:
    """Characteristic polynomial ``det(xI - A)``, coefficients low to high.

    Hessenberg reduction followed by the standard recurrence; exact over Q.
    """
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if a[i][m - 1] != 0), None)
        if piv is None:
            continue
        if piv != m:
            a[piv], a[m] = a[m], a[piv]
            for row in a:
                row[piv], row[m] = row[m], row[piv]
        for i in range(m + 1, n):
            if a[i][m - 1] == 0:
                continue
            u = a[i][m - 1] / a[m][m - 1]
            ri, rm = a[i], a[m]
            for j in range(m - 1, n):
                if rm[j]:
                    ri[j] -= u * rm[j]
            for row in a:
                if row[i]:
                    row[m] += u * row[i]
    # p_k = charpoly of leading k x k block of the Hessenberg matrix
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        p = [Fraction(0)] + prev  # x * p_{k-1}
        for i, c in enumerate(prev):
            p[i] -= a[k - 1][k - 1] * c
        t = Fraction(1)
        for i in range(1, k):
            t *= a[k - i][k - i - 1]
            if t == 0:
                break
            h = a[k - i - 1][k - 1]
            if h:
                for j, c in enumerate(polys[k - i - 1]):
                    p[j] -= t * h * c
        polys.append(p)
    return polys[n]


def poly_divide_root(p: list[Fraction], r) -> tuple[list[Fraction], Fraction]:
    """Synthetic division of ``p`` (low-to-high) by ``x - r``."""
    hi = p[::-1]
    out = [hi[0]]
    for c in hi[1:]:
        out.append(c + out[-1] * r)
    rem = out.pop()
    return out[::-1], rem


def integer_roots(p: list[Fraction], bound: int) -> tuple[dict[int, int], list[Fraction]]:
    """Integer roots of ``p`` with multiplicity among ``|x| <= bound``.

    Returns ``(roots, leftover)``; a nonconstant leftover means some roots are
    not integers within the bound.
    """
    roots: dict[int, int] = {}
    q = list(p)
    while len(q) > 1 and q[0] == 0:
        q = q[1:]
        roots[0] = roots.get(0, 0) + 1
    for r in range(-bound, bound + 1):
        if r == 0 or len(q) == 1:
            continue
        while len(q) > 1:
            d, rem = poly_divide_root(q, r)
            if rem:
                break
            q = d
            roots[r] = roots.get(r, 0) + 1
    return roots, q
