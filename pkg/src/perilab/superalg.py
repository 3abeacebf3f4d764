"""Exact matrix models of the periplectic Lie superalgebra p(n).

The natural module V_n = C^{n|n} has basis ``e_1..e_n`` (even, indices
``0..n-1``) followed by ``f_1..f_n`` (odd, indices ``n..2n-1``), with the odd
symmetric form ``beta(e_i, f_j) = beta(f_j, e_i) = delta_ij``.  An element of
p(n) is a block matrix ``(A B; C -A^t)`` with ``B`` symmetric and ``C``
antisymmetric.

Everything here is exact: entries are ints or Fractions, matrices are sparse
column dicts, and subspaces are handled through :mod:`perilab.linalg`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import Basis, Echelon, axpy
from .partitions import INF, Weight


class SuperAlgebraError(ValueError):
    """A precondition on a p(n) computation failed."""


class NonIntegralEigenvalue(SuperAlgebraError):
    pass


# ---------------------------------------------------------------- spaces

@dataclass(frozen=True)
class GradedSpace:
    parities: tuple[int, ...]
    labels: tuple | None = None

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def even_dim(self) -> int:
        return self.parities.count(0)

    @property
    def odd_dim(self) -> int:
        return self.parities.count(1)

    @property
    def sdim(self) -> int:
        return self.even_dim - self.odd_dim

    @property
    def dims(self) -> tuple[int, int]:
        return self.even_dim, self.odd_dim

    def tensor(self, other: GradedSpace) -> GradedSpace:
        return GradedSpace(tuple((p + q) % 2 for p in self.parities for q in other.parities))


def natural_space(n: int) -> GradedSpace:
    return GradedSpace((0,) * n + (1,) * n)


TRIVIAL_SPACE = GradedSpace((0,))


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True, eq=False)
class SuperMatrix:
    """Homogeneous linear map ``source -> target`` stored by columns."""

    source: GradedSpace
    target: GradedSpace
    parity: int
    cols: dict = field(default_factory=dict)

    def __post_init__(self):
        sp, tp = self.source.parities, self.target.parities
        for j, col in self.cols.items():
            for i in col:
                if (sp[j] + tp[i]) % 2 != self.parity:
                    raise SuperAlgebraError(
                        f"entry ({i},{j}) violates parity {self.parity}")

    @property
    def shape(self) -> tuple[int, int]:
        return self.target.dim, self.source.dim

    def apply(self, v: Mapping) -> dict:
        out: dict = {}
        for j, x in v.items():
            col = self.cols.get(j)
            if col:
                out = axpy(1, out, x, col)
        return out

    def __matmul__(self, other: SuperMatrix) -> SuperMatrix:
        cols = {}
        for j, col in other.cols.items():
            c = self.apply(col)
            if c:
                cols[j] = c
        return SuperMatrix(other.source, self.target, (self.parity + other.parity) % 2, cols)

    def _combine(self, a, other: SuperMatrix, b) -> SuperMatrix:
        cols = {}
        for j in set(self.cols) | set(other.cols):
            c = axpy(a, self.cols.get(j, {}), b, other.cols.get(j, {}))
            if c:
                cols[j] = c
        return SuperMatrix(self.source, self.target, self.parity, cols)

    def __add__(self, other: SuperMatrix) -> SuperMatrix:
        return self._combine(1, other, 1)

    def __sub__(self, other: SuperMatrix) -> SuperMatrix:
        return self._combine(1, other, -1)

    def scaled(self, a) -> SuperMatrix:
        if not a:
            return SuperMatrix(self.source, self.target, self.parity, {})
        return SuperMatrix(self.source, self.target, self.parity,
                           {j: {i: a * x for i, x in c.items()} for j, c in self.cols.items()})

    def is_zero(self) -> bool:
        return not any(self.cols.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self.parity != other.parity:
            return self.is_zero() and other.is_zero()
        return self._combine(1, other, -1).is_zero()

    __hash__ = None

    def entry(self, i: int, j: int):
        return self.cols.get(j, {}).get(i, 0)

    def rows(self) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for j, col in self.cols.items():
            for i, x in col.items():
                out.setdefault(i, {})[j] = x
        return out

    def to_dense(self) -> list[list]:
        m, n = self.shape
        d = [[0] * n for _ in range(m)]
        for j, col in self.cols.items():
            for i, x in col.items():
                d[i][j] = x
        return d

    def supertrace(self) -> Fraction:
        t = Fraction(0)
        for j, col in self.cols.items():
            x = col.get(j)
            if x:
                t += -x if self.source.parities[j] else x
        return t

    def rank(self) -> int:
        return linalg.rank(self.cols.values())

    def triplets(self) -> list[tuple[int, int, Fraction]]:
        return sorted((i, j, x) for j, c in self.cols.items() for i, x in c.items())


def zero_matrix(source: GradedSpace, target: GradedSpace, parity: int = 0) -> SuperMatrix:
    return SuperMatrix(source, target, parity, {})


def identity_matrix(space: GradedSpace) -> SuperMatrix:
    return SuperMatrix(space, space, 0, {j: {j: 1} for j in range(space.dim)})


def super_bracket(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """``xy - (-1)^{p(x)p(y)} yx``."""
    if x.source != y.source or x.source != x.target or y.source != y.target:
        raise SuperAlgebraError("super_bracket needs square matrices on one space")
    sign = -1 if x.parity * y.parity else 1
    return (x @ y)._combine(1, y @ x, -sign)


def super_kron(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """``a (x) b`` acting by ``(a(x)b)(u(x)w) = (-1)^{p(b)p(u)} au (x) bw``."""
    source = a.source.tensor(b.source)
    target = a.target.tensor(b.target)
    nb_s, nb_t = b.source.dim, b.target.dim
    sp = a.source.parities
    cols = {}
    for ja, ca in a.cols.items():
        sgn = -1 if b.parity and sp[ja] else 1
        for jb, cb in b.cols.items():
            col = {}
            for ia, xa in ca.items():
                for ib, xb in cb.items():
                    col[ia * nb_t + ib] = sgn * xa * xb
            cols[ja * nb_s + jb] = col
    return SuperMatrix(source, target, (a.parity + b.parity) % 2, cols)


# ---------------------------------------------------------------- p(n)

@dataclass(frozen=True)
class PnElement:
    label: str
    piece: str  # "g0", "g1" (B-type) or "g-1" (C-type)
    matrix: SuperMatrix

    @property
    def parity(self) -> int:
        return self.matrix.parity


def _block_matrix(n: int, parity: int, entries: Iterable[tuple[int, int, int]]) -> SuperMatrix:
    space = natural_space(n)
    cols: dict = {}
    for i, j, x in entries:
        cols.setdefault(j, {})[i] = cols.get(j, {}).get(i, 0) + x
    return SuperMatrix(space, space, parity, cols)


def pn_basis(n: int) -> list[PnElement]:
    """The standard 2n^2 basis of p(n): A-type, then B-type, then C-type."""
    if n < 1:
        raise SuperAlgebraError("n must be positive")
    out = []
    for a in range(n):
        for b in range(n):
            # A = E_ab, lower block -E_ba
            m = _block_matrix(n, 0, [(a, b, 1), (n + b, n + a, -1)])
            out.append(PnElement(f"A[{a + 1},{b + 1}]", "g0", m))
    for a in range(n):
        for b in range(a, n):
            ent = [(a, n + b, 1)] if a == b else [(a, n + b, 1), (b, n + a, 1)]
            out.append(PnElement(f"B[{a + 1},{b + 1}]", "g1", _block_matrix(n, 1, ent)))
    for a in range(n):
        for b in range(a + 1, n):
            ent = [(n + a, b, 1), (n + b, a, -1)]
            out.append(PnElement(f"C[{a + 1},{b + 1}]", "g-1", _block_matrix(n, 1, ent)))
    return out


def pn_dual_complement_basis(n: int) -> list[SuperMatrix]:
    """Basis of the isotropic complement p(n)^* = {(A B; C A^t): B^t=-B, C^t=C}."""
    out = []
    for a in range(n):
        for b in range(n):
            out.append(_block_matrix(n, 0, [(a, b, 1), (n + b, n + a, 1)]))
    for a in range(n):
        for b in range(a + 1, n):
            out.append(_block_matrix(n, 1, [(a, n + b, 1), (b, n + a, -1)]))
    for a in range(n):
        for b in range(a, n):
            ent = [(n + a, a, 1)] if a == b else [(n + a, b, 1), (n + b, a, 1)]
            out.append(_block_matrix(n, 1, ent))
    return out


def beta(n: int, i: int, j: int) -> int:
    """The odd symmetric form on basis vectors of V_n."""
    return 1 if abs(i - j) == n else 0


def preserves_form(x: SuperMatrix, n: int) -> bool:
    """Check ``beta(Xv,w) + (-1)^{p(X)p(v)} beta(v,Xw) = 0`` on all basis pairs."""
    par = natural_space(n).parities
    for v in range(2 * n):
        xv = x.cols.get(v, {})
        for w in range(2 * n):
            xw = x.cols.get(w, {})
            s = sum(c * beta(n, i, w) for i, c in xv.items())
            t = sum(c * beta(n, v, i) for i, c in xw.items())
            if s + (-t if x.parity * par[v] else t):
                return False
    return True


def pn_coordinates(n: int, x: SuperMatrix) -> dict[str, Fraction]:
    """Coordinates of a p(n) matrix in :func:`pn_basis`; raises if not in p(n)."""
    out = {}
    for a in range(n):
        for b in range(n):
            c = x.entry(a, b)
            if c:
                out[f"A[{a + 1},{b + 1}]"] = Fraction(c)
        for b in range(a, n):
            c = x.entry(a, n + b)
            if c:
                out[f"B[{a + 1},{b + 1}]"] = Fraction(c)
        for b in range(a + 1, n):
            c = x.entry(n + a, b)
            if c:
                out[f"C[{a + 1},{b + 1}]"] = Fraction(c)
    recon: dict = {}
    for e in pn_basis(n):
        c = out.get(e.label)
        if c:
            for j, col in e.matrix.cols.items():
                recon[j] = axpy(1, recon.get(j, {}), c, col)
    for j in set(recon) | set(x.cols):
        if axpy(1, recon.get(j, {}), -1, x.cols.get(j, {})):
            raise SuperAlgebraError("matrix does not lie in p(n)")
    return out


# ---------------------------------------------------------------- representations

@dataclass(frozen=True, eq=False)
class SuperRep:
    """A representation of p(n) on a graded space, keyed by basis labels."""

    n: int
    space: GradedSpace
    actions: dict  # label -> SuperMatrix
    parity_shift: int = 0

    @property
    def dim(self) -> int:
        return self.space.dim

    def act(self, label: str) -> SuperMatrix:
        return self.actions[label]

    def of(self, coords: Mapping[str, Fraction]) -> SuperMatrix:
        """Action of the p(n) element with the given basis coordinates."""
        out = None
        for lab, c in coords.items():
            m = self.actions[lab].scaled(c)
            out = m if out is None else out + m
        if out is None:
            return zero_matrix(self.space, self.space)
        return out

    def weights(self) -> list[tuple[int, ...]] | None:
        """Weights of the basis vectors if the Cartan acts diagonally."""
        diag = [self.actions[f"A[{i + 1},{i + 1}]"] for i in range(self.n)]
        ws = []
        for j in range(self.dim):
            w = []
            for h in diag:
                col = h.cols.get(j, {})
                if any(i != j for i in col):
                    return None
                x = col.get(j, 0)
                if Fraction(x).denominator != 1:
                    return None
                w.append(int(x))
            ws.append(tuple(w))
        return ws


def trivial_rep(n: int) -> SuperRep:
    return SuperRep(n, TRIVIAL_SPACE, {e.label: zero_matrix(TRIVIAL_SPACE, TRIVIAL_SPACE, e.parity)
                                       for e in pn_basis(n)})


def natural_rep(n: int) -> SuperRep:
    return SuperRep(n, natural_space(n), {e.label: e.matrix for e in pn_basis(n)})


def tensor_rep(r1: SuperRep, r2: SuperRep) -> SuperRep:
    """``X(u(x)w) = Xu(x)w + (-1)^{p(X)p(u)} u(x)Xw``."""
    if r1.n != r2.n:
        raise SuperAlgebraError("representations of different p(n)")
    id1, id2 = identity_matrix(r1.space), identity_matrix(r2.space)
    acts = {}
    for lab, m1 in r1.actions.items():
        m2 = r2.actions[lab]
        acts[lab] = super_kron(m1, id2) + super_kron(id1, m2)
    return SuperRep(r1.n, r1.space.tensor(r2.space), acts,
                    (r1.parity_shift + r2.parity_shift) % 2)


def tensor_power_rep(n: int, k: int) -> SuperRep:
    if k < 0:
        raise SuperAlgebraError("k must be nonnegative")
    rep = trivial_rep(n)
    if k == 0:
        return rep
    nat = natural_rep(n)
    rep = nat
    for _ in range(k - 1):
        rep = tensor_rep(rep, nat)
    return rep


def dual_rep(rep: SuperRep) -> SuperRep:
    """Dual module: ``(X phi)(v) = -(-1)^{p(X)p(phi)} phi(Xv)`` on the dual basis."""
    par = rep.space.parities
    acts = {}
    for lab, m in rep.actions.items():
        cols: dict = {}
        for j, col in m.cols.items():
            for i, x in col.items():
                # M_ij contributes to entry (j, i) of the dual action
                s = -x if not (m.parity and par[i]) else x
                cols.setdefault(i, {})[j] = s
        acts[lab] = SuperMatrix(rep.space, rep.space, m.parity, cols)
    return SuperRep(rep.n, rep.space, acts, rep.parity_shift)


def adjoint_rep(n: int) -> SuperRep:
    """p(n) acting on itself by the super bracket, in :func:`pn_basis` coordinates."""
    basis = pn_basis(n)
    index = {e.label: k for k, e in enumerate(basis)}
    space = GradedSpace(tuple(e.parity for e in basis), tuple(e.label for e in basis))
    acts = {}
    for x in basis:
        cols = {}
        for j, y in enumerate(basis):
            coords = pn_coordinates(n, super_bracket(x.matrix, y.matrix))
            if coords:
                cols[j] = {index[l]: c for l, c in coords.items()}
        acts[x.label] = SuperMatrix(space, space, x.parity, cols)
    return SuperRep(n, space, acts)


def check_bracket_compatibility(rep: SuperRep) -> bool:
    """``rho([X,Y]) = rho(X)rho(Y) - (-1)^{p(X)p(Y)} rho(Y)rho(X)`` for all basis pairs."""
    basis = pn_basis(rep.n)
    for x in basis:
        for y in basis:
            lhs = rep.of(pn_coordinates(rep.n, super_bracket(x.matrix, y.matrix)))
            rhs = super_bracket(rep.actions[x.label], rep.actions[y.label])
            if lhs != rhs:
                return False
    return True


def is_equivariant(f: SuperMatrix, src: SuperRep, dst: SuperRep) -> bool:
    """``rho_dst(X) f = (-1)^{p(X)p(f)} f rho_src(X)`` for every basis X."""
    for lab, a in src.actions.items():
        b = dst.actions[lab]
        lhs = b @ f
        rhs = f @ a
        sign = -1 if a.parity * f.parity else 1
        if not lhs._combine(1, rhs, -sign).is_zero():
            return False
    return True


# ---------------------------------------------------------------- invariants

def _kernel(rows: Iterable[Mapping], columns: Sequence[int], parities: Sequence[int]) -> tuple[list, list]:
    rows = list(rows)
    even = linalg.nullspace(rows, [j for j in columns if parities[j] == 0])
    odd = linalg.nullspace(rows, [j for j in columns if parities[j] == 1])
    return even, odd


def invariant_space(rep: SuperRep) -> tuple[list[dict], list[dict]]:
    """Exact bases (even, odd) of the joint kernel of all action matrices."""
    mats = list(rep.actions.values())
    cols = list(range(rep.dim))
    # a diagonal action (Cartan) already pins invariants to its zero-diagonal columns
    for m in mats:
        if all(set(c) <= {j} for j, c in m.cols.items()):
            cols = [j for j in cols if not m.cols.get(j, {}).get(j)]
    rows = (r for m in mats for r in m.rows().values())
    return _kernel(rows, cols, rep.space.parities)


def equivariant_functionals(rep: SuperRep) -> tuple[list[dict], list[dict]]:
    """Bases (even, odd) of ``{phi : phi rho(X) = 0 for all X}`` (row vectors)."""
    mats = list(rep.actions.values())
    cols = list(range(rep.dim))
    for m in mats:
        if all(set(c) <= {j} for j, c in m.cols.items()):
            cols = [j for j in cols if not m.cols.get(j, {}).get(j)]
    rows = (c for m in mats for c in m.cols.values())
    return _kernel(rows, cols, rep.space.parities)


def hom_dim(n: int, k: int) -> int:
    """dim sHom_{p(n)}(V_n^{(x)k}, 1), both parities together."""
    even, odd = invariant_space(dual_rep(tensor_power_rep(n, k)))
    return len(even) + len(odd)


def intertwiners(src: SuperRep, dst: SuperRep, parity: int = 0) -> list[SuperMatrix]:
    """Basis of the homogeneous p(n)-module maps ``src -> dst`` of the given parity."""
    if src.n != dst.n:
        raise SuperAlgebraError("representations of different p(n)")
    sp, tp = src.space.parities, dst.space.parities
    unknowns = [(i, j) for j in range(src.dim) for i in range(dst.dim)
                if (sp[j] + tp[i]) % 2 == parity]
    index = {u: t for t, u in enumerate(unknowns)}
    eqs = []
    for lab, a in src.actions.items():
        b = dst.actions[lab]
        sign = -1 if a.parity * parity else 1
        # (b F - sign F a)_{ij} = sum_k b_ik F_kj - sign sum_k F_ik a_kj
        brows = b.rows()
        for i in range(dst.dim):
            for j in range(src.dim):
                eq: dict = {}
                for kk, x in brows.get(i, {}).items():
                    t = index.get((kk, j))
                    if t is not None:
                        eq[t] = eq.get(t, 0) + x
                for kk, x in a.cols.get(j, {}).items():
                    t = index.get((i, kk))
                    if t is not None:
                        eq[t] = eq.get(t, 0) - sign * x
                eq = {t: x for t, x in eq.items() if x}
                if eq:
                    eqs.append(eq)
    sols = linalg.nullspace(eqs, range(len(unknowns)))
    out = []
    for s in sols:
        cols: dict = {}
        for t, x in s.items():
            i, j = unknowns[t]
            cols.setdefault(j, {})[i] = x
        out.append(SuperMatrix(src.space, dst.space, parity, cols))
    return out


def find_isomorphism(src: SuperRep, dst: SuperRep) -> SuperMatrix | None:
    """An invertible homogeneous intertwiner, if a generic combination finds one."""
    if src.dim != dst.dim:
        return None
    for parity in (0, 1):
        basis = intertwiners(src, dst, parity)
        if not basis:
            continue
        f = basis[0]
        for c, g in enumerate(basis[1:], start=2):
            f = f + g.scaled(c * c + 1)
        if f.rank() == src.dim:
            return f
    return None


# ---------------------------------------------------------------- subreps

def subrep(rep: SuperRep, vectors: Iterable[Mapping]) -> tuple[SuperRep, Basis]:
    """Subrepresentation generated by homogeneous ``vectors``.

    Returns the rep written in an RREF basis of the subspace, and that basis.
    """
    ech = Echelon()
    queue = []
    for v in vectors:
        r = ech.reduce(v)
        if r:
            ech.pivots[min(r)] = r
            queue.append(r)
    mats = list(rep.actions.values())
    while queue:
        v = queue.pop()
        for m in mats:
            r = ech.reduce(m.apply(v))
            if r:
                ech.pivots[min(r)] = r
                queue.append(r)
    basis = Basis(ech)
    par = rep.space.parities
    parities = []
    for v in basis.vectors:
        ps = {par[i] for i in v}
        if len(ps) != 1:
            raise SuperAlgebraError("subspace basis vector is not homogeneous")
        parities.append(ps.pop())
    space = GradedSpace(tuple(parities))
    acts = {}
    for lab, m in rep.actions.items():
        cols = {}
        for k, v in enumerate(basis.vectors):
            c = basis.coordinates(m.apply(v), check=False)
            if c:
                cols[k] = c
        acts[lab] = SuperMatrix(space, space, m.parity, cols)
    return SuperRep(rep.n, space, acts, rep.parity_shift), basis


# ---------------------------------------------------------------- DS functor

def make_ds_x(n: int) -> SuperMatrix:
    """Odd square-zero element with B = E_{n-1,n} + E_{n,n-1}, A = C = 0."""
    if n < 3:
        raise SuperAlgebraError("DS_x needs n >= 3")
    return _block_matrix(n, 1, [(n - 2, 2 * n - 1, 1), (n - 1, 2 * n - 2, 1)])


def ds_apply(x: SuperMatrix, rep: SuperRep) -> SuperRep:
    """``Ker x / Im x`` as a representation of the upper-left p(n-2)."""
    n = rep.n
    if x.parity != 1 or not super_bracket(x, x).is_zero():
        raise SuperAlgebraError("x must be odd with [x, x] = 0")
    small = [e.label for e in pn_basis(n - 2)] if n > 2 else []
    nat = natural_rep(n)
    for lab in small:
        if not super_bracket(nat.actions[lab], x).is_zero():
            raise SuperAlgebraError(f"embedded {lab} does not commute with x")
    rx = rep.of(pn_coordinates(n, x))
    par = rep.space.parities
    ker_e, ker_o = _kernel(rx.rows().values(), range(rep.dim), par)
    im = Basis(c for c in rx.cols.values() if c)

    def mod_im(w: Mapping) -> dict:
        w = dict(w)
        for p, v in zip(im.pivots, im.vectors):
            c = w.get(p)
            if c:
                w = axpy(1, w, -c, v)
        return w

    quot = Basis(mod_im(v) for v in ker_e + ker_o)
    parities = tuple(par[min(v)] for v in quot.vectors)
    space = GradedSpace(parities)
    acts = {}
    for lab in small:
        m = rep.actions[lab]
        cols = {}
        for k, v in enumerate(quot.vectors):
            w = m.apply(v)
            if rx.apply(w):
                raise SuperAlgebraError("embedded subalgebra does not preserve Ker x")
            c = quot.coordinates(mod_im(w))
            if c:
                cols[k] = c
        acts[lab] = SuperMatrix(space, space, m.parity, cols)
    return SuperRep(n - 2, space, acts, rep.parity_shift)


# ---------------------------------------------------------------- truncated standards

def _perm_sign(perm: Sequence[int]) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def highest_weight_seed(n: int, lam: Weight) -> dict:
    """g_0-highest weight vector of weight ``lam`` inside V_1^{(x)k}.

    Rows of lengths ``-lam_1, -lam_2, ...`` are filled row by row; row i
    carries the odd vector ``f_i`` and each column is antisymmetrized.
    """
    rows = [-x for x in lam.entries if x]
    cells = [(r, c) for r, length in enumerate(rows) for c in range(length)]
    if not cells:
        return {0: 1}
    pos = {cell: p for p, cell in enumerate(cells)}
    columns = [[pos[(r, c)] for r in range(len(rows)) if rows[r] > c] for c in range(rows[0])]
    base = [n + r for r, _ in cells]
    vec: dict = {}
    for perms in itertools.product(*(itertools.permutations(range(len(col))) for col in columns)):
        labels = list(base)
        sign = 1
        for col, perm in zip(columns, perms):
            sign *= _perm_sign(perm)
            for src, dst in enumerate(perm):
                labels[col[dst]] = base[col[src]]
        idx = 0
        for lab in labels:
            idx = idx * 2 * n + lab
        vec[idx] = vec.get(idx, 0) + sign
    return {i: x for i, x in vec.items() if x}


def build_truncated_standard(n: int, lam: Weight) -> SuperRep:
    """p(n)-closure of the highest weight seed inside V_n^{(x)|lam|}."""
    if any(x > 0 for x in lam.entries):
        raise SuperAlgebraError(f"weight {lam} is not admissible")
    nonzero = [x for x in lam.entries if x]
    if len(nonzero) > n:
        raise SuperAlgebraError(f"weight {lam} does not fit in rank {n}")
    if lam.rank not in (INF, n):
        raise SuperAlgebraError(f"weight {lam} has rank {lam.rank}, expected {n}")
    lam_n = Weight(tuple(nonzero) + (0,) * (n - len(nonzero)), n)
    k = lam_n.size
    rep, _ = subrep(tensor_power_rep(n, k), [highest_weight_seed(n, lam_n)])
    return SuperRep(n, rep.space, rep.actions, k % 2)


# ---------------------------------------------------------------- Casimir

def _dense_inverse(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    size = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
         for i, row in enumerate(mat)]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size:] for row in a]


def casimir_dual_basis(n: int) -> list[SuperMatrix]:
    """``x^a`` in the complement with ``str(x_b x^a) = delta_ab``."""
    basis = pn_basis(n)
    comp = pn_dual_complement_basis(n)
    gram = [[(b.matrix @ y).supertrace() if y.parity == b.parity else 0 for b in basis]
            for y in comp]
    inv = _dense_inverse(gram)
    out = []
    for a, b in enumerate(basis):
        m = zero_matrix(b.matrix.source, b.matrix.target, b.parity)
        for c, y in enumerate(comp):
            if inv[a][c]:
                m = m + y.scaled(inv[a][c])
        out.append(m)
    return out


# Scale making the spectrum integral (the bare sum has half-integer eigenvalues).
CASIMIR_SCALE = 2


def casimir_matrix(n: int, rep: SuperRep) -> SuperMatrix:
    """``Omega = 2 sum_a x^a|_V (x) x_a|_M`` on ``V_n (x) M`` (Koszul signs included)."""
    if rep.n != n:
        raise SuperAlgebraError("representation is not a p(n)-module")
    space = natural_space(n).tensor(rep.space)
    omega = zero_matrix(space, space)
    for dual, e in zip(casimir_dual_basis(n), pn_basis(n)):
        omega = omega + super_kron(dual, rep.actions[e.label])
    return omega.scaled(CASIMIR_SCALE)


def _natural_weights(n: int) -> list[tuple[int, ...]]:
    out = []
    for sign in (1, -1):
        for i in range(n):
            w = [0] * n
            w[i] = sign
            out.append(tuple(w))
    return out


def weight_blocks(n: int, rep: SuperRep) -> dict[tuple[int, ...], list[int]]:
    """Basis indices of ``V_n (x) M`` grouped by weight (one block if M has none)."""
    mw = rep.weights()
    if mw is None:
        return {(): list(range(2 * n * rep.dim))}
    blocks: dict[tuple[int, ...], list[int]] = {}
    for a, wa in enumerate(_natural_weights(n)):
        for b, wb in enumerate(mw):
            w = tuple(x + y for x, y in zip(wa, wb))
            blocks.setdefault(w, []).append(a * rep.dim + b)
    return blocks


def _block_spectrum(omega: SuperMatrix, idx: list[int]) -> dict[int, int]:
    pos = {g: t for t, g in enumerate(idx)}
    dense = [[Fraction(0)] * len(idx) for _ in idx]
    for g in idx:
        for i, x in omega.cols.get(g, {}).items():
            if i not in pos:
                raise SuperAlgebraError("Casimir does not preserve the weight grading")
            dense[pos[i]][pos[g]] = Fraction(x)
    bound = max((sum(abs(x) for x in row) for row in dense), default=0)
    roots, rest = linalg.integer_roots(linalg.charpoly(dense), math.ceil(bound) + 1)
    if len(rest) > 1:
        raise NonIntegralEigenvalue(f"non-integer eigenvalues, leftover factor {rest}")
    return roots


def casimir_spectrum_by_weight(n: int, rep: SuperRep) -> dict[tuple[int, ...], dict[int, int]]:
    """Generalized eigenspace dimensions of the Casimir, weight by weight."""
    omega = casimir_matrix(n, rep)
    return {w: _block_spectrum(omega, idx) for w, idx in sorted(weight_blocks(n, rep).items())}


def theta_eigen_decomp(n: int, rep: SuperRep) -> dict[int, int]:
    """``{j: dim of the generalized j-eigenspace of Omega on V_n (x) M}``."""
    out: dict[int, int] = {}
    for block in casimir_spectrum_by_weight(n, rep).values():
        for j, d in block.items():
            out[j] = out.get(j, 0) + d
    return dict(sorted(out.items()))


def generalized_eigenspace_dim(m: SuperMatrix, j: int) -> int:
    """``dim Ker (M - j)^N`` for large N, by iterating until the kernel stabilizes."""
    size = m.shape[0]
    shifted = m - identity_matrix(m.source).scaled(j) if j else m
    power = identity_matrix(m.source)
    last = -1
    for _ in range(size + 1):
        power = shifted @ power
        dim = size - power.rank()
        if dim == last:
            return dim
        last = dim
    return last


# ---------------------------------------------------------------- JSON

def _q(x) -> str | int:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _space_to_json(g: GradedSpace) -> dict:
    out = {"even": g.even_dim, "odd": g.odd_dim, "parities": list(g.parities)}
    if g.labels is not None:
        out["labels"] = [list(x) if isinstance(x, tuple) else x for x in g.labels]
    return out


def _space_from_json(data) -> GradedSpace:
    if isinstance(data, list):
        return GradedSpace(tuple(data))
    labels = data.get("labels")
    if labels is not None:
        labels = tuple(tuple(x) if isinstance(x, list) else x for x in labels)
    return GradedSpace(tuple(data["parities"]), labels)


def matrix_to_json(m: SuperMatrix) -> dict:
    return {"rows": m.target.dim, "cols": m.source.dim, "parity": m.parity,
            "source": _space_to_json(m.source), "target": _space_to_json(m.target),
            "entries": [[i, j, _q(x)] for i, j, x in m.triplets()]}


def matrix_from_json(data: dict) -> SuperMatrix:
    src = _space_from_json(data["source"])
    tgt = _space_from_json(data["target"])
    cols: dict = {}
    for i, j, x in data["entries"]:
        cols.setdefault(int(j), {})[int(i)] = Fraction(x)
    return SuperMatrix(src, tgt, int(data["parity"]), cols)


def rep_to_json(rep: SuperRep) -> dict:
    return {"n": rep.n,
            "space": _space_to_json(rep.space),
            "parity_shift": rep.parity_shift,
            "actions": [{"label": lab, "matrix": matrix_to_json(m)}
                        for lab, m in rep.actions.items()]}


def rep_from_json(data: dict) -> SuperRep:
    space = _space_from_json(data["space"])
    acts = {a["label"]: matrix_from_json(a["matrix"]) for a in data["actions"]}
    return SuperRep(int(data["n"]), space, acts, int(data.get("parity_shift", 0)))
