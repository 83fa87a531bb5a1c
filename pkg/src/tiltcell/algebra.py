"""Finite-dimensional algebras by structure constants, their modules and
morphisms, and the structural toolbox: hom spaces, radicals and socles,
composition multiplicities, Krull-Schmidt decomposition, isomorphism tests.

All arithmetic is exact.  Randomized searches (isomorphism probing,
idempotent hunting) take an explicit seeded PRNG and are used only as fast
paths or fallbacks behind deterministic sweeps, so results are reproducible.
"""

from __future__ import annotations

import itertools
import random

from . import poly
from .errors import (
    AlgebraMismatch,
    DimensionMismatch,
    InputError,
    NotComputable,
    NotSimple,
    NotSplit,
)
from .linalg import Field, Matrix, Subspace, block_diag, vstack


class AlgebraPresentation:
    """An associative unital algebra given by structure constants.

    table[i][j] is the coefficient vector of b_i * b_j in the basis
    b_0, ..., b_{n-1}; unit is the coefficient vector of 1.
    """

    def __init__(self, field: Field, dim: int, table, unit, name: str = "", check: bool = True):
        self.field = field
        self.dim = dim
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        self.unit = tuple(unit)
        self.name = name
        self._left_mults = None
        if len(self.table) != dim or any(len(r) != dim for r in self.table):
            raise InputError("structure constant table has wrong shape")
        if len(self.unit) != dim:
            raise InputError("unit vector has wrong length")
        if check:
            self._check_axioms()

    @classmethod
    def from_struct_consts(cls, field, dim, entries, unit, name="", check=True):
        """entries: iterable of (i, j, k, scalar) meaning b_i b_j = sum_k c * b_k."""
        z = field.zero()
        table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k, val) in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InputError(f"structure constant index ({i},{j},{k}) out of range")
            if isinstance(val, (int, str)):
                val = field.parse(val)
            table[i][j][k] = field.add(table[i][j][k], val)
        unit_vec = [field.parse(u) if isinstance(u, (int, str)) else u for u in unit]
        return cls(field, dim, table, unit_vec, name=name, check=check)

    # -- multiplication -------------------------------------------------------

    def multiply(self, a, b):
        """Product of two coefficient vectors."""
        F = self.field
        out = [F.zero()] * self.dim
        for i, ai in enumerate(a):
            if ai == F.zero():
                continue
            for j, bj in enumerate(b):
                if bj == F.zero():
                    continue
                c = F.mul(ai, bj)
                for k, t in enumerate(self.table[i][j]):
                    if t != F.zero():
                        out[k] = F.add(out[k], F.mul(c, t))
        return tuple(out)

    def left_mult_basis(self):
        """Matrices of left multiplication by each basis element."""
        if self._left_mults is None:
            F = self.field
            mats = []
            for i in range(self.dim):
                cols = []
                for j in range(self.dim):
                    cols.append(self.table[i][j])
                # column j is b_i * b_j
                mats.append(Matrix(F, list(zip(*cols))))
            self._left_mults = tuple(mats)
        return self._left_mults

    def left_mult(self, a) -> Matrix:
        F = self.field
        acc = Matrix.zeros(F, self.dim, self.dim)
        for i, ai in enumerate(a):
            if ai != F.zero():
                acc = acc + self.left_mult_basis()[i].scale(ai)
        return acc

    def _check_axioms(self):
        F = self.field
        lm = self.left_mult_basis()
        unit_mat = self.left_mult(self.unit)
        ident = Matrix.identity(F, self.dim)
        if unit_mat != ident:
            raise InputError("unit is not a left identity")
        # right identity: b_i * 1 = b_i
        for i in range(self.dim):
            e_i = tuple(F.one() if t == i else F.zero() for t in range(self.dim))
            if self.multiply(e_i, self.unit) != e_i:
                raise InputError("unit is not a right identity")
        # associativity on basis triples via L_i L_j = L_{b_i b_j}
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = lm[i] @ lm[j]
                rhs = self.left_mult(self.table[i][j])
                if lhs != rhs:
                    raise InputError(f"multiplication not associative at basis pair ({i},{j})")

    def opposite(self) -> "AlgebraPresentation":
        table = [[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return AlgebraPresentation(self.field, self.dim, table, self.unit,
                                   name=self.name + "^op", check=False)

    def regular_module(self) -> "ModuleRep":
        return ModuleRep(self, self.dim, self.left_mult_basis(), check=False)

    def basis_vector(self, i):
        F = self.field
        return tuple(F.one() if t == i else F.zero() for t in range(self.dim))


class ModuleRep:
    """A finite-dimensional left module: one action matrix per algebra basis element."""

    def __init__(self, algebra: AlgebraPresentation, dim: int, action, check: bool = True):
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(action)
        if len(self.action) != algebra.dim:
            raise InputError("need one action matrix per algebra basis element")
        for m in self.action:
            if m.rows != dim or m.cols != dim:
                raise InputError("action matrix has wrong shape")
        if check:
            self.check_axioms()

    def check_axioms(self):
        F = self.algebra.field
        if self.act(self.algebra.unit) != Matrix.identity(F, self.dim):
            raise InputError("unit does not act as the identity")
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                if self.action[i] @ self.action[j] != self.act(self.algebra.table[i][j]):
                    raise InputError(f"module axiom fails at basis pair ({i},{j})")

    def act(self, coeffs) -> Matrix:
        F = self.algebra.field
        acc = Matrix.zeros(F, self.dim, self.dim)
        for i, c in enumerate(coeffs):
            if c != F.zero():
                acc = acc + self.action[i].scale(c)
        return acc

    def __repr__(self):
        return f"ModuleRep(dim {self.dim} over {self.algebra.name or 'A'})"


class Morphism:
    """An intertwiner source -> target, stored as a (target.dim x source.dim) matrix."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: ModuleRep, target: ModuleRep, matrix: Matrix, check: bool = False):
        if source.algebra is not target.algebra and source.algebra.table != target.algebra.table:
            raise AlgebraMismatch("morphism between modules over different algebras")
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise DimensionMismatch("morphism matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            self.check_intertwines()

    def check_intertwines(self):
        for i in range(self.source.algebra.dim):
            if self.matrix @ self.source.action[i] != self.target.action[i] @ self.matrix:
                raise InputError(f"matrix does not intertwine basis element {i}")

    def __matmul__(self, other: "Morphism") -> "Morphism":
        if other.target.dim != self.source.dim:
            raise DimensionMismatch("composition shape mismatch")
        return Morphism(other.source, self.target, self.matrix @ other.matrix)

    def __add__(self, other):
        return Morphism(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other):
        return Morphism(self.source, self.target, self.matrix - other.matrix)

    def scale(self, c):
        return Morphism(self.source, self.target, self.matrix.scale(c))

    def is_zero(self):
        return self.matrix.is_zero()

    def is_injective(self):
        return self.matrix.rank() == self.source.dim

    def is_surjective(self):
        return self.matrix.rank() == self.target.dim

    def is_invertible(self):
        return self.source.dim == self.target.dim and self.matrix.is_invertible()

    def inverse(self) -> "Morphism":
        return Morphism(self.target, self.source, self.matrix.inverse())

    def image(self) -> Subspace:
        return Subspace.from_rows(self.matrix.field, self.target.dim,
                                  self.matrix.transpose().entries)

    def kernel(self) -> Subspace:
        return Subspace(self.source.dim, self.matrix.kernel())

    @classmethod
    def identity(cls, m: ModuleRep):
        return cls(m, m, Matrix.identity(m.algebra.field, m.dim))

    @classmethod
    def zero(cls, source: ModuleRep, target: ModuleRep):
        return cls(source, target, Matrix.zeros(source.algebra.field, target.dim, source.dim))

    def __repr__(self):
        return f"Morphism({self.source.dim} -> {self.target.dim})"


# -- submodules, quotients, sums -----------------------------------------------


def is_invariant(m: ModuleRep, space: Subspace) -> bool:
    for a in m.action:
        for row in space.basis.entries:
            img = a @ Matrix.column(m.algebra.field, row)
            if not space.contains_vector(tuple(x[0] for x in img.entries)):
                return False
    return True


def submodule_rep(m: ModuleRep, space: Subspace):
    """(module on the subspace, inclusion morphism).  space must be invariant."""
    F = m.algebra.field
    incl = space.basis.transpose()  # dim x r, columns are basis vectors
    action = []
    for a in m.action:
        if space.dim == 0:
            action.append(Matrix.zeros(F, 0, 0))
            continue
        sol, _ = incl.solve(a @ incl)
        action.append(sol)
    sub = ModuleRep(m.algebra, space.dim, action, check=False)
    return sub, Morphism(sub, m, incl)


def quotient_rep(m: ModuleRep, space: Subspace):
    """(quotient module, projection morphism, section matrix) by an invariant subspace."""
    F = m.algebra.field
    proj, section = space.complement_projection()
    action = [proj @ a @ section for a in m.action]
    quot = ModuleRep(m.algebra, m.dim - space.dim, action, check=False)
    return quot, Morphism(m, quot, proj), section


def cokernel(f: Morphism):
    """(target / image, projection morphism)."""
    quot, proj, _ = quotient_rep(f.target, f.image())
    return quot, proj


def direct_sum(mods):
    """(sum module, inclusions, projections)."""
    mods = list(mods)
    alg = mods[0].algebra
    F = alg.field
    action = [block_diag([m.action[i] for m in mods]) for i in range(alg.dim)]
    total = ModuleRep(alg, sum(m.dim for m in mods), action, check=False)
    incls, projs = [], []
    offset = 0
    for m in mods:
        inc = Matrix.zeros(F, total.dim, m.dim)
        pr = Matrix.zeros(F, m.dim, total.dim)
        inc_rows = [list(r) for r in inc.entries]
        pr_rows = [list(r) for r in pr.entries]
        for i in range(m.dim):
            inc_rows[offset + i][i] = F.one()
            pr_rows[i][offset + i] = F.one()
        incls.append(Morphism(m, total, Matrix(F, inc_rows)))
        projs.append(Morphism(total, m, Matrix(F, pr_rows)))
        offset += m.dim
    return total, incls, projs


def submodule_generated(m: ModuleRep, vectors) -> Subspace:
    """Smallest invariant subspace containing the given vectors."""
    F = m.algebra.field
    space = Subspace.from_rows(F, m.dim, vectors)
    while True:
        rows = list(space.basis.entries)
        new_rows = list(rows)
        for a in m.action:
            for row in rows:
                img = a @ Matrix.column(F, row)
                new_rows.append(tuple(x[0] for x in img.entries))
        bigger = Subspace.from_rows(F, m.dim, new_rows)
        if bigger.dim == space.dim:
            return space
        space = bigger


# -- hom spaces ------------------------------------------------------------------


def hom_space(m: ModuleRep, n: ModuleRep) -> list[Morphism]:
    """Canonical basis of the space of intertwiners m -> n.

    Solves X a_M(b) = a_N(b) X for all basis elements b; the basis is the RREF
    basis of the solution space in row-major matrix coordinates, so the output
    is deterministic.
    """
    if m.algebra is not n.algebra and m.algebra.table != n.algebra.table:
        raise AlgebraMismatch("hom between modules over different algebras")
    F = m.algebra.field
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    rows = []
    # unknown X is dn x dm, flattened row-major: index (r, c) -> r * dm + c
    for b in range(m.algebra.dim):
        am = m.action[b]
        an = n.action[b]
        for r in range(dn):
            for c in range(dm):
                row = [F.zero()] * (dn * dm)
                # (X am)[r, c] = sum_k X[r, k] am[k, c]
                for k in range(dm):
                    if am.entries[k][c] != F.zero():
                        row[r * dm + k] = F.add(row[r * dm + k], am.entries[k][c])
                # (an X)[r, c] = sum_k an[r, k] X[k, c]
                for k in range(dn):
                    if an.entries[r][k] != F.zero():
                        row[k * dm + c] = F.sub(row[k * dm + c], an.entries[r][k])
                rows.append(row)
    ker = Matrix(F, rows).kernel()
    out = []
    for vec in ker.entries:
        mat = Matrix(F, [vec[r * dm:(r + 1) * dm] for r in range(dn)])
        out.append(Morphism(m, n, mat))
    return out


class EndAlgebra:
    """End(M) packaged as an abstract algebra with coordinate maps."""

    def __init__(self, module: ModuleRep):
        self.module = module
        self.basis = hom_space(module, module)
        F = module.algebra.field
        self.field = F
        flat_rows = Matrix(F, [f.matrix.flat() for f in self.basis]) if self.basis else Matrix(F, [])
        self._solver = flat_rows.transpose()
        table = []
        for f in self.basis:
            row = []
            for g in self.basis:
                row.append(self.coords((f @ g).matrix))
            table.append(row)
        unit = self.coords(Matrix.identity(F, module.dim))
        self.presentation = AlgebraPresentation(F, len(self.basis), table, unit, check=False)

    def coords(self, matrix: Matrix):
        target = Matrix.column(self.field, matrix.flat())
        sol, _ = self._solver.solve(target)
        return tuple(r[0] for r in sol.entries)

    def from_coords(self, coeffs) -> Morphism:
        F = self.field
        acc = Matrix.zeros(F, self.module.dim, self.module.dim)
        for c, f in zip(coeffs, self.basis):
            if c != F.zero():
                acc = acc + f.matrix.scale(c)
        return Morphism(self.module, self.module, acc)

    @property
    def dim(self):
        return len(self.basis)


# -- radical machinery -------------------------------------------------------------


def algebra_radical(algebra: AlgebraPresentation) -> Subspace:
    """The Jacobson radical as a subspace of the algebra.

    Over Q this is the kernel of the trace form (a, b) -> tr(L_{ab}); over F_p
    the chain of coefficient-of-characteristic-polynomial kernels at p-power
    indices.  The result is certified: it must be a nilpotent ideal whose
    quotient has vanishing radical by the same computation.
    """
    rad = _radical_candidate(algebra)
    _certify_radical(algebra, rad)
    return rad


def _radical_candidate(algebra: AlgebraPresentation) -> Subspace:
    F = algebra.field
    n = algebra.dim
    lm = algebra.left_mult_basis()
    if F.p is None:
        # tr(L_i L_j) without forming the products
        def pair_trace(a, b):
            acc = F.zero()
            for k in range(n):
                for l in range(n):
                    if a.entries[k][l] != F.zero():
                        acc = F.add(acc, F.mul(a.entries[k][l], b.entries[l][k]))
            return acc

        gram = Matrix(F, [[pair_trace(lm[i], lm[j]) for j in range(n)] for i in range(n)])
        return Subspace(n, gram.kernel())
    # char p: iterated kernels of a -> coeff_{p^i}(charpoly(L_{a b})) on a shrinking ideal
    space = Subspace.full(F, n)
    i = 0
    while F.p ** i <= n and space.dim > 0:
        target_index = n - F.p ** i  # ascending-coefficient index of e_{p^i}
        basis_elems = [tuple(r) for r in space.basis.entries]
        rows = []
        for b in basis_elems:
            row = []
            for a in basis_elems:
                prod = algebra.multiply(a, b)
                cp = poly.charpoly(algebra.left_mult(prod))
                row.append(cp[target_index])
            rows.append(row)
        # row b, column a: the condition matrix; kernel vectors are in the
        # coordinates of the current space's basis
        ker = Matrix(F, rows).kernel()
        new_rows = []
        for kr in ker.entries:
            vec = [F.zero()] * n
            for c, b in zip(kr, basis_elems):
                if c != F.zero():
                    for t in range(n):
                        vec[t] = F.add(vec[t], F.mul(c, b[t]))
            new_rows.append(vec)
        space = Subspace.from_rows(F, n, new_rows)
        i += 1
    return space


def _certify_radical(algebra: AlgebraPresentation, rad: Subspace):
    F = algebra.field
    n = algebra.dim
    # two-sided ideal check
    for b in range(n):
        e_b = algebra.basis_vector(b)
        for row in rad.basis.entries:
            if not rad.contains_vector(algebra.multiply(e_b, row)):
                raise NotComputable("radical candidate is not a left ideal")
            if not rad.contains_vector(algebra.multiply(row, e_b)):
                raise NotComputable("radical candidate is not a right ideal")
    # nilpotency: powers of the subspace must reach zero
    current = rad
    for _ in range(n + 1):
        if current.dim == 0:
            return
        rows = []
        for u in current.basis.entries:
            for v in rad.basis.entries:
                rows.append(algebra.multiply(u, v))
        nxt = Subspace.from_rows(F, n, rows)
        if nxt.dim >= current.dim and nxt.dim > 0 and nxt == current:
            raise NotComputable("radical candidate is not nilpotent")
        current = nxt
    if current.dim != 0:
        raise NotComputable("radical candidate is not nilpotent")


def module_radical(m: ModuleRep, rad: Subspace | None = None) -> Subspace:
    """(rad A) M as a subspace of M."""
    F = m.algebra.field
    if rad is None:
        rad = algebra_radical(m.algebra)
    rows = []
    for r in rad.basis.entries:
        act = m.act(r)
        rows.extend(act.transpose().entries)  # columns of act span r.M
    return Subspace.from_rows(F, m.dim, rows)


def module_socle(m: ModuleRep, rad: Subspace | None = None) -> Subspace:
    """Annihilator of rad A in M."""
    F = m.algebra.field
    if rad is None:
        rad = algebra_radical(m.algebra)
    if rad.dim == 0:
        return Subspace.full(F, m.dim)
    stacked = vstack([m.act(r) for r in rad.basis.entries])
    return Subspace(m.dim, stacked.kernel())


def module_head(m: ModuleRep, rad: Subspace | None = None):
    """(head module, projection morphism)."""
    sub = module_radical(m, rad)
    quot, proj, _ = quotient_rep(m, sub)
    return quot, proj


# -- idempotents and Krull-Schmidt ----------------------------------------------


def lift_idempotent(endo: Morphism) -> Morphism:
    """Newton-lift an approximate idempotent (idempotent modulo a nilpotent
    ideal) to an exact one: e <- 3e^2 - 2e^3 squares the error."""
    e = endo
    for _ in range(64):
        sq = e @ e
        if sq.matrix == e.matrix:
            return e
        e = Morphism(e.source, e.target, sq.matrix.scale(e.matrix.field.of(3))
                     - (sq @ e).matrix.scale(e.matrix.field.of(2)))
    raise NotComputable("idempotent lifting did not converge")


def _idempotent_from_element(E: EndAlgebra, phi: Morphism) -> Morphism | None:
    """Try to turn one endomorphism into a nontrivial exact idempotent."""
    F = E.field
    n = phi.matrix.rows
    ident = Matrix.identity(F, n)
    sq = phi @ phi
    if sq.matrix == phi.matrix and not phi.matrix.is_zero() and phi.matrix != ident:
        return phi
    # Fitting: a singular, non-nilpotent map splits the module
    power = phi.matrix.power(n)
    r = power.rank()
    if 0 < r < n and (power @ power).rank() == r:
        # im(phi^n) is one Fitting summand; build the projection onto it
        img = Subspace.from_rows(F, n, power.transpose().entries)
        ker = Subspace(n, power.kernel())
        basis = vstack([img.basis, ker.basis]).transpose()
        inv = basis.inverse()
        sel = Matrix(F, [[F.one() if (i == j and i < img.dim) else F.zero() for j in range(n)]
                         for i in range(n)])
        return Morphism(phi.source, phi.source, basis @ sel @ inv)
    # coprime factor of the minimal polynomial
    mp = poly.minpoly(phi.matrix)
    e_poly = poly.coprime_split_idempotent(F, mp)
    if e_poly is not None:
        mat = poly.eval_matrix(F, e_poly, phi.matrix)
        if not mat.is_zero() and mat != ident:
            return Morphism(phi.source, phi.source, mat)
    return None


def find_splitting_idempotent(E: EndAlgebra, rng: random.Random) -> Morphism | None:
    """A nontrivial idempotent endomorphism, or None if End(M) is local.

    Follows the radical route: compute S = End/rad; if S is one-dimensional
    the module is indecomposable.  Otherwise hunt an idempotent, sweeping
    deterministically before sampling.
    """
    F = E.field
    if E.dim == 1:
        return None
    rad = algebra_radical(E.presentation)
    if E.dim - rad.dim == 1:
        return None
    candidates = list(E.basis)
    for f, g in itertools.combinations(E.basis, 2):
        candidates.append(f + g)
    for f in E.basis:
        for g in E.basis:
            candidates.append(f @ g)
    for phi in candidates:
        e = _idempotent_from_element(E, phi)
        if e is not None:
            return e
    # seeded random probes over growing coefficient pools
    for attempt in range(400):
        coeffs = [F.sample(rng, span=2 + attempt // 50) for _ in range(E.dim)]
        phi = E.from_coords(coeffs)
        if phi.matrix.is_zero():
            continue
        e = _idempotent_from_element(E, phi)
        if e is not None:
            return e
    raise NotComputable(
        "End(M)/rad has dimension > 1 but no splitting idempotent was found "
        "(is the residue algebra a division algebra over a non-split input?)"
    )


def split_by_idempotent(m: ModuleRep, e: Morphism):
    """M = im(e) + im(1-e) as (module, inclusion, projection) pairs."""
    F = m.algebra.field
    ident = Morphism.identity(m)
    pieces = []
    for endo in (e, ident - e):
        img = Subspace.from_rows(F, m.dim, endo.matrix.transpose().entries)
        sub, incl = submodule_rep(m, img)
        # projection: solve incl . proj = endo (endo acts as identity on its image)
        sol, _ = incl.matrix.solve(endo.matrix)
        pieces.append((sub, incl, Morphism(m, sub, sol)))
    return pieces


def krull_schmidt(m: ModuleRep, rng: random.Random | None = None):
    """Indecomposable summands as a list of (module, inclusion, projection).

    Each returned summand carries the local-endomorphism-ring certificate.
    Inclusions and projections compose to idempotents of m summing to 1.
    """
    rng = rng or random.Random(0)
    if m.dim == 0:
        return []
    E = EndAlgebra(m)
    e = find_splitting_idempotent(E, rng)
    if e is None:
        return [(m, Morphism.identity(m), Morphism.identity(m))]
    out = []
    for sub, incl, proj in split_by_idempotent(m, e):
        if sub.dim == 0:
            continue
        for inner, inner_incl, inner_proj in krull_schmidt(sub, rng):
            out.append((inner, incl @ inner_incl, inner_proj @ proj))
    return out


def _indec_isomorphism(m: ModuleRep, n: ModuleRep) -> Morphism | None:
    """Isomorphism test for modules known indecomposable: some composite
    g . f with f: M -> N, g: N -> M basis morphisms must be invertible."""
    if m.dim != n.dim:
        return None
    fwd = hom_space(m, n)
    bwd = hom_space(n, m)
    for f in fwd:
        for g in bwd:
            if (g @ f).is_invertible():
                return f
    return None


def is_isomorphic(m: ModuleRep, n: ModuleRep, rng: random.Random | None = None) -> Morphism | None:
    """An invertible intertwiner m -> n, or None.

    Random linear combinations of a hom basis are tried first; the complete
    fallback decomposes both modules and matches indecomposable summands.
    """
    rng = rng or random.Random(0)
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return Morphism(m, n, Matrix(m.algebra.field, []))
    fwd = hom_space(m, n)
    if not fwd:
        return None
    F = m.algebra.field
    for f in fwd:
        if f.is_invertible():
            return f
    for _ in range(12):
        acc = Matrix.zeros(F, n.dim, m.dim)
        for f in fwd:
            acc = acc + f.matrix.scale(F.sample(rng))
        cand = Morphism(m, n, acc)
        if cand.is_invertible():
            return cand
    # complete route: Krull-Schmidt on both sides and summand matching
    dec_m = krull_schmidt(m, rng)
    dec_n = list(krull_schmidt(n, rng))
    if len(dec_m) != len(dec_n):
        return None
    total = Matrix.zeros(F, n.dim, m.dim)
    used = [False] * len(dec_n)
    for (sm, incl_m, proj_m) in dec_m:
        found = False
        for idx, (sn, incl_n, proj_n) in enumerate(dec_n):
            if used[idx]:
                continue
            w = _indec_isomorphism(sm, sn)
            if w is not None:
                used[idx] = True
                total = total + (incl_n @ w @ proj_m).matrix
                found = True
                break
        if not found:
            return None
    cand = Morphism(m, n, total)
    return cand if cand.is_invertible() else None


# -- composition multiplicities ------------------------------------------------------


def is_simple(m: ModuleRep, rng: random.Random | None = None) -> bool:
    if m.dim == 0:
        return False
    if module_socle(m).dim != m.dim:
        return False
    return len(krull_schmidt(m, rng)) == 1


def composition_multiplicity(m: ModuleRep, simple: ModuleRep,
                             rng: random.Random | None = None,
                             _checked: bool = False) -> int:
    """[m : simple] by peeling socles and counting hom multiplicities.

    For split algebras dim Hom(simple, socle layer) counts exactly the
    occurrences in that layer; summing over the socle series gives the
    Jordan-Hoelder multiplicity.
    """
    rng = rng or random.Random(0)
    if not _checked and not is_simple(simple, rng):
        raise NotSimple("second argument has a proper nonzero submodule")
    rad = algebra_radical(m.algebra)
    total = 0
    current = m
    while current.dim > 0:
        soc = module_socle(current, rad)
        layer, _ = submodule_rep(current, soc)
        total += len(hom_space(simple, layer))
        current, _, _ = quotient_rep(current, soc)
    return total


# -- simples of the algebra ------------------------------------------------------


class SimpleDatum:
    """One isomorphism class of simple modules with its projective cover data."""

    __slots__ = ("idempotent", "simple", "projective", "head_proj")

    def __init__(self, idempotent, simple, projective, head_proj):
        self.idempotent = idempotent      # coefficient vector in A
        self.simple = simple              # ModuleRep L
        self.projective = projective      # ModuleRep P = A e
        self.head_proj = head_proj        # Morphism P ->> L


def simples_and_split_check(algebra: AlgebraPresentation,
                            rng: random.Random | None = None) -> list[SimpleDatum]:
    """Primitive idempotents, projectives and simples of a split algebra.

    Decomposes the regular module, reads off the orthogonal primitive
    idempotents, groups the projectives by isomorphism and takes heads.
    Raises NotSplit when some simple has endomorphisms beyond scalars.
    Output order is canonical: sorted by the idempotent's first supported
    coordinate, then lexicographically.
    """
    rng = rng or random.Random(0)
    F = algebra.field
    reg = algebra.regular_module()
    rad = algebra_radical(algebra)
    try:
        summands = krull_schmidt(reg, rng)
    except NotComputable as exc:
        # the regular module resisted splitting: a division endomorphism
        # algebra beyond K, i.e. a non-split input
        raise NotSplit(f"algebra appears not to be split over {F!r}: {exc}") from exc
    entries = []
    for (p_mod, incl, proj) in summands:
        endo = incl @ proj
        unit_col = Matrix.column(F, algebra.unit)
        e_vec = tuple(r[0] for r in (endo.matrix @ unit_col).entries)
        entries.append((e_vec, p_mod, incl, proj))
    # group by isomorphism of projectives
    classes: list[list] = []
    for ent in entries:
        placed = False
        for cls in classes:
            if _indec_isomorphism(ent[1], cls[0][1]) is not None:
                cls.append(ent)
                placed = True
                break
        if not placed:
            classes.append([ent])

    def support_key(vec):
        first = next((i for i, x in enumerate(vec) if x != F.zero()), len(vec))
        return (first, tuple(str(x) for x in vec))

    reps = [min(cls, key=lambda ent: support_key(ent[0])) for cls in classes]
    reps.sort(key=lambda ent: support_key(ent[0]))
    out = []
    for (e_vec, p_mod, incl, proj) in reps:
        head, head_proj = module_head(p_mod, rad)
        if len(hom_space(head, head)) != 1:
            raise NotSplit(f"simple of dimension {head.dim} has endomorphism ring larger than K")
        out.append(SimpleDatum(e_vec, head, p_mod, head_proj))
    return out
