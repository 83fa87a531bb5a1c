"""Standard bases of endomorphism algebras of tilting modules.

Hom spaces carry a filtration by the labels occurring in images of
morphisms; factorizing through the indecomposable tilting modules produces
a basis of End(T) fibered over the weight poset whose multiplication is
triangular with respect to that filtration.  This module builds the basis
for seeded lift choices, computes the structure coefficients, and verifies
the fibered-multiplication axioms by exact residual membership.
"""

from __future__ import annotations

import random

from .algebra import ModuleRep, Morphism, hom_space
from .errors import (
    AxiomViolation,
    BasisFailure,
    InconsistentSystem,
    NoLift,
    TheoremViolation,
)
from .highest_weight import Registry
from .linalg import Matrix, Subspace
from .tilting import TiltingRegistry


def phi_weight(reg: Registry, f: Morphism, label: str) -> int:
    """Multiplicity of the simple at `label` in the image of f.

    Equals the rank of (primitive idempotent action) . f, since the
    idempotent picks out exactly that isotypic layer in a split algebra.
    """
    return (f.target.act(reg.data[label].idempotent) @ f.matrix).rank()


def hom_filtration_oracle(reg: Registry, m: ModuleRep, n: ModuleRep, label: str,
                          homs: list[Morphism] | None = None) -> Subspace:
    """Hom(m, n)^{<= label} by brute membership: the subspace of morphisms
    whose image avoids all simples at labels not below-or-equal `label`.

    Image avoidance of the simple at mu is the linear condition
    e_mu . f = 0, so the subspace is a kernel computation in the
    coordinates of the canonical hom basis.
    """
    F = reg.algebra.field
    if homs is None:
        homs = hom_space(m, n)
    h = len(homs)
    if h == 0:
        return Subspace.zero(F, 0)
    rows = []
    for mu in reg.poset.labels:
        if reg.poset.leq(mu, label):
            continue
        e_act = n.act(reg.data[mu].idempotent)
        cols = [(e_act @ f.matrix).flat() for f in homs]
        for entry_idx in range(len(cols[0])):
            rows.append([col[entry_idx] for col in cols])
    if not rows:
        return Subspace.full(F, h)
    return Subspace(h, Matrix(F, rows).kernel())


class HomFiltration:
    """All the subspaces Hom(m, n)^{<= label} at once, in the coordinates of
    the canonical hom basis; monotone in the poset order by construction."""

    def __init__(self, m: ModuleRep, n: ModuleRep, homs, spaces):
        self.source = m
        self.target = n
        self.homs = homs
        self.spaces = spaces

    def space(self, label) -> Subspace:
        return self.spaces[label]


def hom_filtration(reg: Registry, m: ModuleRep, n: ModuleRep,
                   datum: "StandardBasisDatum | None" = None) -> HomFiltration:
    """The label filtration of Hom(m, n).

    With a basis datum for End(m) = End(n) available, each layer is the span
    of the fibers at labels below; otherwise the membership conditions are
    solved directly.  The two routes agree (tested exhaustively at small
    dimensions).
    """
    homs = hom_space(m, n)
    spaces = {}
    for label in reg.poset.labels:
        if datum is not None:
            spaces[label] = hom_filtration_from_datum(datum, label, homs)
        else:
            spaces[label] = hom_filtration_oracle(reg, m, n, label, homs)
    return HomFiltration(m, n, homs, spaces)


def _solve_lift(F, candidates, compose_to, target, rng):
    """Representative x with compose_to(x) = target among a hom space.

    candidates: basis of the lift space; compose_to maps a candidate matrix
    to the constrained composite.  Free variables of the solve are zero for
    the canonical lift (rng None) and PRNG-sampled otherwise.
    """
    if not candidates:
        raise NoLift("lift space is empty")
    cols = Matrix(F, [compose_to(c.matrix).flat() for c in candidates]).transpose()
    try:
        part, null = cols.solve(Matrix.column(F, target.flat()))
    except InconsistentSystem as exc:  # upstream axiom violation
        raise NoLift(f"no factorization exists: {exc}") from exc
    coeffs = [part.entries[t][0] for t in range(len(candidates))]
    if rng is not None:
        for null_row in null.entries:
            c = F.sample(rng)
            if c != F.zero():
                coeffs = [F.add(a, F.mul(c, b)) for a, b in zip(coeffs, null_row)]
    acc = Matrix.zeros(F, candidates[0].matrix.rows, candidates[0].matrix.cols)
    for c, cand in zip(coeffs, candidates):
        if c != F.zero():
            acc = acc + cand.matrix.scale(c)
    return acc


def lift_through_tilting(reg: Registry, tilt: TiltingRegistry, f: Morphism,
                         label: str, rng: random.Random | None = None) -> Morphism:
    """f-hat: M -> T(label) with pi . f-hat = f, for f: M -> Nabla(label)."""
    triple = tilt.triple(label)
    F = reg.algebra.field
    candidates = hom_space(f.source, triple.module)
    mat = _solve_lift(F, candidates, lambda m: triple.pi.matrix @ m, f.matrix, rng)
    out = Morphism(f.source, triple.module, mat)
    if (triple.pi @ out).matrix != f.matrix:
        raise TheoremViolation("lift does not reproduce the morphism")
    return out


def extend_through_tilting(reg: Registry, tilt: TiltingRegistry, g: Morphism,
                           label: str, rng: random.Random | None = None) -> Morphism:
    """g-hat: T(label) -> N with g-hat . i = g, for g: Delta(label) -> N."""
    triple = tilt.triple(label)
    F = reg.algebra.field
    candidates = hom_space(triple.module, g.target)
    mat = _solve_lift(F, candidates, lambda m: m @ triple.i.matrix, g.matrix, rng)
    out = Morphism(triple.module, g.target, mat)
    if (out @ triple.i).matrix != g.matrix:
        raise TheoremViolation("extension does not reproduce the morphism")
    return out


class StandardBasisDatum:
    """The fibered basis {c_ij at each label} of End(T) with all choices kept.

    Per support label: G (Delta -> T basis), F (T -> Nabla basis), their
    lifts Ghat (T(label) -> T) and Fhat (T -> T(label)), and the cell
    matrix of composites c[i][j] = Ghat[i] . Fhat[j].  `order` lists the
    support along the linear extension; coords() expresses any endomorphism
    in the cell basis.
    """

    def __init__(self, tilt: TiltingRegistry, module: ModuleRep, seed: int):
        self.tilt = tilt
        self.reg = tilt.base
        self.module = module
        self.seed = seed
        self.order: list[str] = []
        self.G = {}
        self.F = {}
        self.Ghat = {}
        self.Fhat = {}
        self.cells = {}
        self._flat_solver = None
        self._index = []        # ordered (label, i, j)
        self._lower_solvers = {}

    # -- assembly -------------------------------------------------------------

    def coords(self, matrix: Matrix):
        sol, _ = self._flat_solver.solve(Matrix.column(self.reg.algebra.field, matrix.flat()))
        return tuple(r[0] for r in sol.entries)

    def index(self):
        return tuple(self._index)

    def cell(self, label, i, j) -> Morphism:
        return self.cells[label][i][j]

    def fiber_sizes(self):
        return {lam: (len(self.G[lam]), len(self.F[lam])) for lam in self.order}

    def dim(self):
        return len(self._index)

    def lower_span_solver(self, label):
        """Membership oracle for the span of fibers at labels strictly below."""
        return self._lower_solvers[label]

    def in_lower_span(self, label, matrix: Matrix) -> bool:
        solver = self._lower_solvers[label]
        F = self.reg.algebra.field
        if solver is None:
            return matrix.is_zero()
        try:
            solver.solve(Matrix.column(F, matrix.flat()))
            return True
        except InconsistentSystem:
            return False


def build_standard_basis(tilt: TiltingRegistry, module: ModuleRep, seed: int = 0,
                         fiber_trials: int = 8) -> StandardBasisDatum:
    """Construct and certify the fibered basis of End(module).

    G and F are the canonical hom bases; lifts are canonical for seed 0 and
    PRNG-perturbed otherwise.  Certification: the composites are linearly
    independent, count dim End(module), and every sampled nonzero element
    of a fiber's span has nonzero image multiplicity at its own label.
    """
    reg = tilt.base
    F_field = reg.algebra.field
    datum = StandardBasisDatum(tilt, module, seed)
    rng = None if seed == 0 else random.Random(seed)
    fiber_rng = random.Random(seed * 7919 + 1)
    for lam in reg.poset.linear_extension:
        G = hom_space(reg.standard(lam), module)
        Fs = hom_space(module, reg.costandard(lam))
        if not G or not Fs:
            continue
        datum.order.append(lam)
        datum.G[lam] = G
        datum.F[lam] = Fs
        datum.Ghat[lam] = [extend_through_tilting(reg, tilt, g, lam, rng) for g in G]
        datum.Fhat[lam] = [lift_through_tilting(reg, tilt, f, lam, rng) for f in Fs]
        datum.cells[lam] = [[gh @ fh for fh in datum.Fhat[lam]] for gh in datum.Ghat[lam]]
        for i in range(len(G)):
            for j in range(len(Fs)):
                datum._index.append((lam, i, j))
    finalize_datum(datum, fiber_trials, fiber_rng)
    return datum


def finalize_datum(datum: StandardBasisDatum, fiber_trials: int = 8,
                   fiber_rng: random.Random | None = None):
    """Certify an assembled datum and install its solvers.

    Checks the fiber count against dim End, linear independence of the
    composites, and the image-weight property of every fiber; builds the
    coordinate solver and per-label lower-span membership solvers.
    """
    reg = datum.reg
    F_field = reg.algebra.field
    module = datum.module
    fiber_rng = fiber_rng or random.Random(datum.seed * 7919 + 1)
    end_dim = len(hom_space(module, module))
    if len(datum._index) != end_dim:
        raise BasisFailure(datum.order[-1] if datum.order else "",
                           f"fiber count {len(datum._index)} != dim End = {end_dim}")
    flat_rows = [datum.cell(lam, i, j).matrix.flat() for (lam, i, j) in datum._index]
    stacked = Matrix(F_field, flat_rows)
    if stacked.rank() != len(datum._index):
        raise BasisFailure(datum.order[-1], "cell composites are linearly dependent")
    datum._flat_solver = stacked.transpose()
    # lower-span membership solvers
    for lam in datum.order:
        lower = [datum.cell(mu, i, j).matrix.flat()
                 for (mu, i, j) in datum._index if reg.poset.lt(mu, lam)]
        datum._lower_solvers[lam] = Matrix(F_field, lower).transpose() if lower else None
    _certify_fiber_weights(datum, fiber_trials, fiber_rng)
    return datum


def _certify_fiber_weights(datum: StandardBasisDatum, trials: int, rng: random.Random):
    """Every basis composite, and sampled nonzero span elements, must carry
    nonzero image multiplicity at the fiber's own label."""
    reg = datum.reg
    F = reg.algebra.field
    for lam in datum.order:
        fiber = [datum.cell(lam, i, j) for i in range(len(datum.G[lam]))
                 for j in range(len(datum.F[lam]))]
        for c in fiber:
            if phi_weight(reg, c, lam) == 0:
                raise BasisFailure(lam, "basis composite has zero weight at its own label")
        for _ in range(trials):
            acc = Matrix.zeros(F, datum.module.dim, datum.module.dim)
            for c in fiber:
                acc = acc + c.matrix.scale(F.sample(rng))
            if not acc.is_zero():
                m = Morphism(datum.module, datum.module, acc)
                if phi_weight(reg, m, lam) == 0:
                    raise BasisFailure(lam, "span sample has zero weight at its own label")


def hom_filtration_from_datum(datum: StandardBasisDatum, label: str,
                              homs: list[Morphism]) -> Subspace:
    """Hom^{<= label} as the span of fibers at labels <= label, expressed in
    the coordinates of the given hom basis."""
    reg = datum.reg
    F = reg.algebra.field
    h = len(homs)
    solver = Matrix(F, [f.matrix.flat() for f in homs]).transpose()
    rows = []
    for (mu, i, j) in datum.index():
        if reg.poset.leq(mu, label):
            sol, _ = solver.solve(Matrix.column(F, datum.cell(mu, i, j).matrix.flat()))
            rows.append([sol.entries[t][0] for t in range(h)])
    return Subspace.from_rows(F, h, rows)


# -- structure coefficients and the fibered-multiplication axioms -----------------


class StructureCoefficients:
    """Expansion matrices of one endomorphism acting on each fiber.

    left[label][k][i]: coefficient of G_k in phi . G_i;
    right[label][l][j]: coefficient of F_l in F_j . phi.
    """

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right


def structure_coefficients(datum: StandardBasisDatum, phi: Morphism) -> StructureCoefficients:
    reg = datum.reg
    F = reg.algebra.field
    left = {}
    right = {}
    for lam in datum.order:
        G = datum.G[lam]
        solver_g = Matrix(F, [g.matrix.flat() for g in G]).transpose()
        cols = []
        for g in G:
            target = (phi @ g).matrix
            sol, _ = solver_g.solve(Matrix.column(F, target.flat()))
            cols.append([sol.entries[t][0] for t in range(len(G))])
        left[lam] = Matrix(F, list(map(list, zip(*cols))), cols=len(G)) if G else Matrix(F, [])
        Fs = datum.F[lam]
        solver_f = Matrix(F, [f.matrix.flat() for f in Fs]).transpose()
        cols = []
        for f in Fs:
            target = (f @ phi).matrix
            sol, _ = solver_f.solve(Matrix.column(F, target.flat()))
            cols.append([sol.entries[t][0] for t in range(len(Fs))])
        right[lam] = Matrix(F, list(map(list, zip(*cols))), cols=len(Fs)) if Fs else Matrix(F, [])
    return StructureCoefficients(left, right)


def verify_standard_axioms(datum: StandardBasisDatum, trials: int = 100,
                           rng: random.Random | None = None):
    """Check the two fibered-multiplication congruences on all basis elements
    plus `trials` random endomorphisms; residuals must lie in the span of
    strictly lower fibers.  Returns a summary dict; raises AxiomViolation
    with a witness on failure.
    """
    reg = datum.reg
    F = reg.algebra.field
    rng = rng or random.Random(20200 + datum.seed)
    probes = [datum.cell(lam, i, j) for (lam, i, j) in datum.index()]
    for _ in range(trials):
        acc = Matrix.zeros(F, datum.module.dim, datum.module.dim)
        for (lam, i, j) in datum.index():
            acc = acc + datum.cell(lam, i, j).matrix.scale(F.sample(rng))
        probes.append(Morphism(datum.module, datum.module, acc))
    checked = 0
    for phi in probes:
        sc = structure_coefficients(datum, phi)
        for lam in datum.order:
            n_i, n_j = len(datum.G[lam]), len(datum.F[lam])
            r_left = sc.left[lam]
            r_right = sc.right[lam]
            for i in range(n_i):
                for j in range(n_j):
                    c_ij = datum.cell(lam, i, j)
                    acc = (phi @ c_ij).matrix
                    for k in range(n_i):
                        coeff = r_left.entries[k][i]
                        if coeff != F.zero():
                            acc = acc - datum.cell(lam, k, j).matrix.scale(coeff)
                    if not datum.in_lower_span(lam, acc):
                        raise AxiomViolation(lam, (i, j), "fibered_left_multiplication",
                                             "residual escapes the lower fiber span")
                    acc = (c_ij @ phi).matrix
                    for l in range(n_j):
                        coeff = r_right.entries[l][j]
                        if coeff != F.zero():
                            acc = acc - datum.cell(lam, i, l).matrix.scale(coeff)
                    if not datum.in_lower_span(lam, acc):
                        raise AxiomViolation(lam, (i, j), "fibered_right_multiplication",
                                             "residual escapes the lower fiber span")
                    checked += 1
    return {"probes": len(probes), "congruences_checked": 2 * checked, "ok": True}


class OppositeDatum:
    """The same cells read in the opposite algebra: index sets transpose and
    the two fibered congruences exchange roles.

    With multiplication a * b := b . a, the left congruence for the
    opposite datum is literally the right congruence of the base datum
    under (i, j) -> (j, i), and vice versa; verify() replays both against
    the reversed composition to certify this identification.
    """

    def __init__(self, datum: StandardBasisDatum):
        self.base = datum

    def index(self):
        return tuple((lam, j, i) for (lam, i, j) in self.base.index())

    def cell(self, label, i, j):
        return self.base.cell(label, j, i)

    def fiber_sizes(self):
        return {lam: (j, i) for lam, (i, j) in self.base.fiber_sizes().items()}

    def opposite(self):
        return self.base

    def verify(self, trials: int = 50, rng: random.Random | None = None):
        """Fibered axioms for reversed composition: for phi in E^op,
        phi * c'_ji = c_ij . phi expands with right-coefficients r(j, phi)
        independent of i, and symmetrically; residuals in lower fibers."""
        base = self.base
        reg = base.reg
        F = reg.algebra.field
        rng = rng or random.Random(31337 + base.seed)
        probes = [base.cell(lam, i, j) for (lam, i, j) in base.index()]
        for _ in range(trials):
            acc = Matrix.zeros(F, base.module.dim, base.module.dim)
            for (lam, i, j) in base.index():
                acc = acc + base.cell(lam, i, j).matrix.scale(F.sample(rng))
            probes.append(Morphism(base.module, base.module, acc))
        for phi in probes:
            sc = structure_coefficients(base, phi)
            for lam in base.order:
                n_i, n_j = len(base.G[lam]), len(base.F[lam])
                for j in range(n_j):
                    for i in range(n_i):
                        # phi * c'_{ji} == sum_l r_l(j, phi) c'_{li} mod lower
                        acc = (base.cell(lam, i, j) @ phi).matrix
                        for l in range(n_j):
                            coeff = sc.right[lam].entries[l][j]
                            if coeff != F.zero():
                                acc = acc - base.cell(lam, i, l).matrix.scale(coeff)
                        if not base.in_lower_span(lam, acc):
                            raise AxiomViolation(lam, (j, i), "opposite_left_multiplication",
                                                 "residual escapes the lower fiber span")
                        # c'_{ji} * phi == sum_k r_k(phi, i) c'_{jk} mod lower
                        acc = (phi @ base.cell(lam, i, j)).matrix
                        for k in range(n_i):
                            coeff = sc.left[lam].entries[k][i]
                            if coeff != F.zero():
                                acc = acc - base.cell(lam, k, j).matrix.scale(coeff)
                        if not base.in_lower_span(lam, acc):
                            raise AxiomViolation(lam, (j, i), "opposite_right_multiplication",
                                                 "residual escapes the lower fiber span")
        return {"probes": len(probes), "ok": True}


def change_of_basis_unitriangular(datum_a: StandardBasisDatum,
                                  datum_b: StandardBasisDatum) -> bool:
    """Certify that datum_b's cells expand over datum_a's as the identity
    plus strictly-lower-fiber corrections (same G/F bases, different lifts).
    """
    reg = datum_a.reg
    F = reg.algebra.field
    if datum_a.index() != datum_b.index():
        return False
    idx = datum_a.index()
    for pos, (lam, i, j) in enumerate(idx):
        coords = datum_a.coords(datum_b.cell(lam, i, j).matrix)
        for pos2, coeff in enumerate(coords):
            mu = idx[pos2][0]
            if pos2 == pos:
                if coeff != F.one():
                    return False
            elif coeff != F.zero() and not reg.poset.lt(mu, lam):
                return False
    return True
