"""Highest-weight structure over a finite-dimensional split algebra.

Builds, for a user-supplied partial order on the simples, the standard
modules (largest quotients of the projective covers with lower composition
factors), the costandard modules (dually, through the opposite algebra),
extension groups from minimal projective presentations, and the axiom
verifier that certifies the quasi-hereditary structure: Hom(Delta, Nabla)
one-dimensional on the diagonal and Ext^1 = Ext^2 = 0 throughout.
"""

from __future__ import annotations

import heapq
import random

from .algebra import (
    AlgebraPresentation,
    ModuleRep,
    Morphism,
    direct_sum,
    hom_space,
    module_head,
    module_radical,
    module_socle,
    quotient_rep,
    algebra_radical,
    simples_and_split_check,
    submodule_generated,
    submodule_rep,
)
from .errors import AxiomViolation, InputError, NoFiltration
from .linalg import Matrix, Subspace


class WeightPoset:
    """Finite poset of weight labels: cover relations plus derived data.

    The linear extension is the lexicographically smallest topological sort
    of the cover DAG and is the tie-break order used everywhere downstream.
    """

    def __init__(self, labels, covers):
        self.labels = tuple(str(x) for x in labels)
        if len(set(self.labels)) != len(self.labels):
            raise InputError("duplicate poset labels")
        index = {x: i for i, x in enumerate(self.labels)}
        self.covers = tuple((str(a), str(b)) for a, b in covers)
        for a, b in self.covers:
            if a not in index or b not in index:
                raise InputError(f"cover ({a!r}, {b!r}) mentions unknown label")
            if a == b:
                raise InputError(f"reflexive cover at {a!r}")
        n = len(self.labels)
        below = {x: set() for x in self.labels}   # strictly smaller labels
        adj = {x: set() for x in self.labels}
        for a, b in self.covers:                  # a < b
            adj[a].add(b)
        # transitive closure by repeated sweeps (tiny posets)
        changed = True
        while changed:
            changed = False
            for a, b_set in adj.items():
                for b in list(b_set):
                    if a not in below[b]:
                        below[b].add(a)
                        changed = True
                    for c in below[a]:
                        if c not in below[b]:
                            below[b].add(c)
                            changed = True
        for x in self.labels:
            if x in below[x]:
                raise InputError("cover relations contain a cycle")
        self._below = below
        self.linear_extension = self._smallest_topological_sort(adj)
        self._position = {x: i for i, x in enumerate(self.linear_extension)}

    def _smallest_topological_sort(self, adj):
        indeg = {x: 0 for x in self.labels}
        for a, outs in adj.items():
            for b in outs:
                indeg[b] += 1
        heap = sorted(x for x in self.labels if indeg[x] == 0)
        heapq.heapify(heap)
        out = []
        while heap:
            x = heapq.heappop(heap)
            out.append(x)
            for b in sorted(adj[x]):
                indeg[b] -= 1
                if indeg[b] == 0:
                    heapq.heappush(heap, b)
        if len(out) != len(self.labels):
            raise InputError("cover relations contain a cycle")
        return tuple(out)

    def lt(self, a, b) -> bool:
        return a in self._below[b]

    def leq(self, a, b) -> bool:
        return a == b or self.lt(a, b)

    def not_below(self, b):
        """Labels mu with mu < b false (including b itself)."""
        return [x for x in self.labels if not self.lt(x, b)]

    def position(self, a) -> int:
        return self._position[a]

    def maximal_among(self, subset):
        """Maximal elements of a label subset, tie-broken by latest position
        in the linear extension."""
        subset = list(subset)
        maxima = [x for x in subset if not any(self.lt(x, y) for y in subset)]
        return max(maxima, key=self.position)


class StandardData:
    """Per-label bundle: simple, projective, injective, standard, costandard."""

    __slots__ = ("label", "idempotent", "simple", "projective", "head_proj",
                 "injective", "standard", "standard_proj", "costandard",
                 "costandard_incl")

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw.get(k))


class Registry:
    """All per-label structure for one algebra and one weight poset.

    Labels are matched to simples in the canonical discovery order of
    `simples_and_split_check` (idempotents sorted by first supported
    coordinate), so the i-th poset label names the i-th simple found.
    """

    def __init__(self, algebra: AlgebraPresentation, poset: WeightPoset,
                 rng: random.Random | None = None):
        self.algebra = algebra
        self.poset = poset
        self.rng = rng or random.Random(0)
        self.rad = algebra_radical(algebra)
        simples = simples_and_split_check(algebra, self.rng)
        if len(simples) != len(poset.labels):
            raise InputError(
                f"poset has {len(poset.labels)} labels but the algebra has "
                f"{len(simples)} simple modules")
        self.opposite = algebra.opposite()
        self.data: dict[str, StandardData] = {}
        self._op_projectives = {}
        self._op_standards = {}
        for label, sd in zip(poset.labels, simples):
            self.data[label] = StandardData(
                label=label, idempotent=sd.idempotent, simple=sd.simple,
                projective=sd.projective, head_proj=sd.head_proj)
        self._build_standard_modules()
        self._build_costandard_modules()
        self._hom_cache = {}

    # -- multiplicities via primitive idempotents --------------------------------

    def mult(self, m: ModuleRep, label: str) -> int:
        """[m : L(label)]: the rank of the primitive idempotent's action."""
        return m.act(self.data[label].idempotent).rank()

    def factor_labels(self, m: ModuleRep):
        return [x for x in self.poset.labels if self.mult(m, x) > 0]

    def factors(self, m: ModuleRep):
        return {x: self.mult(m, x) for x in self.poset.labels if self.mult(m, x) > 0}

    # -- construction -------------------------------------------------------------

    def _standardize(self, algebra, proj_of, rad, label):
        """Largest quotient of P(label) whose lower factors sit below label:
        divide by the trace of all P(mu), mu not below label, inside rad P."""
        P = proj_of[label]
        rad_sub = module_radical(P, rad)
        rad_mod, rad_incl = submodule_rep(P, rad_sub)
        gens = []
        for mu in self.poset.not_below(label):
            for f in hom_space(proj_of[mu], rad_mod):
                pushed = rad_incl @ f
                gens.extend(pushed.matrix.transpose().entries)
        U = submodule_generated(P, gens) if gens else Subspace.zero(algebra.field, P.dim)
        quot, proj_morph, _ = quotient_rep(P, U)
        return quot, proj_morph

    def _build_standard_modules(self):
        proj_of = {x: self.data[x].projective for x in self.poset.labels}
        for label in self.poset.labels:
            delta, proj = self._standardize(self.algebra, proj_of, self.rad, label)
            self.data[label].standard = delta
            self.data[label].standard_proj = proj

    def _build_costandard_modules(self):
        """Dualize standard modules of the opposite algebra.

        The opposite algebra shares the basis, the radical subspace, and the
        primitive idempotents; P^op(label) is generated by the same idempotent.
        """
        op = self.opposite
        reg_op = op.regular_module()
        proj_op = {}
        for label in self.poset.labels:
            space = submodule_generated(reg_op, [self.data[label].idempotent])
            proj_op[label], _ = submodule_rep(reg_op, space)
        rad_op = Subspace(self.rad.ambient, self.rad.basis)  # same subset of A
        for label in self.poset.labels:
            self._op_projectives[label] = proj_op[label]
        for label in self.poset.labels:
            delta_op, proj_morph = self._standardize(op, proj_op, rad_op, label)
            self._op_standards[label] = delta_op
            nabla = dualize_plain(self.algebra, delta_op)
            injective = dualize_plain(self.algebra, proj_op[label])
            incl = Morphism(nabla, injective, proj_morph.matrix.transpose())
            self.data[label].injective = injective
            self.data[label].costandard = nabla
            self.data[label].costandard_incl = incl

    # -- simple accessors ----------------------------------------------------------

    def simple(self, label):
        return self.data[label].simple

    def standard(self, label):
        return self.data[label].standard

    def costandard(self, label):
        return self.data[label].costandard

    def projective(self, label):
        return self.data[label].projective

    def injective(self, label):
        return self.data[label].injective

    def hom(self, m, n) -> list[Morphism]:
        # id-keyed memo: only sound for registry-owned modules, which the
        # registry keeps alive; callers with transient modules use hom_space
        key = (id(m), id(n))
        out = self._hom_cache.get(key)
        if out is None:
            out = hom_space(m, n)
            self._hom_cache[key] = out
        return out


def dualize_plain(algebra: AlgebraPresentation, m_op: ModuleRep) -> ModuleRep:
    """Vector-space dual of a module over the opposite algebra, as a module
    over `algebra` (no twisting): action of b is the transpose of b's
    opposite action."""
    action = [a.transpose() for a in m_op.action]
    return ModuleRep(algebra, m_op.dim, action, check=False)


# -- projective presentations and Ext ---------------------------------------------


def projective_cover(reg: Registry, m: ModuleRep):
    """Minimal projective cover (P0, epi P0 -> m, list of labels used).

    Chooses, per label, hom images P(label) -> m whose composites to the
    head are independent, exactly covering the head's isotypic parts.
    """
    F = reg.algebra.field
    head, head_proj = module_head(m, reg.rad)
    blocks = []
    labels_used = []
    covered = Subspace.zero(F, head.dim)
    for label in reg.poset.labels:
        want = reg.mult(head, label)
        if want == 0:
            continue
        P = reg.data[label].projective
        taken = 0
        for f in hom_space(P, m):
            if taken == want:
                break
            to_head = head_proj.matrix @ f.matrix
            candidate = covered.plus(Subspace.from_rows(F, head.dim, to_head.transpose().entries))
            if candidate.dim > covered.dim:
                covered = candidate
                blocks.append((P, f))
                labels_used.append(label)
                taken += 1
    P0, incls, _ = direct_sum([b[0] for b in blocks]) if blocks else (None, [], [])
    if P0 is None:
        zero_mod = ModuleRep(reg.algebra, 0, [Matrix.zeros(F, 0, 0)] * reg.algebra.dim, check=False)
        return zero_mod, Morphism(zero_mod, m, Matrix.zeros(F, m.dim, 0)), []
    total = Matrix.zeros(F, m.dim, P0.dim)
    offset = 0
    for (P, f) in blocks:
        total = total + f.matrix @ _projection_block(F, P0.dim, offset, P.dim)
        offset += P.dim
    pi = Morphism(P0, m, total)
    return P0, pi, labels_used


def _projection_block(F, total_dim, offset, dim):
    rows = [[F.one() if c == offset + r else F.zero() for c in range(total_dim)]
            for r in range(dim)]
    return Matrix(F, rows, cols=total_dim)


def syzygy(reg: Registry, m: ModuleRep):
    """(Omega, inclusion Omega -> P0, P0, epi P0 -> m)."""
    P0, pi, _ = projective_cover(reg, m)
    ker = pi.kernel()
    omega, incl = submodule_rep(P0, ker)
    return omega, incl, P0, pi


class ExtClass:
    """One extension class 0 -> N -> E -> M -> 0 with its cocycle."""

    __slots__ = ("cocycle", "middle", "incl", "proj")

    def __init__(self, cocycle, middle, incl, proj):
        self.cocycle = cocycle
        self.middle = middle
        self.incl = incl
        self.proj = proj


def ext1_with_classes(reg: Registry, m: ModuleRep, n: ModuleRep):
    """(dimension, cocycle basis, builder) of Ext^1(m, n).

    Cocycles are morphisms Omega(m) -> n modulo restrictions of morphisms
    P0 -> n; builder(cocycle) materializes the middle term with its
    inclusion and projection.
    """
    F = reg.algebra.field
    omega, incl_omega, P0, pi = syzygy(reg, m)
    homs_omega = hom_space(omega, n)
    if not homs_omega:
        return 0, [], None
    restricted = [h @ incl_omega for h in hom_space(P0, n)]
    image_rows = [r.matrix.flat() for r in restricted]
    img = Subspace.from_rows(F, n.dim * omega.dim, image_rows)
    chosen = []
    span = img
    for h in homs_omega:
        cand = span.plus(Subspace.from_rows(F, n.dim * omega.dim, [h.matrix.flat()]))
        if cand.dim > span.dim:
            span = cand
            chosen.append(h)

    def build(cocycles):
        return _extension_middle(reg, m, n, omega, incl_omega, P0, pi, cocycles)

    return len(chosen), chosen, build


def ext1_dim(reg: Registry, m: ModuleRep, n: ModuleRep) -> int:
    return ext1_with_classes(reg, m, n)[0]


def ext2_dim(reg: Registry, m: ModuleRep, n: ModuleRep) -> int:
    omega, _, _, _ = syzygy(reg, m)
    if omega.dim == 0:
        return 0
    return ext1_dim(reg, omega, n)


def _extension_middle(reg, m, n, omega, incl_omega, P0, pi, cocycles):
    """Middle term of 0 -> n -> E -> m^d -> 0 realizing the given cocycles,
    glued as a pushout of (Omega)^d -> P0^d along (psi_1, ..., psi_d)."""
    F = reg.algebra.field
    d = len(cocycles)
    big, incls, projs = direct_sum([n] + [P0] * d)
    # the graph of (psi, -incl_omega) inside n + P0^d, one block per cocycle
    rows = []
    for idx, psi in enumerate(cocycles):
        col_n = incls[0].matrix @ psi.matrix        # big.dim x omega.dim
        col_p = incls[idx + 1].matrix @ incl_omega.matrix
        graph = col_n - col_p
        rows.extend(graph.transpose().entries)
    W = Subspace.from_rows(F, big.dim, rows)
    E, proj_w, _ = quotient_rep(big, W)
    incl_n = proj_w @ incls[0]
    # projection E -> m^d induced by pi on each block
    msum, m_incls, _ = direct_sum([m] * d)
    to_m = Matrix.zeros(F, msum.dim, big.dim)
    for idx in range(d):
        to_m = to_m + m_incls[idx].matrix @ pi.matrix @ projs[idx + 1].matrix
    # factor through the quotient: solve proj_m . proj_w = to_m
    sol, _ = proj_w.matrix.transpose().solve(to_m.transpose())
    proj_m = Morphism(E, msum, sol.transpose())
    return E, incl_n, proj_m, msum


def ext1_witness_factor(reg: Registry, m: ModuleRep, n: ModuleRep):
    """A composition factor label of m witnessing Ext^1(m, n) != 0, or None."""
    if ext1_dim(reg, m, n) == 0:
        return None
    for label in reg.factor_labels(m):
        if ext1_dim(reg, reg.simple(label), n) > 0:
            return label
    return None


# -- axiom verification -------------------------------------------------------------


class VerificationReport:
    def __init__(self):
        self.checks = []          # (name, label, other, ok, detail)
        self.first_violation = None

    def record(self, name, label, other, ok, detail=""):
        self.checks.append((name, label, other, ok, detail))
        if not ok and self.first_violation is None:
            self.first_violation = (name, label, other, detail)

    @property
    def ok(self):
        return self.first_violation is None

    def raise_if_failed(self):
        if not self.ok:
            name, label, other, detail = self.first_violation
            raise AxiomViolation(label, other, name, detail)


def verify_standard_category(reg: Registry) -> VerificationReport:
    """Certify the highest-weight axioms with witnesses.

    Checks dim Hom(Delta(l), Nabla(m)) = delta_{lm} and the vanishing of
    Ext^1 and Ext^2 between all standard/costandard pairs, plus structural
    diagnostics: one-dimensional endomorphism rings, highest-weight factor
    bounds, and the directionality of extensions between simples and
    between (co)standard modules.
    """
    rep = VerificationReport()
    poset = reg.poset
    for lam in poset.labels:
        dat = reg.data[lam]
        head = module_head(dat.standard, reg.rad)[0]
        rep.record("head_of_standard", lam, lam,
                   reg.mult(dat.standard, lam) == 1
                   and head.dim == dat.simple.dim
                   and reg.mult(head, lam) == 1)
        soc = submodule_rep(dat.costandard, module_socle(dat.costandard, reg.rad))[0]
        rep.record("socle_of_costandard", lam, lam,
                   reg.mult(dat.costandard, lam) == 1
                   and soc.dim == dat.simple.dim
                   and reg.mult(soc, lam) == 1)
        for mu in reg.factor_labels(dat.standard):
            rep.record("standard_highest_weight", lam, mu, poset.leq(mu, lam))
        for mu in reg.factor_labels(dat.costandard):
            rep.record("costandard_highest_weight", lam, mu, poset.leq(mu, lam))
        for (mod, tag) in ((dat.simple, "simple"), (dat.standard, "standard"),
                           (dat.costandard, "costandard")):
            rep.record(f"endo_{tag}_is_scalar", lam, lam, len(reg.hom(mod, mod)) == 1)
    for lam in poset.labels:
        for mu in poset.labels:
            want = 1 if lam == mu else 0
            d = len(reg.hom(reg.standard(lam), reg.costandard(mu)))
            rep.record("hom_standard_costandard", lam, mu, d == want,
                       f"dim {d}, expected {want}")
            e1 = ext1_dim(reg, reg.standard(lam), reg.costandard(mu))
            rep.record("ext1_standard_costandard", lam, mu, e1 == 0, f"dim {e1}")
            e2 = ext2_dim(reg, reg.standard(lam), reg.costandard(mu))
            rep.record("ext2_standard_costandard", lam, mu, e2 == 0, f"dim {e2}")
    # diagnostics mirroring the directional extension constraints: extensions
    # between simples need comparable labels; ext from Nabla(mu) to Nabla(lam)
    # forces mu > lam, and (dually) from Delta(mu) to Delta(lam) forces mu < lam
    for lam in poset.labels:
        for mu in poset.labels:
            if ext1_dim(reg, reg.simple(mu), reg.simple(lam)) > 0:
                rep.record("ext1_simples_comparable", lam, mu,
                           poset.lt(mu, lam) or poset.lt(lam, mu))
            if ext1_dim(reg, reg.costandard(mu), reg.costandard(lam)) > 0:
                rep.record("ext1_costandard_direction", lam, mu, poset.lt(lam, mu))
            if ext1_dim(reg, reg.standard(mu), reg.standard(lam)) > 0:
                rep.record("ext1_standard_direction", lam, mu, poset.lt(mu, lam))
    return rep


# -- filtrations ------------------------------------------------------------------


class FiltrationWitness:
    """Ascending chain 0 = N_0 < ... < N_k = module with identified factors.

    chain holds Subspaces of the module; factor_labels[i] names the factor
    N_{i+1}/N_i and factor_isos[i] is an invertible morphism from that
    subquotient onto the registry's standard or costandard module.
    """

    __slots__ = ("module", "kind", "chain", "factor_labels", "factor_isos")

    def __init__(self, module, kind, chain, factor_labels, factor_isos):
        self.module = module
        self.kind = kind
        self.chain = chain
        self.factor_labels = factor_labels
        self.factor_isos = factor_isos


def subquotient(m: ModuleRep, big: Subspace, small: Subspace) -> ModuleRep:
    """The module big/small for nested invariant subspaces of m."""
    F = m.algebra.field
    big_mod, big_incl = submodule_rep(m, big)
    if small.dim == 0:
        return big_mod
    inner, _ = big_incl.matrix.solve(small.basis.transpose())
    inner_space = Subspace.from_rows(F, big_mod.dim, inner.transpose().entries)
    return quotient_rep(big_mod, inner_space)[0]


def _identify_factors(reg: Registry, m: ModuleRep, chain, labels, targets):
    """Isomorphism witnesses for each chain subquotient against its target."""
    isos = []
    for i, lam in enumerate(labels):
        factor = subquotient(m, chain[i + 1], chain[i])
        from .algebra import is_isomorphic

        w = is_isomorphic(factor, targets(lam), reg.rng)
        if w is None:
            raise NoFiltration(lam, "(chain factor failed identification)")
        isos.append(w)
    return isos


def delta_filtration(reg: Registry, m: ModuleRep) -> FiltrationWitness:
    """Explicit standard filtration of m, or NoFiltration.

    Membership is decided by the extension criterion (vanishing against all
    costandard modules); the chain is then peeled from the top: an
    epimorphism onto the standard module at a maximal head label always
    exists and its kernel is again filtered.
    """
    for lam in reg.poset.labels:
        if ext1_dim(reg, m, reg.costandard(lam)) != 0:
            raise NoFiltration(lam, "(extension against costandard does not vanish)")
    chain, labels = _delta_chain(reg, m)
    chain = [Subspace.zero(reg.algebra.field, m.dim)] + chain
    isos = _identify_factors(reg, m, chain, labels, reg.standard)
    return FiltrationWitness(m, "standard", chain, labels, isos)


def _peel_candidates(poset, labels):
    """Label order for peeling: the maximal one first, then the rest by
    decreasing linear-extension position.  A peel at the smallest head label
    always succeeds on a filtered module, so the loop terminates."""
    first = poset.maximal_among(labels)
    rest = sorted((x for x in labels if x != first),
                  key=poset.position, reverse=True)
    return [first] + rest


def _delta_chain(reg: Registry, m: ModuleRep):
    """Ascending subspaces of m (zero excluded, full included) and labels."""
    F = reg.algebra.field
    if m.dim == 0:
        return [], []
    head, _ = module_head(m, reg.rad)
    epi = None
    lam = None
    for cand in _peel_candidates(reg.poset, reg.factor_labels(head)):
        delta = reg.standard(cand)
        delta_head_proj = module_head(delta, reg.rad)[1]
        for f in hom_space(m, delta):
            # nonzero composite to the simple head makes f surjective
            if not (delta_head_proj @ f).is_zero():
                epi, lam = f, cand
                break
        if epi is not None:
            break
    if epi is None:
        raise NoFiltration(reg.poset.maximal_among(reg.factor_labels(head)),
                           "(no epimorphism onto a standard module)")
    delta = reg.standard(lam)
    assert epi.is_surjective()
    ker_space = epi.kernel()
    ker_mod, ker_incl = submodule_rep(m, ker_space)
    sub_chain, sub_labels = _delta_chain(reg, ker_mod)
    chain = [Subspace.from_rows(F, m.dim, (s.basis @ ker_incl.matrix.transpose()).entries)
             for s in sub_chain[:-1]]
    if sub_chain:
        chain.append(ker_space)
    chain.append(Subspace.full(F, m.dim))
    return chain, sub_labels + [lam]


def nabla_filtration(reg: Registry, n: ModuleRep) -> FiltrationWitness:
    """Explicit costandard filtration of n, or NoFiltration (dual peel)."""
    for lam in reg.poset.labels:
        if ext1_dim(reg, reg.standard(lam), n) != 0:
            raise NoFiltration(lam, "(extension from standard does not vanish)")
    chain, labels = _nabla_chain(reg, n)
    chain = [Subspace.zero(reg.algebra.field, n.dim)] + chain
    isos = _identify_factors(reg, n, chain, labels, reg.costandard)
    return FiltrationWitness(n, "costandard", chain, labels, isos)


def _nabla_chain(reg: Registry, n: ModuleRep):
    F = reg.algebra.field
    if n.dim == 0:
        return [], []
    soc_mod, _ = submodule_rep(n, module_socle(n, reg.rad))
    mono = None
    lam = None
    for cand in _peel_candidates(reg.poset, reg.factor_labels(soc_mod)):
        nabla = reg.costandard(cand)
        nabla_soc_incl = submodule_rep(nabla, module_socle(nabla, reg.rad))[1]
        for f in hom_space(nabla, n):
            # nonzero restriction to the simple socle makes f injective
            if not (f @ nabla_soc_incl).is_zero():
                mono, lam = f, cand
                break
        if mono is not None:
            break
    if mono is None:
        raise NoFiltration(reg.poset.maximal_among(reg.factor_labels(soc_mod)),
                           "(no monomorphism from a costandard module)")
    nabla = reg.costandard(lam)
    assert mono.is_injective()
    img = mono.image()
    quot, qproj, _ = quotient_rep(n, img)
    sub_chain, sub_labels = _nabla_chain(reg, quot)
    chain = [img] + [_preimage(F, qproj.matrix, s) for s in sub_chain]
    return chain, [lam] + sub_labels


def _preimage(F, proj_matrix: Matrix, s: Subspace) -> Subspace:
    """Preimage of a subspace under a surjection, as a subspace upstairs."""
    from .linalg import hstack

    amb = proj_matrix.cols
    if s.dim == 0:
        return Subspace(amb, proj_matrix.kernel())
    ker = hstack([proj_matrix, -s.basis.transpose()]).kernel()
    rows = [r[:amb] for r in ker.entries]
    return Subspace.from_rows(F, amb, rows)


def filtration_multiplicity(reg: Registry, x: ModuleRep, label: str, kind: str) -> int:
    """(x : Delta(label)) or (x : Nabla(label)) by the hom-dimension formula."""
    if kind == "standard":
        return len(hom_space(x, reg.costandard(label)))
    if kind == "costandard":
        return len(hom_space(reg.standard(label), x))
    raise InputError(f"unknown filtration kind {kind!r}")
