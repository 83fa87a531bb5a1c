"""Module dualities, fixed points, and cellular structure on End(T).

The duality twists the vector-space dual by an algebra anti-involution; on
matrices it transposes actions and morphisms, and the double-dual
identification is the identity in coordinates.  A self-dual indecomposable
becomes a fixed point by symmetrizing its associative bilinear form (away
from characteristic 2); fixed points make the induced anti-automorphism of
End(T) an involution, and choosing the projection-side basis as the dual of
the embedding-side basis makes the standard basis cellular: the involution
transposes each fiber and the Gram matrices come out symmetric.
"""

from __future__ import annotations

import random

from .algebra import (
    AlgebraPresentation,
    ModuleRep,
    Morphism,
    direct_sum,
    hom_space,
    is_isomorphic,
)
from .errors import (
    CellularityFailure,
    InputError,
    NotInvolutive,
    NotStandardDuality,
    SymmetrizationDegenerate,
)
from .linalg import Matrix, block_diag
from .highest_weight import Registry
from .standard_basis import (
    StandardBasisDatum,
    extend_through_tilting,
    finalize_datum,
)
from .tilting import TiltingRegistry, tilting_support


class AntiInvolution:
    """An algebra anti-involution given by its matrix on the basis.

    Columns are images: tau(b_i) = sum_j matrix[j][i] b_j.  The constructor
    verifies anti-multiplicativity, involutivity and unit preservation.
    """

    def __init__(self, algebra: AlgebraPresentation, matrix: Matrix):
        self.algebra = algebra
        self.matrix = matrix
        n = algebra.dim
        if matrix.rows != n or matrix.cols != n:
            raise InputError("anti-involution matrix has wrong shape")
        F = algebra.field
        if matrix @ matrix != Matrix.identity(F, n):
            raise InputError("anti-involution does not square to the identity")
        unit_col = Matrix.column(F, algebra.unit)
        if matrix @ unit_col != unit_col:
            raise InputError("anti-involution does not fix the unit")
        for i in range(n):
            for j in range(n):
                lhs = matrix @ Matrix.column(F, algebra.table[i][j])
                rhs = algebra.multiply(self.apply_basis(j), self.apply_basis(i))
                if tuple(r[0] for r in lhs.entries) != rhs:
                    raise InputError(
                        f"anti-multiplicativity fails at basis pair ({i},{j})")

    def apply_basis(self, i):
        return tuple(row[i] for row in self.matrix.entries)

    def apply(self, coeffs):
        F = self.algebra.field
        out = [F.zero()] * self.algebra.dim
        for i, c in enumerate(coeffs):
            if c != F.zero():
                for j, t in enumerate(self.apply_basis(i)):
                    out[j] = F.add(out[j], F.mul(c, t))
        return tuple(out)


def dualize_module(tau: AntiInvolution, m: ModuleRep) -> ModuleRep:
    """Twisted dual: b acts on the dual space as the transpose of tau(b)."""
    action = [m.act(tau.apply_basis(i)).transpose() for i in range(m.algebra.dim)]
    return ModuleRep(m.algebra, m.dim, action, check=False)


def dualize_morphism(tau: AntiInvolution, f: Morphism,
                     dual_source: ModuleRep, dual_target: ModuleRep) -> Morphism:
    """Contravariant: D(f): D(target) -> D(source) is the transpose."""
    return Morphism(dual_target, dual_source, f.matrix.transpose())


def xi_matrix(field, m: ModuleRep) -> Matrix:
    """Double-dual evaluation; the identity in coordinates."""
    return Matrix.identity(field, m.dim)


class DualityDatum:
    """Exchange witnesses and fixed-point isomorphisms for one duality."""

    def __init__(self, tau: AntiInvolution):
        self.tau = tau
        self.exchange = {}        # label -> iso D(Nabla(label)) -> Delta(label)
        self.tilting_self_dual = {}   # label -> iso D(T(label)) -> T(label)
        self.fixed_forms = {}     # label -> symmetric invertible Psi' (T -> D(T))
        self.phi = {}             # label -> Phi = Psi'^{-1} (D(T(label)) -> T(label))


def check_standard_duality(reg: Registry, tilt: TiltingRegistry,
                           tau: AntiInvolution) -> DualityDatum:
    """Verify exchange of standard and costandard modules and self-duality of
    every indecomposable tilting module; collect the witnesses."""
    datum = DualityDatum(tau)
    for lam in reg.poset.labels:
        dual_nabla = dualize_module(tau, reg.costandard(lam))
        w = is_isomorphic(dual_nabla, reg.standard(lam), reg.rng)
        if w is None:
            raise NotStandardDuality(lam, "exchange",
                                     "(dual of costandard is not the standard module)")
        datum.exchange[lam] = w
        t_mod = tilt.module(lam)
        w2 = is_isomorphic(dualize_module(tau, t_mod), t_mod, reg.rng)
        if w2 is None:
            raise NotStandardDuality(lam, "tilting_self_dual",
                                     "(indecomposable tilting module is not self-dual)")
        datum.tilting_self_dual[lam] = w2
    return datum


def fixed_point_iso(tau: AntiInvolution, x: ModuleRep, psi: Morphism) -> Morphism:
    """Symmetrize a self-duality of an indecomposable module.

    psi: x -> D(x) encodes an associative bilinear form; the symmetrized
    form psi + D(psi).xi is again a morphism, and if psi^{-1} composed with
    it is not nilpotent the result is invertible, exhibiting x as a fixed
    point.  Requires characteristic != 2; raises SymmetrizationDegenerate
    with skewness diagnostics when the symmetrization is nilpotent.
    """
    F = x.algebra.field
    if F.characteristic == 2:
        raise InputError("fixed-point symmetrization needs characteristic != 2")
    p = psi.matrix
    sym = p + p.transpose()
    psi_sym = Morphism(psi.source, psi.target, sym, check=True)
    if not sym.is_invertible():
        comp = psi.matrix.inverse() @ sym
        if comp.power(x.dim).is_zero():
            skew = (p.transpose() == -p)
            raise SymmetrizationDegenerate(
                f"symmetrized form is nilpotent (form is skew: {skew})")
        raise SymmetrizationDegenerate(
            "symmetrized form is singular but not nilpotent (module decomposable?)")
    return psi_sym


def fixed_point_for_module(reg: Registry, tau: AntiInvolution, x: ModuleRep) -> Morphism:
    """Symmetric invertible intertwiner x -> D(x) for a self-dual
    indecomposable, found by probing the hom space for an isomorphism and
    symmetrizing it."""
    dual = dualize_module(tau, x)
    psi = is_isomorphic(x, dual, reg.rng)
    if psi is None:
        raise NotStandardDuality("?", "self_dual", "(module is not self-dual)")
    return fixed_point_iso(tau, x, psi)


def fixed_point_data(reg: Registry, tilt: TiltingRegistry,
                     tau: AntiInvolution, datum: DualityDatum):
    """Fill in fixed-point isomorphisms for every indecomposable tilting
    module, certifying the fixed-point equation exactly."""
    for lam in reg.poset.labels:
        t_mod = tilt.module(lam)
        psi_sym = fixed_point_for_module(reg, tau, t_mod)
        datum.fixed_forms[lam] = psi_sym
        phi = Morphism(dualize_module(tau, t_mod), t_mod, psi_sym.matrix.inverse())
        _certify_fixed_point(lam, phi)
        datum.phi[lam] = phi
    return datum


def _certify_fixed_point(label, phi: Morphism):
    """Phi . D(Phi^{-1}) . xi = id; in coordinates: P^{-1,T} cancels P^{-1}."""
    p_inv = phi.matrix          # matrix of Phi: D(X) -> X
    check = p_inv @ p_inv.inverse().transpose()
    if check != Matrix.identity(p_inv.field, p_inv.rows):
        raise NotStandardDuality(label, "fixed_point",
                                 "(symmetrized iso fails the fixed-point equation)")


def fixed_point_for_tilting(reg: Registry, tilt: TiltingRegistry,
                            tau: AntiInvolution, datum: DualityDatum,
                            t: ModuleRep, pieces=None) -> Morphism:
    """Symmetric invertible form on an arbitrary tilting module, transported
    from the block-diagonal form on its canonical summand decomposition."""
    if pieces is None:
        support = tilting_support(tilt, t)
        pieces = [lam for lam in reg.poset.labels for _ in range(support.get(lam, 0))]
    canonical, _, _ = direct_sum([tilt.module(lam) for lam in pieces])
    block = block_diag([datum.fixed_forms[lam].matrix for lam in pieces])
    if canonical.dim == t.dim and all(
            a == b for a, b in zip(canonical.action, t.action)):
        theta_mat = Matrix.identity(reg.algebra.field, t.dim)
    else:
        theta = is_isomorphic(canonical, t, reg.rng)
        if theta is None:
            raise NotStandardDuality("?", "transport", "(module is not the expected sum)")
        theta_mat = theta.matrix
    theta_inv = theta_mat.inverse()
    sym = theta_inv.transpose() @ block @ theta_inv
    out = Morphism(t, dualize_module(tau, t), sym, check=True)
    if not sym.is_invertible():
        raise SymmetrizationDegenerate("transported form is singular")
    return out


def induced_involution(tau: AntiInvolution, t: ModuleRep, psi_sym: Morphism):
    """The anti-automorphism of End(t) induced by the duality and a chosen
    self-duality form: phi -> Psi^{-1} . D(phi) . Psi.

    Returns (alpha, a) where alpha maps endomorphism matrices and a is the
    obstruction element Phi . D(Phi^{-1}) . xi; a = identity exactly when the
    form exhibits a fixed point, making alpha an involution.  Raises
    NotInvolutive (carrying a) when alpha^2 != id.
    """
    P = psi_sym.matrix

    def alpha(mat: Matrix) -> Matrix:
        return P.inverse() @ mat.transpose() @ P

    a_elem = P.inverse() @ P.transpose()
    for probe in hom_space(t, t):
        if alpha(alpha(probe.matrix)) != probe.matrix:
            raise NotInvolutive(a_elem, "(the chosen form is not a fixed point)")
    return alpha, a_elem


def induced_bar_map(reg: Registry, tilt: TiltingRegistry, tau: AntiInvolution,
                    datum: DualityDatum, label) -> Matrix:
    """The isomorphism D(Delta(label)) -> Nabla(label) determined by the
    commuting square pi . Phi = bar . D(i): solve it from the surjection."""
    triple = tilt.triple(label)
    phi = datum.phi[label]
    lhs = triple.pi.matrix @ phi.matrix                 # D(T) -> Nabla
    d_i = triple.i.matrix.transpose()                   # D(T) ->> D(Delta)
    # bar @ d_i = lhs with d_i full row rank: solve the transposed system
    sol, _ = d_i.transpose().solve(lhs.transpose())
    return sol.transpose()


def build_cellular_basis(tilt: TiltingRegistry, t: ModuleRep, tau: AntiInvolution,
                         seed: int = 0):
    """Standard basis of End(t) whose projection side is the dual of the
    embedding side, together with the involution and the certificate that
    the involution transposes every fiber.

    Returns (datum, duality_datum, alpha, certificate dict).
    """
    reg = tilt.base
    F = reg.algebra.field
    duality = check_standard_duality(reg, tilt, tau)
    fixed_point_data(reg, tilt, tau, duality)
    psi_t = fixed_point_for_tilting(reg, tilt, tau, duality, t)
    alpha, a_elem = induced_involution(tau, t, psi_t)
    rng = None if seed == 0 else random.Random(seed)
    datum = StandardBasisDatum(tilt, t, seed)
    for lam in reg.poset.linear_extension:
        G = hom_space(reg.standard(lam), t)
        if not G:
            continue
        Fs_space = hom_space(t, reg.costandard(lam))
        if not Fs_space:
            continue
        bar = induced_bar_map(reg, tilt, tau, duality, lam)
        Ghat = [extend_through_tilting(reg, tilt, g, lam, rng) for g in G]
        triple = tilt.triple(lam)
        nabla = reg.costandard(lam)
        t_lam = triple.module
        Fs = [Morphism(t, nabla, bar @ g.matrix.transpose() @ psi_t.matrix) for g in G]
        Fhat = [Morphism(t, t_lam,
                         duality.phi[lam].matrix @ gh.matrix.transpose() @ psi_t.matrix)
                for gh in Ghat]
        for f, fh in zip(Fs, Fhat):
            if (triple.pi.matrix @ fh.matrix) != f.matrix:
                raise CellularityFailure(lam, -1, -1, "(dualized lift is not a lift)")
        datum.order.append(lam)
        datum.G[lam] = G
        datum.F[lam] = Fs
        datum.Ghat[lam] = Ghat
        datum.Fhat[lam] = Fhat
        datum.cells[lam] = [[gh @ fh for fh in Fhat] for gh in Ghat]
        for i in range(len(G)):
            for j in range(len(G)):
                datum._index.append((lam, i, j))
    finalize_datum(datum)
    # cellularity certificate: alpha transposes each fiber
    for (lam, i, j) in datum.index():
        if alpha(datum.cell(lam, i, j).matrix) != datum.cell(lam, j, i).matrix:
            raise CellularityFailure(lam, i, j, "(involution does not transpose the fiber)")
    cert = {
        "fibers_square": all(len(datum.G[lam]) == len(datum.F[lam]) for lam in datum.order),
        "alpha_involutive": True,
        "a_element_is_identity": a_elem == Matrix.identity(F, t.dim),
    }
    return datum, duality, alpha, cert
