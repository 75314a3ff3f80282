"""Ladder certificates for composition-series degenerations, their
verification and normalization, the one-parameter deformation family, and
the embedding into modules over the upper-triangular matrix algebra.

A ladder is a commutative diagram with exact columns

    X_1  ->  X_2  -> ... ->  X_d
     |        |               |
    X_1+M_1 -> X_2+M_2 -> .. -> X_d+M_d
     |        |               |
    N_1  ->  N_2  -> ... ->  N_d

whose borders are composition-series chains and whose columns are
degeneration certificates M_i <=deg N_i.  It certifies that the bottom
series lies in the upper-triangular orbit closure of the top series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (BadParameter, DimensionMismatch,
                     InternalInvariantViolation, NoAdaptedBasis,
                     TriangularityViolated, VerificationFailed)
from .algebras import (AlgebraPresentation, CheckItem, ModuleMap, Report,
                       Representation, direct_sum, sub_representation,
                       validate)
from .degeneration import RiedtmannCertificate, verify_certificate
from .linalg import (Matrix, block_diag, hstack, image, inverse,
                     kernel, solve_right, vstack)
from .series import (ModuleChain, TriangularRep,
                     upper_triangular_hom_basis)


@dataclass(frozen=True)
class LadderCertificate:
    """Columns of degeneration certificates joined by a chain map.

    ``m_chain`` and ``n_chain`` are the two composition-series borders;
    ``x`` and ``h`` form the top chain; ``f[i]``, ``g[i]`` and ``q[i]``
    assemble column i.
    """

    m_chain: ModuleChain
    n_chain: ModuleChain
    x: tuple[Representation, ...]
    h: tuple[ModuleMap, ...]
    f: tuple[ModuleMap, ...]
    g: tuple[ModuleMap, ...]
    q: tuple[ModuleMap, ...]

    @property
    def length(self) -> int:
        return self.m_chain.length

    def column(self, i: int) -> RiedtmannCertificate:
        """The i-th column (0-based) as a degeneration certificate."""
        return RiedtmannCertificate.build(
            self.x[i], self.m_chain.stages[i], self.n_chain.stages[i],
            self.f[i].mat, self.g[i].mat, self.q[i].mat)


def ladder_from_columns(m_chain: ModuleChain, n_chain: ModuleChain,
                        x: list[Representation], h: list[Matrix],
                        f: list[Matrix], g: list[Matrix],
                        q: list[Matrix]) -> LadderCertificate:
    d = m_chain.length
    h_maps = tuple(ModuleMap(x[i], x[i + 1], h[i]) for i in range(d - 1))
    f_maps = tuple(ModuleMap(x[i], x[i], f[i]) for i in range(d))
    g_maps = tuple(ModuleMap(x[i], m_chain.stages[i], g[i]) for i in range(d))
    q_maps = tuple(
        ModuleMap(direct_sum(x[i], m_chain.stages[i])[0], n_chain.stages[i], q[i])
        for i in range(d))
    return LadderCertificate(m_chain, n_chain, tuple(x), h_maps,
                             f_maps, g_maps, q_maps)


def verify_ladder(lc: LadderCertificate) -> Report:
    """Line-item verification: border chains, per-column certificates,
    and commutativity of both squares between consecutive columns."""
    items = [CheckItem("top border is a composition-series chain",
                       lc.m_chain.validate()),
             CheckItem("bottom border is a composition-series chain",
                       lc.n_chain.validate()),
             CheckItem("column count matches chain length",
                       len(lc.x) == lc.length and len(lc.f) == lc.length
                       and len(lc.g) == lc.length and len(lc.q) == lc.length
                       and len(lc.h) == lc.length - 1)]
    if not items[-1].ok:
        return Report(tuple(items))
    d = lc.length
    reps_ok = all(validate(r).ok for r in lc.x) and \
        all(validate(r).ok for r in lc.m_chain.stages) and \
        all(validate(r).ok for r in lc.n_chain.stages)
    items.append(CheckItem("all member representations satisfy the algebra "
                           "relations", reps_ok))
    for i in range(d):
        col = verify_certificate(lc.column(i))
        items.append(CheckItem(f"column {i + 1} is a valid certificate", col.ok,
                               "" if col.ok else str(col.failures())))
    for i in range(d - 1):
        hm = lc.h[i]
        items.append(CheckItem(f"h_{i + 1} intertwines", hm.is_intertwiner()))
        mid = block_diag(hm.mat, lc.m_chain.inclusions[i].mat)
        top_left = vstack(lc.f[i + 1].mat, lc.g[i + 1].mat) @ hm.mat
        top_right = mid @ vstack(lc.f[i].mat, lc.g[i].mat)
        items.append(CheckItem(f"square {i + 1}: columns commute over h",
                               top_left == top_right))
        bot_left = lc.n_chain.inclusions[i].mat @ lc.q[i].mat
        bot_right = lc.q[i + 1].mat @ mid
        items.append(CheckItem(f"square {i + 1}: quotients commute over j",
                               bot_left == bot_right))
    return Report(tuple(items))


def make_monic(lc: LadderCertificate) -> LadderCertificate:
    """Replace columns until every horizontal map in the top chain is
    injective, working down from the largest offending index.

    Column r is replaced by the image of the chain-complex map into column
    r+1; exactness of the new column follows from the dimension count
    dim(im h_r (+) M_r) = dim im h_r + dim N_r, which is asserted.  The
    X-row dimensions weakly decrease.  The output verifies or the call
    fails.
    """
    x = list(lc.x)
    h = [m.mat for m in lc.h]
    f = [m.mat for m in lc.f]
    g = [m.mat for m in lc.g]
    q = [m.mat for m in lc.q]
    m_chain, n_chain = lc.m_chain, lc.n_chain
    d = lc.length

    while True:
        bad = [r for r in range(d - 1) if h[r].rank() < x[r].dim]
        if not bad:
            break
        r = bad[-1]
        im_rep, im_inc = sub_representation(x[r + 1], image(h[r]))
        b = im_inc.mat
        proj = solve_right(b, h[r])
        if proj is None:
            raise InternalInvariantViolation("image factorization failed")
        m_inc = m_chain.inclusions[r].mat
        n_inc = n_chain.inclusions[r].mat
        f_new = solve_right(b, f[r + 1] @ b)
        g_new = solve_right(m_inc, g[r + 1] @ b)
        q_new = solve_right(n_inc, q[r + 1] @ block_diag(b, m_inc))
        if f_new is None or g_new is None or q_new is None:
            raise InternalInvariantViolation(
                "restricted column maps failed to factor through the borders")
        if im_rep.dim + m_chain.stages[r].dim != im_rep.dim + n_chain.stages[r].dim:
            raise InternalInvariantViolation("column dimension count broken")
        x[r] = im_rep
        f[r], g[r], q[r] = f_new, g_new, q_new
        h[r] = b
        if r > 0:
            h[r - 1] = proj @ h[r - 1]

    out = ladder_from_columns(m_chain, n_chain, x, h, f, g, q)
    report = verify_ladder(out)
    if not report.ok:
        raise VerificationFailed("monicized ladder failed verification",
                                 report)
    return out


@dataclass(frozen=True)
class DeformationFamily:
    """The one-parameter family attached to a monic ladder.

    ``basis`` spans a complement V of the image of the last column map in
    X_d (+) M_d, adapted so that the i-th vector comes from X_i (+) M_i.
    Evaluation at a scalar t deforms the last column map by t times the
    identity of X_d and reads the algebra action on V; the result is
    triangular in this basis.
    """

    ladder: LadderCertificate
    basis: Matrix
    constraint: Optional[tuple[int, ...]] = None

    @property
    def ambient(self) -> Representation:
        lc = self.ladder
        d = lc.length
        return direct_sum(lc.x[d - 1], lc.m_chain.stages[d - 1])[0]


def _column_embeddings(lc: LadderCertificate) -> list[Matrix]:
    """Embeddings of X_i (+) M_i into X_d (+) M_d along the monic rows."""
    d = lc.length
    fld = lc.x[0].field
    embs = []
    emb_x = Matrix.identity(fld, lc.x[d - 1].dim)
    emb_m = Matrix.identity(fld, lc.m_chain.stages[d - 1].dim)
    embs.append(block_diag(emb_x, emb_m))
    for i in range(d - 2, -1, -1):
        emb_x = emb_x @ lc.h[i].mat
        emb_m = emb_m @ lc.m_chain.inclusions[i].mat
        embs.append(block_diag(emb_x, emb_m))
    embs.reverse()
    return embs


def build_family(lc: LadderCertificate,
                 constraint: Optional[tuple[int, ...]] = None) -> DeformationFamily:
    """Choose the adapted complement basis b_1, .., b_d with
    b_i in X_i (+) M_i, greedily extending modulo the image of the last
    column map.

    Under a composition-vector constraint each b_i must additionally be
    fixed by the matching idempotent.  Raises NoAdaptedBasis with the
    failing index when the greedy step runs out of candidates; all h maps
    must already be injective (run make_monic first).
    """
    d = lc.length
    for hm in lc.h:
        if hm.mat.rank() < hm.source.dim:
            raise DimensionMismatch(
                "deformation family needs injective row maps; run make_monic")
    ambient = direct_sum(lc.x[d - 1], lc.m_chain.stages[d - 1])[0]
    fld = ambient.field
    if constraint is not None and len(constraint) != d:
        raise DimensionMismatch("constraint length differs from ladder length")
    embs = _column_embeddings(lc)
    w = image(vstack(lc.f[d - 1].mat, lc.g[d - 1].mat))
    from .linalg import EchelonTracker
    tracker = EchelonTracker(fld, ambient.dim)
    for j in range(w.dim):
        tracker.add(w.basis.column(j))
    chosen = []
    for i in range(d):
        candidates = image(embs[i])
        if constraint is not None:
            idem = ambient.mats[
                ambient.algebra.idempotent_indices[constraint[i]]]
            fixed = kernel(idem - Matrix.identity(fld, ambient.dim))
            candidates = candidates.intersect(fixed)
        pick = None
        for j in range(candidates.dim):
            col = candidates.basis.column(j)
            if tracker.add(col):
                pick = col
                break
        if pick is None:
            raise NoAdaptedBasis(
                f"no adapted basis vector at position {i + 1}", index=i + 1)
        chosen.append(pick)
    basis = Matrix.from_columns(fld, chosen, rows=ambient.dim)
    return DeformationFamily(lc, basis, constraint)


def evaluate_family(fam: DeformationFamily, t) -> TriangularRep:
    """The member of the family at parameter t.

    Forms phi_t = (f_d + t . id; g_d), requires im phi_t to complement the
    chosen basis span (else BadParameter), and reads the algebra action on
    the basis by projecting along im phi_t.  The result is asserted
    triangular and relation-satisfying; failures of those assertions are
    bug signals, not inputs.
    """
    lc = fam.ladder
    d = lc.length
    ambient = fam.ambient
    fld = ambient.field
    t = fld.coerce(t)
    xd = lc.x[d - 1]
    phi = vstack(lc.f[d - 1].mat + Matrix.identity(fld, xd.dim).scale(t),
                 lc.g[d - 1].mat)
    if phi.rank() < xd.dim:
        raise BadParameter(f"phi_t is not injective at t = {fld.fmt(t)}")
    frame = hstack(phi, fam.basis)
    frame_inv = inverse(frame)
    if frame_inv is None:
        raise BadParameter(
            f"im phi_t does not complement the basis span at t = {fld.fmt(t)}")
    reader = frame_inv.submatrix(range(xd.dim, xd.dim + d), range(ambient.dim))
    mats = tuple(reader @ (m @ fam.basis) for m in ambient.mats)
    for name, m in zip(ambient.algebra.generators, mats):
        if not m.is_upper_triangular():
            raise TriangularityViolated(
                f"family member is not triangular on generator {name}")
    rep = Representation(ambient.algebra, fld, d, mats)
    report = validate(rep)
    if not report.ok:
        raise InternalInvariantViolation(
            f"family member violates the algebra relations: {report.failures()}")
    return TriangularRep(rep)


def upper_triangular_algebra(base: AlgebraPresentation, d: int) -> AlgebraPresentation:
    """Presentation of the d x d upper-triangular matrix algebra over the
    base algebra.

    Generators: one scalar-diagonal lift L_<g> per base generator, the
    diagonal matrix units E<i>_<i>, and the superdiagonal units E<i>_<i+1>.
    """
    lifts = [f"L_{g}" for g in base.generators]
    diag = [f"E{i}_{i}" for i in range(1, d + 1)]
    arrows = [f"E{i}_{i + 1}" for i in range(1, d)]
    gens = lifts + diag + arrows
    idx = {g: i for i, g in enumerate(gens)}
    nl = len(lifts)

    relations: list = []
    for rel in base.relations:
        relations.append(tuple((c, w) for c, w in rel))
    # diagonal units absorb the superdiagonal ones
    for i in range(1, d):
        a = idx[f"E{i}_{i + 1}"]
        relations.append(((1, (idx[f"E{i}_{i}"], a)), (-1, (a,))))
        relations.append(((1, (a, idx[f"E{i + 1}_{i + 1}"])), (-1, (a,))))
        for j in range(1, d + 1):
            if j != i:
                relations.append(((1, (idx[f"E{j}_{j}"], a)),))
            if j != i + 1:
                relations.append(((1, (a, idx[f"E{j}_{j}"])),))
    for i in range(1, d):
        for j in range(1, d):
            if j != i + 1:
                relations.append(((1, (idx[f"E{i}_{i + 1}"], idx[f"E{j}_{j + 1}"])),))
    # scalar-diagonal lifts are central for the unit pattern
    for li in range(nl):
        for i in range(1, d + 1):
            e = idx[f"E{i}_{i}"]
            relations.append(((1, (li, e)), (-1, (e, li))))
        for i in range(1, d):
            a = idx[f"E{i}_{i + 1}"]
            relations.append(((1, (li, a)), (-1, (a, li))))
    # the lifted unit equals the sum of the new diagonal units
    unit_terms: list = []
    if base.unit_generator is None:
        unit_terms = [(1, (idx[f"L_{g}"],)) for g in base.idempotents]
    else:
        unit_terms = [(1, (idx[f"L_{base.unit_generator}"],))]
    for i in range(1, d + 1):
        unit_terms.append((-1, (idx[f"E{i}_{i}"],)))
    relations.append(tuple(unit_terms))

    radical = [f"L_{g}" for g in base.radical_generators] + arrows
    return AlgebraPresentation(
        name=f"U_{d}({base.name})",
        generators=tuple(gens),
        idempotents=tuple(diag),
        radical_generators=tuple(radical),
        relations=tuple(relations))


def psi_embed(tri: TriangularRep) -> Representation:
    """Embed a triangular representation as a d(d+1)/2-dimensional module
    over the upper-triangular matrix algebra.

    The carrier space is the sum of the stage modules M_1, .., M_d (blocks
    of sizes 1..d in that order).  The scalar-diagonal lift of a base
    generator acts block-diagonally through the stages; the unit E_{i,i}
    projects onto the component of the (d+1-i)-th stage; E_{i,i+1} is the
    stage inclusion M_{d-i} -> M_{d+1-i} placed between those components.
    With this placement the images satisfy all matrix-unit identities and
    commute with the lifts, which the stage truncation property makes
    exact.
    """
    rep = tri.rep
    d = rep.dim
    fld = rep.field
    alg = upper_triangular_algebra(rep.algebra, d)
    a = d * (d + 1) // 2
    offsets = [0]
    for size in range(1, d + 1):
        offsets.append(offsets[-1] + size)

    def place(block: Matrix, row_block: int, col_block: int) -> Matrix:
        out = [[fld.zero] * a for _ in range(a)]
        r0, c0 = offsets[row_block - 1], offsets[col_block - 1]
        for i, row in enumerate(block.data):
            for j, v in enumerate(row):
                out[r0 + i][c0 + j] = v
        return Matrix(fld, a, a, out)

    mats = []
    for g in range(len(rep.algebra.generators)):
        mats.append(block_diag(*[tri.stage(i).mats[g] for i in range(1, d + 1)]))
    for i in range(1, d + 1):
        comp = d + 1 - i
        blocks = [Matrix.identity(fld, size) if size == comp else Matrix.zeros(fld, size, size)
                  for size in range(1, d + 1)]
        mats.append(block_diag(*blocks))
    for i in range(1, d):
        inc = vstack(Matrix.identity(fld, d - i), Matrix.zeros(fld, 1, d - i))
        mats.append(place(inc, d + 1 - i, d - i))
    return Representation(alg, fld, a, tuple(mats))


def orbit_dim_ud(tri: TriangularRep) -> int:
    """Dimension of the upper-triangular conjugation orbit:
    dim U_d minus the dimension of the triangular self-intertwiner space."""
    d = tri.dim
    return d * (d + 1) // 2 - len(upper_triangular_hom_basis(tri, tri))
