"""Degeneration certificates and the operations that transport them.

A certificate for M <=deg N is a short exact sequence

    0 -> X -> X (+) M -> N -> 0

given by an endomorphism f of X, a map g: X -> M and a surjection
q: X (+) M -> N.  Injectivity of the column map (f; g), surjectivity of q,
q o (f; g) = 0 and dim M = dim N force exactness by dimension count, so
verification is pure linear algebra with no basis-choice coupling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (AlgebraMismatch, DimensionMismatch,
                     InternalInvariantViolation, NoLift, NotSubmodule,
                     VerificationFailed)
from .algebras import (CheckItem, ModuleMap, Report, Representation,
                       Submodule, direct_sum, hom_dim,
                       sub_representation, zero_representation)
from .linalg import (Matrix, Subspace, block_diag, hstack, image, kernel,
                     preimage, solve_right, vstack)


@dataclass(frozen=True)
class RiedtmannCertificate:
    """Witness for M <=deg N.  ``middle`` is the literal block sum X (+) M."""

    x: Representation
    m: Representation
    n: Representation
    f: ModuleMap          # X -> X
    g: ModuleMap          # X -> M
    q: ModuleMap          # X (+) M -> N
    middle: Representation

    @classmethod
    def build(cls, x: Representation, m: Representation, n: Representation,
              f_mat: Matrix, g_mat: Matrix, q_mat: Matrix) -> "RiedtmannCertificate":
        middle = direct_sum(x, m)[0]
        return cls(x=x, m=m, n=n,
                   f=ModuleMap(x, x, f_mat),
                   g=ModuleMap(x, m, g_mat),
                   q=ModuleMap(middle, n, q_mat),
                   middle=middle)

    def column_map(self) -> Matrix:
        """The matrix of (f; g): X -> X (+) M."""
        return vstack(self.f.mat, self.g.mat)


def trivial_certificate(m: Representation) -> RiedtmannCertificate:
    """The certificate for M <=deg M with zero X and identity quotient."""
    x = zero_representation(m.algebra, m.field)
    return RiedtmannCertificate.build(
        x, m, m,
        Matrix.zeros(m.field, 0, 0), Matrix.zeros(m.field, m.dim, 0),
        Matrix.identity(m.field, m.dim))


def verify_certificate(cert: RiedtmannCertificate) -> Report:
    """Line-item verification of every certificate invariant."""
    items = []
    consistent = (cert.x.algebra == cert.m.algebra == cert.n.algebra
                  and cert.x.field == cert.m.field == cert.n.field)
    items.append(CheckItem("algebra and field consistent", consistent))
    items.append(CheckItem("dim M = dim N", cert.m.dim == cert.n.dim,
                           f"{cert.m.dim} vs {cert.n.dim}"))
    items.append(CheckItem("f intertwines", cert.f.is_intertwiner()))
    items.append(CheckItem("g intertwines", cert.g.is_intertwiner()))
    items.append(CheckItem("q intertwines", cert.q.is_intertwiner()))
    col = cert.column_map()
    items.append(CheckItem("column map (f; g) injective",
                           col.rank() == cert.x.dim))
    items.append(CheckItem("q surjective", cert.q.mat.rank() == cert.n.dim))
    items.append(CheckItem("q o (f; g) = 0", (cert.q.mat @ col).is_zero()))
    return Report(tuple(items))


def codim(m: Representation, n: Representation) -> int:
    """Orbit codimension [N,N] - [M,M] of a degeneration M <=deg N."""
    if m.dim != n.dim:
        raise DimensionMismatch("codimension needs equal dimensions")
    return hom_dim(n, n) - hom_dim(m, m)


def orbit_dim_gl(m: Representation) -> int:
    """Dimension d^2 - [M,M] of the conjugation orbit of m."""
    return m.dim * m.dim - hom_dim(m, m)


@dataclass(frozen=True)
class HomDefectReport:
    """Per test module X, the integer [X,N] - [X,M].

    Any negative value certifies that M cannot degenerate (even virtually)
    to N.
    """

    pairs: tuple[tuple[Representation, int], ...]

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.pairs]

    @property
    def any_negative(self) -> bool:
        return any(v < 0 for v in self.values)


def hom_defect(m: Representation, n: Representation,
               tests: list[Representation]) -> HomDefectReport:
    pairs = tuple((x, hom_dim(x, n) - hom_dim(x, m)) for x in tests)
    return HomDefectReport(pairs)


def _verified(cert: RiedtmannCertificate, context: str) -> RiedtmannCertificate:
    report = verify_certificate(cert)
    if not report.ok:
        raise VerificationFailed(f"{context}: constructed certificate failed "
                                 f"verification: {report.failures()}", report)
    return cert


@dataclass(frozen=True)
class PushResult:
    nprime: Submodule
    cert: RiedtmannCertificate


def push_submodule(cert: RiedtmannCertificate, mprime: Submodule) -> PushResult:
    """Transport a submodule M' of M to a submodule N' of N along a
    certificate, with a certificate for M' <=deg N'.

    X' is computed as the greatest fixed point of
    ``S_0 = g^{-1}(M'), S_{k+1} = S_k intersect f^{-1}(S_k)``; the chain is
    descending in finite dimension, so it stabilizes within dim X steps.
    N' is the image of X' (+) M' under q, which equals the cokernel of the
    restricted column map; its injective identification inside N is
    asserted at runtime even though it is guaranteed, to catch faults.
    """
    if mprime.ambient != cert.m:
        raise NotSubmodule("submodule does not live in the certificate's M")
    mprime.require_invariant()
    fld = cert.m.field
    space = preimage(cert.g.mat, mprime.space)
    for _ in range(cert.x.dim + 1):
        refined = space.intersect(preimage(cert.f.mat, space))
        if refined == space:
            break
        space = refined
    else:
        raise InternalInvariantViolation("fixed-point iteration failed to stabilize")

    xprime_space = space
    if not xprime_space.contains(image(cert.f.mat @ xprime_space.basis)):
        raise InternalInvariantViolation("X' is not f-invariant")
    if not mprime.space.contains(image(cert.g.mat @ xprime_space.basis)):
        raise InternalInvariantViolation("g(X') is not inside M'")

    xp_rep, xp_inc = sub_representation(cert.x, xprime_space)
    mp_rep, mp_inc = sub_representation(cert.m, mprime.space)
    f_res = solve_right(xp_inc.mat, cert.f.mat @ xp_inc.mat)
    g_res = solve_right(mp_inc.mat, cert.g.mat @ xp_inc.mat)
    if f_res is None or g_res is None:
        raise InternalInvariantViolation("restricted maps failed to factor")

    # q restricted to X' (+) M', in ambient N coordinates.
    emb = block_diag(xp_inc.mat, mp_inc.mat)
    q_emb = cert.q.mat @ emb
    expected = mprime.dim
    if q_emb.rank() != expected:
        raise InternalInvariantViolation(
            "induced inclusion of the cokernel into N is not injective")
    nprime_space = image(q_emb)
    np_rep, np_inc = sub_representation(cert.n, nprime_space)
    q_res = solve_right(np_inc.mat, q_emb)
    if q_res is None:
        raise InternalInvariantViolation("restricted quotient failed to factor")

    out = RiedtmannCertificate.build(xp_rep, mp_rep, np_rep,
                                     f_res, g_res, q_res)
    return PushResult(Submodule(cert.n, nprime_space),
                      _verified(out, "push_submodule"))


@dataclass(frozen=True)
class SplitResult:
    xprime: Submodule
    yprime: Submodule
    cert: RiedtmannCertificate


def split_submodule(x: Representation, y: Representation,
                    sub: Submodule) -> SplitResult:
    """Degenerate a submodule of X (+) Y into a sum of submodules of the
    factors.

    With i the inclusion and p the projection onto X, the result is
    X' = im(p o i) and Y' = ker(p o i) (living inside Y), together with
    the certificate 0 -> K -> K (+) M -> X' (+) Y' -> 0 built from the
    kernel inclusion and the image projection.
    """
    ambient, *_ = direct_sum(x, y)
    if sub.ambient != ambient:
        raise NotSubmodule("submodule does not live in the stated direct sum")
    sub.require_invariant()
    fld = ambient.field
    m_rep, m_inc = sub_representation(ambient, sub.space)
    pi_mat = m_inc.mat.submatrix(range(x.dim), range(sub.dim))  # p o i

    xprime_space = image(pi_mat)
    xp_rep, xp_inc = sub_representation(x, xprime_space)

    k_space = kernel(pi_mat)
    k_rep, k_inc = sub_representation(m_rep, k_space)
    k_ambient = m_inc.mat @ k_inc.mat    # kernel vectors in X (+) Y coordinates
    top = k_ambient.submatrix(range(x.dim), range(k_ambient.cols))
    if not top.is_zero():
        raise InternalInvariantViolation("kernel of p o i has a nonzero X part")
    y_part = k_ambient.submatrix(range(x.dim, x.dim + y.dim), range(k_ambient.cols))
    yprime_space = image(y_part)
    yp_rep, yp_inc = sub_representation(y, yprime_space)

    pi_res = solve_right(xp_inc.mat, pi_mat)          # M -> X' coordinates
    kappa = solve_right(yp_inc.mat, y_part)           # K -> Y' coordinates
    if pi_res is None or kappa is None:
        raise InternalInvariantViolation("split maps failed to factor")

    n_rep = direct_sum(xp_rep, yp_rep)[0]
    q_mat = vstack(
        hstack(Matrix.zeros(fld, xp_rep.dim, k_rep.dim), pi_res),
        hstack(kappa, Matrix.zeros(fld, yp_rep.dim, m_rep.dim)))
    cert = RiedtmannCertificate.build(
        k_rep, m_rep, n_rep,
        Matrix.zeros(fld, k_rep.dim, k_rep.dim), k_inc.mat, q_mat)
    return SplitResult(Submodule(x, xprime_space), Submodule(y, yprime_space),
                       _verified(cert, "split_submodule"))


def compose_certificates(c1: RiedtmannCertificate,
                         c2: RiedtmannCertificate) -> RiedtmannCertificate:
    """Explicit certificate for A <=deg C from certificates A <=deg B and
    B <=deg C.

    Solves for a module map (s; t): W -> X (+) A with q1 o (s; t) = g2 (an
    intertwiner system with an affine right-hand side).  The operation is
    partial by design: when no lift exists it raises NoLift, although the
    composed degeneration still holds mathematically.
    """
    if c1.n != c2.m:
        raise AlgebraMismatch(
            "certificates do not chain: first N differs from second M")
    fld = c1.m.field
    w, xm = c2.x, c1.middle
    dw, dxm = w.dim, xm.dim
    nvars = dxm * dw
    rows, rhs = [], []
    for a, b in zip(w.mats, xm.mats):
        for i in range(dxm):
            for j in range(dw):
                row = [fld.zero] * nvars
                for r in range(dxm):
                    row[r * dw + j] = fld.add(row[r * dw + j], b.data[i][r])
                for c in range(dw):
                    row[i * dw + c] = fld.sub(row[i * dw + c], a.data[c][j])
                rows.append(row)
                rhs.append([fld.zero])
    qm = c1.q.mat
    g2 = c2.g.mat
    for i in range(c1.n.dim):
        for j in range(dw):
            row = [fld.zero] * nvars
            for r in range(dxm):
                row[r * dw + j] = qm.data[i][r]
            rows.append(row)
            rhs.append([g2.data[i][j]])
    sol = solve_right(Matrix(fld, len(rows), nvars, rows),
                      Matrix(fld, len(rhs), 1, rhs)) if nvars else Matrix.zeros(fld, 0, 1)
    if sol is None:
        raise NoLift("no module map (s; t) with q1 o (s; t) = g2 exists; "
                     "composition by this construction is unavailable")
    flat = sol.column(0) if nvars else ()
    lift = Matrix(fld, dxm, dw, [flat[i * dw:(i + 1) * dw] for i in range(dxm)])
    dx, da = c1.x.dim, c1.m.dim
    sigma = lift.submatrix(range(dx), range(dw))
    tau = lift.submatrix(range(dx, dxm), range(dw))

    v_rep = direct_sum(c1.x, c2.x)[0]
    f_v = vstack(hstack(c1.f.mat, sigma),
                 hstack(Matrix.zeros(fld, dw, dx), c2.f.mat))
    g_v = hstack(c1.g.mat, tau)
    # q(x, w, a) = q2(w, q1(x, a))
    q2w = c2.q.mat.submatrix(range(c2.n.dim), range(dw))
    q2b = c2.q.mat.submatrix(range(c2.n.dim), range(dw, dw + c2.m.dim))
    inner = hstack(c1.q.mat.submatrix(range(c1.n.dim), range(dx)),
                   Matrix.zeros(fld, c1.n.dim, dw),
                   c1.q.mat.submatrix(range(c1.n.dim), range(dx, dx + da)))
    wsel = hstack(Matrix.zeros(fld, dw, dx), Matrix.identity(fld, dw),
                  Matrix.zeros(fld, dw, da))
    q_v = (q2w @ wsel) + (q2b @ inner)
    cert = RiedtmannCertificate.build(v_rep, c1.m, c2.n, f_v, g_v, q_v)
    return _verified(cert, "compose_certificates")


@dataclass(frozen=True)
class ChainResult:
    nfinal: Submodule
    yfinal: Submodule
    cert: RiedtmannCertificate
    trace: tuple[tuple[Submodule, Submodule], ...]


def _split_blocks(rep: Representation, k: int):
    """Extract the two diagonal blocks of a literal block-diagonal
    representation, or None if any off-diagonal block is nonzero."""
    d = rep.dim
    tops, bottoms = [], []
    for m in rep.mats:
        off1 = m.submatrix(range(k), range(k, d))
        off2 = m.submatrix(range(k, d), range(k))
        if not (off1.is_zero() and off2.is_zero()):
            return None
        tops.append(m.submatrix(range(k), range(k)))
        bottoms.append(m.submatrix(range(k, d), range(k, d)))
    top = Representation(rep.algebra, rep.field, k, tuple(tops))
    bottom = Representation(rep.algebra, rep.field, d - k, tuple(bottoms))
    return top, bottom


def virtual_chain(cert: RiedtmannCertificate, mprime: Submodule,
                  ) -> ChainResult:
    """Descend a virtual degeneration to a submodule.

    ``cert`` must certify M (+) Y <=deg N (+) Y with literally identified
    block factors, where M is the ambient of ``mprime``.  Each round pushes
    M' (+) Y_i through the current certificate, splits the result over
    (N_i, Y_i) and composes; the Y_i form a descending chain of subspaces
    of Y, so the loop stops within dim Y + 1 rounds, when Y stabilizes.

    NoLift from composition is re-raised with the completed trace attached.
    """
    m_rep = mprime.ambient
    dm = m_rep.dim
    blocks = _split_blocks(cert.m, dm)
    if blocks is None or blocks[0] != m_rep:
        raise AlgebraMismatch(
            "certificate M-slot is not the literal block sum M (+) Y")
    y_rep = blocks[1]
    dy = y_rep.dim
    nblocks = _split_blocks(cert.n, cert.n.dim - dy)
    if nblocks is None or nblocks[1] != y_rep:
        raise AlgebraMismatch(
            "certificate N-slot is not the literal block sum N (+) Y")
    n_rep = nblocks[0]

    fld = m_rep.field
    mp_local = mprime.space                      # M' in M coordinates, fixed
    cur_cert = cert
    cur_n, cur_y = n_rep, y_rep                  # materialized stage factors
    bn = Matrix.identity(fld, n_rep.dim)         # stage N in original N coords
    by = Matrix.identity(fld, y_rep.dim)
    y_local = Subspace.full(fld, dy)             # Y_i inside Y_{i-1}
    trace: list[tuple[Submodule, Submodule]] = []

    for _ in range(dy + 1):
        sub_space = Subspace.from_columns(block_diag(mp_local.basis, y_local.basis))
        sub = Submodule(cur_cert.m, sub_space)
        pushed = push_submodule(cur_cert, sub)
        split = split_submodule(cur_n, cur_y, Submodule(
            direct_sum(cur_n, cur_y)[0], pushed.nprime.space))
        try:
            composed = compose_certificates(pushed.cert, split.cert)
        except NoLift as err:
            raise NoLift(str(err), trace=trace) from err

        bn_next = bn @ split.xprime.space.basis
        by_next = by @ split.yprime.space.basis
        n_sub = Submodule(n_rep, Subspace.from_columns(bn_next))
        y_sub = Submodule(y_rep, Subspace.from_columns(by_next))
        trace.append((n_sub, y_sub))
        stabilized = y_sub.space == Subspace.from_columns(by)
        if stabilized:
            return ChainResult(n_sub, y_sub, composed, tuple(trace))
        cur_n, _ = sub_representation(cur_n, split.xprime.space)
        cur_y, _ = sub_representation(cur_y, split.yprime.space)
        # Later rounds work inside the materialized M' (+) Y_i, where the
        # M' block is full by construction.
        mp_local = Subspace.full(fld, mprime.dim)
        y_local = split.yprime.space
        bn, by = bn_next, by_next
        cur_cert = composed
    raise InternalInvariantViolation("descending chain failed to stabilize")
