"""Composition series, triangular representations, and their conversions.

A triangular representation encodes a composition series through its
coordinate flags: the span of the first i unit vectors is a submodule for
every i, and conjugation by invertible upper-triangular matrices is
exactly isomorphism of composition series.  The extractors here are
deterministic (socle-based, least idempotent index first), so every
derived basis is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (DimensionMismatch, FieldTooSmall,
                     InternalInvariantViolation,
                     SimpleNotOneDimensional, TriangularityViolated,
                     VectorMismatch, VerificationFailed)
from .algebras import (ModuleMap, Representation, Submodule,
                       quotient_by_subspace, sub_representation)
from .linalg import (Matrix, Subspace, image, kernel,
                     solve_right, vstack)


def socle(rep: Representation) -> Submodule:
    """Common kernel of the radical generators' action.

    For the declared-radical presentations in scope this is the socle; the
    result is verified to be a submodule and the call fails otherwise.
    """
    space = Subspace.full(rep.field, rep.dim)
    for idx in rep.algebra.radical_indices:
        space = space.intersect(kernel(rep.mats[idx]))
    sub = Submodule(rep, space)
    sub.require_invariant()
    return sub


@dataclass(frozen=True)
class CompositionSeries:
    """An ascending flag of submodules with one-dimensional steps.

    ``factors[i]`` indexes into the algebra's declared idempotent list and
    identifies the simple quotient at step i+1.
    """

    ambient: Representation
    flags: tuple[Submodule, ...]
    factors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.flags)

    def factor_names(self) -> tuple[str, ...]:
        idem = self.ambient.algebra.idempotents
        return tuple(idem[i] for i in self.factors)


def composition_series(rep: Representation) -> CompositionSeries:
    """Deterministic socle-based extraction of a composition series.

    At each step: take the socle of the current quotient, pick the least
    declared idempotent acting nonzero on it, adjoin the first canonical
    basis vector of that eigenpiece to the flag, and recurse.
    """
    alg = rep.algebra
    if not alg.idempotents:
        raise SimpleNotOneDimensional(
            "composition factors need a declared idempotent set")
    fld = rep.field
    flag = Subspace.zero(fld, rep.dim)
    flags: list[Submodule] = []
    factors: list[int] = []
    while flag.dim < rep.dim:
        quot, proj, section = quotient_by_subspace(rep, flag)
        soc = socle(quot)
        step = None
        for pos, idx in enumerate(alg.idempotent_indices):
            piece = image(quot.mats[idx] @ soc.space.basis)
            if piece.dim > 0:
                step = (pos, piece.basis.column_matrix(0))
                break
        if step is None:
            raise SimpleNotOneDimensional(
                "no declared idempotent acts on the socle of the quotient")
        pos, vec = step
        lifted = section @ vec
        flag = flag.sum(Subspace.from_columns(lifted))
        sub = Submodule(rep, flag)
        if not sub.is_invariant():
            raise SimpleNotOneDimensional(
                "chosen socle vector does not span a submodule step")
        flags.append(sub)
        factors.append(pos)
    return CompositionSeries(rep, tuple(flags), tuple(factors))


@dataclass(frozen=True)
class ModuleChain:
    """An ascending chain of representations joined by injective maps.

    This is the shape of a composition series presented abstractly: stage
    dimensions are 1..d and each inclusion is a monic intertwiner.
    """

    stages: tuple[Representation, ...]
    inclusions: tuple[ModuleMap, ...]

    def __post_init__(self):
        if len(self.inclusions) != len(self.stages) - 1:
            raise DimensionMismatch("a chain of d stages needs d-1 inclusions")

    @property
    def length(self) -> int:
        return len(self.stages)

    def validate(self) -> bool:
        for i, stage in enumerate(self.stages):
            if stage.dim != i + 1:
                return False
        for i, inc in enumerate(self.inclusions):
            if inc.source != self.stages[i] or inc.target != self.stages[i + 1]:
                return False
            if not inc.is_intertwiner() or inc.mat.rank() != inc.source.dim:
                return False
        return True

    def flag_spaces(self) -> list[Subspace]:
        """The stage images inside the top stage's carrier space."""
        d = self.length
        spaces = [Subspace.full(self.stages[-1].field, d)]
        emb = Matrix.identity(self.stages[-1].field, d)
        for i in range(d - 2, -1, -1):
            emb = emb @ self.inclusions[i].mat
            spaces.append(Subspace.from_columns(emb))
        spaces.reverse()
        return spaces


def series_chain(series: CompositionSeries) -> ModuleChain:
    """Materialize a flag-based series as an abstract chain."""
    stages = []
    incs = []
    prev = None
    for sub in series.flags:
        stage, inc = sub_representation(series.ambient, sub.space)
        if prev is not None:
            local = solve_right(inc.mat, prev[1].mat)
            if local is None:
                raise InternalInvariantViolation("flag steps fail to nest")
            incs.append(ModuleMap(prev[0], stage, local))
        stages.append(stage)
        prev = (stage, inc)
    return ModuleChain(tuple(stages), tuple(incs))


@dataclass(frozen=True)
class TriangularRep:
    """A representation whose generator matrices are all upper triangular."""

    rep: Representation

    def __post_init__(self):
        bad = [name for name, m in zip(self.rep.algebra.generators, self.rep.mats)
               if not m.is_upper_triangular()]
        if bad:
            raise TriangularityViolated(
                f"generators {bad} are not upper triangular")

    @property
    def dim(self) -> int:
        return self.rep.dim

    def stage(self, i: int) -> Representation:
        """The representation carried by the first i coordinates."""
        mats = tuple(m.submatrix(range(i), range(i)) for m in self.rep.mats)
        return Representation(self.rep.algebra, self.rep.field, i, mats)

    def stage_inclusion(self, i: int) -> ModuleMap:
        fld = self.rep.field
        mat = vstack(Matrix.identity(fld, i), Matrix.zeros(fld, 1, i))
        return ModuleMap(self.stage(i), self.stage(i + 1), mat)

    def chain(self) -> ModuleChain:
        d = self.dim
        return ModuleChain(tuple(self.stage(i) for i in range(1, d + 1)),
                           tuple(self.stage_inclusion(i) for i in range(1, d)))


def triangularize_flags(rep: Representation,
                        flags: list[Subspace]) -> tuple[TriangularRep, Matrix]:
    """Change of basis adapted to an ascending flag of invariant subspaces.

    The i-th basis vector extends the previous ones inside flag i via the
    deterministic complement, so the output representation is triangular
    and conjugate to the input.  Returns the representation and the basis.
    """
    fld = rep.field
    cols = []
    prev = Subspace.zero(fld, rep.dim)
    for flag in flags:
        ext = prev.complement_basis(within=flag)
        cols.extend(ext.columns())
        prev = flag
    basis = Matrix.from_columns(fld, cols, rows=rep.dim)
    inv = solve_right(basis, Matrix.identity(fld, rep.dim))
    if inv is None:
        raise InternalInvariantViolation("adapted basis is singular")
    mats = tuple(inv @ (m @ basis) for m in rep.mats)
    out = Representation(rep.algebra, fld, rep.dim, mats)
    return TriangularRep(out), basis


def series_to_triangular(series: CompositionSeries) -> TriangularRep:
    """Rewrite the ambient module in a basis adapted to the series."""
    return triangularize_flags(series.ambient,
                               [f.space for f in series.flags])[0]


def chain_to_triangular(chain: ModuleChain) -> TriangularRep:
    """Realize an abstract chain as a triangular representation of its top
    stage, using the composed inclusion images as flags."""
    return triangularize_flags(chain.stages[-1], chain.flag_spaces())[0]


def triangular_to_series(tri: TriangularRep) -> CompositionSeries:
    """The coordinate flags of a triangular representation, with factors
    read off the idempotents' diagonals."""
    rep = tri.rep
    alg = rep.algebra
    fld = rep.field
    if not alg.idempotents:
        raise SimpleNotOneDimensional(
            "composition factors need a declared idempotent set")
    flags = []
    for i in range(1, rep.dim + 1):
        cols = [Matrix.unit_vector(fld, rep.dim, j).column(0) for j in range(i)]
        sub = Submodule(rep, Subspace.from_columns(
            Matrix.from_columns(fld, cols, rows=rep.dim)))
        sub.require_invariant()
        flags.append(sub)
    factors = []
    for i in range(rep.dim):
        hits = [pos for pos, idx in enumerate(alg.idempotent_indices)
                if not fld.is_zero(rep.mats[idx].entry(i, i))]
        if len(hits) != 1:
            raise SimpleNotOneDimensional(
                f"diagonal position {i} is not hit by exactly one idempotent")
        factors.append(hits[0])
    return CompositionSeries(rep, tuple(flags), tuple(factors))


def composition_vector(series: CompositionSeries) -> tuple[int, ...]:
    """The sequence of idempotent indices naming the simple factors."""
    return series.factors


def tc_idempotent_matrices(algebra, fld, cvec: tuple[int, ...]) -> list[Matrix]:
    """The prescribed diagonal 0/1 idempotent images for a composition
    vector: entry (j, j) of the i-th matrix is 1 exactly when c_j = e_i."""
    d = len(cvec)
    out = []
    for i in range(len(algebra.idempotents)):
        diag = [fld.one if cvec[j] == i else fld.zero for j in range(d)]
        out.append(Matrix(fld, d, d,
                          [[diag[r] if r == c else fld.zero for c in range(d)]
                           for r in range(d)]))
    return out


def tc_membership(tri: TriangularRep, cvec: tuple[int, ...]) -> bool:
    """Triangularity plus prescribed idempotent images."""
    rep = tri.rep
    if len(cvec) != rep.dim:
        raise DimensionMismatch("composition vector length differs from dim")
    wanted = tc_idempotent_matrices(rep.algebra, rep.field, cvec)
    return all(rep.mats[idx] == w
               for idx, w in zip(rep.algebra.idempotent_indices, wanted))


def simultaneous_triangularize(m: Representation, n: Representation,
                               sm: CompositionSeries, sn: CompositionSeries
                               ) -> tuple[TriangularRep, TriangularRep]:
    """Common triangular form for two modules with matching composition
    vectors: both outputs have the same (prescribed) idempotent images.

    Inductive construction: extend the adapted basis one flag step at a
    time, replacing each new vector v by e.v for the idempotent e naming
    the step's factor.  Raises VectorMismatch when the composition vectors
    differ, in which case no common triangularization on these series
    exists.
    """
    if composition_vector(sm) != composition_vector(sn):
        raise VectorMismatch(
            f"composition vectors differ: {sm.factor_names()} vs {sn.factor_names()}")

    def adapted(rep: Representation, series: CompositionSeries) -> Matrix:
        fld = rep.field
        cols = []
        prev = Subspace.zero(fld, rep.dim)
        for sub, pos in zip(series.flags, series.factors):
            e_mat = rep.mats[rep.algebra.idempotent_indices[pos]]
            raw = prev.complement_basis(within=sub.space).column_matrix(0)
            vec = e_mat @ raw
            cols.append(vec.column(0))
            prev = prev.sum(Subspace.from_columns(vec))
            if prev.dim != len(cols):
                raise InternalInvariantViolation(
                    "idempotent image fell into the previous flag")
        return Matrix.from_columns(fld, cols, rows=rep.dim)

    def conjugate(rep: Representation, basis: Matrix) -> TriangularRep:
        inv = solve_right(basis, Matrix.identity(rep.field, rep.dim))
        if inv is None:
            raise InternalInvariantViolation("adapted basis is singular")
        mats = tuple(inv @ (g @ basis) for g in rep.mats)
        return TriangularRep(Representation(rep.algebra, rep.field, rep.dim, mats))

    tm = conjugate(m, adapted(m, sm))
    tn = conjugate(n, adapted(n, sn))
    for idx in m.algebra.idempotent_indices:
        if tm.rep.mats[idx] != tn.rep.mats[idx]:
            raise VerificationFailed(
                "outputs disagree on an idempotent image despite matching vectors")
    return tm, tn


def upper_triangular_hom_basis(a: TriangularRep, b: TriangularRep) -> list[Matrix]:
    """Canonical basis of the space of upper-triangular intertwiners."""
    ra, rb = a.rep, b.rep
    if ra.dim != rb.dim:
        raise DimensionMismatch("triangular intertwiners need equal dimension")
    fld = ra.field
    d = ra.dim
    positions = [(r, c) for r in range(d) for c in range(r, d)]
    index = {p: i for i, p in enumerate(positions)}
    nvars = len(positions)
    rows = []
    for am, bm in zip(ra.mats, rb.mats):
        # (H . am - bm . H)[i][j] = 0 with H supported on r <= c
        for i in range(d):
            for j in range(d):
                row = [fld.zero] * nvars
                for c in range(d):
                    if (i, c) in index:
                        row[index[(i, c)]] = fld.add(row[index[(i, c)]], am.data[c][j])
                for r in range(d):
                    if (r, j) in index:
                        row[index[(r, j)]] = fld.sub(row[index[(r, j)]], bm.data[i][r])
                rows.append(row)
    ker = kernel(Matrix(fld, len(rows), nvars, rows))
    out = []
    for k in range(ker.dim):
        flat = ker.basis.column(k)
        mat = [[fld.zero] * d for _ in range(d)]
        for (r, c), i in index.items():
            mat[r][c] = flat[i]
        out.append(Matrix(fld, d, d, mat))
    return out


def series_isomorphic(a: TriangularRep, b: TriangularRep,
                      exhaustive_limit: int = 1 << 16) -> Optional[ModuleMap]:
    """Decide whether two triangular representations are conjugate under
    invertible upper-triangular matrices; returns a verified witness or
    None.

    An upper-triangular matrix is invertible iff its diagonal is nonzero,
    so existence reduces to the d diagonal coordinate functionals on the
    intertwiner space: if any vanishes identically the answer is no;
    otherwise a witness is found by a deterministic Vandermonde scan
    (exhaustively over tiny fields).  Raises FieldTooSmall when neither
    route is feasible.
    """
    basis = upper_triangular_hom_basis(a, b)
    d = a.dim
    fld = a.rep.field
    if d == 0:
        return ModuleMap(a.rep, b.rep, Matrix.zeros(fld, 0, 0))
    if not basis:
        return None
    k = len(basis)
    functionals = [[h.entry(j, j) for h in basis] for j in range(d)]
    if any(all(fld.is_zero(c) for c in row) for row in functionals):
        return None

    def witness_from(coeffs) -> Optional[ModuleMap]:
        acc = Matrix.zeros(fld, d, d)
        for c, h in zip(coeffs, basis):
            if not fld.is_zero(c):
                acc = acc + h.scale(c)
        if any(fld.is_zero(acc.entry(j, j)) for j in range(d)):
            return None
        out = ModuleMap(a.rep, b.rep, acc)
        if not out.is_intertwiner() or not acc.is_upper_triangular():
            raise InternalInvariantViolation("witness fails its own checks")
        return out

    # The product of the d diagonal functionals evaluated on the moment
    # curve (1, t, .., t^{k-1}) is a nonzero polynomial of degree at most
    # d*(k-1), so scanning d*(k-1)+1 distinct scalars must succeed.
    degree = d * (k - 1)
    if not fld.finite or fld.p > degree:
        scan = range(degree + 2) if not fld.finite else range(fld.p)
        for t in scan:
            tval = fld.coerce(t)
            coeffs, power = [], fld.one
            for _ in range(k):
                coeffs.append(power)
                power = fld.mul(power, tval)
            w = witness_from(coeffs)
            if w is not None:
                return w
        raise InternalInvariantViolation("Vandermonde scan failed unexpectedly")
    if fld.p ** k <= exhaustive_limit:
        from itertools import product
        for coeffs in product(fld.elements(), repeat=k):
            w = witness_from(coeffs)
            if w is not None:
                return w
        return None
    raise FieldTooSmall(
        f"field with {fld.p} elements is too small for dimension {d} and "
        f"exhaustive search over {fld.p}^{k} combinations is disabled")
