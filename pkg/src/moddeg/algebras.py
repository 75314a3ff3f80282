"""Algebra presentations, representations, module maps and the standard
module constructions (kernel, image, cokernel, direct sum, submodule,
quotient), plus the intertwiner-space solver and isomorphism testing.

A representation of dimension d assigns one d x d matrix to every declared
generator; relations are checked by evaluating them on those matrices,
never symbolically.  Module elements are column vectors and a word
``(i, j)`` in a relation acts as ``mats[i] @ mats[j]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (AlgebraMismatch, DimensionMismatch, FieldMismatch,
                     NotSubmodule, Undecided)
from .linalg import (Matrix, Subspace, block_diag, hstack, image, kernel,
                     solve_right, vstack)

# A relation is a sum of terms; each term is (integer coefficient, word),
# a word being a nonempty tuple of generator indices.  Integer coefficients
# keep presentations field-agnostic.
Relation = tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class AlgebraPresentation:
    """A finite presentation of the ambient algebra.

    ``idempotents`` is the declared complete orthogonal set of primitive
    idempotents E, ``radical_generators`` the subset spanning the radical
    multiplicatively.  ``unit_generator`` is None when the unit is the sum
    of the declared idempotents, otherwise the name of the generator that
    must act as the identity.
    """

    name: str
    generators: tuple[str, ...]
    idempotents: tuple[str, ...]
    radical_generators: tuple[str, ...]
    relations: tuple[Relation, ...]
    unit_generator: Optional[str] = None

    def __post_init__(self):
        seen = set(self.generators)
        if len(seen) != len(self.generators):
            raise ValueError("duplicate generator names")
        for name in self.idempotents + self.radical_generators:
            if name not in seen:
                raise ValueError(f"unknown generator {name!r}")
        if set(self.idempotents) & set(self.radical_generators):
            raise ValueError("idempotents and radical generators must be disjoint")
        if self.unit_generator is not None and self.unit_generator not in seen:
            raise ValueError(f"unknown unit generator {self.unit_generator!r}")
        for rel in self.relations:
            for coeff, word in rel:
                if coeff == 0:
                    raise ValueError("zero coefficient in relation")
                if not word:
                    raise ValueError("empty word in relation")
                if any(not (0 <= g < len(self.generators)) for g in word):
                    raise ValueError("relation references unknown generator")

    def index(self, name: str) -> int:
        return self.generators.index(name)

    @property
    def idempotent_indices(self) -> tuple[int, ...]:
        return tuple(self.index(n) for n in self.idempotents)

    @property
    def radical_indices(self) -> tuple[int, ...]:
        return tuple(self.index(n) for n in self.radical_generators)


@dataclass(frozen=True)
class Representation:
    """A point of the representation space: one matrix per generator."""

    algebra: AlgebraPresentation
    field: object
    dim: int
    mats: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.mats) != len(self.algebra.generators):
            raise DimensionMismatch("one matrix per generator required")
        for m in self.mats:
            if m.rows != self.dim or m.cols != self.dim:
                raise DimensionMismatch("generator matrices must be dim x dim")
            if m.field != self.field:
                raise FieldMismatch("matrix field differs from representation field")

    def mat(self, gen_name: str) -> Matrix:
        return self.mats[self.algebra.index(gen_name)]

    def is_triangular(self) -> bool:
        return all(m.is_upper_triangular() for m in self.mats)


def zero_representation(algebra: AlgebraPresentation, fld) -> Representation:
    mats = tuple(Matrix.zeros(fld, 0, 0) for _ in algebra.generators)
    return Representation(algebra, fld, 0, mats)


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    items: tuple[CheckItem, ...]

    @property
    def ok(self) -> bool:
        return all(it.ok for it in self.items)

    def failures(self) -> list[CheckItem]:
        return [it for it in self.items if not it.ok]

    def as_dict(self) -> dict:
        return {"ok": self.ok,
                "items": [{"name": it.name, "ok": it.ok, "detail": it.detail}
                          for it in self.items]}

    def __str__(self):
        lines = [f"[{'ok' if it.ok else 'FAIL'}] {it.name}"
                 + (f": {it.detail}" if it.detail else "")
                 for it in self.items]
        return "\n".join(lines)


def evaluate_word(rep: Representation, word: Sequence[int]) -> Matrix:
    out = rep.mats[word[0]]
    for g in word[1:]:
        out = out @ rep.mats[g]
    return out


def evaluate_relation(rep: Representation, rel: Relation) -> Matrix:
    acc = Matrix.zeros(rep.field, rep.dim, rep.dim)
    for coeff, word in rel:
        acc = acc + evaluate_word(rep, word).scale(rep.field.coerce(Fraction(coeff)))
    return acc


def _relation_str(alg: AlgebraPresentation, rel: Relation) -> str:
    terms = []
    for coeff, word in rel:
        w = "*".join(alg.generators[g] for g in word)
        terms.append(f"{coeff}*{w}" if coeff != 1 else w)
    return " + ".join(terms)


def validate(rep: Representation) -> Report:
    """Check membership in the representation space: every relation
    evaluates to zero, idempotent images behave, the unit acts as one."""
    alg = rep.algebra
    items = []
    for rel in alg.relations:
        value = evaluate_relation(rep, rel)
        items.append(CheckItem(
            f"relation {_relation_str(alg, rel)} = 0", value.is_zero(),
            "" if value.is_zero() else f"evaluates to {value!r}"))
    idem = [(n, rep.mat(n)) for n in alg.idempotents]
    for n, m in idem:
        ok = (m @ m) == m
        items.append(CheckItem(f"idempotent {n}^2 = {n}", ok))
    for i, (n1, m1) in enumerate(idem):
        for n2, m2 in idem[i + 1:]:
            ok = (m1 @ m2).is_zero() and (m2 @ m1).is_zero()
            items.append(CheckItem(f"orthogonality {n1}*{n2} = {n2}*{n1} = 0", ok))
    if alg.unit_generator is None:
        if idem:
            total = idem[0][1]
            for _, m in idem[1:]:
                total = total + m
            ok = total == Matrix.identity(rep.field, rep.dim)
            items.append(CheckItem("idempotents sum to the identity", ok))
    else:
        ok = rep.mat(alg.unit_generator) == Matrix.identity(rep.field, rep.dim)
        items.append(CheckItem(f"unit generator {alg.unit_generator} acts as identity", ok))
    return Report(tuple(items))


@dataclass(frozen=True)
class ModuleMap:
    """A linear map intertwining two representations of the same algebra."""

    source: Representation
    target: Representation
    mat: Matrix

    def __post_init__(self):
        if self.mat.rows != self.target.dim or self.mat.cols != self.source.dim:
            raise DimensionMismatch("module map matrix must be target.dim x source.dim")

    def is_intertwiner(self) -> bool:
        return all((self.mat @ a) == (b @ self.mat)
                   for a, b in zip(self.source.mats, self.target.mats))

    def validate(self) -> Report:
        items = [CheckItem("same algebra", self.source.algebra == self.target.algebra),
                 CheckItem("same field", self.source.field == self.target.field)]
        for name, a, b in zip(self.source.algebra.generators, self.source.mats, self.target.mats):
            items.append(CheckItem(f"intertwines {name}", (self.mat @ a) == (b @ self.mat)))
        return Report(tuple(items))

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        if inner.target is not self.source and inner.target != self.source:
            raise AlgebraMismatch("composition target/source mismatch")
        return ModuleMap(inner.source, self.target, self.mat @ inner.mat)

    @classmethod
    def identity(cls, rep: Representation) -> "ModuleMap":
        return cls(rep, rep, Matrix.identity(rep.field, rep.dim))

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "ModuleMap":
        return cls(source, target, Matrix.zeros(source.field, target.dim, source.dim))


@dataclass(frozen=True)
class Submodule:
    """A generator-invariant subspace of a representation's carrier space."""

    ambient: Representation
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.ambient.dim:
            raise DimensionMismatch("subspace does not live in the module")

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_invariant(self) -> bool:
        b = self.space.basis
        return all(self.space.contains(image(m @ b)) for m in self.ambient.mats)

    def require_invariant(self):
        if not self.is_invariant():
            raise NotSubmodule("subspace is not invariant under the algebra action")


def _check_compatible(a: Representation, b: Representation):
    if a.algebra != b.algebra:
        raise AlgebraMismatch("representations over different algebras")
    if a.field != b.field:
        raise FieldMismatch("representations over different fields")


def direct_sum(a: Representation, b: Representation):
    """Block-diagonal sum, with canonical injections and projections.

    Returns ``(rep, inj_a, inj_b, proj_a, proj_b)``; the ``a`` block comes
    first.
    """
    _check_compatible(a, b)
    mats = tuple(block_diag(ma, mb) for ma, mb in zip(a.mats, b.mats))
    rep = Representation(a.algebra, a.field, a.dim + b.dim, mats)
    fld = a.field
    ia = vstack(Matrix.identity(fld, a.dim), Matrix.zeros(fld, b.dim, a.dim))
    ib = vstack(Matrix.zeros(fld, a.dim, b.dim), Matrix.identity(fld, b.dim))
    pa = hstack(Matrix.identity(fld, a.dim), Matrix.zeros(fld, a.dim, b.dim))
    pb = hstack(Matrix.zeros(fld, b.dim, a.dim), Matrix.identity(fld, b.dim))
    return (rep, ModuleMap(a, rep, ia), ModuleMap(b, rep, ib),
            ModuleMap(rep, a, pa), ModuleMap(rep, b, pb))


def hom_basis(m: Representation, n: Representation) -> list[ModuleMap]:
    """A canonical basis of the intertwiner space Hom(m, n).

    Solves the linear system ``H . m_g = n_g . H`` over all generators g;
    the basis comes from the canonical kernel echelon form, so the output
    is deterministic.
    """
    _check_compatible(m, n)
    fld = m.field
    dm, dn = m.dim, n.dim
    if dn * dm == 0:
        return []
    # equation (g, i, j): sum_r b[i][r] h[r][j] - sum_c h[i][c] a[c][j] = 0
    ker = kernel(_hom_system(m, n))
    out = []
    for j in range(ker.dim):
        flat = ker.basis.column(j)
        mat = Matrix(fld, dn, dm, [flat[i * dm:(i + 1) * dm] for i in range(dn)])
        out.append(ModuleMap(m, n, mat))
    return out


def _hom_system(m: Representation, n: Representation) -> Matrix:
    fld = m.field
    dm, dn = m.dim, n.dim
    nvars = dn * dm
    rows = []
    for a, b in zip(m.mats, n.mats):
        for i in range(dn):
            for j in range(dm):
                row = [fld.zero] * nvars
                for r in range(dn):
                    row[r * dm + j] = fld.add(row[r * dm + j], b.data[i][r])
                for c in range(dm):
                    row[i * dm + c] = fld.sub(row[i * dm + c], a.data[c][j])
                rows.append(row)
    return Matrix(fld, len(rows), nvars, rows)


def hom_dim(m: Representation, n: Representation) -> int:
    """dim Hom(m, n), via the rank of the intertwiner system (cheaper
    than materializing the basis)."""
    _check_compatible(m, n)
    nvars = n.dim * m.dim
    if nvars == 0:
        return 0
    return nvars - _hom_system(m, n).rank()


def sub_representation(rep: Representation, space: Subspace):
    """The induced representation on a canonical basis of an invariant
    subspace, with its inclusion map.  Raises NotSubmodule otherwise."""
    b = space.basis
    mats = []
    for m in rep.mats:
        coords = solve_right(b, m @ b)
        if coords is None:
            raise NotSubmodule("subspace is not invariant under the algebra action")
        mats.append(coords)
    sub = Representation(rep.algebra, rep.field, space.dim, tuple(mats))
    return sub, ModuleMap(sub, rep, b)


def quotient_by_subspace(rep: Representation, space: Subspace):
    """Quotient of ``rep`` by an invariant subspace.

    Returns ``(quotient, projection, section)`` where the quotient acts on
    the deterministic complement basis and ``section`` embeds quotient
    coordinates back into the ambient space (a right inverse of the
    projection, linear but generally not a module map).
    """
    comp = space.complement_basis()
    full = hstack(space.basis, comp)
    inv = solve_right(full, Matrix.identity(rep.field, rep.dim))
    if inv is None:
        raise DimensionMismatch("complement basis failed to complete")
    qdim = comp.cols
    proj = inv.submatrix(range(space.dim, rep.dim), range(rep.dim))
    mats = []
    for m in rep.mats:
        mats.append(proj @ (m @ comp))
    quot = Representation(rep.algebra, rep.field, qdim, tuple(mats))
    if not all((proj @ (m @ space.basis)).is_zero() for m in rep.mats):
        raise NotSubmodule("subspace is not invariant under the algebra action")
    return quot, ModuleMap(rep, quot, proj), comp


def kernel_module(f: ModuleMap):
    """Kernel with its inclusion, as an honest representation."""
    return sub_representation(f.source, kernel(f.mat))


def image_module(f: ModuleMap):
    """Image inside the target, with its inclusion."""
    return sub_representation(f.target, image(f.mat))


def cokernel_module(f: ModuleMap):
    """Cokernel on the deterministic complement basis, with projection."""
    quot, proj, _ = quotient_by_subspace(f.target, image(f.mat))
    return quot, proj


def quotient_module(rep: Representation, sub: Submodule):
    if sub.ambient != rep:
        raise NotSubmodule("submodule belongs to a different representation")
    sub.require_invariant()
    quot, proj, _ = quotient_by_subspace(rep, sub.space)
    return quot, proj


def submodule_generated(rep: Representation, vectors: Sequence[Matrix]) -> Submodule:
    """Least invariant subspace containing the vectors, by closure
    iteration: apply all generator matrices until the span stabilizes."""
    space = Subspace.from_columns(
        hstack(*vectors) if vectors else Matrix.zeros(rep.field, rep.dim, 0))
    while True:
        grown = space
        for m in rep.mats:
            if space.dim:
                grown = grown.sum(image(m @ space.basis))
        if grown == space:
            break
        space = grown
    return Submodule(rep, space)


def _invertible(mat: Matrix) -> bool:
    return mat.rank() == mat.rows


def find_isomorphism(m: Representation, n: Representation, seed: int = 0,
                     max_trials: int = 32) -> Optional[ModuleMap]:
    """An invertible intertwiner m -> n, or None when provably none exists.

    Dimension or Hom-dimension mismatches prove non-isomorphism.  The
    invertibility search tries the Hom basis, then seeded random
    combinations; over small finite fields it falls back to exhaustive
    enumeration, which also proves the negative case.  Raises Undecided
    when every bounded strategy is exhausted without either outcome.
    """
    _check_compatible(m, n)
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return ModuleMap(m, n, Matrix.zeros(m.field, 0, 0))
    basis = hom_basis(m, n)
    if not basis:
        return None
    k = len(basis)
    if not (k == hom_dim(m, m) == hom_dim(n, n)):
        return None
    for h in basis:
        if _invertible(h.mat):
            return h

    def combine(coeffs):
        acc = Matrix.zeros(m.field, n.dim, m.dim)
        for c, h in zip(coeffs, basis):
            if not m.field.is_zero(c):
                acc = acc + h.mat.scale(c)
        return acc

    fld = m.field
    if fld.finite and k <= 8 and fld.p ** k <= 1 << 16:
        from itertools import product
        for coeffs in product(fld.elements(), repeat=k):
            mat = combine(coeffs)
            if _invertible(mat):
                return ModuleMap(m, n, mat)
        return None
    rng = random.Random(seed)
    for trial in range(max_trials):
        bound = 1 + trial // 8
        coeffs = [fld.sample(rng, bound) for _ in range(k)]
        mat = combine(coeffs)
        if _invertible(mat):
            return ModuleMap(m, n, mat)
    raise Undecided(
        f"no invertible intertwiner found in {max_trials} trials; "
        "hom dimensions agree so non-isomorphism is not proven")


def is_isomorphic(m: Representation, n: Representation, seed: int = 0,
                  max_trials: int = 32) -> bool:
    """True iff an invertible intertwiner was found and verified.

    Raises Undecided rather than guessing; never returns True without a
    witness.
    """
    return find_isomorphism(m, n, seed=seed, max_trials=max_trials) is not None
