"""Independent brute-force oracles and random generators for the tests.

Everything here is deliberately coded without reusing the library's
elimination or enumeration routines, so cross-checks stay honest.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from moddeg import AlgebraPresentation, Matrix, Representation, Subspace
from moddeg.fields import QQ


def independent_rank(rows: list[list[Fraction]]) -> int:
    """Fraction-based Gaussian elimination written from scratch (no pivot
    normalization, row-max pivot choice)."""
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    used = set()
    for c in range(cols):
        pivot = None
        best = None
        for i, r in enumerate(rows):
            if i in used or r[c] == 0:
                continue
            size = abs(r[c].numerator) + r[c].denominator
            if best is None or size > best:
                best, pivot = size, i
        if pivot is None:
            continue
        used.add(pivot)
        rank += 1
        prow = rows[pivot]
        for i, r in enumerate(rows):
            if i != pivot and r[c] != 0:
                factor = r[c] / prow[c]
                rows[i] = [x - factor * y for x, y in zip(r, prow)]
    return rank


def independent_hom_dim(m: Representation, n: Representation) -> int:
    """Intertwiner-space dimension via a Kronecker-product system over the
    rationals (only valid for rational representations, d <= 4)."""
    assert m.field == QQ and n.field == QQ
    dm, dn = m.dim, n.dim
    rows = []
    for a, b in zip(m.mats, n.mats):
        # vec(H A - B H) row for each output coordinate, H laid out row-major
        for i in range(dn):
            for j in range(dm):
                row = [Fraction(0)] * (dn * dm)
                for r in range(dn):
                    for c in range(dm):
                        coeff = Fraction(0)
                        if r == i:
                            coeff += Fraction(a.data[c][j])
                        if c == j:
                            coeff -= Fraction(b.data[i][r])
                        row[r * dm + c] += coeff
                rows.append(row)
    if not rows or not rows[0]:
        return 0
    return dn * dm - independent_rank(rows)


def all_vectors(p: int, d: int):
    for tup in product(range(p), repeat=d):
        yield tup


def brute_submodules(rep: Representation) -> set:
    """Second, slower enumeration: close every small generating set under
    the action and the span, then dedupe.

    Returns frozensets of vector tuples (the full point sets), which are
    basis-independent.
    """
    fld = rep.field
    p = fld.p
    d = rep.dim
    vectors = [v for v in all_vectors(p, d)]

    def act(mat: Matrix, vec):
        return tuple(sum(mat.data[i][j] * vec[j] for j in range(d)) % p
                     for i in range(d))

    def span_closure(gens):
        span = {tuple([0] * d)}
        frontier = list(gens)
        while frontier:
            v = frontier.pop()
            new = set()
            for w in span:
                for c in range(p):
                    u = tuple((wi + c * vi) % p for wi, vi in zip(w, v))
                    if u not in span:
                        new.add(u)
            span |= new
        # close under the generator matrices
        changed = True
        while changed:
            changed = False
            for mat in rep.mats:
                for v in list(span):
                    w = act(mat, v)
                    if w not in span:
                        for u in list(span):
                            for c in range(p):
                                x = tuple((ui + c * wi) % p
                                          for ui, wi in zip(u, w))
                                span.add(x)
                        changed = True
        return frozenset(span)

    found = {frozenset({tuple([0] * d)})}
    nonzero = [v for v in vectors if any(v)]
    for size in range(1, d + 1):
        for gens in combinations(nonzero, size):
            found.add(span_closure(gens))
    return found


def submodule_point_set(sub) -> frozenset:
    """All points of a submodule over a prime field, for comparison with
    brute_submodules output."""
    fld = sub.ambient.field
    p = fld.p
    basis = sub.space.basis
    d, k = basis.rows, basis.cols
    points = set()
    for coeffs in product(range(p), repeat=k):
        vec = tuple(sum(basis.data[i][j] * coeffs[j] for j in range(k)) % p
                    for i in range(d))
        points.add(vec)
    return frozenset(points)


def random_matrix(fld, rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix.from_rows(
        fld, [[fld.sample(rng, 3) for _ in range(cols)] for _ in range(rows)])


def random_invertible(fld, rng: random.Random, n: int) -> Matrix:
    while True:
        m = random_matrix(fld, rng, n, n)
        if m.rank() == n:
            return m


def random_subspace(fld, rng: random.Random, dim: int) -> Subspace:
    k = rng.randint(0, dim)
    return Subspace.from_columns(random_matrix(fld, rng, dim, k))


def random_nilpotent_rep(alg: AlgebraPresentation, fld, rng: random.Random,
                         dim: int, degree: int) -> Representation:
    """A random representation of k[X]/(X^degree): conjugate a Jordan-type
    nilpotent by a random invertible matrix."""
    from moddeg.fixtures import jordan_module
    parts = []
    left = dim
    while left:
        size = rng.randint(1, min(left, degree))
        parts.append(size)
        left -= size
    base = jordan_module(fld, degree, tuple(sorted(parts, reverse=True)))
    g = random_invertible(fld, rng, dim)
    from moddeg.linalg import inverse
    ginv = inverse(g)
    mats = tuple(ginv @ (m @ g) for m in base.mats)
    return Representation(alg, fld, dim, mats)
