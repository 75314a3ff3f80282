"""Ladder certificates, monicization, deformation families, the
upper-triangular embedding and orbit dimensions."""

import pytest

from moddeg import (Matrix, ModuleMap, build_family, direct_sum,
                    evaluate_family, ladder_from_columns,
                    make_monic, orbit_dim_ud, psi_embed,
                    series_isomorphic, validate,
                    verify_certificate, verify_ladder)
from moddeg.errors import BadParameter
from moddeg.fields import QQ
from moddeg.fixtures import (kron_r2_mu, ladder_nilp3_corner,
                             ladder_nilp3_shift, make_rep,
                             mu_corner_triangular, nu_prime_triangular,
                             nu_shift_triangular, regular_module,
                             simple_module, trivial_ladder,
                             truncated_polynomial_algebra)
from moddeg.series import ModuleChain, TriangularRep, chain_to_triangular
from moddeg.oracles import nilpotent_degenerates, nilpotent_rank_profile

KX2 = truncated_polynomial_algebra(2)


def test_both_shipped_ladders_verify():
    assert verify_ladder(ladder_nilp3_corner(QQ)).ok
    assert verify_ladder(ladder_nilp3_shift(QQ)).ok


def test_single_column_ladder_is_certificate_check():
    s = simple_module(QQ)
    lam = regular_module(QQ, 2)
    chain = ModuleChain((s,), ())
    good = ladder_from_columns(chain, chain, x=[s],
                               h=[], f=[Matrix.from_rows(QQ, [[1]])],
                               g=[Matrix.zeros(QQ, 1, 1)],
                               q=[Matrix.from_rows(QQ, [[0, 1]])])
    assert verify_ladder(good).ok
    assert verify_certificate(good.column(0)).ok
    bad = ladder_from_columns(chain, chain, x=[s],
                              h=[], f=[Matrix.from_rows(QQ, [[1]])],
                              g=[Matrix.zeros(QQ, 1, 1)],
                              q=[Matrix.zeros(QQ, 1, 2)])
    assert not verify_ladder(bad).ok


def test_make_monic_noop_on_monic_ladder():
    lad = ladder_nilp3_corner(QQ)
    mono = make_monic(lad)
    assert [x.dim for x in mono.x] == [x.dim for x in lad.x]
    assert all(a.mat == b.mat for a, b in zip(mono.h, lad.h))


def test_make_monic_shrinks_zero_map_column():
    s = simple_module(QQ)
    ss = direct_sum(s, s)[0]
    chain = ModuleChain((s, ss), (ModuleMap(s, ss, Matrix.from_rows(QQ, [[0], [1]])),))
    lad = ladder_from_columns(
        chain, chain,
        x=[s, s],
        h=[Matrix.zeros(QQ, 1, 1)],
        f=[Matrix.from_rows(QQ, [[1]]), Matrix.from_rows(QQ, [[1]])],
        g=[Matrix.zeros(QQ, 1, 1), Matrix.zeros(QQ, 2, 1)],
        q=[Matrix.from_rows(QQ, [[0, 1]]),
           Matrix.from_rows(QQ, [[0, 1, 0], [0, 0, 1]])])
    assert verify_ladder(lad).ok
    mono = make_monic(lad)
    assert [x.dim for x in mono.x] == [0, 1]
    assert verify_ladder(mono).ok
    # dimension bookkeeping of the replaced column
    assert mono.x[0].dim + mono.m_chain.stages[0].dim == \
        mono.x[0].dim + mono.n_chain.stages[0].dim


def test_family_on_zero_top_row_is_constant():
    tri = mu_corner_triangular(QQ)
    lad = trivial_ladder(tri)
    fam = build_family(make_monic(lad))
    for t in (0, 1, 5):
        member = evaluate_family(fam, t)
        assert member.rep.mats[1] == tri.rep.mats[1]


def test_family_reproduces_borders():
    lad = ladder_nilp3_corner(QQ)
    fam = build_family(make_monic(lad))
    mu = chain_to_triangular(lad.n_chain)
    nu = chain_to_triangular(lad.m_chain)
    assert series_isomorphic(evaluate_family(fam, 0), mu) is not None
    members = [evaluate_family(fam, t) for t in (1, 2, 3)]
    for member in members:
        assert series_isomorphic(member, nu) is not None
    assert series_isomorphic(members[0], members[1]) is not None
    assert series_isomorphic(members[1], members[2]) is not None


def test_family_bad_parameter_reported():
    # a column with f = -id makes phi_t vanish at t = 1
    s = simple_module(QQ)
    chain = ModuleChain((s,), ())
    lad = ladder_from_columns(
        chain, chain, x=[s], h=[],
        f=[Matrix.from_rows(QQ, [[-1]])],
        g=[Matrix.zeros(QQ, 1, 1)],
        q=[Matrix.from_rows(QQ, [[0, 1]])])
    assert verify_ladder(lad).ok
    fam = build_family(lad)
    assert evaluate_family(fam, 0).rep.dim == 1
    assert evaluate_family(fam, 2).rep.dim == 1
    with pytest.raises(BadParameter):
        evaluate_family(fam, 1)


def test_family_with_idempotent_constraint():
    mu = kron_r2_mu(QQ)
    lad = trivial_ladder(mu)
    cvec = (1, 1, 0, 0)
    fam = build_family(make_monic(lad), constraint=cvec)
    ambient = fam.ambient
    for i, pos in enumerate(cvec):
        e_mat = ambient.mats[ambient.algebra.idempotent_indices[pos]]
        col = fam.basis.column_matrix(i)
        assert (e_mat @ col) == col
    member = evaluate_family(fam, 2)
    assert member.rep.mats[0] == mu.rep.mats[0]
    assert member.rep.mats[1] == mu.rep.mats[1]


def test_psi_dimension_one_is_identity():
    s = simple_module(QQ)
    tri = TriangularRep(s)
    out = psi_embed(tri)
    assert out.dim == 1
    assert out.mats[0] == s.mats[0] and out.mats[1] == s.mats[1]
    assert validate(out).ok


def test_psi_d2_zero_action_patterns():
    rep = make_rep(KX2, QQ, [[[1, 0], [0, 1]], [[0, 0], [0, 0]]])
    out = psi_embed(TriangularRep(rep))
    assert out.dim == 3
    by_name = dict(zip(out.algebra.generators, out.mats))
    assert by_name["L_x"].is_zero()
    assert by_name["E1_1"] == Matrix.from_rows(QQ, [[0, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert by_name["E2_2"] == Matrix.from_rows(QQ, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert by_name["E1_2"] == Matrix.from_rows(QQ, [[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    assert validate(out).ok


def test_psi_matrix_unit_identities_d3():
    mu = mu_corner_triangular(QQ)
    out = psi_embed(mu)
    assert out.dim == 6
    assert validate(out).ok
    by_name = dict(zip(out.algebra.generators, out.mats))
    ident = Matrix.identity(QQ, 6)
    total = by_name["E1_1"] + by_name["E2_2"] + by_name["E3_3"]
    assert total == ident
    for i in (1, 2):
        e_cur = by_name[f"E{i}_{i}"]
        e_next = by_name[f"E{i + 1}_{i + 1}"]
        arrow = by_name[f"E{i}_{i + 1}"]
        assert (e_cur @ arrow) == arrow
        assert (arrow @ e_next) == arrow
    # stage blocks of the lifted generators sit on the diagonal in order
    for g_index, name in enumerate(("e", "x")):
        lifted = by_name[f"L_{name}"]
        off = 0
        for i in range(1, 4):
            stage = mu.stage(i).mats[g_index]
            block = lifted.submatrix(range(off, off + i), range(off, off + i))
            assert block == stage
            off += i


def test_psi_respects_all_declared_relations():
    for tri in (mu_corner_triangular(QQ), nu_shift_triangular(QQ),
                nu_prime_triangular(QQ), kron_r2_mu(QQ)):
        out = psi_embed(tri)
        report = validate(out)
        assert report.ok, report.failures()


def test_orbit_dim_ud_values():
    s = simple_module(QQ)
    assert orbit_dim_ud(TriangularRep(s)) == 0
    mu = mu_corner_triangular(QQ)
    nu = nu_shift_triangular(QQ)
    assert orbit_dim_ud(mu) == 1      # closure is the one-parameter corner set
    assert orbit_dim_ud(nu) == 2      # closure is the two-parameter top row
    # a verified ladder exhibits the bottom border inside the top's closure
    assert orbit_dim_ud(nu) >= orbit_dim_ud(mu)


def test_nilpotent_orbit_consistency():
    mu = mu_corner_triangular(QQ)
    nu = nu_shift_triangular(QQ)
    nup = nu_prime_triangular(QQ)
    # all three are conjugate as plain modules: equal rank profiles
    assert nilpotent_rank_profile(mu.rep) == nilpotent_rank_profile(nu.rep)
    assert nilpotent_rank_profile(mu.rep) == nilpotent_rank_profile(nup.rep)
    assert nilpotent_degenerates(mu.rep, nu.rep)
    assert nilpotent_degenerates(nu.rep, mu.rep)
    # the upper-triangular order is strictly finer: membership in the
    # corner closure requires both upper entries of the first row pattern
    x_nu = nu.rep.mats[1]
    in_corner_set = x_nu.entry(0, 1) == QQ.zero and x_nu.entry(1, 2) == QQ.zero
    assert not in_corner_set
    assert series_isomorphic(mu, nu) is None


def test_mutation_sweep_rejects_corrupted_ladders():
    fld = QQ
    for builder in (ladder_nilp3_corner, ladder_nilp3_shift):
        lad = builder(fld)
        total, rejected = 0, 0
        for mutant in _mutants(lad):
            total += 1
            if not verify_ladder(mutant).ok:
                rejected += 1
            else:
                assert verify_ladder(mutant).ok
        assert total > 50
        assert rejected / total >= 0.95


def _mutants(lad):
    """Yield copies of the ladder with one matrix entry bumped by one."""
    fld = lad.x[0].field

    def bump(mat, i, j):
        rows = [list(r) for r in mat.data]
        rows[i][j] = fld.add(rows[i][j], fld.one)
        return Matrix(fld, mat.rows, mat.cols, rows)

    groups = {
        "h": [m.mat for m in lad.h],
        "f": [m.mat for m in lad.f],
        "g": [m.mat for m in lad.g],
        "q": [m.mat for m in lad.q],
        "m_inc": [m.mat for m in lad.m_chain.inclusions],
        "n_inc": [m.mat for m in lad.n_chain.inclusions],
    }
    for key, mats in groups.items():
        for idx, mat in enumerate(mats):
            for i in range(mat.rows):
                for j in range(mat.cols):
                    new = {k: list(v) for k, v in groups.items()}
                    new[key][idx] = bump(mat, i, j)
                    m_chain = ModuleChain(
                        lad.m_chain.stages,
                        tuple(ModuleMap(lad.m_chain.stages[t],
                                        lad.m_chain.stages[t + 1], mm)
                              for t, mm in enumerate(new["m_inc"])))
                    n_chain = ModuleChain(
                        lad.n_chain.stages,
                        tuple(ModuleMap(lad.n_chain.stages[t],
                                        lad.n_chain.stages[t + 1], mm)
                              for t, mm in enumerate(new["n_inc"])))
                    yield ladder_from_columns(
                        m_chain, n_chain, list(lad.x),
                        new["h"], new["f"], new["g"], new["q"])
    # stage and top-row generator matrices are part of the data too
    rep_groups = [("x", list(lad.x)), ("m_stages", list(lad.m_chain.stages)),
                  ("n_stages", list(lad.n_chain.stages))]
    from moddeg import Representation
    for key, reps in rep_groups:
        for ridx, rep in enumerate(reps):
            for gidx, mat in enumerate(rep.mats):
                for i in range(mat.rows):
                    for j in range(mat.cols):
                        mats = list(rep.mats)
                        mats[gidx] = bump(mat, i, j)
                        mutated = Representation(rep.algebra, fld, rep.dim,
                                                 tuple(mats))
                        xs = list(lad.x)
                        m_stages = list(lad.m_chain.stages)
                        n_stages = list(lad.n_chain.stages)
                        if key == "x":
                            xs[ridx] = mutated
                        elif key == "m_stages":
                            m_stages[ridx] = mutated
                        else:
                            n_stages[ridx] = mutated
                        m_chain = ModuleChain(
                            tuple(m_stages),
                            tuple(ModuleMap(m_stages[t], m_stages[t + 1], mm.mat)
                                  for t, mm in enumerate(lad.m_chain.inclusions)))
                        n_chain = ModuleChain(
                            tuple(n_stages),
                            tuple(ModuleMap(n_stages[t], n_stages[t + 1], mm.mat)
                                  for t, mm in enumerate(lad.n_chain.inclusions)))
                        yield ladder_from_columns(
                            m_chain, n_chain, xs,
                            [m.mat for m in lad.h], [m.mat for m in lad.f],
                            [m.mat for m in lad.g], [m.mat for m in lad.q])
