import pytest

from dualpairs import (EmptyLift, IncompatiblePair,
                       NotInImage, UnsupportedRealClosure, closure_leq,
                       complex_orthogonal_space, complex_symplectic_space,
                       enumerate_orbits, formed_space, generalized_descent,
                       in_moment_image, k_descent,
                       orthogonal_space, pair_factorization,
                       reduced_pair_dims, symplectic_space, tableau,
                       theta_lift, zero_orbit)

SP2 = complex_symplectic_space(2)
SP4 = complex_symplectic_space(4)
O1 = complex_orthogonal_space(1)
O2 = complex_orthogonal_space(2)
O3 = complex_orthogonal_space(3)
O4 = complex_orthogonal_space(4)


def ctab(space, rows):
    return tableau(space, [(t, formed_space("C", "C", e, dim=m))
                           for t, e, m in rows])


T22 = ctab(SP4, [(2, 1, 2)])
T4 = ctab(SP4, [(4, 1, 1)])
T211 = ctab(SP4, [(2, 1, 1), (1, -1, 2)])
T31_O4 = ctab(O4, [(3, 1, 1), (1, 1, 1)])
REG2 = ctab(SP2, [(2, 1, 1)])


def test_in_moment_image():
    assert in_moment_image(T22, O2)
    assert not in_moment_image(T4, O2)
    for v in (O1, O2, O3):
        assert in_moment_image(zero_orbit(SP4), v)
    with pytest.raises(IncompatiblePair):
        in_moment_image(T22, SP2)  # same-type pair
    with pytest.raises(IncompatiblePair):
        in_moment_image(T22, symplectic_space(2))  # mixed base


def test_descent_22_to_zero():
    res = generalized_descent(T22, O2)
    assert res.target == zero_orbit(O2)
    assert res.a == 2 and res.b == 0 and res.s == 0
    assert res.strict


def test_descent_31_to_sp2():
    res = generalized_descent(T31_O4, SP2)
    assert res.target == REG2
    assert (res.a, res.b, res.s) == (0, 0, 1)
    assert res.strict


def test_descent_31_to_sp4():
    res = generalized_descent(T31_O4, SP4)
    assert res.target == T211
    assert res.b == 2 and not res.strict
    # Ker T is a symplectic plane, pinned by Witt cancellation
    assert res.U == formed_space("C", "C", -1, dim=2)


def test_descent_not_in_image():
    with pytest.raises(NotInImage):
        generalized_descent(T4, O2)


def test_descent_result_invariants():
    for v, vp in [(O2, SP4), (O3, SP4), (SP2, O4), (SP4, O4), (SP2, O3)]:
        for op in enumerate_orbits(vp):
            if not in_moment_image(op, v):
                continue
            res = generalized_descent(op, v)
            assert res.source == op and res.target.space == v
            assert res.a == res.U1.dim
            assert res.U.dim == res.a + res.b
            one_row = op.row_of_length(1)
            assert res.s == (one_row.mult.dim if one_row else 0)
            # 2-rows become the 1^a part of the padding, so erase to t >= 3
            erased = sorted((t - 1 for t in op.diagram() if t >= 3),
                            reverse=True)
            expect = tuple(sorted(erased + [1] * (res.a + res.b),
                                  reverse=True))
            assert res.target.diagram() == expect
            for row in res.target.rows:
                if row.t >= 2:
                    assert op.row_of_length(row.t + 1).mult == row.mult
            assert res.strict == (res.b == 0)


def test_theta_lift_examples():
    assert theta_lift(REG2, O4) == T31_O4
    assert theta_lift(zero_orbit(O2), SP4) == T22
    assert theta_lift(zero_orbit(O1), SP2) == REG2
    with pytest.raises(EmptyLift):
        theta_lift(REG2, O1)
    with pytest.raises(UnsupportedRealClosure):
        real = enumerate_orbits(symplectic_space(2))[0]
        theta_lift(real, orthogonal_space(2, 1))


def test_lift_descent_round_trip():
    pairs = [(O1, SP2), (O2, SP2), (O3, SP2), (O1, SP4), (O2, SP4),
             (O3, SP4), (SP2, O2), (SP2, O3), (SP2, O4), (SP4, O4)]
    for v, vp in pairs:
        for op in enumerate_orbits(vp):
            if not in_moment_image(op, v):
                continue
            res = generalized_descent(op, v)
            lifted = theta_lift(res.target, vp)
            assert closure_leq(op, lifted)
            if res.strict:
                assert lifted == op


def test_moment_image_monotone_under_closure():
    for v, vp in [(O2, SP4), (SP2, O4)]:
        orbs = enumerate_orbits(vp)
        for op in orbs:
            if not in_moment_image(op, v):
                continue
            for smaller in orbs:
                if closure_leq(smaller, op):
                    assert in_moment_image(smaller, v)


def test_k_descent_real_example():
    o21 = orthogonal_space(2, 1)
    sp2r = symplectic_space(2)
    op = tableau(o21, [(3, formed_space("R", "R", 1, signature=(1, 0)))])
    got = k_descent(op, sp2r)
    assert got == tableau(sp2r,
                          [(2, formed_space("R", "R", 1, signature=(1, 0)))])


def test_k_descent_embedding_obstruction():
    sp4r = symplectic_space(4)
    op = tableau(sp4r, [(2, formed_space("R", "R", 1, signature=(2, 0)))])
    assert k_descent(op, orthogonal_space(2, 0)) == \
        zero_orbit(orthogonal_space(2, 0))
    assert k_descent(op, orthogonal_space(1, 1)) is None


def test_k_descent_zero_orbit():
    sp2r = symplectic_space(2)
    v = orthogonal_space(2, 1)
    assert k_descent(zero_orbit(sp2r), v) == zero_orbit(v)
    with pytest.raises(IncompatiblePair):
        k_descent(zero_orbit(SP2), v)


def test_k_descent_agrees_with_complex_diagrams():
    from dualpairs import complexify, complexify_tableau
    for v in [orthogonal_space(2, 1), orthogonal_space(1, 2),
              symplectic_space(2), symplectic_space(4)]:
        for vp in [orthogonal_space(2, 1), orthogonal_space(3, 1),
                   symplectic_space(2), symplectic_space(4)]:
            if v.epsilon * vp.epsilon != -1:
                continue
            for op in enumerate_orbits(vp):
                got = k_descent(op, v)
                if got is None:
                    continue
                cres = generalized_descent(complexify_tableau(op),
                                           complexify(v))
                assert complexify_tableau(got).diagram() == \
                    cres.target.diagram()


def test_pair_factorization_examples():
    f = pair_factorization(generalized_descent(T31_O4, SP4))
    assert (f.m_xxp.name, f.l.name, f.lp.name) == \
        ("O(1,C)", "Sp(2,C)", "O(1,C)")
    assert f.l_space == formed_space("C", "C", -1, dim=2)
    assert f.lp_space == formed_space("C", "C", 1, dim=1)

    f = pair_factorization(generalized_descent(T22, O2))
    assert f.m_xxp.name == "O(2,C)"
    assert f.l.name == "1" and f.lp.name == "1"

    f = pair_factorization(generalized_descent(zero_orbit(SP4), O3))
    assert f.m_xxp.name == "1"
    assert f.l.name == "O(3,C)"
    assert f.lp.name == "Sp(4,C)"


def test_factorization_dimension_checks():
    from dualpairs import stabilizer
    for v, vp in [(O2, SP4), (O3, SP4), (SP2, O4), (SP2, O3), (SP4, O4)]:
        for op in enumerate_orbits(vp):
            if not in_moment_image(op, v):
                continue
            res = generalized_descent(op, v)
            f = pair_factorization(res)
            assert stabilizer(op).lie_dim == f.m_xxp.lie_dim + f.lp.lie_dim
            assert stabilizer(res.target).lie_dim >= \
                f.m_xxp.lie_dim + f.l.lie_dim


def test_reduced_pair_dims():
    assert reduced_pair_dims(generalized_descent(T31_O4, SP4)) == (2, 4)
    strict = generalized_descent(T31_O4, SP2)
    assert reduced_pair_dims(strict)[0] == 0
    zres = generalized_descent(zero_orbit(SP4), O2)
    w, w0 = reduced_pair_dims(zres)
    assert w == 2 * 4
    assert w0 == 2 * 4  # both sides concentrated in weight 0
