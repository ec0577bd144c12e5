import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import session_for
from quiverqg.casimir import (VermaVec, f_identity_holds, f_of, perturb_theta, theta_build,
                              theta_intertwine_check, theta_module_check)
from quiverqg.double import DoubleElem
from quiverqg.pairing import HeightCutoffError
from quiverqg.quiver import preset
from quiverqg.scalars import ONE_S, Scalar


def test_theta_degree_zero_and_real():
    s = session_for("real", seed=2)
    th = theta_build(s.uplus, s.double, 2)
    D = s.double
    assert th.components[(0,)] == [(D.one(), D.one())]
    [(bm, bs)] = th.components[(1,)]
    assert bm == D.F((0, 1))
    assert bs == D.E((0, 1)).scale(ONE_S / s.q.nu((0, 1)))


def test_theta_jordan_inverse_gram():
    s = session_for("jordan")
    D = s.double
    th = theta_build(s.uplus, D, 2)
    pairs = th.components[(2,)]
    assert len(pairs) == 2
    e2, e11 = D.E((0, 2)), D.E((0, 1)) * D.E((0, 1))
    f2, f11 = D.F((0, 2)), D.F((0, 1)) * D.F((0, 1))
    assert pairs[0] == (f2, e2.scale(Scalar.coerce(2)) - e11)
    assert pairs[1] == (f11, e11 - e2)


@pytest.mark.parametrize("name,p", [("real", 2), ("jordan", 3), ("A2", 3),
                                    ("two-loop", 4), ("A2-mixed", 3)])
def test_theta_intertwines(name, p):
    s = session_for(name, 4, seed=3)
    D, q = s.double, s.q
    th = theta_build(s.uplus, D, p)
    us = [D.K(v) for v in q.vertices]
    for g in q.gen_indices(p):
        us += [D.E(g), D.F(g)]
    for u in us:
        assert theta_intertwine_check(th, D, u)


@pytest.mark.parametrize("name", ["A2", "two-loop", "A2-mixed"])
def test_perturbed_theta_detected(name):
    s = session_for(name, 4)
    D, q = s.double, s.q
    th = theta_build(s.uplus, D, 3)
    bad = perturb_theta(th, q.unit(0))
    us = [D.E(g) for g in q.gen_indices(2)] + [D.F(g) for g in q.gen_indices(2)]
    assert not all(theta_intertwine_check(bad, D, u) for u in us)


def test_theta_cutoff_error():
    s = session_for("jordan", 4)
    D = s.double
    th = theta_build(s.uplus, D, 1)
    with pytest.raises(HeightCutoffError):
        theta_intertwine_check(th, D, D.scalar(0))
    # a tall generator only keeps the sectors the truncation fully covers
    assert theta_intertwine_check(th, D, D.E((0, 3)))


def _us(D, q, h):
    us = [D.K(v) for v in q.vertices]
    for g in q.gen_indices(h):
        us += [D.E(g), D.F(g)]
    return us


@pytest.mark.parametrize("name", ["real", "A2", "two-loop", "A2-mixed"])
def test_theta_on_module_tensor(name):
    s = session_for(name, 6, seed=1)
    D, q, V = s.double, s.q, s.casimir.verma
    th = theta_build(s.uplus, D, 3)
    alpha, beta = q.unit(0), tuple(1 for _ in range(q.n))
    b1 = V.basis(alpha, 1, s.uplus)
    b2 = V.basis(beta, 1, s.uplus)
    for u in _us(D, q, 2):
        for m1, m2 in itertools.product(b1, b2):
            assert theta_module_check(th, V, u, m1, m2)
    bad = perturb_theta(th, q.unit(0))
    assert not all(theta_module_check(bad, V, u, m1, m2)
                   for u in _us(D, q, 1) for m1, m2 in itertools.product(b1, b2))


def test_theta_module_cutoff():
    s = session_for("A2", 4)
    V = s.casimir.verma
    th = theta_build(s.uplus, s.double, 1)
    m = VermaVec((1, 0), {((1, 1),): ONE_S})
    with pytest.raises(HeightCutoffError):
        theta_module_check(th, V, s.double.F((0, 1)), m, m)


def test_verma_actions():
    s = session_for("A2-mixed", 4, seed=2)
    D, q, V = s.double, s.q, s.casimir.verma
    alpha = (2, -1)
    hv = VermaVec.highest(alpha)
    for i in range(q.n):
        k = q.euler_form(q.unit(i), alpha)
        assert V.act(D.K(q.unit(i)), hv).terms == {(): Scalar.vpow(k)}
        assert not V.act(D.E((i, 1)), hv).terms
        g = (i, 1)
        m = V.act(D.F(g), hv)
        got = V.act(D.E(g), m)
        exp = q.nu(g) * (Scalar.vpow(-k) - Scalar.vpow(k))
        assert got.terms == ({(): exp} if exp else {})


def test_omega_highest_weight():
    for name in ("real", "jordan", "A2-mixed"):
        s = session_for(name, 4, seed=5)
        C = s.casimir
        for alpha in [(0,) * s.q.n, s.q.unit(0), tuple(2 for _ in range(s.q.n))]:
            hv = VermaVec.highest(alpha)
            assert C.verma.equal(C.apply(hv, 0), hv)
            assert C.verma.equal(C.apply(hv, 2), hv)


def test_omega_regression_real_vertex():
    s = session_for("real", 4)
    C = s.casimir
    f = ((0, 1),)
    assert C.apply(VermaVec((1,), {f: ONE_S}), 1).terms == {f: Scalar.vpow(4)}
    assert C.apply(VermaVec((3,), {f: ONE_S}), 1).terms == {f: Scalar.vpow(12)}
    # the same scalars follow from f: v^(f(α) − f(α − i))
    q = s.q
    for a in range(-2, 4):
        e = f_of(q, (a,)) - f_of(q, (a - 1,))
        assert C.apply(VermaVec((a,), {f: ONE_S}), 1).terms == {f: Scalar.vpow(e)}


def test_omega_scalar_on_imaginary_vertex():
    s = session_for("two-loop", 4)
    C, q = s.casimir, s.q
    f = ((0, 1),)
    for a in range(-1, 3):
        e = f_of(q, (a,)) - f_of(q, (a - 1,))
        out = C.apply(VermaVec((a,), {f: ONE_S}))
        assert C.verma.equal(out, VermaVec((a,), {f: Scalar.vpow(e)}))


@pytest.mark.parametrize("name", ["real", "A2", "jordan", "two-loop", "A2-mixed"])
def test_casimir_identities(name):
    s = session_for(name, 4, seed=6)
    q, C = s.q, s.casimir
    weights = [(0,) * q.n, q.unit(0)]
    for alpha in weights:
        for i in range(q.n):
            for l in range(1, (2 if q.is_imaginary(i) else 1) + 1):
                assert all(ok for _, _, ok in C.identity_checks(alpha, i, l, 2))


def test_casimir_examples():
    s = session_for("jordan", 4)
    assert all(ok for _, _, ok in s.casimir.identity_checks((0,), 0, 2, 2))
    s = session_for("real", 5)
    assert all(ok for _, _, ok in s.casimir.identity_checks((1,), 0, 1, 3))


def test_casimir_stability():
    s = session_for("A2-mixed", 5)
    C, V = s.casimir, s.casimir.verma
    for m in V.basis((1, 1), 2, s.uplus):
        d = m.depth()
        assert V.equal(C.apply(m, d), C.apply(m, d + 1))
        assert V.equal(C.apply(m, d), C.apply(m, d + 2))


def test_casimir_preserves_weight_spaces():
    s = session_for("A2-mixed", 4)
    C, V = s.casimir, s.casimir.verma
    for m in V.basis((0, 1), 2, s.uplus):
        deg = {tuple(sum(l for j, l in w if j == k) for k in range(2)) for w in m.terms}
        out = C.apply(m)
        assert {tuple(sum(l for j, l in w if j == k) for k in range(2))
                for w in out.terms} <= deg


def test_f_examples():
    q = preset("A2-mixed")
    assert f_of(q, (0, 0)) == 0
    assert f_of(q, (1, 0)) == 2 + 2
    assert f_of(q, (0, 1)) == -2 - 2
    assert f_identity_holds(q, (3, -2), 0, 1)
    assert f_identity_holds(preset("jordan"), (5,), 0, 4)


@given(st.sampled_from(["real", "A2", "jordan", "two-loop", "three-loop", "A2-mixed"]),
       st.lists(st.integers(-6, 6), min_size=2, max_size=2), st.integers(1, 6))
def test_f_identity_property(name, alpha, l):
    q = preset(name)
    for i in range(q.n):
        assert f_identity_holds(q, alpha[:q.n], i, l)
    # a wrong right side must not hold in general
    if q.form[0][0] != 0 and l >= 2:
        a = q.dimvec(alpha[:q.n])
        shifted = tuple(x - (l if k == 0 else 0) for k, x in enumerate(a))
        lhs = f_of(q, shifted) - f_of(q, a) + 2 * l * q.euler_form(q.unit(0), a)
        assert lhs != l * l * q.form[0][0]


def test_double_elem_in_theta_legs():
    s = session_for("two-loop", 4)
    th = theta_build(s.uplus, s.double, 2)
    for pairs in th.components.values():
        for bm, bs in pairs:
            assert isinstance(bm, DoubleElem) and isinstance(bs, DoubleElem)
