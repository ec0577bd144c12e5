import random

import pytest
import sympy

from conftest import session_for
from oracle import Oracle, same, to_sympy
from quiverqg.freealg import (FreeElem, TensorElem, all_words, degrees_up_to, delta,
                              divided_power_word, parse_free)
from quiverqg.pairing import HeightCutoffError, Pairing, iso_commutator, serre_element
from quiverqg.quiver import QuiverError, preset
from quiverqg.scalars import ONE_S, V, Scalar, parse_scalar

E1, E2 = ((0, 1),), ((0, 2),)


def oracle_for(q, h):
    return Oracle(q.form, {g: to_sympy(q.nu(g)) for g in q.gen_indices(h)})


def test_generator_pairs():
    P = session_for("two-loop").pairing
    assert P.pair_words(E1, E1) == ONE_S
    assert P.pair_words(E2, E1 + E1) == V ** -1
    assert P.pair_words(E1 + E1, E1 + E1) == 1 + V ** -2


def test_lusztig_nu():
    s = session_for("two-loop", nu_preset="lusztig")
    nu = parse_scalar("1/(1 - v^-2)")
    assert s.pairing.pair_words(E2, E1 + E1) == V ** -1 * nu * nu


def test_gram_examples():
    g = session_for("jordan").pairing.gram((2,))
    assert g.words == [E2, E1 + E1]
    assert g.matrix == [[1, 1], [1, 2]]
    assert g.rank == 2 and g.kernel_dim == 0
    g = session_for("real").pairing.gram((2,))
    assert g.matrix == [[1 + V ** 2]]
    g = session_for("A2").pairing.gram((0, 0))
    assert g.words == [()] and g.matrix == [[ONE_S]] and g.rank == 1


def test_graded_dims():
    P = session_for("two-loop", 5).pairing
    assert [P.graded_dim((l,)) for l in range(1, 6)] == [1, 2, 4, 8, 16]
    P = session_for("real", 4).pairing
    assert [P.graded_dim((l,)) for l in range(1, 5)] == [1, 1, 1, 1]
    P = session_for("A2", 4).pairing
    assert P.graded_dim((2, 1)) == 2
    assert P.graded_dim((1, 1)) == 2


@pytest.mark.parametrize("name,seed", [("real", None), ("A2", None), ("jordan", 4),
                                       ("two-loop", None), ("two-loop", 9), ("A2-mixed", 11)])
def test_gram_matches_oracle(name, seed):
    s = session_for(name, 4, seed=seed)
    orc = oracle_for(s.q, 4)
    for d in degrees_up_to(s.q, 4 if s.q.n == 1 else 3):
        g = s.pairing.gram(d)
        for r, a in enumerate(g.words):
            for c, b in enumerate(g.words):
                assert same(to_sympy(g.matrix[r][c]), orc.pair(a, b)), (a, b)


@pytest.mark.parametrize("name", ["A2", "jordan", "two-loop", "A2-mixed"])
def test_gram_symmetric(name):
    s = session_for(name, 4, seed=2)
    for d in degrees_up_to(s.q, 4):
        assert s.pairing.gram(d).is_symmetric()


def test_grading_orthogonality():
    P = session_for("A2-mixed").pairing
    assert P.pair_words(((0, 1),), ((1, 1),)) == 0
    x = parse_free(P.q, "E[i,1]*E[j,1]")
    assert P.pair(x, parse_free(P.q, "E[j,2]")) == 0


@pytest.mark.parametrize("name", ["A2", "two-loop", "A2-mixed"])
def test_hopf_pairing_property(name):
    """⟨xy, z⟩ = ⟨x⊗y, δ(z)⟩ and ⟨x, yz⟩ = ⟨δ(x), y⊗z⟩."""
    s = session_for(name, 4, seed=5)
    q, P = s.q, s.pairing
    rng = random.Random(name)
    degs = [d for d in degrees_up_to(q, 2) if any(d)]
    for _ in range(20):
        da, db = rng.choice(degs), rng.choice(degs)
        dz = tuple(a + b for a, b in zip(da, db))
        x = FreeElem.word(rng.choice(all_words(q, da)))
        y = FreeElem.word(rng.choice(all_words(q, db)))
        z = FreeElem.zero()
        for w in all_words(q, dz)[:3]:
            z = z + FreeElem.word(w, Scalar.coerce(rng.randint(1, 3)))
        assert P.pair(x * y, z) == P.pair_tensor(TensorElem.pure(x, y), delta(q, z))
        assert P.pair(z, x * y) == P.pair_tensor(delta(q, z), TensorElem.pure(x, y))


def test_radical_is_ideal():
    s = session_for("A2", 5)
    q, P = s.q, s.pairing
    r = serre_element(q, (0, 1), 1)
    assert P.in_radical(r)
    for w in all_words(q, (1, 0)) + all_words(q, (0, 1)):
        x = FreeElem.word(w)
        assert P.in_radical(x * r) and P.in_radical(r * x)


def test_kernel_basis_in_radical():
    s = session_for("A2", 4)
    g = s.pairing.gram((1, 2))
    assert g.kernel_dim == 1
    assert all(s.pairing.in_radical(x) for x in g.kernel_basis)


def test_serre_element_examples():
    q = preset("A2")
    x = serre_element(q, (0, 1), 1)
    ei, ej = FreeElem.gen((0, 1)), FreeElem.gen((1, 1))
    ej2 = divided_power_word(q, 1, 2)
    assert x == ei * ej2 - ej * ei * ej + ej2 * ei
    q2 = preset("A2-mixed")
    x = serre_element(q2, (1, 2), 0)
    # (ι, i) = -2, so the sum runs to 3
    assert x.degree(q2) == (3, 2)
    with pytest.raises(QuiverError):
        serre_element(q2, (0, 1), 1)


def test_serre_disconnected():
    from quiverqg.quiver import QuiverSpec
    q = QuiverSpec(["i", "j"], [])
    x = serre_element(q, (0, 1), 1)
    ei, ej = FreeElem.gen((0, 1)), FreeElem.gen((1, 1))
    assert x == ei * ej - ej * ei
    assert Pairing(q, 2).in_radical(x)


def test_iso_commutator_examples():
    q = preset("jordan")
    assert iso_commutator(q, 0, 1, 1).is_zero()
    x = iso_commutator(q, 0, 1, 2)
    assert x == parse_free(q, "E[i,1]*E[i,2] - E[i,2]*E[i,1]")
    assert x.degree(q) == (3,)
    P = session_for("jordan", 4, seed=1).pairing
    assert P.in_radical(x)
    with pytest.raises(QuiverError):
        iso_commutator(preset("two-loop"), 0, 1, 2)


def test_radical_negative_controls():
    P = session_for("two-loop").pairing
    assert not P.in_radical(FreeElem.gen((0, 1)))
    # the two-loop commutator does not vanish
    x = FreeElem.gen((0, 1)) * FreeElem.gen((0, 2)) - FreeElem.gen((0, 2)) * FreeElem.gen((0, 1))
    assert not P.in_radical(x)


def test_uplus_coords():
    s = session_for("jordan", 4, seed=3)
    P = s.pairing
    assert P.uplus_coords(FreeElem.gen((0, 1))) == [s.q.nu((0, 1))]
    r = iso_commutator(s.q, 0, 1, 2)
    assert not any(P.uplus_coords(r))
    e3 = FreeElem.gen((0, 3))
    assert P.uplus_coords(e3) == P.uplus_coords(e3 + r)


def test_cutoff_error():
    P = session_for("jordan", 3).pairing
    with pytest.raises(HeightCutoffError, match="height cutoff exceeded"):
        P.gram((4,))


def test_zero_nu_rejected():
    q = preset("jordan").with_nu({(0, 2): Scalar.coerce(1)}, None)
    with pytest.raises(QuiverError):
        q.with_nu({(0, 2): Scalar()})


def test_oracle_is_independent_of_shortcuts():
    # hand value at a real vertex: ⟨E³, E³⟩ = (1 + v²)(1 + v² + v⁴)
    q = preset("real")
    orc = oracle_for(q, 3)
    w = E1 * 3
    v = sympy.Symbol("v")
    expected = (1 + v ** 2) * (1 + v ** 2 + v ** 4)
    assert same(orc.pair(w, w), expected)
    assert same(to_sympy(session_for("real").pairing.pair_words(w, w)), expected)
