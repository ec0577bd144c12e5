import pytest
from hypothesis import given, strategies as st

from quiverqg.expr import ParseError
from quiverqg.quiver import (PRESETS, QuiverError, compositions, dump_quiver, enumerate_c,
                             load_quiver, parse_quiver, partitions, preset, quantum_factorial,
                             quantum_integer, random_nu)
from quiverqg.scalars import ONE_S, Scalar, in_one_plus_vinv_nat, parse_scalar


def test_euler_form_presets():
    assert preset("real").form == ((2,),)
    assert preset("jordan").form == ((0,),)
    assert preset("two-loop").form == ((-2,),)
    assert preset("three-loop").form == ((-4,),)
    assert preset("A2").form == ((2, -1), (-1, 2))
    assert preset("A2-mixed").form == ((2, -1), (-1, -2))


def test_vertex_classes():
    q = preset("A2-mixed")
    assert q.vertex_class("i") == "real"
    assert q.vertex_class("j") == "imaginary"
    assert preset("jordan").vertex_class(0) == "isotropic"
    assert q.v_sub_i("j") == Scalar.vpow(-1)
    assert preset("three-loop").v_sub_i(0) == Scalar.vpow(-2)


def test_euler_form_bilinear():
    q = preset("A2-mixed")
    assert q.euler_form("i", "j") == -1
    assert q.euler_form((2, 1), (1, 3)) == 2 * 2 - 2 * 3 - 1 * 1 - 2 * 3
    assert q.euler_form({"j": 2}, "j") == -4
    assert q.gen_pairing((1, 3), "i") == -3


def test_generator_indices():
    q = preset("A2-mixed")
    assert q.gen_indices(3) == [(0, 1), (1, 1), (1, 2), (1, 3)]
    with pytest.raises(QuiverError):
        q.nu((0, 2))


def test_parse_file(tmp_path):
    text = """# A2 with loops at j
vertex i
vertex j
edge i j
edge j j   # loop
nu j 2 1/(1 - v^-2)
nu-default 1 + v^-1
"""
    p = tmp_path / "q.txt"
    p.write_text(text)
    q = load_quiver(p)
    assert q.vertices == ("i", "j")
    assert q.loops == (0, 1)
    assert q.nu(("j", 2)) == parse_scalar("1/(1 - v^-2)")
    assert q.nu(("j", 1)) == parse_scalar("1 + v^-1")
    q2 = parse_quiver(dump_quiver(q))
    assert q2.form == q.form and q2.nu_values == q.nu_values and q2.nu_default == q.nu_default


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_quiver("vertex i\n  bogus i\n")
    assert (err.value.line, err.value.column) == (2, 3)
    with pytest.raises(ParseError) as err:
        parse_quiver("vertex i\nnu i 1 1 + * v\n")
    assert err.value.line == 2
    with pytest.raises(QuiverError):
        parse_quiver("vertex i\nedge i k\n")
    with pytest.raises(QuiverError):
        parse_quiver("vertex i\nvertex i\n")
    with pytest.raises(QuiverError):
        parse_quiver("vertex i\nnu i 1 0\n")


def test_unknown_preset():
    with pytest.raises(QuiverError):
        preset("D4")
    assert preset("jordan", "lusztig").nu((0, 3)) == parse_scalar("1/(1 - v^-2)")


def test_random_nu_reproducible():
    q = preset("A2-mixed")
    a, b = random_nu(q, 3, 4), random_nu(q, 3, 4)
    assert a.nu_values == b.nu_values
    for g in q.gen_indices(4):
        assert in_one_plus_vinv_nat(a.nu(g), 10)


def test_random_nu_varies_with_seed():
    q = preset("three-loop")
    tables = {tuple(sorted(random_nu(q, s, 5).nu_values.items())) for s in range(6)}
    assert len(tables) > 1


def test_compositions_and_partitions():
    assert compositions(3) == ((3,), (2, 1), (1, 2), (1, 1, 1))
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [len(partitions(l)) for l in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]
    assert enumerate_c(preset("jordan"), 0, 3) == list(partitions(3))
    assert enumerate_c(preset("two-loop"), 0, 3) == list(compositions(3))
    with pytest.raises(QuiverError):
        enumerate_c(preset("real"), 0, 1)


@given(st.integers(1, 10))
def test_composition_count(l):
    cs = compositions(l)
    assert len(cs) == 2 ** (l - 1)
    assert all(sum(c) == l and min(c) >= 1 for c in cs)
    assert len(set(cs)) == len(cs)


def test_quantum_numbers():
    assert quantum_integer(3) == parse_scalar("v^2 + 1 + v^-2")
    assert quantum_factorial(3) == quantum_integer(2) * quantum_integer(3)
    assert quantum_factorial(0) == ONE_S


def test_all_presets_build():
    for name in PRESETS:
        q = preset(name)
        assert len(q.form) == q.n
