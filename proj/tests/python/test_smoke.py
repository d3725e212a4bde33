import pytest

import modvir


def test_irreducible_dims_match_fock_counts():
    assert modvir.irreducible_dims("1/2", "0", 6) == modvir.fock_dims("NS", "even", 6)
    assert modvir.irreducible_dims("1/2", "1/2", 6) == modvir.fock_dims("NS", "odd", 6)
    assert modvir.irreducible_dims("1/2", "1/16", 6) == modvir.fock_dims("R", "even", 6)


def test_characteristic_seven_anomaly():
    dims7 = modvir.irreducible_dims("1/2", "0", 4, char=7)
    assert dims7 == [1, 0, 1, 1, 1]
    assert modvir.vir_span_dims("NS", "even", 4, char=7)[4] == 1
    (u,) = modvir.singular_vectors("1/2", "0", 4, char=7, vacuum_quotient=True)
    assert u == [{"partition": [4], "coeff": "1 mod 7"}, {"partition": [2, 2], "coeff": "3 mod 7"}]


def test_singular_vector_degree_six():
    (s,) = modvir.singular_vectors("1/2", "0", 6, vacuum_quotient=True)
    coeffs = {tuple(t["partition"]): t["coeff"] for t in s}
    assert coeffs == {(6,): "1", (4, 2): "22/9", (3, 3): "-31/36", (2, 2, 2): "-16/27"}
    assert modvir.singular_vectors("1/2", "0", 3) == []


def test_formal_mode_action():
    (term,) = modvir.mode_apply("s", 5)
    assert term == {"partition": [], "coeff": ["0", "2", "-36", "64"]}
    (term,) = modvir.mode_apply([-2, -2, -2], 5)
    assert term["coeff"] == ["0", "8", "6", "1"]
    (term,) = modvir.mode_apply("u", 3, char=7)
    assert term["coeff"] == ["0 mod 7", "3 mod 7", "1 mod 7"]


def test_hw_vectors_weight_fifteen_halves():
    (vec,) = modvir.hw_vectors("NS", "odd", 7, char=7)
    assert vec[0] == {"sector": "NS", "modes": [-15], "coeff": "1 mod 7"}


def test_errors():
    with pytest.raises(ValueError, match="standing hypothesis"):
        modvir.irreducible_dims("1/2", "0", 3, char=2)
    with pytest.raises(ValueError):
        modvir.run("no-such-command")


def test_verify_subset():
    report = modvir.verify(["char7"])
    assert report["summary"]["failed"] == 0
    assert all(c["status"] == "pass" for c in report["checks"])
