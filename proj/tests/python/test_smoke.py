from fractions import Fraction

import pytest

import rrloc


def test_catalog_lists_entries():
    names = rrloc.catalog_names()
    assert "cp1-k" in names and "su2-exceptional" in names


def test_projective_line_calibration():
    assert rrloc.character("cp1-k") == {-1: 1, 0: 1, 1: 1}
    assert rrloc.invariant_dimension("cp1-k") == 1
    assert rrloc.reduced("cp1-k")["total"] == 1


def test_double_cover_correction():
    r = rrloc.reduced("cp1-double")
    assert r["main_term"] == Fraction(1, 2)
    assert r["corrections"] == {2: Fraction(-1, 2)}
    assert r["total"] == rrloc.invariant_dimension("cp1-double") == 0


def test_verify_report():
    report = rrloc.verify("cp2-k", k=2)
    assert report["verdict"] == "PASS"
    assert report["lefschetz"] == "3"
    assert report["oracle"] == 3
    assert all(row["sum"]["coefficients"] in ([], ["0"]) for row in report["residues"])


def test_negative_control():
    report = rrloc.verify("su2-exceptional")
    assert report["verdict"] == "NOT-ASSERTED"
    assert report["lefschetz"] != report["reduction"]["total"]


def test_dict_instance_and_tensor_power():
    doc = {
        "group": "U1",
        "components": [
            {"name": "s", "moment": -1, "weights": [-1]},
            {"name": "n", "moment": 1, "weights": [1]},
        ],
    }
    assert rrloc.invariant_dimension(doc, k=3) == 1
    assert rrloc.character(doc, k=2) == {-2: 1, -1: 1, 0: 1, 1: 1, 2: 1}
    assert rrloc.catalog("cp1-k", 2)["components"][0]["weights"] == [-1]


def test_errors_are_typed():
    with pytest.raises(rrloc.InputError):
        rrloc.character({"components": [{"name": "p", "moment": 1, "weights": [1]}]})
    with pytest.raises(rrloc.InputError):
        rrloc.verify({"components": [{"name": "p", "moment": 0.5, "weights": [1]}]})
    with pytest.raises(rrloc.InputError):
        rrloc.catalog("no-such-entry")


def test_catalog_k_is_entry_parameter():
    assert rrloc.character("cp1-k", k=2) == {-1: 1, 0: 1, 1: 1}
    assert rrloc.invariant_dimension("cp1-k", k=3) == rrloc.invariant_dimension(rrloc.catalog("cp1-k", 3))
