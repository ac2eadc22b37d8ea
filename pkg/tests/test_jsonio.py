import json

import pytest

from hopfalg.catalog import make_cla_b
from hopfalg.errors import InputError
from hopfalg.jsonio import (cla_from_json, cla_to_json, element_to_terms,
                            load_object, presentation_from_json,
                            presentation_to_json)


def test_presentation_round_trip(K):
    data = presentation_to_json(K)
    back = presentation_from_json(data)
    assert back.algebra.names == K.algebra.names
    assert back.algebra.degrees == K.algebra.degrees
    assert back.algebra.kappa == K.algebra.kappa
    assert back.delta_gen == K.delta_gen


def test_presentation_schema_shape(A100):
    data = presentation_to_json(A100)
    assert data["generators"][0] == {"name": "X", "degree": 1,
                                     "bidegree": [1, 0]}
    assert data["commutators"]["Z,X"] == [{"coeff": "1", "monomial": {"X": 1}}]
    assert {"coeff": "1", "left": {"X": 1}, "right": {"Y": 1}} \
        in data["coproducts"]["Z"]


def test_omitted_tables_mean_trivial_structure():
    h = presentation_from_json(
        {"generators": [{"name": "X", "degree": 1},
                        {"name": "Y", "degree": 1}]})
    assert h.algebra.kappa == {}
    assert h.delta_gen == {}


def test_cla_round_trip():
    L = make_cla_b("4/3")
    data = cla_to_json(L)
    assert data["dim"] == 3
    assert cla_from_json(data) == L
    assert cla_from_json(json.loads(json.dumps(data))) == L


def test_cla_schema_shape():
    data = cla_to_json(make_cla_b(0))
    assert data["brackets"]["0,1"] == [{"coeff": "1", "basis": 1}]
    assert {"coeff": "1", "left": 0, "right": 1} in data["delta"]["2"]


def test_element_terms(K):
    p = K.algebra
    elt = p.monomial({"X": 1, "Y": 2}).scale("-1/2") + p.gen("W")
    assert element_to_terms(elt) == [
        {"coeff": "-1/2", "monomial": {"X": 1, "Y": 2}},
        {"coeff": "1", "monomial": {"W": 1}},
    ]


def test_load_object_dispatch(tmp_path, K):
    pres = tmp_path / "k.json"
    pres.write_text(json.dumps(presentation_to_json(K)))
    assert load_object(str(pres)).algebra.names == K.algebra.names
    cla = tmp_path / "b.json"
    cla.write_text(json.dumps(cla_to_json(make_cla_b(1))))
    assert load_object(str(cla)) == make_cla_b(1)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"foo": 1}))
    with pytest.raises(InputError):
        load_object(str(bad))
    notdict = tmp_path / "arr.json"
    notdict.write_text("[1,2]")
    with pytest.raises(InputError):
        load_object(str(notdict))


def test_malformed_presentation_rejected():
    with pytest.raises(InputError):
        presentation_from_json({"generators": [{"degree": 1}]})
    with pytest.raises(InputError):
        cla_from_json({"dim": 2, "basis": ["x"]})
