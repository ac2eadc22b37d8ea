from fractions import Fraction

import pytest

from hopfalg.catalog import (build, family_parameter_names,
                             from_cli_params, list_catalog, make_A, make_B,
                             make_D, make_E, make_F, make_cla_35,
                             make_cla_a, make_cla_b, make_lie)
from hopfalg.cla import CLA, verify_cla
from hopfalg.errors import InputError, ParameterError
from hopfalg.hopf import HopfPresentation
from hopfalg.replicate import object_battery

F = Fraction


def test_graded_model_tables():
    h = make_A(0, 0, 0)
    assert h.algebra.kappa == {}
    assert h.algebra.degrees == (1, 1, 2)


def test_a_family_emits_normalization_warning():
    with pytest.warns(UserWarning):
        make_A(1, 0, 1)  # alpha must vanish when l1 != l2
    with pytest.warns(UserWarning):
        make_A(1, 1, 2)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        make_A(1, 1, 1)
        make_A(1, 5, 0)


def test_b_family_antipode_witness():
    # S(Z) = -Z + [X,Y] = -Z + Y regardless of the deformation parameter
    h = make_B(F(1, 3))
    Z, Y = h.algebra.gen("Z"), h.algebra.gen("Y")
    assert h.antipode(Z) == -Z + Y


def test_d_family_requires_a_nonzero_theta():
    with pytest.raises(ParameterError):
        make_D(0, 0, 1, 1, 1, 1, 1, 1)
    assert isinstance(make_D(1, 0, 0, 0, 0, 0, 0, 0), HopfPresentation)


def test_e_family_representatives_verify():
    for args in [(0, 0, 0), (0, 1, 2), (1, 1, 0)]:
        assert object_battery(make_E(*args)).passed


def test_f_family_warning_outside_normal_form():
    with pytest.warns(UserWarning):
        make_F(2, 3, 0)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        make_F(0, 1, 5)


def test_k_family_bracket_table(K):
    p = K.algebra
    assert (p.gen("W") * p.gen("X") - p.gen("X") * p.gen("W")) == -p.gen("Z")
    assert (p.gen("W") * p.gen("Y") - p.gen("Y") * p.gen("W")).is_zero()


def test_make_lie_checks_jacobi():
    h = make_lie(["x", "y"], {(0, 1): {1: 1}})
    assert object_battery(h).passed
    with pytest.raises(InputError):
        # [x,[y,z]] + cyclic != 0 for this table
        make_lie(["x", "y", "z"], {(0, 1): {2: 1}, (1, 2): {1: 1},
                                   (0, 2): {0: 1}})


def test_cla_constructors_match_expected_structure():
    a = make_cla_a(1, 2, 3)
    assert a.bracket_constants(2, 0) == {0: 1, 1: 3}
    assert a.bracket_constants(2, 1) == {1: 2}
    b = make_cla_b(5)
    assert b.bracket_constants(0, 1) == {1: 1}
    assert b.bracket_constants(2, 0) == {2: -1, 1: 5}


def test_dim4_variant_parameter_domains():
    with pytest.raises(ParameterError):
        make_cla_35("h", lam=0, a=0)
    with pytest.raises(ParameterError):
        make_cla_35("h", lam=-1, a=0)
    with pytest.raises(ParameterError):
        make_cla_35("h", lam=2, a=2)
    with pytest.raises(ParameterError):
        make_cla_35("a", a=2, b=0, c=0)
    with pytest.raises(ParameterError):
        make_cla_35("q", a=1)
    with pytest.raises(ParameterError):
        make_cla_35("f", a=1)  # variant f is parameter-free


def test_dim4_variants_build_verbatim_tables():
    h = make_cla_35("h", lam=3, a=1)
    assert h.bracket_constants(3, 0) == {1: 1}
    assert h.bracket_constants(3, 2) == {3: -4}
    g = make_cla_35("g", a=1, b=1, c=2)
    assert g.bracket_constants(3, 0) == {0: 1, 1: 2}
    assert g.bracket_constants(3, 1) == {0: 1}


def test_printed_g_and_h_tables_fail_jacobi_when_deformed():
    # the printed tables are only Lie algebras on part of the stated
    # domain; the verification reports the defect instead of hiding it
    assert not verify_cla(make_cla_35("h", lam=2, a=1)).passed
    assert not verify_cla(make_cla_35("g", a=1, b=1, c=0)).passed
    assert not verify_cla(make_cla_35("g", a=1, b=0, c=1)).passed
    assert verify_cla(make_cla_35("h", lam=2, a=0)).passed
    assert verify_cla(make_cla_35("g", a=1, b=0, c=0)).passed


def test_variant_b_is_the_abelian_kernel_family():
    zero = make_cla_35("b", **{k: 0 for k in family_parameter_names("cla35b")})
    assert zero.brackets == {}
    assert verify_cla(zero).passed


def test_catalog_contents_and_determinism():
    specs = list_catalog()
    labels = [s.describe() for s in specs]
    assert "A(0,0,0)" in labels
    assert "K" in labels
    assert any(s.tag == "cla35h" for s in specs)
    assert labels == [s.describe() for s in list_catalog()]


def test_catalog_builds_correct_kinds():
    for spec in list_catalog():
        obj = build(spec)
        if spec.tag.startswith("cla"):
            assert isinstance(obj, CLA)
            assert obj.is_anti_cocommutative()
        else:
            assert isinstance(obj, HopfPresentation)


def test_cli_parameter_parsing():
    spec = from_cli_params("A", ["1", "0", "0"])
    assert spec.params == {"l1": 1, "l2": 0, "alpha": 0}
    with pytest.raises(InputError):
        from_cli_params("A", ["1"])
    with pytest.raises(InputError):
        from_cli_params("nosuch", [])
    spec = from_cli_params("cla35h", ["2", "1"])
    assert spec.params == {"lam": 2, "a": 1}
