import itertools
from fractions import Fraction

import pytest

from hopfalg.catalog import (build, list_catalog, make_cla_35, make_cla_a,
                             make_lie_preset)
from hopfalg.cla import enveloping, lantern_of_cla
from hopfalg.errors import StructuralError
from hopfalg.ore import AlgebraElement, bracket
from hopfalg.structure import (associated_graded, coradical_filtration,
                               extract_cla, lantern_of_hopf, p2_space,
                               primitive_space)

F = Fraction


def hopf_catalog():
    return [(s, build(s)) for s in list_catalog()
            if not s.tag.startswith("cla")]


def test_primitive_space_of_four_generator_families(D01, E110, F010, K):
    for h in (D01, E110, F010, K):
        space = primitive_space(h, 5)
        assert space.dim == 2
        assert space.basis == [h.algebra.gen("X"), h.algebra.gen("Y")]


def test_primitive_space_of_abelian_enveloping_algebra():
    h = make_lie_preset("abelian4")
    assert primitive_space(h, 1).dim == 4


def test_primitive_space_of_thin_gk3_families(A000, A100, A001, A111, B0):
    for h in (A000, A100, A001, A111, B0):
        assert primitive_space(h, 5).dim == 2


def test_p2_space_examples(D01, K):
    space = p2_space(D01, 5)
    assert space.dim == 3
    assert space.basis == [D01.algebra.gen(n) for n in ("X", "Y", "Z")]
    assert p2_space(K, 5).dim == 3


def test_p2_of_enveloping_lie_algebra_is_the_lie_algebra():
    h = make_lie_preset("heis3")
    p = primitive_space(h, 4)
    q = p2_space(h, 4)
    assert p.dim == q.dim == 3


def test_p2_of_enveloping_cla_is_the_cla():
    h = enveloping(make_cla_a(0, 0, 0))
    assert p2_space(h, 4).dim == 3


def test_monotonicity_of_subspaces(E110):
    for d in (2, 3, 4):
        small = primitive_space(E110, d)
        large = primitive_space(E110, d + 1)
        assert all(large.contains(b) for b in small.basis)
        small2 = p2_space(E110, d)
        large2 = p2_space(E110, d + 1)
        assert all(large2.contains(b) for b in small2.basis)


def test_p_inside_p2_and_quotient_bound():
    for spec, h in hopf_catalog():
        p = primitive_space(h, 4)
        q = p2_space(h, 4, primitives=p)
        assert all(q.contains(b) for b in p.basis)
        n = p.dim
        assert q.dim - p.dim <= n * (n - 1) // 2
        assert q.dim <= 4


def test_p2_bracket_closures(D01, K):
    for h in (D01, K):
        p = primitive_space(h, 5)
        q = p2_space(h, 5)
        primitives_abelian = all(
            bracket(a, b).is_zero() for a, b in
            itertools.combinations(p.basis, 2))
        for a, b in itertools.combinations(q.basis, 2):
            assert q.contains(bracket(a, b))
            if primitives_abelian:
                assert p.contains(bracket(a, b))
        for a in q.basis:
            for b in p.basis:
                assert q.contains(bracket(a, b))


def test_coradical_filtration_levels():
    h = enveloping(make_cla_a(0, 0, 0))
    alg = h.algebra
    level0 = coradical_filtration(h, 0, 3)
    assert level0.basis == [alg.one()]
    level1 = coradical_filtration(h, 1, 3)
    assert level1.dim == 3  # unit and the two primitives
    level2 = coradical_filtration(h, 2, 3)
    assert level2.dim == 7  # 1, x, y, x^2, xy, y^2, z
    assert level2.contains(alg.gen("z"))
    assert level2.contains(alg.monomial({"x": 1, "y": 1}))
    assert not level2.contains(alg.monomial({"x": 3}))
    assert not level2.contains(alg.monomial({"x": 1, "z": 1}))
    level3 = coradical_filtration(h, 3, 3)
    assert all(level3.contains(b) for b in level2.basis)


def test_extract_cla_round_trip_all_catalog_entries():
    for spec in list_catalog():
        if not spec.tag.startswith("cla"):
            continue
        L = build(spec)
        env = enveloping(L)
        back = extract_cla(env, 4)
        assert back == L, spec.describe()
        env2 = enveloping(back)
        assert env2.algebra.kappa == env.algebra.kappa
        assert env2.delta_gen == env.delta_gen


def test_extract_cla_from_heisenberg_enveloping():
    h = make_lie_preset("heis3")
    L = extract_cla(h, 4)
    assert L.dim == 3
    assert L.delta == {}
    assert L.bracket_constants(0, 1) == {2: 1}


def test_extract_cla_from_d_family(D01):
    L = extract_cla(D01, 4)
    assert L.names == ("X", "Y", "Z")
    assert L.brackets == {}
    assert L.delta == {2: {(0, 1): 1, (1, 0): -1}}


def test_extract_cla_requires_stability(D01):
    with pytest.raises(StructuralError):
        # P2 within degree 1 misses Z, so bounds 1 and 2 disagree
        extract_cla(D01, 2)


def test_associated_graded_drops_low_order_terms(A100, A000):
    gr = associated_graded(A100)
    assert gr.algebra.kappa == A000.algebra.kappa == {}
    assert gr.delta_gen == A000.delta_gen


def test_associated_graded_of_deformed_d_family():
    from hopfalg.catalog import make_D
    deformed = make_D(1, 1, 2, 3, 4, 5, 6, 7)
    gr = associated_graded(deformed)
    assert gr.algebra.kappa == {}
    assert gr.delta_gen == make_D(1, 1, 0, 0, 0, 0, 0, 0).delta_gen


def test_associated_graded_fixes_graded_presentations(A000, D01):
    for h in (A000, D01):
        gr = associated_graded(h)
        assert gr.algebra.kappa == h.algebra.kappa
        assert gr.delta_gen == h.delta_gen


def test_lantern_of_abelian_enveloping_algebra():
    gl = lantern_of_hopf(make_lie_preset("abelian4"), 2)
    assert gl.dims_by_degree() == {1: 4}
    assert gl.brackets == {}


def test_lantern_of_nonabelian_enveloping_algebra_is_abelian():
    gl = lantern_of_hopf(make_lie_preset("heis3"), 3)
    assert gl.dims_by_degree() == {1: 3}
    assert gl.brackets == {}


def test_lantern_of_heisenberg_type_cla():
    h = enveloping(make_cla_a(0, 0, 0))
    gl = lantern_of_hopf(h, 3)
    assert gl.dims_by_degree() == {1: 2, 2: 1}
    assert list(gl.brackets) == [(0, 1)]
    ((target, coeff),) = gl.brackets[(0, 1)].items()
    assert gl.degrees[target] == 2 and coeff != 0


def test_lantern_of_d_family_two_step_chain(D01):
    gl = lantern_of_hopf(D01, 3)
    assert gl.dims_by_degree() == {1: 2, 2: 1, 3: 1}
    assert set(gl.brackets[(0, 1)]) == {2}
    # theta = (0, 1): the chain continues through the second primitive dual
    assert (1, 2) in gl.brackets and set(gl.brackets[(1, 2)]) == {3}
    assert (0, 2) not in gl.brackets
    assert gl.verify(3).passed


def test_lantern_brackets_scale_with_theta():
    from hopfalg.catalog import make_D
    gl = lantern_of_hopf(make_D(1, 0, 0, 0, 0, 0, 0, 0), 3)
    assert (0, 2) in gl.brackets and set(gl.brackets[(0, 2)]) == {3}
    assert (1, 2) not in gl.brackets


def test_lantern_agrees_with_cla_computation():
    for variant, params in [("a", dict(a=1, b=1, c=0)), ("f", {}),
                            ("h", dict(lam=2, a=0))]:
        L = make_cla_35(variant, **params)
        lh = lantern_of_hopf(enveloping(L), 3)
        lc = lantern_of_cla(L)
        assert lh.degrees == lc.degrees
        assert lh.brackets == lc.brackets
        assert lh.names == lc.names


def test_lantern_generated_in_degree_one(K):
    # every degree-2 and degree-3 dual is hit by brackets of lower duals
    gl = lantern_of_hopf(K, 3)
    hit = set()
    for (i, j), terms in gl.brackets.items():
        hit |= set(terms)
    for idx, deg in enumerate(gl.degrees):
        if deg > 1:
            assert idx in hit


def test_subspace_json_shape(A000):
    data = primitive_space(A000, 3).to_json()
    assert data["dimension"] == 2
    assert data["degree_bound"] == 3
    assert data["basis"][0] == [{"coeff": "1", "monomial": {"X": 1}}]


def test_primitive_and_p2_dimensions_survive_grading(E110, K, B1):
    # the filtration invariants of a presentation match those of its
    # associated graded presentation
    for h in (E110, K, B1):
        gr = associated_graded(h)
        assert primitive_space(h, 4).dim == primitive_space(gr, 4).dim
        assert p2_space(h, 4).dim == p2_space(gr, 4).dim


def test_graded_p2_complements_the_decomposables(D01, E110, F010, K):
    # inside gr H: P2 + (degree-1 products) fills degrees one and two,
    # and the two pieces intersect trivially
    for h in (D01, E110, F010, K):
        gr = associated_graded(h)
        alg = gr.algebra
        p2 = p2_space(gr, 2)
        ones = [m for m in alg.monomials_up_to(1)]
        twos = [m for m in alg.monomials_up_to(2)
                if alg.monomial_degree(m) == 2]
        products = []
        for a in ones:
            for b in ones:
                prod = alg.mul_monomials(a, b)
                products.append(AlgebraElement(alg, dict(prod)))
        monos = alg.monomials_up_to(2)
        coords = {m: i for i, m in enumerate(monos)}

        def vec(elt):
            out = [Fraction(0)] * len(monos)
            for m, c in elt.terms.items():
                out[coords[m]] = c
            return out

        from hopfalg.exactlin import Matrix, reduce_to_basis
        prod_basis = reduce_to_basis([vec(e) for e in products])
        combined = reduce_to_basis([vec(b) for b in p2.basis]
                                   + [list(v) for v in prod_basis])
        assert len(combined) == p2.dim + len(prod_basis)
        assert len(combined) == len(ones) + len(twos)


def test_lantern_degree_one_is_dual_to_primitives():
    for spec, h in hopf_catalog():
        gl = lantern_of_hopf(h, 2)
        assert gl.dims_by_degree().get(1, 0) == primitive_space(h, 3).dim
