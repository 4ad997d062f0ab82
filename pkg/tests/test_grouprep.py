"""Groups, representations and functors: orders checked against closed
formulas and explicit enumeration, functors checked for functoriality on
random elements, induction checked for multiplicativity."""

import random

import pytest

from modrep.ffla import Mat, make_field
from modrep.grouprep import (CharData, Rep, borel_group, box, box_many,
                             cyclic_group, diag_char, diagonal_hom,
                             direct_sum, dual, enumerate_characters,
                             exterior_matrix, exterior_power, induce,
                             is_generic, lbar_box, lbar_tensor, load_rep,
                             product_group, rep_from_dict, rep_to_dict,
                             restrict_along, save_rep, semidirect_group,
                             tensor, trivial_group, twist,
                             validate_zero_pattern)


def test_borel_order_formula_vs_enumeration():
    # oracle: explicit closure enumeration
    for q, n, zp in [(2, 2, ()), (3, 2, ()), (3, 3, ()),
                     (2, 3, ((2, 3),)), (3, 3, ((1, 2), (2, 3)))]:
        G, rho = borel_group(q, n, zp)
        free = n * (n - 1) // 2 - len(zp)
        assert G.order() == (q - 1) ** n * q ** free
        assert len(G.elements()) == G.order()


def test_zero_pattern_validation():
    # (1,3) = 0 alone is not closed under multiplication
    assert validate_zero_pattern(3, ((1, 3),)) is not None
    with pytest.raises(ValueError):
        borel_group(3, 3, ((1, 3),))
    assert validate_zero_pattern(3, ((1, 2), (1, 3))) is None
    assert validate_zero_pattern(4, ((1, 2), (1, 3), (1, 4))) is None


def test_rep_is_homomorphism_sampled():
    G, rho = borel_group(3, 3)
    rng = random.Random(2)
    els = G.elements()
    for _ in range(30):
        g = els[rng.randrange(len(els))]
        h = els[rng.randrange(len(els))]
        assert (rho.at(g) * rho.at(h)).data == rho.at(G.multiply(g, h)).data
    e = G.identity
    assert rho.at(e).data == Mat.identity(rho.field, 3).data


def test_exterior_matrix_functorial():
    # oracle: exterior power of a product is the product of exterior powers
    F = make_field(5)
    rng = random.Random(3)
    for n, i in [(3, 2), (4, 2), (4, 3), (5, 2)]:
        for _ in range(10):
            A = Mat(F, [[F.random(rng) for _ in range(n)]
                        for _ in range(n)])
            B = Mat(F, [[F.random(rng) for _ in range(n)]
                        for _ in range(n)])
            left = exterior_matrix(A * B, i)
            right = exterior_matrix(A, i) * exterior_matrix(B, i)
            assert left.data == right.data


def test_top_exterior_power_is_determinant():
    F = make_field(7)
    rng = random.Random(5)
    for n in (2, 3, 4):
        m = Mat(F, [[F.random(rng) for _ in range(n)] for _ in range(n)])
        top = exterior_matrix(m, n)
        assert top.rows == 1 and top.data[0][0] == m.det()


def test_box_restricted_to_diagonal_is_tensor():
    G, rho = borel_group(3, 3)
    lam2 = exterior_power(rho, 2)
    b = box(rho, lam2)
    t = tensor(rho, lam2)
    res = restrict_along(b, diagonal_hom(G, 2))
    rng = random.Random(7)
    els = G.elements()
    for _ in range(15):
        g = els[rng.randrange(len(els))]
        assert res.at(g).data == t.at(g).data


def test_box_many_flat_group():
    G, rho = borel_group(3, 2)
    b = box_many([rho, rho, rho])
    assert b.dim == 8
    assert len(b.group.factors) == 3
    g = b.group.generators[0]
    assert b.at(g).rows == 8


def test_direct_sum_blocks():
    G, rho = borel_group(3, 3)
    c1 = diag_char(rho, 1)
    s = direct_sum([c1, rho])
    assert s.dim == 4
    rng = random.Random(11)
    els = G.elements()
    for _ in range(10):
        g = els[rng.randrange(len(els))]
        m = s.at(g)
        assert m.data[0][0] == c1.at(g).data[0][0]
        assert [row[1:] for row in m.data[1:]] == rho.at(g).data
        assert all(m.data[0][j] == 0 for j in (1, 2, 3))


def test_dual_is_involutive_and_antimultiplicative():
    G, rho = borel_group(5, 3)
    d = dual(rho)
    rng = random.Random(13)
    els = G.elements()
    for _ in range(10):
        g = els[rng.randrange(len(els))]
        assert dual(d).at(g).data == rho.at(g).data
        # pairing invariance: d(g) = rho(g)^-T
        assert (d.at(g).transpose() * rho.at(g)).data == \
            Mat.identity(rho.field, 3).data


def test_twist_by_character():
    G, rho = borel_group(5, 3)
    c = diag_char(rho, 2)
    tw = twist(rho, c)
    g = G.generators[1]
    scal = c.at(g).data[0][0]
    F = rho.field
    expect = [[F.mul(scal, e) for e in row] for row in rho.at(g).data]
    got = tw.at(g).data
    # twist is rho tensor c; same matrix up to the Kronecker layout
    assert sorted(sum(got, [])) == sorted(sum(expect, []))


def test_semidirect_group_structure():
    G = semidirect_group(5, 3)
    assert G.order() == 20 and G.k_order == 4
    els = G.elements()
    assert len(els) == 20
    # defining relation t a t^-1 = a^p
    a, t = (1, 1), (0, 3)
    lhs = G.multiply(G.multiply(t, a), G.invert(t))
    assert lhs == (3, 1)
    # word_of reconstructs every element
    for x in els:
        assert G.evaluate_word(G.word_of(x)) == x


def test_conjugacy_classes_partition():
    G = semidirect_group(5, 3)
    classes = G.conjugacy_classes()
    assert sum(len(c) for c in classes) == 20
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 4, 5, 5, 5]


def test_induced_rep_multiplicative():
    G = semidirect_group(5, 3)
    F = make_field(3, 4)
    zeta = F.pow(F.multiplicative_generator(), (F.q - 1) // 5)
    transversal = [(0, pow(3, j, 5)) for j in range(4)]
    sigma = induce(G, in_subgroup=lambda x: x[1] == 1,
                   psi=lambda x: F.pow(zeta, x[0]), transversal=transversal,
                   field=F)
    assert sigma.dim == 4
    rng = random.Random(17)
    els = G.elements()
    for _ in range(20):
        g = els[rng.randrange(len(els))]
        h = els[rng.randrange(len(els))]
        assert (sigma.at(g) * sigma.at(h)).data == \
            sigma.at(G.multiply(g, h)).data
    # restriction to the normal subgroup is diagonal with all weights
    m = sigma.at((1, 1))
    assert all(m.data[i][j] == 0 for i in range(4) for j in range(4)
               if i != j)
    assert m.data[0][0] == zeta


def test_enumerate_characters_count():
    G = semidirect_group(5, 3)
    F = make_field(3, 4)
    chars = enumerate_characters(G, F)
    # commutator subgroup is Z/5, so exactly #K = 4 characters
    assert len(chars) == 4
    vals = sorted(c.matrices[1].data[0][0] for c in chars)
    assert len(set(vals)) == 4
    for c in chars:
        assert c.matrices[0].data[0][0] == 1  # trivial on Z/5


def test_lbar_functors_dimensions():
    G, rho = borel_group(3, 3)
    t = lbar_tensor(rho)
    assert t.dim == 3 * 3  # dim L1 * dim L2
    b = lbar_box(rho)
    assert b.dim == 9
    assert len(b.group.factors) == 2


def test_chardata_genericity():
    assert is_generic([CharData(0, 1), CharData(2, 1), CharData(4, 1)], 7)
    # equal unramified parts with exponent difference 1 are degenerate
    assert not is_generic([CharData(0, 1), CharData(1, 1),
                           CharData(4, 1)], 7)
    # differing unramified parts rescue the same exponents
    assert is_generic([CharData(0, 1), CharData(1, 2), CharData(4, 1)], 7)
    with pytest.raises(ValueError):
        CharData(0, 0)


def test_rep_save_load_roundtrip(tmp_path):
    G, rho = borel_group(3, 3)
    path = tmp_path / "rho.json"
    save_rep(rho, str(path))
    back = load_rep(str(path))
    assert back.dim == rho.dim
    assert [m.data for m in back.matrices] == [m.data for m in rho.matrices]
    assert back.field.p == 3 and back.field.r == 1
    d = rep_to_dict(rho)
    again = rep_from_dict(d)
    assert [m.data for m in again.matrices] == [m.data for m in rho.matrices]


def test_product_and_cyclic_and_trivial():
    C6 = cyclic_group(6)
    assert C6.order() == 6 and len(C6.elements()) == 6
    T = trivial_group()
    assert T.order() == 1
    P = product_group([C6, C6])
    assert len(P.elements()) == 36
