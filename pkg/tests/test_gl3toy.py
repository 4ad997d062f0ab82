"""Triangular 3x3 model: closed forms, socle criteria, Loewy series of
the outer product, factor lattice, and the 6x6 quotient base change, all
on explicit matrices over several small fields."""

import pytest

from modrep.ffla import make_field
from modrep.gl3toy import (EXPECTED_LAYERS, QUOTIENT_BASIS, ToyParams,
                           VALID_PATTERNS, build_model,
                           lambda2_closed_form, lambda2_factor_sequence,
                           lbar_box_factor_lattice, predicted_quotient,
                           quotient_matrix, verify_basechange_corollary,
                           verify_box_loewy, verify_lambda2_matrix,
                           verify_socle_criterion)
from modrep.grouprep import exterior_matrix


def test_toy_params_zero_patterns():
    assert ToyParams(3).zero_pattern() == ()
    assert ToyParams(3, True, False, True).zero_pattern() == ((2, 3),)
    assert ToyParams(3, False, False, False).zero_pattern() == \
        ((1, 2), (2, 3), (1, 3))


def test_valid_patterns_define_groups():
    for flags in VALID_PATTERNS:
        G, rho = build_model(ToyParams(3, *flags))
        assert rho.dim == 3
        free = sum(flags)
        assert G.order() == 2 ** 3 * 3 ** free


def test_lambda2_closed_form_matches_minors():
    F = make_field(5)
    m_data = [[2, 3, 1], [0, 4, 2], [0, 0, 3]]
    from modrep.ffla import Mat
    m = Mat(F, m_data)
    assert exterior_matrix(m, 2).data == lambda2_closed_form(F, m).data


@pytest.mark.parametrize("q", [3, 4, 5, 9])
def test_lambda2_matrix_random_trials(q):
    out = verify_lambda2_matrix(q, trials=200, seed=0)
    assert out["ok"]


def test_socle_criterion_all_patterns():
    out = verify_socle_criterion(3, seed=0)
    assert out["ok"]
    by_flags = {c["flags"]: c for c in out["cases"]}
    assert not by_flags[(True, True, True)]["semisimple"]
    assert by_flags[(True, False, True)]["semisimple"]
    assert by_flags[(False, False, False)]["semisimple"]
    assert by_flags[(True, True, True)]["rho_series"] == [1, 1, 1]
    assert by_flags[(False, False, False)]["rho_series"] == [3]


def test_box_loewy_graded_dimensions():
    out = verify_box_loewy(3, seed=0)
    assert out["ok"]
    graded = {c["flags"]: c["graded"] for c in out["cases"]}
    assert graded[(True, True, True)] == [1, 2, 3, 2, 1]
    assert graded[(True, False, True)] == [2, 5, 2]
    assert graded[(False, False, False)] == [9]
    for c in out["cases"]:
        assert c["convolution"] == c["graded"]


def test_factor_lattice_layers():
    out = lbar_box_factor_lattice(3, seed=0)
    assert out["ok"]
    assert [set(s) for s in out["layers"]] == EXPECTED_LAYERS
    assert out["ord_dim"] == 3
    assert [set(s) for s in out["ord_layers"]] == EXPECTED_LAYERS[:2]


def test_lambda2_factor_sequence_bottom_up():
    assert lambda2_factor_sequence(3, seed=0) == \
        ["chi1chi2", "chi1chi3", "chi2chi3"]
    assert lambda2_factor_sequence(5, seed=0) == \
        ["chi1chi2", "chi1chi3", "chi2chi3"]


def test_quotient_matrix_block_form():
    G, rho = build_model(ToyParams(5))
    assert len(QUOTIENT_BASIS) == 6
    for g in G.generators:
        got = quotient_matrix(rho, g)
        want = predicted_quotient(rho, g)
        assert got.data == want.data
        # lower-left 3x3 block of the 6x6 is zero: genuine quotient
        for i in range(3, 6):
            for j in range(3):
                assert got.data[i][j] == 0


@pytest.mark.parametrize("q", [3, 5, 7])
def test_basechange_odd_characteristic(q):
    out = verify_basechange_corollary(q, trials=40, seed=0)
    assert out["ok"] and out["odd_characteristic"]
    assert out["conventions"]["rows"]
    assert out["row_combo_zero"]


def test_basechange_char_two_row_combo():
    out = verify_basechange_corollary(4, trials=40, seed=0)
    assert out["ok"] and not out["odd_characteristic"]
    assert out["row_combo_zero"]
