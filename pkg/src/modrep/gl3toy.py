"""Three-dimensional triangular model: every structural claim about the
standard module rho of a triangular subgroup of GL3, its second exterior
power, and the outer product rho box L2(rho) is verified on explicit
matrices over small finite fields.

The model: rho is the standard representation of the invertible upper
triangular 3x3 matrices over GF(q), or of the subgroup with a chosen
strictly-upper coordinate pattern forced to zero.  The diagonal
coordinates chi_1, chi_2, chi_3 play the role of the characters; the
free strictly-upper coordinates delta_a = (1,2), delta_b = (2,3),
eps = (1,3) control the Loewy length (3 for the full group, 2 with
delta_b = 0 or delta_a = 0, 1 for the torus).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .ffla import Mat, make_field
from .grouprep import (Rep, borel_group, box, diag_char, exterior_matrix,
                       exterior_power, tensor)
from .meataxe import (loewy_convolution, restrict_mats,
                      socle_series, spin)

POSITIONS = {"delta_a": (1, 2), "delta_b": (2, 3), "eps": (1, 3)}


@dataclass(frozen=True)
class ToyParams:
    q: int
    delta_a_nonzero: bool = True
    delta_b_nonzero: bool = True
    eps_nonzero: bool = True

    def zero_pattern(self):
        zp = []
        if not self.delta_a_nonzero:
            zp.append(POSITIONS["delta_a"])
        if not self.delta_b_nonzero:
            zp.append(POSITIONS["delta_b"])
        if not self.eps_nonzero:
            zp.append(POSITIONS["eps"])
        return tuple(zp)


# the flag patterns that actually define subgroups
VALID_PATTERNS = [
    (True, True, True),    # full triangular group: Loewy length 3
    (True, False, True),   # delta_b = 0: length 2
    (False, True, True),   # delta_a = 0: length 2
    (False, False, True),  # only eps free: length 2
    (False, False, False),  # torus: semisimple
]


def build_model(params):
    "The group and its standard representation for the given pattern."
    return borel_group(params.q, 3, params.zero_pattern())


def _random_upper(F, rng, pattern_free):
    "Random invertible upper triangular 3x3 with given free positions."
    m = Mat.zeros(F, 3, 3)
    for i in range(3):
        m.data[i][i] = F.random_unit(rng)
    for (i, j) in pattern_free:
        m.data[i - 1][j - 1] = F.random(rng)
    return m


def lambda2_closed_form(F, m):
    """The predicted matrix of the second exterior power of an upper
    triangular [[x1, a, e], [0, x2, b], [0, 0, x3]] in the ordered basis
    e1^e2, e1^e3, e2^e3:

        [[x1 x2, x1 b, a b - e x2],
         [0,     x1 x3, a x3],
         [0,     0,     x2 x3]]
    """
    x1, a, e = m.data[0]
    x2, b = m.data[1][1], m.data[1][2]
    x3 = m.data[2][2]
    mul, sub = F.mul, F.sub
    return Mat(F, [
        [mul(x1, x2), mul(x1, b), sub(mul(a, b), mul(e, x2))],
        [0, mul(x1, x3), mul(a, x3)],
        [0, 0, mul(x2, x3)],
    ])


def verify_lambda2_matrix(q, trials=1000, seed=0):
    """Random-trial identity test: the minor-matrix exterior power equals
    the closed form for every sampled invertible upper triangular
    matrix.  Returns the first counterexample if one is found."""
    from .grouprep import _prime_power
    p, r = _prime_power(q)
    F = make_field(p, r)
    rng = random.Random(seed)
    free = list(POSITIONS.values())
    for t in range(trials):
        m = _random_upper(F, rng, free)
        got = exterior_matrix(m, 2)
        want = lambda2_closed_form(F, m)
        if got.data != want.data:
            return {"ok": False, "trial": t, "matrix": m.data,
                    "got": got.data, "want": want.data}
    idm = Mat.identity(F, 3)
    assert exterior_matrix(idm, 2).data == Mat.identity(F, 3).data
    return {"ok": True, "trials": trials, "q": q}


def _sub_loewy(rep, rows, seed=0):
    "Loewy length of the invariant subspace spanned by the given rows."
    F = rep.field
    basis = spin(F, rep.matrices, rows)
    assert len(basis) == len(rows), "span is not invariant"
    sub = Rep(rep.group, F, restrict_mats(F, rep.matrices, basis),
              name="sub", check=False)
    return socle_series(sub, seed=seed).loewy_length, len(basis)


def verify_socle_criterion(q, seed=0):
    """The span of e1^e2, e1^e3 inside the second exterior power is
    semisimple exactly when delta_b is forced to zero; socle and cosocle
    dimensions of the exterior power mirror cosocle and socle of rho.
    """
    rows_top2 = [[1, 0, 0], [0, 1, 0]]
    out = []
    for flags in VALID_PATTERNS:
        params = ToyParams(q, *flags)
        G, rho = build_model(params)
        lam2 = exterior_power(rho, 2)
        ll2, dim2 = _sub_loewy(lam2, rows_top2, seed=seed)
        semisimple = ll2 == 1
        assert dim2 == 2
        assert semisimple == (not params.delta_b_nonzero), \
            "semisimplicity criterion failed for %r" % (flags,)
        s_rho = socle_series(rho, seed=seed)
        s_lam = socle_series(lam2, seed=seed)
        assert s_lam.socle_series[0] == s_rho.radical_series[0], \
            "socle(L2) vs cosocle(rho) mismatch for %r" % (flags,)
        assert s_lam.radical_series[0] == s_rho.socle_series[0], \
            "cosocle(L2) vs socle(rho) mismatch for %r" % (flags,)
        out.append({"flags": flags, "sub_loewy": ll2,
                    "semisimple": semisimple,
                    "rho_series": s_rho.socle_series,
                    "lam2_series": s_lam.socle_series})
    return {"ok": True, "cases": out}


def _character_names(G, rho):
    "chi_l and the products chi_a chi_b as 1-dim reps, keyed by name."
    chars = {l: diag_char(rho, l) for l in (1, 2, 3)}
    prods = {}
    for a, b in combinations((1, 2, 3), 2):
        prods[(a, b)] = tensor(chars[a], chars[b])
    return chars, prods


def _pair_name_map(G, rho):
    """Scalar tuple -> name for every candidate factor chi_a box
    chi_b chi_c of the outer product."""
    chars, prods = _character_names(G, rho)
    names = {}
    for a in (1, 2, 3):
        for (b, c), pr in prods.items():
            cand = box(chars[a], pr)
            key = tuple(m.data[0][0] for m in cand.matrices)
            name = "chi%d|chi%dchi%d" % (a, b, c)
            assert key not in names, "character pair collision at q=%d" % rho.field.q
            names[key] = name
    return names


def _label_names(report, names):
    "registry label -> character-pair name, for 1-dim factors."
    registry = report._registry
    out = {}
    for _, lbl, _ in report.factors:
        S = registry.representative(lbl)
        key = tuple(m.data[0][0] for m in S.matrices)
        out[lbl] = names.get(key, "?")
    return out


EXPECTED_LAYERS = [
    {"chi1|chi1chi2"},
    {"chi1|chi1chi3", "chi2|chi1chi2"},
    {"chi1|chi2chi3", "chi2|chi1chi3", "chi3|chi1chi2"},
    {"chi2|chi2chi3", "chi3|chi1chi3"},
    {"chi3|chi2chi3"},
]


def verify_box_loewy(q, seed=0):
    """Graded socle dimensions of rho box L2(rho): (1,2,3,2,1) for the
    full group, (2,5,2) with delta_b = 0, (9) for the torus — each
    cross-checked against the convolution of the measured factor
    vectors."""
    cases = [
        ((True, True, True), [1, 2, 3, 2, 1]),
        ((True, False, True), [2, 5, 2]),
        ((False, False, False), [9]),
    ]
    out = []
    for flags, expected in cases:
        params = ToyParams(q, *flags)
        G, rho = build_model(params)
        lam2 = exterior_power(rho, 2)
        lbox = box(rho, lam2)
        s_rho = socle_series(rho, seed=seed)
        s_lam = socle_series(lam2, seed=seed)
        s_box = socle_series(lbox, seed=seed)
        conv = loewy_convolution(s_rho.socle_series, s_lam.socle_series)
        assert s_box.socle_series == expected, \
            "graded dims %r != %r for %r" % (s_box.socle_series,
                                             expected, flags)
        assert conv == expected, \
            "convolution %r != %r for %r" % (conv, expected, flags)
        # the 9 factors are exactly {chi_a box chi_b chi_c}
        names = _pair_name_map(G, rho)
        lblnames = _label_names(s_box, names)
        multiset = sorted(
            n for _, lbl, m in s_box.factors
            for n in [lblnames[lbl]] * m)
        expected_multiset = sorted(
            "chi%d|chi%dchi%d" % (a, b, c)
            for a in (1, 2, 3) for b, c in combinations((1, 2, 3), 2))
        assert multiset == expected_multiset, multiset
        out.append({"flags": flags, "graded": s_box.socle_series,
                    "rho_vector": s_rho.socle_series,
                    "lam2_vector": s_lam.socle_series,
                    "convolution": conv})
    return {"ok": True, "cases": out}


def lbar_box_factor_lattice(q, seed=0):
    """Socle-layer placement of the 9 factors of rho box L2(rho) in the
    full-triangular model, compared with the expected 5-layer lattice.
    Also certifies that the three-factor bottom subrepresentation (the
    span of e1 tensor wedge-basis vectors e1^e2, e1^e3 and e2 tensor
    e1^e2) is exactly the second socle."""
    params = ToyParams(q, True, True, True)
    G, rho = build_model(params)
    lam2 = exterior_power(rho, 2)
    lbox = box(rho, lam2)
    s_box = socle_series(lbox, seed=seed)
    names = _pair_name_map(G, rho)
    lblnames = _label_names(s_box, names)
    layers = []
    for layer in s_box.socle_layers:
        content = set()
        for lbl, mult in layer.items():
            assert mult == 1
            content.add(lblnames[lbl])
        layers.append(content)
    assert layers == EXPECTED_LAYERS, layers
    # ord subrepresentation: coordinates e_i (x) w_j with
    # (i, j) in {(1,1), (1,2), (2,1)}; w basis is e1^e2, e1^e3, e2^e3
    ord_rows = []
    for (i, j) in [(1, 1), (1, 2), (2, 1)]:
        v = [0] * 9
        v[(i - 1) * 3 + (j - 1)] = 1
        ord_rows.append(v)
    F = lbox.field
    spun = spin(F, lbox.matrices, ord_rows)
    assert len(spun) == 3, "ord span is not invariant"
    soc2_dim = s_box.socle_series[0] + s_box.socle_series[1]
    assert soc2_dim == 3
    # the second socle contains the ord rows (both are 3-dimensional
    # invariant subspaces whose factors agree layer by layer)
    sub = Rep(lbox.group, F, restrict_mats(F, lbox.matrices, spun),
              name="ord", check=False)
    s_sub = socle_series(sub, seed=seed)
    sub_names = _label_names(s_sub, names)
    sub_layers = [set(sub_names[lbl] for lbl in layer)
                  for layer in s_sub.socle_layers]
    assert sub_layers == EXPECTED_LAYERS[:2], sub_layers
    return {"ok": True, "layers": [sorted(s) for s in layers],
            "ord_dim": 3, "ord_layers": [sorted(s) for s in sub_layers]}


def lambda2_factor_sequence(q, seed=0):
    """Bottom-to-top composition factor names of the second exterior
    power of the standard module of the full triangular group: expected
    chi1chi2, chi1chi3, chi2chi3."""
    from .meataxe import composition_series
    params = ToyParams(q, True, True, True)
    G, rho = build_model(params)
    lam2 = exterior_power(rho, 2)
    chars, prods = _character_names(G, rho)
    names = {}
    for (a, b), pr in prods.items():
        key = tuple(m.data[0][0] for m in pr.matrices)
        names[key] = "chi%dchi%d" % (a, b)
    report = composition_series(lam2, seed=seed)
    registry = report._registry
    seq = []
    for _, lbl in report.factor_sequence:
        S = registry.representative(lbl)
        key = tuple(m.data[0][0] for m in S.matrices)
        seq.append(names.get(key, "?"))
    return seq


# ---------------------------------------------------------------------
# the 6x6 quotient and its base change
# ---------------------------------------------------------------------

# quotient basis: e1(x)(e2^e3), e2(x)(e1^e3), e3(x)(e1^e2),
#                 e2(x)(e2^e3), e3(x)(e1^e3), e3(x)(e2^e3)
QUOTIENT_BASIS = [(1, 3), (2, 2), (3, 1), (2, 3), (3, 2), (3, 3)]
# P acts on the first three basis vectors
P_ROWS = [[1, 1, 0], [0, -1, 0], [0, 1, 1]]


def _tensor_rep(rho):
    "rho (x) L2(rho) as an inner tensor product (diagonal restriction)."
    return tensor(rho, exterior_power(rho, 2))


def quotient_matrix(rho, g):
    """Matrix of the quotient of rho (x) L2(rho) by the bottom 3-dim
    subrepresentation, in the ordered quotient basis above."""
    F = rho.field
    big = rho.at(g).kron(exterior_matrix(rho.at(g), 2))
    idx = [(i - 1) * 3 + (j - 1) for i, j in QUOTIENT_BASIS]
    out = Mat.zeros(F, 6, 6)
    for r, ri in enumerate(idx):
        for c, ci in enumerate(idx):
            out.data[r][c] = big.data[ri][ci]
    return out


def predicted_quotient(rho, g):
    """The expected 6x6 upper block form, from the entries of rho(g):

        [det, 0, 0,    x2 x3 a, 0,       *]
        [0, det, 0,    x2 x3 a, x1 x3 b, *]
        [0, 0, det,    0,       x1 x3 b, *]
        [0, 0, 0,      x2^2 x3, 0,       x2 x3 b]
        [0, 0, 0,      0,       x1 x3^2, x3^2 a]
        [0, 0, 0,      0,       0,       x2 x3^2]
    """
    F = rho.field
    m = rho.at(g)
    x1, a, e = m.data[0]
    x2, b = m.data[1][1], m.data[1][2]
    x3 = m.data[2][2]
    mul = F.mul
    det = mul(mul(x1, x2), x3)
    out = quotient_matrix(rho, g)  # take * column from the real matrix
    pred = [row[:] for row in out.data]
    pred[0][:5] = [det, 0, 0, mul(mul(x2, x3), a), 0]
    pred[1][:5] = [0, det, 0, mul(mul(x2, x3), a), mul(mul(x1, x3), b)]
    pred[2][:5] = [0, 0, det, 0, mul(mul(x1, x3), b)]
    pred[3][:6] = [0, 0, 0, mul(mul(x2, x2), x3), 0, mul(mul(x2, x3), b)]
    pred[4][:6] = [0, 0, 0, 0, mul(mul(x1, x3), x3), mul(mul(x3, x3), a)]
    pred[5][:6] = [0, 0, 0, 0, 0, mul(mul(x2, x3), x3)]
    return Mat(F, pred)


def _block_p(F, transpose=False, invert=False):
    Pm = Mat(F, [[F.encode([x % F.p]) for x in row] for row in P_ROWS])
    if transpose:
        Pm = Pm.transpose()
    if invert:
        Pm = Pm.inverse()
    full = Mat.identity(F, 6)
    for i in range(3):
        for j in range(3):
            full.data[i][j] = Pm.data[i][j]
    return full


def verify_basechange_corollary(q, trials=60, seed=0):
    """The block base change by P on the first three quotient
    coordinates kills the middle row of the 3x3 coupling block, so a
    copy of the determinant character splits off.

    Both conjugation conventions are computed; exactly one works in odd
    characteristic.  In characteristic 2 the same row combination
    r1 - r2 + r3 still vanishes identically (recorded, not asserted
    against any external claim).
    """
    from .grouprep import _prime_power
    p, r = _prime_power(q)
    F = make_field(p, r)
    params = ToyParams(q, True, True, True)
    G, rho = build_model(params)
    rng = random.Random(seed)
    free = list(POSITIONS.values())
    sample = [tuple(e for row in _random_upper(F, rng, free).data
                    for e in row) for _ in range(trials)]
    sample.extend(G.generators)

    # the raw quotient matches the predicted block form everywhere
    for g in sample:
        got = quotient_matrix(rho, g)
        want = predicted_quotient(rho, g)
        assert got.data == want.data, "quotient block form mismatch"

    # the two readings of "base change via P": new vectors are the
    # columns of P, or its rows (transpose).  M' = Q^-1 M Q either way.
    results = {}
    for convention, transpose in (("columns", False), ("rows", True)):
        Q = _block_p(F, transpose=transpose)
        Qi = _block_p(F, transpose=transpose, invert=True)
        ok = True
        for g in sample:
            M = quotient_matrix(rho, g)
            T = Qi * M * Q
            # coupling block: rows 0..2, cols 3..4; middle row must die
            if any(T.data[1][c] for c in (3, 4)):
                ok = False
                break
        results[convention] = ok
    # direct check: r1 - r2 + r3 of the coupling columns 4,5 vanishes
    combo_zero = True
    for g in sample:
        M = quotient_matrix(rho, g)
        for c in (3, 4):
            v = F.add(F.sub(M.data[0][c], M.data[1][c]), M.data[2][c])
            if v:
                combo_zero = False
    odd = p != 2
    if odd:
        assert any(results.values()), "no convention worked at q=%d" % q
    assert combo_zero, "row combination r1-r2+r3 did not vanish"
    return {"ok": True, "q": q, "odd_characteristic": odd,
            "conventions": results, "row_combo_zero": combo_zero}
