"""Degree-one cohomology: dimensions checked against the classical
values for cyclic groups and trivial coefficients, vanishing checked for
coprime orders, and splitting verdicts checked against explicit
eigenline witnesses inside assembled extensions."""

import pytest

from modrep.cohom import (build_extension, extension_splits, h1,
                          hom_multiplicity_audit, split_witness,
                          splitting_audit)
from modrep.ffla import Mat, make_field
from modrep.grouprep import (Rep, borel_group, cyclic_group, diag_char,
                             dual, product_group, tensor)
from modrep.tame import irreducible_inventory, make_instance


def _trivial_module(G, F):
    mats = [Mat(F, [[1]]) for _ in G.generators]
    return Rep(G, F, mats, evaluate=lambda g: Mat(F, [[1]]),
               check=False, name="triv")


def test_h1_cyclic_trivial_coefficients():
    # oracle: H1(Z/n, F_p trivial) = Hom(Z/n, F_p), dim 1 iff p | n
    for n, p, expect in [(3, 3, 1), (3, 2, 0), (4, 2, 1), (5, 3, 0),
                         (6, 3, 1), (6, 2, 1), (9, 3, 1)]:
        G = cyclic_group(n)
        F = make_field(p)
        space = h1(G, _trivial_module(G, F))
        assert space.h1_dim == expect, (n, p)
        assert space.b1_dim == 0  # trivial action: no coboundaries
        assert space.z1_dim == expect


def test_h1_klein_four_trivial_coefficients():
    G = product_group([cyclic_group(2), cyclic_group(2)])
    space = h1(G, _trivial_module(G, make_field(2)))
    assert space.h1_dim == 2  # Hom((Z/2)^2, F_2)


def test_h1_vanishes_for_coprime_order():
    # |G| = 20 is invertible in characteristic 3
    inst = make_instance(3, 5)
    chars = [r for r in irreducible_inventory(inst) if r.dim == 1]
    assert len(chars) == 4
    for c in chars:
        space = h1(inst.group, c)
        assert space.h1_dim == 0
        assert space.z1_dim == space.b1_dim


def test_h1_basis_cocycles_satisfy_condition():
    # the pointwise re-verification inside h1 would raise otherwise;
    # check the basis shape explicitly too
    G = cyclic_group(4)
    space = h1(G, _trivial_module(G, make_field(2)))
    assert len(space.basis) == space.z1_dim == 1
    f = space.basis[0]
    assert f[G.identity] == [0]
    assert set(map(tuple, f.values())) == {(0,), (1,)}


def test_h1_order_cap():
    G = cyclic_group(50)
    with pytest.raises(ValueError):
        h1(G, _trivial_module(G, make_field(2)), order_cap=10)


def test_extension_splits_borel_negative():
    # the standard 2-dim module of upper-triangular matrices is a
    # non-split extension, so H1(chi1 tensor dual(chi2)) != 0
    G, rho = borel_group(3, 2)
    c1, c2 = diag_char(rho, 1), diag_char(rho, 2)
    assert not extension_splits(c1, c2)
    space = h1(G, tensor(c1, dual(c2)))
    assert space.h1_dim >= 1
    # some basis cocycle builds an extension with no eigenline complement
    missing = 0
    for f in space.basis:
        flat = {g: [v[0]] for g, v in f.items()}
        ext = build_extension(c1, c2, flat)
        if split_witness(ext, c2) is None:
            missing += 1
    assert missing >= 1
    # same-character extensions split: trivial coefficients, and the
    # commutators of the group generate the unipotent part
    assert extension_splits(c1, c1)


def test_extension_splits_requires_characters():
    G, rho = borel_group(3, 2)
    with pytest.raises(ValueError):
        extension_splits(rho, diag_char(rho, 1))


def test_splitting_audit_coprime_group():
    inst = make_instance(3, 5)
    chars = [r for r in irreducible_inventory(inst) if r.dim == 1]
    for a in chars[:2]:
        for b in chars[:2]:
            out = splitting_audit(a, b)
            assert out["splits"] and out["h1_dim"] == 0


def test_split_witness_on_coboundary_extension():
    # a coboundary cocycle g -> (g - 1)v must always split
    G, rho = borel_group(3, 2)
    c1, c2 = diag_char(rho, 1), diag_char(rho, 2)
    mod = tensor(c1, dual(c2))
    F = mod.field
    v = 1
    f = {g: [F.sub(F.mul(mod.at(g).data[0][0], v), v)]
         for g in G.elements()}
    ext = build_extension(c1, c2, f)
    w = split_witness(ext, c2)
    assert w is not None and w[1] == 1


def test_hom_multiplicity_audit():
    inst = make_instance(3, 5)
    reps = irreducible_inventory(inst)
    out = hom_multiplicity_audit(inst.group, reps)
    assert out["ok"] and out["max_multiplicity"] == 1
    # the sigma x dual-sigma pair must actually realize multiplicity 1
    assert any(m == 1 for m in out["table"].values())
