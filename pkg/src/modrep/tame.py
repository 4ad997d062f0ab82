"""Metacyclic quotient pipeline: admissible primes, G_ell = (Z/ell) x| <p>,
the Frobenius dimension bound, the induced maximal irreducible sigma_ell,
and certification that its second exterior power is reducible.

An odd prime ell is admissible for p when ell does not divide
p(p^2-1)(p^3-1) and p does not divide ell-1.  Writing #K for the order
of p mod ell, admissibility forces #K >= 4, the group G_ell has order
ell*#K coprime to p, its largest irreducible has dimension exactly #K
(realized by inducing a nontrivial character of Z/ell), and the second
exterior power of that irreducible has dimension #K(#K-1)/2 > #K, so it
cannot be irreducible — which the MeatAxe confirms with an explicit
invariant subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from sympy import isprime, n_order, nextprime

from .ffla import Mat, make_field
from .grouprep import Rep, exterior_power, induce, semidirect_group
from .meataxe import hom_space, is_irreducible, rref_rows, spin

DEFAULT_MEATAXE_CAP = 8


@dataclass
class TameInstance:
    p: int
    ell: int
    k_order: int
    group: object
    splitting_field: object

    @property
    def group_order(self):
        return self.ell * self.k_order


def is_admissible(p, ell):
    "Both divisibility conditions, plus ell odd prime distinct from p."
    if not isprime(ell) or ell == 2 or ell == p:
        return False
    if (p * (p * p - 1) * (p ** 3 - 1)) % ell == 0:
        return False
    if (ell - 1) % p == 0:
        return False
    return True


def make_instance(p, ell):
    if not is_admissible(p, ell):
        raise ValueError("ell=%d is not admissible for p=%d" % (ell, p))
    k = n_order(p, ell)
    assert k >= 4, "admissibility must force order >= 4"
    assert (p ** k - 1) % ell == 0
    G = semidirect_group(ell, p)
    F = make_field(p, k)
    return TameInstance(p=p, ell=ell, k_order=k, group=G, splitting_field=F)


def find_admissible_primes(p, count):
    """The first `count` admissible primes for p, as built instances.

    p = 2 is rejected: ell - 1 is even for every odd prime ell, so the
    second condition can never hold.
    """
    if not isprime(p):
        raise ValueError("p=%d is not prime" % p)
    if p == 2:
        raise ValueError("p=2 has no admissible primes: ell-1 is always "
                         "even, so p | (ell-1) for every odd prime ell")
    out = []
    ell = 2
    while len(out) < count:
        ell = int(nextprime(ell))
        if is_admissible(p, ell):
            out.append(make_instance(p, ell))
    return out


def scan_k_orders(p, count=25):
    """(ell, k_order, running max) for the first `count` admissible
    primes — an empirical growth table for the order of p mod ell."""
    if not isprime(p) or p == 2:
        raise ValueError("need an odd prime p")
    rows = []
    best = 0
    ell = 2
    while len(rows) < count:
        ell = int(nextprime(ell))
        if is_admissible(p, ell):
            k = int(n_order(p, ell))
            best = max(best, k)
            rows.append((ell, k, best))
    return rows


def class_count(instance):
    """#K + (ell-1)/#K, cross-checked against the explicit conjugacy
    classes of the enumerated group."""
    k, ell = instance.k_order, instance.ell
    formula = k + (ell - 1) // k
    classes = instance.group.conjugacy_classes()
    if len(classes) != formula:
        raise AssertionError("class formula %d != explicit count %d"
                             % (formula, len(classes)))
    return formula


def frobenius_bound(instance):
    """Lower bound on the maximal irreducible dimension m.

    From #K + (ell-1) m^2 / #K >= |G| = ell #K one gets m >= #K; the
    exact accounting #K * 1 + ((ell-1)/#K) * #K^2 = ell #K shows the
    bound is attained and the irreducible list below is complete.
    """
    k, ell = instance.k_order, instance.ell
    m_lower = k
    assert k + (ell - 1) * m_lower * m_lower // k >= ell * k
    sum_sq = k * 1 + ((ell - 1) // k) * k * k
    return {"m_lower": m_lower,
            "sum_of_squares_check": sum_sq == ell * k}


def _psi(instance, a0=1):
    "Character a -> zeta^(a0*a) of Z/ell in the splitting field."
    F = instance.splitting_field
    zeta = F.pow(F.multiplicative_generator(),
                 (F.q - 1) // instance.ell)
    assert F.pow(zeta, instance.ell) == 1 and zeta != 1
    ell = instance.ell

    def psi(x):
        a, t = x
        assert t == 1
        return F.pow(zeta, (a0 * a) % ell)

    return psi


def build_sigma(instance, a0=1):
    """The dimension-#K irreducible of G_ell, induced from the character
    a -> zeta^(a0*a) of the normal Z/ell.  a0 = 0 gives the reducible
    negative control (it contains the trivial character)."""
    G = instance.group
    F = instance.splitting_field
    pl = instance.p % instance.ell
    transversal = []
    t = 1
    for _ in range(instance.k_order):
        transversal.append((0, t))
        t = (t * pl) % instance.ell
    sigma = induce(G, in_subgroup=lambda x: x[1] == 1,
                   psi=_psi(instance, a0), transversal=transversal,
                   field=F)
    sigma.name = "sigma_%d" % instance.ell if a0 else "Ind(triv)"
    return sigma


def irreducible_inventory(instance, seed=0):
    """The full irreducible list: #K one-dimensional characters inflated
    from <p>, plus one induced irreducible per nontrivial character
    orbit.  Verifies pairwise non-isomorphism and the sum-of-squares
    identity."""
    G = instance.group
    F = instance.splitting_field
    ell, k = instance.ell, instance.k_order
    pl = instance.p % ell
    # one-dimensional: t -> xi^j for xi of order #K
    xi = F.pow(F.multiplicative_generator(), (F.q - 1) // k)
    reps = []
    for j in range(k):
        mats = [Mat.diagonal(F, [1]),
                Mat.diagonal(F, [F.pow(xi, j)])]
        reps.append(Rep(G, F, mats, name="chi^%d" % j, check=False))
    # orbit representatives of nontrivial characters under mult by p
    seen = set()
    orbit_reps = []
    for a0 in range(1, ell):
        if a0 in seen:
            continue
        orbit_reps.append(a0)
        x = a0
        for _ in range(k):
            seen.add(x)
            x = (x * pl) % ell
    assert len(orbit_reps) == (ell - 1) // k
    for a0 in orbit_reps:
        sig = build_sigma(instance, a0)
        ok, _ = is_irreducible(sig, seed=seed)
        assert ok, "induced rep for orbit %d not irreducible" % a0
        reps.append(sig)
    total = sum(r.dim * r.dim for r in reps)
    assert total == instance.group_order, \
        "sum of squares %d != |G| %d" % (total, instance.group_order)
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if reps[i].dim == reps[j].dim:
                assert not hom_space(reps[i], reps[j]), \
                    "reps %d and %d are isomorphic" % (i, j)
    return reps


def fixed_pair_witness(instance):
    """Arithmetic witness that the second exterior power of sigma is
    reducible, from the monomial model.

    In the eigenbasis of Z/ell, sigma has weights {p^j mod ell} and the
    order-#K generator cyclically shifts them.  On wedge pairs the
    weight is the sum; the pairs with sum 0 mod ell span the Z/ell-fixed
    subspace, and the shift permutes them, so a nonzero count of such
    pairs exhibits a proper invariant subspace whenever it is less than
    #K(#K-1)/2.
    """
    ell, k, p = instance.ell, instance.k_order, instance.p
    weights = []
    t = 1
    for _ in range(k):
        weights.append(t)
        t = (t * p) % ell
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)
             if (weights[i] + weights[j]) % ell == 0]
    shift_closed = all(
        tuple(sorted(((i + 1) % k, (j + 1) % k))) in set(pairs)
        for i, j in pairs)
    dim_total = comb(k, 2)
    return {"fixed_dim": len(pairs), "pairs": pairs,
            "shift_closed": shift_closed,
            "proper": 0 < len(pairs) < dim_total}


def lambda2_fixed_subspace(lam2, instance):
    "Actual kernel of (rho(a) - 1) on the second exterior power."
    F = lam2.field
    A = lam2.matrices[0]  # image of the Z/ell generator a
    M = A - Mat.identity(F, A.rows)
    K = M.kernel()
    rows = [[K.data[i][j] for i in range(K.rows)] for j in range(K.cols)]
    return rref_rows(F, rows)


def verify_lambda2_reducible(instance, seed=0, meataxe_cap=DEFAULT_MEATAXE_CAP):
    """Reducibility report for the second exterior power of sigma.

    Always checks the dimension inequality and the arithmetic fixed-pair
    witness.  When #K <= meataxe_cap it also builds the matrices, runs
    the irreducibility test for an explicit invariant-subspace witness,
    and confirms the fixed subspace dimension and invariance on actual
    matrices.
    """
    k = instance.k_order
    m = k
    dim_l2 = m * (m - 1) // 2
    report = {
        "ell": instance.ell, "k_order": k,
        "dim_sigma": m, "dim_lambda2": dim_l2,
        "dimension_inequality": dim_l2 > m,
        "inequality_applicable": m >= 4,
    }
    pair = fixed_pair_witness(instance)
    report["fixed_pair_witness"] = pair
    report["reducible"] = pair["proper"] and pair["shift_closed"]
    report["meataxe_run"] = k <= meataxe_cap
    if not report["meataxe_run"]:
        return report
    sigma = build_sigma(instance)
    ok, cert = is_irreducible(sigma, seed=seed)
    report["sigma_irreducible"] = ok
    lam2 = exterior_power(sigma, 2)
    red_ok, witness = is_irreducible(lam2, seed=seed)
    report["lambda2_irreducible"] = red_ok
    report["invariant_subspace_dim"] = (
        None if red_ok else len(witness["invariant_subspace"]))
    fixed = lambda2_fixed_subspace(lam2, instance)
    report["fixed_subspace_dim"] = len(fixed)
    assert len(fixed) == pair["fixed_dim"], \
        "matrix fixed space disagrees with the pair count"
    if fixed:
        # invariance of the fixed space under every generator
        F = lam2.field
        spun = spin(F, lam2.matrices, [list(r) for r in fixed])
        assert len(spun) == len(fixed), "fixed subspace is not invariant"
    report["reducible"] = report["reducible"] or not red_ok
    return report


def instance_report(instance, seed=0, meataxe_cap=DEFAULT_MEATAXE_CAP):
    "One table row for the search subcommand."
    red = verify_lambda2_reducible(instance, seed=seed,
                                   meataxe_cap=meataxe_cap)
    return {
        "ell": instance.ell,
        "k_order": instance.k_order,
        "group_order": instance.group_order,
        "classes": class_count(instance),
        "dim_sigma": red["dim_sigma"],
        "dim_lambda2": red["dim_lambda2"],
        "reducible": red["reducible"],
        "meataxe_run": red["meataxe_run"],
        "frobenius": frobenius_bound(instance),
    }
