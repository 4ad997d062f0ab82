"""Counting combinatorics for factor shortages of box products.

Given an ordered tuple of block dimensions (n_1, ..., n_k) summing to n,
a "cut" in degree i distributes the exterior degree across the blocks;
a "signature" records how many eigenbasis indices of the big tensor
product land in each block.  Cuts surject onto signatures, the product
of cut counts bounds the signature count, and the bound is strict
exactly when there are at least two blocks and n > 2.  Everything here
is exhaustive and exact.

Two conventions for cuts coexist: the default allows empty parts
(0 <= j_l <= n_l), which is what the direct-sum decomposition of an
exterior power of a semisimple module produces; the `strict` variant
demands j_l >= 1 everywhere.  Both counts are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb, prod

from sympy import isprime

from .ffla import Mat, make_field
from .grouprep import exterior_matrix

DEFAULT_N_CAP = 9


@dataclass(frozen=True)
class Partition:
    "Ordered block dimensions (n_1, ..., n_k), all positive."
    blocks: tuple

    def __post_init__(self):
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ValueError("blocks must be positive integers")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def n(self):
        return sum(self.blocks)

    @property
    def k(self):
        return len(self.blocks)


def compositions(n):
    "All ordered tuples of positive integers summing to n."
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def enumerate_cut(i, partition, allow_zero=True):
    """All cut tuples (j_1, ..., j_k) with sum i and j_l <= n_l, in
    lexicographic order.  With allow_zero=False, parts must be >= 1."""
    partition = Partition(tuple(partition)) if not isinstance(partition, Partition) else partition
    if not 1 <= i <= partition.n:
        raise ValueError("degree %d out of range for n=%d" % (i, partition.n))
    lo = 0 if allow_zero else 1
    out = []

    def rec(prefix, remaining, l):
        if l == partition.k:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for j in range(lo, min(partition.blocks[l], remaining) + 1):
            rec(prefix + [j], remaining - j, l + 1)

    rec([], i, 0)
    return out


def cut_count(i, partition, allow_zero=True):
    return len(enumerate_cut(i, partition, allow_zero))


def cut_product(partition, allow_zero=True):
    "Product over 1 <= i < n of the cut counts."
    partition = _as_partition(partition)
    return prod(cut_count(i, partition, allow_zero)
                for i in range(1, partition.n))


def _as_partition(p):
    return p if isinstance(p, Partition) else Partition(tuple(p))


def _block_ranges(partition):
    "1-based index ranges [start, end] of each block."
    out = []
    start = 1
    for b in partition.blocks:
        out.append((start, start + b - 1))
        start += b
    return out


def block_profile(partition, subset):
    "How many members of the subset fall in each block."
    ranges = _block_ranges(partition)
    return tuple(sum(1 for x in subset if lo <= x <= hi)
                 for lo, hi in ranges)


def enumerate_signatures(partition, cap=DEFAULT_N_CAP):
    """All signatures with their eigenvector multiplicities.

    Returns a dict {mu: multiplicity} where multiplicity counts the
    subset families realizing mu.  Computed by convolving, over each
    degree i, the block profiles of i-subsets weighted by the number of
    subsets with that profile (a product of binomials).
    """
    partition = _as_partition(partition)
    n = partition.n
    if n > cap:
        raise ValueError("n=%d exceeds the enumeration cap %d" % (n, cap))
    acc = {(0,) * partition.k: 1}
    for i in range(1, n):
        layer = {}
        for c in enumerate_cut(i, partition, allow_zero=True):
            layer[c] = prod(comb(nl, jl)
                            for nl, jl in zip(partition.blocks, c))
        nxt = {}
        for mu, m1 in acc.items():
            for c, m2 in layer.items():
                key = tuple(a + b for a, b in zip(mu, c))
                nxt[key] = nxt.get(key, 0) + m1 * m2
        acc = nxt
    return acc


def brute_signatures(partition):
    """Signatures by literally iterating all subset families; an
    independent oracle for enumerate_signatures (small n only)."""
    partition = _as_partition(partition)
    n = partition.n
    out = {}
    index_sets = [list(combinations(range(1, n + 1), i)) for i in range(1, n)]
    for family in product(*index_sets):
        mu = tuple(sum(p) for p in
                   zip(*(block_profile(partition, I) for I in family)))
        out[mu] = out.get(mu, 0) + 1
    return out


def cut_to_signature(cuts, partition):
    """Map a family of cuts (one per degree 1..n-1) to its signature,
    with the canonical witness subset family: degree i picks the first
    j_{i,l} indices of each block."""
    partition = _as_partition(partition)
    n = partition.n
    if len(cuts) != n - 1:
        raise ValueError("need one cut per degree 1..n-1")
    ranges = _block_ranges(partition)
    mu = tuple(sum(c[l] for c in cuts) for l in range(partition.k))
    witness = []
    for i, c in enumerate(cuts, start=1):
        if sum(c) != i:
            raise ValueError("cut %r has degree != %d" % (c, i))
        I = []
        for (lo, _), j in zip(ranges, c):
            I.extend(range(lo, lo + j))
        witness.append(tuple(I))
    return mu, tuple(witness)


def _greedy_cut(i, partition):
    out = []
    rem = i
    for b in partition.blocks:
        take = min(b, rem)
        out.append(take)
        rem -= take
    return tuple(out)


def collision_pair(partition):
    """Two distinct cut families with the same signature, built from the
    explicit low-degree swap; exists iff k >= 2 and n > 2."""
    partition = _as_partition(partition)
    k, n = partition.k, partition.n
    if k < 2 or n <= 2:
        return None
    rest = [_greedy_cut(i, partition) for i in range(3, n)]

    def delta(*ls):
        out = [0] * k
        for l in ls:
            out[l] += 1
        return tuple(out)

    if k >= 3:
        fam_a = [delta(0), delta(1, 2)] + rest
        fam_b = [delta(1), delta(0, 2)] + rest
    else:
        l0 = 0 if partition.blocks[0] >= 2 else 1
        l1 = 1 - l0
        fam_a = [delta(l0), delta(l1, l0)] + rest
        fam_b = [delta(l1), delta(l0, l0)] + rest
    for fam in (fam_a, fam_b):
        for i, c in enumerate(fam, start=1):
            if sum(c) != i or any(j > b for j, b in zip(c, partition.blocks)):
                raise AssertionError("invalid collision cut %r" % (c,))
    return tuple(fam_a), tuple(fam_b)


BRUTE_IMAGE_CAP = 200_000


def verify_counting_lemma(partition, cap=DEFAULT_N_CAP):
    """Exhaustive check of the counting bound for one block tuple.

    Reports the cut product (both conventions), the signature count,
    surjectivity of the cut-to-signature map, strictness of the
    inequality, and a collision witness when one exists.

    Surjectivity holds by construction: block profiles of i-subsets are
    exactly the degree-i cuts, so the support of the signature
    convolution equals the image of the cut-to-signature map.  When the
    cut product is small enough we still walk it and compare.
    """
    partition = _as_partition(partition)
    n = partition.n
    sigs = enumerate_signatures(partition, cap=cap)
    card_j = len(sigs)
    prod_cut = cut_product(partition, allow_zero=True)
    prod_cut_strict = cut_product(partition, allow_zero=False)
    surjective = True
    if prod_cut <= BRUTE_IMAGE_CAP:
        cut_sets = [enumerate_cut(i, partition, allow_zero=True)
                    for i in range(1, n)]
        image = set()
        for fam in product(*cut_sets):
            image.add(cut_to_signature(fam, partition)[0])
        surjective = image == set(sigs)
    pair = collision_pair(partition)
    if pair is not None:
        mu_a, _ = cut_to_signature(pair[0], partition)
        mu_b, _ = cut_to_signature(pair[1], partition)
        assert mu_a == mu_b and pair[0] != pair[1]
    strict = card_j < prod_cut
    total_mult = sum(sigs.values())
    expected_mult = prod(comb(n, i) for i in range(1, n))
    return {
        "blocks": partition.blocks,
        "prod_cut": prod_cut,
        "prod_cut_strict": prod_cut_strict,
        "card_J": card_j,
        "surjective": surjective,
        "strict": strict,
        "collision_witness": pair,
        "multiplicity_total_ok": total_mult == expected_mult,
    }


# ---------------------------------------------------------------------
# concrete oracles
# ---------------------------------------------------------------------

def _oracle_prime(n):
    "Smallest prime q with q-1 exceeding the maximal signature entry."
    q = n * (n - 1) // 2 + 2
    while not isprime(q):
        q += 1
    return q


def torus_eigencharacter_count(partition, q=None):
    """Number of distinct central-torus eigencharacters of the big tensor
    product of exterior powers, computed from actual matrices.

    The block-scalar torus generators are diagonal n x n matrices with a
    primitive scalar on one block; their exterior powers are computed as
    genuine minor matrices and must come out diagonal.  q defaults to a
    prime large enough that exponent collisions mod q-1 cannot occur.
    """
    partition = _as_partition(partition)
    n = partition.n
    if q is None:
        q = _oracle_prime(n)
    F = make_field(q) if isprime(q) else None
    if F is None:
        from sympy import factorint
        (p, r), = factorint(q).items()
        F = make_field(p, r)
    gamma = F.multiplicative_generator()
    ranges = _block_ranges(partition)
    gens = []
    for lo, hi in ranges:
        diag = [gamma if lo <= idx <= hi else 1 for idx in range(1, n + 1)]
        gens.append(Mat.diagonal(F, diag))
    # diagonal entries of each exterior power of each generator
    diags = []  # diags[i-1][l] = diagonal vector of L^i(z_l)
    for i in range(1, n):
        row = []
        for z in gens:
            e = exterior_matrix(z, i)
            for a in range(e.rows):
                for b in range(e.cols):
                    if a != b and e.data[a][b]:
                        raise AssertionError("exterior power of a diagonal "
                                             "matrix is not diagonal")
            row.append([e.data[a][a] for a in range(e.rows)])
        diags.append(row)
    k = partition.k
    chars = set()
    sizes = [len(diags[i][0]) for i in range(n - 1)]
    for combo in product(*(range(s) for s in sizes)):
        ch = []
        for l in range(k):
            acc = 1
            for i, a in enumerate(combo):
                acc = F.mul(acc, diags[i][l][a])
            ch.append(acc)
        chars.add(tuple(ch))
    return len(chars)


def jh_lower_bound_check(rep, partition, i, seed=0):
    """Certify that an exterior power of a semisimple block rep has at
    least as many composition factors as the cut count predicts."""
    from .grouprep import exterior_power
    from .meataxe import composition_series

    partition = _as_partition(partition)
    if rep.dim != partition.n:
        raise ValueError("rep dimension does not match the blocks")
    ext = exterior_power(rep, i)
    report = composition_series(ext, seed=seed)
    count = sum(m for _, _, m in report.factors)
    return {
        "blocks": partition.blocks,
        "i": i,
        "factor_count": count,
        "cut_count": cut_count(i, partition, allow_zero=True),
        "cut_count_strict": cut_count(i, partition, allow_zero=False),
        "ok": count >= cut_count(i, partition, allow_zero=True),
        "ok_strict": count >= cut_count(i, partition, allow_zero=False),
    }
