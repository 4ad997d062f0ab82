"""Command-line front door: each subcommand runs a batch of verification
claims and writes a deterministic report (JSON and/or markdown).

Exit codes: 0 all claims pass, 1 at least one failure, 2 usage error.
All randomness is seeded from --seed, so identical invocations produce
byte-identical report.json apart from the generated_at timestamp.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

SCHEMA = 1

KNOWN_FLAGS = ("seed", "q", "p", "count", "n_max", "cap_group_order",
               "format", "out")


@dataclass
class ClaimRecord:
    claim_id: str
    statement: str
    parameters: dict
    verdict: str  # pass / fail / reported
    witness: object
    runtime_ms: int
    seed: int


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


class Ledger:
    def __init__(self, seed):
        self.seed = seed
        self.claims = []

    def run(self, claim_id, statement, parameters, fn, reported=False):
        """Execute one claim.  fn returns witness data; AssertionError
        means a failed claim and its message becomes the witness."""
        if any(c.claim_id == claim_id for c in self.claims):
            raise ValueError("duplicate claim id %r" % claim_id)
        t0 = time.perf_counter()
        try:
            witness = fn()
            verdict = "reported" if reported else "pass"
        except AssertionError as exc:
            witness = {"error": str(exc) or "assertion failed"}
            verdict = "fail"
        ms = int((time.perf_counter() - t0) * 1000)
        self.claims.append(ClaimRecord(
            claim_id=claim_id, statement=statement,
            parameters=_jsonable(parameters), verdict=verdict,
            witness=_jsonable(witness), runtime_ms=ms, seed=self.seed))

    @property
    def ok(self):
        return all(c.verdict != "fail" for c in self.claims)


# ---------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------

def cmd_count_jh(ledger, args):
    from .jhcount import compositions, verify_counting_lemma

    def body():
        table = []
        for n in range(2, args.n_max + 1):
            for blocks in compositions(n):
                r = verify_counting_lemma(blocks)
                assert r["surjective"], blocks
                assert r["card_J"] <= r["prod_cut"], blocks
                assert r["strict"] == (len(blocks) >= 2 and n > 2), blocks
                assert r["multiplicity_total_ok"], blocks
                table.append({"blocks": list(blocks),
                              "prod_cut": r["prod_cut"],
                              "prod_cut_strict": r["prod_cut_strict"],
                              "card_J": r["card_J"],
                              "strict": r["strict"]})
        return {"rows": table}

    ledger.run(
        "count.sweep",
        "For every ordered block tuple with total <= n_max, the number "
        "of isotypic signatures is at most the product of cut counts, "
        "with equality exactly for one block or total <= 2; the "
        "cut-to-signature map is onto.",
        {"n_max": args.n_max}, body)

    def witnesses():
        from .jhcount import collision_pair, cut_to_signature
        out = {}
        for blocks in ((1, 1, 1), (1, 2)):
            pair = collision_pair(blocks)
            a, b = pair
            mu_a, wit_a = cut_to_signature(a, blocks)
            mu_b, _ = cut_to_signature(b, blocks)
            assert a != b and mu_a == mu_b
            out[str(blocks)] = {"family_a": a, "family_b": b,
                                "signature": mu_a,
                                "witness_subsets": wit_a}
        return out

    ledger.run(
        "count.collision-witness",
        "Explicit distinct cut families with equal signature certify "
        "strictness for the block tuples (1,1,1) and (1,2).",
        {}, witnesses)


def cmd_cut_verify(ledger, args):
    from .jhcount import (torus_eigencharacter_count, verify_counting_lemma,
                          enumerate_signatures)
    blocks = tuple(int(x) for x in args.blocks.split(","))

    def body():
        r = verify_counting_lemma(blocks)
        assert r["surjective"] and r["multiplicity_total_ok"]
        return r

    ledger.run(
        "cut.single",
        "Full counting-bound verification for one block tuple.",
        {"blocks": list(blocks)}, body)

    if sum(blocks) <= 5:
        def oracle():
            cj = len(enumerate_signatures(blocks))
            ec = torus_eigencharacter_count(blocks)
            assert cj == ec, (cj, ec)
            return {"card_J": cj, "eigencharacters": ec}

        ledger.run(
            "cut.eigencharacter-oracle",
            "The signature count equals the number of distinct "
            "block-scalar torus eigencharacters computed from actual "
            "exterior-power matrices.",
            {"blocks": list(blocks)}, oracle)


def cmd_toycase(ledger, args):
    from . import gl3toy
    q, seed = args.q, args.seed
    ledger.run(
        "toy.lambda2-matrix",
        "The second exterior power of a random invertible upper "
        "triangular 3x3 matrix equals the closed form with corner entry "
        "delta_a delta_b - eps chi_2 (1000 trials).",
        {"q": q, "trials": 1000},
        lambda: _must(gl3toy.verify_lambda2_matrix(q, 1000, seed)))
    ledger.run(
        "toy.socle-criterion",
        "The top 2-dimensional subquotient span of the second exterior "
        "power is semisimple exactly when delta_b vanishes; socle and "
        "cosocle dimensions swap between the module and its exterior "
        "square.",
        {"q": q}, lambda: _must(gl3toy.verify_socle_criterion(q, seed)))
    ledger.run(
        "toy.box-loewy",
        "Graded socle dimensions of the outer product of the standard "
        "module with its exterior square are (1,2,3,2,1), (2,5,2), (9) "
        "on the three triangular models, matching the convolution of "
        "the factors' measured vectors.",
        {"q": q}, lambda: _must(gl3toy.verify_box_loewy(q, seed)))
    ledger.run(
        "toy.basechange",
        "A block base change on the first three coordinates of the 6x6 "
        "quotient module kills the middle coupling row, splitting off a "
        "determinant-character copy; characteristic-2 behavior recorded.",
        {"q": q}, lambda: _must(gl3toy.verify_basechange_corollary(q, seed=seed)))
    ledger.run(
        "toy.factor-lattice",
        "The nine 1-dimensional factors of the outer product sit in the "
        "expected five socle layers, and the three-factor bottom "
        "subrepresentation is exactly the second socle.",
        {"q": q}, lambda: _must(gl3toy.lbar_box_factor_lattice(q, seed)))


def _must(report):
    assert report.get("ok", False), report
    return report


def cmd_tame_search(ledger, args):
    from .tame import find_admissible_primes, instance_report

    def body():
        rows = []
        for inst in find_admissible_primes(args.p, args.count):
            r = instance_report(inst, seed=args.seed)
            assert r["reducible"], r
            assert r["frobenius"]["sum_of_squares_check"], r
            rows.append(r)
        return {"rows": rows}

    ledger.run(
        "tame.search",
        "The first admissible primes for p, with conjugacy-class counts, "
        "the dimension of the induced maximal irreducible, and a "
        "reducibility verdict for its second exterior power.",
        {"p": args.p, "count": args.count}, body)


def cmd_meataxe(ledger, args):
    def body():
        from .meataxe import brute_composition_factors, composition_factors
        corpus = _meataxe_corpus()
        checked = 0
        for name, rep in corpus:
            got = sorted(f.dim for f in composition_factors(rep, seed=args.seed))
            want = sorted(f.dim for f in brute_composition_factors(rep))
            assert got == want, (name, got, want)
            # factor-by-factor iso matching, not only dimensions
            gf = composition_factors(rep, seed=args.seed)
            bf = brute_composition_factors(rep)
            used = set()
            for f in gf:
                hit = next(
                    (i for i, g in enumerate(bf)
                     if i not in used and f.dim == g.dim
                     and (f.dim == 0 or _iso(f, g))), None)
                assert hit is not None, name
                used.add(hit)
            checked += 1
        return {"modules_checked": checked}

    ledger.run(
        "meataxe.oracle-equivalence",
        "Composition factors from the randomized algorithm equal those "
        "from exhaustive invariant-subspace enumeration on a corpus of "
        "modules of dimension <= 4 over GF(2) and GF(3).",
        {"seed": args.seed}, body)


def _iso(f, g):
    from .meataxe import hom_space
    return bool(hom_space(f, g))


def _meataxe_corpus():
    """Small modules over GF(2)/GF(3): cyclic-group modules of every
    shape plus triangular-group standard modules and exterior squares."""
    from .ffla import Mat, make_field
    from .grouprep import (Rep, borel_group, cyclic_group, exterior_power,
                           tensor)
    corpus = []
    for p in (2, 3):
        F = make_field(p)
        C = cyclic_group(p * (p + 1))  # just a cyclic group; order unused
        for name, rows in [
            ("identity2", [[1, 0], [0, 1]]),
            ("jordan2", [[1, 1], [0, 1]]),
            ("companion3", [[0, 0, 1], [1, 0, 1], [0, 1, 0]]),
            ("jordan4", [[1, 1, 0, 0], [0, 1, 1, 0],
                         [0, 0, 1, 1], [0, 0, 0, 1]]),
            ("perm4", [[0, 1, 0, 0], [0, 0, 1, 0],
                       [0, 0, 0, 1], [1, 0, 0, 0]]),
        ]:
            m = Mat(F, rows)
            if not m.is_invertible():
                continue
            rep = Rep(C, F, [m], name="%s/GF(%d)" % (name, p), check=False)
            corpus.append((rep.name, rep))
    for q in (2, 3):
        G, rho = borel_group(q, 3)
        corpus.append(("std B3(F%d)" % q, rho))
        corpus.append(("L2 std B3(F%d)" % q, exterior_power(rho, 2)))
    G, rho = borel_group(3, 2)
    corpus.append(("std(x)std B2(F3)", tensor(rho, rho)))
    return corpus


def cmd_h1(ledger, args):
    def vanish():
        from .grouprep import enumerate_characters
        from .cohom import h1
        from .tame import find_admissible_primes
        inst = find_admissible_primes(args.p, 1)[0]
        chars = enumerate_characters(inst.group, inst.splitting_field)
        dims = {}
        for i, ch in enumerate(chars):
            s = h1(inst.group, ch)
            assert s.h1_dim == 0, (i, s.h1_dim)
            dims[i] = s.h1_dim
        return {"ell": inst.ell, "characters": len(chars), "h1_dims": dims}

    ledger.run(
        "h1.vanishing",
        "Degree-one cohomology of the first admissible metacyclic group "
        "vanishes for every 1-dimensional module over its splitting "
        "field (group order prime to the characteristic).",
        {"p": args.p}, vanish)

    def control():
        from .cohom import h1
        from .ffla import Mat, make_field
        from .grouprep import Rep, cyclic_group
        Zp = cyclic_group(args.p)
        F = make_field(args.p)
        triv = Rep(Zp, F, [Mat.identity(F, 1)], name="triv", check=False)
        s = h1(Zp, triv)
        assert s.h1_dim == 1, s.h1_dim
        return {"h1_dim": s.h1_dim}

    ledger.run(
        "h1.negative-control",
        "The trivial module over the cyclic group of order p has "
        "1-dimensional degree-one cohomology, confirming the method "
        "detects the p-part.",
        {"p": args.p}, control)

    def mult_one():
        from .cohom import hom_multiplicity_audit
        from .tame import find_admissible_primes, irreducible_inventory
        inst = find_admissible_primes(args.p, 1)[0]
        reps = irreducible_inventory(inst, seed=args.seed)
        a = hom_multiplicity_audit(inst.group, reps)
        assert a["ok"] and a["max_multiplicity"] <= 1
        return {"ell": inst.ell, "irreducibles": len(reps),
                "max_multiplicity": a["max_multiplicity"]}

    ledger.run(
        "h1.multiplicity-one",
        "No 1-dimensional character appears with multiplicity above one "
        "in any tensor product of irreducibles of the metacyclic group.",
        {"p": args.p}, mult_one)


def cmd_audit_all(ledger, args):
    cmd_count_jh(ledger, args)
    cmd_cut_verify(ledger, args)
    cmd_toycase(ledger, args)
    cmd_tame_search(ledger, args)
    cmd_meataxe(ledger, args)
    cmd_h1(ledger, args)


COMMANDS = {
    "count-jh": cmd_count_jh,
    "cut-verify": cmd_cut_verify,
    "toycase": cmd_toycase,
    "tame-search": cmd_tame_search,
    "meataxe": cmd_meataxe,
    "h1": cmd_h1,
    "audit-all": cmd_audit_all,
}


# ---------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------

def write_reports(ledger, args, command):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    claims = sorted(ledger.claims, key=lambda c: c.claim_id)
    doc = {
        "schema": SCHEMA,
        "command": command,
        "seed": args.seed,
        "generated_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "all_pass": ledger.ok,
        "claims": [asdict(c) for c in claims],
    }
    if args.format in ("json", "both"):
        (out / "report.json").write_text(
            json.dumps(doc, indent=2, sort_keys=True) + "\n")
    if args.format in ("md", "both"):
        lines = ["# Verification report", "",
                 "- command: `%s`" % command,
                 "- seed: %d" % args.seed,
                 "- generated: %s" % doc["generated_at"],
                 "- all pass: %s" % ledger.ok, "",
                 "| claim | verdict | ms |",
                 "|-------|---------|----|"]
        for c in claims:
            lines.append("| %s | %s | %d |"
                         % (c.claim_id, c.verdict, c.runtime_ms))
        lines.append("")
        for c in claims:
            lines.append("## %s" % c.claim_id)
            lines.append("")
            lines.append(c.statement)
            lines.append("")
            lines.append("- verdict: **%s**" % c.verdict)
            lines.append("- parameters: `%s`"
                         % json.dumps(c.parameters, sort_keys=True))
            if c.verdict == "fail":
                lines.append("- witness: `%s`"
                             % json.dumps(c.witness, sort_keys=True))
            lines.append("")
        (out / "report.md").write_text("\n".join(lines))


def _load_config(path):
    cfg = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        k, v = line.split("=", 1)
        k = k.strip().replace("-", "_")
        if k in KNOWN_FLAGS:
            cfg[k] = v.strip()
    return cfg


def build_parser():
    ap = argparse.ArgumentParser(
        prog="modrep",
        description="Exact finite-field representation-theory checks "
                    "with a claim ledger.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--q", type=int, default=5,
                    help="field size for the triangular models")
    ap.add_argument("--p", type=int, default=3,
                    help="base prime for metacyclic / cohomology runs")
    ap.add_argument("--count", type=int, default=3,
                    help="number of admissible primes to process")
    ap.add_argument("--n-max", type=int, default=7, dest="n_max",
                    help="largest block total for the counting sweep")
    ap.add_argument("--blocks", type=str, default="1,1,1",
                    help="comma-separated block tuple for cut-verify")
    ap.add_argument("--cap-group-order", type=int, default=2000,
                    dest="cap_group_order")
    ap.add_argument("--format", choices=("json", "md", "both"),
                    default="both")
    ap.add_argument("--out", type=str, default=".")
    ap.add_argument("--config", type=str, default=None,
                    help="key=value file providing flag defaults")
    return ap


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    # config file values become defaults, overridden by explicit flags
    if "--config" in argv:
        cfg_path = argv[argv.index("--config") + 1]
        cfg = _load_config(cfg_path)
        defaults = {}
        for k, v in cfg.items():
            if k in ("format", "out", "blocks"):
                defaults[k] = v
            else:
                defaults[k] = int(v)
        ap.set_defaults(**defaults)
    args = ap.parse_args(argv)
    ledger = Ledger(args.seed)
    COMMANDS[args.command](ledger, args)
    write_reports(ledger, args, args.command)
    for c in sorted(ledger.claims, key=lambda c: c.claim_id):
        print("%-32s %-8s %6d ms" % (c.claim_id, c.verdict, c.runtime_ms))
    return 0 if ledger.ok else 1


if __name__ == "__main__":
    sys.exit(main())
