"""Command-line surface.

Subcommands: classify, sl2, rootsys, subgroup, verify-paper.  Output is a
human-readable report by default; --json switches to a single deterministic
JSON document on stdout.  The coset-table capacity for subgroup enumeration
honors the KATZMOD_COSET_CAP environment variable.
"""

import argparse
import json
import sys

from . import verify
from .linalg import rank
from .sl2 import principal_triple, decompose_adjoint, verify_bracket_identity, \
    invariant_bilinear_form
from .roots import build_root_system, exponents, algebra_dimension, \
    weyl_dimension, irreps_of_dimension, SIMPLE_TYPES
from .classify import classification_report
from .subgroups import resolve_subgroup, subgroup_invariants, dim_rho_prim, \
    dim_cusp_forms, CosetCapExceeded


def _print(doc, as_json, text_lines):
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _k_at_least_2(value):
    k = int(value)
    if k < 2:
        raise argparse.ArgumentTypeError(f"k must be at least 2, got {k}")
    return k


def cmd_classify(args):
    ht = None
    if args.ht_weights is not None:
        ht = tuple(int(w) for w in args.ht_weights.split(","))
    if args.symplectic and args.k % 2 != 0:
        raise SystemExit("error: --symplectic requires even k")
    report = classification_report(args.k, ht_weights=ht, apply_form_filter=args.symplectic)
    doc = {
        "k": report.k,
        "raw_cases": [{"name": c.name, "label": c.label, "description": c.describe(args.k)}
                      for c in report.raw_cases],
        "after_ht_filter": [c.name for c in report.after_ht_filter],
        "after_form_filter": [c.name for c in report.after_form_filter],
        "conclusion": report.conclusion,
    }
    lines = [f"classification for k = {args.k}:"]
    for c in report.raw_cases:
        lines.append(f"  {c.name:<6} {c.describe(args.k)}")
    if ht is not None:
        lines.append(f"after Hodge-Tate filter (weights {sorted(ht)}): "
                     + ", ".join(c.name for c in report.after_ht_filter))
    if args.symplectic:
        lines.append("after alternating-form filter: "
                     + ", ".join(c.name for c in report.after_form_filter))
        lines.append(f"conclusion: {report.conclusion or '(none)'}")
    _print(doc, args.json, lines)
    return 0


def cmd_sl2(args):
    k = args.k
    t = principal_triple(k)
    if args.action == "decompose":
        dec = decompose_adjoint(t)
        dims = [len(b.basis) for b in dec.blocks]
        doc = {"k": k, "block_dimensions": dims, "total": sum(dims),
               "change_of_basis_rank": rank(dec.change_of_basis)}
        _print(doc, args.json, [
            f"adjoint decomposition of sl_{k}: blocks U_1 .. U_{k - 1}",
            f"  dimensions: {', '.join(map(str, dims))} (sum {sum(dims)} = {k * k - 1})",
            f"  change of basis rank: {doc['change_of_basis_rank']}",
        ])
    elif args.action == "identities":
        results = {}
        for r in range(1, k):
            for s in range(1, k):
                if r + s <= k:
                    results[f"{r},{s}"] = verify_bracket_identity(t, r, s)
        ok = all(results.values())
        doc = {"k": k, "identity": "[x^r, ad(y)x^s] = 2rs x^(r+s-1)",
               "pairs": results, "all_pass": ok}
        _print(doc, args.json, [
            f"[x^r, ad(y)x^s] = 2rs x^(r+s-1) over all r, s >= 1 with r+s <= {k}: "
            + ("all pass" if ok else "FAILURES: "
               + ", ".join(p for p, good in results.items() if not good)),
        ])
        return 0 if ok else 1
    elif args.action == "form":
        form = invariant_bilinear_form(t)
        parity = "symmetric" if form.symmetric else "antisymmetric"
        doc = {"k": k, "parity": parity}
        _print(doc, args.json, [f"invariant bilinear form for k = {k}: {parity}"])
    return 0


def cmd_rootsys(args):
    rs = build_root_system(args.type, args.rank)
    note = " (isomorphic to A_3)" if rs.a3_isomorphic else ""
    if args.action == "exponents":
        exp = exponents(rs)
        doc = {"type": rs.name, "exponents": list(exp),
               "positive_roots": len(rs.positive_roots)}
        _print(doc, args.json, [
            f"{rs.name}{note}: exponents {', '.join(map(str, exp))}; "
            f"{len(rs.positive_roots)} positive roots",
        ])
    elif args.action == "dim":
        doc = {"type": rs.name, "dimension": algebra_dimension(rs)}
        _print(doc, args.json, [f"dim {rs.name}{note} = {algebra_dimension(rs)}"])
    elif args.action == "weyl-dim":
        if args.weight is None:
            raise SystemExit("error: weyl-dim needs --weight c1,c2,...")
        weight = tuple(int(c) for c in args.weight.split(","))
        dim = weyl_dimension(rs, weight)
        doc = {"type": rs.name, "weight": list(weight), "dimension": dim}
        _print(doc, args.json, [f"{rs.name}{note}, weight {list(weight)}: dimension {dim}"])
    elif args.action == "irreps":
        if args.dim is None:
            raise SystemExit("error: irreps needs --dim K")
        weights = irreps_of_dimension(rs, args.dim)
        doc = {"type": rs.name, "dimension": args.dim,
               "weights": [list(w) for w in weights]}
        _print(doc, args.json, [
            f"{rs.name}{note}: irreducibles of dimension {args.dim}: "
            + (", ".join(str(list(w)) for w in weights) if weights else "none"),
        ])
    return 0


def cmd_subgroup(args):
    gens = resolve_subgroup(args.subgroup)
    inv = subgroup_invariants(gens)
    doc = {
        "name": gens.name,
        "index": inv.index,
        "cusp_widths": list(inv.cusp_widths),
        "nu2": inv.nu2,
        "nu3": inv.nu3,
        "genus": inv.genus,
        "level": inv.level,
        "congruence": inv.congruence,
    }
    lines = [
        f"subgroup {gens.name}:",
        f"  index: {inv.index}",
        f"  cusp widths: {', '.join(map(str, inv.cusp_widths))}",
        f"  elliptic points: nu2 = {inv.nu2}, nu3 = {inv.nu3}",
        f"  genus: {inv.genus}",
        f"  level (lcm of widths): {inv.level}",
        f"  congruence subgroup: {'yes' if inv.congruence else 'no'}",
    ]
    if args.dims:
        table = []
        for k in range(2, args.kmax + 1, 2):
            row = {"k": k, "dim_cusp_forms": dim_cusp_forms(inv, k + 2)}
            try:
                row["dim_rho_prim"] = dim_rho_prim(gens, k)
            except ValueError:
                pass  # closure unknown for non-preset subgroups
            table.append(row)
        doc["dims"] = table
        lines.append(f"  {'k':>4} {'dim S_(k+2)':>12} {'dim rho_prim':>13}")
        for row in table:
            prim = row.get("dim_rho_prim", "-")
            lines.append(f"  {row['k']:>4} {row['dim_cusp_forms']:>12} {prim:>13}")
    _print(doc, args.json, lines)
    return 0


def cmd_verify_paper(args):
    rows = verify.run(only=args.only)
    doc = {"checks": [{"section": r.section, "claim": r.claim, "expected": r.expected,
                       "computed": r.computed, "ok": r.ok} for r in rows],
           "passed": sum(1 for r in rows if r.ok),
           "failed": sum(1 for r in rows if not r.ok)}
    lines = []
    width = max(len(r.claim) for r in rows)
    for r in rows:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"[{status}] {r.claim:<{width}}  expected: {r.expected}  computed: {r.computed}")
    lines.append(f"{doc['passed']} passed, {doc['failed']} failed")
    _print(doc, args.json, lines)
    return 0 if doc["failed"] == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="katzmod",
        description="Exact computations: principal sl2-triples, root-system exponents, "
                    "the one-block-nilpotent classification, and subgroups of PSL2(Z).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="simple algebras passing the exponent scan at dimension k")
    p.add_argument("--k", type=_k_at_least_2, required=True)
    p.add_argument("--ht-weights", help="comma-separated Hodge-Tate weights, e.g. 0,-5")
    p.add_argument("--symplectic", action="store_true",
                   help="apply the alternating-form filter (even k only)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sl2", help="principal sl2-triple computations in sl_k")
    p.add_argument("--k", type=_k_at_least_2, required=True)
    p.add_argument("action", choices=["decompose", "identities", "form"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sl2)

    p = sub.add_parser("rootsys", help="root system data for one simple type")
    p.add_argument("--type", required=True, choices=list(SIMPLE_TYPES))
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("action", choices=["exponents", "dim", "weyl-dim", "irreps"])
    p.add_argument("--weight", help="fundamental-weight coordinates, e.g. 1,0")
    p.add_argument("--dim", type=int, help="target dimension for the irreps action")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rootsys)

    p = sub.add_parser("subgroup", help="invariants of a finite-index subgroup of PSL2(Z)")
    p.add_argument("subgroup", help="preset name (gamma43, gamma52, gamma711) or JSON file path")
    p.add_argument("--dims", action="store_true", help="print dimension tables")
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("verify-paper", help="recompute and check every reproduced value")
    p.add_argument("--only", choices=sorted(verify.SECTIONS), help="run one section")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CosetCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
