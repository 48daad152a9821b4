"""Command-line front end: ``alexspace {analyze,fmap,group,count,verify,dot}``.

Exit codes: 0 success / pass, 1 counterexample found, 2 usage or input error.
"""
import argparse
import logging
import sys

from .enumeration import THEOREMS, count_uniformizable, verify_theorem
from .errors import AlexError
from .files import dumps, load_group, load_map, load_space
from .functional import (
    KPrimalFamily, check_c123, find_generating_map, functional_topology, k_primal_topology,
    periodic_points,
)
from .groups import check_zahra10, check_zahra20, coset_topology
from .space import to_dot
from .uniform import ORACLE_BOUND, decide_uniformizable, pseudometric_oracle, quotient_by_R

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


def analyze_report(space, oracle_bound=ORACLE_BOUND):
    verdict = decide_uniformizable(space)
    c = check_c123(space)
    q = quotient_by_R(space)
    g = find_generating_map(space)
    report = {
        "space": space.to_json(),
        **verdict.to_json(),
        "c123": {"c1": c.c1, "c2": c.c2, "c3": c.c3},
        "quotient": {"classes": q.classes.as_lists(), "discrete": q.discrete},
        "generating_map": None if g is None else list(g.f),
        "pseudometric": None,
    }
    if space.n <= oracle_bound:
        pm = pseudometric_oracle(space, bound=oracle_bound)
        report["pseudometric"] = None if pm is None else [list(r) for r in pm.d]
    return report


def fmap_report(obj):
    if isinstance(obj, KPrimalFamily):
        space = k_primal_topology(obj)
        verdict = decide_uniformizable(space)
        return {
            "k": obj.k,
            "maps": [list(m.f) for m in obj.maps],
            "basis": space.basis(),
            "uniformizable": verdict.decision,
            "generating_map": None if (g := find_generating_map(space)) is None else list(g.f),
        }
    orb = periodic_points(obj)
    space = functional_topology(obj)
    uni = decide_uniformizable(space).decision
    per_all = orb.periodic == (1 << obj.n) - 1
    return {
        "f": list(obj.f),
        "periodic": orb.periodic_points(),
        "period": {str(x): p for x, p in sorted(orb.period.items())},
        "basis": space.basis(),
        "uniformizable": uni,
        "per_equals_X": per_all,
        "theorem80_agree": uni == per_all,
    }


def _print_kv(d, indent=""):
    for k, v in d.items():
        if isinstance(v, dict) and k != "period":
            print(f"{indent}{k}:")
            _print_kv(v, indent + "  ")
        else:
            print(f"{indent}{k}: {v}")


def _emit(args, report):
    if args.json:
        sys.stdout.write(dumps(report))
    else:
        _print_kv(report)


def cmd_analyze(args):
    space, _ = load_space(args.file)
    _emit(args, analyze_report(space, args.oracle_bound))
    return EXIT_OK


def cmd_fmap(args):
    rep = fmap_report(load_map(args.file))
    _emit(args, rep)
    return EXIT_OK if rep.get("theorem80_agree", True) else EXIT_FOUND


def cmd_group(args):
    g = load_group(args.cayley)
    try:
        sub = [int(s) for s in args.subgroup.split(",") if s.strip()]
    except ValueError:
        raise AlexError(f"--subgroup must be a comma-separated list of element indices, got {args.subgroup!r}")
    gt = coset_topology(g, sub)
    z10 = check_zahra10(gt)
    z20 = check_zahra20(gt)
    rep = {
        "order": g.order,
        "subgroup": sorted(sub),
        "basis": gt.space.basis(),
        "zahra10": {k: v for k, v in z10.items() if k != "witness"},
        "zahra20": {k: z20[k] for k in ("v_e_open_and_finite", "functional_alexandroff",
                                         "generating_map", "F_finite_discrete", "agree")},
        "decomposition": z10.get("witness"),
    }
    _emit(args, rep)
    return EXIT_OK if z10["agree"] and z20["agree"] else EXIT_FOUND


def cmd_count(args):
    rep = count_uniformizable(args.n, long_run=args.long_run)
    if args.json:
        sys.stdout.write(dumps(rep.to_json()))
    else:
        print(rep.table())
    return EXIT_OK if all(v["passed"] for v in rep.per_theorem.values()) else EXIT_FOUND


def cmd_verify(args):
    rep = verify_theorem(args.theorem, args.n, long_run=args.long_run)
    if args.json:
        sys.stdout.write(dumps(rep.to_json()))
    else:
        status = "pass" if rep.passed else "FAIL"
        print(f"{rep.theorem} n={rep.n}: {status} over {rep.instances} instances")
        if rep.counterexample:
            print(f"counterexample: {rep.counterexample}")
    return EXIT_OK if rep.passed else EXIT_FOUND


def cmd_dot(args):
    space, labels = load_space(args.file)
    sys.stdout.write(to_dot(space, labels=labels))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="alexspace", description="Finite Alexandroff space workbench")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON on stdout")
        return sp

    a = with_json(sub.add_parser("analyze", help="uniformizability, C1-C3, quotient, generating map"))
    a.add_argument("file")
    a.add_argument("--oracle-bound", type=int, default=ORACLE_BOUND)
    a.set_defaults(func=cmd_analyze)

    f = with_json(sub.add_parser("fmap", help="periodic points and induced topology of a self-map"))
    f.add_argument("file")
    f.set_defaults(func=cmd_fmap)

    g = with_json(sub.add_parser("group", help="coset topology of a normal subgroup"))
    g.add_argument("--cayley", required=True)
    g.add_argument("--subgroup", required=True)
    g.set_defaults(func=cmd_group)

    c = with_json(sub.add_parser("count", help="census of (functional) uniformizable topologies"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--long-run", action="store_true")
    c.set_defaults(func=cmd_count)

    v = with_json(sub.add_parser("verify", help="exhaustive theorem sweep"))
    v.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--long-run", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dot", help="Hasse diagram of the specialization preorder in DOT")
    d.add_argument("file")
    d.set_defaults(func=cmd_dot)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except AlexError as exc:
        print(f"alexspace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
