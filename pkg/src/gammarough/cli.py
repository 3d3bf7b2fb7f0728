"""Command-line interface.

Exit status: 0 when every requested check holds, 1 when the command ran and
found a failure or refutation, 2 on usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .antihom import Level, check_anti_hom, enumerate_maps
from .core import validate_structure
from .errors import GammaRoughError
from .grs import load, parse_set_literal, serialize_scenario
from .ideals import classify_subset
from .paper_audit import audit_paper_examples
from .quotient import build_quotient
from .rough import Partition, approximate, is_congruence, pawlak_lower, pawlak_upper
from .theorems import THEOREM_IDS, All, Sampled, audit_all, search_counterexample

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _subset(carrier, literal: str):
    try:
        names = parse_set_literal(literal)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    return carrier.subset(names)


def _partition(carrier, text: str) -> Partition:
    blocks = []
    for chunk in text.replace("}", "}\n").splitlines():
        chunk = chunk.strip().strip(",").strip()
        if chunk:
            blocks.append(parse_set_literal(chunk))
    try:
        return Partition.from_blocks(carrier, blocks)
    except ValueError as exc:
        raise _Usage(f"bad partition: {exc}") from None


def cmd_validate(args):
    sc = load(args.file)
    lines, ok = [], True
    for name, S in sc.structures.items():
        r = validate_structure(S)
        ok &= r.valid
        lines += [f"structure={name}", f"valid={str(r.valid).lower()}", f"instances={r.instances}",
                  f"failures={len(r.witnesses)}"]
        if r.witnesses:
            w = r.witnesses[0]
            lines.append(f"witness=({w.a},{w.alpha},{w.b},{w.beta},{w.c}) left={w.left} right={w.right}")
    for name, T in sc.maps.items():
        lines.append(f"map={name} from={T.source.name} to={T.target.name}")
    return lines, ok


def cmd_approx(args):
    sc = load(args.file)
    if args.pawlak:
        if not args.partition:
            raise _Usage("--pawlak needs --partition")
        if args.carrier:
            carrier = sc.carrier(args.carrier)
        elif args.map:
            carrier = sc.map(args.map).target
        else:
            raise _Usage("--pawlak needs --map or --carrier to pick the carrier")
        rho = _partition(carrier, args.partition)
        A = _subset(carrier, args.set)
        lo, up = pawlak_lower(rho, A), pawlak_upper(rho, A)
        lines = [f"carrier={carrier.name}", f"partition={rho}", f"set={A}", f"lower={lo}", f"upper={up}",
                 f"definable={str(lo == up).lower()}"]
        if hasattr(carrier, "gammas"):
            v = is_congruence(carrier, rho)
            lines.append(f"congruence={str(v.holds).lower()}")
        return lines, True
    if not args.map:
        raise _Usage("approx needs --map")
    T = sc.map(args.map)
    B = _subset(T.target, args.set)
    pair = approximate(T, B)
    return [f"map={T.name}", f"set={B}", f"lower={pair.lower}", f"upper={pair.upper}",
            f"definable={str(pair.definable).lower()}"], True


def cmd_classify(args):
    sc = load(args.file)
    S = sc.structure(args.structure)
    A = _subset(S, args.set)
    report = classify_subset(S, A)
    return [f"structure={S.name}"] + report.lines(), True


def cmd_antihom(args):
    sc = load(args.file)
    T = sc.map(args.map)
    v = check_anti_hom(T)
    lines = [f"map={T.name}", f"level={v.level}"]
    if v.plain_witness is not None:
        w = v.plain_witness
        lines.append(f"plain_witness=({w.a},{w.gamma},{w.b}) offending={w.offending}")
    if v.strong_witness is not None:
        w = v.strong_witness
        lines.append(f"strong_witness=({w.a},{w.gamma},{w.b}) image={w.image} product={w.product}")
    return lines, v.level >= Level.parse(args.require)


def cmd_enumerate(args):
    sc = load(args.file)
    S1, S2 = sc.structure(args.source), sc.structure(args.target)
    maps = enumerate_maps(S1, S2, Level.parse(args.filter), budget=args.budget, seed=args.seed)
    found = list(maps)
    lines = [f"from={S1.name}", f"to={S2.name}", f"filter={maps.filter}", f"total={maps.total}",
             f"exhaustive={str(maps.exhaustive).lower()}", f"matched={len(found)}"]
    shown = found if args.limit is None else found[: args.limit]
    lines += [f"{T.name}={T.describe()}" for T in shown]
    return lines, True


def cmd_quotient(args):
    sc = load(args.file)
    T = sc.map(args.map)
    q = build_quotient(T)
    lines = [f"map={T.name}"] + q.lines()
    ok = q.well_defined
    if q.induced is not None:
        ok &= q.induced.is_valid
        for g in q.induced.gammas:
            for row_name, row in zip(q.induced.elements, q.induced.rows(g)):
                lines.append(f"table.{g}.{row_name}=" + " ".join(row))
    return lines, ok


def cmd_audit(args):
    sc = load(args.file)
    T = sc.map(args.map)
    ids = [args.theorem] if args.theorem else None
    scope = Sampled(args.samples, args.seed) if args.samples else All()
    results = audit_all(T, scope, ids, budget=args.budget)
    lines = [f"map={T.name}", f"scope={'sampled' if args.samples else 'all'}"]
    counts = {"PASS": 0, "FAIL": 0, "VACUOUS": 0, "NOT-APPLICABLE": 0}
    for r in results:
        counts[r.status] += 1
        lines += r.lines()
    lines.append(" ".join(f"{k.lower()}={v}" for k, v in counts.items()))
    return lines, counts["FAIL"] == 0


def cmd_search(args):
    r = search_counterexample(args.theorem, args.max_order, args.map_budget, args.seed)
    return r.lines(), r.witness is None


def cmd_audit_paper(args):
    report = audit_paper_examples()
    return report.lines(), report.failures == 0


def cmd_serialize(args):
    return serialize_scenario(load(args.file)).splitlines(), True


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gammarough", description="Rough approximations in Gamma-semigroups")
    p.add_argument("--format", choices=("text", "machine"), default="text",
                   help="machine: bare key=value lines only")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    s = command("validate", "check associativity of every structure in a file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = command("approx", "lower/upper approximation of a set")
    s.add_argument("file")
    s.add_argument("--map")
    s.add_argument("--set", required=True, help='set literal such as "{a,b}"')
    s.add_argument("--pawlak", action="store_true", help="use a partition instead of the map")
    s.add_argument("--partition", help='blocks such as "{a,b},{c}"')
    s.add_argument("--carrier", help="carrier for --pawlak when no --map is given")
    s.set_defaults(func=cmd_approx)

    s = command("classify", "every ideal kind and primality of a subset")
    s.add_argument("file")
    s.add_argument("--structure", required=True)
    s.add_argument("--set", required=True)
    s.set_defaults(func=cmd_classify)

    s = command("antihom", "anti-homomorphism level of a map")
    s.add_argument("file")
    s.add_argument("--map", required=True)
    s.add_argument("--require", choices=("plain", "strong"), default="plain")
    s.set_defaults(func=cmd_antihom)

    s = command("enumerate", "list maps between two structures")
    s.add_argument("file")
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--filter", choices=("none", "plain", "strong"), default="none")
    s.add_argument("--budget", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--limit", type=int, help="print at most this many maps")
    s.set_defaults(func=cmd_enumerate)

    s = command("quotient", "the quotient M1/T and its induced operation")
    s.add_argument("file")
    s.add_argument("--map", required=True)
    s.set_defaults(func=cmd_quotient)

    s = command("audit", "audit registered statements on a map")
    s.add_argument("file")
    s.add_argument("--map", required=True)
    s.add_argument("--theorem", choices=THEOREM_IDS, metavar="ID")
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=2_000_000)
    s.set_defaults(func=cmd_audit)

    s = command("search", "search the fixture catalog for a counterexample")
    s.add_argument("--theorem", required=True, choices=THEOREM_IDS, metavar="ID")
    s.add_argument("--max-order", type=int, default=2)
    s.add_argument("--map-budget", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_search)

    s = command("audit-paper", "re-check the worked examples")
    s.set_defaults(func=cmd_audit_paper)

    s = command("serialize", "print the canonical form of a file")
    s.add_argument("file")
    s.set_defaults(func=cmd_serialize)
    return p


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        lines, ok = args.func(args)
    except (_Usage, GammaRoughError, ValueError, OSError) as exc:
        where = getattr(args, "file", None)
        prefix = f"{where}: " if where else ""
        print(f"gammarough: error: {prefix}{exc}", file=stderr)
        return EXIT_USAGE
    if args.format == "text" and args.command != "serialize":
        print(f"# gammarough {args.command}", file=stdout)
    for line in lines:
        print(line, file=stdout)
    if args.format == "text" and args.command != "serialize":
        print(f"# result: {'ok' if ok else 'findings'}", file=stdout)
    return EXIT_OK if ok else EXIT_FINDINGS


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
