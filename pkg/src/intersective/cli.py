"""Command-line interface: check, group, family, search.

Exit codes: 0 predicate holds / success, 1 usage error, 2 resource cap,
3 predicate fails, 4 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .config import ENV_PREFIX, Config
from .decide import (
    NO,
    UNDECIDED,
    YES,
    InstanceError,
    SuppliedGroup,
    attach_computed,
    attach_supplied,
    evaluate,
    gen_brandl,
    gen_quadratic_triple,
    search,
    verify_instance,
)
from .groups import (
    IntransitiveGroupError,
    NotASubgroupError,
    PermParseError,
    closure,
    covers,
    frobenius_catalog,
    frobenius_structure,
    joint_core_trivial,
    lemma24_check,
    min_cover_m,
    parse_generators,
    subgroup_classes,
)
from .numtheory import ResourceError
from .polyring import PolyParseError, parse_poly

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_FAILS, EXIT_UNDECIDED = 0, 1, 2, 3, 4
VERDICT_EXIT = {YES: EXIT_OK, NO: EXIT_FAILS, UNDECIDED: EXIT_UNDECIDED}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# --- rendering -----------------------------------------------------------


def render_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def render_pretty(obj, indent: int = 0) -> str:
    """Plain-text view of the same report object."""
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_pretty(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        if not obj:
            lines.append(pad + "[]")
        elif all(not isinstance(v, (dict, list)) for v in obj):
            lines.append(pad + ", ".join(_scalar(v) for v in obj))
        else:
            for v in obj:
                lines.append(f"{pad}-")
                lines.append(render_pretty(v, indent + 1).rstrip("\n"))
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines) + "\n"


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def _emit(args, obj) -> None:
    text = render_pretty(obj) if args.pretty else render_json(obj)
    sys.stdout.write(text)
    if args.report_file:
        with open(args.report_file, "w", encoding="utf-8") as fh:
            fh.write(render_json(obj))


def _config(args) -> Config:
    return Config.from_env(
        group_order_cap=args.group_order_cap,
        splitting_degree_cap=args.splitting_cap,
        subgroup_enum_cap=args.enum_cap,
        padic_node_cap=args.node_cap,
        prime_sample_count=args.prime_samples,
        oracle_scan_bound=args.oracle_bound,
        prng_seed=args.seed,
    )


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# --- check ---------------------------------------------------------------


def _load_supplied(path: str, config: Config) -> SuppliedGroup:
    try:
        data = json.loads(_read(path))
        degree = int(data["degree"])
        gens = parse_generators(data["generators"], degree)
        blocks = [[int(i) - 1 for i in b] for b in data["blocks"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad supplied-group file {path}: {exc}") from None
    return SuppliedGroup(closure(gens, cap=config.group_order_cap, degree=degree), blocks)


def cmd_check(args, config: Config) -> int:
    inst = verify_instance(args.poly)
    if args.group == "auto":
        attach_computed(inst, config)
    elif args.group == "sample-only":
        pass
    else:
        attach_supplied(inst, _load_supplied(args.group, config))
    report = evaluate(inst, args.predicate, config)
    _emit(args, report.to_json())
    return VERDICT_EXIT[report.verdict.value]


# --- group ---------------------------------------------------------------


def _load_group(path: str, degree: Optional[int], config: Config):
    gens = parse_generators(_read(path).splitlines(), degree)
    if not gens:
        raise UsageError("no generators given")
    return closure(gens, cap=config.group_order_cap, degree=degree or len(gens[0]))


def _load_subgroups(path: str, G, config: Config):
    chunks, cur = [], []
    for line in _read(path).splitlines():
        if line.strip().startswith("---") or not line.strip():
            if cur:
                chunks.append(cur)
            cur = []
        else:
            cur.append(line)
    if cur:
        chunks.append(cur)
    out = []
    for chunk in chunks:
        gens = parse_generators(chunk, G.degree)
        out.append(closure(gens, cap=G.order, degree=G.degree))
    if not out:
        raise UsageError("no subgroups given")
    return out


def cmd_group(args, config: Config) -> int:
    G = _load_group(args.generators, args.degree, config)
    report = {"group": {"order": G.order, "degree": G.degree, "generators": G.generators_text()}}
    if args.covers:
        subs = _load_subgroups(args.covers, G, config)
        for A in subs:
            if A.order == G.order:
                raise UsageError("covering subgroups must be proper")
        rep = covers(G, subs)
        report["covers"] = rep.to_json()
        report["joint_core_trivial"] = joint_core_trivial(G, subs)
        conj = [
            [i + 1, j + 1]
            for i in range(len(subs))
            for j in range(i + 1, len(subs))
            if subs[j].element_set in set(G.conjugates_of(subs[i]))
        ]
        if conj:
            report["mutually_conjugate"] = conj
    elif args.frobenius:
        st = frobenius_structure(G)
        report["frobenius"] = st.to_json() if st is not None else None
    elif args.lemma24:
        st = frobenius_structure(G)
        if st is None:
            raise UsageError("group is not a Frobenius group")
        report["frobenius"] = st.to_json()
        report["lemma24"] = lemma24_check(G, st, cap=config.subgroup_enum_cap).to_json()
    elif args.min_cover is not None:
        mc = min_cover_m(G, args.min_cover, cap=config.subgroup_enum_cap)
        report["min_cover"] = mc.to_json() if mc is not None else None
        report["cyclic"] = G.is_cyclic()
    elif args.classes:
        cls = subgroup_classes(G, cap=config.subgroup_enum_cap)
        report["classes"] = [
            {"order": c.order, "conjugates": c.conjugates, "maximal": c.is_maximal, "generators": c.rep.generators_text()}
            for c in cls
        ]
    _emit(args, report)
    return EXIT_OK


# --- family --------------------------------------------------------------


def cmd_family(args, config: Config) -> int:
    if args.family == "frobenius-catalog":
        entries = frobenius_catalog(args.n, cap=config.subgroup_enum_cap)
        out = []
        for e in entries:
            st = frobenius_structure(e.group)
            out.append(
                {
                    "name": e.name,
                    "order": e.group.order,
                    "degree": e.group.degree,
                    "kernel_order": e.kernel_order,
                    "complement_order": e.complement_order,
                    "checks": st.checks,
                }
            )
        _emit(args, {"catalog": out, "orders": sorted({e.group.order for e in entries})})
        return EXIT_OK
    if args.family == "brandl":
        inst = gen_brandl(args.r, config)
    else:
        inst = gen_quadratic_triple(args.a, args.b, config)
    report = {"instance": inst.to_json(), "group": {"order": inst.group.order, "source": inst.group_source}}
    code = EXIT_OK
    if args.check:
        rep = evaluate(inst, args.check, config)
        report["report"] = rep.to_json()
        code = VERDICT_EXIT[rep.verdict.value]
    _emit(args, report)
    return code


# --- search --------------------------------------------------------------


def cmd_search(args, config: Config) -> int:
    pool = []
    for line in _read(args.pool).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            pool.append(parse_poly(line))
    if not pool:
        raise UsageError("empty pool")

    def progress(done, total):
        print(f"search: {done}/{total}", file=sys.stderr)

    res = search(pool, args.m, args.predicate, args.budget, config, progress)
    _emit(args, res.to_json())
    return EXIT_RESOURCE if res.exhausted else EXIT_OK


# --- entry point ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable rendering instead of JSON")
    common.add_argument("--report-file", metavar="PATH", help="also write the JSON report here")
    common.add_argument("--seed", type=int, help="PRNG seed")
    common.add_argument("--group-order-cap", type=int)
    common.add_argument("--splitting-cap", type=int)
    common.add_argument("--enum-cap", type=int)
    common.add_argument("--node-cap", type=int)
    common.add_argument("--prime-samples", type=int)
    common.add_argument("--oracle-bound", type=int)

    p = _Parser(
        prog="intersective",
        description="Roots mod p and in Q_p for all p: Galois-group covering checks.",
        epilog=f"Every cap also reads {ENV_PREFIX}<NAME> from the environment; flags win.",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="decide an instance")
    c.add_argument("poly", help="factored or expanded polynomial, e.g. '(x^3-2)(x^2+x+1)'")
    c.add_argument("--predicate", choices=["weak", "strong"], default="weak")
    c.add_argument("--group", default="auto", help="auto, sample-only, or a supplied-group JSON file")

    g = sub.add_parser("group", parents=[common], help="group-theoretic reports")
    g.add_argument("generators", help="file with one cycle-notation generator per line")
    g.add_argument("--degree", type=int)
    mode = g.add_mutually_exclusive_group(required=True)
    mode.add_argument("--covers", metavar="SUBFILE")
    mode.add_argument("--frobenius", action="store_true")
    mode.add_argument("--lemma24", action="store_true")
    mode.add_argument("--min-cover", type=int, metavar="M")
    mode.add_argument("--classes", action="store_true")

    f = sub.add_parser("family", help="example families")
    fsub = f.add_subparsers(dest="family", required=True, parser_class=_Parser)
    b = fsub.add_parser("brandl", parents=[common])
    b.add_argument("r", type=int)
    b.add_argument("--check", choices=["weak", "strong"])
    q = fsub.add_parser("quadratic-triple", parents=[common])
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("--check", choices=["weak", "strong"])
    fc = fsub.add_parser("frobenius-catalog", parents=[common])
    fc.add_argument("n", type=int)

    s = sub.add_parser("search", parents=[common], help="search m-subsets of a pool")
    s.add_argument("pool", help="file with one polynomial per line")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--predicate", choices=["weak", "strong"], default="strong")
    s.add_argument("--budget", type=int)
    return p


COMMANDS = {"check": cmd_check, "group": cmd_group, "family": cmd_family, "search": cmd_search}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help (0) and on usage errors (already mapped to 1)
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    except ResourceError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (
        UsageError,
        InstanceError,
        PolyParseError,
        PermParseError,
        NotASubgroupError,
        IntransitiveGroupError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
