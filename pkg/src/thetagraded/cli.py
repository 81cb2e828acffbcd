"""Command-line front end.

Subcommands: tables, homs, example, decompose.  Exit codes: 0 all
checks pass, 1 at least one check failed, 2 input error.  JSON output
is byte-identical across identical invocations (timing goes to stderr
in text mode only; all randomness is seeded and echoed).
"""

import argparse
import sys
import time

from .serialize import dumps

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _emit(obj, text, args):
    payload = dumps(obj) if args.format == "json" else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _check_n(args):
    if args.n not in (3, 4):
        raise SystemExit2("n must be 3 or 4")


class SystemExit2(Exception):
    pass


def cmd_tables(args):
    from .tensortheta import verify_tables

    _check_n(args)
    rep = verify_tables(args.n)
    lines = [f"theta tables n={args.n}: {len(rep['cells'])} cells"]
    for c in rep["cells"]:
        status = "ok" if c["pass"] else "MISMATCH"
        lines.append(
            f"  {c['row']:>4} (x) {c['col']:<4} expected={c['expected']} "
            f"computed={c['computed']} remainder={c['remainder_dim']} {status}"
        )
    lines.append("PASS" if rep["pass"] else "FAIL")
    _emit(rep, "\n".join(lines) + "\n", args)
    return EXIT_PASS if rep["pass"] else EXIT_FAIL


def cmd_homs(args):
    from .homspaces import verify_paper_homs

    _check_n(args)
    rep = verify_paper_homs(args.n)
    lines = [f"printed Hom maps n={args.n}: {rep['counted_entries']} entries verified"]
    for r in rep["entries"]:
        status = "ok" if r["pass"] else "FAIL"
        tag = "" if r["counted"] else " [noted]"
        lines.append(
            f"  {r['name']:<16} dim {r['dim_computed']}/{r['dim_expected']} "
            f"equivariant={r['equivariant']} nonzero={r['nonzero']} "
            f"in_span={r['in_span']} {status}{tag}"
        )
    lines.append("PASS" if rep["pass"] else "FAIL")
    _emit(rep, "\n".join(lines) + "\n", args)
    return EXIT_PASS if rep["pass"] else EXIT_FAIL


ALL_CHECKS = ("grading", "jacobi", "condition", "coords", "section4", "roundtrip")


def cmd_example(args):
    from .extract import example_sl_2n1, example_sl_nk, extract_coordinates
    from .graded import assemble, check_condition_s, check_grading, check_jacobi, roundtrip_defects
    from .coordalg import verify_section4

    _check_n(args)
    if args.name == "slnk":
        emb = example_sl_nk(args.n, args.k)
    elif args.name == "sl2n+1":
        emb = example_sl_2n1(args.n)
    else:
        raise SystemExit2(f"unknown example {args.name!r}")

    if args.check == "all":
        checks = [c for c in ALL_CHECKS if c != "condition" or args.n == 3]
    else:
        checks = [c.strip() for c in args.check.split(",") if c.strip()]
        for c in checks:
            if c not in ALL_CHECKS:
                raise SystemExit2(f"unknown check {c!r}")
            if c == "condition" and args.n != 3:
                raise SystemExit2("the vanishing condition check requires n=3")

    t0 = time.monotonic()
    ex = extract_coordinates(emb)
    alg = assemble(ex.data)
    entries = []

    def record(name, ok, detail):
        entries.append({"name": name, "pass": bool(ok), "detail": detail})

    for c in checks:
        if c == "grading":
            rep = check_grading(alg)
            record("grading", rep["pass"], {k: rep[k] for k in ("G1", "G2", "G3")})
        elif c == "jacobi":
            rep = check_jacobi(alg, mode=args.mode, samples=args.samples, seed=args.seed)
            record("jacobi", rep["pass"], rep)
        elif c == "condition":
            rep = check_condition_s(alg)
            record("condition", rep["pass"], rep)
        elif c == "coords":
            ok, detail = _coords_check(ex)
            record("coords", ok, detail)
        elif c == "section4":
            rep = verify_section4(ex.data)
            record("section4", rep["pass"], rep)
        elif c == "roundtrip":
            bad = roundtrip_defects(ex, alg)
            record("roundtrip", not bad, {"defects": bad})
    elapsed = time.monotonic() - t0

    report = {
        "command": "example",
        "name": emb.name,
        "n": args.n,
        "k": args.k if args.name == "slnk" else None,
        "dims": dict(sorted(ex.data.dims.items())),
        "seed": args.seed if "jacobi" in checks and args.mode == "sampled" else None,
        "entries": entries,
        "pass": all(e["pass"] for e in entries),
    }
    lines = [f"example {emb.name} (ambient dim {emb.dim}), coordinates {report['dims']}"]
    for e in entries:
        lines.append(f"  {e['name']:<10} {'PASS' if e['pass'] else 'FAIL'}")
    lines.append("PASS" if report["pass"] else "FAIL")
    if args.format == "text":
        print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    _emit(report, "\n".join(lines) + "\n", args)
    return EXIT_PASS if report["pass"] else EXIT_FAIL


def _coords_check(ex):
    """The forced identities of the distinguished element 1 in A."""
    data = ex.data
    bad = []
    circ = data.products[("A", "A", "A", "circ")]
    br = data.products[("A", "A", "A", "bracket")]
    pair = data.products[("A", "A", "D", "plain")]
    one = data.one_index
    for a in range(data.dims["A"]):
        want = [2 if t == a else 0 for t in range(data.dims["A"])]
        if [x for x in circ[one][a]] != want:
            bad.append(("1oa", a))
        if any(br[one][a]) or any(br[a][one]):
            bad.append(("[1,a]", a))
        if any(pair[one][a]) or any(pair[a][one]):
            bad.append(("<1,a>", a))
    return (not bad, {"witnesses": bad[:5], "dims": dict(sorted(data.dims.items()))})


def cmd_decompose(args):
    import json as _json

    from .gmodules import NonIntegralWeight, NonThetaConstituent, isotypic_decompose
    from .serialize import gmodule_from_json

    try:
        with open(args.input) as fh:
            obj = _json.load(fh)
        m = gmodule_from_json(obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot load module: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        dec = isotypic_decompose(m, build_components=False)
    except NonThetaConstituent as exc:
        report = {"input": args.input, "error": "NonThetaConstituent", "weight": list(exc.weight.coords)}
        _emit(report, f"constituent outside Theta_n^+: weight {exc.weight.coords}\n", args)
        return EXIT_FAIL
    except NonIntegralWeight as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    mults = dec.multiplicities()
    report = {
        "input": args.input,
        "n": m.n,
        "dim": m.dim,
        "multiplicities": dict(sorted(mults.items())),
        "dimension_check": dec.check_dimension(),
    }
    text = f"n={m.n} dim={m.dim} multiplicities={report['multiplicities']}\n"
    _emit(report, text, args)
    return EXIT_PASS


def build_parser():
    p = argparse.ArgumentParser(
        prog="thetagraded",
        description="Construct, decompose and verify Theta_n-graded Lie algebras (n=3,4).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", default=None, help="write the report to a file")

    sp = sub.add_parser("tables", help="verify the Theta tensor tables")
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("homs", help="verify the printed Hom-space bases")
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_homs)

    sp = sub.add_parser("example", help="build a concrete example and run checks")
    sp.add_argument("--name", required=True, help="slnk or sl2n+1")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--check", default="all", help="comma list or 'all'")
    sp.add_argument("--mode", choices=("full", "sampled"), default="full")
    sp.add_argument("--samples", type=int, default=5000)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_example)

    sp = sub.add_parser("decompose", help="isotypic decomposition of a GModule JSON file")
    sp.add_argument("input")
    common(sp)
    sp.set_defaults(func=cmd_decompose)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
