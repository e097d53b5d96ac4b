"""Command-line front end (``gel``).

Exit status: 0 success, 1 verification failure, 2 usage or input error,
3 eigensolver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import graph as gc
from . import harness
from .classify import CSV_HEADER, certify_pair, classify_energy
from .errors import CapacityError, GraphEnergyError, NumericFailure, ParseError
from .expr import build
from .spectral import char_poly, integer_spectrum, spectrum

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def fmt(x) -> str:
    """Exact integers print bare; reals print with 10 significant digits."""
    if isinstance(x, bool) or x is None:
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if float(x).is_integer() and abs(x) < 1e15:
        return str(int(x))
    return f"{x:.10g}"


def parse_range(text: str) -> range:
    """``"5"`` or ``"1..20"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO..HI") from None
    return range(value, value + 1)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=str)


# -- subcommands -------------------------------------------------------------

def cmd_build(args) -> tuple[int, str]:
    g = build(args.expr)
    if args.json:
        return EXIT_OK, _dump({"label": g.label, "order": g.order, "size": g.size, "graph6": gc.to_graph6(g)}) + "\n"
    if args.out == "edgelist":
        return EXIT_OK, gc.to_edgelist(g)
    return EXIT_OK, gc.to_graph6(g) + "\n"


def cmd_spectrum(args) -> tuple[int, str]:
    g = build(args.expr)
    spec = spectrum(g)
    payload = {"label": g.label, "order": g.order} | spec.to_dict()
    lines = [f"{fmt(v)}^{m}" if m > 1 else fmt(v) for v, m in spec.grouping]
    poly = None
    if args.exact:
        poly = char_poly(g)
        roots = integer_spectrum(g, poly, spec.as_array())
        payload["charpoly"] = poly.to_dict()
        payload["integral"] = roots is not None
        if roots is not None:
            payload["exact"] = [{"value": r, "multiplicity": m} for r, m in roots.items()]
            lines = [f"{r}^{m}" if m > 1 else str(r) for r, m in roots.items()]
    if args.json:
        return EXIT_OK, _dump(payload) + "\n"
    out = f"spectrum: {' '.join(lines)}\n"
    if args.exact:
        out += f"charpoly: {poly}\nintegral: {fmt(payload['integral'])}\n"
    return EXIT_OK, out


def cmd_energy(args) -> tuple[int, str]:
    g = build(args.expr)
    report = classify_energy(g)
    if args.json:
        return EXIT_OK, _dump({"label": g.label, "order": g.order, "energy": report.energy,
                               "energy_exact": report.energy_exact}) + "\n"
    return EXIT_OK, fmt(report.value) + "\n"


def cmd_classify(args) -> tuple[int, str]:
    g = build(args.expr)
    r = classify_energy(g)
    if args.json:
        return EXIT_OK, r.to_json() + "\n"
    if args.csv:
        return EXIT_OK, CSV_HEADER + "\n" + r.to_csv_row() + "\n"
    flags = [name for name in ("orderenergetic", "hypoenergetic", "nonhypoenergetic", "hyperenergetic")
             if getattr(r, name)]
    if r.integral:
        flags.append("integral")
    out = (
        f"graph: {g.label}\n"
        f"order: {r.order}\n"
        f"energy: {fmt(r.value)}\n"
        f"flags: {', '.join(flags)}\n"
        f"comparison: {r.comparison}\n"
    )
    return EXIT_OK, out


def cmd_pair(args) -> tuple[int, str]:
    g, h = build(args.expr1), build(args.expr2)
    cert = certify_pair(g, h)
    if args.json:
        return EXIT_OK, cert.to_json() + "\n"
    out = (
        f"verdict: {cert.verdict}\n"
        f"same order: {fmt(cert.same_order)}\n"
        f"energies: {fmt(cert.energies[0])} {fmt(cert.energies[1])} ({cert.comparison})\n"
        f"cospectral: {fmt(cert.cospectral)}\n"
        f"isomorphic: {fmt(cert.isomorphic) if cert.isomorphic is not None else 'undecided'}\n"
    )
    if cert.note:
        out += f"note: {cert.note}\n"
    return EXIT_OK, out


VERIFY_DEFAULTS = {
    "shadow-orderenergetic": {"seed": "C(4)", "m": "1..5"},
    "shadow-duplicate": {"seed": "C(4)", "m": "1..3"},
    "join-empty": {"seed": "C(4)", "n": "1..40"},
    "splitting-2": {"seed": "C(4)"},
    "superpath": {"m": "1..6"},
    "hypo-closure": {"seed": "KB(2,2)", "seed2": "KB(1,3)", "op": "kron", "m": "3"},
    "complete-star": {"p": "2..10", "m": "2..20"},
    "nonhyper-star": {"seed": "K(4)", "m": "14..16"},
    "equienergetic-family": {"seed": "K(2)", "m": "1..3"},
    "observations": {"n": "6"},
}


def _run_verifier(key: str, fn, params: dict) -> list[harness.TheoremVerdict]:
    def seed(name="seed"):
        return build(params[name])

    if key in ("shadow-orderenergetic", "shadow-duplicate", "equienergetic-family", "nonhyper-star"):
        return fn(seed(), parse_range(params["m"]))
    if key == "join-empty":
        return fn(seed(), parse_range(params["n"]))
    if key == "splitting-2":
        return [fn(seed())]
    if key == "superpath":
        return fn(parse_range(params["m"]))
    if key == "complete-star":
        return fn(parse_range(params["p"]), parse_range(params["m"]))
    if key == "observations":
        return [v for n in parse_range(params["n"]) for v in fn(n)]
    # hypo-closure
    op = params["op"]
    if op == "kron":
        return [fn(seed(), seed("seed2"), "kron")]
    return [fn(seed(), None, op, m) for m in parse_range(params["m"])]


def cmd_verify(args) -> tuple[int, str]:
    try:
        key, fn = harness.resolve_verifier(args.theorem)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    params = dict(VERIFY_DEFAULTS[key])
    for item in args.param or []:
        if "=" not in item:
            raise UsageError(f"--param expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        params[k.strip()] = v.strip()
    for name in ("seed", "seed2", "m", "n", "p", "op"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    verdicts = _run_verifier(key, fn, params)
    status = EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAIL
    if args.json:
        return status, harness.to_jsonl(verdicts)
    out = harness.summary_table(verdicts)
    for v in verdicts:
        if not v.passed:
            out += f"FAIL {v.theorem_id} {_dump(v.instance)} expected={_dump(v.expected)} observed={_dump(v.observed)}"
            out += f" note={v.note}\n" if v.note else "\n"
    return status, out


def cmd_enumerate(args) -> tuple[int, str]:
    if args.flag not in harness.FLAGS:
        raise UsageError(f"unknown flag {args.flag!r}; choose from {', '.join(harness.FLAGS)}")
    graphs = harness.enumerate_small(args.n, args.flag, connected=args.connected)
    rows = []
    for g in graphs:
        r = classify_energy(g)
        rows.append({"graph6": gc.to_graph6(g), "order": g.order, "size": g.size,
                     "max_degree": g.max_degree, "energy": r.value, "integral": r.integral})
    if args.json:
        return EXIT_OK, "".join(_dump(row) + "\n" for row in rows)
    out = f"# {len(rows)} isomorphism classes on {args.n} vertices with flag {args.flag}\n"
    for row in rows:
        out += f"{row['graph6']}\tedges={row['size']}\tmaxdeg={row['max_degree']}\tenergy={fmt(row['energy'])}\n"
    return EXIT_OK, out


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gel", description="Graph energy toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = with_json(sub.add_parser("build", help="build a graph and print it"))
    p.add_argument("expr")
    p.add_argument("--out", choices=("g6", "edgelist"), default="g6")
    p.set_defaults(func=cmd_build)

    p = with_json(sub.add_parser("spectrum", help="adjacency spectrum"))
    p.add_argument("expr")
    p.add_argument("--exact", action="store_true", help="exact char-poly and integer spectrum")
    p.set_defaults(func=cmd_spectrum)

    p = with_json(sub.add_parser("energy", help="graph energy"))
    p.add_argument("expr")
    p.set_defaults(func=cmd_energy)

    p = with_json(sub.add_parser("classify", help="energy classification flags"))
    p.add_argument("expr")
    p.add_argument("--csv", action="store_true", help="one CSV row with header")
    p.set_defaults(func=cmd_classify)

    p = with_json(sub.add_parser("pair", help="certify an equienergetic pair"))
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.set_defaults(func=cmd_pair)

    p = with_json(sub.add_parser("verify", help="run a verifier"))
    p.add_argument("theorem", help="verifier id or alias, e.g. join-empty")
    p.add_argument("--seed")
    p.add_argument("--seed2")
    p.add_argument("--m")
    p.add_argument("--n")
    p.add_argument("--p")
    p.add_argument("--op", choices=harness.HYPO_OPS)
    p.add_argument("--param", action="append", metavar="K=V")
    p.set_defaults(func=cmd_verify)

    p = with_json(sub.add_parser("enumerate", help="exhaustive search over labeled graphs"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--flag", required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Run one CLI invocation and return ``(exit_status, output_text)``."""
    try:
        args = make_parser().parse_args(list(argv))
        return args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, f"{exc}\n"
    except ParseError as exc:
        return EXIT_USAGE, f"parse error: {exc}\n"
    except NumericFailure as exc:
        return EXIT_NUMERIC, f"numeric failure: {exc}\n"
    except CapacityError as exc:
        return EXIT_USAGE, f"capacity error: {exc}\n"
    except (GraphEnergyError, OSError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status in (EXIT_OK, EXIT_FAIL) else sys.stderr
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
