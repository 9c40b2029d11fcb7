"""Command-line front end.

Exit codes: 0 success, 1 computational failure (factoring bound, bad
reduction), 2 reproduction FAIL, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .classification import GroupLabel, Rationale, admissible_groups, is_admissible
from .curves import BadReductionError, Curve, SingularCurveError, reduce_and_count, to_short, torsion_subgroup
from .parsing import ParseError, parse_qint
from .rings import FactorBoundError, RingTag, as_prime, factor
from .verification import (
    ReproReport,
    bounded_search,
    catalog_by_id,
    reproduce_all,
    verify_lemma,
)

EXIT_OK, EXIT_COMPUTE, EXIT_FAIL, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _field(name: str | None) -> RingTag | None:
    if name is None:
        return None
    try:
        return RingTag.from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _rationale_text(r: Rationale) -> str:
    if r is Rationale.MAZUR:
        return "Mazur"
    if r is Rationale.UNRESOLVED:
        return "unresolved"
    if r is Rationale.KKM:
        return "KKM"
    return "Lemma " + r.value.removeprefix("LEMMA")


# single-curve workers (module level so batch mode can ship them to processes)


def torsion_record(text: str, field: RingTag | None) -> dict:
    E = Curve.parse(text, field)
    T = torsion_subgroup(E)
    return {
        "curve": str(E),
        "field": E.tag.value,
        "group": T.label,
        "invariants": [T.n1, T.n2],
        "points": [str(P) for P in T.points],
        "generators": [str(P) for P in T.generators],
    }


def classify_record(text: str, field: RingTag | None, rational: bool) -> dict:
    E = Curve.parse(text, field)
    if rational and not all(a.num.b == 0 for a in E.ainvs):
        raise UsageError(f"--rational given but {E} has non-rational coefficients")
    T = torsion_subgroup(E)
    verdict = is_admissible(GroupLabel(T.n1, T.n2), E.tag, rational)
    return {
        "curve": str(E),
        "field": E.tag.value,
        "rational": rational,
        "group": T.label,
        "admissible": verdict.admissible,
        "rationale": verdict.rationale.value,
        "theorem_list": admissible_groups(E.tag, rational).name.value,
    }


def _torsion_text(rec: dict) -> str:
    return f"{rec['group']}; points: {','.join(rec['points'])}"


def _classify_text(rec: dict) -> str:
    word = "admissible" if rec["admissible"] else "inadmissible"
    return f"{rec['group']}: {word} ({_rationale_text(Rationale(rec['rationale']))})"


def _run_curves(args, worker, extra) -> list[dict]:
    if args.batch:
        with open(args.batch, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    elif args.curve:
        lines = [args.curve]
    else:
        raise UsageError("give a curve or --batch FILE")
    field = _field(args.field)
    if args.workers > 1 and len(lines) > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            futures = [pool.submit(worker, ln, field, *extra) for ln in lines]
            return [f.result() for f in futures]
    return [worker(ln, field, *extra) for ln in lines]


def _emit(out, args, records, fmt):
    if args.json:
        payload = records if args.batch else records[0]
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for rec in records:
            out.write(fmt(rec) + "\n")


def cmd_torsion(args, out) -> int:
    _emit(out, args, _run_curves(args, torsion_record, ()), _torsion_text)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    _emit(out, args, _run_curves(args, classify_record, (args.rational,)), _classify_text)
    return EXIT_OK


def cmd_factor(args, out) -> int:
    z = parse_qint(args.element, _field(args.field))
    if z.is_zero():
        raise UsageError("cannot factor 0")
    f = factor(z)
    if args.json:
        rec = {
            "element": str(z),
            "field": z.tag.value,
            "unit": str(f.unit),
            "factors": [{"prime": str(pi.value), "exponent": e, "norm": pi.norm()} for pi, e in f.factors],
        }
        out.write(json.dumps(rec, indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"{z} = {f}\n")
    return EXIT_OK


def cmd_reproduce(args, out) -> int:
    if args.all:
        report = reproduce_all()
    elif args.lemmas:
        known = catalog_by_id()
        records = []
        for lid in args.lemmas:
            if lid not in known:
                raise UsageError(f"unknown lemma id {lid!r}; known: {', '.join(known)}")
            if known[lid].search_only:
                raise UsageError(f"{lid} is search-only; use the search subcommand")
            records.append(verify_lemma(lid))
        report = ReproReport(records)
    else:
        raise UsageError("give lemma ids or --all")
    if args.json:
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_text(timestamp=not args.no_timestamp) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_search(args, out) -> int:
    known = set(catalog_by_id()) | {"HILBERT"}
    if args.model not in known:
        raise UsageError(f"unknown model {args.model!r}; known: {', '.join(sorted(known))}")
    res = bounded_search(args.model, args.bound, _field(args.field))
    if args.json:
        out.write(json.dumps(res.to_dict(), indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"{res.model_id} over {res.field.value}, height <= {res.height_bound}: "
                  f"{res.scanned} parameters, {len(res.hits)} points, "
                  f"{len(res.nondegenerate())} nondegenerate\n")
        for h in res.hits:
            coords = ", ".join(str(v) for v in h.t)
            out.write(f"  ({coords}; {h.s}){'' if h.degenerate else '  NONDEGENERATE'}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    E = Curve.parse(args.curve, _field(args.field))
    pi = as_prime(parse_qint(args.prime, E.tag))
    S, _ = to_short(E)
    n = reduce_and_count(S, pi)
    rec = {"curve": str(E), "short_model": str(S), "prime": str(pi.value),
           "residue_size": pi.residue_size, "count": n}
    if args.json:
        out.write(json.dumps(rec, indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"#E(F_{pi.residue_size}) = {n} at {pi.value}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclotors", description="Torsion of elliptic curves over Q(i) and Q(sqrt(-3)).")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, curve=True):
        sp.add_argument("--field", help="Qi or Qw3 (inferred from i/w when omitted)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if curve:
            sp.add_argument("curve", nargs="?", help="'y^2 = x^3 - x' or '[a1,a2,a3,a4,a6]'")
            sp.add_argument("--batch", metavar="FILE", help="one curve per line")
            sp.add_argument("--workers", type=int, default=1, help="processes for --batch")

    sp = sub.add_parser("torsion", help="torsion subgroup of a curve")
    common(sp)
    sp.set_defaults(func=cmd_torsion)

    sp = sub.add_parser("classify", help="torsion group and its admissibility")
    common(sp)
    sp.add_argument("--rational", action="store_true", help="coefficients lie in Q")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("factor", help="factor a ring element")
    common(sp, curve=False)
    sp.add_argument("element")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("reproduce", help="re-run the lemma torsion checks")
    sp.add_argument("lemmas", nargs="*", help="model ids such as L8 L13")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-timestamp", action="store_true")
    sp.set_defaults(func=cmd_reproduce)

    sp = sub.add_parser("search", help="bounded point search on a model")
    common(sp, curve=False)
    sp.add_argument("model", help="catalog id (he1, he2, L6, ...) or HILBERT")
    sp.add_argument("--bound", type=int, default=20, help="height bound")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("count", help="count points modulo a prime")
    common(sp, curve=False)
    sp.add_argument("curve")
    sp.add_argument("--prime", required=True, help="a prime of the ring, e.g. 2+i")
    sp.set_defaults(func=cmd_count)
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: torsion, factor, classify, reproduce, search, count")
        return args.func(args, out)
    except (UsageError, ParseError, SingularCurveError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (FactorBoundError, BadReductionError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_COMPUTE
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
