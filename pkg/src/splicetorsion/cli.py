"""Command-line interface to the full pipeline.

Every subcommand emits deterministic machine-readable output for a fixed
configuration and seed.  Exit codes: 0 success, 1 certification failure,
2 usage error.
"""

import argparse
import csv
import json
import os
import sys

from .apoly import (
    NewtonPolygon, a_polynomial, criterion_report, slope_set, slope_to_json,
)
from .polyring import MultiPoly, PolyError
from .splice import Tolerances, bending_family, rt_set, splice_equation
from .twistknot import build_model, character_data, riley_polynomial
from .verify import format_results, run_all

#: normalization tag embedded in every torsion-bearing report
TORSION_CONVENTION = ("fox-quotient det(rho(dr/dy))/det(rho(x)-I2); "
                      "0 encodes a non-acyclic chain complex")


class CertificationFailure(Exception):
    pass


def _c(z):
    """Complex number as a [re, im] pair of doubles."""
    z = complex(z)
    return [z.real, z.imag]


def _dump(obj, stream):
    json.dump(obj, stream, sort_keys=True, separators=(", ", ": "), indent=2)
    stream.write("\n")


def pretty_poly(p, main=None):
    """Render grouping by descending powers of `main` (e.g. t for Riley)."""
    if main is None or main not in p.vars or p.degree(main) <= 0:
        return str(p)
    pieces = []
    coeffs = p.coeffs_in(main)
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        if c.is_zero():
            continue
        if k == 0:
            # the tail keeps its own internal signs; only fold the first
            s = str(c)
            if s.startswith("-"):
                pieces.append(("-", s[1:]))
            else:
                pieces.append(("+", s))
            continue
        mono = main if k == 1 else "%s^%d" % (main, k)
        if c.is_constant():
            val = c.constant_value()
            sign = "-" if val < 0 else "+"
            val = abs(val)
            body = mono if val == 1 else "%s*%s" % (val, mono)
        else:
            body, sign = _signed(c)
            body = "(%s)*%s" % (body, mono)
        pieces.append((sign, body))
    if not pieces:
        return "0"
    out = pieces[0][1] if pieces[0][0] == "+" else "-" + pieces[0][1]
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


def _signed(c):
    """(rendered |c|, sign) pulling a global minus off the leading term."""
    if c.lex_leading()[1] < 0:
        return str(-c), "-"
    return str(c), "+"


def _tolerances(args):
    tol = Tolerances(root_cert=args.root_cert, dedup=args.dedup, rank=args.rank)
    for v in (tol.root_cert, tol.dedup, tol.rank):
        if v <= 0:
            raise UsageError("tolerances must be strictly positive")
    return tol


class UsageError(Exception):
    pass


def _tol_block(tol):
    return {"root_cert": tol.root_cert, "dedup": tol.dedup, "rank": tol.rank}


def _read_csv_polys(path):
    """External polynomial table: columns name, vars, terms (JSON inline)."""
    table = {}
    try:
        with open(path, newline="") as fh:
            for row in csv.DictReader(fh):
                if not row.get("name") or not row.get("terms"):
                    raise UsageError("malformed CSV row: %r" % (row,))
                blob = {"vars": json.loads(row["vars"]),
                        "terms": json.loads(row["terms"])}
                table[row["name"]] = MultiPoly.from_json(blob)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError("cannot read polynomial CSV %s: %s" % (path, exc))
    return table


def _polygon_report(name, f):
    poly = NewtonPolygon.of(f)
    return {
        "name": name,
        "vertices": [list(v) for v in poly.vertices],
        "slopes": sorted(slope_to_json(s) for s in slope_set(poly)),
    }


# -- subcommand bodies -----------------------------------------------------

def cmd_riley(args, out):
    model = build_model(args.q)
    phi, phi_xi = riley_polynomial(model)
    if args.output == "pretty":
        out.write(pretty_poly(phi_xi, "t") + "\n")
    else:
        _dump(character_data(model), out)


def cmd_apoly(args, out):
    a = a_polynomial(build_model(args.q))
    if args.output == "pretty":
        out.write(str(a) + "\n")
    else:
        _dump({"q": args.q, "a_polynomial": a.to_json()}, out)


def cmd_newton(args, out):
    if args.input:
        table = _read_csv_polys(args.input)
        if args.name not in table:
            raise UsageError("no polynomial named %r in %s" % (args.name, args.input))
        report = _polygon_report(args.name, table[args.name])
    elif args.q is not None:
        report = _polygon_report("A_J(2,%d)" % (2 * args.q),
                                 a_polynomial(build_model(args.q)))
    else:
        raise UsageError("newton needs --q or --input/--name")
    if args.output == "pretty":
        out.write("vertices: %s\nslopes: %s\n" % (report["vertices"], report["slopes"]))
    else:
        _dump(report, out)


def cmd_criterion(args, out):
    if args.input:
        table = _read_csv_polys(args.input)
        for name in (args.first, args.second):
            if name not in table:
                raise UsageError("no polynomial named %r in %s" % (name, args.input))
        report = criterion_report(args.first, args.second,
                                  table[args.first], table[args.second])
    elif args.q1 is not None and args.q2 is not None:
        report = criterion_report(
            "A_J(2,%d)" % (2 * args.q1), "A_J(2,%d)" % (2 * args.q2),
            a_polynomial(build_model(args.q1)), a_polynomial(build_model(args.q2)))
    else:
        raise UsageError("criterion needs --q1/--q2 or --input with --first/--second")
    if args.output == "pretty":
        out.write("%s vs %s: %s (route: %s)\n" % (
            report["pair"][0], report["pair"][1], report["status"], report["route"]))
    else:
        _dump(report, out)


def cmd_splice_eq(args, out):
    system = splice_equation(args.q1, args.q2)
    eq = system.xi_equation
    deg = eq.degree("xi")
    coeff_map = {e[0]: c for e, c in eq.terms.items()}
    vector = [str(coeff_map.get(k, 0)) for k in range(deg + 1)]
    if args.output == "pretty":
        out.write(str(eq) + "\n")
    else:
        _dump({"q1": args.q1, "q2": args.q2, "degree": deg,
               "coefficients_ascending": vector, "equation": eq.to_json()}, out)


def _character_rows(report):
    rows = []
    for ch in report.characters:
        rows.append({
            "xi1": _c(ch.xi1), "xi2": _c(ch.xi2),
            "s1": _c(ch.s1), "t1": _c(ch.t1),
            "s2": _c(ch.s2), "t2": _c(ch.t2),
            "c2": _c(ch.c_squared),
            "mirror": ch.mirror,
            "acyclic": bool(ch.acyclic_on_torus),
            "residual": ch.residual,
            "torsion": _c(ch.torsion_product),
        })
    return rows


def cmd_rt(args, out):
    tol = _tolerances(args)
    report = rt_set(args.q1, args.q2, tol=tol, seed=args.seed)
    if report.excluded:
        raise CertificationFailure(
            "%d characters failed residual certification" % len(report.excluded))
    payload = {
        "q1": args.q1, "q2": args.q2,
        "equation": report.system.xi_equation.to_json(),
        "characters": _character_rows(report),
        "rt_set": [_c(v) for v in report.rt_values],
        "criterion": {"coprime": report.criterion.coprime,
                      "route": report.criterion.route,
                      "status": report.criterion.status},
        "tolerances": _tol_block(tol),
        "torsion_convention": TORSION_CONVENTION,
        "seed": args.seed,
    }
    if args.output == "csv":
        fields = ["xi1", "xi2", "s1", "t1", "s2", "t2", "c2",
                  "mirror", "acyclic", "residual", "torsion"]
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in _character_rows(report):
            writer.writerow({k: json.dumps(row[k]) for k in fields})
    elif args.output == "pretty":
        out.write("RT(Sigma(J(2,%d), J(2,%d))) under %s\n"
                  % (2 * args.q1, 2 * args.q2, TORSION_CONVENTION))
        out.write("criterion: %s\n" % payload["criterion"]["status"])
        for v in report.rt_values:
            out.write("  %.12g %+.12gi\n" % (v.real, v.imag))
    else:
        _dump(payload, out)


def cmd_bend(args, out):
    from .splice import solve_characters
    import numpy as np
    import cmath
    tol = _tolerances(args)
    system = splice_equation(args.q1, args.q2)
    chars = [c for c in solve_characters(system, tol=tol, seed=args.seed)
             if not c.mirror]
    if not chars:
        raise CertificationFailure("no genuine characters to bend")
    if not 0 <= args.index < len(chars):
        raise UsageError("character index out of range (0..%d)" % (len(chars) - 1))
    ch = chars[args.index]
    model1 = build_model(args.q1)
    rng = np.random.default_rng(args.seed)
    samples = []
    for _ in range(args.samples):
        a = cmath.exp(complex(rng.normal(), rng.normal()))
        res = bending_family(ch.s1, ch.s2, ch.t1, ch.c_squared, a,
                             model1=model1, t2=ch.t2)
        samples.append({"a": _c(a), "trace_y1x2": _c(res.trace),
                        "closed_form": _c(res.closed_form),
                        "witness_trace_y1y2": _c(res.witness_trace)})
    payload = {"q1": args.q1, "q2": args.q2, "character_index": args.index,
               "xi1": _c(ch.xi1), "samples": samples, "seed": args.seed,
               "tolerances": _tol_block(tol)}
    if args.output == "pretty":
        for s in samples:
            out.write("a=%s  tr(y1 x2)=%s  tr(y1 y2)=%s\n" % (
                s["a"], s["trace_y1x2"], s["witness_trace_y1y2"]))
    else:
        _dump(payload, out)


def cmd_verify(args, out):
    results = run_all()
    out.write(format_results(results) + "\n")
    if not all(r.passed for r in results):
        raise CertificationFailure("acceptance criteria failed")


# -- parser ----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="splicetorsion",
        description="Character varieties, A-polynomials and Reidemeister "
                    "torsion of spliced twist-knot exteriors J(2,2q).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output_default="json"):
        p.add_argument("--output", choices=("json", "csv", "pretty"),
                       default=output_default)
        p.add_argument("--root-cert", type=float, default=1e-9)
        p.add_argument("--dedup", type=float, default=1e-7)
        p.add_argument("--rank", type=float, default=1e-8)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("riley", help="Riley polynomial of J(2,2q)")
    p.add_argument("--q", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_riley)

    p = sub.add_parser("apoly", help="A-polynomial of J(2,2q)")
    p.add_argument("--q", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_apoly)

    p = sub.add_parser("newton", help="Newton polygon and slope set")
    p.add_argument("--q", type=int)
    p.add_argument("--input", help="CSV of named polynomials")
    p.add_argument("--name", help="row to select from --input")
    common(p)
    p.set_defaults(fn=cmd_newton)

    p = sub.add_parser("criterion", help="coprimality/finiteness criterion")
    p.add_argument("--q1", type=int)
    p.add_argument("--q2", type=int)
    p.add_argument("--input", help="CSV of named polynomials")
    p.add_argument("--first")
    p.add_argument("--second")
    common(p)
    p.set_defaults(fn=cmd_criterion)

    p = sub.add_parser("splice-eq", help="gluing equation for xi = tr X1")
    p.add_argument("--q1", type=int, required=True)
    p.add_argument("--q2", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_splice_eq)

    p = sub.add_parser("rt", help="torsion value set of the splice")
    p.add_argument("--q1", type=int, required=True)
    p.add_argument("--q2", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_rt)

    p = sub.add_parser("bend", help="bending family at a genuine character")
    p.add_argument("--q1", type=int, required=True)
    p.add_argument("--q2", type=int, required=True)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--samples", type=int, default=10)
    common(p)
    p.set_defaults(fn=cmd_bend)

    p = sub.add_parser("verify", help="run the reproduction suite")
    common(p, output_default="pretty")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None, stdout=None):
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    env_seed = os.environ.get("SPLICE_TORSION_SEED")
    if env_seed is not None:
        try:
            args.seed = int(env_seed)
        except ValueError:
            print("bad SPLICE_TORSION_SEED: %r" % env_seed, file=sys.stderr)
            return 2
    from .twistknot import UnknotError
    try:
        args.fn(args, out)
    except UnknotError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except CertificationFailure as exc:
        print("certification failure: %s" % exc, file=sys.stderr)
        return 1
    except (PolyError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
