"""Command-line front end: catalog info, characters, relations, lifts, and
the oracle-vs-formula verification suites.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import catalog as cat
from .arcjets import component_dims_by_degree, filtration_dims
from .characters import (CharacterSeries, component_character, freeness_check,
                         principal_ideal_slice_dims, q_pochhammer)
from .cubedata import build_zeta_data, validate
from .exactpoly import Poly, apply_dk, apply_h_current, var
from .lattice import LatticePolytope, ZetaFunction, is_normal
from .relations import pushforward, verify_identically_zero
from .toricring import (ToricContext, enumerate_R, hilbert_generation_check,
                        reachable_cells, toric_ideal_generators)

MAX_L, MAX_D = 3, 8


class UsageError(Exception):
    pass


def _load_entry(args, need_data=True):
    if args.catalog:
        try:
            entry = cat.get_entry(args.catalog)
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc))
    elif args.polytope:
        try:
            with open(args.polytope) as fh:
                poly = LatticePolytope.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            raise UsageError("cannot read polytope: %s" % exc)
        if need_data:
            raise UsageError("no cube generating data for a bare polytope; "
                             "use a catalog entry")
        entry = argparse.Namespace(name=args.polytope, polytope=poly,
                                   data=None, context=ToricContext(poly))
    else:
        raise UsageError("need --catalog or --polytope")
    if need_data and getattr(args, "gamma_override", None):
        try:
            i, j, v = (int(x) for x in args.gamma_override.split(","))
            entry = entry.gamma_override(i, j, v)
        except (ValueError, KeyError) as exc:
            raise UsageError("bad --gamma-override: %s" % exc)
    return entry


def _check_caps(L, dmax):
    if L > MAX_L or dmax > MAX_D:
        raise UsageError("cap exceeded: L <= %d and dmax <= %d at desk scale"
                         % (MAX_L, MAX_D))


# ----------------------------------------------------------------------
# subcommands

def cmd_info(args):
    entry = _load_entry(args, need_data=args.catalog is not None)
    P = entry.polytope
    print("polytope %s: dim %d, %d lattice points (order: %s)"
          % (entry.name, P.dim, len(P.points), P.point_order))
    print("points:", " ".join(str(p) for p in P.points))
    print("normal:", is_normal(P))
    if entry.data is not None:
        print("gamma table (rows/cols in point order):")
        for row in entry.data.gamma_table():
            print("  " + " ".join("%2d" % x for x in row))
    return 0


def cmd_character(args):
    entry = _load_entry(args)
    _check_caps(args.L, 0)
    ch = component_character(entry.context, entry.data, args.L, args.trunc)
    rows = ch.rows()
    if args.format == "json":
        print(json.dumps({"L": args.L, "rows": [
            {"a": a, "d": d, "coeff": c} for a, d, c in rows]}))
    elif args.format == "latex":
        for abar in ch.weights():
            series = ch.q_series_at(abar)
            print("v^{%s}:\t%s" % (",".join(map(str, abar)), series))
        if args.factor:
            print("%% chi_L(q) = char * (q)_L per weight")
    else:
        print("a\td\tcoeff")
        for a, d, c in rows:
            print("%s\t%d\t%d" % (tuple(a), d, c))
    if args.factor and args.format != "json":
        poch = q_pochhammer(args.L, args.trunc)
        print("-- factored: char * (q)_%d per weight --" % args.L)
        for abar in ch.weights():
            print("%s\t%s" % (tuple(abar), ch.q_series_at(abar) * poch))
    return 0


def cmd_relations(args):
    if not (args.finite or args.arc):
        raise UsageError("relations needs --finite and/or --arc")
    entry = _load_entry(args, need_data=args.arc)
    if args.finite:
        gens = toric_ideal_generators(entry.context, degree_cap=args.degree_cap,
                                      order=getattr(entry.data, "order", None))
        bad = hilbert_generation_check(entry.context, gens, args.degree_cap)
        if args.format == "json":
            print(json.dumps({"binomials": [
                {"lead": list(u), "trail": list(v), "text": str(p)}
                for u, v, p in gens]}))
        else:
            for _, _, p in gens:
                print(p)
        if bad:
            print("warning: generation incomplete at degree cap %d: %s"
                  % (args.degree_cap, "; ".join(bad)), file=sys.stderr)
    if args.arc:
        data = entry.data
        out = []
        for i in range(data.m):
            for j in range(i + 1, data.m):
                g = data.gamma[(i, j)]
                for k in range(g):
                    rs = pushforward(data, data.points[i], data.points[j], k)
                    out.append(rs)
        if args.format == "json":
            print(json.dumps([{"pair": [list(rs.pair[0]), list(rs.pair[1])],
                               "kprime": rs.kprime,
                               "terms": [[c, list(p), list(q)]
                                         for c, p, q in rs.terms]}
                              for rs in out]))
        else:
            for rs in out:
                print("pair %s %s, k'=%d:  %s"
                      % (rs.pair[0], rs.pair[1], rs.kprime, rs))
    return 0


def cmd_construct(args):
    entry = _load_entry(args)
    if not args.zeta:
        raise UsageError("construct needs --zeta v0,v1,... (one value per point)")
    try:
        vals = [int(x) for x in args.zeta.split(",")]
    except ValueError:
        raise UsageError("bad --zeta list")
    P = entry.polytope
    if len(vals) != len(P.points):
        raise UsageError("--zeta needs %d values (one per lattice point, in "
                         "point order)" % len(P.points))
    zeta = ZetaFunction({p: v for p, v in zip(P.points, vals)})
    PL, DL = build_zeta_data(entry.data, P, zeta)
    doc = DL.to_json()
    doc["polytope"] = PL.to_json()
    print(json.dumps(doc))
    return 0


def cmd_verify(args):
    entry = _load_entry(args)
    _check_caps(args.L, args.dmax)
    ctx, data = entry.context, entry.data
    failures = []
    rows = []

    # oracle vs closed-form character
    for L in range(1, args.L + 1):
        chars = component_character(ctx, data, L, args.dmax)
        for abar in sorted(reachable_cells(ctx, L)):
            oracle = component_dims_by_degree(ctx, abar, L, args.dmax)
            for d in range(args.dmax + 1):
                formula = chars.coefficient(abar, d)
                match = oracle[d] == formula
                rows.append({"key": {"a": list(abar), "L": L, "d": d},
                             "oracle": oracle[d], "formula": formula,
                             "match": match})
                if not match:
                    failures.append("character (%s, L=%d, d=%d): oracle %d != "
                                    "formula %d" % (abar, L, d, oracle[d], formula))

    # filtration subquotients vs principal-ideal slices
    for L in range(1, args.L + 1):
        for abar, cell in sorted(reachable_cells(ctx, L).items()):
            if len(cell) < 2:
                continue
            for d in range(args.dmax + 1):
                for r, _, subq in filtration_dims(ctx, abar, L, d, data.order):
                    pid = principal_ideal_slice_dims(r, data.gamma, d)
                    if pid != subq:
                        failures.append("filtration (%s, L=%d, d=%d, r=%s): "
                                        "oracle %d != principal %d"
                                        % (abar, L, d, r, subq, pid))

    # nilpotency of the relation series
    N = max(args.dmax, 4)
    for i in range(data.m):
        for j in range(i + 1, data.m):
            for k in range(data.gamma[(i, j)]):
                try:
                    rs = pushforward(data, data.points[i], data.points[j], k)
                except ValueError as exc:
                    failures.append("relation series: %s" % exc)
                    break
                if not verify_identically_zero(ctx, rs, N):
                    failures.append("nilpotency fails for pair %s %s k'=%d"
                                    % (data.points[i], data.points[j], k))

    # freeness divisibility
    for L in range(1, args.L + 1):
        chars = component_character(ctx, data, L, args.trunc)
        for abar in chars.weights():
            if not freeness_check(chars, abar):
                failures.append("freeness fails at (%s, L=%d)" % (abar, L))

    # cube-generating-data conditions
    for v in validate(data, entry.polytope):
        failures.append("data: " + v)

    # seeded algebraic spot checks
    failures.extend(_spot_checks(args.seed))

    if args.format == "json":
        print(json.dumps({"entry": entry.name, "rows": rows,
                          "failures": failures}))
    else:
        for row in rows:
            k = row["key"]
            print("a=%s L=%d d=%d  oracle=%d formula=%d  %s"
                  % (tuple(k["a"]), k["L"], k["d"], row["oracle"],
                     row["formula"], "ok" if row["match"] else "MISMATCH"))
        if failures:
            print("FAIL (%d failures); first: %s" % (len(failures), failures[0]))
        else:
            print("PASS: all suites green for %s" % entry.name)
    return 1 if failures else 0


def _spot_checks(seed):
    """Seeded ring-axiom and derivation checks on random small jet polys."""
    rng = random.Random(seed)
    fails = []

    def rand_poly():
        out = Poly.zero()
        for _ in range(rng.randint(1, 3)):
            mono = []
            for _ in range(rng.randint(0, 2)):
                mono.append((var("X", rng.randint(0, 1), rng.randint(0, 3)),
                             rng.randint(1, 2)))
            out = out + Poly({tuple(sorted(dict(mono).items())):
                              Fraction(rng.randint(-3, 3))})
        return out

    for _ in range(10):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            fails.append("ring axiom failure (seed issue)")
        k = rng.randint(-1, 2)
        if apply_dk(a * b, k) != apply_dk(a, k) * b + a * apply_dk(b, k):
            fails.append("d_k is not a derivation")
        kk = rng.randint(0, 2)
        w = {"X": 1}
        if apply_h_current(a * b, kk, w) != \
                apply_h_current(a, kk, w) * b + a * apply_h_current(b, kk, w):
            fails.append("h s^k is not a derivation")
    return fails


# ----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="arcspace",
        description="Exact computations with reduced arc rings of toric varieties")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, data_flags=True):
        sp.add_argument("--catalog", help="catalog entry, e.g. segment:3, "
                        "square, cube, box:2,1,1, simplex:2,2, triangle:2, "
                        "hirzebruch:1,2, polygon:0,1,1")
        sp.add_argument("--polytope", help="path to a polytope JSON file")
        sp.add_argument("--format", choices=["table", "json", "latex"],
                        default="table")
        sp.add_argument("--seed", type=int, default=0)
        if data_flags:
            sp.add_argument("--gamma-override", dest="gamma_override",
                            help="i,j,value: corrupt one gamma entry")

    sp = sub.add_parser("info", help="polytope summary and gamma table")
    common(sp, data_flags=False)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("character", help="graded character table")
    common(sp)
    sp.add_argument("--L", type=int, default=1)
    sp.add_argument("--trunc", type=int, default=8)
    sp.add_argument("--factor", action="store_true",
                    help="also print char * (q)_L per weight")
    sp.set_defaults(func=cmd_character)

    sp = sub.add_parser("relations", help="finite binomials / arc series")
    common(sp)
    sp.add_argument("--finite", action="store_true",
                    help="print toric ideal binomials")
    sp.add_argument("--arc", action="store_true",
                    help="print the nilpotent relation series")
    sp.add_argument("--degree-cap", type=int, default=4)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("construct", help="lift a catalog entry by zeta")
    common(sp)
    sp.add_argument("--zeta", help="comma list of zeta values, one per point")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="oracle-vs-formula suites")
    common(sp)
    sp.add_argument("--L", type=int, default=2)
    sp.add_argument("--dmax", type=int, default=4)
    sp.add_argument("--trunc", type=int, default=8)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
