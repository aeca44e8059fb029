"""Command line front end: ``toricdisk COMMAND --geometry ... [flags]``.

Exit status is 0 on success, 1 when a check fails and 2 on usage, input or
configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import amodel, bmodel, catalog, curve, gkz, mirror
from .fileio import (InputError, ResultTable, find_brane, geometry_to_dict,
                     load_geometry, rational, variable_names)
from .series import SeriesError
from .toric import (ConfigurationError, GeometryError, check_grading,
                    closed_grade, default_grading, effective_classes,
                    enumerate_extended, grading_violations, validate)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

BRANE_COMMANDS = {"superpotential", "amodel", "invariants", "curve", "abel-jacobi",
                  "gkz-check", "cross-check"}


class Context:
    """Parsed flags plus the resolved geometry, brane and grading."""

    def __init__(self, args):
        self.args = args
        self.g, self.branes = load_geometry(args.geometry)
        self.b = None
        if args.brane is not None:
            self.b = find_brane(self.branes, args.brane, args.framing)
        elif args.command in BRANE_COMMANDS:
            raise InputError(f"{args.command} needs --brane")
        self.order = args.order
        if self.order < 0:
            raise InputError("--order must be non-negative")
        self.grading = self._grading(args.grading)

    def _grading(self, text):
        if text is None:
            return default_grading(self.g, self.b)
        try:
            grading = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise InputError(f"--grading expects comma separated integers, got {text!r}")
        grading = check_grading(grading, self.g)
        bad = grading_violations(self.g, self.b, grading)
        if bad:
            raise ConfigurationError(f"grading {grading} is not positive on {bad[0]}")
        return grading

    def metadata(self, pipeline: str, **extra) -> dict:
        meta = {
            "command": self.args.command,
            "geometry": self.g.name,
            "phase": self.b.label if self.b else None,
            "f": self.args.framing if self.b else None,
            "order": self.order,
            "grading": list(self.grading),
            "pipeline": pipeline,
        }
        meta.update(extra)
        return meta


# --- commands ----------------------------------------------------------------------

def cmd_validate(ctx):
    rows = [["geometry", ctx.g.name, str(validate(ctx.g))]]
    ok = True
    for b in ctx.branes:
        rep = validate(ctx.g, b)
        ok = ok and rep.ok
        rows.append(["brane", b.label, str(rep)])
    meta = {"command": "validate", "geometry": ctx.g.name}
    return ResultTable(["item", "name", "status"], rows, meta), ok


def cmd_superpotential(ctx):
    s = bmodel.w0_series(ctx.g, ctx.b, ctx.grading, ctx.order)
    return ResultTable.from_series(s, variable_names(ctx.g.k), ctx.metadata("bmodel")), True


def cmd_amodel(ctx):
    s = amodel.f_q_series(ctx.g, ctx.b, ctx.grading, ctx.order)
    return ResultTable.from_series(s, variable_names(ctx.g.k), ctx.metadata("amodel")), True


def cmd_invariants(ctx):
    s = mirror.invariants_in_flat(ctx.g, ctx.b, ctx.grading, ctx.order)
    return ResultTable.from_series(s, variable_names(ctx.g.k), ctx.metadata("flat")), True


def _per_direction(ctx, series, pipeline):
    names = ["a"] + variable_names(ctx.g.k)
    table = ResultTable(names + ["value"], [], ctx.metadata(pipeline))
    for a, s in enumerate(series):
        table.rows += ResultTable.from_series(s, names, prefix=(a,)).rows
    return table


def cmd_mirror_map(ctx):
    S = mirror.correction_series(ctx.g, ctx.b, ctx.grading, ctx.order)
    return _per_direction(ctx, S, "mirror-map S_a(q)"), True


def cmd_invert_map(ctx):
    mm = mirror.build_mirror_map(ctx.g, ctx.b, ctx.grading, ctx.order)
    return _per_direction(ctx, mm.inverse, "inverse q_a(Q)"), True


def cmd_curve(ctx):
    M = curve.framed_curve(ctx.g, ctx.b)
    names = ["x", "y"] + [f"d{a}" for a in range(1, ctx.g.k + 1)]
    rows = [[ex, ey, *eq, rational(c)] for c, ex, ey, eq in M.sorted_terms()]
    return ResultTable(names + ["value"], rows, ctx.metadata("mirror curve")), True


def cmd_abel_jacobi(ctx):
    rep = curve.abel_jacobi_check(ctx.g, ctx.b, ctx.grading, ctx.order)
    meta = ctx.metadata("abel-jacobi", epsilon=rep.epsilon, passing=list(rep.passing))
    names = variable_names(ctx.g.k)
    if rep.ok:
        table = ResultTable.from_series(rep.residuals[rep.epsilon], names, meta)
    else:
        table = ResultTable(names + ["value"], [], meta)
    return table, rep.ok


def cmd_gkz_check(ctx):
    rep = gkz.check_annihilation(ctx.g, ctx.b, ctx.grading, ctx.order)
    rows = []
    for a, op, logkey, e, c in rep.failures:
        rows.append(["1" if a is None else f"log q{a} + S{a}", op, json.dumps(list(logkey)),
                     json.dumps(list(e)), rational(c)])
    meta = ctx.metadata("gkz", checked=rep.checked)
    return ResultTable(["input", "operator", "log", "exponent", "value"], rows, meta), rep.ok


def _parse_perturbation(text, k):
    """``phase:W,D1,..,Dk`` or ``mirror:I:D1,..,Dk`` -> (kind, key)."""
    if text is None:
        return None
    try:
        kind, _, rest = text.partition(":")
        if kind == "phase":
            key = tuple(int(x) for x in rest.split(","))
            if len(key) == k + 1 and key[0]:
                return kind, key
        elif kind == "mirror":
            ray, _, degs = rest.partition(":")
            key = (int(ray), tuple(int(x) for x in degs.split(",")))
            if len(key[1]) == k and any(key[1]):
                return kind, key
    except ValueError:
        pass
    raise InputError(f"--perturb expects phase:W,D1,..,Dk or mirror:I:D1,..,Dk, got {text!r}")


def cmd_cross_check(ctx):
    g, b, gr, N = ctx.g, ctx.b, ctx.grading, ctx.order
    perturb = _parse_perturbation(ctx.args.perturb, g.k)
    rows = []

    def report(check, first, count):
        status = "ok" if first is None else "FAIL"
        rows.append([check, status, count, "" if first is None else first])
        return first is None

    W = bmodel.w0_series(g, b, gr, N)
    F = amodel.f_q_series(g, b, gr, N)
    first = None
    for e, c in (W - F).sorted_items():
        first = f"{list(e)}: W0={rational(W.coeff(e))} F_q={rational(F.coeff(e))}"
        break
    ok = report("W0 == F_q", first, len(W))

    try:
        fx = catalog.phase_fixture(g, b.label)
    except KeyError:
        fx = None
    if fx is not None and fx.indices[:3] == (b.i1, b.i2, b.i3):
        classes = set(enumerate_extended(g, b, gr, N))
        if perturb and perturb[0] == "phase":
            classes.add(perturb[1])
        first, n = None, 0
        for bt in sorted(classes):
            expected = catalog.catalog_n(fx, b.framing, bt)
            if perturb == ("phase", bt):
                expected += 1
            n += 1
            got = bmodel.c_coeff(g, b, bt)
            if got != expected:
                first = f"{list(bt)}: C={rational(got)} catalog={rational(expected)}"
                break
        ok = report("C_coeff == catalog_n", first, n) and ok

    fixtures = {m.ray: m for m in catalog.mirror_fixtures(g)}
    if fixtures or g.name == "conifold":
        classes = [beta for beta in effective_classes(g, gr, N) if any(beta)]
        if perturb and perturb[0] == "mirror" and perturb[1][1] not in classes:
            classes.append(perturb[1][1])
        first, n = None, 0
        for i in range(1, g.r + 1):
            A = mirror.a_series(g, i, gr, max(N, *(closed_grade(gr, c) for c in classes)))
            for beta in sorted(classes):
                expected = fixtures[i].formula(beta) if i in fixtures else Fraction(0)
                if perturb == ("mirror", (i, beta)):
                    expected += 1
                n += 1
                got = A.coeff((0,) + beta)
                if got != expected:
                    first = f"A_{i} at {list(beta)}: series={rational(got)} closed form={rational(expected)}"
                    break
            if first:
                break
        ok = report("A_i == closed forms", first, n) and ok

    meta = ctx.metadata("cross-check", perturb=ctx.args.perturb)
    return ResultTable(["check", "status", "compared", "first divergence"], rows, meta), ok


def cmd_catalog(args):
    if args.geometry is not None:
        g, branes = load_geometry(args.geometry)
        return json.dumps(geometry_to_dict(g, branes), indent=1, sort_keys=True) + "\n"
    rows = []
    for name in catalog.CATALOG_NAMES:
        g = catalog.geometry(name)
        for b in catalog.branes(g):
            rows.append([g.name, b.label, b.kind, b.i1, b.i2, b.i3, b.i4 or ""])
    table = ResultTable(["geometry", "phase", "kind", "i1", "i2", "i3", "i4"], rows,
                        {"command": "catalog"})
    return table.render(args.format)


COMMANDS = {
    "validate": cmd_validate,
    "superpotential": cmd_superpotential,
    "amodel": cmd_amodel,
    "invariants": cmd_invariants,
    "mirror-map": cmd_mirror_map,
    "invert-map": cmd_invert_map,
    "curve": cmd_curve,
    "abel-jacobi": cmd_abel_jacobi,
    "gkz-check": cmd_gkz_check,
    "cross-check": cmd_cross_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricdisk",
                                description="Disk potentials of framed branes in toric Calabi-Yau threefolds.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in list(COMMANDS) + ["catalog"]:
        sp = sub.add_parser(name)
        sp.add_argument("--geometry", required=name != "catalog",
                        help="catalog:NAME, catalog:Ym?m=M, or a JSON geometry file")
        sp.add_argument("--brane", help="brane label, e.g. I")
        sp.add_argument("--framing", type=int, default=0)
        sp.add_argument("--order", type=int, default=8, help="truncation grade")
        sp.add_argument("--grading", help="weights g0,g1,..,gk (default: smallest valid)")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="write to this file instead of stdout")
        if name == "cross-check":
            sp.add_argument("--perturb", help="add 1 to one reference value: "
                                              "phase:W,D1,..,Dk or mirror:I:D1,..,Dk")
    return p


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            _emit(cmd_catalog(args), args.out)
            return EXIT_OK
        ctx = Context(args)
        table, ok = COMMANDS[args.command](ctx)
        _emit(table.render(args.format), args.out)
    except (InputError, ConfigurationError, GeometryError, SeriesError) as exc:
        print(f"toricdisk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"toricdisk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
